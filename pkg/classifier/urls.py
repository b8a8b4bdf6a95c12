from django.urls import path, include
from rest_framework.routers import DefaultRouter
from . import views

router = DefaultRouter()
router.register(r'verdicts', views.VerdictViewSet, basename='verdict')

urlpatterns = [
    path('', include(router.urls)),
]
