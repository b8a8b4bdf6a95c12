from django.urls import path, include
from rest_framework.routers import DefaultRouter
from . import views

router = DefaultRouter()
router.register(r'types', views.TripleTypeViewSet, basename='triple-type')

urlpatterns = [
    path('', include(router.urls)),
]
