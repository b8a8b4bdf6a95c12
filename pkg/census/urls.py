from django.urls import path, include
from rest_framework.routers import DefaultRouter
from . import views

router = DefaultRouter()
router.register(r'regions', views.CensusRegionViewSet, basename='census-region')

urlpatterns = [
    path('', include(router.urls)),
]
