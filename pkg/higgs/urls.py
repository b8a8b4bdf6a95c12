from django.urls import path, include
from rest_framework.routers import DefaultRouter
from . import views

router = DefaultRouter()
router.register(r'bundles', views.HiggsBundleViewSet, basename='higgs-bundle')
router.register(r'chains', views.HodgeChainViewSet, basename='hodge-chain')

urlpatterns = [
    path('', include(router.urls)),
]
