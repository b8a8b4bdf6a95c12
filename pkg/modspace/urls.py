"""
URL configuration for the modspace project.

Each app mounts its router under ``api/<app>/``; the OpenAPI schema is served
by drf-yasg.
"""
from django.urls import path, include
from drf_yasg import openapi
from drf_yasg.views import get_schema_view
from rest_framework import permissions

schema_view = get_schema_view(
    openapi.Info(
        title='Modspace API',
        default_version='v1',
        description='Exact invariants of moduli of holomorphic triples and U(p,q)-Higgs bundles.',
    ),
    public=True,
    permission_classes=[permissions.AllowAny],
)

urlpatterns = [
    path('api/triples/', include('triples.urls')),
    path('api/higgs/', include('higgs.urls')),
    path('api/census/', include('census.urls')),
    path('api/classifier/', include('classifier.urls')),
    path('swagger/', schema_view.with_ui('swagger', cache_timeout=0), name='schema-swagger-ui'),
    path('redoc/', schema_view.with_ui('redoc', cache_timeout=0), name='schema-redoc'),
]
