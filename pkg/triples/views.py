from drf_yasg.utils import swagger_auto_schema
from rest_framework import viewsets
from rest_framework.decorators import action

from reports.serializers import ReportSerializer
from reports.views import ReportActionMixin

from .serializers import ChamberQuerySerializer, TripleReportQuerySerializer, WallQuerySerializer


class TripleTypeViewSet(ReportActionMixin, viewsets.ViewSet):
    """Invariants of a triple type (n1, n2, d1, d2)."""

    @swagger_auto_schema(method='get', query_serializer=TripleReportQuerySerializer, responses={200: ReportSerializer})
    @swagger_auto_schema(method='post', request_body=TripleReportQuerySerializer, responses={200: ReportSerializer})
    @action(detail=False, methods=['get', 'post'])
    def summary(self, request):
        """
        Slopes, alpha-range, thresholds, dimension, large-alpha fibration and,
        on request, witness checks, genericity and flip-locus dimensions
        """
        return self.report_response('triple', request)

    @swagger_auto_schema(method='get', query_serializer=WallQuerySerializer, responses={200: ReportSerializer})
    @swagger_auto_schema(method='post', request_body=WallQuerySerializer, responses={200: ReportSerializer})
    @action(detail=False, methods=['get', 'post'])
    def walls(self, request):
        """Critical values of alpha with their witnesses"""
        return self.report_response('walls', request)

    @swagger_auto_schema(method='get', query_serializer=ChamberQuerySerializer, responses={200: ReportSerializer})
    @swagger_auto_schema(method='post', request_body=ChamberQuerySerializer, responses={200: ReportSerializer})
    @action(detail=False, methods=['get', 'post'])
    def chambers(self, request):
        """Chamber decomposition of the alpha-range"""
        return self.report_response('chambers', request)
