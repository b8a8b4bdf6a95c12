from drf_yasg.utils import swagger_auto_schema
from rest_framework import viewsets
from rest_framework.decorators import action

from reports.serializers import ReportSerializer
from reports.views import ReportActionMixin

from .serializers import HiggsQuerySerializer, MorseQuerySerializer


class HiggsBundleViewSet(ReportActionMixin, viewsets.ViewSet):
    """Invariants of U(p,q)-Higgs bundles of type (p, q, a, b) over a curve of genus g."""

    @swagger_auto_schema(method='get', query_serializer=HiggsQuerySerializer, responses={200: ReportSerializer})
    @swagger_auto_schema(method='post', request_body=HiggsQuerySerializer, responses={200: ReportSerializer})
    @action(detail=False, methods=['get', 'post'])
    def summary(self, request):
        """Toledo invariant, minima triple, Milnor-Wood relations and dimensions"""
        return self.report_response('higgs', request)

    @swagger_auto_schema(method='get', query_serializer=HiggsQuerySerializer, responses={200: ReportSerializer})
    @swagger_auto_schema(method='post', request_body=HiggsQuerySerializer, responses={200: ReportSerializer})
    @action(detail=False, methods=['get', 'post'])
    def rigidity(self, request):
        """Decomposition at maximal Toledo invariant"""
        return self.report_response('rigidity', request)


class HodgeChainViewSet(ReportActionMixin, viewsets.ViewSet):

    @swagger_auto_schema(method='get', query_serializer=MorseQuerySerializer, responses={200: ReportSerializer})
    @swagger_auto_schema(method='post', request_body=MorseQuerySerializer, responses={200: ReportSerializer})
    @action(detail=False, methods=['get', 'post'])
    def morse(self, request):
        """Weight-space profile, H^1 dimensions and Morse index of a Hodge chain"""
        return self.report_response('morse', request)
