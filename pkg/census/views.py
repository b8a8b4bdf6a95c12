from drf_yasg.utils import swagger_auto_schema
from rest_framework import viewsets
from rest_framework.decorators import action

from reports.serializers import ReportSerializer
from reports.views import ReportActionMixin

from .serializers import CensusQuerySerializer


class CensusRegionViewSet(ReportActionMixin, viewsets.ViewSet):

    @swagger_auto_schema(method='get', query_serializer=CensusQuerySerializer, responses={200: ReportSerializer})
    @swagger_auto_schema(method='post', request_body=CensusQuerySerializer, responses={200: ReportSerializer})
    @action(detail=False, methods=['get', 'post'])
    def summary(self, request):
        """Canonical classes [a, b] with |tau| <= tau_M, the tau quotient and the coprimality split"""
        return self.report_response('census', request)
