from drf_yasg.utils import swagger_auto_schema
from rest_framework import viewsets
from rest_framework.decorators import action

from reports.serializers import ReportSerializer
from reports.views import ReportActionMixin

from .serializers import ClassifyQuerySerializer


class VerdictViewSet(ReportActionMixin, viewsets.ViewSet):

    @swagger_auto_schema(method='get', query_serializer=ClassifyQuerySerializer, responses={200: ReportSerializer})
    @swagger_auto_schema(method='post', request_body=ClassifyQuerySerializer, responses={200: ReportSerializer})
    @action(detail=False, methods=['get', 'post'])
    def classify(self, request):
        """Verdicts for M(a,b), R_Gamma(a,b) and R[a,b]"""
        return self.report_response('classify', request)
