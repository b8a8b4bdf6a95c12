from rest_framework.response import Response

from .registry import build_report
from .serializers import ReportSerializer


class ReportActionMixin:
    """ViewSet helper: GET reads query parameters, POST reads the JSON body."""

    def report_response(self, command, request):
        data = request.query_params if request.method == 'GET' else request.data
        report = build_report(command, data)
        return Response(ReportSerializer(report).data)
