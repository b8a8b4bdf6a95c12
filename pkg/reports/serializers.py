from rest_framework import serializers


class ReportSerializer(serializers.Serializer):
    command = serializers.CharField()
    inputs = serializers.DictField()
    outputs = serializers.DictField()
    citations = serializers.DictField(child=serializers.ListField(child=serializers.CharField()))
    warnings = serializers.ListField(child=serializers.CharField())
