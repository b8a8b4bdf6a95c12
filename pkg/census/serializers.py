from rest_framework import serializers

from triples.fields import RationalField


class CensusQuerySerializer(serializers.Serializer):
    p = serializers.IntegerField(min_value=1)
    q = serializers.IntegerField(min_value=1)
    g = serializers.IntegerField(min_value=2, required=False)
    a = serializers.IntegerField(required=False)
    b = serializers.IntegerField(required=False)

    def validate(self, attrs):
        if ('a' in attrs) != ('b' in attrs):
            missing = 'b' if 'a' in attrs else 'a'
            raise serializers.ValidationError({missing: 'Give both a and b to canonicalize a class.'})
        return attrs


class ClassPairSerializer(serializers.Serializer):
    a = serializers.IntegerField()
    b = serializers.IntegerField()
    canonical = serializers.BooleanField()


class CensusLineSerializer(serializers.Serializer):
    t = serializers.IntegerField()
    tau = RationalField()
    points = ClassPairSerializer(many=True)


class CensusReportSerializer(serializers.Serializer):
    p = serializers.IntegerField()
    q = serializers.IntegerField()
    g = serializers.IntegerField()
    k = serializers.IntegerField()
    count = serializers.IntegerField()
    expected_count = serializers.IntegerField()
    points = ClassPairSerializer(many=True)
    coprime_points = ClassPairSerializer(many=True)
    lines = CensusLineSerializer(many=True)


class QuotientFactsSerializer(serializers.Serializer):
    k = serializers.IntegerField()
    image_step = RationalField()
    kernel_size = serializers.IntegerField()
    kernel_generator = serializers.ListField(child=serializers.IntegerField())


class CoprimePartitionSerializer(serializers.Serializer):
    coprime = ClassPairSerializer(many=True)
    non_coprime = ClassPairSerializer(many=True)
    both_nonempty = serializers.BooleanField()


class CensusSummarySerializer(serializers.Serializer):
    census = CensusReportSerializer()
    quotient = QuotientFactsSerializer()
    partition = CoprimePartitionSerializer()
    canonical = ClassPairSerializer(allow_null=True)
    input_in_region = serializers.BooleanField(allow_null=True)
