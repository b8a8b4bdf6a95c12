from rest_framework import serializers

from triples.fields import RationalField
from triples.serializers import ModuliFactorSerializer, TripleDataSerializer

from .domain import HiggsType, HodgeChain


class HiggsQuerySerializer(serializers.Serializer):
    p = serializers.IntegerField(min_value=1)
    q = serializers.IntegerField(min_value=1)
    a = serializers.IntegerField()
    b = serializers.IntegerField()
    g = serializers.IntegerField(min_value=2, required=False)

    @staticmethod
    def higgs(validated_data, g):
        return HiggsType(validated_data['p'], validated_data['q'], validated_data['a'], validated_data['b'], g)


class MorseQuerySerializer(serializers.Serializer):
    ranks = serializers.ListField(child=serializers.IntegerField(min_value=1), min_length=1)
    degrees = serializers.ListField(child=serializers.IntegerField(), min_length=1)
    g = serializers.IntegerField(min_value=2, required=False)

    def validate(self, attrs):
        if len(attrs['ranks']) != len(attrs['degrees']):
            raise serializers.ValidationError({'degrees': 'Give exactly one degree per rank.'})
        return attrs

    @staticmethod
    def chain(validated_data):
        return HodgeChain(tuple(validated_data['ranks']), tuple(validated_data['degrees']))


class HiggsTypeSerializer(serializers.Serializer):
    p = serializers.IntegerField()
    q = serializers.IntegerField()
    a = serializers.IntegerField()
    b = serializers.IntegerField()
    g = serializers.IntegerField()


class ToledoSerializer(serializers.Serializer):
    tau = RationalField()
    tau_M = serializers.IntegerField()
    within_bound = serializers.BooleanField()
    saturated = serializers.BooleanField()


class MinimaRealizationSerializer(serializers.Serializer):
    case_tag = serializers.CharField()
    triple = TripleDataSerializer()
    alpha = serializers.IntegerField()
    alternate_triple = TripleDataSerializer(allow_null=True)
    product = ModuliFactorSerializer(many=True, allow_null=True)


class MWFactSerializer(serializers.Serializer):
    statement = serializers.CharField()
    holds = serializers.BooleanField()


class MWRelationsSerializer(serializers.Serializer):
    triple = TripleDataSerializer()
    alpha_m = RationalField()
    alpha_M = RationalField(allow_null=True)
    two_g_minus_two = serializers.IntegerField()
    alpha_m_vs_2g2 = serializers.CharField()
    alpha_M_vs_2g2 = serializers.CharField(allow_null=True)
    facts = MWFactSerializer(many=True)


class RigiditySerializer(serializers.Serializer):
    applies = serializers.BooleanField()
    expected_dim = serializers.IntegerField()
    factor1 = HiggsTypeSerializer(allow_null=True)
    factor2 = ModuliFactorSerializer(allow_null=True)
    factor2_summand = serializers.CharField(allow_null=True)
    dim_sum = serializers.IntegerField(allow_null=True)
    closed_form = serializers.IntegerField(allow_null=True)
    transposed_form = serializers.IntegerField(allow_null=True)
    below_expected = serializers.BooleanField(allow_null=True)
    twisted_pairs = ModuliFactorSerializer(allow_null=True)


class HiggsProfileSerializer(serializers.Serializer):
    higgs = HiggsTypeSerializer()
    toledo = ToledoSerializer()
    vanishing_pattern = serializers.CharField()
    minima = MinimaRealizationSerializer()
    mw = MWRelationsSerializer()
    expected_dim = serializers.IntegerField()
    coprime = serializers.BooleanField()
    minima_triple_dim = serializers.IntegerField()
    minima_alpha_critical = serializers.BooleanField()
    twisted_pairs = ModuliFactorSerializer(allow_null=True)


class WeightSpaceSerializer(serializers.Serializer):
    k = serializers.IntegerField()
    rank = serializers.IntegerField()
    degree = serializers.IntegerField()


class WeightCohomologySerializer(serializers.Serializer):
    k = serializers.IntegerField()
    dim_h1 = serializers.IntegerField()


class HodgeChainSerializer(serializers.Serializer):
    ranks = serializers.ListField(child=serializers.IntegerField())
    degrees = serializers.ListField(child=serializers.IntegerField())


class MorseReportSerializer(serializers.Serializer):
    chain = HodgeChainSerializer()
    g = serializers.IntegerField()
    profile = WeightSpaceSerializer(many=True)
    h1 = WeightCohomologySerializer(many=True)
    index = serializers.IntegerField()
    real_index = serializers.IntegerField()
    local_minimum = serializers.BooleanField()
    advisory = serializers.CharField(allow_null=True)
