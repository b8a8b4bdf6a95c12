import re

from rest_framework import serializers

from .domain import TRISTATE_CHOICES, TripleType
from .fields import RationalField

QUADRUPLE_SEPARATOR = re.compile(r'[\s,]+')


class QuadrupleField(serializers.Field):
    """
    Four integers (n1, n2, d1, d2): a list, or a ``"n1,n2,d1,d2"`` string
    for query parameters.
    """

    default_error_messages = {
        'invalid': 'Expected four integers n1 n2 d1 d2, got {value!r}.',
    }

    def to_internal_value(self, data):
        items = QUADRUPLE_SEPARATOR.split(data.strip()) if isinstance(data, str) else data
        try:
            values = tuple(int(item) for item in items)
        except (TypeError, ValueError):
            self.fail('invalid', value=data)
        if len(values) != 4 or any(isinstance(item, (bool, float)) for item in items):
            self.fail('invalid', value=data)
        return values

    def to_representation(self, value):
        return list(value)


class TripleQuerySerializer(serializers.Serializer):
    n1 = serializers.IntegerField(min_value=1)
    n2 = serializers.IntegerField(min_value=1)
    d1 = serializers.IntegerField()
    d2 = serializers.IntegerField()
    g = serializers.IntegerField(min_value=2, required=False)

    @staticmethod
    def triple(validated_data):
        return TripleType(*(validated_data[key] for key in ('n1', 'n2', 'd1', 'd2')))


class TripleReportQuerySerializer(TripleQuerySerializer):
    alpha = RationalField(required=False)
    witness = serializers.ListField(child=QuadrupleField(), required=False)
    strict = serializers.BooleanField(required=False, default=False)
    m = serializers.IntegerField(required=False)
    split = QuadrupleField(required=False)

    def validate(self, attrs):
        if attrs.get('witness') and 'alpha' not in attrs:
            raise serializers.ValidationError({'alpha': 'An alpha value is required to check witnesses.'})
        return attrs


class WallQuerySerializer(TripleQuerySerializer):
    interval = serializers.ListField(child=RationalField(), min_length=2, max_length=2, required=False)
    include_endpoints = serializers.BooleanField(required=False, default=False)
    alpha = RationalField(required=False)
    m = serializers.IntegerField(required=False)

    def validate_interval(self, value):
        if value[0] > value[1]:
            raise serializers.ValidationError("Lower end must not exceed the upper end.")
        return value


class ChamberQuerySerializer(TripleQuerySerializer):
    cutoff = RationalField(required=False)


class TripleDataSerializer(serializers.Serializer):
    n1 = serializers.IntegerField()
    n2 = serializers.IntegerField()
    d1 = serializers.IntegerField()
    d2 = serializers.IntegerField()


class SlopesSerializer(serializers.Serializer):
    mu1 = RationalField()
    mu2 = RationalField()
    gap = RationalField()


class AlphaIntervalSerializer(serializers.Serializer):
    lo = RationalField()
    hi = RationalField(allow_null=True)
    hi_infinite = serializers.BooleanField()
    empty = serializers.BooleanField()


class ThresholdsSerializer(serializers.Serializer):
    alpha_m = RationalField()
    alpha_M = RationalField(allow_null=True)
    alpha_j = serializers.ListField(child=RationalField())
    alpha_0 = RationalField()
    alpha_t = RationalField(allow_null=True)
    alpha_e = RationalField()
    alpha_L = RationalField()
    via_duality = serializers.BooleanField()


class WitnessVerdictSerializer(serializers.Serializer):
    witness = serializers.ListField(child=serializers.IntegerField())
    delta = RationalField(allow_null=True)
    passed = serializers.BooleanField()
    error = serializers.CharField(allow_null=True)


class WitnessReportSerializer(serializers.Serializer):
    alpha = RationalField()
    strict = serializers.BooleanField()
    verdicts = WitnessVerdictSerializer(many=True)
    passed = serializers.BooleanField()


class ModuliFactorSerializer(serializers.Serializer):
    kind = serializers.CharField()
    rank = serializers.IntegerField()
    degree = serializers.IntegerField()


class FibrationSerializer(serializers.Serializer):
    fiber_dim = serializers.IntegerField()
    empty_fiber = serializers.BooleanField()
    base = ModuliFactorSerializer(many=True)
    isomorphism = serializers.BooleanField()
    slope_condition_met = serializers.BooleanField()
    alpha_m_moduli = ModuliFactorSerializer(many=True)
    alpha_M_moduli = ModuliFactorSerializer(many=True, allow_null=True)
    via_duality = serializers.BooleanField()


class WallWitnessSerializer(serializers.Serializer):
    n1p = serializers.IntegerField()
    n2p = serializers.IntegerField()
    dsum = serializers.IntegerField()


class WallSerializer(serializers.Serializer):
    alpha = RationalField()
    witnesses = WallWitnessSerializer(many=True)
    stabilized = serializers.BooleanField()


class CriticalitySerializer(serializers.Serializer):
    alpha = RationalField()
    critical = serializers.BooleanField()
    witnesses = WallWitnessSerializer(many=True)


class GenericitySerializer(serializers.Serializer):
    m = serializers.IntegerField()
    guaranteed_noncritical = serializers.BooleanField()
    no_alpha_independent = serializers.BooleanField()


class ChamberSerializer(serializers.Serializer):
    lo = RationalField()
    hi = RationalField()
    contains_2g_minus_2 = serializers.BooleanField()
    is_large_chamber = serializers.BooleanField()
    birational_to_large = serializers.BooleanField()


class ChamberReportSerializer(serializers.Serializer):
    chambers = ChamberSerializer(many=True)
    walls = WallSerializer(many=True)
    cutoff = RationalField(allow_null=True)
    two_g_minus_two = serializers.IntegerField()
    position = serializers.CharField()
    flips_to_large = serializers.IntegerField(allow_null=True)
    wall_at_2g_minus_2 = WallSerializer(allow_null=True)


class FlipDimsSerializer(serializers.Serializer):
    alpha_c = RationalField()
    side = serializers.CharField()
    stilde_dim = serializers.IntegerField()
    minus_chi_cross = serializers.IntegerField()
    minus_chi_reverse = serializers.IntegerField()
    fiber_dim = serializers.IntegerField()
    fiber_nonnegative = serializers.BooleanField()
    guaranteed_codim = serializers.IntegerField()
    codim_bound_applies = serializers.BooleanField()
    total_dim = serializers.IntegerField()


class ModuliVerdictSerializer(serializers.Serializer):
    alpha = RationalField()
    in_range = serializers.BooleanField()
    critical = serializers.BooleanField()
    stable_nonempty = serializers.ChoiceField(choices=TRISTATE_CHOICES)
    stable_irreducible = serializers.ChoiceField(choices=TRISTATE_CHOICES)
    stable_smooth = serializers.ChoiceField(choices=TRISTATE_CHOICES)
    stable_dim = serializers.IntegerField(allow_null=True)
    stable_birational_to_large = serializers.ChoiceField(choices=TRISTATE_CHOICES)
    full_irreducible = serializers.ChoiceField(choices=TRISTATE_CHOICES)
    full_birational_to_large = serializers.ChoiceField(choices=TRISTATE_CHOICES)
    via_duality = serializers.BooleanField()
    hypotheses = serializers.ListField(child=serializers.CharField())
    citations = serializers.DictField(child=serializers.ListField(child=serializers.CharField()))


class TripleSummarySerializer(serializers.Serializer):
    type = TripleDataSerializer()
    g = serializers.IntegerField()
    slopes = SlopesSerializer()
    alpha_range = AlphaIntervalSerializer()
    thresholds = ThresholdsSerializer(allow_null=True)
    dual = TripleDataSerializer()
    chi_self = serializers.IntegerField()
    dim_stable_moduli = serializers.IntegerField()
    fibration = FibrationSerializer()
    alpha_slope = RationalField(allow_null=True)
    criticality = CriticalitySerializer(allow_null=True)
    witness_report = WitnessReportSerializer(allow_null=True)
    genericity = GenericitySerializer(allow_null=True)
    flip = FlipDimsSerializer(allow_null=True)
    moduli = ModuliVerdictSerializer(allow_null=True)


class WallListSerializer(serializers.Serializer):
    type = TripleDataSerializer()
    lo = RationalField()
    hi = RationalField()
    include_lo = serializers.BooleanField()
    include_hi = serializers.BooleanField()
    walls = WallSerializer(many=True)
    criticality = CriticalitySerializer(allow_null=True)
    genericity = GenericitySerializer(allow_null=True)
