from rest_framework import serializers

from higgs.serializers import HiggsQuerySerializer, HiggsTypeSerializer, RigiditySerializer, ToledoSerializer

from .domain import TRISTATE_CHOICES


class ClassifyQuerySerializer(HiggsQuerySerializer):
    pass


class VerdictSerializer(serializers.Serializer):
    in_range = serializers.BooleanField()
    stable_nonempty = serializers.ChoiceField(choices=TRISTATE_CHOICES)
    stable_smooth_dim = serializers.IntegerField(allow_null=True)
    closure_of_stable_connected = serializers.ChoiceField(choices=TRISTATE_CHOICES)
    full_space_nonempty = serializers.ChoiceField(choices=TRISTATE_CHOICES)
    full_space_connected = serializers.ChoiceField(choices=TRISTATE_CHOICES)
    rigid = serializers.BooleanField()
    rigidity_data = RigiditySerializer(allow_null=True)
    citations = serializers.DictField(child=serializers.ListField(child=serializers.CharField()))


class ClassificationSerializer(serializers.Serializer):
    higgs = HiggsTypeSerializer()
    toledo = ToledoSerializer()
    moduli = VerdictSerializer()
    representations = VerdictSerializer()
    projective_representations = VerdictSerializer()
