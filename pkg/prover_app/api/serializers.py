"""Serializers for proof API."""

from django.conf import settings
from rest_framework import serializers
from prover_app.models import ProofRun


class ProofRunSerializer(serializers.ModelSerializer):
    """Serializer for stored proof runs with their certificate."""

    tile_count = serializers.IntegerField(read_only=True)

    class Meta:
        model = ProofRun
        fields = [
            "id", "proposition", "context", "verdict", "enclosure_lb", "enclosure_ub",
            "tile_count", "elapsed_ms", "certificate", "created_at", "updated_at",
        ]


class TaylorOptionsSerializer(serializers.Serializer):
    """Taylor form request: degree, optional variable, center and scope."""

    degree = serializers.IntegerField(min_value=1)
    var = serializers.CharField(required=False)
    center = serializers.CharField(required=False)
    scope = serializers.ChoiceField(choices=["tile", "global"], required=False)


class CreateProofSerializer(serializers.Serializer):
    """Serializer for deciding a proposition over a context."""

    proposition = serializers.CharField()
    context = serializers.DictField(
        child=serializers.ListField(child=serializers.CharField(), min_length=2, max_length=2),
        required=False,
        default=dict,
    )
    approx = serializers.IntegerField(min_value=0, max_value=settings.NUMERICS["MAX_APPROX"], required=False)
    splits = serializers.DictField(child=serializers.IntegerField(min_value=1), required=False)
    default_split = serializers.IntegerField(min_value=1, required=False)
    taylor = TaylorOptionsSerializer(required=False)
    round_bits = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    rewrites = serializers.BooleanField(required=False)
    simplify = serializers.BooleanField(required=False)
    probe = serializers.BooleanField(required=False)


class EvalSerializer(serializers.Serializer):
    """Serializer for the constant-expression calculator."""

    expression = serializers.CharField()
    approx = serializers.IntegerField(min_value=0, max_value=settings.NUMERICS["MAX_APPROX"], required=False)
