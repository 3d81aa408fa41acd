from rest_framework import serializers

from laurent.serializers import LaurentPolyField
from tangle.constants import STRAND_A, STRAND_B, STRANDS
from tangle.models import TangleDiagram, TangleInvariants
from tangle.services import (MalformedTangle, format_tangle,
                             is_simply_linked, parse_tangle)


class TangleSerializer(serializers.Serializer):
    # same content as the two-line text format, one key per strand
    A = serializers.CharField(allow_blank=True, trim_whitespace=True, help_text="Gauss code of strand A.")
    B = serializers.CharField(allow_blank=True, trim_whitespace=True, help_text="Gauss code of strand B.")
    crossings = serializers.IntegerField(read_only=True)
    simply_linked = serializers.BooleanField(read_only=True)

    def to_representation(self, instance: TangleDiagram):
        lines = dict(line.split(":", 1) for line in format_tangle(instance).splitlines())
        return {
            STRAND_A: lines[STRAND_A].strip(),
            STRAND_B: lines[STRAND_B].strip(),
            "crossings": instance.n,
            "simply_linked": is_simply_linked(instance),
        }

    def create(self, validated_data) -> TangleDiagram:
        return parse_tangle("\n".join(f"{label}: {validated_data[label]}" for label in STRANDS))


class TangleInvariantsSerializer(serializers.Serializer):
    polynomials = serializers.DictField(
        child=LaurentPolyField(),
        help_text="U0A, U0B, U0, V0 and the same for type 1.",
    )
    linking = serializers.DictField(child=serializers.IntegerField())

    def to_representation(self, instance: TangleInvariants):
        polys = {}
        for a in (0, 1):
            for X in STRANDS:
                polys[f"U{a}{X}"] = instance.U[a, X]
            polys[f"U{a}"] = instance.U_total(a)
            polys[f"V{a}"] = instance.V[a]
        return super().to_representation(
            {
                "polynomials": polys,
                "linking": {str(a): lam for a, lam in instance.linking.items()},
            }
        )


def tangle_from_json(data) -> TangleDiagram:
    serializer = TangleSerializer(data=data)
    if not serializer.is_valid():
        raise MalformedTangle(f"invalid tangle document: {serializer.errors}")
    return serializer.save()


def tangle_to_json(E: TangleDiagram) -> dict:
    return TangleSerializer(E).data


def tangle_invariants_to_json(inv: TangleInvariants) -> dict:
    return TangleInvariantsSerializer(inv).data
