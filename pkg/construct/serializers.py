from rest_framework import serializers

from construct.models import GenusBounds, RealizationReport
from diagram.models import LongDiagram
from diagram.serializers import diagram_to_json
from laurent.serializers import LaurentPolyField


class GenusBoundsSerializer(serializers.Serializer):
    sg1 = serializers.ListField(child=serializers.IntegerField(), help_text="[lower, upper]")
    sg2 = serializers.ListField(child=serializers.IntegerField(), help_text="[lower, upper]")
    reasons = serializers.ListField(child=serializers.CharField())
    stratum = serializers.SerializerMethodField()

    def get_stratum(self, obj: GenusBounds) -> str | None:
        return self.context.get("stratum")


class RealizationReportSerializer(serializers.Serializer):
    target = serializers.CharField()
    expected = LaurentPolyField()
    actual = LaurentPolyField()
    genus = serializers.IntegerField(help_text="Genus of the Carter surface of the output.")
    crossings = serializers.IntegerField()
    passed = serializers.BooleanField()


def bounds_to_json(bounds: GenusBounds, stratum: str | None = None) -> dict:
    return GenusBoundsSerializer(bounds, context={"stratum": stratum}).data


def realization_to_json(D: LongDiagram, report: RealizationReport) -> dict:
    return {
        "diagram": diagram_to_json(D),
        "verification": RealizationReportSerializer(report).data,
    }
