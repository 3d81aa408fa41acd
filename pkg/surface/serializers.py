from rest_framework import serializers

from diagram.models import LongDiagram
from surface.models import DEFAULT_RULES, HomologyData, LocalRules
from surface.services import homology_data, two_boundary_genus


class HomologyDataSerializer(serializers.Serializer):
    crossings = serializers.ListField(
        child=serializers.IntegerField(),
        source="ids",
        help_text="Crossing ids in the order used by v and M.",
    )
    genus = serializers.IntegerField(help_text="Genus of the Carter surface.")
    v = serializers.SerializerMethodField()
    M = serializers.SerializerMethodField()

    def get_v(self, obj: HomologyData):
        return obj.v.tolist()

    def get_M(self, obj: HomologyData):
        return obj.M.tolist()


class SurfaceReportSerializer(serializers.Serializer):
    # what the `surface` subcommand prints
    genus = serializers.IntegerField()
    g2_upper = serializers.IntegerField(
        help_text="Upper bound for the 2-supporting genus from this diagram."
    )
    v = serializers.ListField(child=serializers.IntegerField())
    M = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))


def surface_report(D: LongDiagram, rules: LocalRules = DEFAULT_RULES) -> dict:
    H = homology_data(D, rules)
    report = {
        "genus": H.genus,
        "g2_upper": two_boundary_genus(D),
        "v": H.v.tolist(),
        "M": H.M.tolist(),
    }
    return SurfaceReportSerializer(report).data
