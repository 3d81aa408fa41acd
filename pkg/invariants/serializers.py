from rest_framework import serializers

from invariants.models import IdentityReport, InvariantBundle
from laurent.serializers import LaurentPolyField


class InvariantBundleSerializer(serializers.Serializer):
    omega = serializers.DictField(child=serializers.IntegerField())
    polynomials = serializers.DictField(
        child=LaurentPolyField(),
        help_text="W0, W1 and F/G/H for every type pair, keyed by name.",
    )

    def to_representation(self, instance: InvariantBundle):
        return super().to_representation(
            {
                "omega": {str(a): w for a, w in instance.omega.items()},
                "polynomials": dict(instance.items()),
            }
        )


class IdentityCheckSerializer(serializers.Serializer):
    identity = serializers.CharField()
    subject = serializers.CharField(allow_blank=True)
    passed = serializers.BooleanField()
    left = serializers.SerializerMethodField()
    right = serializers.SerializerMethodField()

    def get_left(self, obj):
        return str(obj.left)

    def get_right(self, obj):
        return str(obj.right)


class IdentityReportSerializer(serializers.Serializer):
    passed = serializers.BooleanField(read_only=True)
    checked = serializers.SerializerMethodField()
    failures = IdentityCheckSerializer(many=True, read_only=True)

    def get_checked(self, obj: IdentityReport) -> int:
        return len(obj.checks)


def bundle_to_json(B: InvariantBundle) -> dict:
    return InvariantBundleSerializer(B).data


def report_to_json(report: IdentityReport, verbose: bool = False) -> dict:
    data = dict(IdentityReportSerializer(report).data)
    if verbose:
        data["checks"] = IdentityCheckSerializer(report.checks, many=True).data
    return data
