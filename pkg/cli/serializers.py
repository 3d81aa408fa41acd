from rest_framework import serializers

from cli.models import FuzzReport


class CounterexampleSerializer(serializers.Serializer):
    iteration = serializers.IntegerField()
    check = serializers.CharField()
    diagram = serializers.CharField(allow_blank=True, help_text="Gauss code of the failing diagram.")
    other = serializers.CharField(allow_null=True, help_text="Second diagram of a pair check.")
    details = serializers.ListField(child=serializers.CharField())


class FuzzReportSerializer(serializers.Serializer):
    seed = serializers.IntegerField()
    iterations = serializers.IntegerField()
    checks = serializers.IntegerField()
    mutant = serializers.BooleanField()
    passed = serializers.BooleanField()
    counterexample = CounterexampleSerializer(allow_null=True)


def fuzz_report_to_json(report: FuzzReport) -> dict:
    return FuzzReportSerializer(report).data
