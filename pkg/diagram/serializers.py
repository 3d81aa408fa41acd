from rest_framework import serializers

from diagram.constants import ROLES
from diagram.models import GaussDiagram, LongDiagram
from diagram.services import (MalformedToken, build_diagram,
                              format_gauss_code)


class PassageListField(serializers.ListField):
    """
    A passage is [role, id] or [role, id, sign]; the sign is written on the
    first occurrence of each crossing.
    """

    child = serializers.ListField(child=serializers.JSONField(), min_length=2, max_length=3)

    def to_internal_value(self, data):
        rows = super().to_internal_value(data)
        tokens = []
        for k, row in enumerate(rows):
            role, label = row[0], row[1]
            sign = row[2] if len(row) == 3 else None
            if role not in ROLES:
                raise serializers.ValidationError(f"passage {k}: role must be O or U")
            if isinstance(label, bool) or not isinstance(label, int) or label <= 0:
                raise serializers.ValidationError(
                    f"passage {k}: crossing id must be a positive integer"
                )
            if sign is not None and sign not in (1, -1):
                raise serializers.ValidationError(f"passage {k}: sign must be 1 or -1")
            tokens.append((role, label, sign))
        return tokens

    def to_representation(self, passages):
        return passages


class LongDiagramSerializer(serializers.Serializer):
    passages = PassageListField()
    code = serializers.CharField(read_only=True)
    crossings = serializers.IntegerField(read_only=True)

    def to_representation(self, instance: GaussDiagram):
        seen = set()
        rows = []
        for p in instance.passages:
            if p.crossing in seen:
                rows.append([p.role, p.crossing])
            else:
                seen.add(p.crossing)
                rows.append([p.role, p.crossing, instance.signs[p.crossing]])
        return {
            "passages": rows,
            "code": format_gauss_code(instance),
            "crossings": instance.n,
        }

    def create(self, validated_data) -> LongDiagram:
        return build_diagram(validated_data["passages"], LongDiagram)


def diagram_from_json(data) -> LongDiagram:
    """Shape errors become MalformedToken; chord errors keep their own names."""
    serializer = LongDiagramSerializer(data=data)
    if not serializer.is_valid():
        raise MalformedToken(f"invalid diagram document: {serializer.errors}")
    return serializer.save()


def diagram_to_json(D: GaussDiagram) -> dict:
    return LongDiagramSerializer(D).data
