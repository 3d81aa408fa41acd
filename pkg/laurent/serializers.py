from rest_framework import serializers

from laurent.models import LaurentPoly
from laurent.services import LaurentError, format_poly, parse_poly


class LaurentPolyField(serializers.Field):
    """Polynomials travel as their canonical text, e.g. "-t^2+2-t^-2"."""

    default_error_messages = {"invalid": "Not a Laurent polynomial: {message}"}

    def to_representation(self, value: LaurentPoly) -> str:
        return format_poly(value)

    def to_internal_value(self, data) -> LaurentPoly:
        if isinstance(data, int) and not isinstance(data, bool):
            return LaurentPoly.constant(data)
        if not isinstance(data, str):
            self.fail("invalid", message=f"expected text, got {type(data).__name__}")
        try:
            return parse_poly(data)
        except LaurentError as exc:
            self.fail("invalid", message=str(exc))
