from fractions import Fraction

from rest_framework import serializers

from .rationals import as_rational, format_rational


class RationalField(serializers.Field):
    """
    Exact rational: accepts ``int`` or a ``"NUM"`` / ``"NUM/DEN"`` string and
    renders ``"num/den"`` in lowest terms. ``None`` renders as ``null``.
    """

    default_error_messages = {
        'invalid': 'Expected an integer or a "NUM/DEN" string, got {value!r}.',
    }

    def to_internal_value(self, data):
        try:
            return as_rational(data)
        except (TypeError, ValueError):
            self.fail('invalid', value=data)

    def to_representation(self, value):
        if value is None:
            return None
        return format_rational(Fraction(value))
