from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from bottsamelson.exceptions import DivisionByZero, FieldMismatch

Scalar = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """
    The coefficient field of a computation: the rationals or a prime field.

    Raw values handed around by polynomials are ``Fraction`` in characteristic 0
    and ``int`` in ``range(p)`` in characteristic p. ``Fraction`` already keeps
    lowest terms with a positive denominator.

    Attributes:
        characteristic (int): 0 or an odd prime.
    """

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p == 2:
            raise ValueError("Characteristic 2 is not supported, division by 2 is required")
        if p != 0 and not _is_prime(p):
            raise ValueError(f"Characteristic must be 0 or an odd prime, got {p}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def coerce(self, value: Scalar) -> Scalar:
        """
        Bring an integer or rational into the field.

        Raises:
            DivisionByZero: If a denominator vanishes modulo p.
        """
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            return self.div(value.numerator % p, value.denominator % p)
        return int(value) % p

    def zero(self) -> Scalar:
        return self.coerce(0)

    def one(self) -> Scalar:
        return self.coerce(1)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a - b) % self.characteristic
        return a - b

    def neg(self, a: Scalar) -> Scalar:
        if self.characteristic:
            return (-a) % self.characteristic
        return -a

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a * b) % self.characteristic
        return a * b

    def inv(self, a: Scalar) -> Scalar:
        if self.is_zero(a):
            raise DivisionByZero(f"Cannot invert zero over {self}")
        if self.characteristic:
            return pow(int(a), -1, self.characteristic)
        return 1 / Fraction(a)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        if self.characteristic:
            return a % self.characteristic == 0
        return a == 0

    def to_json(self, a: Scalar) -> Union[int, str]:
        """Integers stay integers, proper fractions become ``"p/q"`` strings."""
        if isinstance(a, Fraction):
            return a.numerator if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return int(a)

    def from_json(self, raw: Union[int, str]) -> Scalar:
        return self.coerce(Fraction(raw))

    def scalar(self, value: Scalar) -> "FieldScalar":
        return FieldScalar(self, self.coerce(value))

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"


@dataclass(frozen=True)
class FieldScalar:
    """A single field element that remembers its field."""

    field: Field
    value: Scalar

    def _check(self, other: "FieldScalar") -> None:
        if other.field != self.field:
            raise FieldMismatch(f"Cannot combine scalars over {self.field} and {other.field}")

    def __add__(self, other: "FieldScalar") -> "FieldScalar":
        self._check(other)
        return FieldScalar(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: "FieldScalar") -> "FieldScalar":
        self._check(other)
        return FieldScalar(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: "FieldScalar") -> "FieldScalar":
        self._check(other)
        return FieldScalar(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: "FieldScalar") -> "FieldScalar":
        self._check(other)
        return FieldScalar(self.field, self.field.div(self.value, other.value))

    def __neg__(self) -> "FieldScalar":
        return FieldScalar(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldScalar":
        return FieldScalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __str__(self) -> str:
        return str(self.field.to_json(self.value))
