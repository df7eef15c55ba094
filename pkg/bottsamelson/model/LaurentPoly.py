from dataclasses import dataclass
from typing import Dict, Mapping, Tuple, Union

from bottsamelson.model.types import LaurentPolyDict


@dataclass(frozen=True)
class LaurentPoly:
    """
    Integer Laurent polynomial in v, stored as sorted ``(exponent, coefficient)`` pairs.

    Attributes:
        terms (Tuple[Tuple[int, int], ...]): Nonzero coefficients by increasing exponent.
    """

    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple(sorted((int(e), int(c)) for e, c in coeffs.items() if c != 0)))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(((0, 1),))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls.from_dict({exponent: coeff})

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: int) -> int:
        return self.as_dict().get(exponent, 0)

    def valuation(self) -> int:
        """Smallest exponent with a nonzero coefficient."""
        if not self.terms:
            raise ValueError("The zero Laurent polynomial has no valuation")
        return self.terms[0][0]

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("The zero Laurent polynomial has no degree")
        return self.terms[-1][0]

    def _operand(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        return other if isinstance(other, LaurentPoly) else LaurentPoly.monomial(0, other)

    def __add__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        out = self.as_dict()
        for e, c in self._operand(other).terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        return self + (-self._operand(other))

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        g = self._operand(other)
        out: Dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in g.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^-1."""
        return LaurentPoly.from_dict({-e: c for e, c in self.terms})

    def evaluate(self) -> int:
        """Value at v = 1."""
        return sum(c for _, c in self.terms)

    def display(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            if e == 0:
                parts.append(str(c))
                continue
            power = "v" if e == 1 else f"v^{e}"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}{power}")
        return "+".join(parts).replace("+-", "-")

    def __str__(self) -> str:
        return self.display()

    def to_dict(self) -> LaurentPolyDict:
        return {"coeffs": {str(e): c for e, c in self.terms}, "display": self.display()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls.from_dict({int(e): c for e, c in data.items()})
