from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from bottsamelson.constants import DELTA_VARIABLE, WEIGHT_VARIABLE_PREFIX
from bottsamelson.exceptions import FieldMismatch
from bottsamelson.model.Field import Field, FieldScalar, Scalar
from bottsamelson.model.types import MultiPolyDict

Monomial = Tuple[int, ...]


def variable_names(nvars: int) -> List[str]:
    """Names of the polynomial variables: w1..wr for fundamental weights, then d for delta."""
    return [f"{WEIGHT_VARIABLE_PREFIX}{i + 1}" for i in range(nvars - 1)] + [DELTA_VARIABLE]


@dataclass(frozen=True)
class MultiPoly:
    """
    Sparse polynomial over a field in ``nvars`` variables of degree 2 each.

    Terms are kept as a tuple of ``(exponent vector, coefficient)`` pairs sorted by
    exponent vector, without zero coefficients, so equality and hashing are structural.

    Attributes:
        field (Field): Coefficient field.
        nvars (int): Number of variables (rank plus one for delta).
        terms (Tuple[Tuple[Monomial, Scalar], ...]): Canonical sparse representation.
    """

    field: Field
    nvars: int
    terms: Tuple[Tuple[Monomial, Scalar], ...] = ()

    @classmethod
    def from_dict(cls, field: Field, nvars: int, coeffs: Dict[Monomial, Scalar]) -> "MultiPoly":
        kept = tuple(sorted((m, c) for m, c in coeffs.items() if not field.is_zero(c)))
        return cls(field, nvars, kept)

    @classmethod
    def zero(cls, field: Field, nvars: int) -> "MultiPoly":
        return cls(field, nvars, ())

    @classmethod
    def constant(cls, field: Field, nvars: int, value: Scalar) -> "MultiPoly":
        return cls.from_dict(field, nvars, {(0,) * nvars: field.coerce(value)})

    @classmethod
    def one(cls, field: Field, nvars: int) -> "MultiPoly":
        return cls.constant(field, nvars, 1)

    @classmethod
    def variable(cls, field: Field, nvars: int, index: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[index] = 1
        return cls.from_dict(field, nvars, {tuple(exps): field.one()})

    @classmethod
    def linear_form(cls, field: Field, coords: Sequence[Scalar]) -> "MultiPoly":
        """Build ``sum_i coords[i] * x_i``, reducing every coordinate into the field."""
        nvars = len(coords)
        coeffs: Dict[Monomial, Scalar] = {}
        for i, c in enumerate(coords):
            exps = [0] * nvars
            exps[i] = 1
            coeffs[tuple(exps)] = field.coerce(c)
        return cls.from_dict(field, nvars, coeffs)

    def as_dict(self) -> Dict[Monomial, Scalar]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Scalar:
        return self.as_dict().get((0,) * self.nvars, self.field.zero())

    def is_linear(self) -> bool:
        return bool(self.terms) and all(sum(m) == 1 for m, _ in self.terms)

    def linear_coefficients(self) -> List[Scalar]:
        """Coefficient of each variable in the degree-2 part."""
        coeffs = [self.field.zero()] * self.nvars
        for m, c in self.terms:
            if sum(m) == 1:
                coeffs[m.index(1)] = c
        return coeffs

    def _check(self, other: "MultiPoly") -> None:
        if other.field != self.field or other.nvars != self.nvars:
            raise FieldMismatch(
                f"Cannot combine polynomials over {self.field}[{self.nvars}] and {other.field}[{other.nvars}]"
            )

    def _coerce_operand(self, other: Union["MultiPoly", FieldScalar, int, Scalar]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise FieldMismatch(f"Scalar over {other.field} used with polynomial over {self.field}")
            return MultiPoly.constant(self.field, self.nvars, other.value)
        return MultiPoly.constant(self.field, self.nvars, other)

    def __add__(self, other: Union["MultiPoly", FieldScalar, int, Scalar]) -> "MultiPoly":
        g = self._coerce_operand(other)
        out = self.as_dict()
        for m, c in g.terms:
            out[m] = self.field.add(out.get(m, self.field.zero()), c)
        return MultiPoly.from_dict(self.field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.field, self.nvars, tuple((m, self.field.neg(c)) for m, c in self.terms))

    def __sub__(self, other: Union["MultiPoly", FieldScalar, int, Scalar]) -> "MultiPoly":
        return self + (-self._coerce_operand(other))

    def __rsub__(self, other: Union[FieldScalar, int, Scalar]) -> "MultiPoly":
        return self._coerce_operand(other) - self

    def scale(self, value: Scalar) -> "MultiPoly":
        c0 = self.field.coerce(value)
        return MultiPoly.from_dict(self.field, self.nvars, {m: self.field.mul(c, c0) for m, c in self.terms})

    def __mul__(self, other: Union["MultiPoly", FieldScalar, int, Scalar]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if isinstance(other, FieldScalar):
                self._coerce_operand(other)
                return self.scale(other.value)
            return self.scale(other)
        self._check(other)
        out: Dict[Monomial, Scalar] = {}
        zero = self.field.zero()
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = self.field.add(out.get(m, zero), self.field.mul(c1, c2))
        return MultiPoly.from_dict(self.field, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        result = MultiPoly.one(self.field, self.nvars)
        for _ in range(n):
            result = result * self
        return result

    def monomial_degrees(self) -> Iterable[int]:
        """Degrees of the stored monomials, each variable counting 2."""
        return (2 * sum(m) for m, _ in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = variable_names(self.nvars)
        parts = []
        for m, c in sorted(self.terms, key=lambda t: (-sum(t[0]), tuple(-e for e in t[0]))):
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
            coeff = self.field.to_json(c)
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        return "+".join(parts).replace("+-", "-")

    def to_dict(self) -> MultiPolyDict:
        return {
            "vars": variable_names(self.nvars),
            "terms": [{"exp": list(m), "coeff": self.field.to_json(c)} for m, c in self.terms],
            "display": str(self),
        }
