from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from bottsamelson.model.GroupElement import GroupElement
from bottsamelson.model.LaurentPoly import LaurentPoly
from bottsamelson.model.types import HeckeElementDict


@dataclass(frozen=True)
class HeckeElement:
    """
    Element of the Hecke algebra written in the standard basis H_x.

    Attributes:
        terms (Tuple[Tuple[GroupElement, LaurentPoly], ...]): Nonzero coefficients ordered by
            length, then canonical word.
    """

    terms: Tuple[Tuple[GroupElement, LaurentPoly], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: Mapping[GroupElement, LaurentPoly]) -> "HeckeElement":
        kept = [(x, c) for x, c in coeffs.items() if not c.is_zero()]
        kept.sort(key=lambda t: t[0].sort_key)
        return cls(tuple(kept))

    @classmethod
    def basis(cls, x: GroupElement) -> "HeckeElement":
        return cls(((x, LaurentPoly.one()),))

    def as_dict(self) -> Dict[GroupElement, LaurentPoly]:
        return dict(self.terms)

    @property
    def support(self) -> List[GroupElement]:
        return [x for x, _ in self.terms]

    def coefficient(self, x: GroupElement) -> LaurentPoly:
        return self.as_dict().get(x, LaurentPoly.zero())

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = self.as_dict()
        for x, c in other.terms:
            out[x] = out.get(x, LaurentPoly.zero()) + c
        return HeckeElement.from_dict(out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(tuple((x, -c) for x, c in self.terms))

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, factor: LaurentPoly) -> "HeckeElement":
        return HeckeElement.from_dict({x: c * factor for x, c in self.terms})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})H_{{{x.word_str or 'e'}}}" for x, c in self.terms)

    def to_dict(self) -> HeckeElementDict:
        return {
            "basis": "H",
            "terms": [{"word": x.word_str, "coeff": c.to_dict()["coeffs"]} for x, c in self.terms],
        }
