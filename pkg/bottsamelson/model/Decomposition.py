from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from bottsamelson.model.GroupElement import GroupElement
from bottsamelson.model.LaurentPoly import LaurentPoly
from bottsamelson.model.types import CharacterReportDict, SummandDict


@dataclass(frozen=True)
class Summand:
    """``mult`` copies of the indecomposable B(z) shifted by r."""

    z: GroupElement
    r: int
    mult: int = 1

    def to_dict(self) -> SummandDict:
        return {"z": self.z.word_str, "r": self.r, "mult": self.mult}


@dataclass(frozen=True)
class Decomposition:
    """
    Direct sum decomposition of a Bott-Samelson sheaf.

    Attributes:
        summands (Tuple[Summand, ...]): Ordered by decreasing length of z, then canonical
            word, then decreasing shift.
        experimental (bool): Set when the word was not reduced in positive characteristic.
    """

    summands: Tuple[Summand, ...] = ()
    experimental: bool = False

    @classmethod
    def from_multiplicities(cls, mults: Dict[Tuple[GroupElement, int], int], experimental: bool = False) -> "Decomposition":
        kept = [Summand(z, r, m) for (z, r), m in mults.items() if m]
        kept.sort(key=lambda s: (-s.z.length, s.z.word, -s.r))
        return cls(tuple(kept), experimental)

    def multiplicity(self, z: GroupElement, r: int) -> int:
        return next((s.mult for s in self.summands if s.z == z and s.r == r), 0)

    def as_pairs(self) -> List[Tuple[GroupElement, int, int]]:
        return [(s.z, s.r, s.mult) for s in self.summands]

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        parts = [f"{s.mult if s.mult != 1 else ''}B({s.z.word_str or 'e'})<{s.r}>" for s in self.summands]
        return " + ".join(parts)

    def to_dict(self) -> List[SummandDict]:
        return [s.to_dict() for s in self.summands]


@dataclass(frozen=True)
class CharacterReport:
    """Comparison of v^l(w) h(B(w)) over a field with the Kazhdan-Lusztig element of w."""

    w: GroupElement
    characteristic: int
    character: Dict[GroupElement, LaurentPoly] = field(default_factory=dict)
    mismatches: List[GroupElement] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> CharacterReportDict:
        return {
            "w": self.w.word_str,
            "char": self.characteristic,
            "holds": self.holds,
            "mismatches": [x.word_str for x in self.mismatches],
        }
