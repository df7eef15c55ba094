from dataclasses import dataclass, field
from typing import List

from bottsamelson.model.AffineRoot import AffineRoot
from bottsamelson.model.GroupElement import GroupElement
from bottsamelson.model.types import GkmReportDict


@dataclass(frozen=True)
class GkmViolation:
    """Two edges at ``vertex`` whose labels are proportional over the field."""

    vertex: GroupElement
    first: AffineRoot
    second: AffineRoot

    def __str__(self) -> str:
        return f"GkmViolation(at={self.vertex.word_str or 'e'}, {self.first} ~ {self.second})"


@dataclass(frozen=True)
class GkmReport:
    characteristic: int
    violations: List[GkmViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> GkmReportDict:
        return {
            "char": self.characteristic,
            "passed": self.passed,
            "violations": [
                {"vertex": v.vertex.word_str, "first": str(v.first), "second": str(v.second)} for v in self.violations
            ],
        }
