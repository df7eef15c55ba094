from dataclasses import dataclass, field
from typing import Tuple

from bottsamelson.model.types import AffineRootDict


@dataclass(frozen=True)
class AffineRoot:
    """
    An affine root alpha + n*delta.

    Attributes:
        finite (Tuple[int, ...]): Finite part in the simple-root basis.
        level (int): Coefficient n of delta.
        weights (Tuple[int, ...]): Weight-basis coordinates of the finite part followed by the level.
            Derived from the Cartan matrix, excluded from equality.
    """

    finite: Tuple[int, ...]
    level: int = 0
    weights: Tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        if not any(self.finite):
            raise ValueError("An affine root needs a nonzero finite part")

    @property
    def vector(self) -> Tuple[int, ...]:
        """Coordinates in the basis (alpha_1, ..., alpha_r, delta)."""
        return self.finite + (self.level,)

    def is_positive(self) -> bool:
        if self.level != 0:
            return self.level > 0
        return all(c >= 0 for c in self.finite)

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(tuple(-c for c in self.finite), -self.level, tuple(-c for c in self.weights))

    def positive(self) -> "AffineRoot":
        """The root or its negative, whichever is positive."""
        return self if self.is_positive() else -self

    def __str__(self) -> str:
        return f"[{','.join(str(c) for c in self.finite)}]{self.level:+d}d"

    def to_dict(self) -> AffineRootDict:
        return {"root": str(self), "finite": list(self.finite), "level": self.level, "weights": list(self.weights)}
