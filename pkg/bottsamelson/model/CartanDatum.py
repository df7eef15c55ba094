from dataclasses import dataclass
from typing import List, Tuple

from bottsamelson.model.types import CartanDatumDict


@dataclass(frozen=True)
class CartanDatum:
    """
    A finite irreducible Cartan type, optionally promoted to its untwisted affine group.

    ``cartan[i][j]`` is the pairing of the j-th simple root with the i-th simple coroot,
    so row i holds the weight-basis coordinate i of every simple root.

    Attributes:
        type_label (str): One of A, B, C, D, E, F, G.
        rank (int): Rank r of the finite root system.
        cartan (Tuple[Tuple[int, ...], ...]): The r x r Cartan matrix.
        affine (bool): Whether words may use the affine simple reflection 0.
    """

    type_label: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    affine: bool = False

    def __post_init__(self) -> None:
        if len(self.cartan) != self.rank or any(len(row) != self.rank for row in self.cartan):
            raise ValueError(f"Cartan matrix of {self.name} must be {self.rank}x{self.rank}")
        for i, row in enumerate(self.cartan):
            for j, a in enumerate(row):
                if i == j and a != 2:
                    raise ValueError(f"Diagonal entry ({i},{j}) of {self.name} is {a}, expected 2")
                if i != j and a > 0:
                    raise ValueError(f"Off-diagonal entry ({i},{j}) of {self.name} is positive")
                if i != j and (a == 0) != (self.cartan[j][i] == 0):
                    raise ValueError(f"Cartan matrix of {self.name} is not symmetrisable")

    @property
    def name(self) -> str:
        return f"{'affine ' if self.affine else ''}{self.type_label}{self.rank}"

    @property
    def nvars(self) -> int:
        """Number of polynomial variables: one per fundamental weight plus delta."""
        return self.rank + 1

    @property
    def simple_indices(self) -> List[int]:
        """Word indices allowed for this datum, affine index 0 first."""
        first = 0 if self.affine else 1
        return list(range(first, self.rank + 1))

    def __str__(self) -> str:
        return f"CartanDatum({self.name}, cartan={[list(r) for r in self.cartan]})"

    def to_dict(self) -> CartanDatumDict:
        return {
            "type": self.type_label,
            "rank": self.rank,
            "affine": self.affine,
            "cartan": [list(row) for row in self.cartan],
        }
