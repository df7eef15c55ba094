from dataclasses import dataclass
from typing import List, Sequence, Tuple

from bottsamelson.compute.exactalg import homogeneous_degree
from bottsamelson.exceptions import InternalInvariant, NotHomogeneous, ZeroPolynomial
from bottsamelson.model.Field import Field, Scalar
from bottsamelson.model.MultiPoly import MultiPoly
from bottsamelson.model.types import GradedMatrixDict


@dataclass(frozen=True)
class GradedMatrix:
    """
    Square polynomial matrix with a degree attached to every row and column.

    A nonzero entry (i, j) is expected to be homogeneous of degree
    ``col_degrees[j] - row_degrees[i]``. Used for Phi(s, x), where rows carry the stalk degrees
    and columns the kernel degrees, and for the path product matrix E(s, x), whose row i
    carries minus the degree of the i-th path.

    Attributes:
        field (Field): Coefficient field of the entries.
        entries (Tuple[Tuple[MultiPoly, ...], ...]): Row-major entries.
        row_degrees (Tuple[int, ...]): Degree attached to each row.
        col_degrees (Tuple[int, ...]): Degree attached to each column.
    """

    field: Field
    entries: Tuple[Tuple[MultiPoly, ...], ...]
    row_degrees: Tuple[int, ...]
    col_degrees: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.entries[i][j]

    def is_upper_triangular(self) -> bool:
        return all(self.entries[i][j].is_zero() for i in range(self.size) for j in range(i))

    def is_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i] for i in range(self.size) for j in range(i))

    def check_homogeneity(self) -> None:
        """
        Raises:
            InternalInvariant: If a nonzero entry is not homogeneous of its expected degree.
        """
        for i, row in enumerate(self.entries):
            for j, f in enumerate(row):
                if f.is_zero():
                    continue
                expected = self.col_degrees[j] - self.row_degrees[i]
                try:
                    degree = homogeneous_degree(f)
                except (NotHomogeneous, ZeroPolynomial) as e:
                    raise InternalInvariant(f"Entry ({i},{j}) = {f} is not homogeneous") from e
                if degree != expected:
                    raise InternalInvariant(f"Entry ({i},{j}) = {f} has degree {degree}, expected {expected}")

    def scalar_block(self, rows: Sequence[int], cols: Sequence[int]) -> List[List[Scalar]]:
        """
        Entries of a degree-0 block as field scalars.

        Raises:
            InternalInvariant: If an entry of the block is not a constant.
        """
        block = []
        for i in rows:
            out = []
            for j in cols:
                f = self.entries[i][j]
                if any(sum(m) for m, _ in f.terms):
                    raise InternalInvariant(f"Entry ({i},{j}) = {f} of a degree-0 block is not constant")
                out.append(f.constant_term())
            block.append(out)
        return block

    def __str__(self) -> str:
        return f"GradedMatrix({self.size}x{self.size} over {self.field}, rows={list(self.row_degrees)})"

    def to_dict(self) -> GradedMatrixDict:
        return {
            "field": str(self.field),
            "row_degrees": list(self.row_degrees),
            "col_degrees": list(self.col_degrees),
            "entries": [[str(f) for f in row] for row in self.entries],
        }
