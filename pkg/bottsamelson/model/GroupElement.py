from dataclasses import dataclass, field
from typing import Tuple

from bottsamelson.model.types import GroupElementDict

Matrix = Tuple[Tuple[int, ...], ...]
Word = Tuple[int, ...]


def format_word(word: Word) -> str:
    """Comma separated indices, the empty word rendered as an empty string."""
    return ",".join(str(i) for i in word)


@dataclass(frozen=True)
class GroupElement:
    """
    A (possibly affine) Weyl group element as the integer matrix of its action.

    Column j holds the image of the j-th basis vector of (alpha_1, ..., alpha_r, delta).
    Equality and hashing only look at the matrix; length and the canonical reduced word
    are filled in once by the computation context that interned the element.

    Attributes:
        matrix (Matrix): Action on the root lattice plus delta.
        length (int): Coxeter length.
        word (Word): Canonical reduced word (greedy descent, smallest index first).
    """

    matrix: Matrix
    length: int = field(default=0, compare=False)
    word: Word = field(default=(), compare=False)

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    @property
    def sort_key(self) -> Tuple[int, Word]:
        return (self.length, self.word)

    @property
    def word_str(self) -> str:
        return format_word(self.word)

    def __str__(self) -> str:
        return f"GroupElement({self.word_str or 'e'}, length={self.length})"

    def to_dict(self) -> GroupElementDict:
        return {"word": self.word_str, "length": self.length}
