import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from bottsamelson.compute.rootsys import coroot_pairing, make_root, simple_root
from bottsamelson.model.AffineRoot import AffineRoot
from bottsamelson.model.CartanDatum import CartanDatum
from bottsamelson.model.GroupElement import GroupElement, Matrix, Word

Vector = Tuple[int, ...]
# A subsequence of a word: letters kept, None for skipped positions
Subsequence = Tuple[Optional[int], ...]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _apply(m: Matrix, vec: Sequence[int]) -> Vector:
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in m)


def vector_is_positive(vec: Sequence[int]) -> bool:
    """Sign of a root vector (finite part, level) in the affine positive system."""
    level = vec[-1]
    if level != 0:
        return level > 0
    return all(c >= 0 for c in vec[:-1])


class CoxeterContext:
    """
    Interning table and memo tables for group computations over one Cartan datum.

    Elements created here are canonical: every matrix maps to a single
    ``GroupElement`` carrying its length and canonical word. A context is meant to be
    used by one thread; the elements it hands out may be shared freely.
    """

    def __init__(self, datum: CartanDatum, logger: Optional[logging.Logger] = None):
        self.datum = datum
        self.logger = logger or logging.Logger("default")
        self._size = datum.rank + 1
        self._elements: Dict[Matrix, GroupElement] = {}
        self._right: Dict[Tuple[GroupElement, int], GroupElement] = {}
        self._descents: Dict[GroupElement, FrozenSet[int]] = {}
        self._intervals: Dict[GroupElement, FrozenSet[GroupElement]] = {}
        self._simple_vectors: Dict[int, Vector] = {i: simple_root(datum, i).vector for i in datum.simple_indices}
        self._generator_matrices: Dict[int, Matrix] = {
            i: self.reflection_matrix(simple_root(datum, i)) for i in datum.simple_indices
        }

        identity = tuple(tuple(1 if i == j else 0 for j in range(self._size)) for i in range(self._size))
        self.identity = GroupElement(identity, 0, ())
        self._elements[identity] = self.identity
        self._generators: Dict[int, GroupElement] = {
            i: self._intern(m) for i, m in self._generator_matrices.items()
        }
        self.logger.debug(f"Coxeter context ready for {datum.name} with generators {sorted(self._generators)}")

    # construction

    def reflection_matrix(self, root: AffineRoot) -> Matrix:
        """Matrix of s_root: alpha_j -> alpha_j - <alpha_j, root>' root, delta fixed."""
        r = self.datum.rank
        columns = []
        for j in range(r):
            unit = tuple(1 if i == j else 0 for i in range(r))
            k = coroot_pairing(self.datum, unit, root.finite)
            columns.append(tuple((1 if i == j else 0) - k * root.vector[i] for i in range(r + 1)))
        columns.append(tuple(1 if i == r else 0 for i in range(r + 1)))
        return tuple(tuple(columns[j][i] for j in range(r + 1)) for i in range(r + 1))

    def _first_descent(self, m: Matrix) -> Optional[int]:
        for i in self.datum.simple_indices:
            if not vector_is_positive(_apply(m, self._simple_vectors[i])):
                return i
        return None

    def _intern(self, matrix: Matrix) -> GroupElement:
        """
        Return the canonical element for ``matrix``, computing length and word by greedy descent.

        The descent stops at the first matrix already known, so each new element costs
        one matrix product per step it takes to reach the table.
        """
        known = self._elements.get(matrix)
        if known is not None:
            return known

        chain: List[Matrix] = []
        letters: List[int] = []
        current = matrix
        while current not in self._elements:
            letter = self._first_descent(current)
            if letter is None:
                raise ValueError("Matrix without descents is not the identity; not a group element")
            chain.append(current)
            letters.append(letter)
            current = _matmul(current, self._generator_matrices[letter])

        base = self._elements[current]
        for m, letter in zip(reversed(chain), reversed(letters)):
            base = GroupElement(m, base.length + 1, base.word + (letter,))
            self._elements[m] = base
        return self._elements[matrix]

    def element(self, matrix: Matrix) -> GroupElement:
        return self._intern(tuple(tuple(row) for row in matrix))

    def simple_reflection(self, index: int) -> GroupElement:
        try:
            return self._generators[index]
        except KeyError as e:
            raise ValueError(f"Simple index {index} is not valid for {self.datum.name}") from e

    def reflection(self, root: AffineRoot) -> GroupElement:
        return self._intern(self.reflection_matrix(root))

    # group operations

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self._intern(_matmul(a.matrix, b.matrix))

    def right_mul(self, x: GroupElement, index: int) -> GroupElement:
        """x * s_index, memoised."""
        key = (x, index)
        hit = self._right.get(key)
        if hit is None:
            hit = self.mul(x, self.simple_reflection(index))
            self._right[key] = hit
        return hit

    def ev_word(self, word: Iterable[Optional[int]]) -> GroupElement:
        """Multiply the generators of a word left to right, skipping blanks."""
        current = self.identity
        for letter in word:
            if letter is not None:
                current = self.right_mul(current, letter)
        return current

    def inverse(self, w: GroupElement) -> GroupElement:
        return self.ev_word(reversed(w.word))

    def apply(self, w: GroupElement, vec: Sequence[int]) -> Vector:
        return _apply(w.matrix, vec)

    def act(self, w: GroupElement, beta: AffineRoot) -> AffineRoot:
        image = _apply(w.matrix, beta.vector)
        return make_root(self.datum, image[:-1], image[-1], check=False)

    def act_simple(self, w: GroupElement, index: int) -> AffineRoot:
        """w applied to the simple root with word index ``index``."""
        return self.act(w, simple_root(self.datum, index))

    def length(self, w: GroupElement) -> int:
        return w.length

    def canonical_word(self, w: GroupElement) -> Word:
        return w.word

    def right_descents(self, w: GroupElement) -> FrozenSet[int]:
        """Indices s with l(ws) < l(w), i.e. w(alpha_s) < 0."""
        hit = self._descents.get(w)
        if hit is None:
            hit = frozenset(
                i for i in self.datum.simple_indices if not vector_is_positive(_apply(w.matrix, self._simple_vectors[i]))
            )
            self._descents[w] = hit
        return hit

    def is_ascent(self, w: GroupElement, index: int) -> bool:
        return index not in self.right_descents(w)

    # Bruhat order

    def subword_closure(self, word: Sequence[int]) -> FrozenSet[GroupElement]:
        """All ev(sigma) for subsequences sigma of ``word``."""
        reached: Set[GroupElement] = {self.identity}
        for letter in word:
            reached |= {self.right_mul(x, letter) for x in reached}
        return frozenset(reached)

    def bruhat_interval(self, w: GroupElement) -> FrozenSet[GroupElement]:
        hit = self._intervals.get(w)
        if hit is None:
            hit = self.subword_closure(w.word)
            self._intervals[w] = hit
        return hit

    def bruhat_leq(self, x: GroupElement, w: GroupElement) -> bool:
        if x.length > w.length:
            return False
        if x.length == w.length:
            return x == w
        return x in self.bruhat_interval(w)

    def left_inversions(self, x: GroupElement) -> List[AffineRoot]:
        """
        Positive roots beta with s_beta x < x, in the order of the canonical word.

        For x = s_1 ... s_m the k-th root is s_1 ... s_{k-1}(alpha_k); deleting the k-th
        letter of the word gives s_beta x.
        """
        roots = []
        prefix = self.identity
        for letter in x.word:
            roots.append(self.act_simple(prefix, letter).positive())
            prefix = self.right_mul(prefix, letter)
        return roots

    def delete_letter(self, x: GroupElement, position: int) -> GroupElement:
        """ev of the canonical word of x with one letter removed."""
        word = x.word
        return self.ev_word(word[:position] + word[position + 1 :])

    # finite groups

    def longest_element(self) -> GroupElement:
        if self.datum.affine:
            raise ValueError("An affine Weyl group has no longest element")
        w = self.identity
        while True:
            ascent = next((i for i in self.datum.simple_indices if self.is_ascent(w, i)), None)
            if ascent is None:
                return w
            w = self.right_mul(w, ascent)

    def all_elements(self) -> List[GroupElement]:
        """Every element of a finite Weyl group, sorted by length then canonical word."""
        if self.datum.affine:
            raise ValueError("Refusing to enumerate an infinite affine Weyl group")
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for i in self.datum.simple_indices:
                y = self.right_mul(x, i)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted_elements(seen)


def sorted_elements(elements: Iterable[GroupElement]) -> List[GroupElement]:
    return sorted(elements, key=lambda g: g.sort_key)


def parse_word(text: str) -> Word:
    """
    Parse CLI word syntax such as ``"1,2,1"``; ``""`` and ``"e"`` denote the empty word.

    Raises:
        ValueError: If an entry is not a nonnegative integer.
    """
    text = text.strip()
    if text in ("", "e"):
        return ()
    try:
        letters = tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise ValueError(f"Invalid word {text!r}, expected comma separated indices") from e
    if any(i < 0 for i in letters):
        raise ValueError(f"Invalid word {text!r}, indices must be nonnegative")
    return letters
