from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from bottsamelson.constants import AFFINE_INDEX, EXCEPTIONAL_RANKS, SUPPORTED_TYPES
from bottsamelson.exceptions import UnsupportedType
from bottsamelson.model.AffineRoot import AffineRoot
from bottsamelson.model.CartanDatum import CartanDatum

Vector = Tuple[int, ...]


def _dynkin_edges(type_label: str, rank: int) -> List[Tuple[int, int, int, int]]:
    """
    Edges (i, j, a_ij, a_ji) of the Dynkin diagram in Bourbaki numbering, zero based.
    """
    chain = [(i, i + 1, -1, -1) for i in range(rank - 1)]
    if type_label == "A":
        return chain
    if type_label == "B":
        return chain[:-1] + [(rank - 2, rank - 1, -1, -2)]
    if type_label == "C":
        return chain[:-1] + [(rank - 2, rank - 1, -2, -1)]
    if type_label == "D":
        return chain[:-1] + [(rank - 3, rank - 1, -1, -1)]
    if type_label == "E":
        edges = [(0, 2, -1, -1), (1, 3, -1, -1)]
        edges += [(i, i + 1, -1, -1) for i in range(2, rank - 1)]
        return edges
    if type_label == "F":
        return [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]
    if type_label == "G":
        return [(0, 1, -3, -1)]
    raise UnsupportedType(f"Unknown Cartan type {type_label}")


def build_cartan(type_label: str, rank: int, affine: bool = False) -> CartanDatum:
    """
    Tabulate the Cartan matrix of a finite irreducible type.

    Args:
        type_label (str): Cartan type letter.
        rank (int): Rank of the finite root system.
        affine (bool): Whether the datum describes the affine Weyl group.

    Returns:
        CartanDatum: The datum.

    Raises:
        UnsupportedType: If the (type, rank) pair does not name a root system.
    """
    type_label = type_label.upper()
    if type_label not in SUPPORTED_TYPES:
        raise UnsupportedType(f"Unsupported Cartan type {type_label!r}")
    if rank < SUPPORTED_TYPES[type_label]:
        raise UnsupportedType(f"Type {type_label} needs rank >= {SUPPORTED_TYPES[type_label]}, got {rank}")
    if type_label in EXCEPTIONAL_RANKS and rank not in EXCEPTIONAL_RANKS[type_label]:
        raise UnsupportedType(f"Type {type_label} exists only in ranks {EXCEPTIONAL_RANKS[type_label]}")

    matrix = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, a_ij, a_ji in _dynkin_edges(type_label, rank):
        matrix[i][j] = a_ij
        matrix[j][i] = a_ji
    return CartanDatum(type_label, rank, tuple(tuple(row) for row in matrix), affine)


@lru_cache(maxsize=None)
def symmetrizer(datum: CartanDatum) -> Tuple[Fraction, ...]:
    """
    Half squared lengths eps_i of the simple roots, normalised so eps_0 = 1.

    They satisfy eps_i * a_ij = eps_j * a_ji and are found by walking the Dynkin graph.
    """
    eps: Dict[int, Fraction] = {0: Fraction(1)}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(datum.rank):
            a_ij, a_ji = datum.cartan[i][j], datum.cartan[j][i]
            if i != j and a_ij != 0 and j not in eps:
                eps[j] = eps[i] * a_ij / a_ji
                queue.append(j)
    return tuple(eps[i] for i in range(datum.rank))


def inner_product(datum: CartanDatum, beta: Sequence[int], gamma: Sequence[int]) -> Fraction:
    """Invariant form on finite parts given in the simple-root basis."""
    eps = symmetrizer(datum)
    total = Fraction(0)
    for i, b in enumerate(beta):
        for j, c in enumerate(gamma):
            if b and c:
                total += b * c * eps[i] * datum.cartan[i][j]
    return total


def coroot_pairing(datum: CartanDatum, beta: Sequence[int], alpha: Sequence[int]) -> int:
    """<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha) for a finite root alpha."""
    value = 2 * inner_product(datum, beta, alpha) / inner_product(datum, alpha, alpha)
    if value.denominator != 1:
        raise ValueError(f"Pairing of {list(beta)} with the coroot of {list(alpha)} is not integral")
    return value.numerator


def weight_coordinates(datum: CartanDatum, finite: Sequence[int], level: int = 0) -> Vector:
    """Fundamental-weight coordinates of the finite part, then the delta coordinate."""
    return tuple(sum(datum.cartan[i][j] * c for j, c in enumerate(finite)) for i in range(datum.rank)) + (level,)


def make_root(datum: CartanDatum, finite: Sequence[int], level: int = 0, check: bool = True) -> AffineRoot:
    """
    Build an affine root with its weight coordinates.

    Raises:
        ValueError: If ``check`` is set and the finite part is not a root.
    """
    finite = tuple(int(c) for c in finite)
    if check and finite not in all_roots(datum):
        raise ValueError(f"{list(finite)} is not a root of {datum.name}")
    return AffineRoot(finite, level, weight_coordinates(datum, finite, level))


def _unit(rank: int, i: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(rank))


@lru_cache(maxsize=None)
def all_roots(datum: CartanDatum) -> FrozenSet[Vector]:
    """All finite roots, obtained as the Weyl orbit of the simple roots."""
    seen = {_unit(datum.rank, i) for i in range(datum.rank)}
    queue = deque(seen)
    while queue:
        beta = queue.popleft()
        for i in range(datum.rank):
            k = sum(datum.cartan[i][j] * c for j, c in enumerate(beta))
            image = tuple(c - k if j == i else c for j, c in enumerate(beta))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return frozenset(seen)


def positive_roots(datum: CartanDatum) -> List[AffineRoot]:
    """Positive finite roots ordered by height, then coordinates."""
    pos = [beta for beta in all_roots(datum) if all(c >= 0 for c in beta)]
    pos.sort(key=lambda b: (sum(b), tuple(-c for c in b)))
    return [make_root(datum, beta, check=False) for beta in pos]


def highest_root(datum: CartanDatum) -> AffineRoot:
    return max(positive_roots(datum), key=lambda b: sum(b.finite))


def pairing_prime(datum: CartanDatum, beta: AffineRoot, alpha: AffineRoot) -> int:
    """The pairing of finite parts <{beta}, {alpha}^vee>; levels are discarded."""
    return coroot_pairing(datum, beta.finite, alpha.finite)


def reflect(datum: CartanDatum, beta: AffineRoot, alpha: AffineRoot) -> AffineRoot:
    """
    Apply s_alpha(beta) = beta - <beta, alpha>' alpha, levels transforming linearly.
    """
    k = pairing_prime(datum, beta, alpha)
    finite = tuple(b - k * a for b, a in zip(beta.finite, alpha.finite))
    return make_root(datum, finite, beta.level - k * alpha.level, check=False)


def simple_root(datum: CartanDatum, index: int) -> AffineRoot:
    """
    The simple root with word index ``index``: 1..r finite, 0 the affine root (-highest, 1).
    """
    if index == AFFINE_INDEX:
        if not datum.affine:
            raise ValueError(f"Index 0 needs an affine datum, {datum.name} is finite")
        return make_root(datum, tuple(-c for c in highest_root(datum).finite), 1)
    if not 1 <= index <= datum.rank:
        raise ValueError(f"Simple index {index} out of range for {datum.name}")
    return make_root(datum, _unit(datum.rank, index - 1), check=False)


def affine_simple_system(datum: CartanDatum) -> List[AffineRoot]:
    """Finite simple roots at level 0, followed by (-highest root, 1) for affine data."""
    roots = [simple_root(datum, i) for i in range(1, datum.rank + 1)]
    if datum.affine:
        roots.append(simple_root(datum, AFFINE_INDEX))
    return roots


def is_positive(beta: AffineRoot) -> bool:
    return beta.is_positive()


def format_root(beta: AffineRoot) -> str:
    return str(beta)
