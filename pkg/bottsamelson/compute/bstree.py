from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from bottsamelson.compute.exactalg import divide_exact_by_linear
from bottsamelson.compute.weyl import CoxeterContext, Subsequence
from bottsamelson.constants import COLOR_DOWN, COLOR_STAY, COLOR_UP, TILT_LEFT, TILT_RIGHT, TILT_VERTICAL
from bottsamelson.exceptions import InternalInvariant, NonGKMInput, NotDivisible
from bottsamelson.model.AffineRoot import AffineRoot
from bottsamelson.model.Field import Field
from bottsamelson.model.GradedMatrix import GradedMatrix
from bottsamelson.model.GroupElement import GroupElement, Word
from bottsamelson.model.LaurentPoly import LaurentPoly
from bottsamelson.model.MultiPoly import MultiPoly
from bottsamelson.model.SubwordTree import SubwordTree, TreeEdge, TreePath, TreeVertex


def subword_fibers(ctx: CoxeterContext, word: Sequence[int]) -> Dict[GroupElement, List[Subsequence]]:
    """
    Group all 2^l subsequences of ``word`` by the element they evaluate to.

    Built letter by letter: the fiber over z of s = (s', t) is the fiber of s' over z
    with a blank appended, followed by the fiber of s' over zt with t appended.

    Args:
        ctx (CoxeterContext): Group context.
        word (Sequence[int]): The sequence s.

    Returns:
        Dict[GroupElement, List[Subsequence]]: The fibers I(s)_x, keyed by x in J(s).
    """
    fibers: Dict[GroupElement, List[Subsequence]] = {ctx.identity: [()]}
    for letter in word:
        nxt: Dict[GroupElement, List[Subsequence]] = {}
        for z, subs in fibers.items():
            nxt.setdefault(z, []).extend(sub + (None,) for sub in subs)
        for z, subs in fibers.items():
            nxt.setdefault(ctx.right_mul(z, letter), []).extend(sub + (letter,) for sub in subs)
        fibers = nxt
    return fibers


def _closures(ctx: CoxeterContext, word: Sequence[int]) -> List[frozenset]:
    """J of every prefix of ``word``, index k holding J(word[:k])."""
    sets = [frozenset([ctx.identity])]
    for letter in word:
        prev = sets[-1]
        sets.append(prev | frozenset(ctx.right_mul(x, letter) for x in prev))
    return sets


class _TreeBuilder:
    def __init__(self, ctx: CoxeterContext, word: Word):
        self.ctx = ctx
        self.word = word
        self.closures = _closures(ctx, word)
        self.vertices: List[TreeVertex] = []
        self.edges: List[TreeEdge] = []

    def _vertex(self, level: int, ev: GroupElement, children: Tuple[int, ...]) -> int:
        vertex_id = len(self.vertices)
        self.vertices.append(TreeVertex(vertex_id, level, ev, children))
        return vertex_id

    def _edge(self, child: int, parent: int, level: int, color: int, tilt: str) -> None:
        letter = self.word[level - 1]
        start = self.ctx.act_simple(self.vertices[child].ev, letter)
        self.edges.append(TreeEdge(child, parent, level, letter, color, tilt, start))

    def build(self, k: int, x: GroupElement) -> Optional[int]:
        if k == 0:
            return self._vertex(0, x, ()) if x.is_identity else None

        xs = self.ctx.right_mul(x, self.word[k - 1])
        y, z = (xs, x) if xs.length < x.length else (x, xs)
        below = self.closures[k - 1]
        y_in, z_in = y in below, z in below

        if y_in and z_in:
            left = self.build(k - 1, y)
            right = self.build(k - 1, z)
            if left is None or right is None:
                raise InternalInvariant(f"Nonempty fiber produced an empty subtree at level {k - 1}")
            parent = self._vertex(k, x, (left, right))
            left_color, right_color = (COLOR_UP, COLOR_STAY) if x == z else (COLOR_STAY, COLOR_DOWN)
            self._edge(left, parent, k, left_color, TILT_RIGHT)
            self._edge(right, parent, k, right_color, TILT_LEFT)
            return parent

        if z_in:
            raise InternalInvariant(
                f"Fiber over the larger element {z.word_str or 'e'} is nonempty at level {k - 1} "
                f"while the smaller {y.word_str or 'e'} is empty"
            )
        if not y_in:
            return None

        child = self.build(k - 1, y)
        if child is None:
            raise InternalInvariant(f"Nonempty fiber produced an empty subtree at level {k - 1}")
        parent = self._vertex(k, x, (child,))
        self._edge(child, parent, k, COLOR_STAY if x == y else COLOR_UP, TILT_VERTICAL)
        return parent


def build_tree(ctx: CoxeterContext, word: Sequence[int], x: GroupElement) -> SubwordTree:
    """
    Build the tree T(s, x).

    Writing {x, x s_l} = {y, z} with y < z, the root has the subtree T(s', y) on the left
    (right tilted edge) and T(s', z) on the right (left tilted edge) whenever both fibers
    are nonempty. Edge colors record whether the last letter is used and in which
    direction it moves the length. When only one fiber is nonempty it must be the one
    over y, joined by a vertical edge.

    Args:
        ctx (CoxeterContext): Group context.
        word (Sequence[int]): The sequence s.
        x (GroupElement): Target element.

    Returns:
        SubwordTree: The tree; empty when no subsequence evaluates to x.

    Raises:
        InternalInvariant: If the fiber over z is nonempty while the fiber over y is empty.
    """
    word = tuple(word)
    builder = _TreeBuilder(ctx, word)
    root = builder.build(len(word), x) if x in builder.closures[-1] else None
    return SubwordTree(word, x, tuple(builder.vertices), tuple(builder.edges), root)


def maximal_paths(tree: SubwordTree) -> List[TreePath]:
    return tree.maximal_paths()


def path_degree(path: TreePath) -> int:
    """Twice the number of left tilted edges."""
    return path.degree


def graded_rank(ctx: CoxeterContext, word: Sequence[int], x: GroupElement) -> LaurentPoly:
    """Sum of v^-deg over the maximal paths of T(s, x)."""
    coeffs: Dict[int, int] = {}
    for path in build_tree(ctx, word, x).maximal_paths():
        coeffs[-path.degree] = coeffs.get(-path.degree, 0) + 1
    return LaurentPoly.from_dict(coeffs)


def root_image(field: Field, root: AffineRoot) -> MultiPoly:
    """Linear form of a root over the field; may be zero in positive characteristic."""
    return MultiPoly.linear_form(field, root.weights)


def e_matrix(tree: SubwordTree, field: Field) -> GradedMatrix:
    """
    The path product matrix E(s, x).

    Entry (i, j) is the product, over the levels where the i-th path has a left tilted
    edge, of half the sum of the start images of both paths' edges at that level. Two
    paths that meet at a vertex share every edge above it, so the factors from the
    meeting level up are read from a precomputed product along the shared part.

    Args:
        tree (SubwordTree): A nonempty tree.
        field (Field): Field of characteristic other than 2.

    Returns:
        GradedMatrix: Square matrix indexed by the maximal paths, left to right. Row i
            carries minus the degree of the i-th path and every column degree 0.
    """
    nvars = len(tree.x.matrix)
    one = MultiPoly.one(field, nvars)
    half = field.inv(2)
    paths = tree.maximal_paths()
    above = tree.edge_above()

    shared: Dict[int, MultiPoly] = {}
    for edge in sorted(tree.edges, key=lambda e: -e.level):
        upper = shared[above[edge.parent].child] if edge.parent in above else one
        shared[edge.child] = root_image(field, edge.start_root) * upper if edge.left_tilted else upper

    rows = []
    for pi in paths:
        row = []
        for rho in paths:
            value = one
            meet = len(pi.edges)
            for level, (a, b) in enumerate(zip(pi.edges, rho.edges)):
                if a.child == b.child:
                    meet = level
                    break
                if a.left_tilted:
                    pair = root_image(field, a.start_root) + root_image(field, b.start_root)
                    value = value * pair.scale(half)
            if meet < len(pi.edges):
                value = value * shared[pi.edges[meet].child]
            row.append(value)
        rows.append(tuple(row))

    # entries of row i have the degree of the i-th path
    return GradedMatrix(field, tuple(rows), tuple(-p.degree for p in paths), (0,) * len(paths))


def q_value(path: TreePath, field: Field, nvars: int) -> MultiPoly:
    q = MultiPoly.one(field, nvars)
    for edge in path.edges:
        end = root_image(field, edge.end_root)
        if edge.color == COLOR_STAY:
            q = q * end
        elif edge.color == COLOR_DOWN:
            q = -(q * end * end)
    return q


def q_values(tree: SubwordTree, field: Field) -> List[MultiPoly]:
    """Diagonal of Q(s, x): color 1 keeps Q, color 0 multiplies by the end image, color -1 by minus its square."""
    nvars = len(tree.x.matrix)
    return [q_value(p, field, nvars) for p in tree.maximal_paths()]


def p_value(path: TreePath, field: Field, nvars: int) -> MultiPoly:
    """Product of the end images of all edges of the path."""
    p = MultiPoly.one(field, nvars)
    for edge in path.edges:
        p = p * root_image(field, edge.end_root)
    return p


def d_value(path: TreePath, field: Field, nvars: int) -> MultiPoly:
    """
    D of a path: color 1 multiplies by the end image, color 0 keeps D, color -1 divides
    by minus the end image.

    Raises:
        NonGKMInput: If an image to divide by vanishes over the field.
        InternalInvariant: If a division is not exact.
    """
    d = MultiPoly.one(field, nvars)
    for edge in path.edges:
        end = root_image(field, edge.end_root)
        if edge.color == COLOR_UP:
            d = d * end
        elif edge.color == COLOR_DOWN:
            if end.is_zero():
                raise NonGKMInput(f"Root {edge.end_root} vanishes over {field}")
            try:
                d = -divide_exact_by_linear(d, end)
            except NotDivisible as e:
                raise InternalInvariant(f"D recursion left a remainder at level {edge.level}") from e
    return d


def tree_to_graph(tree: SubwordTree) -> nx.DiGraph:
    return tree.to_graph()


def tree_to_dot(tree: SubwordTree) -> str:
    """DOT text for a tree, rendered through pydot."""
    return str(nx.nx_pydot.to_pydot(tree.to_graph()).to_string())
