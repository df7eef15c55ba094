import logging
from typing import Dict, List, Optional, Sequence, Tuple

from bottsamelson.compute.bstree import build_tree, e_matrix, graded_rank, q_values, root_image
from bottsamelson.compute.exactalg import divide_exact_by_linear, rank_over_field
from bottsamelson.compute.hecke import KLTable, kl_element
from bottsamelson.compute.momentgraph import build_lower_set_graph, require_gkm
from bottsamelson.compute.weyl import CoxeterContext, sorted_elements
from bottsamelson.exceptions import InternalInvariant, NonGKMInput, NotApplicable, NotDivisible, NotReduced, ZeroLabel
from bottsamelson.model.Decomposition import CharacterReport, Decomposition
from bottsamelson.model.Field import Field
from bottsamelson.model.GradedMatrix import GradedMatrix
from bottsamelson.model.GroupElement import GroupElement
from bottsamelson.model.LaurentPoly import LaurentPoly
from bottsamelson.model.MultiPoly import MultiPoly
from bottsamelson.model.SubwordTree import SubwordTree

# Memo of Braden-MacPherson graded ranks: w -> (x -> grk B(w)^x)
CharacterCache = Dict[GroupElement, Dict[GroupElement, LaurentPoly]]


def check_gkm_on_word(ctx: CoxeterContext, word: Sequence[int], field: Field) -> None:
    """
    Require the GKM property on the moment graph over J(s).

    Raises:
        NonGKMInput: If two labels at a vertex are proportional or a label vanishes.
    """
    try:
        graph = build_lower_set_graph(ctx, ctx.subword_closure(word), field)
    except ZeroLabel as e:
        raise NonGKMInput(str(e)) from e
    require_gkm(graph)


class _PhiSolver:
    """
    Fraction-free entries of Phi(s, x) = (E^-1)^T Q E^-1 for one tree.

    With e_k the diagonal of E, E^-1 has entries Y_ij / (e_i ... e_j) for the polynomial
    matrix Y, so Phi_ij = N_ij / (e_1 ... e_i * e_1 ... e_j) where
    N_ij = sum_k Y_ki Y_kj Q_k (e_1 ... e_{k-1})^2. Every e_k is a product of linear
    forms and the denominator is removed one linear factor at a time.
    """

    def __init__(self, tree: SubwordTree, field: Field):
        self.field = field
        self.paths = tree.maximal_paths()
        self.n = len(self.paths)
        self.e = e_matrix(tree, field)
        self.q = q_values(tree, field)
        nvars = len(tree.x.matrix)
        self.one = MultiPoly.one(field, nvars)

        self.factors: List[List[MultiPoly]] = []
        for path in self.paths:
            linear = [root_image(field, edge.start_root) for edge in path.edges if edge.left_tilted]
            if any(f.is_zero() for f in linear):
                raise NonGKMInput(f"A diagonal factor of E vanishes over {field}")
            self.factors.append(linear)

        self.prefix = [self.one]
        for k in range(self.n - 1):
            self.prefix.append(self.prefix[-1] * self.e.entry(k, k))
        self.y = self._adjugate_part()
        self.d = tuple(p.degree for p in self.paths)
        self.k = tuple(2 * (len(tree.word) - tree.x.length) - deg for deg in self.d)

    def _adjugate_part(self) -> List[List[MultiPoly]]:
        n, e = self.n, self.e
        zero = MultiPoly.zero(self.field, self.one.nvars)
        y = [[zero] * n for _ in range(n)]
        for j in range(n):
            y[j][j] = self.one
            for i in range(j - 1, -1, -1):
                total = zero
                between = self.one
                for k in range(i + 1, j + 1):
                    if not e.entry(i, k).is_zero() and not y[k][j].is_zero():
                        total = total + e.entry(i, k) * y[k][j] * between
                    between = between * e.entry(k, k)
                y[i][j] = -total
        return y

    def entry(self, i: int, j: int) -> MultiPoly:
        total = MultiPoly.zero(self.field, self.one.nvars)
        for k in range(min(i, j) + 1):
            if self.y[k][i].is_zero() or self.y[k][j].is_zero():
                continue
            total = total + self.y[k][i] * self.y[k][j] * self.q[k] * self.prefix[k] * self.prefix[k]
        for m in list(range(i + 1)) + list(range(j + 1)):
            for linear in self.factors[m]:
                try:
                    total = divide_exact_by_linear(total, linear)
                except NotDivisible as e:
                    raise InternalInvariant(f"Phi entry ({i},{j}) is not a polynomial") from e
        return total


def phi_matrix(ctx: CoxeterContext, word: Sequence[int], x: GroupElement, field: Field, check_gkm: bool = True) -> GradedMatrix:
    """
    The transition matrix Phi(s, x), rows graded by stalk degrees and columns by kernel degrees.

    Args:
        ctx (CoxeterContext): Group context.
        word (Sequence[int]): The sequence s.
        x (GroupElement): Element of J(s).
        field (Field): Field of characteristic other than 2.
        check_gkm (bool): Verify the GKM property on J(s) first.

    Returns:
        GradedMatrix: Symmetric, homogeneous polynomial matrix; empty when x is not in J(s).

    Raises:
        NonGKMInput: If the GKM property fails over the field.
        InternalInvariant: If a division is inexact or the result breaks symmetry or homogeneity.
    """
    if check_gkm:
        check_gkm_on_word(ctx, word, field)
    tree = build_tree(ctx, word, x)
    if tree.is_empty:
        return GradedMatrix(field, (), (), ())
    solver = _PhiSolver(tree, field)
    rows = [[solver.entry(i, j) for j in range(solver.n)] for i in range(solver.n)]
    phi = GradedMatrix(field, tuple(tuple(r) for r in rows), solver.d, solver.k)
    if not phi.is_symmetric():
        raise InternalInvariant(f"Phi for x = {x.word_str or 'e'} is not symmetric")
    phi.check_homogeneity()
    return phi


def defect_at(ctx: CoxeterContext, word: Sequence[int], x: GroupElement, field: Field, check_gkm: bool = True) -> LaurentPoly:
    """
    Defect of the restriction map at x: the sum over n of rank(A_n) v^-n.

    A_n is the block of Phi(s, x) with stalk degree n on the rows and kernel degree n on
    the columns. Only the entries of these blocks are computed.

    Raises:
        NonGKMInput: If the GKM property fails over the field.
        InternalInvariant: If a block entry is not a constant.
    """
    if check_gkm:
        check_gkm_on_word(ctx, word, field)
    tree = build_tree(ctx, word, x)
    if tree.is_empty:
        return LaurentPoly.zero()

    paths = tree.maximal_paths()
    d = [p.degree for p in paths]
    k = [2 * (len(word) - x.length) - deg for deg in d]
    blocks: Dict[int, Tuple[List[int], List[int]]] = {}
    for n in sorted(set(d) & set(k)):
        blocks[n] = ([i for i, deg in enumerate(d) if deg == n], [j for j, deg in enumerate(k) if deg == n])
    if not blocks:
        return LaurentPoly.zero()

    solver = _PhiSolver(tree, field)
    coeffs: Dict[int, int] = {}
    for n, (rows, cols) in blocks.items():
        entries = [[solver.entry(i, j) for j in cols] for i in rows]
        block = GradedMatrix(field, tuple(tuple(r) for r in entries), (0,) * len(rows), (0,) * len(cols))
        coeffs[-n] = rank_over_field(field, block.scalar_block(range(len(rows)), range(len(cols))))
    return LaurentPoly.from_dict(coeffs)


def decompose(
    ctx: CoxeterContext,
    word: Sequence[int],
    field: Field,
    allow_nonreduced: bool = False,
    check_gkm: bool = True,
    logger: Optional[logging.Logger] = None,
) -> Decomposition:
    """
    Decompose B(s) into shifted indecomposables B(z)<r>.

    The multiplicity of B(z)<r> is the coefficient of v^r in the defect at z. Elements are
    visited by decreasing length, so the top summand comes first.

    Args:
        ctx (CoxeterContext): Group context.
        word (Sequence[int]): The sequence s.
        field (Field): Coefficient field.
        allow_nonreduced (bool): Accept non-reduced words in positive characteristic.
        check_gkm (bool): Verify the GKM property on J(s) first.
        logger (Optional[logging.Logger]): Logger for progress messages.

    Returns:
        Decomposition: The summands with multiplicities.

    Raises:
        NotReduced: For a non-reduced word in positive characteristic without ``allow_nonreduced``.
        NonGKMInput: If the GKM property fails over the field.
    """
    logger = logger or logging.Logger("default")
    word = tuple(word)
    experimental = False
    if ctx.ev_word(word).length != len(word) and not field.is_rational:
        if not allow_nonreduced:
            raise NotReduced(f"Word {list(word)} is not reduced; pass allow_nonreduced to decompose it over {field}")
        logger.warning(f"Decomposing the non-reduced word {list(word)} over {field}, results are experimental")
        experimental = True

    if check_gkm:
        check_gkm_on_word(ctx, word, field)
    logger.info(f"Decomposing B({list(word)}) over {field}")

    mults: Dict[Tuple[GroupElement, int], int] = {}
    for x in reversed(sorted_elements(ctx.subword_closure(word))):
        defect = defect_at(ctx, word, x, field, check_gkm=False)
        for exponent, c in defect.terms:
            mults[(x, exponent)] = c
        logger.debug(f"Defect at {x.word_str or 'e'}: {defect}")
    return Decomposition.from_multiplicities(mults, experimental)


def bm_character(
    ctx: CoxeterContext,
    w: GroupElement,
    field: Field,
    cache: Optional[CharacterCache] = None,
    check_gkm: bool = True,
    logger: Optional[logging.Logger] = None,
) -> Dict[GroupElement, LaurentPoly]:
    """
    Graded ranks of the stalks of the Braden-MacPherson sheaf B(w).

    With s the canonical word of w, the stalks of B(s) at x minus the shifted stalks of
    every other summand B(z)<r> give those of B(w). Lower characters are memoised.

    Args:
        ctx (CoxeterContext): Group context.
        w (GroupElement): Element.
        field (Field): Coefficient field.
        cache (Optional[CharacterCache]): Memo shared across calls.
        check_gkm (bool): Verify the GKM property below w first.
        logger (Optional[logging.Logger]): Logger for progress messages.

    Returns:
        Dict[GroupElement, LaurentPoly]: x -> grk B(w)^x for x <= w, zero entries omitted.

    Raises:
        NonGKMInput: If the GKM property fails over the field.
    """
    logger = logger or logging.Logger("default")
    if cache is None:
        cache = {}
    if check_gkm:
        check_gkm_on_word(ctx, w.word, field)
    return _bm_character(ctx, w, field, cache, logger)


def _bm_character(
    ctx: CoxeterContext, w: GroupElement, field: Field, cache: CharacterCache, logger: logging.Logger
) -> Dict[GroupElement, LaurentPoly]:
    hit = cache.get(w)
    if hit is not None:
        return hit

    decomposition = decompose(ctx, w.word, field, check_gkm=False, logger=logger)
    if decomposition.multiplicity(w, 0) != 1:
        raise InternalInvariant(f"B({w.word_str}) does not contain B(w) exactly once")

    character: Dict[GroupElement, LaurentPoly] = {}
    for x in ctx.bruhat_interval(w):
        character[x] = graded_rank(ctx, w.word, x)
    for summand in decomposition.summands:
        if summand.z == w:
            continue
        shift = LaurentPoly.monomial(summand.r, summand.mult)
        for x, grk in _bm_character(ctx, summand.z, field, cache, logger).items():
            character[x] = character[x] - grk * shift

    result = {x: c for x, c in character.items() if not c.is_zero()}
    cache[w] = result
    logger.debug(f"Character of B({w.word_str or 'e'}) over {field} computed on {len(result)} stalks")
    return result


def character_conjecture_holds(
    ctx: CoxeterContext,
    w: GroupElement,
    field: Field,
    cache: Optional[CharacterCache] = None,
    table: Optional[KLTable] = None,
    logger: Optional[logging.Logger] = None,
) -> CharacterReport:
    """
    Compare v^l(w) sum_x v^-l(x) grk B(w)^x H_x with the Kazhdan-Lusztig element of w.

    Raises:
        NonGKMInput: If the GKM property fails over the field below w.
    """
    character = bm_character(ctx, w, field, cache, logger=logger)
    kl = kl_element(ctx, w, table)
    mismatches = []
    for x in sorted_elements(ctx.bruhat_interval(w)):
        ours = character.get(x, LaurentPoly.zero()).shift(w.length - x.length)
        if ours != kl.coefficient(x):
            mismatches.append(x)
    return CharacterReport(w, field.characteristic, character, mismatches)


def _require_reduced(ctx: CoxeterContext, word: Sequence[int]) -> GroupElement:
    w = ctx.ev_word(word)
    if w.length != len(word):
        raise NotReduced(f"Word {list(word)} is not reduced")
    return w


def low_rank_defect(ctx: CoxeterContext, word: Sequence[int], x: GroupElement) -> LaurentPoly:
    """
    Closed-form defect for fibers with two or three subsequences.

    The defect is v^-2, resp. 2v^-2, when l(x) = l(s) - 2 and zero otherwise.

    Raises:
        NotReduced: If the word is not reduced.
        NotApplicable: If the fiber over x does not have size 2 or 3.
    """
    _require_reduced(ctx, word)
    size = len(build_tree(ctx, word, x).maximal_paths())
    if size not in (2, 3):
        raise NotApplicable(f"Fiber over {x.word_str or 'e'} has {size} elements, closed form needs 2 or 3")
    if x.length != len(word) - 2:
        return LaurentPoly.zero()
    return LaurentPoly.monomial(-2, size - 1)


def low_rank_decompose(ctx: CoxeterContext, word: Sequence[int]) -> Decomposition:
    """
    Decomposition of B(s) for a reduced word whose fibers below the top have at most three elements.

    Raises:
        NotReduced: If the word is not reduced.
        NotApplicable: If some fiber has more than three elements.
    """
    w = _require_reduced(ctx, word)
    mults: Dict[Tuple[GroupElement, int], int] = {(w, 0): 1}
    for x in ctx.subword_closure(word):
        if x == w:
            continue
        size = len(build_tree(ctx, word, x).maximal_paths())
        if size == 1:
            continue
        for exponent, c in low_rank_defect(ctx, word, x).terms:
            mults[(x, exponent)] = c
    return Decomposition.from_multiplicities(mults)

