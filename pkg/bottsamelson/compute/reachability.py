import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Mapping, MutableMapping, Optional

from bottsamelson.compute.hecke import mult_by_Hs_bar
from bottsamelson.compute.rootsys import build_cartan
from bottsamelson.compute.weyl import CoxeterContext
from bottsamelson.model.CartanDatum import CartanDatum
from bottsamelson.model.GroupElement import GroupElement
from bottsamelson.model.HeckeElement import HeckeElement
from bottsamelson.model.LaurentPoly import LaurentPoly


class ReachabilitySolver:
    """
    Decide n-reachability of group elements.

    w is n-reachable when w = e, or when some reduced expression of w gives a product
    (H_s1 + v) ... (H_sl + v) whose coefficient f at every x < w lies in vZ[v], or has
    f(1) <= n with x itself n-reachable. Reduced expressions are walked as a prefix tree
    so partial products are shared, and the search stops at the first expression that works.

    Attributes:
        ctx (CoxeterContext): Group context.
        n (int): The bound on f(1).
        prune (bool): Abandon prefixes that can no longer succeed.
        memo (MutableMapping[GroupElement, bool]): Known answers, extended by ``is_reachable``.
    """

    def __init__(
        self,
        ctx: CoxeterContext,
        n: int,
        prune: bool = True,
        memo: Optional[MutableMapping[GroupElement, bool]] = None,
        logger: Optional[logging.Logger] = None,
    ):
        if n < 1:
            raise ValueError(f"Reachability bound must be at least 1, got {n}")
        self.ctx = ctx
        self.n = n
        self.prune = prune
        self.memo: MutableMapping[GroupElement, bool] = memo if memo is not None else {}
        self.logger = logger or logging.Logger("default")

    def is_reachable(self, w: GroupElement) -> bool:
        hit = self.memo.get(w)
        if hit is None:
            hit = self.search(w)
            self.memo[w] = hit
        return hit

    def search(self, w: GroupElement) -> bool:
        """Run the search for w without recording the answer."""
        if w.is_identity:
            return True
        w_inv = self.ctx.inverse(w)
        return self._extend(self.ctx.identity, HeckeElement.basis(self.ctx.identity), w_inv)

    def _coefficient_ok(self, x: GroupElement, f: LaurentPoly) -> bool:
        if f.valuation() >= 1:
            return True
        return f.evaluate() <= self.n and self.is_reachable(x)

    def _doomed(self, u: GroupElement, h: HeckeElement, rest_inv: GroupElement) -> bool:
        # every remaining factor has nonnegative coefficients and taking all remaining
        # letters sends H_a to H_{a rest} with coefficient 1
        rest = self.ctx.inverse(rest_inv)
        for a, c in h.terms:
            if a == u or c.valuation() > 0:
                continue
            if c.evaluate() > self.n or not self.is_reachable(self.ctx.mul(a, rest)):
                return True
        return False

    def _extend(self, u: GroupElement, h: HeckeElement, rest_inv: GroupElement) -> bool:
        if rest_inv.is_identity:
            return all(self._coefficient_ok(x, f) for x, f in h.terms if x != u)
        if self.prune and not u.is_identity and self._doomed(u, h, rest_inv):
            return False
        for s in sorted(self.ctx.right_descents(rest_inv)):
            if self._extend(self.ctx.right_mul(u, s), mult_by_Hs_bar(self.ctx, h, s), self.ctx.right_mul(rest_inv, s)):
                return True
        return False


def reachable(
    ctx: CoxeterContext,
    w: GroupElement,
    n: int,
    memo: Optional[MutableMapping[GroupElement, bool]] = None,
    prune: bool = True,
    logger: Optional[logging.Logger] = None,
) -> bool:
    """
    Whether w is n-reachable.

    Args:
        ctx (CoxeterContext): Group context.
        w (GroupElement): Element.
        n (int): Bound on f(1), at least 1.
        memo (Optional[MutableMapping[GroupElement, bool]]): Answers shared across calls.
        prune (bool): Abandon prefixes that cannot succeed.
        logger (Optional[logging.Logger]): Logger for progress messages.

    Returns:
        bool: The answer.
    """
    return ReachabilitySolver(ctx, n, prune, memo, logger).is_reachable(w)


def census(
    type_label: str,
    rank: int,
    n: int,
    threads: int = 1,
    prune: bool = True,
    logger: Optional[logging.Logger] = None,
) -> int:
    """
    Count the n-reachable elements of a finite Weyl group.

    Elements are processed one length layer at a time. With ``threads`` above one, each
    layer runs on a thread pool; every worker thread owns a CoxeterContext and reads the
    answers for shorter elements from a snapshot taken before the layer started.

    Args:
        type_label (str): Cartan type.
        rank (int): Rank.
        n (int): Bound on f(1), at least 1.
        threads (int): Worker threads per layer.
        prune (bool): Abandon prefixes that cannot succeed.
        logger (Optional[logging.Logger]): Logger for progress messages.

    Returns:
        int: Number of n-reachable elements.

    Raises:
        UnsupportedType: If the type and rank do not name a finite root system.
    """
    logger = logger or logging.Logger("default")
    datum = build_cartan(type_label, rank)
    ctx = CoxeterContext(datum, logger)
    layers: Dict[int, List[GroupElement]] = {}
    for w in ctx.all_elements():
        layers.setdefault(w.length, []).append(w)

    memo: Dict[GroupElement, bool] = {}
    for length in sorted(layers):
        layer = layers[length]
        if threads > 1 and len(layer) > 1:
            answers = _run_layer_threaded(datum, layer, n, prune, dict(memo), threads, logger)
        else:
            solver = ReachabilitySolver(ctx, n, prune, memo, logger)
            answers = [solver.search(w) for w in layer]
        memo.update(zip(layer, answers))
        logger.info(f"{datum.name} length {length}: {sum(answers)} of {len(layer)} elements are {n}-reachable")

    return sum(1 for ok in memo.values() if ok)


def _run_layer_threaded(
    datum: CartanDatum,
    layer: List[GroupElement],
    n: int,
    prune: bool,
    snapshot: Mapping[GroupElement, bool],
    threads: int,
    logger: logging.Logger,
) -> List[bool]:
    local = threading.local()

    def work(w: GroupElement) -> bool:
        ctx = getattr(local, "ctx", None)
        if ctx is None:
            ctx = CoxeterContext(datum, logger)
            local.ctx = ctx
        solver = ReachabilitySolver(ctx, n, prune, dict(snapshot), logger)
        return solver.search(ctx.element(w.matrix))

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(work, layer))
