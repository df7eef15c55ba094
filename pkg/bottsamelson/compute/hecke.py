import logging
from typing import Dict, Optional, Sequence

from bottsamelson.compute.weyl import CoxeterContext, sorted_elements
from bottsamelson.exceptions import InternalInvariant, NotReduced
from bottsamelson.model.GroupElement import GroupElement
from bottsamelson.model.HeckeElement import HeckeElement
from bottsamelson.model.LaurentPoly import LaurentPoly

V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)


class KLTable:
    """
    Memo of Kazhdan-Lusztig basis elements for one computation context.

    Filled by a single writer; entries are immutable once stored.
    """

    def __init__(self, ctx: CoxeterContext, verify: bool = False, logger: Optional[logging.Logger] = None):
        self.ctx = ctx
        self.verify = verify
        self.logger = logger or logging.Logger("default")
        self._table: Dict[GroupElement, HeckeElement] = {ctx.identity: HeckeElement.basis(ctx.identity)}

    def __contains__(self, w: GroupElement) -> bool:
        return w in self._table

    def __len__(self) -> int:
        return len(self._table)

    def get(self, w: GroupElement) -> Optional[HeckeElement]:
        return self._table.get(w)

    def put(self, w: GroupElement, element: HeckeElement) -> None:
        self._table[w] = element


def mult_by_Hs_bar(ctx: CoxeterContext, h: HeckeElement, s: int) -> HeckeElement:
    """
    Right multiplication by H_s + v.

    H_x (H_s + v) is H_xs + v H_x when xs > x and H_xs + v^-1 H_x when xs < x.
    """
    out: Dict[GroupElement, LaurentPoly] = {}
    zero = LaurentPoly.zero()
    for x, c in h.terms:
        xs = ctx.right_mul(x, s)
        out[xs] = out.get(xs, zero) + c
        out[x] = out.get(x, zero) + c.shift(1 if xs.length > x.length else -1)
    return HeckeElement.from_dict(out)


def mult_by_Hs(ctx: CoxeterContext, h: HeckeElement, s: int) -> HeckeElement:
    """Right multiplication by H_s: H_x H_s = H_xs if xs > x, else H_xs + (v^-1 - v) H_x."""
    out: Dict[GroupElement, LaurentPoly] = {}
    zero = LaurentPoly.zero()
    for x, c in h.terms:
        xs = ctx.right_mul(x, s)
        out[xs] = out.get(xs, zero) + c
        if xs.length < x.length:
            out[x] = out.get(x, zero) + c * (V_INV - V)
    return HeckeElement.from_dict(out)


def bs_character(ctx: CoxeterContext, word: Sequence[int]) -> HeckeElement:
    """The product (H_s1 + v) ... (H_sl + v), expanded in the standard basis."""
    h = HeckeElement.basis(ctx.identity)
    for s in word:
        h = mult_by_Hs_bar(ctx, h, s)
    return h


def _bar_of_basis(ctx: CoxeterContext, x: GroupElement) -> HeckeElement:
    # bar(H_s) = H_s^-1 = H_s + v - v^-1
    h = HeckeElement.basis(ctx.identity)
    for s in x.word:
        h = mult_by_Hs(ctx, h, s) + h.scale(V - V_INV)
    return h


def bar_involution(ctx: CoxeterContext, h: HeckeElement) -> HeckeElement:
    """The ring involution sending v to v^-1 and H_x to H_{x^-1}^-1."""
    result = HeckeElement()
    for x, c in h.terms:
        result = result + _bar_of_basis(ctx, x).scale(c.bar())
    return result


def _check_kl_element(ctx: CoxeterContext, w: GroupElement, element: HeckeElement) -> None:
    if element.coefficient(w) != LaurentPoly.one():
        raise InternalInvariant(f"KL element of {w} has top coefficient {element.coefficient(w)}")
    for x, c in element.terms:
        if x != w and c.valuation() < 1:
            raise InternalInvariant(f"KL polynomial h_{{{x.word_str},{w.word_str}}} = {c} is not in vZ[v]")
    if bar_involution(ctx, element) != element:
        raise InternalInvariant(f"KL element of {w} is not self-dual")


def kl_element(ctx: CoxeterContext, w: GroupElement, table: Optional[KLTable] = None) -> HeckeElement:
    """
    Kazhdan-Lusztig basis element of w in the standard basis.

    With s the last letter of w's canonical word, H_{ws} (H_s + v) equals the KL element
    of w plus integer multiples of KL elements of smaller x. The multiple of x is the
    constant term of the x-coefficient, because all other contributions lie in vZ[v].
    Coefficients are cleared by decreasing length.

    Args:
        ctx (CoxeterContext): Group context.
        w (GroupElement): Element.
        table (Optional[KLTable]): Memo; a fresh one is used when omitted.

    Returns:
        HeckeElement: The element H_w-underline.
    """
    if table is None:
        table = KLTable(ctx)
    hit = table.get(w)
    if hit is not None:
        return hit

    s = w.word[-1]
    ws = ctx.right_mul(w, s)
    product = mult_by_Hs_bar(ctx, kl_element(ctx, ws, table), s)
    for x in reversed(sorted_elements(product.support)):
        if x == w:
            continue
        mu = product.coefficient(x).coefficient(0)
        if mu:
            product = product - kl_element(ctx, x, table).scale(LaurentPoly.monomial(0, mu))

    if table.verify:
        _check_kl_element(ctx, w, product)
    table.logger.debug(f"KL element of {w.word_str} has {len(product.terms)} terms")
    table.put(w, product)
    return product


def kl_polynomials(ctx: CoxeterContext, w: GroupElement, table: Optional[KLTable] = None) -> Dict[GroupElement, LaurentPoly]:
    """The coefficients h_{x,w} of the KL element of w."""
    return kl_element(ctx, w, table).as_dict()


def f_coeffs(ctx: CoxeterContext, word: Sequence[int]) -> Dict[GroupElement, LaurentPoly]:
    """
    Coefficients f_{x,w} of H_x, x < w, in (H_s1 + v) ... (H_sl + v) for a reduced word.

    Raises:
        NotReduced: If the word is not reduced.
    """
    w = ctx.ev_word(word)
    if w.length != len(word):
        raise NotReduced(f"Word {list(word)} has length {len(word)} but evaluates to an element of length {w.length}")
    return {x: c for x, c in bs_character(ctx, word).terms if x != w}
