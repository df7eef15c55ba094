from typing import Dict, List, Sequence

from bottsamelson.exceptions import NotDivisible, NotHomogeneous, ZeroPolynomial
from bottsamelson.model.Field import Field, Scalar
from bottsamelson.model.MultiPoly import Monomial, MultiPoly


def homogeneous_degree(f: MultiPoly) -> int:
    """
    Return the common degree of all monomials of f, each variable counting 2.

    Args:
        f (MultiPoly): A nonzero polynomial.

    Returns:
        int: The degree shared by every monomial.

    Raises:
        ZeroPolynomial: If f is zero; callers decide what the zero entry means.
        NotHomogeneous: If two monomials have different degrees.
    """
    if f.is_zero():
        raise ZeroPolynomial("The zero polynomial has no degree")
    degrees = set(f.monomial_degrees())
    if len(degrees) != 1:
        raise NotHomogeneous(f"Polynomial {f} mixes degrees {sorted(degrees)}")
    return degrees.pop()


def divide_exact_by_linear(f: MultiPoly, linear: MultiPoly) -> MultiPoly:
    """
    Divide f by a nonzero linear form, requiring the division to be exact.

    The division runs as univariate long division in the pivot variable, the smallest
    index with a nonzero coefficient in ``linear``. Monomials are eliminated by
    decreasing pivot exponent, so every subtraction only creates monomials of lower
    pivot exponent.

    Args:
        f (MultiPoly): Dividend.
        linear (MultiPoly): Homogeneous polynomial of degree 2.

    Returns:
        MultiPoly: The quotient q with f = q * linear.

    Raises:
        ValueError: If ``linear`` is not a nonzero linear form.
        NotDivisible: If the remainder is nonzero.
    """
    f._check(linear)
    if not linear.is_linear():
        raise ValueError(f"Divisor {linear} is not a nonzero linear form")

    field = f.field
    coeffs = linear.linear_coefficients()
    pivot = next(i for i, c in enumerate(coeffs) if not field.is_zero(c))
    inv_pivot = field.inv(coeffs[pivot])
    others = [(i, c) for i, c in enumerate(coeffs) if i != pivot and not field.is_zero(c)]

    rem: Dict[Monomial, Scalar] = f.as_dict()
    quot: Dict[Monomial, Scalar] = {}
    zero = field.zero()
    top = max((m[pivot] for m in rem), default=0)
    for exponent in range(top, 0, -1):
        for m in [m for m in rem if m[pivot] == exponent]:
            c = rem.pop(m)
            if field.is_zero(c):
                continue
            q_mono = m[:pivot] + (exponent - 1,) + m[pivot + 1 :]
            qc = field.mul(c, inv_pivot)
            quot[q_mono] = field.add(quot.get(q_mono, zero), qc)
            for i, ci in others:
                mono = q_mono[:i] + (q_mono[i] + 1,) + q_mono[i + 1 :]
                rem[mono] = field.sub(rem.get(mono, zero), field.mul(qc, ci))

    leftover = MultiPoly.from_dict(field, f.nvars, rem)
    if not leftover.is_zero():
        raise NotDivisible(f"{f} is not divisible by {linear}, remainder {leftover}")
    return MultiPoly.from_dict(field, f.nvars, quot)


def rank_over_field(field: Field, rows: Sequence[Sequence[Scalar]]) -> int:
    """
    Rank of a scalar matrix over the field by row reduction.

    Args:
        field (Field): Field the entries live in.
        rows (Sequence[Sequence[Scalar]]): Matrix rows, all of the same length.

    Returns:
        int: The rank.
    """
    m: List[List[Scalar]] = [[field.coerce(c) for c in row] for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    piv_r = 0
    for piv_c in range(n_cols):
        pivot_row = next((r for r in range(piv_r, n_rows) if not field.is_zero(m[r][piv_c])), None)
        if pivot_row is None:
            continue
        m[piv_r], m[pivot_row] = m[pivot_row], m[piv_r]
        inv = field.inv(m[piv_r][piv_c])
        for r in range(piv_r + 1, n_rows):
            if field.is_zero(m[r][piv_c]):
                continue
            factor = field.mul(m[r][piv_c], inv)
            for c in range(piv_c, n_cols):
                m[r][c] = field.sub(m[r][c], field.mul(factor, m[piv_r][c]))
        piv_r += 1
        if piv_r == n_rows:
            break
    return piv_r
