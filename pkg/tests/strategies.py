from typing import Any, List, Sequence, Tuple

from hypothesis import strategies as st

from bottsamelson.compute.weyl import CoxeterContext, sorted_elements
from bottsamelson.model.Field import Field
from bottsamelson.model.GroupElement import GroupElement, Word
from bottsamelson.model.MultiPoly import MultiPoly

NVARS = 3


def fields() -> st.SearchStrategy[Field]:
    return st.sampled_from([Field(0), Field(3), Field(5), Field(7)])


def words(indices: Sequence[int], max_size: int = 6) -> st.SearchStrategy[List[int]]:
    return st.lists(st.sampled_from(list(indices)), max_size=max_size)


@st.composite
def polynomials(draw: Any, field: Field, max_terms: int = 4) -> MultiPoly:
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(0, 2)] * NVARS),
            st.integers(-5, 5),
            max_size=max_terms,
        )
    )
    return MultiPoly.from_dict(field, NVARS, {m: field.coerce(c) for m, c in terms.items()})


@st.composite
def linear_forms(draw: Any, field: Field) -> MultiPoly:
    coords = draw(st.lists(st.integers(-4, 4), min_size=NVARS, max_size=NVARS))
    form = MultiPoly.linear_form(field, coords)
    if form.is_zero():
        form = MultiPoly.variable(field, NVARS, 0)
    return form


def reduced_words(ctx: CoxeterContext, w: GroupElement) -> List[Word]:
    """Every reduced word of w, built from its right descents."""
    if w.is_identity:
        return [()]
    out: List[Word] = []
    for s in sorted(ctx.right_descents(w)):
        out.extend(word + (s,) for word in reduced_words(ctx, ctx.right_mul(w, s)))
    return out


@st.composite
def words_with_element(draw: Any, cases: Sequence[Tuple[CoxeterContext, int]]) -> Tuple[CoxeterContext, Word, GroupElement]:
    """A context, a word of bounded length in its simple indices and an element of the word's subword closure."""
    ctx, max_size = draw(st.sampled_from(list(cases)))
    word = tuple(draw(words(ctx.datum.simple_indices, max_size)))
    x = draw(st.sampled_from(sorted_elements(ctx.subword_closure(word))))
    return ctx, word, x
