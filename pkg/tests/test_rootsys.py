from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bottsamelson.compute.rootsys import (
    affine_simple_system,
    all_roots,
    build_cartan,
    coroot_pairing,
    format_root,
    highest_root,
    inner_product,
    is_positive,
    make_root,
    pairing_prime,
    positive_roots,
    reflect,
    simple_root,
    symmetrizer,
    weight_coordinates,
)
from bottsamelson.exceptions import UnsupportedType


class TestCartan:
    def test_type_a2(self):
        assert build_cartan("A", 2).cartan == ((2, -1), (-1, 2))

    def test_type_b2_and_c2_are_transposed(self):
        b2 = build_cartan("B", 2).cartan
        c2 = build_cartan("C", 2).cartan
        assert b2 == ((2, -1), (-2, 2))
        assert c2 == tuple(zip(*b2))

    def test_lower_case_type_is_accepted(self):
        assert build_cartan("a", 3).type_label == "A"

    @pytest.mark.parametrize("type_label, rank", [("D", 3), ("E", 5), ("F", 3), ("G", 3), ("H", 3), ("A", 0)])
    def test_unsupported(self, type_label, rank):
        with pytest.raises(UnsupportedType):
            build_cartan(type_label, rank)

    def test_datum_json(self):
        assert build_cartan("A", 1, affine=True).to_dict() == {"type": "A", "rank": 1, "affine": True, "cartan": [[2]]}
        assert build_cartan("A", 1, affine=True).name == "affine A1"


class TestRoots:
    @pytest.mark.parametrize(
        "type_label, rank, count",
        [("A", 1, 1), ("A", 2, 3), ("A", 3, 6), ("B", 2, 4), ("B", 3, 9), ("C", 3, 9), ("D", 4, 12), ("G", 2, 6), ("F", 4, 24), ("E", 6, 36)],
    )
    def test_number_of_positive_roots(self, type_label, rank, count):
        datum = build_cartan(type_label, rank)
        assert len(positive_roots(datum)) == count
        assert len(all_roots(datum)) == 2 * count

    def test_highest_roots(self):
        assert highest_root(build_cartan("A", 2)).finite == (1, 1)
        assert highest_root(build_cartan("G", 2)).finite == (3, 2)
        assert highest_root(build_cartan("B", 3)).finite == (1, 2, 2)

    def test_symmetrizer_b2(self):
        assert symmetrizer(build_cartan("B", 2)) == (Fraction(1), Fraction(1, 2))

    def test_pairings(self):
        a2 = build_cartan("A", 2)
        assert coroot_pairing(a2, (1, 0), (0, 1)) == -1
        assert coroot_pairing(a2, (1, 1), (1, 0)) == 1
        b2 = build_cartan("B", 2)
        # long alpha_1 against the short coroot, and the other way round
        assert coroot_pairing(b2, (1, 0), (0, 1)) == -2
        assert coroot_pairing(b2, (0, 1), (1, 0)) == -1
        assert inner_product(b2, (1, 0), (1, 0)) == 2

    def test_weight_coordinates(self):
        a2 = build_cartan("A", 2)
        assert weight_coordinates(a2, (1, 0)) == (2, -1, 0)
        assert weight_coordinates(a2, (1, 1), 2) == (1, 1, 2)

    def test_affine_simple_root(self):
        datum = build_cartan("A", 1, affine=True)
        alpha0 = simple_root(datum, 0)
        assert alpha0.finite == (-1,)
        assert alpha0.level == 1
        assert alpha0.weights == (-2, 1)
        assert alpha0.is_positive()
        assert format_root(alpha0) == "[-1]+1d"

    def test_affine_index_needs_affine_datum(self):
        with pytest.raises(ValueError):
            simple_root(build_cartan("A", 2), 0)

    def test_make_root_checks_membership(self):
        with pytest.raises(ValueError):
            make_root(build_cartan("A", 2), (2, 1))

    def test_affine_simple_system(self):
        datum = build_cartan("A", 2, affine=True)
        system = affine_simple_system(datum)
        assert [r.finite for r in system] == [(1, 0), (0, 1), (-1, -1)]
        assert all(is_positive(r) for r in system)
        assert not is_positive(-system[-1])
        assert pairing_prime(datum, system[0], system[-1]) == -1

    def test_format(self):
        assert format_root(highest_root(build_cartan("A", 2))) == "[1,1]+0d"

    @settings(max_examples=300, deadline=None)
    @given(
        st.sampled_from([("A", 3), ("B", 3), ("C", 3), ("G", 2), ("D", 4)]).flatmap(
            lambda tr: st.tuples(
                st.just(build_cartan(*tr)),
                st.sampled_from(sorted(all_roots(build_cartan(*tr)))),
                st.sampled_from(sorted(all_roots(build_cartan(*tr)))),
                st.integers(-3, 3),
                st.integers(-3, 3),
            )
        )
    )
    def test_reflection_is_an_involution_on_roots(self, case):
        datum, beta, alpha, m, n = case
        b = make_root(datum, beta, m)
        a = make_root(datum, alpha, n)
        image = reflect(datum, b, a)
        assert image.finite in all_roots(datum)
        assert reflect(datum, image, a) == b
        assert inner_product(datum, image.finite, image.finite) == inner_product(datum, beta, beta)

    @settings(max_examples=300, deadline=None)
    @given(
        st.sampled_from([("A", 3), ("B", 3), ("C", 3), ("G", 2)]).flatmap(
            lambda tr: st.tuples(
                st.just(build_cartan(*tr)),
                *[st.sampled_from(sorted(all_roots(build_cartan(*tr))))] * 3,
                *[st.integers(-3, 3)] * 3,
            )
        )
    )
    def test_reflection_preserves_the_pairing(self, case):
        datum, alpha, beta, gamma, l, m, n = case
        a, b, c = make_root(datum, alpha, l), make_root(datum, beta, m), make_root(datum, gamma, n)
        sb, sc = reflect(datum, b, a), reflect(datum, c, a)
        assert inner_product(datum, sb.finite, sc.finite) == inner_product(datum, beta, gamma)
        assert pairing_prime(datum, sb, reflect(datum, a, a)) == pairing_prime(datum, b, a)


@pytest.mark.parametrize("type_label, rank", [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 3), ("G", 2)])
def test_positive_affine_roots_are_nonnegative_in_simple_roots(type_label, rank):
    datum = build_cartan(type_label, rank, affine=True)
    theta = highest_root(datum).finite
    system = affine_simple_system(datum)
    for beta in all_roots(datum):
        for level in range(-4, 5):
            root = make_root(datum, beta, level)
            # delta is the affine simple root plus the highest root
            coeffs = tuple(b + level * t for b, t in zip(beta, theta)) + (level,)
            combination = tuple(sum(c * s.vector[k] for c, s in zip(coeffs, system)) for k in range(rank + 1))
            assert combination == root.vector
            if is_positive(root):
                assert all(c >= 0 for c in coeffs), (beta, level)
            else:
                assert all(c <= 0 for c in coeffs), (beta, level)
