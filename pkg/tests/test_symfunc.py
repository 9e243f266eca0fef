"""Symmetric-function arithmetic against exact polynomial expansion.

The oracle restricts a symmetric function to a concrete polynomial in nv
variables straight from each basis's definition; any two expressions that
claim to be the same function must restrict identically once nv reaches
the degree.
"""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    brute_kostka,
    expand_symfunc,
    falling_factorial,
    monomial_poly,
    poly_mul,
)

from cslab import (
    BasisMismatch,
    DegreeMismatch,
    EmptyFunction,
    Partition,
    SymFunc,
    TooLarge,
    change_basis,
    e_to_m,
    enumerate_partitions,
    kostka_number,
    m_multiply,
    p_to_m,
    s_to_m,
    specialize_ones,
)
from cslab.symfunc import from_json_dict, to_json_dict

small_partitions = [
    lam for n in range(0, 7) for lam in enumerate_partitions(n)
]


def polys_equal(f: SymFunc, g: SymFunc, nv: int) -> bool:
    return expand_symfunc(f, nv) == expand_symfunc(g, nv)


class TestConstruction:
    def test_drops_zero_terms_and_normalizes(self):
        f = SymFunc("m", 3, {Partition((3,)): 2, Partition((2, 1)): 0})
        assert f.terms == {Partition((3,)): 2}

    def test_rejects_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            SymFunc("m", 3, {Partition((2,)): 1})

    def test_rejects_unknown_basis(self):
        with pytest.raises(BasisMismatch):
            SymFunc("q", 2, {Partition((2,)): 1})

    def test_one_and_zero(self):
        assert SymFunc.one("e").terms == {Partition(): 1}
        assert SymFunc.zero("e", 4).is_zero


class TestRingOperations:
    def test_add_sub_round_trip(self):
        f = SymFunc("m", 2, {Partition((2,)): 3, Partition((1, 1)): -1})
        g = SymFunc("m", 2, {Partition((1, 1)): 5})
        assert (f + g) - g == f

    def test_add_requires_matching_basis_and_degree(self):
        f = SymFunc("m", 2, {Partition((2,)): 1})
        with pytest.raises(BasisMismatch):
            f + SymFunc("e", 2, {Partition((2,)): 1})
        with pytest.raises(DegreeMismatch):
            f + SymFunc("m", 3, {Partition((3,)): 1})

    def test_scalar_multiple(self):
        f = SymFunc("e", 3, {Partition((2, 1)): 2})
        assert (f * 3).terms == {Partition((2, 1)): 6}
        assert f.scale(0).is_zero

    @pytest.mark.parametrize("basis", ["e", "p"])
    def test_multiplicative_basis_product_concatenates(self, basis):
        f = SymFunc.single(basis, Partition((3, 1)))
        g = SymFunc.single(basis, Partition((2,)), 5)
        assert (f * g).terms == {Partition((3, 2, 1)): 5}

    def test_m_product_matches_polynomial_product(self):
        for lam in (Partition((2,)), Partition((1, 1)), Partition((2, 1))):
            for mu in (Partition((1,)), Partition((2,)), Partition((1, 1))):
                product = m_multiply(
                    SymFunc.single("m", lam), SymFunc.single("m", mu)
                )
                nv = lam.n + mu.n
                direct = poly_mul(monomial_poly(lam, nv), monomial_poly(mu, nv))
                assert expand_symfunc(product, nv) == direct, (lam, mu)


class TestBasisExpansions:
    @pytest.mark.parametrize("lam", [lam for lam in small_partitions if lam.n])
    def test_e_to_m_matches_definition(self, lam):
        assert polys_equal(SymFunc.single("e", lam), e_to_m(lam), lam.n)

    @pytest.mark.parametrize("lam", [lam for lam in small_partitions if lam.n])
    def test_p_to_m_matches_definition(self, lam):
        assert polys_equal(SymFunc.single("p", lam), p_to_m(lam), lam.n)

    @pytest.mark.parametrize("lam", [lam for lam in small_partitions if lam.n])
    def test_s_to_m_matches_definition(self, lam):
        assert polys_equal(SymFunc.single("s", lam), s_to_m(lam), lam.n)

    def test_fewer_variables_than_length_still_agree(self):
        lam = Partition((2, 1, 1))
        assert polys_equal(SymFunc.single("s", lam), s_to_m(lam), 2)


class TestKostka:
    def test_matches_brute_tableau_count(self):
        for n in range(1, 7):
            for shape in enumerate_partitions(n):
                for content in enumerate_partitions(n):
                    assert kostka_number(shape, content) == brute_kostka(
                        shape, content
                    ), (shape, content)

    def test_unit_diagonal_and_dominance_zeroes(self):
        assert kostka_number(Partition((3, 1)), Partition((3, 1))) == 1
        assert kostka_number(Partition((2, 2)), Partition((3, 1))) == 0


class TestChangeBasis:
    @pytest.mark.parametrize("source", ["e", "p", "s"])
    @pytest.mark.parametrize("target", ["m", "e", "p", "s"])
    def test_round_trips_preserve_the_function(self, source, target):
        for lam in enumerate_partitions(5):
            f = SymFunc.single(source, lam, 3) + SymFunc.single(
                source, Partition((1,) * 5), 1
            )
            g = change_basis(f, target)
            assert g.basis == target
            assert polys_equal(f, g, 5), (source, target, lam)
            back = change_basis(g, source)
            assert back == f

    def test_identity_when_target_matches(self):
        f = SymFunc.single("e", Partition((2, 1)))
        assert change_basis(f, "e") is f

    def test_cap_guards_large_degrees(self):
        f = SymFunc.single("e", Partition((25,)))
        with pytest.raises(TooLarge):
            change_basis(f, "m", cap=24)
        assert change_basis(f, "m", cap=25).degree == 25

    def test_rejects_unknown_target(self):
        with pytest.raises(BasisMismatch):
            change_basis(SymFunc.one("m"), "q")


class TestSpecializeOnes:
    @pytest.mark.parametrize("basis", ["m", "e", "p", "s"])
    def test_matches_coefficient_sum_of_expansion(self, basis):
        for lam in enumerate_partitions(5):
            f = SymFunc.single(basis, lam, 2)
            for k in range(0, 6):
                expected = sum(expand_symfunc(f, k).values())
                assert specialize_ones(f, k) == expected, (basis, lam, k)

    def test_schur_column_counts_binomials(self):
        # s_{1^n} = e_n, so k variables give C(k, n) fillings.
        assert specialize_ones(SymFunc.single("s", Partition((1, 1, 1))), 5) == 10

    def test_complete_graph_power_basis(self):
        # n! e_n specializes to the falling factorial k(k-1)...(k-n+1).
        f = SymFunc.single("e", Partition((4,)), 24)
        for k in range(0, 7):
            assert specialize_ones(f, k) == falling_factorial(k, 4)

    def test_rejects_negative_variable_count(self):
        with pytest.raises(ValueError):
            specialize_ones(SymFunc.one("m"), -1)


class TestInspection:
    def test_min_coefficient_prefers_smallest_value_then_revlex(self):
        f = SymFunc(
            "e",
            4,
            {Partition((4,)): 5, Partition((2, 2)): -2, Partition((2, 1, 1)): -2},
        )
        lam, coeff = f.min_coefficient()
        assert coeff == -2
        assert lam == Partition((2, 1, 1))

    def test_min_coefficient_of_zero_function_raises(self):
        with pytest.raises(EmptyFunction):
            SymFunc.zero("e", 3).min_coefficient()

    def test_terms_sorted_descends(self):
        f = SymFunc("m", 3, {Partition((1, 1, 1)): 1, Partition((3,)): 1})
        assert [lam for lam, _ in f.terms_sorted()] == [
            Partition((3,)),
            Partition((1, 1, 1)),
        ]


class TestSerialization:
    def test_json_round_trip_is_exact(self):
        f = SymFunc("s", 4, {Partition((2, 2)): -1, Partition((3, 1)): 10**30})
        blob = json.dumps(to_json_dict(f))
        assert from_json_dict(json.loads(blob)) == f

    def test_coefficients_serialize_as_strings(self):
        payload = to_json_dict(SymFunc.single("m", Partition((2,)), 7))
        assert payload["terms"][0]["coeff"] == "7"


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(1, 3), min_size=1, max_size=3).map(
        lambda parts: Partition(sorted(parts, reverse=True))
    ),
    st.sampled_from(["e", "p", "s"]),
)
def test_property_conversion_preserves_restriction(lam, basis):
    f = SymFunc.single(basis, lam)
    assert polys_equal(f, change_basis(f, "m"), lam.n)
