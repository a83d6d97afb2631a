"""Core brace structure: laws, invariants, towers, Sylow pieces, traits."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bracelab.abelian import make_group
from bracelab.brace import LeftBrace, e_combination, sylow_decompose, validate_brace
from bracelab.census import are_isomorphic
from bracelab.errors import (
    CircleAssociativityError,
    CircleIdentityError,
    CircleInverseError,
    CompatibilityError,
    InvalidPresentationError,
    ResourceLimitError,
)
from conftest import cyclic_brace


class TestValidation:
    def test_trivial_brace_is_valid(self):
        group = make_group((6,))
        brace = LeftBrace.trivial(group)
        assert brace.circle_table == group.add_rows()

    def test_shape_errors(self):
        group = make_group((3,))
        with pytest.raises(InvalidPresentationError):
            validate_brace(group, ((0, 1), (1, 2), (2, 0)))
        with pytest.raises(InvalidPresentationError):
            validate_brace(group, ((0, 1, 5), (1, 2, 0), (2, 0, 1)))

    def test_identity_failure(self):
        with pytest.raises(CircleIdentityError):
            validate_brace(make_group((2,)), ((1, 0), (0, 1)))

    def test_missing_inverse(self):
        with pytest.raises(CircleInverseError) as info:
            validate_brace(make_group((3,)), ((0, 1, 2), (1, 2, 2), (2, 0, 1)))
        assert info.value.witness == (1,)

    def test_associativity_failure(self):
        rows = (
            (0, 1, 2, 3, 4),
            (1, 2, 3, 4, 0),
            (2, 4, 3, 0, 1),
            (3, 4, 0, 1, 2),
            (4, 0, 1, 2, 3),
        )
        with pytest.raises(CircleAssociativityError) as info:
            validate_brace(make_group((5,)), rows)
        assert info.value.witness == (1, 1, 1)

    def test_compatibility_failure(self):
        # a genuine group operation on Z/5, but its lambda maps are not additive
        rows = (
            (0, 1, 2, 3, 4),
            (1, 4, 3, 0, 2),
            (2, 3, 1, 4, 0),
            (3, 0, 4, 2, 1),
            (4, 2, 0, 1, 3),
        )
        with pytest.raises(CompatibilityError) as info:
            validate_brace(make_group((5,)), rows)
        assert info.value.witness == (1, 1, 1)

    def test_order_bound(self):
        group = make_group((101,))
        rows = tuple(tuple((a + b) % 101 for b in range(101)) for a in range(101))
        with pytest.raises(ResourceLimitError):
            validate_brace(group, rows, max_order=64)
        assert validate_brace(group, rows, max_order=101).order == 101


class TestCyclicFamily:
    """Braces a o b = a + b + c*a*b on Z/n have closed forms for everything."""

    @pytest.mark.parametrize("n,c", [(4, 2), (9, 3), (25, 5), (8, 4), (16, 4)])
    def test_dot_and_lambda_closed_forms(self, n, c):
        brace = cyclic_brace(n, c)
        for a in range(n):
            row = brace.lambda_row(a)
            for b in range(n):
                assert brace.dot(a, b) == (c * a * b) % n
                assert row[b] == ((1 + c * a) * b) % n

    @pytest.mark.parametrize("n,c", [(4, 2), (9, 3), (25, 5)])
    def test_e_sequence_geometric(self, n, c):
        brace = cyclic_brace(n, c)
        for a in range(n):
            for b in range(n):
                seq = brace.e_sequence(a, b, 4)
                assert seq == tuple((pow(c * a, i, n) * b) % n for i in range(5))

    def test_socle_is_multiples_of_c(self):
        assert cyclic_brace(4, 2).socle().members == frozenset((0, 2))
        assert cyclic_brace(9, 3).socle().members == frozenset((0, 3, 6))
        soc25 = cyclic_brace(25, 5).socle()
        assert soc25.members == frozenset(range(0, 25, 5))
        assert soc25.is_subgroup and soc25.is_ideal


class TestB4Frozen:
    def test_circle_table(self, b4):
        assert b4.circle_table == (
            (0, 1, 2, 3),
            (1, 0, 3, 2),
            (2, 3, 0, 1),
            (3, 2, 1, 0),
        )

    def test_dot_and_sequence(self, b4):
        assert b4.dot(1, 1) == 2
        assert b4.e_sequence(1, 1, 3) == (1, 2, 0, 0)

    def test_powers(self, b4):
        assert [b4.circle_power(1, m) for m in range(4)] == [0, 1, 0, 1]
        assert b4.circle_order(1) == 2
        assert b4.left_power(1, 1) == 1
        assert b4.left_power(1, 2) == 2
        assert b4.left_power(1, 3) == 0
        with pytest.raises(ValueError):
            b4.left_power(1, 0)
        with pytest.raises(ValueError):
            b4.circle_power(1, -1)

    def test_adjoint_profile(self, b4):
        assert b4.adjoint_order_profile() == (1, 2, 2, 2)
        assert b4.adjoint_group().order == 4

    def test_towers(self, b4):
        assert b4.multipermutation_level() == 2
        assert b4.radical_chain_index() == 3
        retract = b4.retract_quotient()
        assert retract.order == 2
        assert retract.multipermutation_level() == 1

    def test_classify(self, b4):
        traits = b4.classify()
        assert traits.is_two_sided
        assert traits.minus_rule
        assert traits.left_nil_index == 3
        assert traits.adjoint_nilpotent
        assert traits.ring_nilpotent is True


class TestTrivialBrace:
    def test_invariants(self, triv6):
        assert triv6.socle().members == frozenset(range(6))
        assert triv6.multipermutation_level() == 1
        assert triv6.radical_chain_index() == 2
        traits = triv6.classify()
        assert traits.is_two_sided and traits.minus_rule
        assert traits.left_nil_index == 2
        assert triv6.dot_table == tuple((0,) * 6 for _ in range(6))

    def test_one_element_brace(self):
        one = LeftBrace.trivial(make_group(()))
        assert one.multipermutation_level() == 0
        assert one.radical_chain_index() == 1
        assert one.socle().size == 1


class TestSylow:
    def test_b9_single_component(self, b9):
        comps = b9.sylow_components()
        assert [(c.prime, c.exponent) for c in comps] == [(3, 2)]
        assert are_isomorphic(comps[0].brace, b9)

    def test_order_twelve_split(self, census):
        for entry in census(12).entries:
            comps = entry.brace.sylow_components()
            assert [(c.prime, c.exponent) for c in comps] == [(2, 2), (3, 1)]
            assert comps[0].brace.order == 4
            assert comps[1].brace.order == 3
            parts = sylow_decompose(entry.brace)
            assert [p.order for p in parts] == [4, 3]

    def test_component_embedding_preserves_both_operations(self, census):
        for entry in census(6).entries:
            brace = entry.brace
            for comp in brace.sylow_components():
                sub = comp.brace
                lift = comp.to_parent
                for i in range(sub.order):
                    for j in range(sub.order):
                        assert (
                            lift[sub.circle(i, j)]
                            == brace.circle(lift[i], lift[j])
                        )
                        assert lift[sub.add(i, j)] == brace.add(lift[i], lift[j])


class TestCanonicalForm:
    def test_already_canonical_is_identity(self, b4):
        assert b4.canonical_form() is b4

    def test_mixed_radix_gets_rewritten(self):
        from bracelab.products import direct_sum

        left = LeftBrace.trivial(make_group((3,)))
        right = cyclic_brace(4, 2)
        prod = direct_sum(left, right)
        assert prod.additive.factors == (3, 4)
        canon = prod.canonical_form()
        assert canon.additive.factors == (12,)
        assert are_isomorphic(prod, canon)


@settings(max_examples=80, deadline=None)
@given(
    st.sampled_from([(4, 2), (9, 3), (8, 4), (16, 4)]),
    st.data(),
)
def test_operator_polynomial_composition(params, data):
    """Applying integer polynomials in the map x -> a.x composes via convolution."""
    brace = cyclic_brace(*params)
    n = brace.order
    a = data.draw(st.integers(0, n - 1))
    b = data.draw(st.integers(0, n - 1))
    f = data.draw(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
    g = data.draw(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
    conv = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        for j, gj in enumerate(g):
            conv[i + j] += fi * gj
    stepwise = e_combination(brace, a, e_combination(brace, a, b, g), f)
    assert stepwise == e_combination(brace, a, b, conv)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(4, 2), (9, 3), (25, 5)]), st.data())
def test_binomial_transfer_property(params, data):
    """(1 + T)^m b = a^(o m) + lambda power image; spot version of the law suite."""
    brace = cyclic_brace(*params)
    n = brace.order
    a = data.draw(st.integers(0, n - 1))
    b = data.draw(st.integers(0, n - 1))
    m = data.draw(st.integers(1, n))
    coeffs = [math.comb(m, i) for i in range(m + 1)]
    combo = e_combination(brace, a, b, coeffs)
    expect = brace.additive.add(brace.dot(brace.circle_power(a, m), b), b)
    assert combo == expect
