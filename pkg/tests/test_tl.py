"""Temperley-Lieb arithmetic, projectors, quantum coefficients, and the
colored expansion of cabled 2-tangles."""

import random
import warnings

import pytest

from tanglekit import tl
from tanglekit.bracket import bracket_vector
from tanglekit.ring import LaurentPoly, RatFunc
from tanglekit.tangles import (
    RationalTangle,
    build_rational,
    random_twist_vector,
    rational_to_diagram,
)

ONE = RatFunc.one()
A = RatFunc.from_laurent(LaurentPoly.variable())
AINV = A.inverse()
DELTA = RatFunc.from_laurent(LaurentPoly({2: -1, -2: -1}))

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


# ---------------------------------------------------------------------------
# Matchings
# ---------------------------------------------------------------------------

def test_catalan_counts():
    for n in range(9):
        assert tl.catalan(n) == CATALAN[n]
        assert len(tl.enumerate_matchings(n, n)) == CATALAN[n]


def test_enumerate_matchings_rectangular():
    # 3 top + 1 bottom points: two non-crossing pairings of the disk
    assert len(tl.enumerate_matchings(3, 1)) == 2
    # odd total: none
    assert tl.enumerate_matchings(2, 1) == []


def test_matching_validation():
    # crossing pairing 0-3, 1-2 with points 0,1 on top and 2,3 below
    with pytest.raises(ValueError):
        tl.TLElement(2, 2, {(3, 2, 1, 0): ONE})
    # not an involution
    with pytest.raises(ValueError):
        tl.TLElement(2, 2, {(1, 2, 3, 0): ONE})
    # every enumerated matching is accepted
    for m in tl.enumerate_matchings(4, 4):
        tl.TLElement(4, 4, {m: ONE})


# ---------------------------------------------------------------------------
# Multiplication
# ---------------------------------------------------------------------------

def test_hook_square_makes_loop():
    e1 = tl.e_generator(2, 1)
    assert tl.tl_multiply(e1, e1, 2) == e1.scale(DELTA)


def test_identity_is_unit():
    rng = random.Random(11)
    for n in (1, 2, 3, 4):
        ident = tl.identity_element(n)
        for _ in range(5):
            x = tl.random_element(rng, n)
            assert tl.tl_multiply(ident, x, n) == x
            assert tl.tl_multiply(x, ident, n) == x


def test_hook_sandwich():
    e1, e2 = tl.e_generator(3, 1), tl.e_generator(3, 2)
    assert tl.tl_multiply(tl.tl_multiply(e1, e2, 3), e1, 3) == e1
    assert tl.tl_multiply(tl.tl_multiply(e2, e1, 3), e2, 3) == e2


def test_distant_hooks_commute():
    e1, e3 = tl.e_generator(4, 1), tl.e_generator(4, 3)
    assert tl.tl_multiply(e1, e3, 4) == tl.tl_multiply(e3, e1, 4)


def test_multiplication_is_associative():
    rng = random.Random(23)
    for n in (2, 3, 4):
        for _ in range(4):
            x, y, z = (tl.random_element(rng, n) for _ in range(3))
            left = tl.tl_multiply(tl.tl_multiply(x, y, n), z, n)
            right = tl.tl_multiply(x, tl.tl_multiply(y, z, n), n)
            assert left == right


def test_size_mismatch_rejected():
    e1 = tl.e_generator(2, 1)
    ident3 = tl.identity_element(3)
    with pytest.raises(ValueError, match="size mismatch"):
        tl.tl_multiply(e1, ident3)
    with pytest.raises(ValueError, match="size mismatch"):
        tl.tl_multiply(e1, e1, 3)
    with pytest.raises(ValueError, match="size mismatch"):
        e1 + ident3


def test_tensor_builds_hooks():
    e1 = tl.e_generator(2, 1)
    assert tl.tensor(e1, tl.identity_element(1)) == tl.e_generator(3, 1)
    assert tl.tensor(tl.identity_element(1), e1) == tl.e_generator(3, 2)
    i2 = tl.identity_element(2)
    assert tl.tensor(i2, i2) == tl.identity_element(4)


def test_trace_of_identity():
    for n in range(1, 5):
        expected = RatFunc.one()
        for _ in range(n):
            expected = expected * DELTA
        assert tl.trace_close(tl.identity_element(n)) == expected


# ---------------------------------------------------------------------------
# State sums of small tangle diagrams
# ---------------------------------------------------------------------------

def test_state_sum_zero_tangle():
    d = rational_to_diagram(RationalTangle.from_entries(0))
    assert tl.state_sum(d) == tl.unit_element(1, "0")


def test_state_sum_single_crossing():
    d = rational_to_diagram(RationalTangle.from_entries(1))
    expected = tl.unit_element(1, "inf").scale(A) + tl.unit_element(1, "0").scale(AINV)
    assert tl.state_sum(d) == expected


def test_crossing_tile_is_skein_combination():
    ident, hook = tl.identity_element(2), tl.e_generator(2, 1)
    assert tl.tile_element(1, +1) == ident.scale(A) + hook.scale(AINV)
    assert tl.tile_element(1, -1) == ident.scale(AINV) + hook.scale(A)


def test_opposite_tiles_cancel():
    # Reidemeister II at the cabled-tile level
    for n in (1, 2, 3):
        prod = tl.tl_multiply(tl.tile_element(n, +1), tl.tile_element(n, -1), 2 * n)
        assert prod == tl.identity_element(2 * n)


def test_word_replay_matches_state_sum():
    rng = random.Random(37)
    for _ in range(10):
        t = build_rational(random_twist_vector(rng, 4, 3))
        d = rational_to_diagram(t)
        assert tl.tangle_element(t, 1) == tl.state_sum(d)


# ---------------------------------------------------------------------------
# Jones-Wenzl projectors
# ---------------------------------------------------------------------------

def test_projector_one_strand():
    assert tl.jones_wenzl(1).element == tl.identity_element(1)


def test_projector_two_strands_formula():
    f2 = tl.jones_wenzl(2).element
    expected = tl.identity_element(2) - tl.e_generator(2, 1).scale(DELTA.inverse())
    assert f2 == expected


def test_projector_defining_properties():
    for n in (2, 3, 4):
        f = tl.jones_wenzl(n).element
        assert tl.tl_multiply(f, f, n) == f
        for i in range(1, n):
            hook = tl.e_generator(n, i)
            assert tl.tl_multiply(hook, f, n).is_zero
            assert tl.tl_multiply(f, hook, n).is_zero


def test_projector_identity_coefficient_is_one():
    for n in (2, 3, 4):
        f = tl.jones_wenzl(n).element
        ident = next(iter(tl.identity_element(n).terms))
        assert f.coefficient(ident) == ONE


def test_projector_bound_enforced():
    with pytest.raises(ValueError):
        tl.jones_wenzl(tl.MAX_PROJECTOR_STRANDS + 1)


# ---------------------------------------------------------------------------
# Quantum coefficients
# ---------------------------------------------------------------------------

def test_loop_values_chebyshev():
    assert tl._delta_poly(0) == LaurentPoly.one()
    assert tl._delta_poly(1) == LaurentPoly({2: -1, -2: -1})
    assert tl._delta_poly(2) == LaurentPoly({4: 1, 0: 1, -4: 1})
    for k in range(2, 7):
        recur = tl._delta_poly(1) * tl._delta_poly(k - 1) - tl._delta_poly(k - 2)
        assert tl._delta_poly(k) == recur


def test_projector_closure_is_loop_value():
    for n in range(1, 6):
        q = tl.quantum_coeffs(n, 0)
        assert q.delta == RatFunc.from_laurent(tl._delta_poly(n))


def test_bubble_with_trivial_bridge_degenerates():
    for n in range(1, 6):
        q = tl.quantum_coeffs(n, 0)
        assert q.theta == q.delta


def test_bubble_full_bridge():
    # bridging with all 2n strands leaves a single 2n-projector loop
    for n in (1, 2, 3):
        q = tl.quantum_coeffs(n, n)
        assert q.theta == RatFunc.from_laurent(tl._delta_poly(2 * n))


def test_bubbles_and_loops_nonzero():
    for n in range(1, 4):
        for i in range(n + 1):
            q = tl.quantum_coeffs(n, i)
            assert not q.theta.is_zero
            assert not RatFunc.from_laurent(tl._delta_poly(2 * i)).is_zero


def test_framing_unit_values():
    assert tl.quantum_coeffs(2, 0).mu == LaurentPoly.monomial(-8, 1)
    assert tl.quantum_coeffs(1, 0).mu == LaurentPoly.monomial(-3, -1)
    assert tl.quantum_coeffs(3, 0).mu == LaurentPoly.monomial(-15, -1)


def test_kink_absorbed_by_projector():
    for n in (1, 2, 3):
        f = tl.jones_wenzl(n).element
        mu = RatFunc.from_laurent(tl.quantum_coeffs(n, 0).mu)
        for sign, unit in ((+1, mu), (-1, mu.inverse())):
            kinked = tl.compose(tl.compose(f, tl.kink_element(n, sign)), f)
            assert kinked == f.scale(unit)


# ---------------------------------------------------------------------------
# Rotation
# ---------------------------------------------------------------------------

def test_rotation_swaps_crossingless_units():
    for n in (1, 2, 3):
        zero = tl.unit_element(n, "0")
        inf = tl.unit_element(n, "inf")
        assert tl.rotate_cw(zero) == inf
        assert tl.rotate_cw(inf) == zero


def test_rotation_order_four():
    rng = random.Random(51)
    for n in (1, 2):
        for _ in range(5):
            x = tl.random_element(rng, 2 * n)
            assert tl.rotate_ccw(tl.rotate_cw(x)) == x
            y = x
            for _ in range(4):
                y = tl.rotate_cw(y)
            assert y == x


# ---------------------------------------------------------------------------
# The four-cluster basis
# ---------------------------------------------------------------------------

def test_basis_small_case_pins():
    b = tl.bni_basis(1)
    assert len(b) == 2
    assert b[0] == tl.unit_element(1, "inf")
    expected = tl.unit_element(1, "0") - tl.unit_element(1, "inf").scale(
        DELTA.inverse()
    )
    assert b[1] == expected


def test_basis_length():
    assert len(tl.bni_basis(2)) == 3
    assert len(tl.bni_basis(3)) == 4


def test_basis_is_linearly_independent():
    for n in (1, 2, 3):
        basis = tl.bni_basis(n)
        for i, b in enumerate(basis):
            coords = tl._solve_in_span(basis, b)
            for j, c in enumerate(coords):
                assert c == (ONE if j == i else RatFunc.zero())


def test_basis_gram_matrix_diagonal():
    for n in (1, 2):
        basis = tl.bni_basis(n)
        for i in range(n + 1):
            for j in range(n + 1):
                pairing = tl.trace_close(tl.tl_multiply(basis[i], basis[j], 2 * n))
                if i != j:
                    assert pairing.is_zero
                else:
                    q = tl.quantum_coeffs(n, i)
                    bridge = RatFunc.from_laurent(tl._delta_poly(2 * i))
                    assert pairing == q.theta * q.theta / bridge


# ---------------------------------------------------------------------------
# Colored expansion
# ---------------------------------------------------------------------------

def test_colored_infinity_is_first_basis_vector():
    for n in (1, 2):
        gammas = tl.colored_expand(RationalTangle.infinity(), n)
        assert gammas[0] == ONE
        assert all(g.is_zero for g in gammas[1:])


def test_colored_zero_tangle_single_cable():
    gammas = tl.colored_expand(RationalTangle.from_entries(0), 1)
    assert gammas == [DELTA.inverse(), ONE]


def test_single_cable_reduces_to_bracket():
    # with one strand per cable the expansion is the bracket vector in
    # the rotated basis: gamma_1 = beta, gamma_0 = alpha + beta/delta
    rng = random.Random(77)
    seen = 0
    while seen < 10:
        t = build_rational(random_twist_vector(rng, 4, 2))
        if sum(abs(a) for a in t.tv.entries) > 8:
            continue
        seen += 1
        vec = bracket_vector(t)
        alpha = RatFunc.from_laurent(vec.alpha)
        beta = RatFunc.from_laurent(vec.beta)
        gammas = tl.colored_expand(t, 1)
        assert gammas[1] == beta
        assert gammas[0] == alpha + DELTA.inverse() * beta


def test_projector_frame_absorbed():
    frame = tl.projector_frame(2)
    x = tl.colored_element(RationalTangle.from_entries(2, 1), 2)
    assert tl.tl_multiply(frame, x, 4) == x
    assert tl.tl_multiply(x, frame, 4) == x


def test_colored_element_replay_matches_cabled_state_sum():
    cases = [RationalTangle.from_entries(*e) for e in [(1,), (-2,), (2, 1), (1, 1)]]
    for t in cases:
        replay = tl.colored_element(t, 2)
        direct = tl.colored_element(rational_to_diagram(t), 2)
        assert replay == direct


def test_colored_cable_width_bound():
    with pytest.raises(ValueError):
        tl.colored_element(RationalTangle.from_entries(1), 4)


def test_ratio_invariants_quotients():
    gammas = [DELTA.inverse(), ONE]
    assert tl.colored_ratios(gammas) == [DELTA.inverse()]
    # scaling the whole vector leaves the ratios unchanged
    scaled = [g * A for g in gammas]
    assert tl.colored_ratios(scaled) == [DELTA.inverse()]


def test_ratio_invariants_zero_top_flagged():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        ratios = tl.colored_ratios([ONE, RatFunc.zero()])
    assert len(caught) == 1
    assert ratios == []
    with pytest.raises(ValueError, match="zero skein element"):
        tl.colored_ratios([RatFunc.zero(), RatFunc.zero()])


def test_ratio_invariants_agree_for_equal_fractions():
    # both vectors present the tangle with fraction 12/5
    left = tl.colored_ratios(tl.colored_expand(RationalTangle.from_entries(-2, 3, 2), 2))
    right = tl.colored_ratios(tl.colored_expand(RationalTangle.from_entries(3, -2, 3), 2))
    assert left == right
    assert len(left) == 2


def test_ratio_invariants_differ_for_different_fractions():
    left = tl.colored_ratios(tl.colored_expand(RationalTangle.from_entries(2), 1))
    right = tl.colored_ratios(tl.colored_expand(RationalTangle.from_entries(3), 1))
    assert left != right
