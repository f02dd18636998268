from fractions import Fraction

import pytest

from yangfock.affine_actions import (
    LinSpan, act, affine_gen, bilinear, bilinear_ll, bilinear_nn,
    dual_weight, frenkel_hw, heis_b, uprime_subspace,
)
from yangfock.wedge_fock import (
    FockWindow, WedgeVec, WindowOverflow, window_keys, window_size,
)


def vac(l=1, d=1, M=0):
    return FockWindow.vacuum(M, 2, 2, l, d)


def key_of(w):
    [(key, c)] = w.inner.terms.items()
    return key, c


def test_f0_on_vacuum_two_terms():
    # z^-1 e_{L1} moves a spin-down mode four steps; two slots can move
    w = act(affine_gen("f", 0), vac())
    assert w.inner.terms == {
        (2, -1, -2, -3): Fraction(1),
        (1, 0, -2, -3): Fraction(-1),
    }


def test_e0_then_f0_vacuum_diagonal():
    # e0 kills the vacuum; [e0,f0] = h0 has eigenvalue N + chi-type constant
    z = act(affine_gen("e", 0), vac())
    assert z.is_zero()
    w = act(affine_gen("f", 0), vac())
    back = act(affine_gen("e", 0), w)
    h = act(affine_gen("h", 0), vac())
    assert back == h


def test_heisenberg_level():
    # [B(1), B(-1)] = NL on any degree-0 window vector
    v = vac()
    up = heis_b(-1, v)
    down = heis_b(1, up)
    # B(-1) vac has degree 1, B(1) of it returns NL * vac; B(-1)B(1) vac = 0
    assert heis_b(1, v).is_zero()
    assert down == 4 * v


def test_sln_level_is_L():
    # central element H_0 + H_1 acts by L = 2
    v = vac()
    tot = act(affine_gen("H", 0), v) + act(affine_gen("H", 1), v)
    assert tot == 2 * v


def test_sll_level_is_N():
    v = vac()
    tot = act(affine_gen("h", 0), v) + act(affine_gen("h", 1), v)
    assert tot == 2 * v


def test_bilinear_sln_current_algebra():
    # [J_12(1), J_21(-1)] = J_11(0) - J_22(0) + L on the vacuum
    v = vac()
    ab = bilinear_nn(1, 2, 1, bilinear_nn(2, 1, -1, v))
    ba = bilinear_nn(2, 1, -1, bilinear_nn(1, 2, 1, v))
    comm = ab - ba
    diag = bilinear_nn(1, 1, 0, v) - bilinear_nn(2, 2, 0, v)
    assert comm == diag + 2 * v


def test_bilinear_sll_central_term():
    # [J^{12}(1), J^{21}(-1)] = J^{11}(0) - J^{22}(0) + N
    v = vac()
    ab = bilinear_ll(1, 2, 1, bilinear_ll(2, 1, -1, v))
    ba = bilinear_ll(2, 1, -1, bilinear_ll(1, 2, 1, v))
    comm = ab - ba
    diag = bilinear_ll(1, 1, 0, v) - bilinear_ll(2, 2, 0, v)
    assert comm == diag + 2 * v


def test_two_actions_commute():
    # the sl_N-hat and sl_L-hat dictionaries commute on a deep window
    v = FockWindow.vacuum(0, 2, 2, 2, 2)
    w = act(affine_gen("f", 0), act(affine_gen("F", 0), v))
    a = act(affine_gen("F", 1), act(affine_gen("e", 1), w))
    b = act(affine_gen("e", 1), act(affine_gen("F", 1), w))
    assert a == b


def test_dictionary_matches_coproduct_on_wedges():
    # compare the bilinear route against the diagonal tensor action slotwise
    v = FockWindow.vacuum(0, 2, 2, 2, 2)
    w = act(affine_gen("f", 0), v)  # degree 1, two terms
    # B(0) is excluded: normally ordered it counts charge M, slotwise it
    # counts slots n, and both are scalars anyway
    for kind, idx in [("E", 1), ("F", 1), ("H", 1), ("e", 1), ("f", 1),
                      ("h", 1)]:
        g = affine_gen(kind, idx)
        fock = act(g, w)
        wedge = act(g, w.inner)
        assert fock.inner == wedge, (kind, idx)


def test_charged_generators_match_coproduct_when_window_allows():
    v = FockWindow.vacuum(0, 2, 2, 2, 3)
    w = act(affine_gen("f", 0), act(affine_gen("f", 0), v))
    for kind in ("F", "f"):
        g = affine_gen(kind, 0)
        fock = act(g, w)
        wedge = act(g, w.inner)
        assert fock.inner == wedge, kind


def test_window_overflow_signals():
    # B(-1) at capacity 0 overflows the degree budget
    with pytest.raises(WindowOverflow):
        heis_b(-1, vac(l=1, d=0))


def test_dual_weight_vacuum():
    data = dual_weight(0, (2, 0), 2, 2)
    assert data.ls == (0, 0)
    assert data.chi == (0, 0)


def test_dual_weight_charge_two():
    data = dual_weight(2, (0, 2), 2, 2)
    assert data.ls == (2, 0)
    assert data.chi == (0, 0)


def test_dual_weight_congruence_error():
    with pytest.raises(ValueError):
        dual_weight(0, (1, 1), 2, 2)


def test_dual_weight_distinct_at_level_two():
    seen = {}
    for lam in [(2, 0), (0, 2)]:
        for M in (0, 2):
            try:
                data = dual_weight(M, lam, 2, 2)
            except ValueError:
                continue
            assert (M, data.omega) not in seen
            seen[(M, data.omega)] = lam


def test_frenkel_hw_charge_two():
    w = frenkel_hw(2, (0, 2), 2, 2)
    assert w.M == 2
    [(key, c)] = w.inner.terms.items()
    assert c in (1, -1, Fraction(1), Fraction(-1))
    n = window_size(2, w.l, 2, 2)
    expect = (3, 1) + tuple(0 - i for i in range(n - 2))
    assert key == expect


def test_frenkel_hw_is_highest_weight():
    w = frenkel_hw(2, (0, 2), 2, 2)
    for kind in ("E", "e"):
        for idx in (0, 1):
            assert act(affine_gen(kind, idx), w).is_zero(), (kind, idx)
    assert heis_b(1, w).is_zero()
    # Cartan eigenvalues: H_s picks out the sl_N weight marks
    assert act(affine_gen("H", 1), w) == 2 * w
    assert act(affine_gen("H", 0), w) == 0 * w
    assert act(affine_gen("h", 1), w) == 0 * w


def test_linspan_rank_and_membership():
    cols = ["a", "b", "c"]
    sp = LinSpan(cols)
    assert sp.add({"a": Fraction(1), "b": Fraction(2)})
    assert sp.add({"b": Fraction(1), "c": Fraction(1)})
    assert not sp.add({"a": Fraction(1), "b": Fraction(3), "c": Fraction(1)})
    assert sp.rank == 2
    assert sp.contains({"a": Fraction(2), "b": Fraction(4)})
    assert not sp.contains({"c": Fraction(1), "a": Fraction(1)})


def test_uprime_degree0_is_zero():
    span = uprime_subspace((0, 0), 0, 0, 1, 2, 2)
    assert span.rank == 0  # quotient dimension 1: the vacuum survives


def test_uprime_degree1_quotient_dim():
    for l in (1, 2):
        keys = window_keys(0, l, 2, 2, 1)
        span = uprime_subspace((0, 0), 0, 1, l, 2, 2)
        assert len(keys) - span.rank == 4, l
