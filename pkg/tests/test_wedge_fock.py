from fractions import Fraction

import pytest

from yangfock.tensor_space import TensorVec, apply_swap
from yangfock.wedge_fock import (
    FockWindow, WedgeVec, WindowOverflow,
    normal_order, wedge_project, degree, window_size,
    embed_tail, restrict_tail, clifford, spin_profile,
    window_keys, window_basis,
)


def test_normal_order_examples():
    assert normal_order((3, 5)) == ((5, 3), -1)
    assert normal_order((3, 3)) is None
    assert normal_order((1, 2, 3)) == ((3, 2, 1), -1)
    assert normal_order((5, 3)) == ((5, 3), 1)


def test_wedge_project_examples():
    v = TensorVec.basis((3, 5), 2, 2)
    assert wedge_project(v) == (-1) * WedgeVec.basis((5, 3), 2, 2)
    assert wedge_project(TensorVec.basis((4, 4), 2, 2)).is_zero()


def test_wedge_project_kills_symmetrizers():
    v = (TensorVec.basis((7, -2, 3), 2, 2)
         + Fraction(3, 5) * TensorVec.basis((0, 1, 2), 2, 2))
    sym = v + apply_swap("full", 1, 2, v)
    assert wedge_project(sym).is_zero()


def test_degree_examples():
    vac = (0, -1, -2, -3)
    assert degree(vac, 0, 2, 2) == 0
    assert degree((4, -1, -2, -3), 0, 2, 2) == 1
    with pytest.raises(WindowOverflow):
        degree((0, -1, -2, -4), 0, 2, 2)  # kund(-4)=1 breaks the tail bound


def test_window_sizes_and_vacuum():
    assert window_size(0, 1, 2, 2) == 4
    assert window_size(2, 1, 2, 2) == 6
    w = FockWindow.vacuum(0, 2, 2, 1, 1)
    assert list(w.inner.terms) == [(0, -1, -2, -3)]


def test_window_key_counts():
    assert window_keys(0, 1, 2, 2, 0) == [(0, -1, -2, -3)]
    deg1 = window_keys(0, 1, 2, 2, 1)
    assert len(deg1) == 16
    # one momentum from {1,2,3,4}, the rest a 3-subset of {0,-1,-2,-3}
    for key in deg1:
        assert sum(1 for k in key if k > 0) == 1
        assert all(k in (1, 2, 3, 4) or -3 <= k <= 0 for k in key)
    # the degree-1 dimension is stable in l
    assert len(window_keys(0, 2, 2, 2, 1)) == 16
    assert len(window_basis(0, 1, 2, 2, 1)) == 17


def test_embed_restrict_roundtrip():
    w = FockWindow(0, 1, 1, WedgeVec.basis((4, -1, -2, -3), 2, 2)
                   + 2 * WedgeVec.basis((0, -1, -2, -3), 2, 2))
    up = embed_tail(w, 2)
    assert up.inner.n == 8
    for key in up.inner.terms:
        assert key[4:] == (-4, -5, -6, -7)
        assert degree(key, 0, 2, 2) == degree(key[:4], 0, 2, 2)
    assert restrict_tail(up, 1) == w


def test_clifford_create_and_annihilate():
    vac = FockWindow.vacuum(0, 2, 2, 1, 1)
    up = clifford("create", 1, vac)
    assert up.M == 1
    assert list(up.inner.terms.items()) == [((1, 0, -1, -2, -3), Fraction(1))]
    # annihilating an unoccupied non-tail mode gives zero
    assert clifford("annihilate", 3, vac).is_zero()
    # annihilating inside the tail cannot be represented
    with pytest.raises(WindowOverflow):
        clifford("annihilate", -4, vac)


def test_clifford_relation():
    w = FockWindow(0, 1, 1, WedgeVec.basis((4, -1, -2, -3), 2, 2)
                   - 3 * WedgeVec.basis((0, -1, -2, -3), 2, 2))
    for k in (2, 0, -1, -3):
        ab = clifford("create", k, clifford("annihilate", k, w))
        ba = clifford("annihilate", k, clifford("create", k, w))
        assert ab + ba == w
    for k, k2 in [(2, 3), (0, 2)]:
        ab = clifford("create", k, clifford("create", k2, w))
        ba = clifford("create", k2, clifford("create", k, w))
        assert (ab + ba).is_zero()


def test_clifford_tracks_degree_budget():
    vac = FockWindow.vacuum(0, 2, 2, 1, 0)
    with pytest.raises(WindowOverflow):
        clifford("create", 5, vac)  # kund(5) = -2 makes the degree 2 > 0


def test_spin_profile_vacuum():
    assert spin_profile((0, -1, -2, -3), 2, 2) == (2, 2)
    assert spin_profile((4, -1, -2, -3), 2, 2) == (2, 2)
    # kdots of (3, 0, -1, -2) are (1, 1, 1, 2)
    assert spin_profile((3, 0, -1, -2), 2, 2) == (1, 3)
