from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yangfock.daha import (
    AffRoot, WeightFn, WeylElt, block_roots_avoided,
    is_regular_combinatorial, is_regular_pairing, pairing, phi_simple,
    phi_weyl, pi_apply, reg_seq_parts, simple_root, root_is_negative,
    v0_tensor, weyl_apply, x_r, zeta0, zeta_r,
)
from yangfock.tensor_space import TensorVec, apply_dunkl, apply_swap, compose

from support import all_reg_candidates, pairing_value_union


def weyl_elts(n, lam_bound=2):
    lam = st.tuples(*[st.integers(-lam_bound, lam_bound)] * n)
    sigma = st.permutations(range(1, n + 1))
    return st.builds(lambda l, s: WeylElt(l, tuple(s)), lam, sigma)


@given(weyl_elts(3), weyl_elts(3), weyl_elts(3))
def test_group_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(weyl_elts(4))
def test_group_inverse(w):
    assert w * w.inv() == WeylElt.identity(4)
    assert w.inv() * w == WeylElt.identity(4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pi_conjugates_simples(n):
    p = WeylElt.pi(n)
    for i in range(n):
        lhs = p * WeylElt.simple(i, n) * p.inv()
        assert lhs == WeylElt.simple((i + 1) % n, n)


@given(weyl_elts(3), st.integers(-3, 3), st.integers(1, 3),
       st.integers(1, 3), st.integers(-2, 2))
def test_pairing_is_invariant(w, k, i, j, level):
    if i == j:
        return
    zeta = WeightFn(Fraction(level), (Fraction(5), Fraction(-1), Fraction(2)))
    root = AffRoot(i, j, k)
    lhs = pairing(w.act_weight(zeta), w.act_root(root))
    assert lhs == pairing(zeta, root)


@given(weyl_elts(3))
def test_reduced_word_rebuilds(w):
    j, letters = w.reduced_word()
    back = WeylElt.pi_power(3, j)
    for i in letters:
        back = back * WeylElt.simple(i, 3)
    assert back == w
    assert len(letters) == w.length()


def test_inversion_set_simple_cases():
    s1 = WeylElt.simple(1, 3)
    assert s1.inversion_set() == [AffRoot(1, 2, 0)]
    s0 = WeylElt.simple(0, 3)
    assert s0.inversion_set() == [AffRoot(3, 1, 1)]
    assert WeylElt.pi(3).length() == 0


def key3(*triples):
    return tuple(compose(kb, kd, ku, 2, 2) for kb, kd, ku in triples)


@given(st.permutations(range(1, 4)), st.permutations(range(1, 4)),
       st.tuples(*[st.integers(-2, 2)] * 3), st.tuples(*[st.integers(-2, 2)] * 3))
def test_weyl_apply_homomorphism(s1, s2, l1, l2):
    w1, w2 = WeylElt(l1, tuple(s1)), WeylElt(l2, tuple(s2))
    v = TensorVec.basis(key3((1, 1, 0), (2, 2, -1), (1, 2, 1)), 2, 2)
    assert weyl_apply(w1 * w2, v) == weyl_apply(w1, weyl_apply(w2, v))


def test_weyl_apply_simple_is_double_swap():
    v = TensorVec.basis(key3((1, 1, 0), (2, 2, -1), (1, 2, 1)), 2, 2)
    lhs = weyl_apply(WeylElt.simple(1, 3), v)
    assert lhs == apply_swap("spinL", 1, 2, apply_swap("z", 1, 2, v))


def eigenvalue_of(op_v, v):
    "op_v = c v for a basis-aligned pair; recover c."
    assert set(op_v.terms) <= set(v.terms)
    if not op_v.terms:
        return Fraction(0)
    key = next(iter(op_v.terms))
    return op_v.terms[key] / v.terms[key]


def test_dunkl_block_vector_eigenvalues():
    v = v0_tensor(2, 2, 2)
    nu = (1, 2)
    for i, expect in [(1, 2), (2, 1), (3, 3), (4, 2)]:
        dv = apply_dunkl(i, 2, nu, v)
        assert dv == expect * v, i
    # eigenvalues are minus the weight coordinates
    assert zeta0(2, 2).c == (-2, -1, -3, -2)
    assert zeta0(2, 2).level == 2
    assert zeta0(2, 2, kappa=5).level == 5


def test_dunkl_block_vector_l3():
    v = v0_tensor(2, 3, 1)
    nu = (1, 2, 3)
    for i in (1, 2, 3):
        assert apply_dunkl(i, 3, nu, v) == i * v


def weight_of(v, kappa, nu):
    "Read off the weight from Dunkl eigenvalues (negated)."
    out = []
    for i in range(1, v.n + 1):
        dv = apply_dunkl(i, kappa, nu, v)
        c = eigenvalue_of(dv, v)
        assert dv == c * v, "not a Dunkl eigenvector"
        out.append(-c)
    return tuple(out)


@pytest.mark.parametrize("i", [0, 2])
def test_intertwiner_moves_weight(i):
    # i = 1 and i = 3 act inside a block, where (zeta0, alpha_i) = -1 and
    # phi_i kills v0; the cross-block and affine directions move the weight
    kappa, nu = 2, (1, 2)
    v = v0_tensor(2, 2, 2)
    z = zeta0(2, 2)
    out = phi_simple(i, kappa, nu, v)
    assert not out.is_zero()
    expect = WeylElt.simple(i, 4).act_weight(z)
    assert weight_of(out, kappa, nu) == expect.c


def test_intertwiner_square_scalar():
    kappa, nu = 2, (1, 2)
    v = v0_tensor(2, 2, 2)
    z = zeta0(2, 2)
    for w in [WeylElt.simple(2, 4), WeylElt.simple(0, 4),
              WeylElt.simple(0, 4) * WeylElt.simple(2, 4),
              WeylElt.pi(4) * WeylElt.simple(1, 4)]:
        scal = Fraction(1)
        for al in w.inversion_set():
            scal *= 1 - pairing(z, al) ** 2
        out = phi_weyl(w.inv(), kappa, nu, phi_weyl(w, kappa, nu, v))
        assert out == scal * v, w


def test_x_r_vacuum_is_identity():
    assert x_r((1, 1, 2, 2), 2) == WeylElt.identity(4)


def test_x_r_single_step_is_pi():
    assert x_r((0, 1), 2) == WeylElt.pi(2)


def test_reg_seq_parts_validation():
    with pytest.raises(ValueError):
        reg_seq_parts((2, 1), 2)  # decreasing
    with pytest.raises(ValueError):
        reg_seq_parts((1, 1), 2)  # color 2 missing
    a, lam = reg_seq_parts((-2, -1, 0, 3), 2)
    assert a == (2, 1, 2, 1)
    assert lam == (2, 1, 1, -1)


def test_regularity_algorithms_agree_2_2():
    cands = all_reg_candidates(2, 2, lo=-1, hi=1)
    assert len(cands) > 10
    seen_reg = seen_irr = False
    for r in cands:
        p = is_regular_pairing(r, 2)
        c = is_regular_combinatorial(r, 2)
        assert p == c, r
        seen_reg |= p
        seen_irr |= not p
    assert seen_reg and seen_irr


def test_pairing_set_matches_combinatorial_union():
    for r in all_reg_candidates(2, 2, lo=-1, hi=1):
        w = x_r(r, 2)
        z = zeta0(2, 2)
        got = {pairing(z, al) for al in w.inversion_set()}
        assert got == pairing_value_union(r, 2), r


def test_root_sign_helpers():
    assert root_is_negative(AffRoot(2, 1, 0))
    assert not root_is_negative(AffRoot(1, 2, 0))
    assert not root_is_negative(simple_root(0, 4))
    assert root_is_negative(AffRoot(1, 2, -1))


def mixed3():
    v = TensorVec.basis(key3((1, 1, 0), (2, 2, -1), (1, 2, 1)), 2, 2)
    w = TensorVec.basis(key3((2, 1, 1), (1, 1, 0), (2, 2, 0)), 2, 2)
    return v + 3 * w


@pytest.mark.parametrize("i", [1, 2])
@pytest.mark.parametrize("j", [1, 2, 3])
def test_defining_relation_reflection_coroot(i, j):
    # s_i xi - s_i(xi) s_i = -alpha_i(xi) for xi = eps_j^vee
    kappa, nu = 2, (1, 2)
    v = mixed3()
    sij = j
    if j == i:
        sij = i + 1
    elif j == i + 1:
        sij = i
    lhs = (pi_apply("s", kappa, nu, pi_apply("coroot", kappa, nu, v, j), i)
           - pi_apply("coroot", kappa, nu, pi_apply("s", kappa, nu, v, i), sij))
    scal = -((1 if i == j else 0) - (1 if i + 1 == j else 0))
    assert lhs == scal * v


def test_pi_apply_translation_is_z_inverse():
    v = TensorVec.basis(key3((1, 1, 0), (2, 2, -1), (1, 2, 1)), 2, 2)
    out = pi_apply("t_eps", 2, (1, 2), v, 2)
    assert out == TensorVec.basis(key3((1, 1, 0), (2, 2, -2), (1, 2, 1)), 2, 2)


def test_pi_apply_pi_is_composite():
    # pi acts as z_1^{-1} after the chain of adjacent double swaps
    kappa, nu = 2, (1, 2)
    v = mixed3()
    step = apply_swap("spinL", 2, 3, apply_swap("z", 2, 3, v))
    step = apply_swap("spinL", 1, 2, apply_swap("z", 1, 2, step))
    expect = pi_apply("t_eps", kappa, nu, step, 1)
    assert pi_apply("pi", kappa, nu, v) == expect
    assert pi_apply("c", kappa, nu, v) == kappa * v


def test_intertwiner_square_operator_identity():
    kappa, nu = 2, (1, 2)
    v = mixed3()
    for i in (0, 1, 2):
        if i == 0:
            av = lambda u: (kappa * u
                            + apply_dunkl(1, kappa, nu, u)
                            - apply_dunkl(3, kappa, nu, u))
        else:
            av = lambda u, i=i: (apply_dunkl(i + 1, kappa, nu, u)
                                 - apply_dunkl(i, kappa, nu, u))
        lhs = phi_simple(i, kappa, nu, phi_simple(i, kappa, nu, v))
        assert lhs == v - av(av(v)), i


@pytest.mark.parametrize("i,j", [(0, 1), (1, 2), (0, 2)])
def test_intertwiner_braid_relations(i, j):
    kappa, nu = 2, (1, 2)
    v = mixed3()
    lhs = phi_simple(i, kappa, nu, phi_simple(j, kappa, nu,
                                              phi_simple(i, kappa, nu, v)))
    rhs = phi_simple(j, kappa, nu, phi_simple(i, kappa, nu,
                                              phi_simple(j, kappa, nu, v)))
    assert lhs == rhs


def test_phi_weyl_reduced_word_independence():
    kappa, nu = 2, (1, 2)
    v = mixed3()
    for w in [WeylElt.simple(1, 3) * WeylElt.simple(2, 3) * WeylElt.simple(1, 3),
              WeylElt.simple(0, 3) * WeylElt.simple(1, 3) * WeylElt.simple(0, 3),
              WeylElt.translation((1, 0, -1)),
              WeylElt.pi(3) * WeylElt.simple(2, 3) * WeylElt.simple(1, 3)]:
        first = w.reduced_word("first")
        last = w.reduced_word("last")
        assert len(first[1]) == len(last[1]) == w.length()
        got = phi_weyl(w, kappa, nu, v, prefer="last")
        assert got == phi_weyl(w, kappa, nu, v, prefer="first"), w


def test_zeta_r_vacuum_and_transport():
    assert zeta_r((1, 1, 2, 2), 2) == WeightFn(2, (-2, -1, -3, -2))
    z = zeta0(2, 2)
    for r in all_reg_candidates(2, 2, lo=-1, hi=1):
        if not is_regular_pairing(r, 2):
            with pytest.raises(ValueError):
                zeta_r(r, 2)
            continue
        assert zeta_r(r, 2) == x_r(r, 2).act_weight(z), r


def test_zeta_r_matches_dunkl_eigenvalues():
    # the intertwined vector is a simultaneous Dunkl eigenvector with
    # eigenvalues minus the transported weight
    kappa, nu = 2, (1, 2)
    checked = 0
    for r in [(0, 1, 2, 3), (-1, 1, 2, 4), (0, 0, 1, 1)]:
        if not is_regular_pairing(r, 2):
            continue
        v = phi_weyl(x_r(r, 2), kappa, nu, v0_tensor(2, 2, 2))
        assert not v.is_zero()
        got = weight_of(v, kappa, nu)
        assert got == zeta_r(r, 2).c, r
        checked += 1
    assert checked >= 2


def test_x_r_avoids_block_roots():
    for r in all_reg_candidates(2, 2, lo=-1, hi=1):
        assert block_roots_avoided(r, 2), r
