"""Affine algebra actions on tensors, wedges, and Fock windows.

Two routes are implemented and tested against each other. On tensors and
finite wedges the generators act diagonally (coproduct), with e_0/E_0
carrying z and f_0/F_0 carrying z^-1. On Fock windows everything is built
from the normally ordered fermion bilinears

    J^{ab}_{st}(m) = sum_n : psi_s^a(m+n)* psi_t^b(n) :

where psi_s^a(r) annihilates the mode k = s - N(a + L r). The normal
ordering is taken against the charge-0 vacuum, so diagonal bilinears pick up
an exact c-number depending on the window charge.
"""

from __future__ import annotations

from collections import namedtuple
from fractions import Fraction

from .tensor_space import (
    TensorVec, decompose,
    apply_matunit_gln, apply_matunit_gll, apply_zpow,
)
from .wedge_fock import (
    FockWindow, WedgeVec, WindowOverflow,
    wedge_project, window_size, window_keys, clifford, degree,
)

AffineGen = namedtuple("AffineGen", ["algebra", "kind", "idx"])


def affine_gen(kind: str, idx: int) -> AffineGen:
    """E/F/H s in [0,N) for sl_N hat; e/f/h a in [0,L); B m in Z."""
    if kind in ("E", "F", "H"):
        return AffineGen("slN", kind, idx)
    if kind in ("e", "f", "h"):
        return AffineGen("slL", kind, idx)
    if kind == "B":
        return AffineGen("heis", kind, idx)
    raise ValueError(f"unknown generator kind {kind!r}")


# ---------------------------------------------------------------- bilinears

def bilinear(s: int, t: int, a: int, b: int, m: int, w: FockWindow) -> FockWindow:
    """J^{ab}_{st}(m) on a Fock window.

    Creation momenta are k1 = k2 + dk with dk = (s-t) - N(a-b) - NLm. Tail
    deletions whose partner lands unoccupied above the tail cannot be
    represented at this l and raise WindowOverflow.
    """
    N, L = w.inner.N, w.inner.L
    n = window_size(w.M, w.l, N, L)
    tail_top = w.M - n
    dk = (s - t) - N * (a - b) - N * L * m
    out = {}
    for key, c in w.inner.terms.items():
        occupied = set(key)
        if dk == 0:
            eig = 0
            for k in key:
                tr = decompose(k, N, L)
                if tr.kbar == s and tr.kdot == a:
                    eig += 1
            # c-number: compare the actual tail with the charge-0 vacuum
            lo, hi = (tail_top, 0) if tail_top <= 0 else (0, tail_top)
            corr = 0
            for k in range(lo + 1, hi + 1):
                tr = decompose(k, N, L)
                if tr.kbar == s and tr.kdot == a:
                    corr += 1
            eig += corr if tail_top > 0 else -corr
            if eig:
                sv = out.get(key, 0) + c * eig
                if sv:
                    out[key] = sv
                else:
                    out.pop(key, None)
            continue
        # explicit deletions
        for i, k2 in enumerate(key):
            tr = decompose(k2, N, L)
            if tr.kbar != t or tr.kdot != b:
                continue
            k1 = k2 + dk
            if k1 in occupied or k1 <= tail_top:
                continue
            rest = key[:i] + key[i + 1:]
            above = sum(1 for x in rest if x > k1)
            nk = rest[:above] + (k1,) + rest[above:]
            sign = (-1 if i % 2 else 1) * (-1 if above % 2 else 1)
            sv = out.get(nk, 0) + sign * c
            if sv:
                out[nk] = sv
            else:
                out.pop(nk, None)
        # tail deletions can only matter when the partner climbs out
        if dk > 0:
            for k2 in range(tail_top - dk + 1, tail_top + 1):
                tr = decompose(k2, N, L)
                if tr.kbar != t or tr.kdot != b:
                    continue
                k1 = k2 + dk
                if k1 > tail_top and k1 not in occupied:
                    raise WindowOverflow(
                        f"bilinear moves tail mode {k2} of key {key}; enlarge l")
    return FockWindow(w.M, w.l, w.d, WedgeVec(n, N, L, out))


def bilinear_nn(s: int, t: int, m: int, w: FockWindow) -> FockWindow:
    "J_{st}(m) = sum_a J^{aa}_{st}(m)."
    out = w.zero_like()
    for a in range(1, w.inner.L + 1):
        out = out + bilinear(s, t, a, a, m, w)
    return out


def bilinear_ll(a: int, b: int, m: int, w: FockWindow) -> FockWindow:
    "J^{ab}(m) = sum_s J^{ab}_{ss}(m)."
    out = w.zero_like()
    for s in range(1, w.inner.N + 1):
        out = out + bilinear(s, s, a, b, m, w)
    return out


def heis_b(m: int, w: FockWindow) -> FockWindow:
    "B(m) = sum_{s,a} J^{aa}_{ss}(m)."
    out = w.zero_like()
    for s in range(1, w.inner.N + 1):
        for a in range(1, w.inner.L + 1):
            out = out + bilinear(s, s, a, a, m, w)
    return out


def traceless_ll(a: int, m: int, w: FockWindow) -> FockWindow:
    "I^{aa}(m) = J^{aa}(m) - B(m)/L."
    return bilinear_ll(a, a, m, w) - Fraction(1, w.inner.L) * heis_b(m, w)


# ------------------------------------------------------------------ actions

def _act_tensor_slot(gen: AffineGen, i: int, v: TensorVec) -> TensorVec:
    N, L = v.N, v.L
    if gen.algebra == "slN":
        s = gen.idx
        if gen.kind == "E":
            if s == 0:
                return apply_zpow(i, 1, apply_matunit_gln(N, 1, i, v))
            return apply_matunit_gln(s, s + 1, i, v)
        if gen.kind == "F":
            if s == 0:
                return apply_zpow(i, -1, apply_matunit_gln(1, N, i, v))
            return apply_matunit_gln(s + 1, s, i, v)
        if s == 0:
            return (apply_matunit_gln(N, N, i, v)
                    - apply_matunit_gln(1, 1, i, v))
        return (apply_matunit_gln(s, s, i, v)
                - apply_matunit_gln(s + 1, s + 1, i, v))
    if gen.algebra == "slL":
        aa = gen.idx
        if gen.kind == "e":
            if aa == 0:
                return apply_zpow(i, 1, apply_matunit_gll(1, L, i, v))
            return apply_matunit_gll(L - aa + 1, L - aa, i, v)
        if gen.kind == "f":
            if aa == 0:
                return apply_zpow(i, -1, apply_matunit_gll(L, 1, i, v))
            return apply_matunit_gll(L - aa, L - aa + 1, i, v)
        if aa == 0:
            return (apply_matunit_gll(1, 1, i, v)
                    - apply_matunit_gll(L, L, i, v))
        return (apply_matunit_gll(L - aa + 1, L - aa + 1, i, v)
                - apply_matunit_gll(L - aa, L - aa, i, v))
    # Heisenberg B(m) = sum_i z_i^m
    return apply_zpow(i, gen.idx, v)


def act_tensor(gen: AffineGen, v: TensorVec) -> TensorVec:
    out = v.zero_like()
    for i in range(1, v.n + 1):
        out = out + _act_tensor_slot(gen, i, v)
    return out


def act_wedge(gen: AffineGen, w: WedgeVec) -> WedgeVec:
    out = w.zero_like()
    for key, c in w.terms.items():
        t = TensorVec.basis(key, w.N, w.L)
        out = out + c * wedge_project(act_tensor(gen, t))
    return out


def act_fock(gen: AffineGen, w: FockWindow) -> FockWindow:
    "Dictionary route: every generator as a fermion bilinear."
    N, L = w.inner.N, w.inner.L
    if gen.algebra == "slN":
        s = gen.idx
        if gen.kind == "E":
            return bilinear_nn(N, 1, 1, w) if s == 0 else bilinear_nn(s, s + 1, 0, w)
        if gen.kind == "F":
            return bilinear_nn(1, N, -1, w) if s == 0 else bilinear_nn(s + 1, s, 0, w)
        if s == 0:
            return (L * w + bilinear_nn(N, N, 0, w) - bilinear_nn(1, 1, 0, w))
        return bilinear_nn(s, s, 0, w) - bilinear_nn(s + 1, s + 1, 0, w)
    if gen.algebra == "slL":
        a = gen.idx
        if gen.kind == "e":
            return bilinear_ll(1, L, 1, w) if a == 0 else bilinear_ll(L - a + 1, L - a, 0, w)
        if gen.kind == "f":
            return bilinear_ll(L, 1, -1, w) if a == 0 else bilinear_ll(L - a, L - a + 1, 0, w)
        if a == 0:
            return (N * w + bilinear_ll(1, 1, 0, w) - bilinear_ll(L, L, 0, w))
        return (bilinear_ll(L - a + 1, L - a + 1, 0, w)
                - bilinear_ll(L - a, L - a, 0, w))
    return heis_b(gen.idx, w)


def act(gen: AffineGen, v):
    if isinstance(v, TensorVec):
        return act_tensor(gen, v)
    if isinstance(v, WedgeVec):
        return act_wedge(gen, v)
    if isinstance(v, FockWindow):
        return act_fock(gen, v)
    raise TypeError(f"cannot act on {type(v).__name__}")


# ------------------------------------------------------------- dual weights

DualWeightData = namedtuple("DualWeightData", ["M", "Lam", "ls", "omega", "chi"])


def dual_weight(M: int, Lam, N: int, L: int) -> DualWeightData:
    """Solve l_1 >= ... from Lambda = level-L weight (a_0..a_{N-1}) and M.

    a_s = l_s - l_{s+1} for s >= 1 and M = sum l_s; the congruence
    M = sum_t t a_t mod N must hold for an integer solution.
    """
    Lam = tuple(int(x) for x in Lam)
    if len(Lam) != N or any(x < 0 for x in Lam) or sum(Lam) != L:
        raise ValueError("Lambda must be N nonnegative marks summing to L")
    rest = sum(t * Lam[t] for t in range(1, N))
    if (M - rest) % N != 0:
        raise ValueError("charge and weight congruence violated")
    lN = (M - rest) // N
    ls = [lN + sum(Lam[t] for t in range(s, N)) for s in range(1, N)] + [lN]
    # omega as the multiset of residues; chi counts how many reach each depth
    res = sorted(x % L for x in ls)
    chi = tuple(sum(1 for r in res if r >= L + 1 - c) for c in range(1, L + 1))
    return DualWeightData(M, Lam, tuple(ls), tuple(res), chi)


def frenkel_hw(M: int, Lam, N: int, L: int, l: int | None = None) -> FockWindow:
    """Xi_1(l_1) ... Xi_N(l_N) |0>, the dual-pair highest weight vector."""
    data = dual_weight(M, Lam, N, L)
    deep = max([abs(x) for x in data.ls] + [1])
    if l is None:
        l = (N * deep) // (N * L) + 1
    n0 = window_size(0, l, N, L)
    vac = FockWindow.vacuum(0, N, L, l, n0)  # capacity relaxed during build
    w = vac
    for s in range(N, 0, -1):
        lv = data.ls[s - 1]
        if lv > 0:
            for j in range(lv):
                w = clifford("create", s + N * j, w)
        else:
            for j in range(1, -lv + 1):
                w = clifford("annihilate", s - N * j, w)
    if w.M != M:
        raise AssertionError("charge bookkeeping broke")
    dmax = max(degree(key, w.M, N, L) for key in w.inner.terms)
    return FockWindow(w.M, w.l, dmax, w.inner)


# ------------------------------------------------------- exact linear spans

class LinSpan:
    """Row space over Q with exact Gaussian elimination.

    Columns are fixed up front; rows are kept reduced with pivot 1 and in
    pivot order, so ranks and membership tests are deterministic.
    """

    def __init__(self, columns):
        self.index = {c: i for i, c in enumerate(columns)}
        self.ncols = len(columns)
        self.rows = []  # (pivot, dense list)

    def _reduce(self, dense):
        for pivot, row in self.rows:
            c = dense[pivot]
            if c:
                for j in range(pivot, self.ncols):
                    if row[j]:
                        dense[j] -= c * row[j]
        return dense

    def _densify(self, terms):
        dense = [Fraction(0)] * self.ncols
        for key, c in terms.items():
            if key not in self.index:
                raise KeyError(f"vector leaves the column space at {key}")
            dense[self.index[key]] = Fraction(c)
        return dense

    def add(self, terms) -> bool:
        "Insert a vector (sparse map column->coeff); True if the rank grew."
        dense = self._reduce(self._densify(terms))
        for p in range(self.ncols):
            if dense[p]:
                inv = 1 / dense[p]
                dense = [x * inv for x in dense]
                # back-substitute into earlier rows
                for i, (piv, row) in enumerate(self.rows):
                    if row[p]:
                        c = row[p]
                        self.rows[i] = (piv, [x - c * y for x, y in zip(row, dense)])
                self.rows.append((p, dense))
                self.rows.sort(key=lambda r: r[0])
                return True
        return False

    def contains(self, terms) -> bool:
        return not any(self._reduce(self._densify(terms)))

    @property
    def rank(self) -> int:
        return len(self.rows)


def uprime_subspace(chi, M: int, d: int, l: int, N: int, L: int) -> LinSpan:
    """Degree-d slice of U'(b^chi) F_M inside the window.

    Single-generator images suffice: the subalgebra is generated by the
    degree-0 lowering operators f_a, the shifted Cartans h_a^chi, and f_0,
    and g.(span at the right degree) already covers every longer word
    because the window pieces F^e contain all images of lower words. The
    generator list walks degree-d keys under h_a^chi and f_a and degree-(d-1)
    keys under f_0.
    """
    chi = tuple(chi)
    if len(chi) != L:
        raise ValueError("chi must have length L")
    keys_d = window_keys(M, l, N, L, d)
    span = LinSpan(keys_d)
    for key in keys_d:
        base = FockWindow(M, l, d, WedgeVec.basis(key, N, L))
        for a in range(1, L):
            hv = act_fock(affine_gen("h", a), base)
            shift = chi[L - a] - chi[L - a - 1]  # chi(L+1-a) - chi(L-a)
            img = hv - shift * base
            if not img.is_zero():
                span.add(img.inner.terms)
            fv = act_fock(affine_gen("f", a), base)
            if not fv.is_zero():
                span.add(fv.inner.terms)
    if d >= 1:
        for key in window_keys(M, l, N, L, d - 1):
            base = FockWindow(M, l, d, WedgeVec.basis(key, N, L))
            fv = act_fock(affine_gen("f", 0), base)
            if not fv.is_zero():
                span.add(fv.inner.terms)
    return span
