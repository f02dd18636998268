"""Extended affine Weyl group, intertwiners, and regular sequences.

Elements are written t_lam * sigma with lam in Z^n and sigma a permutation;
products follow (t_lam sigma)(t_mu tau) = t_{lam + sigma(mu)} sigma tau with
(sigma mu)_i = mu_{sigma^{-1}(i)}. Affine roots alpha_{ij} + k delta are
triples; the level enters pairings as the coefficient of delta.

The polynomial representation sends t_{eps_i} to z_i^{-1}, s_i to the
combined coordinate and color swap, and coroots to Dunkl operators; the
intertwiners phi_i = 1 + s_i alpha_i^vee shuffle weight spaces.
"""

from __future__ import annotations

from collections import namedtuple
from fractions import Fraction

from .tensor_space import TensorVec, apply_dunkl, compose, decompose

AffRoot = namedtuple("AffRoot", ["i", "j", "k"])

WeightFn = namedtuple("WeightFn", ["level", "c"])


def simple_root(i: int, n: int) -> AffRoot:
    if i == 0:
        return AffRoot(n, 1, 1)
    return AffRoot(i, i + 1, 0)


def root_is_negative(r: AffRoot) -> bool:
    return r.k < 0 or (r.k == 0 and r.i > r.j)


def pairing(zeta: WeightFn, r: AffRoot):
    "(zeta, alpha_ij + k delta) = c_i - c_j + k * level."
    return zeta.c[r.i - 1] - zeta.c[r.j - 1] + r.k * zeta.level


def _perm_mul(s, t):
    "(s t)(i) = s(t(i))"
    return tuple(s[t[i] - 1] for i in range(len(s)))


def _perm_inv(s):
    out = [0] * len(s)
    for i, v in enumerate(s):
        out[v - 1] = i + 1
    return tuple(out)


class WeylElt:
    __slots__ = ("lam", "sigma")

    def __init__(self, lam, sigma):
        self.lam = tuple(int(x) for x in lam)
        self.sigma = tuple(sigma)
        if len(self.lam) != len(self.sigma):
            raise ValueError("translation and permutation sizes differ")
        if sorted(self.sigma) != list(range(1, len(self.sigma) + 1)):
            raise ValueError("sigma is not a permutation")

    @property
    def n(self):
        return len(self.lam)

    @staticmethod
    def identity(n: int) -> "WeylElt":
        return WeylElt((0,) * n, tuple(range(1, n + 1)))

    @staticmethod
    def simple(i: int, n: int) -> "WeylElt":
        if not 0 <= i < n:
            raise ValueError("simple reflection index out of range")
        if i == 0:
            lam = (1,) + (0,) * (n - 2) + (-1,)
            sigma = (n,) + tuple(range(2, n)) + (1,)
            return WeylElt(lam, sigma)
        sigma = list(range(1, n + 1))
        sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        return WeylElt((0,) * n, sigma)

    @staticmethod
    def pi(n: int) -> "WeylElt":
        lam = (1,) + (0,) * (n - 1)
        sigma = tuple(range(2, n + 1)) + (1,)
        return WeylElt(lam, sigma)

    @staticmethod
    def pi_power(n: int, j: int) -> "WeylElt":
        w = WeylElt.identity(n)
        p = WeylElt.pi(n) if j >= 0 else WeylElt.pi(n).inv()
        for _ in range(abs(j)):
            w = w * p
        return w

    @staticmethod
    def translation(lam) -> "WeylElt":
        return WeylElt(lam, tuple(range(1, len(tuple(lam)) + 1)))

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        sinv = _perm_inv(self.sigma)
        moved = tuple(other.lam[sinv[p] - 1] for p in range(self.n))
        lam = tuple(a + b for a, b in zip(self.lam, moved))
        return WeylElt(lam, _perm_mul(self.sigma, other.sigma))

    def inv(self) -> "WeylElt":
        sinv = _perm_inv(self.sigma)
        lam = tuple(-self.lam[self.sigma[p] - 1] for p in range(self.n))
        return WeylElt(lam, sinv)

    def __eq__(self, other):
        return (isinstance(other, WeylElt)
                and self.lam == other.lam and self.sigma == other.sigma)

    def __hash__(self):
        return hash((self.lam, self.sigma))

    def __repr__(self):
        return f"WeylElt(lam={self.lam}, sigma={self.sigma})"

    def act_root(self, r: AffRoot) -> AffRoot:
        si, sj = self.sigma[r.i - 1], self.sigma[r.j - 1]
        return AffRoot(si, sj, r.k - self.lam[si - 1] + self.lam[sj - 1])

    def act_weight(self, zeta: WeightFn) -> WeightFn:
        sinv = _perm_inv(self.sigma)
        moved = [zeta.c[sinv[p] - 1] for p in range(self.n)]
        return WeightFn(zeta.level,
                        tuple(c + zeta.level * t
                              for c, t in zip(moved, self.lam)))

    def inversion_set(self):
        "Positive affine roots sent to negative ones; its size is the length."
        out = []
        n = self.n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                kmin = 0 if i < j else 1
                delta = self.lam[self.sigma[i - 1] - 1] - self.lam[self.sigma[j - 1] - 1]
                for k in range(kmin, delta):
                    out.append(AffRoot(i, j, k))
                if delta >= kmin and self.sigma[i - 1] > self.sigma[j - 1]:
                    out.append(AffRoot(i, j, delta))
        return out

    def length(self) -> int:
        return len(self.inversion_set())

    def pi_degree(self) -> int:
        return sum(self.lam)

    def reduced_word(self, prefer: str = "first"):
        """(j, letters) with self = pi^j s_{letters[0]} ... s_{letters[-1]}.

        prefer picks which descent to strip when several exist, so two calls
        can produce genuinely different reduced words for the same element.
        """
        w = self
        rev = []
        while True:
            descents = [i for i in range(w.n)
                        if root_is_negative(w.act_root(simple_root(i, w.n)))]
            if not descents:
                break
            i = descents[0] if prefer == "first" else descents[-1]
            rev.append(i)
            w = w * WeylElt.simple(i, w.n)
        j = self.pi_degree()
        if w != WeylElt.pi_power(self.n, j):
            raise AssertionError("descent did not terminate at a pi power")
        return j, rev[::-1]


# ------------------------------------------------- polynomial representation

def weyl_apply(w: WeylElt, v: TensorVec) -> TensorVec:
    """t_lam sigma on keys: permute (color, momentum) pairs by sigma, keep
    the C^N labels in place, then shift momentum entry p by -lam_p."""
    if w.n != v.n:
        raise ValueError("group rank and tensor length differ")
    sinv = _perm_inv(w.sigma)
    out = {}
    for key, c in v.terms.items():
        parts = [decompose(k, v.N, v.L) for k in key]
        nk = []
        for p in range(1, v.n + 1):
            src = parts[sinv[p - 1] - 1]
            here = parts[p - 1]
            nk.append(compose(here.kbar, src.kdot, src.kund - w.lam[p - 1],
                              v.N, v.L))
        nk = tuple(nk)
        sv = out.get(nk, 0) + c
        if sv:
            out[nk] = sv
        else:
            out.pop(nk, None)
    return TensorVec(v.n, v.N, v.L, out)


def phi_simple(i: int, kappa, nu, v: TensorVec) -> TensorVec:
    "phi_i = 1 + s_i alpha_i^vee with the coroot applied first."
    n = v.n
    if i == 0:
        av = (kappa * v + apply_dunkl(1, kappa, nu, v)
              - apply_dunkl(n, kappa, nu, v))
    else:
        av = apply_dunkl(i + 1, kappa, nu, v) - apply_dunkl(i, kappa, nu, v)
    return v + weyl_apply(WeylElt.simple(i, n), av)


def phi_weyl(w: WeylElt, kappa, nu, v: TensorVec,
             prefer: str = "first") -> TensorVec:
    "phi_w = pi^j phi_{i_1} ... phi_{i_l}, rightmost factor applied first."
    j, letters = w.reduced_word(prefer)
    for i in reversed(letters):
        v = phi_simple(i, kappa, nu, v)
    return weyl_apply(WeylElt.pi_power(w.n, j), v)


def pi_apply(gen: str, kappa, nu, v: TensorVec, i: int = 0) -> TensorVec:
    """One generator of the polynomial representation.

    gen is one of "t_eps" (z_i^{-1}), "coroot" (-d_i), "c" (kappa),
    "s" (s_i, including i = 0), or "pi".
    """
    n = v.n
    if gen == "t_eps":
        lam = tuple(1 if p == i else 0 for p in range(1, n + 1))
        return weyl_apply(WeylElt.translation(lam), v)
    if gen == "coroot":
        return -1 * apply_dunkl(i, kappa, nu, v)
    if gen == "c":
        return kappa * v
    if gen == "s":
        return weyl_apply(WeylElt.simple(i, n), v)
    if gen == "pi":
        return weyl_apply(WeylElt.pi(n), v)
    raise ValueError(f"unknown generator {gen!r}")


def v0_tensor(N: int, L: int, m: int) -> TensorVec:
    "Block vector: m sites of color 1, then m of color 2, ..., momenta 0."
    key = []
    for i in range(1, L * m + 1):
        a = (i - 1) // m + 1
        key.append(compose(1, a, 0, N, L))
    return TensorVec.basis(tuple(key), N, L)


def zeta0(L: int, m: int, nu=None, kappa=None) -> WeightFn:
    "Weight of v0: coefficient of eps_i is i - nu(a) - a m; level kappa."
    if nu is None:
        nu = tuple(range(1, L + 1))
    if kappa is None:
        kappa = L
    c = []
    for i in range(1, L * m + 1):
        a = (i - 1) // m + 1
        c.append(Fraction(i - a * m) - Fraction(nu[a - 1]))
    return WeightFn(Fraction(kappa), tuple(c))


# --------------------------------------------------------- regular sequences

def reg_seq_parts(r, L: int):
    """Split a nondecreasing integer sequence into colors a_i in [1,L] and
    column shifts lam_i = (a_i - r_i)/L, checking the weight-0 condition."""
    r = tuple(int(x) for x in r)
    if any(r[i] > r[i + 1] for i in range(len(r) - 1)):
        raise ValueError("sequence must be nondecreasing")
    if len(r) % L:
        raise ValueError("length must be a multiple of L")
    m = len(r) // L
    a = tuple(((x - 1) % L) + 1 for x in r)
    lam = tuple((ai - x) // L for ai, x in zip(a, r))
    for c in range(1, L + 1):
        if sum(1 for x in a if x == c) != m:
            raise ValueError(f"color {c} does not appear exactly {m} times")
    return a, lam


def _gamma_perm(lam):
    "Stable ranking that lists smaller shifts first."
    n = len(lam)
    out = []
    for i in range(n):
        below = sum(1 for x in lam if x < lam[i])
        ties = sum(1 for j in range(i + 1) if lam[j] == lam[i])
        out.append(below + ties)
    return tuple(out)


def x_r(r, L: int) -> WeylElt:
    "Shortest coset representative attached to a regular sequence candidate."
    a, lam = reg_seq_parts(r, L)
    n, m = len(r), len(r) // L
    gamma = _gamma_perm(lam)
    ginv = _perm_inv(gamma)
    b = tuple(a[ginv[k] - 1] for k in range(n))
    wb = [0] * n
    for c in range(1, L + 1):
        positions = [k + 1 for k in range(n) if b[k] == c]
        for t, pos in enumerate(positions, start=1):
            wb[(c - 1) * m + t - 1] = pos
    return (WeylElt.translation(lam)
            * WeylElt((0,) * n, ginv)
            * WeylElt((0,) * n, tuple(wb)))


def tab_eta(r, L: int):
    "(b, eta): ranked colors and the nondecreasing shift profile."
    a, lam = reg_seq_parts(r, L)
    gamma = _gamma_perm(lam)
    ginv = _perm_inv(gamma)
    b = tuple(a[ginv[k] - 1] for k in range(len(r)))
    eta = tuple(lam[ginv[k] - 1] for k in range(len(r)))
    return b, eta


def is_regular_pairing(r, L: int) -> bool:
    "No root of the inversion set pairs with zeta0 into {-1, 0, 1}."
    m = len(r) // L
    w = x_r(r, L)
    z = zeta0(L, m)
    for al in w.inversion_set():
        if pairing(z, al) in (-1, 0, 1):
            return False
    return True


def block_roots_avoided(r, L: int) -> bool:
    """x_r never inverts a finite root joining two slots of the same color
    block, the defining property of the shortest coset representatives."""
    m = len(r) // L
    w = x_r(r, L)
    for al in w.inversion_set():
        if al.k == 0 and (al.i - 1) // m == (al.j - 1) // m:
            return False
    return True


def zeta_r(r, L: int) -> WeightFn:
    """Weight of the regular-sequence eigenvector: level L and coefficient
    -(content + m) at each square in natural reading order."""
    if not is_regular_pairing(r, L):
        raise ValueError("sequence is not regular")
    a, lam = reg_seq_parts(r, L)
    r = tuple(int(x) for x in r)
    n, m = len(r), len(r) // L
    c = []
    for i in range(n):
        row = (sum(1 for j in range(i + 1)
                   if a[j] == a[i] and lam[j] == lam[i])
               + sum(1 for j in range(i + 1, n)
                     if a[j] == a[i] and lam[j] < lam[i]))
        c.append(Fraction(-(r[i] - row) - m))
    return WeightFn(Fraction(L), tuple(c))


def is_regular_combinatorial(r, L: int) -> bool:
    """Dominance of the ranked color path plus the depth condition pairing
    the t-th color-1 and color-L occurrences."""
    m = len(r) // L
    b, eta = tab_eta(r, L)
    counts = [0] * (L + 1)
    for x in b:
        counts[x] += 1
        for c in range(1, L):
            if counts[c] < counts[c + 1]:
                return False
    ones = [k for k, x in enumerate(b) if x == 1]
    els = [k for k, x in enumerate(b) if x == L]
    for t in range(m):
        if eta[els[t]] - eta[ones[t]] not in (0, 1):
            return False
    return True
