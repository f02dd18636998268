"""Affine tensor space: sparse vectors in C[z_1^{+-1},...]^(x)n (x) (C^L)^(x)n (x) (C^N)^(x)n.

A single basis index k in Z encodes the triple (kbar, kdot, kund) through
k = kbar - N*(kdot + L*kund) with kbar in [1,N] and kdot in [1,L]. A tensor
basis vector is a length-n tuple of such k's, and a TensorVec is a sparse
rational combination of those tuples.

Divided differences act on the z exponents only and are expanded through the
geometric-sum identity, so no Laurent polynomial engine is needed.
"""

from __future__ import annotations

from collections import namedtuple
from fractions import Fraction

BasisTriple = namedtuple("BasisTriple", ["kbar", "kdot", "kund"])


def decompose(k: int, N: int, L: int) -> BasisTriple:
    """Split k = kbar - N*(kdot + L*kund) with kbar in [1,N], kdot in [1,L]."""
    kbar = ((k - 1) % N) + 1
    t = (kbar - k) // N
    kdot = ((t - 1) % L) + 1
    kund = (t - kdot) // L
    return BasisTriple(kbar, kdot, kund)


def compose(kbar: int, kdot: int, kund: int, N: int, L: int) -> int:
    return kbar - N * (kdot + L * kund)


class TensorVec:
    """Sparse map from momentum tuples to rationals, tagged with (n, N, L)."""

    __slots__ = ("n", "N", "L", "terms")

    def __init__(self, n: int, N: int, L: int, terms=None):
        self.n = n
        self.N = N
        self.L = L
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c != 0:
                    if len(key) != n:
                        raise ValueError("key length differs from n")
                    self.terms[key] = Fraction(c)

    @staticmethod
    def basis(key, N: int, L: int) -> "TensorVec":
        key = tuple(key)
        return TensorVec(len(key), N, L, {key: Fraction(1)})

    def zero_like(self) -> "TensorVec":
        return TensorVec(self.n, self.N, self.L)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "TensorVec"):
        if (self.n, self.N, self.L) != (other.n, other.N, other.L):
            raise ValueError("tensor spaces differ")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return TensorVec(self.n, self.N, self.L, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        if scalar == 0:
            return self.zero_like()
        return TensorVec(self.n, self.N, self.L,
                         {key: scalar * c for key, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, TensorVec)
                and (self.n, self.N, self.L) == (other.n, other.N, other.L)
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.N, self.L, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "TensorVec(0)"
        bits = [f"{c}*u{list(key)}" for key, c in sorted(self.terms.items())]
        return "TensorVec(" + " + ".join(bits) + ")"


def _accumulate(out: dict, key, c):
    s = out.get(key, 0) + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def apply_swap(kind: str, i: int, j: int, v: TensorVec) -> TensorVec:
    """Swap data between slots i and j (1-based).

    kind 'z' swaps kund, 'spinL' swaps kdot, 'spinN' swaps kbar,
    'full' swaps the whole momenta.
    """
    if not (1 <= i <= v.n and 1 <= j <= v.n and i != j):
        raise IndexError("bad slot pair")
    N, L = v.N, v.L
    out = {}
    for key, c in v.terms.items():
        if kind == "full":
            nk = list(key)
            nk[i - 1], nk[j - 1] = nk[j - 1], nk[i - 1]
        else:
            ti = decompose(key[i - 1], N, L)
            tj = decompose(key[j - 1], N, L)
            if kind == "z":
                a = ti._replace(kund=tj.kund)
                b = tj._replace(kund=ti.kund)
            elif kind == "spinL":
                a = ti._replace(kdot=tj.kdot)
                b = tj._replace(kdot=ti.kdot)
            elif kind == "spinN":
                a = ti._replace(kbar=tj.kbar)
                b = tj._replace(kbar=ti.kbar)
            else:
                raise ValueError(f"unknown swap kind {kind!r}")
            nk = list(key)
            nk[i - 1] = compose(*a, N, L)
            nk[j - 1] = compose(*b, N, L)
        _accumulate(out, tuple(nk), c)
    return TensorVec(v.n, N, L, out)


def _divdiff_patterns(a: int, b: int):
    """Exponent patterns of z_j/(z_j-z_i)(K_ij-1) on z_i^a z_j^b.

    Returns (sign, [(a', b'), ...]); empty for a == b.
    """
    if a == b:
        return 1, []
    if a < b:
        return -1, [(a + t, b - t) for t in range(b - a)]
    return 1, [(b + t, a - t) for t in range(a - b)]


def apply_divdiff(i: int, j: int, v: TensorVec) -> TensorVec:
    """The operator z_j/(z_j-z_i) (K_ij - 1), acting on z exponents only."""
    if i == j:
        raise ValueError("divided difference needs distinct slots")
    N, L = v.N, v.L
    NL = N * L
    out = {}
    for key, c in v.terms.items():
        a = decompose(key[i - 1], N, L).kund
        b = decompose(key[j - 1], N, L).kund
        sign, pats = _divdiff_patterns(a, b)
        for na, nb in pats:
            nk = list(key)
            # kund -> kund' changes k by -N*L*(kund' - kund)
            nk[i - 1] = key[i - 1] - NL * (na - a)
            nk[j - 1] = key[j - 1] - NL * (nb - b)
            _accumulate(out, tuple(nk), sign * c)
    return TensorVec(v.n, N, L, out)


def apply_rmatrix(i: int, j: int, v: TensorVec) -> TensorVec:
    """r_ij = 1/2 sum_a (e_aa)_i (e_aa)_j + sum_{a<b} (e_ab)_i (e_ba)_j.

    On a basis key the diagonal part gives 1/2 when kdot_i = kdot_j, and the
    off-diagonal sum swaps the kdots with coefficient 1 exactly when
    kdot_i > kdot_j (then kdot_j = a < b = kdot_i matches (e_ab)_i (e_ba)_j).
    """
    if i == j:
        raise ValueError("r-matrix needs distinct slots")
    N, L = v.N, v.L
    out = {}
    for key, c in v.terms.items():
        di = decompose(key[i - 1], N, L).kdot
        dj = decompose(key[j - 1], N, L).kdot
        if di == dj:
            _accumulate(out, key, Fraction(c, 2))
        elif di > dj:
            nk = list(key)
            nk[i - 1] = key[i - 1] - N * (dj - di)
            nk[j - 1] = key[j - 1] - N * (di - dj)
            _accumulate(out, tuple(nk), c)
    return TensorVec(v.n, N, L, out)


def apply_dunkl(i: int, kappa, nu, v: TensorVec) -> TensorVec:
    """Matrix Dunkl operator d_i, identity on the C^N factors.

    d_i = kappa z_i d/dz_i + nu_i + n/(2L) - 1/2
          + sum_{j>i} [ z_j/(z_j-z_i)(K_ij-1)P_ij + r_ij ]
          - sum_{j<i} [ z_i/(z_i-z_j)(K_ij-1)P_ij + r_ji ]

    with P_ij the exchange of the C^L factors. nu is a list of L rationals,
    nu[a-1] = nu(a).
    """
    kappa = Fraction(kappa)
    n, N, L = v.n, v.N, v.L
    NL = N * L
    const = Fraction(n, 2 * L) - Fraction(1, 2)
    out = {}
    for key, c in v.terms.items():
        trip = [decompose(k, N, L) for k in key]
        ti = trip[i - 1]
        diag = kappa * ti.kund + Fraction(nu[ti.kdot - 1]) + const
        _accumulate(out, key, c * diag)
        for j in range(1, n + 1):
            if j == i:
                continue
            sgn = 1 if j > i else -1
            tj = trip[j - 1]
            # scalar part: divided difference in (z_i, z_j) composed with the
            # spinL swap P_ij; for j < i the roles of the variables flip
            if j > i:
                dsign, pats = _divdiff_patterns(ti.kund, tj.kund)
            else:
                dsign, pats = _divdiff_patterns(tj.kund, ti.kund)
            if pats:
                base = list(key)
                # swap kdots (P_ij), keep kbar
                base[i - 1] = compose(ti.kbar, tj.kdot, ti.kund, N, L)
                base[j - 1] = compose(tj.kbar, ti.kdot, tj.kund, N, L)
                bi = decompose(base[i - 1], N, L).kund
                bj = decompose(base[j - 1], N, L).kund
                for pa, pb in pats:
                    nk = list(base)
                    if j > i:
                        na_i, na_j = pa, pb
                    else:
                        na_i, na_j = pb, pa
                    nk[i - 1] = base[i - 1] - NL * (na_i - bi)
                    nk[j - 1] = base[j - 1] - NL * (na_j - bj)
                    _accumulate(out, tuple(nk), sgn * dsign * c)
            # r-matrix part: r_ij for j > i, r_ji for j < i; both have the
            # lower slot as first subscript, so the swap fires iff
            # kdot_lo > kdot_hi in either case
            lo, hi = (i, j) if i < j else (j, i)
            first = ti if i < j else tj  # slot lo
            second = tj if i < j else ti
            if first.kdot == second.kdot:
                _accumulate(out, key, sgn * Fraction(c, 2))
            else:
                if first.kdot > second.kdot:
                    nk = list(key)
                    nk[lo - 1] = compose(first.kbar, second.kdot, first.kund, N, L)
                    nk[hi - 1] = compose(second.kbar, first.kdot, second.kund, N, L)
                    _accumulate(out, tuple(nk), sgn * c)
    return TensorVec(n, N, L, out)


def apply_matunit_gln(s: int, t: int, i: int, v: TensorVec) -> TensorVec:
    """(E_st)_i on the C^N factor of slot i: keeps keys with kbar_i = t."""
    N, L = v.N, v.L
    out = {}
    for key, c in v.terms.items():
        if decompose(key[i - 1], N, L).kbar == t:
            nk = list(key)
            nk[i - 1] = key[i - 1] + (s - t)
            _accumulate(out, tuple(nk), c)
    return TensorVec(v.n, N, L, out)


def apply_matunit_gll(a: int, b: int, i: int, v: TensorVec) -> TensorVec:
    """(e_ab)_i on the C^L factor of slot i: keeps keys with kdot_i = b."""
    N, L = v.N, v.L
    out = {}
    for key, c in v.terms.items():
        if decompose(key[i - 1], N, L).kdot == b:
            nk = list(key)
            nk[i - 1] = key[i - 1] - N * (a - b)
            _accumulate(out, tuple(nk), c)
    return TensorVec(v.n, N, L, out)


def apply_zpow(i: int, m: int, v: TensorVec) -> TensorVec:
    """Multiply by z_i^m: shifts kund_i by m, so k_i by -N*L*m."""
    NL = v.N * v.L
    out = {key[:i - 1] + (key[i - 1] - NL * m,) + key[i:]: c
           for key, c in v.terms.items()}
    return TensorVec(v.n, v.N, v.L, out)
