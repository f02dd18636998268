"""Normally ordered wedges and finite Fock windows.

A WedgeVec is a sparse rational combination of strictly decreasing momentum
tuples of a fixed length n. A FockWindow fixes a charge M, a size parameter l
and a degree capacity d, and holds a WedgeVec with n = s + l*N*L entries
(s = M mod NL); the vector stands for inner ^ u_{M-n} ^ u_{M-n-1} ^ ...

The reference sequence is o_i = M - i + 1, so the degree of a key is
sum_i (kund(o_i) - kund(k_i)). Keys must satisfy kund(k_n) <= kund(o_n);
operations whose honest result cannot be written in the window raise
WindowOverflow instead of truncating.
"""

from __future__ import annotations

from fractions import Fraction

from .tensor_space import TensorVec, decompose


class WindowOverflow(Exception):
    "A Fock-space result does not fit in the chosen finite window."


def normal_order(seq):
    """Sort a momentum tuple strictly decreasing, tracking the sign.

    Returns (sorted_key, sign) or None when two entries coincide.
    """
    seq = list(seq)
    sign = 1
    # insertion sort; counts inversions exactly
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] < seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and seq[j - 1] == seq[j]:
            return None
    return tuple(seq), sign


class WedgeVec:
    """Sparse vector in the n-fold wedge of V_aff."""

    __slots__ = ("n", "N", "L", "terms")

    def __init__(self, n, N, L, terms=None):
        self.n = n
        self.N = N
        self.L = L
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c != 0:
                    self.terms[key] = Fraction(c)

    @staticmethod
    def basis(key, N, L) -> "WedgeVec":
        nk = normal_order(key)
        if nk is None:
            raise ValueError("repeated momentum in wedge basis key")
        key, sign = nk
        return WedgeVec(len(key), N, L, {key: Fraction(sign)})

    def zero_like(self):
        return WedgeVec(self.n, self.N, self.L)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if (self.n, self.N, self.L) != (other.n, other.N, other.L):
            raise ValueError("wedge spaces differ")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return WedgeVec(self.n, self.N, self.L, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        if scalar == 0:
            return self.zero_like()
        return WedgeVec(self.n, self.N, self.L,
                        {key: scalar * c for key, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, WedgeVec)
                and (self.n, self.N, self.L) == (other.n, other.N, other.L)
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.N, self.L, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "WedgeVec(0)"
        bits = [f"{c}*w{list(key)}" for key, c in sorted(self.terms.items(), reverse=True)]
        return "WedgeVec(" + " + ".join(bits) + ")"


def wedge_project(v: TensorVec) -> WedgeVec:
    "Quotient map onto the wedge: normal order every key with its sign."
    out = {}
    for key, c in v.terms.items():
        nk = normal_order(key)
        if nk is None:
            continue
        skey, sign = nk
        s = out.get(skey, 0) + sign * c
        if s:
            out[skey] = s
        else:
            out.pop(skey, None)
    return WedgeVec(v.n, v.N, v.L, out)


def ref_seq(M: int, i: int) -> int:
    "o_i = M - i + 1, the vacuum momentum at position i."
    return M - i + 1


def degree(key, M: int, N: int, L: int) -> int:
    """sum_i (kund(o_i) - kund(k_i)) for a normally ordered window key."""
    n = len(key)
    if n == 0:
        return 0
    last = decompose(key[n - 1], N, L).kund
    bound = decompose(ref_seq(M, n), N, L).kund
    if last > bound:
        raise WindowOverflow(f"key {key} breaks the window bound at its tail")
    return sum(decompose(ref_seq(M, i + 1), N, L).kund - decompose(k, N, L).kund
               for i, k in enumerate(key))


def window_size(M: int, l: int, N: int, L: int) -> int:
    "n = s + l*N*L with s = M mod NL in [0, NL)."
    return M % (N * L) + l * N * L


class FockWindow:
    """Degree-truncated slice of the charge-M Fock space."""

    __slots__ = ("M", "l", "d", "inner")

    def __init__(self, M: int, l: int, d: int, inner: WedgeVec):
        n = window_size(M, l, inner.N, inner.L)
        if inner.n != n:
            raise ValueError(f"inner wedge must have n = {n}")
        for key in inner.terms:
            if degree(key, M, inner.N, inner.L) > d:
                raise WindowOverflow(f"key {key} exceeds degree capacity {d}")
        self.M = M
        self.l = l
        self.d = d
        self.inner = inner

    @staticmethod
    def vacuum(M: int, N: int, L: int, l: int, d: int) -> "FockWindow":
        n = window_size(M, l, N, L)
        key = tuple(ref_seq(M, i) for i in range(1, n + 1))
        return FockWindow(M, l, d, WedgeVec.basis(key, N, L))

    def zero_like(self) -> "FockWindow":
        return FockWindow(self.M, self.l, self.d, self.inner.zero_like())

    def is_zero(self):
        return self.inner.is_zero()

    def __add__(self, other):
        if (self.M, self.l) != (other.M, other.l):
            raise ValueError("windows differ")
        return FockWindow(self.M, self.l, max(self.d, other.d),
                          self.inner + other.inner)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return FockWindow(self.M, self.l, self.d, Fraction(scalar) * self.inner)

    def __eq__(self, other):
        return (isinstance(other, FockWindow)
                and (self.M, self.l) == (other.M, other.l)
                and self.inner == other.inner)

    def __repr__(self):
        return f"FockWindow(M={self.M}, l={self.l}, d={self.d}, {self.inner!r})"


def embed_tail(w: FockWindow, lp: int) -> FockWindow:
    """Append the consecutive vacuum tail to pass from size l to size l' > l."""
    if lp <= w.l:
        raise ValueError("embed_tail needs l' > l")
    N, L = w.inner.N, w.inner.L
    n = window_size(w.M, w.l, N, L)
    np_ = window_size(w.M, lp, N, L)
    tail = tuple(ref_seq(w.M, i) for i in range(n + 1, np_ + 1))
    out = {}
    for key, c in w.inner.terms.items():
        if key[-1] <= tail[0]:
            raise WindowOverflow(f"key {key} reaches into the appended tail")
        out[key + tail] = c
    return FockWindow(w.M, lp, w.d, WedgeVec(np_, N, L, out))


def restrict_tail(w: FockWindow, l: int) -> FockWindow:
    """Drop a consecutive vacuum tail; inverse of embed_tail where defined."""
    if l >= w.l:
        raise ValueError("restrict_tail needs a smaller l")
    N, L = w.inner.N, w.inner.L
    n = window_size(w.M, l, N, L)
    np_ = window_size(w.M, w.l, N, L)
    tail = tuple(ref_seq(w.M, i) for i in range(n + 1, np_ + 1))
    out = {}
    for key, c in w.inner.terms.items():
        if key[n:] != tail:
            raise WindowOverflow(f"key {key} has a non-vacuum tail below size {n}")
        out[key[:n]] = c
    return FockWindow(w.M, l, w.d, WedgeVec(n, N, L, out))


def clifford(kind: str, k: int, w: FockWindow) -> FockWindow:
    """psi*_k (create) or psi_k (annihilate) on a window, shifting the charge.

    The result window keeps l and the degree capacity d; anything that cannot
    be represented (tail deletions, capacity overruns) raises WindowOverflow.
    """
    N, L = w.inner.N, w.inner.L
    n = window_size(w.M, w.l, N, L)
    tail_top = w.M - n  # largest tail momentum
    out = {}
    if kind == "create":
        M2 = w.M + 1
        for key, c in w.inner.terms.items():
            if k <= tail_top:
                continue  # creating an occupied deep mode: zero
            if k in key:
                continue
            above = sum(1 for x in key if x > k)
            nk = key[:above] + (k,) + key[above:]
            s = out.get(nk, 0) + (-1 if above % 2 else 1) * c
            if s:
                out[nk] = s
            else:
                out.pop(nk, None)
        vec = WedgeVec(n + 1, N, L, out)
    elif kind == "annihilate":
        M2 = w.M - 1
        for key, c in w.inner.terms.items():
            if k in key:
                i = key.index(k)  # 0-based; sign (-1)^i
                nk = key[:i] + key[i + 1:]
                s = out.get(nk, 0) + (-1 if i % 2 else 1) * c
                if s:
                    out[nk] = s
                else:
                    out.pop(nk, None)
            elif k <= tail_top:
                raise WindowOverflow(
                    f"psi_{k} deletes a tail mode of key {key}; enlarge l")
        vec = WedgeVec(n - 1, N, L, out)
    else:
        raise ValueError(f"unknown clifford kind {kind!r}")
    # the size parameter follows from the new charge and entry count
    l2 = (vec.n - M2 % (N * L)) // (N * L)
    return FockWindow(M2, l2, w.d, vec)


def spin_profile(key, N: int, L: int):
    """e_a eigenvalues on a key: x_a = #slots with kdot = L + 1 - a."""
    xs = [0] * L
    for k in key:
        xs[L - decompose(k, N, L).kdot] += 1
    return tuple(xs)


def window_keys(M: int, l: int, N: int, L: int, deg: int):
    """All window keys of degree exactly deg, lexicographically descending.

    Within a window key the kund values never decrease left to right, so the
    tail bound kund(k_n) <= kund(o_n) caps every slot's kund; together with
    the fixed kund sum this makes the search finite.
    """
    n = window_size(M, l, N, L)
    if n == 0:
        return [()] if deg == 0 else []
    NL = N * L
    obar = [decompose(ref_seq(M, i), N, L).kund for i in range(1, n + 1)]
    cap = obar[-1]
    target = sum(obar) - deg  # required sum of kund over the key
    kund_min = target - (n - 1) * cap
    # momenta with kund(k) = c form the interval (-NL(c+1), -NL c]
    k_hi = -NL * kund_min  # largest momentum allowed anywhere
    k_lo = -NL * (cap + 1) + 1  # smallest momentum allowed anywhere
    out = []

    def rec(pos, prev, acc, chosen):
        if pos == n:
            if acc == target:
                out.append(tuple(chosen))
            return
        rem = n - pos - 1
        start = min(prev - 1, k_hi)
        for k in range(start, k_lo - 1, -1):
            ku = decompose(k, N, L).kund
            if ku > cap:
                return  # kund only grows as k decreases
            lo_rest = rem * ku  # later kunds are >= ku
            hi_rest = rem * cap
            need = target - acc - ku
            if need < lo_rest:
                return  # ku already overshoots and deeper k only grows it
            if need > hi_rest:
                continue  # not enough kund yet, go deeper
            if k - rem < k_lo:
                return  # no room left for rem strictly smaller entries
            rec(pos + 1, k, acc + ku, chosen + [k])

    rec(0, k_hi + 1, 0, [])
    return out


def window_basis(M: int, l: int, N: int, L: int, d: int):
    "All window keys of degree at most d, grouped as one list, degree order."
    keys = []
    for e in range(d + 1):
        keys.extend(window_keys(M, l, N, L, e))
    return keys
