"""Skew diagrams from column sequences, and their semi-infinite relatives.

A nondecreasing column sequence r places one square per index at
(row, column) = (n_i, r_i); the sequence is regular exactly when the
resulting square set is a skew Young diagram with m rows of L squares.
Semi-infinite diagrams are recorded by the gaps h_i between the starts of
consecutive rows, counted upward from the bottom row; finitely many gaps
deviate from the vacuum pattern.  Truncating to the bottom N*l rows gives
a finite skew shape whose tableaux count module dimensions, while column
heights below N carry the Drinfeld polynomials.
"""

from __future__ import annotations

from fractions import Fraction

from .algebraics import PolyU, RatFuncU
from .daha import reg_seq_parts


# --------------------------------------------------------- finite square sets

class DiagramR:
    """Square set of a column sequence; rows grow downward from row 1."""

    __slots__ = ("squares", "L", "m")

    def __init__(self, squares, L: int, m: int):
        self.squares = frozenset((int(i), int(j)) for i, j in squares)
        self.L = int(L)
        self.m = int(m)

    def rows(self):
        "Map row index to the sorted tuple of occupied columns."
        out = {}
        for i, j in self.squares:
            out.setdefault(i, []).append(j)
        return {i: tuple(sorted(cs)) for i, cs in out.items()}

    @property
    def is_skew(self) -> bool:
        """Rows 1..m of L contiguous squares each, starts nonincreasing
        downward; column convexity then comes for free."""
        rows = self.rows()
        if set(rows) != set(range(1, self.m + 1)):
            return False
        starts = []
        for i in range(1, self.m + 1):
            cs = rows[i]
            if len(cs) != self.L or cs[-1] - cs[0] != self.L - 1:
                return False
            starts.append(cs[0])
        return all(a >= b for a, b in zip(starts, starts[1:]))

    def natural_order(self):
        "Squares column by column left to right, top to bottom in a column."
        return sorted(self.squares, key=lambda s: (s[1], s[0]))

    def contents_natural(self):
        return tuple(j - i for i, j in self.natural_order())

    def to_skew(self) -> "FiniteSkew":
        if not self.is_skew:
            raise ValueError("square set is not a skew diagram")
        rows = self.rows()
        return FiniteSkew([rows[i][0] for i in range(1, self.m + 1)], self.L)

    def __eq__(self, other):
        return (isinstance(other, DiagramR) and self.squares == other.squares
                and self.L == other.L and self.m == other.m)

    def __hash__(self):
        return hash((self.squares, self.L, self.m))

    def __repr__(self):
        return f"DiagramR({sorted(self.squares)}, L={self.L}, m={self.m})"


def diagram_from_r(r, L: int) -> DiagramR:
    """Place square i at row n_i, column r_i, where n_i ranks index i inside
    its color class: ties up to i, then strictly smaller shifts after i."""
    a, lam = reg_seq_parts(r, L)
    r = tuple(int(x) for x in r)
    n = len(r)
    squares = []
    for i in range(n):
        row = (sum(1 for j in range(i + 1)
                   if a[j] == a[i] and lam[j] == lam[i])
               + sum(1 for j in range(i + 1, n)
                     if a[j] == a[i] and lam[j] < lam[i]))
        squares.append((row, r[i]))
    return DiagramR(squares, L, n // L)


class FiniteSkew:
    """Skew shape with m rows of L squares, stored by top-down row starts."""

    __slots__ = ("starts", "L", "N")

    def __init__(self, starts, L: int, N: int | None = None):
        self.starts = tuple(int(s) for s in starts)
        self.L = int(L)
        self.N = None if N is None else int(N)
        if any(a < b for a, b in zip(self.starts, self.starts[1:])):
            raise ValueError("a lower row starts right of the row above")
        if self.N is not None:
            for _, (top, bot) in self.columns().items():
                if bot - top + 1 > self.N:
                    raise ValueError(f"column height exceeds {self.N}")

    @property
    def m(self) -> int:
        return len(self.starts)

    def row_cols(self, i: int):
        "Columns of row i (1-based, top-down)."
        s = self.starts[i - 1]
        return range(s, s + self.L)

    def squares(self):
        "Row-major listing, top row first."
        return [(i, j) for i in range(1, self.m + 1) for j in self.row_cols(i)]

    def columns(self):
        "Map column to its (top row, bottom row) pair."
        out = {}
        for i, j in self.squares():
            top, bot = out.get(j, (i, i))
            out[j] = (min(top, i), max(bot, i))
        return out

    def __eq__(self, other):
        return (isinstance(other, FiniteSkew) and self.starts == other.starts
                and self.L == other.L)

    def __hash__(self):
        return hash((self.starts, self.L))

    def __repr__(self):
        return f"FiniteSkew(starts={self.starts}, L={self.L})"


def r_from_diagram(D) -> tuple:
    "Column multiplicities, listed nondecreasingly; inverse of diagram_from_r."
    if isinstance(D, DiagramR):
        cols = [j for _, j in D.squares]
    else:
        cols = [j for _, j in D.squares()]
    return tuple(sorted(cols))


# ------------------------------------------------------ semi-infinite shapes

def _h_vac(i: int, N: int, L: int) -> int:
    return L if i % N == 0 else 0


class SemiDiagram:
    """Semi-infinite skew shape of row length L with column heights <= N.

    Stored as the finitely many gap overrides h_i departing from the vacuum
    gap pattern (L at multiples of N, 0 elsewhere).  Row p starts at
    r1 + h_1 + ... + h_{p-1}, rows counted upward from the bottom; r1 is
    pinned so that the whole family shares one translation frame.
    """

    __slots__ = ("N", "L", "h_overrides")

    def __init__(self, N: int, L: int, h_overrides=()):
        self.N, self.L = int(N), int(L)
        if self.N < 1 or self.L < 1:
            raise ValueError("N and L must be positive")
        ov = {}
        for i, h in dict(h_overrides).items():
            i, h = int(i), int(h)
            if i < 1:
                raise ValueError("row gaps are indexed from 1")
            if h < 0:
                raise ValueError("row gaps must be nonnegative")
            if h != _h_vac(i, self.N, self.L):
                ov[i] = h
        self.h_overrides = dict(sorted(ov.items()))
        d = self.degree
        if d < 0:
            raise ValueError("negative degree")
        if any(i > self.N * d for i in self.h_overrides):
            raise ValueError("gap override beyond the degree support bound")
        for p in range(1, self.N * d + 2):
            if sum(self.h(i) for i in range(p, p + self.N)) < self.L:
                raise ValueError("a column exceeds height N")

    @staticmethod
    def vacuum(N: int, L: int) -> "SemiDiagram":
        return SemiDiagram(N, L)

    def h(self, i: int) -> int:
        return self.h_overrides.get(i, _h_vac(i, self.N, self.L))

    @property
    def degree(self) -> int:
        return sum(i * (h - _h_vac(i, self.N, self.L))
                   for i, h in self.h_overrides.items())

    @property
    def r1(self) -> int:
        return 1 - sum(h - _h_vac(i, self.N, self.L)
                       for i, h in self.h_overrides.items())

    def row_start(self, p: int) -> int:
        return self.r1 + sum(self.h(i) for i in range(1, p))

    def __eq__(self, other):
        return (isinstance(other, SemiDiagram) and self.N == other.N
                and self.L == other.L and self.h_overrides == other.h_overrides)

    def __hash__(self):
        return hash((self.N, self.L, tuple(self.h_overrides.items())))

    def __repr__(self):
        return f"SemiDiagram(N={self.N}, L={self.L}, h={self.h_overrides})"


def finite_part(sd: SemiDiagram, l: int) -> FiniteSkew:
    "The bottom N*l rows as a finite skew shape, top-down."
    if l < sd.degree:
        raise ValueError("finite part needs at least degree many row blocks")
    starts = [sd.row_start(p) for p in range(sd.N * l, 0, -1)]
    return FiniteSkew(starts, sd.L, sd.N)


def drinfeld(sd: SemiDiagram):
    """Monic polynomials P_1..P_{N-1}; P_k has one factor u - k - c + 1 for
    the content c of the bottom square of each height-k column.  Contents
    read j - i off the plane where the bottom row sits at vertical 0 and
    rows above it at -1, -2, and so on."""
    N, L = sd.N, sd.L
    rows = N * (sd.degree + 3)
    cutoff = sd.row_start(rows)
    heights, bottoms = {}, {}
    for p in range(1, rows + 1):
        s = sd.row_start(p)
        for c in range(s, s + L):
            if c >= cutoff:
                continue
            heights[c] = heights.get(c, 0) + 1
            if c not in bottoms:
                bottoms[c] = p
    out = []
    for k in range(1, N):
        poly = PolyU((1,))
        for c in sorted(heights):
            if heights[c] == k:
                content = c + bottoms[c] - 1
                poly = poly * PolyU((1 - k - content, 1))
        out.append(poly)
    return tuple(out)


def drinfeld_finite(fs: FiniteSkew, N: int):
    "Same products read off a finite shape with contents j - i."
    out = []
    cols = fs.columns()
    for k in range(1, N):
        poly = PolyU((1,))
        for c in sorted(cols):
            top, bot = cols[c]
            if bot - top + 1 == k:
                content = c - bot
                poly = poly * PolyU((1 - k - content, 1))
        out.append(poly)
    return tuple(out)


def omega(sd: SemiDiagram) -> RatFuncU:
    """Product over k of (u + 2 - r1 - k - H_{k-1}) / (u + 1 - k - Hvac_{k-1})
    with H the gap prefix sums; factors are 1 beyond k = N*degree + 1."""
    out = RatFuncU.one()
    hk = hvk = 0
    for k in range(1, sd.N * sd.degree + 2):
        num = PolyU((2 - sd.r1 - k - hk, 1))
        den = PolyU((1 - k - hvk, 1))
        out = out * RatFuncU(num, den)
        hk += sd.h(k)
        hvk += _h_vac(k, sd.N, sd.L)
    return out


def qdet_ratio(sd: SemiDiagram) -> RatFuncU:
    om = omega(sd)
    return om / om.shift_arg(-sd.L)


def qdet_ratio_direct(sd: SemiDiagram) -> RatFuncU:
    "The same ratio assembled factor by factor without forming omega first."
    out = RatFuncU.one()
    hk = hvk = 0
    for k in range(1, sd.N * sd.degree + 2):
        a = 2 - sd.r1 - k - hk
        b = 1 - k - hvk
        out = out * RatFuncU(PolyU((a, 1)), PolyU((b, 1)))
        out = out * RatFuncU(PolyU((b - sd.L, 1)), PolyU((a - sd.L, 1)))
        hk += sd.h(k)
        hvk += _h_vac(k, sd.N, sd.L)
    return out


def enumerate_diagrams(N: int, L: int, dmax: int):
    """All semi-infinite shapes grouped by degree 0..dmax.  Complete because
    a degree-d shape can only override gaps at indices up to N*d."""
    out = [[SemiDiagram(N, L)]]
    for d in range(1, dmax + 1):
        sup = N * d
        relief = [0] * (sup + 2)
        for i in range(sup, 0, -1):
            relief[i] = relief[i + 1] + i * _h_vac(i, N, L)
        found = []

        def rec(i, hs, partial):
            if i > sup:
                if partial == d:
                    try:
                        found.append(SemiDiagram(N, L, dict(enumerate(hs, 1))))
                    except ValueError:
                        pass
                return
            room = d - partial + relief[i + 1]
            hmax = _h_vac(i, N, L) + room // i
            for h in range(0, hmax + 1):
                rec(i + 1, hs + [h], partial + i * (h - _h_vac(i, N, L)))

        rec(1, [], 0)
        out.append(found)
    return out


# ------------------------------------------------------------------ tableaux

def skew_schur(fs: FiniteSkew, nvars: int):
    """Exponent-vector dictionary of the tableau generating polynomial:
    entries 1..nvars, weakly increasing along rows, strict down columns."""
    squares = fs.squares()
    shape = set(squares)
    out = {}
    fill = {}

    def rec(idx, expo):
        if idx == len(squares):
            key = tuple(expo)
            out[key] = out.get(key, 0) + 1
            return
        i, j = squares[idx]
        lo = 1
        if (i, j - 1) in shape:
            lo = fill[(i, j - 1)]
        if (i - 1, j) in shape:
            lo = max(lo, fill[(i - 1, j)] + 1)
        for v in range(lo, nvars + 1):
            fill[(i, j)] = v
            expo[v - 1] += 1
            rec(idx + 1, expo)
            expo[v - 1] -= 1
        fill.pop((i, j), None)

    rec(0, [0] * nvars)
    return out


def ssyt_count(fs: FiniteSkew, nvars: int) -> int:
    return sum(skew_schur(fs, nvars).values())


def reduce_character(char, N: int):
    "Identify monomials modulo the full product x_1 ... x_N."
    out = {}
    for expo, c in char.items():
        m = min(expo)
        key = tuple(e - m for e in expo)
        out[key] = out.get(key, 0) + c
    return out


def character_series(N: int, L: int, dmax: int):
    """Per degree, the reduced character summed over all shapes of that
    degree, each read from its smallest finite part."""
    out = []
    for group in enumerate_diagrams(N, L, dmax):
        total = {}
        for sd in group:
            fs = finite_part(sd, sd.degree)
            for expo, c in reduce_character(skew_schur(fs, N), N).items():
                total[expo] = total.get(expo, 0) + c
        out.append(total)
    return out


# ---------------------------------------------------------------- interchange

def semidiagram_json(sd: SemiDiagram) -> dict:
    "Stable-order plain dictionary; rational coefficients as strings."
    def fr(x):
        return str(Fraction(x))

    om = omega(sd)
    return {
        "N": sd.N,
        "L": sd.L,
        "h_overrides": [[i, h] for i, h in sd.h_overrides.items()],
        "degree": sd.degree,
        "drinfeld": [[fr(c) for c in p.coeffs] for p in drinfeld(sd)],
        "omega": {"num": [fr(c) for c in om.num.coeffs],
                  "den": [fr(c) for c in om.den.coeffs]},
    }
