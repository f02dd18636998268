"""Shared oracles for regular-sequence tests.

The pairing multiset of the inversion set of x_r has a fully combinatorial
description in terms of the ranked color word b and the shift profile eta;
spelling it out here keeps the library honest, since the comparison
exercises x_r, the inversion set, and the pairing in one shot.
"""

from itertools import combinations_with_replacement, permutations

from yangfock.daha import reg_seq_parts, tab_eta, x_r


def tab_perm(r, L):
    "Position of the t-th occurrence of color c in b, indexed (c-1)m + t."
    m = len(r) // L
    b, _ = tab_eta(r, L)
    w = [0] * len(r)
    for c in range(1, L + 1):
        positions = [k + 1 for k in range(len(r)) if b[k] == c]
        for t, pos in enumerate(positions, start=1):
            w[(c - 1) * m + t - 1] = pos
    return tuple(w)


def pairing_value_union(r, L):
    "Union of the four explicit families covering {(zeta0, alpha)}."
    m = len(r) // L
    _, eta = tab_eta(r, L)
    w = tab_perm(r, L)

    def wpos(c, i):
        return w[(c - 1) * m + i - 1]

    vals = set()
    for c in range(1, L + 1):
        for d in range(c + 1, L + 1):
            for i in range(1, m + 1):
                for j in range(1, m + 1):
                    wi, wj = wpos(c, i), wpos(d, j)
                    if wi > wj:
                        for k in range(eta[wi - 1] - eta[wj - 1]):
                            vals.add(d - c + i - j + L * k)
                    if i < j and wi < wj:
                        for k in range(1, eta[wj - 1] - eta[wi - 1]):
                            vals.add(c - d + j - i + L * k)
                    if i >= j:
                        for k in range(1, eta[wj - 1] - eta[wi - 1]):
                            vals.add(c - d + j - i + L * k)
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                wi, wj = wpos(c, i), wpos(c, j)
                for k in range(1, eta[wj - 1] - eta[wi - 1]):
                    vals.add(j - i + L * k)
    return vals


def all_reg_candidates(L, m, lo=-2, hi=2):
    "Every admissible nondecreasing weight-0 sequence with shifts in [lo,hi]."
    per_color = {
        a: list(combinations_with_replacement(range(lo, hi + 1), m))
        for a in range(1, L + 1)
    }

    def build(parts):
        vals = []
        for a, shifts in enumerate(parts, start=1):
            vals.extend(a - L * s for s in shifts)
        return tuple(sorted(vals))

    out = set()
    stack = [()]
    for a in range(1, L + 1):
        stack = [p + (ch,) for p in stack for ch in per_color[a]]
    for parts in stack:
        r = build(parts)
        try:
            reg_seq_parts(r, L)
        except ValueError:
            continue
        out.add(r)
    return sorted(out)


def _hpoly(k, nvars):
    "Complete homogeneous polynomial of degree k as an exponent dictionary."
    if k < 0:
        return {}
    out = {}

    def rec(pos, rem, expo):
        if pos == nvars - 1:
            e = tuple(expo + [rem])
            out[e] = out.get(e, 0) + 1
            return
        for t in range(rem + 1):
            rec(pos + 1, rem - t, expo + [t])

    rec(0, k, [])
    return out


def _dict_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return out


def jacobi_trudi(fs, nvars):
    "Skew Schur function as a determinant in complete homogeneous pieces."
    m = fs.m
    if m == 0:
        return {(0,) * nvars: 1}
    c0 = min(fs.starts) - 1
    lam = [s - c0 - 1 + fs.L for s in fs.starts]
    mu = [s - c0 - 1 for s in fs.starts]
    total = {}
    for p in permutations(range(m)):
        sign = 1
        for i in range(m):
            for j in range(i + 1, m):
                if p[i] > p[j]:
                    sign = -sign
        term = {(0,) * nvars: 1}
        for i in range(m):
            h = _hpoly(lam[i] - mu[p[i]] - i + p[i], nvars)
            if not h:
                term = {}
                break
            term = _dict_mul(term, h)
        for e, c in term.items():
            total[e] = total.get(e, 0) + sign * c
    return {e: c for e, c in total.items() if c}
