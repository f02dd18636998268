"""Command line front end.

Subcommands: diagrams (enumeration + Drinfeld data), regular (regularity
verdict for a column sequence), character (reduced character series), and
verify (machine-checkable identity suites).  stdout carries exactly one JSON
document; per-case timing goes to stderr.  Exit codes: 0 success, 1 a
verification failed or the two regularity algorithms disagreed, 2 usage
error.  The YF_ORDER environment variable overrides the default series
order wherever --order is not given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .affine_actions import uprime_subspace
from .algebraics import default_order
from .daha import (
    WeylElt, is_regular_combinatorial, is_regular_pairing, phi_simple,
    pi_apply, v0_tensor, weyl_apply, zeta0,
)
from .diagrams import (
    SemiDiagram, diagram_from_r, enumerate_diagrams, finite_part,
    r_from_diagram, semidiagram_json, ssyt_count,
)
from .tensor_space import TensorVec, apply_dunkl, compose
from .wedge_fock import FockWindow, WedgeVec, window_basis, window_keys
from .yangian import (
    TMap, default_nu, q1_check, q2_check, rtt_defect, verify_hw_finite,
    verify_hw_fock,
)


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _run_cases(jobs):
    """Evaluate (id, thunk) pairs concurrently, aggregate in input order."""
    with ThreadPoolExecutor(max_workers=4) as pool:
        futures = [(cid, time.perf_counter(), pool.submit(fn))
                   for cid, fn in jobs]
        cases = []
        for cid, t0, fut in futures:
            c = fut.result()
            c["id"] = cid
            print(f"  {cid}: {c['status']} ({time.perf_counter() - t0:.3f}s)",
                  file=sys.stderr)
            cases.append(c)
    return cases


def _case_of(ok: bool, detail: str = "") -> dict:
    return {"id": "", "status": "pass" if ok else "fail", "detail": detail}


# ----------------------------------------------------------- diagrams

def run_diagrams(args) -> int:
    groups = enumerate_diagrams(args.N, args.L, args.dmax)
    if args.format == "jsonl":
        for group in groups:
            for sd in group:
                sys.stdout.write(json.dumps(semidiagram_json(sd)) + "\n")
        return 0
    _emit({"N": args.N, "L": args.L, "dmax": args.dmax,
           "groups": [[semidiagram_json(sd) for sd in group]
                      for group in groups]})
    return 0


# ------------------------------------------------------------ regular

def _parse_seq(text: str):
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        return None


def run_regular(args, parser) -> int:
    r = _parse_seq(args.r)
    if r is None:
        parser.error("--r must be a comma separated integer list")
    if list(r) != sorted(r):
        parser.error("--r must be nondecreasing")
    if len(r) != args.L * args.m:
        parser.error(f"--r must have L*m = {args.L * args.m} entries")
    counts = {}
    for x in r:
        a = (x - 1) % args.L + 1
        counts[a] = counts.get(a, 0) + 1
    if any(counts.get(a, 0) != args.m for a in range(1, args.L + 1)):
        parser.error("sequence is not weight zero: each residue class "
                     f"mod L must appear exactly m = {args.m} times")
    p = is_regular_pairing(r, args.L)
    c = is_regular_combinatorial(r, args.L)
    if p != c:
        print(f"internal inconsistency: pairing says {p}, "
              f"combinatorial says {c}", file=sys.stderr)
        return 1
    doc = {"L": args.L, "m": args.m, "r": list(r), "regular": p}
    if p:
        D = diagram_from_r(r, args.L)
        doc["diagram"] = {"squares": [[i, j] for i, j in D.natural_order()],
                          "contents": list(D.contents_natural())}
    _emit(doc)
    return 0


# ---------------------------------------------------------- character

def run_character(args) -> int:
    from .diagrams import character_series
    series = character_series(args.N, args.L, args.dmax)
    out = []
    for d, total in enumerate(series):
        terms = [[list(expo), c] for expo, c in sorted(total.items()) if c]
        out.append({"degree": d, "terms": terms})
    _emit({"N": args.N, "L": args.L, "dmax": args.dmax, "series": out})
    return 0


# ------------------------------------------------------------- verify

def _parse_diagram(text: str, N: int, L: int, parser) -> SemiDiagram:
    if text == "vacuum":
        return SemiDiagram(N, L)
    overrides = {}
    try:
        for part in text.split(","):
            i, h = part.split(":")
            overrides[int(i)] = int(h)
        return SemiDiagram(N, L, overrides)
    except ValueError as exc:
        parser.error(f"bad --diagram {text!r}: {exc}")


def _daha_samples(N: int, L: int):
    "Deterministic 3-fold tensor vectors touching several weight patterns."
    def key(*triples):
        return tuple(compose(kb, kd, ku, N, L) for kb, kd, ku in triples)
    a = TensorVec.basis(key((1, 1, 0), (N, L, -1), (1, L, 1)), N, L)
    b = TensorVec.basis(key((N, 1, 1), (1, 1, 0), (N, L, 0)), N, L)
    c = TensorVec.basis(key((1, L, 0), (N, 1, 0), (1, 1, -1)), N, L)
    return [a + 3 * b, b - c, a + b + c]


def _suite_daha(args) -> list:
    N, L = args.N, args.L
    kappa, nu = Fraction(L), default_nu(L)
    samples = _daha_samples(N, L)
    jobs = []

    def dd_commute(i, j):
        def run():
            for v in samples:
                lhs = apply_dunkl(i, kappa, nu, apply_dunkl(j, kappa, nu, v))
                rhs = apply_dunkl(j, kappa, nu, apply_dunkl(i, kappa, nu, v))
                if lhs != rhs:
                    return _case_of(False, f"[d_{i},d_{j}] != 0")
            return _case_of(True)
        return run

    for i in range(1, 4):
        for j in range(i + 1, 4):
            jobs.append((f"dunkl-commute d_{i} d_{j}", dd_commute(i, j)))

    def cross(i):
        def run():
            for v in samples:
                lhs = pi_apply("s", kappa, nu, apply_dunkl(i, kappa, nu, v), i)
                rhs = (apply_dunkl(i + 1, kappa, nu,
                                   pi_apply("s", kappa, nu, v, i)) + v)
                if lhs != rhs:
                    return _case_of(False, f"s_{i} d_{i} != d_{i+1} s_{i} + 1")
            return _case_of(True)
        return run

    for i in (1, 2):
        jobs.append((f"cross-relation s_{i}", cross(i)))

    def phi_square(i):
        def run():
            for v in samples:
                if i == 0:
                    av = lambda u: (kappa * u + apply_dunkl(1, kappa, nu, u)
                                    - apply_dunkl(3, kappa, nu, u))
                else:
                    av = lambda u: (apply_dunkl(i + 1, kappa, nu, u)
                                    - apply_dunkl(i, kappa, nu, u))
                lhs = phi_simple(i, kappa, nu, phi_simple(i, kappa, nu, v))
                if lhs != v - av(av(v)):
                    return _case_of(False, f"phi_{i}^2 != 1 - (coroot)^2")
            return _case_of(True)
        return run

    for i in (0, 1, 2):
        jobs.append((f"intertwiner-square phi_{i}", phi_square(i)))

    def braid(i, j):
        def run():
            for v in samples:
                lhs = phi_simple(i, kappa, nu,
                                 phi_simple(j, kappa, nu,
                                            phi_simple(i, kappa, nu, v)))
                rhs = phi_simple(j, kappa, nu,
                                 phi_simple(i, kappa, nu,
                                            phi_simple(j, kappa, nu, v)))
                if lhs != rhs:
                    return _case_of(False, f"braid phi_{i} phi_{j}")
            return _case_of(True)
        return run

    for i, j in [(0, 1), (1, 2), (0, 2)]:
        jobs.append((f"intertwiner-braid phi_{i} phi_{j}", braid(i, j)))

    def v0_eigen():
        # cyclic vectors live in sizes n = m*L; use the smallest n >= 3
        m = -(-3 // L)
        v0 = v0_tensor(N, L, m)
        want = zeta0(L, m, nu, kappa).c
        for i in range(1, m * L + 1):
            dv = apply_dunkl(i, kappa, nu, v0)
            if dv != -want[i - 1] * v0:
                return _case_of(False, f"d_{i} v0 != -zeta0_{i} v0")
        return _case_of(True)

    jobs.append(("block-vector eigenvalues", v0_eigen))
    return _run_cases(jobs)


def _suite_rtt(args) -> list:
    N, L = args.N, args.L
    order = args.order if args.order is not None else 3
    kappa, nu = Fraction(L), default_nu(L)
    keys = window_basis(0, args.l, N, L, args.d)
    tmap = TMap(N, L, kappa, nu)
    jobs = []

    def sweep(p, q, s, t):
        def run():
            for key in keys:
                w = WedgeVec.basis(key, N, L)
                for A in range(order + 1):
                    for B in range(order + 1 - A):
                        dv = rtt_defect(p, q, s, t, A, B, w, tmap)
                        if not dv.is_zero():
                            return _case_of(
                                False, f"defect at key {key}, orders "
                                       f"u^-{A} v^-{B}")
            return _case_of(True)
        return run

    for p in range(1, N + 1):
        for q in range(1, N + 1):
            for s in range(1, N + 1):
                for t in range(1, N + 1):
                    jobs.append((f"rtt T_{p}{q} T_{s}{t}", sweep(p, q, s, t)))
    return _run_cases(jobs)


def _suite_hw(args, parser, fock: bool) -> list:
    sd = _parse_diagram(args.diagram, args.N, args.L, parser)
    order = args.order if args.order is not None else default_order()
    if fock:
        return verify_hw_fock(sd, order)["cases"]
    r = r_from_diagram(finite_part(sd, max(sd.degree, 1)))
    return verify_hw_finite(r, args.L, args.N, order)["cases"]


def _suite_characters(args) -> list:
    N, L = args.N, args.L
    jobs = []

    def one(d):
        def run():
            l = d
            dim = len(window_keys(0, l, N, L, d))
            rank = uprime_subspace((0,) * L, 0, d, l, N, L).rank
            lhs = sum(ssyt_count(finite_part(sd, sd.degree), N)
                      for sd in enumerate_diagrams(N, L, d)[d])
            ok = lhs == dim - rank
            return _case_of(ok, f"tableaux {lhs}, window dim {dim}, "
                                f"invariant rank {rank}")
        return run

    for d in range(args.dmax + 1):
        jobs.append((f"degree {d}", one(d)))
    return _run_cases(jobs)


def _suite_qembed(args, parser) -> list:
    if args.l < args.d + 1:
        parser.error("q-embed needs --l at least --d + 1")
    N = args.N
    chi = None
    if args.chi:
        chi = _parse_seq(args.chi)
        if chi is None or len(chi) != args.L:
            parser.error("--chi must be a comma list of length L")
    window = FockWindow.vacuum(0, N, args.L, args.l, args.d)
    cases = []
    for p in range(1, N + 1):
        for q in range(1, N + 1):
            for label, check in (("q1", q1_check), ("q2", q2_check)):
                t0 = time.perf_counter()
                rep = check(p, q, window, chi=chi)
                for c in rep["cases"]:
                    c["id"] = f"{label}[{p},{q}] {c['id']}"
                    cases.append(c)
                print(f"  {label}[{p},{q}]: {len(rep['cases'])} keys "
                      f"({time.perf_counter() - t0:.3f}s)", file=sys.stderr)
    return cases


def run_verify(args, parser) -> int:
    t0 = time.perf_counter()
    if args.suite == "daha":
        cases = _suite_daha(args)
    elif args.suite == "rtt":
        cases = _suite_rtt(args)
    elif args.suite == "hw":
        cases = _suite_hw(args, parser, fock=False)
    elif args.suite == "fock-hw":
        cases = _suite_hw(args, parser, fock=True)
    elif args.suite == "characters":
        cases = _suite_characters(args)
    else:
        cases = _suite_qembed(args, parser)
    print(f"suite {args.suite}: {len(cases)} cases "
          f"({time.perf_counter() - t0:.3f}s)", file=sys.stderr)
    _emit({"suite": args.suite, "cases": cases})
    return 0 if all(c["status"] == "pass" for c in cases) else 1


# --------------------------------------------------------------- main

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="yangfock", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    d = sub.add_parser("diagrams", help="enumerate shapes with Drinfeld data")
    d.add_argument("--N", type=int, required=True)
    d.add_argument("--L", type=int, required=True)
    d.add_argument("--dmax", type=int, required=True)
    d.add_argument("--format", choices=["json", "jsonl"], default="json")

    r = sub.add_parser("regular", help="regularity verdict for a sequence")
    r.add_argument("--L", type=int, required=True)
    r.add_argument("--m", type=int, required=True)
    r.add_argument("--r", type=str, required=True,
                   help="comma separated nondecreasing integers, L*m of them")

    c = sub.add_parser("character", help="reduced character series by degree")
    c.add_argument("--N", type=int, required=True)
    c.add_argument("--L", type=int, required=True)
    c.add_argument("--dmax", type=int, required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["daha", "rtt", "hw", "fock-hw",
                                     "characters", "q-embed"])
    v.add_argument("--N", type=int, default=2)
    v.add_argument("--L", type=int, default=2)
    v.add_argument("--l", type=int, default=1)
    v.add_argument("--d", type=int, default=1)
    v.add_argument("--dmax", type=int, default=1)
    v.add_argument("--order", type=int, default=None)
    v.add_argument("--diagram", type=str, default="vacuum",
                   help='"vacuum" or gap overrides "i:h,i:h"')
    v.add_argument("--chi", type=str, default="",
                   help="length-L integer twist for q-embed")
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.cmd == "diagrams":
        if args.N < 2 or args.L < 2:
            parser.error("diagrams needs N >= 2 and L >= 2")
        if args.dmax < 0:
            parser.error("dmax must be nonnegative")
        return run_diagrams(args)
    if args.cmd == "regular":
        return run_regular(args, parser)
    if args.cmd == "character":
        if args.N < 1 or args.L < 1 or args.dmax < 0:
            parser.error("character needs N, L >= 1 and dmax >= 0")
        return run_character(args)
    return run_verify(args, parser)


if __name__ == "__main__":
    sys.exit(main())
