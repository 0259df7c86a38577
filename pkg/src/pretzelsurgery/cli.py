"""Command-line front end.

Subcommands:

* ``alexander``      - Alexander polynomial of a pretzel knot
* ``oracle-compare`` - cross-check the skein engine against Fox calculus
* ``obstruct``       - surgery obstruction predicates for one knot
* ``classify``       - the full cyclic/finite surgery pipeline
* ``verify-claims``  - grid suites (claim3 | claim4 | claim5 | oracle |
                       claim2 | classify-sweep)
* ``verify-claim2``  - the rank-formula implication grid

Exit codes: 0 success, 1 usage/input error, 2 verification failure.
All output is deterministic; grid output is JSON-lines sorted by
parameters.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from math import gcd

from .alexander import UnsupportedLinkError, alexander_skein, alexander_with_trace
from .classify import (
    FINITE_SLOPES,
    NO_CYCLIC_OR_FINITE,
    NON_HYPERBOLIC_SEE_MOSER,
    ClassifyError,
    classify,
)
from .laurent import LaurentPoly, render
from .obstruction import (
    HFRankParams,
    SurgerySlope,
    claim2_implication,
    gabai_not_fibered,
    monic_check,
    os_form_check,
    pm1_coefficients,
)
from .oracle import OracleError, alexander_fox
from .pretzel import (
    FamilyKind,
    PretzelLink,
    PretzelError,
    family_membership,
    parse_pretzel,
)


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let parameter lists such as "-2,3,7" parse as positionals
        import re
        self._negative_number_matcher = re.compile(r"^-\d[\d,.-]*$")

    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _poly_payload(delta: LaurentPoly, *, normalize: bool) -> dict:
    shown = delta.normalize() if normalize else delta
    return {
        "polynomial": render(shown),
        "normalized": normalize,
        "coefficients": {str(e): c for e, c in shown.items()},
    }


def _compute_alexander(link: PretzelLink) -> tuple[LaurentPoly, str]:
    """Skein engine with Fox-calculus fallback for configurations outside
    the skein rewrite table."""
    try:
        return alexander_skein(link), "skein"
    except UnsupportedLinkError:
        return alexander_fox(link), "fox"


def _emit(doc: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in lines:
            print(line)


# ----------------------------------------------------------------------
# single-knot subcommands

def _cmd_alexander(args) -> int:
    link = parse_pretzel(args.params)
    if args.trace:
        value, trace = alexander_with_trace(link)
        engine = "skein"
    else:
        value, engine = _compute_alexander(link)
        trace = None
    shown = value.normalize() if args.normalize else value
    doc = {"input": str(link), "engine": engine, **_poly_payload(value, normalize=args.normalize)}
    lines = [f"{link}: {render(shown)}"]
    if trace is not None:
        doc["steps"] = [
            {
                "link": str(s.link_before),
                "region": s.region_index,
                "branches": [[render(m), str(sub)] for m, sub in s.branches],
            }
            for s in trace.steps
        ]
        for s in trace.steps:
            parts = " ; ".join(f"[{render(m)}] * {sub}" for m, sub in s.branches)
            lines.append(f"  {s.link_before} @ region {s.region_index} -> {parts}")
    _emit(doc, args.json, lines)
    return 0


def _cmd_oracle_compare(args) -> int:
    link = parse_pretzel(args.params)
    fox = alexander_fox(link)
    try:
        skein = alexander_skein(link)
    except UnsupportedLinkError:
        _emit(
            {"input": str(link), "comparable": False, "fox": render(fox.normalize())},
            args.json,
            [f"{link}: outside the skein engine's rewrite table"],
        )
        return 1
    match = skein.equal_up_to_units(fox)
    doc = {
        "input": str(link),
        "comparable": True,
        "match": match,
        "skein": render(skein.normalize()),
        "fox": render(fox.normalize()),
    }
    _emit(doc, args.json, [f"{link}: {'match' if match else 'MISMATCH'}"])
    return 0 if match else 2


def _cmd_obstruct(args) -> int:
    link = parse_pretzel(args.params)
    delta, engine = _compute_alexander(link)
    decomp = None
    try:
        decomp = os_form_check(delta)
    except Exception:
        pass
    doc = {
        "input": str(link),
        "engine": engine,
        "polynomial": render(delta.normalize()),
        "pm1_coefficients": pm1_coefficients(delta),
        "monic": monic_check(delta),
        "os_form": None
        if decomp is None
        else {"k": decomp.k, "exponents": list(decomp.exponents)},
    }
    tag = family_membership(link)
    if tag.kind is FamilyKind.MINUS1_MINUS1_2M:
        cert = gabai_not_fibered(tag.index, tag.p, tag.q)
        doc["fiberedness"] = {
            "verdict": cert.verdict,
            "surface_type": cert.surface_type,
            "band_data": list(cert.band_data),
            "case_path": list(cert.case_path),
            "associated_link": str(cert.associated_link),
        }
    lines = [
        f"{link}: {doc['polynomial']}",
        f"  all coefficients +-1: {doc['pm1_coefficients']}",
        f"  monic: {doc['monic']}",
        f"  L-space coefficient form: "
        + ("absent" if decomp is None else f"k={decomp.k}, exponents={list(decomp.exponents)}"),
    ]
    if "fiberedness" in doc:
        lines.append(f"  fiberedness: {doc['fiberedness']['verdict']}")
    _emit(doc, args.json, lines)
    return 0


def _cmd_classify(args) -> int:
    report = classify(args.input)
    if args.json:
        print(report.to_json())
    else:
        print(f"{report.input_text}: {', '.join(report.final.verdicts)}")
        if report.final.cyclic_slopes:
            print(f"  cyclic slopes: {report.final.cyclic_slopes}")
        if report.final.finite_slopes:
            print(f"  finite slopes: {report.final.finite_slopes}")
        print(f"  hyperbolic: {report.hyperbolic}"
              + (f" ({report.hyperbolic_reason})" if report.hyperbolic_reason else ""))
        for s in report.stages:
            print(f"  [{s.stage}] {s.verdict} -- {s.citation}")
    return 0


# ----------------------------------------------------------------------
# grid suites

def _run_cells(cells, fn, threads: int):
    if threads == 0:
        threads = os.cpu_count() or 1
    if threads == 1 or len(cells) <= 1:
        return [fn(c) for c in cells]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, cells))


def _odd_pairs(pmin: int, pmax: int, qmax: int):
    for p in range(pmin, pmax + 1, 2):
        for q in range(p, qmax + 1, 2):
            yield p, q


def _suite_claim3(args):
    cells = [
        (n, p, q)
        for n in range(1, args.nmax + 1)
        for p, q in _odd_pairs(3, args.pmax, args.qmax)
    ]

    def check(cell):
        n, p, q = cell
        link = PretzelLink((-1, -2 * n, p, q))
        c = alexander_skein(link).normalize().coefficient(1)
        expected = -4 if n == 1 else -3
        return {"suite": "claim3", "n": n, "p": p, "q": q,
                "coefficient": c, "expected": expected, "ok": c == expected}

    return cells, check


def _suite_claim4(args):
    cells = [
        (n, p, q)
        for n in range(2, args.nmax + 1)
        for p, q in _odd_pairs(3, args.pmax, args.qmax)
    ]

    def check(cell):
        n, p, q = cell
        link = PretzelLink((-1, 2 * n, p, q))
        c = alexander_skein(link).normalize().coefficient(3)
        return {"suite": "claim4", "n": n, "p": p, "q": q,
                "coefficient": c, "expected": 2, "ok": c == 2}

    return cells, check


def _suite_claim5(args):
    cells = [(p, q) for p, q in _odd_pairs(5, args.pmax, args.qmax)]

    def check(cell):
        p, q = cell
        link = PretzelLink((-2, p, q))
        c = alexander_skein(link).normalize().coefficient(4)
        return {"suite": "claim5", "p": p, "q": q,
                "coefficient": c, "expected": -2, "ok": c == -2}

    return cells, check


def _suite_oracle(args):
    bound = max(2, args.qmax)
    cells = []
    for n in range(1, args.nmax + 1):
        for params in product(range(-bound, bound + 1), repeat=n):
            link = PretzelLink(params)
            try:
                from .pretzel import is_knot
                if not is_knot(link):
                    continue
            except PretzelError:
                continue
            cells.append(params)

    def check(params):
        link = PretzelLink(params)
        base = {"suite": "oracle", "params": list(params)}
        try:
            skein = alexander_skein(link)
        except UnsupportedLinkError:
            return {**base, "comparable": False, "ok": True}
        ok = skein.equal_up_to_units(alexander_fox(link))
        return {**base, "comparable": True, "ok": ok}

    return cells, check


def _claim2_cells():
    cells = []
    for nu in range(-3, 6):
        for beta in range(2, 6):
            for alpha in range(-30, 31):
                if gcd(alpha, beta) != 1:
                    continue
                for y in range(-10, 1):
                    x = max(0, (2 * nu - 1) * beta - abs(alpha))
                    if 2 * x + beta * y == 0:
                        cells.append((nu, alpha, beta, y))
    return cells


def _check_claim2(cell):
    nu, alpha, beta, y = cell
    res = claim2_implication(HFRankParams(nu=nu, Y=y, slope=SurgerySlope(alpha, beta)))
    ok = res.a_holds and res.b_holds
    return {"suite": "claim2", "nu": nu, "alpha": alpha, "beta": beta, "Y": y,
            "x_beta": res.x_beta, "x_one": res.x_one,
            "a_holds": res.a_holds, "b_holds": res.b_holds, "ok": ok}


def _suite_claim2(args):
    return _claim2_cells(), _check_claim2


def _suite_classify_sweep(args):
    cells = [q for q in range(3, args.qmax + 1, 2)]

    def check(q):
        report = classify(PretzelLink((-2, 3, q)))
        verdicts = report.final.verdicts
        if q in (3, 5):
            ok = verdicts == [NON_HYPERBOLIC_SEE_MOSER]
        elif q == 7:
            ok = (report.final.cyclic_slopes == [18, 19]
                  and report.final.finite_slopes == [17])
        elif q == 9:
            ok = (verdicts == [FINITE_SLOPES]
                  and report.final.finite_slopes == [22, 23])
        else:
            ok = verdicts == [NO_CYCLIC_OR_FINITE]
        return {"suite": "classify-sweep", "q": q, "verdicts": verdicts,
                "cyclic": report.final.cyclic_slopes,
                "finite": report.final.finite_slopes, "ok": ok}

    return cells, check


_SUITES = {
    "claim3": _suite_claim3,
    "claim4": _suite_claim4,
    "claim5": _suite_claim5,
    "oracle": _suite_oracle,
    "claim2": _suite_claim2,
    "classify-sweep": _suite_classify_sweep,
}


def _run_suite(args, suite_name: str) -> int:
    cells, check = _SUITES[suite_name](args)
    results = _run_cells(cells, check, args.threads)
    results.sort(key=lambda r: json.dumps(r, sort_keys=True))
    failures = 0
    for r in results:
        if not r["ok"]:
            failures += 1
        if args.json:
            print(json.dumps(r, sort_keys=True))
    summary = {"suite": suite_name, "cells": len(results),
               "failures": failures, "ok": failures == 0}
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        print(f"{suite_name}: {len(results)} cells, {failures} failures")
    return 0 if failures == 0 else 2


def _cmd_verify_claims(args) -> int:
    return _run_suite(args, args.suite)


def _cmd_verify_claim2(args) -> int:
    return _run_suite(args, "claim2")


# ----------------------------------------------------------------------
# wiring

def _build_parser() -> _Parser:
    parser = _Parser(prog="pretzelsurgery")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("alexander", help="Alexander polynomial of a pretzel knot")
    p.add_argument("params", help="comma-separated twist parameters, e.g. -2,3,7")
    p.add_argument("--normalize", action="store_true",
                   help="lowest degree 0, positive constant term")
    p.add_argument("--trace", action="store_true", help="show the resolving tree")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_alexander)

    p = sub.add_parser("oracle-compare",
                       help="compare the skein engine with Fox calculus")
    p.add_argument("params")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_oracle_compare)

    p = sub.add_parser("obstruct", help="surgery obstruction predicates")
    p.add_argument("params")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_obstruct)

    p = sub.add_parser("classify", help="cyclic/finite surgery classification")
    p.add_argument("input",
                   help="pretzel parameters (-2,3,7) or tangle fractions (1/3;1/3;-1/2)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("verify-claims", help="run a verification grid")
    p.add_argument("--suite", required=True, choices=sorted(_SUITES))
    p.add_argument("--nmax", type=int, default=5,
                   help="largest n (claim3/claim4) or region count (oracle)")
    p.add_argument("--mmax", type=int, default=5)
    p.add_argument("--pmax", type=int, default=11)
    p.add_argument("--qmax", type=int, default=None,
                   help="defaults to pmax (claims), 5 (oracle), 25 (classify-sweep)")
    p.add_argument("--threads", type=int, default=1, help="0 = auto")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify_claims)

    p = sub.add_parser("verify-claim2", help="rank-formula implication grid")
    p.add_argument("--threads", type=int, default=1, help="0 = auto")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify_claim2)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    if getattr(args, "qmax", None) is None and hasattr(args, "qmax"):
        if args.suite == "oracle":
            args.qmax = 5
        elif args.suite == "classify-sweep":
            args.qmax = 25
        else:
            args.qmax = args.pmax
    try:
        return args.fn(args)
    except (PretzelError, OracleError, ClassifyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
