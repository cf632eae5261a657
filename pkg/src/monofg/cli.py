"""Command-line interface.

Exit codes: 0 success, 1 unreadable or malformed input, 2 precondition failure
(infinite dimensional, non-minimal relations, out-of-scope request),
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Optional

from .algebra import connectedness_warning, is_finite_dimensional, require_minimal
from .centre import centre_basis, fg_over_centre_probe, lemma_outcomes
from .classification import Kind, classify, profile_crosscheck
from .dual import b_basis, bijection_failures, build_dual, regime_for
from .errors import ConsistencyError, InfiniteDimensionError, MonofgError, ParseError, PreconditionError
from .fg import Verdict, cocycle_residue, decide_fg, verify_finite_generation
from .presentation import CORPUS_NAMES, load_corpus, parse_presentation
from .report import probe_section, report_dict, to_json
from .resolution import (
    compute_overlaps,
    d_squared_check,
    degree_profile,
    gldim_probe,
    global_dimension,
    uniqueness_check,
)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INCONSISTENT = 0, 1, 2, 3


class InputError(MonofgError):
    pass


def load_input(arg: str):
    if arg == "-":
        return parse_presentation(sys.stdin.read(), name="stdin")
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
        return parse_presentation(text, name=os.path.splitext(os.path.basename(arg))[0])
    name = arg[:-3] if arg.endswith(".qp") else arg
    if name in CORPUS_NAMES:
        return load_corpus(name)
    raise InputError(f"no such file or corpus entry: {arg}")


def _prepared(arg: str, depth: int = 4):
    p = load_input(arg)
    fd = is_finite_dimensional(p)
    if not fd:
        raise InfiniteDimensionError(f"algebra is infinite dimensional; {fd.witness} can be pumped")
    require_minimal(p)
    warning = connectedness_warning(p)
    if warning:
        print(f"warning: {warning}", file=sys.stderr)
    return p, compute_overlaps(p, max(depth, 4))


def cmd_classify(args, out) -> int:
    p, levels = _prepared(args.file)
    cls = classify(p, levels)
    print(f"{p.name}: {cls.describe()}", file=out)
    if cls.kind is Kind.DA_STACKED and cls.d == 2:
        print("note: D = 2A, so the B-model (ext, centre) is out of scope", file=out)
    return EXIT_OK


def cmd_fg(args, out) -> int:
    p, levels = _prepared(args.file, args.levels)
    report = decide_fg(p, levels)
    if args.json:
        out.write(to_json(report_dict(p, report, levels, probe_section(p, report))))
        return EXIT_OK
    print(f"{p.name}: {report.cls.describe()}", file=out)
    print(f"verdict: {report.verdict.value} ({report.reason})", file=out)
    for w in report.loops:
        extra = f" rotation {w.c_j}" if w.c_j is not None else ""
        print(f"  loop {w.cycle}:{extra} {w.status.value}", file=out)
        for r, why in w.violations:
            print(f"    {why} {r}", file=out)
    for w in report.trails:
        print(f"  trail {w.trail}: {w.status.value}; rho_T = {{{', '.join(map(str, w.rho_T))}}}", file=out)
        for r, why in w.violations:
            print(f"    {why} {r}", file=out)
    for i, g in enumerate(report.generators, 1):
        print(f"  x_{i}: {g.kind} generator of degree {g.degree} (mu={g.mu}) from {g.source}", file=out)
    if report.bound_N is not None:
        print(f"N = {report.bound_N}", file=out)
    for note in report.notes:
        print(f"note: {note}", file=out)
    return EXIT_OK


def cmd_resolve(args, out) -> int:
    p, levels = _prepared(args.file, args.levels)
    levels = compute_overlaps(p, args.levels) if args.levels >= 2 else levels
    for n in range(min(args.levels, levels.depth) + 1):
        lv = levels[n]
        lengths = sorted({len(e.path) for e in lv})
        print(f"R^{n}: {len(lv)} element(s), lengths {lengths}", file=out)
        for e in lv:
            print(f"  {e.path}", file=out)
    exact = global_dimension(p)
    print(f"levels computed: {gldim_probe(levels)}", file=out)
    print(f"global dimension: {'infinite' if exact is None else exact}", file=out)
    return EXIT_OK


def _dual_for(p, levels):
    cls = classify(p, levels)
    regime = regime_for(cls)
    return cls, regime, build_dual(p, cls.A, cls.d)


def cmd_ext(args, out) -> int:
    p, levels = _prepared(args.file, args.degree)
    cls, regime, dp = _dual_for(p, levels)
    print(f"{p.name}: {cls.describe()}, regime {regime.kind.value}", file=out)
    for n in range(args.degree + 1):
        basis = b_basis(dp, cls.d, cls.A, n)
        print(f"B_{n}: dim {len(basis)} (|R^{n}| = {len(levels[n])})", file=out)
        for b in basis:
            print(f"  {b}", file=out)
    return EXIT_OK


def cmd_centre(args, out) -> int:
    p, levels = _prepared(args.file)
    cls, regime, dp = _dual_for(p, levels)
    cb = centre_basis(dp, regime, args.max_degree)
    for k in range(args.max_degree + 1):
        elems = cb.by_degree[k]
        print(f"Z_{k}: dim {len(elems)}", file=out)
        for z in elems:
            print(f"  {z}", file=out)
    counts = fg_over_centre_probe(dp, regime, args.max_degree, cb)
    print(f"probe (heuristic) new generators per degree: {counts}", file=out)
    return EXIT_OK


def certify_checks(p, depth: int) -> list:
    """(name, ok, detail) for every invariant that applies to p."""
    levels = compute_overlaps(p, max(depth, 4))
    report = decide_fg(p, levels)
    cls = report.cls
    results = []

    def check(name: str, fn: Callable[[], tuple]):
        try:
            ok, detail = fn()
        except ConsistencyError as exc:
            ok, detail = False, str(exc)
        results.append((name, ok, detail))

    check("uniqueness", lambda: (not uniqueness_check(levels), ""))
    check("d-squared", lambda: (d_squared_check(levels, depth), f"depth {depth}"))
    if cls.kind in (Kind.DKOSZUL, Kind.DA_STACKED):
        check("delta-profile", lambda: (profile_crosscheck(cls, levels), str([sorted(s) for s in degree_profile(levels)])))
        dp = build_dual(p, cls.A, cls.d)
        check("bijection", lambda: (lambda bad: (not bad, str(bad)))(bijection_failures(levels, dp, cls.d, cls.A, depth)))
        try:
            regime = regime_for(cls)
        except PreconditionError:
            regime = None
        if regime is not None:
            def lemmas():
                outs, skipped = lemma_outcomes(p, dp, report, 6, regime)
                bad = [o for o in outs if not o.ok]
                return not bad, f"{len(outs)} candidate(s), not applicable: {skipped}" + (f", failing: {bad}" if bad else "")
            check("lemmas", lemmas)
    if report.verdict is Verdict.SATISFIED:
        for i, g in enumerate(report.generators, 1):
            check(f"cocycle x_{i}", lambda g=g: (lambda res: (not res, str({str(k): {str(a): v for a, v in d.items()} for k, d in res.items()})))(cocycle_residue(g.support, g.degree, compute_overlaps(p, max(depth, g.degree + 1)))))

        def factor():
            n_test = report.bound_N + 6
            log = verify_finite_generation(compute_overlaps(p, n_test), report, n_test)
            return True, f"{len(log)} element(s) up to level {n_test}"
        check("factorization", factor)
    return results


def cmd_certify(args, out) -> int:
    p, _ = _prepared(args.file)
    results = certify_checks(p, args.depth)
    failed = 0
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}", file=out)
        failed += not ok
    return EXIT_INCONSISTENT if failed else EXIT_OK


def cmd_corpus(args, out) -> int:
    rows = []
    for name in CORPUS_NAMES:
        p = load_corpus(name)
        report = decide_fg(p, compute_overlaps(p, 4))
        rows.append((name, report.cls.describe(), report.verdict.value))
    w0 = max(len(r[0]) for r in rows)
    w1 = max(len(r[1]) for r in rows)
    print(f"{'name':<{w0}}  {'class':<{w1}}  verdict", file=out)
    for name, cls, verdict in rows:
        print(f"{name:<{w0}}  {cls:<{w1}}  {verdict}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="monofg", description="(Fg) checks for monomial quiver algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="d-Koszul / (D,A)-stacked classification")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("fg", help="decide (Fg) with witnesses")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.add_argument("--levels", type=int, default=12, help="overlap depth used for profiles")
    s.set_defaults(func=cmd_fg)

    s = sub.add_parser("resolve", help="list the overlap sets R^n")
    s.add_argument("file")
    s.add_argument("--levels", type=int, default=6)
    s.set_defaults(func=cmd_resolve)

    s = sub.add_parser("ext", help="bases of the graded pieces B_n")
    s.add_argument("file")
    s.add_argument("--degree", type=int, default=4)
    s.set_defaults(func=cmd_ext)

    s = sub.add_parser("centre", help="graded centre of B in bounded degree")
    s.add_argument("file")
    s.add_argument("--max-degree", type=int, default=6)
    s.set_defaults(func=cmd_centre)

    s = sub.add_parser("certify", help="run every invariant check")
    s.add_argument("file")
    s.add_argument("--depth", type=int, default=10)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("corpus", help="verdict table for the built-in examples")
    s.set_defaults(func=cmd_corpus)
    return ap


def run(argv: Optional[list] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ConsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
