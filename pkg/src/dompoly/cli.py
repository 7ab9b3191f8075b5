"""Command-line entry point: ``dompoly <command> ...``.

Exit codes: 0 ok, 2 usage or unknown family, 3 capacity exceeded,
4 edge-list parse error, 5 numeric failure (root finder did not converge).
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import bkw, checks, expsum, roots
from . import families as fam
from .domset import CapacityError, domination_polynomial_bruteforce
from .graph import EdgeListParseError, read_edge_list
from .poly import Polynomial, dumps, render
from .svg import write_scatter

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_PARSE = 4
EXIT_NUMERIC = 5


class UsageError(Exception):
    pass


def _range(text: str) -> range:
    lo, dots, hi = text.partition("..")
    try:
        return range(int(lo), int(hi) + 1) if dots else range(int(lo), int(lo) + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected a..b") from None


def _floats(text: str, count: int, what: str) -> tuple[float, ...]:
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError:
        vals = ()
    if len(vals) != count:
        raise UsageError(f"{what} needs {count} comma-separated numbers, got {text!r}")
    return vals


def family_polynomial(spec: fam.FamilySpec, method: str | None, max_order=None, workers: int = 1) -> Polynomial:
    """D(G,x) for a family member; ``method=None`` picks closed, then recurrence, then oracle."""
    if method in (None, "closed"):
        try:
            return fam.closed_form(spec)
        except fam.FamilyError:
            if method == "closed":
                raise
    if method in (None, "recurrence"):
        try:
            return fam.recurrence_form(spec)
        except fam.FamilyError:
            if method == "recurrence":
                raise
    return domination_polynomial_bruteforce(fam.build(spec), max_order, workers)


# ---------------------------------------------------------------------------
# poly
# ---------------------------------------------------------------------------

def cmd_poly(args) -> int:
    if args.edgelist:
        g = read_edge_list(args.edgelist)
        p = domination_polynomial_bruteforce(g, args.max_order, args.workers)
    else:
        spec = fam.parse_spec(args.family)
        p = family_polynomial(spec, args.method, args.max_order, args.workers)
    print(render(p))
    if args.json:
        Path(args.json).write_text(dumps(p) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    wanted = list(checks.SUITES) if args.theorem == "all" else [args.theorem]
    all_ok = True
    for sid in wanted:
        name = checks.SUITES[sid]
        passed = failed = 0
        first = None
        for case in checks.suite_cases(sid, args.max_n, args.seed, args.trials):
            if case.passed:
                passed += 1
            else:
                failed += 1
                first = first or case
            if not args.quiet or not case.passed:
                print(f"{'PASS' if case.passed else 'FAIL'} {name} {case.label}")
        print(f"{name}: {passed} passed, {failed} failed")
        if first is not None:
            all_ok = False
            print(f"  first counterexample: {first.label}")
            if first.note:
                print(f"  {first.note}")
            if first.lhs is not None:
                print(f"  lhs = {render(first.lhs)}")
                print(f"  rhs = {render(first.rhs)}")
    return EXIT_OK if all_ok else 1


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------

def family_label(spec: fam.FamilySpec) -> str:
    """Family name without its ``n`` slot: ``book``, ``flower:4``, ``gbook:5``."""
    slot = 1 if spec.kind == "flower" else 0
    rest = [str(v) for i, v in enumerate(spec.params) if i != slot]
    return spec.kind + (":" + ",".join(rest) if rest else "")


def cmd_roots(args) -> int:
    specs = fam.parse_spec_range(args.family)
    out_rows = []
    summary = []
    cloud = []
    ok = True
    for spec in specs:
        p = family_polynomial(spec, None, args.max_order)
        if p.degree < 1:
            summary.append({"family": str(spec), "n": spec.n, "zero_multiplicity": 0,
                            "degree": p.degree, "converged": True})
            continue
        rs = roots.find_roots(p, args.tol, args.max_iter, args.seed, args.residual_bound)
        ok &= rs.converged
        summary.append({
            "family": str(spec),
            "n": spec.n,
            "degree": p.degree,
            "zero_multiplicity": rs.zero_multiplicity,
            "converged": rs.converged,
            "iterations": rs.iterations,
            "max_residual": max(rs.residuals, default=0.0),
            "max_modulus": rs.max_modulus,
        })
        if not rs.converged:
            print(f"warning: {spec}: root finder did not converge; rows for n={spec.n} are unreliable",
                  file=sys.stderr)
        for z, r in zip(rs.nonzero_roots, rs.residuals):
            out_rows.append((family_label(spec), spec.n, repr(z.real), repr(z.imag), repr(r)))
            cloud.append(z)
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["family", "n", "re", "im", "residual"])
        w.writerows(out_rows)
    summary_path = args.summary or str(args.out) + ".summary.json"
    Path(summary_path).write_text(json.dumps({"tol": args.tol, "runs": summary}, indent=2) + "\n")
    if args.svg:
        write_scatter(args.svg, [("root", cloud)], f"roots of {args.family}")
    print(f"{len(out_rows)} nonzero roots over {len(specs)} polynomials -> {args.out}")
    return EXIT_OK if ok else EXIT_NUMERIC


# ---------------------------------------------------------------------------
# limits
# ---------------------------------------------------------------------------

def _resolution(text: str) -> tuple[int, int]:
    r, sep, c = text.lower().partition("x")
    try:
        res = (int(r), int(c))
    except ValueError:
        raise UsageError(f"--res needs RxC, got {text!r}") from None
    if min(res) < 2:
        raise UsageError("--res needs at least 2 rows and 2 columns")
    return res


def cmd_limits(args) -> int:
    family = expsum.builtin_family(args.family)
    region = _floats(args.region, 4, "--region")
    if region[0] >= region[1] or region[2] >= region[3]:
        raise UsageError("--region must satisfy x0 < x1 and y0 < y1")
    res = _resolution(args.res)
    result = bkw.classify_grid(family, region, res, args.tie_tol, args.band)
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["re", "im", "verdict", "margin"])
        for z, c in result.points:
            w.writerow([repr(z.real), repr(z.imag), c.verdict.value, repr(c.margin)])
    for z in result.poles:
        print(f"pole node skipped: {z.real!r},{z.imag!r}", file=sys.stderr)
    curves = []
    if args.curves_out or args.svg:
        if args.family in ("book", "gbook5"):
            reach = max(abs(v) for v in region) + 1.0
            curves = bkw.sample_book_curves(args.curve_samples, reach)
        elif args.curves_out:
            print(f"note: no analytic curves for {args.family}; --curves-out skipped", file=sys.stderr)
    if args.curves_out and curves:
        with open(args.curves_out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["curve", "re", "im"])
            for name, z in curves:
                w.writerow([name, repr(z.real), repr(z.imag)])
    if args.svg:
        series: dict[str, list[complex]] = {}
        for z, c in result.points:
            if c.is_limit:
                series.setdefault(c.verdict.value, []).append(z)
        for name, z in curves:
            series.setdefault(name, []).append(z)
        write_scatter(args.svg, series.items(), f"limit set of {args.family}")
    counts: dict[str, int] = {}
    for _, c in result.points:
        counts[c.verdict.value] = counts.get(c.verdict.value, 0) + 1
    print(" ".join(f"{k}={v}" for k, v in sorted(counts.items())) + f" poles={len(result.poles)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# evidence
# ---------------------------------------------------------------------------

def fit_symmetric_conic(zs) -> tuple[np.ndarray, float, str]:
    """Least-squares conic a x^2 + c y^2 + d x + f = 0 through the points.

    Coefficients are the unit-norm minimiser; the residual is the RMS
    algebraic error. Symmetry about the real axis rules out xy and y terms.
    """
    zs = np.asarray(zs, dtype=complex)
    x, y = zs.real, zs.imag
    m = np.column_stack([x * x, y * y, x, np.ones_like(x)])
    _, s, vt = np.linalg.svd(m, full_matrices=False)
    coef = vt[-1]
    resid = float(s[-1] / np.sqrt(len(zs)))
    a, c = coef[0], coef[1]
    if abs(a) < 1e-9 or abs(c) < 1e-9:
        kind = "parabola"
    elif a * c < 0:
        kind = "hyperbola"
    else:
        kind = "ellipse"
    return coef, resid, kind


def evidence_rows(question: str, ns, threshold: float = roots.REAL_THRESHOLD, tol: float = roots.DEFAULT_TOL):
    """Per-n rows for one evidence question; each row is a dict."""
    rows = []
    for n in ns:
        if question == "q1":
            p = fam.dompoly_friendship(n)
            label = f"friendship:{n}"
        else:
            p = fam.dompoly_flower4(n)
            label = f"flower:4,{n}"
        rs = roots.find_roots(p, tol)
        reals = [z.real for z in rs.nonzero_roots if roots.is_real(z, threshold)]
        row = {
            "graph": label,
            "n": n,
            "nonzero_real": len(reals),
            "real_incl_zero": len(set(round(r, 9) for r in reals)) + (1 if rs.zero_multiplicity else 0),
            "max_modulus": rs.max_modulus,
            "converged": rs.converged,
        }
        if question == "c2":
            # the x^n term dominates near the origin; fit the outer cloud only,
            # upper half plane since conjugates carry no extra information
            outer = [z for z in rs.nonzero_roots if abs(z) > 1 and z.imag > threshold]
            if len(outer) >= 6:
                coef, resid, kind = fit_symmetric_conic(outer)
                row.update(conic=" ".join(f"{v:+.5f}" for v in coef), fit_residual=resid, conic_type=kind)
            else:
                row.update(conic="", fit_residual=float("nan"), conic_type="too few points")
        rows.append(row)
    return rows


_EVIDENCE_COLUMNS = {
    "q1": ("graph", "nonzero_real", "real_incl_zero", "converged"),
    "c1": ("graph", "nonzero_real", "converged"),
    "q3": ("graph", "max_modulus", "converged"),
    "c2": ("graph", "conic_type", "fit_residual", "conic", "converged"),
}

_EVIDENCE_TITLES = {
    "q1": "real roots of the friendship graph F_n (question: exactly three for even n >= 4?)",
    "c1": "nonzero real roots of F_{4,n} (conjecture: none for odd n)",
    "q3": "largest root modulus of F_{4,n} (question: a good upper bound?)",
    "c2": "conic fitted to the outer roots of F_{4,n} (conjecture: limit is a hyperbola)",
}


def cmd_evidence(args) -> int:
    ns = _range(args.n_range)
    if ns.start < 1:
        raise UsageError("--n-range must start at 1 or more")
    rows = evidence_rows(args.question, ns, args.threshold, args.tol)
    print(f"NUMERICAL EVIDENCE, not a proof: {_EVIDENCE_TITLES[args.question]}")
    print(f"real-root threshold: |Im z| < {args.threshold:g} * (1 + |Re z|); root tol {args.tol:g}")
    cols = _EVIDENCE_COLUMNS[args.question]
    print("\t".join(cols))
    for row in rows:
        cells = []
        for c in cols:
            v = row[c]
            cells.append(f"{v:.6g}" if isinstance(v, float) else str(v))
        print("\t".join(cells))
    return EXIT_OK if all(r["converged"] for r in rows) else EXIT_NUMERIC


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dompoly", description="Domination polynomials, their roots and limits of roots.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print D(G,x) for a family member or an edge list")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="e.g. book:3, flower:4,2, gbook:2,5")
    src.add_argument("--edgelist", help="file with 'n <order>' then one 'u v' per line")
    p.add_argument("--method", choices=("closed", "recurrence", "oracle"),
                   help="default: closed form, else recurrence, else brute force")
    p.add_argument("--json", help="also write the coefficients as JSON here")
    p.add_argument("--max-order", type=int, help="refuse brute force above this many vertices")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_poly)

    v = sub.add_parser("verify", help="check recurrences and closed forms against brute force")
    v.add_argument("--theorem", default="all", choices=tuple(checks.SUITES) + ("all",),
                   help="suite id: " + ", ".join(f"{k}={v}" for k, v in checks.SUITES.items()))
    v.add_argument("--max-n", type=int, default=5, help="largest family size / exhaustive graph order")
    v.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    v.add_argument("--trials", type=int, default=50, help="random graphs per randomized suite")
    v.add_argument("--quiet", action="store_true", help="print only failures and totals")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("roots", help="write the nonzero roots of a family range as CSV")
    r.add_argument("--family", required=True, help="e.g. book:1..30 or flower:4,1..12")
    r.add_argument("--out", required=True)
    r.add_argument("--summary", help="side JSON (default: <out>.summary.json)")
    r.add_argument("--tol", type=float, default=roots.DEFAULT_TOL)
    r.add_argument("--residual-bound", type=float, default=roots.RESIDUAL_BOUND)
    r.add_argument("--max-iter", type=int, default=roots.MAX_ITER)
    r.add_argument("--seed", type=int, help="perturb the starting angles")
    r.add_argument("--max-order", type=int)
    r.add_argument("--svg")
    r.set_defaults(func=cmd_roots)

    lm = sub.add_parser("limits", help="classify a grid by the limit-of-roots test")
    lm.add_argument("--family", required=True, choices=("book", "gbook5", "flower4", "friendship"))
    lm.add_argument("--region", required=True, help="x0,x1,y0,y1")
    lm.add_argument("--res", required=True, help="RxC grid nodes (rows x columns)")
    lm.add_argument("--out", required=True)
    lm.add_argument("--curves-out")
    lm.add_argument("--curve-samples", type=int, default=400)
    lm.add_argument("--svg")
    lm.add_argument("--tie-tol", type=float, help="relative modulus tie band; default is a geometric band of half the grid pitch")
    lm.add_argument("--band", type=float, help="geometric tie band; overrides --tie-tol")
    lm.set_defaults(func=cmd_limits)

    e = sub.add_parser("evidence", help="numerical evidence for the open questions")
    e.add_argument("--question", required=True, choices=("q1", "c1", "q3", "c2"))
    e.add_argument("--n-range", required=True, help="a..b")
    e.add_argument("--threshold", type=float, default=roots.REAL_THRESHOLD)
    e.add_argument("--tol", type=float, default=roots.DEFAULT_TOL)
    e.set_defaults(func=cmd_evidence)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, fam.FamilyError, ValueError) as exc:
        # EdgeListParseError is a ValueError too; keep it on its own code
        if isinstance(exc, EdgeListParseError):
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
