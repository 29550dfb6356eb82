"""Command-line front end.

Exit codes: 0 ok, 2 unsupported singularity, 3 internal inconsistency,
4 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import combinat
from .arrangement import defining_polynomial, load_arrangement, validate
from .errors import (
    InvalidArrangement,
    NumericalDegeneracy,
    RefinementError,
    StabilizationFailure,
    UndefinedInputError,
    UnsupportedDegreeError,
    UnsupportedSingularity,
)
from .exactpoly import format_rational
from .jacobian import nearly_free_verdict, resolution_shape, syzygy_report, verify_relation
from .singular import format_point, group_and_classify
from .svg import DegenerateWindow, parse_window, render_svg

SCHEMA = 1
EXIT_OK = 0
EXIT_UNSUPPORTED = 2
EXIT_INCONSISTENT = 3
EXIT_INVALID = 4
DEFAULT_WINDOW = "-10,-10,10,10"


class InconsistentAnalysis(Exception):
    pass


def jsonable(obj):
    """Convert Fractions (as ints or "p/q"), tuples and dict keys for json.dumps."""
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def _emit_json(obj):
    print(json.dumps(jsonable({"schema": SCHEMA, **obj}), indent=2, ensure_ascii=False))


def _yes_no(v) -> str:
    return "n/a" if v is None else ("ok" if v else "FAILED")


# -- analyze ---------------------------------------------------------------------------

def analyze(path) -> dict:
    """Run the full pipeline on an arrangement file and return the report as a dict."""
    arr = load_arrangement(path)
    rep = validate(arr)
    rep.raise_first()
    f = defining_polynomial(arr)
    points, wc = group_and_classify(arr)
    syz = syzygy_report(f)
    if not verify_relation(f, syz.witness):
        raise InconsistentAnalysis("mdr witness fails re-verification")
    tau_geo, tau_alg = wc.tau, syz.tau
    verdict = nearly_free_verdict(arr.m, syz.mdr, tau_alg)

    in_scope = arr.d >= 1 and arr.k >= 1
    cand = combinat.Candidate(wc.d, wc.k, wc.n2, wc.t, wc.n3)
    lower = combinat.mdr_lower_bound(arr.m)
    checks = {
        "count": combinat.count_holds(*wc.as_tuple()),
        "mdr_lower_bound": (syz.mdr >= lower) if (verdict.nearly_free and in_scope) else None,
        "hirzebruch": combinat.hirzebruch_holds(cand) if in_scope else None,
    }
    consistent = tau_geo == tau_alg and all(v is not False for v in checks.values())
    return {
        "command": "analyze",
        "file": str(path),
        "arrangement": arr.to_json_obj(),
        "polynomial": str(f),
        "d": arr.d,
        "k": arr.k,
        "m": arr.m,
        "weak_combinatorics": {"n2": wc.n2, "t": wc.t, "n3": wc.n3},
        "tau": {"geometric": tau_geo, "algebraic": tau_alg},
        "consistent": consistent,
        "mdr": syz.mdr,
        "witness": [str(p) for p in syz.witness],
        "kernel_dims": syz.kernel_dims,
        "milnor_dims": syz.milnor_dims,
        "verdict": {
            "m": verdict.m,
            "r": verdict.r,
            "tau": verdict.tau,
            "lhs": verdict.lhs,
            "nearly_free": verdict.nearly_free,
            "exponents": list(verdict.exponents) if verdict.exponents else None,
        },
        "resolution": resolution_shape(arr.m, *verdict.exponents) if verdict.nearly_free else None,
        "checks": checks,
        "mdr_lower_bound": lower,
        "singular_points": [
            {
                "kind": p.kind,
                "point": format_point(p.point),
                "components": [arr.component_label(i) for i in p.branches],
                "real": p.is_real(),
            }
            for p in points
        ],
        "warnings": list(rep.warnings),
        "notes": list(syz.notes),
    }


def format_analysis(r: dict) -> str:
    wc = r["weak_combinatorics"]
    v = r["verdict"]
    lines = [
        f"arrangement {r['file']}: d={r['d']} lines, k={r['k']} conics, degree m={r['m']}",
        f"  lines:  {r['arrangement']['lines']}",
        f"  conics: {r['arrangement']['conics']}",
        f"f = {r['polynomial']}",
    ]
    for w in r["warnings"]:
        lines.append(f"warning: {w}")
    lines.append(f"weak combinatorics (n2, t, n3) = ({wc['n2']}, {wc['t']}, {wc['n3']})")
    for p in r["singular_points"]:
        tag = "real" if p["real"] else "complex"
        lines.append(f"  {p['kind']:8s} {p['point']}  on {', '.join(p['components'])}  [{tag}]")
    t = r["tau"]
    mark = "" if t["geometric"] == t["algebraic"] else "  INCONSISTENT"
    lines.append(f"tau: n2 + 3t + 4n3 = {t['geometric']}, stable dim M(f)_k = {t['algebraic']}{mark}")
    dims = ", ".join(f"k={k}: {d}" for k, d in r["milnor_dims"].items())
    lines.append(f"  dim M(f)_k: {dims}")
    kd = ", ".join(f"r={k}: {d}" for k, d in r["kernel_dims"].items())
    lines.append(f"mdr = {r['mdr']}  (relation space dims {kd})")
    lines.append(f"  witness (a, b, c) = ({'; '.join(r['witness'])})  verified")
    for n in r["notes"]:
        lines.append(f"  note: {n}")
    lines.append(
        f"r^2 - r(m-1) + (m-1)^2 = {v['lhs']}, tau + 1 = {v['tau'] + 1}: "
        + (f"nearly free, exponents ({v['exponents'][0]}, {v['exponents'][1]})"
           if v["nearly_free"] else "not nearly free")
    )
    if r["resolution"]:
        lines.append(f"  resolution: {r['resolution']}")
    c = r["checks"]
    lines.append("checks:")
    lines.append(f"  count binom(m,2) - k = n2 + 2t + 3n3: {_yes_no(c['count'])}")
    lines.append(f"  mdr >= ceil(2m/3 - 2) = {r['mdr_lower_bound']}: {_yes_no(c['mdr_lower_bound'])}")
    lines.append(f"  8k + n2 + 3/4 n3 >= d + 5/2 t (m >= 6): {_yes_no(c['hirzebruch'])}")
    lines.append("status: " + ("consistent" if r["consistent"] else "INCONSISTENT"))
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    report = analyze(args.file)
    if args.json:
        _emit_json(report)
    else:
        print(format_analysis(report))
    return EXIT_OK if report["consistent"] else EXIT_INCONSISTENT


# -- enumerate -------------------------------------------------------------------------

def _bound_witness_text(m: int) -> str:
    lo, hi = combinat.degree_infeasibility_witness(m)
    return f"ceil(2*{m}/3 - 2) = {lo} > {hi} = floor({m}/2)"


def group_by_row(cands) -> list[dict]:
    """One entry per (d, k; n2, t, n3), listing every admissible exponent pair."""
    grouped: dict = {}
    for c in cands:
        key = (c.d, c.k, c.n2, c.t, c.n3)
        if key not in grouped:
            entry = c.to_json()
            entry["exponents"] = []
            grouped[key] = entry
        grouped[key]["exponents"].append(list(c.exponents))
    return [grouped[k] for k in sorted(grouped, key=lambda r: (r[1], r[2], r[3], r[4]))]


def enumerate_degree(m: int, nearly_free: bool) -> dict:
    if m < 3:
        raise UndefinedInputError(f"degree must be at least 3, got {m}")
    top = combinat.degree_upper_bound()
    if m > top:
        raise UndefinedInputError(
            f"degree {m} exceeds the upper bound {top} for nearly free conic-line arrangements: "
            + _bound_witness_text(m)
        )
    out = {"command": "enumerate", "degree": m, "mode": "nearly-free" if nearly_free else "count-only"}
    if not nearly_free:
        out["rows"] = [c.to_json() for c in combinat.count_admissible(m)]
        out["status"] = "COMPLETE"
        return out
    rows = combinat.nearly_free_candidates(m)
    out["rows"] = group_by_row(rows)
    out["status"] = combinat.existence_status(m)
    if not rows:
        cert = combinat.nonexistence_certificate(m)
        if not (cert["empty"] and combinat.verify_certificate(cert)):
            raise InconsistentAnalysis(f"certificate for m={m} does not verify")
        out["certificate"] = cert
    return out


def format_enumeration(r: dict) -> str:
    m = r["degree"]
    head = f"degree m={m}, {r['mode']}: {len(r['rows'])} rows, status {r['status']}"
    lines = [head]
    if r["status"] == "OPEN":
        lines.append("  existence is undecided for this degree; rows are candidates only")
    lines.append(f"  {'d':>3} {'k':>3} {'n2':>4} {'t':>4} {'n3':>4} {'tau':>4}"
                 + (f"  {'exponents':<16s} hirzebruch" if r["mode"] == "nearly-free" else ""))
    for row in r["rows"]:
        s = f"  {row['d']:>3} {row['k']:>3} {row['n2']:>4} {row['t']:>4} {row['n3']:>4} {row['tau']:>4}"
        if r["mode"] == "nearly-free":
            exps = " ".join(f"({a}, {b})" for a, b in row["exponents"])
            s += f"  {exps:<16s} {_yes_no(row['checks'].get('hirzebruch'))}"
        lines.append(s)
    cert = r.get("certificate")
    if cert:
        lines.append(f"NON-EXISTENCE certificate for m={m} (verified):")
        lines.append(f"  d1 range: {cert['mdr_lower_bound']} <= d1 <= {cert['mdr_upper_bound']}")
        if cert["exponent_range_empty"]:
            lines.append(f"  {cert['witness']}")
        for b in cert["branches"]:
            d1, d2 = b["exponents"]
            lines.append(
                f"  exponents ({d1}, {d2}), k={b['k']}, d={b['d']}: tau={b['tau']}, "
                f"t+n3={format_rational(b['tacnode_plus_triple'])}, "
                f"{len(b['rows_before_hirzebruch'])} rows, eliminated by {b['eliminated_by']}"
            )
            if "tacnode_upper_bound" in b and b["rows_before_hirzebruch"]:
                lines.append(f"    exact tacnode bound from the inequality: t <= {b['tacnode_upper_bound']}")
            for row in b["rows_before_hirzebruch"]:
                lines.append(
                    f"    (n2, t, n3) = ({row['n2']}, {row['t']}, {row['n3']}): "
                    f"margin {format_rational(row['hirzebruch_margin'])}"
                )
    return "\n".join(lines)


def cmd_enumerate(args) -> int:
    result = enumerate_degree(args.degree, nearly_free=not args.count_only)
    if args.json:
        _emit_json(result)
    else:
        print(format_enumeration(result))
    return EXIT_OK


# -- render / bound --------------------------------------------------------------------

def cmd_render(args) -> int:
    window = parse_window(args.window)
    arr = load_arrangement(args.file)
    rep = validate(arr)
    rep.raise_first()
    points, _ = group_and_classify(arr)
    marked, unmarked = [], []
    for p in points:
        xy = p.affine_approx()
        quadratic = all(c.degree <= 2 for c in p.point)
        if xy is not None and quadratic:
            marked.append(xy)
        else:
            unmarked.append(f"{p.kind} {format_point(p.point)}")
    text = render_svg(arr, window, marked, unmarked)
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UndefinedInputError(f"cannot write {args.output}: {exc.strerror}") from None
    print(f"wrote {args.output}: {len(arr.components)} components, {len(marked)} marked points")
    for u in unmarked:
        print(f"  not drawn: {u}")
    return EXIT_OK


def cmd_bound(args) -> int:
    top = combinat.degree_upper_bound()
    nxt = top + 1
    if args.json:
        lo, hi = combinat.degree_infeasibility_witness(nxt)
        _emit_json({"command": "bound", "bound": top,
                    "first_excluded": {"m": nxt, "mdr_lower_bound": lo, "mdr_upper_bound": hi}})
    else:
        print(top)
        print(f"  m={nxt}: {_bound_witness_text(nxt)}")
    return EXIT_OK


# -- entry point -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nearfree", description="Exact analysis of conic-line arrangements.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="singularities, Tjurina number, mdr and near-freeness")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="admissible weak combinatorics of a degree")
    e.add_argument("--degree", type=int, required=True)
    mode = e.add_mutually_exclusive_group()
    mode.add_argument("--nearly-free", action="store_true", help="filter by near-freeness (default)")
    mode.add_argument("--count-only", action="store_true", help="only the combinatorial count")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("render", help="SVG sketch of the real affine trace")
    r.add_argument("file")
    r.add_argument("-o", "--output", required=True)
    r.add_argument("--window", default=DEFAULT_WINDOW, help="x0,y0,x1,y1")
    r.set_defaults(func=cmd_render)

    b = sub.add_parser("bound", help="largest degree allowed by the mdr sandwich")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bound)
    return p


def _fail(args, code: int, kind: str, exc) -> int:
    msg = str(exc)
    print(f"error ({kind}): {msg}", file=sys.stderr)
    if getattr(args, "json", False):
        extra = {}
        if isinstance(exc, UnsupportedSingularity):
            extra = {"diagnosis": exc.diagnosis, "components": list(exc.components)}
        _emit_json({"command": args.command, "error": kind, "message": msg, "exit_code": code, **extra})
    return code


def _glue_window(argv):
    """Let ``--window -8,-8,8,8`` through; argparse would read the value as an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--window":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--window={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_window(argv))
    try:
        return args.func(args)
    except UnsupportedSingularity as exc:
        return _fail(args, EXIT_UNSUPPORTED, "unsupported singularity", exc)
    except (UndefinedInputError, InvalidArrangement, DegenerateWindow, OSError) as exc:
        return _fail(args, EXIT_INVALID, "invalid input", exc)
    except (InconsistentAnalysis, AssertionError, NumericalDegeneracy, StabilizationFailure,
            RefinementError, UnsupportedDegreeError) as exc:
        return _fail(args, EXIT_INCONSISTENT, "internal inconsistency", exc)


if __name__ == "__main__":
    sys.exit(main())
