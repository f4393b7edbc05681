"""Command-line front end: ``folcremona <verb> [options]``.

Exit status 0 on success, 1 when a verification fails, 2 on a parse error
and 3 when a mathematical precondition is violated.
"""

import argparse
import itertools
import json
import sys
from fractions import Fraction

from . import registry
from .birational import (
    BirationalMap,
    compose,
    fixed_curve,
    indeterminacy_certificate,
    verify_period,
)
from .cubic import (
    HomogeneousFamilyParams,
    alignment_check,
    family_parameter_scan,
    homogeneous_family_build,
    quartic_square_test,
    trivolution_discriminant,
    trivolution_from_cubic,
)
from .errors import ConductorMismatch, DegenerateInput, ExtensionRequired, NotDivisible, ParseError
from .foliation import Foliation, inflection_polynomial, singular_elimination
from .parsing import parse_expression, parse_point, parse_scalar, split_top_level
from .poly import MultiPoly, RationalFunction
from .quadratic import geiser_closed_form, seven_points_solve
from .suite import run_suite, write_golden
from .webs import WebTriple, abelian_relation, relation_residual

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_MATH = 0, 1, 2, 3


class CommandError(Exception):
    def __init__(self, message, status):
        super().__init__(message)
        self.status = status


# -- helpers --------------------------------------------------------------------

def _foliation(args):
    if args.builtin:
        entry = registry.get(args.builtin)
        if entry.kind == "map":
            raise CommandError(f"{args.builtin} is a map, not a foliation", EXIT_PARSE)
        return entry.build(args.conductor)
    if args.field:
        return Foliation.parse_field(args.field, args.conductor)
    raise CommandError("give --builtin NAME or --field \"X1, X2\"", EXIT_PARSE)


def _map(text, N):
    if text in registry.REGISTRY:
        entry = registry.get(text)
        if entry.kind == "map":
            return entry.build(N)
        if "T" in entry.printed:
            return entry.printed_map("T", N)
        raise CommandError(f"{text} carries no map", EXIT_PARSE)
    return BirationalMap.parse(text, N)


def _field_report(F):
    return {"X1": str(F.X1), "X2": str(F.X2), "degree": F.degree()}


# -- verbs ------------------------------------------------------------------------

def cmd_parse(args):
    value = parse_expression(args.expression, args.conductor)
    kind = "polynomial" if isinstance(value, MultiPoly) else "rational"
    return {"kind": kind, "value": str(value)}, EXIT_OK


def cmd_flex(args):
    F = _foliation(args)
    H = inflection_polynomial(F)
    ex, ey = singular_elimination(F)
    return {"foliation": _field_report(F), "H": str(H),
            "singular_x_eliminant": str(ex), "singular_y_eliminant": str(ey)}, EXIT_OK


def _involution_report(I):
    ex, ey, inf = indeterminacy_certificate(I)
    period = verify_period(I, 2)
    report = {"map": str(I), "affine": I.affine_str(), "degree": I.degree(),
              "fixed_curve": str(fixed_curve(I)), "period_2": period,
              "indeterminacy": {"x_eliminant": str(ex), "y_eliminant": str(ey), "at_infinity": str(inf)}}
    return report, period


def cmd_involution(args):
    from .quadratic import involution_from_quadratic
    F = _foliation(args)
    I = involution_from_quadratic(F)
    report, ok = _involution_report(I)
    report["foliation"] = _field_report(F)
    return report, EXIT_OK if ok else EXIT_FAIL


def cmd_trivolution(args):
    F = _foliation(args)
    disc = trivolution_discriminant(F)
    report = {"foliation": _field_report(F), "a": str(disc.a), "b": str(disc.b), "c": str(disc.c),
              "delta": str(disc.delta)}
    tr = trivolution_from_cubic(F, check=False)
    if tr is None:
        report["square"] = False
        return report, EXIT_OK
    period = verify_period(tr.T1, 3)
    inverse = compose(tr.T1, tr.T2)
    report.update({"square": True, "kappa": str(tr.kappa), "s": str(tr.s),
                   "T": tr.T1.affine_str(), "T2": tr.T2.affine_str(),
                   "T_homogeneous": str(tr.T1), "degree": tr.T1.degree(),
                   "period_3": period, "T_T2_identity": inverse == BirationalMap.identity(F.N),
                   "aligned": alignment_check(tr.T1)})
    ok = period and report["T_T2_identity"]
    return report, EXIT_OK if ok else EXIT_FAIL


def _parse_points(text, N):
    pts = [parse_point(p, N) for p in split_top_level(text, ";")]
    if len(pts) != 3 or any(len(p) != 2 for p in pts):
        raise ParseError("expected three affine points 'x1,y1; x2,y2; x3,y3'")
    return pts


def cmd_seven_points(args):
    pts = _parse_points(args.points, args.conductor)
    coeffs = seven_points_solve(*pts, N=args.conductor)
    g = geiser_closed_form(coeffs)
    report, ok = _involution_report(g.map)
    report["coefficients"] = {k: str(getattr(coeffs, k)) for k in ("a", "b", "c", "e", "A", "B", "C", "E")}
    report.update({"U1": str(g.U1), "V1": str(g.V1), "U2": str(g.U2), "V2": str(g.V2), "T": str(g.T)})
    return report, EXIT_OK if ok else EXIT_FAIL


def cmd_family(args):
    N = args.conductor
    p = HomogeneousFamilyParams.make(*(parse_scalar(v, N) for v in (args.alpha, args.lam, args.mu, args.nu)), N=N)
    m = homogeneous_family_build(p)
    square = quartic_square_test(m.r)
    report = {"params": [str(v) for v in p.as_tuple()], "r": [str(v) for v in m.r],
              "R": str(m.R), "closed_forms_agree": m.closed_forms_agree, "square": square}
    if square:
        try:
            tr = trivolution_from_cubic(m.foliation)
            report.update({"T": tr.T1.affine_str(), "T2": tr.T2.affine_str(), "degree": tr.T1.degree()})
        except ExtensionRequired as exc:
            report["T"] = f"needs sqrt({exc.value})"
    return report, EXIT_OK if m.closed_forms_agree else EXIT_FAIL


def _grid_values(spec):
    """'v1,v2,...' or 'small:K' for all p/q with 1 <= q <= K and |p| <= K."""
    if spec.startswith("small:"):
        K = int(spec.split(":", 1)[1])
        vals = {Fraction(p, q) for q in range(1, K + 1) for p in range(-K, K + 1)}
        return sorted(vals)
    return [Fraction(v.strip()) for v in spec.split(",") if v.strip()]


def cmd_scan(args):
    N = args.conductor
    alpha = parse_scalar(args.alpha, N)
    vals = _grid_values(args.grid)
    grid = []
    for l, m, n in itertools.product(vals, repeat=3):
        p = HomogeneousFamilyParams.make(alpha, l, m, n, N=N)
        if p.admissible():
            grid.append(p)
    rows = family_parameter_scan(grid)
    out = [{"params": [str(v) for v in r.params.as_tuple()], "r": [str(v) for v in r.r],
            "square": r.verdict, "conditions": list(r.conditions) if r.conditions else None,
            "consistent": r.consistent} for r in rows]
    squares = [o for o in out if o["square"]]
    ok = all(r.consistent for r in rows)
    return {"points": len(out), "squares": len(squares), "consistent": ok,
            "square_points": [o["params"] for o in squares],
            "rows": out if args.all_rows else None}, EXIT_OK if ok else EXIT_FAIL


def cmd_web_check(args):
    N = args.conductor
    T = _map(args.map, N)
    f0 = parse_expression(args.f0, N)
    w = WebTriple.from_map(f0, T)
    rel = abelian_relation(w)
    report = {"f0": str(w.f0), "f1": str(w.f1), "f2": str(w.f2)}
    if rel is None:
        report["relation"] = None
        return report, EXIT_OK
    report["relation"] = [str(a) for a in rel]
    report["residual_zero"] = relation_residual(w, rel).is_zero()
    return report, EXIT_OK if report["residual_zero"] else EXIT_FAIL


def cmd_verify(args):
    if args.write_golden:
        path = write_golden(args.golden)
        return {"golden": str(path)}, EXIT_OK
    from pathlib import Path
    results = run_suite(Path(args.golden) if args.golden else None, args.only or None)
    items = [{"item": r.name, "ok": r.ok, "failed": [c for c, ok in r.checks if not ok],
              "checks": len(r.checks)} for r in results]
    ok = all(r.ok for r in results)
    return {"items": items, "ok": ok}, EXIT_OK if ok else EXIT_FAIL


def cmd_list(args):
    return {e.name: f"{e.kind}: {e.description}" for e in registry._ENTRIES}, EXIT_OK


# -- output -----------------------------------------------------------------------

def _text(report, indent=0):
    pad = "  " * indent
    lines = []
    for k, v in report.items():
        if v is None:
            continue
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.extend(_text(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.extend(_text(item, indent + 1))
                lines.append("")
        elif isinstance(v, list):
            lines.append(f"{pad}{k}: " + ", ".join(str(a) for a in v))
        else:
            lines.append(f"{pad}{k}: {v}")
    return lines


def _verify_text(report):
    lines = [f"{'PASS' if it['ok'] else 'FAIL'}  {it['item']} ({it['checks']} checks)"
             + ("".join(f"\n      failed: {c}" for c in it["failed"])) for it in report["items"]]
    lines.append("all checks passed" if report["ok"] else "some checks FAILED")
    return lines


# -- parser -----------------------------------------------------------------------

def _plain(obj):
    # flint integers and similar scalars leak out of degree computations
    try:
        return int(obj)
    except (TypeError, ValueError):
        return str(obj)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--conductor", "-N", type=int, default=12,
                        help="work in Q(zeta_N) (default 12; 84 for 7th roots of unity)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--builtin", help="name of a built-in example (see 'list')")
    source.add_argument("--field", help='affine vector field "X1, X2"')

    p = argparse.ArgumentParser(prog="folcremona", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("parse", parents=[common], help="parse and pretty-print an expression")
    s.add_argument("expression")
    s.set_defaults(func=cmd_parse)

    s = sub.add_parser("flex", parents=[common, source], help="inflection polynomial and singular set")
    s.set_defaults(func=cmd_flex)

    s = sub.add_parser("involution", parents=[common, source], help="involution of a quadratic foliation")
    s.set_defaults(func=cmd_involution)

    s = sub.add_parser("trivolution", parents=[common, source], help="trivolution of a cubic foliation")
    s.set_defaults(func=cmd_trivolution)

    s = sub.add_parser("seven-points", parents=[common], help="Geiser involution through seven points")
    s.add_argument("--points", required=True, help="'x1,y1; x2,y2; x3,y3'")
    s.set_defaults(func=cmd_seven_points)

    s = sub.add_parser("family", parents=[common], help="homogeneous cubic family member")
    s.add_argument("--alpha", required=True)
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--mu", required=True)
    s.add_argument("--nu", required=True)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("scan", parents=[common], help="square test over a parameter grid")
    s.add_argument("--alpha", required=True)
    s.add_argument("--grid", default="small:2", help="'v1,v2,...' or 'small:K' (use --grid=-1,... for a leading minus)")
    s.add_argument("--all-rows", action="store_true", help="report every grid point")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("web-check", parents=[common], help="abelian relation for f0, f0 o T, f0 o T^2")
    s.add_argument("--f0", required=True)
    s.add_argument("--map", required=True, help="a map '(I1, I2)', '(f0 : f1 : f2)' or a built-in name")
    s.set_defaults(func=cmd_web_check)

    s = sub.add_parser("verify", parents=[common], help="replay the built-in suite")
    s.add_argument("--golden", help="golden-file directory (overrides FOLCREMONA_GOLDEN_DIR)")
    s.add_argument("--only", nargs="*", help="run only these items")
    s.add_argument("--write-golden", action="store_true", help="regenerate the golden files")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("list", parents=[common], help="list built-in examples")
    s.set_defaults(func=cmd_list)
    return p


def run_command(argv):
    """Parse ``argv`` and run it; returns (status, report, output text)."""
    args = build_parser().parse_args(argv)
    try:
        report, status = args.func(args)
    except CommandError as exc:
        return exc.status, None, f"error: {exc}"
    except (ParseError, ZeroDivisionError) as exc:
        return EXIT_PARSE, None, f"parse error: {exc}"
    except (DegenerateInput, ExtensionRequired, ConductorMismatch, NotDivisible) as exc:
        return EXIT_MATH, None, f"precondition violated: {exc}"
    except (ValueError, KeyError) as exc:
        return EXIT_PARSE, None, f"invalid input: {exc}"
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=True, default=_plain)
    elif args.verb == "verify" and "items" in report:
        text = "\n".join(_verify_text(report))
    else:
        text = "\n".join(_text(report))
    return status, report, text


def main(argv=None):
    status, _, text = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status in (EXIT_OK, EXIT_FAIL) else sys.stderr
    print(text, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
