"""The built-in verification suite replayed by ``folcremona verify``.

Each item recomputes one worked example from scratch, records a list of
named boolean checks and a canonical text rendering of what it computed.
The rendering is compared with a golden file when one is available.
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import registry
from .birational import (
    BirationalMap,
    compose,
    conjugate,
    fixed_curve,
    indeterminacy_certificate,
    indeterminacy_check,
    is_identity,
    jacobian,
    multiplicity,
    projective_equal,
    verify_period,
)
from .cubic import (
    HomogeneousFamilyParams,
    alignment_check,
    family_a_delta,
    family_a_field,
    family_a_trivolution,
    jacobian_at,
    r_closed_forms,
    trivolution_discriminant,
    trivolution_from_cubic,
)
from .cyclotomic import CycNumber
from .foliation import Foliation, foliation_from_involution, inflection_polynomial, is_singular_point
from .poly import MultiPoly, RationalFunction, gens, perfect_square_decompose, proportional, try_exact_div
from .quadratic import geiser_closed_form, involution_from_quadratic, seven_points_solve
from .webs import WebTriple, abelian_relation, relation_residual

GOLDEN_ENV = "FOLCREMONA_GOLDEN_DIR"


@dataclass
class SuiteResult:
    name: str
    checks: list = field(default_factory=list)
    lines: list = field(default_factory=list)

    def check(self, label, ok):
        self.checks.append((label, bool(ok)))

    def show(self, label, value):
        self.lines.append(f"{label}: {value}")

    @property
    def ok(self):
        return all(ok for _, ok in self.checks)

    @property
    def canonical(self):
        return "\n".join(self.lines) + "\n"


def golden_dir():
    env = os.environ.get(GOLDEN_ENV)
    return Path(env) if env else Path(__file__).with_name("golden")


# -- items --------------------------------------------------------------------

def _jouanolou2(res):
    e = registry.get("jouanolou2")
    F = e.build()
    I = involution_from_quadratic(F)
    res.show("involution", I)
    res.check("matches printed triple", I == e.printed_map("involution"))
    res.check("degree 8", I.degree() == 8)
    res.check("period 2", verify_period(I, 2))
    fix = fixed_curve(I)
    res.show("fixed curve", fix)
    res.check("fixed curve is H", proportional(fix, e.printed_poly("H")))
    res.check("H from the foliation", proportional(inflection_polynomial(F), e.printed_poly("H")))
    res.check("(1:1:1) indeterminate", indeterminacy_check(I, (1, 1, 1)))
    xi = CycNumber.zeta(84, 12)
    pts = [(xi ** k, xi ** (-2 * k), 1) for k in range(7)]
    res.check("seven singular points indeterminate", all(indeterminacy_check(I, p) for p in pts))
    res.check("seven singular points of F", all(is_singular_point(F, p) for p in pts))


def _seven_points(res):
    x, y, _, _ = gens()
    coeffs = seven_points_solve((Fraction(1, 2), Fraction(3, 4)), (Fraction(3, 4), Fraction(1, 2)),
                                (Fraction(4, 3), Fraction(2, 3)))
    res.show("coefficients", ", ".join(str(v) for v in (coeffs.a, coeffs.b, coeffs.c, coeffs.A, coeffs.B, coeffs.C)))
    g = geiser_closed_form(coeffs)
    printed = {
        "U1": "1220*x^3*y^2 - 1844*x^3*y + 693*x^3 - 2456*x^2*y^3 + 3624*x^2*y^2 - 1054*x^2*y - 198*x^2"
              " + 1184*x*y^4 - 1768*x*y^3 + 259*x*y^2 + 286*x*y + 144*y^4 - 36*y^2 - 54*y^3",
        "V1": "976*x^4*y - 792*x^4 + 1988*x^3*y^2 - 5456*x^3*y + 3267*x^3 - 3848*x^2*y^3 + 5652*x^2*y^2"
              " + 242*x^2*y - 2178*x^2 + 2936*x*y^3 - 5951*x*y^2 + 3146*x*y + 414*y^3 - 396*y^2",
        "U2": "x*y^2 - 47/18*y^2 + 13/18*x*y - x + 17/9*y",
        "V2": "-101/18*x^2 + 11*x^2*y - 221/18*x*y + 44/9*x + 2*y",
        "T": "-2*(36*x^2 - 378*x*y + 198*x + 396*y^2 - 252*y)",
    }
    ours = {"U1": g.U1, "V1": g.V1, "U2": g.U2, "V2": g.V2, "T": g.T}
    for k, text in printed.items():
        res.check(f"{k} proportional to printed", proportional(ours[k], MultiPoly.parse(text)))
    P = {k: MultiPoly.parse(v) for k, v in printed.items()}
    same = (RationalFunction(g.U1, g.T * g.U2) == RationalFunction(P["U1"], P["T"] * P["U2"])
            and RationalFunction(g.V1, g.T * g.V2) == RationalFunction(P["V1"], P["T"] * P["V2"]))
    res.check("printed fractions equal ours", same)
    res.show("involution", g.map)
    res.check("equals tangency construction", g.map == involution_from_quadratic(coeffs.foliation()))
    res.check("period 2", verify_period(g.map, 2))


def _omega1(res):
    e = registry.get("omega1")
    I = involution_from_quadratic(e.build())
    res.show("involution", I)
    res.check("matches printed", I == e.printed_map("involution"))
    res.check("fixed curve y", proportional(fixed_curve(I), e.printed_poly("fixed")))
    # in the chart x = 1 the coordinates (y, z) are renamed (x, y)
    x, y, _, _ = gens()
    rename = {"y": x, "z": y}
    chart_map = BirationalMap.from_affine(*(c.substitute(rename) for c in I.chart("x")))
    res.show("chart x = 1", chart_map.affine_str())
    res.check("chart form (-y, z - 2y^3)", chart_map == BirationalMap.from_affine(-x, y - 2 * x**3))
    ell = BirationalMap.from_affine(x, y + x**3)
    ell_inv = BirationalMap.from_affine(x, y - x**3)
    lin = conjugate(chart_map, ell_inv, ell)
    res.show("conjugate", lin.affine_str())
    res.check("conjugate by (y, z + y^3) is (-y, z)", lin == BirationalMap.from_affine(-x, y))


def _omega4(res):
    e = registry.get("omega4")
    F = e.build()
    I = involution_from_quadratic(F)
    res.show("involution", I)
    res.check("matches printed", I == e.printed_map("involution"))
    res.check("degree 8", I.degree() == 8)
    res.check("period 2", verify_period(I, 2))
    cubic = e.printed_poly("exceptional")
    res.check("Jacobian divisible by the nodal cubic", multiplicity(cubic, jacobian(I)) >= 1)
    res.check("H matches printed", proportional(inflection_polynomial(F), e.printed_poly("H")))
    res.check("(0:0:1) is the only indeterminacy point", _only_origin(I))
    jj = CycNumber.j()
    iso = BirationalMap.linear([[jj, 0, 0], [0, jj * jj, 0], [0, 0, 1]])
    res.check("commutes with (jx : j^2y : z)", compose(I, iso) == compose(iso, I))


def _only_origin(I):
    """Ind(I) = {(0:0:1)} certified by eliminants that are powers of x and y."""
    ex, ey, inf = indeterminacy_certificate(I)
    x, y, _, _ = gens(I.N)
    return (ex == x ** ex.total_degree() and ey == y ** ey.total_degree() and inf.is_constant()
            and indeterminacy_check(I, (0, 0, 1)))


def _conic_pencil(res):
    e = registry.get("conic-pencil")
    I = involution_from_quadratic(e.build())
    res.show("involution", I)
    res.check("matches printed", I == e.printed_map("involution"))
    x, y, z, _ = gens()
    # y = 0 is invariant, with I acting on it by x -> -x; the fixed points are isolated
    res.check("y = 0 invariant", I.f[1].substitute({"y": MultiPoly.const(0)}).is_zero())
    res.check("no fixed curve", fixed_curve(I).is_constant())
    on_line = [c.substitute({"x": MultiPoly.const(0)}) for c in I.f]
    res.check("x = 0 contracted to (0:0:1)", on_line[0].is_zero() and on_line[1].is_zero()
              and not on_line[2].is_zero())


def _cubic(name, degree, sign=1):
    def item(res):
        e = registry.get(name)
        F = e.build()
        D = trivolution_discriminant(F).delta
        res.show("delta", D)
        res.check("delta equals printed" if sign == 1 else "delta equals -printed",
                  D == sign * e.printed_poly("delta"))
        tr = trivolution_from_cubic(F)
        res.show("T1", tr.T1.affine_str())
        res.show("T2", tr.T2.affine_str())
        pair = (tr.T1, tr.T2)
        res.check("printed T in the pair", e.printed_map("T") in pair)
        if "T2" in e.printed:
            res.check("printed T^2 in the pair", e.printed_map("T2") in pair)
        res.check("T1 T2 = id", is_identity(compose(tr.T1, tr.T2)))
        res.check("period 3", verify_period(tr.T1, 3))
        res.check("aligned orbits", alignment_check(tr.T1))
        res.check(f"degree {degree}", tr.T1.degree() == degree)
        res.check("H matches printed", proportional(inflection_polynomial(F), e.printed_poly("H")))
    return item


def _jouanolou3(res):
    e = registry.get("jouanolou3")
    D = trivolution_discriminant(e.build()).delta
    res.show("delta", D)
    res.check("delta equals printed", D == e.printed_poly("delta"))
    res.check("degree 20 in x and in y", D.degree("x") == 20 and D.degree("y") == 20)
    res.check("not a square", perfect_square_decompose(D) is None)


def _family(res):
    r = r_closed_forms(*(Fraction(v) for v in (-1, 1, 1, 1)))
    res.show("f(-1,1,1,1)", tuple(str(v) for v in r))
    res.check("f(-1,1,1,1) = (12:0:24:0:12)", tuple(r) == (12, 0, 24, 0, 12))
    J = jacobian_at((-1, 1, 1, 1))
    printed = [[-2, Fraction(2, 3), 0, 0], [Fraction(16, 3), 0, Fraction(2, 3), Fraction(-2, 3)],
               [-2, Fraction(-14, 3), Fraction(16, 3), Fraction(16, 3)],
               [Fraction(-16, 3), 0, Fraction(2, 3), Fraction(-2, 3)]]
    res.show("jacobian", [[str(v) for v in row] for row in J])
    res.check("Jacobian matches printed", all(J[i][k] == printed[i][k] for i in range(4) for k in range(4)))
    nu = Fraction(3, 2)
    X1, X2 = family_a_field(nu)
    F = Foliation(X1, X2)
    res.check("family (a) delta", trivolution_discriminant(F).delta == family_a_delta(nu))
    tr = trivolution_from_cubic(F)
    ft = family_a_trivolution(nu)
    res.check("family (a) closed form in the pair", ft.map in (tr.T1, tr.T2))
    res.check("printed family (a) V1 differs from the true map",
              family_a_trivolution(nu, as_printed=True).map not in (tr.T1, tr.T2))


def _reverse(res):
    rc = foliation_from_involution(registry.build("jonquieres9"))
    e = registry.get("jonquieres9")
    res.show("jonquieres foliation", rc.foliation)
    res.check("degree 4", rc.degree == 4)
    res.check("field -d/dx + (1 + x^2y^2) d/dy", rc.foliation.same_as(Foliation.parse_field(e.printed["field"])))
    res.check("bound deg F <= deg I - deg Fix", rc.bound_holds)
    res.check("fixed curve printed", proportional(fixed_curve(registry.build("jonquieres9")), e.printed_poly("fixed")))
    res.check("H printed", proportional(inflection_polynomial(rc.foliation), e.printed_poly("H")))
    sig = foliation_from_involution(registry.build("standard-quadratic"))
    res.check("standard quadratic involution gives degree 2", sig.degree == 2)
    pencil = Foliation.parse_field("0, 1")
    for k in (1, 2, 3):
        f = foliation_from_involution(registry.build(f"fibred-involution-{k}"))
        res.check(f"fibred involution {k} gives x = const", f.foliation.same_as(pencil))
        res.check(f"fibred involution {k} even degree", f.degree_is_even)


def _webs(res):
    j = CycNumber.j()
    e = registry.get("cubic-rational")
    w = WebTriple.from_map(e.printed_expr("first_integral"), e.printed_map("T"))
    a = abelian_relation(w)
    res.show("relation (rational)", tuple(str(v) for v in a))
    res.check("relation is exact", relation_residual(w, a).is_zero())
    a0, a1, a2 = a
    res.check("solves a0 + a1 + a2 = 0", (a0 + a1 + a2).is_zero())
    res.check("solves a0 j^2 + (3 - 2j^2) a1 + (5j + 2) a2 = 0",
              (a0 * j * j + (3 - 2 * j * j) * a1 + (5 * j + 2) * a2).is_zero())
    e = registry.get("cubic-fermat")
    nums = [MultiPoly.parse(p) for p in e.printed["web"].split(";")]
    w = WebTriple.from_numerators(nums)
    a = abelian_relation(w)
    res.show("relation (fermat)", tuple(str(v) for v in a))
    a0, a1, a2 = a
    res.check("relation is exact", relation_residual(w, a).is_zero())
    res.check("solves a0 + a1 + a2 = 0 and a0 + j a1 + j^2 a2 = 0",
              (a0 + a1 + a2).is_zero() and (a0 + j * a1 + j * j * a2).is_zero())


ITEMS = [
    ("jouanolou2", _jouanolou2),
    ("seven-points", _seven_points),
    ("omega1", _omega1),
    ("omega4", _omega4),
    ("conic-pencil", _conic_pencil),
    ("cubic-rational", _cubic("cubic-rational", 3)),
    ("cubic-liouville", _cubic("cubic-liouville", 4)),
    ("cubic-degree4", _cubic("cubic-degree4", 4)),
    ("cubic-fermat", _cubic("cubic-fermat", 5, sign=-1)),
    ("cubic-diagonal", _cubic("cubic-diagonal", 3, sign=-1)),
    ("jouanolou3", _jouanolou3),
    ("family", _family),
    ("reverse", _reverse),
    ("webs", _webs),
]


def run_item(name, func, golden=None):
    res = SuiteResult(name)
    try:
        func(res)
    except Exception as exc:                      # a crash is a failed item, not a crashed suite
        res.check(f"raised {type(exc).__name__}: {exc}", False)
        return res
    path = (golden or golden_dir()) / f"{name}.txt"
    if path.exists():
        res.check("golden file", path.read_text() == res.canonical)
    else:
        res.check("golden file present", False)
    return res


def run_suite(golden=None, only=None):
    return [run_item(n, f, golden) for n, f in ITEMS if only is None or n in only]


def write_golden(directory=None):
    directory = Path(directory) if directory else golden_dir()
    directory.mkdir(parents=True, exist_ok=True)
    for name, func in ITEMS:
        res = SuiteResult(name)
        func(res)
        (directory / f"{name}.txt").write_text(res.canonical)
    return directory
