"""Built-in foliations and maps under stable names.

Every entry stores its defining data as text in the expression syntax of
:mod:`folcremona.parsing`, together with reference formulas ("printed"
values) that the ``verify`` command and the test-suite compare against.
"""

from dataclasses import dataclass, field

from .birational import BirationalMap
from .foliation import Foliation
from .parsing import parse_expression, parse_polynomial


@dataclass(frozen=True)
class Entry:
    name: str
    kind: str                 # "foliation" or "map"
    text: str
    description: str
    N: int = 12
    printed: dict = field(default_factory=dict)

    def build(self, N=None):
        N = N or self.N
        if self.kind == "foliation":
            return Foliation.parse_field(self.text, N)
        if self.kind == "affine-form":
            A, B = (parse_polynomial(p, N) for p in self.text.split(";"))
            return Foliation.from_affine_form(A, B)
        return BirationalMap.parse(self.text, N)

    def printed_map(self, key, N=None):
        return BirationalMap.parse(self.printed[key], N or self.N)

    def printed_poly(self, key, N=None):
        return parse_polynomial(self.printed[key], N or self.N)

    def printed_expr(self, key, N=None):
        return parse_expression(self.printed[key], N or self.N)


_ENTRIES = [
    # -- quadratic foliations ------------------------------------------------
    Entry("jouanolou2", "foliation", "x^3 - y^2, x^2*y - 1",
          "quadratic Jouanolou foliation; Geiser involution of degree 8",
          printed={
              "involution": "(x*y^7 + 3*x^5*y^2*z - x^8 - 5*x^2*y^4*z^2 + 2*y^3*z^5 + x^3*y*z^4 - x*z^7"
                            " : 3*x*y^5*z^2 + 2*x^5*z^3 - x^7*y - 5*x^2*y^2*z^4 + x^4*y^3*z + y*z^7 - y^8"
                            " : x*y^4*z^3 - 5*x^4*y^2*z^2 - y^7*z + 2*x^3*y^5 + 3*x^2*y*z^5 - z^8 + x^7*z)",
              "H": "2*(3*x^2*y^2*z^2 - x*y^5 - x^5*z - y*z^5)",
              "degree": "8",
          }),
    Entry("omega1", "affine-form", "x^2 - y^3; x*y^2",
          "quadratic foliation with a unique singular point, type 1",
          printed={"involution": "(x^3 : -x^2*y : x^2*z - 2*y^3)", "fixed": "y",
                   "conjugator": "(y, z + y^3)", "linear_model": "(-y, z)"}),
    Entry("omega2", "affine-form", "x^2 - y*(x + y^2); x*(x + y^2)",
          "quadratic foliation with a unique singular point, type 2"),
    Entry("omega3", "affine-form", "x*y - y*(x^2 + y^2); x*(x^2 + y^2)",
          "quadratic foliation with a unique singular point, type 3"),
    Entry("omega4", "affine-form", "x*(x + y^2); x + y^2 - x^2*y",
          "quadratic foliation with a unique singular point, type 4; non-Geiser involution of degree 8",
          printed={
              "involution": "((x*z + y^2)*(x*y*z + x^3 + y^3)^2"
                            " : ((2*x^2 - y*z)*(x*y*z + x^3 + y^3) - x^5 + x^3*y*z - x^2*z^3 - x*y^2*z^2)"
                            "*(x*y*z + x^3 + y^3)"
                            " : x*y^7 - x^7*y - 3*x*y^4*z^3 - 3*x^2*y^2*z^4 + 4*x^4*y*z^3 + 6*x^2*y^5*z"
                            " + 9*x^3*y^3*z^2 - x^4*y^4 + x^5*y^2*z - x^3*z^5 + 2*x^6*z^2 - y^6*z^2)",
              "exceptional": "x*y*z + x^3 + y^3",
              "H": "x^4*y*z + x^3*y^3 + x^6 - 3*x*y^4*z - y^6 - x^3*z^3 - 3*x^2*y^2*z^2",
          }),
    Entry("conic-pencil", "foliation", "x*(y^2 + x), y^3",
          "pencil of conics (y^2 - x z)/(x y) = const",
          printed={"involution": "(-x^2 : x*y : x*z + 2*y^2)", "fixed": "y"}),
    # -- cubic foliations ----------------------------------------------------
    Entry("cubic-rational", "foliation", "x^3, 1",
          "x^3 d/dx + d/dy, first integral y + 1/(2x^2)",
          printed={"delta": "-3*x^14", "T": "(j*x, y + (j - 1)/x^2)",
                   "T2": "(j^2*x, y + (2*j + 1)/(j^2*x^2))", "H": "-3*x^5*z^4",
                   "first_integral": "y + 1/(2*x^2)", "degree": "3"}),
    Entry("cubic-liouville", "foliation", "x^3 - 1, 1",
          "(x^3 - 1) d/dx + d/dy",
          printed={"delta": "-3*x^2*(x^3 - 1)^4",
                   "T": "(j*x, (x^3*y - y + (j - 1)*x)/(x^3 - 1))",
                   "T2": "(j^2*x, (x^3*y - y + (j^2 - 1)*x)/(x^3 - 1))",
                   "H": "-3*x^2*z^4*(x - z)*(x - j*z)*(x - j^2*z)", "degree": "3"}),
    Entry("cubic-degree4", "foliation", "x^3, 1 + x + x^2/3",
          "x^3 d/dx + (1 + x + x^2/3) d/dy; trivolution of degree 4",
          printed={"delta": "-1/3*x^14*(x + 3)^2",
                   "T": "(3*j*x/((1 - j)*x + 3), (3*x^2*y - x^2 + (j - 4)*x + 3*(j - 1))/(3*x^2))",
                   "H": "-1/3*x^5*z^2*(x + 3*z)^2", "fixed": "x + 3*z", "degree": "4"}),
    Entry("cubic-fermat", "foliation", "y^3, x^3",
          "y^3 d/dx + x^3 d/dy, first integral y^4 - x^4; trivolution of degree 5",
          printed={"delta": "3*x^2*y^2*(x - y)^4*(x + y)^4*(x + i*y)^4*(x - i*y)^4",
                   "T": "(x*(x^4 - y^4)/(x^4 - j*y^4), j*y*(x^4 - y^4)/(x^4 - j*y^4))",
                   "T2": "(x*(x^4 - y^4)/(x^4 - j^2*y^4), j^2*y*(x^4 - y^4)/(x^4 - j^2*y^4))",
                   "H": "3*x^2*y^2*z*(x + i*y)*(x - i*y)*(y - x)*(y + x)",
                   "web": "x^4 - y^4; x^4 - j*y^4; x^4 - j^2*y^4", "degree": "5"}),
    Entry("cubic-diagonal", "foliation", "x^3, y^3",
          "x^3 d/dx + y^3 d/dy, first integral x^2 y^2/(x^2 - y^2)",
          printed={"delta": "3*x^6*y^6*(x + y)^4*(y - x)^4",
                   "T": "(j*x*(x^2 - y^2)/(x^2 - j*y^2), y*(x^2 - y^2)/(x^2 - j*y^2))",
                   "T2": "(x*(x^2 - y^2)/(j*x^2 - y^2), j*y*(x^2 - y^2)/(j*x^2 - y^2))",
                   "H": "3*x^3*y^3*z*(x + y)*(y - x)",
                   "web": "x^2 - y^2; x^2 - j*y^2; x^2 - j^2*y^2", "degree": "3"}),
    Entry("jouanolou3", "foliation", "y^3 - x^4, 1 - x^3*y",
          "cubic Jouanolou foliation; no trivolution",
          printed={"delta": "-3*(x^20 - 10*x^16*y^3 + 4*x^15*y^7 + 10*x^13*y^2 + 15*x^12*y^6"
                            " - 10*x^11*y^10 - 10*x^10*y - 10*x^9*y^5 - 10*x^8*y^9 + (10*y^13 + 4)*x^7"
                            " + 15*x^6*y^4 - 10*x^5*y^8 + 15*x^4*y^12 - 10*(y^3 + y^16)*x^3"
                            " + (y^20 + 10*y^7)*x^2 - 10*x*y^11 + y^2 + 4*y^15)"}),
    # -- maps ------------------------------------------------------------------
    Entry("standard-quadratic", "map", "(1/x, 1/y)",
          "the standard quadratic involution (y z : x z : x y)",
          printed={"foliation_degree": "2"}),
    Entry("jonquieres9", "map", "(y/(1 + x^2*y^2), x*(1 + x^2*y^2))",
          "Jonquieres involution of degree 9 preserving x y = const",
          printed={"field": "-1, 1 + x^2*y^2", "fixed": "y*z^4 - x*z^4 - x^3*y^2",
                   "H": "2*x*y*z^5*(x*z^4 - y*z^4 + x^3*y^2)", "degree": "9",
                   "foliation_degree": "4"}),
    Entry("fibred-involution-1", "map", "(x, (x^3 + 1)/y)", "involution (x, R(x)/y), R = x^3 + 1",
          printed={"field": "0, 1"}),
    Entry("fibred-involution-2", "map", "(x, x/((x - 2)*y))", "involution (x, R(x)/y), R = x/(x - 2)",
          printed={"field": "0, 1"}),
    Entry("fibred-involution-3", "map", "(x, 5/y)", "involution (x, R(x)/y), R = 5",
          printed={"field": "0, 1"}),
]

REGISTRY = {e.name: e for e in _ENTRIES}


def names(kind=None):
    return [e.name for e in _ENTRIES if kind is None or e.kind == kind
            or (kind == "foliation" and e.kind == "affine-form")]


def get(name):
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown built-in {name!r}; choose from {', '.join(REGISTRY)}") from None


def build(name, N=None):
    return get(name).build(N)
