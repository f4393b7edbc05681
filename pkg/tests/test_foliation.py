import pytest
import sympy

from folcremona import (
    BirationalMap,
    DegenerateInput,
    Foliation,
    MultiPoly,
    foliation_degree,
    foliation_from_involution,
    inflection_polynomial,
    is_singular_point,
    is_symmetry,
    proportional,
    singular_elimination,
    tangency_polynomial,
)
from folcremona.foliation import field_from_rational, tangency_Q
from folcremona.poly import gens

X, Y, Tt = sympy.symbols("x y t")
x, y, z, t = gens()


def sp(p):
    return sympy.sympify(str(p).replace("^", "**"), locals={"x": X, "y": Y, "t": Tt})


@pytest.mark.parametrize("text, degree", [
    ("x^3 - y^2, x^2*y - 1", 2),
    ("x^3, 1", 3),
    ("y^3, x^3", 3),
    ("y^3 - x^4, 1 - x^3*y", 3),
    ("-1, 1 + x^2*y^2", 4),
    ("x, y", 0),
    ("0, 1", 0),
    ("1 + x, y^2", 2),
])
def test_degree(text, degree):
    assert foliation_degree(Foliation.parse_field(text)) == degree


def test_degree_with_radial_top():
    # x (x^2 + y^2) d/dx + y (x^2 + y^2) d/dy + ...: the radial top part lowers the degree
    F = Foliation.parse_field("x*(x^2 + y^2) + y, y*(x^2 + y^2) - x")
    assert F.degree() == 2 and F.degree() == foliation_degree(F)


def test_tangency_polynomial_matches_definition():
    """[DERIVED] Q(t) = X1(m) X2(m + tX) - X2(m) X1(m + tX) computed in sympy."""
    for text in ("x^3 - y^2, x^2*y - 1", "y^3, x^3", "x^3 - 1, 1"):
        F = Foliation.parse_field(text)
        a1, a2 = (sympy.sympify(s.replace("^", "**"), locals={"x": X, "y": Y}) for s in text.split(","))
        at = {X: X + Tt * a1, Y: Y + Tt * a2}
        Q = sympy.expand(a1 * a2.subs(at, simultaneous=True) - a2 * a1.subs(at, simultaneous=True))
        ours = sp(tangency_Q(F))
        # Q is defined up to a nonzero constant
        ratio = sympy.cancel(ours / Q)
        assert ratio.is_number and ratio != 0


def test_tangency_polynomial_requires_degree_two():
    with pytest.raises(DegenerateInput):
        tangency_polynomial(Foliation.parse_field("0, 1"))


def test_common_factor_removed():
    F = Foliation.parse_field("x*y, x^2")
    assert F.same_as(Foliation.parse_field("y, x"))
    with pytest.raises(DegenerateInput):
        Foliation.parse_field("0, 0")


def test_euler_identity_on_form():
    for text in ("x^3 - y^2, x^2*y - 1", "y^3, x^3", "x*(y^2 + x), y^3"):
        u, v, w = Foliation.parse_field(text).form()
        assert (x * u + y * v + z * w).is_zero()


def test_from_form_round_trip():
    F = Foliation.parse_field("x^3 - y^2, x^2*y - 1")
    G = Foliation.from_form(*F.form())
    assert F.same_as(G)
    with pytest.raises(ValueError):
        Foliation.from_form(y, x, MultiPoly.const(0))        # x*y + y*x != 0


def test_inflection_polynomial_known_values():
    H = inflection_polynomial(Foliation.parse_field("x^3, 1"))
    assert proportional(H, MultiPoly.parse("x^5*z^4"))
    H = inflection_polynomial(Foliation.parse_field("x^3, y^3"))
    assert proportional(H, MultiPoly.parse("x^3*y^3*z*(x + y)*(y - x)"))
    with pytest.raises(DegenerateInput):
        inflection_polynomial(Foliation.parse_field("1, 2"))     # leaves are lines


def test_singular_points():
    F = Foliation.parse_field("x^3 - y^2, x^2*y - 1")
    ex, ey = singular_elimination(F)
    assert ex == MultiPoly.parse("x^7 - 1") and ey == MultiPoly.parse("y^7 - 1")
    assert is_singular_point(F, (1, 1, 1))
    assert not is_singular_point(F, (1, 2, 1))
    with pytest.raises(ValueError):
        is_singular_point(F, (0, 0, 0))


def test_symmetry_rejects_nonlinear():
    F = Foliation.parse_field("x^3, 1")
    assert is_symmetry(F, BirationalMap.parse("(x, y + 2)"))
    assert not is_symmetry(F, BirationalMap.parse("(x, 2*y)"))
    with pytest.raises(ValueError):
        is_symmetry(F, BirationalMap.parse("(1/x, 1/y)"))


def test_field_from_rational_clears_denominators():
    F = field_from_rational(*(MultiPoly.parse(p) for p in ("x", "y")))
    assert F.degree() == 0
    from folcremona.poly import RationalFunction
    G = field_from_rational(RationalFunction.parse("1/x"), RationalFunction.parse("1/y"))
    assert G.same_as(Foliation.parse_field("y, x"))


def test_reverse_construction_bound_and_identity():
    rc = foliation_from_involution(BirationalMap.parse("(-x, y)"))
    assert rc.foliation.same_as(Foliation.parse_field("1, 0"))
    with pytest.raises(DegenerateInput):
        foliation_from_involution(BirationalMap.parse("(x, y)"))
