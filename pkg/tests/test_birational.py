import pytest

from folcremona import (
    BirationalMap,
    DegenerateInput,
    MultiPoly,
    compose,
    conjugate,
    fixed_curve,
    indeterminacy_certificate,
    indeterminacy_check,
    is_identity,
    jacobian,
    map_degree,
    power,
    projective_equal,
    proportional,
    verify_period,
)
from folcremona.birational import exceptional_multiplicity, linear_inverse, multiplicity
from folcremona.poly import gens

x, y, z, _ = gens()
M = BirationalMap.parse
SIGMA = M("(y*z : x*z : x*y)")


def test_parse_forms_agree():
    assert M("(1/x, 1/y)") == SIGMA
    assert M("(x, y)") == BirationalMap.identity()
    with pytest.raises(ValueError):
        M("(x : y^2 : z)")                         # not of a common degree
    with pytest.raises(DegenerateInput):
        M("(0 : 0 : 0)")


def test_normalisation_removes_common_factor():
    f = BirationalMap(x * x, x * y, x * z)
    assert f.degree() == 1 and f.removed_degree == 1 and is_identity(f)


def test_projective_equality_ignores_scalars():
    f = M("(x^2 : x*y : y*z)")
    g = BirationalMap(*(c * 5 for c in f.f))
    assert projective_equal(f, g)
    assert not projective_equal(f, M("(x^2 : x*y : x*z)"))


def test_composition_and_degrees():
    assert is_identity(compose(SIGMA, SIGMA))
    assert compose(SIGMA, SIGMA).removed_degree == 3
    h = M("(x, y + x^2)")
    assert map_degree(compose(h, h)) == 2
    assert compose(h, h) == M("(x, y + 2*x^2)")
    assert power(M("(j*x, j*y)"), 3) == BirationalMap.identity()


def test_verify_period():
    assert verify_period(SIGMA, 2)
    assert not verify_period(SIGMA, 4)                 # the exact period is 2
    assert not verify_period(M("(x + 1, y)"), 2)
    assert verify_period(M("(j*x, y)"), 3)
    assert not verify_period(M("(x, y + x^3)"), 3)     # rejected by the point orbit test


def test_fixed_curve():
    assert proportional(fixed_curve(M("(-x, y)")), MultiPoly.parse("x"))
    # (x : y : -z) fixes the line z = 0 pointwise and the point (0:0:1)
    assert proportional(fixed_curve(M("(x : y : -z)")), MultiPoly.parse("z"))
    assert fixed_curve(SIGMA).is_constant()
    with pytest.raises(DegenerateInput):
        fixed_curve(BirationalMap.identity())


def test_indeterminacy():
    for p in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        assert indeterminacy_check(SIGMA, p)
    assert not indeterminacy_check(SIGMA, (1, 1, 1))
    with pytest.raises(ValueError):
        indeterminacy_check(SIGMA, (0, 0, 0))
    ex, ey, inf = indeterminacy_certificate(SIGMA)
    # affine base point (0, 0) and the two points on z = 0
    assert ex == x ** ex.total_degree() and ey == y ** ey.total_degree()
    assert proportional(inf, MultiPoly.parse("x*y"))


def test_jacobian_and_exceptional_curves():
    J = jacobian(SIGMA)
    assert proportional(J, MultiPoly.parse("x*y*z"))
    for line in ("x", "y", "z"):
        assert exceptional_multiplicity(SIGMA, MultiPoly.parse(line)) == 1
    assert multiplicity(MultiPoly.parse("x"), MultiPoly.parse("x^3*y")) == 3


def test_linear_maps():
    g = BirationalMap.linear([[1, 2, 0], [0, 1, 0], [3, 0, 1]])
    assert is_identity(compose(g, linear_inverse(g)))
    f = M("(x, -y)")
    assert verify_period(conjugate(f, g), 2)
    with pytest.raises(ValueError):
        linear_inverse(SIGMA)


def test_evaluate():
    assert SIGMA.evaluate((1, 0, 0)) is None
    img = SIGMA.evaluate((1, 2, 3))
    assert tuple(c for c in img) == (6, 3, 2)
