import itertools
import random
from fractions import Fraction as Fr

import pytest

from folcremona import (
    DegenerateInput,
    Foliation,
    MultiPoly,
    fixed_curve,
    geiser_closed_form,
    involution_from_quadratic,
    is_singular_point,
    seven_points_solve,
    verify_period,
)
from folcremona.linalg import determinant
from folcremona.quadratic import NormalizedQuadraticCoefficients, seven_points_matrix


def general_position(pts):
    """No three points on a line and no six on a conic."""
    for c in itertools.combinations(pts, 3):
        if determinant([list(p) for p in c], 12).is_zero():
            return False
    for c in itertools.combinations(pts, 6):
        rows = [[a * a, a * b, b * b, a * d, b * d, d * d] for a, b, d in c]
        if determinant(rows, 12).is_zero():
            return False
    return True


def test_rejects_non_quadratic():
    with pytest.raises(DegenerateInput):
        involution_from_quadratic(Foliation.parse_field("x^3, 1"))


def test_normalised_relations():
    k = seven_points_solve((Fr(1, 2), Fr(3, 4)), (Fr(3, 4), Fr(1, 2)), (Fr(4, 3), Fr(2, 3)))
    assert 1 + k.a + k.b + k.c + k.e == 0
    assert 1 + k.A + k.B + k.C + k.E == 0


def test_seven_points_singular_system():
    with pytest.raises(DegenerateInput):
        seven_points_solve((Fr(1, 2), Fr(3, 4)), (Fr(1, 2), Fr(3, 4)), (Fr(4, 3), Fr(2, 3)))


def test_seven_points_matrix_shape():
    rows, rhs = seven_points_matrix((2, 3), (5, 7), (-1, 4))
    assert len(rows) == 6 and all(len(r) == 6 for r in rows) and len(rhs) == 6


def test_random_seven_points():
    """[DERIVED] substitute back: the field vanishes at all seven points.

    Points in special position lower the degree, so only general sets are kept.
    """
    rng = random.Random(3)
    done = 0
    while done < 5:
        pts = [(Fr(rng.randint(-7, 7), rng.randint(1, 5)), Fr(rng.randint(-7, 7), rng.randint(1, 5))) for _ in range(3)]
        try:
            k = seven_points_solve(*pts)
        except DegenerateInput:
            continue
        F = k.foliation()
        if F.degree() != 2:
            continue
        base = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)] + [(px, py, 1) for px, py in pts]
        if not general_position(base):
            continue
        assert all(is_singular_point(F, p) for p in base)
        I = geiser_closed_form(k).map
        assert verify_period(I, 2)
        fix = fixed_curve(I)
        assert fix.total_degree() == 6
        # the fixed sextic is singular at the seven points
        for p in base:
            vals = dict(zip("xyz", p))
            assert all(fix.derive(v).evaluate(vals).is_zero() for v in "xyz")
        done += 1


def test_field_of_coefficients():
    k = NormalizedQuadraticCoefficients(*(MultiPoly.const(v).constant_value() for v in (1, 2, 3, 4, 5, 6)))
    X1, X2 = k.field()
    assert X1.total_degree() <= 3 and X2.total_degree() <= 3
