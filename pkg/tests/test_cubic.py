from fractions import Fraction as Fr

import pytest
import sympy

from folcremona import (
    CycNumber,
    DegenerateInput,
    ExtensionRequired,
    Foliation,
    HomogeneousFamilyParams,
    MultiPoly,
    family_parameter_scan,
    homogeneous_family_build,
    quartic_square_test,
    r_closed_forms,
    trivolution_discriminant,
    trivolution_from_cubic,
)
from folcremona.cubic import (
    family_a_delta,
    family_a_field,
    family_a_params,
    family_a_trivolution,
    quartic_poly,
    square_locus_conditions,
)


def cyc(*vals):
    return tuple(CycNumber.parse(str(v)) for v in vals)


def test_requires_cubic():
    with pytest.raises(DegenerateInput):
        trivolution_discriminant(Foliation.parse_field("x^3 - y^2, x^2*y - 1"))


def test_extension_required():
    # family (a) at nu = 1/2 has Delta = kappa s^2 with kappa = 2 times a square
    F = Foliation(*family_a_field(Fr(1, 2)))
    with pytest.raises(ExtensionRequired):
        trivolution_from_cubic(F)
    with pytest.raises(ExtensionRequired):
        family_a_trivolution(Fr(1, 2))


def test_quartic_square_test_branches():
    assert quartic_square_test(cyc(1, 0, 2, 0, 1))           # (x^2 + y^2)^2
    assert quartic_square_test(cyc(1, 2, 1, 0, 0))           # x^2 (x + y)^2, tau5 = 0
    assert not quartic_square_test(cyc(1, 0, 0, 0, 1))           # x^4 + y^4
    assert not quartic_square_test(cyc(1, 0, 1, 0, 1))
    assert quartic_square_test(cyc(4, 12, 13, 6, 1))         # (2x^2 + 3xy + y^2)^2
    with pytest.raises(ValueError):
        quartic_square_test(cyc(0, 0, 0, 0, 0))


def test_closed_forms_are_polynomial_identities():
    """[DERIVED] the closed forms evaluated by sympy on symbols, then specialised."""
    a, l, m, n = sympy.symbols("a l m n")
    r = r_closed_forms(a, l, m, n)
    # at (-1, 1, 1, 1) the quartic is 12 (x^2 + y^2)^2
    vals = [sympy.expand(ri.subs({a: -1, l: 1, m: 1, n: 1})) for ri in r]
    assert vals == [12, 0, 24, 0, 12]


def test_family_build_and_square_locus():
    p = HomogeneousFamilyParams.make(-1, 1, 1, 1)
    fm = homogeneous_family_build(p)
    assert fm.closed_forms_agree and quartic_square_test(fm.r)
    assert square_locus_conditions(p) == (True, True)
    with pytest.raises(DegenerateInput):
        homogeneous_family_build(HomogeneousFamilyParams.make(1, 1, 1, 1))


def test_scan_rejects_inadmissible():
    with pytest.raises(DegenerateInput):
        family_parameter_scan([HomogeneousFamilyParams.make(-1, 1, -1, -1)])


@pytest.mark.parametrize("nu", [Fr(3, 2), Fr(-2), Fr(-1), Fr(1), Fr(12)])
def test_family_a_closed_forms(nu):
    X1, X2 = family_a_field(nu)
    F = Foliation(X1, X2)
    assert trivolution_discriminant(F).delta == family_a_delta(nu)
    tr = trivolution_from_cubic(F)
    assert family_a_trivolution(nu).map in (tr.T1, tr.T2)
    p = family_a_params(nu)
    assert square_locus_conditions(p)[0]


def test_family_a_printed_variant_only_at_one():
    F = Foliation(*family_a_field(Fr(1)))
    tr = trivolution_from_cubic(F)
    assert family_a_trivolution(1, as_printed=True).map in (tr.T1, tr.T2)
    F = Foliation(*family_a_field(Fr(3, 2)))
    tr = trivolution_from_cubic(F)
    assert family_a_trivolution(Fr(3, 2), as_printed=True).map not in (tr.T1, tr.T2)


@pytest.mark.parametrize("nu", [0, 4, Fr(-1, 2)])
def test_family_a_degenerate(nu):
    with pytest.raises(DegenerateInput):
        family_a_field(nu)


def test_quartic_poly():
    assert quartic_poly(cyc(1, 0, 2, 0, 1)) == MultiPoly.parse("(x^2 + y^2)^2")
