"""Trivolutions attached to cubic foliations.

For a degree-3 foliation the tangency polynomial is Q = t (a t^2 + b t + c).
When b^2 - 4ac = kappa s^2 with sqrt(kappa) in the field, the two roots
r = (-b +- sqrt(kappa) s) / 2a are rational functions and m -> m + r X(m)
are mutually inverse maps of order three.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .birational import BirationalMap, compose, is_identity, verify_period
from .cyclotomic import DEFAULT_CONDUCTOR, CycNumber, as_cyc, field_sqrt
from .errors import DegenerateInput, ExtensionRequired
from .foliation import (
    Foliation,
    check_cubic_discriminant_identity,
    tangency_polynomial,
)
from .poly import (
    MultiPoly,
    RationalFunction,
    exact_div,
    gens,
    perfect_square_decompose,
    try_exact_div,
)


@dataclass
class CubicDiscriminant:
    a: MultiPoly
    b: MultiPoly
    c: MultiPoly
    delta: MultiPoly


def trivolution_discriminant(F):
    """Coefficients of P and Delta(P) = b^2 - 4ac, with Delta(Q) = c^2 Delta(P) checked."""
    if F.degree() != 3:
        raise DegenerateInput(f"expected a cubic foliation, got degree {F.degree()}")
    T = tangency_polynomial(F)
    if not check_cubic_discriminant_identity(T):
        raise AssertionError("Delta(Q) != c^2 Delta(P)")
    return CubicDiscriminant(T.a, T.b, T.c, T.discriminant)


@dataclass
class Trivolution:
    T1: BirationalMap
    T2: BirationalMap
    kappa: CycNumber
    s: MultiPoly
    roots: tuple


def trivolution_from_cubic(F, check=True):
    """The pair (T1, T2), or None when Delta(P) is not a square over C.

    Raises ExtensionRequired when Delta(P) = kappa s^2 but kappa has no
    square root in Q(zeta_N).
    """
    disc = trivolution_discriminant(F)
    dec = perfect_square_decompose(disc.delta)
    if dec is None:
        return None
    kappa, s = dec
    mu = field_sqrt(kappa)
    if mu is None:
        raise ExtensionRequired(kappa)
    x, y, _, _ = gens(F.N)
    two_a = 2 * disc.a
    r1 = RationalFunction(-disc.b + mu * s, two_a)
    r2 = RationalFunction(-disc.b - mu * s, two_a)
    maps = [BirationalMap.from_affine(r * F.X1 + x, r * F.X2 + y) for r in (r1, r2)]
    if check:
        if not is_identity(compose(maps[0], maps[1])):
            raise AssertionError("T1 o T2 is not the identity")
        if not verify_period(maps[0], 3):
            raise AssertionError("T1 is not of period three")
    return Trivolution(maps[0], maps[1], kappa, s, (r1, r2))


def alignment_check(T):
    """True iff m, T(m), T^2(m) are collinear for a symbolic point m."""
    x, y, _, _ = gens(T.N)
    I1, I2 = T.affine()
    J1, J2 = compose(T, T).affine()
    det = (I1 - x) * (J2 - y) - (I2 - y) * (J1 - x)
    return det.is_zero()


# --- homogeneous family -----------------------------------------------------

@dataclass(frozen=True)
class HomogeneousFamilyParams:
    alpha: CycNumber
    lam: CycNumber
    mu: CycNumber
    nu: CycNumber

    @classmethod
    def make(cls, alpha, lam, mu, nu, N=DEFAULT_CONDUCTOR):
        return cls(*(as_cyc(v, N) for v in (alpha, lam, mu, nu)))

    @property
    def N(self):
        return self.alpha.N

    def admissible(self):
        a, l, m, n = self.alpha, self.lam, self.mu, self.nu
        return not (a * l * m * n * (1 + l + m + n)).is_zero() and a != 1

    def as_tuple(self):
        return (self.alpha, self.lam, self.mu, self.nu)


def family_field(params):
    """X1, X2 of the homogeneous cubic field with invariant lines x, y, y - x, y - alpha x."""
    x, y, _, _ = gens(params.N)
    al, la, mu, nu = params.as_tuple()
    X1 = -x * (la * (y - x) * (y - al * x) + mu * y * (y - al * x) + nu * y * (y - x))
    X2 = y * ((y - x) * (y - al * x) - mu * x * (y - al * x) - nu * al * x * (y - x))
    return X1, X2


def r_closed_forms(a, l, m, n):
    """The five coefficients r1..r5 of R; works on scalars or on polynomials."""
    r1 = l**2 * a**2 * (2 * a * n * m + a**2 + 2 * a**2 * n + a**2 * n**2 - 2 * a - 2 * a * m
                        - 2 * a * n + 1 + 2 * m + m**2)
    r2 = -2 * l * a * (
        l * a * n * m + l * a**2 * m * n - 3 * a**2 * m * n + n * m**2 + l * m**2 - l * a * n
        + a * n**2 * m - 2 * a * n * m**2 + a**2 * n * m**2 - 3 * a * n * m - l * a * m
        - l * a**2 * m + 2 * n * m - a**2 * m**2
        + l + n + 2 * m * l - l * a**2 - l * a + l * a**3 + n**2 * m * a**3 + 2 * n * m * a**3
        - a * n - a**2 * m + m * a**3 - l * n * a**2 - 2 * m * n**2 * a**2 - n**2 * a
        + 2 * l * n * a**3 + l * n**2 * a**3)
    r3 = (2 * m * n**2 - 4 * l * a**2 * m**2 - 4 * l * a * n * m**2 - 2 * l * a * n * m
          + 2 * n**2 * l * a**2 * m - 12 * l * a**2 * m * n + 2 * l**2 * n * a**2 * m
          + 2 * l * n * a**2 * m**2 + 4 * l * n * m * a**4 - 4 * l * n**2 * m * a**3
          + 2 * l * n**2 * m * a**4
          + 4 * l * n * m + 6 * n**2 * a**2 * m**2 - 4 * l**2 * a**2 * n - 4 * l**2 * a**2 * m
          - 4 * a * n**2 * m + 2 * a**2 * n * m**2 - 4 * l * a**2 * m + 2 * l**2 * a * m
          + 2 * m * l * a**4 + 2 * a**2 * m * n - 2 * l * n * m * a**3 + 2 * l * n * m**2
          + 2 * l * a * n - 4 * a * m**2 * n**2 + 2 * l**2 * m + l**2 * m**2 + 2 * l**2 * a
          - 6 * l**2 * a**2 + n**2 + 2 * l * n + l**2 + m**2 * a**4 + l**2 * a**4
          + 2 * l**2 * a**3 - 4 * m**2 * n**2 * a**3 + 2 * l**2 * n * a**4
          + m**2 * n**2 - 4 * l * n * a**2 - 4 * n * m**2 * a**3 + 2 * m * n**2 * a**2
          - 4 * l * n**2 * a**2 + 2 * l**2 * n * a**3 + 2 * m * l * a**3 + m**2 * n**2 * a**4
          + 2 * n * m**2 * a**4 + l**2 * n**2 * a**4)
    r4 = -2 * (
        m * n**2 - 3 * l * a * n * m - 3 * l * a**2 * m * n + a**2 * m * n + 2 * l * n * m * a**3
        - l * a * n + 2 * l * n * m - l**2 * a**2 * n - 2 * a * n**2 * m + a * n * m**2
        - 2 * a**2 * n * m**2 + a * n * m - l * a * m - l * a * m**2 - l * a**2 * m
        + m**2 * a**3 + l**2 * a**3 - l * n * a**2 + n * m**2 * a**3 + m * n**2 * a**2
        - l * n**2 * a**2 + l**2 * n * a**3 + 2 * m * l * a**3 - l**2 * a * m + l**2 * m
        - l**2 * a - l**2 * a**2 + n**2 + 2 * l * n + l**2)
    r5 = (l**2 + l**2 * a**2 - 2 * l**2 * a + 2 * l * a**2 * m + 2 * l * n - 2 * l * a * n
          - 2 * l * a * m + 2 * a * n * m + n**2 + a**2 * m**2)
    return r1, r2, r3, r4, r5


def family_R_from_discriminant(params, delta):
    """R = Delta / ((lambda+mu+nu+1)^4 x^4 y^4 (y^2 - (alpha+1) x y + alpha x^2)^4), or None."""
    x, y, _, _ = gens(params.N)
    al, la, mu, nu = params.as_tuple()
    base = (la + mu + nu + 1) ** 4 * x**4 * y**4 * (y * y - (al + 1) * x * y + al * x * x) ** 4
    return try_exact_div(delta, base)


def quartic_coefficients(R, N=DEFAULT_CONDUCTOR):
    """(tau1..tau5) of a binary quartic in x, y."""
    terms = R.terms()
    zero = CycNumber((), N)
    return tuple(terms.get((4 - k, k, 0, 0), zero) for k in range(5))


@dataclass
class FamilyMember:
    params: HomogeneousFamilyParams
    foliation: Foliation
    r: tuple
    R: MultiPoly
    closed_forms_agree: bool


def homogeneous_family_build(params):
    if not params.admissible():
        raise DegenerateInput("parameters are not admissible")
    X1, X2 = family_field(params)
    F = Foliation(X1, X2)
    r = r_closed_forms(*params.as_tuple())
    disc = trivolution_discriminant(F)
    R = family_R_from_discriminant(params, disc.delta)
    agree = R is not None and quartic_coefficients(R, params.N) == tuple(r)
    return FamilyMember(params, F, tuple(r), R, agree)


def quartic_square_test(taus):
    """Is tau1 x^4 + ... + tau5 y^4 the square of a quadratic form (over C)?"""
    t1, t2, t3, t4, t5 = taus
    if all(v.is_zero() for v in (t1, t2, t3, t4, t5)):
        raise ValueError("the zero quartic")
    if t5.is_zero():
        return t4.is_zero() and (4 * t1 * t3 - t2 * t2).is_zero()
    inv = t5.inverse()
    t1, t2, t3, t4 = t1 * inv, t2 * inv, t3 * inv, t4 * inv
    if t4.is_zero():
        return t2.is_zero() and (t3 * t3 - 4 * t1).is_zero()
    return (t4 * t4 * t1 - t2 * t2).is_zero() and (4 * t3 * t4 - t4**3 - 8 * t2).is_zero()


def quartic_poly(taus, N=DEFAULT_CONDUCTOR):
    return MultiPoly({(4 - k, k): taus[k] for k in range(5) if not taus[k].is_zero()}, N)


def square_locus_conditions(params):
    """Conditions (a) and (b) at alpha = -1."""
    _, la, mu, nu = params.as_tuple()
    cond_a = ((4 - nu) * la - nu * (2 * nu + 1)).is_zero() and mu == nu
    cond_b = la == 1 and (mu + nu - 4 * mu * nu + 2).is_zero()
    return cond_a, cond_b


@dataclass
class ScanRow:
    params: HomogeneousFamilyParams
    r: tuple
    verdict: bool
    conditions: Optional[tuple] = None

    @property
    def consistent(self):
        if self.conditions is None:
            return True
        return self.verdict == (self.conditions[0] or self.conditions[1])


def family_parameter_scan(grid):
    rows = []
    for p in grid:
        if not p.admissible():
            raise DegenerateInput(f"inadmissible grid point {p.as_tuple()}")
        r = r_closed_forms(*p.as_tuple())
        verdict = quartic_square_test(r)
        cond = square_locus_conditions(p) if p.alpha == -1 else None
        rows.append(ScanRow(p, tuple(r), verdict, cond))
    return rows


def rational_grid(values):
    return [Fraction(v) for v in values]


def jacobian_at(point, N=DEFAULT_CONDUCTOR):
    """4x4 Jacobian of (r1/r5, ..., r4/r5) in (alpha, lambda, mu, nu) at a point.

    Rows are the components, columns the variables.  The closed forms are
    differentiated symbolically with alpha, lambda, mu, nu carried by x, y, z, t.
    """
    x, y, z, t = gens(N)
    r = r_closed_forms(x, y, z, t)
    values = dict(zip("xyzt", (as_cyc(v, N) for v in point)))
    r5 = r[4]
    r5v = r5.evaluate(values)
    out = []
    for i in range(4):
        row = []
        for v in "xyzt":
            num = r[i].derive(v) * r5 - r[i] * r5.derive(v)
            row.append(num.evaluate(values) / (r5v * r5v))
        out.append(row)
    return out


def _family_a_nu(nu, N):
    nu = as_cyc(nu, N)
    if nu.is_zero() or nu == 4 or (2 * nu + 1).is_zero():
        raise DegenerateInput(f"nu = {nu} gives no admissible member of family (a)")
    return nu


def family_a_params(nu, N=DEFAULT_CONDUCTOR):
    """alpha = -1, mu = nu, lambda = nu (2 nu + 1) / (4 - nu)."""
    nu = _family_a_nu(nu, N)
    lam = nu * (2 * nu + 1) / (4 - nu)
    return HomogeneousFamilyParams(as_cyc(-1, N), lam, nu, nu)


def family_a_field(nu, N=DEFAULT_CONDUCTOR):
    nu = _family_a_nu(nu, N)
    x, y, _, _ = gens(N)
    X1 = x * ((2 * nu + 1) * x * x - 9 * y * y) * (nu / (4 - nu))
    X2 = -y * ((2 * nu + 1) * x * x - y * y)
    return X1, X2


def family_a_delta(nu, N=DEFAULT_CONDUCTOR):
    nu = _family_a_nu(nu, N)
    x, y, _, _ = gens(N)
    k = 1024 * nu**2 * (2 * nu + 1) ** 5 / (nu - 4) ** 6
    return k * x**4 * y**4 * (x * x - y * y) ** 4 * ((2 * nu + 1) * x * x + 3 * y * y) ** 2


@dataclass
class FamilyATrivolution:
    U1: MultiPoly
    V1: MultiPoly
    W: MultiPoly
    U2: MultiPoly
    V2: MultiPoly
    map: BirationalMap


def family_a_trivolution(nu, N=DEFAULT_CONDUCTOR, as_printed=False):
    """Closed-form map (U1 / (W U2), V1 / (W V2)); needs sqrt(2 nu + 1) in the field.

    The x^5 coefficient of V1 is nu (2 nu + 1)^3.  With ``as_printed`` the
    published variant nu (1 + 6 nu + 12 nu^2 + 8 nu^4) is used instead; it
    agrees with the true map only at nu = 1.
    """
    nu = _family_a_nu(nu, N)
    nt = field_sqrt(2 * nu + 1)
    if nt is None:
        raise ExtensionRequired(2 * nu + 1)
    x, y, _, _ = gens(N)
    n = nu
    U1 = 4 * x * y * (n * nt * (2 * n + 1) ** 2 * x**5
                      - (12 * n**3 + 28 * n**2 + 19 * n + 4) * x**4 * y
                      + 2 * n * nt * (n - 2 * n**2 + 1) * x**3 * y**2
                      + 2 * (6 * n**3 + 13 * n**2 + 13 * n + 4) * x**2 * y**3
                      - 3 * n * nt * (2 * n + 1) * x * y**4
                      + (2 * n**2 - 7 * n - 4) * y**5)
    top = n * (1 + 6 * n + 12 * n**2 + 8 * n**4) if as_printed else n * (2 * n + 1) ** 3
    V1 = 4 * x * y * (top * x**5
                      + nt * (4 * n**3 - 12 * n**2 - 15 * n - 4) * x**4 * y
                      + 2 * nt * (9 * n**2 - 3 * n - 4 - 2 * n**3) * x**2 * y**3
                      - 2 * (45 * n**2 + 16 * n**3 + 4 * n**4 + 8 + 35 * n) * x**3 * y**2
                      + (20 * n**3 + 16 + 69 * n + 84 * n**2) * x * y**4
                      + 3 * nt * (4 - 2 * n**2 + 7 * n) * y**5)
    W = n**2 * (2 * n + 1) ** 2 * x**4 - 2 * (2 * n**3 + 25 * n**2 + 28 * n + 8) * x**2 * y**2 + (n - 4) ** 2 * y**4
    U2 = (2 * n + 1) * x**2 - y**2
    V2 = (2 * n + 1) * x**2 - 9 * y**2
    T = BirationalMap.from_affine(RationalFunction(U1, W * U2), RationalFunction(V1, W * V2))
    return FamilyATrivolution(U1, V1, W, U2, V2, T)
