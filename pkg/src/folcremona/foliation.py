"""Plane foliations given by an affine vector field or a homogeneous 1-form.

The field ``X = X1 d/dx + X2 d/dy`` lives in the chart z = 1.  The form
``u dx + v dy + w dz`` is the contraction of a homogeneous lift
``Z = E d/dx + F d/dy + G d/dz`` with the radial field, i.e.
``(u, v, w) = (G y - F z, E z - G x, F x - E y)``, so that ``v(x, y, 1) = X1``
and ``-u(x, y, 1) = X2``.
"""

from dataclasses import dataclass
from typing import Optional

from .birational import BirationalMap, fixed_curve, linear_matrix
from .cyclotomic import CycNumber, as_cyc
from .errors import DegenerateInput
from .poly import (
    MultiPoly,
    RationalFunction,
    det3,
    exact_div,
    gcd,
    gens,
    proportional,
    resultant,
)


def _homogenize(p, d):
    return p.homogenize("z", d) if not p.is_zero() else p


class Foliation:
    """Foliation of the projective plane, stored by a reduced affine field.

    The field keeps the scalar it was given with; only a nonconstant common
    factor of the two components is removed.
    """

    __slots__ = ("X1", "X2", "N", "_form", "_lift", "_degree")

    def __init__(self, X1, X2):
        if X1.N != X2.N:
            raise ValueError("components use different conductors")
        if X1.is_zero() and X2.is_zero():
            raise DegenerateInput("the zero field defines no foliation")
        if X1.degree("z") > 0 or X2.degree("z") > 0 or X1.degree("t") > 0 or X2.degree("t") > 0:
            raise ValueError("an affine field depends on x and y only")
        g = gcd(X1, X2)
        if not g.is_constant():
            X1, X2 = exact_div(X1, g), exact_div(X2, g)
        self.X1, self.X2, self.N = X1, X2, X1.N
        self._form = None
        self._lift = None
        self._degree = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_field(cls, X1, X2):
        return cls(X1, X2)

    @classmethod
    def from_form(cls, u, v, w):
        """Foliation of a homogeneous 1-form; the Euler identity is checked."""
        x, y, z, _ = gens(u.N)
        degs = {p.total_degree() for p in (u, v, w) if not p.is_zero()}
        if len(degs) != 1 or not all(p.is_homogeneous() for p in (u, v, w)):
            raise ValueError("u, v, w must be homogeneous of a common degree")
        if not (x * u + y * v + z * w).is_zero():
            raise ValueError("Euler identity x u + y v + z w = 0 fails")
        F = to_affine_field(u, v, w)
        return F

    @classmethod
    def from_affine_form(cls, A, B):
        """Foliation of the affine 1-form A dx + B dy."""
        return cls(B, -A)

    @classmethod
    def parse_field(cls, text, N=12):
        from .parsing import parse_expression, split_top_level
        body = text.strip()
        if body.startswith("(") and body.endswith(")") and len(split_top_level(body[1:-1], ",")) == 2:
            body = body[1:-1]
        parts = split_top_level(body, ",")
        if len(parts) != 2:
            raise ValueError("a field is given by two comma-separated components")
        comps = [parse_expression(p, N) for p in parts]
        return field_from_rational(*comps)

    # -- lift and form --------------------------------------------------
    def field_degree(self):
        return max(self.X1.total_degree(), self.X2.total_degree())

    def top_is_radial(self):
        k = self.field_degree()
        x, y, _, _ = gens(self.N)
        a, b = self.X1.homogeneous_part(k), self.X2.homogeneous_part(k)
        return (y * a - x * b).is_zero()

    def lift(self):
        """Homogeneous (E, F, G) not collinear to the radial field, of degree nu."""
        if self._lift is None:
            k = self.field_degree()
            E = _homogenize(self.X1, k)
            F = _homogenize(self.X2, k)
            x, y, z, _ = gens(self.N)
            if not self.top_is_radial():
                self._lift = (E, F, MultiPoly(None, self.N))
            else:
                top = self.X1.homogeneous_part(k)
                if top.is_zero():
                    g = exact_div(self.X2.homogeneous_part(k), y)
                else:
                    g = exact_div(top, x)
                A = exact_div(E - g * x, z) if not (E - g * x).is_zero() else E - g * x
                B = exact_div(F - g * y, z) if not (F - g * y).is_zero() else F - g * y
                self._lift = (A, B, -g)
        return self._lift

    def form(self):
        """Reduced homogeneous 1-form (u, v, w)."""
        if self._form is None:
            E, F, G = self.lift()
            x, y, z, _ = gens(self.N)
            u, v, w = G * y - F * z, E * z - G * x, F * x - E * y
            g = gcd(gcd(u, v), w)
            if not g.is_constant():
                u, v, w = exact_div(u, g), exact_div(v, g), exact_div(w, g)
            assert (x * u + y * v + z * w).is_zero()
            self._form = (u, v, w)
        return self._form

    def degree(self):
        if self._degree is None:
            self._degree = foliation_degree(self)
        return self._degree

    def embed(self, target):
        return Foliation(self.X1.embed(target), self.X2.embed(target))

    def __str__(self):
        return f"({self.X1})*d/dx + ({self.X2})*d/dy"

    def __repr__(self):
        return f"Foliation[{self}]"

    def same_as(self, other):
        """Same foliation: the two fields are proportional."""
        return (self.X1 * other.X2 - self.X2 * other.X1).is_zero()


def field_from_rational(R1, R2):
    """Foliation of a field whose components may be rational functions."""
    R1 = R1 if isinstance(R1, RationalFunction) else RationalFunction(R1)
    R2 = R2 if isinstance(R2, RationalFunction) else RationalFunction(R2)
    den = R1.den * exact_div(R2.den, gcd(R1.den, R2.den))
    return Foliation(R1.num * exact_div(den, R1.den), R2.num * exact_div(den, R2.den))


def to_affine_field(u, v, w=None):
    """Affine field (v(x,y,1), -u(x,y,1)) reduced by its gcd."""
    X1 = v.dehomogenize("z")
    X2 = -u.dehomogenize("z")
    if X1.is_zero() and X2.is_zero():
        raise DegenerateInput("the form restricts to zero on the chart z = 1")
    return Foliation(X1, X2)


def to_homogeneous_form(F):
    return F.form()


# --- degree and tangency ---------------------------------------------------

@dataclass
class Tangency:
    """Q(t) = t P(t) along the line m + t X(m), with the coefficients of P."""
    Q: MultiPoly
    P: MultiPoly
    coefficients: list          # [p_0, p_1, ...] with P = sum p_k t^k
    a: MultiPoly
    b: MultiPoly
    c: Optional[MultiPoly]

    @property
    def discriminant(self):
        if self.c is None:
            raise ValueError("the discriminant is defined for quadratic P only")
        return self.b * self.b - 4 * self.a * self.c


def tangency_Q(F):
    x, y, _, _ = gens(F.N)
    X1, X2 = F.X1, F.X2
    shift = {"x": x + gens(F.N)[3] * X1, "y": y + gens(F.N)[3] * X2}
    return X1.substitute(shift) * X2 - X2.substitute(shift) * X1


def foliation_degree(F):
    """Number of tangencies with a generic line, cross-checked with the form degree."""
    Q = tangency_Q(F)
    nu_t = 0 if Q.is_zero() else Q.degree("t")
    nu_form = F.form()[0].total_degree() - 1 if not F.form()[0].is_zero() else F.form()[1].total_degree() - 1
    if nu_t != nu_form:
        raise AssertionError(f"degree mismatch: tangency count {nu_t}, form degree {nu_form}")
    return nu_t


def tangency_polynomial(F):
    """Q = t P along m + t X(m); for degree 3, P = a t^2 + b t + c."""
    nu = F.degree()
    if nu < 2:
        raise DegenerateInput(f"tangency polynomial needs degree >= 2, got {nu}")
    Q = tangency_Q(F)
    t = gens(F.N)[3]
    P = exact_div(Q, t)
    coeffs = P.coefficients_in("t")
    if len(coeffs) - 1 != nu - 1:
        raise AssertionError(f"deg_t(Q/t) = {len(coeffs) - 1}, expected {nu - 1}")
    if nu == 2:
        return Tangency(Q, P, coeffs, coeffs[1], coeffs[0], None)
    if nu == 3:
        return Tangency(Q, P, coeffs, coeffs[2], coeffs[1], coeffs[0])
    return Tangency(Q, P, coeffs, coeffs[-1], coeffs[-2], coeffs[-3])


def discriminant_t(p):
    """Discriminant in t through the resultant with the t-derivative."""
    n = p.degree("t")
    lead = p.coefficients_in("t")[-1]
    r = resultant(p, p.derive("t"), "t")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return exact_div(r, lead) * sign


def check_cubic_discriminant_identity(T):
    """Delta(Q) = c^2 Delta(P), the first by resultants and the second by b^2 - 4ac."""
    return (discriminant_t(T.Q) - T.c * T.c * T.discriminant).is_zero()


# --- inflection polynomial --------------------------------------------------

def _apply(Z, p):
    E, F, G = Z
    return E * p.derive("x") + F * p.derive("y") + G * p.derive("z")


def inflection_polynomial(F, normalize=True):
    """H = det[[x, E, Z(E)], [y, F, Z(F)], [z, G, Z(G)]]."""
    Z = F.lift()
    x, y, z, _ = gens(F.N)
    E, Fc, G = Z
    if (Fc * z - G * y).is_zero() and (G * x - E * z).is_zero() and (E * y - Fc * x).is_zero():
        raise DegenerateInput("lift is collinear to the radial field")
    H = det3([[x, E, _apply(Z, E)], [y, Fc, _apply(Z, Fc)], [z, G, _apply(Z, G)]])
    if H.is_zero():
        raise DegenerateInput("H vanishes identically: the leaves are lines")
    return H.monic() if normalize else H


# --- singular points --------------------------------------------------------

def is_singular_point(F, point):
    pts = [c if isinstance(c, CycNumber) else as_cyc(c, F.N) for c in point]
    N = max(c.N for c in pts)
    pts = [c if c.N == N else c.embed(N) for c in pts]
    if all(c.is_zero() for c in pts):
        raise ValueError("(0:0:0) is not a projective point")
    form = F.form()
    if N != F.N:
        form = [p.embed(N) for p in form]
    values = dict(zip("xyz", pts))
    return all(p.evaluate(values).is_zero() for p in form)


def _eliminate(p, q, var):
    if p.degree(var) < 1 and q.degree(var) < 1:
        return gcd(p, q)
    if p.degree(var) < 1:
        return p ** q.degree(var)
    if q.degree(var) < 1:
        return q ** p.degree(var)
    return resultant(p, q, var)


def singular_elimination(F):
    """Eliminants in x and in y whose roots contain the affine singular coordinates."""
    u, v, _ = F.form()
    a, b = u.dehomogenize("z"), v.dehomogenize("z")
    ex = _eliminate(a, b, "y")
    ey = _eliminate(a, b, "x")
    if ex.is_zero() or ey.is_zero():
        raise DegenerateInput("singular set is not isolated in the chart z = 1")
    return ex.monic(), ey.monic()


# --- symmetries -------------------------------------------------------------

def pullback_form(F, g):
    """g^* (u dx + v dy + w dz) for a linear map g."""
    m = linear_matrix(g)
    subs = dict(zip("xyz", g.f))
    comp = [p.substitute(subs) for p in F.form()]
    return tuple(sum((comp[i] * m[i][k] for i in range(3)), MultiPoly(None, F.N)) for k in range(3))


def is_symmetry(F, g):
    """True iff the linear map g preserves F."""
    if g.degree() != 1:
        raise ValueError("isotropy is tested for linear maps only")
    if g.N != F.N:
        raise ValueError("map and foliation use different conductors")
    pulled = pullback_form(F, g)
    form = F.form()
    for i in range(3):
        for k in range(i + 1, 3):
            if not (pulled[i] * form[k] - pulled[k] * form[i]).is_zero():
                return False
    return True


# --- involution to foliation ------------------------------------------------

@dataclass
class ReverseConstruction:
    foliation: Foliation
    degree: int
    map_degree: int
    fixed_curve_degree: int

    @property
    def degree_is_even(self):
        return self.degree % 2 == 0

    @property
    def bound_holds(self):
        return self.degree <= self.map_degree - self.fixed_curve_degree


def foliation_from_involution(I):
    """Foliation of the field (x - I1) d/dx + (y - I2) d/dy."""
    I1, I2 = I.affine()
    x, y, _, _ = gens(I.N)
    d1, d2 = I1 - x, I2 - y
    if d1.is_zero() and d2.is_zero():
        raise DegenerateInput("the identity defines no foliation")
    F = field_from_rational(d1, d2)
    fix = fixed_curve(I)
    return ReverseConstruction(F, F.degree(), I.degree(), max(fix.total_degree(), 0))
