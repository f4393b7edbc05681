"""Involutions attached to quadratic foliations.

Two independent routes build the same map: the tangency construction
(second tangency point of the line m + t X(m)) and an explicit closed form
for fields normalised to vanish at (1:0:0), (0:1:0), (0:0:1), (1:1:1).
"""

from dataclasses import dataclass

from .birational import BirationalMap
from .cyclotomic import DEFAULT_CONDUCTOR, CycNumber, as_cyc
from .errors import DegenerateInput
from .foliation import Foliation, tangency_polynomial
from .linalg import determinant, solve
from .poly import MultiPoly, RationalFunction, gcd, gens


def involution_from_quadratic(F):
    """I(m) = m + s X(m) with s the nonzero root of Q(t)/t = a t + b."""
    if F.degree() != 2:
        raise DegenerateInput(f"expected a quadratic foliation, got degree {F.degree()}")
    T = tangency_polynomial(F)
    s = RationalFunction(-T.b, T.a)
    x, y, _, _ = gens(F.N)
    return BirationalMap.from_affine(s * F.X1 + x, s * F.X2 + y)


@dataclass(frozen=True)
class NormalizedQuadraticCoefficients:
    a: CycNumber
    b: CycNumber
    c: CycNumber
    A: CycNumber
    B: CycNumber
    C: CycNumber

    @property
    def e(self):
        return -1 - self.a - self.b - self.c

    @property
    def E(self):
        return -1 - self.A - self.B - self.C

    @property
    def N(self):
        return self.a.N

    @classmethod
    def make(cls, a, b, c, A, B, C, N=DEFAULT_CONDUCTOR):
        return cls(*(as_cyc(v, N) for v in (a, b, c, A, B, C)))

    def field(self):
        """(x^2 y + a x^2 + b x y + c x + e y, x y^2 + A y^2 + B x y + C x + E y)."""
        x, y, _, _ = gens(self.N)
        X1 = x * x * y + self.a * x * x + self.b * x * y + self.c * x + self.e * y
        X2 = x * y * y + self.A * y * y + self.B * x * y + self.C * x + self.E * y
        return X1, X2

    def foliation(self):
        X1, X2 = self.field()
        if not gcd(X1, X2).is_constant():
            raise DegenerateInput("field components share a factor")
        return Foliation(X1, X2)


# Closed-form tables: exponent (i, j) of x^i y^j -> coefficient in a..E.
_U1 = {
    (3, 2): lambda a, b, c, e, A, B, C, E: (B - a) * (E - A * (B - a)),
    (3, 1): lambda a, b, c, e, A, B, C, E: E * (a * B - a * a + C) + 2 * A * C * (a - B),
    (3, 0): lambda a, b, c, e, A, B, C, E: C * (a * E - A * C),
    (0, 3): lambda a, b, c, e, A, B, C, E: e * (A * E - b * E - c * A + e * B),
    (1, 3): lambda a, b, c, e, A, B, C, E: (2 * (A * A * c - e * E - b * c * A - A * A * E) - a * e * A
                                            + c * e + b * e * B + 3 * b * A * E - b * b * E),
    (1, 1): lambda a, b, c, e, A, B, C, E: (c * E - e * C) * (E - c),
    (0, 2): lambda a, b, c, e, A, B, C, E: e * (e * C - c * E),
    (2, 2): lambda a, b, c, e, A, B, C, E: (a * e * B - e * C - e * B * B + E * E - c * E + b * B * E
                                            + 2 * (b * A * C - a * c * A - A * A * C - a * b * E - A * B * E
                                                   + c * A * B) + 3 * a * A * E),
    (2, 0): lambda a, b, c, e, A, B, C, E: C * (c * E - e * C),
    (2, 1): lambda a, b, c, e, A, B, C, E: (2 * (c * A * C - e * C * B - a * c * E - A * C * E) + a * E * E
                                            + c * B * E + b * C * E + a * e * C),
    (2, 3): lambda a, b, c, e, A, B, C, E: 2 * A * (A - b) * (a - B) + e * (a - B) + (A - b) * E,
    (1, 4): lambda a, b, c, e, A, B, C, E: (b - A) * (e - A * (b - A)),
    (1, 2): lambda a, b, c, e, A, B, C, E: (b * e * C - a * e * E - c * c * A + b * E * E - A * E * E
                                            + 3 * c * A * E + c * e * B - e * B * E - 2 * b * c * E),
    (0, 4): lambda a, b, c, e, A, B, C, E: e * (A * A - b * A + e),
}

_V1 = {
    (3, 2): lambda a, b, c, e, A, B, C, E: 2 * a * (a - B) * (b - A) - a * c - A * C + b * C + c * B,
    (2, 3): lambda a, b, c, e, A, B, C, E: (A - b) * (a * (A - b) + c),
    (4, 1): lambda a, b, c, e, A, B, C, E: (a - B) * (C + a * (a - B)),
    (3, 1): lambda a, b, c, e, A, B, C, E: (2 * (a * B * E + c * C - a * a * E + a * a * c) - 3 * a * c * B
                                            - C * E + a * A * C - b * B * C + c * B * B),
    (2, 0): lambda a, b, c, e, A, B, C, E: C * (c * E - e * C),
    (1, 1): lambda a, b, c, e, A, B, C, E: (E - c) * (c * E - e * C),
    (2, 2): lambda a, b, c, e, A, B, C, E: (2 * (a * A * E - a * e * B + a * b * c - a * b * E + c * A * B
                                                 + a * a * e) + b * b * C + e * C - b * c * B - c * c
                                            - 3 * a * c * A - b * A * C + c * E),
    (4, 0): lambda a, b, c, e, A, B, C, E: -C * (C - a * B + a * a),
    (2, 1): lambda a, b, c, e, A, B, C, E: (2 * c * B * E + a * E * E - b * C * E - 3 * a * c * E - c * c * B
                                            + b * c * C + c * A * C - e * C * B + a * c * c),
    (3, 0): lambda a, b, c, e, A, B, C, E: C * (a * E - b * C - a * c + c * B),
    (0, 3): lambda a, b, c, e, A, B, C, E: e * (a * e - c * A),
    (1, 2): lambda a, b, c, e, A, B, C, E: (2 * (a * c * e + b * e * C - a * e * E + c * A * E) - c * c * A
                                            - c * e * B - e * A * C - b * c * E),
    (1, 3): lambda a, b, c, e, A, B, C, E: c * A * A - c * e - b * c * A + 2 * a * e * (b - A),
    (0, 2): lambda a, b, c, e, A, B, C, E: e * (e * C - c * E),
}

_T = {
    (2, 0): lambda a, b, c, e, A, B, C, E: C - a * B + a * a,
    (1, 1): lambda a, b, c, e, A, B, C, E: E - c - A * B + a * b,
    (1, 0): lambda a, b, c, e, A, B, C, E: b * C - c * B - A * C + a * c,
    (0, 2): lambda a, b, c, e, A, B, C, E: b * A - A * A - e,
    (0, 1): lambda a, b, c, e, A, B, C, E: b * E - e * B - A * E + a * e,
}


def _table_poly(table, k):
    vals = (k.a, k.b, k.c, k.e, k.A, k.B, k.C, k.E)
    return MultiPoly({(i, j): f(*vals) for (i, j), f in table.items()}, k.N)


@dataclass
class GeiserData:
    U1: MultiPoly
    V1: MultiPoly
    U2: MultiPoly
    V2: MultiPoly
    T: MultiPoly
    map: BirationalMap


def geiser_closed_form(coeffs):
    """(U1 / (T U2), V1 / (T V2)) for normalised coefficients."""
    X1, X2 = coeffs.field()
    if not gcd(X1, X2).is_constant():
        raise DegenerateInput("field components share a factor")
    U1, V1, T = (_table_poly(tab, coeffs) for tab in (_U1, _V1, _T))
    U2, V2 = X2, X1
    if T.is_zero():
        raise DegenerateInput("T vanishes identically")
    I = BirationalMap.from_affine(RationalFunction(U1, T * U2), RationalFunction(V1, T * V2))
    return GeiserData(U1, V1, U2, V2, T, I)


def seven_points_matrix(m1, m2, m3, N=DEFAULT_CONDUCTOR):
    """Rows and right-hand side of the 6x6 system in (a, b, c, A, B, C)."""
    rows, rhs = [], []
    for (xi, yi) in (m1, m2, m3):
        xi, yi = as_cyc(xi, N), as_cyc(yi, N)
        rows.append([xi * xi - yi, xi * yi - yi, xi - yi, 0, 0, 0])
        rhs.append(yi - xi * xi * yi)
        rows.append([0, 0, 0, yi * yi - yi, xi * yi - yi, xi - yi])
        rhs.append(yi - xi * yi * yi)
    return rows, rhs


def seven_points_solve(m1, m2, m3, N=DEFAULT_CONDUCTOR):
    """Coefficients of the quadratic field singular at the four base points and m1, m2, m3."""
    rows, rhs = seven_points_matrix(m1, m2, m3, N)
    if determinant(rows, N).is_zero():
        raise DegenerateInput("D(m1, m2, m3) = 0: the linear system is singular")
    sol = solve(rows, rhs, N)
    coeffs = NormalizedQuadraticCoefficients(*sol)
    X1, X2 = coeffs.field()
    if not gcd(X1, X2).is_constant():
        raise DegenerateInput("resulting field has a common factor")
    return coeffs
