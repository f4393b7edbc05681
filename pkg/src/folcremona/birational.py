"""Plane rational maps given by homogeneous triples.

A map is stored as ``(f0 : f1 : f2)`` with the common factor removed.  All
equality tests are projective: two triples agree when their 2x2 minors
vanish, so scalar normalisations of printed formulas never matter.
"""

from .cyclotomic import DEFAULT_CONDUCTOR, CycNumber, as_cyc
from .errors import DegenerateInput
from .linalg import inverse as matrix_inverse
from .poly import (
    MultiPoly,
    RationalFunction,
    exact_div,
    gcd,
    gens,
    resultant,
    squarefree_decomposition,
    try_exact_div,
)
from .poly import det3


class BirationalMap:
    """Rational self-map of the projective plane, ``(f0 : f1 : f2)``."""

    __slots__ = ("f", "N", "removed_degree")

    def __init__(self, f0, f1, f2, reduce=True):
        comps = [f0, f1, f2]
        N = next((c.N for c in comps if isinstance(c, MultiPoly)), DEFAULT_CONDUCTOR)
        comps = [c if isinstance(c, MultiPoly) else MultiPoly.const(c, N) for c in comps]
        if all(c.is_zero() for c in comps):
            raise DegenerateInput("all three components vanish identically")
        degs = {c.total_degree() for c in comps if not c.is_zero()}
        if len(degs) != 1 or not all(c.is_homogeneous() for c in comps):
            raise ValueError("components must be homogeneous of a common degree")
        if any(c.degree("t") > 0 for c in comps):
            raise ValueError("maps are written in x, y, z only")
        self.removed_degree = 0
        if reduce:
            g = gcd(gcd(comps[0], comps[1]), comps[2])
            if not g.is_constant():
                self.removed_degree = g.total_degree()
                comps = [exact_div(c, g) for c in comps]
            # a canonical scalar: make the first nonzero component's leading coefficient 1
            lead = next(c for c in comps if not c.is_zero()).leading_coefficient()
            if lead != 1:
                inv = lead.inverse()
                comps = [c * inv for c in comps]
        self.f = tuple(comps)
        self.N = N

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_affine(cls, I1, I2):
        """Map written (I1, I2) in the chart z = 1."""
        I1 = _as_rational(I1)
        I2 = _as_rational(I2)
        N = I1.N
        den = I1.den * exact_div(I2.den, gcd(I1.den, I2.den))
        n1 = I1.num * exact_div(den, I1.den)
        n2 = I2.num * exact_div(den, I2.den)
        d = max(p.total_degree() for p in (n1, n2, den))
        return cls(n1.homogenize("z", d), n2.homogenize("z", d), den.homogenize("z", d))

    @classmethod
    def identity(cls, N=DEFAULT_CONDUCTOR):
        x, y, z, _ = gens(N)
        return cls(x, y, z, reduce=False)

    @classmethod
    def linear(cls, matrix, N=DEFAULT_CONDUCTOR):
        """Linear map with rows giving f_i = sum m_ik * (x, y, z)_k."""
        x, y, z, _ = gens(N)
        comps = [as_cyc(r[0], N) * x + as_cyc(r[1], N) * y + as_cyc(r[2], N) * z for r in matrix]
        return cls(*comps)

    @classmethod
    def parse(cls, text, N=DEFAULT_CONDUCTOR):
        from .parsing import parse_expression, split_top_level
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        if ":" in body:
            parts = split_top_level(body, ":")
            if len(parts) != 3:
                raise ValueError("expected three homogeneous components")
            return cls(*[parse_expression(p, N) for p in parts])
        parts = split_top_level(body, ",")
        if len(parts) != 2:
            raise ValueError("expected two affine components")
        return cls.from_affine(*[parse_expression(p, N) for p in parts])

    # -- views ------------------------------------------------------------
    def degree(self):
        return next(c for c in self.f if not c.is_zero()).total_degree()

    def affine(self):
        """Components (f0/f2, f1/f2) in the chart z = 1."""
        f0, f1, f2 = (c.dehomogenize("z") for c in self.f)
        if f2.is_zero():
            raise DegenerateInput("the map sends the plane into the line z = 0")
        return RationalFunction(f0, f2), RationalFunction(f1, f2)

    def chart(self, var):
        """Affine expression in the chart var = 1 (useful for charts x = 1, y = 1)."""
        idx = "xyz".index(var)
        others = [k for k in range(3) if k != idx]
        fs = [c.substitute({var: 1}) for c in self.f]
        return tuple(RationalFunction(fs[k], fs[idx]) for k in others)

    def evaluate(self, point):
        """Image of a projective point, or None when it is an indeterminacy point."""
        pt = dict(zip("xyz", point))
        vals = [c.evaluate(pt) for c in self.f]
        if all(v.is_zero() for v in vals):
            return None
        return tuple(vals)

    def __eq__(self, other):
        if not isinstance(other, BirationalMap):
            return NotImplemented
        return projective_equal(self, other)

    def __hash__(self):
        return hash(self.degree())

    def __str__(self):
        return "(" + " : ".join(str(c) for c in self.f) + ")"

    def __repr__(self):
        return f"BirationalMap{self}"

    def affine_str(self):
        a, b = self.affine()
        return f"({a}, {b})"


def _as_rational(v):
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, MultiPoly):
        return RationalFunction(v)
    raise TypeError(f"cannot use {v!r} as a map component")


def compose(f, g):
    """The map f o g, reduced."""
    x_img, y_img, z_img = g.f
    comps = [c.substitute({"x": x_img, "y": y_img, "z": z_img}) for c in f.f]
    if all(c.is_zero() for c in comps):
        raise DegenerateInput("the image of g lies in the indeterminacy locus of f")
    return BirationalMap(*comps)


def power(f, n):
    if n < 1:
        raise ValueError("power expects a positive exponent")
    out = f
    for _ in range(n - 1):
        out = compose(f, out)
    return out


def map_degree(f):
    return f.degree()


def projective_equal(f, g):
    for i in range(3):
        for j in range(i + 1, 3):
            if not (f.f[i] * g.f[j] - f.f[j] * g.f[i]).is_zero():
                return False
    return True


def is_identity(f):
    return projective_equal(f, BirationalMap.identity(f.N))


def verify_period(f, n):
    """True iff f^n is the identity and no smaller positive power is."""
    if n < 1:
        raise ValueError("period must be positive")
    if _orbit_rejects(f, n):
        return False
    g = f
    for k in range(1, n + 1):
        if is_identity(g):
            return k == n
        if k < n:
            g = compose(f, g)
    return False


_PROBES = ((3, 7, 11), (-5, 2, 13), (17, -4, 9))


def _orbit_rejects(f, n):
    """Exact point test: True when some probe point does not return after n steps.

    A probe landing on an indeterminacy point is inconclusive and skipped.
    """
    for probe in _PROBES:
        p = tuple(as_cyc(c, f.N) for c in probe)
        q = p
        for _ in range(n):
            q = f.evaluate(q)
            if q is None:
                break
        else:
            if any(not (p[i] * q[k] - p[k] * q[i]).is_zero() for i in range(3) for k in range(i + 1, 3)):
                return True
            continue
    return False


def jacobian(f):
    rows = [[c.derive(v) for v in "xyz"] for c in f.f]
    return det3(rows)


def jacobian_exceptional(f):
    """Jacobian determinant of the triple; raises when it vanishes identically."""
    J = jacobian(f)
    if J.is_zero():
        raise DegenerateInput("Jacobian determinant vanishes identically")
    return J


def multiplicity(curve, poly):
    """Largest k with curve^k dividing poly (0 if it does not divide)."""
    if curve.is_constant():
        raise ValueError("multiplicity of a constant")
    k = 0
    q = poly
    while not q.is_zero():
        nxt = try_exact_div(q, curve)
        if nxt is None:
            break
        q = nxt
        k += 1
    return k


def exceptional_multiplicity(f, curve):
    return multiplicity(curve, jacobian_exceptional(f))


def fixed_curve(f):
    """Reduced one-dimensional part of Fix(f); the constant 1 when fixed points are isolated.

    The fixed curve is the common factor of the 2x2 minors of (f, id), so the
    line at infinity is treated like any other curve.
    """
    x, y, z, _ = gens(f.N)
    f0, f1, f2 = f.f
    minors = [x * f1 - y * f0, x * f2 - z * f0, y * f2 - z * f1]
    if all(m.is_zero() for m in minors):
        raise DegenerateInput("the identity has no proper fixed curve")
    g = gcd(gcd(minors[0], minors[1]), minors[2])
    if g.is_constant():
        return MultiPoly.const(1, f.N)
    _, factors = squarefree_decomposition(g)
    out = MultiPoly.const(1, f.N)
    for k in factors:
        out = out * k
    return out.monic()


def indeterminacy_check(f, point):
    """True iff every component vanishes at the projective point."""
    if all(as_cyc(c, point[0].N if isinstance(point[0], CycNumber) else f.N).is_zero()
           for c in point):
        raise ValueError("(0:0:0) is not a projective point")
    pt = _embed_point(f, point)
    comps = f.f
    if pt[0].N != f.N:
        comps = [c.embed(pt[0].N) for c in comps]
    values = dict(zip("xyz", pt))
    return all(c.evaluate(values).is_zero() for c in comps)


def _embed_point(f, point):
    pts = [as_cyc(c, f.N) if not isinstance(c, CycNumber) else c for c in point]
    N = max(c.N for c in pts)
    return [c if c.N == N else c.embed(N) for c in pts]


_COMBOS = ((1, 2, 3), (1, -1, 5), (2, 7, -3))


def _eliminant(a, b, var):
    if a.degree(var) < 1 or b.degree(var) < 1:
        return gcd(a, b)
    return resultant(a, b, var)


def indeterminacy_certificate(f):
    """Polynomials whose zeros contain the projections of Ind(f).

    Returns ``(ex, ey, inf)``: every indeterminacy point (x:y:1) has ex(x) = 0
    and ey(y) = 0, and the points on z = 0 are the common zeros of the binary
    form ``inf``.  Fixed combinations of the components keep the resultants
    nonzero even when two components share a factor.
    """
    comps = [c.dehomogenize("z") for c in f.f]
    g = [sum((c * k for c, k in zip(comps, combo)), MultiPoly(None, f.N)) for combo in _COMBOS]
    out = []
    for var in ("y", "x"):
        acc = None
        for i in range(3):
            for j in range(i + 1, 3):
                r = _eliminant(g[i], g[j], var)
                acc = r if acc is None else gcd(acc, r)
        out.append(acc.monic())
    zero = MultiPoly.const(0, f.N)
    inf = gcd(gcd(f.f[0].substitute({"z": zero}), f.f[1].substitute({"z": zero})),
              f.f[2].substitute({"z": zero}))
    return out[0], out[1], inf.monic()


def linear_matrix(g):
    """3x3 matrix of a linear map; raises when g is not linear."""
    if g.degree() != 1:
        raise ValueError("map is not linear")
    rows = []
    for c in g.f:
        terms = c.terms()
        rows.append([terms.get(e, CycNumber((), g.N)) for e in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))])
    return rows


def linear_inverse(g):
    return BirationalMap.linear(matrix_inverse(linear_matrix(g), g.N), g.N)


def conjugate(f, g, g_inv=None):
    """g o f o g^{-1}; g_inv defaults to the inverse of a linear g."""
    if g_inv is None:
        g_inv = linear_inverse(g)
    return compose(g, compose(f, g_inv))
