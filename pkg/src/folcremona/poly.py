"""Sparse polynomials and rational functions in x, y, z, t over Q(zeta_N).

A :class:`MultiPoly` wraps a python-flint ``fmpq_mpoly`` in the variables
``w, x, y, z, t`` where ``w`` stands for zeta_N and is kept reduced modulo
the cyclotomic polynomial.  Every ring operation over Q[w, x, ...] followed by
that reduction is an operation over Q(zeta_N)[x, ...]; gcds and exact
divisions need genuine field arithmetic and are handled separately.

Terms are ordered graded-lexicographically with x < y < z < t.
"""

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd as igcd, isqrt

import flint

from .cyclotomic import (
    DEFAULT_CONDUCTOR,
    CycNumber,
    as_cyc,
    cyclotomic_poly,
    format_scalar,
    totient,
)
from .errors import ConductorMismatch, NotDivisible

VARIABLES = ("x", "y", "z", "t")
_CTX = flint.fmpq_mpoly_ctx.get(("w",) + VARIABLES, "lex")
_W, _X, _Y, _Z, _T = _CTX.gens()
_GENS = {"x": _X, "y": _Y, "z": _Z, "t": _T}
_ZERO = _CTX.from_dict({})
_VAR_INDEX = {v: k for k, v in enumerate(VARIABLES)}


def _fmpq(c):
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _frac(c):
    return Fraction(int(c.p), int(c.q))


@lru_cache(maxsize=None)
def _phi(N):
    return sum((c * _W ** m for m, c in enumerate(cyclotomic_poly(N)) if c), _ZERO)


def _wreduce(p, N):
    if p.is_zero() or p.degrees()[0] < totient(N):
        return p
    return divmod(p, _phi(N))[1]


def _cyc_to_flint(c):
    return sum((_fmpq(a) * _W ** m for m, a in enumerate(c.coords) if a), _ZERO)


def grlex_key(exps):
    """Sort key for exponent tuples (x, y, z, t); larger key means larger term."""
    return (sum(exps), exps[3], exps[2], exps[1], exps[0])


class MultiPoly:
    """Polynomial in x, y, z, t with coefficients in Q(zeta_N)."""

    __slots__ = ("N", "_p", "_terms")

    def __init__(self, terms=None, N=DEFAULT_CONDUCTOR):
        self.N = N
        self._terms = None
        if terms is None:
            self._p = _ZERO
            return
        if isinstance(terms, flint.fmpq_mpoly):
            self._p = _wreduce(terms, N)
            return
        raw = {}
        for exps, c in terms.items():
            exps = tuple(exps) + (0,) * (4 - len(exps))
            c = as_cyc(c, N)
            for m, a in enumerate(c.coords):
                if a:
                    raw[(m,) + exps] = _fmpq(a)
        self._p = _CTX.from_dict(raw)

    # -- construction ---------------------------------------------------
    @classmethod
    def _wrap(cls, p, N, reduce_w=True):
        obj = cls.__new__(cls)
        obj.N = N
        obj._terms = None
        obj._p = _wreduce(p, N) if reduce_w else p
        return obj

    @classmethod
    def gen(cls, name, N=DEFAULT_CONDUCTOR):
        return cls._wrap(_GENS[name], N, False)

    @classmethod
    def const(cls, c, N=DEFAULT_CONDUCTOR):
        return cls._wrap(_cyc_to_flint(as_cyc(c, N)), N, False)

    @classmethod
    def parse(cls, text, N=DEFAULT_CONDUCTOR):
        from .parsing import parse_polynomial
        return parse_polynomial(text, N)

    # -- inspection -----------------------------------------------------
    def terms(self):
        """Mapping from exponent tuples (x, y, z, t) to nonzero coefficients."""
        if self._terms is None:
            phi = totient(self.N)
            acc = {}
            for key, c in self._p.to_dict().items():
                coords = acc.setdefault(tuple(int(e) for e in key[1:]), [Fraction(0)] * phi)
                coords[int(key[0])] = _frac(c)
            self._terms = {e: CycNumber(v, self.N) for e, v in acc.items()}
        return self._terms

    def sorted_terms(self):
        return sorted(self.terms().items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def is_zero(self):
        return self._p.is_zero()

    def has_irrational_coefficients(self):
        return not self._p.is_zero() and self._p.degrees()[0] > 0

    def is_constant(self):
        return self._p.is_zero() or self._p.degrees()[1:] == (0, 0, 0, 0)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms().get((0, 0, 0, 0), CycNumber((), self.N))

    def leading_monomial(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms(), key=grlex_key)

    def leading_coefficient(self):
        if self.is_zero():
            return CycNumber((), self.N)
        return self.terms()[self.leading_monomial()]

    def monic(self):
        if self.is_zero():
            return self
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self * lc.inverse()

    def total_degree(self):
        if self.is_zero():
            return -1
        return max(sum(e) for e in self.terms())

    def degree(self, var):
        if self.is_zero():
            return -1
        return self._p.degrees()[1 + _VAR_INDEX[var]]

    def variables(self):
        degs = self._p.degrees()[1:] if not self.is_zero() else (0,) * 4
        return tuple(v for v, d in zip(VARIABLES, degs) if d > 0)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms()}) <= 1

    def homogeneous_part(self, d):
        return MultiPoly({e: c for e, c in self.terms().items() if sum(e) == d}, self.N)

    def coefficients_in(self, var):
        """List [p_0, p_1, ...] with self = sum p_k var^k."""
        k = _VAR_INDEX[var]
        parts = {}
        for e, c in self.terms().items():
            rest = list(e)
            rest[k] = 0
            parts.setdefault(e[k], {})[tuple(rest)] = c
        top = max(parts, default=-1)
        return [MultiPoly(parts.get(d, {}), self.N) for d in range(top + 1)]

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.N != self.N:
                raise ConductorMismatch(f"conductors {self.N} and {other.N} differ")
            return other._p
        if isinstance(other, CycNumber):
            if other.N != self.N:
                raise ConductorMismatch(f"conductors {self.N} and {other.N} differ")
            return _cyc_to_flint(other)
        if isinstance(other, (int, Fraction)):
            return _CTX.from_dict({(0,) * 5: _fmpq(other)}) if other else _ZERO
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly._wrap(self._p + o, self.N, False)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly._wrap(self._p - o, self.N, False)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly._wrap(o - self._p, self.N, False)

    def __neg__(self):
        return MultiPoly._wrap(-self._p, self.N, False)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly._wrap(self._p * o, self.N)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        if not self.has_irrational_coefficients():
            return MultiPoly._wrap(self._p ** k, self.N, False)
        acc, base = MultiPoly.const(1, self.N), self
        while k:
            if k & 1:
                acc = acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            return self * as_cyc(other, self.N).inverse()
        if isinstance(other, MultiPoly):
            return RationalFunction(self, other)
        if isinstance(other, RationalFunction):
            return RationalFunction(self, 1) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            return RationalFunction(MultiPoly.const(other, self.N), self)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.N == other.N and self._p == other._p
        if isinstance(other, (int, Fraction, CycNumber)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.N, str(self._p)))

    def __bool__(self):
        return not self.is_zero()

    # -- calculus and substitution -------------------------------------
    def derive(self, var):
        return MultiPoly._wrap(self._p.derivative(var), self.N, False)

    def substitute(self, mapping):
        """Simultaneous substitution {var: MultiPoly or scalar}."""
        images = [_W]
        for v in VARIABLES:
            if v in mapping:
                val = mapping[v]
                if not isinstance(val, MultiPoly):
                    val = MultiPoly.const(val, self.N)
                elif val.N != self.N:
                    raise ConductorMismatch(f"conductors {self.N} and {val.N} differ")
                images.append(val._p)
            else:
                images.append(_GENS[v])
        if not mapping:
            return self
        p = self._p.compose(*images, ctx=_CTX) if not self.is_zero() else self._p
        return MultiPoly._wrap(p, self.N)

    def __call__(self, **mapping):
        return self.substitute(mapping)

    def evaluate(self, point):
        """Value at a point given as {var: scalar}; all variables present must be assigned."""
        val = self.substitute(point)
        return val.constant_value()

    def galois(self, k):
        """Apply zeta -> zeta^k to every coefficient."""
        if not self.has_irrational_coefficients():
            return self
        p = self._p.compose(_W ** k, _X, _Y, _Z, _T, ctx=_CTX)
        return MultiPoly._wrap(p, self.N)

    def homogenize(self, var="z", degree=None):
        d = self.total_degree() if degree is None else degree
        k = _VAR_INDEX[var]
        out = {}
        for e, c in self.terms().items():
            if e[k]:
                raise ValueError(f"cannot homogenize with {var}: it already occurs")
            e2 = list(e)
            e2[k] = d - sum(e)
            if e2[k] < 0:
                raise ValueError("target degree below polynomial degree")
            out[tuple(e2)] = c
        return MultiPoly(out, self.N)

    def dehomogenize(self, var="z"):
        return self.substitute({var: 1})

    def embed(self, target):
        return MultiPoly({e: c.embed(target) for e, c in self.terms().items()}, target)

    # -- printing -------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({self}, N={self.N})"


def gens(N=DEFAULT_CONDUCTOR):
    """The generators x, y, z, t as polynomials over Q(zeta_N)."""
    return tuple(MultiPoly.gen(v, N) for v in VARIABLES)


def _monomial_str(e):
    parts = []
    for v, k in zip(VARIABLES, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def _scalar_sign_body(c):
    """(negative?, text of |c|) where |c| means c or -c, whichever prints without a sign."""
    s = format_scalar(c)
    if s.startswith("-"):
        return True, format_scalar(-c)
    return False, s


def format_poly(p):
    if p.is_zero():
        return "0"
    out = []
    for e, c in p.sorted_terms():
        neg, body = _scalar_sign_body(c)
        mono = _monomial_str(e)
        if not mono:
            text = body
        elif body == "1":
            text = mono
        else:
            text = f"{body}*{mono}"
        if not out:
            out.append("-" + text if neg else text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)


# --- exact division and gcd -------------------------------------------------

def _check_same(p, q):
    if p.N != q.N:
        raise ConductorMismatch(f"conductors {p.N} and {q.N} differ")


def _rational_divide(pf, qf):
    """Exact quotient in Q[w, x, ...] or None."""
    quo, rem = divmod(pf, qf)
    return None if not rem.is_zero() else quo


@lru_cache(maxsize=None)
def _units(N):
    return tuple(k for k in range(1, N + 1) if igcd(k, N) == 1)


def _norm_cofactor(q):
    """Product of the nontrivial Galois conjugates of q, and the norm q * that."""
    cof = MultiPoly.const(1, q.N)
    for k in _units(q.N)[1:]:
        cof = cof * q.galois(k)
    return cof, cof * q


def try_exact_div(p, q):
    """The quotient p / q if q divides p, else None."""
    _check_same(p, q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    if q.is_constant():
        return p * q.constant_value().inverse()
    if not q.has_irrational_coefficients():
        quo = _rational_divide(p._p, q._p)
        return None if quo is None else MultiPoly._wrap(quo, p.N, False)
    lc = q.leading_coefficient()
    qm = q * lc.inverse()
    if not qm.has_irrational_coefficients():
        quo = _rational_divide(p._p, qm._p)
        return None if quo is None else MultiPoly._wrap(quo, p.N, False) * lc.inverse()
    cof, norm = _norm_cofactor(q)
    if norm.has_irrational_coefficients():
        raise AssertionError("norm of a polynomial left the rationals")
    quo = _rational_divide((p * cof)._p, norm._p)
    return None if quo is None else MultiPoly._wrap(quo, p.N)


def exact_div(p, q):
    quo = try_exact_div(p, q)
    if quo is None:
        raise NotDivisible(f"{q} does not divide {p}")
    return quo


def _primes(N):
    """Primes P = 1 mod N just below 2^62, paired with a primitive N-th root of unity."""
    P = (2 ** 62 // N) * N + 1
    while True:
        P -= N
        if not flint.fmpz(P).is_prime():
            continue
        prime_divisors = {q for q in range(2, N + 1) if N % q == 0 and flint.fmpz(q).is_prime()}
        for a in range(2, 1000):
            r = pow(a, (P - 1) // N, P)
            if all(pow(r, N // q, P) != 1 for q in prime_divisors):
                yield P, r
                break


def _image(p, P, ctx, wval):
    """Reduction of p modulo P with w = wval, in an nmod context over (t, z, y, x)."""
    acc = {}
    for key, c in p._p.to_dict().items():
        num = int(c.p) % P
        den = int(c.q) % P
        if den == 0:
            return None
        v = num * pow(den, -1, P) * pow(wval, key[0], P) % P
        if v:
            e = (key[4], key[3], key[2], key[1])
            acc[e] = (acc.get(e, 0) + v) % P
    return ctx.from_dict({e: v for e, v in acc.items() if v})


def _inverse_mod_matrix(rows, P):
    n = len(rows)
    m = [list(r) + [int(i == k) for k in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next(k for k in range(c, n) if m[k][c] % P)
        m[c], m[piv] = m[piv], m[c]
        inv = pow(m[c][c], -1, P)
        m[c] = [v * inv % P for v in m[c]]
        for k in range(n):
            if k != c and m[k][c]:
                f = m[k][c]
                m[k] = [(a - f * b) % P for a, b in zip(m[k], m[c])]
    return [r[n:] for r in m]


def _ratrecon(a, m):
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or igcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _grlex_nmod_lm(g):
    # nmod context orders (t, z, y, x) deglex, which is our grlex
    return g.monoms()[0] if not g.is_zero() else None


def _modular_gcd(p, q):
    """gcd over Q(zeta_N) by evaluation at primitive roots modulo large primes."""
    N = p.N
    units = _units(N)
    phi = len(units)
    best_lm = None
    residues = {}
    modulus = 1
    for count, (P, r) in enumerate(_primes(N)):
        if count > 200:
            raise RuntimeError("modular gcd did not stabilise")
        ctx = flint.nmod_mpoly_ctx.get(("t", "z", "y", "x"), ordering="deglex", modulus=P)
        images = []
        ok = True
        for k in units:
            wk = pow(r, k, P)
            pi, qi = _image(p, P, ctx, wk), _image(q, P, ctx, wk)
            if pi is None or qi is None or pi.is_zero() or qi.is_zero():
                ok = False
                break
            images.append(pi.gcd(qi))
        if not ok:
            continue
        lms = {_grlex_nmod_lm(g) for g in images}
        if len(lms) != 1:
            continue
        lm = lms.pop()
        key = (sum(lm), lm)
        if best_lm is not None and key > best_lm:
            continue
        if best_lm is None or key < best_lm:
            best_lm = key
            residues = {}
            modulus = 1
        vinv = _inverse_mod_matrix([[pow(r, k * m, P) for m in range(phi)] for k in units], P)
        support = set()
        dicts = [g.to_dict() for g in images]
        for d in dicts:
            support.update(d)
        new = {}
        for mono in support:
            b = [int(d.get(mono, 0)) for d in dicts]
            new[mono] = [sum(vinv[m][k] * b[k] for k in range(phi)) % P for m in range(phi)]
        # Chinese remaindering
        if modulus == 1:
            residues = new
        else:
            inv = pow(modulus, -1, P)
            merged = {}
            for mono in set(residues) | set(new):
                old = residues.get(mono, [0] * phi)
                cur = new.get(mono, [0] * phi)
                merged[mono] = [o + modulus * ((c - o) * inv % P) for o, c in zip(old, cur)]
            residues = merged
        modulus *= P
        terms = {}
        failed = False
        for mono, vec in residues.items():
            coords = []
            for v in vec:
                fr = _ratrecon(v, modulus)
                if fr is None:
                    failed = True
                    break
                coords.append(fr)
            if failed:
                break
            e = (mono[3], mono[2], mono[1], mono[0])
            terms[e] = CycNumber(coords, N)
        if failed:
            continue
        cand = MultiPoly({e: c for e, c in terms.items() if c}, N)
        if cand.is_zero():
            continue
        if try_exact_div(p, cand) is not None and try_exact_div(q, cand) is not None:
            return cand.monic()
    raise RuntimeError("unreachable")


def gcd(p, q):
    """Greatest common divisor normalised to leading coefficient 1."""
    _check_same(p, q)
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.is_constant() or q.is_constant():
        return MultiPoly.const(1, p.N)
    if not p.has_irrational_coefficients() and not q.has_irrational_coefficients():
        return MultiPoly._wrap(p._p.gcd(q._p), p.N, False).monic()
    pm, qm = p.monic(), q.monic()
    if not pm.has_irrational_coefficients() and not qm.has_irrational_coefficients():
        return MultiPoly._wrap(pm._p.gcd(qm._p), p.N, False).monic()
    return _modular_gcd(p, q)


def gcd_many(polys):
    polys = list(polys)
    return reduce(gcd, polys[1:], polys[0].monic()) if polys else None


def resultant(p, q, var):
    """Sylvester resultant eliminating ``var``."""
    _check_same(p, q)
    if p.degree(var) < 1 or q.degree(var) < 1:
        raise ValueError(f"both polynomials must involve {var}")
    return MultiPoly._wrap(p._p.resultant(q._p, var), p.N)


def det3(m):
    """Cofactor expansion of a 3x3 matrix of polynomials."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def proportional(p, q):
    """True when p and q differ by a nonzero constant factor."""
    _check_same(p, q)
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    return p.monic() == q.monic()


def poly_arith(p, q, op, var=None):
    """Dispatch for the basic operations; ``q`` is the substituted value for 'substitute'."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "exact_div":
        return exact_div(p, q)
    if op == "substitute":
        return p.substitute({var: q})
    if op == "derive":
        return p.derive(var)
    raise ValueError(f"unknown operation {op!r}")


# --- square-free machinery --------------------------------------------------

def squarefree_decomposition(D):
    """Constant and factors [f_1, f_2, ...] with D = const * prod f_k^k, f_k squarefree, coprime.

    Works with the gcd of D and all its partial derivatives, which in
    characteristic zero removes exactly one copy of every irreducible factor.
    """
    if D.is_zero():
        raise ValueError("square-free decomposition of zero")
    if D.is_constant():
        return D.constant_value(), []
    g = D
    for v in D.variables():
        g = gcd(g, D.derive(v))
    w = exact_div(D, g)
    factors = []
    while not w.is_constant():
        y = gcd(w, g)
        factors.append(exact_div(w, y).monic())
        w = y
        g = exact_div(g, y)
    prod = MultiPoly.const(1, D.N)
    for k, f in enumerate(factors, start=1):
        prod = prod * f ** k
    const = exact_div(D, prod)
    assert const.is_constant()
    return const.constant_value(), factors


def perfect_square_decompose(D):
    """(kappa, s) with D = kappa * s^2 and s monic, or None when D is not a square over C."""
    if D.is_zero():
        raise ValueError("perfect-square test of the zero polynomial")
    kappa, factors = squarefree_decomposition(D)
    if any(not f.is_constant() for f in factors[0::2]):
        return None
    s = MultiPoly.const(1, D.N)
    for k, f in enumerate(factors, start=1):
        if k % 2 == 0:
            s = s * f ** (k // 2)
    s = s.monic()
    kappa = exact_div(D, s * s).constant_value()
    return kappa, s


# --- rational functions -----------------------------------------------------

class RationalFunction:
    """Reduced quotient num/den with den of leading coefficient 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, reduced=False):
        if not isinstance(num, MultiPoly):
            N = den.N if isinstance(den, MultiPoly) else DEFAULT_CONDUCTOR
            num = MultiPoly.const(num, N)
        if not isinstance(den, MultiPoly):
            den = MultiPoly.const(den, num.N)
        _check_same(num, den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            if num.is_zero():
                den = MultiPoly.const(1, num.N)
            else:
                g = gcd(num, den)
                if not g.is_constant():
                    num, den = exact_div(num, g), exact_div(den, g)
            lc = den.leading_coefficient()
            if lc != 1:
                inv = lc.inverse()
                num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @property
    def N(self):
        return self.num.N

    @classmethod
    def parse(cls, text, N=DEFAULT_CONDUCTOR):
        from .parsing import parse_expression
        val = parse_expression(text, N)
        return val if isinstance(val, RationalFunction) else RationalFunction(val)

    def is_polynomial(self):
        return self.den.is_constant()

    def as_polynomial(self):
        if not self.is_polynomial():
            raise NotDivisible(f"{self} is not a polynomial")
        return self.num * self.den.constant_value().inverse()

    def is_zero(self):
        return self.num.is_zero()

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (MultiPoly, int, Fraction, CycNumber)):
            if not isinstance(other, MultiPoly):
                other = MultiPoly.const(other, self.N)
            return RationalFunction(other, MultiPoly.const(1, self.N), reduced=True)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        # cross-cancel first to keep sizes down
        g1 = gcd(self.num, o.den)
        g2 = gcd(o.num, self.den)
        n = exact_div(self.num, g1) * exact_div(o.num, g2)
        d = exact_div(self.den, g2) * exact_div(o.den, g1)
        return RationalFunction(n, d, reduced=True)._normalise_den()

    __rmul__ = __mul__

    def _normalise_den(self):
        lc = self.den.leading_coefficient()
        if lc != 1:
            inv = lc.inverse()
            return RationalFunction(self.num * inv, self.den * inv, reduced=True)
        if self.num.is_zero():
            return RationalFunction(self.num, MultiPoly.const(1, self.N), reduced=True)
        return self

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num, reduced=True)._normalise_den()

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k, reduced=True)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def derive(self, var):
        n = self.num.derive(var) * self.den - self.num * self.den.derive(var)
        return RationalFunction(n, self.den * self.den)

    def substitute(self, mapping):
        """Substitute polynomials or rational functions for variables."""
        lifted = {v: self._lift(val) for v, val in mapping.items()}
        if all(r.is_polynomial() for r in lifted.values()):
            poly_map = {v: r.as_polynomial() for v, r in lifted.items()}
            return RationalFunction(self.num.substitute(poly_map), self.den.substitute(poly_map))
        return evaluate_rational(self.num, lifted) / evaluate_rational(self.den, lifted)

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if d.is_zero():
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.evaluate(point) / d

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms()) > 1:
            num = f"({num})"
        return f"{num}/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self}, N={self.N})"


def evaluate_rational(p, mapping):
    """p(x -> R_x, ...) for a polynomial p and rational-function images.

    Uses a common denominator D per variable so that only one division is
    performed: p(n/D) = P(n, D) / D^deg with the homogenised numerator.
    """
    N = p.N
    vars_ = [v for v in VARIABLES if v in mapping]
    if not vars_:
        return RationalFunction(p)
    den = MultiPoly.const(1, N)
    for v in vars_:
        d = mapping[v].den
        den = den * exact_div(d, gcd(den, d))
    nums = {v: mapping[v].num * exact_div(den, mapping[v].den) for v in vars_}
    deg = max(sum(e[_VAR_INDEX[v]] for v in vars_) for e in p.terms()) if not p.is_zero() else 0
    out = MultiPoly(None, N)
    powers = {}
    for e, c in p.terms().items():
        k = sum(e[_VAR_INDEX[v]] for v in vars_)
        term = MultiPoly.const(c, N)
        rest = {}
        for v in VARIABLES:
            if v in mapping:
                term = term * _cached_pow(powers, ("n", v), nums[v], e[_VAR_INDEX[v]])
            elif e[_VAR_INDEX[v]]:
                rest[v] = e[_VAR_INDEX[v]]
        if rest:
            term = term * MultiPoly({tuple(rest.get(v, 0) for v in VARIABLES): 1}, N)
        term = term * _cached_pow(powers, ("d",), den, deg - k)
        out = out + term
    return RationalFunction(out, den ** deg)


def _cached_pow(cache, key, base, k):
    if k == 0:
        return MultiPoly.const(1, base.N)
    ck = key + (k,)
    if ck not in cache:
        cache[ck] = base ** k
    return cache[ck]
