"""Exact arithmetic in the cyclotomic field Q(zeta_N).

An element is stored by its coordinates on the power basis
``1, zeta, ..., zeta^(phi(N)-1)``, reduced modulo the N-th cyclotomic
polynomial, so that equality is coordinate-wise.  Rationals are
:class:`fractions.Fraction` and are normalised eagerly.

The default conductor is 12, which contains ``i``, ``j = exp(2 i pi / 3)``,
``sqrt(3)`` and ``sqrt(-3)``.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

import flint

from .errors import ConductorMismatch

DEFAULT_CONDUCTOR = 12

BigRational = Fraction


@lru_cache(maxsize=None)
def totient(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _int_exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _int_exact_div(num, den):
    # den is monic
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dn]
        quot[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    assert not any(num[:dn])
    return quot


@lru_cache(maxsize=None)
def _power_table(n):
    """Reduced coordinates of zeta^m for 0 <= m < n."""
    phi = totient(n)
    cyc = cyclotomic_poly(n)
    table = []
    vec = [0] * phi
    vec[0] = 1
    for _ in range(n):
        table.append(tuple(vec))
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for k in range(phi):
                vec[k] -= top * cyc[k]
    return tuple(table)


def _reduce(coeffs, n):
    """Reduce a coefficient list in zeta (any length) to phi(n) coordinates."""
    phi = totient(n)
    out = [Fraction(0)] * phi
    table = None
    for m, c in enumerate(coeffs):
        if not c:
            continue
        if m < phi:
            out[m] += c
            continue
        if table is None:
            table = _power_table(n)
        vec = table[m % n]
        for k in range(phi):
            if vec[k]:
                out[k] += c * vec[k]
    return tuple(out)


# --- univariate helpers over Q, lists lowest degree first -----------------

def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _qdivmod(a, b):
    a = _trim([Fraction(c) for c in a])
    b = _trim([Fraction(c) for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            a[k + i] -= c * bc
        a.pop()
        _trim(a)
    return _trim(q), a


def _qmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ac in enumerate(a):
        if ac:
            for k, bc in enumerate(b):
                out[i + k] += ac * bc
    return out


def _qsub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([Fraction(x) - y for x, y in zip(a, b)])


class CycNumber:
    """Element of Q(zeta_N) on the reduced power basis."""

    __slots__ = ("N", "coords")

    def __init__(self, coords=(), N=DEFAULT_CONDUCTOR):
        if isinstance(coords, (int, Fraction)):
            coords = (coords,)
        coords = [Fraction(c) for c in coords]
        if len(coords) > totient(N):
            coords = _reduce(coords, N)
        else:
            coords = coords + [Fraction(0)] * (totient(N) - len(coords))
        self.N = N
        self.coords = tuple(coords)

    # -- constructors ---------------------------------------------------
    @classmethod
    def zeta(cls, N=DEFAULT_CONDUCTOR, k=1):
        return cls(_power_table(N)[k % N], N)

    @classmethod
    def i(cls, N=DEFAULT_CONDUCTOR):
        if N % 4:
            raise ValueError(f"i is not in Q(zeta_{N})")
        return cls.zeta(N, N // 4)

    @classmethod
    def j(cls, N=DEFAULT_CONDUCTOR):
        if N % 3:
            raise ValueError(f"j is not in Q(zeta_{N})")
        return cls.zeta(N, N // 3)

    @classmethod
    def from_coords_str(cls, text, N=DEFAULT_CONDUCTOR):
        parts = [Fraction(s.strip()) for s in text.split(",")]
        if len(parts) != totient(N):
            raise ValueError(f"expected {totient(N)} coordinates, got {len(parts)}")
        return cls(parts, N)

    @classmethod
    def parse(cls, text, N=DEFAULT_CONDUCTOR):
        from .parsing import parse_scalar
        return parse_scalar(text, N)

    # -- predicates -----------------------------------------------------
    def is_zero(self):
        return not any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycNumber):
            if other.N != self.N:
                raise ConductorMismatch(f"conductors {self.N} and {other.N} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber((other,), self.N)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNumber([a + b for a, b in zip(self.coords, other.coords)], self.N)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber([-a for a in self.coords], self.N)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNumber([a - b for a, b in zip(self.coords, other.coords)], self.N)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_rational():
            c = other.coords[0]
            return CycNumber([a * c for a in self.coords], self.N)
        if self.is_rational():
            c = self.coords[0]
            return CycNumber([c * b for b in other.coords], self.N)
        return CycNumber(_reduce(_qmul(self.coords, other.coords), self.N), self.N)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        if self.is_rational():
            return CycNumber((1 / self.coords[0],), self.N)
        # extended Euclid: s*a + t*Phi = g, g a nonzero constant
        r0, r1 = [Fraction(c) for c in cyclotomic_poly(self.N)], _trim(list(self.coords))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _qdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qsub(s0, _qmul(q, s1))
        c = r1[0]
        return CycNumber([a / c for a in s1], self.N)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        acc, base = CycNumber((1,), self.N), self
        while k:
            if k & 1:
                acc = acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def __eq__(self, other):
        if isinstance(other, CycNumber):
            return self.N == other.N and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.N, self.coords))

    def __bool__(self):
        return not self.is_zero()

    # -- Galois action and embeddings ----------------------------------
    def galois(self, k):
        """Image under the automorphism zeta -> zeta^k, gcd(k, N) = 1."""
        if gcd(k, self.N) != 1:
            raise ValueError(f"{k} is not a unit modulo {self.N}")
        table = _power_table(self.N)
        out = [Fraction(0)] * totient(self.N)
        for m, c in enumerate(self.coords):
            if c:
                vec = table[(m * k) % self.N]
                for q in range(len(out)):
                    out[q] += c * vec[q]
        return CycNumber(out, self.N)

    def conjugate(self):
        return self.galois(-1 % self.N)

    def embed(self, target):
        return cyc_embed(self.N, target, self)

    # -- printing -------------------------------------------------------
    def coords_str(self):
        return ",".join(str(c) for c in self.coords)

    def __repr__(self):
        return f"CycNumber({self}, N={self.N})"

    def __str__(self):
        return format_scalar(self)


def cyc_arith(a, b, op):
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two field elements."""
    if not isinstance(a, CycNumber) or not isinstance(b, CycNumber):
        raise TypeError("cyc_arith expects two CycNumber operands")
    if a.N != b.N:
        raise ConductorMismatch(f"conductors {a.N} and {b.N} differ")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def cyc_embed(n, target, a):
    """Image of ``a`` in Q(zeta_target) under zeta_n -> zeta_target^(target/n)."""
    if target % n:
        raise ConductorMismatch(f"{n} does not divide {target}")
    if a.N != n:
        raise ConductorMismatch(f"element has conductor {a.N}, not {n}")
    step = target // n
    spread = [Fraction(0)] * (step * (len(a.coords) - 1) + 1)
    for m, c in enumerate(a.coords):
        spread[m * step] = c
    return CycNumber(_reduce(spread, target), target)


def as_cyc(value, N):
    if isinstance(value, CycNumber):
        if value.N != N:
            raise ConductorMismatch(f"conductors {value.N} and {N} differ")
        return value
    return CycNumber((value,), N)


# --- pretty printing --------------------------------------------------------

def _solve_rational(columns, target):
    """Rational solution c of sum c_k * columns[k] = target, or None."""
    rows = len(target)
    m = [[Fraction(col[r]) for col in columns] + [Fraction(target[r])] for r in range(rows)]
    ncol = len(columns)
    piv_cols = []
    r = 0
    for c in range(ncol):
        piv = next((k for k in range(r, rows) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for k in range(rows):
            if k != r and m[k][c]:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        piv_cols.append(c)
        r += 1
    if any(m[k][-1] for k in range(r, rows)):
        return None
    sol = [Fraction(0)] * ncol
    for k, c in enumerate(piv_cols):
        sol[c] = m[k][-1]
    return sol


@lru_cache(maxsize=None)
def _named_basis(N):
    """Basis names and elements used for readable printing in Q(zeta_N)."""
    names = []
    if N % 3 == 0:
        names.append(("j", CycNumber.j(N)))
    if N % 4 == 0:
        names.append(("i", CycNumber.i(N)))
    if N % 12 == 0:
        names.append(("i*j", CycNumber.i(N) * CycNumber.j(N)))
    return tuple(names)


def _fmt_rat(q):
    return str(q)


def format_scalar(a):
    """Readable, parseable text for a field element."""
    if a.is_rational():
        return _fmt_rat(a.coords[0])
    basis = _named_basis(a.N)
    parts = None
    if basis:
        cols = [CycNumber((1,), a.N).coords] + [b.coords for _, b in basis]
        sol = _solve_rational(cols, a.coords)
        if sol is not None:
            parts = [(sol[0], "")] + [(s, name) for s, (name, _) in zip(sol[1:], basis)]
    if parts is None:
        parts = [(c, "" if m == 0 else (f"zeta({a.N})" if m == 1 else f"zeta({a.N})^{m}"))
                 for m, c in enumerate(a.coords)]
    terms = [(c, name) for c, name in parts if c]
    if len(terms) == 1:
        c, name = terms[0]
        if c == 1:
            return name
        if c == -1:
            return "-" + name
        return f"{_fmt_rat(c)}*{name}"
    out = []
    for c, name in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not name:
            body = _fmt_rat(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{_fmt_rat(mag)}*{name}"
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "(" + "".join(out) + ")"


# --- square roots -----------------------------------------------------------

def _upoly_trim(p):
    while p and p[-1].is_zero():
        p.pop()
    return p


def _upoly_rem(a, b):
    a = list(a)
    lead_inv = b[-1].inverse()
    while len(a) >= len(b):
        c = a[-1] * lead_inv
        k = len(a) - len(b)
        for i, bc in enumerate(b):
            a[k + i] = a[k + i] - c * bc
        a.pop()
        _upoly_trim(a)
    return a


def _upoly_gcd(a, b):
    a, b = _upoly_trim(list(a)), _upoly_trim(list(b))
    while b:
        a, b = b, _upoly_rem(a, b)
    inv = a[-1].inverse()
    return [c * inv for c in a]


_NORM_CTX = flint.fmpq_mpoly_ctx.get(("w", "Y"), "lex")


def _norm_of_shifted_square(kappa, shift):
    """Norm from K to Q of (Y - shift*zeta)^2 - kappa, as an fmpq_poly in Y."""
    w, Y = _NORM_CTX.gens()
    k = sum((flint.fmpq(c.numerator, c.denominator) * w ** m for m, c in enumerate(kappa.coords)),
            _NORM_CTX.from_dict({}))
    f = (Y - shift * w) ** 2 - k
    cyc = sum((c * w ** m for m, c in enumerate(cyclotomic_poly(kappa.N))), _NORM_CTX.from_dict({}))
    res = cyc.resultant(f, "w")
    coeffs = [flint.fmpq(0)] * (res.degrees()[1] + 1)
    for (_, e), c in res.to_dict().items():
        coeffs[e] = c
    return flint.fmpq_poly(coeffs)


def field_sqrt(a):
    """A square root of ``a`` inside Q(zeta_N), or None if there is none.

    Trager-style: factor the norm of a shifted ``Y^2 - a`` over Q and take
    gcds over the field until a linear factor shows up.
    """
    N = a.N
    if a.is_zero():
        return a
    if a.is_rational():
        q = a.coords[0]
        if q > 0:
            rn, rd = flint.fmpz(q.numerator).sqrtrem(), flint.fmpz(q.denominator).sqrtrem()
            if rn[1] == 0 and rd[1] == 0:
                return CycNumber((Fraction(int(rn[0]), int(rd[0])),), N)
    z = CycNumber.zeta(N)
    for shift in range(0, 8):
        norm = _norm_of_shifted_square(a, shift)
        if norm.gcd(norm.derivative()).degree() > 0:
            continue
        sh = z * shift
        # f(Y) = (Y - sh)^2 - a
        f = [sh * sh - a, -2 * sh, CycNumber((1,), N)]
        for fac, _ in norm.factor()[1]:
            if fac.degree() > totient(N):
                continue
            h = [CycNumber((Fraction(int(c.p), int(c.q)),), N) for c in fac.coeffs()]
            g = _upoly_gcd(f, h)
            if len(g) == 2:
                root = -g[0] - sh
                if root * root == a:
                    return root
        return None
    raise RuntimeError("no squarefree shift found")
