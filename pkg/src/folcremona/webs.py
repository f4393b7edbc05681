"""Abelian relations for 3-webs built from a first integral and a trivolution.

Given rational functions f0, f1, f2 the search is for constants with
a0 f0 + a1 f1 + a2 f2 = 0.  Everything is brought to one denominator, after
which the condition is linear in the coefficients of the numerators.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .birational import BirationalMap, compose
from .errors import DegenerateInput
from .linalg import nullspace
from .poly import MultiPoly, RationalFunction, exact_div, gcd


def _rational(f):
    return f if isinstance(f, RationalFunction) else RationalFunction(f)


def pullback(f, T):
    """The reduced rational function f o T."""
    f = _rational(f)
    I1, I2 = T.affine()
    out = f.substitute({"x": I1, "y": I2})
    if not isinstance(out, RationalFunction):
        out = RationalFunction(out)
    return out


@dataclass
class WebTriple:
    f0: RationalFunction
    f1: RationalFunction
    f2: RationalFunction
    provenance: Optional[Tuple[RationalFunction, BirationalMap]] = None

    def __post_init__(self):
        self.f0, self.f1, self.f2 = (_rational(f) for f in (self.f0, self.f1, self.f2))
        fs = self.functions()
        for i in range(3):
            for j in range(i + 1, 3):
                if _proportional(fs[i], fs[j]):
                    raise DegenerateInput(f"f{i} and f{j} are proportional")

    @classmethod
    def from_map(cls, f0, T):
        """(f0, f0 o T, f0 o T^2)."""
        f0 = _rational(f0)
        T2 = compose(T, T)
        return cls(f0, pullback(f0, T), pullback(f0, T2), provenance=(f0, T))

    @classmethod
    def from_numerators(cls, numerators, denominator=None):
        """Three numerators over one shared denominator (1 when omitted)."""
        if denominator is None:
            denominator = MultiPoly.const(1, numerators[0].N)
        return cls(*(RationalFunction(n, denominator) for n in numerators))

    def functions(self):
        return (self.f0, self.f1, self.f2)


def _proportional(f, g):
    if f.is_zero() or g.is_zero():
        return True
    q = f / g
    return q.num.is_constant() and q.den.is_constant()


def common_numerators(fs):
    """Numerators of the f_i over the lcm of their denominators."""
    den = fs[0].den
    for f in fs[1:]:
        den = den * exact_div(f.den, gcd(den, f.den))
    return [f.num * exact_div(den, f.den) for f in fs], den


def abelian_relation(w):
    """Constants (a0, a1, a2), first nonzero one equal to 1, or None."""
    fs = w.functions()
    nums, _ = common_numerators(fs)
    N = fs[0].N
    monomials = sorted(set().union(*(n.terms() for n in nums)))
    zero = MultiPoly.const(0, N).constant_value()
    rows = [[n.terms().get(m, zero) for n in nums] for m in monomials]
    if not rows:
        return None
    kernel = nullspace(rows, N)
    if not kernel:
        return None
    return tuple(kernel[0])


def relation_residual(w, coeffs):
    """a0 f0 + a1 f1 + a2 f2 as a polynomial over the common denominator."""
    nums, _ = common_numerators(w.functions())
    out = MultiPoly(None, nums[0].N)
    for a, n in zip(coeffs, nums):
        out = out + n * a
    return out
