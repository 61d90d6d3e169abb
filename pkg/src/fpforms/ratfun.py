"""Rational functions over F_p with p-th-power denominators.

Any quotient P/Q can be rewritten with a denominator that is a p-th power:

    P/Q = (P * Q^(p-1)) / Q^p

and Q^p has every exponent divisible by p, so every partial derivative of
the denominator vanishes.  Derivatives of a RatFun therefore act on the
numerator alone, which keeps the differential calculus of rational
coefficients exactly as cheap as the polynomial one.

The constructor normalizes: a denominator that is already a differential
constant (all exponents divisible by p) is kept as given, anything else is
inflated by the identity above.  No reduction to lowest terms is attempted;
equality is decided by cross multiplication.
"""

from __future__ import annotations

from .errors import ZeroDenominator
from .poly import MultiPoly
from .scalar import Scalar


class RatFun:
    """A quotient num/den with differential-constant denominator.

    >>> from .poly import variables
    >>> (z,) = variables(3, 1)
    >>> print(RatFun(MultiPoly.constant(3, 1, 1), z))
    (z1^2)/(z1^3)
    >>> print(RatFun(z * z, z ** 3).partial(1))
    (2*z1)/(z1^3)
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if not isinstance(num, MultiPoly):
            raise TypeError("numerator must be a MultiPoly")
        if den is None:
            den = MultiPoly.constant(num.p, num.n, 1)
        if not isinstance(den, MultiPoly):
            raise TypeError("denominator must be a MultiPoly")
        num._check(den)
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        if num.is_zero():
            den = MultiPoly.constant(num.p, num.n, 1)
        elif not den.is_differential_constant():
            num = num * den ** (num.p.p - 1)
            den = den ** num.p.p
        self.num = num
        self.den = den

    # ------------------------------------------------------------------
    # structure

    @property
    def p(self):
        return self.num.p

    @property
    def n(self):
        return self.num.n

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        """True when the value lies in F_p, i.e. num = c * den."""
        if self.num.is_zero():
            return True
        exps, a = next(iter(self.den.terms.items()))
        b = self.num.coefficient(exps)
        if b == 0:
            return False
        c = b * pow(a, self.p.p - 2, self.p.p) % self.p.p
        return self.num == self.den * c

    def is_differential_constant(self) -> bool:
        # d(num/den) = d(num)/den because the denominator is constant
        # under every partial, so only the numerator matters.
        return self.num.is_differential_constant()

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, MultiPoly):
            return RatFun(other)
        if isinstance(other, (int, Scalar)):
            return RatFun(MultiPoly.constant(self.p, self.n, int(other)))
        return None

    # ------------------------------------------------------------------
    # field operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDenominator("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFun is unhashable; equality is by cross multiplication")

    # ------------------------------------------------------------------
    # differential operations

    def partial(self, i: int) -> "RatFun":
        return RatFun(self.num.partial(i), self.den)

    def partial_pow(self, i: int, k: int) -> "RatFun":
        return RatFun(self.num.partial_pow(i, k), self.den)

    def partial_pow_fast(self, i: int, k: int) -> "RatFun":
        return RatFun(self.num.partial_pow_fast(i, k), self.den)

    def partial_multi(self, index) -> "RatFun":
        return RatFun(self.num.partial_multi(index), self.den)

    def substitute_pth(self) -> "RatFun":
        return RatFun(self.num.substitute_pth(), self.den.substitute_pth())

    def to_polynomial(self) -> MultiPoly:
        """The underlying polynomial when den is a nonzero constant."""
        if not self.den.is_constant():
            raise ValueError("denominator %s is not constant" % self.den)
        c = self.den.constant_value()
        return self.num * pow(c, self.p.p - 2, self.p.p)

    def __str__(self):
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "RatFun(p=%d, n=%d, %s)" % (self.p.p, self.n, self)


def make_ratfun(num: MultiPoly, den: MultiPoly) -> RatFun:
    """The quotient num/den in normal form.

    The denominator is replaced by a p-th power unless it already is a
    differential constant:

    >>> from .poly import variables
    >>> (z,) = variables(3, 1)
    >>> print(make_ratfun(MultiPoly.constant(3, 1, 1), z))
    (z1^2)/(z1^3)
    >>> print(make_ratfun(MultiPoly.constant(3, 1, 1), z ** 3))
    (1)/(z1^3)
    """
    return RatFun(num, den)


def rat_partial(f: RatFun, i: int) -> RatFun:
    """Partial derivative of a rational function; acts on the numerator."""
    return f.partial(i)


def clear_denominators(form):
    """Rewrite a rational form as (lam, omega') with omega' polynomial.

    lam is the product of the distinct nontrivial denominators appearing in
    the form (deduplicated by equality), and omega' = lam * form coefficient
    by coefficient.  lam is itself a differential constant, so multiplying
    by it preserves closedness, p-closedness and exactness in both
    directions.  Polynomial input comes back unchanged with lam = 1.
    """
    one = MultiPoly.constant(form.p, form.n, 1)
    dens: list[MultiPoly] = []
    for coeff in form.terms.values():
        if isinstance(coeff, RatFun) and not coeff.den.is_constant():
            if not any(coeff.den == d for d in dens):
                dens.append(coeff.den)
    if not dens:
        out = {}
        for index, coeff in form.terms.items():
            out[index] = coeff.to_polynomial() if isinstance(coeff, RatFun) else coeff
        return one, form._with_terms(out)
    lam = one
    for d in dens:
        lam = lam * d
    out = {}
    for index, coeff in form.terms.items():
        if isinstance(coeff, RatFun):
            cof = one
            matched = False
            for d in dens:
                if not matched and coeff.den == d:
                    matched = True
                    continue
                cof = cof * d
            if not matched:
                # denominator was constant; fold it into the numerator
                scaled = coeff.to_polynomial()
                out[index] = scaled * lam
                continue
            out[index] = coeff.num * cof
        else:
            out[index] = coeff * lam
    return lam, form._with_terms(out)
