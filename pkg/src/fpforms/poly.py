"""Sparse multivariate polynomials over F_p with their differential structure.

A polynomial in variables z1..zn is a mapping from exponent vectors (tuples
of n nonnegative ints) to nonzero residues in 1..p-1.  The zero polynomial
is the empty mapping.  No term order is maintained beyond a canonical sorted
iteration order fixed at construction, and no simplification ever happens
besides dropping zero coefficients: what you build is what you keep.

The differential structure is where characteristic p bites:

* partial(i) kills every monomial whose z_i-exponent is divisible by p,
  so the kernel of all partials is the subring of p-th powers K[z^p]
  rather than the constants;
* partial_pow(i, p-1) applied to z_i^(p-1) gives (p-1)! = -1 (Wilson),
  the single obstruction that drives everything downstream;
* antiderivative(i) inverts partial(i) and is obstructed exactly on
  monomials with z_i-exponent = p-1 (mod p);
* frobenius_decompose splits f into sum g_E * z^E over residue patterns
  E in {0..p-1}^n, with every g_E a p-th-power-exponent polynomial.

Per-variable exponents are capped by a module-wide limit (default 64) so
that runaway constructions, for example denominators raised to a huge
characteristic, fail fast with DegreeOverflow instead of exhausting memory.
"""

from __future__ import annotations

from .errors import (
    ArityMismatch,
    DegreeOverflow,
    DivisionByZero,
    IndexOutOfRange,
    NotPthPower,
    ObstructedAntiderivative,
    PrimeMismatch,
)
from .scalar import Prime, Scalar, inv_mod

DEFAULT_MAX_DEGREE = 64

_max_degree = DEFAULT_MAX_DEGREE


def set_max_degree(limit: int) -> int:
    """Set the per-variable exponent cap; returns the previous cap."""
    global _max_degree
    if not isinstance(limit, int) or limit < 1:
        raise ValueError("degree limit must be a positive integer")
    old = _max_degree
    _max_degree = limit
    return old


def max_degree_limit() -> int:
    return _max_degree


def monomial_text(exps, coeff=1) -> str:
    """Canonical text of coeff * z^exps, e.g. '2*z1^2*z3'."""
    parts = []
    if coeff != 1 or not any(exps):
        parts.append(str(coeff))
    for i, e in enumerate(exps, start=1):
        if e == 0:
            continue
        parts.append("z%d" % i if e == 1 else "z%d^%d" % (i, e))
    return "*".join(parts)


class MultiPoly:
    """A sparse polynomial over F_p in n variables.

    Treat instances as immutable; all operations return new objects.

    >>> x, y = variables(3, 2)
    >>> print((x + 1) * (x + 2))
    z1^2 + 2
    >>> print((x * y).partial_multi((1, 2)))
    0
    """

    __slots__ = ("p", "n", "terms")

    def __init__(self, p, n, terms=None):
        p = Prime(p)
        if not isinstance(n, int) or n < 1:
            raise ArityMismatch("need at least one variable, got n=%r" % (n,))
        self.p = p
        self.n = n
        clean = {}
        limit = _max_degree
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n:
                    raise ArityMismatch(
                        "exponent vector %r has length %d, expected %d"
                        % (exps, len(exps), n)
                    )
                for i, e in enumerate(exps, start=1):
                    if not isinstance(e, int) or e < 0:
                        raise ValueError("bad exponent %r for z%d" % (e, i))
                    if e > limit:
                        raise DegreeOverflow(
                            "exponent %d of z%d exceeds the degree limit %d"
                            % (e, i, limit)
                        )
                c = int(c) % p.p
                if c:
                    clean[exps] = (clean.get(exps, 0) + c) % p.p
                    if not clean[exps]:
                        del clean[exps]
        self.terms = dict(sorted(clean.items()))

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, p, n) -> "MultiPoly":
        return cls(p, n, {})

    @classmethod
    def constant(cls, p, n, c) -> "MultiPoly":
        return cls(p, n, {(0,) * n: c})

    @classmethod
    def monomial(cls, p, n, exps, c=1) -> "MultiPoly":
        return cls(p, n, {tuple(exps): c})

    @classmethod
    def variable(cls, p, n, i) -> "MultiPoly":
        if not 1 <= i <= n:
            raise IndexOutOfRange("variable z%d outside 1..%d" % (i, n))
        exps = [0] * n
        exps[i - 1] = 1
        return cls(p, n, {tuple(exps): 1})

    # ------------------------------------------------------------------
    # structure

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.n}

    def constant_value(self) -> int:
        """The residue c for a constant polynomial; errors otherwise."""
        if not self.is_constant():
            raise ValueError("not a constant polynomial: %s" % self)
        return self.terms.get((0,) * self.n, 0)

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def max_var_degree(self) -> int:
        """Largest exponent of any variable in any monomial (0 if zero)."""
        best = 0
        for exps in self.terms:
            m = max(exps)
            if m > best:
                best = m
        return best

    def _check(self, other):
        if self.p != other.p:
            raise PrimeMismatch(
                "mixed characteristics %d and %d" % (self.p.p, other.p.p)
            )
        if self.n != other.n:
            raise ArityMismatch(
                "mixed variable counts %d and %d" % (self.n, other.n)
            )

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other):
        if isinstance(other, (int, Scalar)):
            other = MultiPoly.constant(self.p, self.n, int(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        p = self.p.p
        out = dict(self.terms)
        for exps, c in other.terms.items():
            v = (out.get(exps, 0) + c) % p
            if v:
                out[exps] = v
            elif exps in out:
                del out[exps]
        return MultiPoly(self.p, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.p.p
        return MultiPoly(self.p, self.n, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Scalar)):
            other = MultiPoly.constant(self.p, self.n, int(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            c = int(other) % self.p.p
            if c == 0:
                return MultiPoly.zero(self.p, self.n)
            return MultiPoly(
                self.p, self.n, {e: v * c for e, v in self.terms.items()}
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        p = self.p.p
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = (out.get(e, 0) + c1 * c2) % p
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return MultiPoly(self.p, self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a nonnegative int")
        out = MultiPoly.constant(self.p, self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Scalar)):
            other = MultiPoly.constant(self.p, self.n, int(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.p == other.p and self.n == other.n and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.p.p, self.n, tuple(self.terms.items())))

    # ------------------------------------------------------------------
    # differential operations

    def _check_var(self, i):
        if not isinstance(i, int) or not 1 <= i <= self.n:
            raise IndexOutOfRange("variable z%r outside 1..%d" % (i, self.n))

    def partial(self, i: int) -> "MultiPoly":
        """Formal partial derivative with respect to z_i."""
        self._check_var(i)
        p = self.p.p
        out = {}
        k = i - 1
        for exps, c in self.terms.items():
            m = exps[k]
            v = c * (m % p) % p
            if v:
                e = exps[:k] + (m - 1,) + exps[k + 1 :]
                out[e] = (out.get(e, 0) + v) % p
        return MultiPoly(self.p, self.n, out)

    def partial_pow(self, i: int, k: int) -> "MultiPoly":
        """k-fold partial derivative, computed by naive iteration.

        This is the ground-truth route; partial_pow_fast must agree with it
        bit for bit.  Iteration stops as soon as the result vanishes, and
        partial(i)^p = 0 identically, so k may be large.
        """
        self._check_var(i)
        if not isinstance(k, int) or k < 0:
            raise ValueError("derivative order must be a nonnegative int")
        if k >= self.p.p:
            return MultiPoly.zero(self.p, self.n)
        out = self
        for _ in range(k):
            if out.is_zero():
                break
            out = out.partial(i)
        return out

    def partial_pow_fast(self, i: int, k: int) -> "MultiPoly":
        """k-fold partial derivative via falling-factorial coefficients.

        For a monomial z_i^m the k-th derivative is m(m-1)...(m-k+1)
        z_i^(m-k); the product is taken mod p and the term dies when k > m.
        """
        self._check_var(i)
        if not isinstance(k, int) or k < 0:
            raise ValueError("derivative order must be a nonnegative int")
        if k >= self.p.p:
            return MultiPoly.zero(self.p, self.n)
        if k == 0:
            return self
        p = self.p.p
        out = {}
        j = i - 1
        for exps, c in self.terms.items():
            m = exps[j]
            if k > m:
                continue
            ff = 1
            for t in range(k):
                ff = ff * ((m - t) % p) % p
                if ff == 0:
                    break
            v = c * ff % p
            if v:
                e = exps[:j] + (m - k,) + exps[j + 1 :]
                out[e] = (out.get(e, 0) + v) % p
        return MultiPoly(self.p, self.n, out)

    def partial_multi(self, index) -> "MultiPoly":
        """Product of (p-1)-fold partials over the variables in index.

        The operators commute, so the order of index does not matter.
        Uses the falling-factorial route, which partial_pow cross-checks.
        """
        out = self
        k = self.p.p - 1
        for i in index:
            if out.is_zero():
                break
            out = out.partial_pow_fast(i, k)
        return out

    def antiderivative(self, i: int) -> "MultiPoly":
        """Formal antiderivative in z_i with integration constant 0.

        Raises ObstructedAntiderivative on any monomial whose z_i-exponent
        is = p-1 (mod p): those are exactly the monomials outside the image
        of partial(i).
        """
        self._check_var(i)
        p = self.p.p
        out = {}
        j = i - 1
        for exps, c in self.terms.items():
            m = exps[j]
            if m % p == p - 1:
                raise ObstructedAntiderivative(
                    "monomial %s has z%d-exponent %d = p-1 (mod %d)"
                    % (monomial_text(exps, c), i, m, p)
                )
            v = c * inv_mod(m + 1, p) % p
            e = exps[:j] + (m + 1,) + exps[j + 1 :]
            out[e] = v
        return MultiPoly(self.p, self.n, out)

    def is_differential_constant(self) -> bool:
        """True when every partial derivative vanishes, i.e. f lies in K[z^p]."""
        p = self.p.p
        return all(e % p == 0 for exps in self.terms for e in exps)

    def frobenius_decompose(self):
        """Split f as sum over residue patterns E of g_E * z^E.

        Returns a dict mapping each pattern E in {0..p-1}^n to the
        differential-constant polynomial g_E.  Reassembling via
        sum(g_E * z^E) recovers f exactly.

        >>> p3 = Prime(3)
        >>> f = MultiPoly(p3, 2, {(4, 1): 1})
        >>> {pat: str(g) for pat, g in f.frobenius_decompose().items()}
        {(1, 1): 'z1^3'}
        """
        p = self.p.p
        out = {}
        for exps, c in self.terms.items():
            pattern = tuple(e % p for e in exps)
            base = tuple(e - r for e, r in zip(exps, pattern))
            bucket = out.setdefault(pattern, {})
            bucket[base] = c
        return {
            pattern: MultiPoly(self.p, self.n, bucket)
            for pattern, bucket in sorted(out.items())
        }

    def substitute_pth(self) -> "MultiPoly":
        """f(z1..zn) -> f(z1^p..zn^p); may raise DegreeOverflow."""
        p = self.p.p
        return MultiPoly(
            self.p,
            self.n,
            {tuple(e * p for e in exps): c for exps, c in self.terms.items()},
        )

    def unsubstitute_pth(self) -> "MultiPoly":
        """Inverse of substitute_pth; needs every exponent divisible by p."""
        p = self.p.p
        out = {}
        for exps, c in self.terms.items():
            if any(e % p for e in exps):
                raise NotPthPower(
                    "monomial %s is not a p-th power (p=%d)"
                    % (monomial_text(exps, c), p)
                )
            out[tuple(e // p for e in exps)] = c
        return MultiPoly(self.p, self.n, out)

    # ------------------------------------------------------------------
    # presentation

    def __str__(self):
        if not self.terms:
            return "0"
        ordered = sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)
        return " + ".join(monomial_text(e, c) for e, c in ordered)

    def __repr__(self):
        return "MultiPoly(p=%d, n=%d, %s)" % (self.p.p, self.n, self)


def variables(p, n):
    """The tuple of generators (z1, .., zn) over F_p.

    >>> x, y = variables(5, 2)
    >>> print(x * x * y)
    z1^2*z2
    """
    return tuple(MultiPoly.variable(p, n, i) for i in range(1, n + 1))
