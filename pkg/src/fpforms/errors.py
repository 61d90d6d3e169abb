"""Exception types shared across the kernel.

The hierarchy mirrors how the command line reports failures:

* ParseError and its relatives are usage errors (exit code 1),
* MathDomainError covers violated mathematical preconditions (exit code 2),
* InternalError marks conditions that indicate a bug in the kernel (exit 3).
"""


class FpFormsError(Exception):
    """Base class for every error raised by this package."""


class ParseError(FpFormsError):
    """Malformed expression text.  Carries position and expectations."""

    def __init__(self, message, line=1, column=1, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        suffix = ""
        if self.expected:
            suffix = " (expected %s)" % " or ".join(self.expected)
        super().__init__(
            "%s at line %d, column %d%s" % (message, line, column, suffix)
        )


class VariableOutOfRange(ParseError):
    """A variable name denotes an index outside 1..n."""


class PrimeOutOfRange(FpFormsError):
    """The characteristic is not a prime in the supported range."""


class MathDomainError(FpFormsError):
    """A mathematical precondition of an operation was violated."""


class DivisionByZero(MathDomainError, ZeroDivisionError):
    """Inversion or division by the zero residue."""


class ZeroDenominator(MathDomainError, ZeroDivisionError):
    """A rational function was given the zero polynomial as denominator."""


class PrimeMismatch(MathDomainError):
    """Two operands live over different prime fields."""


class ArityMismatch(MathDomainError):
    """Two operands live in different numbers of variables."""


class IndexOutOfRange(MathDomainError, IndexError):
    """A variable or multi-index entry lies outside 1..n."""


class ObstructedAntiderivative(MathDomainError):
    """A monomial with z_i-exponent = p-1 (mod p) has no antiderivative."""


class NotPthPower(MathDomainError):
    """An exponent vector is not componentwise divisible by p."""


class DegreeOverflow(MathDomainError):
    """A per-variable exponent exceeded the configured degree limit."""


class NotClosed(MathDomainError):
    """The form is not closed, so the operation is undefined."""


class NotPClosed(MathDomainError):
    """The form is not p-closed, so no potential exists."""


class NonPolynomial(MathDomainError):
    """The operation is defined for polynomial coefficients only."""


class DegreeZero(MathDomainError):
    """The operation requires a form of degree at least one."""


class DegreeMismatch(MathDomainError):
    """Two forms have different degrees where equal degrees are required."""


class SystemTooLarge(MathDomainError):
    """The bounded-degree linear system exceeds the configured size cap."""


class InternalError(FpFormsError):
    """An invariant the kernel relies on failed to hold."""


class InternalResidual(InternalError):
    """Integration terminated with a nonzero residual."""
