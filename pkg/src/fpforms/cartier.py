"""The Cartier operator and the de Rham cohomology it computes.

For a closed form omega = sum a_I dz_I the Cartier image is

    cartier(omega) = (-1)^r sum unfrob(partial_I^(p-1) a_I) dz_I

where unfrob halves every exponent by p (the coefficient is a p-th power
whenever omega is closed).  Its one-sided inverse is

    gamma0(alpha) = sum a_I(z^p) z_I^(p-1) dz_I,

which always produces closed forms and satisfies cartier(gamma0(alpha)) =
alpha exactly.  The composite gamma0(cartier(omega)) is the irrational
part of omega, so the difference omega - gamma0(cartier(omega)) is exact:
cartier computes exactly the obstruction of omega to exactness, and two
closed forms are cohomologous precisely when their difference is p-closed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeMismatch, DegreeZero, NonPolynomial, NotClosed
from .forms import DiffForm
from .operators import irrational_part, is_p_closed
from .poly import MultiPoly


def gamma0(form: DiffForm) -> DiffForm:
    """sum a_I(z^p) z_I^(p-1) dz_I: the canonical closed lift.

    Accepts rational coefficients by twisting the numerator and the
    denominator separately.  The result is always closed.
    """
    p, n = form.p, form.n
    k = p.p - 1
    out = {}
    for index, coeff in form.terms.items():
        exps = [0] * n
        for i in index:
            exps[i - 1] = k
        mono = MultiPoly.monomial(p, n, tuple(exps))
        out[index] = coeff.substitute_pth() * mono
    return form._with_terms(out)


def cartier(form: DiffForm) -> DiffForm:
    """The Cartier image of a closed polynomial form of degree >= 1.

    Closedness makes every (p-1)-fold derivative a p-th power, so the
    exponent division below is exact; NotPthPower would signal a broken
    closedness invariant.

    >>> from fpforms.parser import parse_form
    >>> print(cartier(parse_form("z^2 dz", 3, 1)))
    dz1
    >>> print(gamma0(parse_form("dz", 3, 1)))
    z1^2 dz1
    """
    if form.r == 0:
        raise DegreeZero("the Cartier operator needs a form of degree >= 1")
    if not form.is_polynomial:
        raise NonPolynomial(
            "clear denominators first; the Cartier operator is polynomial"
        )
    if not form.is_closed():
        raise NotClosed("the Cartier operator is defined on closed forms")
    out = {}
    for index, coeff in form.terms.items():
        out[index] = coeff.partial_multi(index).unsubstitute_pth()
    result = form._with_terms(out)
    if form.r % 2:
        result = -result
    return result


@dataclass(frozen=True)
class CohomologyWitness:
    """A canonical representative together with its exactness certificate.

    representative is gamma0-liftable by construction; the certificate
    records that the difference from the original form was p-closed,
    hence exact.
    """

    representative: DiffForm
    exact_difference_check: bool


def class_representative(form: DiffForm) -> CohomologyWitness:
    """The canonical representative of the cohomology class of a closed form.

    The representative is the irrational part; the difference is p-closed
    (checked and recorded), so both forms sit in the same class.
    """
    if not form.is_closed():
        raise NotClosed("cohomology classes are classes of closed forms")
    rep = irrational_part(form)
    return CohomologyWitness(
        representative=rep,
        exact_difference_check=is_p_closed(form - rep),
    )


def same_class(a: DiffForm, b: DiffForm) -> bool:
    """Whether two closed forms of equal degree differ by an exact form."""
    if a.r != b.r:
        raise DegreeMismatch(
            "cannot compare classes in degrees %d and %d" % (a.r, b.r)
        )
    if not a.is_closed() or not b.is_closed():
        raise NotClosed("cohomology classes are classes of closed forms")
    return is_p_closed(a - b)
