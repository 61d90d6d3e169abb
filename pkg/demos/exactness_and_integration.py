"""
Exactness in characteristic p
=============================

In characteristic zero every closed form on affine space is exact.  Over
F_p that fails: d(z^p) = p z^(p-1) dz = 0, so z^(p-1) dz is closed but
has no polynomial potential.  The exact forms are precisely the p-closed
ones, and for those a potential can be written down explicitly.  This
script walks the criterion, the constructive integrator, and the
brute-force linear-algebra oracle on the same inputs.
"""

from fpforms import (
    NotPClosed,
    exactness_oracle,
    integrate,
    is_p_closed,
    p_closed_failure,
    parse_form,
)

p, n = 3, 2

# the classical obstruction: z^(p-1) dz is closed but not exact
omega = parse_form("z^2 dz", p, 1)
print("omega          =", omega)
print("closed?        ", omega.is_closed())
print("p-closed?      ", is_p_closed(omega))
print("failure        ", p_closed_failure(omega))
try:
    integrate(omega)
except NotPClosed as exc:
    print("integrate      -> NotPClosed:", exc)

# the two-variable witness: every exponent hits p-1, yet the form is
# exact because each monomial sits unobstructed inside its own index
print()
witness = parse_form("(x^2 + y^2) dx^dy", p, n)
theta = integrate(witness)
print("witness        =", witness)
print("potential      =", theta)
print("d(potential)   =", theta.d())
assert theta.d() == witness

# potentials are only unique up to a closed form: perturbing one by
# x^2 dx (closed at p = 3) gives another honest potential
theta_ref = parse_form("x*y^2 dy - x^2*y dx", p, n)
assert theta_ref.d() == witness
other = theta_ref + parse_form("x^2 dx", p, n)
assert other.d() == witness
print("another potl   =", other)
print("difference closed?", (theta - other).is_closed())

# the oracle solves d(eta) = omega as a bounded linear system, with no
# knowledge of the criterion; the verdicts must agree
print()
for text in ("z^2 dz", "z dz", "(z^2 + z) dz"):
    form = parse_form(text, p, 1)
    eta = exactness_oracle(form)
    print(
        "%-14s p-closed=%-5s oracle=%s"
        % (text, is_p_closed(form), "none" if eta is None else eta)
    )
    assert (eta is not None) == is_p_closed(form)
    if eta is not None:
        assert eta.d() == form
