"""
The Cartier operator and its canonical inverse
==============================================

Cartier sends a closed form a dz_I to unsubstitute(d^(p-1) a) dz_I: it
divides all exponents by p after extracting the obstruction slice, and
it kills exactly the exact forms.  gamma0 goes the other way, sending
a_I dz_I to a_I(z^p) z_I^(p-1) dz_I.  Together they realize de Rham
classes as fixed points of a Frobenius-semilinear operator.
"""

import random

from fpforms import cartier, gamma0, irrational_part, is_p_closed, parse_form
from fpforms.sampling import random_closed_form, random_form

p, n = 3, 1

# the non-exact witness z^(p-1) dz maps to dz and back
omega = parse_form("z^2 dz", p, n)
print("omega                 =", omega)
print("cartier(omega)        =", cartier(omega))
print("gamma0(cartier(omega))=", gamma0(cartier(omega)))
assert gamma0(cartier(omega)) == omega

# cartier itself is polynomial-only (clear denominators first), but its
# inverse handles rational coefficients, and the logarithmic form dz/z
# is a genuine fixed point of it
log_form = parse_form("(1/z) dz", p, n)
print()
print("dz/z                  =", log_form)
print("gamma0(dz/z)          =", gamma0(log_form))
print("fixed point?          ", gamma0(log_form) == log_form)
assert gamma0(log_form) == log_form

# round trips on random forms: cartier o gamma0 is the identity, and
# gamma0 o cartier reproduces the input up to a p-closed (exact) error
rng = random.Random(11)
for _ in range(100):
    pp = (2, 3, 5)[rng.randrange(3)]
    nn = rng.randint(1, 3)
    r = rng.randint(1, nn)
    alpha = random_form(rng, pp, nn, r, max_degree=3)
    assert cartier(gamma0(alpha)) == alpha
    closed = random_closed_form(rng, pp, nn, r)
    assert is_p_closed(closed - gamma0(cartier(closed)))
    assert cartier(random_form(rng, pp, nn, r - 1, max_degree=3).d()).is_zero()
print()
print("100 random round trips: all exact")

# cartier and the irrational projector agree about what survives
print()
closed = random_closed_form(random.Random(5), 3, 2, 1)
print("closed form       =", closed)
print("cartier           =", cartier(closed))
print("irrational part   =", irrational_part(closed))
assert cartier(irrational_part(closed)) == cartier(closed)
