"""
Complete integrability and the restricted part
==============================================

A polynomial form is completely integrable when every coefficient admits
an antiderivative in each variable of its own multi-index; the projector
O_I carves out the restricted monomials that block this.  The split is
finer than rational/irrational and its operator calculus hides a signed
subtlety worth seeing explicitly: d does NOT kill the restricted part in
general, which is exactly the discrepancy the claim audit pins down.
"""

import random

from fpforms import (
    o_operator,
    o_operator_expanded,
    p_operator,
    parse_form,
    run_audit,
    split_complete_restricted,
)
from fpforms.sampling import random_poly

p, n = 3, 2

omega = parse_form("(x^2*y + x) dx", p, n)
split = split_complete_restricted(omega)
print("omega      =", omega)
print("complete   =", split.complete)
print("restricted =", split.restricted)
assert split.complete + split.restricted == omega

# the projector algebra: O over a single index is the slice projector P,
# the general O expands as a sum over nonempty subsets, and both square
# to minus themselves
rng = random.Random(3)
for _ in range(100):
    f = random_poly(rng, p, n, max_degree=6)
    assert o_operator(f, (1,)) == p_operator(f, (1,))
    full = o_operator(f, (1, 2))
    assert full == o_operator_expanded(f, (1, 2))
    assert o_operator(full, (1, 2)) == -full
print("100 random polynomials: O_J = expanded sum, O_J O_J = -O_J")

# the audited discrepancy: the restricted part of an exterior derivative
# need not vanish.  eta = z1*z2 dz1 at p = 2 already shows it
print()
eta = parse_form("x*y dx", 2, 2)
domega = eta.d()
print("eta              =", eta)
print("d(eta)           =", domega)
print("restricted part  =", split_complete_restricted(domega).restricted)
assert not split_complete_restricted(domega).restricted.is_zero()

# the claim audit reconfirms this (and the other contested statements)
# deterministically on every run
report = run_audit(seed=42, trials=20)
print()
for claim in report["claims"]:
    if claim["status"] == "contested":
        ce = claim["counterexample"]
        print("%-22s failures=%2d  p=%d n=%d" % (
            claim["id"], claim["failures"], ce["p"], ce["n"]))
assert report["regressions"] == 0
