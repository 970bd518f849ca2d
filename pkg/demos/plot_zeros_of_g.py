"""
Zeros of g
==========

g(x) = 2 int_x^inf (cos(t/2) - cos t)/t^2 dt changes sign between
consecutive odd multiples of pi. Here the three independent evaluations
of g are compared and the first zeros are located.
"""

import numpy as np

from vallee_poussin import QuadratureConfig, find_tau, g_alt, g_closed, g_direct
from vallee_poussin.specfun import interval_end

###############################################################################
# Agreement of the closed form (through Si) with the two quadrature forms,
# under both policies for the infinite tail.

x = np.geomspace(0.1, 100, 60)
for policy in ("closed_form_tail", "domain_transform"):
    q = QuadratureConfig(tail_policy=policy)
    d = max(abs(g_direct(v, q) - g_closed(v)) for v in x)
    a = max(abs(g_alt(v, q) - g_closed(v)) for v in x)
    print(f"{policy:17s} max|direct - closed| {d:.1e}  max|alt - closed| {a:.1e}")

###############################################################################
# Signs at x_k = (2k - 1) pi alternate, so each (x_{k-1}, x_k) holds a zero.

print([int(np.sign(g_closed(interval_end(k)))) for k in range(1, 11)])

###############################################################################
# The zeros themselves, with the scan diagnostics. One sign change per
# interval means tau_k is unambiguous.

for k in range(1, 9):
    z = find_tau(k)
    print(f"tau_{k} = {z.root:.12f}  residual {z.residual:.1e}  sign changes {z.sign_changes}")
