"""
Best uniform approximation and the moduli inequalities
======================================================

E_m(f) is the distance from f to trigonometric polynomials of degree
m - 1. The discrete minimax oracle solves it as a linear program on a
grid. For any continuous f, E_m < omega(f, pi/m), and half of that when
the modulus is concave.
"""

import numpy as np

from vallee_poussin import (
    PeriodicFunction, TestFunctionSpec, best_approx_oracle, estimate_modulus, is_concave_profile,
    make_test_function, modulus_profile,
)

###############################################################################
# A sanity case first: cos 3x cannot be improved on by anything of degree 2.
# The grid must contain the extrema of cos 3x, so it is a multiple of 6.

res = best_approx_oracle(PeriodicFunction(lambda x: np.cos(3 * x)), 3, grid_points=384)
print(f"E_3(cos 3x) = {res.value:.12f}")

###############################################################################
# The ratio E_m / omega(pi/m) on a few members.

for spec in (TestFunctionSpec("holder_alpha", {"alpha": 0.5}),
             TestFunctionSpec("lipschitz_sawtooth_smoothed", {})):
    f = make_test_function(spec)
    concave = is_concave_profile(modulus_profile(f, np.linspace(np.pi / 64, np.pi, 24)))
    print(f.name, "concave modulus" if concave else "")
    for m in (2, 4, 8, 16):
        r = best_approx_oracle(f, m)
        w = estimate_modulus(f, np.pi / m)
        print(f"  m={m:2d}  E={r.value:.3e}  E/omega={r.value / w:.3f}  "
              f"alternation points {len(r.equioscillation_points)}")
