"""
Measured deviation against the three-modulus bound
==================================================

For each test function the uniform deviation of V_{n,n/2} is set against
w1 + 9/(10 pi) w2 + 31/(25 pi) w3, where the w's are measured moduli of
continuity at 6pi/7n, 2pi/3n and pi/n, and against the older
(4/3 + 2 sqrt3/pi) omega(2pi/n).
"""

from vallee_poussin import (
    TestFunctionSpec, estimate_modulus, fourier_coefficients, general_c_bound,
    make_test_function, sup_deviation, theorem1_bound, theorem1_deltas,
)
from vallee_poussin.trigsum import TWO_PI

specs = [
    TestFunctionSpec("holder_alpha", {"alpha": 0.3}),
    TestFunctionSpec("holder_alpha", {"alpha": 1.0}),
    TestFunctionSpec("lipschitz_sawtooth_smoothed", {"peak": 0.25}),
    TestFunctionSpec("random_trig", {"degree": 24, "seed": 2}),
]

###############################################################################
# Ratios below one mean the bound holds; the new bound is always the
# tighter of the two.

print(f"{'function':45s} {'n':>3} {'sup':>9} {'new':>9} {'old':>9}")
for spec in specs:
    f = make_test_function(spec)
    c = fourier_coefficients(f, 64)
    for n in (8, 32):
        sup = sup_deviation(f, c, n, n // 2).sup_abs
        new = theorem1_bound(*(estimate_modulus(f, d) for d in theorem1_deltas(n)))
        old = general_c_bound(estimate_modulus(f, TWO_PI / n))
        print(f"{f.name:45s} {n:>3} {sup:9.2e} {new:9.2e} {old:9.2e}")
