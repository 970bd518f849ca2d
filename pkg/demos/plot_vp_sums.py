"""
Vallee Poussin sums of a kinked function
========================================

V_{n,p} averages the Fourier partial sums S_{n-p}, ..., S_{n-1}. With p = 1
it is S_{n-1} itself and with p = n it is the Fejer mean. This script
compares the three on f(x) = |sin(x/2)|, whose kink at 0 is where every
method does worst.
"""

import numpy as np

from vallee_poussin import (
    TestFunctionSpec, fourier_coefficients, make_test_function, partial_sum, vp_sum,
)
from vallee_poussin.cli import render_svg

f = make_test_function(TestFunctionSpec("holder_alpha", {"alpha": 1.0}))
c = fourier_coefficients(f, 64)
x = np.linspace(0, 2 * np.pi, 2001)

###############################################################################
# Uniform error of the three means for a few n. The p = n/2 column sits
# between Fourier (p = 1) and Fejer (p = n).

print(f"{'n':>4} {'p=1':>10} {'p=n/2':>10} {'p=n':>10}")
for n in (4, 8, 16, 32, 64):
    errs = [np.max(np.abs(f(x) - vp_sum(c, n, p, x))) for p in (1, n // 2, n)]
    print(f"{n:>4} " + " ".join(f"{e:10.2e}" for e in errs))

###############################################################################
# The p = 1 case really is the partial sum, bit for bit.

assert np.array_equal(vp_sum(c, 16, 1, x), partial_sum(c, 15, x))

###############################################################################
# Write f and V_{16,8} f as an SVG for a quick look.

curves = [("|sin(x/2)|, V_16,8", x, f(x), vp_sum(c, 16, 8, x))]
with open("vp_sums.svg", "w", encoding="utf-8") as fh:
    fh.write(render_svg(curves))
print("wrote vp_sums.svg")
