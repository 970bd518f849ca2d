"""
Two-sided estimate on Hoelder classes
=====================================

For H^alpha the worst-case deviation of V_{n,n/2} is squeezed between
pi^a / ((1+a) n^a) and a constant times pi^a / n^a. The empirical column
is the largest deviation found over a small corpus inside the class, so
it is a lower estimate of the true worst case and must stay under the
upper bound.
"""

from vallee_poussin import TestFunctionSpec, empirical_class_sup, holder_two_sided
from vallee_poussin.deviation import class_members

print(f"{'alpha':>5} {'n':>3} {'lower':>9} {'empirical':>9} {'upper':>9}")
for alpha in (0.25, 0.5, 0.75, 1.0):
    corpus = class_members([
        TestFunctionSpec("holder_alpha", {"alpha": alpha, "amplitude": 2.0**alpha}),
        TestFunctionSpec("lipschitz_sawtooth_smoothed", {"peak": 0.5}),
    ], lambda t, a=alpha: t**a)
    for n in (8, 32):
        lo, up = holder_two_sided(alpha, n)
        emp, _ = empirical_class_sup(corpus, n)
        print(f"{alpha:5.2f} {n:>3} {lo:9.4f} {emp:9.4f} {up:9.4f}")
