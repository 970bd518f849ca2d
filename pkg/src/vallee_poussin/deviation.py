"""The deviation rho_{n,p}(f; x) = f(x) - V_{n,p}(f; x) and its sup-norm.

Two independent routes are provided: through Fourier coefficients
(:func:`deviation_direct`, any p) and, for p = n/2, through the integral
representation

    rho(x) = (2/pi) int_0^inf Delta(t) (cos(t/2) - cos t) / t^2 dt,
    Delta(t) = 2 f(x) - f(x + t/n) - f(x - t/n)

(:func:`deviation_integral`).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np
from scipy.special import polygamma

from .errors import ArgumentError, ClassMembershipError, ConvergenceError
from .modulus import TestFunctionSpec, make_test_function, modulus_profile
from .quadrature import DEFAULT, QuadratureConfig
from .specfun import g_kernel
from .trigsum import TWO_PI, PeriodicFunction, TrigCoefficients, fourier_coefficients, vp_sum

_LO_NODES, _LO_WEIGHTS = np.polynomial.legendre.leggauss(16)
_HI_NODES, _HI_WEIGHTS = np.polynomial.legendre.leggauss(24)
_GRADING = 0.15
_GRADING_LEVELS = 16


def _require_even(n):
    if n < 2 or n % 2:
        raise ArgumentError("p = n/2 requires even n")


def deviation_direct(f: PeriodicFunction, c: TrigCoefficients, n: int, p: int, x):
    """f(x) - V_{n,p}(f; x) from precomputed coefficients."""
    return f(x) - vp_sum(c, n, p, x)


def _panels(a, b, singular, max_len):
    """Split [a, b] into panels of length <= max_len, graded geometrically
    toward every point of ``singular`` that is an endpoint."""
    cuts = np.unique(np.concatenate([[a, b], [s for s in singular if a < s < b]]))
    out = []
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        k = max(1, int(np.ceil((hi - lo) / max_len)))
        edges = np.linspace(lo, hi, k + 1)
        for j, (u, v) in enumerate(zip(edges[:-1], edges[1:])):
            left = j == 0 and _is_singular(lo, singular)
            right = j == k - 1 and _is_singular(hi, singular)
            out.extend(_graded(u, v, left, right))
    return out


def _is_singular(p, singular):
    return any(abs(p - s) < 1e-12 for s in singular)


def _graded(u, v, left, right):
    if not (left or right):
        return [(u, v)]
    if left and right:
        m = 0.5 * (u + v)
        return _graded(u, m, True, False) + _graded(m, v, False, True)
    r = _GRADING ** np.arange(_GRADING_LEVELS + 1)
    if left:
        pts = np.concatenate([[u], u + (v - u) * r[::-1]])
    else:
        pts = np.concatenate([v - (v - u) * r, [v]])[::-1]
    pts = np.unique(pts)
    return list(zip(pts[:-1], pts[1:]))


def _gauss(func, panels, nodes, weights):
    a = np.array([p[0] for p in panels])
    b = np.array([p[1] for p in panels])
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    t = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    return float(np.dot(func(t), w))


def deviation_integral(
    f: PeriodicFunction, n: int, x: float, q: QuadratureConfig = DEFAULT, full_output=False
):
    """rho_{n,n/2}(f; x) from the kernel integral over (0, inf).

    Because n is even, Delta(t)(cos(t/2) - cos t) has period L = 2 pi n, so
    summing the integral over the shifted periods collapses 1/t^2 into the
    trigamma weight psi_1(t/L)/L^2 = 1/t^2 + psi_1(1 + t/L)/L^2 on [0, L].
    That finite integral is evaluated with Gauss-Legendre panels graded
    toward the points where f is not smooth; the difference between a 16-
    and a 24-node rule is the error estimate, refined by halving panels.
    """
    _require_even(n)
    x = float(x)
    L = TWO_PI * n
    fx = float(f(x))

    def integrand(t):
        delta = 2.0 * fx - f(x + t / n) - f(x - t / n)
        osc = np.cos(t / 2) - np.cos(t)
        return delta * (g_kernel(t) + osc * polygamma(1, 1.0 + t / L) / (L * L))

    singular = [0.0, L]
    for bp in f.breakpoints:
        for s in (n * (bp - x), n * (x - bp)):
            singular.append(float(np.mod(s, L)))
    singular = sorted(set(singular))
    max_len = np.pi / 2
    for _ in range(6):
        panels = _panels(0.0, L, singular, max_len)
        lo = _gauss(integrand, panels, _LO_NODES, _LO_WEIGHTS)
        hi = _gauss(integrand, panels, _HI_NODES, _HI_WEIGHTS)
        err = abs(hi - lo)
        if err <= max(q.abs_tol, q.rel_tol * abs(hi)):
            break
        max_len /= 2
    else:
        raise ConvergenceError(
            f"deviation integral at x={x} reached only {err:.3g}", achieved=2 / np.pi * err
        )
    value = 2.0 / np.pi * hi
    if full_output:
        return value, 2.0 / np.pi * err
    return value


@dataclass
class DeviationSample:
    """rho_{n,p} on an x-grid, with an optional integral-route cross-check."""

    n: int
    p: int
    x_grid: np.ndarray
    direct: np.ndarray
    sup_abs: float
    check_x: np.ndarray | None = None
    check_direct: np.ndarray | None = None
    integral_form: np.ndarray | None = None
    route_disagreement: float = 0.0
    converged: bool = True

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "direct", "integral_form"])
        rows = [(x, d, "") for x, d in zip(self.x_grid, self.direct)]
        if self.integral_form is not None:
            rows += list(zip(self.check_x, self.check_direct, self.integral_form))
        rows.sort(key=lambda r: (r[0], r[2] != ""))
        for x, d, i in rows:
            w.writerow([f"{x:.17g}", f"{d:.17g}", "" if i == "" else f"{i:.17g}"])
        return buf.getvalue()

    def summary(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "grid_points": len(self.x_grid),
            "sup_abs": self.sup_abs,
            "route_disagreement": self.route_disagreement,
            "converged": self.converged,
        }

    def to_json(self) -> str:
        return json.dumps(self.summary(), sort_keys=True)


def sup_deviation(
    f: PeriodicFunction,
    c: TrigCoefficients,
    n: int,
    p: int,
    grid_points: int = 1024,
    cross_check: bool = False,
    q: QuadratureConfig = DEFAULT,
    max_doublings: int = 4,
) -> DeviationSample:
    """max_x |rho_{n,p}(f; x)| on a uniform grid, doubled until the maximum
    moves by less than 1e-4 relative.

    With ``cross_check`` (p = n/2 only) the integral route is evaluated at
    33 equispaced points and compared with the direct route.
    """
    if grid_points < 512:
        raise ArgumentError("grid_points must be >= 512")
    N = grid_points
    x = TWO_PI * np.arange(N) / N
    d = deviation_direct(f, c, n, p, x)
    sup = float(np.max(np.abs(d)))
    converged = False
    for _ in range(max_doublings):
        N *= 2
        x2 = TWO_PI * np.arange(N) / N
        d2 = deviation_direct(f, c, n, p, x2)
        sup2 = float(np.max(np.abs(d2)))
        x, d = x2, d2
        done = abs(sup2 - sup) < 1e-4 * max(sup2, 1e-300) or sup2 < 1e-14
        sup = max(sup, sup2)
        if done:
            converged = True
            break
    sample = DeviationSample(n, p, x, d, sup, converged=converged)
    if cross_check:
        if 2 * p != n:
            raise ArgumentError("the integral route needs p = n/2")
        cx = TWO_PI * np.arange(33) / 33
        cd = np.asarray(deviation_direct(f, c, n, p, cx))
        ci = np.array([deviation_integral(f, n, xx, q) for xx in cx])
        sample.check_x, sample.check_direct, sample.integral_form = cx, cd, ci
        sample.route_disagreement = float(np.max(np.abs(cd - ci)))
    return sample


def _class_violation(f, omega, deltas):
    prof = modulus_profile(f, deltas, max_doublings=1)
    allowed = np.array([omega(d) for d in deltas])
    return float(np.max(prof.values - allowed * (1 + 1e-9) - 1e-12))


def _build(spec, seed):
    if isinstance(spec, dict):
        spec = TestFunctionSpec.from_dict(spec)
    return make_test_function(spec, seed=seed) if isinstance(spec, TestFunctionSpec) else spec


def class_members(specs, omega, seed: int = 0) -> list[PeriodicFunction]:
    """Build the corpus and check every member against the class modulus ``omega``.

    Raises :class:`ClassMembershipError` naming the first member whose
    measured modulus exceeds ``omega`` anywhere on a delta grid over
    [pi/256, pi]. The check does not depend on n, so callers sweeping
    several n can run it once and pass the returned functions on.
    """
    deltas = np.geomspace(np.pi / 256, np.pi, 24)
    out = []
    for spec in specs:
        f = _build(spec, seed)
        excess = _class_violation(f, omega, deltas)
        if excess > 0:
            raise ClassMembershipError(f"{f.name} exceeds the class modulus by {excess:.3g}")
        out.append(f)
    return out


def empirical_class_sup(
    specs,
    n: int,
    omega=None,
    grid_points: int = 1024,
    q: QuadratureConfig = DEFAULT,
    seed: int = 0,
):
    """Largest sup_deviation of V_{n,n/2} over a finite corpus.

    This is a lower estimate of sup over the class H_omega. When ``omega``
    is given the corpus first goes through :func:`class_members`. Members
    may be specs, spec dicts or ready :class:`PeriodicFunction` objects.
    Returns ``(value, rows)`` with one row per member.
    """
    _require_even(n)
    specs = list(specs)
    if not specs:
        raise ArgumentError("empty corpus")
    if omega is not None:
        funcs = class_members(specs, omega, seed)
    else:
        funcs = [_build(s, seed) for s in specs]
    rows = []
    for f in funcs:
        c = fourier_coefficients(f, n, q)
        s = sup_deviation(f, c, n, n // 2, grid_points)
        rows.append({"function": f.name, "n": n, "sup_abs": s.sup_abs, "coef_error": c.quad_error})
    return max(r["sup_abs"] for r in rows), rows
