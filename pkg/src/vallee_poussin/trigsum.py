"""Fourier coefficients and the summation operators S_k, sigma_{n-1} and V_{n,p}.

Everything here works on real 2*pi-periodic functions. Coefficients are
computed once with :func:`fourier_coefficients` and then every sum is a
cheap evaluation of the stored ``a_k, b_k``::

    >>> import numpy as np
    >>> f = PeriodicFunction(np.cos, name="cos")
    >>> c = fourier_coefficients(f, 4)
    >>> round(vp_sum(c, 4, 2, 0.0), 12)
    1.0
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ArgumentError, EvaluationError, OrderExceededError
from .quadrature import DEFAULT, QuadratureConfig, quad

TWO_PI = 2.0 * np.pi

# below this |sin(t/2)| kernels are filled from their Taylor expansion
_SERIES_CUTOFF = 1e-6


@dataclass(frozen=True)
class PeriodicFunction:
    """A real 2*pi-periodic function given by a vectorised evaluator.

    ``breakpoints`` lists points of [0, 2*pi) where the function is not
    smooth; integrators split there. ``alpha`` is the Hoelder exponent and
    ``holder_constant`` the constant C in |f(x)-f(y)| <= C|x-y|^alpha, when
    known.
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    name: str = "f"
    smoothness: str | None = None
    alpha: float | None = None
    holder_constant: float | None = None
    breakpoints: tuple[float, ...] = ()
    degree: int | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return np.asarray(self.evaluator(x), dtype=float)

    @classmethod
    def from_samples(cls, values, name="sampled", **kwargs) -> PeriodicFunction:
        """Grid-backed function: periodic piecewise-linear interpolation of
        ``values`` taken at ``2*pi*j/len(values)``."""
        values = np.asarray(values, dtype=float)
        if values.ndim != 1 or len(values) < 2:
            raise ArgumentError("need a 1-D array of at least two samples")
        if not np.all(np.isfinite(values)):
            raise EvaluationError("non-finite sample value")
        n = len(values)
        fp = np.append(values, values[0])

        def evaluator(x):
            u = np.mod(x, TWO_PI) * (n / TWO_PI)
            j = np.minimum(np.floor(u).astype(int), n - 1)
            frac = u - j
            return fp[j] * (1.0 - frac) + fp[j + 1] * frac

        return cls(evaluator, name=name, smoothness="lipschitz", **kwargs)

    def check_periodic(self, n_points=256, seed=0, tol=1e-12) -> float:
        """Largest |f(x + 2 pi) - f(x)| over random x; raises if above ``tol``."""
        rng = np.random.default_rng(seed)
        x = rng.uniform(-10.0, 10.0, n_points)
        gap = float(np.max(np.abs(self(x + TWO_PI) - self(x))))
        if gap > tol:
            raise ArgumentError(f"{self.name} is not 2*pi-periodic (gap {gap:.3g})")
        return gap


@dataclass(frozen=True)
class TrigCoefficients:
    """Fourier data ``a0, a[0..m-1] = a_1..a_m, b[...]`` up to order ``m``."""

    order: int
    a0: float
    a: np.ndarray
    b: np.ndarray
    quad_error: float = 0.0
    grid_points: int = 0

    def __post_init__(self):
        if self.order < 0:
            raise ArgumentError("order must be nonnegative")
        a = np.asarray(self.a, dtype=float)
        b = np.asarray(self.b, dtype=float)
        if a.shape != (self.order,) or b.shape != (self.order,):
            raise ArgumentError("a and b must each have exactly `order` entries")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_polynomial(cls, a0, a=(), b=(), order=None) -> TrigCoefficients:
        """Exact coefficients of an explicit trigonometric polynomial, zero-padded to ``order``."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        d = max(len(a), len(b))
        order = d if order is None else order
        if order < d:
            raise ArgumentError("order below the polynomial degree")
        aa = np.zeros(order)
        bb = np.zeros(order)
        aa[: len(a)] = a
        bb[: len(b)] = b
        return cls(order, float(a0), aa, bb)

    def __add__(self, other):
        m = min(self.order, other.order)
        return TrigCoefficients(
            m, self.a0 + other.a0, self.a[:m] + other.a[:m], self.b[:m] + other.b[:m],
            self.quad_error + other.quad_error,
        )

    def __mul__(self, s):
        s = float(s)
        return TrigCoefficients(
            self.order, s * self.a0, s * self.a, s * self.b, abs(s) * self.quad_error
        )

    __rmul__ = __mul__


def _trapezoid_coefficients(values, m):
    # uniform-grid trapezoid rule for a_k, b_k, k = 0..m, via the real FFT
    N = len(values)
    spec = np.fft.rfft(values)[: m + 1]
    return 2.0 * spec.real / N, -2.0 * spec.imag / N


def fourier_coefficients(
    f: PeriodicFunction, m: int, q: QuadratureConfig = DEFAULT
) -> TrigCoefficients:
    """Coefficients a_0..a_m, b_1..b_m by the trapezoidal rule with grid doubling.

    The grid starts at ``max(8m, q.min_grid)`` points (rounded up to a power
    of two) and doubles until two successive grids agree within
    ``q.coef_tol`` or ``q.max_grid`` is reached. The last disagreement is
    stored as ``quad_error``; for non-smooth inputs it is the honest
    accuracy of the coefficients.
    """
    if m < 1:
        raise ArgumentError("order m must be >= 1")
    N = 1 << int(np.ceil(np.log2(max(8 * m, q.min_grid))))
    prev = None
    while True:
        x = TWO_PI * np.arange(N) / N
        values = f(x)
        bad = ~np.isfinite(values)
        if bad.any():
            raise EvaluationError(
                f"{f.name} is not finite at x = {x[bad][0]!r}", x=float(x[bad][0])
            )
        cur = _trapezoid_coefficients(values, m)
        if prev is not None:
            err = max(np.max(np.abs(cur[0] - prev[0])), np.max(np.abs(cur[1] - prev[1])))
            if err <= q.coef_tol or 2 * N > q.max_grid:
                break
        prev = cur
        N *= 2
    a, b = cur
    return TrigCoefficients(m, float(a[0]), a[1:], b[1:], float(err), N)


def _partial_sums(c: TrigCoefficients, kmax: int, x):
    """Row k of the result is S_k(x) for k = 0..kmax."""
    x = np.asarray(x, dtype=float)
    k = np.arange(1, kmax + 1).reshape((-1,) + (1,) * x.ndim)
    terms = c.a[:kmax].reshape(k.shape) * np.cos(k * x) + c.b[:kmax].reshape(k.shape) * np.sin(
        k * x
    )
    head = np.full((1,) + x.shape, c.a0 / 2.0)
    return np.cumsum(np.concatenate([head, terms]), axis=0)


def partial_sum(c: TrigCoefficients, k: int, x):
    """Fourier partial sum S_k(f; x) = a0/2 + sum_{j<=k} (a_j cos jx + b_j sin jx)."""
    if k < 0:
        raise ArgumentError("k must be nonnegative")
    if k > c.order:
        raise OrderExceededError(f"S_{k} needs order {k}, coefficients have {c.order}")
    s = _partial_sums(c, k, x)[k]
    return float(s) if s.ndim == 0 else s


def vp_sum(c: TrigCoefficients, n: int, p: int, x):
    """de la Vallee Poussin sum V_{n,p}(f; x): the mean of S_{n-p}, ..., S_{n-1}."""
    if not (1 <= p <= n):
        raise ArgumentError(f"need 1 <= p <= n, got n={n}, p={p}")
    if n - 1 > c.order:
        raise ArgumentError(f"V_{{{n},{p}}} needs order {n - 1}, coefficients have {c.order}")
    rows = _partial_sums(c, n - 1, x)[n - p :]
    s = rows.sum(axis=0) / p
    return float(s) if s.ndim == 0 else s


def fejer_sum(c: TrigCoefficients, n: int, x):
    """Fejer sum sigma_{n-1}(f; x), i.e. V_{n,n}."""
    return vp_sum(c, n, n, x)


def vp_weights(n: int, p: int) -> np.ndarray:
    """Multipliers lambda_k, k = 0..n-1, with V_{n,p} = a0/2 + sum lambda_k (a_k cos + b_k sin)."""
    if not (1 <= p <= n):
        raise ArgumentError(f"need 1 <= p <= n, got n={n}, p={p}")
    k = np.arange(n, dtype=float)
    return np.minimum(1.0, (n - k) / p)


def vp_kernel(n: int, p: int, t):
    """Kernel K with V_{n,p}(f;x) = (1/pi) * int_{-pi}^{pi} f(x+t) K(t) dt.

    Closed form (cos((n-p)t) - cos(nt)) / (4p sin^2(t/2)); near t in 2*pi*Z
    the quotient is replaced by its Taylor expansion to sixth order.
    """
    if not (1 <= p <= n):
        raise ArgumentError(f"need 1 <= p <= n, got n={n}, p={p}")
    t = np.asarray(t, dtype=float)
    s2 = np.sin(t / 2.0)
    near = np.abs(s2) < _SERIES_CUTOFF
    with np.errstate(divide="ignore", invalid="ignore"):
        # cos((n-p)t) - cos(nt) written as a product to avoid cancellation
        out = np.sin((n - p / 2.0) * t) * np.sin(p * t / 2.0) / (2.0 * p * s2**2)
    if np.any(near):
        u = t[near] - TWO_PI * np.round(t[near] / TWO_PI)
        r = float(n - p)
        nn = float(n)
        num2 = (nn**2 - r**2) / 2.0
        num4 = -(nn**4 - r**4) / 24.0
        num6 = (nn**6 - r**6) / 720.0
        # numerator / (p (u^2 - u^4/12 + u^6/360)), expanded in u^2
        u2 = u * u
        c0 = num2
        c1 = num4 + num2 / 12.0
        c2 = num6 + num4 / 12.0 + num2 * (1.0 / 144.0 - 1.0 / 360.0)
        out = np.array(out, copy=True)
        out[near] = (c0 + c1 * u2 + c2 * u2 * u2) / p
    return float(out) if out.ndim == 0 else out


def vp_kernel_sum(f: PeriodicFunction, n: int, p: int, x: float, q: QuadratureConfig = DEFAULT):
    """V_{n,p}(f; x) by direct convolution with :func:`vp_kernel` (adaptive quadrature)."""
    pts = [TWO_PI * j / (2 * n) - np.pi for j in range(1, 2 * n)]
    for b in f.breakpoints:
        pts.append(float(np.mod(b - x + np.pi, TWO_PI) - np.pi))
    val, _ = quad(lambda t: f(x + t) * vp_kernel(n, p, t), -np.pi, np.pi, q, points=pts)
    return val / np.pi


def _dirichlet_ratio(t):
    # sin(3t/2) / sin(t/2); equals 3 - 4 sin^2(t/2) identically, used at the removable point
    t = np.asarray(t, dtype=float)
    s = np.sin(t / 2.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        r = np.sin(1.5 * t) / s
    return np.where(np.abs(s) < _SERIES_CUTOFF, 3.0 - 4.0 * s * s, r)


def lebesgue_constant(n: int, q: QuadratureConfig = DEFAULT, full_output: bool = False):
    """sup_{||f|| <= 1} ||V_{n,n/2} f||, computed as (1/2pi) int |sin(3t/2)/sin(t/2)| dt.

    The integrand is even and changes sign only at t = 2pi/3 on (0, pi), so
    the integral is split there. The value does not depend on ``n``.
    """
    if n < 2 or n % 2:
        raise ArgumentError("p = n/2 requires even n")
    g = lambda t: abs(float(_dirichlet_ratio(t)))
    lo, e1 = quad(g, 0.0, TWO_PI / 3.0, q)
    hi, e2 = quad(g, TWO_PI / 3.0, np.pi, q)
    if full_output:
        return (lo + hi) / np.pi, (e1 + e2) / np.pi
    return (lo + hi) / np.pi


def vp_operator_norm(n: int, p: int, q: QuadratureConfig = DEFAULT, full_output: bool = False):
    """(1/pi) int_{-pi}^{pi} |vp_kernel(n, p, t)| dt, the C -> C norm of V_{n,p}."""
    if not (1 <= p <= n):
        raise ArgumentError(f"need 1 <= p <= n, got n={n}, p={p}")
    pts = np.concatenate(
        [np.arange(1, 2 * n) * np.pi / n, np.arange(1, 2 * (n - p)) * np.pi / max(n - p, 1)]
    )
    val, err = quad(lambda t: abs(float(vp_kernel(n, p, t))), 0.0, np.pi, q, points=pts)
    if full_output:
        return 2.0 * val / np.pi, 2.0 * err / np.pi
    return 2.0 * val / np.pi
