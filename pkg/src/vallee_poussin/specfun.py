"""The sine integral and the function

    g(x) = 2 * int_x^inf (cos(t/2) - cos t) / t^2 dt,   x > 0,

in three independent forms, together with the zeros tau_k of g.

``g_closed`` (through Si) is the reference; ``g_direct`` and ``g_alt``
integrate numerically and only serve as cross-checks.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import ArgumentError, RootNotFoundError
from .quadrature import DEFAULT, QuadratureConfig, quad

SI_SWITCH = 16.0

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(24)
_GL_PANELS = 8
_LAG_NODES, _LAG_WEIGHTS = np.polynomial.laguerre.laggauss(80)


def _si_quadrature(x):
    # x * int_0^1 sinc(x u) du on 8 Gauss-Legendre panels; exact to rounding for x <= 16
    edges = np.linspace(0.0, 1.0, _GL_PANELS + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    u = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    w = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
    vals = np.sinc(np.multiply.outer(x, u) / np.pi)
    return x * (vals @ w)


def si_auxiliary(x):
    """Auxiliary functions (P, Q) with Si(x) = pi/2 - cos(x) P(x) - sin(x) Q(x).

    Both are Laplace integrals, P = x int e^{-s}/(x^2+s^2) ds and
    Q = int s e^{-s}/(x^2+s^2) ds, obtained by turning the contour of
    int_x^inf sin(t)/t dt onto x + i*s; Gauss-Laguerre then converges
    without oscillation.
    """
    x = np.asarray(x, dtype=float)
    s = _LAG_NODES
    den = np.add.outer(x * x, s * s)
    P = x * ((1.0 / den) @ _LAG_WEIGHTS)
    Q = (s / den) @ _LAG_WEIGHTS
    return P, Q


def si(x):
    """Sine integral Si(x) = int_0^x sin(t)/t dt for x >= 0.

    Quadrature for x <= 16 (Taylor series below 1e-3), the auxiliary-function
    representation beyond. Absolute error is at rounding level.
    """
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)) or np.any(x < 0):
        raise ArgumentError("si requires finite x >= 0")
    out = np.empty_like(x)
    tiny = x < 1e-3
    small = (~tiny) & (x <= SI_SWITCH)
    big = x > SI_SWITCH
    xt = x[tiny]
    out[tiny] = xt - xt**3 / 18.0 + xt**5 / 600.0
    out[small] = _si_quadrature(x[small])
    if np.any(big):
        xb = x[big]
        P, Q = si_auxiliary(xb)
        out[big] = np.pi / 2 - np.cos(xb) * P - np.sin(xb) * Q
    return float(out) if out.ndim == 0 else out


def _check_positive(x):
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)) or np.any(x <= 0):
        raise ArgumentError("g is defined for x > 0 only")
    return x


def g_closed(x):
    """g(x) through the sine integral:
    (4cos(x/2) + 2x Si(x/2) - 4cos x - 4x Si(x) + pi x) / (2x)."""
    x = _check_positive(x)
    num = 4 * np.cos(x / 2) + 2 * x * si(x / 2) - 4 * np.cos(x) - 4 * x * si(x) + np.pi * x
    out = num / (2 * x)
    return float(out) if np.ndim(out) == 0 else out


def g_kernel(t):
    """(cos(t/2) - cos t) / t^2 with the removable point at 0 filled (limit 3/8)."""
    t = np.asarray(t, dtype=float)
    small = np.abs(t) < 1e-3
    with np.errstate(divide="ignore", invalid="ignore"):
        out = 2.0 * np.sin(0.75 * t) * np.sin(0.25 * t) / (t * t)
    out = np.where(small, 3.0 / 8.0 - (5.0 / 128.0) * t * t, out)
    return float(out) if out.ndim == 0 else out


def _tail_series(u, m=2, tol=1e-17, max_terms=60):
    # int_u^inf e^{iv} v^{-m} dv from I_m = i e^{iu} u^{-m} - i m I_{m+1}; asymptotic, large u
    term = 1j * np.exp(1j * u) * u ** (-m)
    total = term
    k = m
    for _ in range(max_terms):
        nxt = term * (-1j * k) / u
        if abs(nxt) >= abs(term):
            break
        total += nxt
        term = nxt
        k += 1
        if abs(term) < tol:
            break
    return total, abs(term)


def _tail_laguerre(u, m=2):
    # int_u^inf e^{iv} v^{-m} dv = i e^{iu} int_0^inf e^{-s} (u + i s)^{-m} ds
    s = _LAG_NODES
    return 1j * np.exp(1j * u) * np.sum(_LAG_WEIGHTS * (u + 1j * s) ** (-m))


def cos_tail(T: float, w: float, q: QuadratureConfig = DEFAULT) -> float:
    """int_T^inf cos(w t) / t^2 dt for T, w > 0, closed per ``q.tail_policy``."""
    u = w * T
    if q.tail_policy == "closed_form_tail":
        val, err = _tail_series(u)
        if err > 1e-14:
            raise ArgumentError(f"tail start w*T = {u:.3g} too small for the series")
    else:
        val = _tail_laguerre(u)
    return float(w * val.real)


def _tail_start(x):
    return x + 40.0 * np.pi


def g_direct(x: float, q: QuadratureConfig = DEFAULT) -> float:
    """g(x) = 2 int_x^inf (cos(t/2) - cos t)/t^2 dt by adaptive quadrature on
    [x, T] plus the two cosine tails beyond T."""
    x = float(_check_positive(x))
    T = _tail_start(x)
    pts = np.arange(np.ceil(x / np.pi), np.floor(T / np.pi) + 1) * np.pi
    mid, _ = quad(g_kernel, x, T, q, points=pts)
    return 2.0 * (mid + cos_tail(T, 0.5, q) - cos_tail(T, 1.0, q))


def _cos_over_t2(t):
    return np.cos(t) / (t * t)


def g_alt(x: float, q: QuadratureConfig = DEFAULT) -> float:
    """g(x) = 2 int_{x/2}^{x} cos t/t^2 dt - int_{x/2}^inf cos t/t^2 dt."""
    x = float(_check_positive(x))
    h = x / 2
    near, _ = quad(_cos_over_t2, h, x, q, points=np.arange(1, 64) * np.pi)
    T = _tail_start(x)
    pts = np.arange(np.ceil(h / np.pi), np.floor(T / np.pi) + 1) * np.pi
    far, _ = quad(_cos_over_t2, h, T, q, points=pts)
    return 2.0 * near - (far + cos_tail(T, 1.0, q))


def half_tail(x: float, q: QuadratureConfig = DEFAULT) -> float:
    """int_{x/2}^inf cos t/t^2 dt, the subtracted term of :func:`g_alt`."""
    h = float(_check_positive(x)) / 2
    T = _tail_start(2 * h)
    pts = np.arange(np.ceil(h / np.pi), np.floor(T / np.pi) + 1) * np.pi
    far, _ = quad(_cos_over_t2, h, T, q, points=pts)
    return far + cos_tail(T, 1.0, q)


def interval_end(k: int) -> float:
    """x_k = (2k - 1) pi for k >= 1, and x_0 = 0."""
    return 0.0 if k == 0 else (2 * k - 1) * np.pi


@dataclass(frozen=True)
class ZeroBracket:
    """A zero tau_k of g on (x_{k-1}, x_k) with the scan cell that contains it."""

    k: int
    lo: float
    hi: float
    root: float
    residual: float
    sign_changes: int = 1
    scan_cells: int = 64


_INSET = 1e-9


def find_tau(k: int, residual_tol: float = 1e-10) -> ZeroBracket:
    """Locate tau_k, the first sign change of g on (x_{k-1}, x_k).

    The interval (shrunk by 1e-9 at both ends) is scanned with 64 cells,
    doubled up to 4096 if no sign change shows. The root is then polished
    with Brent's method. ``sign_changes`` counts how many cells changed
    sign; more than one triggers a warning since tau_k is then ambiguous.
    """
    if k < 1:
        raise ArgumentError("k must be >= 1")
    a = interval_end(k - 1) + _INSET
    b = interval_end(k) - _INSET
    cells = 64
    while True:
        xs = np.linspace(a, b, cells + 1)
        vals = g_closed(xs)
        flips = np.nonzero(np.signbit(vals[:-1]) != np.signbit(vals[1:]))[0]
        if len(flips) or cells >= 4096:
            break
        cells *= 2
    if not len(flips):
        raise RootNotFoundError(f"no sign change of g on (x_{k - 1}, x_{k}) at {cells} cells")
    if len(flips) > 1:
        warnings.warn(f"g changes sign {len(flips)} times on (x_{k - 1}, x_{k})", stacklevel=2)
    i = flips[0]
    lo, hi = float(xs[i]), float(xs[i + 1])
    root = brentq(g_closed, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
    residual = abs(g_closed(root))
    if residual > residual_tol:
        raise RootNotFoundError(f"tau_{k} residual {residual:.3g} above {residual_tol:.3g}")
    return ZeroBracket(k, lo, hi, float(root), float(residual), len(flips), cells)
