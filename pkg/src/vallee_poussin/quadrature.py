"""Quadrature settings shared by every module, and a checked wrapper around QUADPACK."""

from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass

import numpy as np
from scipy import integrate

from .errors import ArgumentError, ConvergenceError

TAIL_POLICIES = ("closed_form_tail", "domain_transform")


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and limits for all integrals computed by the package.

    ``abs_tol``/``rel_tol``/``max_subdivisions`` drive adaptive quadrature.
    ``tail_policy`` selects how integrals to infinity are closed off:
    ``"closed_form_tail"`` sums the integration-by-parts series of the
    oscillatory tail, ``"domain_transform"`` rotates the tail onto the
    imaginary direction and applies Gauss-Laguerre.

    ``coef_tol``, ``min_grid`` and ``max_grid`` control the trapezoidal
    Fourier-coefficient rule (grid doubling stops once successive grids
    agree within ``coef_tol`` or ``max_grid`` is reached).
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000
    tail_policy: str = "closed_form_tail"
    coef_tol: float = 1e-13
    min_grid: int = 256
    max_grid: int = 2**20

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ArgumentError("abs_tol and rel_tol must be positive")
        if self.max_subdivisions < 10:
            raise ArgumentError("max_subdivisions must be at least 10")
        if self.tail_policy not in TAIL_POLICIES:
            raise ArgumentError(
                f"tail_policy must be one of {TAIL_POLICIES}, got {self.tail_policy!r}"
            )
        if self.coef_tol <= 0:
            raise ArgumentError("coef_tol must be positive")
        if self.min_grid < 8 or self.max_grid < self.min_grid:
            raise ArgumentError("need 8 <= min_grid <= max_grid")

    def to_dict(self) -> dict:
        return asdict(self)


DEFAULT = QuadratureConfig()


def quad(func, a, b, q: QuadratureConfig = DEFAULT, points=None, strict=True):
    """Adaptive quadrature returning ``(value, error_estimate)``.

    QUADPACK warnings are absorbed; the returned error estimate is what
    callers should reason with. With ``strict`` a ConvergenceError is
    raised when that estimate is more than 1e3 times the requested
    tolerance.
    """
    if points is not None:
        points = sorted(p for p in set(points) if a < p < b)
        if not points:
            points = None
    limit = q.max_subdivisions
    if points is not None:
        limit = max(limit, 2 * len(points) + 10)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err = integrate.quad(
            func, a, b, epsabs=q.abs_tol, epsrel=q.rel_tol, limit=limit, points=points
        )
    target = max(q.abs_tol, q.rel_tol * abs(value))
    if strict and not (err <= 1e3 * target) and np.isfinite(value):
        raise ConvergenceError(
            f"quadrature on [{a}, {b}] reached only {err:.3g} (target {target:.3g})",
            achieved=err,
        )
    if not np.isfinite(value):
        raise ConvergenceError(f"quadrature on [{a}, {b}] produced {value}", achieved=err)
    return value, err
