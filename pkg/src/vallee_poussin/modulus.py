"""Modulus of continuity estimates and the test-function corpus.

omega(f, delta) = sup_{|h| <= delta} sup_x |f(x + h) - f(x)| is estimated
from below on finite grids. The corpus families are chosen so that their
moduli are either known in closed form (``holder_alpha``) or bounded by a
recorded Lipschitz constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import ndtr

from .errors import ArgumentError
from .trigsum import TWO_PI, PeriodicFunction

FAMILIES = ("holder_alpha", "trig_poly", "lipschitz_sawtooth_smoothed", "random_trig", "constant")

_MIN_OFFSETS = 64


@dataclass(frozen=True)
class TestFunctionSpec:
    """A family name plus its parameters, e.g.
    ``TestFunctionSpec("holder_alpha", {"alpha": 0.5})``."""

    __test__ = False  # not a pytest class

    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ArgumentError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "holder_alpha":
            alpha = self.params.get("alpha")
            if alpha is None or not (0 < float(alpha) <= 1):
                raise ArgumentError(f"holder_alpha requires alpha in (0, 1], got {alpha!r}")
        if self.family == "random_trig":
            d = self.params.get("degree", 8)
            if int(d) != d or d < 1:
                raise ArgumentError(f"random_trig degree must be a positive integer, got {d!r}")
        if self.family == "lipschitz_sawtooth_smoothed":
            r = self.params.get("peak", 0.25)
            w = self.params.get("width", 0.05)
            if not (0 < r < 1) or not (0 < w <= 0.3):
                raise ArgumentError("sawtooth needs 0 < peak < 1 and 0 < width <= 0.3")

    @classmethod
    def from_dict(cls, d: dict) -> TestFunctionSpec:
        d = dict(d)
        family = d.pop("family", None)
        if family is None:
            raise ArgumentError("missing 'family'")
        params = d.pop("params", {})
        params = {**params, **d}
        return cls(family, params)

    def to_dict(self) -> dict:
        return {"family": self.family, **self.params}

    @property
    def label(self) -> str:
        if not self.params:
            return self.family
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()) if k not in ("a", "b"))
        return f"{self.family}({inner})"


def _trig_evaluator(a0, a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)

    def evaluator(x):
        out = np.full(np.shape(x), a0 / 2.0)
        for k in range(1, max(len(a), len(b)) + 1):
            if k <= len(a) and a[k - 1]:
                out = out + a[k - 1] * np.cos(k * x)
            if k <= len(b) and b[k - 1]:
                out = out + b[k - 1] * np.sin(k * x)
        return out

    return evaluator


def _smoothed_sawtooth(peak, width, amplitude):
    c = TWO_PI * peak
    up = amplitude / c
    down = -amplitude / (TWO_PI - c)
    kinks = []
    for m in (-1, 0, 1, 2):
        kinks.append((TWO_PI * m, up - down))
        kinks.append((TWO_PI * m + c, down - up))
    locs = np.array([k for k, _ in kinks])
    jumps = np.array([j for _, j in kinks])

    def evaluator(x):
        x = np.mod(x, TWO_PI)
        out = down * (x + TWO_PI)
        for loc, jump in zip(locs, jumps):
            u = (x - loc) / width
            # ramp max(u, 0) averaged against a Gaussian of std `width`
            out = out + jump * width * (u * ndtr(u) + np.exp(-0.5 * u * u) / np.sqrt(TWO_PI))
        return out

    return evaluator, max(up, -down)


def make_test_function(spec: TestFunctionSpec, seed: int = 0) -> PeriodicFunction:
    """Build the corpus member described by ``spec``.

    holder_alpha
        A * |sin(x/2)|^alpha; omega(delta) = A sin(delta/2)^alpha exactly,
        so the Hoelder constant is A * 2^-alpha.
    trig_poly
        a0/2 + sum a_k cos kx + b_k sin kx from explicit ``a0``, ``a``, ``b``.
    lipschitz_sawtooth_smoothed
        periodic hat rising on [0, 2 pi peak] and falling back, convolved
        with a Gaussian of std ``width``.
    random_trig
        degree-``degree`` polynomial with N(0, 1) * k^-2 coefficients drawn
        from ``seed`` (falls back to the ``seed`` argument).
    constant
        the constant ``value``.
    """
    p = spec.params
    A = float(p.get("amplitude", 1.0))
    if spec.family == "holder_alpha":
        alpha = float(p["alpha"])
        return PeriodicFunction(
            lambda x: A * np.abs(np.sin(x / 2.0)) ** alpha,
            name=spec.label,
            smoothness="holder",
            alpha=alpha,
            holder_constant=abs(A) * 2.0**-alpha,
            breakpoints=(0.0,),
        )
    if spec.family == "trig_poly":
        a0 = float(p.get("a0", 0.0))
        a = [float(v) for v in p.get("a", [])]
        b = [float(v) for v in p.get("b", [])]
        deg = max(len(a), len(b))
        lip = float(sum(k * (abs(u) + abs(v)) for k, (u, v) in
                        enumerate(zip(a + [0.0] * (deg - len(a)), b + [0.0] * (deg - len(b))), 1)))
        return PeriodicFunction(
            _trig_evaluator(a0, a, b), name=spec.label, smoothness="polynomial",
            alpha=1.0, holder_constant=lip, degree=deg,
            meta={"a0": a0, "a": a, "b": b},
        )
    if spec.family == "lipschitz_sawtooth_smoothed":
        ev, lip = _smoothed_sawtooth(float(p.get("peak", 0.25)), float(p.get("width", 0.05)), A)
        return PeriodicFunction(
            ev, name=spec.label, smoothness="smooth", alpha=1.0, holder_constant=abs(lip)
        )
    if spec.family == "random_trig":
        deg = int(p.get("degree", 8))
        rng = np.random.default_rng(int(p.get("seed", seed)))
        k = np.arange(1, deg + 1, dtype=float)
        a = A * rng.standard_normal(deg) / k**2
        b = A * rng.standard_normal(deg) / k**2
        lip = float(np.sum(k * (np.abs(a) + np.abs(b))))
        return PeriodicFunction(
            _trig_evaluator(0.0, a, b), name=spec.label, smoothness="polynomial",
            alpha=1.0, holder_constant=lip, degree=deg,
            meta={"a0": 0.0, "a": a.tolist(), "b": b.tolist()},
        )
    value = float(p.get("value", 0.0))
    return PeriodicFunction(
        lambda x: np.full(np.shape(x), value), name=spec.label, smoothness="polynomial",
        alpha=1.0, holder_constant=0.0, degree=0,
    )


def _pow2_at_least(v):
    return 1 << int(np.ceil(np.log2(max(v, 1))))


def _grid_modulus(f, deltas, N, M):
    """Lower estimates of omega(f, delta) for each delta on an N-point grid.

    Offsets are multiples of the grid spacing (stride chosen so that at
    most ~M of them fall in [0, delta]) plus delta itself.
    """
    x = TWO_PI * np.arange(N) / N
    y = f(x)
    dx = TWO_PI / N
    out = np.empty(len(deltas))
    for i, d in enumerate(deltas):
        J = int(np.floor(d / dx + 1e-9))
        stride = max(1, J // M)
        best = float(np.max(np.abs(f(x + d) - y)))
        for j in range(stride, J + 1, stride):
            best = max(best, float(np.max(np.abs(np.roll(y, -j) - y))))
        out[i] = best
    return out


def _check_delta(delta):
    if not (0 < delta <= np.pi + 1e-12):
        raise ArgumentError(f"delta must lie in (0, pi], got {delta!r}")


def estimate_modulus(
    f: PeriodicFunction,
    delta: float,
    grid_points: int = 4096,
    offsets: int = 256,
    max_doublings: int = 3,
    full_output: bool = False,
):
    """Grid estimate of omega(f, delta) (a lower bound of the true value).

    The x-grid is refined (together with the offset count) until doubling
    changes the estimate by less than 1e-4 relative. With ``full_output``
    returns ``(value, info)`` where ``info`` holds ``converged`` and the
    final ``grid_points``.
    """
    _check_delta(delta)
    if grid_points < 256:
        raise ArgumentError("grid_points must be >= 256")
    N = max(_pow2_at_least(grid_points), _pow2_at_least(_MIN_OFFSETS * TWO_PI / delta))
    M = max(offsets, _MIN_OFFSETS)
    value = _grid_modulus(f, [delta], N, M)[0]
    converged = False
    for _ in range(max_doublings):
        N, M = 2 * N, 2 * M
        new = _grid_modulus(f, [delta], N, M)[0]
        change = abs(new - value)
        value = max(value, new)
        if change < 1e-4 * (value + 1e-12):
            converged = True
            break
    if full_output:
        return value, {"converged": converged, "grid_points": N, "offsets": M}
    return value


@dataclass(frozen=True)
class ModulusProfile:
    """Sampled omega(f, delta) on an increasing delta grid."""

    deltas: np.ndarray
    values: np.ndarray
    grid_points: int
    converged: bool
    regularized: bool = False

    def __call__(self, delta):
        """Piecewise-linear interpolation through (0, 0) and the samples."""
        d = np.concatenate([[0.0], self.deltas])
        v = np.concatenate([[0.0], self.values])
        return np.interp(delta, d, v)

    def is_monotone(self) -> bool:
        return bool(np.all(np.diff(self.values) >= 0))

    def subadditivity_violation(self) -> float:
        """Largest values[i] - values[j] - values[k] over triples with
        deltas[i] <= deltas[j] + deltas[k] (<= 0 means subadditive)."""
        d, v = self.deltas, self.values
        worst = -np.inf
        sums_d = d[:, None] + d[None, :]
        sums_v = v[:, None] + v[None, :]
        for i in range(len(d)):
            mask = d[i] <= sums_d + 1e-15
            if mask.any():
                worst = max(worst, float(np.max(v[i] - sums_v[mask])))
        return worst


def modulus_profile(
    f: PeriodicFunction,
    deltas,
    grid_points: int = 4096,
    offsets: int = 256,
    max_doublings: int = 3,
) -> ModulusProfile:
    """:func:`estimate_modulus` over a whole delta grid with shared x-grids,
    followed by a running maximum so that the profile is nondecreasing."""
    deltas = np.asarray(deltas, dtype=float)
    if deltas.ndim != 1 or len(deltas) == 0:
        raise ArgumentError("deltas must be a nonempty 1-D array")
    if np.any(np.diff(deltas) <= 0):
        raise ArgumentError("deltas must be strictly increasing")
    for d in deltas:
        _check_delta(d)
    if grid_points < 256:
        raise ArgumentError("grid_points must be >= 256")
    N = max(_pow2_at_least(grid_points), _pow2_at_least(_MIN_OFFSETS * TWO_PI / deltas[0]))
    M = max(offsets, _MIN_OFFSETS)
    values = _grid_modulus(f, deltas, N, M)
    converged = False
    for _ in range(max_doublings):
        N, M = 2 * N, 2 * M
        new = _grid_modulus(f, deltas, N, M)
        change = np.abs(new - values)
        values = np.maximum(values, new)
        if np.all(change < 1e-4 * (values + 1e-12)):
            converged = True
            break
    mono = np.maximum.accumulate(values)
    return ModulusProfile(deltas, mono, N, converged, bool(np.any(mono != values)))


def is_concave_profile(p: ModulusProfile, tol: float = 1e-6) -> bool:
    """True if every second divided difference of the profile is <= ``tol``."""
    d, v = np.asarray(p.deltas), np.asarray(p.values)
    if len(d) < 3:
        raise ArgumentError("need at least three profile points")
    s = np.diff(v) / np.diff(d)
    second = np.diff(s) / (d[2:] - d[:-2])
    return bool(np.all(second <= tol))
