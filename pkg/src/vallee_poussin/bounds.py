"""Calculators for the deviation bounds of V_{n,n/2}, and a discrete minimax oracle for E_m(f).

All multipliers are evaluated from their closed forms; none is stored as
a rounded decimal.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

from .errors import ArgumentError, ConvergenceError
from .quadrature import DEFAULT, QuadratureConfig, quad
from .trigsum import TWO_PI, PeriodicFunction, TrigCoefficients

#: sup_{||f|| <= 1} ||V_{n,n/2} f||_C
VP_HALF_NORM = 1.0 / 3.0 + 2.0 * math.sqrt(3.0) / math.pi
#: multiplier of omega(f, 2pi/n) for arbitrary continuous f
GENERAL_C_FACTOR = 4.0 / 3.0 + 2.0 * math.sqrt(3.0) / math.pi
#: multiplier of omega(f, 2pi/n) when omega(f, .) is concave
CONVEX_C_FACTOR = 2.0 / 3.0 + math.sqrt(3.0) / math.pi
#: weights of omega(6pi/7n), omega(2pi/3n), omega(pi/n) in the sharpened bound
THEOREM1_WEIGHTS = (1.0, 9.0 / (10.0 * math.pi), 31.0 / (25.0 * math.pi))


@dataclass
class BoundReport:
    """A named bound value with the inputs that produced it."""

    name: str
    value: float
    inputs: dict = field(default_factory=dict)
    strict: bool = False

    def __post_init__(self):
        if not self.value >= 0:
            raise ArgumentError(f"bound {self.name} is negative: {self.value}")

    def to_dict(self) -> dict:
        return {"name": self.name, "value": self.value, "inputs": self.inputs, "strict": self.strict}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _nonneg(**kw):
    for k, v in kw.items():
        if not v >= 0:
            raise ArgumentError(f"{k} must be nonnegative, got {v!r}")


def theorem1_deltas(n: int) -> tuple[float, float, float]:
    """Arguments (6pi/7n, 2pi/3n, pi/n) of the three moduli in the sharpened bound."""
    if n < 1:
        raise ArgumentError("n must be positive")
    return (6 * math.pi / (7 * n), 2 * math.pi / (3 * n), math.pi / n)


def theorem1_bound(w1: float, w2: float, w3: float) -> float:
    """w1 + 9/(10pi) w2 + 31/(25pi) w3, with w_i = omega(f, .) at :func:`theorem1_deltas`."""
    _nonneg(w1=w1, w2=w2, w3=w3)
    c1, c2, c3 = THEOREM1_WEIGHTS
    return c1 * w1 + c2 * w2 + c3 * w3


def classical_vp_bound(n: int, p: int, E: float) -> float:
    """2 (n/p) E_{n-p}(f)."""
    if not (1 <= p <= n):
        raise ArgumentError(f"need 1 <= p <= n, got n={n}, p={p}")
    _nonneg(E=E)
    return 2.0 * n / p * E


def lebesgue_analog_bound(op_norm: float, E: float) -> float:
    """(||V|| + 1) E_{n-p}(f)."""
    if not op_norm >= 1:
        raise ArgumentError(f"operator norm must be >= 1, got {op_norm!r}")
    _nonneg(E=E)
    return (op_norm + 1.0) * E


def general_c_bound(omega_2pi_n: float) -> float:
    """(4/3 + 2 sqrt3/pi) omega(f, 2pi/n): Lebesgue analogue with E_{n/2} < omega(f, 2pi/n)."""
    return lebesgue_analog_bound(VP_HALF_NORM, omega_2pi_n)


def convex_c_bound(omega_2pi_n: float) -> float:
    """(2/3 + sqrt3/pi) omega(f, 2pi/n), valid when omega(f, .) is concave."""
    return lebesgue_analog_bound(VP_HALF_NORM, 0.5 * omega_2pi_n)


def efimov_A(
    n: int,
    p: int,
    omega,
    e_n: float | None = None,
    q: QuadratureConfig = DEFAULT,
    branch: str | None = None,
) -> BoundReport:
    """Main term A_{n,p}(omega) of the class deviation for 1 <= p <= n-1.

    For p <= (n+1)/2 it is e_n/pi * ln((n-1)/p), where ``e_n`` (the largest
    n-th Fourier coefficient over H_omega) must be supplied. For
    p >= (n+1)/2 it is 2/(pi p) * int_{1/n}^{1/(n-p)} omega(t)/t^2 dt. At
    p = (n+1)/2 both apply; both are computed and stored in ``inputs``
    and the integral branch is the reported value. ``branch`` forces one
    formula ("log" or "integral") regardless of p. The O(1) omega(1/n)
    remainder is not quantified.
    """
    if not (1 <= p <= n - 1):
        raise ArgumentError(f"A_{{n,p}} is defined for 1 <= p <= n-1, got n={n}, p={p}")
    want_log = 2 * p <= n + 1
    want_int = 2 * p >= n + 1
    if branch is not None:
        if branch not in ("log", "integral"):
            raise ArgumentError("branch must be 'log' or 'integral'")
        want_log, want_int = branch == "log", branch == "integral"
    inputs = {"n": n, "p": p, "remainder": "O(1)*omega(1/n), unquantified"}
    value = None
    if want_log:
        if e_n is None:
            if not want_int:
                raise ArgumentError("e_n is required for p <= (n+1)/2")
        else:
            _nonneg(e_n=e_n)
            inputs["e_n"] = e_n
            inputs["log_branch"] = e_n / math.pi * math.log((n - 1) / p)
            value = inputs["log_branch"]
    if want_int:
        integral, err = quad(lambda t: omega(t) / (t * t), 1.0 / n, 1.0 / (n - p), q)
        inputs["integral_branch"] = 2.0 / (math.pi * p) * integral
        inputs["quad_error"] = 2.0 / (math.pi * p) * err
        value = inputs["integral_branch"]
    return BoundReport("efimov_A", float(value), inputs, strict=False)


def holder_two_sided(alpha: float, n: int) -> tuple[float, float]:
    """Lower and upper bounds for sup_{f in H^alpha} ||f - V_{n,n/2} f||_C:
    pi^a / ((1+a) n^a) and (6^a/7^a + 3^{2-a} 2^{a-1}/(5pi) + 31/(25pi)) pi^a / n^a."""
    if not (0 < alpha <= 1):
        raise ArgumentError(f"alpha must lie in (0, 1], got {alpha!r}")
    if n < 1:
        raise ArgumentError("n must be positive")
    scale = math.pi**alpha / n**alpha
    lower = scale / (1.0 + alpha)
    factor = (
        (6.0 / 7.0) ** alpha
        + 3.0 ** (2.0 - alpha) * 2.0 ** (alpha - 1.0) / (5.0 * math.pi)
        + 31.0 / (25.0 * math.pi)
    )
    upper = factor * scale
    if not lower < upper:
        raise ArgumentError("two-sided estimate degenerated")
    return lower, upper


def korneichuk_general(omega_pi_m: float) -> float:
    """E_m(f) < omega(f, pi/m) for nonconstant continuous f."""
    _nonneg(omega=omega_pi_m)
    return omega_pi_m


def korneichuk_concave(omega_pi_m: float) -> float:
    """E_m(f) <= omega(f, pi/m) / 2 when omega(f, .) is concave."""
    _nonneg(omega=omega_pi_m)
    return 0.5 * omega_pi_m


@dataclass
class BestApproxResult:
    m: int
    value: float
    approximant: TrigCoefficients
    equioscillation_points: np.ndarray
    converged: bool = True
    grid_points: int = 0
    history: list = field(default_factory=list)


def _design(x, m):
    k = np.arange(1, m)
    cols = [np.full_like(x, 0.5)]
    if m > 1:
        cols += [np.cos(np.outer(x, k)), np.sin(np.outer(x, k))]
        return np.column_stack([cols[0], cols[1], cols[2]])
    return cols[0][:, None]


def _alternation(x, r, value):
    tol = max(1e-9, 1e-6 * value)
    idx = np.nonzero(np.abs(r) >= value - tol)[0]
    if len(idx) == 0:
        return np.array([])
    pts = []
    for i in idx:
        s = np.sign(r[i])
        if pts and np.sign(r[pts[-1]]) == s:
            if abs(r[i]) > abs(r[pts[-1]]):
                pts[-1] = i
        else:
            pts.append(i)
    # the grid is periodic: a matching first/last sign closes one run
    if len(pts) > 1 and np.sign(r[pts[0]]) == np.sign(r[pts[-1]]):
        pts.pop()
    return x[np.array(pts, dtype=int)]


def _minimax_on_grid(fx, x, m):
    A = _design(x, m)
    nv = A.shape[1]
    ones = np.ones((len(x), 1))
    A_ub = np.vstack([np.hstack([A, -ones]), np.hstack([-A, -ones])])
    b_ub = np.concatenate([fx, -fx])
    cost = np.zeros(nv + 1)
    cost[-1] = 1.0
    res = linprog(
        cost, A_ub=A_ub, b_ub=b_ub,
        bounds=[(None, None)] * nv + [(0, None)],
        method="highs",
        options={"primal_feasibility_tolerance": 1e-10, "dual_feasibility_tolerance": 1e-10},
    )
    if res.status != 0:
        raise ConvergenceError(f"minimax LP failed: {res.message}", diagnostics={"m": m})
    coef = res.x[:nv]
    r = fx - A @ coef
    return float(np.max(np.abs(r))), coef, r


def best_approx_oracle(
    f: PeriodicFunction,
    m: int,
    grid_points: int | None = None,
    rtol: float = 1e-6,
    max_doublings: int = 4,
) -> BestApproxResult:
    """Discrete estimate of E_m(f), the best uniform error by polynomials of degree <= m-1.

    The minimax problem on a uniform grid (containing x = 0) is solved as a
    linear program; the grid is doubled until the value changes by less
    than ``rtol`` relative. Grid values never exceed the continuous E_m.
    """
    if m < 1:
        raise ArgumentError("m must be >= 1")
    N = grid_points if grid_points is not None else max(256, 16 * m)
    if N < 16 * m:
        raise ArgumentError(f"grid_points must be >= 16 m = {16 * m}")
    history = []
    value = None
    converged = False
    for _ in range(max_doublings + 1):
        x = TWO_PI * np.arange(N) / N
        fx = f(x)
        new, coef, r = _minimax_on_grid(fx, x, m)
        history.append((N, new))
        if value is not None and abs(new - value) <= rtol * max(new, 1e-300):
            value = new
            converged = True
            break
        value = new
        if new <= 1e-12:
            converged = True
            break
        N *= 2
    if max_doublings == 0:
        converged = True
    approx = TrigCoefficients(m - 1, float(coef[0]), coef[1:m], coef[m:], 0.0, N)
    return BestApproxResult(
        m, value, approx, _alternation(x, r, value), converged, N, history
    )
