"""``vp-approx``: batch front-end driven by a single JSON config.

    vp-approx <command> [--config PATH] [--out PATH] [--plot PATH]

Commands: approximate, bounds, constants, holder, verify. Exit codes:
0 all checks pass, 1 an inequality is violated, 2 inconclusive,
3 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import bounds, verify
from .deviation import sup_deviation
from .errors import ArgumentError, ClassMembershipError, ConfigError
from .modulus import (
    TestFunctionSpec, estimate_modulus, is_concave_profile, make_test_function, modulus_profile,
)
from .quadrature import QuadratureConfig
from .specfun import find_tau
from .trigsum import TWO_PI, fourier_coefficients, lebesgue_constant, vp_sum

COMMANDS = ("approximate", "bounds", "constants", "holder", "verify")
EXIT_OK, EXIT_VIOLATION, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    functions: list = field(default_factory=list)
    n_values: list = field(default_factory=lambda: [8, 16])
    p_policy: object = "half_n"
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    output: dict = field(default_factory=lambda: {"format": "csv", "path": None, "plot": None})
    seed: int = 0
    alphas: list = field(default_factory=lambda: [0.3, 0.5, 0.7, 1.0])
    x_points: int = 64

    def p_values(self, n):
        if self.p_policy == "half_n":
            return [n // 2]
        return [p for p in self.p_policy if p <= n]


def _expect(cond, field_, msg):
    if not cond:
        raise ConfigError(msg, field=field_)


def parse_config(doc: dict, command: str | None = None) -> RunConfig:
    """Validate a config document; errors name the offending field path."""
    _expect(isinstance(doc, dict), "$", "config must be a JSON object")
    cmd = doc.get("command", command)
    if command is not None and cmd != command:
        raise ConfigError(f"config is for {cmd!r}, CLI asked for {command!r}", field="command")
    _expect(cmd in COMMANDS, "command", f"must be one of {COMMANDS}")
    cfg = RunConfig(cmd)
    known = {"command", "functions", "n_values", "p_policy", "quadrature", "output", "seed",
             "alphas", "x_points"}
    for k in doc:
        _expect(k in known, k, "unknown field")
    seed = doc.get("seed", 0)
    _expect(isinstance(seed, int), "seed", "must be an integer")
    cfg.seed = seed
    funcs = doc.get("functions", [])
    _expect(isinstance(funcs, list), "functions", "must be a list")
    for i, spec in enumerate(funcs):
        _expect(isinstance(spec, dict), f"functions[{i}]", "must be an object")
        try:
            cfg.functions.append(TestFunctionSpec.from_dict(spec))
        except ArgumentError as exc:
            raise ConfigError(str(exc), field=f"functions[{i}]") from None
    if "n_values" in doc:
        nv = doc["n_values"]
        _expect(isinstance(nv, list) and nv, "n_values", "must be a nonempty list")
        for i, n in enumerate(nv):
            _expect(isinstance(n, int) and n >= 2, f"n_values[{i}]", "must be an integer >= 2")
        cfg.n_values = nv
    pp = doc.get("p_policy", "half_n")
    if pp == "half_n":
        for i, n in enumerate(cfg.n_values):
            _expect(n % 2 == 0, f"n_values[{i}]", "p = n/2 requires even n")
    else:
        _expect(isinstance(pp, dict) and isinstance(pp.get("explicit"), list),
                "p_policy", "must be 'half_n' or {\"explicit\": [p, ...]}")
        for i, p in enumerate(pp["explicit"]):
            _expect(isinstance(p, int) and p >= 1, f"p_policy.explicit[{i}]", "must be a positive integer")
        pp = pp["explicit"]
    cfg.p_policy = pp
    if "quadrature" in doc:
        _expect(isinstance(doc["quadrature"], dict), "quadrature", "must be an object")
        try:
            cfg.quadrature = QuadratureConfig(**doc["quadrature"])
        except (TypeError, ArgumentError) as exc:
            raise ConfigError(str(exc), field="quadrature") from None
    out = {"format": "csv", "path": None, "plot": None}
    out.update(doc.get("output", {}))
    _expect(out["format"] in ("csv", "json"), "output.format", "must be 'csv' or 'json'")
    cfg.output = out
    if "alphas" in doc:
        for i, a in enumerate(doc["alphas"]):
            _expect(isinstance(a, (int, float)) and 0 < a <= 1, f"alphas[{i}]", "must lie in (0, 1]")
        cfg.alphas = [float(a) for a in doc["alphas"]]
    if "x_points" in doc:
        _expect(isinstance(doc["x_points"], int) and doc["x_points"] >= 2, "x_points",
                "must be an integer >= 2")
        cfg.x_points = doc["x_points"]
    return cfg


def _coefficients(f, n_values, q):
    return fourier_coefficients(f, max(max(n_values) - 1, 1), q)


def cmd_approximate(cfg: RunConfig):
    """Samples of f, V_{n,p} f and rho on ``x_points`` points, plus sup |rho| per (function, n)."""
    rows, curves = [], []
    x = TWO_PI * np.arange(cfg.x_points) / cfg.x_points
    for spec in cfg.functions:
        f = make_test_function(spec, seed=cfg.seed)
        c = _coefficients(f, cfg.n_values, cfg.quadrature)
        for n in cfg.n_values:
            for p in cfg.p_values(n):
                sup = sup_deviation(f, c, n, p).sup_abs
                fx, vx = f(x), vp_sum(c, n, p, x)
                for xi, a, b in zip(x, fx, vx):
                    rows.append({"function": f.name, "n": n, "p": p, "x": xi, "f": a, "V": b,
                                 "rho": a - b, "sup_abs": sup})
                curves.append((f"{f.name}, n={n}, p={p}", x, fx, vx))
    return {"rows": rows, "status": verify.PASS}, curves


def _omega(f, delta):
    return estimate_modulus(f, min(delta, math.pi))


def cmd_bounds(cfg: RunConfig):
    """Measured sup |rho| against every applicable bound, one row per (function, n)."""
    rows = []
    status = verify.PASS
    profile_deltas = np.linspace(math.pi / 64, math.pi, 24)
    for spec in cfg.functions:
        f = make_test_function(spec, seed=cfg.seed)
        c = _coefficients(f, cfg.n_values, cfg.quadrature)
        concave = is_concave_profile(modulus_profile(f, profile_deltas))
        for n in cfg.n_values:
            if n % 2:
                raise ConfigError("p = n/2 requires even n", field="n_values")
            p = n // 2
            sup = sup_deviation(f, c, n, p).sup_abs
            w = [_omega(f, d) for d in bounds.theorem1_deltas(n)]
            w2 = _omega(f, TWO_PI / n)
            t1 = bounds.theorem1_bound(*w)
            gen = bounds.general_c_bound(w2)
            cvx = bounds.convex_c_bound(w2) if concave else None
            E = bounds.best_approx_oracle(f, n - p).value
            cls = bounds.classical_vp_bound(n, p, E)
            violations = []
            if not sup < t1 and not (sup == 0 and t1 == 0):
                violations.append("theorem1")
            if t1 > gen:
                violations.append("theorem1_vs_general")
            if sup > gen:
                violations.append("general_c")
            if cvx is not None and sup > cvx:
                violations.append("convex_c")
            if sup > cls + 1e-4:
                violations.append("classical")
            if violations:
                status = verify.FAIL
            rows.append({
                "function": f.name, "n": n, "p": p, "sup_abs": sup,
                "omega_6pi_7n": w[0], "omega_2pi_3n": w[1], "omega_pi_n": w[2], "omega_2pi_n": w2,
                "theorem1": t1, "general_c": gen, "convex_c": cvx, "E_n_minus_p": E,
                "classical": cls, "violations": ";".join(violations),
            })
    return {"rows": rows, "status": status}


def cmd_constants(cfg: RunConfig | None = None):
    """Closed-form multipliers and the first zeros of g."""
    c1, c2, c3 = bounds.THEOREM1_WEIGHTS
    rows = [
        {"name": "lebesgue_constant_numeric", "value": lebesgue_constant(2), "formula": "(1/2pi) int |sin(3t/2)/sin(t/2)|"},
        {"name": "vp_half_norm", "value": bounds.VP_HALF_NORM, "formula": "1/3 + 2 sqrt(3)/pi"},
        {"name": "general_c_factor", "value": bounds.GENERAL_C_FACTOR, "formula": "4/3 + 2 sqrt(3)/pi"},
        {"name": "convex_c_factor", "value": bounds.CONVEX_C_FACTOR, "formula": "2/3 + sqrt(3)/pi"},
        {"name": "theorem1_w1", "value": c1, "formula": "1"},
        {"name": "theorem1_w2", "value": c2, "formula": "9/(10 pi)"},
        {"name": "theorem1_w3", "value": c3, "formula": "31/(25 pi)"},
        {"name": "theorem1_weight_sum", "value": c1 + c2 + c3, "formula": "1 + 9/(10pi) + 31/(25pi)"},
    ]
    for k in range(1, 6):
        z = find_tau(k)
        rows.append({"name": f"tau_{k}", "value": z.root,
                     "formula": f"zero of g, sign change in [{z.lo:.6g}, {z.hi:.6g}]"})
    return {"rows": rows, "status": verify.PASS}


def _holder_corpus(alpha):
    # members normalised into H^alpha: |f(x) - f(y)| <= |x - y|^alpha
    return [
        TestFunctionSpec("holder_alpha", {"alpha": alpha, "amplitude": 2.0**alpha}),
        TestFunctionSpec("lipschitz_sawtooth_smoothed", {"peak": 0.5, "width": 0.05}),
    ]


def cmd_holder(cfg: RunConfig):
    """Lower and upper bounds on the H^alpha class deviation next to the corpus maximum."""
    from .deviation import class_members, empirical_class_sup

    rows = []
    status = verify.PASS
    for alpha in cfg.alphas:
        corpus = class_members(cfg.functions or _holder_corpus(alpha),
                               lambda t, a=alpha: t**a, seed=cfg.seed)
        for n in cfg.n_values:
            lower, upper = bounds.holder_two_sided(alpha, n)
            emp, _ = empirical_class_sup(corpus, n, q=cfg.quadrature)
            ok = emp <= upper and lower < upper
            if not ok:
                status = verify.FAIL
            rows.append({"alpha": alpha, "n": n, "lower": lower, "upper": upper,
                         "empirical": emp, "ok": ok})
    return {"rows": rows, "status": status}


def cmd_verify_run(cfg: RunConfig | None = None):
    q = cfg.quadrature if cfg is not None else QuadratureConfig()
    rep = verify.cmd_verify(q)
    return {"rows": rep["checks"], "status": rep["status"]}


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.17g}"
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, default=_json_default)
    return str(v)


def _json_default(o):
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, (np.floating, np.integer, np.bool_)):
        return o.item()
    raise TypeError(type(o))


def render(result: dict, fmt: str) -> str:
    """Serialise a command result; CSV uses 17 significant digits and LF line endings."""
    if fmt == "json":
        return json.dumps(result, sort_keys=True, indent=2, default=_json_default) + "\n"
    rows = result["rows"]
    buf = io.StringIO()
    if rows:
        cols = list(rows[0].keys())
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_fmt(r.get(c)) for c in cols])
    return buf.getvalue()


def render_svg(curves, width=640, panel_height=160) -> str:
    """One panel per curve set: f in black, V in red."""
    pad = 30
    h = panel_height * max(len(curves), 1)
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{h}">']
    for i, (title, x, fx, vx) in enumerate(curves):
        top = i * panel_height
        lo = float(min(np.min(fx), np.min(vx)))
        hi = float(max(np.max(fx), np.max(vx)))
        span = hi - lo or 1.0

        def pts(y):
            px = pad + (x - x[0]) / (TWO_PI) * (width - 2 * pad)
            py = top + panel_height - pad / 2 - (y - lo) / span * (panel_height - 1.5 * pad)
            return " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(px, py))

        parts.append(f'<text x="{pad}" y="{top + 14}" font-size="12">{title}</text>')
        parts.append(f'<polyline fill="none" stroke="black" points="{pts(fx)}"/>')
        parts.append(f'<polyline fill="none" stroke="red" stroke-dasharray="4 2" points="{pts(vx)}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def run(command: str, cfg: RunConfig | None):
    if command == "approximate":
        result, curves = cmd_approximate(cfg)
        return result, curves
    if command == "bounds":
        return cmd_bounds(cfg), None
    if command == "constants":
        return cmd_constants(cfg), None
    if command == "holder":
        return cmd_holder(cfg), None
    return cmd_verify_run(cfg), None


def _exit_code(status):
    return {verify.PASS: EXIT_OK, verify.FAIL: EXIT_VIOLATION,
            verify.INCONCLUSIVE: EXIT_INCONCLUSIVE}[status]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="vp-approx", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", help="JSON run configuration")
    parser.add_argument("--out", help="output file (default: config output.path or stdout)")
    parser.add_argument("--plot", help="SVG plot path (approximate only)")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = None
        if args.config:
            with open(args.config, encoding="utf-8") as fh:
                try:
                    doc = json.load(fh)
                except json.JSONDecodeError as exc:
                    raise ConfigError(f"invalid JSON: {exc}", field="$") from None
            cfg = parse_config(doc, args.command)
        elif args.command in ("verify", "constants"):
            cfg = RunConfig(args.command)
        else:
            raise ConfigError("--config is required", field="--config")
        if args.command in ("approximate", "bounds") and not cfg.functions:
            raise ConfigError("at least one function is required", field="functions")
        result, curves = run(args.command, cfg)
    except (ConfigError, ClassMembershipError, ArgumentError, OSError) as exc:
        print(f"vp-approx: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(result, cfg.output.get("format", "csv"))
    out = args.out or cfg.output.get("path")
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    plot = args.plot or cfg.output.get("plot")
    if plot and curves:
        with open(plot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(render_svg(curves))
    return _exit_code(result["status"])


if __name__ == "__main__":
    sys.exit(main())
