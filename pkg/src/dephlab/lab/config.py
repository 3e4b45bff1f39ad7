"""Experiment configuration: a line-based ``key = value`` document.

Blank lines and ``#`` comments are ignored. Numbers accept ``pi`` forms
such as ``pi/2``, ``2*pi`` or ``0.5pi``. Per-state keys end in ``1`` or
``2``; everything else is shared by both states. State amplitudes are
given as Bloch angles, ``b_plus = cos(theta/2)`` and
``b_minus = exp(i zeta) sin(theta/2)``.
"""
from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError, DomainError
from ..model_a import ModelAParams
from ..model_b import BRANCHES, Coherent, ModelBParams, Number

COMMON_DEFAULTS = {
    "eps": 1.0,
    "lam1": 0.0,
    "lam2": 0.0,
    "theta1": math.pi / 2,
    "zeta1": 0.0,
    "theta2": math.pi / 2,
    "zeta2": 0.0,
    "t_start": 0.0,
    "csv": None,
    "plot": None,
    "scan_axis": None,
    "scan_values": None,
}
MODEL_DEFAULTS = {
    "A": {
        "alpha_eff": 0.01,
        "gamma_eff": 0.05,
        "mu": 0.01,
        "nu": 0.2,
        "t_end": 40.0,
        "n_points": 2001,
    },
    "B": {
        "g": 0.1,
        "prep": "coherent",
        "z_abs": 1.0,
        "phase": 0.0,
        "n": 1,
        "branch": "printed",
        "phase_reading": "minus",
        "t_end": 4 * math.pi,
        "n_points": 801,
    },
}
STRING_KEYS = {"model", "prep", "branch", "phase_reading", "csv", "plot", "scan_axis"}
INT_KEYS = {"n", "n_points"}
SCAN_AXES = {"A": ("lam", "theta", "zeta"), "B": ("lam", "z_abs", "phase", "theta", "zeta", "n")}

_PI_RE = re.compile(r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?|[+-])?\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$")


def parse_number(text: str) -> float:
    text = text.strip()
    try:
        return float(text)
    except ValueError:
        pass
    m = _PI_RE.match(text)
    if not m:
        raise ValueError(f"not a number: {text!r}")
    coef = m.group(1)
    if coef in (None, "+", "-"):
        coef = -1.0 if coef == "-" else 1.0
    value = float(coef) * math.pi
    if m.group(2):
        value /= float(m.group(2))
    return value


def parse_values(text: str) -> list[float]:
    """Comma list of numbers, or ``linspace(start, stop, num)``."""
    text = text.strip()
    m = re.fullmatch(r"linspace\((.*)\)", text)
    if m:
        parts = [p for p in m.group(1).split(",")]
        if len(parts) != 3:
            raise ValueError("linspace needs start, stop, num")
        start, stop = parse_number(parts[0]), parse_number(parts[1])
        num = int(parts[2])
        return [float(v) for v in np.linspace(start, stop, num)]
    return [parse_number(p) for p in text.split(",") if p.strip()]


@dataclass(frozen=True)
class TimeGrid:
    t_start: float
    t_end: float
    n: int

    def __post_init__(self):
        if not (math.isfinite(self.t_start) and math.isfinite(self.t_end)):
            raise DomainError("grid bounds must be finite")
        if self.t_start < 0 or self.t_end <= self.t_start:
            raise DomainError("grid needs 0 <= t_start < t_end")
        if self.n < 2:
            raise DomainError("grid needs at least 2 points")

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n)

    def refined(self) -> "TimeGrid":
        """Same span with half the step."""
        return TimeGrid(self.t_start, self.t_end, 2 * self.n - 1)


@dataclass(frozen=True)
class ScanSpec:
    axis: str
    values: tuple
    statistic: str = "max_increase"


@dataclass(frozen=True)
class ExperimentConfig:
    model: str
    params1: ModelAParams | ModelBParams
    params2: ModelAParams | ModelBParams
    grid: TimeGrid
    csv: str | None = None
    plot: str | None = None
    scan: ScanSpec | None = None
    settings: dict = field(default_factory=dict, compare=False)

    def with_overrides(self, **overrides) -> "ExperimentConfig":
        return build_config({**self.settings, **overrides})


def amplitudes(theta: float, zeta: float) -> tuple[complex, complex]:
    return complex(math.cos(theta / 2)), cmath.exp(1j * zeta) * math.sin(theta / 2)


def _coerce(key: str, raw: str, line: int | None):
    try:
        if key in STRING_KEYS:
            return raw.strip()
        if key == "scan_values":
            return tuple(parse_values(raw))
        if key in INT_KEYS:
            value = parse_number(raw)
            if value != int(value):
                raise ValueError("expected an integer")
            return int(value)
        return parse_number(raw)
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}", line) from None


def parse_config(text: str, overrides: dict | None = None) -> ExperimentConfig:
    """Parse a configuration document and apply ``overrides`` (raw strings)."""
    raw: dict[str, tuple[str, int | None]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError("expected 'key = value'", lineno)
        key, value = (part.strip() for part in body.split("=", 1))
        if not key:
            raise ConfigError("empty key", lineno)
        if key in raw:
            raise ConfigError(f"duplicate key {key!r}", lineno)
        raw[key] = (value, lineno)
    for key, value in (overrides or {}).items():
        raw[key] = (str(value), None)
    if "model" not in raw:
        raise ConfigError("missing required key 'model'")
    model = raw["model"][0].strip().upper()
    if model not in MODEL_DEFAULTS:
        raise ConfigError(f"model must be A or B, got {raw['model'][0]!r}", raw["model"][1])
    known = set(COMMON_DEFAULTS) | set(MODEL_DEFAULTS[model]) | {"model"}
    settings = {"model": model, **COMMON_DEFAULTS, **MODEL_DEFAULTS[model]}
    for key, (value, lineno) in raw.items():
        if key == "model":
            continue
        if key not in known:
            raise ConfigError(f"unknown key {key!r} for model {model}", lineno)
        settings[key] = _coerce(key, value, lineno)
    return build_config(settings)


def _state_params(s: dict, k: int):
    b_plus, b_minus = amplitudes(s[f"theta{k}"], s[f"zeta{k}"])
    if s["model"] == "A":
        return ModelAParams(
            alpha_eff=s["alpha_eff"], gamma_eff=s["gamma_eff"], mu=s["mu"], nu=s["nu"],
            eps=s["eps"], lam=s[f"lam{k}"], b_plus=b_plus, b_minus=b_minus,
        )
    if s["prep"] == "coherent":
        prep = Coherent(s["z_abs"], s["phase"])
    elif s["prep"] == "number":
        prep = Number(int(s["n"]))
    else:
        raise DomainError("prep must be 'coherent' or 'number'")
    if s["branch"] not in BRANCHES:
        raise DomainError(f"branch must be one of {', '.join(BRANCHES)}")
    return ModelBParams(
        g=s["g"], eps=s["eps"], lam=s[f"lam{k}"], prep=prep, b_plus=b_plus, b_minus=b_minus,
        branch=s["branch"], phase_reading=s["phase_reading"],
    )


def build_config(settings: dict) -> ExperimentConfig:
    """Validate a fully resolved settings dict into an :class:`ExperimentConfig`."""
    s = dict(settings)
    model = s["model"]
    for key in ("lam1", "lam2"):
        if not 0.0 <= s[key] <= 1.0:
            raise ConfigError(f"{key}: lam out of [0,1]")
    params = []
    for k in (1, 2):
        try:
            params.append(_state_params(s, k))
        except DomainError as exc:
            raise ConfigError(f"state {k}: {exc}") from None
    try:
        grid = TimeGrid(s["t_start"], s["t_end"], s["n_points"])
    except DomainError as exc:
        raise ConfigError(f"grid: {exc}") from None
    scan = None
    if s.get("scan_axis"):
        axis = s["scan_axis"]
        if axis not in SCAN_AXES[model]:
            raise ConfigError(f"scan_axis {axis!r} not available for model {model}")
        values = s.get("scan_values")
        if not values:
            raise ConfigError("scan_axis given without scan_values")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ConfigError("scan_values must be strictly increasing")
        if axis == "n" and any(v != int(v) for v in values):
            raise ConfigError("scan over n needs integer values")
        scan = ScanSpec(axis, tuple(values))
    elif s.get("scan_values"):
        raise ConfigError("scan_values given without scan_axis")
    return ExperimentConfig(model, params[0], params[1], grid, s.get("csv"), s.get("plot"), scan, s)


def load_config(path, overrides: dict | None = None) -> ExperimentConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read(), overrides)
