"""Time sweeps and parameter scans."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..distances import DistanceRecord, all_distances
from ..errors import DephlabError
from ..model_a import dephasing_a, rho_a
from ..model_b import dephasing_b, rho_b
from .config import ExperimentConfig

MEASURES = ("D_T", "D_HS", "D_B", "D_H", "D_JS")


@dataclass
class TimeSeries:
    times: np.ndarray
    values: np.ndarray  # shape (n, 5), columns as MEASURES
    metadata: dict = field(default_factory=dict)

    @property
    def rows(self):
        for t, row in zip(self.times, self.values):
            yield float(t), DistanceRecord(*map(float, row))

    def column(self, measure: str) -> np.ndarray:
        return self.values[:, MEASURES.index(measure)]

    def max_increase(self) -> np.ndarray:
        """``MAX[D(t) - D(0)]`` per measure, on grid points only."""
        return (self.values - self.values[0]).max(axis=0)


@dataclass
class ScanResult:
    axis: str
    values: np.ndarray
    stats: np.ndarray  # shape (m, 5)
    metadata: dict = field(default_factory=dict)

    def column(self, measure: str) -> np.ndarray:
        return self.stats[:, MEASURES.index(measure)]


def _state(model: str):
    return rho_a if model == "A" else rho_b


def dephasing(model: str):
    return dephasing_a if model == "A" else dephasing_b


def run_timeseries(cfg: ExperimentConfig, grid=None) -> TimeSeries:
    """Distances between the two configured states at every grid time."""
    state = _state(cfg.model)
    times = (grid or cfg.grid).times()
    out = np.empty((len(times), len(MEASURES)))
    for i, t in enumerate(times):
        t = float(t)
        try:
            rec = all_distances(state(cfg.params1, t), state(cfg.params2, t))
        except DephlabError as exc:
            raise type(exc)(f"t={t!r}: {exc}") from exc
        out[i] = rec.as_tuple()
    return TimeSeries(times, out, dict(cfg.settings))


def _scan_overrides(axis: str, value: float) -> dict:
    if axis == "lam":
        return {"lam2": value}
    if axis in ("theta", "zeta"):
        return {f"{axis}2": value}
    if axis == "n":
        return {"n": int(value), "prep": "number"}
    return {axis: value}


def config_at(cfg: ExperimentConfig, value: float) -> ExperimentConfig:
    """The configuration for one value of the scan axis."""
    settings = {**cfg.settings, **_scan_overrides(cfg.scan.axis, value)}
    settings["scan_axis"] = settings["scan_values"] = None
    return cfg.with_overrides(**settings)


def run_scan(cfg: ExperimentConfig, grid=None) -> ScanResult:
    if cfg.scan is None:
        raise ValueError("configuration has no scan")
    stats = np.array([run_timeseries(config_at(cfg, v), grid).max_increase() for v in cfg.scan.values])
    return ScanResult(cfg.scan.axis, np.array(cfg.scan.values, dtype=float), stats, dict(cfg.settings))
