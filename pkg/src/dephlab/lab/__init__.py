"""Experiment driver: configuration, sweeps, scans and output."""
from .config import ExperimentConfig, ScanSpec, TimeGrid, load_config, parse_config
from .emit import emit_csv, emit_plot
from .experiment import MEASURES, ScanResult, TimeSeries, run_scan, run_timeseries
