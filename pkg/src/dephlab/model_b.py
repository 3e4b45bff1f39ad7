"""Qubit dephased by a single boson mode.

Times are in units of the inverse mode frequency. The environment part of the
initial state mixes the vacuum with either a coherent state or a number state.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError
from .model_a import DephasingValue, check_amplitudes, check_lam, normalization, qubit_state
from .qstate import QubitState

N_CAP = 20


@dataclass(frozen=True)
class Coherent:
    z_abs: float = 1.0
    phase: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.z_abs) and math.isfinite(self.phase)):
            raise DomainError("coherent amplitude and phase must be finite")
        if self.z_abs < 0:
            raise DomainError("z_abs must be non-negative")


@dataclass(frozen=True)
class Number:
    n: int = 1

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise DomainError("n must be a non-negative integer")
        if self.n > N_CAP:
            raise DomainError(f"n={self.n} exceeds cap {N_CAP}")


EnvPrep = Coherent | Number


@dataclass(frozen=True)
class ModelBParams:
    """Single-mode parameters.

    ``branch`` names the qubit level whose environment factor carries the
    correlated mixture ``(1-lam)|0> + lam|F>``; the other level starts with
    the vacuum. ``"ground"`` and ``"excited"`` give the exact dynamics of
    those two preparations. ``"printed"`` (default) keeps the textbook closed
    forms as they stand: they are exact for the ground-branch preparation
    with a coherent state and for the excited-branch preparation with a
    number state.

    ``phase_reading`` selects the first sine in the coherent-state phase
    ``Lam(t) = g|z| [sin(t -+ phi) + sin(phi)]``. ``"minus"`` (default) is the
    exact result and keeps ``A(0)`` real; ``"plus"`` exists only for
    sensitivity comparisons. The two coincide at ``phi = 0``.
    """

    g: float = 0.1
    eps: float = 1.0
    lam: float = 0.0
    prep: EnvPrep = field(default_factory=Coherent)
    b_plus: complex = complex(math.sqrt(0.5))
    b_minus: complex = complex(math.sqrt(0.5))
    branch: str = "printed"
    phase_reading: str = "minus"

    def __post_init__(self):
        if not (math.isfinite(self.g) and math.isfinite(self.eps)):
            raise DomainError("g and eps must be finite")
        if self.g < 0:
            raise DomainError("g must be non-negative")
        check_lam(self.lam)
        check_amplitudes(self.b_plus, self.b_minus, allow_zero=True)
        if self.branch not in BRANCHES:
            raise DomainError(f"branch must be one of {BRANCHES}")
        if self.phase_reading not in ("minus", "plus"):
            raise DomainError("phase_reading must be 'minus' or 'plus'")
        if not isinstance(self.prep, (Coherent, Number)):
            raise DomainError("prep must be Coherent or Number")


BRANCHES = ("printed", "ground", "excited")


def rsl_coherent(g: float, z_abs: float, phase: float, t: float,
                 branch: str = "ground", reading: str = "minus"):
    """Return ``(R, S, Lam)`` for a coherent preparation ``z = z_abs e^{i phase}``.

    ``R = 4g^2 (1 - cos t)``, ``S = 2g|z| [cos(phase) - cos(t - phase)] - |z|^2/2``
    and ``Lam = g|z| [sin(t - phase) + sin(phase)]``. On the excited branch the
    oscillating part of ``S`` changes sign; ``"printed"`` is the ground form.
    """
    big_r = 4.0 * g * g * (1.0 - math.cos(t))
    osc = 2.0 * g * z_abs * (math.cos(phase) - math.cos(t - phase))
    if branch == "excited":
        osc = -osc
    big_s = osc - 0.5 * z_abs * z_abs
    shifted = t - phase if reading == "minus" else t + phase
    lam = g * z_abs * (math.sin(shifted) + math.sin(phase))
    return big_r, big_s, lam


def _envelope(g: float, eps: float, t: float) -> complex:
    return cmath.exp(complex(-4.0 * g * g * (1.0 - math.cos(t)), -2.0 * eps * t))


def dephasing_b_coherent(p: ModelBParams, t: float) -> DephasingValue:
    if not isinstance(p.prep, Coherent):
        raise DomainError("dephasing_b_coherent needs a coherent preparation")
    z = p.prep.z_abs
    _, big_s, lam_t = rsl_coherent(p.g, z, p.prep.phase, t, p.branch, p.phase_reading)
    c = normalization(p.lam, math.exp(-0.5 * z * z))
    bracket = 1.0 - p.lam + p.lam * cmath.exp(complex(big_s, -2.0 * lam_t))
    return _envelope(p.g, p.eps, t) * bracket / c


def b_n(g: float, n: int, t: float, branch: str = "printed") -> complex:
    """Number-state amplitude ``(2g)^n / sqrt(n!) * (e^{-it} - 1)^n``.

    This is the excited-branch (and printed) form. On the ground branch the
    base is ``1 - e^{it}`` instead, with the same modulus.
    """
    if int(n) != n or n < 0:
        raise DomainError("n must be a non-negative integer")
    if n > N_CAP:
        raise DomainError(f"n={n} exceeds cap {N_CAP}")
    if n == 0:
        return 1 + 0j
    if branch in ("printed", "excited"):
        base = cmath.exp(-1j * t) - 1.0
    elif branch == "ground":
        base = 1.0 - cmath.exp(1j * t)
    else:
        raise DomainError(f"unknown branch {branch!r}")
    coef = 1.0
    for k in range(1, n + 1):
        coef *= 2.0 * g / math.sqrt(k)
    return coef * base**n


def dephasing_b_number(p: ModelBParams, t: float) -> DephasingValue:
    if not isinstance(p.prep, Number):
        raise DomainError("dephasing_b_number needs a number-state preparation")
    n = p.prep.n
    c = normalization(p.lam, 1.0 if n == 0 else 0.0)
    bracket = 1.0 - p.lam + p.lam * b_n(p.g, n, t, p.branch)
    return _envelope(p.g, p.eps, t) * bracket / c


def dephasing_b(p: ModelBParams, t: float) -> DephasingValue:
    if isinstance(p.prep, Coherent):
        return dephasing_b_coherent(p, t)
    return dephasing_b_number(p, t)


def rho_b(p: ModelBParams, t: float) -> QubitState:
    return qubit_state(p.b_plus, p.b_minus, dephasing_b(p, t), t)
