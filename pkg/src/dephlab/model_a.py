"""Qubit dephased by an infinite bosonic bath, correlated initial state.

Frequencies and times are measured in units of the bath cut-off, so the
cut-off is 1 everywhere below. The spectral density and the coherent-state
profile are power laws with exponential cut-off::

    g_h(w)^2 = alpha_eff * w**(mu - 1) * exp(-w)
    f(w)^2   = gamma_eff * w**(nu - 1) * exp(-w)
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidStateError
from .numerics import gamma, quad_semiinf
from .qstate import STATE_TOL, QubitState

DephasingValue = complex


def check_amplitudes(b_plus: complex, b_minus: complex, allow_zero: bool = False) -> None:
    norm = abs(b_plus) ** 2 + abs(b_minus) ** 2
    if abs(norm - 1.0) > STATE_TOL:
        raise DomainError(f"|b_plus|^2 + |b_minus|^2 = {norm!r}, expected 1")
    if not allow_zero and (b_plus == 0 or b_minus == 0):
        raise DomainError("b_plus and b_minus must both be non-zero")


def check_lam(lam: float) -> None:
    if not (0.0 <= lam <= 1.0):
        raise DomainError("lam out of [0,1]")


@dataclass(frozen=True)
class ModelAParams:
    alpha_eff: float = 0.01
    gamma_eff: float = 0.05
    mu: float = 0.01
    nu: float = 0.2
    eps: float = 1.0
    lam: float = 0.0
    b_plus: complex = complex(math.sqrt(0.5))
    b_minus: complex = complex(math.sqrt(0.5))

    def __post_init__(self):
        for name in ("alpha_eff", "gamma_eff", "mu", "nu", "eps", "lam"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.alpha_eff < 0 or self.gamma_eff < 0:
            raise DomainError("alpha_eff and gamma_eff must be non-negative")
        if self.mu <= 0 or self.nu <= 0:
            raise DomainError("mu and nu must be positive")
        check_lam(self.lam)
        check_amplitudes(self.b_plus, self.b_minus)


def l_func(w: float, m: float, t: float) -> float:
    """``w * Gamma(m) * (1 - cos(m * atan t) / (1 + t^2)^(m/2))``."""
    if m <= 0:
        raise DomainError(f"exponent must be positive, got {m!r}")
    # 1 - c*e^{-x} evaluated as -expm1(log c - x) to keep precision at small t.
    c = math.cos(m * math.atan(t))
    decay = 0.5 * m * math.log1p(t * t)
    if c > 0:
        bracket = -math.expm1(math.log(c) - decay)
    else:
        bracket = 1.0 - c * math.exp(-decay)
    return w * gamma(m) * bracket


def rst_phi(p: ModelAParams, t: float):
    """Closed forms of the decay ``r``, the correlation term ``s`` and the phase ``phi``."""
    cross = math.sqrt(p.alpha_eff * p.gamma_eff)
    kappa = 0.5 * (p.mu + p.nu)
    r = 4.0 * l_func(p.alpha_eff, p.mu, t)
    s = 2.0 * l_func(cross, kappa, t) - 0.5 * p.gamma_eff * gamma(p.nu)
    phi = cross * gamma(kappa) * math.sin(kappa * math.atan(t)) / (1.0 + t * t) ** (0.5 * kappa)
    return r, s, phi


def rst_phi_quadrature(p: ModelAParams, t: float, tol: float = 1e-10):
    """Same triple as :func:`rst_phi`, by direct numerical integration."""
    cross = math.sqrt(p.alpha_eff * p.gamma_eff)
    kappa = 0.5 * (p.mu + p.nu)

    def one_minus_cos(w):
        return 2.0 * np.sin(0.5 * w * t) ** 2

    r = 4.0 * quad_semiinf(lambda w: p.alpha_eff * w ** (p.mu - 1) * np.exp(-w) * one_minus_cos(w), tol)
    s_osc = quad_semiinf(lambda w: cross * w ** (kappa - 1) * np.exp(-w) * one_minus_cos(w), tol)
    f_norm = quad_semiinf(lambda w: p.gamma_eff * w ** (p.nu - 1) * np.exp(-w), tol)
    phi = quad_semiinf(lambda w: cross * w ** (kappa - 1) * np.exp(-w) * np.sin(w * t), tol)
    return r, 2.0 * s_osc - 0.5 * f_norm, phi


def vacuum_overlap(p: ModelAParams) -> float:
    """``<Omega_0|Omega_f> = exp(-|f|^2 / 2)``."""
    return math.exp(-0.5 * p.gamma_eff * gamma(p.nu))


def normalization(lam: float, overlap: float) -> float:
    return math.sqrt((1.0 - lam) ** 2 + lam**2 + 2.0 * lam * (1.0 - lam) * overlap)


def c_lambda_a(p: ModelAParams) -> float:
    return normalization(p.lam, vacuum_overlap(p))


def dephasing_a(p: ModelAParams, t: float) -> DephasingValue:
    r, s, phi = rst_phi(p, t)
    bracket = 1.0 - p.lam + p.lam * cmath.exp(complex(s, -2.0 * phi))
    return cmath.exp(complex(-r, -2.0 * p.eps * t)) * bracket / c_lambda_a(p)


def qubit_state(b_plus: complex, b_minus: complex, a: complex, t: float | None = None) -> QubitState:
    """Reduced state with populations ``|b_pm|^2`` and coherence ``b+ b-* a``."""
    s = QubitState(abs(b_plus) ** 2, b_plus * b_minus.conjugate() * a)
    if s.margin < -STATE_TOL:
        where = "" if t is None else f" at t={t!r}"
        raise InvalidStateError(f"non-positive density matrix{where} (margin {s.margin:.3e})")
    return s


def rho_a(p: ModelAParams, t: float) -> QubitState:
    return qubit_state(p.b_plus, p.b_minus, dephasing_a(p, t), t)
