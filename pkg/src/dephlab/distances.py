"""Five distance measures between qubit states, in closed Bloch form.

All measures depend on the pair only through ``|r1|``, ``|r2|`` and
``r1 . r2``. Entropies are in nats, so the Jensen-Shannon distance peaks
at ``sqrt(ln 2)`` for orthogonal pure states.
"""
from __future__ import annotations

import math
from dataclasses import astuple, dataclass

from .errors import DomainError
from .qstate import STATE_TOL, QubitState, entropy_from_radius, to_bloch

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class DistanceRecord:
    d_t: float
    d_hs: float
    d_b: float
    d_h: float
    d_js: float

    FIELDS = ("d_t", "d_hs", "d_b", "d_h", "d_js")

    def as_tuple(self) -> tuple:
        return astuple(self)


def trace_distance(s1: QubitState, s2: QubitState) -> float:
    return 0.5 * (to_bloch(s1) - to_bloch(s2)).norm


def hs_distance(s1: QubitState, s2: QubitState) -> float:
    return (to_bloch(s1) - to_bloch(s2)).norm / SQRT2


def _fidelity_bloch(r1, r2) -> float:
    n1, n2 = r1.norm, r2.norm
    # Tr(rho1 rho2) + 2 sqrt(det rho1 det rho2), with det = (1 - r^2)/4.
    dets = max(1.0 - n1 * n1, 0.0) * max(1.0 - n2 * n2, 0.0)
    f = 0.5 * (1.0 + r1.dot(r2)) + 0.5 * math.sqrt(dets)
    return min(max(f, 0.0), 1.0)


def fidelity(s1: QubitState, s2: QubitState) -> float:
    """Uhlmann fidelity (squared convention, values in [0, 1])."""
    return _fidelity_bloch(to_bloch(s1), to_bloch(s2))


def _bures_bloch(r1, r2) -> float:
    # 1 - F = (|r1 - r2|^2 + (a1 - a2)^2) / 4 with a = sqrt(1 - r^2); this
    # keeps full relative precision for nearby states.
    n1, n2 = min(r1.norm, 1.0), min(r2.norm, 1.0)
    a1, a2 = math.sqrt(1.0 - n1 * n1), math.sqrt(1.0 - n2 * n2)
    da = (n2 - n1) * (n2 + n1) / (a1 + a2) if a1 + a2 > 0.0 else 0.0
    one_minus_f = 0.25 * ((r1 - r2).norm ** 2 + da * da)
    f = min(max(1.0 - one_minus_f, 0.0), 1.0)
    return math.sqrt(2.0 * one_minus_f / (1.0 + math.sqrt(f)))


def bures_distance(s1: QubitState, s2: QubitState) -> float:
    """``sqrt(2 (1 - sqrt F))``."""
    return _bures_bloch(to_bloch(s1), to_bloch(s2))


def _affinity_bloch(r1, r2) -> float:
    n1, n2 = min(r1.norm, 1.0), min(r2.norm, 1.0)
    num = (1.0 + math.sqrt(1.0 - n1 * n1)) * (1.0 + math.sqrt(1.0 - n2 * n2)) + r1.dot(r2)
    den = (math.sqrt(1.0 + n1) + math.sqrt(1.0 - n1)) * (math.sqrt(1.0 + n2) + math.sqrt(1.0 - n2))
    return min(max(num / den, 0.0), 1.0)


def affinity(s1: QubitState, s2: QubitState) -> float:
    """Quantum affinity ``Tr(sqrt(rho1) sqrt(rho2))``."""
    return _affinity_bloch(to_bloch(s1), to_bloch(s2))


def _sqrt_coeffs(r):
    """``sqrt(rho) = c0 * I + (c . sigma)`` for Bloch vector ``r``."""
    n = min(r.norm, 1.0)
    c0 = 0.5 * (math.sqrt(0.5 * (1.0 + n)) + math.sqrt(0.5 * (1.0 - n)))
    return c0, r.scale(0.25 / c0)


def _hellinger_bloch(r1, r2) -> float:
    # Tr(sqrt(rho1) - sqrt(rho2))^2 = 2 [(c0_1 - c0_2)^2 + |c_1 - c_2|^2],
    # identical to 2 (1 - A) but free of cancellation near A = 1.
    c01, v1 = _sqrt_coeffs(r1)
    c02, v2 = _sqrt_coeffs(r2)
    return math.sqrt(2.0 * ((c01 - c02) ** 2 + (v1 - v2).norm ** 2))


def hellinger_distance(s1: QubitState, s2: QubitState) -> float:
    """``sqrt(2 (1 - A))`` with ``A`` the affinity."""
    return _hellinger_bloch(to_bloch(s1), to_bloch(s2))


def _js_bloch(r1, r2) -> float:
    mix = (r1 + r2).scale(0.5).norm
    sq = (
        entropy_from_radius(mix)
        - 0.5 * entropy_from_radius(r1.norm)
        - 0.5 * entropy_from_radius(r2.norm)
    )
    if sq < -STATE_TOL:
        raise DomainError(f"negative Jensen-Shannon divergence {sq:.3e}")
    return math.sqrt(max(sq, 0.0))


def js_distance(s1: QubitState, s2: QubitState) -> float:
    """Square root of the quantum Jensen-Shannon divergence (nats)."""
    return _js_bloch(to_bloch(s1), to_bloch(s2))


def all_distances(s1: QubitState, s2: QubitState) -> DistanceRecord:
    r1, r2 = to_bloch(s1), to_bloch(s2)
    diff = (r1 - r2).norm
    return DistanceRecord(
        d_t=0.5 * diff,
        d_hs=diff / SQRT2,
        d_b=_bures_bloch(r1, r2),
        d_h=_hellinger_bloch(r1, r2),
        d_js=_js_bloch(r1, r2),
    )
