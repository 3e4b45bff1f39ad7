"""Qubit density matrices and their Bloch-vector representation."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .numerics import Hermitian2

STATE_TOL = 1e-12


@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    @property
    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def dot(self, other: "BlochVector") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def __add__(self, other: "BlochVector") -> "BlochVector":
        return BlochVector(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "BlochVector") -> "BlochVector":
        return BlochVector(self.x - other.x, self.y - other.y, self.z - other.z)

    def scale(self, k: float) -> "BlochVector":
        return BlochVector(k * self.x, k * self.y, k * self.z)


@dataclass(frozen=True)
class QubitState:
    """Qubit density matrix ``[[p, coh], [conj(coh), 1 - p]]``.

    ``p`` is the excited-state population. The trace is one by construction.
    """

    p: float
    coh: complex = 0j

    def matrix(self) -> Hermitian2:
        return Hermitian2(self.p, 1.0 - self.p, complex(self.coh))

    @property
    def margin(self) -> float:
        """Positivity margin ``p(1-p) - |coh|^2`` (the determinant)."""
        return self.p * (1.0 - self.p) - abs(self.coh) ** 2


@dataclass(frozen=True)
class ValidityReport:
    trace_one: bool
    population_ok: bool
    margin: float

    @property
    def valid(self) -> bool:
        return self.trace_one and self.population_ok and self.margin >= -STATE_TOL


def from_bloch(r: BlochVector) -> QubitState:
    if r.norm > 1.0 + STATE_TOL:
        raise DomainError(f"Bloch vector length {r.norm!r} exceeds 1")
    return QubitState(0.5 * (1.0 + r.z), 0.5 * complex(r.x, -r.y))


def to_bloch(s: QubitState) -> BlochVector:
    c = complex(s.coh)
    return BlochVector(2.0 * c.real, -2.0 * c.imag, 2.0 * s.p - 1.0)


def validate(s: QubitState) -> ValidityReport:
    p = s.p
    population_ok = math.isfinite(p) and -STATE_TOL <= p <= 1.0 + STATE_TOL
    return ValidityReport(trace_one=True, population_ok=population_ok, margin=s.margin)


def entropy_from_radius(r: float) -> float:
    """Von Neumann entropy (nats) of a qubit whose Bloch vector has length ``r``."""
    r = min(abs(r), 1.0)
    if 1.0 - r < STATE_TOL:
        return 0.0
    lp, lm = math.log1p(r), math.log1p(-r)
    return math.log(2.0) - 0.5 * (lp + lm) - 0.5 * r * (lp - lm)


def von_neumann_entropy(s: QubitState) -> float:
    return entropy_from_radius(to_bloch(s).norm)


def purity(s: QubitState) -> float:
    """``Tr(rho^2) = (1 + r^2) / 2``."""
    r = to_bloch(s).norm
    return 0.5 * (1.0 + r * r)
