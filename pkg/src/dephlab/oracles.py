"""Matrix-level reference implementations of the distance measures.

These go through eigen-decompositions and matrix square roots instead of
Bloch-vector algebra, and serve as the independent cross-check for
:mod:`dephlab.distances`.
"""
from __future__ import annotations

import math

import numpy as np

from .distances import DistanceRecord
from .numerics import Hermitian2, eig_hermitian2, sqrt_psd2
from .qstate import QubitState


def _arr(s: QubitState) -> np.ndarray:
    return s.matrix().to_array()


def spectral_entropy(s: QubitState) -> float:
    lams, _ = eig_hermitian2(s.matrix())
    return -sum(lam * math.log(lam) for lam in lams if lam > 0.0)


def _entropy_of(m: np.ndarray) -> float:
    lams, _ = eig_hermitian2(Hermitian2.from_array(m))
    return -sum(lam * math.log(lam) for lam in lams if lam > 0.0)


def trace_distance(s1: QubitState, s2: QubitState) -> float:
    lams, _ = eig_hermitian2(Hermitian2.from_array(_arr(s1) - _arr(s2)))
    return 0.5 * sum(abs(lam) for lam in lams)


def hs_distance(s1: QubitState, s2: QubitState) -> float:
    d = _arr(s1) - _arr(s2)
    return math.sqrt(max(np.trace(d @ d).real, 0.0))


def fidelity(s1: QubitState, s2: QubitState) -> float:
    root1 = sqrt_psd2(s1.matrix()).to_array()
    inner = Hermitian2.from_array(root1 @ _arr(s2) @ root1)
    return sqrt_psd2(inner).trace ** 2


def bures_distance(s1: QubitState, s2: QubitState) -> float:
    return math.sqrt(max(2.0 * (1.0 - math.sqrt(fidelity(s1, s2))), 0.0))


def affinity(s1: QubitState, s2: QubitState) -> float:
    root1 = sqrt_psd2(s1.matrix()).to_array()
    root2 = sqrt_psd2(s2.matrix()).to_array()
    return float(np.trace(root1 @ root2).real)


def hellinger_distance(s1: QubitState, s2: QubitState) -> float:
    d = sqrt_psd2(s1.matrix()).to_array() - sqrt_psd2(s2.matrix()).to_array()
    return math.sqrt(max(np.trace(d @ d).real, 0.0))


def js_distance(s1: QubitState, s2: QubitState) -> float:
    a, b = _arr(s1), _arr(s2)
    sq = _entropy_of(0.5 * (a + b)) - 0.5 * _entropy_of(a) - 0.5 * _entropy_of(b)
    return math.sqrt(max(sq, 0.0))


def all_distances(s1: QubitState, s2: QubitState) -> DistanceRecord:
    return DistanceRecord(
        trace_distance(s1, s2),
        hs_distance(s1, s2),
        bures_distance(s1, s2),
        hellinger_distance(s1, s2),
        js_distance(s1, s2),
    )
