import math

import numpy as np
import pytest
from hypothesis import given, settings

from dephlab import distances as d
from dephlab import oracles
from dephlab.errors import DomainError
from dephlab.qstate import BlochVector, QubitState, from_bloch, to_bloch

from conftest import bloch_vectors, qubit_states, random_state

UP = from_bloch(BlochVector(0, 0, 1))
DOWN = from_bloch(BlochVector(0, 0, -1))
MIXED = QubitState(0.5)
SQRT2 = math.sqrt(2)


def test_identical_states_give_zero_record():
    s = from_bloch(BlochVector(0.3, -0.2, 0.4))
    assert d.all_distances(s, s).as_tuple() == (0.0,) * 5
    assert d.all_distances(MIXED, MIXED).as_tuple() == (0.0,) * 5


def test_orthogonal_pure_states():
    rec = d.all_distances(UP, DOWN)
    assert rec.as_tuple() == pytest.approx((1.0, SQRT2, SQRT2, SQRT2, math.sqrt(math.log(2))), abs=1e-15)
    assert rec.d_js == pytest.approx(0.832555, abs=1e-6)
    assert d.fidelity(UP, DOWN) == 0.0
    assert d.affinity(UP, DOWN) == pytest.approx(0.0, abs=1e-15)


def test_fidelity_and_affinity_trivial_values():
    assert d.fidelity(UP, UP) == 1.0
    assert d.fidelity(MIXED, MIXED) == 1.0
    assert d.affinity(MIXED, MIXED) == 1.0
    s = from_bloch(BlochVector(0.1, 0.5, -0.3))
    assert d.affinity(s, s) == pytest.approx(1.0, abs=1e-15)


def test_trace_distance_on_axis():
    a = from_bloch(BlochVector(0, 0, 0.5))
    assert d.trace_distance(a, MIXED) == pytest.approx(0.25, abs=1e-16)
    assert d.hs_distance(a, MIXED) == pytest.approx(0.5 / SQRT2, abs=1e-16)


def test_js_rejects_invalid_input():
    # not a density matrix: the pre-root expression goes negative
    bogus = QubitState(0.5, 2.0)
    with pytest.raises(DomainError):
        d.js_distance(bogus, MIXED)


@pytest.mark.parametrize("name", ["trace_distance", "hs_distance", "fidelity", "bures_distance",
                                  "affinity", "hellinger_distance", "js_distance"])
def test_matches_spectral_oracle(rng, name):
    closed, oracle = getattr(d, name), getattr(oracles, name)
    for _ in range(1000):
        s1, s2 = random_state(rng), random_state(rng)
        assert closed(s1, s2) == pytest.approx(oracle(s1, s2), abs=1e-10)


def test_trace_distance_oracle_tight(rng):
    for _ in range(1000):
        s1, s2 = random_state(rng, 0.2), random_state(rng, 0.2)
        assert d.trace_distance(s1, s2) == pytest.approx(oracles.trace_distance(s1, s2), abs=1e-12)


def test_near_identical_states_do_not_lose_digits():
    s1 = from_bloch(BlochVector(0.6, 0.0, 0.0))
    s2 = from_bloch(BlochVector(0.6 + 1e-9, 0.0, 0.0))
    rec = d.all_distances(s1, s2)
    # Bures and Hellinger are linear in the separation here
    assert rec.d_b == pytest.approx(6.25e-10, rel=1e-6)
    assert rec.d_h == pytest.approx(6.25e-10, rel=1e-6)
    # JS squared is an entropy difference, so its floor is about sqrt(eps)
    assert rec.d_js < 3e-8


@given(qubit_states(), qubit_states())
def test_symmetry_and_bounds(s1, s2):
    a = np.array(d.all_distances(s1, s2).as_tuple())
    b = np.array(d.all_distances(s2, s1).as_tuple())
    assert np.all(np.abs(a - b) <= 1e-12)
    assert np.all(a >= 0)
    assert a[0] <= 1 + 1e-15
    assert a[1] <= 2 * a[0] + 1e-15
    assert abs(a[1] - SQRT2 * a[0]) <= 1e-12
    assert np.all(a[2:4] <= SQRT2 + 1e-15)
    assert a[4] <= math.sqrt(math.log(2)) + 1e-12


@settings(max_examples=300)
@given(qubit_states(), qubit_states(), qubit_states())
def test_triangle_inequality(a, b, c):
    ab = np.array(d.all_distances(a, b).as_tuple())
    bc = np.array(d.all_distances(b, c).as_tuple())
    ac = np.array(d.all_distances(a, c).as_tuple())
    assert np.all(ac <= ab + bc + 1e-10)


@given(bloch_vectors(), bloch_vectors())
def test_distinct_states_are_separated(r1, r2):
    if (r1 - r2).norm < 1e-6:
        return
    rec = d.all_distances(from_bloch(r1), from_bloch(r2))
    assert min(rec.as_tuple()) > 0


def _rotate(r: BlochVector, m: np.ndarray) -> BlochVector:
    v = m @ np.array([r.x, r.y, r.z])
    return BlochVector(*v)


def _rotation(rng):
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    return q * np.sign(np.linalg.det(q))


def test_unitary_invariance(rng):
    for _ in range(1000):
        m = _rotation(rng)
        # interior states: rotating a pure state rounds |r| off the sphere
        s1, s2 = random_state(rng), random_state(rng)
        r1, r2 = to_bloch(s1), to_bloch(s2)
        before = np.array(d.all_distances(s1, s2).as_tuple())
        after = np.array(d.all_distances(from_bloch(_rotate(r1, m)), from_bloch(_rotate(r2, m))).as_tuple())
        assert np.all(np.abs(before - after) <= 1e-10)
