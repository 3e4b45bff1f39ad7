import math

import numpy as np
import pytest
from hypothesis import strategies as st

from dephlab.qstate import BlochVector, from_bloch


def random_bloch(rng, pure_fraction=0.0):
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    r = 1.0 if rng.random() < pure_fraction else rng.random() ** (1 / 3)
    return BlochVector(*(v * r))


def random_state(rng, pure_fraction=0.0):
    return from_bloch(random_bloch(rng, pure_fraction))


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@st.composite
def bloch_vectors(draw, max_radius=1.0):
    theta = draw(st.floats(0.0, math.pi))
    phi = draw(st.floats(0.0, 2 * math.pi))
    r = draw(st.floats(0.0, max_radius))
    return BlochVector(r * math.sin(theta) * math.cos(phi), r * math.sin(theta) * math.sin(phi), r * math.cos(theta))


@st.composite
def qubit_states(draw, max_radius=1.0):
    return from_bloch(draw(bloch_vectors(max_radius)))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[n])
