import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=15, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from mmcasimir.materials import AtomModel, Medium, OscillatorModel  # noqa: E402
from mmcasimir.quadrature import QuadratureConfig  # noqa: E402


@pytest.fixture
def md_host():
    """static eps = 2, mu = 1.5, one resonance at 1"""
    return Medium(OscillatorModel.lorentz(2.0, 1.0), OscillatorModel.lorentz(1.5, 1.0))


@pytest.fixture
def em_atom():
    return AtomModel(0.01, 1.0, 0.004, 0.7)


@pytest.fixture
def cfg():
    return QuadratureConfig()


@pytest.fixture
def loose():
    return QuadratureConfig(rel_tol=1e-6)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.LINES:
            terminalreporter.write_line(line)
