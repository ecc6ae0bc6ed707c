from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

# JIT warm-up on first kernel call can trip hypothesis' per-example deadline
settings.register_profile(
    "minplus",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("minplus")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
