from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from zinbiel.graded import Alphabet

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def xy():
    """x odd, y even."""
    return Alphabet.parse("x:odd,y:even")


@pytest.fixture
def abxy():
    return Alphabet.parse("a:even,b:even,x:odd,y:odd")
