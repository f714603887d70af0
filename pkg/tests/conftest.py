import pytest
from hypothesis import settings

from trinomia.kernel import symbols

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def bc():
    return symbols()
