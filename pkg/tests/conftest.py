import pytest

from nlsverify.profile import build_profile


@pytest.fixture(scope="session")
def profile():
    """One shared profile per test session; construction is expensive."""
    return build_profile()
