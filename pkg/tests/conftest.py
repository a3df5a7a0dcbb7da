import pytest

from lrlab.verify import run_checks


@pytest.fixture(scope="session")
def full_checks():
    """The complete verification gate, computed once per session."""
    return run_checks()
