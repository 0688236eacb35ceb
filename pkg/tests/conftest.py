import os

import pytest

from berger_lab.harness import Session

TIER2 = os.environ.get("BERGER_LAB_TIER2") == "1"

tier2 = pytest.mark.skipif(
    not TIER2, reason="tier-2 configuration (2,2,2); set BERGER_LAB_TIER2=1")


@pytest.fixture(scope="session")
def session():
    """Shared memoizing session so expensive kernels are computed once."""
    return Session()


@pytest.fixture(scope="session")
def space111(session):
    return session.space(1, 1, 1)


@pytest.fixture(scope="session")
def space121(session):
    return session.space(1, 2, 1)


@pytest.fixture(scope="session")
def space222(session):
    return session.space(2, 2, 2)
