from __future__ import annotations

import pytest

from starrad.verifier import run_full_suite


@pytest.fixture(scope="session")
def suite():
    """One full-resolution verification run shared by the acceptance tests."""
    return run_full_suite(n=4096)


@pytest.fixture(scope="session")
def catalogue_results(suite):
    return suite.results
