import pytest

from cycorder.cyclotomic import CycloCache


@pytest.fixture(scope="session")
def shared_cache() -> CycloCache:
    """One polynomial cache for the whole session; entries are value-deterministic."""
    return CycloCache()
