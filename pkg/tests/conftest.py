import pathlib

import pytest

from grpbounds.catalog import parse_catalog, to_group

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


@pytest.fixture(scope="session")
def main_records():
    return parse_catalog(FIXTURES / "orders-1-63.jsonl")


@pytest.fixture(scope="session")
def big_records():
    return parse_catalog(FIXTURES / "order-243.jsonl")


@pytest.fixture(scope="session")
def extra_records():
    return parse_catalog(FIXTURES / "extras.jsonl")


@pytest.fixture(scope="session")
def gget():
    """Shared record -> Group cache so lattice and search memos carry
    across tests."""
    cache = {}

    def get(rec):
        g = cache.get(rec.id)
        if g is None:
            g = to_group(rec)
            cache[rec.id] = g
        return g

    return get


@pytest.fixture(scope="session")
def by_id(main_records, extra_records):
    out = {r.id: r for r in main_records}
    out.update({r.id: r for r in extra_records})
    return out
