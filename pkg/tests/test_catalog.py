import pytest

from liegraph import catalog
from liegraph.algebra import verify_lie
from liegraph.catalog import UnknownEntryError
from liegraph.pipeline import observe, oracle_equivalence

NAMES = catalog.list_names()


def test_catalog_size_and_order():
    assert len(NAMES) == 47
    assert NAMES == sorted(NAMES)


@pytest.mark.parametrize("name", NAMES)
def test_entry_expected(name):
    e = catalog.get(name)
    assert verify_lie(e.algebra).ok
    obs = observe(e)
    for key, want in e.expected.items():
        assert obs[key] == want, key


@pytest.mark.parametrize("name", NAMES)
def test_entry_oracle_equivalence(name):
    e = catalog.get(name)
    assert oracle_equivalence(e.algebra, e.basis, e.gradation) == []


def test_unknown_entry():
    with pytest.raises(UnknownEntryError):
        catalog.get("nope")
    with pytest.raises(KeyError):
        catalog.fixture("nope")


def test_fixtures_are_not_lie():
    for name in catalog.fixture_names():
        assert not verify_lie(catalog.fixture(name)).ok


def test_constructors():
    assert catalog.heisenberg(2).dim == 5
    assert catalog.abelian(4).is_abelian()
    assert catalog.schrodinger(3).dim == 10
    assert verify_lie(catalog.schrodinger(3)).ok
    assert verify_lie(catalog.sl3()).ok


def test_bianchi_entries_exist():
    for name in catalog.BIANCHI.values():
        assert catalog.get(name).basis.m == 3
