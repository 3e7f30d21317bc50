import pytest

from reflectinv.catalog import catalog_get
from reflectinv.equivar import primary_invariants
from reflectinv.group import close
from reflectinv.rep import rep_extend


@pytest.fixture(scope="session")
def entry():
    return catalog_get("st8")


@pytest.fixture(scope="session")
def group(entry):
    return close(entry.generators)


@pytest.fixture(scope="session")
def fundamentals(entry, group):
    # generator-level checks are enough for unit tests; the acceptance
    # battery re-extends everything with the full pair check
    return {
        name: rep_extend(entry.representation_seed(name), group, check="generators")
        for name in entry.rep_names
    }


@pytest.fixture(scope="session")
def prim(group):
    return primary_invariants(group)
