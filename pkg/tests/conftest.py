import pytest

from dmagma.groups import parse_group_spec
from dmagma.rings import parse_ring_spec
from dmagma.suite import DEFAULT_GROUPS, DEFAULT_RINGS


@pytest.fixture(scope="session")
def corpus_groups():
    """The default group corpus, parsed once per session."""
    return [(spec, parse_group_spec(spec)) for spec in DEFAULT_GROUPS]


@pytest.fixture(scope="session")
def corpus_rings():
    return [(spec, parse_ring_spec(spec)) for spec in DEFAULT_RINGS]
