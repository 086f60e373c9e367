import pytest

from helpers import PRIMER_A, domain_words


@pytest.fixture(scope="session")
def primer_a():
    return PRIMER_A


@pytest.fixture(scope="session")
def small_corpus():
    """Analyzable words up to length 7; quick enough for per-module suites."""
    return domain_words(7)
