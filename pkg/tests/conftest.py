import pytest
from hypothesis import settings

from mvspectra.dsl import parse_algebra

settings.register_profile("repo", max_examples=200, deadline=None, derandomize=True)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def alg():
    """Algebra from its literal, cached per session."""
    cache = {}

    def get(text):
        if text not in cache:
            cache[text] = parse_algebra(text)
        return cache[text]
    return get
