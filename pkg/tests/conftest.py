import pytest

from spgames import Instance, random_explicit

CORPUS_SIZE = 500


def corpus_instance(seed: int) -> Instance:
    """Seeded random explicit instance: n <= 3 players, 3..6 items,
    weights in 1..8."""
    n = 1 + seed % 3
    items = 3 + seed % 4
    return random_explicit(n=n, items=items, max_weight=8, seed=seed)


@pytest.fixture(scope="session")
def corpus() -> list[Instance]:
    return [corpus_instance(seed) for seed in range(CORPUS_SIZE)]


@pytest.fixture(scope="session")
def small_corpus(corpus) -> list[Instance]:
    """A lighter slice for the quadratic-cost property checks."""
    return corpus[:80]
