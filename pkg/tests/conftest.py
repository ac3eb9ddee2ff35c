import random

import pytest

from src.algebra import comb
from src.algebra.fqsym import FQSymElem
from src.algebra.nsym import NSymElem
from src.algebra.qsym import QSymElem


@pytest.fixture
def rng():
    return random.Random(20240917)


def _random_element(cls, rng, level, max_weight, terms):
    pool = [I for w in range(1, max_weight + 1) for I in comb.compositions_of_weight(w, level)]
    picked = rng.sample(pool, min(terms, len(pool)))
    return cls(level, {I: rng.randint(-3, 3) for I in picked})


@pytest.fixture
def random_qsym(rng):
    def make(level=2, max_weight=2, terms=3):
        return _random_element(QSymElem, rng, level, max_weight, terms)
    return make


@pytest.fixture
def random_nsym(rng):
    def make(level=2, max_weight=2, terms=3):
        return _random_element(NSymElem, rng, level, max_weight, terms)
    return make


@pytest.fixture
def random_fqsym(rng):
    def make(level=2, size=2, terms=2):
        terms_map = {}
        for _ in range(terms):
            sigma = list(range(1, size + 1))
            rng.shuffle(sigma)
            u = [rng.randrange(level) for _ in range(size)]
            terms_map[(tuple(sigma), tuple(u))] = rng.randint(1, 3)
        return FQSymElem(level, terms_map)
    return make


@pytest.fixture
def diamond_json():
    return ('{"level":1,"elements":["0","a","b","1"],'
            '"covers":[["0","a"],["0","b"],["a","1"],["b","1"]],'
            '"rank":{"0":[0],"a":[1],"b":[1],"1":[2]}}')


@pytest.fixture
def bowtie_payload():
    """Multirank (1,2): every rank-(1,1) interval is Eulerian, the (0,2) interval is a chain"""
    return {
        "level": 2,
        "elements": ["0", "a", "b", "c", "d", "1"],
        "covers": [["0", "a"], ["0", "b"], ["a", "c"], ["b", "c"], ["b", "d"], ["c", "1"], ["d", "1"]],
        "rank": {"0": [0, 0], "a": [1, 0], "b": [0, 1], "c": [1, 1], "d": [0, 2], "1": [1, 2]},
    }


@pytest.fixture
def seven_payload():
    return {
        "level": 2,
        "elements": ["0", "a", "b", "c", "d", "e", "1"],
        "covers": [["0", "a"], ["0", "b"], ["0", "c"], ["a", "d"], ["b", "d"], ["b", "e"],
                   ["c", "e"], ["d", "1"], ["e", "1"]],
        "rank": {"0": [0, 0], "a": [1, 0], "b": [0, 1], "c": [0, 1], "d": [1, 1], "e": [0, 2], "1": [1, 2]},
    }
