import sys
import random

import pytest

from hoplab import cyclic_automaton, random_dfa, random_unary_dfa

DB3_WORD = "11101000"


@pytest.fixture
def db3_cycle():
    return cyclic_automaton(DB3_WORD, 0)


@pytest.fixture
def alternating():
    return cyclic_automaton("1010", 0)


def random_corpus(count, alphabets=(1, 2), max_states=64, seed=0):
    """Deterministic mix of random DFAs over the given alphabet sizes."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_states)
        k = alphabets[i % len(alphabets)]
        density = rng.choice([0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0])
        out.append(random_dfa(n, k, density, seed * 100003 + i))
    return out


def random_dfca_corpus(count, max_states=24, seed=0):
    """Reachable unary automata paired with a random l in [1, 2|Q|]."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_states)
        d = random_unary_dfa(n, rng.choice([0.2, 0.5, 0.8]), seed * 7919 + i)
        out.append((d, rng.randint(1, 2 * n)))
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "REPORT", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.REPORT:
        terminalreporter.write_line(line)
