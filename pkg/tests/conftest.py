from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from pvconway.braids import braid_closure, braid_components, random_braid_word
from pvconway.fixtures import bundled_fixtures
from pvconway.gauss import GaussDiagram, parse_gauss_code

# 6_2 with the chord numbering of the worked example (chords 4 and 5 positive).
G62_CODE = "U1- O2- U3- O4+ U5+ O3- U6- O1- U2- O5+ U4+ O6-"
TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"
HOPF = "O1+ U2+ | U1+ O2+"


def random_diagram(rng: random.Random, n_chords: int, n_circles: int = 1) -> GaussDiagram:
    """Uniform random slot sequence; usually not realizable."""
    labels = list(range(1, n_chords + 1))
    slots = [(l, True) for l in labels] + [(l, False) for l in labels]
    rng.shuffle(slots)
    if n_circles == 1:
        circles = [slots]
    else:
        k = rng.randint(0, len(slots))
        circles = [slots[:k], slots[k:]]
    return GaussDiagram.build(circles, {l: rng.choice((1, -1)) for l in labels})


def random_realizable(rng: random.Random, components: int, max_len: int = 8, n_strands: int = 3) -> GaussDiagram:
    while True:
        word = random_braid_word(rng, n_strands, rng.randint(1, max_len))
        if braid_components(word, n_strands) == components:
            return braid_closure(word, n_strands)


@st.composite
def gauss_diagrams(draw, max_chords: int = 6, circles=(1, 2)):
    n_circles = draw(st.sampled_from(circles))
    n = draw(st.integers(0, max_chords))
    labels = draw(st.lists(st.integers(1, 50), min_size=n, max_size=n, unique=True))
    slots = [(l, True) for l in labels] + [(l, False) for l in labels]
    slots = draw(st.permutations(slots))
    signs = {l: draw(st.sampled_from((1, -1))) for l in labels}
    if n_circles == 1:
        return GaussDiagram.build([slots], signs)
    k = draw(st.integers(0, len(slots)))
    return GaussDiagram.build([slots[:k], slots[k:]], signs)


@pytest.fixture(scope="session")
def g62() -> GaussDiagram:
    return parse_gauss_code(G62_CODE)


@pytest.fixture(scope="session")
def knot_fixtures():
    return bundled_fixtures()
