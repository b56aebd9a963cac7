"""The ascending/descending state sum over one-component crossing subsets."""

from __future__ import annotations

import itertools
import math

from .core import IntPolynomial
from .gauss import Direction, GaussDiagram, classify_subset


def state_subsets(g: GaussDiagram, direction: Direction = "asc"):
    """Yield every subset (as a tuple of labels) counted by the state sum."""
    labels = g.labels
    for size in range(len(labels) + 1):
        for subset in itertools.combinations(labels, size):
            if classify_subset(g, subset, direction):
                yield subset


def nabla_state(g: GaussDiagram, direction: Direction = "asc") -> IntPolynomial:
    terms: dict[int, int] = {}
    for subset in state_subsets(g, direction):
        w = math.prod(g.sign(c) for c in subset)
        terms[len(subset)] = terms.get(len(subset), 0) + w
    return IntPolynomial.from_terms(terms)
