"""Homomorphisms of arrow diagrams into Gauss diagrams and the pairing.

A homomorphism is determined by where it sends the arrow endpoints: the
endpoint sequence of the arrow diagram must embed order-preservingly into the
Gauss diagram's, circle by circle, tails onto over endpoints and heads onto
under endpoints.  Circle 0 is anchored at the base point; circle 1 has no base
point, so its embedding is tried from every rotation.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Literal

from .combinat import ArrowDiagram, Combination, cached_combination
from .core import IntPolynomial
from .errors import CircleCountMismatch
from .gauss import GaussDiagram


@dataclass(frozen=True)
class HomMatch:
    """``assignment[i]`` is the Gauss chord hit by arrow ``i`` of the template."""

    assignment: tuple[tuple[int, int], ...]
    slot_map: tuple[int, ...]

    @property
    def chords(self) -> frozenset[int]:
        return frozenset(c for _, c in self.assignment)


def _check_circles(a_circles: int, g: GaussDiagram) -> None:
    if a_circles != g.n_circles:
        raise CircleCountMismatch(f"arrow diagram has {a_circles} circles, Gauss diagram {g.n_circles}")


def _embeddings(a: ArrowDiagram, g: GaussDiagram):
    a_slots = a.slots
    na = len(a_slots)
    a0 = a.circle_sizes[0]
    g0 = g.circle_sizes[0]
    g1 = g.n_slots - g0
    two = a.n_circles == 2

    if two and na > a0:
        rotations = range(g0, g.n_slots)
        if g1 == 0:
            return
    else:
        rotations = [None]

    for rot in rotations:
        if rot is None:
            order = list(range(g.n_slots))
        else:
            order = list(range(g0)) + list(range(rot, g.n_slots)) + list(range(g0, rot))
        pos_of = {s: p for p, s in enumerate(order)}
        g_slots = [g.slot(s) for s in order]
        # slots of a's circle 0 go to positions [0, g0); circle 1 to [g0, n)
        limit = [g0 if k < a0 else len(order) for k in range(na)]
        assigned: dict[int, int] = {}
        used: set[int] = set()
        chosen = [0] * na

        def rec(k: int, last: int):
            if k == na:
                yield tuple(order[p] for p in chosen)
                return
            arrow, tail = a_slots[k]
            lo = last + 1
            if two and k == a0:
                lo = max(lo, g0)
            hi = limit[k] - (a0 - k if k < a0 else na - k) + 1
            if rot is not None and k == a0:
                hi = min(hi, g0 + 1)
            if arrow in assigned:
                o, u = g.endpoints(assigned[arrow])
                p = pos_of[o if tail else u]
                if lo <= p < limit[k] and p < hi:
                    chosen[k] = p
                    yield from rec(k + 1, p)
                return
            for p in range(lo, hi):
                label, over = g_slots[p]
                if over != tail or label in used:
                    continue
                assigned[arrow] = label
                used.add(label)
                chosen[k] = p
                yield from rec(k + 1, p)
                del assigned[arrow]
                used.discard(label)

        yield from rec(0, -1)


def enumerate_homomorphisms(a: ArrowDiagram, g: GaussDiagram) -> list[HomMatch]:
    """All distinct homomorphisms, identified by their endpoint map."""
    _check_circles(a.n_circles, g)
    seen: dict[tuple[int, ...], HomMatch] = {}
    a_slots = a.slots
    for slot_map in _embeddings(a, g):
        if slot_map in seen:
            continue
        assignment = {}
        for (arrow, _), s in zip(a_slots, slot_map):
            assignment[arrow] = g.slot(s)[0]
        seen[slot_map] = HomMatch(tuple(sorted(assignment.items())), slot_map)
    return list(seen.values())


def pairing_value(a: ArrowDiagram, g: GaussDiagram) -> int:
    total = 0
    for match in enumerate_homomorphisms(a, g):
        total += math.prod(g.sign(c) for _, c in match.assignment)
    return total


def restrict(g: GaussDiagram, chords) -> ArrowDiagram:
    """The arrow diagram formed by ``chords`` of ``g`` (signs dropped)."""
    keep = set(chords)
    circles = tuple(tuple((l, o) for l, o in c if l in keep) for c in g.circles)
    return ArrowDiagram(circles)


Strategy = Literal["auto", "templates", "images"]


def _pair_by_images(c: Combination, g: GaussDiagram) -> int:
    # Each homomorphism of a one-component template is recovered from its image.
    total = 0
    for subset in itertools.combinations(g.labels, c.m):
        mult = c.multiplicity(restrict(g, subset))
        if mult:
            total += mult * math.prod(g.sign(x) for x in subset)
    return total


def combination_pairing(c: Combination, g: GaussDiagram, strategy: Strategy = "auto") -> int:
    """Sum of multiplicity times pairing over the terms of ``c``.

    ``templates`` runs the homomorphism search for every term; ``images``
    looks up the sub-diagram on every ``m``-subset of chords, which is valid
    because every term is a one-component (hence automorphism-free) diagram.
    ``auto`` picks whichever side is smaller.
    """
    _check_circles(c.n_circles, g)
    if strategy == "auto":
        if not c.explicit or math.comb(g.n_chords, c.m) <= len(c):
            strategy = "images"
        else:
            strategy = "templates"
    if strategy == "images":
        return _pair_by_images(c, g)
    if strategy != "templates":
        raise ValueError(f"unknown strategy {strategy!r}")
    return sum(mult * pairing_value(a, g) for a, mult in c.diagrams())


def conway_coefficient(g: GaussDiagram, k: int, cache_dir: str | os.PathLike | None = None,
                       strategy: Strategy = "auto") -> int:
    """Coefficient of ``z**k`` in the Conway polynomial via the combinations."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    if g.n_circles == 1:
        if k == 0:
            return 1
        if k % 2:
            return 0
    elif k % 2 == 0:
        return 0
    if k > g.n_chords:
        return 0
    return combination_pairing(cached_combination(k, cache_dir), g, strategy)


def pairing_polynomial(g: GaussDiagram, max_degree: int | None = None,
                       cache_dir: str | os.PathLike | None = None,
                       strategy: Strategy = "auto") -> IntPolynomial:
    top = g.n_chords if max_degree is None else max_degree
    return IntPolynomial(tuple(conway_coefficient(g, k, cache_dir, strategy) for k in range(top + 1)))
