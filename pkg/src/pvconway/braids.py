"""Realizable Gauss diagrams from closed braids."""

from __future__ import annotations

import random
from typing import Sequence

from .errors import TooManyCircles
from .gauss import GaussDiagram


def braid_closure(word: Sequence[int], n_strands: int | None = None) -> GaussDiagram:
    """Gauss diagram of the closure of a braid word.

    Letter ``i`` (``-i``) is the generator crossing strands ``i`` and ``i+1``
    positively (negatively); crossing ``j`` of the word gets label ``j + 1``.
    The strand moving from position ``i`` to ``i+1`` passes over for a
    positive letter and under for a negative one.  Circle 0 is the component
    through the bottom of strand 1, read from there.
    """
    if any(w == 0 for w in word):
        raise ValueError("braid letters must be nonzero")
    n = max([abs(w) + 1 for w in word], default=1)
    if n_strands is not None:
        if n_strands < n:
            raise ValueError(f"word needs at least {n} strands")
        n = n_strands

    def run(pos: int) -> tuple[list[tuple[int, bool]], int]:
        slots = []
        for j, w in enumerate(word):
            i = abs(w)
            if pos == i:
                slots.append((j + 1, w > 0))
                pos = i + 1
            elif pos == i + 1:
                slots.append((j + 1, w < 0))
                pos = i
        return slots, pos

    circles = []
    done: set[int] = set()
    for start in range(1, n + 1):
        if start in done:
            continue
        circle = []
        pos = start
        while True:
            done.add(pos)
            slots, pos = run(pos)
            circle.extend(slots)
            if pos == start:
                break
        circles.append(circle)
    if len(circles) > 2:
        raise TooManyCircles(f"braid closure has {len(circles)} components")
    signs = {j + 1: (1 if w > 0 else -1) for j, w in enumerate(word)}
    return GaussDiagram.build(circles, signs)


def random_braid_word(rng: random.Random, n_strands: int, length: int) -> list[int]:
    return [rng.choice((1, -1)) * rng.randint(1, n_strands - 1) for _ in range(length)]


def braid_components(word: Sequence[int], n_strands: int) -> int:
    perm = list(range(n_strands + 1))
    for w in word:
        i = abs(w)
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = set()
    count = 0
    for s in range(1, n_strands + 1):
        if s not in seen:
            count += 1
            i = s
            while i not in seen:
                seen.add(i)
                i = perm[i]
    return count
