"""Chord diagrams, ascending arrow diagrams and the Conway combinations.

The Conway combination of size ``m`` is the multiplicity-one sum of all based
one-component ascending arrow diagrams with ``m`` arrows: one circle when
``m`` is even, two circles (base point on circle 0, circle 1 up to rotation)
when ``m`` is odd.
"""

from __future__ import annotations

import functools
import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from .errors import NotOneComponent

ArrowSlot = tuple[int, bool]  # (arrow index, is_tail)


def _successor(sizes: Sequence[int]) -> list[int]:
    succ: list[int] = []
    start = 0
    for size in sizes:
        succ.extend(start + (i + 1) % size for i in range(size))
        start += size
    return succ


def _count_cycles(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    count = 0
    for s in range(len(perm)):
        if not seen[s]:
            count += 1
            i = s
            while not seen[i]:
                seen[i] = True
                i = perm[i]
    return count


@dataclass(frozen=True)
class ChordDiagram:
    """Unsigned, unoriented chords; ``partner[i]`` is the other end of slot ``i``."""

    circle_sizes: tuple[int, ...]
    partner: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.circle_sizes) <= 2:
            raise ValueError("chord diagrams have 1 or 2 circles")
        n = sum(self.circle_sizes)
        if len(self.partner) != n or any(
            not 0 <= p < n or p == i or self.partner[p] != i for i, p in enumerate(self.partner)
        ):
            raise ValueError("partner must be a fixed-point-free involution on the slots")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]], circle_sizes: Sequence[int] | None = None) -> "ChordDiagram":
        n = 2 * len(pairs)
        partner = [-1] * n
        for a, b in pairs:
            partner[a], partner[b] = b, a
        sizes = tuple(circle_sizes) if circle_sizes is not None else (n,)
        return cls(sizes, tuple(partner))

    @property
    def n_chords(self) -> int:
        return len(self.partner) // 2

    def doubled_successor(self) -> list[int]:
        succ = _successor(self.circle_sizes)
        return [succ[self.partner[i]] for i in range(len(self.partner))]


def doubled_component_count(cd: ChordDiagram) -> int:
    """Components of the curve after parallel doubling of every chord."""
    empty = sum(1 for s in cd.circle_sizes if s == 0)
    return _count_cycles(cd.doubled_successor()) + empty


@dataclass(frozen=True)
class ArrowDiagram:
    circles: tuple[tuple[ArrowSlot, ...], ...]

    _ends: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        circles = tuple(tuple((int(a), bool(t)) for a, t in c) for c in self.circles)
        object.__setattr__(self, "circles", circles)
        ends: dict[int, list] = {}
        for idx, (a, tail) in enumerate(s for c in circles for s in c):
            pair = ends.setdefault(a, [None, None])
            k = 0 if tail else 1
            if pair[k] is not None:
                raise ValueError(f"arrow {a} has two {'tails' if tail else 'heads'}")
            pair[k] = idx
        if any(t is None or h is None for t, h in ends.values()):
            raise ValueError("every arrow needs one tail and one head")
        object.__setattr__(self, "_ends", {a: (t, h) for a, (t, h) in ends.items()})

    @property
    def n_circles(self) -> int:
        return len(self.circles)

    @property
    def circle_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.circles)

    @property
    def n_arrows(self) -> int:
        return len(self._ends)

    @property
    def slots(self) -> tuple[ArrowSlot, ...]:
        return tuple(s for c in self.circles for s in c)

    def endpoints(self, a: int) -> tuple[int, int]:
        return self._ends[a]

    def underlying(self) -> ChordDiagram:
        partner = [0] * sum(self.circle_sizes)
        for t, h in self._ends.values():
            partner[t], partner[h] = h, t
        return ChordDiagram(self.circle_sizes, tuple(partner))

    def __str__(self) -> str:
        return canonical_key(self)


def to_ascending_arrow_diagram(cd: ChordDiagram) -> ArrowDiagram:
    """Orient each chord in the direction of its first passage from the base point."""
    perm = cd.doubled_successor()
    if doubled_component_count(cd) != 1:
        raise NotOneComponent("chord diagram is not one-component")
    tail = [False] * len(perm)
    if perm:
        i = 0
        while True:
            if not tail[cd.partner[i]]:
                tail[i] = True
            i = perm[i]
            if i == 0:
                break
    arrow_of: dict[int, int] = {}
    slots = []
    for i, p in enumerate(cd.partner):
        key = min(i, p)
        arrow_of.setdefault(key, len(arrow_of))
        slots.append((arrow_of[key], tail[i]))
    circles, start = [], 0
    for size in cd.circle_sizes:
        circles.append(tuple(slots[start:start + size]))
        start += size
    return ArrowDiagram(tuple(circles))


# -- canonical text form -------------------------------------------------------


def _encode(circles: Sequence[Sequence[ArrowSlot]]) -> list[list[tuple[str, int]]]:
    number: dict[int, int] = {}
    out = []
    for circ in circles:
        row = []
        for a, tail in circ:
            number.setdefault(a, len(number) + 1)
            row.append(("T" if tail else "H", number[a]))
        out.append(row)
    return out


def _render(rows: list[list[tuple[str, int]]]) -> str:
    return " | ".join(" ".join(f"{k}{n}" for k, n in row) for row in rows).strip()


def canonical_key(a: ArrowDiagram) -> str:
    """``T<k>``/``H<k>`` tokens, arrows numbered by first appearance.

    Circle 0 is read from the base point; circle 1 is read from whichever
    rotation gives the smallest token sequence.
    """
    if a.n_circles == 1 or not a.circles[1]:
        return _render(_encode(a.circles))
    c0, c1 = a.circles
    best = None
    for r in range(len(c1)):
        rows = _encode((c0, c1[r:] + c1[:r]))
        if best is None or rows < best:
            best = rows
    return _render(best)


_KEY_TOKEN = re.compile(r"([TH])(\d+)")


def parse_arrow_diagram(text: str) -> ArrowDiagram:
    parts = text.split("|")
    if len(parts) > 2:
        raise ValueError("arrow diagrams have at most 2 circles")
    circles = []
    for part in parts:
        toks = part.split()
        row = []
        for tok in toks:
            m = _KEY_TOKEN.fullmatch(tok)
            if m is None:
                raise ValueError(f"bad arrow token {tok!r}")
            row.append((int(m.group(2)), m.group(1) == "T"))
        circles.append(tuple(row))
    return ArrowDiagram(tuple(circles))


# -- enumeration ---------------------------------------------------------------


def one_component_matchings(circle_sizes: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield ``partner`` tuples of every one-component chord diagram on the circles.

    Depth-first over matchings of the lowest free slot, building the doubled
    successor permutation as path fragments and pruning as soon as a cycle
    closes early.  With two circles only one rotation of circle 1 is produced:
    the first chord joining the circles (in circle-0 order) lands on the first
    slot of circle 1.
    """
    sizes = tuple(circle_sizes)
    n = sum(sizes)
    if n == 0:
        if len(sizes) == 1:
            yield ()
        return
    if n % 2 or any(s == 0 for s in sizes):
        return
    succ = _successor(sizes)
    n0 = sizes[0]
    two = len(sizes) == 2
    partner = [-1] * n
    end_of = list(range(n))    # at a fragment start: its end
    start_of = list(range(n))  # at a fragment end: its start
    state = {"edges": 0, "linked": False}

    def add_edge(u: int, v: int, undo: list) -> bool:
        s = start_of[u]
        if s == v:
            if state["edges"] + 1 != n:
                return False
            state["edges"] += 1
            undo.append(None)
            return True
        e = end_of[v]
        undo.append((s, end_of[s], e, start_of[e]))
        end_of[s] = e
        start_of[e] = s
        state["edges"] += 1
        return True

    def rollback(undo: list) -> None:
        for item in reversed(undo):
            state["edges"] -= 1
            if item is not None:
                s, old_end, e, old_start = item
                end_of[s] = old_end
                start_of[e] = old_start

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        while i < n and partner[i] != -1:
            i += 1
        if i == n:
            yield tuple(partner)
            return
        if two and i >= n0 and not state["linked"]:
            return
        for j in range(i + 1, n):
            if partner[j] != -1:
                continue
            crossing = two and i < n0 <= j
            if crossing and not state["linked"] and j != n0:
                continue
            partner[i], partner[j] = j, i
            undo: list = []
            if add_edge(i, succ[j], undo) and add_edge(j, succ[i], undo):
                was_linked = state["linked"]
                if crossing:
                    state["linked"] = True
                yield from rec(i + 1)
                state["linked"] = was_linked
            rollback(undo)
            partner[i] = partner[j] = -1

    yield from rec(0)


def is_conway_diagram(a: ArrowDiagram) -> bool:
    """True iff ``a`` is one-component and already its own ascending orientation."""
    if a.n_circles != (1 if a.n_arrows % 2 == 0 else 2):
        return False
    cd = a.underlying()
    if doubled_component_count(cd) != 1:
        return False
    asc = to_ascending_arrow_diagram(cd)
    return all(t == u for (_, t), (_, u) in zip(a.slots, asc.slots))


@dataclass
class Combination:
    """Integer combination of arrow diagrams, keyed by canonical key.

    ``terms=None`` marks a combination too large to list; it is then the
    multiplicity-one sum of all diagrams accepted by :func:`is_conway_diagram`
    with ``m`` arrows, and only membership queries are available.
    """

    m: int
    terms: dict[str, int] | None

    def __post_init__(self) -> None:
        if self.terms is not None:
            self.terms = {k: v for k, v in self.terms.items() if v != 0}
        self._parsed: list[tuple[ArrowDiagram, int]] | None = None

    @property
    def explicit(self) -> bool:
        return self.terms is not None

    def __len__(self) -> int:
        if self.terms is None:
            raise TypeError(f"size-{self.m} combination is not enumerated")
        return len(self.terms)

    def __contains__(self, key: str) -> bool:
        return self.multiplicity(parse_arrow_diagram(key)) != 0

    def multiplicity(self, a: ArrowDiagram) -> int:
        if a.n_arrows != self.m:
            return 0
        if self.terms is None:
            return 1 if is_conway_diagram(a) else 0
        return self.terms.get(canonical_key(a), 0)

    def keys(self) -> list[str]:
        if self.terms is None:
            raise TypeError(f"size-{self.m} combination is not enumerated")
        return sorted(self.terms)

    def diagrams(self) -> list[tuple[ArrowDiagram, int]]:
        if self._parsed is None:
            self._parsed = [(parse_arrow_diagram(k), self.terms[k]) for k in self.keys()]
        return self._parsed

    @property
    def n_circles(self) -> int:
        return 1 if self.m % 2 == 0 else 2


def _splits(m: int) -> list[tuple[int, ...]]:
    if m % 2 == 0:
        return [(2 * m,)]
    return [(k, 2 * m - k) for k in range(1, 2 * m)]


def _fast_key(n0: int, n: int, partner: tuple[int, ...], succ: list[int]) -> str:
    # Same result as canonical_key(to_ascending_arrow_diagram(...)) without the objects.
    tail = [False] * n
    i = 0
    while True:
        if not tail[partner[i]]:
            tail[i] = True
        i = succ[partner[i]]
        if i == 0:
            break

    def encode(order: Sequence[int]) -> list[str]:
        number: dict[int, int] = {}
        out = []
        for j in order:
            k = number.setdefault(min(j, partner[j]), len(number) + 1)
            out.append(("T" if tail[j] else "H") + str(k))
        return out

    if n0 == n:
        return " ".join(encode(range(n)))
    head = list(range(n0))
    best = None
    for r in range(n0, n):
        order = head + list(range(r, n)) + list(range(n0, r))
        toks = encode(order)
        cmp = [(t[0], int(t[1:])) for t in toks]
        if best is None or cmp < best[0]:
            best = (cmp, toks)
    toks = best[1]
    return " ".join(toks[:n0]) + " | " + " ".join(toks[n0:])


@functools.lru_cache(maxsize=None)
def _generate(m: int) -> frozenset[str]:
    keys: set[str] = set()
    for sizes in _splits(m):
        succ = _successor(sizes)
        n = sum(sizes)
        for partner in one_component_matchings(sizes):
            keys.add(_fast_key(sizes[0], n, partner, succ))
    return frozenset(keys)


# Largest size enumerated in full; 9 would mean tens of millions of matchings.
MAX_ENUMERATED = 8


@functools.lru_cache(maxsize=None)
def generate_conway_combination(m: int) -> Combination:
    """All based one-component ascending arrow diagrams with ``m`` arrows.

    The result is shared between callers and must not be modified.
    """
    if m < 1:
        raise ValueError("combination size must be at least 1")
    return Combination(m, dict.fromkeys(_generate(m), 1))


def conway_combination(m: int) -> Combination:
    """Enumerated combination for ``m <= MAX_ENUMERATED``, membership-only above."""
    if m > MAX_ENUMERATED:
        return Combination(m, None)
    return generate_conway_combination(m)


# -- cache files -----------------------------------------------------------------


def save_combination(path: str | os.PathLike, comb: Combination) -> None:
    lines = [f"m={comb.m} count={len(comb)}"]
    for key in comb.keys():
        mult = comb.terms[key]
        lines.append(key if mult == 1 else f"{mult}*{key}")
    Path(path).write_text("\n".join(lines) + "\n")


def load_combination(path: str | os.PathLike) -> Combination:
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ValueError(f"{path}: empty combination file")
    m = re.fullmatch(r"m=(\d+) count=(\d+)", lines[0].strip())
    if m is None:
        raise ValueError(f"{path}: bad header {lines[0]!r}")
    size, count = int(m.group(1)), int(m.group(2))
    terms: dict[str, int] = {}
    for line in lines[1:]:
        line = line.strip()
        if not line:
            continue
        mult, _, key = line.rpartition("*")
        terms[key] = terms.get(key, 0) + (int(mult) if mult else 1)
    if len(terms) != count:
        raise ValueError(f"{path}: header says {count} diagrams, found {len(terms)}")
    return Combination(size, terms)


def cached_combination(m: int, cache_dir: str | os.PathLike | None = None) -> Combination:
    """Load the size-``m`` combination from ``cache_dir`` or generate and store it."""
    if cache_dir is None or m > MAX_ENUMERATED:
        return conway_combination(m)
    path = Path(cache_dir) / f"conway_{m}.txt"
    if path.exists():
        return load_combination(path)
    comb = generate_conway_combination(m)
    path.parent.mkdir(parents=True, exist_ok=True)
    save_combination(path, comb)
    return comb
