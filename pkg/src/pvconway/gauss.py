"""Gauss diagrams on one or two circles.

A diagram stores, for each circle, the sequence of chord endpoints met when
walking from that circle's reference point along the orientation.  Each
endpoint is a ``(label, is_over)`` pair; chords point from the over endpoint
to the under endpoint and carry a sign (the local writhe).

Slots are numbered globally: circle 0 holds slots ``0 .. len(c0) - 1`` and
circle 1 continues from there.  The base point sits just before slot 0.
Smoothing is modelled on the successor permutation of slots: smoothing the
chord with endpoints ``a`` and ``b`` swaps ``succ[a]`` and ``succ[b]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Literal, Mapping, Sequence

from .core import ChordId, check_sign
from .errors import (
    DanglingChord,
    DuplicateRole,
    GaussCodeError,
    MalformedToken,
    NoSuchConfiguration,
    NotOneComponent,
    SignMismatch,
    TooManyCircles,
    UnknownChord,
)

Slot = tuple[int, bool]  # (chord label, is_over)
Direction = Literal["asc", "des"]


@dataclass(frozen=True)
class GaussDiagram:
    circles: tuple[tuple[Slot, ...], ...]
    signs: tuple[tuple[ChordId, int], ...]

    _slots: tuple[Slot, ...] = field(init=False, repr=False, compare=False)
    _ends: dict = field(init=False, repr=False, compare=False)
    _sign: dict = field(init=False, repr=False, compare=False)
    _circle_of: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        circles = tuple(tuple((int(l), bool(o)) for l, o in c) for c in self.circles)
        if not 1 <= len(circles) <= 2:
            raise TooManyCircles(f"expected 1 or 2 circles, got {len(circles)}")
        signs = tuple(sorted((int(l), check_sign(int(s))) for l, s in dict(self.signs).items()))
        object.__setattr__(self, "circles", circles)
        object.__setattr__(self, "signs", signs)

        slots = tuple(s for c in circles for s in c)
        circle_of = tuple(i for i, c in enumerate(circles) for _ in c)
        ends: dict[int, list] = {}
        for idx, (label, over) in enumerate(slots):
            if label <= 0:
                raise GaussCodeError(f"chord labels must be positive, got {label}")
            pair = ends.setdefault(label, [None, None])
            k = 0 if over else 1
            if pair[k] is not None:
                raise DuplicateRole(f"chord {label} has two {'over' if over else 'under'} endpoints")
            pair[k] = idx
        for label, (o, u) in ends.items():
            if o is None or u is None:
                raise DanglingChord(f"chord {label} has only one endpoint")
        sign = dict(signs)
        if set(sign) != set(ends):
            missing = set(ends) ^ set(sign)
            raise GaussCodeError(f"signs do not match chords: {sorted(missing)}")
        object.__setattr__(self, "_slots", slots)
        object.__setattr__(self, "_ends", {l: (o, u) for l, (o, u) in ends.items()})
        object.__setattr__(self, "_sign", sign)
        object.__setattr__(self, "_circle_of", circle_of)

    @classmethod
    def build(cls, circles: Sequence[Sequence[Slot]], signs: Mapping[int, int]) -> "GaussDiagram":
        return cls(tuple(tuple(c) for c in circles), tuple(signs.items()))

    @classmethod
    def empty(cls, n_circles: int = 1) -> "GaussDiagram":
        return cls(((),) * n_circles, ())

    # -- accessors -------------------------------------------------------

    @property
    def n_circles(self) -> int:
        return len(self.circles)

    @property
    def circle_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.circles)

    @property
    def n_slots(self) -> int:
        return len(self._slots)

    @property
    def n_chords(self) -> int:
        return len(self._sign)

    @property
    def labels(self) -> list[ChordId]:
        return [l for l, _ in self.signs]

    @property
    def slots(self) -> tuple[Slot, ...]:
        return self._slots

    def slot(self, i: int) -> Slot:
        return self._slots[i]

    def circle_of(self, i: int) -> int:
        return self._circle_of[i]

    def sign(self, c: ChordId) -> int:
        try:
            return self._sign[c]
        except KeyError:
            raise UnknownChord(c) from None

    def over_slot(self, c: ChordId) -> int:
        return self.endpoints(c)[0]

    def under_slot(self, c: ChordId) -> int:
        return self.endpoints(c)[1]

    def endpoints(self, c: ChordId) -> tuple[int, int]:
        try:
            return self._ends[c]
        except KeyError:
            raise UnknownChord(c) from None

    def is_inter_circle(self, c: ChordId) -> bool:
        o, u = self.endpoints(c)
        return self._circle_of[o] != self._circle_of[u]

    def successor(self) -> list[int]:
        succ: list[int] = []
        start = 0
        for size in self.circle_sizes:
            succ.extend(start + (i + 1) % size for i in range(size))
            start += size
        return succ

    def __str__(self) -> str:
        return serialize_gauss_code(self)


# -- text format -------------------------------------------------------------

_TOKEN = re.compile(r"([OU])(\d+)([+\-−])")


def _parse_circle(text: str, circle: int) -> list[tuple[int, bool, int]]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = text[pos:].split()[0]
            raise MalformedToken(f"bad token {bad!r} on circle {circle}")
        label = int(m.group(2))
        if label <= 0:
            raise MalformedToken(f"chord label must be positive in {m.group(0)!r}")
        out.append((label, m.group(1) == "O", 1 if m.group(3) == "+" else -1))
        pos = m.end()
    return out


def parse_gauss_code(text: str) -> GaussDiagram:
    """Read ``O<label><sign>`` / ``U<label><sign>`` tokens; ``|`` separates circles."""
    parts = text.split("|")
    if len(parts) > 2:
        raise TooManyCircles(f"at most 2 circles allowed, got {len(parts)}")
    circles = [_parse_circle(p, i) for i, p in enumerate(parts)]

    seen: dict[int, dict[bool, int]] = {}
    for circ in circles:
        for label, over, sign in circ:
            roles = seen.setdefault(label, {})
            if over in roles:
                raise DuplicateRole(f"chord {label} appears twice as {'O' if over else 'U'}")
            roles[over] = sign
    signs = {}
    for label, roles in seen.items():
        if len(roles) != 2:
            raise DanglingChord(f"chord {label} appears only once")
        if roles[True] != roles[False]:
            raise SignMismatch(f"chord {label} has different signs on O and U")
        signs[label] = roles[True]
    return GaussDiagram.build([[(l, o) for l, o, _ in c] for c in circles], signs)


def _token(d: GaussDiagram, s: Slot) -> str:
    label, over = s
    return f"{'O' if over else 'U'}{label}{'+' if d.sign(label) > 0 else '-'}"


def serialize_gauss_code(d: GaussDiagram) -> str:
    return " | ".join(" ".join(_token(d, s) for s in c) for c in d.circles).strip()


# -- smoothing ---------------------------------------------------------------


def _as_labels(d: GaussDiagram, s: Iterable[ChordId]) -> list[ChordId]:
    labels = list(s)
    for c in labels:
        d.endpoints(c)
    return labels


def smoothed_successor(d: GaussDiagram, s: Iterable[ChordId]) -> list[int]:
    succ = d.successor()
    for c in _as_labels(d, s):
        a, b = d.endpoints(c)
        succ[a], succ[b] = succ[b], succ[a]
    return succ


def permutation_cycles(perm: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = perm[i]
        cycles.append(cyc)
    return cycles


def _empty_circles(d: GaussDiagram) -> int:
    return sum(1 for c in d.circles if not c)


def smooth_count_components(d: GaussDiagram, s: Iterable[ChordId]) -> int:
    """Number of closed curves after the oriented smoothing of every chord in ``s``."""
    perm = smoothed_successor(d, s)
    return len(permutation_cycles(perm)) + _empty_circles(d)


def smoothed_traversal(d: GaussDiagram, s: Iterable[ChordId]) -> list[int]:
    """Slots in the order met along the smoothed curve, starting at the base point."""
    s = list(s)
    perm = smoothed_successor(d, s)
    if len(permutation_cycles(perm)) + _empty_circles(d) != 1:
        raise NotOneComponent(f"smoothing {sorted(s)} does not give one component")
    if not perm:
        return []
    order = [0]
    i = perm[0]
    while i != 0:
        order.append(i)
        i = perm[i]
    return order


def classify_subset(d: GaussDiagram, s: Iterable[ChordId], direction: Direction = "asc") -> bool:
    """True iff ``s`` is one-component and every chord of ``s`` is first met
    at its over endpoint (``asc``) or at its under endpoint (``des``)."""
    if direction not in ("asc", "des"):
        raise ValueError(f"direction must be 'asc' or 'des', got {direction!r}")
    s = set(_as_labels(d, s))
    perm = smoothed_successor(d, s)
    if len(permutation_cycles(perm)) + _empty_circles(d) != 1:
        return False
    want_over = direction == "asc"
    pending = set(s)
    i = 0
    for _ in range(len(perm)):
        if not pending:
            break
        label, over = d.slot(i)
        if label in pending:
            if over != want_over:
                return False
            pending.discard(label)
        i = perm[i]
    return True


# -- surgeries ---------------------------------------------------------------


def switch_crossing(d: GaussDiagram, c: ChordId) -> GaussDiagram:
    """Exchange over and under at chord ``c`` and negate its sign."""
    d.endpoints(c)
    circles = [[(l, (not o) if l == c else o) for l, o in circ] for circ in d.circles]
    signs = dict(d.signs)
    signs[c] = -signs[c]
    return GaussDiagram.build(circles, signs)


def smooth_crossing(d: GaussDiagram, c: ChordId) -> GaussDiagram:
    """Remove chord ``c`` by oriented smoothing, recomputing the circles.

    The circle through the base point becomes circle 0 and is read from the
    base point; any other circle is read from its lowest original slot.
    """
    a, b = d.endpoints(c)
    succ = d.successor()
    succ[a], succ[b] = succ[b], succ[a]
    cycles = permutation_cycles(succ)
    if len(cycles) + _empty_circles(d) > 2:
        raise TooManyCircles(f"smoothing chord {c} would leave 3 circles")

    def read(cycle_start: int) -> list[Slot]:
        out = []
        i = cycle_start
        while True:
            if i not in (a, b):
                out.append(d.slot(i))
            i = succ[i]
            if i == cycle_start:
                return out

    base = next(cyc for cyc in cycles if 0 in cyc)
    circles = [read(0)]
    for cyc in cycles:
        if cyc is not base:
            circles.append(read(min(cyc)))
    circles.extend([] for _ in range(_empty_circles(d)))
    signs = {l: s for l, s in d.signs if l != c}
    return GaussDiagram.build(circles, signs)


def move_base_point(d: GaussDiagram, steps: int) -> GaussDiagram:
    """Advance the base point of a one-circle diagram past ``steps`` endpoints."""
    if d.n_circles != 1:
        raise ValueError("base-point moves are only supported on one-circle diagrams")
    slots = d.circles[0]
    if not slots:
        return d
    k = steps % len(slots)
    return GaussDiagram((slots[k:] + slots[:k],), d.signs)


def relabel(d: GaussDiagram, mapping: Mapping[ChordId, ChordId]) -> GaussDiagram:
    if sorted(mapping) != d.labels or len(set(mapping.values())) != len(mapping):
        raise ValueError("relabeling must be a bijection on the chord labels")
    circles = [[(mapping[l], o) for l, o in circ] for circ in d.circles]
    return GaussDiagram.build(circles, {mapping[l]: s for l, s in d.signs})


def reverse_all_arrows(d: GaussDiagram) -> GaussDiagram:
    """Swap over and under at every chord, keeping the signs."""
    circles = [[(l, not o) for l, o in circ] for circ in d.circles]
    return GaussDiagram.build(circles, dict(d.signs))


def standard_relabel(d: GaussDiagram) -> GaussDiagram:
    """Relabel chords 1, 2, ... in order of first appearance from the base point."""
    mapping: dict[int, int] = {}
    for label, _ in d.slots:
        mapping.setdefault(label, len(mapping) + 1)
    return relabel(d, mapping)


# -- Reidemeister moves ------------------------------------------------------

Arc = tuple[int, int]  # (circle, gap index); gap i sits just before slot i of that circle


def _fresh_label(d: GaussDiagram, k: int = 0) -> int:
    return max(d.labels, default=0) + 1 + k


def _insert(d: GaussDiagram, inserts: list[tuple[Arc, list[Slot]]], signs: Mapping[int, int]) -> GaussDiagram:
    circles = [list(c) for c in d.circles]
    per_gap: dict[Arc, list[Slot]] = {}
    for (circ, gap), new in inserts:
        if not 0 <= circ < len(circles) or not 0 <= gap <= len(circles[circ]):
            raise ValueError(f"no arc {(circ, gap)} in this diagram")
        per_gap.setdefault((circ, gap), []).extend(new)
    for (circ, gap) in sorted(per_gap, reverse=True):
        circles[circ][gap:gap] = per_gap[(circ, gap)]
    all_signs = dict(d.signs)
    all_signs.update(signs)
    return GaussDiagram.build(circles, all_signs)


def r1_insert(d: GaussDiagram, arc: Arc, sign: int = 1, over_first: bool = True,
              label: int | None = None) -> GaussDiagram:
    """Add an isolated chord with both endpoints on ``arc``."""
    label = _fresh_label(d) if label is None else label
    if label in d.labels:
        raise ValueError(f"label {label} already in use")
    pair = [(label, over_first), (label, not over_first)]
    return _insert(d, [(arc, pair)], {label: check_sign(sign)})


def _adjacent(d: GaussDiagram, i: int, j: int) -> bool:
    """Slots ``i`` then ``j`` are consecutive, never across the base point."""
    circ = d.circle_of(i)
    if d.circle_of(j) != circ:
        return False
    if circ == 0:
        return j == i + 1
    start = sum(d.circle_sizes[:circ])
    size = d.circle_sizes[circ]
    return (j - start) == (i - start + 1) % size


def _remove(d: GaussDiagram, chords: set[int]) -> GaussDiagram:
    circles = [[s for s in circ if s[0] not in chords] for circ in d.circles]
    return GaussDiagram.build(circles, {l: s for l, s in d.signs if l not in chords})


def r1_delete(d: GaussDiagram, c: ChordId) -> GaussDiagram:
    a, b = sorted(d.endpoints(c))
    if not (_adjacent(d, a, b) or _adjacent(d, b, a)):
        raise NoSuchConfiguration(f"chord {c} is not an isolated chord")
    return _remove(d, {c})


def r2_insert(d: GaussDiagram, over_arc: Arc, under_arc: Arc, sign: int = 1,
              parallel: bool = True, labels: tuple[int, int] | None = None) -> GaussDiagram:
    """Add two chords of signs ``sign`` and ``-sign``.

    Their over endpoints are adjacent on ``over_arc`` and their under endpoints
    adjacent on ``under_arc``.  ``parallel`` keeps the same order on both arcs;
    antiparallel reverses it on the under arc.
    """
    x, y = labels if labels is not None else (_fresh_label(d), _fresh_label(d, 1))
    if x == y or x in d.labels or y in d.labels:
        raise ValueError("R-II needs two fresh labels")
    sign = check_sign(sign)
    overs = [(x, True), (y, True)]
    unders = [(x, False), (y, False)] if parallel else [(y, False), (x, False)]
    return _insert(d, [(over_arc, overs), (under_arc, unders)], {x: sign, y: -sign})


def r2_delete(d: GaussDiagram, x: ChordId, y: ChordId) -> GaussDiagram:
    ox, ux = d.endpoints(x)
    oy, uy = d.endpoints(y)
    if d.sign(x) != -d.sign(y):
        raise NoSuchConfiguration(f"chords {x}, {y} do not have opposite signs")
    overs_ok = _adjacent(d, ox, oy) or _adjacent(d, oy, ox)
    unders_ok = _adjacent(d, ux, uy) or _adjacent(d, uy, ux)
    if not (overs_ok and unders_ok):
        raise NoSuchConfiguration(f"chords {x}, {y} do not form an R-II bigon")
    return _remove(d, {x, y})


Move = Literal["R1-insert", "R1-delete", "R2-insert", "R2-delete"]


def apply_move(d: GaussDiagram, move: Move, site, params: Mapping | None = None) -> GaussDiagram:
    """Dispatch a Reidemeister move given by name.

    ``R1-insert``: site is an arc ``(circle, gap)``; params ``sign``, ``over_first``.
    ``R2-insert``: site is ``(over_arc, under_arc)``; params ``sign``, ``parallel``.
    ``R1-delete``: site is a chord label.  ``R2-delete``: site is a pair of labels.
    """
    params = dict(params or {})
    if move == "R1-insert":
        return r1_insert(d, tuple(site), **params)
    if move == "R1-delete":
        return r1_delete(d, site)
    if move == "R2-insert":
        over_arc, under_arc = site
        return r2_insert(d, tuple(over_arc), tuple(under_arc), **params)
    if move == "R2-delete":
        x, y = site
        return r2_delete(d, x, y)
    raise ValueError(f"unknown move {move!r}")
