"""Conway polynomial by the skein relation, used as an independent oracle.

Knots are unknotted by switching crossings until the diagram is descending
(every chord met first at its over endpoint).  Two-circle links are split by
switching inter-circle crossings until the based component lies below the
other one.  Each switch costs a smoothing term::

    nabla(G+) - nabla(G-) = z * nabla(G0)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .core import ONE, ZERO, IntPolynomial, poly_add, poly_scale_shift
from .gauss import GaussDiagram, serialize_gauss_code, smooth_crossing, switch_crossing


def violating_chords(g: GaussDiagram) -> list[int]:
    """Chords blocking the base case, in slot order from the base point."""
    out = []
    if g.n_circles == 1:
        seen: set[int] = set()
        for label, over in g.slots:
            if label not in seen:
                seen.add(label)
                if not over:
                    out.append(label)
        return out
    for label, over in g.circles[0]:
        if over and g.is_inter_circle(label):
            out.append(label)
    return out


def first_violating_chord(g: GaussDiagram) -> Optional[int]:
    bad = violating_chords(g)
    return bad[0] if bad else None


@dataclass
class SkeinStats:
    calls: int = 0
    max_depth: int = 0


def conway_skein(g: GaussDiagram, rng: random.Random | None = None,
                 stats: SkeinStats | None = None, memo: dict | None = None) -> IntPolynomial:
    """Conway polynomial of a one- or two-circle diagram.

    With ``rng`` the crossing to resolve is drawn at random among the
    violating ones instead of taking the first; the result must not change.
    """
    return _skein(g, rng, stats, memo, 0)


def _skein(g, rng, stats, memo, depth) -> IntPolynomial:
    if stats is not None:
        stats.calls += 1
        stats.max_depth = max(stats.max_depth, depth)
    key = None
    if memo is not None:
        key = serialize_gauss_code(g)
        if key in memo:
            return memo[key]

    bad = violating_chords(g)
    if not bad:
        result = ONE if g.n_circles == 1 else ZERO
    else:
        x = rng.choice(bad) if rng is not None else bad[0]
        switched = _skein(switch_crossing(g, x), rng, stats, memo, depth + 1)
        smoothed = _skein(smooth_crossing(g, x), rng, stats, memo, depth + 1)
        result = poly_add(switched, poly_scale_shift(smoothed, g.sign(x), 1))

    if memo is not None:
        memo[key] = result
    return result


def depth_bound(g: GaussDiagram) -> int:
    """Upper bound on the recursion depth of :func:`conway_skein`.

    Between two smoothings a path only switches chords that violate in the
    current diagram, at most one switch per chord, so with ``n`` chords and
    ``v`` initial violations the depth is at most ``v + n + n(n-1)/2``.
    """
    n = g.n_chords
    return len(violating_chords(g)) + n + n * (n - 1) // 2
