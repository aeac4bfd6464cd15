"""Combinatorial planar diagrams of rational tangles and their closures.

Conventions
-----------
A crossing is a 4-tuple of edge ids listed counterclockwise, starting from an
under-strand slot: slots 0 and 2 carry the under-strand, slots 1 and 3 the
over-strand.  The elementary tangle ``[1]`` is the crossing whose over-strand
runs NW to SE, so that its L-smoothing (joining slots 0-1 and 2-3) leaves the
``[0]`` tangle::

    NW       NE
      \\     /
       \\   /        over:  NW -- SE
        \\ /         under: SW -- NE (broken)
         /
        / \\
       /   \\
    SW       SE

With an orientation, the sign of a crossing whose under-strand enters at slot
``i`` is +1 exactly when the over-strand enters at slot ``i - 1`` (mod 4), i.e.
the right-handed crossing.  A curl of this sign contributes ``-A^3`` to the
bracket.

A tangle diagram has four boundary edges tagged ``(NW, NE, SW, SE)``.  An edge
id occurs exactly twice among crossing slots and boundary tags; crossingless
closed components are counted in ``free_loops``.  Orientations are stored as
one *dart* ``(crossing, slot)`` per component (the strand enters that crossing
through that slot).
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .contfrac import ContinuedFraction
from .expr import Infinity, IntTangle, Invert, Mirror, Product, Rotate, Sum, TangleExpr, from_contfrac

__all__ = [
    "PlanarDiagram",
    "NW",
    "NE",
    "SW",
    "SE",
    "L",
    "R",
    "build_standard",
    "build_expr",
    "elementary",
    "tangle_sum",
    "tangle_product",
    "mirror",
    "rotate",
    "invert",
    "flip",
    "numerator",
    "denominator",
    "orient",
    "reverse_component",
    "components",
    "component_count",
    "crossing_signs",
    "writhe",
    "add_curl",
    "apply_state",
    "state_statistics",
    "to_pd",
    "from_pd",
    "oracle_max_crossings",
]

NW, NE, SW, SE = 0, 1, 2, 3
L, R = 0, 1

Crossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[Crossing, ...]
    endpoints: tuple[int, int, int, int] | None = None
    free_loops: int = 0
    orientation: tuple[tuple[int, int], ...] | None = None

    @property
    def is_closed(self) -> bool:
        return self.endpoints is None

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def edges(self) -> list[int]:
        ids = {e for x in self.crossings for e in x}
        if self.endpoints is not None:
            ids.update(self.endpoints)
        return sorted(ids)

    def occurrences(self) -> dict[int, list[tuple[int, int]]]:
        """Edge id -> crossing slots ``(crossing, slot)`` it is attached to."""
        occ: dict[int, list[tuple[int, int]]] = {}
        for c, x in enumerate(self.crossings):
            for s, e in enumerate(x):
                occ.setdefault(e, []).append((c, s))
        return occ

    def validate(self) -> None:
        """Check the edge-degree invariant; raises ``ValueError``."""
        count: dict[int, int] = {}
        for x in self.crossings:
            if len(x) != 4:
                raise ValueError(f"crossing {x} does not have 4 slots")
            for e in x:
                count[e] = count.get(e, 0) + 1
        if self.endpoints is not None:
            if len(self.endpoints) != 4:
                raise ValueError("a tangle diagram needs exactly 4 endpoints")
            for e in self.endpoints:
                count[e] = count.get(e, 0) + 1
        bad = {e: k for e, k in count.items() if k != 2}
        if bad:
            raise ValueError(f"edges with degree != 2: {bad}")
        if self.free_loops < 0:
            raise ValueError("negative free loop count")


# ---------------------------------------------------------------- building


def _renumber(crossings: Sequence[Crossing], endpoints, order_first=()) -> tuple:
    """Relabel edges 0, 1, 2, ... by first occurrence."""
    mapping: dict[int, int] = {}
    for e in order_first:
        mapping.setdefault(e, len(mapping))
    for x in crossings:
        for e in x:
            mapping.setdefault(e, len(mapping))
    if endpoints is not None:
        for e in endpoints:
            mapping.setdefault(e, len(mapping))
    xs = tuple(tuple(mapping[e] for e in x) for x in crossings)
    eps = None if endpoints is None else tuple(mapping[e] for e in endpoints)
    return xs, eps


class _Builder:
    """Standard-form construction: twists added on the right or at the bottom.

    Crossings are appended in construction order, which the coloring module
    relies on for propagation.
    """

    def __init__(self, vertical: bool = False):
        self.crossings: list[Crossing] = []
        self._next = 2
        if vertical:
            self.ends = [0, 1, 0, 1]
        else:
            self.ends = [0, 0, 1, 1]
        self.seeds = (0, 1)

    def _fresh(self) -> int:
        self._next += 1
        return self._next - 1

    def add_right(self, sign: int) -> None:
        e_ne, e_se = self.ends[NE], self.ends[SE]
        f_ne, f_se = self._fresh(), self._fresh()
        # local positions of the new crossing: NW=e_ne, SW=e_se, SE=f_se, NE=f_ne
        if sign > 0:
            self.crossings.append((e_se, f_se, f_ne, e_ne))
        else:
            self.crossings.append((f_se, f_ne, e_ne, e_se))
        self.ends[NE], self.ends[SE] = f_ne, f_se

    def add_bottom(self, sign: int) -> None:
        e_sw, e_se = self.ends[SW], self.ends[SE]
        f_sw, f_se = self._fresh(), self._fresh()
        # local positions: NW=e_sw, NE=e_se, SW=f_sw, SE=f_se
        if sign > 0:
            self.crossings.append((f_sw, f_se, e_se, e_sw))
        else:
            self.crossings.append((f_se, e_se, e_sw, f_sw))
        self.ends[SW], self.ends[SE] = f_sw, f_se

    def diagram(self) -> tuple[PlanarDiagram, tuple[int, int]]:
        xs, eps = _renumber(self.crossings, self.ends, order_first=self.seeds)
        return PlanarDiagram(xs, eps), (0, 1)


def _standard_builder(cf: ContinuedFraction) -> _Builder:
    terms = cf.terms
    # a1 is always a right twist; going inward the twists alternate, so an
    # even-length form starts from vertical arcs
    b = _Builder(vertical=len(terms) % 2 == 0)
    for i in range(len(terms) - 1, -1, -1):
        a = terms[i]
        step = b.add_bottom if i % 2 else b.add_right
        for _ in range(abs(a)):
            step(1 if a > 0 else -1)
    return b


def build_standard(cf: ContinuedFraction) -> PlanarDiagram:
    """Alternating standard-form diagram of ``[[a1], ..., [an]]``.

    Twists are added in the order ``an, a(n-1), ..., a1``: terms at odd
    positions as horizontal twists on the right, terms at even positions as
    vertical twists at the bottom.  Odd-length forms grow from ``[0]``,
    even-length ones (and the ``[∞]`` sentinel) from ``[∞]``.
    """
    return _standard_builder(cf).diagram()[0]


def standard_with_seeds(cf: ContinuedFraction) -> tuple[PlanarDiagram, tuple[int, int]]:
    """Like :func:`build_standard`, plus the edge ids of the two initial strands."""
    return _standard_builder(cf).diagram()


def elementary(kind: str | int) -> PlanarDiagram:
    """``[0]``, ``[inf]``, ``[1]`` or ``[-1]`` as diagrams."""
    if kind in (0, "0"):
        return PlanarDiagram((), (0, 0, 1, 1))
    if kind in ("inf", "∞"):
        return PlanarDiagram((), (0, 1, 0, 1))
    if kind in (1, "1"):
        # X(SW, SE, NE, NW) with edges NW=0, NE=1, SW=2, SE=3
        return PlanarDiagram(((2, 3, 1, 0),), (0, 1, 2, 3))
    if kind in (-1, "-1"):
        return mirror(elementary(1))
    raise ValueError(f"no elementary tangle {kind!r}")


def _glue(d1: PlanarDiagram, d2: PlanarDiagram, joins, new_ends) -> PlanarDiagram:
    """Join boundary slots of two tangles.

    ``joins`` lists (tag in d1, tag in d2) pairs to identify; ``new_ends``
    gives, for NW, NE, SW, SE of the result, ``(which, tag)`` with which in
    {1, 2}.
    """
    shift = (max(d1.edges) + 1) if d1.edges else 0
    x2 = [tuple(e + shift for e in x) for x in d2.crossings]
    e1 = list(d1.endpoints)
    e2 = [e + shift for e in d2.endpoints]
    ds = DisjointSet(d1.edges + [e + shift for e in d2.edges])
    for t1, t2 in joins:
        ds.merge(e1[t1], e2[t2])
    crossings = [tuple(ds[e] for e in x) for x in list(d1.crossings) + x2]
    ends = tuple(ds[(e1 if w == 1 else e2)[t]] for w, t in new_ends)
    # a merged edge with nothing left attached is a crossingless loop
    used = {e for x in crossings for e in x} | set(ends)
    roots = {ds[e] for e in d1.edges + [e + shift for e in d2.edges]}
    loops = d1.free_loops + d2.free_loops + len(roots - used)
    xs, eps = _renumber(crossings, ends)
    return PlanarDiagram(xs, eps, loops)


def tangle_sum(d1: PlanarDiagram, d2: PlanarDiagram) -> PlanarDiagram:
    """``d1 + d2``: d1 on the left, NE/SE of d1 joined to NW/SW of d2."""
    return _glue(d1, d2, [(NE, NW), (SE, SW)], [(1, NW), (2, NE), (1, SW), (2, SE)])


def tangle_product(d1: PlanarDiagram, d2: PlanarDiagram) -> PlanarDiagram:
    """``d1 * d2``: d1 above d2, SW/SE of d1 joined to NW/NE of d2."""
    return _glue(d1, d2, [(SW, NW), (SE, NE)], [(1, NW), (1, NE), (2, SW), (2, SE)])


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Switch every crossing."""
    xs = tuple((b, c, e, a) for a, b, c, e in d.crossings)
    return replace(d, crossings=xs)


def rotate(d: PlanarDiagram) -> PlanarDiagram:
    """Counterclockwise quarter turn in the plane."""
    nw, ne, sw, se = _tangle_ends(d)
    return replace(d, endpoints=(ne, se, nw, sw))


def invert(d: PlanarDiagram) -> PlanarDiagram:
    """``1/T = -T^r``."""
    return mirror(rotate(d))


def flip(d: PlanarDiagram, axis: str) -> PlanarDiagram:
    """Half turn in space about the horizontal or vertical axis of the plane.

    The planar picture is reflected (reversing the cyclic order at each
    crossing) and every crossing is switched.
    """
    nw, ne, sw, se = _tangle_ends(d)
    xs = tuple((e, c, b, a) for a, b, c, e in d.crossings)
    if axis in ("h", "horizontal"):
        ends = (sw, se, nw, ne)
    elif axis in ("v", "vertical"):
        ends = (ne, nw, se, sw)
    else:
        raise ValueError("axis must be 'horizontal' or 'vertical'")
    return replace(d, crossings=xs, endpoints=ends)


def build_expr(t: TangleExpr | ContinuedFraction) -> PlanarDiagram:
    """Diagram of an algebraic tangle tree, assembled from elementary pieces."""
    if isinstance(t, ContinuedFraction):
        return build_standard(t)
    if isinstance(t, IntTangle):
        return build_standard(ContinuedFraction((t.n,)))
    if isinstance(t, Infinity):
        return elementary("inf")
    if isinstance(t, Mirror):
        return mirror(build_expr(t.operand))
    if isinstance(t, Invert):
        return invert(build_expr(t.operand))
    if isinstance(t, Rotate):
        return rotate(build_expr(t.operand))
    if isinstance(t, Sum):
        return tangle_sum(build_expr(t.left), build_expr(t.right))
    if isinstance(t, Product):
        return tangle_product(build_expr(t.top), build_expr(t.bottom))
    raise TypeError(f"not a tangle expression: {t!r}")


def _tangle_ends(d: PlanarDiagram):
    if d.endpoints is None:
        raise ValueError("expected a tangle diagram, got a closed one")
    return d.endpoints


# ---------------------------------------------------------------- closures

_PARTNER = {
    "N": {NW: NE, NE: NW, SW: SE, SE: SW},
    "D": {NW: SW, SW: NW, NE: SE, SE: NE},
}


def _close(d: PlanarDiagram, which: str) -> PlanarDiagram:
    ends = _tangle_ends(d)
    partner = _PARTNER[which]
    occ = d.occurrences()
    ds = DisjointSet(d.edges)
    ds.merge(ends[NW], ends[partner[NW]])
    ds.merge(ends[SW] if which == "N" else ends[NE], ends[SE])
    crossings = [tuple(ds[e] for e in x) for x in d.crossings]
    used = {e for x in crossings for e in x}
    loops = d.free_loops + len({ds[e] for e in d.edges} - used)

    # first component: enter the tangle at NW; bare arcs are followed through
    # their closure partner until a crossing is met
    first = None
    tag = NW
    for _ in range(4):
        e = ends[tag]
        if e in occ:
            first = occ[e][0]
            break
        other = next(t for t in range(4) if t != tag and ends[t] == e)
        tag = partner[other]
    xs, _ = _renumber(crossings, None)
    closed = PlanarDiagram(xs, None, loops)
    seeds = () if first is None else (first,)
    return replace(closed, orientation=_complete_orientation(closed, seeds))


def numerator(d: PlanarDiagram) -> PlanarDiagram:
    """``N(T)``: join NW to NE and SW to SE.

    The result carries the closure orientation: the NW end enters the tangle
    heading down (so NE leaves it heading up); other components follow the
    deterministic rule of :func:`orient`.
    """
    return _close(d, "N")


def denominator(d: PlanarDiagram) -> PlanarDiagram:
    """``D(T)``: join NW to SW and NE to SE."""
    return _close(d, "D")


# ------------------------------------------------------------- orientation


def _next_dart(d: PlanarDiagram, occ, dart: tuple[int, int]) -> tuple[int, int]:
    c, s = dart
    out = (s + 2) % 4
    e = d.crossings[c][out]
    a, b = occ[e]
    return b if a == (c, out) else a


def _trace(d: PlanarDiagram, occ, dart) -> list[tuple[int, int]]:
    path = [dart]
    nxt = _next_dart(d, occ, dart)
    while nxt != dart:
        path.append(nxt)
        nxt = _next_dart(d, occ, nxt)
    return path


def _complete_orientation(d: PlanarDiagram, seeds) -> tuple[tuple[int, int], ...]:
    occ = d.occurrences()
    strand_done: set[tuple[int, int]] = set()  # (crossing, under/over strand)
    darts = []

    def take(dart):
        for c, s in _trace(d, occ, dart):
            strand_done.add((c, s % 2))
        darts.append(dart)

    for dart in seeds:
        if (dart[0], dart[1] % 2) not in strand_done:
            take(dart)
    for c in range(len(d.crossings)):
        for s in range(4):
            if (c, s % 2) not in strand_done:
                take((c, s))
    return tuple(darts)


def orient(d: PlanarDiagram, seeds: Iterable[tuple[int, int]] = ()) -> PlanarDiagram:
    """Attach an orientation to a closed diagram.

    Components containing a seed dart follow it; every other component is
    oriented so that it enters its lowest-numbered crossing slot first.
    """
    if not d.is_closed:
        raise ValueError("orientations are assigned to closed diagrams")
    return replace(d, orientation=_complete_orientation(d, tuple(seeds)))


def reverse_component(d: PlanarDiagram, k: int) -> PlanarDiagram:
    """Reverse the orientation of component ``k`` (index into the darts)."""
    if d.orientation is None:
        raise ValueError("diagram is not oriented")
    darts = list(d.orientation)
    c, s = darts[k]
    darts[k] = (c, (s + 2) % 4)
    return replace(d, orientation=tuple(darts))


def components(d: PlanarDiagram) -> list[list[tuple[int, int]]]:
    """Strand components as lists of darts (crossingless loops excluded)."""
    if not d.is_closed:
        raise ValueError("components are traced on closed diagrams")
    darts = d.orientation if d.orientation is not None else _complete_orientation(d, ())
    occ = d.occurrences()
    return [_trace(d, occ, dart) for dart in darts]


def component_count(d: PlanarDiagram) -> int:
    return len(components(d)) + d.free_loops


def crossing_signs(d: PlanarDiagram) -> list[int]:
    if d.orientation is None:
        raise ValueError("writhe needs an oriented diagram")
    under_in = [None] * d.n_crossings
    over_in = [None] * d.n_crossings
    for comp in components(d):
        for c, s in comp:
            if s % 2 == 0:
                under_in[c] = s
            else:
                over_in[c] = s
    return [1 if o == (u + 3) % 4 else -1 for u, o in zip(under_in, over_in)]


def writhe(d: PlanarDiagram) -> int:
    """Sum of crossing signs under the stored orientation."""
    return sum(crossing_signs(d))


def add_curl(d: PlanarDiagram, edge: int, sign: int) -> PlanarDiagram:
    """Insert a Reidemeister-I curl of the given sign on ``edge``.

    The curl is appended as the last crossing; an existing orientation is kept
    (darts refer to crossing slots, which are unchanged).
    """
    occ = d.occurrences()
    if edge not in occ:
        raise ValueError(f"edge {edge} is not attached to a crossing")
    nxt = max(d.edges) + 1
    e1, loop, e2 = edge, nxt, nxt + 1
    (c, s) = occ[edge][-1]
    xs = [list(x) for x in d.crossings]
    xs[c][s] = e2
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    # the curl's sign does not depend on the direction of travel
    kink = (e1, e2, loop, loop) if sign > 0 else (e1, loop, loop, e2)
    assert _curl_sign(kink, e1) == sign
    return PlanarDiagram(tuple(map(tuple, xs)) + (kink,), d.endpoints, d.free_loops, d.orientation)


def _curl_sign(x: Crossing, entry: int) -> int:
    # traverse the curl entering on `entry`; both passes belong to one strand
    s_in = x.index(entry)
    s_loop_out = (s_in + 2) % 4
    loop = x[s_loop_out]
    s_back = next(i for i in range(4) if x[i] == loop and i != s_loop_out)
    under = s_in if s_in % 2 == 0 else s_back
    over = s_back if s_in % 2 == 0 else s_in
    return 1 if over == (under + 3) % 4 else -1


# ----------------------------------------------------------------- states


def apply_state(d: PlanarDiagram, state: Sequence[int]) -> tuple[int, str | None]:
    """Smooth every crossing (``L`` or ``R``) and count loops.

    Returns ``(loops, residual)`` where residual is ``"0"`` or ``"inf"`` for
    tangle diagrams (which pair of endpoints the two arcs join) and ``None``
    for closed ones.
    """
    if len(state) != d.n_crossings:
        raise ValueError("state must choose a smoothing for every crossing")
    ds = DisjointSet(d.edges)
    for (a, b, c, e), s in zip(d.crossings, state):
        if s == L:
            ds.merge(a, b)
            ds.merge(c, e)
        else:
            ds.merge(a, e)
            ds.merge(b, c)
    classes = {ds[e] for e in d.edges}
    if d.endpoints is None:
        return len(classes) + d.free_loops, None
    nw, ne, sw, se = d.endpoints
    residual = "0" if ds.connected(nw, ne) else "inf"
    return len(classes) - 2 + d.free_loops, residual


def oracle_max_crossings() -> int:
    return int(os.environ.get("TANGLEKIT_ORACLE_MAXN", "24"))


_CHUNK = 1 << 14


def state_statistics(d: PlanarDiagram):
    """Tally all ``2^N`` states of a diagram.

    Returns a dict mapping ``(exponent, loops, residual)`` to the number of
    states with that A-exponent (#L - #R), loop count and residual, where
    residual is 0 for ``[0]``, 1 for ``[∞]`` and -1 for closed diagrams.
    States are enumerated by a binary counter (bit k set = R at crossing k);
    a chunk of states is processed together, crossing by crossing, each merge
    relabelling the larger of two component labels to the smaller one.
    """
    n = d.n_crossings
    cap = oracle_max_crossings()
    if n > cap:
        raise ValueError(f"state-sum oracle capped at {cap} crossings (got {n})")
    edges = d.edges
    index = {e: i for i, e in enumerate(edges)}
    n_edges = len(edges)
    xs = np.array([[index[e] for e in x] for x in d.crossings], dtype=np.int64).reshape(n, 4)
    closed = d.endpoints is None
    if not closed:
        nw, ne = index[d.endpoints[NW]], index[d.endpoints[NE]]

    tally: dict[tuple[int, int, int], int] = {}
    total = 1 << n
    for start in range(0, total, _CHUNK):
        states = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        m = len(states)
        labels = np.broadcast_to(np.arange(n_edges), (m, n_edges)).copy()
        popcount = np.zeros(m, dtype=np.int64)
        for k in range(n):
            a, b, c, e = xs[k]
            rbit = ((states >> k) & 1).astype(bool)
            popcount += rbit
            # L joins a-b and c-d; R joins a-d and b-c
            for u, v in ((a, np.where(rbit, e, b)), (c, np.where(rbit, b, e))):
                lu = labels[:, u]
                lv = labels[np.arange(m), v]
                lo = np.minimum(lu, lv)[:, None]
                hi = np.maximum(lu, lv)[:, None]
                labels = np.where(labels == hi, lo, labels)
        roots = (labels == np.arange(n_edges)[None, :]).sum(axis=1)
        if closed:
            loops = roots + d.free_loops
            residual = np.full(m, -1)
        else:
            loops = roots - 2 + d.free_loops
            residual = (labels[:, nw] != labels[:, ne]).astype(np.int64)
        exponent = n - 2 * popcount
        keys = np.stack([exponent, loops, residual], axis=1)
        uniq, counts = np.unique(keys, axis=0, return_counts=True)
        for (ex, lp, rs), k in zip(uniq.tolist(), counts.tolist()):
            tally[(ex, lp, rs)] = tally.get((ex, lp, rs), 0) + k
    return tally


# ------------------------------------------------------------ serialization

_X = re.compile(r"^X\((-?\d+),(-?\d+),(-?\d+),(-?\d+)\)$")
_T = re.compile(r"^T\((-?\d+),(-?\d+),(-?\d+),(-?\d+)\)$")


def to_pd(d: PlanarDiagram) -> str:
    """PD text: one ``X(a,b,c,d)`` per crossing, ``T(nw,ne,sw,se)`` for a
    tangle, ``O()`` per crossingless loop."""
    lines = [f"X({a},{b},{c},{e})" for a, b, c, e in d.crossings]
    if d.endpoints is not None:
        lines.append("T({},{},{},{})".format(*d.endpoints))
    lines.extend("O()" for _ in range(d.free_loops))
    return "\n".join(lines)


def from_pd(text: str) -> PlanarDiagram:
    crossings, ends, loops = [], None, 0
    for raw in text.splitlines():
        line = raw.replace(" ", "")
        if not line:
            continue
        if m := _X.match(line):
            crossings.append(tuple(int(g) for g in m.groups()))
        elif m := _T.match(line):
            if ends is not None:
                raise ValueError("more than one T(...) line")
            ends = tuple(int(g) for g in m.groups())
        elif line == "O()":
            loops += 1
        else:
            raise ValueError(f"cannot parse PD line {raw!r}")
    d = PlanarDiagram(tuple(crossings), ends, loops)
    d.validate()
    return d
