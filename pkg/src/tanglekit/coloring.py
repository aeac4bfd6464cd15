"""Integral colorings of rational tangles.

Colors live on edges.  At every crossing the two over-edges share a color β
and the under-edges α, γ satisfy ``α + γ = 2β``.  Starting from two colors on
the initial strands of the standard-form construction, every later edge is
forced, because each new crossing meets the already colored part of the
diagram in an over-edge and an under-edge.
"""

from __future__ import annotations

import fractions
from dataclasses import dataclass
from math import gcd, lcm

from scipy.cluster.hierarchy import DisjointSet

from .contfrac import ContinuedFraction
from .diagram import NE, NW, SE, SW, PlanarDiagram, standard_with_seeds, to_pd
from .fraction import Fraction

__all__ = [
    "ColorMatrix",
    "ColoredTangle",
    "ClosureColoring",
    "ColoringError",
    "color_diagram",
    "color_standard",
    "coloring_fraction",
    "color_closure_mod",
    "color_general",
    "arcs",
]


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class ColorMatrix:
    """Boundary colors ``[[NW, NE], [SW, SE]] = [[a, b], [c, d]]``."""

    a: int
    b: int
    c: int
    d: int

    @property
    def diagonal_sum_rule(self) -> bool:
        return self.a + self.d == self.b + self.c

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


@dataclass(frozen=True)
class ColoredTangle:
    cf: ContinuedFraction | None
    diagram: PlanarDiagram
    colors: dict[int, int]
    matrix: ColorMatrix

    def serialize(self) -> str:
        lines = [to_pd(self.diagram)]
        lines += [f"{e} -> {self.colors[e]}" for e in sorted(self.colors)]
        return "\n".join(lines)


def color_diagram(d: PlanarDiagram, seeds: dict[int, int]) -> dict[int, int]:
    """Propagate seed colors through the crossings in their stored order.

    Raises :class:`ColoringError` if some crossing is reached with fewer than
    two determined edges, or if the relations are violated.
    """
    colors = dict(seeds)
    pending = list(range(d.n_crossings))
    while pending:
        progress = False
        rest = []
        for k in pending:
            if _solve_crossing(d.crossings[k], colors):
                progress = True
            else:
                rest.append(k)
        if not progress:
            raise ColoringError(f"crossings {rest} cannot be colored from the seeds")
        pending = rest
    for a, b, c, e in d.crossings:
        if colors[b] != colors[e] or colors[a] + colors[c] != 2 * colors[b]:
            raise ColoringError(f"coloring relation fails at crossing {(a, b, c, e)}")
    return colors


def _solve_crossing(x, colors: dict[int, int]) -> bool:
    a, b, c, e = x
    known = lambda t: t in colors  # noqa: E731
    if known(b) and not known(e):
        colors[e] = colors[b]
    elif known(e) and not known(b):
        colors[b] = colors[e]
    if known(b):
        beta = colors[b]
        if known(a) and not known(c):
            colors[c] = 2 * beta - colors[a]
        elif known(c) and not known(a):
            colors[a] = 2 * beta - colors[c]
    elif known(a) and known(c):
        total = colors[a] + colors[c]
        if total % 2:
            raise ColoringError("no integral over-arc color")
        colors[b] = colors[e] = total // 2
    return all(known(t) for t in x)


def _matrix(d: PlanarDiagram, colors: dict[int, int]) -> ColorMatrix:
    ends = d.endpoints
    return ColorMatrix(colors[ends[NW]], colors[ends[NE]], colors[ends[SW]], colors[ends[SE]])


def color_standard(cf: ContinuedFraction, start: tuple[int, int] = (0, 1)) -> ColoredTangle:
    """Color the standard-form diagram of ``cf`` as it is built.

    For odd length the construction starts from ``[0]`` with the upper strand
    colored ``start[0]`` and the lower one ``start[1]``; for even length from
    ``[∞]`` with left strand ``start[0]``, right strand ``start[1]``.  With
    ``(0, 1)`` this gives ``f([1]) = 1``.
    """
    d, (s0, s1) = standard_with_seeds(cf)
    colors = color_diagram(d, {s0: start[0], s1: start[1]})
    return ColoredTangle(cf, d, colors, _matrix(d, colors))


def coloring_fraction(m: ColorMatrix) -> Fraction:
    """``f(T) = (b - a) / (b - d)``."""
    if m.b == m.a and m.b == m.d:
        raise ColoringError("degenerate coloring: b - a = b - d = 0")
    return Fraction(m.b - m.a, m.b - m.d)


def _nullspace(rows: list[list[int]], n: int) -> list[list[fractions.Fraction]]:
    """Exact basis of the kernel of an integer matrix (Gauss-Jordan)."""
    m = [[fractions.Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [fractions.Fraction(0)] * n
        v[fc] = fractions.Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def color_general(d: PlanarDiagram) -> ColorMatrix:
    """Color matrix of any tangle diagram whose colorings form a 2-dimensional
    space (constants plus one direction), found by exact linear algebra.

    Every rational tangle qualifies; ``ColoringError`` otherwise.
    """
    if d.endpoints is None:
        raise ColoringError("expected a tangle diagram")
    if d.free_loops:
        raise ColoringError("the tangle has a closed component")
    edges = d.edges
    idx = {e: i for i, e in enumerate(edges)}
    rows = []
    for a, b, c, e in d.crossings:
        r1 = [0] * len(edges)
        r1[idx[b]] += 1
        r1[idx[e]] -= 1
        r2 = [0] * len(edges)
        r2[idx[a]] += 1
        r2[idx[c]] += 1
        r2[idx[b]] -= 2
        rows += [r1, r2]
    basis = _nullspace(rows, len(edges)) if rows else None
    if basis is None:
        # crossingless: edges are the boundary arcs themselves
        basis = [[fractions.Fraction(int(i == k)) for i in range(len(edges))] for k in range(len(edges))]
    if len(basis) != 2:
        raise ColoringError(f"coloring space has dimension {len(basis)}, not 2")
    # subtract the constant direction, keep a non-constant integral vector
    v = next(b for b in basis if len(set(b)) > 1)
    scale = lcm(*(x.denominator for x in v))
    colors = {e: int((v[idx[e]] - v[0]) * scale) for e in edges}
    return _matrix(d, colors)


def arcs(d: PlanarDiagram) -> list[list[int]]:
    """Edges grouped into arcs (edges continuing as the over-strand)."""
    ds = DisjointSet(d.edges)
    for _, b, _, e in d.crossings:
        ds.merge(b, e)
    return [sorted(s) for s in ds.subsets()]


@dataclass(frozen=True)
class ClosureColoring:
    modulus: int
    colors: dict[int, int]
    all_distinct: bool
    trivial: bool

    def serialize(self, d: PlanarDiagram) -> str:
        lines = [to_pd(d)]
        lines += [f"{e} -> {self.colors[e]}" for e in sorted(self.colors)]
        lines.append(f"mod {self.modulus}")
        return "\n".join(lines)


def color_closure_mod(cf: ContinuedFraction) -> tuple[ClosureColoring, PlanarDiagram]:
    """Modular coloring of the numerator closure.

    Colors from the start ``(0, 1)`` are integers ``k``; the general coloring
    is ``x + k t``.  Closing identifies NW with NE and SW with SE, forcing
    ``(b - a) t ≡ 0`` and ``(d - c) t ≡ 0``, so the largest modulus admitting
    ``t = 1`` is ``gcd(b - a, d - c)``.  Moduli 0 and 1 are reported as
    trivial (free or constant colorings) rather than rejected.
    """
    ct = color_standard(cf)
    m = ct.matrix
    modulus = abs(gcd(m.b - m.a, m.d - m.c))
    d = ct.diagram
    reduced = {e: (c % modulus if modulus else c) for e, c in ct.colors.items()}
    if modulus:
        assert reduced[d.endpoints[NW]] == reduced[d.endpoints[NE]]
        assert reduced[d.endpoints[SW]] == reduced[d.endpoints[SE]]
    # arcs of the closed diagram: tangle arcs plus the two closing arcs
    ds = DisjointSet(d.edges)
    for _, b, _, e in d.crossings:
        ds.merge(b, e)
    ds.merge(d.endpoints[NW], d.endpoints[NE])
    ds.merge(d.endpoints[SW], d.endpoints[SE])
    arc_colors = [{reduced[e] for e in s} for s in ds.subsets()]
    consistent = all(len(s) == 1 for s in arc_colors)
    if not consistent:
        raise ColoringError("closure coloring is not constant along arcs")
    values = [next(iter(s)) for s in arc_colors]
    distinct = len(set(values)) == len(values)
    return ClosureColoring(modulus, reduced, distinct, modulus in (0, 1)), d
