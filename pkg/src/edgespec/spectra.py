"""Edge-cut and edge-cycle spectra with their weight invariants.

The base cut of an edge (u,v) is the ring sum of the central cuts of its
endpoints; the base cycle of an edge is the ring sum of the isometric
cycles through it, corrected by the rim when the edge lies on it.  Either
base table drives the same iteration: each row applies the gamma transform
to its previous cell and dies (records an empty cell) the moment the
result is zero or repeats any earlier cell of the same row.  Construction
stops when a whole new level is dead, when a level repeats an earlier
level, or at an explicit level cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotNonseparable, VertexOutOfRange
from .graphs import EdgeSet, Graph, central_cut, is_nonseparable
from .isometric import isometric_cycles

Cell = EdgeSet | None


def rle(values: Sequence[int]) -> str:
    """Run-length rendering of a cortege: 14, 2×19, 4×24."""
    parts = []
    i = 0
    while i < len(values):
        j = i
        while j < len(values) and values[j] == values[i]:
            j += 1
        count = j - i
        parts.append(str(values[i]) if count == 1 else f"{count}×{values[i]}")
        i = j
    return ", ".join(parts)


@dataclass(frozen=True)
class Invariant:
    """Sorted edge and vertex weight corteges."""

    edge_cortege: tuple[int, ...]
    vertex_cortege: tuple[int, ...]

    @classmethod
    def from_weights(cls, edge_w: Sequence[int], vertex_w: Sequence[int]) -> "Invariant":
        return cls(tuple(sorted(edge_w)), tuple(sorted(vertex_w)))

    def __str__(self) -> str:
        return f"({rle(self.edge_cortege)}) & ({rle(self.vertex_cortege)})"


@dataclass(frozen=True)
class LevelWeights:
    """Weights per level plus their columnwise total."""

    per_level: tuple[tuple[int, ...], ...]
    total: tuple[int, ...]


class Spectrum:
    """Iterated gamma table over a base of per-edge summands."""

    __slots__ = ("kind", "graph", "base", "levels", "truncated")

    def __init__(
        self,
        kind: str,
        graph: Graph,
        base: tuple[EdgeSet, ...],
        levels: tuple[tuple[Cell, ...], ...],
        truncated: bool,
    ) -> None:
        self.kind = kind
        self.graph = graph
        self.base = base
        self.levels = levels
        self.truncated = truncated

    @property
    def level_count(self) -> int:
        return sum(
            1 for level in self.levels if any(c is not None for c in level)
        )

    def cell(self, level: int, e: int) -> Cell:
        if not 1 <= e <= self.graph.m:
            raise VertexOutOfRange(f"edge id {e} outside 1..{self.graph.m}")
        return self.levels[level][e - 1]

    def row(self, e: int) -> tuple[Cell, ...]:
        if not 1 <= e <= self.graph.m:
            raise VertexOutOfRange(f"edge id {e} outside 1..{self.graph.m}")
        return tuple(level[e - 1] for level in self.levels)

    def __repr__(self) -> str:
        return (
            f"Spectrum(kind={self.kind!r}, levels={len(self.levels)}, "
            f"level_count={self.level_count}, truncated={self.truncated})"
        )


def gamma(s: EdgeSet, base: Sequence[EdgeSet]) -> EdgeSet:
    """Ring sum of the base summands of all edges in s."""
    acc = 0
    for e in s:
        acc ^= base[e - 1].bits
    return EdgeSet.from_bits(s.m, acc)


def base_edge_cuts(g: Graph) -> tuple[EdgeSet, ...]:
    """w0(e) for every edge: ring sum of the endpoint central cuts."""
    cut = [None] + [central_cut(g, v) for v in g.vertices]
    out = []
    for u, v in g.edges:
        out.append(cut[u] ^ cut[v])
    return tuple(out)


def gamma_w(g: Graph, s: EdgeSet) -> EdgeSet:
    """Gamma transform of s over the base edge cuts of g."""
    return gamma(s, base_edge_cuts(g))


def _build(kind: str, g: Graph, base: tuple[EdgeSet, ...], level_cap: int | None) -> Spectrum:
    if level_cap is not None and level_cap < 1:
        raise VertexOutOfRange(f"level cap {level_cap} must be at least 1")
    m = g.m
    level0: list[Cell] = [b if b.bits else None for b in base]
    levels: list[tuple[Cell, ...]] = [tuple(level0)]
    seen: list[set[int]] = [
        {base[i].bits} if base[i].bits else set() for i in range(m)
    ]
    dead = [base[i].bits == 0 for i in range(m)]
    signatures = {tuple(b.bits for b in base)}
    truncated = False
    while True:
        if level_cap is not None and len(levels) >= level_cap:
            truncated = not all(dead)
            break
        cells: list[Cell] = []
        alive = False
        for i in range(m):
            if dead[i]:
                cells.append(None)
                continue
            nxt = gamma(levels[-1][i], base)
            if nxt.bits == 0 or nxt.bits in seen[i]:
                dead[i] = True
                cells.append(None)
            else:
                seen[i].add(nxt.bits)
                cells.append(nxt)
                alive = True
        if not alive:
            break
        levels.append(tuple(cells))
        sig = tuple(0 if c is None else c.bits for c in cells)
        if sig in signatures:
            break
        signatures.add(sig)
    return Spectrum(kind, g, base, tuple(levels), truncated)


def build_cut_spectrum(g: Graph, level_cap: int | None = None) -> Spectrum:
    """Iterated gamma table over the base edge cuts of a nonseparable graph."""
    report = is_nonseparable(g)
    if not report:
        raise NotNonseparable(report.reason)
    return _build("cut", g, base_edge_cuts(g), level_cap)


def cut_spectrum_unchecked(g: Graph, level_cap: int | None = None) -> Spectrum:
    """Cut spectrum without the nonseparability gate; the tree invariant
    uses this on trees, where cuts are defined but cycles are not."""
    return _build("cut", g, base_edge_cuts(g), level_cap)


def rim(g: Graph, cycles: tuple[EdgeSet, ...] | None = None) -> EdgeSet:
    """Ring sum of all isometric cycles."""
    if cycles is None:
        cycles = isometric_cycles(g)
    acc = 0
    for c in cycles:
        acc ^= c.bits
    return EdgeSet.from_bits(g.m, acc)


def base_edge_cycles(
    g: Graph, cycles: tuple[EdgeSet, ...] | None = None
) -> tuple[EdgeSet, ...]:
    """tau0(e): ring sum of the isometric cycles through e, plus the rim
    when e lies on the rim.  The result never contains e itself."""
    if cycles is None:
        cycles = isometric_cycles(g)
    acc = [0] * (g.m + 1)
    rim_bits = 0
    for c in cycles:
        rim_bits ^= c.bits
        for e in c:
            acc[e] ^= c.bits
    out = []
    for e in g.edge_ids:
        bits = acc[e]
        if (rim_bits >> (e - 1)) & 1:
            bits ^= rim_bits
        out.append(EdgeSet.from_bits(g.m, bits))
    return tuple(out)


def build_cycle_spectrum(
    g: Graph,
    level_cap: int | None = 1,
    cycles: tuple[EdgeSet, ...] | None = None,
) -> Spectrum:
    """Iterated gamma table over the base edge cycles of a nonseparable graph."""
    report = is_nonseparable(g)
    if not report:
        raise NotNonseparable(report.reason)
    return _build("cycle", g, base_edge_cycles(g, cycles), level_cap)


def spectrum_edge_weights(spec: Spectrum) -> LevelWeights:
    """Column weights: xi_l(e) counts the level-l cells containing e."""
    m = spec.graph.m
    per_level = []
    for level in spec.levels:
        xi = [0] * m
        cell_sizes = 0
        for cell in level:
            if cell is None:
                continue
            cell_sizes += len(cell)
            for e in cell:
                xi[e - 1] += 1
        # double-count identity: total cell size equals total column weight
        assert cell_sizes == sum(xi)
        per_level.append(tuple(xi))
    total = tuple(sum(level[i] for level in per_level) for i in range(m))
    return LevelWeights(tuple(per_level), total)


def vertex_weights(spec: Spectrum, edge_weights: LevelWeights | None = None) -> LevelWeights:
    """zeta_l(v): sum of xi_l over the edges incident to v."""
    if edge_weights is None:
        edge_weights = spectrum_edge_weights(spec)
    g = spec.graph
    per_level = []
    for xi in edge_weights.per_level:
        zeta = tuple(
            sum(xi[e - 1] for e in g.incident_edges(v)) for v in g.vertices
        )
        per_level.append(zeta)
    total = tuple(
        sum(level[i] for level in per_level) for i in range(g.n)
    )
    return LevelWeights(tuple(per_level), total)


@dataclass(frozen=True)
class SpectrumInvariant:
    """Digital invariant of a spectrum: total and per-level sorted corteges.

    truncated records that a level cap cut the construction short, which
    makes level_count a lower bound rather than the natural count.
    """

    kind: str
    level_count: int
    truncated: bool
    total: Invariant
    per_level: tuple[Invariant, ...]

    def __str__(self) -> str:
        return str(self.total)


def spectrum_invariant(spec: Spectrum) -> SpectrumInvariant:
    xi = spectrum_edge_weights(spec)
    zeta = vertex_weights(spec, xi)
    per_level = tuple(
        Invariant.from_weights(xi.per_level[l], zeta.per_level[l])
        for l in range(len(spec.levels))
    )
    total = Invariant.from_weights(xi.total, zeta.total)
    return SpectrumInvariant(
        spec.kind, spec.level_count, spec.truncated, total, per_level
    )


def invariant_IS(g: Graph, level_cap: int | None = None) -> SpectrumInvariant:
    """Digital invariant of the cut spectrum (all levels by default)."""
    return spectrum_invariant(build_cut_spectrum(g, level_cap))


def invariant_IC(g: Graph, level_cap: int | None = 1) -> SpectrumInvariant:
    """Digital invariant of the cycle spectrum (base level by default)."""
    return spectrum_invariant(build_cycle_spectrum(g, level_cap))
