"""Command line interface.

Reads graphs from offset-format files (.grf) or plain edge lists, prints
invariants, spectra, cycles, orbit candidates, and comparison verdicts in
a human layout or a machine JSON layout.  Exit code 1 flags a not
isomorphic verdict; malformed input exits 2.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .engine import (
    IntegralInvariant,
    Verdict,
    compare_graphs,
    integral_invariant,
    tree_invariant,
    vertex_orbit_partition,
)
from .errors import EdgespecError
from .graphs import Graph
from .grf import load_graph, parse_edgelist, parse_grf
from .isometric import cycle_order, isometric_cycles
from .linegraph import classify_line_cycles, digital_invariant_IL
from .spectra import (
    Invariant,
    SpectrumInvariant,
    build_cut_spectrum,
    build_cycle_spectrum,
    spectrum_edge_weights,
    vertex_weights,
)

LEVEL_CAP_THRESHOLD = 64
LINE_WARN_EDGES = 200


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load(path: str) -> Graph:
    text = _read(path)
    if path.endswith(".grf"):
        return parse_grf(text)
    if path.endswith((".edges", ".txt")):
        return parse_edgelist(text)
    return load_graph(text)


def _effective_levels(g: Graph, max_levels: int | None) -> int | None:
    if max_levels is not None:
        return max_levels
    if g.m > LEVEL_CAP_THRESHOLD:
        click.echo(
            f"note: {g.m} edges exceed {LEVEL_CAP_THRESHOLD}, "
            "capping the cut spectrum at 2 levels (override with --max-levels)",
            err=True,
        )
        return 2
    return None


def _warn_line(g: Graph) -> None:
    if g.m > LINE_WARN_EDGES:
        click.echo(
            f"warning: line invariant over {g.m} edges may be slow",
            err=True,
        )


def _invariant_dict(inv: Invariant) -> dict:
    return {"edge": list(inv.edge_cortege), "vertex": list(inv.vertex_cortege)}


def _spectrum_inv_dict(si: SpectrumInvariant) -> dict:
    return {
        "kind": si.kind,
        "level_count": si.level_count,
        "truncated": si.truncated,
        "total": _invariant_dict(si.total),
        "per_level": [_invariant_dict(lv) for lv in si.per_level],
    }


def _emit_machine(payload: dict) -> None:
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


def _print_integral(g: Graph, inv: IntegralInvariant) -> None:
    click.echo(f"vertices: {g.n}")
    click.echo(f"edges: {g.m}")
    if inv.cycle is None:
        click.echo(f"tree levels: {inv.cut.level_count}")
        click.echo(f"IT: {inv.cut.total}")
        return
    click.echo(f"cut levels: {inv.cut.level_count}")
    click.echo(f"IS: {inv.cut.total}")
    for l, lv in enumerate(inv.cut.per_level):
        click.echo(f"IS[{l}]: {lv}")
    click.echo(f"IC: {inv.cycle.total}")
    if inv.line is not None:
        click.echo(f"IL: {inv.line}")


@click.group()
def main() -> None:
    """Graph invariants from edge-cut and edge-cycle spectra."""


def _fail(exc: EdgespecError) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(2)


@main.command()
@click.argument("path")
@click.option("--max-levels", type=int, default=None, help="Cut spectrum level cap.")
@click.option("--with-line-invariant", is_flag=True, help="Also compute IL.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["human", "machine"]),
    default="human",
)
def invariant(path: str, max_levels: int | None, with_line_invariant: bool, fmt: str) -> None:
    """Integral invariant of one graph."""
    try:
        g = _load(path)
        cap = _effective_levels(g, max_levels)
        if with_line_invariant:
            _warn_line(g)
        inv = integral_invariant(g, max_levels=cap, with_line=with_line_invariant)
    except EdgespecError as exc:
        _fail(exc)
    if fmt == "machine":
        payload = {
            "n": g.n,
            "m": g.m,
            "tree": inv.cycle is None,
            "cut": _spectrum_inv_dict(inv.cut),
            "cycle": None if inv.cycle is None else _spectrum_inv_dict(inv.cycle),
            "line": None if inv.line is None else _invariant_dict(inv.line),
        }
        _emit_machine(payload)
    else:
        _print_integral(g, inv)


@main.command()
@click.argument("path_a")
@click.argument("path_b")
@click.option("--max-levels", type=int, default=None, help="Cut spectrum level cap.")
@click.option("--with-line-invariant", is_flag=True, help="Also compare IL.")
@click.option("--brute-force-limit", type=int, default=10, show_default=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["human", "machine"]),
    default="human",
)
def compare(
    path_a: str,
    path_b: str,
    max_levels: int | None,
    with_line_invariant: bool,
    brute_force_limit: int,
    fmt: str,
) -> None:
    """Compare two graphs; exit 1 when they are not isomorphic."""
    try:
        g = _load(path_a)
        h = _load(path_b)
        cap_g = _effective_levels(g, max_levels)
        if with_line_invariant:
            _warn_line(g)
            _warn_line(h)
        result = compare_graphs(
            g,
            h,
            max_levels=cap_g,
            with_line=with_line_invariant,
            brute_force_limit=brute_force_limit,
        )
    except EdgespecError as exc:
        _fail(exc)
    if fmt == "machine":
        payload = {
            "verdict": result.verdict.value,
            "witness": result.witness,
            "bijection": None
            if result.bijection is None
            else {str(k): v for k, v in result.bijection.items()},
        }
        _emit_machine(payload)
    else:
        click.echo(f"verdict: {result.verdict.value}")
        if result.witness:
            click.echo(f"witness: {result.witness}")
        if result.bijection:
            pairs = " ".join(f"{k}->{v}" for k, v in result.bijection.items())
            click.echo(f"bijection: {pairs}")
    if result.verdict is Verdict.NOT_ISOMORPHIC:
        sys.exit(1)


@main.command()
@click.argument("path")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["human", "machine"]),
    default="human",
)
def cycles(path: str, fmt: str) -> None:
    """Isometric cycles: edge id lines, then vertex id lines."""
    try:
        g = _load(path)
        found = isometric_cycles(g)
        ordered = [cycle_order(g, c) for c in found]
    except EdgespecError as exc:
        _fail(exc)
    if fmt == "machine":
        payload = {
            "count": len(found),
            "cycles": [
                {"edges": list(c.ids()), "vertices": list(seq)}
                for c, seq in zip(found, ordered)
            ],
        }
        _emit_machine(payload)
        return
    click.echo(f"isometric cycles: {len(found)}")
    click.echo("edges:")
    for i, c in enumerate(found, start=1):
        click.echo(f"cycle {i}: " + " ".join(str(e) for e in c.ids()))
    click.echo("vertices:")
    for i, seq in enumerate(ordered, start=1):
        click.echo(f"cycle {i}: " + " ".join(str(v) for v in seq))


@main.command()
@click.argument("path")
@click.option("--kind", type=click.Choice(["cut", "cycle"]), default="cut")
@click.option("--max-levels", type=int, default=None, help="Level cap.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["human", "machine"]),
    default="human",
)
def spectrum(path: str, kind: str, max_levels: int | None, fmt: str) -> None:
    """Full spectrum table with per-level weights."""
    try:
        g = _load(path)
        cap = _effective_levels(g, max_levels)
        spec = (
            build_cut_spectrum(g, cap)
            if kind == "cut"
            else build_cycle_spectrum(g, cap)
        )
        xi = spectrum_edge_weights(spec)
        zeta = vertex_weights(spec, xi)
    except EdgespecError as exc:
        _fail(exc)
    if fmt == "machine":
        payload = {
            "kind": spec.kind,
            "level_count": spec.level_count,
            "truncated": spec.truncated,
            "levels": [
                [None if c is None else list(c.ids()) for c in level]
                for level in spec.levels
            ],
            "xi": {
                "per_level": [list(row) for row in xi.per_level],
                "total": list(xi.total),
            },
            "zeta": {
                "per_level": [list(row) for row in zeta.per_level],
                "total": list(zeta.total),
            },
        }
        _emit_machine(payload)
        return
    click.echo(f"{kind} spectrum: {spec.level_count} levels")
    if spec.truncated:
        click.echo("(truncated at the level cap)")
    for l, level in enumerate(spec.levels):
        click.echo(f"level {l}:")
        for e in g.edge_ids:
            cell = level[e - 1]
            body = "-" if cell is None else " ".join(str(i) for i in cell.ids())
            click.echo(f"  e{e}: {body}")
        click.echo("  xi:   " + " ".join(str(x) for x in xi.per_level[l]))
        click.echo("  zeta: " + " ".join(str(z) for z in zeta.per_level[l]))
    click.echo("totals:")
    click.echo("  xi:   " + " ".join(str(x) for x in xi.total))
    click.echo("  zeta: " + " ".join(str(z) for z in zeta.total))


@main.command()
@click.argument("path")
@click.option("--max-levels", type=int, default=None, help="Cut spectrum level cap.")
@click.option("--with-line-invariant", is_flag=True, help="Add IL to the signature.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["human", "machine"]),
    default="human",
)
def orbits(path: str, max_levels: int | None, with_line_invariant: bool, fmt: str) -> None:
    """Candidate vertex orbits from weight signatures."""
    try:
        g = _load(path)
        cap = _effective_levels(g, max_levels)
        if with_line_invariant:
            _warn_line(g)
        part = vertex_orbit_partition(g, max_levels=cap, with_line=with_line_invariant)
    except EdgespecError as exc:
        _fail(exc)
    if fmt == "machine":
        _emit_machine({"groups": [list(grp) for grp in part.groups]})
        return
    for i, grp in enumerate(part.groups, start=1):
        click.echo(f"orbit {i}: " + " ".join(str(v) for v in grp))


@main.command()
@click.argument("path")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["human", "machine"]),
    default="human",
)
def linegraph(path: str, fmt: str) -> None:
    """Line graph size, cycle classification, and the line invariant."""
    try:
        g = _load(path)
        _warn_line(g)
        lg, cls = classify_line_cycles(g)
        inv = digital_invariant_IL(g)
    except EdgespecError as exc:
        _fail(exc)
    triples, images, doubles = cls.counts
    if fmt == "machine":
        payload = {
            "line_n": lg.graph.n,
            "line_m": lg.graph.m,
            "cycles": triples + images + doubles,
            "triples": triples,
            "images": images,
            "doubles": doubles,
            "invariant": _invariant_dict(inv),
        }
        _emit_machine(payload)
        return
    click.echo(f"line graph: {lg.graph.n} vertices, {lg.graph.m} edges")
    click.echo(f"isometric cycles: {triples + images + doubles}")
    click.echo(f"vertex triples: {triples}")
    click.echo(f"cycle images: {images}")
    click.echo(f"double cycles: {doubles}")
    click.echo(f"IL: {inv}")


@main.command()
@click.argument("path")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["human", "machine"]),
    default="human",
)
def tree(path: str, fmt: str) -> None:
    """Uncapped cut invariant of a tree."""
    try:
        g = _load(path)
        inv = tree_invariant(g)
    except EdgespecError as exc:
        _fail(exc)
    if fmt == "machine":
        _emit_machine({"n": g.n, "m": g.m, "invariant": _spectrum_inv_dict(inv)})
        return
    click.echo(f"vertices: {g.n}")
    click.echo(f"edges: {g.m}")
    click.echo(f"tree levels: {inv.level_count}")
    click.echo(f"IT: {inv.total}")


if __name__ == "__main__":
    main()
