"""Batch evaluation of bounds over grids of factor graphs and k values."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .bounds import THEOREMS, WitnessError, evaluate, verified
from .graph import Graph, VertexSet

CSV_COLUMNS = ("theorem", "k", "G", "H", "bound", "exact", "gap", "witness_valid", "sharp")


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    distinguished: VertexSet | None = None

    def u_set(self, override: list[int] | None = None) -> VertexSet:
        if override is not None:
            return VertexSet.of(override, self.graph.n)
        if self.distinguished is not None:
            return self.distinguished
        return VertexSet.of(range(0, self.graph.n, 2), self.graph.n)


@dataclass(frozen=True)
class SweepSpec:
    lefts: list[NamedGraph]
    rights: list[NamedGraph]
    ks: list[int]
    theorems: list[str] = field(default_factory=lambda: list(THEOREMS))
    max_n: int = 24
    skip_exact: bool = False
    workers: int = 1
    hier_set: list[int] | None = None

    def __post_init__(self) -> None:
        if not self.ks:
            raise ValueError("k range is empty")
        unknown = [t for t in self.theorems if t not in THEOREMS]
        if unknown:
            raise ValueError(f"unknown theorems: {', '.join(unknown)}")

    def cells(self) -> list[tuple[str, NamedGraph, NamedGraph, int]]:
        return [(t, g, h, k) for t in self.theorems for g in self.lefts for h in self.rights for k in self.ks]


@dataclass(frozen=True)
class SweepRow:
    theorem: str
    k: int
    G: str
    H: str
    bound: str
    exact: str
    gap: str
    witness_valid: str
    sharp: str

    @property
    def violation(self) -> bool:
        return self.witness_valid == "false" or self.gap.startswith("-")

    def sort_key(self) -> tuple:
        return (THEOREMS.index(self.theorem), self.G, self.H, self.k)


def _fmt(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def run_cell(cell: tuple[str, NamedGraph, NamedGraph, int], max_n: int, skip_exact: bool,
             hier_set: list[int] | None) -> SweepRow | None:
    """Evaluate one (theorem, G, H, k) cell; None when the theorem does not apply."""
    theorem, g, h, k = cell
    u = g.u_set(hier_set) if theorem == "hier" else None
    try:
        report = evaluate(theorem, g.graph, h.graph, k, u=u)
    except WitnessError:
        return SweepRow(theorem, k, g.name, h.name, "", "", "", "false", "")
    if not report.applicable:
        return None
    report = verified(report, max_n=0 if skip_exact else max_n)
    exact = "skipped" if report.exact is None else str(report.exact)
    return SweepRow(
        theorem, k, g.name, h.name,
        str(report.bound), exact, _fmt(report.gap),
        _fmt(report.witness_valid) or "not-checked", _fmt(report.sharp),
    )


def _run_cell_args(args: tuple) -> SweepRow | None:
    return run_cell(*args)


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    jobs = [(cell, spec.max_n, spec.skip_exact, spec.hier_set) for cell in spec.cells()]
    if spec.workers > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            results = list(pool.map(_run_cell_args, jobs, chunksize=8))
    else:
        results = [_run_cell_args(j) for j in jobs]
    return sorted((r for r in results if r is not None), key=SweepRow.sort_key)


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([getattr(row, c) for c in CSV_COLUMNS])
    return buf.getvalue()


def rows_to_json(rows: list[SweepRow]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=1)
