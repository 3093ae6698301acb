"""Byte-accounting memory model and comparison reports.

The estimate is a plain weighted sum of structure counts::

    nodes * node_bytes + child_entries * child_entry_bytes
        + cells * cell_bytes + refs * ref_bytes
        (+ child_slots * child_slot_bytes for the native trie)

Defaults approximate a 64-bit implementation with one byte per ASCII
character.  Override any of them with ``MemoryModel(...)`` or a JSON file.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields
from typing import Iterable, Optional, Union

from .baselines import BaselineStats, StructureKind
from .trie import TrieStats

COLUMNS = (
    "structure",
    "words",
    "nodes",
    "empty_nodes",
    "cells",
    "child_entries",
    "refs",
    "est_bytes",
    "build_ops",
)


@dataclass(frozen=True)
class MemoryModel:
    node_bytes: int = 48
    child_entry_bytes: int = 24
    cell_bytes: int = 1
    ref_bytes: int = 8
    child_slot_bytes: int = 8

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{f.name} must be a non-negative integer, got {value!r}")

    @classmethod
    def from_json(cls, path) -> "MemoryModel":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        unknown = set(data) - {f.name for f in fields(cls)}
        if unknown:
            raise ValueError(f"unknown memory model fields: {', '.join(sorted(unknown))}")
        return cls(**data)


Stats = Union[TrieStats, BaselineStats]


def memory_estimate(stats: Stats, model: MemoryModel = MemoryModel()) -> int:
    if isinstance(stats, TrieStats):
        return (
            stats.total_nodes * model.node_bytes
            + stats.child_entries * model.child_entry_bytes
            + stats.direct_cells * model.cell_bytes
            + stats.ref_count * model.ref_bytes
        )
    if stats.kind is StructureKind.NATIVE:
        return stats.total_nodes * model.node_bytes + stats.child_slots * model.child_slot_bytes
    return (
        stats.total_nodes * model.node_bytes
        + stats.child_slots * model.child_entry_bytes
        + stats.label_cells * model.cell_bytes
    )


@dataclass(frozen=True)
class ComparisonRow:
    structure: str
    words: int
    nodes: int
    empty_nodes: int
    cells: int
    child_entries: int
    refs: int
    est_bytes: int
    build_ops: int

    def values(self) -> tuple:
        return tuple(getattr(self, c) for c in COLUMNS)


def make_row(
    structure: str, stats: Stats, build_ops: int = 0, model: MemoryModel = MemoryModel()
) -> ComparisonRow:
    if isinstance(stats, TrieStats):
        return ComparisonRow(
            structure=str(structure),
            words=stats.word_count,
            nodes=stats.total_nodes,
            empty_nodes=stats.empty_nodes,
            cells=stats.direct_cells,
            child_entries=stats.child_entries,
            refs=stats.ref_count,
            est_bytes=memory_estimate(stats, model),
            build_ops=build_ops,
        )
    return ComparisonRow(
        structure=str(structure),
        words=stats.word_count,
        nodes=stats.total_nodes,
        empty_nodes=stats.empty_nodes,
        cells=stats.label_cells,
        child_entries=stats.child_slots,
        refs=0,
        est_bytes=memory_estimate(stats, model),
        build_ops=build_ops,
    )


def _table(header: Iterable[str], rows: list[tuple]) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
    out = []
    for n, row in enumerate(cells):
        # first column left-aligned, numbers right-aligned
        parts = [row[0].ljust(widths[0])] + [v.rjust(w) for v, w in zip(row[1:], widths[1:])]
        out.append("  ".join(parts).rstrip())
        if n == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"


def _csv(header: Iterable[str], rows: list[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONE)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render(header: Iterable[str], rows: list[tuple], fmt: str = "table") -> str:
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "table":
        return _table(header, rows)
    raise ValueError(f"unknown format {fmt!r}")


def compare_report(rows: list[ComparisonRow], fmt: str = "table") -> str:
    if not rows:
        raise ValueError("a report needs at least one row")
    return render(COLUMNS, [r.values() for r in rows], fmt)


def parse_report_csv(text: str) -> list[ComparisonRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != COLUMNS:
        raise ValueError(f"unexpected columns {header}")
    rows = []
    for record in reader:
        if not record:
            break
        name, *numbers = record
        rows.append(ComparisonRow(name, *map(int, numbers)))
    return rows


@dataclass(frozen=True)
class InsertSummary:
    structure: str
    words: int
    total_ops: int
    min_ops: int
    max_ops: int
    avg_ops: float

    @classmethod
    def from_costs(cls, structure: str, costs: list[int]) -> "InsertSummary":
        if not costs:
            return cls(str(structure), 0, 0, 0, 0, 0.0)
        return cls(str(structure), len(costs), sum(costs), min(costs), max(costs), sum(costs) / len(costs))


INSERT_COLUMNS = ("structure", "words", "total_ops", "min_ops", "max_ops", "avg_ops")


def insert_report(summaries: list[InsertSummary], fmt: str = "table") -> str:
    rows = [
        (s.structure, s.words, s.total_ops, s.min_ops, s.max_ops, f"{s.avg_ops:.2f}")
        for s in summaries
    ]
    return render(INSERT_COLUMNS, rows, fmt)


def model_dict(model: Optional[MemoryModel]) -> dict:
    return asdict(model or MemoryModel())
