"""Machine-readable result records (JSON Lines and a flat CSV view)."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import Any, Iterable

from .convexity import IntervalTable, is_geodetic, is_hull
from .errors import InvalidWitness, TimeLimit
from .graph import Graph, VertexSet
from .solvers import Mode, SolveOptions, SolveResult, geodetic_number, hull_number

SCHEMA_VERSION = 1
CSV_FIELDS = ("instance", "g", "h", "ms")
TIMEOUT = "timeout"


def _plain(label: Any) -> Any:
    """JSON-native form of a vertex label: tuples become lists."""
    if isinstance(label, (tuple, list)):
        return [_plain(x) for x in label]
    return label


def vertex_labels(graph: Graph, S: Iterable[int]) -> list:
    return [_plain(graph.labels[v]) for v in S]


@dataclass
class ResultRecord:
    instance: str
    g: int | str | None = None
    h: int | str | None = None
    witness_g: list | None = None
    witness_h: list | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    timing: float | None = None
    extras: dict[str, Any] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def timed_out(self) -> bool:
        return TIMEOUT in (self.g, self.h)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "instance": self.instance,
            "g": self.g,
            "h": self.h,
            "witness_g": self.witness_g,
            "witness_h": self.witness_h,
            "checks": dict(self.checks),
            "timing": self.timing,
            "extras": self.extras,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ResultRecord":
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {version!r}")
        known = {"schema_version", "instance", "g", "h", "witness_g", "witness_h", "checks", "timing", "extras"}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown record fields: {sorted(unknown)}")
        return cls(
            instance=data["instance"],
            g=data.get("g"),
            h=data.get("h"),
            witness_g=data.get("witness_g"),
            witness_h=data.get("witness_h"),
            checks=dict(data.get("checks") or {}),
            timing=data.get("timing"),
            extras=data.get("extras") or {},
        )

    @classmethod
    def from_json(cls, line: str) -> "ResultRecord":
        return cls.from_dict(json.loads(line))

    def csv_row(self) -> list[str]:
        ms = "" if self.timing is None else f"{self.timing:.1f}"
        return [self.instance, "" if self.g is None else str(self.g), "" if self.h is None else str(self.h), ms]


def format_records(records: Iterable[ResultRecord], fmt: str = "jsonl") -> str:
    if fmt == "jsonl":
        return "".join(r.to_json() + "\n" for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for r in records:
            writer.writerow(r.csv_row())
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def verify_witness(table: IntervalTable, mode: Mode, S: VertexSet) -> None:
    ok = is_geodetic(table, S) if mode is Mode.GEODETIC else is_hull(table, S)
    if not ok:
        raise InvalidWitness(f"{mode.value} witness {S.to_list()} does not verify")


def _solve_one(table: IntervalTable, mode: Mode, time_limit: float | None, workers: int) -> tuple[SolveResult, bool]:
    solver = geodetic_number if mode is Mode.GEODETIC else hull_number
    try:
        res = solver(table, SolveOptions(mode=mode, time_limit=time_limit, parallel_width=workers))
    except TimeLimit as exc:
        return exc.best, True
    return res, False


def solved_record(instance: str, graph: Graph, table: IntervalTable | None = None,
                  time_limit: float | None = None, workers: int = 1, timing: bool = False) -> ResultRecord:
    """Record with exact g and h and their verified witnesses.

    A search that hits ``time_limit`` leaves ``"timeout"`` in place of the
    value; the witness is then the best upper-bound set found, under
    ``extras["g_upper"]`` / ``extras["h_upper"]``.
    """
    started = time.perf_counter()
    table = table or IntervalTable(graph)
    record = ResultRecord(instance)
    for mode, key in ((Mode.GEODETIC, "g"), (Mode.HULL, "h")):
        res, late = _solve_one(table, mode, time_limit, workers)
        verify_witness(table, mode, res.witness)
        setattr(record, key, TIMEOUT if late else res.value)
        setattr(record, f"witness_{key}", vertex_labels(graph, res.witness))
        if late:
            record.extras[f"{key}_upper"] = res.value
    if timing:
        record.timing = round((time.perf_counter() - started) * 1000, 1)
    return record
