"""Knot tables: loading, batch verification against expected W and V, output.

Table lines read ``name code [expected_W [expected_V]]``. ``#`` starts a
comment, ``-`` stands for the empty Gauss code, and polynomials use the
rendered form without spaces, e.g. ``2+t^-2-2*t^-1-2*t+t^2``.
"""

from __future__ import annotations

import csv
import json
import logging
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Literal, Optional

from vknots.alexander import alexander_suite
from vknots.errors import GaussCodeError, MalformedPolynomialError
from vknots.gauss import parse_gauss_code, symmetry_images
from vknots.laurent import BiLaurent, UniLaurent
from vknots.schemas.invariants import ResultRow
from vknots.summary import bounds_out
from vknots.writhe import VResidue, v_equivalent, v_polynomial, writhe_invariants

logger = logging.getLogger("vknots.table")

EMPTY_CODE = "-"
STATUSES = ("ok", "w_mismatch", "v_mismatch", "parse_error")
CSV_COLUMNS = (
    "name",
    "code",
    "delta0",
    "w",
    "v_rep",
    "bounds",
    "status",
    "matched_image",
    "v_sign",
)


@dataclass(frozen=True)
class KnotRecord:
    name: str
    code: str
    expected_w: Optional[UniLaurent] = None
    expected_v: Optional[UniLaurent] = None
    line: int = 0
    error: Optional[str] = None


@dataclass
class VerificationReport:
    rows: list[ResultRow] = field(default_factory=list)

    @property
    def totals(self) -> dict[str, int]:
        counts = Counter(row.status for row in self.rows)
        return {status: counts.get(status, 0) for status in STATUSES}

    @property
    def ok(self) -> bool:
        return all(row.status == "ok" for row in self.rows)


def _parse_line(number: int, fields: list[str]) -> KnotRecord:
    name, code = fields[0], fields[1]
    code = "" if code == EMPTY_CODE else code
    if len(fields) > 4:
        return KnotRecord(name, code, line=number, error="too many fields")
    try:
        expected_w = UniLaurent.parse(fields[2]) if len(fields) > 2 else None
        expected_v = UniLaurent.parse(fields[3]) if len(fields) > 3 else None
    except MalformedPolynomialError as exc:
        return KnotRecord(name, code, line=number, error=str(exc))
    return KnotRecord(name, code, expected_w, expected_v, line=number)


def load_table(path: str | Path) -> list[KnotRecord]:
    """Read a knot table; bad lines become records carrying an error."""
    records: list[KnotRecord] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for number, raw in enumerate(handle, start=1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            fields = text.split()
            if len(fields) < 2:
                records.append(
                    KnotRecord(fields[0], "", line=number, error="missing Gauss code")
                )
                continue
            record = _parse_line(number, fields)
            if record.name in seen:
                record = KnotRecord(
                    record.name, record.code, line=number, error="duplicate name"
                )
            seen.add(record.name)
            records.append(record)
    bad = sum(1 for r in records if r.error)
    logger.info("loaded %d records from %s (%d with errors)", len(records), path, bad)
    return records


def verify_record(record: KnotRecord) -> ResultRow:
    if record.error:
        return ResultRow(
            name=record.name, code=record.code, status="parse_error", error=record.error
        )
    try:
        d = parse_gauss_code(record.code)
    except GaussCodeError as exc:
        return ResultRow(
            name=record.name, code=record.code, status="parse_error", error=str(exc)
        )

    w = writhe_invariants(d).w
    v = v_polynomial(d)
    row = ResultRow(
        name=record.name,
        code=record.code,
        delta0=alexander_suite(d).delta0.to_json(),
        w=w.to_json(),
        v_rep=v.v_rep.to_json(),
        bounds=bounds_out(d),
        status="ok",
        matched_image="identity",
    )
    if record.expected_w is None and record.expected_v is None:
        return row

    w_images = [
        (name, image)
        for name, image in symmetry_images(d).items()
        if record.expected_w is None or writhe_invariants(image).w == record.expected_w
    ]
    if w_images and record.expected_v is None:
        return row.model_copy(update={"matched_image": w_images[0][0]})
    # Tables may list V with the opposite overall sign; checked after every image.
    for sign in (1, -1):
        for name, image in w_images:
            image_v = v_polynomial(image)
            target = VResidue(record.expected_v.scale(sign), image_v.modulus)
            if v_equivalent(image_v, target):
                return row.model_copy(update={"matched_image": name, "v_sign": sign})
    status = "v_mismatch" if w_images else "w_mismatch"
    logger.info("knot %s: %s", record.name, status)
    return row.model_copy(update={"status": status, "matched_image": None})


def verify_table(
    records: Iterable[KnotRecord], workers: int | None = None
) -> VerificationReport:
    records = list(records)
    if workers is None:
        workers = int(os.getenv("VKNOTS_WORKERS", "1") or 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(verify_record, records))
    else:
        rows = [verify_record(r) for r in records]
    return VerificationReport(rows=sorted(rows, key=lambda row: row.name))


def _csv_cell(row: ResultRow, column: str) -> str:
    if column in ("delta0", "w", "v_rep"):
        terms = getattr(row, column)
        if column == "delta0":
            return BiLaurent.from_json(terms).render()
        return UniLaurent.from_json(terms).render()
    if column == "bounds":
        return json.dumps(row.bounds.model_dump()) if row.bounds else ""
    value = getattr(row, column)
    return "" if value is None else str(value)


def write_results(
    rows: Iterable[ResultRow],
    fmt: Literal["json", "csv"],
    path: str | Path,
) -> None:
    """Write rows sorted by name; polynomials are term lists in JSON and
    rendered strings in CSV."""
    ordered = sorted(rows, key=lambda row: row.name)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        if fmt == "json":
            json.dump(
                [row.model_dump() for row in ordered],
                handle,
                indent=2,
            )
            handle.write("\n")
        elif fmt == "csv":
            writer = csv.writer(handle)
            writer.writerow(CSV_COLUMNS)
            for row in ordered:
                writer.writerow([_csv_cell(row, column) for column in CSV_COLUMNS])
        else:
            raise ValueError(f"unknown output format {fmt!r}")
    logger.info("wrote %d rows to %s", len(ordered), path)
