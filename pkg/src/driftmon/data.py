"""CSV dataset access: handles, column streams, and velocity assembly.

All files are plain UTF-8 CSV with a header row and ISO-8601 dates.
Prediction files carry one row per unit and evaluation date; sales files
are sparse, so a unit-day with no row means zero units sold that day.
"""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass
from datetime import date, timedelta
from enum import Enum
from pathlib import Path
from typing import Iterator

from .errors import PreconditionError, SchemaError, StorageError, ValidationError
from .performance import VELOCITY_WINDOW_DAYS, VelocityPair, actual_velocity

__all__ = [
    "DatasetKind",
    "DatasetHandle",
    "open_dataset",
    "ColumnReader",
    "read_column",
    "assemble_velocity_pairs",
]

log = logging.getLogger(__name__)

_REQUIRED_COLUMNS = {
    "training": ("unit_id", "eval_date", "prediction"),
    "daily_inference": ("unit_id", "eval_date", "prediction"),
    "daily_sales": ("unit_id", "date", "units"),
}


class DatasetKind(str, Enum):
    TRAINING = "training"
    DAILY_INFERENCE = "daily_inference"
    DAILY_SALES = "daily_sales"


@dataclass(frozen=True)
class DatasetHandle:
    """A validated reference to one CSV file of a known kind."""

    path: Path
    kind: DatasetKind
    columns: tuple[str, ...]


def open_dataset(path: Path | str, kind: DatasetKind | str) -> DatasetHandle:
    """Validate the header of ``path`` and return a handle to it."""
    kind = DatasetKind(kind)
    path = Path(path)
    try:
        with path.open(newline="", encoding="utf-8") as handle:
            header = next(csv.reader(handle), None)
    except OSError as exc:
        raise StorageError(f"cannot open dataset {path}: {exc}") from exc
    if not header:
        raise SchemaError(f"{path}: missing header row")
    missing = [c for c in _REQUIRED_COLUMNS[kind.value] if c not in header]
    if missing:
        raise SchemaError(f"{path}: missing required columns {missing} for kind {kind.value}")
    return DatasetHandle(path=path, kind=kind, columns=tuple(header))


class ColumnReader:
    """Iterates one numeric column; blank cells are skipped and counted."""

    def __init__(self, handle: DatasetHandle, column: str) -> None:
        if column not in handle.columns:
            raise SchemaError(f"{handle.path}: no column named {column!r}")
        self.handle = handle
        self.column = column
        self.skipped_blanks = 0

    def __iter__(self) -> Iterator[float]:
        with self.handle.path.open(newline="", encoding="utf-8") as stream:
            reader = csv.DictReader(stream)
            for line_no, row in enumerate(reader, start=2):
                cell = (row.get(self.column) or "").strip()
                if not cell:
                    self.skipped_blanks += 1
                    continue
                try:
                    value = float(cell)
                except ValueError:
                    raise SchemaError(
                        f"{self.handle.path}:{line_no}: cannot parse {cell!r} "
                        f"in column {self.column!r}"
                    ) from None
                if not math.isfinite(value):
                    raise SchemaError(
                        f"{self.handle.path}:{line_no}: non-finite value {cell!r} "
                        f"in column {self.column!r}"
                    )
                yield value
        if self.skipped_blanks:
            log.warning(
                "%s: skipped %d blank cell(s) in column %r",
                self.handle.path, self.skipped_blanks, self.column,
            )


def read_column(handle: DatasetHandle, column: str) -> ColumnReader:
    """Stream the finite values of one column of ``handle``."""
    return ColumnReader(handle, column)


def assemble_velocity_pairs(
    predictions: DatasetHandle,
    sales: DatasetHandle,
    forecast_date: date,
) -> tuple[list[VelocityPair], int]:
    """Join forecasts with realised 7-day velocities.

    Takes each unit predicted for ``forecast_date`` and averages its sales
    over the window starting that day, treating absent unit-days as zero.
    Returns the pairs (sorted by unit id) and the count of predicted units
    excluded because their prediction cell was blank.  Duplicate prediction
    rows for a unit keep the last one.
    """
    if predictions.kind is DatasetKind.DAILY_SALES:
        raise ValidationError("predictions handle must be a training or daily_inference dataset")
    if sales.kind is not DatasetKind.DAILY_SALES:
        raise ValidationError("sales handle must be a daily_sales dataset")

    window = [forecast_date + timedelta(days=i) for i in range(VELOCITY_WINDOW_DAYS)]
    window_iso = [d.isoformat() for d in window]

    # None marks a unit whose (last) prediction cell was blank.
    rows: dict[str, float | None] = {}
    target = forecast_date.isoformat()
    with predictions.path.open(newline="", encoding="utf-8") as stream:
        reader = csv.DictReader(stream)
        for line_no, row in enumerate(reader, start=2):
            if (row.get("eval_date") or "").strip() != target:
                continue
            unit = (row.get("unit_id") or "").strip()
            if not unit:
                raise SchemaError(f"{predictions.path}:{line_no}: missing unit_id")
            cell = (row.get("prediction") or "").strip()
            if not cell:
                rows[unit] = None
                continue
            try:
                value = float(cell)
            except ValueError:
                raise SchemaError(
                    f"{predictions.path}:{line_no}: cannot parse prediction {cell!r}"
                ) from None
            if not math.isfinite(value) or value < 0.0:
                raise SchemaError(
                    f"{predictions.path}:{line_no}: prediction must be finite and "
                    f"non-negative, got {cell!r}"
                )
            rows[unit] = value
    predicted = {unit: v for unit, v in rows.items() if v is not None}
    excluded = len(rows) - len(predicted)

    daily: dict[tuple[str, str], float] = {}
    dates_seen: set[str] = set()
    with sales.path.open(newline="", encoding="utf-8") as stream:
        reader = csv.DictReader(stream)
        for line_no, row in enumerate(reader, start=2):
            day = (row.get("date") or "").strip()
            if not day:
                raise SchemaError(f"{sales.path}:{line_no}: missing date")
            dates_seen.add(day)
            if day not in window_iso:
                continue
            unit = (row.get("unit_id") or "").strip()
            cell = (row.get("units") or "").strip()
            try:
                units = float(cell)
            except ValueError:
                raise SchemaError(f"{sales.path}:{line_no}: cannot parse units {cell!r}") from None
            if not math.isfinite(units) or units < 0.0:
                raise SchemaError(
                    f"{sales.path}:{line_no}: units must be finite and non-negative, got {cell!r}"
                )
            key = (unit, day)
            daily[key] = daily.get(key, 0.0) + units

    missing_days = [d for d in window_iso if d not in dates_seen]
    if missing_days:
        raise PreconditionError(
            f"sales data covers no rows at all for day(s) {missing_days}; "
            f"the {VELOCITY_WINDOW_DAYS}-day window from {target} is incomplete"
        )

    pairs = []
    for unit in sorted(predicted):
        window_sales = [daily.get((unit, day), 0.0) for day in window_iso]
        pairs.append(
            VelocityPair(
                unit_id=unit,
                predicted=predicted[unit],
                actual=actual_velocity(window_sales),
            )
        )
    return pairs, excluded
