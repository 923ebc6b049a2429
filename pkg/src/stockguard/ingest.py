"""Elec2 electricity-demand loading and experiment windowing.

The Elec2 distribution is a CSV with a header row and one sample per row,
recorded every 30 minutes; demand columns are normalized to [0, 1]. The
experiment takes two consecutive windows of T_hist + T samples: the first
for hyperparameter selection, the second for the certified run.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

DEFAULT_COLUMN = "nswdemand"
SAMPLE_PERIOD_MINUTES = 30


class DatasetError(ValueError):
    """Base class for dataset-shape problems."""


class ColumnNotFoundError(DatasetError):
    pass


class ValueRangeError(DatasetError):
    pass


@dataclass(frozen=True)
class Elec2Series:
    """A normalized demand series in chronological order."""

    values: np.ndarray
    column: str

    def __len__(self) -> int:
        return len(self.values)


def load_elec2(path: str | Path, column: str = DEFAULT_COLUMN) -> Elec2Series:
    """Parse one normalized demand column from an Elec2-format CSV.

    Column lookup is case-insensitive. Raises FileNotFoundError for a
    missing file, ColumnNotFoundError for a missing column, and
    ValueRangeError for values outside [0, 1].
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"dataset file not found: {path}")
    with path.open(newline="") as f:
        reader = csv.reader(f)
        try:
            header = next(reader)
        except StopIteration:
            raise DatasetError(f"empty dataset file: {path}") from None
        lowered = [name.strip().lower() for name in header]
        want = column.strip().lower()
        if want not in lowered:
            raise ColumnNotFoundError(
                f"column {column!r} not in header {header} of {path}"
            )
        idx = lowered.index(want)
        values: list[float] = []
        for row_no, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                value = float(row[idx])
            except (ValueError, IndexError):
                raise DatasetError(
                    f"{path}:{row_no}: cannot parse {column!r} value"
                ) from None
            if not 0.0 <= value <= 1.0:
                raise ValueRangeError(
                    f"{path}:{row_no}: {column!r} value {value} outside [0, 1]"
                )
            values.append(value)
    return Elec2Series(values=np.asarray(values), column=column)


def split_windows(
    series: Elec2Series, T_hist: int, T: int
) -> tuple[np.ndarray, np.ndarray]:
    """Cut (tuning, evaluation) windows of T_hist + T samples each.

    The tuning window is the series prefix; the evaluation window follows
    it contiguously.
    """
    width = T_hist + T
    if len(series) < 2 * width:
        raise DatasetError(
            f"series too short: need {2 * width} samples "
            f"(2 windows of T_hist + T = {width}), have {len(series)}"
        )
    tuning = series.values[:width]
    evaluation = series.values[width : 2 * width]
    return tuning, evaluation
