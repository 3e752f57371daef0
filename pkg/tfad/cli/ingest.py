# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.cli.ingest`

Dataset readers and writers.

CSV, one series per file, the file stem is the series id::

    timestamp,value[,value_2,...,value_D][,label]

Rows must be in strictly ascending timestamp order. Timestamps can be numbers or dates, they are
only used to check the order.

NDJSON, one series per line::

    {"id": "kpi-1", "values": [[...], [...]], "labels": [...]}

``values`` is a list of numbers (D = 1) or a list of D lists (dimension major).
"""

import io
import json
import logging
from pathlib import Path

import numpy as np
import pandas as pd

from ..errors import InvalidLabelValue, NonMonotonicTimestamps, ParseError, TfadError
from ..fileio import atomic_write_text
from ..models.timeseries import TimeSeries, validate_series
from ..models.windowpair import WindowPair
from .dataformat import DataFormat

logger = logging.getLogger(__name__)

_MISSING_TOKENS = {"", "nan", "inf", "+inf", "-inf", "infinity", "-infinity"}


def _numeric(column: pd.Series, name: str) -> np.ndarray:
    """Convert a text column, non numeric cells raise :py:class:`ParseError` with their line"""
    converted = pd.to_numeric(column, errors="coerce")
    text = column.str.strip().str.lower()
    bad = converted.isna() & ~text.isin(_MISSING_TOKENS)
    if bad.any():
        row = int(np.flatnonzero(bad.to_numpy())[0])
        # line 1 is the header
        raise ParseError(f"column '{name}': cannot parse '{column.iloc[row]}' as a number", row + 2)
    return converted.to_numpy(dtype=np.float64)


def _check_timestamps(column: pd.Series):
    blank = (column.str.strip() == "").to_numpy()
    if blank.any():
        row = int(np.flatnonzero(blank)[0])
        raise ParseError("column 'timestamp': missing timestamp", row + 2)
    numbers = pd.to_numeric(column, errors="coerce")
    if numbers.isna().any():
        try:
            dates = pd.to_datetime(column, errors="raise")
        except (ValueError, TypeError) as e:
            raise ParseError(f"column 'timestamp': {e}") from e
        missing = dates.isna().to_numpy()
        if missing.any():
            row = int(np.flatnonzero(missing)[0])
            raise ParseError(f"column 'timestamp': missing or invalid timestamp '{column.iloc[row]}'", row + 2)
        numbers = dates.astype("int64")
    steps = np.diff(numbers.to_numpy())
    if np.any(steps <= 0):
        row = int(np.flatnonzero(steps <= 0)[0]) + 1
        raise NonMonotonicTimestamps(f"line {row + 2}: timestamps must be strictly ascending")


def read_csv(path) -> TimeSeries:
    """Read one series from a CSV file

    :raises ParseError: On a malformed header or cell
    :raises NonMonotonicTimestamps: When timestamps are not strictly ascending
    :raises NonFiniteSample: When a sample is empty, NaN or infinite
    """
    path = Path(path)
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    except pd.errors.EmptyDataError as e:
        raise ParseError(f"{path}: empty file") from e
    except pd.errors.ParserError as e:
        raise ParseError(f"{path}: {e}") from e

    columns = [c.strip() for c in frame.columns]
    frame.columns = columns
    if not columns or columns[0] != "timestamp":
        raise ParseError("header must start with 'timestamp'", 1)
    has_labels = columns[-1] == "label"
    value_columns = columns[1:-1] if has_labels else columns[1:]
    expected = ["value"] + [f"value_{i}" for i in range(2, len(value_columns) + 1)]
    if value_columns != expected:
        raise ParseError(f"value columns must be {','.join(expected) or 'value'}, got {','.join(value_columns)}", 1)
    if frame.empty:
        raise ParseError(f"{path}: no data rows")

    _check_timestamps(frame["timestamp"])
    values = np.stack([_numeric(frame[c], c) for c in value_columns])

    labels = None
    if has_labels:
        labels = _numeric(frame["label"], "label")
        invalid = ~np.isin(labels, (0.0, 1.0))
        if invalid.any():
            raise InvalidLabelValue(f"line {int(np.flatnonzero(invalid)[0]) + 2}: labels must be 0 or 1")
        labels = labels.astype(np.int8)

    return validate_series(TimeSeries(path.stem, values, labels))


def _record_series(record, number: int) -> TimeSeries:
    if not isinstance(record, dict):
        raise ParseError("record must be a JSON object", number)
    if "values" not in record:
        raise ParseError("record has no 'values'", number)
    series_id = str(record.get("id", f"series-{number}"))
    try:
        values = np.array(record["values"], dtype=np.float64)
        labels = record.get("labels")
        if labels is not None:
            labels = np.array(labels, dtype=np.float64)
            if not np.all(np.isin(labels, (0.0, 1.0))):
                raise InvalidLabelValue(f"record {number}: labels must be 0 or 1")
            labels = labels.astype(np.int8)
    except (TypeError, ValueError) as e:
        raise ParseError(f"invalid values: {e}", number) from e
    if values.ndim not in (1, 2):
        raise ParseError("'values' must be a list of numbers or a list of lists", number)
    return validate_series(TimeSeries(series_id, values, labels))


def read_ndjson(path) -> list[TimeSeries]:
    """Read every series of a NDJSON file

    :raises ParseError: On a malformed record, ``line`` is the line number
    """
    series = []
    with open(path, encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as e:
                raise ParseError(f"invalid JSON: {e.msg}", number) from e
            try:
                series.append(_record_series(record, number))
            except ParseError:
                raise
            except TfadError as e:
                # keep the error type, add the record number
                e.args = (f"line {number}: {e.args[0]}" if e.args else f"line {number}",)
                raise
    return series


def ingest(path, fmt=None) -> list[TimeSeries]:
    """Read a dataset file, or every dataset file of a directory (sorted by name)

    :param path: CSV or NDJSON file, or a directory
    :param fmt: :py:class:`~tfad.cli.dataformat.DataFormat` or name, guessed from the suffix by default
    """
    path = Path(path)
    if path.is_dir():
        series = []
        for child in sorted(path.iterdir()):
            if DataFormat.from_path(child) is not None:
                series.extend(ingest(child, fmt))
        logger.debug("Read %d series from %s", len(series), path)
        return series

    data_format = DataFormat.parse(fmt) if fmt is not None else DataFormat.from_path(path)
    if data_format is None:
        raise ParseError(f"{path}: unknown dataset format")
    if not path.exists():
        raise ParseError(f"{path}: no such file")
    if data_format == DataFormat.CSV:
        return [read_csv(path)]
    return read_ndjson(path)


# -- writers --


def series_record(series: TimeSeries) -> dict:
    values = series.values.tolist()
    record = {"id": series.id, "values": values[0] if series.dims == 1 else values}
    if series.has_labels:
        record["labels"] = series.labels.tolist()
    return record


def write_ndjson(path, series: list[TimeSeries]):
    lines = [json.dumps(series_record(s), allow_nan=False) for s in series]
    atomic_write_text(path, "".join(line + "\n" for line in lines))


def _frame_text(frame: pd.DataFrame) -> str:
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def write_csv(path, series: TimeSeries):
    columns = {"timestamp": np.arange(series.length)}
    for d in range(series.dims):
        columns["value" if d == 0 else f"value_{d + 1}"] = series.values[d]
    if series.has_labels:
        columns["label"] = series.labels
    atomic_write_text(path, _frame_text(pd.DataFrame(columns)))


def write_scores_csv(path, window_scores):
    """``start,score`` rows, one per window"""
    frame = pd.DataFrame(list(window_scores), columns=["start", "score"])
    atomic_write_text(path, _frame_text(frame))


def write_labels_csv(path, labels):
    """``timestamp,label`` rows, timestamps are sample indices"""
    labels = np.asarray(labels, dtype=np.int8)
    frame = pd.DataFrame({"timestamp": np.arange(labels.size), "label": labels})
    atomic_write_text(path, _frame_text(frame))


def read_labels_csv(path) -> np.ndarray:
    """Read a ``timestamp,label`` file written by :py:func:`write_labels_csv`"""
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        raise ParseError(f"{path}: {e}") from e
    if list(frame.columns) != ["timestamp", "label"]:
        raise ParseError("header must be 'timestamp,label'", 1)
    _check_timestamps(frame["timestamp"])
    labels = _numeric(frame["label"], "label")
    if not np.all(np.isin(labels, (0.0, 1.0))):
        raise InvalidLabelValue(f"{path}: labels must be 0 or 1")
    return labels.astype(np.int8)


def write_pairs_ndjson(path, pairs: list[WindowPair]):
    """One record per window pair: id, source_id, start, context_len, label, values"""
    lines = []
    for index, pair in enumerate(pairs):
        record = {
            "id": f"pair-{index:06d}",
            "source_id": pair.source_id,
            "start": pair.start,
            "context_len": pair.context_len,
            "label": pair.label,
            "values": pair.full.tolist(),
        }
        lines.append(json.dumps(record, allow_nan=False))
    atomic_write_text(path, "".join(line + "\n" for line in lines))
