"""Deterministic CSV text for reports and trajectories."""

from __future__ import annotations

import csv
import io
from typing import Any, Iterable, Sequence

from beamsym.core.config import settings


def format_float(value: float, digits: int | None = None) -> str:
    """Fixed significant-digit text so identical runs give identical bytes."""
    digits = settings.csv_significant_digits if digits is None else digits
    return f"{float(value):.{digits}g}"


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], footer: Iterable[str] = ()) -> str:
    """Render rows as CSV; ``footer`` lines are appended as ``# ...`` comments."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    for line in footer:
        buffer.write(f"# {line}\n")
    return buffer.getvalue()
