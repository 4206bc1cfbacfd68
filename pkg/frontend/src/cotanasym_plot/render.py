"""Render the rescaled-residual plot from `cotanasym figure` CSV output.

The renderer never recomputes any mathematics: it plots the
`figure_quantity` column as the data series over a gray curve of the
`predicted_l5_term` column (the limiting sine term).  Output is a raster
image; with fixed size and font settings the bytes are a pure function of
the CSV.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass
from typing import List

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

EXPECTED_COLUMNS = ("n", "figure_quantity", "predicted_l5_term")


class CsvError(ValueError):
    """Malformed input CSV; carries the offending row number."""

    def __init__(self, row_number, message):
        super().__init__(f"row {row_number}: {message}")
        self.row_number = row_number


@dataclass(frozen=True)
class FigureCsvRow:
    n: int
    figure_quantity: float
    predicted_l5_term: float


def read_rows(path) -> List[FigureCsvRow]:
    """Parse and validate the CSV: header, strictly increasing n, finite values."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CsvError(1, "empty file") from None
        if tuple(header) != EXPECTED_COLUMNS:
            raise CsvError(1, f"expected header {','.join(EXPECTED_COLUMNS)}, got {','.join(header)}")
        rows: List[FigureCsvRow] = []
        for lineno, fields in enumerate(reader, start=2):
            if not fields:
                continue
            if len(fields) != 3:
                raise CsvError(lineno, f"expected 3 columns, got {len(fields)}")
            try:
                n = int(fields[0])
                fq = float(fields[1])
                pred = float(fields[2])
            except ValueError as exc:
                raise CsvError(lineno, str(exc)) from None
            if not (math.isfinite(fq) and math.isfinite(pred)):
                raise CsvError(lineno, "non-finite value")
            if rows and n <= rows[-1].n:
                raise CsvError(lineno, f"n not strictly increasing ({rows[-1].n} -> {n})")
            rows.append(FigureCsvRow(n, fq, pred))
    if not rows:
        raise CsvError(2, "no data rows")
    return rows


def render(input_csv_path, output_image_path, title=None, width=1200, height=500) -> None:
    """Write a raster plot of the CSV to output_image_path."""
    rows = read_rows(input_csv_path)
    ns = [r.n for r in rows]
    data = [r.figure_quantity for r in rows]
    pred = [r.predicted_l5_term for r in rows]

    dpi = 100
    fig, ax = plt.subplots(figsize=(width / dpi, height / dpi), dpi=dpi)
    ax.plot(ns, pred, color="0.6", linewidth=1.2, label="predicted sine term", zorder=1)
    ax.plot(ns, data, color="#1f4e9c", linewidth=0.9, marker=".", markersize=3,
            label="rescaled residual", zorder=2)
    ax.set_xlabel("n")
    ax.set_ylabel("rescaled residual after 4 correction terms")
    if title:
        ax.set_title(title)
    ax.legend(loc="upper right", framealpha=1.0)
    ax.grid(True, alpha=0.25)
    fig.tight_layout()
    # strip variable metadata so identical input gives identical bytes
    fig.savefig(output_image_path, format="png", metadata={"Software": None})
    plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cotanasym-plot",
        description="Plot a cotanasym figure CSV (data series over the predicted gray curve)",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render a CSV to a PNG")
    p.add_argument("--in", dest="input", required=True, help="figure CSV path")
    p.add_argument("--out", dest="output", required=True, help="output image path")
    p.add_argument("--title", default=None)
    p.add_argument("--width", type=int, default=1200, help="image width in pixels")
    p.add_argument("--height", type=int, default=500, help="image height in pixels")
    args = parser.parse_args(argv)
    try:
        render(args.input, args.output, args.title, args.width, args.height)
    except (CsvError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
