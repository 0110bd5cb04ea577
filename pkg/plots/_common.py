"""Shared plumbing for the figure scripts: schema checks and deterministic saves."""

import csv
import json
import os
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np               # noqa: E402

SCHEMA_VERSION = 1

plt.rcParams.update({
    "figure.figsize": (7.0, 4.5),
    "figure.dpi": 110,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "font.size": 10,
})


class SchemaError(Exception):
    pass


def check_metadata(input_path: str) -> dict:
    """The emitting run's metadata must exist and carry our schema version."""
    meta_path = os.path.join(os.path.dirname(os.path.abspath(input_path)),
                             "run_metadata.json")
    if not os.path.exists(meta_path):
        raise SchemaError(f"missing run_metadata.json next to {input_path}")
    with open(meta_path) as fh:
        meta = json.load(fh)
    version = meta.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"schema_version mismatch: input has {version!r}, "
                          f"these scripts expect {SCHEMA_VERSION}")
    return meta


def load_csv(path: str, expected_columns) -> dict:
    """CSV -> dict of float arrays; empty cells become NaN.

    The header must match the expected columns exactly; any difference is
    reported by column name.
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"empty input: {path}")
        expected = list(expected_columns)
        for col in expected:
            if col not in header:
                raise SchemaError(f"missing column '{col}' in {path}")
        for col in header:
            if col not in expected:
                raise SchemaError(f"unexpected column '{col}' in {path}")
        rows = list(reader)
    if not rows:
        raise SchemaError(f"empty input: {path} has a header but no rows")
    data = {col: np.empty(len(rows)) for col in header}
    for i, row in enumerate(rows):
        for col, cell in zip(header, row):
            data[col][i] = float(cell) if cell != "" else np.nan
    return data


def load_jsonl(path: str) -> list:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(json.loads(line))
    return out


def save(fig, out_path: str) -> None:
    """Write a byte-stable PNG: fixed style, no writer metadata."""
    fig.tight_layout()
    fig.savefig(out_path, metadata={"Software": None})
    plt.close(fig)


def cli(description: str):
    import argparse
    p = argparse.ArgumentParser(description=description)
    p.add_argument("--in", dest="input", required=True, help="input data file")
    p.add_argument("--out", dest="output", required=True, help="output image path")
    return p.parse_args()


def run(main) -> None:
    try:
        main()
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(1)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(1)
    sys.exit(0)
