#!/usr/bin/env python3
"""Detection rate, net inflow, and their ratio R(t) from an ensemble summary.

Usage: python plots/ratio.py --in <ensemble_summary.json> --out <image>
"""

import json

import numpy as np

import _common
from _common import plt

REQUIRED_KEYS = ("bin_edges", "detection_rate", "flux_in_per_bin",
                 "ratio_per_bin", "n_detected", "n_trajectories", "tau")


def main():
    args = _common.cli(__doc__.splitlines()[0])
    _common.check_metadata(args.input)
    with open(args.input) as fh:
        summary = json.load(fh)
    for key in REQUIRED_KEYS:
        if key not in summary:
            raise _common.SchemaError(f"missing column '{key}' in {args.input}")

    edges = np.asarray(summary["bin_edges"], dtype=float)
    if len(edges) < 2:
        raise _common.SchemaError("empty input: no rate bins")
    centers = 0.5 * (edges[1:] + edges[:-1])

    def arr(key):
        return np.array([np.nan if v is None else v for v in summary[key]],
                        dtype=float)

    rate = arr("detection_rate")
    flux = arr("flux_in_per_bin")
    ratio = arr("ratio_per_bin")

    fig, (ax1, ax2) = plt.subplots(2, 1, sharex=True, figsize=(7.0, 6.0))
    ax1.step(centers, rate, where="mid", label="detection rate", lw=1.5)
    ax1.step(centers, flux, where="mid", label="net inflow (flux)", lw=1.2)
    ax1.set_ylabel("per unit time")
    ax1.legend(loc="best")
    ax1.set_title(f"tau = {summary['tau']}: {summary['n_detected']} detections "
                  f"in {summary['n_trajectories']} trajectories")
    ax2.step(centers, ratio, where="mid", color="tab:red", lw=1.5)
    ax2.set_xlabel("t")
    ax2.set_ylabel("R = rate / flux")
    if not np.any(np.isfinite(ratio)):
        ax2.text(0.5, 0.5, "R undefined (no detections or no flux)",
                 transform=ax2.transAxes, ha="center", va="center")
    _common.save(fig, args.output)


if __name__ == "__main__":
    _common.run(main)
