#!/usr/bin/env python3
"""Overlay of inside probability, bound occupancy, and integrated boundary flux.

Usage: python plots/timeseries.py --in <timeseries.csv> --out <image>
"""

import numpy as np

import _common
from _common import plt

TIMESERIES_COLUMNS = ("t", "norm", "energy", "p_in", "p_out", "q_bound",
                      "j_left", "j_right", "residual")


def main():
    args = _common.cli(__doc__.splitlines()[0])
    _common.check_metadata(args.input)
    data = _common.load_csv(args.input, TIMESERIES_COLUMNS)

    t = data["t"]
    flux_in = data["j_left"] - data["j_right"]
    # cumulative trapezoid of the net inflow
    integral = np.concatenate([[0.0], np.cumsum(
        0.5 * (flux_in[1:] + flux_in[:-1]) * np.diff(t))])

    fig, ax = plt.subplots()
    ax.plot(t, data["p_in"], label="p_in (inside probability)", lw=1.5)
    ax.plot(t, data["q_bound"], label="q (bound occupancy)", lw=1.5)
    ax.plot(t, integral, label="integrated net inflow", lw=1.2, ls="--")
    ax.set_xlabel("t")
    ax.set_ylabel("probability")
    ax.legend(loc="best")
    ax.set_title("Detector-region bookkeeping along the surviving path")
    _common.save(fig, args.output)


if __name__ == "__main__":
    _common.run(main)
