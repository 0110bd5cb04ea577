#!/usr/bin/env python3
"""Log-log interval scaling of the occupancy regrowth with the fitted exponent.

Usage: python plots/sweep.py --in <sweep.csv> --out <image>
"""

import numpy as np

import _common
from _common import plt

SWEEP_COLUMNS = ("tau", "t", "n_alive", "detections", "detection_rate",
                 "flux_in", "ratio", "total_detection_probability",
                 "peak_detection_rate", "peak_flux_in", "peak_ratio",
                 "regrowth_q", "beta", "beta_stderr")


def main():
    args = _common.cli(__doc__.splitlines()[0])
    _common.check_metadata(args.input)
    data = _common.load_csv(args.input, SWEEP_COLUMNS)

    # one scalar row per tau (values are repeated across that tau's bins)
    taus, q_re, totals = [], [], []
    for tau in sorted(set(data["tau"])):
        sel = data["tau"] == tau
        taus.append(tau)
        q_re.append(data["regrowth_q"][sel][0])
        totals.append(data["total_detection_probability"][sel][0])
    taus = np.array(taus)
    q_re = np.array(q_re)
    beta = data["beta"][0]
    beta_err = data["beta_stderr"][0]

    fig, ax = plt.subplots()
    have_q = np.isfinite(q_re) & (q_re > 0)
    if np.any(have_q):
        ax.loglog(taus[have_q], q_re[have_q], "o-", label="occupancy regrowth q(tau)")
    ax.set_xlabel("tau")
    ax.set_ylabel("per-interval occupancy regrowth")
    label = f"fitted slope beta = {beta:.3f}"
    if np.isfinite(beta_err):
        label += f" +- {beta_err:.3f}"
    ax.text(0.04, 0.92, label, transform=ax.transAxes)
    sub = ", ".join(f"{t:g}: {p:.3g}" for t, p in zip(taus, totals))
    ax.set_title(f"total detection probability per tau: {sub}")
    if np.any(have_q):
        ax.legend(loc="lower right")
    else:
        ax.text(0.5, 0.5, "no regrowth data", transform=ax.transAxes,
                ha="center", va="center")
    _common.save(fig, args.output)


if __name__ == "__main__":
    _common.run(main)
