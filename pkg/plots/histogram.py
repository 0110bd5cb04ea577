#!/usr/bin/env python3
"""Photon-energy histogram and per-eigenstate detection counts from an event ledger.

Usage: python plots/histogram.py --in <events.jsonl> --out <image>
"""

import numpy as np

import _common
from _common import plt

EVENT_KEYS = {"t", "kind", "index", "photon_energy", "q"}


def main():
    args = _common.cli(__doc__.splitlines()[0])
    _common.check_metadata(args.input)
    events = _common.load_jsonl(args.input)
    for ev in events[:1]:
        missing = EVENT_KEYS - set(ev)
        if missing:
            raise _common.SchemaError(
                f"missing column '{sorted(missing)[0]}' in {args.input}")

    detections = [ev for ev in events if ev.get("kind") == "detection"]
    energies = np.array([ev["photon_energy"] for ev in detections], dtype=float)
    indices = [ev["index"] for ev in detections]

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.0, 4.0))
    if len(detections):
        ax1.hist(energies, bins=16, color="tab:blue", edgecolor="black")
        counts = np.bincount(indices)
        ax2.bar(np.arange(len(counts)), counts, color="tab:orange",
                edgecolor="black")
        ax2.set_xticks(np.arange(len(counts)))
    else:
        for ax in (ax1, ax2):
            ax.text(0.5, 0.5, "0 detections", transform=ax.transAxes,
                    ha="center", va="center", fontsize=14)
    ax1.set_xlabel("photon energy (E_before - E_i)")
    ax1.set_ylabel("detections")
    ax1.set_title(f"photon ledger ({len(detections)} detections, "
                  f"{len(events)} events)")
    ax2.set_xlabel("eigenstate index")
    ax2.set_ylabel("detections")
    ax2.set_title("per-eigenstate detections")
    _common.save(fig, args.output)


if __name__ == "__main__":
    _common.run(main)
