#!/usr/bin/env python3
"""Plot transmission and negativity curves from edgescatter sweep CSVs.

Usage: plot_sweep.py out.png sweep1.csv [sweep2.csv ...]
"""
import csv
import math
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def load(path):
    ks, T, neg = [], [], []
    with open(path, newline="") as f:
        for row in csv.DictReader(f):
            k = float(row["k0"])
            t, n = float(row["T"]), float(row["neg_total"])
            if math.isnan(t) or math.isnan(n):
                continue
            ks.append(k)
            T.append(t)
            neg.append(n)
    return ks, T, neg


def main():
    if len(sys.argv) < 3:
        sys.exit(__doc__.strip())
    out, paths = sys.argv[1], sys.argv[2:]
    fig, (ax_t, ax_n) = plt.subplots(2, 1, sharex=True, figsize=(7, 6))
    for path in paths:
        ks, T, neg = load(path)
        label = path.rsplit("/", 1)[-1].removesuffix(".csv")
        ax_t.plot(ks, T, label=label)
        ax_n.plot(ks, neg, label=label)
    ax_t.set_ylabel("T")
    ax_n.set_ylabel("negativity")
    ax_n.set_xlabel("k0")
    ax_t.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
