#!/usr/bin/env python3
"""Render the plot-data files of one run directory to PNGs (needs matplotlib)."""

import argparse
import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def read_columns(path):
    with open(path, newline="") as f:
        rows = list(csv.reader(f))
    header, body = rows[0], rows[1:]
    return header, [[float(v) for v in col] for col in zip(*body)]


def plot_rates(run_dir, out_dir):
    _, (slots, total) = read_columns(run_dir / "plot_sum_rate.csv")
    header, cols = read_columns(run_dir / "plot_node_rates.csv")
    fig, (top, bottom) = plt.subplots(2, 1, figsize=(8, 6), sharex=True)
    top.plot(slots, [v / 1e6 for v in total])
    top.set_ylabel("sum rate (Mbps)")
    for name, col in zip(header[1:], cols[1:]):
        bottom.plot(cols[0], [v / 1e6 for v in col], lw=0.8, label=name.replace("rate_bps_", "node "))
    bottom.set_xlabel("slot")
    bottom.set_ylabel("rate (Mbps)")
    bottom.legend(ncol=5, fontsize="x-small")
    fig.tight_layout()
    fig.savefig(out_dir / "rates.png", dpi=120)


def plot_sinr_focus(run_dir, out_dir):
    _, (node, sinr_db, threshold_db, focus) = read_columns(run_dir / "plot_node_sinr_focus.csv")
    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4))
    left.bar(node, sinr_db)
    left.axhline(threshold_db[0], color="k", ls="--", lw=0.8)
    left.set_xlabel("node")
    left.set_ylabel("average SINR (dB)")
    right.bar(node, focus)
    right.set_xlabel("node")
    right.set_ylabel("IRS focus (%)")
    fig.tight_layout()
    fig.savefig(out_dir / "sinr_focus.png", dpi=120)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("run_dir", type=Path, help="directory written by `irsim run --out`")
    ap.add_argument("--out", type=Path, help="where to write PNGs (default: run_dir)")
    args = ap.parse_args()
    out_dir = args.out or args.run_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    plot_rates(args.run_dir, out_dir)
    plot_sinr_focus(args.run_dir, out_dir)


if __name__ == "__main__":
    main()
