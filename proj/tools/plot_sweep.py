#!/usr/bin/env python3
"""Plot negativity-vs-acceleration CSV files produced by `qqtlab sweep`.

Accepts both the single-family format (r,negativity_numeric,...) and the
long format with channel/scenario label columns.

    qqtlab sweep --channel ad,dep,pd --scenario global \
                 --p1 0.2 --p2 0.2 --p 0.2 -o fig4.csv
    python3 tools/plot_sweep.py fig4.csv -o fig4.png
"""
import argparse

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("csv", help="sweep CSV file")
    parser.add_argument("-o", "--output", default="sweep.png")
    args = parser.parse_args()

    frame = pd.read_csv(args.csv)
    fig, ax = plt.subplots(figsize=(6, 4))
    if "channel" in frame.columns:
        for (channel, scenario), group in frame.groupby(["channel", "scenario"]):
            ax.plot(group["r"], group["negativity_numeric"],
                    label=f"{channel} / {scenario}")
        ax.legend()
    else:
        ax.plot(frame["r"], frame["negativity_numeric"])
    ax.set_xlabel("acceleration parameter r")
    ax.set_ylabel("negativity")
    ax.set_ylim(bottom=0)
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)
    print(f"wrote {args.output}")


if __name__ == "__main__":
    main()
