"""Plot photon-number curves from ``qkaleido curve`` CSV files.

Usage::

    qkaleido curve --n 3 --s 0 --out s0.csv
    qkaleido curve --n 3 --s 1 --out s1.csv
    qkaleido curve --n 3 --s 2 --out s2.csv
    python3 docs/plot_curves.py s0.csv s1.csv s2.csv --out trinity.png

Needs matplotlib, which the package itself does not depend on.
"""

import argparse
import csv

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def read_curve(path):
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        xs, ys = zip(*((float(a), float(b)) for a, b in reader))
    return header[1], xs, ys


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv", nargs="+")
    parser.add_argument("--out", default="curves.png")
    args = parser.parse_args()

    fig, ax = plt.subplots(figsize=(5, 4))
    xmax = 0.0
    for path in args.csv:
        label, xs, ys = read_curve(path)
        ax.plot(xs, ys, label=label)
        xmax = max(xmax, xs[-1])
    ax.plot([0, xmax], [0, xmax], "k:", lw=0.8, label="|alpha|^2")
    ax.set_xlabel("|alpha|^2")
    ax.set_ylabel("<N>")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)


if __name__ == "__main__":
    main()
