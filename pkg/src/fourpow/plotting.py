"""Matplotlib report figures written next to the JSON/text reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from . import bijections as B  # noqa: E402
from . import paths as P  # noqa: E402
from .verification import FOUR_POWER_CLASSES, OEIS, class_size_index, iter_class  # noqa: E402

LABELS = {
    "3comp": "3-compositions of n",
    "pairs": "pairs of compositions of n",
    "walk": "walks, length 2n-2",
    "two_colored": "2-colored bridges, length 2n-2",
    "marked_bridge": "marked LTR maxima, length 2n",
    "height_labeled": "height-labeled peaks, length 2n",
}

_MARKERS = ("o", "s", "^", "v", "D", "x")


def _save(fig, path) -> None:
    # fixed metadata keeps repeated runs byte-identical
    if str(path).endswith(".svg"):
        with plt.rc_context({"svg.hashsalt": "fourpow"}):
            fig.savefig(path, metadata={"Date": None})
    elif str(path).endswith(".pdf"):
        fig.savefig(path, metadata={"CreationDate": None, "ModDate": None})
    else:
        fig.savefig(path, dpi=120)
    plt.close(fig)


def verification_figure(n_max: int, path) -> None:
    """Class sizes against 4^(n-1), and the two statistic distributions at ``n_max``."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4.2))
    ns = list(range(1, n_max + 1))
    ax1.plot(ns, [4 ** (n - 1) for n in ns], color="0.6", lw=4, alpha=0.5, label="4^(n-1)")
    for name, marker in zip(FOUR_POWER_CLASSES, _MARKERS):
        counts = [sum(1 for _ in iter_class(name, class_size_index(name, n))) for n in ns]
        ax1.plot(ns, counts, ls="none", marker=marker, mfc="none", label=LABELS[name])
    ax1.set_yscale("log", base=4)
    ax1.set_xlabel("n")
    ax1.set_ylabel("objects (enumerated)")
    ax1.set_xticks(ns)
    ax1.legend(fontsize=7, frameon=False)

    marked, colored = B.statistic_class_sizes(n_max)
    hs = sorted(set(marked) | {s + 1 for s in colored})
    width = 0.4
    ax2.bar([h - width / 2 for h in hs], [marked.get(h, 0) for h in hs], width, label="marked bridges, height h")
    ax2.bar(
        [h + width / 2 for h in hs],
        [colored.get(h - 1, 0) for h in hs],
        width,
        label="2-colored bridges, statistic h-1",
    )
    ax2.set_xlabel("h")
    ax2.set_ylabel("objects")
    ax2.set_xticks(hs)
    ax2.set_title(f"n = {n_max}", fontsize=10)
    ax2.legend(fontsize=7, frameon=False)
    fig.tight_layout()
    _save(fig, path)


def oeis_figure(sequence_id: str, rows, path) -> None:
    """``rows`` is ``[(index, table_value, computed_value), ...]``."""
    fig, ax = plt.subplots(figsize=(6, 4))
    xs = [r[0] for r in rows]
    ax.plot(xs, [r[1] for r in rows], color="0.6", lw=4, alpha=0.5, label=f"{sequence_id} (table)")
    ax.plot(xs, [r[2] for r in rows], ls="none", marker="o", mfc="none", label="enumerated")
    ax.set_yscale("log")
    ax.set_xlabel("index")
    ax.set_xticks(xs)
    ax.legend(frameon=False)
    ax.set_title(sequence_id)
    fig.tight_layout()
    _save(fig, path)


def oeis_rows(sequence_id: str, n_max: int):
    table = OEIS[sequence_id]
    if sequence_id == "A000302":
        return [(k, table[k], sum(1 for _ in iter_class("pairs", k + 1))) for k in range(n_max + 1)]
    return [
        (n, table[n - 1], sum(len(P.peaks(d)) for d in iter_class("dyck", n)))
        for n in range(1, n_max + 1)
    ]
