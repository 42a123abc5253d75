"""Closed-form counts, exhaustive verification suites and OEIS cross-checks.

Size conventions: composition classes (``3comp``, ``pairs``, ``composition``)
are indexed by the integer ``n`` being composed; every path class is indexed
by its semilength, so ``walk`` and ``two_colored`` at ``m`` have length
``2m`` and match the composition classes at ``n = m + 1``.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import bijections as B
from . import paths as P
from .compositions import CompositionPair, iter_3compositions, iter_compositions
from .errors import ClassSizeMismatch, FourPowError, UnknownClass, UnknownSequence, UnknownSuite
from .paths import DOWN, PathClass

CLASS_NAMES = (
    "3comp",
    "pairs",
    "walk",
    "two_colored",
    "marked_bridge",
    "height_labeled",
    "bridge",
    "meander",
    "dyck",
    "marked_peak",
    "composition",
)

# the six families of the bijection diagram, in chain order
FOUR_POWER_CLASSES = B.CHAIN

_PATH_CLASSES = {
    "walk": PathClass.WALK,
    "bridge": PathClass.BRIDGE,
    "meander": PathClass.MEANDER,
    "dyck": PathClass.DYCK,
}


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


def class_size_index(name: str, n: int) -> int:
    """The argument to pass to :func:`iter_class` for composition size ``n``."""
    return n - 1 if name in ("walk", "two_colored") else n


def closed_form_count(name: str, n: int) -> int:
    if name not in CLASS_NAMES:
        raise UnknownClass(f"unknown class {name!r}; expected one of {', '.join(CLASS_NAMES)}")
    if n < 0:
        raise FourPowError("n must be nonnegative")
    if name in ("3comp", "pairs"):
        if n < 1:
            raise FourPowError(f"{name} needs n >= 1")
        return 4 ** (n - 1)
    if name in ("walk", "two_colored"):
        return 4**n
    if name in ("marked_bridge", "height_labeled"):
        return 4 ** (n - 1) if n else 0
    if name in ("bridge", "meander"):
        return math.comb(2 * n, n)
    if name == "dyck":
        return catalan(n)
    if name == "marked_peak":
        return math.comb(2 * n - 1, n) if n else 0
    return 2 ** (n - 1) if n else 1  # composition


def iter_marked_peaks(length: int):
    for d in P.iter_paths(PathClass.DYCK, length):
        for pk in P.peaks(d):
            yield B.MarkedPeakPath(d, pk.up_index)


def iter_height_labeled(length: int):
    for d in P.iter_paths(PathClass.DYCK, length):
        for pk in P.peaks(d):
            for mu in range(1, pk.height + 1):
                yield B.HeightLabeledPath(d, pk.up_index, mu)


def iter_pairs(n: int):
    if n < 1:
        return
    comps = list(iter_compositions(n))
    for a, b in itertools.product(comps, repeat=2):
        yield CompositionPair(a, b)


def iter_class(name: str, n: int):
    """Every object of a class at size ``n``, in canonical order."""
    if name not in CLASS_NAMES:
        raise UnknownClass(f"unknown class {name!r}; expected one of {', '.join(CLASS_NAMES)}")
    if n < 0:
        raise FourPowError("n must be nonnegative")
    if name == "3comp":
        return iter_3compositions(n) if n else iter(())
    if name == "pairs":
        return iter_pairs(n)
    if name == "composition":
        return iter_compositions(n)
    if name in _PATH_CLASSES:
        return P.iter_paths(_PATH_CLASSES[name], 2 * n)
    if name == "two_colored":
        return B.iter_two_colored(2 * n)
    if name == "marked_bridge":
        return B.iter_marked_bridges(2 * n)
    if name == "height_labeled":
        return iter_height_labeled(2 * n)
    return iter_marked_peaks(2 * n)


def iter_down_bridges(length: int):
    return (b for b in P.iter_paths(PathClass.BRIDGE, length) if b.startswith(DOWN))


# -- reports --------------------------------------------------------------------


@dataclass
class VerificationReport:
    suite: str
    n_range: tuple[int, int]
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, input, expected, actual) -> None:
        self.checked += 1
        if not ok:
            self.failures.append({"input": repr(input), "expected": repr(expected), "actual": repr(actual)})

    def merge(self, other: "VerificationReport") -> None:
        self.checked += other.checked
        for f in other.failures:
            self.failures.append({"suite": other.suite, **f})

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n_max": self.n_range[1],
            "checked": self.checked,
            "failures": self.failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.suite}: {status} ({self.checked} checks, n = {self.n_range[0]}..{self.n_range[1]})"]
        for f in self.failures:
            lines.append(f"  {f.get('suite', self.suite)}: input={f['input']} expected={f['expected']} actual={f['actual']}")
        return "\n".join(lines)


# -- suites ---------------------------------------------------------------------


def _cardinality(n: int) -> VerificationReport:
    rep = VerificationReport("cardinality", (n, n))
    for name in FOUR_POWER_CLASSES:
        got = sum(1 for _ in iter_class(name, class_size_index(name, n)))
        rep.check(got == 4 ** (n - 1), (name, n), 4 ** (n - 1), got)
    return rep


def _roundtrip_pairs(n: int):
    """``(label, domain_iterable, forward, inverse)`` for every bijection at size n."""
    m = n - 1
    return [
        ("colored_pair", iter_class("3comp", n), B.colored_to_pair, B.pair_to_colored),
        ("colored_pair^-1", iter_class("pairs", n), B.pair_to_colored, B.colored_to_pair),
        ("pair_walk", iter_class("pairs", n), B.pair_to_walk, B.walk_to_pair),
        ("pair_walk^-1", iter_class("walk", m), B.walk_to_pair, B.pair_to_walk),
        ("twocol_walk", iter_class("two_colored", m), B.two_colored_to_walk, B.walk_to_two_colored),
        ("twocol_walk^-1", iter_class("walk", m), B.walk_to_two_colored, B.two_colored_to_walk),
        ("bridge_meander", iter_class("bridge", n), B.bridge_to_meander, B.meander_to_bridge),
        ("bridge_meander^-1", iter_class("meander", n), B.meander_to_bridge, B.bridge_to_meander),
        (
            "bridge_meander[rank]",
            iter_class("bridge", n),
            lambda b: B.bridge_to_meander(b, method="rank"),
            lambda m_: B.meander_to_bridge(m_, method="rank"),
        ),
        ("peak_bridge", iter_class("marked_peak", n), B.marked_peak_to_bridge, B.bridge_to_marked_peak),
        ("peak_bridge^-1", iter_down_bridges(2 * n), B.bridge_to_marked_peak, B.marked_peak_to_bridge),
        (
            "label_maxima",
            iter_class("height_labeled", n),
            B.height_labeled_to_marked_bridge,
            B.marked_bridge_to_height_labeled,
        ),
        (
            "label_maxima^-1",
            iter_class("marked_bridge", n),
            B.marked_bridge_to_height_labeled,
            B.height_labeled_to_marked_bridge,
        ),
        (
            "maxima_twocol",
            iter_class("marked_bridge", n),
            B.marked_bridge_to_two_colored,
            B.two_colored_to_marked_bridge,
        ),
        (
            "maxima_twocol^-1",
            iter_class("two_colored", m),
            B.two_colored_to_marked_bridge,
            B.marked_bridge_to_two_colored,
        ),
        (
            "maxima_twocol[rank]",
            iter_class("marked_bridge", n),
            lambda y: B.marked_bridge_to_two_colored(y, method="rank"),
            lambda t: B.two_colored_to_marked_bridge(t, method="rank"),
        ),
        (
            "maxima_twocol[rank]^-1",
            iter_class("two_colored", m),
            lambda t: B.two_colored_to_marked_bridge(t, method="rank"),
            lambda y: B.marked_bridge_to_two_colored(y, method="rank"),
        ),
    ]


def _guarded(fn, x):
    try:
        return fn(x)
    except FourPowError as exc:
        return exc


def _roundtrip(n: int) -> VerificationReport:
    rep = VerificationReport("roundtrip", (n, n))
    for label, domain, fwd, inv in _roundtrip_pairs(n):
        for x in domain:
            y = _guarded(fwd, x)
            back = y if isinstance(y, Exception) else _guarded(inv, y)
            rep.check(back == x, (label, x), x, back)
    return rep


def _injectivity(n: int) -> VerificationReport:
    rep = VerificationReport("injectivity", (n, n))
    for label, domain, fwd, _ in _roundtrip_pairs(n):
        seen: dict = {}
        for x in domain:
            y = _guarded(fwd, x)
            if isinstance(y, Exception):
                rep.check(False, (label, x), "an image", y)
                continue
            rep.check(y not in seen, (label, x), "a fresh image", (y, seen.get(y)))
            seen.setdefault(y, x)
    return rep


def _chain(n: int) -> VerificationReport:
    rep = VerificationReport("chain", (n, n))
    for src in FOUR_POWER_CLASSES:
        for x in iter_class(src, class_size_index(src, n)):
            rep.check(B.chain(x, src, src) == x, ("identity", src, x), x, "changed")
            for dst in FOUR_POWER_CLASSES:
                if dst == src:
                    continue
                y = _guarded(lambda v: B.chain(v, src, dst), x)
                back = y if isinstance(y, Exception) else _guarded(lambda v: B.chain(v, dst, src), y)
                rep.check(back == x, (src, dst, x), x, back)
    return rep


def _statistics(n: int) -> VerificationReport:
    rep = VerificationReport("statistics", (n, n))
    length = 2 * n

    # marked peaks onto down-starting bridges: h - 1 crossings
    heights = Counter()
    total = 0
    for m in iter_marked_peaks(length):
        b = B.marked_peak_to_bridge(m)
        rep.check(b.startswith(DOWN) and len(P.crossings(b)) == m.height - 1, ("peak_bridge", m), m.height - 1, b)
        heights[m.height] += 1
        total += 1
    rep.check(total == math.comb(2 * n - 1, n), ("marked_peak_total", n), math.comb(2 * n - 1, n), total)
    by_crossings = Counter(len(P.crossings(b)) + 1 for b in iter_down_bridges(length))
    rep.check(by_crossings == heights, ("down_bridges_by_crossings", n), dict(heights), dict(by_crossings))

    # height labels onto marked maxima: height mu, h - mu crossings after it
    for x in iter_height_labeled(length):
        y = B.height_labeled_to_marked_bridge(x)
        after = sum(1 for c in P.crossings(y.path) if c > y.peak)
        rep.check(y.height == x.label and after == x.height - x.label, ("label_maxima", x), (x.label, x.height - x.label), (y.height, after))

    # marked maxima onto two-colored bridges: equinumerous statistic classes
    marked, colored = B.statistic_class_sizes(n)
    shifted = {h - 1: c for h, c in marked.items()}
    rep.check(shifted == colored, ("class_sizes", n), shifted, colored)
    try:
        B._statistic_classes(n)
        ok, err = True, None
    except ClassSizeMismatch as exc:
        ok, err = False, str(exc)
    rep.check(ok, ("rank_transfer_tables", n), "no mismatch", err)
    for y in B.iter_marked_bridges(length):
        t = B.marked_bridge_to_two_colored(y)
        rep.check(B.two_colored_statistic(t) == y.height - 1, ("maxima_twocol", y), y.height - 1, t)

    # two-colored bridges onto walks: the color change sits at the last crossing
    for t in B.iter_two_colored(length - 2):
        w = B.two_colored_to_walk(t)
        cr = P.crossings(w)
        if t.first and t.second:
            rep.check(bool(cr) and cr[-1] == len(t.first), ("twocol_junction", t), len(t.first), cr)
        else:
            rep.check(not cr, ("twocol_no_crossing", t), [], cr)

    # generating function of two-colored bridges, and of height labels
    count2 = sum(1 for _ in B.iter_two_colored(length))
    rep.check(count2 == 4**n, ("two_colored_count", n), 4**n, count2)
    conv = sum(math.comb(2 * j, j) * math.comb(2 * n - 2 * j, n - j) for j in range(n + 1))
    rep.check(conv == 4**n, ("bridge_convolution", n), 4**n, conv)
    height_sum = sum(pk.height for d in P.iter_paths(PathClass.DYCK, length) for pk in P.peaks(d))
    rep.check(height_sum == 4 ** (n - 1), ("peak_height_sum", n), 4 ** (n - 1), height_sum)
    return rep


_PER_SIZE = {
    "cardinality": _cardinality,
    "roundtrip": _roundtrip,
    "statistics": _statistics,
    "injectivity": _injectivity,
    "chain": _chain,
}

SUITES = (*_PER_SIZE, "congruence", "all")


def d_r_count(r: int, n: int) -> int:
    """Dyck paths of semilength ``n`` with exactly ``r`` peaks at each height 1..max."""
    if r < 1 or n < 1:
        raise FourPowError("r and n must be positive")
    count = 0
    for d in P.iter_paths(PathClass.DYCK, 2 * n):
        by_height = Counter(pk.height for pk in P.peaks(d))
        top = max(P.altitudes(d))
        if all(by_height[v] == r for v in range(1, top + 1)):
            count += 1
    return count


def verify_congruence(r: int, n_max: int) -> VerificationReport:
    rep = VerificationReport(f"congruence[r={r}]", (r + 1, n_max))
    for n in range(r + 1, n_max + 1):
        value = d_r_count(r, n)
        rep.check(value % (r + 1) == 0, ("D_r(n)", r, n), f"0 mod {r + 1}", value)
    return rep


def verify_suite(name: str, n_max: int, workers: int = 1) -> VerificationReport:
    """Run one named suite (or ``"all"``) for sizes ``1..n_max``.

    Sizes may run on several threads; results are merged in size order, so
    the report does not depend on ``workers``.
    """
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    if n_max < 1:
        raise FourPowError("n_max must be positive")
    if name == "all":
        rep = VerificationReport("all", (1, n_max))
        for sub in SUITES[:-1]:
            rep.merge(verify_suite(sub, n_max, workers))
        return rep
    rep = VerificationReport(name, (1, n_max))
    if name == "congruence":
        for r in (1, 2, 3):
            rep.merge(verify_congruence(r, n_max))
        return rep
    run = _PER_SIZE[name]
    sizes = range(1, n_max + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, sizes))
    else:
        parts = [run(n) for n in sizes]
    for part in parts:
        rep.checked += part.checked
        rep.failures.extend(part.failures)
    return rep


# -- OEIS ------------------------------------------------------------------------

# first 20 terms, offset 0
A000302 = (
    1, 4, 16, 64, 256, 1024, 4096, 16384, 65536, 262144, 1048576, 4194304,
    16777216, 67108864, 268435456, 1073741824, 4294967296, 17179869184,
    68719476736, 274877906944,
)
A001700 = (
    1, 3, 10, 35, 126, 462, 1716, 6435, 24310, 92378, 352716, 1352078,
    5200300, 20058300, 77558760, 300540195, 1166803110, 4537567650,
    17672631900, 68923264410,
)

OEIS = {"A000302": A000302, "A001700": A001700}


def oeis_compare(sequence_id: str, n_max: int) -> VerificationReport:
    """Compare enumerated counts with an embedded OEIS table.

    A000302[k] is checked against all six diagram classes at ``n = k + 1``
    for ``k = 0..n_max``; A001700[n - 1] against the number of marked peaks
    in Dyck paths of length 2n for ``n = 1..n_max``.
    """
    if sequence_id not in OEIS:
        raise UnknownSequence(f"unknown sequence {sequence_id!r}; known: {', '.join(OEIS)}")
    table = OEIS[sequence_id]
    rep = VerificationReport(sequence_id, (0 if sequence_id == "A000302" else 1, n_max))
    if sequence_id == "A000302":
        if n_max >= len(table):
            raise FourPowError(f"only {len(table)} terms of {sequence_id} are embedded")
        for k in range(n_max + 1):
            for name in FOUR_POWER_CLASSES:
                got = sum(1 for _ in iter_class(name, class_size_index(name, k + 1)))
                rep.check(got == table[k], (sequence_id, k, name), table[k], got)
    else:
        if n_max > len(table):
            raise FourPowError(f"only {len(table)} terms of {sequence_id} are embedded")
        for n in range(1, n_max + 1):
            got = sum(len(P.peaks(d)) for d in P.iter_paths(PathClass.DYCK, 2 * n))
            rep.check(got == table[n - 1], (sequence_id, n), table[n - 1], got)
    return rep
