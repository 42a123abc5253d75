"""Bijections between the 4^(n-1) families and their inverses.

Sizes, for a composition size ``n``:

=====================  ===========================================
3-compositions         of ``n``
composition pairs      of ``n``
walks                  length ``2n - 2``
two-colored bridges    total length ``2n - 2``
marked bridges         length ``2n``, marked strict left-to-right maximum
height-labeled paths   Dyck paths of length ``2n``, labeled peak
=====================  ===========================================

plus marked-peak Dyck paths, which map onto bridges that start with a down
step.  Reflection (flip every step) is the fixed map between positive and
negative Dyck paths throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import paths as P
from .compositions import CompositionPair, check_colored, check_pair, from_bits, to_bits
from .errors import (
    ClassSizeMismatch,
    InvalidColoredComposition,
    LabelOutOfRange,
    NotABridge,
    NotADyckPath,
    NotAStrictMaximum,
    NotInClass,
    NotStartingDown,
    OddLength,
)
from .paths import DOWN, UP, PathClass, reflect


@dataclass(frozen=True)
class MarkedPeakPath:
    """Dyck path with one distinguished peak (``peak`` = index of its up step)."""

    path: str
    peak: int

    def __post_init__(self):
        P.check_path(self.path)
        if not self.path or not P.is_dyck(self.path):
            raise NotADyckPath(f"{self.path!r} is not a nonempty Dyck path")
        P.peak_at(self.path, self.peak)

    @property
    def height(self) -> int:
        return P.peak_at(self.path, self.peak).height


@dataclass(frozen=True)
class HeightLabeledPath:
    path: str
    peak: int
    label: int

    def __post_init__(self):
        P.check_path(self.path)
        if not self.path or not P.is_dyck(self.path):
            raise NotADyckPath(f"{self.path!r} is not a nonempty Dyck path")
        h = P.peak_at(self.path, self.peak).height
        if not isinstance(self.label, int) or not 1 <= self.label <= h:
            raise LabelOutOfRange(f"label {self.label!r} not in 1..{h}")

    @property
    def height(self) -> int:
        return P.peak_at(self.path, self.peak).height


@dataclass(frozen=True)
class MarkedBridge:
    """Bridge with a marked strict left-to-right maximum."""

    path: str
    peak: int

    def __post_init__(self):
        P.check_path(self.path)
        if not P.is_bridge(self.path):
            raise NotABridge(f"{self.path!r} is not a bridge")
        pk = P.peak_at(self.path, self.peak)
        if pk not in P.strict_ltr_maxima(self.path):
            raise NotAStrictMaximum(f"peak at {self.peak} is not a strict left-to-right maximum of {self.path!r}")

    @property
    def height(self) -> int:
        return P.peak_at(self.path, self.peak).height


@dataclass(frozen=True)
class TwoColoredBridge:
    first: str
    second: str

    def __post_init__(self):
        for part in (self.first, self.second):
            P.check_path(part)
            if not P.is_bridge(part):
                raise NotABridge(f"{part!r} is not a bridge")

    def __len__(self) -> int:
        return len(self.first) + len(self.second)


# -- compositions and walks ------------------------------------------------


def pair_to_walk(pair: CompositionPair) -> str:
    pair = check_pair(*pair)
    bits = to_bits(pair.first)[:-1] + to_bits(pair.second)[:-1]
    return bits.translate(str.maketrans("01", "UD"))


def walk_to_pair(walk: str) -> CompositionPair:
    P.check_path(walk)
    if len(walk) % 2:
        raise OddLength(f"walk of odd length {len(walk)}")
    bits = walk.translate(str.maketrans("UD", "01"))
    half = len(bits) // 2
    return CompositionPair(from_bits(bits[:half] + "1"), from_bits(bits[half:] + "1"))


def colored_to_pair(colored) -> CompositionPair:
    colored = check_colored(colored)
    if not colored:
        raise InvalidColoredComposition("empty colored composition")

    def fold(carry_color):
        out, carry = [], 0
        for value, color in colored:
            if color == carry_color:
                carry += value
            else:
                out.append(carry + value)
                carry = 0
        return tuple(out)

    return CompositionPair(fold(2), fold(3))


def pair_to_colored(pair: CompositionPair) -> tuple:
    pair = check_pair(*pair)
    a, b = list(pair.first), list(pair.second)
    out = []
    while a:
        if a[0] == b[0]:
            out.append((a.pop(0), 1))
            b.pop(0)
        elif a[0] > b[0]:
            out.append((b[0], 2))
            a[0] -= b.pop(0)
        else:
            out.append((a[0], 3))
            b[0] -= a.pop(0)
    return tuple(out)


# -- bridges, meanders and walks ---------------------------------------------


def bridge_to_meander(bridge: str, method: str = "flip") -> str:
    """Bridge of length 2n to meander of length 2n.

    ``method="flip"`` keeps positive excursions and rewrites each negative
    excursion ``D X U`` as ``U reflect(X) U``; a bridge with k negative
    excursions lands on a meander ending at altitude 2k.  ``method="rank"``
    sends the bridge of canonical rank r to the meander of rank r.
    """
    P.check_path(bridge)
    if len(bridge) % 2:
        raise OddLength(f"bridge of odd length {len(bridge)}")
    if method == "rank":
        return P.unrank(PathClass.MEANDER, len(bridge), P.rank(PathClass.BRIDGE, bridge))
    if method != "flip":
        raise ValueError(f"unknown method {method!r}")
    if not P.is_bridge(bridge):
        raise NotABridge(f"{bridge!r} is not a bridge")
    out = []
    for exc in P.split_at(bridge, P.returns(bridge)):
        out.append(exc if exc.startswith(UP) else UP + reflect(exc[1:-1]) + UP)
    return "".join(out)


def meander_to_bridge(meander: str, method: str = "flip") -> str:
    P.check_path(meander)
    if len(meander) % 2:
        raise OddLength(f"meander of odd length {len(meander)}")
    if method == "rank":
        return P.unrank(PathClass.BRIDGE, len(meander), P.rank(PathClass.MEANDER, meander))
    if method != "flip":
        raise ValueError(f"unknown method {method!r}")
    if not P.is_in_class(meander, PathClass.MEANDER):
        raise NotInClass(f"{meander!r} is not a meander")
    top = P.altitudes(meander)[-1]
    if not top:
        return meander
    # meander = S_0 U S_1 U ... U S_top, cut at the last exit of each level
    pieces = P.last_passage_segments(meander, top)
    tail = meander[sum(len(s) + 1 for s in pieces):]
    out = []
    for k in range(0, top, 2):
        out.append(pieces[k] + DOWN + reflect(pieces[k + 1]) + UP)
    return "".join(out) + tail


def two_colored_to_walk(t: TwoColoredBridge) -> str:
    first, second = t.first, t.second
    if len(first) % 2 or len(second) % 2:
        raise OddLength("two-colored bridge parts must have even length")
    if first and second:
        tail = bridge_to_meander(second)
        # continue on the far side of the axis so the junction is a crossing
        if first.endswith(DOWN):
            tail = reflect(tail)
        return first + tail
    if first:
        return bridge_to_meander(first)
    if second:
        return reflect(bridge_to_meander(second))
    return ""


def walk_to_two_colored(walk: str) -> TwoColoredBridge:
    P.check_path(walk)
    if len(walk) % 2:
        raise OddLength(f"walk of odd length {len(walk)}")
    cross = P.crossings(walk)
    if cross:
        j = cross[-1]
        tail = walk[j:]
        if tail.startswith(DOWN):
            tail = reflect(tail)
        return TwoColoredBridge(walk[:j], meander_to_bridge(tail))
    if not walk:
        return TwoColoredBridge("", "")
    if walk.startswith(UP):
        return TwoColoredBridge(meander_to_bridge(walk), "")
    return TwoColoredBridge("", meander_to_bridge(reflect(walk)))


# -- marked peaks and bridges starting with a down step -----------------------


def _blocks(pre, post, indices):
    """``D_i = U L_i D R_i`` for 1-based ``indices``; ``post`` is ``[R_h..R_1]``."""
    h = len(pre)
    return [UP + pre[i - 1] + DOWN + post[h - i] for i in indices]


def _alternate(blocks, reflect_first=True):
    return "".join(reflect(b) if (k % 2 == 0) == reflect_first else b for k, b in enumerate(blocks))


def _unblock(blocks):
    """Undo ``_alternate`` on one-signed pieces; returns ``[(L_i, R_i), ...]``."""
    out = []
    for b in blocks:
        if b.startswith(DOWN):
            b = reflect(b)
        out.append(P.excursion_split(b))
    return out


def marked_peak_to_bridge(m: MarkedPeakPath) -> str:
    pre, post = P.decompose_at_peak(m.path, m.peak)
    return _alternate(_blocks(pre, post, range(1, len(pre) + 1)))


def bridge_to_marked_peak(bridge: str) -> MarkedPeakPath:
    P.check_path(bridge)
    if not P.is_bridge(bridge):
        raise NotABridge(f"{bridge!r} is not a bridge")
    if not bridge.startswith(DOWN):
        raise NotStartingDown(f"{bridge!r} does not start with a down step")
    parts = _unblock(P.one_signed_components(bridge))
    pre = [L for L, _ in parts]
    post = [R for _, R in reversed(parts)]
    return MarkedPeakPath(P.assemble(pre, post), sum(len(L) + 1 for L in pre) - 1)


# -- height-labeled peaks and marked left-to-right maxima --------------------


def height_labeled_to_marked_bridge(x: HeightLabeledPath) -> MarkedBridge:
    pre, post = P.decompose_at_peak(x.path, x.peak)
    h, mu = len(pre), x.label
    if not 1 <= mu <= h:
        raise LabelOutOfRange(f"label {mu} not in 1..{h}")
    left = "".join(reflect(L) + UP for L in pre[:mu])
    right = "".join(DOWN + R for R in post[h - mu:])
    tail = _alternate(_blocks(pre, post, range(mu + 1, h + 1)))
    return MarkedBridge(left + right + tail, len(left) - 1)


def marked_bridge_to_height_labeled(y: MarkedBridge) -> HeightLabeledPath:
    path, p = y.path, y.peak
    mu = y.height
    after = [c for c in P.crossings(path) if c > p]
    head_end = after[0] if after else len(path)
    head, tail = path[:head_end], path[head_end:]
    neg_pre = P.first_passage_up_segments(head[:p + 1], mu)
    post_head = P.first_passage_down_segments(head[p + 1:], mu)
    tail_parts = _unblock(P.split_at(tail, [c - head_end for c in after[1:]]))
    pre = [reflect(s) for s in neg_pre] + [L for L, _ in tail_parts]
    post = [R for _, R in reversed(tail_parts)] + post_head
    dyck = P.assemble(pre, post)
    return HeightLabeledPath(dyck, sum(len(L) + 1 for L in pre) - 1, mu)


# -- marked left-to-right maxima and two-colored bridges --------------------


def _marked_bridge_to_two_colored_structural(y: MarkedBridge) -> TwoColoredBridge:
    path, p, h = y.path, y.peak, y.height
    j = P.first_return_after(path, p)
    head, color2 = path[:j], path[j:]
    neg_pre = P.first_passage_up_segments(head[:p + 1], h)
    post = P.first_passage_down_segments(head[p + 1:], h)  # [R_h, ..., R_2, ""]
    pre = [reflect(s) for s in neg_pre]
    blocks = _blocks(pre, post, range(2, h + 1))
    color1 = neg_pre[0] + _alternate(blocks, reflect_first=False)
    return TwoColoredBridge(color1, color2)


def _two_colored_to_marked_bridge_structural(t: TwoColoredBridge) -> MarkedBridge:
    color1 = t.first
    comps = P.one_signed_components(color1)
    if color1.startswith(DOWN):
        first_neg, comps = comps[0], comps[1:]
    else:
        first_neg = ""
    parts = _unblock(comps)  # (L_i, R_i) for i = 2..h
    left = first_neg + UP + "".join(reflect(L) + UP for L, _ in parts)
    right = "".join(DOWN + R for _, R in reversed(parts)) + DOWN
    return MarkedBridge(left + right + t.second, len(left) - 1)


def two_colored_statistic(t: TwoColoredBridge) -> int:
    """Color-1 statistic matched with (marked height - 1)."""
    return P.signed_crossing_count(t.first)


def iter_marked_bridges(length: int):
    for b in P.iter_paths(PathClass.BRIDGE, length):
        for pk in P.strict_ltr_maxima(b):
            yield MarkedBridge(b, pk.up_index)


def iter_two_colored(length: int):
    """Ordered by length of the first part, then each part canonically."""
    if length % 2:
        return
    for k in range(0, length + 1, 2):
        for a in P.iter_paths(PathClass.BRIDGE, k):
            for b in P.iter_paths(PathClass.BRIDGE, length - k):
                yield TwoColoredBridge(a, b)


@lru_cache(maxsize=32)
def _statistic_classes(n: int):
    """Position tables for rank transfer at composition size ``n``."""
    marked: dict[int, list] = {}
    for y in iter_marked_bridges(2 * n):
        marked.setdefault(y.height, []).append(y)
    colored: dict[int, list] = {}
    for t in iter_two_colored(2 * n - 2):
        colored.setdefault(two_colored_statistic(t) + 1, []).append(t)
    for h in set(marked) | set(colored):
        a, b = marked.get(h, []), colored.get(h, [])
        if len(a) != len(b):
            raise ClassSizeMismatch(
                f"n={n}, h={h}: {len(a)} marked bridges vs {len(b)} two-colored bridges"
            )
    index_a = {y: i for ys in marked.values() for i, y in enumerate(ys)}
    index_b = {t: i for ts in colored.values() for i, t in enumerate(ts)}
    return marked, colored, index_a, index_b


def statistic_class_sizes(n: int) -> tuple[dict[int, int], dict[int, int]]:
    """``({h: #marked bridges}, {h-1: #two-colored bridges})`` at size ``n``."""
    marked: dict[int, int] = {}
    for y in iter_marked_bridges(2 * n):
        marked[y.height] = marked.get(y.height, 0) + 1
    colored: dict[int, int] = {}
    for t in iter_two_colored(2 * n - 2):
        s = two_colored_statistic(t)
        colored[s] = colored.get(s, 0) + 1
    return dict(sorted(marked.items())), dict(sorted(colored.items()))


def marked_bridge_to_two_colored(y: MarkedBridge, method: str = "structural") -> TwoColoredBridge:
    """Map a marked bridge of length 2n to a two-colored bridge of length 2n - 2.

    The marked height ``h`` becomes ``signed_crossing_count(first) + 1``.
    ``method="structural"`` cuts the bridge into passage pieces;
    ``method="rank"`` pairs the two statistic classes by canonical position
    and raises :class:`ClassSizeMismatch` if they differ in size.
    """
    if method == "structural":
        return _marked_bridge_to_two_colored_structural(y)
    if method == "rank":
        n = len(y.path) // 2
        marked, colored, index_a, _ = _statistic_classes(n)
        return colored[y.height][index_a[y]]
    raise ValueError(f"unknown method {method!r}")


def two_colored_to_marked_bridge(t: TwoColoredBridge, method: str = "structural") -> MarkedBridge:
    if len(t) % 2:
        raise OddLength("two-colored bridge of odd total length")
    if method == "structural":
        return _two_colored_to_marked_bridge_structural(t)
    if method == "rank":
        n = len(t) // 2 + 1
        marked, _, _, index_b = _statistic_classes(n)
        return marked[two_colored_statistic(t) + 1][index_b[t]]
    raise ValueError(f"unknown method {method!r}")


# -- chain of bijections ------------------------------------------------------

CHAIN = ("3comp", "pairs", "walk", "two_colored", "marked_bridge", "height_labeled")

_FORWARD = (
    colored_to_pair,
    pair_to_walk,
    walk_to_two_colored,
    two_colored_to_marked_bridge,
    marked_bridge_to_height_labeled,
)
_BACKWARD = (
    pair_to_colored,
    walk_to_pair,
    two_colored_to_walk,
    marked_bridge_to_two_colored,
    height_labeled_to_marked_bridge,
)


def chain(obj, from_class: str, to_class: str):
    """Push ``obj`` along the chain of bijections between two families."""
    try:
        i, j = CHAIN.index(from_class), CHAIN.index(to_class)
    except ValueError:
        from .errors import UnknownClass

        raise UnknownClass(f"chain classes are {', '.join(CHAIN)}") from None
    while i < j:
        obj = _FORWARD[i](obj)
        i += 1
    while i > j:
        obj = _BACKWARD[i - 1](obj)
        i -= 1
    return obj


def validate_path_in(p: str, cls: PathClass) -> str:
    P.check_path(p)
    if not P.is_in_class(p, cls):
        raise NotInClass(f"{p!r} is not a {cls.value} path")
    return p
