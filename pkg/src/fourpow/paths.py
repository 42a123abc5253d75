"""Lattice paths over up/down unit steps.

A path is a plain ``str`` over the alphabet ``{"U", "D"}``; the empty string
is the empty path.  Every function here is pure.  Canonical order is
lexicographic with ``U`` before ``D`` (note this is *not* Python's string
order, where ``"D" < "U"``).
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    InvalidPath,
    NoReturn,
    NotADyckPath,
    NotAPeak,
    NotInClass,
    RankOutOfRange,
)

UP = "U"
DOWN = "D"

_FLIP = str.maketrans("UD", "DU")


class Step(str, enum.Enum):
    UP = UP
    DOWN = DOWN

    @property
    def delta(self) -> int:
        return 1 if self is Step.UP else -1


class PathClass(enum.Enum):
    WALK = "walk"
    BRIDGE = "bridge"
    MEANDER = "meander"
    NEGATIVE_MEANDER = "negative_meander"
    DYCK = "dyck"
    NEGATIVE_DYCK = "negative_dyck"

    @property
    def ends_at_zero(self) -> bool:
        return self in (PathClass.BRIDGE, PathClass.DYCK, PathClass.NEGATIVE_DYCK)

    @property
    def nonnegative(self) -> bool:
        return self in (PathClass.MEANDER, PathClass.DYCK)

    @property
    def nonpositive(self) -> bool:
        return self in (PathClass.NEGATIVE_MEANDER, PathClass.NEGATIVE_DYCK)


class Peak(NamedTuple):
    up_index: int
    height: int


def check_path(p: str) -> str:
    if not isinstance(p, str) or p.strip("UD"):
        raise InvalidPath(f"not a U/D step string: {p!r}")
    return p


def altitudes(p: str) -> list[int]:
    out = [0]
    for s in p:
        out.append(out[-1] + (1 if s == UP else -1))
    return out


def is_in_class(p: str, cls: PathClass) -> bool:
    alts = altitudes(p)
    if cls.ends_at_zero and alts[-1] != 0:
        return False
    if cls.nonnegative and min(alts) < 0:
        return False
    if cls.nonpositive and max(alts) > 0:
        return False
    return True


def is_bridge(p: str) -> bool:
    return is_in_class(p, PathClass.BRIDGE)


def is_dyck(p: str) -> bool:
    return is_in_class(p, PathClass.DYCK)


def reflect(p: str) -> str:
    """Flip every step; an involution swapping positive and negative classes."""
    return p.translate(_FLIP)


def peaks(p: str) -> list[Peak]:
    alts = altitudes(p)
    return [Peak(i, alts[i + 1]) for i in range(len(p) - 1) if p[i] == UP and p[i + 1] == DOWN]


def peak_at(p: str, up_index: int) -> Peak:
    if not (0 <= up_index < len(p) - 1) or p[up_index] != UP or p[up_index + 1] != DOWN:
        raise NotAPeak(f"no peak with up-step index {up_index} in {p!r}")
    return Peak(up_index, altitudes(p)[up_index + 1])


def crossings(p: str) -> list[int]:
    """Indices where the path passes through 0 with a sign change.

    Touching the axis does not count and neither does the final point.
    """
    alts = altitudes(p)
    return [i for i in range(1, len(p)) if alts[i] == 0 and alts[i - 1] * alts[i + 1] == -1]


def signed_crossing_count(p: str) -> int:
    """Crossings, plus one when the path leaves the origin upwards."""
    return len(crossings(p)) + (1 if p.startswith(UP) else 0)


def strict_ltr_maxima(p: str) -> list[Peak]:
    out = []
    best = 0
    for pk in peaks(p):
        if pk.height > best:
            out.append(pk)
            best = pk.height
    return out


def first_return_after(p: str, i: int) -> int:
    alts = altitudes(p)
    for j in range(i + 1, len(alts)):
        if alts[j] == 0:
            return j
    raise NoReturn(f"{p!r} does not return to the axis after position {i}")


def returns(p: str) -> list[int]:
    """Interior indices where the path is back at altitude 0."""
    alts = altitudes(p)
    return [i for i in range(1, len(p)) if alts[i] == 0]


def split_at(p: str, cuts: Sequence[int]) -> list[str]:
    """Cut ``p`` at the given positions; an empty path yields no pieces."""
    if not p:
        return []
    bounds = [0, *cuts, len(p)]
    return [p[a:b] for a, b in zip(bounds, bounds[1:])]


def one_signed_components(p: str) -> list[str]:
    """Maximal pieces between consecutive crossings."""
    return split_at(p, crossings(p))


# -- enumeration, counting and ranking ---------------------------------------


@lru_cache(maxsize=None)
def _completions(cls: PathClass, remaining: int, altitude: int) -> int:
    if cls.nonnegative and altitude < 0:
        return 0
    if cls.nonpositive and altitude > 0:
        return 0
    if cls.ends_at_zero and abs(altitude) > remaining:
        return 0
    if remaining == 0:
        return 1
    return _completions(cls, remaining - 1, altitude + 1) + _completions(cls, remaining - 1, altitude - 1)


def class_count(cls: PathClass, length: int) -> int:
    """Number of paths of ``cls`` with ``length`` steps, without listing them."""
    if length < 0:
        return 0
    return _completions(cls, length, 0)


def iter_paths(cls: PathClass, length: int) -> Iterator[str]:
    if class_count(cls, length) == 0:
        return

    steps: list[str] = []

    def rec(alt: int) -> Iterator[str]:
        rem = length - len(steps)
        if rem == 0:
            yield "".join(steps)
            return
        for s, d in ((UP, 1), (DOWN, -1)):
            if _completions(cls, rem - 1, alt + d):
                steps.append(s)
                yield from rec(alt + d)
                steps.pop()

    yield from rec(0)


def enumerate_paths(cls: PathClass, length: int) -> list[str]:
    return list(iter_paths(cls, length))


def rank(cls: PathClass, p: str) -> int:
    check_path(p)
    if not is_in_class(p, cls):
        raise NotInClass(f"{p!r} is not a {cls.value} path")
    r = 0
    alt = 0
    n = len(p)
    for i, s in enumerate(p):
        if s == DOWN:
            r += _completions(cls, n - i - 1, alt + 1)
            alt -= 1
        else:
            alt += 1
    return r


def unrank(cls: PathClass, length: int, r: int) -> str:
    total = class_count(cls, length)
    if not 0 <= r < total:
        raise RankOutOfRange(f"rank {r} outside [0, {total}) for {cls.value} paths of length {length}")
    out = []
    alt = 0
    for i in range(length):
        c = _completions(cls, length - i - 1, alt + 1)
        if r < c:
            out.append(UP)
            alt += 1
        else:
            r -= c
            out.append(DOWN)
            alt -= 1
    return "".join(out)


# -- passage decompositions --------------------------------------------------


def last_passage_segments(prefix: str, h: int) -> list[str]:
    """Split ``prefix = S_1 U S_2 U ... S_h U`` at the last exit of each level.

    ``prefix`` must run from altitude 0 to ``h``.  The pieces are bridges
    that return to their own starting level.
    """
    alts = altitudes(prefix)
    out = []
    prev = -1
    for k in range(h):
        t = max(j for j in range(len(prefix)) if alts[j] == k)
        out.append(prefix[prev + 1:t])
        prev = t
    return out


def first_passage_up_segments(prefix: str, h: int) -> list[str]:
    """Split ``prefix = S_1 U S_2 U ... S_h U`` at the first arrival at each level.

    Each ``S_k`` stays weakly below level ``k - 1``.  Requires the last point
    of ``prefix`` to be the first visit to altitude ``h``.
    """
    alts = altitudes(prefix)
    out = []
    start = 0
    for k in range(1, h + 1):
        f = alts.index(k)
        out.append(prefix[start:f - 1])
        start = f
    return out


def first_passage_down_segments(suffix: str, h: int) -> list[str]:
    """Split ``suffix = D T_h D T_{h-1} ... D T_1`` read from altitude ``h``.

    Returned in the order ``[T_h, ..., T_1]``; ``T_1`` is everything after
    the first arrival at 0.
    """
    alts = [h + a for a in altitudes(suffix)]
    firsts = [alts.index(k) for k in range(h - 1, -1, -1)]
    ends = [f - 1 for f in firsts[1:]] + [len(suffix)]
    return [suffix[f:e] for f, e in zip(firsts, ends)]


def decompose_at_peak(p: str, up_index: int) -> tuple[list[str], list[str]]:
    """Cut a Dyck path at a peak into last-passage and first-passage pieces.

    Returns ``([L_1, ..., L_h], [R_h, ..., R_1])`` with
    ``p == L_1 U L_2 U ... L_h U D R_h D ... D R_1``; all pieces are Dyck paths.
    """
    check_path(p)
    if not is_dyck(p):
        raise NotADyckPath(f"{p!r} is not a Dyck path")
    pk = peak_at(p, up_index)
    left, right = p[:up_index + 1], p[up_index + 1:]
    return last_passage_segments(left, pk.height), first_passage_down_segments(right, pk.height)


def assemble(pre: Sequence[str], post: Sequence[str]) -> str:
    """Inverse of :func:`decompose_at_peak`."""
    return "".join(s + UP for s in pre) + "".join(DOWN + s for s in post)


def excursion_split(block: str) -> tuple[str, str]:
    """Write a nonempty Dyck path as ``U inner D rest``."""
    j = first_return_after(block, 0)
    return block[1:j - 1], block[j:]
