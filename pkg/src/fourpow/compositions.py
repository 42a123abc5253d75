"""Integer compositions and 3-colored compositions.

A composition is a tuple of positive ints.  A colored composition is a tuple
of ``(value, color)`` pairs with colors in ``{1, 2, 3}`` and the final part of
color 1.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple

from .errors import InvalidColoredComposition, InvalidComposition, MalformedBits, RankOutOfRange, SizeMismatch

Composition = tuple  # tuple[int, ...]
ColoredComposition = tuple  # tuple[tuple[int, int], ...]

COLORS = (1, 2, 3)


class CompositionPair(NamedTuple):
    first: tuple
    second: tuple

    @property
    def size(self) -> int:
        return sum(self.first)


def check_composition(parts: Iterable[int]) -> tuple:
    parts = tuple(parts)
    for k in parts:
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise InvalidComposition(f"parts must be positive integers: {parts!r}")
    return parts


def check_colored(parts: Iterable) -> tuple:
    out = []
    for item in parts:
        try:
            value, color = item
        except (TypeError, ValueError):
            raise InvalidColoredComposition(f"expected (value, color) pairs, got {item!r}") from None
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise InvalidColoredComposition(f"part value must be a positive integer: {item!r}")
        if color not in COLORS:
            raise InvalidColoredComposition(f"part color must be 1, 2 or 3: {item!r}")
        out.append((value, color))
    if out and out[-1][1] != 1:
        raise InvalidColoredComposition("the last part must have color 1")
    return tuple(out)


def check_pair(first: Iterable[int], second: Iterable[int]) -> CompositionPair:
    pair = CompositionPair(check_composition(first), check_composition(second))
    if sum(pair.first) != sum(pair.second):
        raise SizeMismatch(f"compositions of different sizes: {sum(pair.first)} vs {sum(pair.second)}")
    if not pair.first:
        raise SizeMismatch("a composition pair needs size at least 1")
    return pair


def iter_compositions(n: int) -> Iterator[tuple]:
    """Compositions of ``n`` in lexicographic order of their parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in iter_compositions(n - first):
            yield (first, *rest)


def enumerate_compositions(n: int) -> list[tuple]:
    return list(iter_compositions(n))


def iter_3compositions(n: int) -> Iterator[tuple]:
    for parts in iter_compositions(n):
        if not parts:
            yield ()
            continue
        for colors in itertools.product(COLORS, repeat=len(parts) - 1):
            yield tuple(zip(parts, (*colors, 1)))


def enumerate_3compositions(n: int) -> list[tuple]:
    return list(iter_3compositions(n))


def to_bits(parts: Iterable[int]) -> str:
    """Each part ``k`` becomes ``k - 1`` zeros followed by a one."""
    return "".join("0" * (k - 1) + "1" for k in check_composition(parts))


def from_bits(bits: str) -> tuple:
    if bits.strip("01"):
        raise MalformedBits(f"not a bit string: {bits!r}")
    if bits and not bits.endswith("1"):
        raise MalformedBits(f"bit string must end with 1: {bits!r}")
    return tuple(len(run) + 1 for run in bits.split("1")[:-1])


def composition_rank(parts: Iterable[int]) -> int:
    """Position of ``parts`` in :func:`enumerate_compositions` order."""
    bits = to_bits(parts)[:-1]
    # lex order on parts puts a cut (1) before a continuation (0)
    return int(bits.translate(str.maketrans("01", "10")), 2) if bits else 0


def composition_unrank(n: int, r: int) -> tuple:
    if n == 0:
        if r != 0:
            raise RankOutOfRange(f"rank {r} out of range for compositions of {n}")
        return ()
    if not 0 <= r < 2 ** (n - 1):
        raise RankOutOfRange(f"rank {r} out of range for compositions of {n}")
    bits = format(r, f"0{n - 1}b").translate(str.maketrans("01", "10")) if n > 1 else ""
    return from_bits(bits + "1")
