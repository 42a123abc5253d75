import itertools

import pytest
from hypothesis import given, strategies as st

from fourpow import compositions as C
from fourpow.errors import InvalidColoredComposition, InvalidComposition, MalformedBits, RankOutOfRange

from conftest import brute_compositions


def test_enumerate_compositions_examples():
    assert C.enumerate_compositions(1) == [(1,)]
    assert C.enumerate_compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert C.enumerate_compositions(0) == [()]


@pytest.mark.parametrize("n", range(1, 17))
def test_composition_counts(n):
    comps = C.enumerate_compositions(n)
    assert len(comps) == 2 ** (n - 1)
    if n <= 12:
        assert comps == brute_compositions(n)


def brute_3compositions(n):
    out = set()
    for parts in brute_compositions(n):
        for colors in itertools.product((1, 2, 3), repeat=len(parts)):
            if colors[-1] == 1:
                out.add(tuple(zip(parts, colors)))
    return out


def test_3composition_examples():
    assert C.enumerate_3compositions(1) == [((1, 1),)]
    assert set(C.enumerate_3compositions(2)) == {((2, 1),), ((1, 1), (1, 1)), ((1, 2), (1, 1)), ((1, 3), (1, 1))}
    assert len(C.enumerate_3compositions(3)) == 16


@pytest.mark.parametrize("n", range(1, 10))
def test_3composition_counts(n):
    listing = C.enumerate_3compositions(n)
    assert len(listing) == 4 ** (n - 1)
    assert all(parts[-1][1] == 1 for parts in listing)
    if n <= 7:
        assert set(listing) == brute_3compositions(n)
    assert len(set(listing)) == len(listing)


def test_3composition_order_is_parts_then_colors():
    listing = C.enumerate_3compositions(3)
    keys = [(tuple(v for v, _ in c), tuple(k for _, k in c)) for c in listing]
    parts_order = [tuple(v for v, _ in c) for c in listing]
    assert sorted(set(parts_order), key=parts_order.index) == C.enumerate_compositions(3)
    for a, b in zip(keys, keys[1:]):
        if a[0] == b[0]:
            assert a[1] < b[1]


@pytest.mark.parametrize("parts, bits", [((2, 1), "011"), ((3,), "001"), ((1,), "1"), ((1, 1, 2), "1101")])
def test_to_bits(parts, bits):
    assert C.to_bits(parts) == bits
    assert C.from_bits(bits) == parts


@pytest.mark.parametrize("n", range(0, 13))
def test_bits_roundtrip(n):
    for c in C.enumerate_compositions(n):
        assert C.from_bits(C.to_bits(c)) == c
        assert len(C.to_bits(c)) == n


def test_from_bits_errors():
    assert C.from_bits("") == ()
    with pytest.raises(MalformedBits):
        C.from_bits("10")
    with pytest.raises(MalformedBits):
        C.from_bits("1a1")


def test_composition_validation():
    with pytest.raises(InvalidComposition):
        C.check_composition([1, 0, 2])
    with pytest.raises(InvalidColoredComposition):
        C.check_colored([(1, 2)])
    with pytest.raises(InvalidColoredComposition):
        C.check_colored([(1, 4), (1, 1)])
    assert C.check_colored([[1, 3], [2, 1]]) == ((1, 3), (2, 1))


@pytest.mark.parametrize("n", range(0, 10))
def test_composition_rank_unrank(n):
    for i, c in enumerate(C.enumerate_compositions(n)):
        assert C.composition_rank(c) == i
        assert C.composition_unrank(n, i) == c
    with pytest.raises(RankOutOfRange):
        C.composition_unrank(n, 2 ** max(n - 1, 0))


@given(st.lists(st.integers(1, 6), max_size=8))
def test_bits_have_one_set_bit_per_part(parts):
    bits = C.to_bits(parts)
    assert bits.count("1") == len(parts)
    assert C.from_bits(bits) == tuple(parts)
