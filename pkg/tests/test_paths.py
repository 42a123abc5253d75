import math

import pytest
from hypothesis import given, strategies as st

from fourpow import paths as P
from fourpow.errors import InvalidPath, NoReturn, NotADyckPath, NotAPeak, NotInClass, RankOutOfRange
from fourpow.paths import PathClass, Peak

from conftest import all_walks, brute, brute_bridges, brute_dyck, brute_peaks

steps = st.text(alphabet="UD", max_size=24)


def even_steps(max_half=10):
    return st.integers(0, max_half).flatmap(lambda m: st.text(alphabet="UD", min_size=2 * m, max_size=2 * m))


@pytest.mark.parametrize(
    "p, expected",
    [("UUDD", [0, 1, 2, 1, 0]), ("", [0]), ("DU", [0, -1, 0])],
)
def test_altitudes(p, expected):
    assert P.altitudes(p) == expected


def test_class_membership_examples():
    assert P.is_in_class("UDDU", PathClass.BRIDGE)
    assert not P.is_in_class("UDDU", PathClass.DYCK)
    for cls in PathClass:
        assert P.is_in_class("", cls)


def test_enumerate_examples():
    assert P.enumerate_paths(PathClass.BRIDGE, 2) == ["UD", "DU"]
    assert P.enumerate_paths(PathClass.DYCK, 4) == ["UUDD", "UDUD"]
    assert P.enumerate_paths(PathClass.WALK, 0) == [""]
    assert P.enumerate_paths(PathClass.BRIDGE, 3) == []
    assert P.enumerate_paths(PathClass.DYCK, 5) == []


ORACLE_FILTERS = {
    PathClass.WALK: {},
    PathClass.BRIDGE: {"end_zero": True},
    PathClass.MEANDER: {"nonneg": True},
    PathClass.NEGATIVE_MEANDER: {"nonpos": True},
    PathClass.DYCK: {"end_zero": True, "nonneg": True},
    PathClass.NEGATIVE_DYCK: {"end_zero": True, "nonpos": True},
}


@pytest.mark.parametrize("cls", list(PathClass))
@pytest.mark.parametrize("length", range(0, 13))
def test_enumeration_matches_brute_force(cls, length):
    assert P.enumerate_paths(cls, length) == brute(length, **ORACLE_FILTERS[cls])


@pytest.mark.parametrize("length", range(0, 15))
def test_closed_form_counts(length):
    assert len(P.enumerate_paths(PathClass.WALK, length)) == 2**length
    if length % 2 == 0:
        m = length // 2
        assert len(P.enumerate_paths(PathClass.BRIDGE, length)) == math.comb(2 * m, m)
        assert len(P.enumerate_paths(PathClass.MEANDER, length)) == math.comb(2 * m, m)
        assert len(P.enumerate_paths(PathClass.DYCK, length)) == math.comb(2 * m, m) // (m + 1)
    for cls in PathClass:
        assert P.class_count(cls, length) == len(P.enumerate_paths(cls, length))


def test_counts_stay_exact_for_large_sizes():
    assert P.class_count(PathClass.BRIDGE, 128) == math.comb(128, 64)
    assert P.class_count(PathClass.DYCK, 128) == math.comb(128, 64) // 65
    assert P.class_count(PathClass.WALK, 128) == 2**128


@pytest.mark.parametrize(
    "p, expected",
    [("UUDD", [Peak(1, 2)]), ("UDUD", [Peak(0, 1), Peak(2, 1)]), ("DUDU", [Peak(1, 0)])],
)
def test_peaks(p, expected):
    assert P.peaks(p) == expected


@given(steps)
def test_peaks_match_oracle(p):
    assert [tuple(pk) for pk in P.peaks(p)] == brute_peaks(p)


@pytest.mark.parametrize("p, expected", [("UDDU", [2]), ("UDUD", []), ("DUUD", [2]), ("", []), ("UDUDDU", [4])])
def test_crossings(p, expected):
    assert P.crossings(p) == expected


@pytest.mark.parametrize("p, expected", [("UD", 1), ("DU", 0), ("", 0)])
def test_signed_crossing_count(p, expected):
    assert P.signed_crossing_count(p) == expected


@given(steps)
def test_signed_count_is_crossings_unless_leading_up(p):
    if not p.startswith("U"):
        assert P.signed_crossing_count(p) == len(P.crossings(p))
    else:
        assert P.signed_crossing_count(p) == len(P.crossings(p)) + 1


@pytest.mark.parametrize(
    "p, expected",
    [("UDUD", [Peak(0, 1)]), ("DUDU", []), ("UDUUDD", [Peak(0, 1), Peak(3, 2)])],
)
def test_strict_ltr_maxima(p, expected):
    assert P.strict_ltr_maxima(p) == expected


def test_strict_maxima_over_bridges_of_length_4():
    total = sum(len(P.strict_ltr_maxima(b)) for b in brute_bridges(4))
    assert total == 4


def test_first_return_after():
    assert P.first_return_after("UUDD", 2) == 4
    assert P.first_return_after("UDUD", 1) == 2
    with pytest.raises(NoReturn):
        P.first_return_after("UU", 0)


def test_reflect_examples():
    assert P.reflect("UUDD") == "DDUU"
    assert P.reflect("") == ""
    assert P.reflect(P.reflect("UDUD")) == "UDUD"


@given(steps)
def test_reflect_is_a_length_preserving_involution(p):
    q = P.reflect(p)
    assert len(q) == len(p)
    assert P.reflect(q) == p
    assert P.is_in_class(p, PathClass.DYCK) == P.is_in_class(q, PathClass.NEGATIVE_DYCK)
    assert P.is_in_class(p, PathClass.MEANDER) == P.is_in_class(q, PathClass.NEGATIVE_MEANDER)


def test_rank_examples():
    assert P.rank(PathClass.BRIDGE, "UD") == 0
    assert P.rank(PathClass.BRIDGE, "DU") == 1
    assert P.unrank(PathClass.BRIDGE, 0, 0) == ""
    # U before D puts "UU" ahead of "UD"
    assert P.enumerate_paths(PathClass.MEANDER, 2) == ["UU", "UD"]
    assert P.unrank(PathClass.MEANDER, 2, 1) == "UD"
    assert P.unrank(PathClass.MEANDER, 2, 0) == "UU"


@pytest.mark.parametrize("cls", list(PathClass))
@pytest.mark.parametrize("length", range(0, 13))
def test_rank_unrank_roundtrip(cls, length):
    listing = P.enumerate_paths(cls, length)
    for i, p in enumerate(listing):
        assert P.rank(cls, p) == i
        assert P.unrank(cls, length, i) == p


def test_rank_errors():
    with pytest.raises(NotInClass):
        P.rank(PathClass.DYCK, "DU")
    with pytest.raises(RankOutOfRange):
        P.unrank(PathClass.BRIDGE, 2, 2)
    with pytest.raises(RankOutOfRange):
        P.unrank(PathClass.BRIDGE, 2, -1)
    with pytest.raises(InvalidPath):
        P.rank(PathClass.WALK, "UXD")


@pytest.mark.parametrize(
    "p, k, pre, post",
    [
        ("UUDD", 1, ["", ""], ["", ""]),
        ("UDUD", 2, ["UD"], [""]),
        ("UDUUDD", 3, ["UD", ""], ["", ""]),
        ("UUDUDD", 1, ["", ""], ["UD", ""]),
    ],
)
def test_decompose_at_peak(p, k, pre, post):
    assert P.decompose_at_peak(p, k) == (pre, post)


def test_decompose_errors():
    with pytest.raises(NotADyckPath):
        P.decompose_at_peak("DU", 0)
    with pytest.raises(NotAPeak):
        P.decompose_at_peak("UUDD", 0)


@pytest.mark.parametrize("length", range(2, 15, 2))
def test_decomposition_reassembles(length):
    for d in brute_dyck(length):
        for i, h in brute_peaks(d):
            pre, post = P.decompose_at_peak(d, i)
            assert len(pre) == len(post) == h
            assert all(P.is_in_class(s, PathClass.DYCK) for s in pre + post)
            assert P.assemble(pre, post) == d


@pytest.mark.parametrize("length", range(1, 13))
def test_crossing_free_walks_are_one_signed(length):
    for w in all_walks(length):
        if not P.crossings(w):
            assert P.is_in_class(w, PathClass.MEANDER) or P.is_in_class(w, PathClass.NEGATIVE_MEANDER)


@given(even_steps())
def test_one_signed_components_concatenate_back(p):
    comps = P.one_signed_components(p)
    assert "".join(comps) == p
    for c in comps:
        assert not P.crossings(c)
