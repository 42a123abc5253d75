"""Brute-force oracles shared by the tests.

None of these use the DP counters or the generators from the package, so
they stay independent of the code they check.
"""

import itertools

import pytest


def alts(p):
    out = [0]
    for s in p:
        out.append(out[-1] + (1 if s == "U" else -1))
    return out


def all_walks(length):
    # itertools.product over "UD" is lexicographic with U first
    return ["".join(t) for t in itertools.product("UD", repeat=length)]


def brute(length, *, end_zero=False, nonneg=False, nonpos=False):
    out = []
    for w in all_walks(length):
        a = alts(w)
        if end_zero and a[-1] != 0:
            continue
        if nonneg and min(a) < 0:
            continue
        if nonpos and max(a) > 0:
            continue
        out.append(w)
    return out


def brute_bridges(length):
    return brute(length, end_zero=True)


def brute_dyck(length):
    return brute(length, end_zero=True, nonneg=True)


def brute_meanders(length):
    return brute(length, nonneg=True)


def brute_peaks(p):
    a = alts(p)
    return [(i, a[i + 1]) for i in range(len(p) - 1) if p[i : i + 2] == "UD"]


def brute_compositions(n):
    """Compositions of n from subsets of the n - 1 cut points."""
    out = []
    for cuts in itertools.product((0, 1), repeat=max(n - 1, 0)):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return sorted(out)


@pytest.fixture
def oracle():
    import types

    return types.SimpleNamespace(
        alts=alts,
        walks=all_walks,
        bridges=brute_bridges,
        dyck=brute_dyck,
        meanders=brute_meanders,
        brute=brute,
        peaks=brute_peaks,
        compositions=brute_compositions,
    )
