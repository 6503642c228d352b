import pytest

from ribbonlab import core, enumeration


def test_tangent_numbers_prefix():
    # up/down counts: 1, 1, 2, 5, 16, 61, 272, 1385, 7936
    assert enumeration.tangent_numbers(9) == [1, 1, 2, 5, 16, 61, 272, 1385, 7936]


def test_zigzag_perm_counts():
    got = [sum(1 for _ in enumeration.zigzag_perms(n)) for n in (2, 4, 6, 8)]
    assert got == [1, 2, 16, 272]


def test_ribbon_counts_match_closed_form():
    for n in (2, 4, 6):
        counts = enumeration.count_ribbons(n)
        assert sum(1 for _ in enumeration.ribbons(n)) == counts["ribbon_count"]


def test_printed_small_counts():
    assert enumeration.count_ribbons(2)["ribbon_count"] == 4
    assert enumeration.count_ribbons(4)["ribbon_count"] == 32
    assert enumeration.count_ribbons(6)["ribbon_count"] == 1024
    assert enumeration.count_ribbons(8)["ribbon_count"] == 69632


def test_no_duplicates_and_all_valid():
    seen = set()
    for a in enumeration.ribbons(6):
        assert a not in seen
        seen.add(a)
        core.new_ribbon(a.values, a.marks)  # revalidate


def test_positive_filter():
    for a in enumeration.ribbons(4, "positive"):
        assert core.is_positive(a)
    assert sum(1 for _ in enumeration.ribbons(6, "positive")) == 16


def test_sigma_filter_strata():
    n = 6
    total = 0
    for s in range(-n, n + 1, 2):
        cnt = sum(1 for _ in enumeration.ribbons(n, ("sigma", s)))
        assert cnt == enumeration.count_ribbons(n)["per_sigma"][s]
        total += cnt
    assert total == 1024


def test_alternation_count_closed_form():
    for n in (4, 6, 8):
        alts = sum(1 for a in enumeration.ribbons(n, "positive")
                   if core.is_alternation(a))
        assert alts == enumeration.alternation_count(n)


def test_stream_count_n10_fast():
    import time
    t0 = time.time()
    assert enumeration.stream_count(10) == 2 ** 10 * 7936
    assert time.time() - t0 < 60


def test_limit_guard():
    with pytest.raises(enumeration.LimitExceeded):
        list(enumeration.zigzag_perms(40))


def test_random_ribbon_sigma_control():
    a = enumeration.random_ribbon(8, sigma=-4, seed=7)
    assert core.signature(a) == -4
    with pytest.raises(enumeration.InfeasibleSigma):
        enumeration.random_ribbon(6, sigma=3)


def test_random_ribbon_deterministic():
    assert enumeration.random_ribbon(8, seed=11) == enumeration.random_ribbon(8, seed=11)
