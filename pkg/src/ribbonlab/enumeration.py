"""Generation and counting of zig-zag permutations and ribbons."""
from __future__ import annotations

import math
import random
from itertools import product

from .core import DiscreteRibbon, new_ribbon

MAX_N = 16


class LimitExceeded(ValueError):
    pass


class InfeasibleSigma(ValueError):
    pass


def tangent_numbers(up_to):
    """Euler up/down numbers A_1..A_up_to by the boustrophedon recurrence."""
    out = []
    prev = [1]
    for n in range(1, up_to + 1):
        cur = [0]
        for k in range(1, n + 1):
            cur.append(cur[k - 1] + prev[n - k])
        out.append(cur[n])
        prev = cur
    return out


def zigzag_perms(n, limit=MAX_N):
    """All cyclic zig-zag permutations of 1..n with value 1 first."""
    if n % 2 != 0 or n < 2:
        raise ValueError("n must be even and >= 2")
    if n > limit:
        raise LimitExceeded("n=%d exceeds the configured maximum %d" % (n, limit))
    if n == 2:
        yield (1, 2)
        return

    # value 1 sits at index 0, so even indices are minima and odd ones
    # maxima; with n even the wrap-around comes for free, leaving only
    # the rise/fall constraint between consecutive entries.
    def extend(prefix, used):
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        rising = i % 2 == 1
        for v in range(2, n + 1):
            if v in used:
                continue
            if rising != (v > prefix[-1]):
                continue
            prefix.append(v)
            used.add(v)
            yield from extend(prefix, used)
            prefix.pop()
            used.remove(v)

    yield from extend([1], {1})


def ribbons(n, filter=None, limit=MAX_N):
    """Every canonical ribbon with n nodes, optionally filtered.

    filter: None | "positive" | "negative" | ("sigma", s) | callable
    """
    for perm in zigzag_perms(n, limit):
        for marks in product((1, -1), repeat=n):
            a = DiscreteRibbon(perm, marks)
            if filter == "positive" and not all(m > 0 for m in marks):
                continue
            if filter == "negative" and not all(m < 0 for m in marks):
                continue
            if isinstance(filter, tuple) and filter[0] == "sigma" and sum(marks) != filter[1]:
                continue
            if callable(filter) and not filter(a):
                continue
            yield a


def count_ribbons(n):
    """Closed-form counts for n nodes."""
    up_down = tangent_numbers(max(1, n - 1))
    a = up_down[n - 2]
    per_sigma = {}
    for s in range(-n, n + 1, 2):
        per_sigma[s] = math.comb(n, (n + s) // 2) * a
    return {
        "zigzag_count": a,
        "ribbon_count": (2 ** n) * a,
        "positive_count": a,
        "per_sigma": per_sigma,
    }


def alternation_count(n):
    """Positive alternations with n nodes."""
    return math.factorial(n // 2) * math.factorial(n // 2 - 1)


def ladder_shape_count(n):
    """General (marked) ladders with n nodes."""
    return 2 ** (3 * n // 2 - 1)


def stream_count(n, filter=None):
    """Count ribbons by enumeration.  At n=10 the markings are counted
    arithmetically per permutation to keep the tally under a minute."""
    if n >= 10 and filter is None:
        return sum(2 ** n for _ in zigzag_perms(n))
    return sum(1 for _ in ribbons(n, filter))


def random_zigzag_perm(n, rng):
    """Uniform canonical zig-zag permutation by rejection sampling."""
    while True:
        rest = list(range(2, n + 1))
        rng.shuffle(rest)
        perm = [1] + rest
        ok = all(
            (perm[i] > perm[i - 1] and perm[i] > perm[(i + 1) % n])
            or (perm[i] < perm[i - 1] and perm[i] < perm[(i + 1) % n])
            for i in range(n)
        )
        if ok:
            return tuple(perm)


def random_ribbon(n, sigma=None, seed=None):
    if n % 2 != 0 or n < 2 or n > MAX_N:
        raise ValueError("n must be even, 2 <= n <= %d" % MAX_N)
    rng = random.Random(seed)
    perm = random_zigzag_perm(n, rng)
    if sigma is None:
        marks = [rng.choice((1, -1)) for _ in range(n)]
    else:
        if sigma % 2 != 0 or abs(sigma) > n:
            raise InfeasibleSigma("sigma=%r is not reachable at n=%d" % (sigma, n))
        plus = (n + sigma) // 2
        marks = [1] * plus + [-1] * (n - plus)
        rng.shuffle(marks)
    return new_ribbon(perm, marks)


def gamma_distribution(n, gamma_of):
    """Histogram of gamma over all ribbons with n nodes."""
    hist = {}
    for a in ribbons(n):
        g = gamma_of(a)
        hist[g] = hist.get(g, 0) + 1
    return hist


def realizable_pairs(n, gamma_of):
    """All (sigma, gamma) pairs observed at n nodes."""
    seen = set()
    for a in ribbons(n):
        seen.add((sum(a.marks), gamma_of(a)))
    return seen
