"""The splitting recursion computing gamma, gamma0, gamma_ext, gamma_sad.

All four invariants share one recursion and differ only in the weights
given to the irreducible ribbons: the minimal ribbon (1+,2+), a negative
extreme node turned positive at the cost of a touching circle, and the
positive alternations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import core
from .core import (DiscreteRibbon, NotCanonicalLadder, PreconditionViolated,
                   canonical_ladder, crossings, is_max_node, lex_key, new_ribbon,
                   node_level_crossings, parse_ribbon, short_cancel_all)

KINDS = ("gamma", "gamma0", "gamma_ext", "gamma_sad")

# per kind: weight of (1+,2+), weight of a touching circle at a negative
# extreme node, and the base value of a positive alternation with n nodes
ALPHA0_W = (0, 0, 0, 0)
TOUCH_W = (1, 1, 1, 0)


def _alternation_w(n):
    return (1, n // 2 - 1, 0, 1)


class InternalNoCandidate(RuntimeError):
    pass


_memo = {}


def clear_memo():
    _memo.clear()


def memo_size():
    return len(_memo)


def seed_memo(a, vec):
    """Preload one cached invariant vector (cache file loading)."""
    a = core.short_cancel_all(core.canonicalize(a))
    _memo[(a.values, a.marks)] = tuple(int(x) for x in vec)


def memo_items():
    """(notation, vector) pairs of everything solved so far, lex order."""
    for values, marks in sorted(_memo):
        a = core.DiscreteRibbon(values, marks)
        yield core.format_ribbon(a), _memo[(values, marks)]


# --- splitting constructions -------------------------------------------------

def _part(values, marks):
    """Rank-relabel one piece of a split; values may carry a half level."""
    order = sorted(values)
    return new_ribbon([order.index(v) + 1 for v in values], marks)


def binary_split(a, level, arc_i, arc_j):
    """Cut through the crossings on arcs i and j at the given level.

    Each part keeps its run of nodes and gains one newborn positive node
    at the cut level.  Returns (part1, part2).
    """
    n = a.n

    def piece(start, stop):
        idx = []
        t = start
        while True:
            idx.append(t)
            if t == stop:
                break
            t = (t + 1) % n
        vals = [a.values[i] for i in idx] + [level]
        mks = [a.marks[i] for i in idx] + [1]
        return _part(vals, mks)

    return piece((arc_i + 1) % n, arc_j), piece((arc_j + 1) % n, arc_i)


def proper_pairs(xs):
    """Pairs of crossings at odd distance in circle order; the direction
    alternation makes these exactly the opposite-direction pairs."""
    out = []
    for s in range(len(xs)):
        for t in range(s + 1, len(xs), 2):
            assert xs[s][1] != xs[t][1]
            out.append((xs[s][0], xs[t][0]))
    return out


def ternary_split(a, p, arc_i, arc_j):
    """Cut through node p and two crossings at its exact level.

    Node p vanishes; each of the three parts gains one newborn positive
    node at the level.  Returns the three parts, or None when a piece
    fails the extremum check (such a cut is not realizable).
    """
    n = a.n
    level = Fraction(a.values[p])

    def piece(start, stop):
        idx = []
        t = start
        while True:
            idx.append(t)
            if t == stop:
                break
            t = (t + 1) % n
        vals = [a.values[i] for i in idx] + [level]
        mks = [a.marks[i] for i in idx] + [1]
        try:
            return _part(vals, mks)
        except (core.NotZigZag, core.OddLength):
            return None

    cuts = sorted([((arc_i - p) % n, arc_i), ((arc_j - p) % n, arc_j)])
    c1, c2 = cuts[0][1], cuts[1][1]
    parts = (piece((p + 1) % n, c1), piece((c1 + 1) % n, c2), piece((c2 + 1) % n, (p - 1) % n))
    if any(x is None for x in parts):
        return None
    return parts


def all_binary_cuts(a):
    """Every (level, arc_i, arc_j) proper-pair cut at every half level."""
    for k2 in range(3, 2 * a.n, 2):
        level = Fraction(k2, 2)
        for arc_i, arc_j in proper_pairs(core.crossings(a, level)):
            yield level, arc_i, arc_j


# --- clusters and the stabbing numbers ---------------------------------------

def clusters(a):
    """Value pairs (k, k+1) with k at a minimal-type and k+1 at a
    maximal-type node."""
    pos = {v: i for i, v in enumerate(a.values)}
    out = []
    for k in range(1, a.n):
        if not is_max_node(a, pos[k]) and is_max_node(a, pos[k + 1]):
            out.append((k, k + 1))
    return out


def _stab(intervals):
    """Minimal number of points piercing a family of open intervals with
    integer endpoints; greedy on right endpoints."""
    count = 0
    last = None
    for lo, hi in sorted(intervals, key=lambda iv: iv[1]):
        if last is None or not lo < last < hi:
            last = hi - Fraction(1, 2)
            count += 1
    return count


def _arc_intervals(a):
    n = a.n
    return [(min(a.values[i], a.values[(i + 1) % n]), max(a.values[i], a.values[(i + 1) % n]))
            for i in range(n)]


def delta(a):
    if a.n == 2:
        return 0
    return _stab(_arc_intervals(a))


def delta0(a):
    if a.n == 2:
        return 0
    n = a.n
    neg_levels = {a.values[i] for i in range(n) if a.marks[i] < 0}
    fam = []
    for i in range(n):
        j = (i + 1) % n
        if a.marks[i] < 0 or a.marks[j] < 0:
            continue
        lo, hi = sorted((a.values[i], a.values[j]))
        if any(lo < v < hi for v in neg_levels):
            continue
        fam.append((lo, hi))
    return _stab(fam)


# --- the solver --------------------------------------------------------------

def _make_positive(a, p):
    marks = list(a.marks)
    marks[p] = 1
    return new_ribbon(a.values, marks)


def _pick_negative(a):
    """The negative node whose exact level has fewest crossings; a
    negative global extreme has none and is picked automatically."""
    best = None
    for p in range(a.n):
        if a.marks[p] > 0:
            continue
        k = len(node_level_crossings(a, p))
        if best is None or k < best[0]:
            best = (k, p)
    return best[1] if best else None


def _candidate_splits(a):
    """The candidate decompositions of Z for a short-cancelled ribbon.

    Yields ("leaf", weights), ("touch", p, smaller), ("ternary", p, parts)
    or ("binary", level, (part1, part2)).
    """
    n = a.n
    p = _pick_negative(a)
    if p is not None:
        if a.values[p] in (1, n):
            yield ("touch", p, _make_positive(a, p))
            return
        for arc_i, arc_j in proper_pairs(node_level_crossings(a, p)):
            parts = ternary_split(a, p, arc_i, arc_j)
            if parts is not None:
                yield ("ternary", p, parts)
        yield ("touch", p, _make_positive(a, p))
        return
    cl = clusters(a)
    if len(cl) == 1:
        yield ("leaf", ALPHA0_W if n == 2 else _alternation_w(n))
        return
    gaps = []
    for (k1, _), (k2, _) in zip(cl, cl[1:]):
        for k in range(k1 + 1, k2):
            gaps.append(Fraction(2 * k + 1, 2))
    level = min(gaps, key=lambda c: (len(crossings(a, c)), c))
    me = lex_key(a)
    for arc_i, arc_j in proper_pairs(crossings(a, level)):
        parts = binary_split(a, level, arc_i, arc_j)
        if all(lex_key(x) < me for x in parts):
            yield ("binary", level, parts)


def invariant_vector(a):
    """(gamma, gamma0, gamma_ext, gamma_sad) of a ribbon."""
    a = short_cancel_all(core.canonicalize(a))
    key = (a.values, a.marks)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    best = None
    for cand in _candidate_splits(a):
        if cand[0] == "leaf":
            vec = cand[1]
        elif cand[0] == "touch":
            sub = invariant_vector(cand[2])
            vec = tuple(s + w for s, w in zip(sub, TOUCH_W))
        else:
            subs = [invariant_vector(x) for x in cand[2]]
            vec = tuple(sum(col) for col in zip(*subs))
        best = vec if best is None else tuple(map(min, best, vec))
    if best is None:
        raise InternalNoCandidate("no split candidate for %s" % a)
    _memo[key] = best
    return best


def invariant(a, kind):
    return invariant_vector(a)[KINDS.index(kind)]


def gamma(a):
    return invariant_vector(a)[0]


@dataclass(frozen=True)
class InvariantBundle:
    gamma: int
    gamma0: int
    gamma_ext: int
    gamma_sad: int
    sigma: int
    index: int
    delta: int
    delta0: int
    touching: int
    beta_lower: int
    beta_upper: int
    beta_exact: bool


def invariant_bundle(a):
    a = core.canonicalize(a)
    g, g0, ge, gs = invariant_vector(a)
    sigma = core.signature(a)
    d0 = delta0(a)
    return InvariantBundle(
        gamma=g, gamma0=g0, gamma_ext=ge, gamma_sad=gs,
        sigma=sigma, index=1 - sigma // 2,
        delta=delta(a), delta0=d0,
        touching=(a.n - sigma) // 2 - ge,
        beta_lower=d0, beta_upper=g, beta_exact=core.is_positive(a),
    )


# --- decomposition traces ----------------------------------------------------

@dataclass
class SplitTrace:
    ribbon: DiscreteRibbon
    action: str  # leaf | touch | ternary | binary
    weight: int
    children: list = field(default_factory=list)
    detail: str = ""

    def total(self):
        return self.weight + sum(c.total() for c in self.children)


def solve_trace(a, kind):
    """The decomposition tree realizing the minimizer for one kind."""
    k = KINDS.index(kind)
    a = short_cancel_all(core.canonicalize(a))
    target = invariant_vector(a)[k]
    for cand in _candidate_splits(a):
        if cand[0] == "leaf":
            if cand[1][k] == target:
                return SplitTrace(a, "leaf", cand[1][k])
        elif cand[0] == "touch":
            if invariant_vector(cand[2])[k] + TOUCH_W[k] == target:
                t = SplitTrace(a, "touch", TOUCH_W[k], detail="node %d" % cand[1])
                t.children.append(solve_trace(cand[2], kind))
                return t
        else:
            if sum(invariant_vector(x)[k] for x in cand[2]) == target:
                t = SplitTrace(a, cand[0], 0, detail=str(cand[1]))
                t.children = [solve_trace(x, kind) for x in cand[2]]
                return t
    raise InternalNoCandidate("no candidate realizes %s on %s" % (kind, a))


# --- the gamma = 0 decision --------------------------------------------------

_zero_memo = {}


def is_gamma_zero(a):
    """Decide gamma(a) = 0 by a chain of cancellations down to (1+,2+).

    Returns (bool, witness): witness is the list of (p, q, next ribbon)
    steps when true, else a refutation tag.
    """
    a = core.canonicalize(a)
    if core.signature(a) != 2:
        return False, "sigma"
    if a.n == 2:
        return True, []
    chain = _zero_chain(a)
    if chain is None:
        return False, "exhausted"
    return True, chain


def _zero_chain(a):
    key = (a.values, a.marks)
    if key in _zero_memo:
        return _zero_memo[key]
    _zero_memo[key] = None  # cut cycles defensively; search is acyclic anyway
    result = None
    pos = {v: i for i, v in enumerate(a.values)}
    if a.marks[pos[1]] > 0 and a.marks[pos[a.n]] > 0:
        for p, q in core.cancellable_pairs(a):
            b = core.cancel(a, p, q)
            if b.n == 2:
                if b.marks == (1, 1):
                    result = [(p, q, b)]
                    break
                continue
            tail = _zero_chain(b)
            if tail is not None:
                result = [(p, q, b)] + tail
                break
    _zero_memo[key] = result
    return result


# --- ladder closed forms ------------------------------------------------------

def ladder_closed_form(a, kind):
    """Cluster-pair sign count for marked canonical ladders with positive
    extreme nodes."""
    a = core.canonicalize(a)
    n = a.n
    if list(a.values) != canonical_ladder(n):
        raise NotCanonicalLadder("values must be the canonical ladder shape")
    pos = {v: i for i, v in enumerate(a.values)}
    if a.marks[pos[1]] < 0 or a.marks[pos[n]] < 0:
        raise PreconditionViolated("extreme nodes must be positive")
    count = 0
    for k in range(1, n // 2):
        m1, m2 = a.marks[2 * k - 1], a.marks[2 * k]
        if m1 * m2 <= 0:
            continue
        if kind in ("gamma", "gamma0"):
            count += 1
        elif kind == "gamma_ext":
            count += 1 if m1 < 0 else 0
        elif kind == "gamma_sad":
            count += 1 if m1 > 0 else 0
        else:
            raise ValueError("unknown kind %r" % kind)
    return count


# --- small derived quantities -------------------------------------------------

def cl_plus_plus(a):
    """Number of value pairs (k, k+1) with k at a maximal-type node."""
    pos = {v: i for i, v in enumerate(a.values)}
    return sum(1 for k in range(1, a.n)
               if is_max_node(a, pos[k]) and not is_max_node(a, pos[k + 1]))


def primary_xi(a, node):
    """1 when the node is positive and its value sits in a counted pair."""
    if a.marks[node] < 0:
        return 0
    pos = {v: i for i, v in enumerate(a.values)}
    v = a.values[node]
    for k in (v - 1, v):
        if 1 <= k < a.n and is_max_node(a, pos[k]) and not is_max_node(a, pos[k + 1]):
            if v in (k, k + 1):
                return 1
    return 0


def sphere_lower_bounds(a):
    """(gamma(a)+gamma(a-flipped), gamma0(a)+gamma0(a-flipped))."""
    b = core.mark_flip_all(a)
    va, vb = invariant_vector(a), invariant_vector(b)
    return va[0] + vb[0], va[1] + vb[1]


# --- bound checks -------------------------------------------------------------

def check_bounds(bundle, n):
    """Evaluate every published inequality on one bundle; returns a list
    of (name, ok) pairs."""
    g, g0, ge, gs = bundle.gamma, bundle.gamma0, bundle.gamma_ext, bundle.gamma_sad
    s, d, d0, t = bundle.sigma, bundle.delta, bundle.delta0, bundle.touching
    checks = [
        ("gamma-range", 0 <= g <= n // 2 + 1),
        ("gamma-sigma-range", 1 - s // 2 <= g <= n - 1 - s // 2),
        ("gamma-touching", g <= n - 1 - s // 2 - 2 * t),
        ("gamma-delta0", g >= d0),
        ("gamma0-index", g0 >= abs(1 - s // 2)),
        ("gamma0-parity", (g0 - (1 - s // 2)) % 2 == 0),
        ("gamma0-gamma", g0 >= g),
        ("gamma-ext-sad", g >= ge + gs),
        ("ext-index", ge >= 1 - s // 2),
        ("sad-delta0", gs >= d0 + (s - n) // 2),
        ("two-sided", 1 - s // 2 + gs <= g <= -1 + s // 2 + 2 * ge),
        ("zero-needs-sigma2", g != 0 or s == 2),
        ("no-sigma2-gamma1", not (s == 2 and g == 1)),
        ("no-negative-extreme-max", not (s < 0 and g == 2 - s // 2)),
        ("gamma-delta-positive", s != n or g >= d),
        ("positive-gamma0", s != n or (g <= max(0, n // 2 - 1) and g0 == n // 2 - 1) or n == 2),
        ("negative-all", s != -n or g == g0 == ge == n // 2 + 1),
    ]
    return checks
