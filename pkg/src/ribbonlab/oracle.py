"""Independent oracle: enumerate packings of critical elements.

A packing is a disjoint, non-interleaved family of iso-gons (saddle
surrogates at a half-integer level), iso-triangles (touching lines at a
negative node) and 0-gons (trapped extrema at a negative node) subject
to the covering rules below; the minimal total weight under each weight
system reproduces the corresponding ribbon invariant.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from . import core
from .core import crossings

KIND_IDX = {"gamma": 0, "gamma0": 1, "gamma_ext": 2, "gamma_sad": 3}


@dataclass(frozen=True)
class CriticalElement:
    kind: str  # isogon | isotriangle | zerogon
    level: Fraction
    anchor: int  # node index, -1 for isogons
    arcs: tuple  # arc indices carrying the crossings
    ranks: tuple  # point positions in the global circular order

    def weights(self):
        if self.kind == "isogon":
            k = len(self.arcs) // 2
            return (1, k - 1, 0, 1)
        if self.kind == "isotriangle":
            return (0, 0, 0, 0)
        return (1, 1, 1, 0)


def _odd_gap_subsets(k):
    """Index subsets of a cyclic 0..k-1 with >= 4 members and all cyclic
    gaps odd (equivalently alternating directions when directions
    alternate along the full list)."""
    out = []

    def rec(chosen, i):
        if i == k:
            if len(chosen) >= 4 and (chosen[0] + k - chosen[-1]) % 2 == 1:
                out.append(tuple(chosen))
            return
        rec(chosen, i + 1)
        if not chosen or (i - chosen[-1]) % 2 == 1:
            chosen.append(i)
            rec(chosen, i + 1)
            chosen.pop()

    rec([], 0)
    return out


class Geometry:
    """Everything about candidate elements that depends only on the
    underlying zig-zag permutation."""

    def __init__(self, values):
        self.values = tuple(values)
        n = self.n = len(values)
        shell = core.DiscreteRibbon(self.values, (1,) * n)
        # candidate crossing points, keyed (arc, level)
        points = set()
        isogon_raw = []  # (level, [(arc, dir)...], subsets)
        for k2 in range(3, 2 * n, 2):  # levels k + 1/2
            c = Fraction(k2, 2)
            xs = crossings(shell, c)
            if len(xs) >= 4:
                subs = _odd_gap_subsets(len(xs))
                if subs:
                    isogon_raw.append((c, xs, subs))
                    points.update((arc, c) for arc, _ in xs)
        tri_raw = {}  # node -> [(level, (arc_i, arc_j)), ...]
        for p in range(n):
            v = Fraction(self.values[p])
            xs = crossings(shell, v)
            cands = []
            for s in range(len(xs)):
                for t in range(s + 1, len(xs)):
                    if self._triangle_ok(p, xs[s][0], xs[t][0]):
                        cands.append((xs[s][0], xs[t][0]))
                        points.update(((xs[s][0], v), (xs[t][0], v)))
            tri_raw[p] = cands

        # global circular order: node i, then the points of arc i in the
        # direction of the arc's monotone run
        def along(arc, level):
            u, w = self.values[arc], self.values[(arc + 1) % n]
            return level if u < w else -level

        ordered = []
        for i in range(n):
            ordered.append(("node", i))
            on_arc = sorted((lv for a_, lv in points if a_ == i), key=lambda lv: along(i, lv))
            ordered.extend(("cross", i, lv) for lv in on_arc)
        self.rank = {pt: r for r, pt in enumerate(ordered)}
        self.size = len(ordered)
        self.node_ranks = sorted(self.rank[("node", i)] for i in range(n))
        self.node_at_rank = {self.rank[("node", i)]: i for i in range(n)}

        self.isogons = []
        for c, xs, subs in isogon_raw:
            for sub in subs:
                arcs = tuple(xs[i][0] for i in sub)
                ranks = tuple(sorted(self.rank[("cross", arc, c)] for arc in arcs))
                el = CriticalElement("isogon", c, -1, arcs, ranks)
                assert self._components_all_odd(ranks)
                self.isogons.append(el)
        self.isogons.sort(key=lambda e: (e.level, e.ranks))
        self.triangles = {}
        for p, cands in tri_raw.items():
            lv = Fraction(self.values[p])
            els = []
            for arc_i, arc_j in cands:
                ranks = tuple(sorted((self.rank[("node", p)],
                                      self.rank[("cross", arc_i, lv)],
                                      self.rank[("cross", arc_j, lv)])))
                els.append(CriticalElement("isotriangle", lv, p, (arc_i, arc_j), ranks))
            self.triangles[p] = els
        self.zerogon = {
            p: CriticalElement("zerogon", Fraction(self.values[p]), p, (),
                               (self.rank[("node", p)],))
            for p in range(n)
        }
        self._compat = {}

    def _triangle_ok(self, p, arc_i, arc_j):
        """All three components cut off by p and the two crossings must
        contain an odd number of nodes."""
        n = self.n
        marks = [0] * n  # nodes strictly inside each component
        b1 = (arc_i - p) % n
        b2 = (arc_j - p) % n
        lo, hi = sorted((b1, b2))
        c1 = lo  # nodes p+1 .. p+lo
        c2 = hi - lo
        c3 = n - 1 - hi
        return c1 % 2 == 1 and c2 % 2 == 1 and c3 % 2 == 1

    def _nodes_between(self, r1, r2):
        """Nodes with rank strictly inside the circular gap (r1, r2)."""
        nr = self.node_ranks
        if r1 < r2:
            return bisect_left(nr, r2) - bisect_left(nr, r1 + 1)
        return (len(nr) - bisect_left(nr, r1 + 1)) + bisect_left(nr, r2)

    def _components_all_odd(self, ranks):
        return all(self._nodes_between(ranks[i - 1], ranks[i]) % 2 == 1
                   for i in range(len(ranks)))

    def compatible(self, e, f):
        """Disjoint and non-interleaved."""
        key = (e.ranks, f.ranks)
        hit = self._compat.get(key)
        if hit is not None:
            return hit
        ok = True
        if set(e.ranks) & set(f.ranks):
            ok = False
        else:
            gaps = set()
            for r in f.ranks:
                i = bisect_left(e.ranks, r)
                gaps.add(i % len(e.ranks))
                if len(gaps) > 1:
                    ok = False
                    break
        self._compat[key] = self._compat[(f.ranks, e.ranks)] = ok
        return ok


_geometries = {}


def geometry(values):
    g = _geometries.get(values)
    if g is None:
        g = _geometries[values] = Geometry(values)
    return g


def enumerate_elements(a):
    """All candidate critical elements of a ribbon, deterministic order."""
    a = core.canonicalize(a)
    g = geometry(a.values)
    out = list(g.isogons)
    for p in range(a.n):
        if a.marks[p] < 0:
            out.extend(g.triangles[p])
            out.append(g.zerogon[p])
    return out


def enumerate_packings(a):
    """Stream every packing of a exactly once."""
    a = core.canonicalize(a)
    g = geometry(a.values)
    n = a.n
    negatives = [p for p in range(n) if a.marks[p] < 0]
    # Hopf: the critical indices of the matching extension must sum to
    # the ribbon index (a 2k-gon saddle has index 1-k, a trapped
    # extremum +1, a touching line 0)
    ribbon_index = 1 - sum(a.marks) // 2

    if not negatives and n == 2:
        yield ()  # the minimal ribbon: the empty packing is the extension
        return

    def anchor_options(p):
        return g.triangles[p] + [g.zerogon[p]]

    def packing_ok(elements):
        hopf = sum(1 if e.kind == "zerogon" else
                   1 - len(e.arcs) // 2 if e.kind == "isogon" else 0
                   for e in elements)
        if hopf != ribbon_index:
            return False
        pts = sorted((r, i) for i, e in enumerate(elements) for r in e.ranks)
        if not pts:
            return False
        for t in range(len(pts)):
            r1, e1 = pts[t - 1]
            r2, e2 = pts[t]
            if len(pts) == 1:
                cnt = len(g.node_ranks) - 1 + (g.node_at_rank.get(r1) is None)
                return cnt <= 1
            cnt = g._nodes_between(r1, r2)
            if cnt > 1:
                return False
            if cnt == 0 and e1 == e2:
                return False
        return True

    def viable(elements, iso_from):
        """No over-full gap may be left that the remaining iso-gon
        candidates cannot split."""
        pts = sorted(r for e in elements for r in e.ranks)
        if not pts:
            return True
        rest = [r for e in g.isogons[iso_from:]
                if all(g.compatible(e, f) for f in elements)
                for r in e.ranks]
        rest.sort()
        for t in range(len(pts)):
            r1, r2 = pts[t - 1], pts[t]
            if g._nodes_between(r1, r2) > 1:
                if r1 < r2:
                    have = any(r1 < r < r2 for r in rest)
                else:
                    have = any(r > r1 or r < r2 for r in rest)
                if not have:
                    return False
        return True

    def add_isogons(elements, start):
        if packing_ok(elements):
            yield tuple(elements)
        for i in range(start, len(g.isogons)):
            e = g.isogons[i]
            if all(g.compatible(e, f) for f in elements):
                elements.append(e)
                if viable(elements, i + 1):
                    yield from add_isogons(elements, i + 1)
                elements.pop()

    def assign(idx, elements):
        if idx == len(negatives):
            if viable(elements, 0):
                yield from add_isogons(elements, 0)
            return
        for e in anchor_options(negatives[idx]):
            if all(g.compatible(e, f) for f in elements):
                elements.append(e)
                yield from assign(idx + 1, elements)
                elements.pop()

    yield from assign(0, [])


def packing_weight(packing, kind):
    i = KIND_IDX[kind]
    return sum(e.weights()[i] for e in packing)


def packing_levels(packing):
    return len({e.level for e in packing})


@dataclass
class OracleSummary:
    minima: tuple  # per kind, aligned with KIND_IDX
    count: int
    by_size: dict  # gamma-weight -> packing count
    count_minimal: tuple
    compression: int
    max_saddles: int
    min_levels: int


def survey(a):
    """One pass over all packings collecting every oracle statistic."""
    minima = [None] * 4
    count_min = [0] * 4
    by_size = {}
    total = 0
    compression = 0
    saddles = 0
    min_levels = None
    for packing in enumerate_packings(a):
        total += 1
        w = tuple(sum(e.weights()[i] for e in packing) for i in range(4))
        for i in range(4):
            if minima[i] is None or w[i] < minima[i]:
                minima[i] = w[i]
                count_min[i] = 1
            elif w[i] == minima[i]:
                count_min[i] += 1
        by_size[w[0]] = by_size.get(w[0], 0) + 1
        compression = max(compression, sum(len(e.arcs) // 2 - 2 for e in packing
                                           if e.kind == "isogon"))
        saddles = max(saddles, sum(len(e.arcs) // 2 - 1 for e in packing
                                   if e.kind == "isogon"))
        lv = packing_levels(packing)
        if min_levels is None or lv < min_levels:
            min_levels = lv
    if total == 0:
        raise RuntimeError("no packing found for %s" % a)
    return OracleSummary(tuple(minima), total, by_size, tuple(count_min),
                         compression, saddles, min_levels or 0)


def oracle_invariant(a, kind):
    return survey(a).minima[KIND_IDX[kind]]


def count_packings(a):
    return survey(a).count


def count_by_size(a):
    return survey(a).by_size


def count_minimal(a, kind):
    return survey(a).count_minimal[KIND_IDX[kind]]


def compression(a):
    return survey(a).compression


def max_nondeg_saddles(a):
    return survey(a).max_saddles


def count_free_extensions(values):
    """Number of critical-points-free extensions of a zig-zag permutation:
    minimal packings of its all-negative marking."""
    a = core.new_ribbon(values, [-1] * len(values))
    return count_minimal(a, "gamma")


def validate_packing(a, packing):
    """Re-check Def 18 directly from the point ranks, independently of the
    enumeration's pruning."""
    a = core.canonicalize(a)
    g = geometry(a.values)
    # a) pairwise disjoint and non-interleaved
    for i, e in enumerate(packing):
        for f in packing[i + 1:]:
            if set(e.ranks) & set(f.ranks):
                return False
            gaps = set()
            for r in f.ranks:
                j = 0
                while j < len(e.ranks) and e.ranks[j] < r:
                    j += 1
                gaps.add(j % len(e.ranks))
            if len(gaps) != 1:
                return False
    # b) every negative node anchors exactly one triangle or 0-gon
    anchored = [e.anchor for e in packing if e.anchor >= 0]
    if sorted(anchored) != sorted(p for p in range(a.n) if a.marks[p] < 0):
        return False
    # index bookkeeping (Hopf)
    hopf = sum(1 if e.kind == "zerogon" else
               1 - len(e.arcs) // 2 if e.kind == "isogon" else 0
               for e in packing)
    if hopf != 1 - sum(a.marks) // 2:
        return False
    # c) and d) on complement components
    pts = sorted((r, i) for i, e in enumerate(packing) for r in e.ranks)
    if not pts:
        return not anchored and a.n == 2
    for t in range(len(pts)):
        (r1, e1), (r2, e2) = pts[t - 1], pts[t]
        if len(pts) == 1:
            return len(g.node_ranks) - 1 + (g.node_at_rank.get(r1) is None) <= 1
        cnt = g._nodes_between(r1, r2)
        if cnt > 1 or (cnt == 0 and e1 == e2):
            return False
    return True


def packing_to_json(packing):
    out = []
    for e in packing:
        if e.kind == "isogon":
            out.append({"kind": "isogon", "level": float(e.level), "arcs": list(e.arcs)})
        elif e.kind == "isotriangle":
            out.append({"kind": "isotriangle", "node": e.anchor, "arcs": list(e.arcs)})
        else:
            out.append({"kind": "zerogon", "node": e.anchor})
    return {"elements": out}
