"""Discrete ribbon model: marked cyclic zig-zag permutations.

A ribbon is a cyclic sequence of n distinct values 1..n (n even) that
alternates between local minima and local maxima, together with a +1/-1
mark on every node.  Canonical form puts value 1 at index 0.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction


class RibbonError(ValueError):
    pass


class NotPermutation(RibbonError):
    pass


class OddLength(RibbonError):
    pass


class NotZigZag(RibbonError):
    pass


class BadMark(RibbonError):
    pass


class DuplicateLevel(RibbonError):
    pass


class NotCancellable(RibbonError):
    pass


class MoveNotApplicable(RibbonError):
    pass


class PreconditionViolated(RibbonError):
    pass


class LevelCollision(RibbonError):
    pass


class NotCanonicalLadder(RibbonError):
    pass


@dataclass(frozen=True)
class DiscreteRibbon:
    values: tuple
    marks: tuple

    @property
    def n(self):
        return len(self.values)

    def __str__(self):
        return format_ribbon(self)


def _check_alternation(values):
    n = len(values)
    for i in range(n):
        a, b, c = values[i - 1], values[i], values[(i + 1) % n]
        if not (b > a and b > c) and not (b < a and b < c):
            raise NotZigZag("value %r at index %d is not a local extremum" % (b, i))


def new_ribbon(values, marks):
    """Validate and canonicalize a (values, marks) pair."""
    values = tuple(int(v) for v in values)
    marks = tuple(int(m) for m in marks)
    n = len(values)
    if len(marks) != n:
        raise BadMark("marks length %d != values length %d" % (len(marks), n))
    if n % 2 != 0 or n < 2:
        raise OddLength("need an even number of nodes >= 2, got %d" % n)
    if sorted(values) != list(range(1, n + 1)):
        raise NotPermutation("values are not a permutation of 1..%d" % n)
    if any(m not in (1, -1) for m in marks):
        raise BadMark("marks must be +1 or -1")
    if n > 2:
        _check_alternation(values)
    shift = values.index(1)
    return DiscreteRibbon(values[shift:] + values[:shift], marks[shift:] + marks[:shift])


def canonicalize(a):
    return new_ribbon(a.values, a.marks)


def is_max_node(a, i):
    """True if node i is a local maximum."""
    n = a.n
    return a.values[i] > a.values[i - 1] and a.values[i] > a.values[(i + 1) % n]


# --- text and JSON notation -------------------------------------------------

_NODE_RE = re.compile(r"(\d+)\s*([+-])")


def format_ribbon(a):
    return "(" + ",".join("%d%s" % (v, "+" if m > 0 else "-") for v, m in zip(a.values, a.marks)) + ")"


def parse_ribbon(text):
    s = "".join(text.split())
    if not (s.startswith("(") and s.endswith(")")):
        raise RibbonError("ribbon notation must be parenthesized: %r" % text)
    values, marks = [], []
    for part in s[1:-1].split(","):
        m = _NODE_RE.fullmatch(part)
        if not m:
            raise RibbonError("bad node %r in %r" % (part, text))
        values.append(int(m.group(1)))
        marks.append(1 if m.group(2) == "+" else -1)
    return new_ribbon(values, marks)


def ribbon_to_json(a):
    return {"values": list(a.values), "marks": list(a.marks)}


def ribbon_from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    return new_ribbon(obj["values"], obj["marks"])


# --- basic quantities -------------------------------------------------------

def signature(a):
    return sum(a.marks)


def index(a):
    return 1 - signature(a) // 2


def lex_key(a):
    # +1 sorts before -1
    return (a.n, a.values, tuple(0 if m > 0 else 1 for m in a.marks))


def lex_compare(a, b):
    ka, kb = lex_key(a), lex_key(b)
    return (ka > kb) - (ka < kb)


def mark_flip_all(a):
    return DiscreteRibbon(a.values, tuple(-m for m in a.marks))


def invert(a):
    """Reverse the node order and complement every value v -> n+1-v."""
    n = a.n
    values = tuple(n + 1 - v for v in reversed(a.values))
    marks = tuple(reversed(a.marks))
    return new_ribbon(values, marks)


def is_positive(a):
    return all(m > 0 for m in a.marks)


def is_negative(a):
    return all(m < 0 for m in a.marks)


# --- crossings --------------------------------------------------------------

def crossings(a, level):
    """Arcs (i, i+1) straddling the given level, in circle order.

    Returns a list of (arc index, direction) with direction +1 when the
    arc rises through the level and -1 when it falls.
    """
    n = a.n
    out = []
    for i in range(n):
        u, w = a.values[i], a.values[(i + 1) % n]
        if u < level < w:
            out.append((i, 1))
        elif w < level < u:
            out.append((i, -1))
    return out


def node_level_crossings(a, p):
    """Arcs strictly straddling the exact value of node p."""
    return crossings(a, a.values[p])


# --- cancellations ----------------------------------------------------------

def _drop_nodes(a, dead):
    """Remove the given node indices and relabel values to ranks."""
    keep = [i for i in range(a.n) if i not in dead]
    vals = [a.values[i] for i in keep]
    order = sorted(vals)
    values = [order.index(v) + 1 for v in vals]
    marks = [a.marks[i] for i in keep]
    return new_ribbon(values, marks)


def short_cancellable_pairs(a):
    """Adjacent pairs with opposite marks whose values differ by 1."""
    out = []
    if a.n < 4:
        return out
    for i in range(a.n):
        j = (i + 1) % a.n
        if a.marks[i] * a.marks[j] < 0 and abs(a.values[i] - a.values[j]) == 1:
            out.append((i, j))
    return out


def short_cancel_all(a):
    while True:
        pairs = short_cancellable_pairs(a)
        if not pairs:
            return a
        a = _drop_nodes(a, set(pairs[0]))


def cancellable_pairs(a):
    """Pairs (p, q), p negative and q positive adjacent, with the twist
    (p, q) dominated by the next level gap in the same direction."""
    out = []
    n = a.n
    if n < 4:
        return out
    for q in range(n):
        if a.marks[q] < 0:
            continue
        for step in (1, -1):
            p = (q - step) % n
            r = (q + step) % n
            if a.marks[p] < 0 and abs(a.values[p] - a.values[q]) < abs(a.values[q] - a.values[r]):
                out.append((p, q))
    return out


def cancel(a, p, q):
    if (p, q) not in cancellable_pairs(a):
        raise NotCancellable("pair (%d, %d) is not cancellable in %s" % (p, q, a))
    return _drop_nodes(a, {p, q})


# --- elementary moves -------------------------------------------------------

@dataclass(frozen=True)
class Move:
    kind: str  # meeting | separation | bypass | birth | death | flip
    # meeting/separation/bypass: k = the lower of the two swapped values
    # birth: (arc, gap, mark_pair); death: (p, q) node pair; flip: node
    operands: tuple


def _swap_values(a, k):
    pos = {v: i for i, v in enumerate(a.values)}
    i, j = pos[k], pos[k + 1]
    values = list(a.values)
    values[i], values[j] = values[j], values[i]
    return new_ribbon(values, a.marks)


def swap_move_kind(a, k):
    """Classify the value swap k <-> k+1, or None when not applicable."""
    if k < 1 or k + 1 > a.n:
        return None
    pos = {v: i for i, v in enumerate(a.values)}
    i, j = pos[k], pos[k + 1]
    if (j - i) % a.n in (1, a.n - 1):
        return None
    ti, tj = is_max_node(a, i), is_max_node(a, j)
    if ti == tj:
        return "bypass"
    return "meeting" if ti else "separation"


def apply_move(a, move):
    if move.kind in ("meeting", "separation", "bypass"):
        (k,) = move.operands
        if swap_move_kind(a, k) != move.kind:
            raise MoveNotApplicable("%s at value %d is not applicable to %s" % (move.kind, k, a))
        return _swap_values(a, k)
    if move.kind == "flip":
        (p,) = move.operands
        marks = list(a.marks)
        marks[p] = -marks[p]
        return new_ribbon(a.values, marks)
    if move.kind == "death":
        p, q = move.operands
        if (p, q) not in short_cancellable_pairs(a) and (q, p) not in short_cancellable_pairs(a):
            raise MoveNotApplicable("nodes (%d, %d) are not a short pair in %s" % (p, q, a))
        return _drop_nodes(a, {p, q})
    if move.kind == "birth":
        arc, gap, mark_pair = move.operands
        return _birth(a, arc, gap, mark_pair)
    raise MoveNotApplicable("unknown move kind %r" % move.kind)


def _birth(a, arc, gap, mark_pair):
    """Insert a short pair on the given arc; values above gap shift by 2
    and the fresh values gap+1, gap+2 must fit strictly inside the arc."""
    n = a.n
    if not 0 <= gap <= n or mark_pair not in ((1, -1), (-1, 1)):
        raise MoveNotApplicable("bad birth operands")
    shifted = [v + 2 if v > gap else v for v in a.values]
    u, w = shifted[arc], shifted[(arc + 1) % n]
    if not (min(u, w) < gap + 1 and gap + 2 < max(u, w)):
        raise MoveNotApplicable("values %d,%d do not fit inside arc %d" % (gap + 1, gap + 2, arc))
    pair = (gap + 2, gap + 1) if u < w else (gap + 1, gap + 2)
    values = shifted[: arc + 1] + list(pair) + shifted[arc + 1:]
    marks = list(a.marks[: arc + 1]) + list(mark_pair) + list(a.marks[arc + 1:])
    return new_ribbon(values, marks)


def applicable_moves(a):
    """All elementary moves applicable to a, as (Move, class tag) pairs.

    Class tags follow the jump table: a/b meeting/separation of two
    positive nodes, c both negative, d/e mixed, f bypass of equal marks,
    g/h mixed bypass, i birth/death, j flip.  In a mixed bypass the
    moving node is the one poking past the other: at a max-type pair the
    node whose value rises, at a min-type pair the node whose value
    descends.  A positive mover is class g, a negative one class h.
    """
    pos = {v: i for i, v in enumerate(a.values)}
    out = []
    for k in range(1, a.n):
        kind = swap_move_kind(a, k)
        if kind is None:
            continue
        mk, mk1 = a.marks[pos[k]], a.marks[pos[k + 1]]
        if kind == "meeting":
            tag = "a" if mk > 0 and mk1 > 0 else ("c" if mk < 0 and mk1 < 0 else "d")
        elif kind == "separation":
            tag = "b" if mk > 0 and mk1 > 0 else ("c" if mk < 0 and mk1 < 0 else "e")
        else:
            if mk == mk1:
                tag = "f"
            else:
                mover = mk if is_max_node(a, pos[k]) else mk1
                tag = "g" if mover > 0 else "h"
        out.append((Move(kind, (k,)), tag))
    for p, q in short_cancellable_pairs(a):
        out.append((Move("death", (p, q)), "i"))
    for arc in range(a.n):
        for gap in range(a.n + 1):
            for mark_pair in ((1, -1), (-1, 1)):
                try:
                    _birth(a, arc, gap, mark_pair)
                except MoveNotApplicable:
                    continue
                out.append((Move("birth", (arc, gap, mark_pair)), "i"))
    for p in range(a.n):
        out.append((Move("flip", (p,)), "j"))
    return out


# --- connected sum ----------------------------------------------------------

def connected_sum(a, b):
    """Splice b's cycle (minus its minimal node) in place of a's maximal
    node.  Needs a's maximum and b's minimum marked positive."""
    na, nb = a.n, b.n
    i = a.values.index(na)
    j = b.values.index(1)
    if a.marks[i] < 0 or b.marks[j] < 0:
        raise PreconditionViolated("gluing nodes must be positive")
    bvals = [b.values[(j + t) % nb] + na - 2 for t in range(1, nb)]
    bmarks = [b.marks[(j + t) % nb] for t in range(1, nb)]
    values = list(a.values[:i]) + bvals + list(a.values[i + 1:])
    marks = list(a.marks[:i]) + bmarks + list(a.marks[i + 1:])
    return new_ribbon(values, marks)


# --- rigid and marked ribbons ----------------------------------------------

@dataclass(frozen=True)
class RigidRibbon:
    levels: tuple  # Fractions, pairwise distinct, cyclically alternating
    marks: tuple


def rigid(levels, marks):
    levels = tuple(Fraction(x) for x in levels)
    if len(set(levels)) != len(levels):
        raise DuplicateLevel("levels are not pairwise distinct")
    from_levels(RigidRibbon(levels, tuple(marks)))  # validates
    return RigidRibbon(levels, tuple(marks))


def from_levels(r):
    """Rank-relabel a rigid ribbon into a discrete one."""
    if len(set(r.levels)) != len(r.levels):
        raise DuplicateLevel("levels are not pairwise distinct")
    order = sorted(r.levels)
    values = [order.index(x) + 1 for x in r.levels]
    return new_ribbon(values, r.marks)


def rigid_of(a):
    return RigidRibbon(tuple(Fraction(v) for v in a.values), a.marks)


@dataclass(frozen=True)
class MarkedRibbon:
    ribbon: RigidRibbon
    origin: int  # min-type positive node index
    end: int  # max-type positive node index


def marked(levels, marks, origin, end):
    r = rigid(levels, marks)
    n = len(r.levels)
    if r.marks[origin] < 0 or r.marks[end] < 0:
        raise PreconditionViolated("origin and end must be positive")
    if not (r.levels[origin] < r.levels[(origin + 1) % n] and r.levels[origin] < r.levels[origin - 1]):
        raise PreconditionViolated("origin must be of minimal type")
    if not (r.levels[end] > r.levels[(end + 1) % n] and r.levels[end] > r.levels[end - 1]):
        raise PreconditionViolated("end must be of maximal type")
    return MarkedRibbon(r, origin, end)


def _splice(levels_a, marks_a, cut, levels_b, marks_b, entry):
    """Replace node `cut` of circle a by circle b minus node `entry`."""
    nb = len(levels_b)
    ins_lv = [levels_b[(entry + t) % nb] for t in range(1, nb)]
    ins_mk = [marks_b[(entry + t) % nb] for t in range(1, nb)]
    levels = list(levels_a[:cut]) + ins_lv + list(levels_a[cut + 1:])
    marks = list(marks_a[:cut]) + ins_mk + list(marks_a[cut + 1:])
    return levels, marks


def compose(a, b):
    """Apply end(a) to origin(b); the glued pair cancels into a crossing."""
    ra, rb = a.ribbon, b.ribbon
    shift = ra.levels[a.end] - rb.levels[b.origin]
    blev = [x + shift for x in rb.levels]
    levels, marks = _splice(ra.levels, ra.marks, a.end, blev, rb.marks, b.origin)
    if len(set(levels)) != len(levels):
        raise LevelCollision("translated levels collide; perturb an operand")
    origin = a.origin if a.origin < a.end else a.origin + len(blev) - 2
    end = a.end + ((b.end - b.origin) % len(blev)) - 1
    try:
        out = marked(levels, marks, origin, end)
    except (NotZigZag, PreconditionViolated) as e:
        raise PreconditionViolated("composition is not a valid ribbon: %s" % e)
    return out


def ternary_compose(a, b, c):
    """Glue end(a), end(b), origin(c) at one level; the three nodes merge
    into one newborn negative maximal-type node at that level."""
    ra, rb, rc = a.ribbon, b.ribbon, c.ribbon
    l0 = ra.levels[a.end]
    blev = [x + l0 - rb.levels[b.end] for x in rb.levels]
    clev = [x + l0 - rc.levels[c.origin] for x in rc.levels]

    def seg(levels, marks, skip):
        n = len(levels)
        return ([levels[(skip + t) % n] for t in range(1, n)],
                [marks[(skip + t) % n] for t in range(1, n)])

    sa, ma = seg(ra.levels, ra.marks, a.end)
    sb, mb = seg(blev, rb.marks, b.end)
    sc, mc = seg(clev, rc.marks, c.origin)
    levels = [l0] + sa + sc + sb
    marks = [-1] + ma + mc + mb
    if len(set(levels)) != len(levels):
        raise LevelCollision("translated levels collide; perturb an operand")
    origin = 1 + ((a.origin - a.end) % len(ra.levels)) - 1
    end = 1 + len(sa) + ((c.end - c.origin) % len(rc.levels)) - 1
    try:
        out = marked(levels, marks, origin, end)
    except (NotZigZag, PreconditionViolated) as e:
        raise PreconditionViolated("ternary composition is not a valid ribbon: %s" % e)
    return out


def marked_invert(a):
    r = a.ribbon
    n = len(r.levels)
    top = max(r.levels) + min(r.levels)
    levels = tuple(top - x for x in reversed(r.levels))
    marks = tuple(reversed(r.marks))
    flip = lambda i: n - 1 - i
    return MarkedRibbon(RigidRibbon(levels, marks), flip(a.end), flip(a.origin))


def discrete_of(m):
    return from_levels(m.ribbon)


# --- shape predicates -------------------------------------------------------

def is_ladder(a):
    if a.n < 4:
        return False
    return all(len(crossings(a, Fraction(2 * k + 1, 2))) <= 4 for k in range(1, a.n))


def is_alternation(a):
    if a.n < 4 or not is_positive(a):
        return False
    lows = {a.values[i] for i in range(a.n) if not is_max_node(a, i)}
    return lows == set(range(1, a.n // 2 + 1))


def canonical_ladder(n):
    """The ladder shape (1,3,2,5,4,...,n-2,n)."""
    values = [1]
    for k in range(1, n // 2):
        values += [2 * k + 1, 2 * k]
    values.append(n)
    return values


# --- weak profiles and the Rolle predicate ----------------------------------

@dataclass(frozen=True)
class WeakProfile:
    levels: tuple


def weak_profile(levels):
    levels = tuple(Fraction(x) for x in levels)
    n = len(levels)
    if n % 2 != 0 or n < 2:
        raise OddLength("need an even number of entries")
    for i in range(n):
        a, b, c = levels[i - 1], levels[i], levels[(i + 1) % n]
        if b == a or b == c:
            raise NotZigZag("adjacent entries must be distinct")
        if not (b > a and b > c) and not (b < a and b < c):
            raise NotZigZag("entry %s at index %d is not a weak extremum" % (b, i))
    return WeakProfile(levels)


def profile_counts(w):
    n = len(w.levels)
    lo, hi = min(w.levels), max(w.levels)
    s = sum(1 for x in w.levels if x == lo) + sum(1 for x in w.levels if x == hi)
    return n, s


def is_rolle(w):
    n, s = profile_counts(w)
    return s > n / 2 + 1
