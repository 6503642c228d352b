"""Named verification suites tying solver, oracle and enumeration together.

Each suite re-checks a family of exact identities over the exhaustive
small-n corpus, plus a seeded sample two sizes up where that is cheap.
Failures carry the offending ribbon and the violated clause; the first
reported failure is lex-minimal.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import core, enumeration, oracle, solver

SUITE_NAMES = (
    "base-values", "bounds", "oracle-equivalence", "zero-detection",
    "jump-table", "closed-forms", "counting", "involutions", "semigroup",
    "realizability", "game-ladder",
)

# quadratic-in-pairs suites get a smaller default corpus
DEFAULT_N = {"jump-table": 6, "semigroup": 6}


class UnknownSuite(ValueError):
    pass


@dataclass
class Failure:
    case: str
    clause: str


@dataclass
class SuiteReport:
    suite: str
    n_max: int
    seed: int
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {
            "suite": self.suite, "n_max": self.n_max, "seed": self.seed,
            "cases": self.cases, "seconds": round(self.seconds, 3),
            "passed": self.passed,
            "failures": [{"case": f.case, "clause": f.clause} for f in self.failures],
        }


def run_suite(name, n_max=None, seed=0):
    if name not in SUITE_NAMES:
        raise UnknownSuite(name)
    if n_max is None:
        n_max = DEFAULT_N.get(name, 8)
    rep = SuiteReport(name, n_max, seed)
    t0 = time.time()
    fails = []
    _RUNNERS[name](rep, fails, n_max, random.Random(seed))
    fails.sort(key=lambda item: item[0])
    rep.failures = [f for _, f in fails]
    rep.seconds = time.time() - t0
    return rep


def _fail(fails, a, clause):
    if isinstance(a, core.DiscreteRibbon):
        fails.append((core.lex_key(a), Failure(str(a), clause)))
    else:
        fails.append(((999,), Failure("-", clause)))


def _corpus(n_max):
    for n in range(2, n_max + 1, 2):
        yield from enumeration.ribbons(n)


def _sample(n, rng, count):
    for _ in range(count):
        yield enumeration.random_ribbon(n, seed=rng.randrange(2 ** 31))


# ---------------------------------------------------------------- suites

def _base_values(rep, fails, n_max, rng):
    checks = [
        ("(1+,2+)", "gamma", 0), ("(1+,2-)", "gamma", 1),
        ("(1-,2+)", "gamma", 1), ("(1-,2-)", "gamma", 2),
        ("(1+,6+,2-,4+,3+,5-)", "gamma", 2),
        ("(1+,6+,2-,4+,3+,5-)", "gamma_sad", 1),
        ("(1+,3+,2+,5+,4+,7+,6-,9+,8+,10+)", "gamma", 3),
    ]
    for text, kind, want in checks:
        rep.cases += 1
        a = core.parse_ribbon(text)
        if solver.invariant(a, kind) != want:
            _fail(fails, a, "%s expected %d" % (kind, want))
    for a in enumeration.ribbons(4, "negative"):
        rep.cases += 1
        if solver.gamma(a) != 3:
            _fail(fails, a, "all-negative n=4 gamma expected 3")
    for n in range(4, n_max + 1, 2):
        for a in enumeration.ribbons(n, "positive"):
            if core.is_alternation(a):
                rep.cases += 1
                if solver.gamma(a) != 1:
                    _fail(fails, a, "alternation gamma expected 1")
            if core.is_ladder(a):
                rep.cases += 1
                want = n // 2 - 1
                if solver.gamma(a) != want or solver.invariant(a, "gamma0") != want:
                    _fail(fails, a, "positive ladder gamma=gamma0=n/2-1")


def _bounds(rep, fails, n_max, rng):
    seen_sigma2_gamma1 = []
    for a in _corpus(n_max):
        rep.cases += 1
        b = solver.invariant_bundle(a)
        for name, ok in solver.check_bounds(b, a.n):
            if not ok:
                _fail(fails, a, name)
        if b.sigma == 2 and b.gamma == 1:
            seen_sigma2_gamma1.append(a)
    for a in seen_sigma2_gamma1:
        _fail(fails, a, "impossible: sigma=2 with gamma=1")
    for a in _sample(n_max + 2, rng, 20):
        rep.cases += 1
        b = solver.invariant_bundle(a)
        for name, ok in solver.check_bounds(b, a.n):
            if not ok:
                _fail(fails, a, name)


def _oracle_equivalence(rep, fails, n_max, rng):
    for a in _corpus(n_max):
        rep.cases += 1
        s = oracle.survey(a)
        if tuple(solver.invariant_vector(a)) != s.minima:
            _fail(fails, a, "oracle minimum differs from solver")
            continue
        bundle = solver.invariant_bundle(a)
        if bundle.gamma0 - bundle.gamma > s.compression:
            _fail(fails, a, "gamma0-gamma exceeds compression")
        if core.is_positive(a) and s.min_levels != solver.delta(a):
            _fail(fails, a, "positive ribbon: min packing levels != delta")
        if min(r for r, c in s.by_size.items() if c) != bundle.gamma:
            _fail(fails, a, "min of count_by_size differs from gamma")
        if max(s.by_size) > 3 * a.n // 2 - 1:
            _fail(fails, a, "packing weight above 3n/2-1")
        if a.n <= 6:
            for packing in oracle.enumerate_packings(a):
                if not oracle.validate_packing(a, packing):
                    _fail(fails, a, "emitted packing fails independent check")
                    break


def _zero_detection(rep, fails, n_max, rng):
    for a in _corpus(n_max):
        rep.cases += 1
        zero, witness = solver.is_gamma_zero(a)
        if zero != (solver.gamma(a) == 0):
            _fail(fails, a, "is_gamma_zero disagrees with gamma==0")
        elif zero:
            cur = a
            for p, q, _ in witness:
                cur = core.cancel(cur, p, q)
            cur = core.short_cancel_all(cur)
            if cur != core.parse_ribbon("(1+,2+)"):
                _fail(fails, a, "witness chain does not reach the minimal ribbon")


JUMP_SETS = {
    "a": {0, -1}, "b": {0, 1}, "c": {0}, "d": {0, -1, -2}, "e": {0, 1, 2},
    "f": {0}, "g": {0, -1, -2}, "h": {0, 1, 2}, "i": {0}, "j": {0, 1, -1},
}

# Attainment is checked only where a nonzero jump is reachable at desk
# scale.  Mixed meetings and separations (classes d and e) came out as 0
# on every move in the exhaustive corpus up to n=8 and across 324k
# random n=10 ribbons; their nonzero table entries are kept as upper
# bounds only.
JUMP_ATTAINED = {
    "a": {0, -1}, "b": {0, 1}, "c": {0}, "d": {0}, "e": {0},
    "f": {0}, "g": {0, -1, -2}, "h": {0, 1, 2}, "i": {0}, "j": {0, 1, -1},
}


def _jump_case(a, fails, attained):
    g = solver.gamma(a)
    for move, cls in core.applicable_moves(a):
        eps = solver.gamma(core.apply_move(a, move)) - g
        if eps not in JUMP_SETS[cls]:
            _fail(fails, a, "move class %s jump %d outside %s" % (cls, eps, sorted(JUMP_SETS[cls])))
        else:
            attained.setdefault(cls, set()).add(eps)


def _jump_table(rep, fails, n_max, rng):
    attained = {}
    for a in _corpus(n_max):
        rep.cases += 1
        _jump_case(a, fails, attained)
    for a in _sample(n_max + 2, rng, 40):
        rep.cases += 1
        _jump_case(a, fails, attained)
    for cls, want in JUMP_ATTAINED.items():
        if attained.get(cls, set()) != want:
            missing = sorted(want - attained.get(cls, set()))
            fails.append(((999,), Failure("class " + cls, "jump values never attained: %s" % missing)))


def _closed_forms(rep, fails, n_max, rng):
    for n in range(4, n_max + 1, 2):
        values = core.canonical_ladder(n)
        for bits in range(2 ** n):
            marks = [1 if bits >> i & 1 else -1 for i in range(n)]
            a = core.new_ribbon(values, marks)
            try:
                solver.ladder_closed_form(a, "gamma")
            except core.PreconditionViolated:
                continue  # the formula needs positive extreme nodes
            rep.cases += 1
            for kind in solver.KINDS:
                if solver.invariant(a, kind) != solver.ladder_closed_form(a, kind):
                    _fail(fails, a, "ladder closed form differs (%s)" % kind)
                    break
    # additivity under connected sum, all admissible pairs
    for na in range(2, n_max, 2):
        for nb in range(2, n_max + 2 - na, 2):
            for a in enumeration.ribbons(na):
                if a.marks[a.values.index(na)] < 0:
                    continue
                va = solver.invariant_vector(a)
                for b in enumeration.ribbons(nb):
                    if b.marks[0] < 0:
                        continue
                    rep.cases += 1
                    vs = solver.invariant_vector(core.connected_sum(a, b))
                    vb = solver.invariant_vector(b)
                    if vs != tuple(x + y for x, y in zip(va, vb)):
                        _fail(fails, a, "connected sum %s not additive" % b)
    # the worked instance: a 4-node all-negative ribbon with its top node
    # turned positive, summed with the positive 6-node ladder
    a = core.new_ribbon((1, 3, 2, 4), (-1, -1, -1, 1))
    b = core.new_ribbon(core.canonical_ladder(6), (1,) * 6)
    s = core.connected_sum(a, b)
    rep.cases += 1
    got = (solver.gamma(s), solver.invariant(s, "gamma_ext"), solver.invariant(s, "gamma_sad"))
    if got != (4, 2, 2):
        _fail(fails, s, "worked sum instance expected (4,2,2), got %s" % (got,))


def _counting(rep, fails, n_max, rng):
    for n in range(2, n_max + 1, 2):
        rep.cases += 1
        counts = enumeration.count_ribbons(n)
        streamed = sum(1 for _ in enumeration.ribbons(n))
        if streamed != counts["ribbon_count"]:
            _fail(fails, None, "n=%d stream count %d != %d" % (n, streamed, counts["ribbon_count"]))
        pos = sum(1 for _ in enumeration.ribbons(n, "positive"))
        if pos != counts["positive_count"]:
            _fail(fails, None, "n=%d positive count mismatch" % n)
        for s, want in counts["per_sigma"].items():
            if sum(1 for _ in enumeration.ribbons(n, ("sigma", s))) != want:
                _fail(fails, None, "n=%d sigma=%d stratum mismatch" % (n, s))
        if n >= 4:
            alts = sum(1 for a in enumeration.ribbons(n, "positive") if core.is_alternation(a))
            if alts != enumeration.alternation_count(n):
                _fail(fails, None, "n=%d alternation count mismatch" % n)
    if n_max >= 8:
        rep.cases += 1
        if enumeration.stream_count(10) != enumeration.count_ribbons(10)["ribbon_count"]:
            _fail(fails, None, "n=10 stream count mismatch")


def _involutions(rep, fails, n_max, rng):
    for a in _corpus(n_max):
        rep.cases += 1
        if core.invert(core.invert(a)) != a or core.mark_flip_all(core.mark_flip_all(a)) != a:
            _fail(fails, a, "involution not self-inverse")
        if solver.invariant_vector(core.invert(a)) != solver.invariant_vector(a):
            _fail(fails, a, "inversion changes an invariant")
        bundle = solver.invariant_bundle(a)
        two_gamma, two_gamma0 = solver.sphere_lower_bounds(a)
        if bundle.sigma not in (2, -2) and two_gamma < 2 + abs(bundle.sigma) // 2:
            _fail(fails, a, "two-sided gamma bound")
        if two_gamma0 < abs(bundle.sigma):
            _fail(fails, a, "two-sided gamma0 bound")


def _marked_samples(n, rng, limit):
    """Seeded marked ribbons of n nodes (positive min-type origin, positive
    max-type end)."""
    out = []
    ribbons = list(enumeration.ribbons(n))
    rng.shuffle(ribbons)
    for a in ribbons:
        origins = [i for i in range(a.n)
                   if a.marks[i] > 0 and not core.is_max_node(a, i)]
        ends = [i for i in range(a.n) if a.marks[i] > 0 and core.is_max_node(a, i)]
        if origins and ends:
            out.append(core.marked(a.values, a.marks, origins[0], ends[0]))
        if len(out) >= limit:
            break
    return out


def _semigroup(rep, fails, n_max, rng):
    pool = []
    for n in range(2, n_max + 1, 2):
        pool.extend(_marked_samples(n, rng, 12))
    for a in pool:
        for b in pool:
            da, db = core.discrete_of(a), core.discrete_of(b)
            if da.n + db.n - 2 > n_max + 2:
                continue
            rep.cases += 1
            try:
                c = core.compose(a, b)
            except core.LevelCollision:
                continue
            dc = core.discrete_of(c)
            if core.signature(dc) != core.signature(da) + core.signature(db) - 2:
                _fail(fails, dc, "compose signature identity")
            for kind in solver.KINDS:
                if solver.invariant(dc, kind) > solver.invariant(da, kind) + solver.invariant(db, kind):
                    _fail(fails, dc, "compose subadditivity (%s)" % kind)
    small = [m for m in pool if core.discrete_of(m).n <= 4]
    for a in small:
        for b in small:
            for c in small:
                rep.cases += 1
                try:
                    x = core.ternary_compose(a, b, c)
                except core.LevelCollision:
                    continue
                dx = core.discrete_of(x)
                parts = [core.discrete_of(m) for m in (a, b, c)]
                if core.signature(dx) != sum(core.signature(p) for p in parts) - 4:
                    _fail(fails, dx, "ternary compose signature identity")
                for kind in solver.KINDS:
                    if solver.invariant(dx, kind) > sum(solver.invariant(p, kind) for p in parts):
                        _fail(fails, dx, "ternary subadditivity (%s)" % kind)


def _realizability(rep, fails, n_max, rng):
    for n in range(2, n_max + 1, 2):
        for values in enumeration.zigzag_perms(n):
            rep.cases += 1
            got = set()
            for bits in range(2 ** n):
                marks = [1 if bits >> i & 1 else -1 for i in range(n)]
                got.add(solver.gamma(core.new_ribbon(values, marks)))
            if not got.issuperset(range(n // 2 + 2)):
                a = core.new_ribbon(values, [1] * n)
                _fail(fails, a, "marking gammas miss part of [0, n/2+1]")


def _game_ladder(rep, fails, n_max, rng):
    from . import service
    for n in range(4, n_max + 1, 2):
        perms = [v for v in enumeration.zigzag_perms(n)
                 if core.is_ladder(core.new_ribbon(v, [1] * n))]
        for values in perms:
            # B mirrors within value pairs {2k, 2k+1}; any A pick
            # distribution leads to gamma=0
            pairs = [(2 * k, 2 * k + 1) for k in range(1, n // 2)]
            for bits in range(2 ** len(pairs)):
                rep.cases += 1
                marks = [0] * n
                marks[values.index(1)] = marks[values.index(n)] = 1
                for j, (lo, hi) in enumerate(pairs):
                    neg = lo if bits >> j & 1 else hi
                    marks[values.index(neg)] = -1
                    marks[values.index(lo + hi - neg)] = 1
                a = core.new_ribbon(values, marks)
                if solver.gamma(a) != 0:
                    _fail(fails, a, "B mirror play lost on a ladder")
            rep.cases += 1
            if service.solve_permutation(values) != "B":
                _fail(fails, core.new_ribbon(values, [1] * n), "minimax winner on ladder is not B")


_RUNNERS = {
    "base-values": _base_values,
    "bounds": _bounds,
    "oracle-equivalence": _oracle_equivalence,
    "zero-detection": _zero_detection,
    "jump-table": _jump_table,
    "closed-forms": _closed_forms,
    "counting": _counting,
    "involutions": _involutions,
    "semigroup": _semigroup,
    "realizability": _realizability,
    "game-ladder": _game_ladder,
}
