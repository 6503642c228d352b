import pytest
from hypothesis import given, settings, strategies as st

from ribbonlab import core, enumeration, solver


def R(text):
    return core.parse_ribbon(text)


def test_two_node_ribbons():
    assert solver.gamma(R("(1+,2+)")) == 0
    assert solver.gamma(R("(1+,2-)")) == 1
    assert solver.gamma(R("(1-,2+)")) == 1
    assert solver.gamma(R("(1-,2-)")) == 2


def test_example_ribbon_vector():
    a = R("(1+,6+,2-,4+,3+,5-)")
    assert solver.invariant_vector(a) == (2, 2, 1, 1)


def test_all_negative_four_nodes():
    for a in enumeration.ribbons(4, "negative"):
        assert solver.invariant_vector(a)[:3] == (3, 3, 3)


def test_ladder_example():
    assert solver.gamma(R("(1+,3+,2+,5+,4+,7+,6-,9+,8+,10+)")) == 3


def test_alternation_base_vector():
    alt = core.new_ribbon((1, 4, 2, 5, 3, 6), [1] * 6)
    assert solver.invariant_vector(alt) == (1, 2, 0, 1)


def test_positive_ladder_vector():
    lad = core.new_ribbon(core.canonical_ladder(8), [1] * 8)
    assert solver.invariant_vector(lad) == (3, 3, 0, 3)


def test_short_cancellation_preserves_invariants():
    for a in enumeration.ribbons(6):
        b = core.short_cancel_all(a)
        assert solver.invariant_vector(a) == solver.invariant_vector(b)


def test_binary_split_subadditive_with_equality_somewhere():
    # Lemma: gamma(a) <= gamma(p1)+gamma(p2) for every proper split,
    # with equality attained at the minimizer over all-positive ribbons
    for a in enumeration.ribbons(6, "positive"):
        if core.is_alternation(a) or a.n == 2:
            continue
        g = solver.gamma(a)
        best = None
        for level, arc_i, arc_j in solver.all_binary_cuts(a):
            parts = solver.binary_split(a, level, arc_i, arc_j)
            tot = sum(solver.gamma(p) for p in parts)
            assert g <= tot
            best = tot if best is None else min(best, tot)
        if best is not None:
            assert best == g


def test_delta_cluster_numbers():
    lad = core.new_ribbon(core.canonical_ladder(8), [1] * 8)
    assert solver.delta(lad) == 3
    assert solver.delta0(lad) == 3
    alt = core.new_ribbon((1, 4, 2, 5, 3, 6), [1] * 6)
    assert solver.delta(alt) == 1
    assert solver.delta(R("(1+,2+)")) == 0


def test_delta0_skips_negative_levels():
    a = R("(1+,6+,2-,4+,3+,5-)")
    assert solver.delta0(a) <= solver.gamma(a)


def test_bundle_fields():
    b = solver.invariant_bundle(R("(1+,6+,2-,4+,3+,5-)"))
    assert (b.gamma, b.gamma0, b.gamma_ext, b.gamma_sad) == (2, 2, 1, 1)
    assert b.sigma == 2 and b.index == 0
    assert b.beta_lower <= b.gamma == b.beta_upper
    assert not b.beta_exact


def test_trace_replays_weight():
    for text in ("(1+,6+,2-,4+,3+,5-)", "(1-,3-,2-,4-)", "(1+,3+,2+,4+)"):
        a = R(text)
        for kind in solver.KINDS:
            t = solver.solve_trace(a, kind)
            assert t.total() == solver.invariant(a, kind)


def test_zero_detection_jordan_ribbon():
    zero, witness = solver.is_gamma_zero(R("(1+,6+,2-,4+,3-,5+)"))
    assert zero and witness


def test_zero_detection_sigma_guard():
    zero, reason = solver.is_gamma_zero(R("(1-,2-)"))
    assert not zero
    assert reason == "sigma"


def test_ladder_closed_form_matches_solver_n6():
    values = core.canonical_ladder(6)
    for bits in range(2 ** 6):
        marks = [1 if bits >> i & 1 else -1 for i in range(6)]
        a = core.new_ribbon(values, marks)
        try:
            want = solver.ladder_closed_form(a, "gamma")
        except core.PreconditionViolated:
            continue
        assert solver.gamma(a) == want


def test_ladder_closed_form_rejects_other_shapes():
    with pytest.raises(core.NotCanonicalLadder):
        solver.ladder_closed_form(R("(1+,4+,2+,3+)"), "gamma")


def test_cl_plus_plus_examples():
    lad = core.new_ribbon(core.canonical_ladder(8), [1] * 8)
    assert solver.cl_plus_plus(lad) == 2


def test_check_bounds_all_pass_small():
    for a in enumeration.ribbons(4):
        b = solver.invariant_bundle(a)
        assert all(ok for _, ok in solver.check_bounds(b, a.n))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 30))
def test_gamma_range_random_n10(seed):
    a = enumeration.random_ribbon(10, seed=seed)
    g = solver.gamma(a)
    assert 0 <= g <= 10 // 2 + 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 30))
def test_invert_preserves_vector_random(seed):
    a = enumeration.random_ribbon(8, seed=seed)
    assert solver.invariant_vector(core.invert(a)) == solver.invariant_vector(a)
