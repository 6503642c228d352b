from fractions import Fraction

from ribbonlab import core, enumeration, oracle, solver


def R(text):
    return core.parse_ribbon(text)


def test_alpha0_no_elements():
    assert oracle.enumerate_elements(R("(1+,2+)")) == []


def test_alpha1_single_zerogon():
    els = oracle.enumerate_elements(R("(1+,2-)"))
    assert len(els) == 1
    assert els[0].kind == "zerogon"
    packs = list(oracle.enumerate_packings(R("(1+,2-)")))
    assert len(packs) == 1


def test_alpha0_unique_empty_packing():
    assert list(oracle.enumerate_packings(R("(1+,2+)"))) == [()]


def test_alternation_n4_isogons_single_gap_level():
    alt = core.new_ribbon((1, 3, 2, 4), [1] * 4)
    els = oracle.enumerate_elements(alt)
    assert els and all(e.kind == "isogon" for e in els)
    assert len({e.level for e in els}) == 1


def test_example_gamma_weight():
    s = oracle.survey(R("(1+,6+,2-,4+,3+,5-)"))
    assert s.minima[0] == 2


def test_all_negative_four_nodes_weight():
    for a in enumeration.ribbons(4, "negative"):
        assert oracle.oracle_invariant(a, "gamma") == 3


def test_positive_ladders_unique_packing():
    for n in (4, 6, 8):
        lad = core.new_ribbon(core.canonical_ladder(n), [1] * n)
        assert oracle.count_packings(lad) == 1


def test_every_small_ribbon_has_a_packing():
    for a in enumeration.ribbons(6):
        assert oracle.count_packings(a) >= 1


def test_min_size_is_gamma():
    for a in enumeration.ribbons(6):
        s = oracle.survey(a)
        assert min(s.by_size) == solver.gamma(a)
        assert sum(s.by_size.values()) == s.count


def test_negative_ladder_minimal_count():
    for n in (4, 6, 8):
        neg = core.new_ribbon(core.canonical_ladder(n), [-1] * n)
        assert oracle.count_minimal(neg, "gamma") == 2 ** (n // 2 - 1)


def test_free_extension_lower_bound_all_negative_n6():
    for values in enumeration.zigzag_perms(6):
        assert oracle.count_free_extensions(values) >= 2 ** (6 // 2 - 1)


def test_compression_bounds_gamma0():
    for a in enumeration.ribbons(6):
        b = solver.invariant_bundle(a)
        assert b.gamma0 - b.gamma <= oracle.compression(a)


def test_saddle_budget_identity():
    # max sum (k_i - 1) over packings = gamma_ext + sigma/2 - 1 is only a
    # bound we report; at least it can never exceed n/2 - 1 saddles worth
    for a in enumeration.ribbons(6):
        assert oracle.max_nondeg_saddles(a) <= a.n // 2 + 1


def test_min_levels_equals_delta_on_positive():
    for a in enumeration.ribbons(6, "positive"):
        assert oracle.survey(a).min_levels == solver.delta(a)


def test_validate_packing_accepts_emitted():
    for a in enumeration.ribbons(4):
        for packing in oracle.enumerate_packings(a):
            assert oracle.validate_packing(a, packing)


def test_validate_packing_rejects_unanchored():
    a = R("(1+,6+,2-,4+,3+,5-)")
    assert not oracle.validate_packing(a, ())


def test_packing_json_shape():
    packs = list(oracle.enumerate_packings(R("(1+,2-)")))
    doc = oracle.packing_to_json(packs[0])
    assert doc == {"elements": [{"kind": "zerogon", "node": 1}]}


def test_enumeration_deterministic():
    a = R("(1-,3-,2-,4-)")
    one = [tuple(e.ranks for e in p) for p in oracle.enumerate_packings(a)]
    two = [tuple(e.ranks for e in p) for p in oracle.enumerate_packings(a)]
    assert one == two


def test_isogon_levels_are_half_integers():
    for e in oracle.enumerate_elements(core.new_ribbon((1, 4, 2, 5, 3, 6), [1] * 6)):
        assert e.kind == "isogon"
        assert e.level % 1 == Fraction(1, 2)
