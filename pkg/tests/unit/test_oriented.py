"""
Unit tests for the oriented algebra TLO_{n,k}(q).
"""

import math

import pytest

from tlrewrite.category import GenArrow, MTerm, Slice, eval_net
from tlrewrite.errors import InvalidOrientation, InvalidWord
from tlrewrite.laurent import LaurentInt
from tlrewrite.oriented import (
    CosetRep,
    OrientedFamily,
    OrientedLinComb,
    OrientedWord,
    act,
    check_orientation,
    check_oriented_confluence,
    format_oriented,
    framed_term,
    framings,
    generate_Wk,
    inversions,
    length_oracle,
    normalize_oriented,
    oriented_records,
    oriented_rules,
    parse_oriented,
    reduce_tokens,
    sector_dimension,
    sector_table,
    tokens_value,
)
from tlrewrite.oriented.cosets import orientations
from tlrewrite.util import SettingsManager

SECTORS = [(n, k) for n in range(1, 5) for k in range(n + 1)]


class TestCosets:
    """Minimal coset representatives and their lengths."""

    def test_count(self):
        assert len(generate_Wk(4, 2)) == 6

    @pytest.mark.parametrize(("n", "k"), SECTORS)
    def test_binomial_many(self, n, k):
        assert len(generate_Wk(n, k)) == math.comb(n, k)

    def test_lengths(self):
        reps = {rep.orientation: rep.length for rep in generate_Wk(4, 2)}
        assert reps["vv^^"] == 0
        assert reps["^^vv"] == 4
        assert CosetRep("v^v^", 1) in generate_Wk(4, 2)

    def test_act(self):
        assert act("v^v^", 1) == "^vv^"
        assert act("vv^^", 1) is None

    def test_act_out_of_range(self):
        with pytest.raises(InvalidOrientation, match="s_4"):
            act("v^v^", 4)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_lengths_match_bfs(self, n):
        for k in range(n + 1):
            oracle = length_oracle(n, k)
            for rep in generate_Wk(n, k):
                assert oracle[rep.orientation] == rep.length

    @pytest.mark.parametrize("n", range(2, 6))
    def test_length_changes_by_one(self, n):
        for k in range(n + 1):
            for word in orientations(n, k):
                for i in range(1, n):
                    other = act(word, i)
                    if other is not None:
                        assert abs(inversions(other) - inversions(word)) == 1

    def test_orientations_sorted(self):
        assert orientations(3, 1) == ["^^v", "^v^", "v^^"]

    @pytest.mark.parametrize(
        ("word", "message"),
        [("vx", "symbol 1"), ("v^v", "length 3"), ("vv", "2 'v'")],
    )
    def test_check_orientation(self, word, message):
        with pytest.raises(InvalidOrientation, match=message):
            check_orientation(word, 2, 1)

    def test_bad_sizes(self):
        with pytest.raises(InvalidOrientation):
            generate_Wk(2, 3)


class TestWords:
    """Framed words, their values and the expression grammar."""

    def test_tokens_roundtrip(self):
        word = OrientedWord.from_tokens(("v^", 1, "^v"))
        assert word.frames == ("v^", "^v")
        assert word.tokens() == ("v^", 1, "^v")

    def test_value_of_layer(self):
        net = OrientedWord(0, ("v^", "^v"), (1,)).value()
        assert net is not None
        assert net.pairs() == ((1, 2), (3, 4))
        assert net.scalar_exp == 0

    def test_inconsistent_layer_is_zero(self):
        assert OrientedWord(0, ("vv^", "vv^"), (1,)).value() is None

    def test_different_adjacent_frames_are_zero(self):
        assert tokens_value(("v^", "^v")) is None
        assert tokens_value(("v^", "v^", 1, "^v")) == tokens_value(("v^", 1, "^v"))

    def test_parse_with_coefficient(self):
        x = parse_oriented("(q^-1)*1[v^] e1 1[^v]", 2, 1)
        assert x.terms == {("v^", 1, "^v"): LaurentInt.monomial(-1)}

    def test_missing_frames_expand(self):
        x = parse_oriented("e1", 2, 1)
        assert len(x.terms) == 4

    def test_one_is_sum_of_idempotents(self):
        assert set(parse_oriented("1", 3, 1).terms) == {("^^v",), ("^v^",), ("v^^",)}

    def test_format(self):
        x = parse_oriented("1[v^] e1 1[^v] + (2q)*1[v^]", 2, 1)
        assert format_oriented(x) == "(2q)*1[v^] + (1)*1[v^] e1 1[^v]"
        assert oriented_records(x)[0] == {"word": "1[v^]", "coefficient": "2q"}

    def test_format_parses_back(self):
        x = parse_oriented("(q - q^-1)*1[v^] e1 1[v^] + 1[^v]", 2, 1)
        assert parse_oriented(format_oriented(x), 2, 1) == x

    def test_bad_frame(self):
        with pytest.raises(InvalidOrientation):
            parse_oriented("1[vv] e1", 2, 1)

    def test_bad_generator(self):
        with pytest.raises(InvalidWord, match="e2 out of range"):
            parse_oriented("1[v^] e2 1[^v]", 2, 1)

    def test_bad_token(self):
        with pytest.raises(InvalidWord, match="expected"):
            parse_oriented("1[v^] f1", 2, 1)

    def test_sector_mismatch(self):
        with pytest.raises(InvalidOrientation, match="sectors differ"):
            OrientedLinComb(n=2, k=1) + OrientedLinComb(n=2, k=0)


class TestRules:
    """Ground rules of TLO_{n,k}(q)."""

    def test_framings_skip_zero_layers(self):
        assert list(framings((1,), 2, 1)) == [
            ("^v", "^v"),
            ("^v", "v^"),
            ("v^", "^v"),
            ("v^", "v^"),
        ]
        assert list(framings((1,), 2, 2)) == []

    def test_families_present(self):
        system = oriented_rules(3, 1)
        families = {rule.family for rule in system.rules}
        assert {
            OrientedFamily.IDEMPOTENT,
            OrientedFamily.ANNIHILATION,
            OrientedFamily.ESQUARE,
            OrientedFamily.BRAID_UP,
            OrientedFamily.BRAID_DOWN,
        } <= families

    def test_idempotent_rules(self):
        system = oriented_rules(2, 1)
        rule = system.rules[system.rule_at(("v^", "^v"), 0)]
        assert rule.rhs is None
        rule = system.rules[system.rule_at(("v^", "v^"), 0)]
        assert rule.rhs == ("v^",)

    @pytest.mark.parametrize(("middle", "exponent"), [("v^", 1), ("^v", -1)])
    def test_esquare_exponent(self, middle, exponent):
        system = oriented_rules(2, 1)
        lhs = ("v^", 1, middle, 1, "^v")
        rule = system.rules[system.rule_at(lhs, 0)]
        assert rule.family is OrientedFamily.ESQUARE
        assert rule.rhs == ("v^", 1, "^v")
        assert rule.exponent == exponent

    def test_clockwise_convention_flips_exponent(self):
        SettingsManager.configure(bubble_convention="cw")
        system = oriented_rules(2, 1)
        rule = system.rules[system.rule_at(("v^", 1, "v^", 1, "v^"), 0)]
        assert rule.exponent == -1

    @pytest.mark.parametrize("n", range(2, 6))
    def test_esquare_exponents_are_units(self, n):
        for k in range(n + 1):
            for rule in oriented_rules(n, k, validate=False).rules:
                if rule.family is OrientedFamily.ESQUARE:
                    assert rule.exponent in {1, -1}
                else:
                    assert rule.exponent == 0

    @pytest.mark.parametrize("n", range(1, 5))
    def test_all_rules_sound(self, n):
        for k in range(n + 1):
            oriented_rules(n, k, validate=True)

    @pytest.mark.parametrize(("n", "k"), SECTORS)
    def test_locally_confluent(self, n, k):
        report = check_oriented_confluence(oriented_rules(n, k))
        assert report.confluent, report.failures


class TestNormalize:
    """Normal forms of framed combinations."""

    def test_esquare(self):
        system = oriented_rules(2, 1)
        x = parse_oriented("1[v^] e1 1[v^] e1 1[v^]", 2, 1)
        assert format_oriented(normalize_oriented(x, system)) == "(q)*1[v^] e1 1[v^]"

    def test_idempotent_collapse(self):
        system = oriented_rules(3, 1)
        x = parse_oriented("1[v^^] 1[v^^]", 3, 1)
        assert normalize_oriented(x, system).terms == {("v^^",): LaurentInt(1)}

    def test_annihilated(self):
        system = oriented_rules(3, 1)
        x = parse_oriented("1[^^v] e1 1[^^v]", 3, 1)
        assert not normalize_oriented(x, system)

    def test_reduce_tokens_zero(self):
        assert reduce_tokens(("v^", "^v"), oriented_rules(2, 1)) == (None, 0)

    def test_coefficients_fold(self):
        system = oriented_rules(2, 1)
        x = parse_oriented("(q^-1)*1[v^] e1 1[v^] e1 1[^v] + 1[v^] e1 1[^v]", 2, 1)
        assert normalize_oriented(x, system).terms == {("v^", 1, "^v"): LaurentInt(2)}

    def test_sector_mismatch(self):
        x = parse_oriented("1", 2, 1)
        with pytest.raises(InvalidOrientation):
            normalize_oriented(x, oriented_rules(2, 0))


class TestSectors:
    """Dimensions counted from normal forms against the net basis."""

    def test_n2_k1(self):
        system = oriented_rules(2, 1)
        assert sector_dimension("v^", "v^", system) == 2
        assert sector_dimension("v^", "^v", system) == 1

    def test_extreme_sector(self):
        assert sector_dimension("^^^", "^^^", oriented_rules(3, 0)) == 1

    def test_table_n2_k1(self):
        table = sector_table(oriented_rules(2, 1))
        assert [(r.source, r.target, r.dimension) for r in table.rows] == [
            ("^v", "^v", 2),
            ("^v", "v^", 1),
            ("v^", "^v", 1),
            ("v^", "v^", 2),
        ]
        assert table.total == 6
        assert table.consistent

    @pytest.mark.parametrize(("n", "k"), SECTORS)
    def test_matches_net_count(self, n, k):
        table = sector_table(oriented_rules(n, k))
        assert table.consistent, [r for r in table.rows if r.dimension != r.oracle]

    def test_bad_frame(self):
        with pytest.raises(InvalidOrientation):
            sector_dimension("vv", "v^", oriented_rules(2, 1))


class TestFramedTerm:
    """Category terms of framed words."""

    def test_single_layer(self):
        term = framed_term(("v^", "^v"), (1,))
        assert term == MTerm(
            "v^", (Slice("", GenArrow.CAP_PLUS, ""), Slice("", GenArrow.CUP_MINUS, ""))
        )

    def test_untypable_layer(self):
        assert framed_term(("vv", "v^"), (1,)) is None

    def test_middle_bubble(self):
        net = eval_net(framed_term(("v^", "v^", "v^"), (1, 1)))
        assert net.match == (2, 1, 4, 3)
        assert net.scalar_exp == 1

    def test_frame_count(self):
        with pytest.raises(InvalidWord, match="need 2 frames"):
            framed_term(("v^",), (1,))
