"""
Unit tests for the monoidal TL category: terms, nets and rewriting modulo exchange.
"""

import pytest

from tlrewrite.category import (
    GenArrow,
    MTerm,
    Mode,
    RedexKind,
    Slice,
    canonical_order,
    compose_terms,
    end_algebra_check,
    enumerate_normal_terms,
    eval_net,
    exchange,
    exchange_equivalent,
    find_redexes,
    format_object,
    format_term,
    generator_image,
    hom_basis,
    independent,
    is_redex_free,
    jnf_image,
    jnf_image_is_normal,
    modulo_critical_pairs,
    net_to_term,
    normalize_term,
    parse_object,
    parse_term,
    rewrite_steps,
    swap,
    tensor,
    typecheck,
)
from tlrewrite.errors import BoundExceeded, InvalidTerm, InvalidWord, TypeMismatch
from tlrewrite.util import SettingsManager

CATALAN = [1, 1, 2, 5, 14, 42]

CUP_PLUS = Slice("", GenArrow.CUP_PLUS, "")
CAP_PLUS = Slice("", GenArrow.CAP_PLUS, "")
CUP_MINUS = Slice("", GenArrow.CUP_MINUS, "")
CAP_MINUS = Slice("", GenArrow.CAP_MINUS, "")

# v -> v^v -> v and v -> v^v -> v, the two zigzags on a down strand
ZIGZAG_LEFT = MTerm(
    "v", (Slice("v", GenArrow.CUP_MINUS, ""), Slice("", GenArrow.CAP_PLUS, "v"))
)
ZIGZAG_RIGHT = MTerm(
    "v", (Slice("", GenArrow.CUP_PLUS, "v"), Slice("v", GenArrow.CAP_MINUS, ""))
)


def slices_on(interface: str, mode: Mode) -> list[Slice]:
    found = []
    for gen in GenArrow:
        width = len(gen.dom)
        if gen.mode is not mode:
            continue
        for position in range(len(interface) - width + 1):
            if interface[position : position + width] == gen.dom:
                found.append(Slice.at(interface, position, gen))
    return found


def terms_up_to(domain: str, mode: Mode, depth: int) -> list[MTerm]:
    found, frontier = [], [MTerm(domain)]
    for _ in range(depth):
        frontier = [
            MTerm(domain, (*term.slices, piece))
            for term in frontier
            for piece in slices_on(term.codomain, mode)
        ]
        found.extend(frontier)
    return found


def exchange_class(term: MTerm) -> list[MTerm]:
    seen, stack = {term.slices}, [term.slices]
    while stack:
        slices = stack.pop()
        for k in range(len(slices) - 1):
            swapped = swap(slices[k], slices[k + 1])
            if swapped is None:
                continue
            other = (*slices[:k], *swapped, *slices[k + 2 :])
            if other not in seen:
                seen.add(other)
                stack.append(other)
    return [MTerm(term.domain, slices) for slices in seen]



class TestObjects:
    """Object words in both modes."""

    @pytest.mark.parametrize(
        ("text", "mode", "expected"),
        [
            ("v^v", Mode.ORIENTED, "v^v"),
            ("∅", Mode.ORIENTED, ""),
            ("", Mode.ORIENTED, ""),
            ("3", Mode.PLAIN, "ooo"),
            ("0", Mode.PLAIN, ""),
        ],
    )
    def test_parse(self, text, mode, expected):
        assert parse_object(text, mode) == expected

    def test_format(self):
        assert format_object("") == "∅"
        assert format_object("", Mode.PLAIN) == "0"
        assert format_object("ooo") == "3"
        assert format_object("^v") == "^v"

    def test_bad_symbol(self):
        with pytest.raises(InvalidTerm, match="symbol 1"):
            parse_object("vx", Mode.ORIENTED)

    def test_plain_needs_integer(self):
        with pytest.raises(InvalidTerm, match="nonnegative integer"):
            parse_object("v", Mode.PLAIN)

    def test_generator_types(self):
        assert GenArrow.CUP_MINUS.cod == "^v"
        assert GenArrow.CAP_PLUS.dom == "v^"
        assert GenArrow.CAP.is_cap
        assert not GenArrow.CUP.is_cap
        assert GenArrow.CUP.mode is Mode.PLAIN


class TestTerms:
    """Typing, parsing and the monoidal operations."""

    def test_identity_typechecks(self):
        verdict = typecheck(MTerm("v^"))
        assert verdict.ok
        assert verdict.codomain == "v^"

    def test_bubble_typechecks(self):
        verdict = typecheck(MTerm("", (CUP_PLUS, CAP_PLUS)))
        assert verdict.ok
        assert verdict.codomain == ""

    def test_wrong_cap_rejected(self):
        verdict = typecheck(MTerm("", (CUP_MINUS, CAP_PLUS)))
        assert not verdict.ok
        assert verdict.index == 1
        assert "^v" in verdict.message

    def test_parse_and_format(self):
        text = "id v|cup-|id ∅; id ∅|cap+|id v"
        term = parse_term(text, Mode.ORIENTED, "v")
        assert term == ZIGZAG_LEFT
        assert format_term(term) == text

    def test_parse_identity(self):
        assert parse_term("id v^", Mode.ORIENTED, "v^") == MTerm("v^")
        assert parse_term("", Mode.ORIENTED, "v") == MTerm("v")

    def test_parse_plain(self):
        term = parse_term("id 1|cup|id 0; id 0|cap|id 1", Mode.PLAIN, "o")
        assert term.codomain == "o"
        assert format_term(term) == "id 1|cup|id 0; id 0|cap|id 1"

    def test_parse_rejects_mistyped_chain(self):
        with pytest.raises(TypeMismatch, match="slice 1"):
            parse_term("id ∅|cup-|id ∅; id ∅|cap+|id ∅", Mode.ORIENTED, "")

    def test_parse_rejects_identity_on_other_object(self):
        with pytest.raises(TypeMismatch, match="identity"):
            parse_term("id ^", Mode.ORIENTED, "v")

    @pytest.mark.parametrize(
        ("text", "match"),
        [
            ("id ∅|cupx|id ∅", "unknown generator"),
            ("cup+", "expected 'id OBJ"),
        ],
    )
    def test_parse_errors(self, text, match):
        with pytest.raises(InvalidTerm, match=match):
            parse_term(text, Mode.ORIENTED, "")

    def test_parse_wrong_mode(self):
        with pytest.raises(InvalidTerm, match="not a plain generator"):
            parse_term("id 0|cup+|id 0", Mode.PLAIN, "")

    def test_tensor_realizes_zigzag(self):
        lower = tensor(MTerm("", (CUP_PLUS,)), MTerm("v"))
        upper = MTerm("v^v", (Slice("v", GenArrow.CAP_MINUS, ""),))
        assert compose_terms(lower, upper) == ZIGZAG_RIGHT

    def test_compose_with_identity(self):
        assert compose_terms(MTerm("v"), ZIGZAG_LEFT) == ZIGZAG_LEFT

    def test_tensor_with_unit(self):
        assert tensor(ZIGZAG_LEFT, MTerm("")) == ZIGZAG_LEFT
        assert tensor(MTerm(""), ZIGZAG_LEFT) == ZIGZAG_LEFT

    def test_compose_mismatch(self):
        with pytest.raises(TypeMismatch, match="cannot compose"):
            compose_terms(MTerm("v"), MTerm("^"))

    def test_slice_out_of_range(self):
        with pytest.raises(TypeMismatch, match="does not fit"):
            Slice.at("v", 0, GenArrow.CAP_PLUS)


class TestExchange:
    """Commuting slices and canonical orders."""

    def test_side_by_side_cups_commute(self):
        first = Slice("", GenArrow.CUP_PLUS, "")
        second = Slice("v^", GenArrow.CUP_PLUS, "")
        assert swap(first, second) == (
            Slice("", GenArrow.CUP_PLUS, ""),
            Slice("", GenArrow.CUP_PLUS, "v^"),
        )

    def test_nested_cups_do_not_commute(self):
        assert not independent(CUP_PLUS, Slice("v", GenArrow.CUP_MINUS, "^"))

    def test_cup_then_its_cap_do_not_commute(self):
        assert swap(CUP_PLUS, CAP_PLUS) is None

    def test_equivalent_orders(self):
        t1 = MTerm("", (CUP_PLUS, Slice("v^", GenArrow.CUP_PLUS, "")))
        t2 = MTerm("", (CUP_PLUS, Slice("", GenArrow.CUP_PLUS, "v^")))
        assert exchange_equivalent(t1, t2)
        assert canonical_order(t1) == canonical_order(t2)
        assert eval_net(t1) == eval_net(t2)

    def test_canonical_order_is_idempotent(self):
        term = canonical_order(ZIGZAG_RIGHT)
        assert canonical_order(term) == term

    @pytest.mark.parametrize(
        ("domain", "mode", "depth"),
        [
            ("", Mode.PLAIN, 4),
            ("oo", Mode.PLAIN, 3),
            ("", Mode.ORIENTED, 4),
            ("v^", Mode.ORIENTED, 3),
        ],
    )
    def test_reordering_keeps_net_and_canonical_form(self, domain, mode, depth):
        for term in terms_up_to(domain, mode, depth):
            orders = exchange_class(term)
            assert len({eval_net(t) for t in orders}) == 1, format_term(term)
            assert len({canonical_order(t) for t in orders}) == 1, format_term(term)

    def test_canonical_order_keeps_no_global_cache(self):
        assert not hasattr(exchange._least, "cache_info")


class TestNets:
    """Strand tracing and loop scalars."""

    def test_ccw_bubble(self):
        net = eval_net(MTerm("", (CUP_PLUS, CAP_PLUS)))
        assert net.match == ()
        assert net.scalar_exp == 1

    def test_cw_bubble(self):
        assert eval_net(MTerm("", (CUP_MINUS, CAP_MINUS))).scalar_exp == -1

    def test_convention_flips_signs(self):
        with SettingsManager.override(bubble_convention="cw"):
            assert eval_net(MTerm("", (CUP_PLUS, CAP_PLUS))).scalar_exp == -1
            assert eval_net(MTerm("", (CUP_MINUS, CAP_MINUS))).scalar_exp == 1

    def test_plain_bubble_is_delta(self):
        term = MTerm("", (Slice("", GenArrow.CUP, ""), Slice("", GenArrow.CAP, "")))
        assert eval_net(term).scalar_exp == 1

    @pytest.mark.parametrize("term", [ZIGZAG_LEFT, ZIGZAG_RIGHT])
    def test_zigzag_is_identity(self, term):
        net = eval_net(term)
        assert net.match == (2, 1)
        assert net.scalar_exp == 0

    def test_plain_zigzag(self):
        term = parse_term("id 1|cap|id 0", Mode.PLAIN, "ooo")
        net = eval_net(compose_terms(MTerm("o", (Slice("", GenArrow.CUP, "o"),)), term))
        assert net.match == (2, 1)

    def test_hom_of_units(self):
        assert len(hom_basis("", "")) == 1

    def test_plain_hom_is_catalan(self):
        assert len(hom_basis("ooo", "ooo")) == 5
        assert len(hom_basis("oo", "oooo")) == 5
        assert hom_basis("o", "oo") == frozenset()

    @pytest.mark.parametrize("n", range(1, 6))
    def test_plain_endomorphisms_are_catalan(self, n):
        assert len(hom_basis("o" * n, "o" * n)) == CATALAN[n]

    def test_oriented_hom_filters_orientations(self):
        assert len(hom_basis("v^", "^v")) == 1
        assert len(hom_basis("v^", "v^")) == 2
        assert hom_basis("v", "^") == frozenset()

    def test_hom_bound(self):
        with pytest.raises(BoundExceeded, match="hom bound 4"):
            hom_basis("ooo", "ooo", bound=4)

    @pytest.mark.parametrize(
        ("v", "w"), [("ooo", "ooo"), ("v^v", "v"), ("v^", "^v"), ("", "v^^v")]
    )
    def test_net_to_term_roundtrip(self, v, w):
        for net in hom_basis(v, w):
            term = net_to_term(net)
            assert eval_net(term) == net
            assert is_redex_free(term)


class TestNormalize:
    """Zigzag and bubble rewriting modulo exchange."""

    @pytest.mark.parametrize("term", [ZIGZAG_LEFT, ZIGZAG_RIGHT])
    def test_zigzag(self, term):
        assert normalize_term(term) == (0, MTerm("v"))

    def test_bubble(self):
        assert normalize_term(MTerm("", (CUP_PLUS, CAP_PLUS))) == (1, MTerm(""))
        assert normalize_term(MTerm("", (CUP_MINUS, CAP_MINUS))) == (-1, MTerm(""))

    def test_already_normal(self):
        term = MTerm("", (CUP_PLUS,))
        assert normalize_term(term) == (0, term)

    def test_redex_kinds(self):
        assert [r.kind for r in find_redexes(ZIGZAG_LEFT)] == [RedexKind.ZIGZAG]
        bubble = find_redexes(MTerm("", (CUP_PLUS, CAP_PLUS)))
        assert [r.kind for r in bubble] == [RedexKind.BUBBLE]

    def test_redex_across_a_commuting_slice(self):
        # the cap+ closing the first cup sits above an unrelated cup
        term = MTerm(
            "",
            (
                CUP_PLUS,
                Slice("v^", GenArrow.CUP_MINUS, ""),
                Slice("", GenArrow.CAP_PLUS, "^v"),
            ),
        )
        assert normalize_term(term) == (1, MTerm("", (CUP_MINUS,)))

    def test_steps_shrink_and_preserve_net(self):
        term = compose_terms(ZIGZAG_LEFT, ZIGZAG_RIGHT)
        reference = eval_net(term)
        steps = list(rewrite_steps(term))
        assert len(steps) == 2
        for step in steps:
            assert step.after.generator_count() == step.before.generator_count() - 2
            after = eval_net(step.after)
            assert after.match == reference.match
        assert is_redex_free(steps[-1].after)

    def test_normal_forms_match_hom_counts(self):
        for v, w in [("ooo", "ooo"), ("", "oooo"), ("v^", "v^"), ("v^v", "v"), ("", "")]:
            assert len(enumerate_normal_terms(v, w, 4)) == len(hom_basis(v, w))


class TestCriticalPairs:
    """Overlaps of the zigzag and bubble rules."""

    @pytest.mark.parametrize("mode", list(Mode))
    def test_two_joinable_families(self, mode):
        report = modulo_critical_pairs(mode)
        assert report.family_count == 2
        assert set(report.families) == {"cap-cup-cap", "cup-cap-cup"}
        assert report.all_joinable


class TestEndAlgebra:
    """End(n) of the plain category against diagram multiplication."""

    def test_generator_image(self):
        term = generator_image(3, 2)
        assert format_term(term) == "id 1|cap|id 0; id 1|cup|id 0"

    def test_jnf_image_rejects_delta(self):
        with pytest.raises(InvalidWord, match="δ"):
            jnf_image((0, 1), 2)

    def test_square_of_generator_is_a_bubble(self):
        scalar, normal = normalize_term(jnf_image((1, 1), 2))
        assert scalar == 1
        assert normal == generator_image(2, 1)

    def test_jnf_image_need_not_be_normal(self):
        assert jnf_image_is_normal((1,), 3)
        assert not jnf_image_is_normal((2, 1), 3)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_end_algebra(self, n):
        verdict = end_algebra_check(n)
        assert verdict.ok, verdict.mismatches

    def test_product_count(self):
        assert end_algebra_check(3).products == 25
