"""
End(n) of the plain category against TL_n(δ).

E_i is sent to id_{i-1} ⊗ (cup ∘ cap) ⊗ id_{n-i-1}; products of JNF basis
words are compared after normalization with the planar product.
"""

from __future__ import annotations

from functools import reduce

from pydantic import BaseModel, computed_field

from tlrewrite.category.nets import eval_net, net_to_diagram
from tlrewrite.category.normalize import is_redex_free, normalize_term
from tlrewrite.category.objects import GenArrow, plain_object
from tlrewrite.category.terms import MTerm, Slice, compose_terms
from tlrewrite.errors import InvalidWord
from tlrewrite.jnf import enumerate_jnf
from tlrewrite.planar import compose, format_diagram
from tlrewrite.util.log import get_logger
from tlrewrite.words import DELTA, Word, check_word, evaluate, format_word

log = get_logger("category")


def generator_image(n: int, i: int) -> MTerm:
    obj = plain_object(n)
    cap = Slice.at(obj, i - 1, GenArrow.CAP)
    return MTerm(obj, (cap, Slice.at(cap.cod, i - 1, GenArrow.CUP)))


def jnf_image(word: Word, n: int) -> MTerm:
    """The term of a δ-free word, one cap-cup pair per letter."""
    letters = check_word(word, n)
    if DELTA in letters:
        msg = f"{format_word(word)}: δ has no term image, strip it first"
        raise InvalidWord(msg)
    return reduce(
        compose_terms,
        (generator_image(n, i) for i in letters),
        MTerm(plain_object(n)),
    )


def jnf_image_is_normal(word: Word, n: int) -> bool:
    return is_redex_free(jnf_image(word, n))


class EndAlgebraVerdict(BaseModel):
    n: int
    products: int
    mismatches: list[str] = []

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.mismatches


def end_algebra_check(n: int) -> EndAlgebraVerdict:
    """Compare term composition with diagram multiplication on the JNF basis."""
    basis = sorted((w.render() for w in enumerate_jnf(n)), key=lambda w: (len(w), w))
    images = {word: jnf_image(word, n) for word in basis}
    mismatches: list[str] = []
    for u in basis:
        for w in basis:
            expected = compose(evaluate(u, n), evaluate(w, n))
            scalar, normal = normalize_term(compose_terms(images[u], images[w]))
            net = eval_net(normal)
            if (
                net.scalar_exp
                or scalar != expected.power
                or net_to_diagram(net) != expected.diagram
            ):
                mismatches.append(
                    f"({format_word(u) or '1'})·({format_word(w) or '1'}): "
                    f"term gives d^{scalar + net.scalar_exp} "
                    f"{format_diagram(net_to_diagram(net))}, "
                    f"diagrams give d^{expected.power} {format_diagram(expected.diagram)}"
                )
    verdict = EndAlgebraVerdict(
        n=n, products=len(basis) ** 2, mismatches=mismatches
    )
    log.info("End({}): {} products, {} mismatches", n, verdict.products, len(mismatches))
    return verdict
