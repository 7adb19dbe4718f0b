"""The strict monoidal TL category: slice terms, nets, rewriting modulo exchange."""

from tlrewrite.category.endo import (
    EndAlgebraVerdict,
    end_algebra_check,
    generator_image,
    jnf_image,
    jnf_image_is_normal,
)
from tlrewrite.category.exchange import (
    canonical_order,
    exchange_equivalent,
    independent,
    swap,
)
from tlrewrite.category.nets import (
    NetRecord,
    ONet,
    eval_net,
    format_net,
    hom_basis,
    loop_exponent,
    net_record,
    net_to_diagram,
    net_to_term,
)
from tlrewrite.category.normalize import (
    CategoryStep,
    CriticalInstance,
    ModuloCriticalReport,
    Redex,
    RedexKind,
    apply_redex,
    enumerate_normal_terms,
    find_redexes,
    is_redex_free,
    modulo_critical_pairs,
    normalize_term,
    rewrite_steps,
)
from tlrewrite.category.objects import (
    GenArrow,
    Mode,
    cap_for,
    cup_for,
    format_object,
    parse_object,
    plain_object,
)
from tlrewrite.category.terms import (
    MTerm,
    Slice,
    TypeVerdict,
    compose_terms,
    format_term,
    identity_term,
    parse_term,
    require_typed,
    tensor,
    typecheck,
)

__all__ = [
    "CategoryStep",
    "CriticalInstance",
    "EndAlgebraVerdict",
    "GenArrow",
    "MTerm",
    "Mode",
    "ModuloCriticalReport",
    "NetRecord",
    "ONet",
    "Redex",
    "RedexKind",
    "Slice",
    "TypeVerdict",
    "apply_redex",
    "canonical_order",
    "cap_for",
    "compose_terms",
    "cup_for",
    "end_algebra_check",
    "enumerate_normal_terms",
    "eval_net",
    "exchange_equivalent",
    "find_redexes",
    "format_net",
    "format_object",
    "format_term",
    "generator_image",
    "hom_basis",
    "identity_term",
    "independent",
    "is_redex_free",
    "jnf_image",
    "jnf_image_is_normal",
    "loop_exponent",
    "modulo_critical_pairs",
    "net_record",
    "net_to_diagram",
    "net_to_term",
    "normalize_term",
    "parse_object",
    "parse_term",
    "plain_object",
    "require_typed",
    "rewrite_steps",
    "swap",
    "tensor",
    "typecheck",
]
