"""Arrow ribbon graphs, their state-sum polynomials, and virtual link invariants."""

from __future__ import annotations

from .duality import (
    CanonicalForm,
    canonical_form,
    contract,
    delete,
    natural_dual,
    partial_dual,
)
from .graphpoly import (
    arrow_bollobas_riordan,
    arrow_dichromatic,
    dichromatic,
    signed_bollobas_riordan,
    signed_dichromatic_substitution,
    tutte,
    verify_br_z_relation,
)
from .polyring import LaurentPoly, format_poly, parse_poly, substitute
from .ribbon import (
    ArrowRibbonGraph,
    GraphError,
    from_arrow_presentation,
    from_json,
    from_rotation_system,
    reduce_cyclic_arrow_word,
)
from .transfer import (
    specialization_all_A,
    specialization_seifert,
    state_graph,
    thistlethwaite_verify,
    verify_state_duality,
)
from .vlink import (
    VirtualLinkDiagram,
    apply_move,
    arrow_bracket,
    jones,
    kauffman_bracket,
    normalized_arrow,
    parse_gauss,
    smooth,
)

__all__ = [
    "ArrowRibbonGraph",
    "CanonicalForm",
    "GraphError",
    "LaurentPoly",
    "VirtualLinkDiagram",
    "apply_move",
    "arrow_bollobas_riordan",
    "arrow_bracket",
    "arrow_dichromatic",
    "canonical_form",
    "contract",
    "delete",
    "dichromatic",
    "format_poly",
    "from_arrow_presentation",
    "from_json",
    "from_rotation_system",
    "jones",
    "kauffman_bracket",
    "natural_dual",
    "normalized_arrow",
    "parse_gauss",
    "parse_poly",
    "partial_dual",
    "reduce_cyclic_arrow_word",
    "signed_bollobas_riordan",
    "signed_dichromatic_substitution",
    "smooth",
    "specialization_all_A",
    "specialization_seifert",
    "state_graph",
    "substitute",
    "thistlethwaite_verify",
    "tutte",
    "verify_br_z_relation",
    "verify_state_duality",
]
