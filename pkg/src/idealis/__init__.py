"""Squarefree monomial ideals as a lens on hypergraph coloring and packing.

The package is layered: :mod:`monomials` (ideals as antichains of exponent
vectors), :mod:`duality` (Alexander duals and irreducible decompositions),
:mod:`hypergraph`, :mod:`coloring`, :mod:`symbolic` and :mod:`packing`.
"""
from .errors import (
    DomainError,
    ExponentOverflowError,
    IdealisError,
    LoopError,
    ParseError,
    ResourceLimitError,
    SquarefreeError,
    StructuralError,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    VariableSet,
    contains,
    intersect,
    minimalize,
    minor_step,
    parse_ideal,
    parse_monomial,
    power,
    power_contains,
    product,
)
from .duality import (
    IrreducibleComponent,
    MonomialPrime,
    associated_primes,
    generalized_dual,
    intersect_components,
    irreducible_decomposition,
    squarefree_dual,
)
from .hypergraph import (
    ExpandedHypergraph,
    Hypergraph,
    all_minors,
    complement,
    cover_ideal,
    depolarize,
    dual_hypergraph,
    edge_ideal,
    expansion,
    expansion_at,
    from_ideal,
    induced,
    konig_data,
    minor,
    parse_hypergraph,
)
from .coloring import (
    chromatic_number,
    critical_subsets,
    find_coloring,
    is_critically_chromatic,
    is_k_colorable,
    secant_power,
)
from .symbolic import (
    AssProfile,
    ass_profile,
    chordless_odd_cycles,
    cover_square_decomposition,
    expansion_ass_primes,
    first_symbolic_gap,
    imperfection_certificate,
    is_bipartite,
    is_perfect,
    odd_induced_cycles,
    symbolic_membership,
    symbolic_power,
)
from .packing import (
    RouteDisagreement,
    cc_scan,
    decompose_cover,
    is_k_cover,
    mfmc_bounded,
    ntf_bounded,
    packing_property,
    packs,
    sigma_gamma,
)

__version__ = "0.1.0"
