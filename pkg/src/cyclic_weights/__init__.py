"""Exact combinatorics of cyclic weight chains and scalar-decorated
cyclic diagrams for GL2 over a local field with residue field F_{p^f}."""

from .chain import (
    ChainResult,
    SeedReport,
    build_chain,
    default_box,
    det_twist,
    det_twist_sum,
    period,
    rotated_seed,
    seed_power,
    seed_tuple,
    verify_seed_identities,
)
from .cyclic_module import (
    CyclicModule,
    ExtensionPair,
    SuccessorSet,
    ValidationReport,
    build_cyclic_module,
    is_multiplicity_free,
    jh_factors,
    make_extension_pair,
    successor_weights,
    validate_cyclic_module,
)
from .diagram import (
    ClassifyResult,
    CyclicDiagram,
    FieldElement,
    FieldSpec,
    classify_isomorphic,
    field_element,
    field_one,
    field_product,
    make_diagram,
    make_field,
    nonzero_elements,
    scalar_invariant,
)
from .errors import (
    DomainError,
    LengthMismatchError,
    ResidueDegreeError,
    TwistIntegralityError,
)
from .explorer import (
    CanonicalChainReport,
    CycleReport,
    CycleSearchResult,
    canonical_chain_check,
    cycle_module,
    find_cycles,
    successors,
)
from .symbolic import PExpr, example_lines, instantiate, symbolic_chain_pairs, symbolic_seed
from .tuple_algebra import (
    PolyTuple,
    SignVector,
    SignedLinear,
    X,
    compose,
    eval_tuple,
    identity_tuple,
    rotate,
    sign_vector,
)
from .weights import (
    BChar,
    Params,
    Weight,
    b_char,
    format_weight,
    is_generic,
    make_params,
    make_weight,
    radix_value,
    s_conjugate,
    s_dual,
    weight_from_char,
    weight_from_json,
    weight_to_json,
)

__version__ = "0.1.0"
