"""monocat: finite reflexive graph categories and their two biclosed
monoidal structures.

The package provides graph values and homomorphisms, the box and
categorical products with internal homs and currying, presheaves over the
finite index categories of reflexive graphs with the reflector into graphs,
a coherence verifier for candidate monoidal structures, and the exhaustive
classification search showing the two built-in products are the only
candidates.
"""

from importlib import resources

from .classifier import (
    ClassificationReport,
    ConstraintSystem,
    check_no_reverse_edges,
    classify,
    determine_unit,
    enumerate_squares,
    set_partitions,
)
from .graphs import (
    DIRECTED,
    UNDIRECTED,
    GraphHom,
    ModeMismatchError,
    ReflexiveGraph,
    VertexPartition,
    compose,
    discrete_partition,
    disjoint_union,
    enumerate_homs,
    graph_from_json,
    graph_from_json_dict,
    identity,
    inverse,
    is_hom,
    is_iso,
    is_isomorphic,
    make_named,
    make_path,
    quotient,
    to_dot,
)
from .presheaves import (
    IndexCategory,
    Presheaf,
    colimit,
    density_recolimit,
    embed,
    index_category,
    is_graph_presheaf,
    presheaf_from_json_dict,
    reflect,
    reflector_adjunction_check,
    representable,
    validate_presheaf,
)
from .products import (
    BOX,
    CATEGORICAL,
    canonical_associator,
    canonical_unitors,
    categorical_joint_rule,
    curry,
    internal_hom,
    swap_hom,
    tensor,
    tensor_hom,
    uncurry,
)
from .verify import (
    CoherenceReport,
    TensorOracle,
    builtin_oracle,
    check_biclosed,
    check_bifunctoriality,
    check_cocontinuity,
    check_coherence,
    default_corpus,
    run_all,
    square_edge_flips,
    with_square,
)

__version__ = "0.1.0"


def schema_path():
    """Filesystem path of the published JSON schema for CLI outputs."""
    return resources.files("monocat") / "schemas" / "monocat.schema.json"
