"""Transfer systems on the subgroup lattice of C_{p^r q^s}.

Saturated hulls, compatible pairs, minimal compatible extensions and the
lesser-simply-paired classification, each with an exhaustive oracle.
"""

from .classify import (
    LspVerdict,
    Reason,
    Shape,
    catalan,
    fuss_catalan_A,
    is_lsp_fast,
    is_lsp_oracle,
    lsp_count_chain,
    lsp_proportion_chain,
    shape_of,
)
from .compatibility import (
    CompatReport,
    compatible_supersets,
    core_chain,
    is_compatible,
    min_compatible_extension,
)
from .enumeration import (
    count_compatible_pairs,
    count_filtered,
    count_transfer_systems,
    enumerate_transfer_systems,
)
from .errors import InputError, ParseError, PreconditionError, ResourceGuardError, TransferError
from .lattice import Edge, Grid, Vertex, chain, complete_relation, leq, lex_less, meet
from .saturation import hull, hull_fixpoint, is_connected, is_saturated
from .transfer import (
    ComponentPartition,
    TransferSystem,
    components,
    smallest_vertex,
    transfer_closure,
    validate,
    zigzag_path,
)

__version__ = "0.1.0"
