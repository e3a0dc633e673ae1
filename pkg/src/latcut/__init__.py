"""Level classes and antichain cutsets of finite (semimodular) lattices."""

from .cutsets import (
    AnalysisReport,
    Mismatch,
    ProofConfig,
    WitnessChain,
    compare_unchecked,
    cutset_violation,
    enumerate_antichain_cutsets,
    is_antichain_cutset,
    level_chain_intersection,
    proof_witness_chain,
    verify_theorem,
    witness_chain,
)
from .errors import *  # noqa: F401,F403
from .generators import (
    GeneratorSpec,
    antichain,
    boolean,
    chain,
    diamond,
    divisor,
    downset_lattice,
    generate,
    partition,
    pentagon,
    product,
    random_poset,
)
from .io import PosetDocument, emit_document, emit_dot, parse_document
from .lattice import (
    height,
    height_table,
    is_jordan_dedekind,
    is_lattice,
    is_semimodular,
    jordan_dedekind_violation,
    join,
    meet,
    semimodularity_violation,
    signed_height,
)
from .levels import (
    LevelPartition,
    common_lower_bound_height_check,
    level_classes,
    levels_by_height,
    same_level_via_height,
    tilde_related,
)
from .poset import (
    FinitePoset,
    build_poset,
    interval_subposet,
    is_antichain,
    is_maximal_chain,
    leq,
    lower_covers,
    maximal_chains,
    maximal_elements,
    minimal_elements,
    upper_covers,
)

__version__ = "0.1.0"
