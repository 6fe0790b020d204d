"""MLL proof structure toolkit.

Proof structures with Danos-Regnier correctness, sequentialization,
empires, PS-families with their metric and tensor/par exchange, exhaustive
family sweeps that verify the governing theorems, and the Hamming code
baseline for the coding-theory analogy.
"""

from .analysis import (
    ExchangePath,
    FamilyReport,
    enumerate_skeletons,
    exchange_path,
    find_families_with_net_count,
    theorem1_condition,
    verify_error_detection,
    verify_family,
)
from .codes import (
    BinaryWord,
    BlockCode,
    code_distance,
    hamming74,
    is_one_error_correcting,
    word_distance,
)
from .core import (
    ID,
    MULT,
    PAR,
    TENSOR,
    Formula,
    IdLink,
    LinkCounts,
    MultLink,
    NegLiteral,
    ParFormula,
    ParLink,
    PosLiteral,
    ProofStructure,
    TensorFormula,
    TensorLink,
    link_counts,
    negate,
    parse_structure,
    render,
)
from .empire import (
    Empire,
    EmpireStrategy,
    empire,
    find_splitting_tensor,
    principal_switching,
    tensor_order,
)
from .errors import (
    DanglingPremiseError,
    DuplicateIndexError,
    HasParConclusionError,
    IsoLimitExceededError,
    LengthMismatchError,
    LinkKindMismatchError,
    MLLError,
    MultipleConclusionsError,
    NoTensorConclusionError,
    NotAProofNetError,
    NotSameFamilyError,
    PremiseReuseError,
    StructureError,
    StructureSyntaxError,
    SwitchingMismatchError,
    TooFewCodewordsError,
    UnknownIndexError,
    UnknownLinkError,
)
from .family import (
    DEFAULT_ISO_LIMIT,
    FamilySkeleton,
    GraphIso,
    LabelledDigraph,
    count_proof_nets,
    distance,
    equals,
    family_distance,
    family_members,
    induced_graph,
    is_ps_connected,
    isomorphisms,
    net_equivalence_classes,
    parse_skeleton,
    proof_net_members,
    same_family,
    single_flips,
    skeleton_of,
    strip_automorphisms,
    strip_label,
    tpex,
)
from .switching import (
    LEFT,
    RIGHT,
    DRGraph,
    DRSwitching,
    DerivationTree,
    IdLeaf,
    ParStep,
    TensorSplit,
    diagnose,
    dr_graph,
    is_mix_correct,
    is_proof_net,
    sequentialize,
    switchings,
)

__all__ = [name for name in dir() if not name.startswith("_")]
