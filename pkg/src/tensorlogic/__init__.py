"""Proof kernel and decision toolchain for a tensor-only sequent calculus."""

from .decision import (
    Decision,
    NotProvableError,
    Prover,
    SearchResult,
    bounded_search,
    decide,
    is_provable,
    synthesize_proof,
)
from .kernel import (
    ConvAxiom,
    Cut,
    Exchange,
    Id,
    LAxiom,
    LTensor,
    LUnit,
    Mode,
    Proof,
    ProofError,
    RAxiom,
    RTensor,
    RUnit,
    check,
    cut_paths,
    cut_proofs,
    eliminate_left_tensor,
    eliminate_left_unit,
    eliminate_right_unit,
    identity_proof,
    parse_proof,
    render_proof,
    tensor_proofs,
    to_mode_t,
)
from .terms import (
    UNIT,
    Atom,
    Inference,
    ParseError,
    Tensor,
    Term,
    Unit,
    atom_list,
    atom_vector,
    parse_inference,
    parse_term,
    render_inference,
    render_term,
    tensor_of,
)
from .theory import (
    Theory,
    TheoryVerdict,
    decide_in_theory,
    encode_conversion,
    lift,
    load_theory,
    make_theory,
    parse_theory,
)
from .transforms import (
    TRANSFORMS,
    TransformMismatch,
    apply_transform,
    canonicalize,
    eliminate_cuts,
    proofs_equivalent,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
