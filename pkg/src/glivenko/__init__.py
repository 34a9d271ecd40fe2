"""Natural deduction kernel and double-negation proof compiler."""

from .checker import (
    MODES,
    NJ,
    NK,
    CheckError,
    ErrorKind,
    Judgment,
    check,
    check_sequent,
    sequent,
)
from .compiler import (
    ProofTooLarge,
    add_dn_proof,
    drop_dn_proof,
    nj_embed,
    nj_translation_to_nk,
    nk_to_nj,
)
from .derivations import (
    peirce_implies_raa,
    raa_axiom_from_rule,
    raa_implies_tnd,
    raa_rule_from_axiom,
    tnd_implies_peirce,
)
from .proof import (
    Classical,
    LabelSupply,
    Proof,
    classical_axioms_used,
    open_hypotheses,
    proof_height,
    proof_size,
)
from .syntax import (
    alpha_eq,
    free_vars,
    parse_formula,
    parse_term,
    print_formula,
    substitute,
)
from .translation import (
    nn_translate,
    nn_translate_context,
    stability_proof,
    triple_neg_proof,
)

__version__ = "0.1.0"

__all__ = [
    "add_dn_proof",
    "alpha_eq",
    "check",
    "check_sequent",
    "CheckError",
    "Classical",
    "classical_axioms_used",
    "drop_dn_proof",
    "ErrorKind",
    "free_vars",
    "Judgment",
    "LabelSupply",
    "MODES",
    "NJ",
    "nj_embed",
    "nj_translation_to_nk",
    "NK",
    "nk_to_nj",
    "nn_translate",
    "nn_translate_context",
    "open_hypotheses",
    "parse_formula",
    "parse_term",
    "peirce_implies_raa",
    "print_formula",
    "Proof",
    "proof_height",
    "proof_size",
    "ProofTooLarge",
    "raa_axiom_from_rule",
    "raa_implies_tnd",
    "raa_rule_from_axiom",
    "sequent",
    "stability_proof",
    "substitute",
    "tnd_implies_peirce",
    "triple_neg_proof",
]
