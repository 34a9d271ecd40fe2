"""The NK proof corpus: builder outputs, pairwise reductio grafts, and the
hand-encoded proof files under tests/proofs."""

from __future__ import annotations

import itertools
from functools import lru_cache
from pathlib import Path

from glivenko import proofio
from glivenko.checker import NK, check
from glivenko.derivations import (
    peirce_implies_raa,
    raa_axiom_from_rule,
    raa_implies_tnd,
    raa_rule_from_axiom,
    tnd_implies_peirce,
)
from glivenko.proof import AndI, Hyp, ImpliesE, LabelSupply, Proof, node, relabel
from glivenko.syntax import And, neg, parse_formula

PROOF_DIR = Path(__file__).parent / "proofs"

SAMPLE = [parse_formula(s) for s in (
    "a", "bot", "p -> q", "a & ~b", "a | b", "forall x. p(x)", "exists y. r(y, k)",
)]


def builder_outputs() -> list[tuple[str, Proof]]:
    out = []
    for f in SAMPLE:
        out.append((f"raa_to_tnd[{f}]", raa_implies_tnd(f)))
        out.append((f"peirce_to_raa[{f}]", peirce_implies_raa(f)))
        out.append((f"raa_rule_to_axiom[{f}]", raa_axiom_from_rule(f)))
    for f, g in itertools.combinations(SAMPLE[:5], 2):
        out.append((f"tnd_to_peirce[{f},{g}]", tnd_implies_peirce(f, g)))
    return out


def reductio_graft(d1: Proof, d2: Proof) -> Proof:
    """Prove ``C1 & C2`` by refuting its negation with both subproofs."""
    c = And(check(d1, NK).conclusion, check(d2, NK).conclusion)
    d2 = relabel(d2, LabelSupply.after(d1))
    k = LabelSupply.after(d1, d2)()
    body = node(ImpliesE(), node(AndI(), d1, d2), node(Hyp(neg(c), k)))
    return raa_rule_from_axiom(c, body, k)


def pairwise_grafts(limit: int = 12) -> list[tuple[str, Proof]]:
    named = builder_outputs()[:limit]
    return [(f"graft[{n1} ; {n2}]", reductio_graft(d1, d2))
            for (n1, d1), (n2, d2) in itertools.combinations(named, 2)]


def hand_proofs() -> list[tuple[str, proofio.ProofFile]]:
    return [(p.stem, proofio.load(p)) for p in sorted(PROOF_DIR.glob("*.proof"))]


@lru_cache(maxsize=1)
def nk_corpus() -> tuple[tuple[str, Proof], ...]:
    hand = [(name, pf.proof) for name, pf in hand_proofs()]
    return tuple(builder_outputs() + pairwise_grafts() + hand)
