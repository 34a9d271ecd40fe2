"""Compilation between classical and intuitionistic proofs.

``nk_to_nj`` turns a classical proof of ``G |- F`` into an intuitionistic
proof of the translated sequent, by induction on the proof. The converse
direction wraps an intuitionistic proof of the translated sequent with
proofs that add and remove the translation's double negations.
"""

from __future__ import annotations

import os
from typing import Callable, Iterable

from .checker import NJ, NK, Judgment, check, judgment_matches
from .derivations import tnd_implies_peirce
from .proof import (
    AndEL,
    AndER,
    AndI,
    AxiomPeirce,
    AxiomRAA,
    AxiomTND,
    BotE,
    ExistsE,
    ExistsI,
    ForallE,
    ForallI,
    Hyp,
    ImpliesE,
    ImpliesI,
    LabelSupply,
    OrE,
    OrIL,
    OrIR,
    Proof,
    RuleRAA,
    discharge,
    graft,
    hyp,
    node,
)
from .syntax import (
    And,
    Atom,
    Bottom,
    Exists,
    Forall,
    Formula,
    Implies,
    Or,
    Var,
    alpha_eq,
    alpha_key,
    neg,
    substitute,
)
from .translation import eigen_for, nn, nn_translate, stability_proof

Fresh = Callable[[], int]

DEFAULT_MAX_PROOF_SIZE = 10**6


class ProofTooLarge(RuntimeError):
    pass


def max_proof_size_from_env() -> int:
    return int(os.environ.get("GLIVENKO_MAX_PROOF_SIZE", DEFAULT_MAX_PROOF_SIZE))


# ---------------------------------------------------------------------------
# classical -> intuitionistic


class _Compiler:
    def __init__(self, fresh: Fresh, cap: int):
        self.fresh = fresh
        self.cap = cap

    def emit(self, p: Proof) -> Proof:
        if p.size > self.cap:
            raise ProofTooLarge(f"compiled proof exceeds {self.cap} nodes")
        return p

    def wrap_nn(self, p: Proof, goal: Formula) -> Proof:
        """From a proof of goal, prove ~~goal."""
        k = self.fresh()
        return node(ImpliesI(neg(goal), k), node(ImpliesE(), p, hyp(neg(goal), k)))

    def through_stability(self, c: Formula, nnc_proof: Proof) -> Proof:
        """Splice a proof of ~~C' into the stability proof of C."""
        return graft(stability_proof(c, self.fresh), nn(nn_translate(c)), nnc_proof, self.fresh)

    def eliminate_under_nn(self, major_nn: Proof, major: Formula, c: Formula,
                           elim: Callable[[Proof], Proof]) -> Proof:
        """Shared shape of the |e and exists-e cases.

        ``major_nn`` proves ~~major (major is already translated) and ``elim``
        maps a hypothesis of major to a proof of C'.
        """
        c_nn = nn_translate(c)
        k_l, k_m = self.fresh(), self.fresh()
        inner = node(ImpliesE(), elim(hyp(major, k_l)), hyp(neg(c_nn), k_m))
        not_major = node(ImpliesI(major, k_l), inner)
        nnc = node(ImpliesI(neg(c_nn), k_m), node(ImpliesE(), not_major, major_nn))
        return self.through_stability(c, nnc)

    def compile(self, p: Proof) -> tuple[Proof, Formula]:
        """Return (compiled proof, source conclusion)."""
        r = p.rule
        match r:
            case Hyp(f, lab):
                return self.emit(hyp(nn_translate(f), lab)), f

            case AxiomTND(a):
                return self.emit(self.tnd(a)), Or(a, neg(a))

            case AxiomRAA(a):
                a_nn = nn_translate(a)
                k = self.fresh()
                st = discharge(stability_proof(a, self.fresh), nn(a_nn), k)
                return self.emit(node(ImpliesI(nn(a_nn), k), st)), Implies(neg(neg(a)), a)

            case RuleRAA(a, lab):
                expanded = raa_rule_from_axiom_unchecked(a, p.premises[0], lab)
                return self.compile(expanded)

            case AxiomPeirce(a, b):
                return self.compile(tnd_implies_peirce(a, b, self.fresh))

            case BotE(target):
                d, _ = self.compile(p.premises[0])
                return self.emit(node(BotE(nn_translate(target)), d)), target

            case ImpliesE():
                d1, _ = self.compile(p.premises[0])
                d2, ab = self.compile(p.premises[1])
                return self.emit(node(ImpliesE(), d1, d2)), ab.right

            case ImpliesI(a, lab):
                d, b = self.compile(p.premises[0])
                return self.emit(node(ImpliesI(nn_translate(a), lab), d)), Implies(a, b)

            case AndEL() | AndER():
                d, ab = self.compile(p.premises[0])
                out = ab.left if isinstance(r, AndEL) else ab.right
                return self.emit(node(r, d)), out

            case AndI():
                d1, a = self.compile(p.premises[0])
                d2, b = self.compile(p.premises[1])
                return self.emit(node(AndI(), d1, d2)), And(a, b)

            case OrIL(other) | OrIR(other):
                d, a = self.compile(p.premises[0])
                src = Or(a, other) if isinstance(r, OrIL) else Or(other, a)
                inj = type(r)(nn_translate(other))
                body = node(inj, d)
                return self.emit(self.wrap_nn(body, nn_translate(src).left.left)), src

            case OrE(lab):
                d0, ab = self.compile(p.premises[0])
                d1, c = self.compile(p.premises[1])
                d2, _ = self.compile(p.premises[2])
                major = Or(nn_translate(ab.left), nn_translate(ab.right))

                def elim(h: Proof) -> Proof:
                    return node(OrE(lab), h, d1, d2)

                return self.emit(self.eliminate_under_nn(d0, major, c, elim)), c

            case ForallE(t):
                d, fa = self.compile(p.premises[0])
                return self.emit(node(ForallE(t), d)), substitute(fa.body, fa.var, t)

            case ForallI(x):
                d, a = self.compile(p.premises[0])
                return self.emit(node(ForallI(x), d)), Forall(x, a)

            case ExistsE(lab, x):
                d0, ex = self.compile(p.premises[0])
                d1, c = self.compile(p.premises[1])
                major = Exists(ex.var, nn_translate(ex.body))

                def elim(h: Proof) -> Proof:
                    return node(ExistsE(lab, x), h, d1)

                return self.emit(self.eliminate_under_nn(d0, major, c, elim)), c

            case ExistsI(w, target):
                d, _ = self.compile(p.premises[0])
                t_nn = Exists(target.var, nn_translate(target.body))
                return self.emit(self.wrap_nn(node(ExistsI(w, t_nn), d), t_nn)), target

        raise TypeError(f"unknown rule {r!r}")

    def tnd(self, a: Formula) -> Proof:
        """``|- ~~(A' | ~A')``."""
        a_nn = nn_translate(a)
        disj = Or(a_nn, neg(a_nn))
        k_a, k_n = self.fresh(), self.fresh()
        refute = hyp(neg(disj), k_n)
        left = node(ImpliesE(), node(OrIL(neg(a_nn)), hyp(a_nn, k_a)), refute)
        not_a = node(ImpliesI(a_nn, k_a), left)
        right = node(ImpliesE(), node(OrIR(a_nn), not_a), refute)
        return node(ImpliesI(neg(disj), k_n), right)


def raa_rule_from_axiom_unchecked(a: Formula, body: Proof, label: int) -> Proof:
    # the source proof was checked as a whole, so the body needs no recheck
    return node(ImpliesE(), node(ImpliesI(neg(a), label), body), node(AxiomRAA(a)))


def nk_to_nj(p: Proof, *, max_size: int | None = None, fresh: Fresh | None = None) -> Proof:
    """Compile a classical proof of ``G |- F`` to an intuitionistic proof of
    the translated sequent.

    Raises CheckError if p does not check classically and ProofTooLarge when
    the output would exceed ``max_size`` nodes.
    """
    check(p, NK)
    cap = max_proof_size_from_env() if max_size is None else max_size
    compiler = _Compiler(fresh or LabelSupply.after(p), cap)
    out, _ = compiler.compile(p)
    return out


# ---------------------------------------------------------------------------
# intuitionistic -> classical


def nj_embed(p: Proof, mode=NK) -> Proof:
    """Every intuitionistic proof is a classical one; revalidate and return it."""
    j = check(p, NJ)
    j2 = check(p, mode)
    assert judgment_matches(j, j2)
    return p


def add_dn_proof(a: Formula, fresh: Fresh | None = None) -> Proof:
    """``a |- a'`` where a' is the translation of a."""
    fresh = fresh or LabelSupply()
    return _add(a, fresh)


def drop_dn_proof(a: Formula, fresh: Fresh | None = None) -> Proof:
    """``a' |- a``, using the reductio axiom where double negations are removed."""
    fresh = fresh or LabelSupply()
    return _drop(a, fresh)


def _plug(builder: Callable[[Formula, Fresh], Proof], f: Formula, leaf: Formula,
          into: Proof, fresh: Fresh) -> Proof:
    """``builder(f)`` with its open hypothesis ``leaf`` replaced by ``into``."""
    return graft(builder(f, fresh), leaf, into, fresh)


def _add(a: Formula, fresh: Fresh) -> Proof:
    match a:
        case Bottom():
            return hyp(a)
        case Atom():
            k = fresh()
            return node(ImpliesI(neg(a), k), node(ImpliesE(), hyp(a), hyp(neg(a), k)))
        case And(l, r):
            return node(AndI(),
                        _plug(_add, l, l, node(AndEL(), hyp(a)), fresh),
                        _plug(_add, r, r, node(AndER(), hyp(a)), fresh))
        case Implies(l, r):
            l_nn = nn_translate(l)
            k = fresh()
            # from [l']: l by dropping, r by ->e, r' by adding
            l_back = _plug(_drop, l, l_nn, hyp(l_nn, k), fresh)
            r_src = node(ImpliesE(), l_back, hyp(a))
            return node(ImpliesI(l_nn, k), _plug(_add, r, r, r_src, fresh))
        case Forall(x, body):
            z = eigen_for(a)
            body = substitute(body, x, Var(z))
            inst = node(ForallE(Var(z)), hyp(a))
            return node(ForallI(z), _plug(_add, body, body, inst, fresh))
        case Or(l, r):
            target = Or(nn_translate(l), nn_translate(r))
            k_case, k_neg = fresh(), fresh()
            left = node(OrIL(target.right), _plug(_add, l, l, hyp(l, k_case), fresh))
            right = node(OrIR(target.left), _plug(_add, r, r, hyp(r, k_case), fresh))
            cases = node(OrE(k_case), hyp(a), left, right)
            return node(ImpliesI(neg(target), k_neg),
                        node(ImpliesE(), cases, hyp(neg(target), k_neg)))
        case Exists(x, body):
            z = eigen_for(a)
            body = substitute(body, x, Var(z))
            target = Exists(x, nn_translate(a.body))
            k_case, k_neg = fresh(), fresh()
            wit = node(ExistsI(Var(z), target), _plug(_add, body, body, hyp(body, k_case), fresh))
            cases = node(ExistsE(k_case, z), hyp(a), wit)
            return node(ImpliesI(neg(target), k_neg),
                        node(ImpliesE(), cases, hyp(neg(target), k_neg)))
    raise TypeError(f"not a formula: {a!r}")


def _by_raa(goal: Formula, major_nn: Formula, elim: Callable[[Proof], Proof],
            fresh: Fresh) -> Proof:
    """Prove goal from the hypothesis ~~major_nn.

    ``elim`` turns a hypothesis of major_nn into a proof of goal.
    """
    k_maj, k_neg = fresh(), fresh()
    bot = node(ImpliesE(), elim(hyp(major_nn, k_maj)), hyp(neg(goal), k_neg))
    not_major = node(ImpliesI(major_nn, k_maj), bot)
    nn_goal = node(ImpliesI(neg(goal), k_neg), node(ImpliesE(), not_major, hyp(nn(major_nn))))
    return node(ImpliesE(), nn_goal, node(AxiomRAA(goal)))


def _drop(a: Formula, fresh: Fresh) -> Proof:
    a_nn = nn_translate(a)
    match a:
        case Bottom():
            return hyp(a)
        case Atom():
            return node(ImpliesE(), hyp(a_nn), node(AxiomRAA(a)))
        case And(l, r):
            return node(AndI(),
                        _plug(_drop, l, a_nn.left, node(AndEL(), hyp(a_nn)), fresh),
                        _plug(_drop, r, a_nn.right, node(AndER(), hyp(a_nn)), fresh))
        case Implies(l, r):
            k = fresh()
            l_up = _plug(_add, l, l, hyp(l, k), fresh)
            r_nn = node(ImpliesE(), l_up, hyp(a_nn))
            return node(ImpliesI(l, k), _plug(_drop, r, a_nn.right, r_nn, fresh))
        case Forall(x, body):
            z = eigen_for(a)
            body = substitute(body, x, Var(z))
            body_nn = nn_translate(body)
            inst = node(ForallE(Var(z)), hyp(a_nn))
            return node(ForallI(z), _plug(_drop, body, body_nn, inst, fresh))
        case Or(l, r):
            major = a_nn.left.left
            k_case = fresh()

            def elim(h: Proof) -> Proof:
                left = node(OrIL(r), _plug(_drop, l, major.left, hyp(major.left, k_case), fresh))
                right = node(OrIR(l), _plug(_drop, r, major.right, hyp(major.right, k_case), fresh))
                return node(OrE(k_case), h, left, right)

            return _by_raa(a, major, elim, fresh)
        case Exists(x, body):
            major = a_nn.left.left
            z = eigen_for(a)
            body = substitute(body, x, Var(z))
            body_nn = nn_translate(body)
            k_case = fresh()

            def elim(h: Proof) -> Proof:
                wit = node(ExistsI(Var(z), a),
                           _plug(_drop, body, body_nn, hyp(body_nn, k_case), fresh))
                return node(ExistsE(k_case, z), h, wit)

            return _by_raa(a, major, elim, fresh)
    raise TypeError(f"not a formula: {a!r}")


def nj_translation_to_nk(p: Proof, gamma: Iterable[Formula], f: Formula, *,
                         fresh: Fresh | None = None) -> Proof:
    """Classical proof of ``gamma |- f`` from an intuitionistic proof of the
    translated sequent.

    Each open hypothesis A' of p is derived from A, and the conclusion f'
    is lowered back to f.
    """
    gamma = list(gamma)
    j = check(p, NJ)
    wanted = {alpha_key(nn_translate(g)): g for g in gamma}
    if not alpha_eq(j.conclusion, nn_translate(f)):
        raise ValueError(f"proof concludes {j.conclusion}, expected translation of {f}")
    for h in j.context:
        if alpha_key(h) not in wanted:
            raise ValueError(f"open hypothesis {h} is not the translation of any of gamma")
    fresh = fresh or LabelSupply.after(p)
    embedded = nj_embed(p)

    def lift(n: Proof) -> Proof:
        r = n.rule
        if isinstance(r, Hyp):
            if r.label is None:
                return add_dn_proof(wanted[alpha_key(r.formula)], fresh)
            return n
        if not n.premises:
            return n
        return Proof(r, tuple(lift(q) for q in n.premises))

    lifted = lift(embedded)
    return graft(drop_dn_proof(f, fresh), nn_translate(f), lifted, fresh)


def compiled_sequent(j: Judgment) -> Judgment:
    return Judgment(tuple(nn_translate(f) for f in j.context), nn_translate(j.conclusion))
