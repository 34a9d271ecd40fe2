"""Natural deduction proof trees.

Nodes carry a rule and their premises; conclusions are never stored, the
checker recomputes them. Discharge labels are positive integers.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, Union

from .syntax import (
    Fn,
    Formula,
    Term,
    Var,
    all_vars,
    alpha_eq,
    alpha_key,
    fresh_name,
    free_vars,
    subst_term,
    substitute,
    term_vars,
)


class Classical(Enum):
    TND = "TND"
    RAA = "RAA"
    RAA_RULE = "RAA_RULE"
    PEIRCE = "PEIRCE"


# ---------------------------------------------------------------------------
# rules


@dataclass(frozen=True, slots=True)
class Hyp:
    formula: Formula
    label: int | None = None


@dataclass(frozen=True, slots=True)
class ImpliesI:
    assume: Formula
    label: int


@dataclass(frozen=True, slots=True)
class ImpliesE:
    pass


@dataclass(frozen=True, slots=True)
class AndI:
    pass


@dataclass(frozen=True, slots=True)
class AndEL:
    pass


@dataclass(frozen=True, slots=True)
class AndER:
    pass


@dataclass(frozen=True, slots=True)
class OrIL:
    other: Formula


@dataclass(frozen=True, slots=True)
class OrIR:
    other: Formula


@dataclass(frozen=True, slots=True)
class OrE:
    label: int


@dataclass(frozen=True, slots=True)
class BotE:
    target: Formula


@dataclass(frozen=True, slots=True)
class ForallI:
    eigen: str


@dataclass(frozen=True, slots=True)
class ForallE:
    term: Term


@dataclass(frozen=True, slots=True)
class ExistsI:
    witness: Term
    target: Formula


@dataclass(frozen=True, slots=True)
class ExistsE:
    label: int
    eigen: str


@dataclass(frozen=True, slots=True)
class AxiomTND:
    a: Formula


@dataclass(frozen=True, slots=True)
class AxiomRAA:
    a: Formula


@dataclass(frozen=True, slots=True)
class RuleRAA:
    a: Formula
    label: int


@dataclass(frozen=True, slots=True)
class AxiomPeirce:
    p: Formula
    q: Formula


Rule = Union[
    Hyp, ImpliesI, ImpliesE, AndI, AndEL, AndER, OrIL, OrIR, OrE, BotE,
    ForallI, ForallE, ExistsI, ExistsE, AxiomTND, AxiomRAA, RuleRAA, AxiomPeirce,
]

ARITY: dict[type, int] = {
    Hyp: 0, AxiomTND: 0, AxiomRAA: 0, AxiomPeirce: 0,
    ImpliesI: 1, AndEL: 1, AndER: 1, OrIL: 1, OrIR: 1, BotE: 1,
    ForallI: 1, ForallE: 1, ExistsI: 1, RuleRAA: 1,
    ImpliesE: 2, AndI: 2, ExistsE: 2,
    OrE: 3,
}

CLASSICAL_KIND: dict[type, Classical] = {
    AxiomTND: Classical.TND,
    AxiomRAA: Classical.RAA,
    RuleRAA: Classical.RAA_RULE,
    AxiomPeirce: Classical.PEIRCE,
}

# premises in which a rule's label binds hypotheses
BINDING_PREMISES: dict[type, tuple[int, ...]] = {
    ImpliesI: (0,),
    OrE: (1, 2),
    ExistsE: (1,),
    RuleRAA: (0,),
}


def declared_label(rule: Rule) -> int | None:
    if type(rule) in BINDING_PREMISES:
        return rule.label
    return None


@dataclass(frozen=True, slots=True)
class Proof:
    rule: Rule
    premises: tuple[Proof, ...] = ()
    size: int = field(init=False, compare=False, repr=False)
    height: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not isinstance(self.premises, tuple):
            object.__setattr__(self, "premises", tuple(self.premises))
        object.__setattr__(self, "size", 1 + sum(p.size for p in self.premises))
        object.__setattr__(
            self, "height", 1 + max(p.height for p in self.premises) if self.premises else 0
        )

    def __iter__(self) -> Iterator[Proof]:
        """Pre-order walk over all nodes."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.premises))


def node(rule: Rule, *premises: Proof) -> Proof:
    return Proof(rule, premises)


def hyp(f: Formula, label: int | None = None) -> Proof:
    return Proof(Hyp(f, label))


def proof_size(p: Proof) -> int:
    return p.size


def proof_height(p: Proof) -> int:
    return p.height


def classical_axioms_used(p: Proof) -> set[Classical]:
    return {CLASSICAL_KIND[type(n.rule)] for n in p if type(n.rule) in CLASSICAL_KIND}


class DanglingLabel(ValueError):
    def __init__(self, label: int, path: tuple[int, ...]):
        super().__init__(f"hypothesis label {label} is not bound by any enclosing rule")
        self.label = label
        self.path = path


def open_hypotheses(p: Proof) -> Counter:
    """Multiset of undischarged hypotheses, keyed by alpha-class.

    Values of the returned Counter are multiplicities; use
    :func:`open_hypothesis_list` to get the formulas themselves.
    """
    return Counter(alpha_key(f) for f in open_hypothesis_list(p))


def open_hypothesis_list(p: Proof) -> list[Formula]:
    out: list[Formula] = []

    def walk(n: Proof, scope: frozenset[int], path: tuple[int, ...]) -> None:
        r = n.rule
        if isinstance(r, Hyp):
            if r.label is None:
                out.append(r.formula)
            elif r.label not in scope:
                raise DanglingLabel(r.label, path)
            return
        lab = declared_label(r)
        binds = BINDING_PREMISES.get(type(r), ())
        for i, q in enumerate(n.premises):
            walk(q, scope | {lab} if i in binds else scope, path + (i,))

    walk(p, frozenset(), ())
    return out


def labels_declared(p: Proof) -> list[int]:
    return [lab for n in p if (lab := declared_label(n.rule)) is not None]


def max_label(p: Proof) -> int:
    labs = [n.rule.label for n in p if getattr(n.rule, "label", None) is not None]
    return max(labs, default=0)


class LabelSupply:
    """Source of fresh discharge labels."""

    def __init__(self, start: int = 1):
        self._counter = itertools.count(start)

    def __call__(self) -> int:
        return next(self._counter)

    @classmethod
    def after(cls, *proofs: Proof) -> LabelSupply:
        return cls(max((max_label(p) for p in proofs), default=0) + 1)


# ---------------------------------------------------------------------------
# structural surgery used by the proof builders


def map_formulas(rule: Rule, fn: Callable[[Formula], Formula],
                 tfn: Callable[[Term], Term]) -> Rule:
    match rule:
        case Hyp(f, lab):
            return Hyp(fn(f), lab)
        case ImpliesI(a, lab):
            return ImpliesI(fn(a), lab)
        case OrIL(o):
            return OrIL(fn(o))
        case OrIR(o):
            return OrIR(fn(o))
        case BotE(t):
            return BotE(fn(t))
        case ForallE(t):
            return ForallE(tfn(t))
        case ExistsI(w, t):
            return ExistsI(tfn(w), fn(t))
        case AxiomTND(a):
            return AxiomTND(fn(a))
        case AxiomRAA(a):
            return AxiomRAA(fn(a))
        case RuleRAA(a, lab):
            return RuleRAA(fn(a), lab)
        case AxiomPeirce(a, b):
            return AxiomPeirce(fn(a), fn(b))
    return rule


def rule_formulas(rule: Rule) -> list:
    """Formulas and terms annotating a rule."""
    out: list = []
    map_formulas(rule, lambda f: out.append(f) or f, lambda t: out.append(t) or t)
    return out


def proof_vars(p: Proof) -> set[str]:
    """All variable names mentioned anywhere in p, eigenvariables included."""
    out: set[str] = set()
    for n in p:
        r = n.rule
        if isinstance(r, (ForallI, ExistsE)):
            out.add(r.eigen)
        for x in rule_formulas(r):
            out |= term_vars(x) if isinstance(x, (Var, Fn)) else all_vars(x)
    return out


def hypothesis_vars(p: Proof) -> set[str]:
    """Free variables of every hypothesis leaf in p (a superset of the open ones)."""
    out: set[str] = set()
    for n in p:
        if isinstance(n.rule, Hyp):
            out |= free_vars(n.rule.formula)
    return out


def rename_variable(p: Proof, x: str, z: str) -> Proof:
    """Replace free occurrences of variable x by z throughout p.

    Descent stops below rules that rebind x as their own eigenvariable.
    z must not occur anywhere in p.
    """
    zt = Var(z)
    r = p.rule
    if isinstance(r, ForallI) and r.eigen == x:
        return p
    if isinstance(r, ExistsE) and r.eigen == x:
        return Proof(r, (rename_variable(p.premises[0], x, z), p.premises[1]))
    new_rule = map_formulas(r, lambda f: substitute(f, x, zt), lambda t: subst_term(t, x, zt))
    return Proof(new_rule, tuple(rename_variable(q, x, z) for q in p.premises))


def rename_eigenvariables(p: Proof, avoid: set[str]) -> Proof:
    """Alpha-rename every eigenvariable of p that lies in ``avoid``.

    The result proves an alpha-equivalent conclusion from the same open
    hypotheses.
    """
    if not avoid:
        return p
    r = p.rule
    prem = p.premises
    if isinstance(r, ForallI) and r.eigen in avoid:
        z = fresh_name(r.eigen, avoid | proof_vars(p))
        body = rename_variable(prem[0], r.eigen, z)
        return Proof(ForallI(z), (rename_eigenvariables(body, avoid),))
    if isinstance(r, ExistsE) and r.eigen in avoid:
        z = fresh_name(r.eigen, avoid | proof_vars(p))
        minor = rename_variable(prem[1], r.eigen, z)
        return Proof(ExistsE(r.label, z), (rename_eigenvariables(prem[0], avoid),
                                           rename_eigenvariables(minor, avoid)))
    if not prem:
        return p
    return Proof(r, tuple(rename_eigenvariables(q, avoid) for q in prem))


def relabel(p: Proof, fresh: Callable[[], int]) -> Proof:
    """Copy of p whose declared labels are all replaced by fresh ones."""

    def walk(n: Proof, env: dict[int, int]) -> Proof:
        r = n.rule
        if isinstance(r, Hyp):
            if r.label is not None and r.label in env:
                return Proof(Hyp(r.formula, env[r.label]))
            return n
        lab = declared_label(r)
        if lab is None:
            return Proof(r, tuple(walk(q, env) for q in n.premises))
        new = fresh()
        inner = {**env, lab: new}
        binds = BINDING_PREMISES[type(r)]
        prem = tuple(walk(q, inner if i in binds else env) for i, q in enumerate(n.premises))
        if isinstance(r, ExistsE):
            return Proof(ExistsE(new, r.eigen), prem)
        if isinstance(r, ImpliesI):
            return Proof(ImpliesI(r.assume, new), prem)
        if isinstance(r, RuleRAA):
            return Proof(RuleRAA(r.a, new), prem)
        return Proof(OrE(new), prem)

    return walk(p, {})


def discharge(p: Proof, f: Formula, label: int) -> Proof:
    """Attach ``label`` to every unlabelled hypothesis leaf alpha-equal to f."""
    r = p.rule
    if isinstance(r, Hyp):
        if r.label is None and alpha_eq(r.formula, f):
            return Proof(Hyp(r.formula, label))
        return p
    if not p.premises:
        return p
    return Proof(r, tuple(discharge(q, f, label) for q in p.premises))


def graft(target: Proof, f: Formula, replacement: Proof,
          fresh: Callable[[], int]) -> Proof:
    """Substitute ``replacement`` for each open, unlabelled leaf of f in target.

    Every copy gets fresh labels, and eigenvariables of target that would
    capture a free variable of the replacement's hypotheses are renamed.
    """
    avoid = hypothesis_vars(replacement)
    target = rename_eigenvariables(target, avoid)
    first = [True]

    def walk(n: Proof) -> Proof:
        r = n.rule
        if isinstance(r, Hyp):
            if r.label is None and alpha_eq(r.formula, f):
                if first[0]:
                    first[0] = False
                    return replacement
                return relabel(replacement, fresh)
            return n
        if not n.premises:
            return n
        return Proof(r, tuple(walk(q) for q in n.premises))

    return walk(target)
