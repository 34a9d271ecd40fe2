"""Proof checking kernel.

``check`` recomputes the conclusion of every node bottom-up and returns the
judgment of the whole tree. It is the only component that decides whether a
tree is a proof; every builder in the package is validated against it.
"""

from __future__ import annotations

import logging
import sys
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .proof import (
    ARITY,
    BINDING_PREMISES,
    CLASSICAL_KIND,
    AndEL,
    AndER,
    AndI,
    AxiomPeirce,
    AxiomRAA,
    AxiomTND,
    BotE,
    Classical,
    ExistsE,
    ExistsI,
    ForallE,
    ForallI,
    Hyp,
    ImpliesE,
    ImpliesI,
    OrE,
    OrIL,
    OrIR,
    Proof,
    RuleRAA,
    rule_formulas,
)
from .syntax import (
    BOT,
    And,
    ArityClash,
    Bottom,
    Exists,
    Forall,
    Formula,
    Implies,
    Or,
    Var,
    alpha_eq,
    alpha_key,
    collect_arities,
    free_vars,
    is_variable_name,
    neg,
    print_formula,
    substitute,
)

log = logging.getLogger(__name__)

if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)

Mode = frozenset
NJ: frozenset[Classical] = frozenset()
NK: frozenset[Classical] = frozenset(Classical)

MODES: dict[str, frozenset[Classical]] = {
    "nj": NJ,
    "nk": NK,
    "nk-tnd": frozenset({Classical.TND}),
    "nk-raa": frozenset({Classical.RAA, Classical.RAA_RULE}),
    "nk-peirce": frozenset({Classical.PEIRCE}),
}


class ErrorKind(Enum):
    RuleMismatch = "RuleMismatch"
    DanglingLabel = "DanglingLabel"
    DuplicateLabel = "DuplicateLabel"
    EigenvariableViolation = "EigenvariableViolation"
    ClassicalRuleNotAdmitted = "ClassicalRuleNotAdmitted"
    ArityError = "ArityError"
    ConclusionMismatch = "ConclusionMismatch"


def format_path(path: tuple[int, ...]) -> str:
    return "/" + "/".join(map(str, path))


class CheckError(Exception):
    def __init__(self, kind: ErrorKind, path: tuple[int, ...], detail: str):
        super().__init__(f"{format_path(path)}: {kind.value}: {detail}")
        self.kind = kind
        self.path = path
        self.detail = detail


@dataclass(frozen=True)
class Judgment:
    context: tuple[Formula, ...]
    conclusion: Formula

    def __str__(self) -> str:
        ctx = ", ".join(print_formula(f) for f in self.context)
        return f"{ctx} ⊢ {print_formula(self.conclusion)}" if ctx else \
            f"⊢ {print_formula(self.conclusion)}"

    def context_multiset(self) -> Counter:
        return Counter(alpha_key(f) for f in self.context)

    def context_set(self) -> frozenset:
        return frozenset(alpha_key(f) for f in self.context)

    def free_vars(self) -> set[str]:
        out = free_vars(self.conclusion)
        for f in self.context:
            out |= free_vars(f)
        return out


def show(f: Formula) -> str:
    return print_formula(f)


class _Kernel:
    def __init__(self, mode: Iterable[Classical]):
        self.mode = frozenset(mode)
        self.declared: dict[int, tuple[int, ...]] = {}

    def fail(self, kind: ErrorKind, path, detail: str):
        raise CheckError(kind, path, detail)

    def expect(self, ok: bool, path, detail: str) -> None:
        if not ok:
            self.fail(ErrorKind.RuleMismatch, path, detail)

    def run(self, p: Proof, path: tuple[int, ...], scope: Mapping[int, Formula]):
        """Return (conclusion, open hypotheses as [(formula, label|None)])."""
        r = p.rule
        kind = type(r)
        if kind not in ARITY:
            self.fail(ErrorKind.RuleMismatch, path, f"unknown rule {r!r}")
        if len(p.premises) != ARITY[kind]:
            self.fail(ErrorKind.ArityError, path,
                      f"{kind.__name__} takes {ARITY[kind]} premises, got {len(p.premises)}")
        if kind in CLASSICAL_KIND and CLASSICAL_KIND[kind] not in self.mode:
            self.fail(ErrorKind.ClassicalRuleNotAdmitted, path,
                      f"{CLASSICAL_KIND[kind].value} is not admitted in this mode")

        if kind in BINDING_PREMISES:
            lab = r.label
            if not isinstance(lab, int) or isinstance(lab, bool) or lab <= 0:
                self.fail(ErrorKind.RuleMismatch, path, f"label must be a positive integer: {lab!r}")
            if lab in self.declared:
                self.fail(ErrorKind.DuplicateLabel, path,
                          f"label {lab} already declared at {format_path(self.declared[lab])}")
            self.declared[lab] = path

        def sub(i: int, extra: Mapping[int, Formula] | None = None):
            return self.run(p.premises[i], path + (i,), {**scope, **extra} if extra else scope)

        def close(hyps, lab):
            return [h for h in hyps if h[1] != lab]

        match r:
            case Hyp(f, lab):
                if lab is None:
                    return f, [(f, None)]
                if lab not in scope:
                    self.fail(ErrorKind.DanglingLabel, path,
                              f"label {lab} is not bound by an enclosing rule")
                self.expect(alpha_eq(f, scope[lab]), path,
                            f"hypothesis {show(f)} labelled {lab} but the label "
                            f"discharges {show(scope[lab])}")
                return f, [(f, lab)]

            case ImpliesI(a, lab):
                b, hyps = sub(0, {lab: a})
                return Implies(a, b), close(hyps, lab)

            case ImpliesE():
                a, h1 = sub(0)
                ab, h2 = sub(1)
                self.expect(isinstance(ab, Implies), path,
                            f"second premise of ->e must be an implication, got {show(ab)}")
                self.expect(alpha_eq(ab.left, a), path,
                            f"->e: {show(a)} does not match antecedent of {show(ab)}")
                return ab.right, h1 + h2

            case AndI():
                a, h1 = sub(0)
                b, h2 = sub(1)
                return And(a, b), h1 + h2

            case AndEL() | AndER():
                c, hyps = sub(0)
                self.expect(isinstance(c, And), path, f"&e expects a conjunction, got {show(c)}")
                return (c.left if kind is AndEL else c.right), hyps

            case OrIL(other):
                a, hyps = sub(0)
                return Or(a, other), hyps

            case OrIR(other):
                b, hyps = sub(0)
                return Or(other, b), hyps

            case OrE(lab):
                d, h0 = sub(0)
                self.expect(isinstance(d, Or), path, f"|e expects a disjunction, got {show(d)}")
                c1, h1 = sub(1, {lab: d.left})
                c2, h2 = sub(2, {lab: d.right})
                self.expect(alpha_eq(c1, c2), path,
                            f"|e branches conclude {show(c1)} and {show(c2)}")
                return c1, h0 + close(h1, lab) + close(h2, lab)

            case BotE(target):
                c, hyps = sub(0)
                self.expect(isinstance(c, Bottom), path, f"bot_e expects bot, got {show(c)}")
                return target, hyps

            case ForallI(x):
                self.eigen_name(x, path)
                a, hyps = sub(0)
                for h, _ in hyps:
                    if x in free_vars(h):
                        self.fail(ErrorKind.EigenvariableViolation, path,
                                  f"{x} is free in open hypothesis {show(h)}")
                return Forall(x, a), hyps

            case ForallE(t):
                c, hyps = sub(0)
                self.expect(isinstance(c, Forall), path,
                            f"forall_e expects a universal, got {show(c)}")
                return substitute(c.body, c.var, t), hyps

            case ExistsI(w, target):
                a, hyps = sub(0)
                self.expect(isinstance(target, Exists), path,
                            f"exists_i target must be existential, got {show(target)}")
                inst = substitute(target.body, target.var, w)
                self.expect(alpha_eq(a, inst), path,
                            f"exists_i premise {show(a)} is not {show(inst)}")
                return target, hyps

            case ExistsE(lab, x):
                self.eigen_name(x, path)
                e, h0 = sub(0)
                self.expect(isinstance(e, Exists), path,
                            f"exists_e expects an existential, got {show(e)}")
                if x in free_vars(e):
                    self.fail(ErrorKind.EigenvariableViolation, path,
                              f"{x} is free in {show(e)}")
                body = substitute(e.body, e.var, Var(x))
                c, h1 = sub(1, {lab: body})
                if x in free_vars(c):
                    self.fail(ErrorKind.EigenvariableViolation, path,
                              f"{x} is free in the conclusion {show(c)}")
                rest = close(h1, lab)
                for h, _ in rest:
                    if x in free_vars(h):
                        self.fail(ErrorKind.EigenvariableViolation, path,
                                  f"{x} is free in open hypothesis {show(h)}")
                return c, h0 + rest

            case AxiomTND(a):
                return Or(a, neg(a)), []

            case AxiomRAA(a):
                return Implies(neg(neg(a)), a), []

            case RuleRAA(a, lab):
                c, hyps = sub(0, {lab: neg(a)})
                self.expect(isinstance(c, Bottom), path, f"raa_rule expects bot, got {show(c)}")
                return a, close(hyps, lab)

            case AxiomPeirce(a, b):
                return Implies(Implies(Implies(a, b), a), a), []

        self.fail(ErrorKind.RuleMismatch, path, f"unknown rule {r!r}")

    def eigen_name(self, x, path) -> None:
        if not isinstance(x, str) or not is_variable_name(x):
            self.fail(ErrorKind.RuleMismatch, path,
                      f"eigenvariable {x!r} is not a variable name")


def _check_signature(p: Proof) -> None:
    sig: dict = {}
    stack = [(p, ())]
    while stack:
        n, path = stack.pop()
        try:
            for x in rule_formulas(n.rule):
                collect_arities(x, sig)
        except ArityClash as exc:
            raise CheckError(ErrorKind.ArityError, path, str(exc)) from None
        stack.extend((q, path + (i,)) for i, q in enumerate(n.premises))


def check(p: Proof, mode: Iterable[Classical] = NJ, *,
          scope: Mapping[int, Formula] | None = None) -> Judgment:
    """Validate p and return its judgment.

    ``scope`` pre-binds labels (label -> hypothesis formula) so an open
    fragment of a larger proof can be checked on its own; hypotheses carrying
    those labels are reported in the context.

    Raises CheckError at the first offending node.
    """
    _check_signature(p)
    kernel = _Kernel(mode)
    if scope:
        kernel.declared.update({lab: ("scope",) for lab in scope})
    conclusion, hyps = kernel.run(p, (), dict(scope or {}))
    return Judgment(tuple(h for h, _ in hyps), conclusion)


def conclusion(p: Proof, mode: Iterable[Classical] = NK) -> Formula:
    return check(p, mode).conclusion


def judgment_matches(j: Judgment, expected: Judgment, context_as_set: bool = False) -> bool:
    if not alpha_eq(j.conclusion, expected.conclusion):
        return False
    if context_as_set:
        return j.context_set() == expected.context_set()
    return j.context_multiset() == expected.context_multiset()


def check_sequent(p: Proof, mode: Iterable[Classical], expected: Judgment,
                  context_as_set: bool = False) -> bool:
    try:
        j = check(p, mode)
    except CheckError as exc:
        log.debug("check_sequent: %s", exc)
        return False
    ok = judgment_matches(j, expected, context_as_set)
    if not ok:
        log.debug("check_sequent: proved %s, expected %s", j, expected)
    return ok


def sequent(context: Iterable[Formula], conclusion: Formula) -> Judgment:
    return Judgment(tuple(context), conclusion)


__all__ = [
    "BOT", "CheckError", "ErrorKind", "Judgment", "MODES", "Mode", "NJ", "NK",
    "check", "check_sequent", "conclusion", "judgment_matches", "sequent",
]
