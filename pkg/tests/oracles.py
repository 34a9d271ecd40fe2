"""Independent oracles: classical truth tables over quantifier-free formulas."""

from __future__ import annotations

import itertools

from glivenko.syntax import And, Atom, Bottom, Exists, Forall, Implies, Or


def propositional_atoms(f) -> set:
    match f:
        case Bottom():
            return set()
        case Atom():
            return {f}
        case And(l, r) | Or(l, r) | Implies(l, r):
            return propositional_atoms(l) | propositional_atoms(r)
        case Forall() | Exists():
            raise ValueError("quantified formula has no truth table")
    raise TypeError(f)


def evaluate(f, valuation: dict) -> bool:
    match f:
        case Bottom():
            return False
        case Atom():
            return valuation[f]
        case And(l, r):
            return evaluate(l, valuation) and evaluate(r, valuation)
        case Or(l, r):
            return evaluate(l, valuation) or evaluate(r, valuation)
        case Implies(l, r):
            return (not evaluate(l, valuation)) or evaluate(r, valuation)
    raise ValueError(f"cannot evaluate {f!r}")


def is_quantifier_free(f) -> bool:
    try:
        propositional_atoms(f)
    except ValueError:
        return False
    return True


def is_tautology(f, max_atoms: int = 6) -> bool:
    atoms = sorted(propositional_atoms(f), key=repr)
    if len(atoms) > max_atoms:
        raise ValueError(f"{len(atoms)} atoms exceeds the {max_atoms}-atom budget")
    for bits in itertools.product((False, True), repeat=len(atoms)):
        if not evaluate(f, dict(zip(atoms, bits))):
            return False
    return True


def sexp_shape(text: str) -> tuple[int, int]:
    """(node count, height) of a proof file, read straight off its parentheses."""
    nodes = depth = deepest = 0
    in_string = escaped = False
    for line in text.splitlines():
        if line.lstrip().startswith(";"):
            continue
        for ch in line:
            if in_string:
                if escaped:
                    escaped = False
                elif ch == "\\":
                    escaped = True
                elif ch == '"':
                    in_string = False
            elif ch == '"':
                in_string = True
            elif ch == "(":
                nodes += 1
                depth += 1
                deepest = max(deepest, depth)
            elif ch == ")":
                depth -= 1
    return nodes, deepest - 1
