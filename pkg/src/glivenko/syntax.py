"""First-order terms and formulas.

Negation has no node of its own: ``~A`` is ``Implies(A, Bottom)``.

A 0-ary identifier in term position is a variable when it is bound by an
enclosing quantifier or when its name starts with one of ``u v w x y z``;
otherwise it is a constant (a 0-ary function symbol).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

VARIABLE_INITIALS = "uvwxyz"
KEYWORDS = frozenset({"bot", "forall", "exists"})
_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def is_identifier(name: str) -> bool:
    return bool(_IDENT.fullmatch(name)) and name not in KEYWORDS


def is_variable_name(name: str) -> bool:
    return is_identifier(name) and name[0] in VARIABLE_INITIALS


# ---------------------------------------------------------------------------
# terms


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Fn:
    """Function symbol applied to arguments; constants have no arguments."""

    symbol: str
    args: tuple[Term, ...] = ()

    def __str__(self) -> str:
        return print_term(self)


Term = Union[Var, Fn]


# ---------------------------------------------------------------------------
# formulas


@dataclass(frozen=True, slots=True)
class Bottom:
    def __str__(self) -> str:
        return "bot"


@dataclass(frozen=True, slots=True)
class Atom:
    symbol: str
    args: tuple[Term, ...] = ()

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True, slots=True)
class And:
    left: Formula
    right: Formula

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True, slots=True)
class Or:
    left: Formula
    right: Formula

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True, slots=True)
class Implies:
    left: Formula
    right: Formula

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True, slots=True)
class Forall:
    var: str
    body: Formula

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True, slots=True)
class Exists:
    var: str
    body: Formula

    def __str__(self) -> str:
        return print_formula(self)


Formula = Union[Bottom, Atom, And, Or, Implies, Forall, Exists]
Quantifier = (Forall, Exists)

BOT = Bottom()


def neg(f: Formula) -> Formula:
    return Implies(f, BOT)


def is_neg(f: Formula) -> bool:
    return isinstance(f, Implies) and isinstance(f.right, Bottom)


def atom(symbol: str, *args: Term) -> Atom:
    return Atom(symbol, tuple(args))


# ---------------------------------------------------------------------------
# variables


def term_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    out: set[str] = set()
    for a in t.args:
        out |= term_vars(a)
    return out


def free_vars(f: Formula) -> set[str]:
    """Variables with at least one occurrence outside a binder for them."""
    match f:
        case Bottom():
            return set()
        case Atom(_, args):
            out: set[str] = set()
            for a in args:
                out |= term_vars(a)
            return out
        case And(l, r) | Or(l, r) | Implies(l, r):
            return free_vars(l) | free_vars(r)
        case Forall(x, body) | Exists(x, body):
            return free_vars(body) - {x}
    raise TypeError(f"not a formula: {f!r}")


def all_vars(f: Formula) -> set[str]:
    """Every variable name in f, free or bound, including binder names."""
    match f:
        case Bottom():
            return set()
        case Atom():
            return free_vars(f)
        case And(l, r) | Or(l, r) | Implies(l, r):
            return all_vars(l) | all_vars(r)
        case Forall(x, body) | Exists(x, body):
            return all_vars(body) | {x}
    raise TypeError(f"not a formula: {f!r}")


def fresh_name(base: str, avoid: set[str] | frozenset[str]) -> str:
    stem = base.rstrip("0123456789") or base
    i = 1
    while f"{stem}{i}" in avoid:
        i += 1
    return f"{stem}{i}"


# ---------------------------------------------------------------------------
# substitution


def subst_term(t: Term, x: str, s: Term) -> Term:
    if isinstance(t, Var):
        return s if t.name == x else t
    if not t.args:
        return t
    return Fn(t.symbol, tuple(subst_term(a, x, s) for a in t.args))


def substitute(f: Formula, x: str, t: Term) -> Formula:
    """Capture-avoiding ``f[x := t]``."""
    return _subst(f, x, t, frozenset(term_vars(t)))


def _subst(f: Formula, x: str, t: Term, tv: frozenset[str]) -> Formula:
    match f:
        case Bottom():
            return f
        case Atom(p, args):
            return Atom(p, tuple(subst_term(a, x, t) for a in args))
        case And(l, r):
            return And(_subst(l, x, t, tv), _subst(r, x, t, tv))
        case Or(l, r):
            return Or(_subst(l, x, t, tv), _subst(r, x, t, tv))
        case Implies(l, r):
            return Implies(_subst(l, x, t, tv), _subst(r, x, t, tv))
        case Forall(y, body) | Exists(y, body):
            if y == x or x not in free_vars(body):
                return f
            if y in tv:
                z = fresh_name(y, tv | all_vars(body) | {x})
                body = _subst(body, y, Var(z), frozenset({z}))
                y = z
            return type(f)(y, _subst(body, x, t, tv))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# alpha-equivalence


def _term_key(t: Term, env: dict[str, int], depth: int):
    if isinstance(t, Var):
        if t.name in env:
            return ("b", depth - env[t.name])
        return ("v", t.name)
    return ("f", t.symbol, tuple(_term_key(a, env, depth) for a in t.args))


def _key(f: Formula, env: dict[str, int], depth: int):
    match f:
        case Bottom():
            return ("bot",)
        case Atom(p, args):
            return ("atom", p, tuple(_term_key(a, env, depth) for a in args))
        case And(l, r):
            return ("and", _key(l, env, depth), _key(r, env, depth))
        case Or(l, r):
            return ("or", _key(l, env, depth), _key(r, env, depth))
        case Implies(l, r):
            return ("imp", _key(l, env, depth), _key(r, env, depth))
        case Forall(x, body):
            return ("all", _key(body, {**env, x: depth + 1}, depth + 1))
        case Exists(x, body):
            return ("ex", _key(body, {**env, x: depth + 1}, depth + 1))
    raise TypeError(f"not a formula: {f!r}")


def alpha_key(f: Formula):
    """Hashable canonical form: equal keys iff alpha-equivalent formulas."""
    return _key(f, {}, 0)


def _term_eq(s: Term, t: Term, es: dict, et: dict) -> bool:
    if isinstance(s, Var) and isinstance(t, Var):
        bs, bt = es.get(s.name), et.get(t.name)
        if bs is None and bt is None:
            return s.name == t.name
        return bs == bt
    if isinstance(s, Fn) and isinstance(t, Fn):
        return (
            s.symbol == t.symbol
            and len(s.args) == len(t.args)
            and all(_term_eq(a, b, es, et) for a, b in zip(s.args, t.args))
        )
    return False


def _alpha(f: Formula, g: Formula, ef: dict, eg: dict, depth: int) -> bool:
    if f is g and not ef and not eg:
        return True
    match f, g:
        case Bottom(), Bottom():
            return True
        case Atom(p, a1), Atom(q, a2):
            return (
                p == q
                and len(a1) == len(a2)
                and all(_term_eq(s, t, ef, eg) for s, t in zip(a1, a2))
            )
        case (And(l1, r1), And(l2, r2)) | (Or(l1, r1), Or(l2, r2)) | (
            Implies(l1, r1),
            Implies(l2, r2),
        ):
            return _alpha(l1, l2, ef, eg, depth) and _alpha(r1, r2, ef, eg, depth)
        case (Forall(x, b1), Forall(y, b2)) | (Exists(x, b1), Exists(y, b2)):
            d = depth + 1
            return _alpha(b1, b2, {**ef, x: d}, {**eg, y: d}, d)
    return False


def alpha_eq(f: Formula, g: Formula) -> bool:
    return _alpha(f, g, {}, {}, 0)


# ---------------------------------------------------------------------------
# signatures


class ArityClash(ValueError):
    pass


def collect_arities(obj, sig: dict[tuple[str, str], int] | None = None) -> dict:
    """Record ``(kind, symbol) -> arity`` for a formula or term.

    Raises ArityClash when a symbol reappears with another arity.
    """
    if sig is None:
        sig = {}

    def note(kind: str, name: str, n: int) -> None:
        old = sig.setdefault((kind, name), n)
        if old != n:
            raise ArityClash(f"{kind} symbol {name!r} used with arity {old} and {n}")

    def walk_term(t: Term) -> None:
        if isinstance(t, Fn):
            note("function", t.symbol, len(t.args))
            for a in t.args:
                walk_term(a)

    stack = [obj]
    while stack:
        f = stack.pop()
        match f:
            case Var() | Fn():
                walk_term(f)
            case Atom(p, args):
                note("predicate", p, len(args))
                for a in args:
                    walk_term(a)
            case And(l, r) | Or(l, r) | Implies(l, r):
                stack += [l, r]
            case Forall(_, body) | Exists(_, body):
                stack.append(body)
    return sig


# ---------------------------------------------------------------------------
# printing

_PREC = {Implies: 1, Or: 2, And: 3}


def print_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if not t.args:
        return t.symbol
    return f"{t.symbol}({','.join(print_term(a) for a in t.args)})"


_ASCII = {"bot": "bot", "neg": "~", "and": " & ", "or": " | ", "imp": " -> ",
          "forall": "forall ", "exists": "exists "}
_UNICODE = {"bot": "⊥", "neg": "¬", "and": " ∧ ", "or": " ∨ ", "imp": " → ",
            "forall": "∀", "exists": "∃"}


def print_formula(f: Formula, unicode: bool = False) -> str:
    """Render with minimal parentheses; ``A -> bot`` prints as ``~A``."""
    return _show(f, 0, _UNICODE if unicode else _ASCII)


def _show(f: Formula, ctx: int, sym: dict[str, str]) -> str:
    # ctx: 0 top, 1 operand of ->, 2 of |, 3 of &, 4 operand of ~
    match f:
        case Bottom():
            return sym["bot"]
        case Atom(p, args):
            if not args:
                return p
            return f"{p}({','.join(print_term(a) for a in args)})"
        case Implies(a, Bottom()):
            return sym["neg"] + _show(a, 4, sym)
        case Forall(x, body) | Exists(x, body):
            q = sym["forall"] if isinstance(f, Forall) else sym["exists"]
            s = f"{q}{x}. {_show(body, 0, sym)}"
            return s if ctx == 0 else f"({s})"
        case Implies(l, r):
            s = f"{_show(l, 2, sym)}{sym['imp']}{_show(r, 1, sym)}"
            return s if ctx <= 1 else f"({s})"
        case Or(l, r):
            s = f"{_show(l, 2, sym)}{sym['or']}{_show(r, 3, sym)}"
            return s if ctx <= 2 else f"({s})"
        case And(l, r):
            s = f"{_show(l, 3, sym)}{sym['and']}{_show(r, 4, sym)}"
            return s if ctx <= 3 else f"({s})"
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# parsing


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        super().__init__(f"{message} at position {pos}" + (f" in {text!r}" if text else ""))
        self.message = message
        self.text = text
        self.pos = pos


_UNICODE_IN = {"¬": "~", "∧": "&", "∨": "|", "→": "->", "⊥": "bot", "∀": "forall ",
               "∃": "exists "}
_TOKEN = re.compile(
    r"\s*(?:(?P<arrow>->)|(?P<punct>[~&|().,])|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<bad>\S))"
)


def _normalize(text: str) -> str:
    # keep positions stable for ASCII input; Unicode input is rewritten first
    if any(c in text for c in _UNICODE_IN):
        for u, a in _UNICODE_IN.items():
            text = text.replace(u, a)
    return text


def _tokens(text: str) -> Iterator[tuple[str, str, int]]:
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.lastgroup is None:
            break
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {value!r}", text, start)
        yield ("->" if kind == "arrow" else value if kind == "punct" else "ident",
               value, start)
        pos = m.end()
    yield ("eof", "", n)


class _Parser:
    def __init__(self, text: str):
        self.text = _normalize(text)
        self.toks = list(_tokens(self.text))
        self.i = 0
        self.sig: dict[tuple[str, str], int] = {}

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg: str, pos: int | None = None):
        raise ParseError(msg, self.text, self.peek()[2] if pos is None else pos)

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.next()
        if tok[0] != kind:
            self.i -= 1
            self.fail(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def note(self, kind: str, name: str, n: int, pos: int) -> None:
        old = self.sig.setdefault((kind, name), n)
        if old != n:
            self.fail(f"{kind} symbol {name!r} used with arity {old} and {n}", pos)

    def done(self) -> None:
        tok = self.peek()
        if tok[0] != "eof":
            self.fail(f"unexpected {tok[1]!r}")

    def formula(self, bound: frozenset[str]) -> Formula:
        left = self.disj(bound)
        if self.peek()[0] == "->":
            self.next()
            return Implies(left, self.formula(bound))
        return left

    def disj(self, bound: frozenset[str]) -> Formula:
        f = self.conj(bound)
        while self.peek()[0] == "|":
            self.next()
            f = Or(f, self.conj(bound))
        return f

    def conj(self, bound: frozenset[str]) -> Formula:
        f = self.unary(bound)
        while self.peek()[0] == "&":
            self.next()
            f = And(f, self.unary(bound))
        return f

    def unary(self, bound: frozenset[str]) -> Formula:
        kind, value, pos = self.peek()
        if kind == "~":
            self.next()
            return neg(self.unary(bound))
        if kind == "(":
            self.next()
            f = self.formula(bound)
            self.expect(")")
            return f
        if kind == "ident":
            self.next()
            if value == "bot":
                return BOT
            if value in ("forall", "exists"):
                _, x, xpos = self.expect("ident")
                if x in KEYWORDS:
                    self.fail(f"keyword {x!r} cannot be bound", xpos)
                self.expect(".")
                body = self.formula(bound | {x})
                return Forall(x, body) if value == "forall" else Exists(x, body)
            args = self.args(bound)
            self.note("predicate", value, len(args), pos)
            return Atom(value, args)
        self.fail(f"expected a formula, found {value or 'end of input'!r}")

    def args(self, bound: frozenset[str]) -> tuple[Term, ...]:
        if self.peek()[0] != "(":
            return ()
        self.next()
        out = [self.term(bound)]
        while self.peek()[0] == ",":
            self.next()
            out.append(self.term(bound))
        self.expect(")")
        return tuple(out)

    def term(self, bound: frozenset[str]) -> Term:
        _, name, pos = self.expect("ident")
        if name in KEYWORDS:
            self.fail(f"keyword {name!r} in term position", pos)
        if self.peek()[0] == "(":
            args = self.args(bound)
            self.note("function", name, len(args), pos)
            return Fn(name, args)
        if name in bound or name[0] in VARIABLE_INITIALS:
            return Var(name)
        self.note("function", name, 0, pos)
        return Fn(name)


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula(frozenset())
    p.done()
    return f


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term(frozenset())
    p.done()
    return t
