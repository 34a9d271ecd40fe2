"""Reading and writing proof files.

A proof file holds one s-expression, optionally preceded by a header
``:expect "G |- C"`` that is cross-checked when the file is loaded::

    :expect "~~~a |- ~a"
    (impl_i :assume "a" :label 2
      (impl_e
        (impl_i :assume "~a" :label 1
          (impl_e (hyp "a" :label 2) (hyp "~a" :label 1)))
        (hyp "~~~a")))

Lines starting with ``;`` are comments.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .checker import CheckError, ErrorKind, Judgment, check, judgment_matches
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
    OrE,
    OrIL,
    OrIR,
    Proof,
    RuleRAA,
)
from .syntax import ParseError, parse_formula, parse_term, print_formula, print_term


class ProofSyntaxError(ValueError):
    pass


_SEXP_TOKEN = re.compile(
    r"""\s*(?:(?P<comment>;[^\n]*)|(?P<open>\()|(?P<close>\))|(?P<string>"(?:[^"\\]|\\.)*")"""
    r"""|(?P<keyword>:[A-Za-z_][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<symbol>[A-Za-z_][A-Za-z0-9_]*))"""
)


@dataclass(frozen=True)
class _Kw:
    name: str


def _read(text: str) -> list:
    """Parse every top-level datum in text into nested lists."""
    stack: list[list] = [[]]
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _SEXP_TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ProofSyntaxError(f"unexpected input at offset {pos}: {text[pos:pos + 20]!r}")
        pos = m.end()
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "comment":
            continue
        if kind == "open":
            stack.append([])
        elif kind == "close":
            if len(stack) == 1:
                raise ProofSyntaxError(f"unbalanced ')' at offset {m.start(kind)}")
            done = stack.pop()
            stack[-1].append(done)
        elif kind == "string":
            stack[-1].append(json.loads(val))
        elif kind == "keyword":
            stack[-1].append(_Kw(val[1:]))
        elif kind == "int":
            stack[-1].append(int(val))
        else:
            stack[-1].append(val)
    if len(stack) != 1:
        raise ProofSyntaxError("unbalanced '(': missing ')'")
    return stack[0]


_RULES = {
    "hyp": Hyp, "impl_i": ImpliesI, "impl_e": ImpliesE, "and_i": AndI,
    "and_e_l": AndEL, "and_e_r": AndER, "or_i_l": OrIL, "or_i_r": OrIR, "or_e": OrE,
    "bot_e": BotE, "forall_i": ForallI, "forall_e": ForallE, "exists_i": ExistsI,
    "exists_e": ExistsE, "tnd": AxiomTND, "raa": AxiomRAA, "raa_rule": RuleRAA,
    "peirce": AxiomPeirce,
}
_NAMES = {v: k for k, v in _RULES.items()}


def _formula(s) -> object:
    if not isinstance(s, str):
        raise ProofSyntaxError(f"expected a quoted formula, got {s!r}")
    try:
        return parse_formula(s)
    except ParseError as exc:
        raise ProofSyntaxError(str(exc)) from exc


def _term(s) -> object:
    if not isinstance(s, str):
        raise ProofSyntaxError(f"expected a quoted term, got {s!r}")
    try:
        return parse_term(s)
    except ParseError as exc:
        raise ProofSyntaxError(str(exc)) from exc


def _label(v) -> int:
    if not isinstance(v, int):
        raise ProofSyntaxError(f"label must be an integer, got {v!r}")
    return v


def _build(sx) -> Proof:
    if not isinstance(sx, list) or not sx or not isinstance(sx[0], str):
        raise ProofSyntaxError(f"expected (rule ...), got {sx!r}")
    head, items = sx[0], sx[1:]
    if head not in _RULES:
        raise ProofSyntaxError(f"unknown rule {head!r}; expected one of {sorted(_RULES)}")
    kw: dict[str, object] = {}
    strings: list[str] = []
    subs: list[Proof] = []
    i = 0
    while i < len(items):
        it = items[i]
        if isinstance(it, _Kw):
            if i + 1 >= len(items):
                raise ProofSyntaxError(f"keyword :{it.name} without a value in ({head} ...)")
            kw[it.name] = items[i + 1]
            i += 2
            continue
        if isinstance(it, list):
            subs.append(_build(it))
        elif isinstance(it, str):
            strings.append(it)
        else:
            raise ProofSyntaxError(f"unexpected {it!r} in ({head} ...)")
        i += 1

    def need(key: str):
        if key not in kw:
            raise ProofSyntaxError(f"({head} ...) requires :{key}")
        return kw[key]

    def positional(n: int) -> list[str]:
        if len(strings) != n:
            raise ProofSyntaxError(f"({head} ...) takes {n} quoted formula(s)")
        return strings

    match head:
        case "hyp":
            (f,) = positional(1)
            lab = _label(kw["label"]) if "label" in kw else None
            rule = Hyp(_formula(f), lab)
        case "impl_i":
            rule = ImpliesI(_formula(need("assume")), _label(need("label")))
        case "or_i_l" | "or_i_r":
            rule = _RULES[head](_formula(need("other")))
        case "or_e":
            rule = OrE(_label(need("label")))
        case "bot_e":
            rule = BotE(_formula(need("target")))
        case "forall_i":
            rule = ForallI(str(need("eigen")))
        case "forall_e":
            rule = ForallE(_term(need("term")))
        case "exists_i":
            rule = ExistsI(_term(need("witness")), _formula(need("target")))
        case "exists_e":
            rule = ExistsE(_label(need("label")), str(need("eigen")))
        case "tnd" | "raa":
            (f,) = positional(1)
            rule = _RULES[head](_formula(f))
        case "raa_rule":
            (f,) = positional(1)
            rule = RuleRAA(_formula(f), _label(need("label")))
        case "peirce":
            p, q = positional(2)
            rule = AxiomPeirce(_formula(p), _formula(q))
        case _:
            rule = _RULES[head]()
    if head not in ("hyp", "tnd", "raa", "raa_rule", "peirce") and strings:
        raise ProofSyntaxError(f"({head} ...) takes no quoted formulas")
    return Proof(rule, tuple(subs))


def parse_judgment(text: str) -> Judgment:
    for turnstile in ("⊢", "|-"):
        if turnstile in text:
            ctx, concl = text.split(turnstile, 1)
            break
    else:
        raise ProofSyntaxError(f"judgment needs a turnstile: {text!r}")
    context = tuple(_formula(part) for part in _split_top(ctx) if part.strip())
    return Judgment(context, _formula(concl))


def _split_top(text: str) -> list[str]:
    # commas inside parentheses belong to terms
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    parts.append("".join(cur))
    return parts


def format_judgment(j: Judgment) -> str:
    return str(j)


@dataclass(frozen=True)
class ProofFile:
    proof: Proof
    expect: Judgment | None = None


def loads(text: str) -> ProofFile:
    data = _read(text)
    expect = None
    if len(data) >= 2 and isinstance(data[0], _Kw):
        if data[0].name != "expect" or not isinstance(data[1], str):
            raise ProofSyntaxError("only an :expect \"G |- C\" header may precede the proof")
        expect = parse_judgment(data[1])
        data = data[2:]
    if len(data) != 1:
        raise ProofSyntaxError(f"expected exactly one proof, found {len(data)} items")
    return ProofFile(_build(data[0]), expect)


def load(path: str | Path, mode=None) -> ProofFile:
    """Read a proof file; with a mode, verify any :expect header against it.

    A header that disagrees with the checked judgment raises CheckError
    (ConclusionMismatch).
    """
    pf = loads(Path(path).read_text(encoding="utf-8"))
    if mode is not None and pf.expect is not None:
        verify_expect(pf, mode)
    return pf


def verify_expect(pf: ProofFile, mode) -> Judgment:
    j = check(pf.proof, mode)
    if pf.expect is not None and not judgment_matches(j, pf.expect, context_as_set=False):
        raise CheckError(ErrorKind.ConclusionMismatch, (),
                         f"file expects {pf.expect} but the proof shows {j}")
    return j


def _q(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def _head(r) -> str:
    name = _NAMES[type(r)]
    match r:
        case Hyp(f, lab):
            return f"{name} {_q(print_formula(f))}" + (f" :label {lab}" if lab is not None else "")
        case ImpliesI(a, lab):
            return f"{name} :assume {_q(print_formula(a))} :label {lab}"
        case OrIL(o) | OrIR(o):
            return f"{name} :other {_q(print_formula(o))}"
        case OrE(lab):
            return f"{name} :label {lab}"
        case BotE(t):
            return f"{name} :target {_q(print_formula(t))}"
        case ForallI(x):
            return f"{name} :eigen {_q(x)}"
        case ForallE(t):
            return f"{name} :term {_q(print_term(t))}"
        case ExistsI(w, t):
            return f"{name} :witness {_q(print_term(w))} :target {_q(print_formula(t))}"
        case ExistsE(lab, x):
            return f"{name} :label {lab} :eigen {_q(x)}"
        case AxiomTND(a) | AxiomRAA(a):
            return f"{name} {_q(print_formula(a))}"
        case RuleRAA(a, lab):
            return f"{name} {_q(print_formula(a))} :label {lab}"
        case AxiomPeirce(p, q):
            return f"{name} {_q(print_formula(p))} {_q(print_formula(q))}"
    return name


def dumps(p: Proof, expect: Judgment | None = None) -> str:
    lines: list[str] = []
    if expect is not None:
        lines.append(f":expect {_q(str(expect).replace('⊢', '|-'))}")

    # iterative to survive very deep trees
    out: list[str] = []
    stack: list[tuple[Proof, int, bool]] = [(p, 0, False)]
    while stack:
        n, depth, closing = stack.pop()
        if closing:
            out.append(")")
            continue
        out.append(("\n" + "  " * depth if out else "") + "(" + _head(n.rule))
        stack.append((n, depth, True))
        for q in reversed(n.premises):
            stack.append((q, depth + 1, False))
    lines.append("".join(out))
    return "\n".join(lines) + "\n"


def dump(p: Proof, path: str | Path, expect: Judgment | None = None) -> None:
    Path(path).write_text(dumps(p, expect), encoding="utf-8")
