"""Proof-tree rendering: a stacked text layout and bussproofs LaTeX."""

from __future__ import annotations

from .checker import NK, check
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
from .syntax import (
    And,
    Atom,
    Bottom,
    Exists,
    Forall,
    Formula,
    Implies,
    Or,
    neg,
    print_formula,
    print_term,
    substitute,
)

_RULE_NAMES = {
    ImpliesI: "→i", ImpliesE: "→e", AndI: "∧i", AndEL: "∧e", AndER: "∧e",
    OrIL: "∨i", OrIR: "∨i", OrE: "∨e", BotE: "⊥e", ForallI: "∀i", ForallE: "∀e",
    ExistsI: "∃i", ExistsE: "∃e", AxiomTND: "tnd", AxiomRAA: "raa", RuleRAA: "raa′",
    AxiomPeirce: "Peirce",
}

_LATEX_RULE = {
    ImpliesI: r"$\to_i$", ImpliesE: r"$\to_e$", AndI: r"$\wedge_i$", AndEL: r"$\wedge_e$",
    AndER: r"$\wedge_e$", OrIL: r"$\vee_i$", OrIR: r"$\vee_i$", OrE: r"$\vee_e$",
    BotE: r"$\bot_e$", ForallI: r"$\forall_i$", ForallE: r"$\forall_e$",
    ExistsI: r"$\exists_i$", ExistsE: r"$\exists_e$", AxiomTND: "tnd", AxiomRAA: "raa",
    RuleRAA: "raa$'$", AxiomPeirce: "Peirce",
}


def conclusions(p: Proof) -> list[Formula]:
    """Conclusion of every node, in pre-order (the order of ``iter(p)``)."""
    out: list[Formula] = []

    def walk(n: Proof) -> Formula:
        slot = len(out)
        out.append(None)  # type: ignore[arg-type]
        prem = [walk(q) for q in n.premises]
        c = _conclude(n, prem)
        out[slot] = c
        return c

    walk(p)
    return out


def _conclude(n: Proof, prem: list[Formula]) -> Formula:
    r = n.rule
    match r:
        case Hyp(f, _):
            return f
        case ImpliesI(a, _):
            return Implies(a, prem[0])
        case ImpliesE():
            return prem[1].right
        case AndI():
            return And(prem[0], prem[1])
        case AndEL():
            return prem[0].left
        case AndER():
            return prem[0].right
        case OrIL(o):
            return Or(prem[0], o)
        case OrIR(o):
            return Or(o, prem[0])
        case OrE():
            return prem[1]
        case BotE(t):
            return t
        case ForallI(x):
            return Forall(x, prem[0])
        case ForallE(t):
            return substitute(prem[0].body, prem[0].var, t)
        case ExistsI(_, t):
            return t
        case ExistsE():
            return prem[1]
        case AxiomTND(a):
            return Or(a, neg(a))
        case AxiomRAA(a):
            return Implies(neg(neg(a)), a)
        case RuleRAA(a, _):
            return a
        case AxiomPeirce(a, b):
            return Implies(Implies(Implies(a, b), a), a)
    raise TypeError(r)


def _rule_tag(r, names: dict) -> str:
    tag = names[type(r)]
    lab = getattr(r, "label", None)
    if lab is not None and not isinstance(r, Hyp):
        tag += f"({lab})"
    return tag


# ---------------------------------------------------------------------------
# text layout


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class _Block:
    """Rendered subtree: lines, total width, and the span of its conclusion."""

    def __init__(self, lines: list[str], width: int, left: int, right: int):
        self.lines = lines
        self.width = width
        self.left = left
        self.right = right


def _leaf(text: str) -> _Block:
    return _Block([text], len(text), 0, len(text))


def _join(blocks: list[_Block], gap: int = 3) -> _Block:
    if not blocks:
        return _Block([], 0, 0, 0)
    height = max(len(b.lines) for b in blocks)
    rows = ["" for _ in range(height)]
    offset = 0
    for i, b in enumerate(blocks):
        pad = height - len(b.lines)
        for r in range(height):
            seg = b.lines[r - pad] if r >= pad else ""
            rows[r] = rows[r].ljust(offset) + seg
        if i < len(blocks) - 1:
            offset += b.width + gap
    width = offset + blocks[-1].width
    return _Block([row.ljust(width) for row in rows], width,
                  blocks[0].left, offset + blocks[-1].right)


def _ascii(n: Proof, concl: list[Formula], idx: list[int]) -> _Block:
    c = concl[idx[0]]
    idx[0] += 1
    r = n.rule
    text = print_formula(c, unicode=True)
    if isinstance(r, Hyp):
        if r.label is None:
            return _leaf(text)
        return _leaf(f"[{text}]{str(r.label).translate(_SUPERSCRIPT)}")
    above = _join([_ascii(q, concl, idx) for q in n.premises])
    tag = _rule_tag(r, _RULE_NAMES)
    bar_l = above.left if n.premises else 0
    bar_r = max(above.right if n.premises else 0, bar_l + 1)
    span = bar_r - bar_l
    bar_w = max(span, len(text))
    bar_start = bar_l - max(0, (bar_w - span) // 2)
    shift = max(0, -bar_start)
    bar_start += shift
    text_start = bar_start + (bar_w - len(text)) // 2
    lines = [" " * shift + line for line in above.lines]
    lines.append(" " * bar_start + "─" * bar_w + " " + tag)
    lines.append(" " * text_start + text)
    width = max(len(line) for line in lines)
    return _Block([line.ljust(width) for line in lines], width,
                  text_start, text_start + len(text))


def render_ascii(p: Proof) -> str:
    concl = conclusions(p)
    block = _ascii(p, concl, [0])
    return "\n".join(line.rstrip() for line in block.lines) + "\n"


# ---------------------------------------------------------------------------
# LaTeX (bussproofs)


def latex_formula(f: Formula) -> str:
    match f:
        case Bottom():
            return r"\bot"
        case Atom(p, args):
            if not args:
                return p
            return f"{p}({','.join(print_term(a) for a in args)})"
        case Implies(a, Bottom()):
            return r"\neg " + _latex_wrap(a, 4)
        case Implies(a, b):
            return f"{_latex_wrap(a, 2)} \\to {_latex_wrap(b, 1)}"
        case Or(a, b):
            return f"{_latex_wrap(a, 2)} \\vee {_latex_wrap(b, 3)}"
        case And(a, b):
            return f"{_latex_wrap(a, 3)} \\wedge {_latex_wrap(b, 4)}"
        case Forall(x, body):
            return f"\\forall {x}.\\, {latex_formula(body)}"
        case Exists(x, body):
            return f"\\exists {x}.\\, {latex_formula(body)}"
    raise TypeError(f)


def _latex_wrap(f: Formula, ctx: int) -> str:
    level = {Implies: 1, Or: 2, And: 3}.get(type(f), 5)
    if isinstance(f, Implies) and isinstance(f.right, Bottom):
        level = 5
    if isinstance(f, (Forall, Exists)):
        level = 0
    s = latex_formula(f)
    return f"({s})" if level < ctx else s


_INFER = {0: r"\UnaryInfC", 1: r"\UnaryInfC", 2: r"\BinaryInfC", 3: r"\TrinaryInfC"}


def render_latex(p: Proof) -> str:
    concl = conclusions(p)
    out: list[str] = []
    idx = [0]

    def walk(n: Proof) -> None:
        c = concl[idx[0]]
        idx[0] += 1
        r = n.rule
        body = latex_formula(c)
        if isinstance(r, Hyp):
            out.append(f"\\AxiomC{{$[{body}]^{{{r.label}}}$}}" if r.label is not None
                       else f"\\AxiomC{{${body}$}}")
            return
        if not n.premises:
            out.append(r"\AxiomC{}")
        for q in n.premises:
            walk(q)
        out.append(f"\\RightLabel{{\\scriptsize {_rule_tag(r, _LATEX_RULE)}}}")
        out.append(f"{_INFER[len(n.premises)]}{{${body}$}}")

    walk(p)
    return "\\begin{prooftree}\n" + "\n".join(out) + "\n\\end{prooftree}\n"


LATEX_PREAMBLE = "\\documentclass{article}\n\\usepackage{amssymb}\n\\usepackage{bussproofs}\n"


def latex_document(p: Proof) -> str:
    return f"{LATEX_PREAMBLE}\\begin{{document}}\n{render_latex(p)}\\end{{document}}\n"


def render(p: Proof, style: str = "ascii", mode=NK) -> str:
    """Render a proof that checks in ``mode``; unchecked trees are rejected."""
    check(p, mode)
    if style == "ascii":
        return render_ascii(p)
    if style == "latex":
        return render_latex(p)
    raise ValueError(f"unknown style {style!r}; expected 'ascii' or 'latex'")
