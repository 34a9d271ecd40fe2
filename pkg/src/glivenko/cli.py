"""Command-line front end.

Exit status: 0 on success, 1 when a proof fails to check, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import proofio
from .checker import MODES, NJ, NK, CheckError, check
from .compiler import (
    DEFAULT_MAX_PROOF_SIZE,
    ProofTooLarge,
    nj_translation_to_nk,
    nk_to_nj,
)
from .derivations import BUILDERS
from .proof import LabelSupply
from .render import render
from .syntax import ParseError, parse_formula, print_formula
from .translation import nn_translate, stability_proof

GRAMMAR = """\
formula grammar (loosest to tightest):
  F ::= forall x. F | exists x. F     quantifier scope extends to the right
      | F -> F                        right-associative
      | F | F                         left-associative
      | F & F                         left-associative
      | ~F | bot | p | p(t1,...,tn) | (F)
  t ::= x | c | f(t1,...,tn)          names starting with u..z are variables
Unicode ¬ ∧ ∨ → ∀ ∃ ⊥ is accepted on input."""


class UsageError(Exception):
    pass


def _formula(text: str):
    try:
        return parse_formula(text)
    except ParseError as exc:
        raise UsageError(str(exc)) from exc


def _load(path: str) -> proofio.ProofFile:
    try:
        return proofio.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc
    except proofio.ProofSyntaxError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _max_size(args) -> int:
    if args.max_proof_size is not None:
        return args.max_proof_size
    return int(os.environ.get("GLIVENKO_MAX_PROOF_SIZE", DEFAULT_MAX_PROOF_SIZE))


def cmd_check(args) -> int:
    mode = MODES[args.mode]
    status = 0
    for path in args.files:
        pf = _load(path)
        try:
            j = proofio.verify_expect(pf, mode)
        except CheckError as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            status = 1
            continue
        prefix = f"{path}: " if len(args.files) > 1 else ""
        print(f"{prefix}{j}")
    return status


def cmd_translate(args) -> int:
    if args.batch:
        try:
            lines = Path(args.batch).read_text(encoding="utf-8").splitlines()
        except OSError as exc:
            raise UsageError(f"{args.batch}: {exc.strerror}") from exc
        for line in lines:
            if line.strip():
                print(print_formula(nn_translate(_formula(line))))
        return 0
    if args.formula is None:
        raise UsageError("translate needs a formula or --batch FILE")
    print(print_formula(nn_translate(_formula(args.formula))))
    return 0


def cmd_stability(args) -> int:
    p = stability_proof(_formula(args.formula))
    _emit(proofio.dumps(p, check(p, NJ)), args.output)
    return 0


def cmd_derive(args) -> int:
    builder, n = BUILDERS[args.name]
    if len(args.formulas) != n:
        raise UsageError(f"{args.name} takes {n} formula(s), got {len(args.formulas)}")
    p = builder(*(_formula(f) for f in args.formulas), LabelSupply())
    _emit(proofio.dumps(p, check(p, NK)), args.output)
    return 0


def _compile(args):
    pf = _load(args.file)
    source = proofio.verify_expect(pf, NK)
    return pf, source, nk_to_nj(pf.proof, max_size=_max_size(args))


def _default_out(path: str, suffix: str) -> str:
    p = Path(path)
    return str(p.with_name(p.name.removesuffix(".proof") + suffix))


def cmd_compile(args) -> int:
    _, _, out = _compile(args)
    j = check(out, NJ)
    proofio.dump(out, args.output or _default_out(args.file, ".nj.proof"), j)
    print(j)
    return 0


def cmd_roundtrip(args) -> int:
    _, source, out = _compile(args)
    back = nj_translation_to_nk(out, source.context, source.conclusion)
    j = check(back, NK)
    proofio.dump(back, args.output or _default_out(args.file, ".nk.proof"), j)
    print(j)
    return 0


def cmd_render(args) -> int:
    pf = _load(args.file)
    _emit(render(pf.proof, args.style, NK), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="glivenko",
        description="Natural deduction kernel and double-negation proof compiler.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check proof files and print their judgments")
    c.add_argument("files", nargs="+")
    c.add_argument("--mode", choices=sorted(MODES), default="nj")
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("translate", help="print the double-negation translation")
    t.add_argument("formula", nargs="?")
    t.add_argument("--batch", metavar="FILE", help="translate one formula per line")
    t.set_defaults(func=cmd_translate)

    s = sub.add_parser("stability", help="emit the proof of ~~F' |- F'")
    s.add_argument("formula")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_stability)

    d = sub.add_parser("derive", help="emit an interderivation of classical axioms")
    d.add_argument("name", choices=sorted(BUILDERS))
    d.add_argument("formulas", nargs="+")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_derive)

    for name, func, helptext in (
        ("compile", cmd_compile, "compile a classical proof to an intuitionistic one"),
        ("roundtrip", cmd_roundtrip, "compile, then rebuild a classical proof"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        p.add_argument("-o", "--output")
        p.add_argument("--max-proof-size", type=int, default=None,
                       help="node cap for the compiled proof (default 10^6, "
                            "or $GLIVENKO_MAX_PROOF_SIZE)")
        p.set_defaults(func=func)

    r = sub.add_parser("render", help="draw a proof as text or LaTeX")
    r.add_argument("file")
    r.add_argument("--style", choices=("ascii", "latex"), default="ascii")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}\n\n{GRAMMAR}", file=sys.stderr)
        return 2
    except CheckError as exc:
        print(exc, file=sys.stderr)
        return 1
    except ProofTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
