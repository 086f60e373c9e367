"""Command-line front end.

Exit codes: 0 success (and "regular"/"member" outcomes), 3 for a negative
decision ("nonregular"/"not a member"), 2 for input or domain errors, 64 for
usage errors.  Output is JSON unless stdout is a terminal; ``--json`` forces
JSON either way.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .analysis import analyze
from .automata import compile as compile_expr
from .automata import determinize, to_dot
from .decision import NONREGULAR, Verdict, Witness, decide
from .dynamics import enumerate_bounded, left_completions, member, one_step, right_completions
from .errors import HairpinError
from .expressions import render
from .words import Alphabet, Primer

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NEGATIVE = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _alphabet(spec: str) -> Alphabet:
    if spec.strip().lower() == "dna":
        return Alphabet.from_spec("A:T,C:G")
    return Alphabet.from_spec(spec)


def _wants_json(args) -> bool:
    return args.json or not sys.stdout.isatty()


def _emit(args, payload: dict, human_lines: list[str]) -> None:
    if _wants_json(args):
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        for line in human_lines:
            print(line)


def _witness_block(witness: Witness) -> dict:
    return {
        "word": witness.base_word,
        "s": witness.s,
        "t": witness.t,
        "u_s": witness.u_s,
        "v_t": witness.v_t,
        "u_1": witness.u_1,
        "n": witness.n,
        "mirrored": witness.mirrored,
        "R": render(witness.nonreg_expr),
        "L": witness.predicted_intersection,
        "R_prime": render(witness.noncf_expr),
        "noncf_intersection": witness.noncf_intersection,
    }


def _verdict_block(verdict: Verdict) -> dict:
    block: dict = {"kind": verdict.kind}
    if verdict.is_regular:
        block["construction_external"] = verdict.construction_external
        block["construction"] = (
            render(verdict.construction) if verdict.construction is not None else None
        )
        if verdict.sample is not None:
            block["sample"] = list(verdict.sample)
    else:
        block["witness"] = _witness_block(verdict.witness)
    if verdict.reduction is not None:
        block["reduction"] = [
            {"word": sub, "verdict": _verdict_block(sv)} for sub, sv in verdict.reduction
        ]
    return block


def cmd_analyze(args) -> int:
    alphabet = _alphabet(args.alphabet)
    primer = Primer(args.primer, alphabet)
    analysis = analyze(args.word, primer)
    verdict = decide(args.word, primer)
    report = {
        "tool": "hairpinlang",
        "version": __version__,
        "alphabet": alphabet.spec(),
        "primer": primer.word,
        "word": args.word,
        "non_crossing": True,
        "m": analysis.m,
        "n": analysis.n,
        "prefixes": list(analysis.prefixes),
        "suffix_complements": list(analysis.suffix_complements),
        "I": sorted(analysis.I),
        "J": sorted(analysis.J),
        "verdict": _verdict_block(verdict),
    }
    lines = [
        f"word: {args.word}",
        f"primer: {primer.word} (alphabet {alphabet.spec()})",
        f"anchors: m={analysis.m} {list(analysis.prefixes)}",
        f"         n={analysis.n} {list(analysis.suffix_complements)}",
        f"index sets: I={sorted(analysis.I)} J={sorted(analysis.J)}",
        f"verdict: {verdict.kind}",
    ]
    if verdict.is_regular and verdict.construction is not None:
        lines.append(f"construction: {render(verdict.construction)}")
    if verdict.is_regular and verdict.construction_external:
        lines.append("construction: available from the base one-anchor case (external)")
    if not verdict.is_regular:
        lines.append(f"witness: s={verdict.witness.s} t={verdict.witness.t} "
                     f"R={render(verdict.witness.nonreg_expr)}")
    _emit(args, report, lines)
    return EXIT_OK if verdict.is_regular else EXIT_NEGATIVE


def cmd_complete(args) -> int:
    alphabet = _alphabet(args.alphabet)
    primer = Primer(args.primer, alphabet)
    if args.side == "right":
        words = right_completions(args.word, primer)
    elif args.side == "left":
        words = left_completions(args.word, primer)
    else:
        words = one_step(args.word, primer)
    ordered = sorted(words, key=lambda z: (len(z), z))
    _emit(args, {"words": ordered}, ordered)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    alphabet = _alphabet(args.alphabet)
    primer = Primer(args.primer, alphabet)
    words = enumerate_bounded(args.word, primer, args.max_len)
    _emit(args, {"words": words}, words)
    return EXIT_OK


def cmd_member(args) -> int:
    alphabet = _alphabet(args.alphabet)
    primer = Primer(args.primer, alphabet)
    ok = member(args.target, args.word, primer)
    _emit(args, {"member": ok}, ["true" if ok else "false"])
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_witness(args) -> int:
    alphabet = _alphabet(args.alphabet)
    primer = Primer(args.primer, alphabet)
    verdict = decide(args.word, primer)
    if verdict.is_regular:
        print("the closure is regular; no non-regularity witness exists", file=sys.stderr)
        return EXIT_INPUT
    block = _witness_block(verdict.witness)
    lines = [f"{key}: {value}" for key, value in block.items()]
    _emit(args, block, lines)
    return EXIT_OK


def cmd_render(args) -> int:
    alphabet = _alphabet(args.alphabet)
    primer = Primer(args.primer, alphabet)
    verdict = decide(args.word, primer)
    if not verdict.is_regular:
        print("the closure is not regular; there is no automaton to render", file=sys.stderr)
        return EXIT_INPUT
    if verdict.construction is None:
        print("the construction for a one-anchor word is external; nothing to render",
              file=sys.stderr)
        return EXIT_INPUT
    dfa = determinize(compile_expr(verdict.construction, alphabet.letters))
    text = to_dot(dfa)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    return EXIT_OK


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--alphabet", default="dna",
                     help='letter pairs like "A:T,C:G", or the preset "dna"')
    sub.add_argument("--primer", required=True, help="primer word")
    sub.add_argument("--word", required=True, help="input word")
    sub.add_argument("--json", action="store_true", help="force JSON output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hairpinlang",
                     description="regularity analysis of iterated hairpin completions")
    parser.add_argument("--version", action="version", version=f"hairpinlang {__version__}")
    subs = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = subs.add_parser("analyze", help="full analysis report with the decision")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = subs.add_parser("complete", help="single completion step")
    _add_common(p)
    p.add_argument("--side", choices=("left", "right", "both"), default="both")
    p.set_defaults(func=cmd_complete)

    p = subs.add_parser("enumerate", help="bounded closure enumeration")
    _add_common(p)
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = subs.add_parser("member", help="membership of a target word in the closure")
    _add_common(p)
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_member)

    p = subs.add_parser("witness", help="non-regularity witness, if any")
    _add_common(p)
    p.set_defaults(func=cmd_witness)

    p = subs.add_parser("render", help="write the construction automaton as DOT")
    _add_common(p)
    p.add_argument("--out", required=True, help='output path, or "-" for stdout')
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (HairpinError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
