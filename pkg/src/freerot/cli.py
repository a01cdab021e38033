"""Command-line surface: word algebra, exact rotation matrices, and the
verification suites.

Exit codes: 0 on success, 1 on verification failure, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .rotmap import rotation
from .verify import SUITES, run_suites
from .words import (
    WordParseError,
    format_word,
    parse_word,
    parse_words_file,
    reduce_word,
    word_inverse,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _read_words(arg: str) -> list:
    """Words from an inline argument, or stdin when the argument is ``-``.
    Inline input may hold several newline-separated words; an empty inline
    argument is the empty word."""
    if arg == "-":
        return parse_words_file(sys.stdin.read())
    if arg == "":
        return [()]
    return parse_words_file(arg)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_reduce(args: argparse.Namespace) -> int:
    words = _read_words(args.word)
    lines = [format_word(reduce_word(w)) for w in words]
    if args.format == "json":
        _emit(json.dumps({"command": "reduce", "words": lines}), args.out)
    else:
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_inverse(args: argparse.Namespace) -> int:
    words = _read_words(args.word)
    lines = [format_word(word_inverse(w)) for w in words]
    if args.format == "json":
        _emit(json.dumps({"command": "inverse", "words": lines}), args.out)
    else:
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_rotation(args: argparse.Namespace) -> int:
    words = _read_words(args.word)
    if args.format == "json":
        payload = {
            "command": "rotation",
            "matrices": [
                {"word": format_word(w), "matrix": rotation(w).to_json()}
                for w in words
            ],
        }
        _emit(json.dumps(payload), args.out)
    else:
        blocks = [str(rotation(w)) for w in words]
        _emit("\n\n".join(blocks), args.out)
    return EXIT_OK


def _summarize(report: dict) -> str:
    lines = []
    for suite in report["suites"]:
        status = "pass" if suite["ok"] else "FAIL"
        detail = ""
        if suite["suite"] == "freeness":
            ex = suite["exhaustive"]
            detail = (
                f" ({ex['total_words']} words <= length {ex['max_len']}, "
                f"{len(ex['violations'])} violations; "
                f"{suite['certificate']['state_count']} certificate states)"
            )
        elif suite["suite"] == "injectivity":
            inj = suite["injectivity"]
            detail = f" ({inj['distinct_matrices']} distinct matrices)"
        elif suite["suite"] == "rotation-axioms":
            detail = f" ({suite['words']} words)"
        elif "trials" in suite:
            detail = f" ({suite['trials']} trials)"
        lines.append(f"{suite['suite']}: {status}{detail}")
        if not suite["ok"] and "counterexample" in suite:
            lines.append(f"  counterexample: {suite['counterexample']}")
    lines.append("verify: " + ("pass" if report["ok"] else "FAIL"))
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace) -> int:
    config = {"max_len": args.max_len, "jobs": args.jobs, "seed": args.seed}
    report = run_suites(args.suite, config)
    if args.format == "json":
        _emit(json.dumps(report, indent=2), args.out)
    else:
        _emit(_summarize(report), args.out)
    return EXIT_OK if report["ok"] else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freerot",
        description="Exact free group of rotations: word algebra and "
        "machine verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def word_command(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("word", help="word over a/A/b/B, or - to read stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", metavar="FILE", default=None)
        return p

    word_command("reduce", "reduce words to canonical form").set_defaults(
        func=cmd_reduce
    )
    word_command("inverse", "group inverse of words").set_defaults(func=cmd_inverse)
    word_command("rotation", "exact rotation matrix of words").set_defaults(
        func=cmd_rotation
    )

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-len", type=int, default=8, dest="max_len")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="FILE", default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_len", 1) < 1 or getattr(args, "jobs", 1) < 1:
        parser.error("--max-len and --jobs must be >= 1")
    try:
        return args.func(args)
    except WordParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
