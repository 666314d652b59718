from __future__ import annotations

import argparse
import sys

from depbits.config import ENCODINGS, Config, RepairOptions
from depbits.logging_utils import setup_logging
from depbits.pipeline.runner import run


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="depbits",
        description="Encode dependency trees as 4-bit or 7-bit per-word labels and back.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("inputs", nargs="*", help="input files (default: stdin)")
    common.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
    common.add_argument(
        "--outermost",
        choices=["plane", "side"],
        default="plane",
        help="7-bit outermost-dependent scope",
    )

    single = argparse.ArgumentParser(add_help=False, parents=[common])
    single.add_argument("--encoding", choices=ENCODINGS, default="4bit")
    single.add_argument(
        "--single-root",
        dest="single_root",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="reattach extra roots after decoding",
    )

    enc = sub.add_parser("encode", parents=[single], help="CoNLL-U to label file")
    enc.add_argument("--syntax", choices=["bits", "brackets"], default="bits")

    sub.add_parser("decode", parents=[single], help="label file to CoNLL-U")
    sub.add_parser("roundtrip", parents=[single], help="CoNLL-U through encode and decode")

    stats = sub.add_parser("stats", parents=[common], help="coverage table per treebank")
    stats.add_argument(
        "--encoding",
        dest="encodings",
        action="append",
        choices=ENCODINGS,
        default=None,
        help="repeatable; one row per encoding (default: 4bit)",
    )
    stats.add_argument("--format", dest="report_format", choices=["text", "tsv", "json"], default="text")
    stats.add_argument("--profile", action="store_true", help="structural profile instead of coverage")

    return p


def config_from_args(args: argparse.Namespace) -> Config:
    if args.command == "stats":
        encodings = tuple(dict.fromkeys(args.encodings or ["4bit"]))
    else:
        encodings = (args.encoding,)
    return Config(
        command=args.command,
        encodings=encodings,
        outermost=args.outermost,
        syntax=getattr(args, "syntax", "bits"),
        repair=RepairOptions(enforce_single_root=getattr(args, "single_root", True)),
        inputs=tuple(args.inputs),
        output=args.output,
        report_format=getattr(args, "report_format", "text"),
        profile=getattr(args, "profile", False),
    )


def main(argv: list[str] | None = None) -> None:
    args = build_parser().parse_args(argv)
    setup_logging()
    sys.exit(run(config_from_args(args)))


if __name__ == "__main__":
    main()
