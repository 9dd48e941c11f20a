"""Command-line surface: generate, verify, count, enumerate, crib, lookup.

All results go to stdout, diagnostics to stderr; behavior is a pure function
of the command line and stdin. Exit codes: 0 success/valid, 1 check failed,
2 infeasible parameters, 3 usage or format error, 4 resource guard exceeded.
"""

import argparse
import json
import sys
from enum import IntEnum
from itertools import islice
from pathlib import Path

from . import builder, census
from . import stack as stack_mod
from .errors import FormatError, InfeasibleError, ResourceGuardError
from .seqcore import BalanceMode, CyclicSequence, Parameters, verify


class ExitStatus(IntEnum):
    OK = 0
    CHECK_FAILED = 1
    INFEASIBLE = 2
    USAGE = 3
    GUARD = 4


_MODES = {
    "balanced": BalanceMode.BALANCED,
    "almost": BalanceMode.ALMOST_BALANCED,
    "any": BalanceMode.UNCONSTRAINED,
}

DEFAULT_CENSUS_LIMIT = 20


class _Parser(argparse.ArgumentParser):
    """argparse reports usage problems with status 2; remap them to 3."""

    def exit(self, status=0, message=None):
        if message:
            self._print_message(message, sys.stderr)
        raise SystemExit(int(ExitStatus.USAGE) if status else int(ExitStatus.OK))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _add_parameter_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", type=_positive_int, required=True, help="sequence length in bits")
    parser.add_argument("-l", type=_positive_int, required=True, help="window length in bits")
    parser.add_argument("-k", type=_positive_int, required=True, help="max window multiplicity")


def _add_mode_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--mode",
        choices=sorted(_MODES),
        default="balanced",
        help="balance condition (default: balanced)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="debruijnkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="construct a sequence for (n, l, k)")
    _add_parameter_flags(p)
    _add_mode_flag(p)
    p.add_argument(
        "--imbalance",
        type=int,
        choices=(1, -1),
        default=None,
        help="zeros minus ones for odd n (default +1)",
    )
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("verify", help="check a sequence against (l, k) and a balance mode")
    p.add_argument("-l", type=_positive_int, required=True)
    p.add_argument("-k", type=_positive_int, required=True)
    _add_mode_flag(p)
    p.add_argument("sequence", nargs="?", help="sequence text (else --file, else stdin)")
    p.add_argument("--file", help="read the sequence from a file")
    p.set_defaults(handler=_cmd_verify)

    for name, help_text in (
        ("count", "count valid sequences by exhaustive search"),
        ("enumerate", "list valid sequences by exhaustive search"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_parameter_flags(p)
        _add_mode_flag(p)
        p.add_argument(
            "--canonical",
            action="store_true",
            help="one representative per rotation class",
        )
        p.add_argument(
            "--max-n",
            type=_positive_int,
            default=DEFAULT_CENSUS_LIMIT,
            help=f"raise the search-size limit (default {DEFAULT_CENSUS_LIMIT}, "
            f"hard cap {census.ENUMERATION_GUARD})",
        )
        if name == "count":
            p.add_argument("--table", action="store_true", help="emit a TSV record")
            p.set_defaults(handler=_cmd_count)
        else:
            p.add_argument("--limit", type=_positive_int, default=None, help="stop after this many")
            p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("crib", help="emit a crib sheet (window table + cyclic order)")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--builtin", action="store_true", help="the built-in stack")
    source.add_argument("--stack", help="JSON file with {'sequence': bits, 'cards': [codes]}")
    source.add_argument("--from-sequence", help="auto-assign a deck to this 52-bit sequence")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--name", help="crib name for the JSON output")
    p.set_defaults(handler=_cmd_crib)

    p = sub.add_parser("lookup", help="resolve a 5-color signal against a crib")
    source = p.add_mutually_exclusive_group()
    source.add_argument("--builtin", action="store_true", help="the built-in stack (default)")
    source.add_argument("--crib", help="crib JSON file")
    p.add_argument("--colors", required=True, help="five letters over R/B, spectator 1 first")
    p.add_argument("--answer", choices=("yes", "no"), help="answer to the disambiguation question")
    p.set_defaults(handler=_cmd_lookup)

    return parser


def _cmd_generate(args) -> int:
    params = Parameters(args.n, args.l, args.k)
    try:
        seq = builder.generate(params, _MODES[args.mode], args.imbalance)
    except InfeasibleError:
        raise
    except ResourceGuardError:
        raise
    except ValueError as exc:  # imbalance/parity misuse
        print(f"bad request: {exc}", file=sys.stderr)
        return ExitStatus.USAGE
    print(seq)
    return ExitStatus.OK


def _read_sequence_text(args) -> str:
    if args.sequence is not None and args.file is not None:
        raise FormatError("give the sequence as an argument or with --file, not both")
    if args.sequence is not None:
        return args.sequence.strip()
    if args.file is not None:
        return Path(args.file).read_text().strip()
    text = sys.stdin.read().strip()
    if not text:
        raise FormatError("no sequence given (argument, --file, or stdin)")
    return text


def _cmd_verify(args) -> int:
    seq = CyclicSequence(_read_sequence_text(args))
    report = verify(seq, args.l, args.k, _MODES[args.mode])
    record = report.as_record()
    print(f"pass: {'true' if record['pass'] else 'false'}")
    print(f"max_multiplicity: {record['max_multiplicity']}")
    print(f"worst_window: {record['worst_window']}")
    print(f"zeros: {record['zeros']}")
    print(f"ones: {record['ones']}")
    return ExitStatus.OK if report.ok else ExitStatus.CHECK_FAILED


def _census_query(args) -> census.CensusQuery:
    limit = min(args.max_n, census.ENUMERATION_GUARD)
    if args.n > limit:
        raise ResourceGuardError(
            f"n = {args.n} exceeds the census limit {limit} "
            f"(raise with --max-n, hard cap {census.ENUMERATION_GUARD})"
        )
    return census.CensusQuery(
        Parameters(args.n, args.l, args.k), _MODES[args.mode], args.canonical
    )


def _cmd_count(args) -> int:
    result = census.count(_census_query(args))
    if args.table:
        print("n\tl\tk\tmode\tup_to_rotation\tcount")
        print(
            f"{args.n}\t{args.l}\t{args.k}\t{args.mode}\t"
            f"{str(args.canonical).lower()}\t{result.count}"
        )
    else:
        print(result.count)
    return ExitStatus.OK


def _cmd_enumerate(args) -> int:
    seqs = census.enumerate_sequences(_census_query(args))
    if args.limit is not None:
        seqs = islice(seqs, args.limit)
    for s in seqs:
        print(s)
    return ExitStatus.OK


def _load_json_file(path: str) -> object:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from None


def _crib_from_args(args) -> stack_mod.CribSheet:
    if args.builtin:
        return stack_mod.crib(stack_mod.builtin_stack(), args.name or "builtin")
    if args.from_sequence is not None:
        seq = CyclicSequence(args.from_sequence.strip())
        return stack_mod.crib(stack_mod.auto_stack(seq), args.name or "generated")
    doc = _load_json_file(args.stack)
    if not isinstance(doc, dict) or "sequence" not in doc or "cards" not in doc:
        raise FormatError(f"{args.stack}: expected {{'sequence': ..., 'cards': [...]}}")
    cards_field = doc["cards"]
    if not isinstance(cards_field, list):
        raise FormatError(f"{args.stack}: 'cards' must be a list of card codes")
    try:
        st = stack_mod.Stack(
            CyclicSequence(doc["sequence"]),
            tuple(stack_mod.Card.from_code(c) for c in cards_field),
        )
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"{args.stack}: {exc}") from None
    name = args.name or (doc.get("name") if isinstance(doc.get("name"), str) else None)
    return stack_mod.crib(st, name or Path(args.stack).stem)


def _cmd_crib(args) -> int:
    sheet = _crib_from_args(args)
    if args.format == "json":
        print(json.dumps(sheet.to_json_dict(), indent=2))
    else:
        print(sheet.render_text())
    return ExitStatus.OK


def _cmd_lookup(args) -> int:
    if args.crib is not None:
        sheet = stack_mod.CribSheet.from_json_dict(_load_json_file(args.crib))
    else:
        sheet = stack_mod.crib(stack_mod.builtin_stack(), "builtin")
    signal = stack_mod.ColorSignal.from_text(args.colors)
    result = stack_mod.lookup(sheet, signal)
    if result.question is None:
        first = result.candidates[0]
    elif args.answer is None:
        print(" or ".join(c.code for c in result.candidates))
        print(f"ask: {result.question}")
        return ExitStatus.OK
    else:
        first = result.candidates[0] if args.answer == "yes" else result.candidates[1]
    cards = stack_mod.reveal(sheet, first)
    print(" ".join(c.code for c in cards))
    return ExitStatus.OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else int(ExitStatus.USAGE)
    try:
        return int(args.handler(args))
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return ExitStatus.INFEASIBLE
    except ResourceGuardError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return ExitStatus.GUARD
    except stack_mod.ImpossibleSignalError as exc:
        print(str(exc), file=sys.stderr)
        return ExitStatus.CHECK_FAILED
    except stack_mod.InvalidStackError as exc:
        print(str(exc), file=sys.stderr)
        return ExitStatus.CHECK_FAILED
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return ExitStatus.USAGE
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return ExitStatus.USAGE


def run() -> None:
    sys.exit(main())
