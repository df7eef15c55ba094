import argparse
import json
import logging
import sys
from typing import List, NoReturn, Optional

from bottsamelson.BottSamelsonRunner import BottSamelsonRunner
from bottsamelson.compute.weyl import parse_word
from bottsamelson.constants import COMMANDS, EXIT_USAGE, FORMATS, TOOL_VERSION
from bottsamelson.exceptions import BottSamelsonError
from bottsamelson.model.RunConfig import RunConfig, resolve_cache_dir


class UsageExitParser(argparse.ArgumentParser):
    """ArgumentParser that exits with code 1 on usage errors."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = UsageExitParser(
        prog="bottsamelson",
        description="Exact computations with Bott-Samelson sheaves on Bruhat moment graphs.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--type", dest="type_label", required=True, help="Cartan type, one of A-G")
    parser.add_argument("--rank", type=int, required=True)
    parser.add_argument("--affine", action="store_true", help="Use the affine Weyl group; index 0 is the affine reflection")
    parser.add_argument("--char", dest="characteristic", type=int, default=0, help="0 or an odd prime")
    parser.add_argument("--word", help='Comma separated simple indices, e.g. "1,2,1"')
    parser.add_argument("--x", help="Word of the target element")
    parser.add_argument("--n", type=int, default=3, help="Reachability bound")
    parser.add_argument("--cache-dir", help="Result cache directory (env CACHE_DIR)")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--pretty", action="store_true", help="Indent JSON output")
    parser.add_argument("--allow-nonreduced", action="store_true")
    parser.add_argument("--verify-cache", action="store_true", help="Recompute cache hits and compare")
    parser.add_argument("--no-cache", dest="use_cache", action="store_false")
    parser.add_argument("--format", choices=FORMATS, default="json", help="Export format of the graph command")
    parser.add_argument("--dot", action="store_true", help="Emit the tree command's output as DOT")
    parser.add_argument("--no-prune", dest="prune", action="store_false")
    parser.add_argument("--verbose", action="store_true")
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    Raises:
        ValueError: If a word or another option is invalid.
    """
    return RunConfig(
        command=args.command,
        type_label=args.type_label,
        rank=args.rank,
        affine=args.affine,
        characteristic=args.characteristic,
        word=parse_word(args.word) if args.word is not None else None,
        x=parse_word(args.x) if args.x is not None else None,
        n=args.n,
        cache_dir=resolve_cache_dir(args.cache_dir),
        threads=args.threads,
        pretty=args.pretty,
        allow_nonreduced=args.allow_nonreduced,
        verify_cache=args.verify_cache,
        use_cache=args.use_cache,
        format=args.format,
        dot=args.dot,
        prune=args.prune,
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logger = logging.getLogger("bottsamelson")

    try:
        config = config_from_args(args)
    except (BottSamelsonError, ValueError) as e:
        logger.error(str(e))
        print(json.dumps({"error": type(e).__name__, "message": str(e), "internal": False}))
        return EXIT_USAGE

    code, output = BottSamelsonRunner(config, logger).run()
    print(output)
    return code
