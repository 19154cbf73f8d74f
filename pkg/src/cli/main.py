"""
Command-line entry point
"""
import argparse
import logging
import sys
from typing import List, Optional, Tuple

from ..lfunc.report import write_report
from ..utils.config import Config, load_config
from ..utils.errors import DomainError, NctError, UsageError
from .commands import COMMANDS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2

# options whose values may start with "-", such as a curve "-1,0" or a matrix "-1,2;3,4"
VALUE_OPTIONS = ("--curve", "--matrix", "--theta", "--skew", "--s")


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with 2"""

    def error(self, message: str):
        raise UsageError(message)


def _global_options() -> argparse.ArgumentParser:
    common = CliParser(add_help=False)
    # SUPPRESS keeps a subcommand's unset flags from overwriting the top-level ones
    common.add_argument("--config", default=argparse.SUPPRESS, help="key=value configuration file")
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS, help="working precision in bits")
    common.add_argument("--prime-bound", type=int, default=argparse.SUPPRESS, help="largest prime swept")
    common.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report here instead of stdout")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker threads for prime sweeps")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS)
    return common


def create_parser() -> argparse.ArgumentParser:
    """Build the parser with every subcommand"""
    common = _global_options()
    parser = CliParser(prog="nct", description="L-functions of noncommutative tori with real multiplication",
                       parents=[common])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[common])

    p = command("unit", "fundamental unit and unit matrix of theta")
    p.add_argument("--theta", required=True)

    p = command("localzeta", "local zeta denominator at one prime")
    p.add_argument("--theta")
    p.add_argument("--matrix")
    p.add_argument("--modulus", type=int)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--prime", type=int, required=True)

    p = command("lfunction", "partial Euler product")
    p.add_argument("--theta")
    p.add_argument("--matrix")
    p.add_argument("--modulus", type=int)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--s", required=True)

    p = command("compare", "curve and torus local factors side by side")
    p.add_argument("--curve", required=True, help="a4,a6 or a4,a6,D; negative values are accepted, e.g. --curve -1,0")
    p.add_argument("--theta")
    p.add_argument("--matrix")

    p = command("snf", "Smith normal form")
    p.add_argument("--matrix", required=True)

    p = command("jp", "Jacobi-Perron expansion")
    p.add_argument("--theta", required=True, help="comma-separated real values")
    p.add_argument("--max-iters", type=int, default=100)

    p = command("normalform", "normal form of a skew-symmetric matrix")
    p.add_argument("--skew", required=True, help="upper triangle rows separated by ';'")

    p = command("so-check", "membership in SO(n, n | Z)")
    p.add_argument("--matrix", required=True)

    p = command("symplectic-check", "membership in Sp(2n, Z) and of the lift in SO(n, n | Z)")
    p.add_argument("--matrix", required=True)

    p = command("functor", "normalize, transpose and map a 2x2 endomorphism")
    p.add_argument("--matrix", required=True)

    p = command("unit-index", "least g with epsilon^g in Z + (n theta)Z")
    p.add_argument("--theta", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--table", action="store_true", help="every index from 1 to n")

    p = command("cf", "continued fraction expansion")
    p.add_argument("--theta", required=True)

    p = command("characters", "Dirichlet characters modulo N")
    p.add_argument("--modulus", type=int, required=True)

    p = command("pf", "Perron-Frobenius eigendata")
    p.add_argument("--matrix", required=True)
    p.add_argument("--mode", choices=["auto", "exact", "interval"], default="auto")

    return parser


def resolve_config(args: argparse.Namespace) -> Config:
    """Flags override the config file, which overrides environment and defaults"""
    base = load_config(getattr(args, "config", None))
    return base.merged(
        precision=getattr(args, "precision", None),
        prime_bound=getattr(args, "prime_bound", None),
        output_format=getattr(args, "format", None),
        threads=getattr(args, "threads", None),
    )


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def join_option_values(argv: List[str]) -> List[str]:
    """Rewrite '--curve -1,0' as '--curve=-1,0' so argparse does not read the value as an option"""
    joined = []
    i = 0
    while i < len(argv):
        token = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if token in VALUE_OPTIONS and nxt.startswith("-") and not nxt.startswith("--"):
            joined.append(f"{token}={nxt}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


def run(argv: Optional[List[str]] = None) -> Tuple[str, Optional[str]]:
    """Parse, execute and render; returns the text and the --out path"""
    argv = join_option_values(list(sys.argv[1:] if argv is None else argv))
    args = create_parser().parse_args(argv)
    _setup_logging(getattr(args, "verbose", False))
    cfg = resolve_config(args)
    logger.debug("running %s with %s", args.command, cfg.model_dump())
    data = COMMANDS[args.command](args, cfg)
    out = getattr(args, "out", None)
    return write_report(data, cfg.output_format, out), out


def main(argv: Optional[List[str]] = None) -> int:
    """Exit status: 0 success, 1 usage error, 2 domain error"""
    try:
        text, out = run(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except (NctError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if out is None:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
