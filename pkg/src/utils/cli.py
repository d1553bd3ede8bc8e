"""Command-line surface: count, reduce, stats, oracle and amplitude.

Results go to stdout and are byte-identical across repeated runs; diagnostics go to stderr.
Exit codes: 0 success, 1 input error, 2 node budget exhausted, 3 ``--check`` mismatch.
"""
import argparse
import sys
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, TextIO

import pandas as pd

from src.classes.bounds.bound_calculator import bound_report
from src.classes.bounds.instance_stats import instance_stats
from src.classes.circuit.circuit import parse_circuit
from src.classes.circuit.statevector import statevector_amplitude
from src.classes.circuit.translation import amplitude
from src.classes.counting.algorithms import ALGORITHMS, count
from src.classes.counting.strategy import BranchStrategy
from src.classes.formula.dimacs import parse_dimacs, serialize_dimacs
from src.classes.oracle.brute_force import BruteForceCounter
from src.classes.reduction.two_sat_reduction import reduce_to_2sat_pm
from src.classes.ring.complex_ring import format_complex
from src.utils.config import Defaults, load_circuit_config, load_oracle_config, load_solver_config
from src.utils.exceptions import BudgetExceededError, ModelCountError
from src.utils.logger import configure_logging, get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_BUDGET = 2
EXIT_CHECK_FAILED = 3

SUBCOMMANDS = ("count", "reduce", "stats", "oracle", "amplitude")
OUTPUT_FORMATS = ("text", "kv")


@dataclass
class RunConfig:
    subcommand: str
    input_path: Optional[str] = None  # None or "-" reads stdin
    algorithm: str = "weighted"
    solver: Dict[str, object] = field(default_factory=load_solver_config)
    check: bool = False
    show_stats: bool = False
    output_format: str = "text"
    oracle_cap: int = Defaults.ORACLE_CAP
    bra: Optional[str] = None
    ket: Optional[str] = None
    verbosity: int = 0

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand '{self.subcommand}'")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format '{self.output_format}'")
        if self.oracle_cap <= 0 or self.solver.get("node_cap", 1) <= 0:
            raise ValueError("caps must be positive")


class CheckFailed(Exception):
    pass


def _read_input(path: Optional[str], stdin: TextIO) -> str:
    if path is None or path == "-":
        return stdin.read()
    with open(path, "r") as handle:
        return handle.read()


def format_deviation(deviation: float) -> str:
    """One-digit scientific notation with a bare exponent: ``0.0e0``, ``2.2e-16``."""
    mantissa, exponent = f"{deviation:.1e}".split("e")
    return f"{mantissa}e{int(exponent)}"


def _key_values(values: Dict[str, object]) -> List[str]:
    return [f"{key}={value}" for key, value in values.items()]


def _count(config: RunConfig, text: str, out: List[str]) -> None:
    formula = parse_dimacs(text)
    result = count(formula, config.algorithm, **config.solver)
    out.append(result.formatted())
    if config.show_stats:
        out.append("stats: " + " ".join(_key_values(result.statistics.as_dict())))
    if not config.check:
        return
    if formula.variable_count > config.oracle_cap:
        out.append(f"check: skipped (n={formula.variable_count} over oracle cap {config.oracle_cap})")
        return
    expected = BruteForceCounter(config.oracle_cap).count(formula).count
    deviation = abs(complex(result.count) - complex(expected))
    if not result.ring.equal(result.count, expected):
        raise CheckFailed(f"count {result.formatted()} != oracle {result.ring.format(expected)}")
    out.append(f"check: ok (dev {format_deviation(deviation)})")


def _reduce(config: RunConfig, text: str, out: List[str]) -> None:
    reduced, reduction = reduce_to_2sat_pm(parse_dimacs(text))
    out.append(serialize_dimacs(reduced, comments=reduction.comment_lines()).rstrip("\n"))


def _stats(config: RunConfig, text: str, out: List[str]) -> None:
    stats = instance_stats(parse_dimacs(text))
    values = dict(stats.as_dict())
    values.update(bound_report(stats).as_dict())
    if config.output_format == "text":
        table = pd.DataFrame({"value": [str(value) for value in values.values()]}, index=list(values))
        out.append(table.to_string(header=False))
        out.append("")
    out.extend(_key_values(values))


def _oracle(config: RunConfig, text: str, out: List[str]) -> None:
    result = BruteForceCounter(config.oracle_cap).count(parse_dimacs(text))
    out.append(result.formatted())


def _amplitude(config: RunConfig, text: str, out: List[str]) -> None:
    circuit = parse_circuit(text)
    value = amplitude(circuit, config.bra, config.ket, **config.solver)
    out.append(format_complex(value, Defaults.OUTPUT_DIGITS))
    if not config.check:
        return
    circuit_config = load_circuit_config()
    if circuit.qubit_count > circuit_config["statevector_cap"]:
        out.append(f"check: skipped (n={circuit.qubit_count} over statevector cap)")
        return
    expected = statevector_amplitude(circuit, config.bra, config.ket, circuit_config["statevector_cap"])
    deviation = abs(value - expected)
    if deviation > circuit_config["tolerance"] * max(1.0, abs(expected)):
        raise CheckFailed(
            f"amplitude {format_complex(value, Defaults.OUTPUT_DIGITS)} != statevector "
            f"{format_complex(expected, Defaults.OUTPUT_DIGITS)}"
        )
    out.append(f"check: ok (dev {format_deviation(deviation)})")


_HANDLERS: Dict[str, Callable[[RunConfig, str, List[str]], None]] = {
    "count": _count,
    "reduce": _reduce,
    "stats": _stats,
    "oracle": _oracle,
    "amplitude": _amplitude,
}


def run(config: RunConfig, stdin: TextIO = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    out: List[str] = []
    try:
        text = _read_input(config.input_path, stdin)
        _HANDLERS[config.subcommand](config, text, out)
    except BudgetExceededError as ex:
        print(ex, file=stderr)
        return EXIT_BUDGET
    except CheckFailed as ex:
        stdout.write("".join(line + "\n" for line in out))
        print(f"check: MISMATCH {ex}", file=stderr)
        return EXIT_CHECK_FAILED
    except ModelCountError as ex:
        print(ex, file=stderr)
        return EXIT_INPUT_ERROR
    except OSError as ex:
        print(f"Input error: {ex}", file=stderr)
        return EXIT_INPUT_ERROR
    stdout.write("".join(line + "\n" for line in out))
    return EXIT_OK


def _positive_int(token: str) -> int:
    value = int(token)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {token}")
    return value


def _solver_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--strategy", choices=BranchStrategy.names(), default=Defaults.DEFAULT_STRATEGY,
                        help="branching heuristic")
    parser.add_argument("--no-components", action="store_true", help="do not split into independent components")
    parser.add_argument("--absorb", action="store_true", help="eliminate degree-one variables into clause labels")
    parser.add_argument("--node-cap", type=_positive_int, default=Defaults.NODE_CAP,
                        help="abort (exit 2) after this many branch nodes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=Defaults.APP_NAME,
        description="Exact weighted model counting over extended DIMACS CNF and circuit amplitudes.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"{Defaults.APP_NAME} {Defaults.APP_VERSION}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG on stderr")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    count_parser = subparsers.add_parser(
        "count",
        help="count models of a CNF instance",
        description="Prints the count on one line: an integer, p/q when exact weights give a "
                    "non-integral rational, or re+imi for complex weights.",
    )
    count_parser.add_argument("input", nargs="?", default="-", help="DIMACS file, '-' for stdin")
    count_parser.add_argument("--algo", choices=list(ALGORITHMS), default="weighted", help="counting algorithm")
    _solver_flags(count_parser)
    count_parser.add_argument("--stats", action="store_true", help="print search statistics")
    count_parser.add_argument("--check", action="store_true", help="cross-check against brute force (exit 3 on mismatch)")
    count_parser.add_argument("--cap", type=_positive_int, default=Defaults.ORACLE_CAP, help="brute-force variable cap")

    reduce_parser = subparsers.add_parser("reduce", help="reduce a plain instance to signed #2SAT")
    reduce_parser.add_argument("input", nargs="?", default="-", help="DIMACS file, '-' for stdin")

    stats_parser = subparsers.add_parser("stats", help="instance statistics and runtime-bound report")
    stats_parser.add_argument("input", nargs="?", default="-", help="DIMACS file, '-' for stdin")
    stats_parser.add_argument("--format", choices=OUTPUT_FORMATS, default="text",
                              help="text prints an aligned table and the key=value block; kv only the block")

    oracle_parser = subparsers.add_parser("oracle", help="brute-force weighted count")
    oracle_parser.add_argument("input", nargs="?", default="-", help="DIMACS file, '-' for stdin")
    oracle_parser.add_argument("--cap", type=_positive_int, default=Defaults.ORACLE_CAP, help="refuse n above this")

    amplitude_parser = subparsers.add_parser("amplitude", help="<bra|U|ket> via weighted 2-SAT counting")
    amplitude_parser.add_argument("input", nargs="?", default="-", help="circuit file, '-' for stdin")
    amplitude_parser.add_argument("--check", "--oracle", dest="check", action="store_true",
                                  help="cross-check against statevector simulation (exit 3 on mismatch)")
    amplitude_parser.add_argument("--bra", default=None, help="per-qubit output state over '+01' (default all '+')")
    amplitude_parser.add_argument("--ket", default=None, help="per-qubit input state over '+01' (default all '+')")
    _solver_flags(amplitude_parser)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    solver = load_solver_config()
    if hasattr(args, "strategy"):
        solver.update(
            strategy=args.strategy,
            components=not args.no_components,
            absorb=args.absorb,
            node_cap=args.node_cap,
        )
    return RunConfig(
        subcommand=args.subcommand,
        input_path=args.input,
        algorithm=getattr(args, "algo", "weighted"),
        solver=solver,
        check=getattr(args, "check", False),
        show_stats=getattr(args, "stats", False),
        output_format=getattr(args, "format", "text"),
        oracle_cap=getattr(args, "cap", load_oracle_config()["cap"]),
        bra=getattr(args, "bra", None),
        ket=getattr(args, "ket", None),
        verbosity=args.verbose,
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    configure_logging(config.verbosity)
    logger.debug("running %s on %s", config.subcommand, config.input_path)
    return run(config)
