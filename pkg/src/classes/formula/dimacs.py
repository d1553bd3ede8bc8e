# Parsing and writing of DIMACS CNF, extended with weight and clause-label directives:
#   c w <var> <re> <im>            weight of <var> is re + i*im
#   c cl <clause-index> <re> <im>  label of the 1-indexed clause
import math
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.classes.base.base_ring import RingValue
from src.classes.formula.cnf import Clause, Literal, WeightedFormula, normalize
from src.utils.exceptions import DimacsParseError
from src.utils.logger import get_logger

logger = get_logger(__name__)

WEIGHT_DIRECTIVE = "w"
LABEL_DIRECTIVE = "cl"


def parse_number(token: str) -> Fraction:
    """Decimal literal (``-1``, ``0.5``, ``2.5e-3``) or ``p/q`` rational."""
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        value = None
    if value is None:
        raise ValueError(f"'{token}' is not a number")
    return value


def ring_value(real: Fraction, imag: Fraction) -> RingValue:
    """Exact rational when the imaginary part is zero, complex float otherwise."""
    if imag == 0:
        return real.numerator if real.denominator == 1 else real
    return complex(float(real), float(imag))


def _directive_target(tokens: List[str]) -> Optional[int]:
    """Index of a ``c w`` / ``c cl`` directive; None for any other comment line."""
    if len(tokens) < 3 or tokens[1] not in (WEIGHT_DIRECTIVE, LABEL_DIRECTIVE):
        return None
    try:
        return int(tokens[2])
    except ValueError:
        return None


def _directive_value(tokens: List[str], line_number: int) -> RingValue:
    try:
        real, imag = parse_number(tokens[3]), parse_number(tokens[4])
    except ValueError as ex:
        raise DimacsParseError(f"Malformed directive value: {ex}", line_number)
    return ring_value(real, imag)


def parse_dimacs(text: str) -> WeightedFormula:
    """Parse extended DIMACS text into a normalized formula."""
    header: Optional[Tuple[int, int]] = None
    header_line = 0
    clauses: List[List[int]] = []
    pending: List[int] = []
    pending_line = 0
    weight_directives: Dict[int, Tuple[RingValue, int]] = {}
    label_directives: Dict[int, Tuple[RingValue, int]] = {}
    line_number = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("%"):
            # SATLIB end marker
            break
        tokens = line.split()
        if tokens[0] == "c":
            target = _directive_target(tokens)
            if target is not None:
                if len(tokens) != 5:
                    raise DimacsParseError(
                        f"Directive 'c {tokens[1]}' expects 3 fields, got {len(tokens) - 2}", line_number
                    )
                value = _directive_value(tokens, line_number)
                table = weight_directives if tokens[1] == WEIGHT_DIRECTIVE else label_directives
                table[target] = (value, line_number)
            continue
        if tokens[0] == "p":
            if header is not None:
                raise DimacsParseError("Second header line", line_number)
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise DimacsParseError(f"Bad header line '{line}'. Expected 'p cnf <n> <m>'", line_number)
            try:
                header = (int(tokens[2]), int(tokens[3]))
            except ValueError:
                raise DimacsParseError(f"Bad header line '{line}'. Invalid number of variables or clauses",
                                       line_number)
            if header[0] < 0 or header[1] < 0:
                raise DimacsParseError(f"Bad header line '{line}'. Negative count", line_number)
            header_line = line_number
            continue
        if header is None:
            raise DimacsParseError("Clause before header line", line_number)
        for token in tokens:
            try:
                code = int(token)
            except ValueError:
                raise DimacsParseError(f"Non-integer field '{token}'", line_number)
            if code == 0:
                clauses.append(pending)
                pending, pending_line = [], 0
                continue
            if abs(code) > header[0]:
                raise DimacsParseError(f"Out-of-range literal {code} (n = {header[0]})", line_number)
            if not pending:
                pending_line = line_number
            pending.append(code)

    if header is None:
        raise DimacsParseError("Missing header line 'p cnf <n> <m>'", line_number or None)
    if pending:
        raise DimacsParseError("Clause not terminated by 0", pending_line)
    variable_count, clause_count = header
    if len(clauses) != clause_count:
        raise DimacsParseError(f"Got {len(clauses)} clauses. Expected {clause_count}", header_line)

    weights: Dict[int, RingValue] = {}
    for variable, (value, where) in weight_directives.items():
        if not 1 <= variable <= variable_count:
            raise DimacsParseError(f"Weight directive for x{variable} out of range (n = {variable_count})", where)
        if value == 0:
            raise DimacsParseError(f"Weight of x{variable} must be nonzero", where)
        weights[variable] = value
    labels: Dict[int, RingValue] = {}
    for index, (value, where) in label_directives.items():
        if not 1 <= index <= clause_count:
            raise DimacsParseError(f"Label directive for clause {index} out of range (m = {clause_count})", where)
        labels[index] = value

    formula = WeightedFormula(
        variable_count,
        tuple(
            Clause(tuple(Literal.from_dimacs(code) for code in codes), labels.get(index, 0))
            for index, codes in enumerate(clauses, start=1)
        ),
        weights,
    )
    logger.debug("parsed n=%d m=%d weights=%d labels=%d", variable_count, clause_count, len(weights), len(labels))
    return normalize(formula)


def format_number(value) -> str:
    """Shortest text that parses back to exactly ``value``."""
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        decimal = _terminating_decimal(value)
        return decimal if decimal is not None else f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"cannot serialize {value!r}")
        if value.is_integer():
            return str(int(value))
        return repr(value)
    raise TypeError(f"cannot serialize {value!r}")


def _terminating_decimal(value: Fraction) -> Optional[str]:
    denominator = value.denominator
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    if denominator != 1:
        return None
    places = max(twos, fives)
    with localcontext() as context:
        context.prec = len(str(abs(value.numerator))) + places + 2
        text = format(Decimal(value.numerator) / Decimal(value.denominator), "f")
    return text.rstrip("0").rstrip(".") if "." in text else text


def _split(value: RingValue) -> Tuple[str, str]:
    if isinstance(value, complex):
        return format_number(value.real), format_number(value.imag)
    return format_number(value), "0"


def serialize_dimacs(formula: WeightedFormula, comments: Optional[List[str]] = None) -> str:
    lines = [f"c {comment}" if comment else "c" for comment in (comments or [])]
    lines.append(f"p cnf {formula.variable_count} {formula.clause_count}")
    for variable, weight in formula.weights.items():
        real, imag = _split(weight)
        lines.append(f"c {WEIGHT_DIRECTIVE} {variable} {real} {imag}")
    for index, clause in enumerate(formula.clauses, start=1):
        if not clause.is_hard:
            real, imag = _split(clause.label)
            lines.append(f"c {LABEL_DIRECTIVE} {index} {real} {imag}")
    for clause in formula.clauses:
        lines.append(" ".join(str(code) for code in clause.to_dimacs() + (0,)))
    return "\n".join(lines) + "\n"
