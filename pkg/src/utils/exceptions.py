class ModelCountError(Exception):
    """Base class for every error raised by cdpcount."""

    kind = "Model count error"

    def __init__(self, value):
        super().__init__(value)
        self.value = value

    def __str__(self):
        return f"{self.kind}: {self.value}"


class MalformedInstanceError(ModelCountError):
    kind = "Malformed instance"


class ParseError(MalformedInstanceError):
    kind = "Parse error"

    def __init__(self, value, line=None):
        super().__init__(value)
        self.line = line

    def __str__(self):
        if self.line is None:
            return f"{self.kind}: {self.value}"
        return f"{self.kind}: line {self.line}. {self.value}"


class DimacsParseError(ParseError):
    kind = "DIMACS error"


class CircuitParseError(ParseError):
    kind = "Circuit error"


class InvalidCircuitError(MalformedInstanceError):
    kind = "Invalid circuit"


class PartialAssignmentError(ModelCountError):
    kind = "Partial assignment"


class WeightedInputError(ModelCountError):
    """A plain (#SAT) instance was required."""

    kind = "Weighted input"


class WrongAlgorithmError(ModelCountError):
    kind = "Wrong algorithm"


class RuleNotApplicableError(ModelCountError):
    kind = "Rule not applicable"


class OracleCapError(ModelCountError):
    kind = "Oracle cap"


class BudgetExceededError(ModelCountError):
    kind = "Budget exceeded"

    def __init__(self, value, nodes=None):
        super().__init__(value)
        self.nodes = nodes
