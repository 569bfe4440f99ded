"""Exception hierarchy shared by all modules."""


class MatroidError(ValueError):
    """Base class for construction and validation failures."""


class EmptyBases(MatroidError):
    pass


class UnequalCardinality(MatroidError):
    pass


class ElementOutOfRange(MatroidError):
    pass


class ExchangeAxiomViolation(MatroidError):
    def __init__(self, b1, b2, e):
        self.b1 = tuple(b1)
        self.b2 = tuple(b2)
        self.e = e
        super().__init__(
            f"basis exchange fails: B1={set(self.b1)}, B2={set(self.b2)}, e={e} "
            "has no partner f in B2\\B1"
        )


class OverlappingSets(MatroidError):
    pass


class DependentContraction(MatroidError):
    pass


class NotACircuitHyperplane(MatroidError):
    pass


class InvalidRank(MatroidError):
    pass


class UnsupportedFieldOrder(MatroidError):
    pass


class UnknownName(MatroidError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown catalog name"


class ChecksumMismatch(MatroidError):
    pass


class RankDeficient(MatroidError):
    pass


class SupportMismatch(MatroidError):
    pass


class ParseError(MatroidError):
    """Malformed input file; carries the source location."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(where + message)
