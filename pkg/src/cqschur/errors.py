"""Error types. Each carries a stable ``name`` used in CLI error JSON."""


class CQSError(Exception):
    name = "Error"

    def to_json(self):
        return {"error": self.name, "message": str(self)}


class DenominatorVanishes(CQSError):
    name = "DenominatorVanishes"


class NonInvertibleQ(CQSError):
    name = "NonInvertibleQ"


class ZeroDivisor(CQSError):
    name = "ZeroDivisor"


class InexactDivision(CQSError):
    name = "InexactDivision"


class SizeMismatch(CQSError):
    name = "SizeMismatch"


class ShiftOutOfRange(CQSError):
    name = "ShiftOutOfRange"


class NoSolutionAtBound(CQSError):
    name = "NoSolutionAtBound"


class ForcedSetDependent(CQSError):
    name = "ForcedSetDependent"


class NotACleared(CQSError):
    name = "NotACleared"


class NegativeMultiplicity(CQSError):
    name = "NegativeMultiplicity"


class ParseError(CQSError):
    name = "ParseError"


class BudgetExceeded(CQSError):
    name = "BudgetExceeded"
