"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""


class BraidForgeError(Exception):
    code = "error"


class ParseError(BraidForgeError, ValueError):
    code = "parse_error"

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        super().__init__(f"{message} (at position {position})")


class StrandMismatchError(BraidForgeError, ValueError):
    code = "strand_mismatch"


class InvalidSpecError(BraidForgeError, ValueError):
    code = "invalid_spec"


class StepBudgetExceeded(BraidForgeError):
    code = "step_budget_exceeded"


class ResourceCapExceeded(BraidForgeError):
    code = "cap_exceeded"


class NotAKnotError(BraidForgeError, ValueError):
    code = "not_a_knot"


class InconsistentEvidenceError(BraidForgeError):
    code = "inconsistent_evidence"
