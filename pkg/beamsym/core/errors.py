"""Exception hierarchy shared by every service.

Each error carries a short ``code`` so the CLI can print a single
machine-parseable failure line.
"""

from __future__ import annotations


class BeamSymError(Exception):
    """Root of all toolkit errors."""

    code: str = "error"

    def one_line(self) -> str:
        message = str(self).replace("\n", " ").replace('"', "'")
        return f'error code={self.code} message="{message}"'


class EvaluationError(BeamSymError, ArithmeticError):
    """Non-finite result or domain violation while evaluating a jet or formula."""

    code = "evaluation"


class SingularCharacteristicError(EvaluationError):
    """The spatial infinitesimal vanishes on a characteristic integration path."""

    code = "singular"


class ParameterError(BeamSymError, ValueError):
    """Invalid case, configuration or command parameters."""

    code = "parameter"


class ConstraintViolationError(ParameterError):
    """Parameters outside the admissible set of a closed-form family."""

    code = "constraint"


class DomainMismatchError(ParameterError):
    """Trajectory and solution live on different spatial domains."""

    code = "domain"


class UnsupportedFormError(BeamSymError):
    """A closed-form operation was requested on an expression it cannot handle."""

    code = "unsupported"


class SolverError(BeamSymError, RuntimeError):
    """Linear solve breakdown during time stepping."""

    code = "solver"


class UsageError(ParameterError):
    """Malformed command line."""

    code = "usage"
