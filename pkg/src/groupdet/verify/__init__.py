"""Machine checks of the factorization and commutator identities."""

from .checks import (
    CHECKS,
    CheckResult,
    InapplicableCheckError,
    UnknownCheckError,
    applicability,
    assignment_stream,
    list_checks,
    random_assignment,
    run_all,
    run_check,
)

__all__ = [
    "CHECKS",
    "CheckResult",
    "InapplicableCheckError",
    "UnknownCheckError",
    "applicability",
    "assignment_stream",
    "list_checks",
    "random_assignment",
    "run_all",
    "run_check",
]
