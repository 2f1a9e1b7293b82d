from __future__ import annotations


class CylromanError(Exception):
    """Base class for every error raised by this package."""


class InputError(CylromanError, ValueError):
    """A vertex, parameter or file does not describe a valid instance."""


class PreconditionError(InputError):
    """The operation is not defined for the requested parameters."""


class BudgetExceeded(CylromanError):
    """An exact search would exceed its configured state budget."""


class ConstructionError(CylromanError):
    """A construction produced a labeling that fails verification.

    The offending labeling and its violation report are attached so the
    caller can inspect exactly which vertices break the condition.
    """

    def __init__(self, construction, n, k, labeling, report, detail=None):
        self.construction = construction
        self.n = n
        self.k = k
        self.labeling = labeling
        self.report = report
        if detail is None:
            detail = f"{len(report)} violating vertices, first {report.entries[0]}"
        self.detail = detail
        super().__init__(f"{construction} with n={n}, k={k} failed: {detail}")
