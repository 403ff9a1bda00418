"""
Exception hierarchy shared by every module.

UsageError: bad input (syntax, labels, missing data) -> exit code 2
MathError: a mathematical check failed -> exit code 1
ResourceLimitError: a search ran out of budget -> exit code 3
"""

from __future__ import annotations

from typing import Optional


class ToolkitError(Exception):
    exit_code = 1


# -------------------------
# Usage / parse errors
# -------------------------
class UsageError(ToolkitError):
    exit_code = 2


class ValueSyntaxError(UsageError):
    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)


class CtSyntaxError(UsageError):
    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class DuplicateLabelError(CtSyntaxError):
    pass


class RowLengthError(CtSyntaxError):
    pass


class MissingHeaderError(CtSyntaxError):
    pass


class UnknownLabelError(UsageError):
    pass


class GensSyntaxError(UsageError):
    pass


class RepeatedPointError(GensSyntaxError):
    pass


class PointRangeError(GensSyntaxError):
    pass


class PartialTableError(UsageError):
    pass


class TableMismatchError(UsageError):
    pass


class MissingPowerMapError(UsageError):
    pass


class MissingDataError(UsageError):
    pass


class ZeroClassSizeError(UsageError):
    pass


# -------------------------
# Mathematical failures
# -------------------------
class MathError(ToolkitError):
    exit_code = 1


class NotRationalError(MathError):
    pass


class FusionError(MathError):
    pass


class CorruptTableError(MathError):
    pass


class AscentStalledError(MathError):
    def __init__(self, message: str, partial=None):
        self.partial = partial
        super().__init__(message)


class SubgroupOrderMismatch(MathError):
    pass


# -------------------------
# Budgets
# -------------------------
class ResourceLimitError(ToolkitError):
    exit_code = 3

    def __init__(self, where: str, budget: int, used: int):
        self.where = where
        self.budget = budget
        self.used = used
        super().__init__(f"{where}: budget of {budget:,} exhausted after {used:,} steps")

    def budget_report(self) -> str:
        return f"budget={self.budget} used={self.used} where={self.where}"
