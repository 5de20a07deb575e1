"""Exception hierarchy shared by every module.

Each exception carries a short ``kind`` string used by the CLI when it
serialises errors as ``{"error": {"kind": ..., "detail": ...}}``.
"""

from __future__ import annotations


class ChoiceError(Exception):
    kind = "error"

    def __init__(self, detail: str = "", **extra):
        super().__init__(detail)
        self.detail = detail
        self.extra = extra

    def to_json(self) -> dict:
        body = {"kind": self.kind, "detail": self.detail}
        body.update(self.extra)
        return {"error": body}


class UnknownAlternative(ChoiceError):
    kind = "unknown_alternative"


class UniverseTooLarge(ChoiceError):
    kind = "universe_too_large"


class InvalidStructure(ChoiceError):
    kind = "invalid_structure"


class InvalidTable(ChoiceError):
    kind = "invalid_table"


class InvalidOrder(ChoiceError):
    kind = "invalid_order"


class InvalidRelation(ChoiceError):
    kind = "invalid_relation"


class Inconsistent(ChoiceError):
    kind = "inconsistent"


class NotTotalPreorder(ChoiceError):
    kind = "not_total_preorder"


class CarrierNotRealizable(ChoiceError):
    kind = "carrier_not_realizable"


class FallbackNotRealizable(ChoiceError):
    kind = "fallback_not_realizable"


class NotUnionClosed(ChoiceError):
    kind = "not_union_closed"


class AxiomViolation(ChoiceError):
    kind = "axiom_violation"

    def __init__(self, report):
        super().__init__(f"{report.axiom} is violated", axiom=report.axiom)
        self.report = report


class InternalIncompatibility(ChoiceError):
    kind = "internal_incompatibility"


class TooLarge(ChoiceError):
    kind = "too_large"


class OutOfDomain(ChoiceError):
    kind = "out_of_domain"


class FamilyInvalid(ChoiceError):
    kind = "family_invalid"


class ApxSyntaxError(ChoiceError):
    kind = "syntax_error"


class UndeclaredArgument(ChoiceError):
    kind = "undeclared_argument"


class FormatError(ChoiceError):
    kind = "format_error"
