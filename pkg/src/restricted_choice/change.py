"""Choice-based change operators.

``K * S`` revises prior state ``K`` by input ``S``: each prior state owns a
set of reachable results ``E_K`` (containing ``K`` itself) and a linear
order on it with ``K`` first, and the result is the fallback evaluation of
that order on ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .axioms import LCR_AXIOMS, AxiomReport, check_lcr
from .errors import AxiomViolation, FamilyInvalid, NotUnionClosed, OutOfDomain
from .sets import AltSet, Universe
from .structures import (
    ChoiceFunctionTable,
    LinearSetOrder,
    RestrictedChoiceStructure,
    evaluate,
    is_union_closed_family,
)
from .synthesis import existence_order, synthesize


@dataclass(frozen=True, eq=False)
class ChangeOperator:
    universe: Universe
    domain: tuple[AltSet, ...]
    family: Mapping[AltSet, LinearSetOrder]

    def __post_init__(self):
        domain = tuple(sorted(set(self.domain)))
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "family", dict(self.family))
        if not is_union_closed_family(domain):
            raise NotUnionClosed("change operators need a union-closed domain")
        present = set(domain)
        for k in domain:
            order = self.family.get(k)
            if order is None:
                raise FamilyInvalid(f"no order for prior state {self.universe.format(k)}")
            if order.chain[0] != k:
                raise FamilyInvalid(
                    f"order for {self.universe.format(k)} must rank it first"
                )
            stray = [e for e in order.chain if e not in present]
            if stray:
                raise FamilyInvalid(
                    f"order for {self.universe.format(k)} ranks sets outside the domain"
                )
        if set(self.family) - present:
            raise FamilyInvalid("family has prior states outside the domain")

    def realizable(self, k: AltSet) -> tuple[AltSet, ...]:
        return tuple(sorted(self.family[k].chain))

    def revise(self, k: AltSet, s: AltSet) -> AltSet:
        if k not in self.family or s not in set(self.domain):
            raise OutOfDomain("prior state and input must both belong to the domain")
        return evaluate(self.family[k], k, s)

    def tabulate(self) -> dict[tuple[AltSet, AltSet], AltSet]:
        return {(k, s): self.revise(k, s) for k in self.domain for s in self.domain}


@dataclass(frozen=True, eq=False)
class TabulatedOperator:
    """An arbitrary change operator given by its full ``(K, S) -> result`` table."""

    universe: Universe
    domain: tuple[AltSet, ...]
    table: Mapping[tuple[AltSet, AltSet], AltSet]

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(sorted(set(self.domain))))
        object.__setattr__(self, "table", dict(self.table))
        missing = [(k, s) for k in self.domain for s in self.domain if (k, s) not in self.table]
        if missing:
            raise FamilyInvalid(f"operator table misses {len(missing)} (K, S) pairs")

    def revise(self, k: AltSet, s: AltSet) -> AltSet:
        try:
            return self.table[(k, s)]
        except KeyError:
            raise OutOfDomain("prior state and input must both belong to the domain") from None

    def tabulate(self) -> dict[tuple[AltSet, AltSet], AltSet]:
        return dict(self.table)


def fit_family(
    universe: Universe,
    domain: Iterable[AltSet],
    realizable_family: Mapping[AltSet, Iterable[AltSet]],
) -> ChangeOperator:
    """A linear operator fitting the given ``K -> E_K`` family."""
    domain = tuple(sorted(set(domain)))
    if not is_union_closed_family(domain):
        raise NotUnionClosed("change operators need a union-closed domain")
    family = {}
    for k in domain:
        if k not in realizable_family:
            raise FamilyInvalid(f"no realizable sets given for {universe.format(k)}")
        reach = tuple(realizable_family[k])
        if k not in reach:
            raise FamilyInvalid(f"{universe.format(k)} must be realizable from itself")
        if not set(reach) <= set(domain):
            raise FamilyInvalid(f"realizable sets for {universe.format(k)} leave the domain")
        st = RestrictedChoiceStructure(universe, domain, reach)
        family[k] = existence_order(st, k)
    return ChangeOperator(universe, domain, family)


def lcr_certify(op) -> list[AxiomReport]:
    return [check_lcr(op, ax) for ax in LCR_AXIOMS]


def slice_table(op, k: AltSet) -> ChoiceFunctionTable:
    """``K * .`` as a choice table over the structure whose realizable sets are its image."""
    choose = {s: op.revise(k, s) for s in op.domain}
    st = RestrictedChoiceStructure(op.universe, op.domain, tuple(set(choose.values())))
    return ChoiceFunctionTable(st, k, choose)


def reconstruct(op) -> ChangeOperator:
    """Per-prior-state synthesis of a linear operator reproducing ``op``.

    Raises :class:`AxiomViolation` carrying the first failing LCR report
    when ``op`` is not linear choice-based.
    """
    for report in lcr_certify(op):
        if not report.holds:
            raise AxiomViolation(report)
    family = {k: synthesize(slice_table(op, k)).final for k in op.domain}
    return ChangeOperator(op.universe, op.domain, family)
