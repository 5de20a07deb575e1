"""Brute-force ground truth for tiny structures.

Everything here enumerates: every linear order on the realizable sets,
every table a choice function could legally be.  Nothing in this module uses
the encoding or extension machinery of :mod:`restricted_choice.synthesis`,
so it can serve as an independent check on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .axioms import all_hold, suite_holds
from .errors import NotUnionClosed, TooLarge
from .sets import AltSet, is_subset
from .structures import (
    ChoiceFunctionTable,
    LinearSetOrder,
    RestrictedChoiceStructure,
    evaluate,
    is_union_closed,
)

MAX_REALIZABLE = 8
MAX_DOMAIN = 20


@dataclass(frozen=True)
class OracleVerdict:
    table: ChoiceFunctionTable
    representable: bool
    witness_order: LinearSetOrder | None
    axioms_hold: bool


@dataclass(frozen=True)
class SweepSummary:
    tables: int
    representable: int
    axioms_hold: int
    violations: int

    def to_json(self) -> dict:
        return {
            "tables": self.tables,
            "representable": self.representable,
            "axioms_hold": self.axioms_hold,
            "violations": self.violations,
        }


def _guard_realizable(structure: RestrictedChoiceStructure) -> None:
    if len(structure.realizable) > MAX_REALIZABLE:
        raise TooLarge(
            f"{len(structure.realizable)} realizable sets; enumeration is capped at {MAX_REALIZABLE}"
        )


def enumerate_orders(
    structure: RestrictedChoiceStructure, k: AltSet | None = None
) -> Iterator[LinearSetOrder]:
    """Every linear order on the realizable sets; only those starting at ``k`` if given."""
    _guard_realizable(structure)
    if k is None:
        for perm in itertools.permutations(structure.realizable):
            yield LinearSetOrder(perm)
        return
    if k not in structure.realizable_set:
        return
    rest = [e for e in structure.realizable if e != k]
    for perm in itertools.permutations(rest):
        yield LinearSetOrder((k, *perm))


def _brute_table(order: LinearSetOrder, k: AltSet, structure: RestrictedChoiceStructure) -> tuple:
    return tuple(evaluate(order, k, s) for s in structure.domain)


def legal_outputs(structure: RestrictedChoiceStructure, s: AltSet, k: AltSet) -> list[AltSet]:
    subs = [e for e in structure.realizable if is_subset(e, s)]
    return subs or [k]


def enumerate_tables(
    structure: RestrictedChoiceStructure, k: AltSet
) -> Iterator[ChoiceFunctionTable]:
    """Every valid choice table with fallback ``k``: one legal output per input."""
    if len(structure.domain) > MAX_DOMAIN:
        raise TooLarge(f"{len(structure.domain)} inputs; table enumeration is capped at {MAX_DOMAIN}")
    options = [legal_outputs(structure, s, k) for s in structure.domain]
    for combo in itertools.product(*options):
        yield ChoiceFunctionTable(structure, k, dict(zip(structure.domain, combo)))


def representable_tables(
    structure: RestrictedChoiceStructure, k: AltSet
) -> dict[tuple, LinearSetOrder]:
    """Map from table key (outputs in domain order) to a first witnessing k-minimal order."""
    found: dict[tuple, LinearSetOrder] = {}
    for order in enumerate_orders(structure, k):
        found.setdefault(_brute_table(order, k, structure), order)
    return found


def decide_representable(table: ChoiceFunctionTable) -> OracleVerdict:
    st = table.structure
    _guard_realizable(st)
    target = table.key()
    witness = None
    for order in enumerate_orders(st, table.fallback):
        if _brute_table(order, table.fallback, st) == target:
            witness = order
            break
    return OracleVerdict(table, witness is not None, witness, suite_holds(table, "sse"))


def sweep(structure: RestrictedChoiceStructure, k: AltSet | None = None) -> SweepSummary:
    """Check representability against the axiom suite for every valid table.

    ``violations`` counts tables where the brute-force verdict and the
    axiom verdict disagree.
    """
    _guard_realizable(structure)
    fallbacks = structure.realizable if k is None else (k,)
    tables = rep = ax = bad = 0
    for fb in fallbacks:
        witnesses = representable_tables(structure, fb)
        for table in enumerate_tables(structure, fb):
            r = table.key() in witnesses
            a = suite_holds(table, "sse")
            tables += 1
            rep += r
            ax += a
            bad += r != a
    return SweepSummary(tables, rep, ax, bad)


def cross_check_union_closed(structure: RestrictedChoiceStructure) -> bool:
    """On a union-closed structure, (SS5 and SS6) iff (SS5E and SS6E) for every valid table."""
    if not is_union_closed(structure):
        raise NotUnionClosed("the SS5/SS6 versus SS5E/SS6E comparison needs a union-closed domain")
    for k in structure.realizable:
        for table in enumerate_tables(structure, k):
            # the SS6 sweeps are cheaper, so they go first
            if all_hold(table, ("SS6", "SS5")) != all_hold(table, ("SS6E", "SS5E")):
                return False
    return True
