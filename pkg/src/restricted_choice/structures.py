"""Restricted choice structures, choice tables and linear orders on sets.

A structure fixes the admissible inputs (``domain``) and the realizable
outputs (``realizable``).  A :class:`ChoiceFunctionTable` is an extensional
choice function with a designated fallback.  A :class:`LinearSetOrder`
ranks realizable sets; :func:`evaluate` turns it into a choice by picking
the least realizable subset of the input, or the fallback when no
realizable subset exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    CarrierNotRealizable,
    InvalidOrder,
    InvalidStructure,
    InvalidTable,
)
from .relations import Relation, chain_of, is_linear_order, relation_from_chain
from .sets import AltSet, Universe, is_subset


@dataclass(frozen=True)
class RestrictedChoiceStructure:
    universe: Universe
    domain: tuple[AltSet, ...]
    realizable: tuple[AltSet, ...]

    def __post_init__(self):
        domain = tuple(sorted(set(self.domain)))
        realizable = tuple(sorted(set(self.realizable)))
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "realizable", realizable)
        if not domain:
            raise InvalidStructure("domain must be non-empty")
        if not realizable:
            raise InvalidStructure("realizable sets must be non-empty")
        full = self.universe.full
        for s in domain:
            if s & ~full:
                raise InvalidStructure(f"domain member {s:#x} exceeds the universe")
        dom = set(domain)
        missing = [e for e in realizable if e not in dom]
        if missing:
            raise InvalidStructure(
                "realizable sets must belong to the domain; missing "
                + ", ".join(self.universe.format(e) for e in missing)
            )

    @classmethod
    def from_names(
        cls,
        alternatives: Sequence[str],
        domain: Iterable[Iterable[str]],
        realizable: Iterable[Iterable[str]],
    ) -> "RestrictedChoiceStructure":
        u = Universe.of(alternatives)
        return cls(u, tuple(u.set(s) for s in domain), tuple(u.set(e) for e in realizable))

    @cached_property
    def domain_set(self) -> frozenset[AltSet]:
        return frozenset(self.domain)

    @cached_property
    def realizable_set(self) -> frozenset[AltSet]:
        return frozenset(self.realizable)

    def realizable_subsets(self, s: AltSet) -> list[AltSet]:
        return [e for e in self.realizable if is_subset(e, s)]

    def has_realizable_subset(self, s: AltSet) -> bool:
        return any(is_subset(e, s) for e in self.realizable)


@dataclass(frozen=True, eq=False)
class ChoiceFunctionTable:
    """A choice function given by its value on every domain member."""

    structure: RestrictedChoiceStructure
    fallback: AltSet
    choices: Mapping[AltSet, AltSet]

    def __post_init__(self):
        st = self.structure
        object.__setattr__(self, "choices", dict(self.choices))
        if self.fallback not in st.realizable_set:
            raise InvalidTable(f"fallback {st.universe.format(self.fallback)} is not realizable")
        extra = set(self.choices) - st.domain_set
        if extra:
            raise InvalidTable(
                "table has inputs outside the domain: "
                + ", ".join(st.universe.format(s) for s in sorted(extra))
            )
        for s in st.domain:
            if s not in self.choices:
                raise InvalidTable(f"no value for domain member {st.universe.format(s)}")
            out = self.choices[s]
            if out not in st.realizable_set:
                raise InvalidTable(
                    f"value {st.universe.format(out)} for {st.universe.format(s)} is not realizable"
                )
            if st.has_realizable_subset(s):
                if not is_subset(out, s):
                    raise InvalidTable(
                        f"value for {st.universe.format(s)} must be a subset of the input"
                    )
            elif out != self.fallback:
                raise InvalidTable(
                    f"{st.universe.format(s)} has no realizable subset; value must be the fallback"
                )

    def __call__(self, s: AltSet) -> AltSet:
        return self.choices[s]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChoiceFunctionTable):
            return NotImplemented
        return (
            self.structure == other.structure
            and self.fallback == other.fallback
            and self.choices == other.choices
        )

    def __hash__(self) -> int:
        return hash((self.structure, self.fallback, self.key()))

    def key(self) -> tuple[AltSet, ...]:
        """Outputs listed in domain order; identifies the table within its structure."""
        return tuple(self.choices[s] for s in self.structure.domain)


@dataclass(frozen=True)
class LinearSetOrder:
    """A linear order on a set of alternative sets, stored as its chain (least first)."""

    chain: tuple[AltSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "chain", tuple(self.chain))
        if not self.chain:
            raise InvalidOrder("a linear order needs a non-empty carrier")
        if len(set(self.chain)) != len(self.chain):
            raise InvalidOrder("chain lists a set twice")

    @classmethod
    def from_relation(cls, rel: Relation) -> "LinearSetOrder":
        if not is_linear_order(rel):
            raise InvalidOrder("relation is not a linear order")
        return cls(tuple(rel.carrier[i] for i in chain_of(rel)))

    @cached_property
    def relation(self) -> Relation:
        return relation_from_chain(self.chain)

    @cached_property
    def rank(self) -> dict[AltSet, int]:
        return {e: i for i, e in enumerate(self.chain)}

    @property
    def carrier(self) -> frozenset[AltSet]:
        return frozenset(self.chain)

    def less(self, a: AltSet, b: AltSet) -> bool:
        return self.rank[a] < self.rank[b]


def min_of_input(order: LinearSetOrder, s: AltSet) -> AltSet | None:
    """Least carrier member contained in ``s``, or ``None`` if there is none."""
    for e in order.chain:
        if is_subset(e, s):
            return e
    return None


def evaluate(order: LinearSetOrder, fallback: AltSet, s: AltSet) -> AltSet:
    found = min_of_input(order, s)
    return fallback if found is None else found


def is_k_minimal(order: LinearSetOrder, k: AltSet) -> bool:
    return order.chain[0] == k


def is_smooth(order: LinearSetOrder, structure: RestrictedChoiceStructure) -> bool:
    # Finite chains always have minima; kept as an explicit sanity check.
    for s in structure.domain:
        if any(is_subset(e, s) for e in order.chain) and min_of_input(order, s) is None:
            return False
    return True


def table_from_order(
    order: LinearSetOrder, fallback: AltSet, structure: RestrictedChoiceStructure
) -> ChoiceFunctionTable:
    outside = [e for e in order.chain if e not in structure.realizable_set]
    if outside:
        raise CarrierNotRealizable(
            "order ranks non-realizable sets: "
            + ", ".join(structure.universe.format(e) for e in outside)
        )
    choices = {s: evaluate(order, fallback, s) for s in structure.domain}
    return ChoiceFunctionTable(structure, fallback, choices)


def is_union_closed(structure: RestrictedChoiceStructure) -> bool:
    return is_union_closed_family(structure.domain)


def is_union_closed_family(family: Iterable[AltSet]) -> bool:
    fam = list(family)
    present = set(fam)
    return all(a | b in present for i, a in enumerate(fam) for b in fam[i + 1 :])
