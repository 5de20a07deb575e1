"""Abstract argumentation frameworks and choice-based extension semantics.

A semantics answers "which arguments of this query set are selected" by
running a fallback-evaluated linear order over a realizable family of
argument sets: an extension family (conflict-free, admissible, stable) or
an explicit list.  The input domain is always the full powerset of the
framework's arguments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .axioms import LCA_AXIOMS, AxiomReport, check_axiom
from .errors import (
    ApxSyntaxError,
    FallbackNotRealizable,
    InvalidOrder,
    TooLarge,
    UndeclaredArgument,
)
from .sets import AltSet, Universe, is_subset, members
from .structures import (
    ChoiceFunctionTable,
    LinearSetOrder,
    RestrictedChoiceStructure,
    evaluate,
)

MAX_ARGUMENTS = 20
SEMANTICS = ("conflict_free", "admissible", "stable")

_ARG = re.compile(r"^arg\(\s*([^(),\s]+)\s*\)\.$")
_ATT = re.compile(r"^att\(\s*([^(),\s]+)\s*,\s*([^(),\s]+)\s*\)\.$")


@dataclass(frozen=True)
class ArgumentationFramework:
    arguments: tuple[str, ...]
    attacks: frozenset[tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "arguments", tuple(self.arguments))
        object.__setattr__(self, "attacks", frozenset(self.attacks))
        if not self.arguments:
            raise ApxSyntaxError("a framework needs at least one argument")
        declared = set(self.arguments)
        for a, b in sorted(self.attacks):
            for name in (a, b):
                if name not in declared:
                    raise UndeclaredArgument(f"attack mentions undeclared argument {name!r}",
                                             name=name)

    @cached_property
    def universe(self) -> Universe:
        return Universe(self.arguments)

    @cached_property
    def attackers(self) -> list[AltSet]:
        """``attackers[i]``: bitmask of arguments attacking argument ``i``."""
        u = self.universe
        out = [0] * len(self.arguments)
        for a, b in self.attacks:
            out[u.position(b)] |= 1 << u.position(a)
        return out

    @cached_property
    def attacked_by(self) -> list[AltSet]:
        """``attacked_by[i]``: bitmask of arguments that argument ``i`` attacks."""
        u = self.universe
        out = [0] * len(self.arguments)
        for a, b in self.attacks:
            out[u.position(a)] |= 1 << u.position(b)
        return out

    def attacks_of(self, s: AltSet) -> AltSet:
        out = 0
        for i in members(s):
            out |= self.attacked_by[i]
        return out

    def to_apx(self) -> str:
        lines = [f"arg({a})." for a in self.arguments]
        lines += [f"att({a},{b})." for a, b in sorted(self.attacks)]
        return "\n".join(lines) + "\n"


def parse_apx(text: str) -> ArgumentationFramework:
    arguments: list[str] = []
    attacks: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        if m := _ARG.match(line):
            if m.group(1) not in arguments:
                arguments.append(m.group(1))
        elif m := _ATT.match(line):
            attacks.append((m.group(1), m.group(2), lineno))
        else:
            raise ApxSyntaxError(f"line {lineno}: cannot parse {raw.strip()!r}", line=lineno)
    declared = set(arguments)
    for a, b, lineno in attacks:
        for name in (a, b):
            if name not in declared:
                raise UndeclaredArgument(
                    f"line {lineno}: argument {name!r} is not declared", name=name, line=lineno
                )
    if not arguments:
        raise ApxSyntaxError("no arguments declared")
    return ArgumentationFramework(tuple(arguments), frozenset((a, b) for a, b, _ in attacks))


def _guard(af: ArgumentationFramework) -> None:
    if len(af.arguments) > MAX_ARGUMENTS:
        raise TooLarge(f"{len(af.arguments)} arguments; enumeration is capped at {MAX_ARGUMENTS}")


def is_conflict_free(af: ArgumentationFramework, s: AltSet) -> bool:
    return af.attacks_of(s) & s == 0


def is_admissible(af: ArgumentationFramework, s: AltSet) -> bool:
    if not is_conflict_free(af, s):
        return False
    hits = af.attacks_of(s)
    return all(is_subset(af.attackers[i], hits) for i in members(s))


def is_stable(af: ArgumentationFramework, s: AltSet) -> bool:
    outside = af.universe.full & ~s
    return is_conflict_free(af, s) and is_subset(outside, af.attacks_of(s))


_TESTS = {"conflict_free": is_conflict_free, "admissible": is_admissible, "stable": is_stable}


def extensions(af: ArgumentationFramework, sem: str) -> list[AltSet]:
    """All ``sem``-extensions of ``af``, in canonical order."""
    _guard(af)
    try:
        test = _TESTS[sem]
    except KeyError:
        raise ValueError(f"unknown semantics {sem!r}; expected one of {SEMANTICS}") from None
    return [s for s in range(1 << len(af.arguments)) if test(af, s)]


@dataclass(frozen=True)
class ChoiceExtensionSemantics:
    """Per-framework choice: realizable family, fallback and ranking, all by argument name.

    ``realizable`` is a semantics name from :data:`SEMANTICS` or an explicit
    tuple of argument-name sets.  ``chain`` lists the realizable sets from
    most to least preferred; when omitted the fallback goes first and the
    rest follow in canonical order.
    """

    realizable: str | tuple[frozenset[str], ...]
    fallback: frozenset[str]
    chain: tuple[frozenset[str], ...] | None = None

    def instantiate(self, af: ArgumentationFramework) -> tuple[RestrictedChoiceStructure, LinearSetOrder, AltSet]:
        _guard(af)
        u = af.universe
        if isinstance(self.realizable, str):
            family = extensions(af, self.realizable)
        else:
            family = sorted({u.set(e) for e in self.realizable})
        k = u.set(self.fallback)
        if k not in family:
            raise FallbackNotRealizable(f"fallback {u.format(k)} is not among the realizable sets")
        st = RestrictedChoiceStructure(u, tuple(range(1 << len(af.arguments))), tuple(family))
        if self.chain is None:
            chain = [k] + [e for e in family if e != k]
        else:
            chain = [u.set(e) for e in self.chain]
            if sorted(chain) != sorted(family) or len(set(chain)) != len(chain):
                raise InvalidOrder("chain must list every realizable set exactly once")
        return st, LinearSetOrder(tuple(chain)), k


def pi_evaluate(sem: ChoiceExtensionSemantics, af: ArgumentationFramework, e: AltSet) -> AltSet:
    _, order, k = sem.instantiate(af)
    return evaluate(order, k, e)


def pi_table(sem: ChoiceExtensionSemantics, af: ArgumentationFramework) -> ChoiceFunctionTable:
    st, order, k = sem.instantiate(af)
    return ChoiceFunctionTable(st, k, {s: evaluate(order, k, s) for s in st.domain})


def lca_certify(sem: ChoiceExtensionSemantics, af: ArgumentationFramework) -> list[AxiomReport]:
    table = pi_table(sem, af)
    return [check_axiom(table, ax) for ax in LCA_AXIOMS]


def names(sets: Iterable[Iterable[str]]) -> tuple[frozenset[str], ...]:
    return tuple(frozenset(s) for s in sets)


def semantics_from_names(
    realizable: str | Sequence[Iterable[str]],
    fallback: Iterable[str],
    chain: Sequence[Iterable[str]] | None = None,
) -> ChoiceExtensionSemantics:
    real = realizable if isinstance(realizable, str) else names(realizable)
    return ChoiceExtensionSemantics(real, frozenset(fallback), None if chain is None else names(chain))
