"""Recover a witnessing linear order from a choice table.

The pipeline for a table satisfying SS0-SS4, SS5E and SS6E:

1. ``image``: the chosen sets, in canonical order.
2. ``encode``: revealed preference on the image; ``E1 <| E2`` iff ``E1`` is
   the fallback or some input covering both resolves to ``E1``.
3. ``suzumura_extension``: a total preorder keeping the strict part.
4. ``linearize``: break ties by canonical order.
5. expansion: append the realizable sets never chosen, in canonical order,
   above every chosen set.

Each stage is kept in the returned :class:`SynthesisTrace` so the
intermediate claims (compatibility, equal minima) can be tested directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import first_violation
from .errors import (
    AxiomViolation,
    ChoiceError,
    FallbackNotRealizable,
    InternalIncompatibility,
    NotUnionClosed,
)
from .relations import (
    Relation,
    has_property,
    linearize,
    min_elements,
    suzumura_extension,
)
from .sets import AltSet, is_subset
from .structures import (
    ChoiceFunctionTable,
    LinearSetOrder,
    RestrictedChoiceStructure,
    is_union_closed,
    table_from_order,
)


@dataclass(frozen=True)
class SynthesisTrace:
    image: tuple[AltSet, ...]
    encoded: Relation
    extended: Relation
    linear_carrier: Relation
    final: LinearSetOrder


def image(table: ChoiceFunctionTable) -> list[AltSet]:
    return sorted(set(table.choices.values()))


def encode(table: ChoiceFunctionTable) -> Relation:
    carrier = image(table)
    index = {e: i for i, e in enumerate(carrier)}
    n = len(carrier)
    rows = [0] * n
    k = table.fallback
    if k in index:
        rows[index[k]] = (1 << n) - 1
    for w in table.structure.domain:
        x = table(w)
        if not is_subset(x, w):
            continue
        row = 0
        for j, e in enumerate(carrier):
            if is_subset(e, w):
                row |= 1 << j
        rows[index[x]] |= row
    return Relation.from_rows(carrier, rows)


def encode_union_closed(table: ChoiceFunctionTable) -> Relation:
    """Encoding through pairwise unions; needs a union-closed domain."""
    if not is_union_closed(table.structure):
        raise NotUnionClosed("the union encoding needs every pairwise union in the domain")
    carrier = image(table)
    index = {e: i for i, e in enumerate(carrier)}
    rows = [0] * len(carrier)
    for a in carrier:
        for b in carrier:
            if table(a | b) == a:
                rows[index[a]] |= 1 << index[b]
    return Relation.from_rows(carrier, rows)


def _eval_relation(rel: Relation, s: AltSet, fallback: AltSet) -> tuple[AltSet, bool]:
    """Fallback-evaluation against ``rel``; second item says whether a candidate existed."""
    candidates = [i for i, e in enumerate(rel.carrier) if is_subset(e, s)]
    if not candidates:
        return fallback, False
    found = min_elements(rel, candidates)
    if len(found) == 1:
        return rel.carrier[next(iter(found))], True
    return fallback, True


def verify_compatible(rel: Relation, table: ChoiceFunctionTable) -> bool:
    """Reflexive, antisymmetric, consistent, smooth, and reproduces ``table``."""
    if not all(has_property(rel, p) for p in ("reflexive", "antisymmetric", "consistent")):
        return False
    real = table.structure.realizable_set
    if any(e not in real for e in rel.carrier):
        return False
    for s in table.structure.domain:
        candidates = [i for i, e in enumerate(rel.carrier) if is_subset(e, s)]
        if candidates and not min_elements(rel, candidates):
            return False
        if _eval_relation(rel, s, table.fallback)[0] != table(s):
            return False
    return True


def _expand(linear: Relation, structure: RestrictedChoiceStructure) -> LinearSetOrder:
    chosen = LinearSetOrder.from_relation(linear).chain
    rest = [e for e in structure.realizable if e not in set(chosen)]
    return LinearSetOrder(chosen + tuple(rest))


def synthesize(table: ChoiceFunctionTable) -> SynthesisTrace:
    """Build a fallback-minimal linear order reproducing ``table``.

    Raises :class:`AxiomViolation` when a prerequisite postulate fails and
    :class:`InternalIncompatibility` if any stage stops reproducing the table.
    """
    violation = first_violation(table, "sse")
    if violation is not None:
        raise AxiomViolation(violation)

    encoded = encode(table)
    if not verify_compatible(encoded, table):
        raise InternalIncompatibility("revealed-preference encoding does not reproduce the table")
    try:
        extended = suzumura_extension(encoded)
        linear = linearize(extended)
    except ChoiceError as exc:
        raise InternalIncompatibility(f"order extension failed: {exc.detail}") from exc
    if not verify_compatible(linear, table):
        raise InternalIncompatibility("linearised encoding does not reproduce the table")
    final = _expand(linear, table.structure)
    if final.chain[0] != table.fallback:
        raise InternalIncompatibility("synthesised order does not start with the fallback")
    try:
        rebuilt = table_from_order(final, table.fallback, table.structure)
    except ChoiceError as exc:
        raise InternalIncompatibility(f"expanded order is not a choice function: {exc.detail}") from exc
    if rebuilt != table:
        raise InternalIncompatibility("expanded order does not reproduce the table")
    return SynthesisTrace(tuple(encoded.carrier), encoded, extended, linear, final)


def existence_order(structure: RestrictedChoiceStructure, k: AltSet) -> LinearSetOrder:
    """Canonical order on the realizable sets with ``k`` swapped into first place."""
    if k not in structure.realizable_set:
        raise FallbackNotRealizable(f"{structure.universe.format(k)} is not realizable")
    chain = list(structure.realizable)
    pos = chain.index(k)
    chain[0], chain[pos] = chain[pos], chain[0]
    return LinearSetOrder(tuple(chain))
