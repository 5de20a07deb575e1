"""Finite binary relations over an indexed carrier.

A :class:`Relation` stores index pairs ``(i, j)`` meaning
``carrier[i] <= carrier[j]``.  Carrier elements may be any hashable value;
the choice machinery uses alternative-set bitmasks, tests often use letters.
The carrier order is fixed at construction and doubles as the canonical
tie-break sequence for :func:`suzumura_extension` and :func:`linearize`.

Internally each relation keeps one successor bitmask per carrier index, so
closures and minimum computations are word operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Literal, Sequence

from .errors import Inconsistent, InvalidRelation, NotTotalPreorder
from .sets import members

PropertyName = Literal["reflexive", "total", "antisymmetric", "transitive", "consistent"]
PROPERTIES: tuple[str, ...] = ("reflexive", "total", "antisymmetric", "transitive", "consistent")


@dataclass(frozen=True)
class Relation:
    carrier: tuple[Hashable, ...]
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "carrier", tuple(self.carrier))
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        if len(set(self.carrier)) != len(self.carrier):
            raise InvalidRelation("carrier elements must be pairwise distinct")
        n = len(self.carrier)
        for i, j in self.pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidRelation(f"pair ({i}, {j}) is outside a carrier of size {n}")

    @classmethod
    def from_rows(cls, carrier: Sequence[Hashable], rows: Sequence[int]) -> "Relation":
        pairs = frozenset((i, j) for i, row in enumerate(rows) for j in members(row))
        rel = cls(tuple(carrier), pairs)
        rel.__dict__["rows"] = tuple(rows)
        return rel

    @classmethod
    def from_elements(
        cls, carrier: Sequence[Hashable], pairs: Iterable[tuple[Hashable, Hashable]]
    ) -> "Relation":
        """Build from element pairs rather than index pairs."""
        index = {x: i for i, x in enumerate(carrier)}
        try:
            return cls(tuple(carrier), frozenset((index[x], index[y]) for x, y in pairs))
        except KeyError as exc:
            raise InvalidRelation(f"{exc.args[0]!r} is not in the carrier") from None

    @cached_property
    def rows(self) -> tuple[int, ...]:
        rows = [0] * len(self.carrier)
        for i, j in self.pairs:
            rows[i] |= 1 << j
        return tuple(rows)

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {x: i for i, x in enumerate(self.carrier)}

    def __len__(self) -> int:
        return len(self.pairs)

    def holds(self, x: Hashable, y: Hashable) -> bool:
        """``x <= y`` for carrier elements ``x`` and ``y``."""
        return bool(self.rows[self.index[x]] >> self.index[y] & 1)

    def element_pairs(self) -> set[tuple[Hashable, Hashable]]:
        return {(self.carrier[i], self.carrier[j]) for i, j in self.pairs}

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


def _columns(rows: Sequence[int]) -> list[int]:
    cols = [0] * len(rows)
    for i, row in enumerate(rows):
        for j in members(row):
            cols[j] |= 1 << i
    return cols


def _strict_rows(rows: Sequence[int]) -> list[int]:
    cols = _columns(rows)
    return [row & ~cols[i] for i, row in enumerate(rows)]


def _closure_rows(rows: Sequence[int]) -> list[int]:
    # Warshall on successor bitmasks.
    out = list(rows)
    n = len(out)
    for k in range(n):
        bit = 1 << k
        reach = out[k]
        for i in range(n):
            if out[i] & bit:
                out[i] |= reach
    return out


def strict_part(r: Relation) -> Relation:
    """Pairs of ``r`` whose reverse is not in ``r``."""
    return Relation.from_rows(r.carrier, _strict_rows(r.rows))


def equivalent_part(r: Relation) -> Relation:
    strict = _strict_rows(r.rows)
    return Relation.from_rows(r.carrier, [row & ~s for row, s in zip(r.rows, strict)])


def transitive_closure(r: Relation) -> Relation:
    return Relation.from_rows(r.carrier, _closure_rows(r.rows))


def _is_consistent(rows: Sequence[int]) -> bool:
    # A strict edge x<y is closed into a cycle iff y reaches x in tc(r).
    closure = _closure_rows(rows)
    strict = _strict_rows(rows)
    for x, srow in enumerate(strict):
        for y in members(srow):
            if closure[y] >> x & 1:
                return False
    return True


def has_property(r: Relation, p: PropertyName) -> bool:
    rows = r.rows
    n = len(rows)
    if p == "reflexive":
        return all(rows[i] >> i & 1 for i in range(n))
    if p == "total":
        cols = _columns(rows)
        full = (1 << n) - 1
        return all((rows[i] | cols[i]) == full for i in range(n))
    if p == "antisymmetric":
        cols = _columns(rows)
        return all((rows[i] & cols[i]) & ~(1 << i) == 0 for i in range(n))
    if p == "transitive":
        return list(rows) == _closure_rows(rows)
    if p == "consistent":
        return _is_consistent(rows)
    raise ValueError(f"unknown property {p!r}")


def is_total_preorder(r: Relation) -> bool:
    return has_property(r, "total") and has_property(r, "transitive")


def is_linear_order(r: Relation) -> bool:
    return all(has_property(r, p) for p in ("total", "antisymmetric", "transitive"))


def min_elements(r: Relation, m: Iterable[int] | None = None) -> frozenset[int]:
    """Indices ``x`` in ``m`` such that ``x' <= x`` implies ``x <= x'`` for all ``x'`` in ``m``.

    ``m`` defaults to the whole carrier, giving the global minima.
    """
    rows = r.rows
    mask = (1 << len(rows)) - 1 if m is None else sum(1 << i for i in set(m))
    cols = _columns(rows)
    found = []
    for x in members(mask):
        # predecessors of x inside m that x is not below
        if cols[x] & mask & ~rows[x]:
            continue
        found.append(x)
    return frozenset(found)


def mins(r: Relation, m: Iterable[int] | None = None) -> int | None:
    """The single minimum of ``m`` if there is exactly one, else ``None``."""
    found = min_elements(r, m)
    if len(found) == 1:
        return next(iter(found))
    return None


def suzumura_extension(r: Relation) -> Relation:
    """A total preorder containing ``r`` that keeps every strict pair of ``r`` strict.

    Incomparable pairs of ``tc(r)`` are made equivalent in canonical
    (row-major index) order, re-closing after each merge.
    """
    if not _is_consistent(r.rows):
        raise Inconsistent("relation is not Suzumura-consistent; no total-preorder extension exists")
    n = len(r.carrier)
    rows = _closure_rows([row | (1 << i) for i, row in enumerate(r.rows)])
    for x in range(n):
        for y in range(x + 1, n):
            if rows[x] >> y & 1 or rows[y] >> x & 1:
                continue
            rows[x] |= 1 << y
            rows[y] |= 1 << x
            rows = _closure_rows(rows)
    ext = Relation.from_rows(r.carrier, rows)
    strict_in = _strict_rows(r.rows)
    strict_out = _strict_rows(rows)
    for x in range(n):
        if strict_in[x] & ~strict_out[x] or r.rows[x] & ~rows[x]:
            raise Inconsistent("extension lost a pair of the input")
    return ext


def linearize(tp: Relation) -> Relation:
    """Linear order refining a total preorder; ties go to the lower carrier index."""
    if not is_total_preorder(tp):
        raise NotTotalPreorder("linearize needs a total and transitive relation")
    rows = tp.rows
    n = len(rows)
    out = []
    for x in range(n):
        row = 0
        for y in members(rows[x]):
            if not (rows[y] >> x & 1) or x <= y:
                row |= 1 << y
        out.append(row)
    return Relation.from_rows(tp.carrier, out)


def chain_of(order: Relation) -> list[int]:
    """Carrier indices of a linear order from least to greatest."""
    return sorted(range(len(order.carrier)), key=lambda i: -order.rows[i].bit_count())


def relation_from_chain(chain: Sequence[Hashable]) -> Relation:
    """The linear order listing ``chain`` from least to greatest."""
    n = len(chain)
    full = (1 << n) - 1
    return Relation.from_rows(chain, [full & ~((1 << i) - 1) for i in range(n)])
