"""Alternative sets as machine-word bitmasks over a named universe.

An alternative set is a plain ``int``: bit ``i`` is set iff the universe's
``i``-th alternative is a member.  Every structure, table and order in this
package stores sets this way; the :class:`Universe` translates to and from
names at the I/O boundary.

The canonical order on sets is the numeric order of their bitmasks.  All
sweeps, serialisations and tie-breaks follow it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InvalidStructure, UniverseTooLarge, UnknownAlternative

AltSet = int

MAX_ALTERNATIVES = 63


def is_subset(a: AltSet, b: AltSet) -> bool:
    return a & ~b == 0


def members(s: AltSet) -> Iterator[int]:
    """Yield the bit positions set in ``s``, lowest first."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def subsets_of(s: AltSet) -> Iterator[AltSet]:
    """Yield every subset of ``s`` (including 0 and ``s``) in ascending order."""
    sub = 0
    while True:
        yield sub
        if sub == s:
            return
        sub = (sub - s) & s


def powerset(n: int, *, nonempty: bool = False) -> list[AltSet]:
    """All subsets of an ``n``-element universe, in canonical order."""
    return list(range(1 if nonempty else 0, 1 << n))


@dataclass(frozen=True)
class Universe:
    """The ordered alternative names; position ``i`` is bit ``i``."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.names) > MAX_ALTERNATIVES:
            raise UniverseTooLarge(
                f"{len(self.names)} alternatives; at most {MAX_ALTERNATIVES} supported"
            )
        if len(set(self.names)) != len(self.names):
            raise InvalidStructure("alternative names must be distinct")

    @classmethod
    def of(cls, names: Iterable[str]) -> "Universe":
        return cls(tuple(names))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    @property
    def full(self) -> AltSet:
        return (1 << len(self.names)) - 1

    def position(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownAlternative(f"unknown alternative {name!r}") from None

    def set(self, names: Iterable[str]) -> AltSet:
        """Encode an iterable of names; unknown names raise."""
        bits = 0
        for name in names:
            try:
                bits |= 1 << self._index[name]
            except KeyError:
                raise UnknownAlternative(f"unknown alternative {name!r}") from None
        return bits

    def parse(self, text: str) -> AltSet:
        """Parse a comma-separated literal such as ``"nachos,dips"``."""
        return self.set(part.strip() for part in text.split(",") if part.strip())

    def names_of(self, s: AltSet) -> list[str]:
        """Sorted list of member names (the serialised form of a set)."""
        if s >> len(self.names):
            raise UnknownAlternative(f"bitmask {s:#x} exceeds the universe")
        return sorted(self.names[i] for i in members(s))

    def format(self, s: AltSet) -> str:
        return "{" + ", ".join(self.names_of(s)) + "}"
