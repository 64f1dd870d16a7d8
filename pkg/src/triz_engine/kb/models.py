"""Domain types for the fixed TRIZ knowledge base.

The knowledge base holds three tables: 39 engineering parameters, 40
inventive principles, and the 39x39 contradiction matrix.  Everything is
immutable after load, so a single instance can be shared freely across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..errors import EmptyCell, IndexOutOfRange, InvariantViolation, UnknownPrinciple

N_PARAMETERS = 39
N_PRINCIPLES = 40


@dataclass(frozen=True)
class EngineeringParameter:
    index: int
    title: str
    description: str

    def serialize(self) -> str:
        return f"[INDEX] {self.index} [TITLE] {self.title} [DESCRIPTION] {self.description}"


@dataclass(frozen=True)
class InventivePrinciple:
    index: int
    title: str
    description: str

    def serialize(self) -> str:
        return f"[INDEX] {self.index} [TITLE] {self.title} [DESCRIPTION] {self.description}"


@dataclass(frozen=True, order=True)
class Contradiction:
    """Ordered (improving, worsening) pair of engineering-parameter indexes."""

    improving: int
    worsening: int

    def __post_init__(self):
        for value in (self.improving, self.worsening):
            if not isinstance(value, int) or not 1 <= value <= N_PARAMETERS:
                raise IndexOutOfRange("Index out of range")
        if self.improving == self.worsening:
            raise InvariantViolation(
                f"improving and worsening parameters must differ (both {self.improving})"
            )

    def swapped(self) -> "Contradiction":
        return Contradiction(self.worsening, self.improving)

    def as_tuple(self) -> tuple[int, int]:
        return (self.improving, self.worsening)


@dataclass(frozen=True)
class ContradictionMatrix:
    """Mapping (improving, worsening) -> ordered principle indexes.

    Cell order is significant and preserved as authored.  Absent pairs are
    empty cells.  The matrix is not symmetric: (i, w) and (w, i) are
    unrelated cells.
    """

    cells: Mapping[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    def cell(self, improving: int, worsening: int) -> tuple[int, ...]:
        if not (1 <= improving <= N_PARAMETERS and 1 <= worsening <= N_PARAMETERS):
            raise IndexOutOfRange("Index out of range")
        return self.cells.get((improving, worsening), ())


@dataclass(frozen=True)
class KnowledgeBase:
    parameters: tuple[EngineeringParameter, ...]
    principles: tuple[InventivePrinciple, ...]
    matrix: ContradictionMatrix

    def __post_init__(self):
        object.__setattr__(self, "_parameter_map", {p.index: p for p in self.parameters})
        object.__setattr__(self, "_principle_map", {p.index: p for p in self.principles})

    def parameter(self, index: int) -> EngineeringParameter:
        if index not in self._parameter_map:
            raise IndexOutOfRange("Index out of range")
        return self._parameter_map[index]

    def principle(self, index: int) -> InventivePrinciple:
        if index not in self._principle_map:
            raise UnknownPrinciple("Unknown principle")
        return self._principle_map[index]

    def serialize_parameters(self) -> str:
        return "\n".join(p.serialize() for p in self.parameters)

    def lookup(self, improving: int, worsening: int) -> list[InventivePrinciple]:
        """Resolve a matrix cell to its full principle records, in cell order.

        Deterministic and never silently empty: an empty cell raises
        EmptyCell, indexes outside 1..39 raise IndexOutOfRange, and a cell
        referencing an index missing from the principle table raises
        UnknownPrinciple.
        """
        indexes = self.matrix.cell(improving, worsening)
        if not indexes:
            raise EmptyCell("No principle found for this case")
        return [self.principle(i) for i in indexes]

    def lookup_principles(self, c: Contradiction) -> list[InventivePrinciple]:
        return self.lookup(c.improving, c.worsening)


def lookup_principles(kb: KnowledgeBase, improving: int, worsening: int) -> list[InventivePrinciple]:
    """Module-level matrix lookup over raw parameter indexes."""
    return kb.lookup(improving, worsening)
