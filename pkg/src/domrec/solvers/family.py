"""Result containers shared by the exact solvers."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Union

from ..graph import Graph, members, popcount


class Special(enum.Enum):
    INFINITE = "infinity"
    UNDEFINED = "undefined"

    def __str__(self):
        return self.value


INFINITE = Special.INFINITE
UNDEFINED = Special.UNDEFINED

ParamValue = Union[int, Special]


def is_finite(value: ParamValue) -> bool:
    return not isinstance(value, Special)


def format_value(value: ParamValue) -> str:
    return str(value)


@dataclass(frozen=True)
class SetFamily:
    """Duplicate-free family of vertex sets of ``graph``, sorted by bitmask."""

    graph: Graph
    sets: tuple[int, ...]

    def __post_init__(self):
        canon = tuple(sorted(set(self.sets)))
        object.__setattr__(self, "sets", canon)

    @property
    def cardinality(self) -> int | None:
        sizes = {popcount(s) for s in self.sets}
        return sizes.pop() if len(sizes) == 1 else None

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sets)

    def __contains__(self, S) -> bool:
        return self.graph.set_mask(S) in self.sets

    def as_lists(self) -> list[list[int]]:
        return [members(s) for s in self.sets]

    def as_labels(self) -> list[list[str]]:
        return [[self.graph.label(v) for v in members(s)] for s in self.sets]
