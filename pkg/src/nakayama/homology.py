"""Syzygy and cosyzygy dynamics on indecomposable modules.

Every indecomposable module is uniserial, ``M(i, k) = e_i A / e_i J^k`` with
``1 <= k <= c_i``, so (co)syzygies act as a partial map on a finite set of
points.  Dimensions are exact integers, with ``math.inf`` standing for an
infinite dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional, Union

from .algebra import KupischSeries
from .errors import InvalidModulePoint

INFINITE = math.inf
DimValue = Union[int, float]


class ModulePoint(NamedTuple):
    top: int
    length: int

    def __str__(self) -> str:
        return f"M({self.top},{self.length})"


def format_dim(value: DimValue) -> int | str:
    return "infinite" if value == INFINITE else int(value)


def check_point(ks: KupischSeries, m: ModulePoint) -> ModulePoint:
    i, k = m
    if not 1 <= i <= ks.n or not 1 <= k <= ks.lengths[i - 1]:
        raise InvalidModulePoint(f"{m} is not a module for {ks}")
    return ModulePoint(i, k)


def module_points(ks: KupischSeries) -> list[ModulePoint]:
    return [ModulePoint(i, k) for i in range(1, ks.n + 1) for k in range(1, ks.c(i) + 1)]


def simple(i: int) -> ModulePoint:
    return ModulePoint(i, 1)


def socle(ks: KupischSeries, m: ModulePoint) -> int:
    return ks.layer(m.top, m.length)


def syzygy(ks: KupischSeries, m: ModulePoint) -> Optional[ModulePoint]:
    """Kernel of the projective cover ``P_i -> M(i, k)``; ``None`` for projectives."""
    i, k = check_point(ks, m)
    ci = ks.c(i)
    if k == ci:
        return None
    return ModulePoint(ks.layer(i, k + 1), ci - k)


def cosyzygy(ks: KupischSeries, m: ModulePoint) -> Optional[ModulePoint]:
    """Cokernel of the injective envelope ``M(i, k) -> I_s``; ``None`` for injectives."""
    from .psi import inj_env_length

    i, k = check_point(ks, m)
    s = socle(ks, m)
    w = inj_env_length(ks, s)
    if k == w:
        return None
    # the envelope is M(s - w + 1, w); dividing out its bottom k layers
    return ModulePoint(ks.vertex(s - w + 1), w - k)


@dataclass(frozen=True)
class ResolutionTrace:
    steps: tuple[ModulePoint, ...]
    cycle_at: Optional[int] = None

    @property
    def reached_zero(self) -> bool:
        return self.cycle_at is None

    @property
    def length(self) -> DimValue:
        """The projective (or injective) dimension the trace certifies."""
        return len(self.steps) - 1 if self.reached_zero else INFINITE

    def __str__(self) -> str:
        tail = "0" if self.reached_zero else f"cycle@{self.cycle_at}"
        return " -> ".join([*map(str, self.steps), tail])


def resolve(ks: KupischSeries, m: ModulePoint, dual: bool = False) -> ResolutionTrace:
    """Iterate syzygies (cosyzygies if ``dual``) until zero or a repeat."""
    step = cosyzygy if dual else syzygy
    current: Optional[ModulePoint] = check_point(ks, m)
    steps: list[ModulePoint] = []
    seen: dict[ModulePoint, int] = {}
    while current is not None:
        if current in seen:
            return ResolutionTrace(tuple(steps), seen[current])
        seen[current] = len(steps)
        steps.append(current)
        current = step(ks, current)
    return ResolutionTrace(tuple(steps))


def _dimension_table(ks: KupischSeries, dual: bool) -> dict[ModulePoint, DimValue]:
    step = cosyzygy if dual else syzygy
    table: dict[ModulePoint, DimValue] = {}
    for start in module_points(ks):
        path: list[ModulePoint] = []
        on_path: set[ModulePoint] = set()
        current: Optional[ModulePoint] = start
        tail: DimValue
        while True:
            if current is None:
                tail = -1
                break
            if current in table:
                tail = table[current]
                break
            if current in on_path:
                tail = INFINITE
                break
            path.append(current)
            on_path.add(current)
            current = step(ks, current)
        for point in reversed(path):
            tail = tail + 1
            table[point] = tail
    return table


@lru_cache(maxsize=8192)
def pd_table(ks: KupischSeries) -> dict[ModulePoint, DimValue]:
    """Projective dimension of every indecomposable module."""
    return _dimension_table(ks, dual=False)


@lru_cache(maxsize=8192)
def id_table(ks: KupischSeries) -> dict[ModulePoint, DimValue]:
    return _dimension_table(ks, dual=True)


def proj_dim(ks: KupischSeries, m: ModulePoint) -> DimValue:
    return pd_table(ks)[check_point(ks, m)]


def inj_dim(ks: KupischSeries, m: ModulePoint) -> DimValue:
    return id_table(ks)[check_point(ks, m)]


def simple_pds(ks: KupischSeries) -> list[DimValue]:
    table = pd_table(ks)
    return [table[simple(i)] for i in range(1, ks.n + 1)]


def simple_ids(ks: KupischSeries) -> list[DimValue]:
    table = id_table(ks)
    return [table[simple(i)] for i in range(1, ks.n + 1)]


def global_dimension(ks: KupischSeries) -> DimValue:
    return max(simple_pds(ks))


def finitistic_dimension(ks: KupischSeries) -> int:
    return max(d for d in pd_table(ks).values() if d != INFINITE)


@dataclass(frozen=True)
class DimTables:
    pd: tuple[DimValue, ...]
    id: tuple[DimValue, ...]
    gldim: DimValue
    findim: int


def dim_tables(ks: KupischSeries) -> DimTables:
    return DimTables(
        pd=tuple(simple_pds(ks)),
        id=tuple(simple_ids(ks)),
        gldim=global_dimension(ks),
        findim=finitistic_dimension(ks),
    )
