"""Injective envelopes of simples, the map psi, and global-dimension bounds.

For a cyclic series, ``psi(i) = i - w(i) (mod n)`` where ``w(i)`` is the
length of the injective envelope of ``S_i``.  A vertex is psi-regular when
it lies on a cycle of this functional graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import KupischSeries
from .errors import NakayamaError, PreconditionInfiniteGldim
from .homology import INFINITE, global_dimension, simple_ids, simple_pds


def inj_env_length(ks: KupischSeries, i: int) -> int:
    """Length of ``I_i``: the largest ``k`` with ``c_{i-k+1} >= k``.

    The set of admissible ``k`` is downward closed (radicals of uniserials
    are uniserial), so the scan stops at the first failure.
    """
    ks.check_vertex(i)
    k = 1
    while True:
        top = i - k
        if not ks.is_cyclic and top < 1:
            return k
        if ks.c(top) < k + 1:
            return k
        k += 1


def envelope_lengths(ks: KupischSeries) -> list[int]:
    return [inj_env_length(ks, i) for i in range(1, ks.n + 1)]


def _cyclic_only(ks: KupischSeries, what: str) -> None:
    if not ks.is_cyclic:
        raise NakayamaError(f"{what} is only defined for cyclic series")


def psi_map(ks: KupischSeries) -> dict[int, int]:
    _cyclic_only(ks, "psi")
    return {i: ks.vertex(i - inj_env_length(ks, i)) for i in range(1, ks.n + 1)}


def functional_cycles(f: dict[int, int]) -> list[tuple[int, ...]]:
    """Cycles of a self-map of a finite set, each rotated to start at its minimum."""
    cycles = []
    seen: set[int] = set()
    for start in sorted(f):
        x = start
        for _ in range(len(f)):
            x = f[x]
        # x now lies on a cycle
        if x in seen:
            continue
        cycle = [x]
        y = f[x]
        while y != x:
            cycle.append(y)
            y = f[y]
        seen.update(cycle)
        r = cycle.index(min(cycle))
        cycles.append(tuple(cycle[r:] + cycle[:r]))
    return sorted(cycles)


def even_pd_vertices(ks: KupischSeries) -> list[int]:
    return [i for i, p in enumerate(simple_pds(ks), 1) if p != INFINITE and p % 2 == 0]


def min_half_even_pd(ks: KupischSeries) -> Optional[int]:
    """``m``: half the least even projective dimension of a simple; 0 for linear series."""
    if not ks.is_cyclic:
        return 0
    evens = [p for p in simple_pds(ks) if p != INFINITE and p % 2 == 0]
    return min(evens) // 2 if evens else None


@dataclass(frozen=True)
class PsiProfile:
    w: tuple[int, ...]
    psi: tuple[int, ...]  # psi[i - 1] is the image of vertex i
    regular: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]
    d: int
    m: Optional[int]

    def as_dict(self) -> dict:
        return {
            "w": list(self.w),
            "psi": list(self.psi),
            "regular": list(self.regular),
            "cycles": [list(c) for c in self.cycles],
            "d": self.d,
            "m": self.m,
        }


def psi_profile(ks: KupischSeries) -> PsiProfile:
    f = psi_map(ks)
    cycles = functional_cycles(f)
    regular = tuple(sorted(v for c in cycles for v in c))
    return PsiProfile(
        w=tuple(envelope_lengths(ks)),
        psi=tuple(f[i] for i in range(1, ks.n + 1)),
        regular=regular,
        cycles=tuple(cycles),
        d=ks.n - len(regular),
        m=min_half_even_pd(ks),
    )


@dataclass(frozen=True)
class FiniteGldimCriterion:
    has_even_pd_simple: bool
    regular_equals_even_set: bool
    psi_single_cycle_on_regular: bool
    gldim_finite: bool

    @property
    def condition_b(self) -> bool:
        return self.regular_equals_even_set and self.psi_single_cycle_on_regular

    @property
    def consistent(self) -> bool:
        return self.gldim_finite == self.has_even_pd_simple == self.condition_b


def finite_gldim_criterion(ks: KupischSeries) -> FiniteGldimCriterion:
    """Evaluate the three equivalent finiteness conditions independently.

    ``psi_single_cycle_on_regular`` asks that psi permute the (non-empty)
    set of simples of even projective dimension as a single cycle.
    """
    _cyclic_only(ks, "finite_gldim_criterion")
    evens = set(even_pd_vertices(ks))
    prof = psi_profile(ks)
    f = psi_map(ks)
    single = False
    if evens and all(f[v] in evens for v in evens):
        orbit = {min(evens)}
        x = f[min(evens)]
        while x not in orbit:
            orbit.add(x)
            x = f[x]
        single = orbit == evens
    return FiniteGldimCriterion(
        has_even_pd_simple=bool(evens),
        regular_equals_even_set=set(prof.regular) == evens,
        psi_single_cycle_on_regular=single,
        gldim_finite=global_dimension(ks) != INFINITE,
    )


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def attained(self) -> bool:
        return self.lhs == self.rhs


BOUND_NAMES = (
    "gldim_le_n_plus_m_minus_1",
    "gldim_le_2n_minus_2",
    "gldim_le_2d",
    "twice_gldim_le_2m_plus_2n_minus_1",
    "gldim_le_max_regular_pd_plus_1",
    "max_regular_pd_le_2m_plus_2_n_minus_d_minus_1",
)


def bound_report(ks: KupischSeries) -> dict[str, BoundCheck]:
    """All global-dimension inequalities for a cyclic series of finite global dimension."""
    _cyclic_only(ks, "bound_report")
    g = global_dimension(ks)
    if g == INFINITE:
        raise PreconditionInfiniteGldim(ks)
    prof = psi_profile(ks)
    n, d, m = ks.n, prof.d, prof.m
    pds = simple_pds(ks)
    top_regular = max(pds[v - 1] for v in prof.regular)
    checks = [
        BoundCheck(BOUND_NAMES[0], g, n + m - 1),
        BoundCheck(BOUND_NAMES[1], g, 2 * n - 2),
        BoundCheck(BOUND_NAMES[2], g, 2 * d),
        BoundCheck(BOUND_NAMES[3], 2 * g, 2 * m + 2 * n - 1),
        BoundCheck(BOUND_NAMES[4], g, top_regular + 1),
        BoundCheck(BOUND_NAMES[5], top_regular, 2 * m + 2 * (n - d - 1)),
    ]
    return {c.name: c for c in checks}


def simple_id_le_2d(ks: KupischSeries) -> list[tuple[int, int, int]]:
    """Violations ``(i, id S_i, 2d)`` of ``id S_i <= 2d``; empty when the bound holds."""
    d = psi_profile(ks).d
    return [(i, x, 2 * d) for i, x in enumerate(simple_ids(ks), 1) if x > 2 * d]
