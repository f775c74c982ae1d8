"""Standard modules, proper standard filtrations and stratification classes.

An ordering is a tuple ``order`` of vertices: position ``t`` (1-based) holds
vertex ``order[t - 1]`` and the last position plays the role of ``e_n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import KupischSeries, is_selfinjective
from .errors import CutoffExceeded, InvalidOrdering
from .homology import INFINITE, ModulePoint, check_point, simple_pds

QUASI_HEREDITARY = "quasi_hereditary"
SS_NOT_QH = "ss_not_qh"
NOT_SS = "not_ss"

CLASS_LABELS = {QUASI_HEREDITARY: "QH", SS_NOT_QH: "SS", NOT_SS: "NONE"}

DEFAULT_CUTOFF = 8


def check_ordering(ks: KupischSeries, order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(int(v) for v in order)
    if sorted(order) != list(range(1, ks.n + 1)):
        raise InvalidOrdering(f"{order} is not a permutation of 1..{ks.n}")
    return order


def parse_ordering(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise InvalidOrdering(f"not a comma-separated permutation: {text!r}") from None


@dataclass(frozen=True)
class StandardLengths:
    delta: tuple[int, ...]
    proper_delta: tuple[int, ...]


def _cut_length(ks: KupischSeries, v: int, stop: set[int]) -> int:
    # length of P_v cut above the first non-top layer whose vertex is in `stop`
    for depth in range(2, ks.c(v) + 1):
        if ks.layer(v, depth) in stop:
            return depth - 1
    return ks.c(v)


def standard_lengths(ks: KupischSeries, order: Sequence[int]) -> StandardLengths:
    order = check_ordering(ks, order)
    delta, proper = [], []
    for t, v in enumerate(order):
        delta.append(_cut_length(ks, v, set(order[t + 1 :])))
        proper.append(_cut_length(ks, v, set(order[t:])))
    return StandardLengths(tuple(delta), tuple(proper))


def _lengths_by_vertex(ks: KupischSeries, order: tuple[int, ...], proper: bool) -> dict[int, int]:
    sl = standard_lengths(ks, order)
    return dict(zip(order, sl.proper_delta if proper else sl.delta))


def _greedy_filters(ks: KupischSeries, lengths: dict[int, int], m: ModulePoint) -> bool:
    top, remaining = m
    while remaining > 0:
        step = lengths[top]
        if step > remaining:
            return False
        remaining -= step
        top = ks.layer(top, step + 1)
    return True


def has_proper_standard_filtration(
    ks: KupischSeries, order: Sequence[int], m: ModulePoint
) -> bool:
    """Greedy test for ``m`` lying in F(proper standards).

    The top subquotient of any filtration of a uniserial module has the
    module's top, hence must be the proper standard of that vertex, whose
    length is fixed; stripping it and recursing is therefore exact.
    """
    order = check_ordering(ks, order)
    m = check_point(ks, m)
    return _greedy_filters(ks, _lengths_by_vertex(ks, order, proper=True), m)


def has_standard_filtration(ks: KupischSeries, order: Sequence[int], m: ModulePoint) -> bool:
    """Greedy test for ``m`` lying in F(standards); exact for the same reason."""
    order = check_ordering(ks, order)
    m = check_point(ks, m)
    return _greedy_filters(ks, _lengths_by_vertex(ks, order, proper=False), m)


def is_ss_with_order(ks: KupischSeries, order: Sequence[int], proper: bool = False) -> bool:
    """Whether every indecomposable projective is filtered by standard modules.

    With ``proper=True`` the proper standard modules are used instead.  Both
    variants admit a stratifying ordering for exactly the same Nakayama
    algebras, but only standard filtrations force ``A e A`` to be projective
    for the last idempotent (``[3, 4]`` with order ``(1, 2)`` is filtered by
    proper standards while ``A e_2 A`` is not projective).
    """
    order = check_ordering(ks, order)
    lengths = _lengths_by_vertex(ks, order, proper)
    return all(
        _greedy_filters(ks, lengths, ModulePoint(i, ks.c(i))) for i in range(1, ks.n + 1)
    )


def ss_search(
    ks: KupischSeries, cutoff: int = DEFAULT_CUTOFF, proper: bool = False
) -> Optional[tuple[int, ...]]:
    """Lexicographically first ordering making ``ks`` standardly stratified."""
    if ks.n > cutoff:
        raise CutoffExceeded(ks.n, cutoff)
    for order in itertools.permutations(range(1, ks.n + 1)):
        if is_ss_with_order(ks, order, proper):
            return order
    return None


def is_quasi_hereditary(ks: KupischSeries) -> bool:
    if not ks.is_cyclic:
        return True
    return 2 in simple_pds(ks)


def pattern_match(ks: KupischSeries) -> Optional[tuple[int, int]]:
    """Parameters ``(k, q)`` when a rotation of ``ks`` reads
    ``[x, x+n-1, x+n-2, ..., x+1]`` with ``x = k + q n`` and either
    ``2 <= k <= n, q >= 1`` or ``k = n + 1, q >= 0``.
    """
    if not ks.is_cyclic:
        return None
    n = ks.n
    x = min(ks.lengths)
    r = ks.lengths.index(x)
    rotated = ks.lengths[r:] + ks.lengths[:r]
    if rotated != (x,) + tuple(x + n - j for j in range(1, n)):
        return None
    k, q = (x - 2) % n + 2, (x - 2) // n
    if q >= 1 or k == n + 1:
        return k, q
    return None


@dataclass(frozen=True)
class StratClass:
    klass: str
    witness: Optional[tuple[int, ...]] = None
    pattern: Optional[tuple[int, int]] = None
    properly_stratified: bool = False

    @property
    def standardly_stratified(self) -> bool:
        return self.klass != NOT_SS

    @property
    def label(self) -> str:
        return CLASS_LABELS[self.klass]

    def as_dict(self) -> dict:
        return {
            "class": self.label,
            "pattern": None if self.pattern is None else {"k": self.pattern[0], "q": self.pattern[1]},
            "witness": None if self.witness is None else list(self.witness),
            "properly_stratified": self.properly_stratified,
        }


def pattern_witness(ks: KupischSeries) -> tuple[int, ...]:
    """Witness ordering for a pattern-matching series.

    With the minimal entry at vertex ``a``, take ``a + 1, a + 2, ..., a + n - 1``
    in cyclic order and put ``a`` last.
    """
    a = ks.lengths.index(min(ks.lengths)) + 1
    return tuple(ks.vertex(a + j) for j in range(1, ks.n)) + (a,)


def _class_and_pattern(ks: KupischSeries) -> tuple[str, Optional[tuple[int, int]]]:
    if not ks.is_cyclic or is_quasi_hereditary(ks):
        return QUASI_HEREDITARY, None
    pattern = pattern_match(ks)
    if is_selfinjective(ks):
        return (SS_NOT_QH, pattern) if ks.n == 1 else (NOT_SS, None)
    return (NOT_SS, None) if pattern is None else (SS_NOT_QH, pattern)


def classify(ks: KupischSeries) -> StratClass:
    """Stratification class by the closed-form criteria (no ordering search).

    Properly stratified means both ``A`` and its opposite are standardly
    stratified; the opposite is classified the same way.
    """
    from .algebra import opposite

    klass, pattern = _class_and_pattern(ks)
    if klass == NOT_SS:
        return StratClass(NOT_SS)
    witness = None
    if klass == SS_NOT_QH:
        witness = (1,) if ks.n == 1 else pattern_witness(ks)
    properly = _class_and_pattern(opposite(ks))[0] != NOT_SS
    return StratClass(klass, witness, pattern, properly)


def pd_profile_is_one_infinite_rest_one(ks: KupischSeries) -> bool:
    pds = simple_pds(ks)
    return pds.count(INFINITE) == 1 and all(p in (1, INFINITE) for p in pds)
