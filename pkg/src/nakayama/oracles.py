"""Slow, independent reference computations used to cross-check the closed forms.

Nothing here calls the closed forms it is meant to check: modules are handled
as explicit lists of composition-factor vertices read off the projectives.
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

from .algebra import KupischSeries
from .homology import ModulePoint


def projective_layers(ks: KupischSeries) -> dict[int, list[int]]:
    """Composition factors of each ``P_i`` from the top, walking the quiver arrow by arrow."""
    out = {}
    for i in range(1, ks.n + 1):
        walk, v = [], i
        for _ in range(ks.lengths[i - 1]):
            walk.append(v)
            v = v % ks.n + 1 if ks.is_cyclic else v + 1
        out[i] = walk
    return out


def all_uniserials(ks: KupischSeries) -> dict[tuple[int, ...], ModulePoint]:
    """Every indecomposable as its layer list (top first), keyed for lookup."""
    table = {}
    for i, walk in projective_layers(ks).items():
        for k in range(1, len(walk) + 1):
            table[tuple(walk[:k])] = ModulePoint(i, k)
    return table


def syzygy_by_layers(ks: KupischSeries, m: ModulePoint) -> Optional[ModulePoint]:
    """Kernel of ``P_top -> m`` read as the layers of ``P_top`` below ``m``."""
    kernel = projective_layers(ks)[m.top][m.length :]
    if not kernel:
        return None
    return all_uniserials(ks)[tuple(kernel)]


def envelope_length_by_search(ks: KupischSeries, i: int) -> int:
    """Longest indecomposable whose socle is ``S_i``."""
    return max(len(layers) for layers in all_uniserials(ks) if layers[-1] == i)


def is_injective_by_extension(ks: KupischSeries, m: ModulePoint) -> bool:
    """``m`` is injective iff it is not the bottom of a longer uniserial."""
    layers = projective_layers(ks)[m.top][: m.length]
    known = all_uniserials(ks)
    return not any(
        key[1:] == tuple(layers) for key in known if len(key) == len(layers) + 1
    )


def cosyzygy_by_layers(ks: KupischSeries, m: ModulePoint) -> Optional[ModulePoint]:
    layers = tuple(projective_layers(ks)[m.top][: m.length])
    known = all_uniserials(ks)
    envelope = max((key for key in known if key[len(key) - len(layers) :] == layers), key=len)
    if len(envelope) == len(layers):
        return None
    return known[envelope[: len(envelope) - len(layers)]]


def standard_layers(
    ks: KupischSeries, order: Sequence[int], proper: bool = False
) -> dict[int, tuple[int, ...]]:
    """Layer list of each (proper) standard module, by vertex, from its definition."""
    walks = projective_layers(ks)
    out = {}
    for t, v in enumerate(order):
        stop = set(order[t:] if proper else order[t + 1 :])
        walk = walks[v]
        cut = next((d for d in range(1, len(walk)) if walk[d] in stop), len(walk))
        out[v] = tuple(walk[:cut])
    return out


def filters_by_search(layers: Sequence[int], allowed: set[tuple[int, ...]]) -> bool:
    """Whether some chain of cuts splits ``layers`` into pieces all in ``allowed``."""
    k = len(layers)
    for r in range(k):
        for cuts in itertools.combinations(range(1, k), r):
            bounds = (0, *cuts, k)
            if all(tuple(layers[a:b]) in allowed for a, b in zip(bounds, bounds[1:])):
                return True
    return False


def filtration_by_search(
    ks: KupischSeries, order: Sequence[int], m: ModulePoint, proper: bool = True
) -> bool:
    """Try every chain of submodules of ``m`` for (proper) standard subquotients."""
    layers = projective_layers(ks)[m.top][: m.length]
    return filters_by_search(layers, set(standard_layers(ks, order, proper).values()))
