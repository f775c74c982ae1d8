"""Kupisch series: validation, normal forms, enumeration and idempotent constructions.

A connected Nakayama algebra is determined by its Kupisch series
``[c_1, ..., c_n]``, where ``c_i`` is the composition length of the
indecomposable projective ``P_i = e_i A``.  Two shapes occur:

* ``cyclic``: no simple projective; the quiver is an oriented cycle and
  ``c_{i+1} >= c_i - 1`` holds with indices taken modulo ``n``.
* ``linear``: a unique simple projective ``P_n``; the quiver is a line.

Vertices are 1-based.  ``P_i`` has composition factors ``S_i, S_{i+1}, ...``
from the top, so ``rad P_i`` is a quotient of ``P_{i+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ConstraintViolation, EmptySeries, NakayamaError, VertexOutOfRange

CYCLIC = "cyclic"
LINEAR = "linear"
KINDS = (CYCLIC, LINEAR)


@dataclass(frozen=True, order=True)
class KupischSeries:
    kind: str
    lengths: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def is_cyclic(self) -> bool:
        return self.kind == CYCLIC

    def vertex(self, i: int) -> int:
        """Reduce an arbitrary integer index into 1..n (cyclic) or check it (linear)."""
        if self.is_cyclic:
            return (i - 1) % self.n + 1
        if not 1 <= i <= self.n:
            raise VertexOutOfRange(i, self.n)
        return i

    def c(self, i: int) -> int:
        return self.lengths[self.vertex(i) - 1]

    def layer(self, i: int, depth: int) -> int:
        """Vertex of the composition factor of P_i at ``depth`` (1 = top)."""
        return self.vertex(i + depth - 1)

    def layers(self, i: int, length: int | None = None) -> list[int]:
        if length is None:
            length = self.c(i)
        return [self.layer(i, d) for d in range(1, length + 1)]

    def check_vertex(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise VertexOutOfRange(v, self.n)
        return v

    @property
    def total_length(self) -> int:
        return sum(self.lengths)

    def __str__(self) -> str:
        return format_series(self)


def validate(kind: str, lengths: Sequence[int]) -> KupischSeries:
    """Return a validated :class:`KupischSeries` or raise.

    Raises :class:`EmptySeries` or :class:`ConstraintViolation` naming the
    first violated inequality.
    """
    if kind not in KINDS:
        raise NakayamaError(f"unknown kind {kind!r}")
    lengths = tuple(int(c) for c in lengths)
    if not lengths:
        raise EmptySeries()
    n = len(lengths)
    if kind == CYCLIC:
        for i, c in enumerate(lengths, 1):
            if c < 2:
                raise ConstraintViolation(i, f"c_{i} = {c} < 2")
        for i in range(1, n):
            if lengths[i] < lengths[i - 1] - 1:
                raise ConstraintViolation(
                    i, f"c_{i + 1} = {lengths[i]} < c_{i} - 1 = {lengths[i - 1] - 1}"
                )
        if lengths[0] < lengths[-1] - 1:
            raise ConstraintViolation(
                n, f"c_1 = {lengths[0]} < c_{n} - 1 = {lengths[-1] - 1}"
            )
    else:
        # n = 1 is the simple algebra K; it only arises as an idempotent quotient.
        for i, c in enumerate(lengths, 1):
            if i < n and c < 2:
                raise ConstraintViolation(i, f"c_{i} = {c} < 2")
            if c > n - i + 1:
                raise ConstraintViolation(i, f"c_{i} = {c} > n - i + 1 = {n - i + 1}")
            if i > 1 and c < lengths[i - 2] - 1:
                raise ConstraintViolation(
                    i - 1, f"c_{i} = {c} < c_{i - 1} - 1 = {lengths[i - 2] - 1}"
                )
        if lengths[-1] != 1:
            raise ConstraintViolation(n, f"c_{n} = {lengths[-1]} but a linear series ends in 1")
    return KupischSeries(kind, lengths)


def cyclic(*lengths: int) -> KupischSeries:
    return validate(CYCLIC, lengths)


def linear(*lengths: int) -> KupischSeries:
    return validate(LINEAR, lengths)


def parse_series(text: str) -> KupischSeries:
    """Parse ``"2,2,3"`` or ``"linear:2,2,1"``."""
    text = text.strip()
    kind = CYCLIC
    for prefix in KINDS:
        if text.startswith(prefix + ":"):
            kind, text = prefix, text[len(prefix) + 1 :]
            break
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise NakayamaError(f"not a comma-separated list of integers: {text!r}") from None
    return validate(kind, values)


def format_series(ks: KupischSeries) -> str:
    body = ",".join(map(str, ks.lengths))
    return body if ks.is_cyclic else f"linear:{body}"


def _rotations(lengths: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for r in range(len(lengths)):
        yield lengths[r:] + lengths[:r]


def canonicalize(ks: KupischSeries) -> KupischSeries:
    """Lexicographically smallest rotation; linear series are returned unchanged."""
    if not ks.is_cyclic:
        return ks
    return KupischSeries(CYCLIC, min(_rotations(ks.lengths)))


def descent_normal_form(ks: KupischSeries) -> KupischSeries:
    """Rotation with ``c_1`` minimal and ``c_n = c_1 + 1`` (lexicographically least such).

    Only defined for non-selfinjective cyclic series.
    """
    if not ks.is_cyclic or is_selfinjective(ks):
        raise NakayamaError("descent normal form needs a non-constant cyclic series")
    low = min(ks.lengths)
    candidates = [r for r in _rotations(ks.lengths) if r[0] == low and r[-1] == low + 1]
    return KupischSeries(CYCLIC, min(candidates))


def is_selfinjective(ks: KupischSeries) -> bool:
    return ks.is_cyclic and len(set(ks.lengths)) == 1


def has_simple_projective(ks: KupischSeries) -> bool:
    return not ks.is_cyclic


def opposite(ks: KupischSeries) -> KupischSeries:
    """Kupisch series of the opposite algebra.

    Left projectives ``A e_i`` are duals of the injectives ``I_i``, so their
    lengths are the envelope lengths ``w(i)``; reversing the arrows reverses
    the vertex order.
    """
    from .psi import inj_env_length

    w = [inj_env_length(ks, i) for i in range(1, ks.n + 1)]
    if ks.is_cyclic:
        return canonicalize(validate(CYCLIC, w[::-1]))
    return validate(LINEAR, w[::-1])


def _enumerate_cyclic(n: int, max_len: int) -> Iterator[KupischSeries]:
    seq: list[int] = []

    def extend() -> Iterator[KupischSeries]:
        if len(seq) == n:
            t = tuple(seq)
            if t[0] >= t[-1] - 1 and all(r >= t for r in _rotations(t)):
                yield KupischSeries(CYCLIC, t)
            return
        # canonical forms start with their minimum
        lo = max(seq[0], seq[-1] - 1)
        for c in range(lo, max_len + 1):
            seq.append(c)
            yield from extend()
            seq.pop()

    for first in range(2, max_len + 1):
        seq.append(first)
        yield from extend()
        seq.pop()


def _enumerate_linear(n: int, max_len: int) -> Iterator[KupischSeries]:
    if n == 1:
        yield KupischSeries(LINEAR, (1,))
        return
    seq: list[int] = []

    def extend() -> Iterator[KupischSeries]:
        i = len(seq) + 1
        if i == n:
            if not seq or seq[-1] - 1 <= 1:
                yield KupischSeries(LINEAR, tuple(seq) + (1,))
            return
        lo = max(2, seq[-1] - 1) if seq else 2
        for c in range(lo, min(max_len, n - i + 1) + 1):
            seq.append(c)
            yield from extend()
            seq.pop()

    yield from extend()


def enumerate_series(n: int, max_len: int, kind: str = CYCLIC) -> Iterator[KupischSeries]:
    """All canonical series with ``n`` vertices and entries ``<= max_len``, in lexicographic order."""
    if n < 1 or max_len < 2:
        return iter(())
    if kind == CYCLIC:
        return _enumerate_cyclic(n, max_len)
    if kind == LINEAR:
        return _enumerate_linear(n, max_len)
    raise NakayamaError(f"unknown kind {kind!r}")


def local_size_at(ks: KupischSeries, v: int) -> int:
    """Composition length of the corner algebra ``e_v A e_v``.

    It counts the occurrences of ``S_v`` in ``P_v``; the corner is semisimple
    exactly when this is 1, i.e. when ``c_v <= n``.
    """
    ks.check_vertex(v)
    if not ks.is_cyclic:
        return 1
    return (ks.c(v) - 1) // ks.n + 1


def quotient_vertex(ks: KupischSeries, v: int, j: int) -> int:
    """Original vertex of vertex ``j`` of ``A / A e_v A``."""
    return ks.vertex(v + j)


def quotient_by_vertex(ks: KupischSeries, v: int) -> KupischSeries:
    """Linear Kupisch series of ``A / A e_v A`` for a cyclic series.

    Vertex ``j`` of the quotient is the original vertex ``v + j``; its
    projective is ``P_{v+j}`` cut just above the first occurrence of ``S_v``.
    """
    if not ks.is_cyclic:
        raise NakayamaError("quotient_by_vertex expects a cyclic series")
    ks.check_vertex(v)
    n = ks.n
    if n == 1:
        raise NakayamaError("A / AeA is the zero algebra when n = 1")
    return validate(LINEAR, [min(ks.c(v + j), n - j) for j in range(1, n)])


def trace_is_projective(ks: KupischSeries, v: int) -> bool:
    """Whether the trace ideal ``A e_v A`` is projective as a right module.

    Inside each ``P_i`` the trace of ``P_v`` is the submodule starting at the
    topmost occurrence of ``S_v``; it is projective iff it is all of ``P_v``.
    """
    ks.check_vertex(v)
    cv = ks.c(v)
    for i in range(1, ks.n + 1):
        for depth in range(1, ks.c(i) + 1):
            if ks.layer(i, depth) == v:
                if ks.c(i) - depth + 1 != cv:
                    return False
                break
    return True
