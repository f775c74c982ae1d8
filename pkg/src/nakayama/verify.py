"""Exhaustive property sweeps over enumerated Kupisch series, and their reports.

Each registered property maps a series to ``(passed, details)``.  A sweep
evaluates every selected property on every enumerated series; failures are
collected, never raised, and the results are sorted so that output does not
depend on evaluation order or parallelism.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, Union

from . import oracles
from .algebra import (
    CYCLIC,
    LINEAR,
    KupischSeries,
    canonicalize,
    enumerate_series,
    format_series,
    is_selfinjective,
    local_size_at,
    opposite,
    quotient_by_vertex,
    quotient_vertex,
    trace_is_projective,
    validate,
)
from .errors import CutoffExceeded, NakayamaError, UnsupportedFormat
from .homology import (
    INFINITE,
    ModulePoint,
    cosyzygy,
    dim_tables,
    finitistic_dimension,
    format_dim,
    global_dimension,
    module_points,
    pd_table,
    resolve,
    simple_ids,
    simple_pds,
    socle,
    syzygy,
)
from .psi import (
    BOUND_NAMES,
    bound_report,
    envelope_lengths,
    finite_gldim_criterion,
    inj_env_length,
    psi_profile,
    simple_id_le_2d,
)
from .stratify import (
    DEFAULT_CUTOFF,
    QUASI_HEREDITARY,
    SS_NOT_QH,
    classify,
    has_proper_standard_filtration,
    has_standard_filtration,
    is_ss_with_order,
    pattern_match,
    pd_profile_is_one_infinite_rest_one,
    ss_search,
    standard_lengths,
)

SCHEMA_VERSION = 1
SUITES = (
    "algebra",
    "homology",
    "equivalence",
    "bounds",
    "stratification",
    "selfinjective",
    "quotient",
    "oracles",
)
FILTRATION_ORACLE_MAX_LENGTH = 6

Outcome = tuple[bool, str]


@dataclass(frozen=True)
class Property:
    id: str
    suite: str
    kinds: tuple[str, ...]
    check: Callable[[KupischSeries], Outcome]
    needs_search: bool = False


REGISTRY: dict[str, Property] = {}


def register(id, suite, kinds=(CYCLIC, LINEAR), needs_search=False):
    def wrap(fn):
        REGISTRY[id] = Property(id, suite, tuple(kinds), fn, needs_search)
        return fn

    return wrap


def _ok(failures: Sequence[str], note: str = "") -> Outcome:
    if failures:
        return False, "; ".join(failures)
    return True, note


def _dims(values) -> list:
    return [format_dim(v) for v in values]


# -- algebra ---------------------------------------------------------------


@register("canonical_form_unique", "algebra")
def _canonical_form_unique(ks):
    bad = []
    if canonicalize(ks) != ks:
        bad.append(f"not canonical: expected {canonicalize(ks)}")
    if ks.is_cyclic:
        for r in range(ks.n):
            rot = KupischSeries(CYCLIC, ks.lengths[r:] + ks.lengths[:r])
            if canonicalize(rot) != ks:
                bad.append(f"rotation {rot} canonicalizes to {canonicalize(rot)}")
    return _ok(bad)


@register("opposite_valid", "algebra")
def _opposite_valid(ks):
    op = opposite(ks)
    try:
        validate(op.kind, op.lengths)
    except NakayamaError as exc:
        return False, f"opposite {op}: {exc}"
    return True, f"opposite {op}"


@register("opposite_involution", "algebra")
def _opposite_involution(ks):
    back = canonicalize(opposite(opposite(ks)))
    return back == canonicalize(ks), f"op(op) = {back}"


@register("opposite_multiset", "algebra")
def _opposite_multiset(ks):
    op = opposite(ks)
    same = sorted(op.lengths) == sorted(ks.lengths)
    return same, "" if same else f"opposite {op} is not a permutation of {ks}"


@register("quotient_validates_linear", "quotient", kinds=(CYCLIC,))
def _quotient_validates_linear(ks):
    if ks.n == 1:
        return True, "vacuous: n = 1"
    bad = []
    for v in range(1, ks.n + 1):
        q = quotient_by_vertex(ks, v)
        try:
            validate(LINEAR, q.lengths)
        except NakayamaError as exc:
            bad.append(f"v={v}: {exc}")
    return _ok(bad)


@register("local_size_semisimple_iff", "algebra", kinds=(CYCLIC,))
def _local_size(ks):
    bad = [
        f"v={v}: local size {local_size_at(ks, v)}, c_v={ks.c(v)}, n={ks.n}"
        for v in range(1, ks.n + 1)
        if (local_size_at(ks, v) == 1) != (ks.c(v) <= ks.n)
    ]
    return _ok(bad)


# -- homology --------------------------------------------------------------


@register("resolution_within_state_bound", "homology")
def _resolution_bound(ks):
    bound = ks.total_length
    bad = []
    for m in module_points(ks):
        for dual in (False, True):
            trace = resolve(ks, m, dual)
            if len(trace.steps) > bound:
                bad.append(f"{m} dual={dual}: {len(trace.steps)} steps > {bound}")
    return _ok(bad)


@register("max_pd_equals_max_id", "homology")
def _max_pd_id(ks):
    a, b = max(simple_pds(ks)), max(simple_ids(ks))
    return a == b, f"max pd {format_dim(a)}, max id {format_dim(b)}"


@register("pd_le_max_factor_pd", "homology")
def _pd_factor(ks):
    pds = simple_pds(ks)
    table = pd_table(ks)
    bad = []
    for m in module_points(ks):
        factors = [pds[v - 1] for v in ks.layers(m.top, m.length)]
        if INFINITE not in factors and table[m] > max(factors):
            bad.append(f"pd {m} = {format_dim(table[m])} > {max(factors)}")
    return _ok(bad)


@register("gldim_has_g_and_g_minus_1", "homology")
def _g_and_g_minus_1(ks):
    pds = simple_pds(ks)
    g = max(pds)
    if g == INFINITE or g == 0:
        return True, "vacuous"
    ok = g in pds and g - 1 in pds
    return ok, f"gldim {g}, simple pds {_dims(pds)}"


@register("linear_gldim_le_n_minus_1", "homology", kinds=(LINEAR,))
def _linear_gldim(ks):
    g = global_dimension(ks)
    return g <= max(ks.n - 1, 0), f"gldim {format_dim(g)}, n = {ks.n}"


@register("findim_equals_finite_gldim", "homology")
def _findim_gldim(ks):
    g = global_dimension(ks)
    if g == INFINITE:
        return True, "vacuous: gldim infinite"
    f = finitistic_dimension(ks)
    return f == g, f"findim {f}, gldim {g}"


@register("selfinjective_findim_zero", "selfinjective", kinds=(CYCLIC,))
def _selfinjective_findim(ks):
    if not is_selfinjective(ks):
        return True, "vacuous: not selfinjective"
    table = pd_table(ks)
    bad = [f"pd {m} = {table[m]}" for m in module_points(ks) if m.length < ks.c(m.top) and table[m] != INFINITE]
    if finitistic_dimension(ks) != 0:
        bad.append(f"findim {finitistic_dimension(ks)}")
    return _ok(bad)


# -- psi / equivalence -----------------------------------------------------


@register("finite_gldim_three_way", "equivalence", kinds=(CYCLIC,))
def _three_way(ks):
    crit = finite_gldim_criterion(ks)
    return crit.consistent, (
        f"finite={crit.gldim_finite} even={crit.has_even_pd_simple} "
        f"regular=even:{crit.regular_equals_even_set} single_cycle:{crit.psi_single_cycle_on_regular}"
    )


@register("psi_profile_consistent", "equivalence", kinds=(CYCLIC,))
def _psi_profile(ks):
    prof = psi_profile(ks)
    bad = []
    for i in range(1, ks.n + 1):
        if prof.psi[i - 1] != ks.vertex(i - prof.w[i - 1]):
            bad.append(f"psi({i})")
        # regular vertices are exactly those returning to themselves
        x = prof.psi[i - 1]
        back = False
        for _ in range(ks.n):
            if x == i:
                back = True
                break
            x = prof.psi[x - 1]
        if back != (i in prof.regular):
            bad.append(f"regularity of {i}")
    if prof.d != ks.n - len(prof.regular):
        bad.append("d")
    has_even = any(p != INFINITE and p % 2 == 0 for p in simple_pds(ks))
    if (prof.m is None) == has_even:
        bad.append(f"m = {prof.m}")
    return _ok(bad)


# -- bounds ----------------------------------------------------------------


def _bound_property(name):
    def check(ks):
        if global_dimension(ks) == INFINITE:
            return True, "vacuous: gldim infinite"
        b = bound_report(ks)[name]
        return b.holds, f"{b.lhs} <= {b.rhs}"

    return check


for _name in BOUND_NAMES:
    register(_name, "bounds", kinds=(CYCLIC,))(_bound_property(_name))


@register("id_simple_le_2d", "bounds", kinds=(CYCLIC,))
def _id_2d(ks):
    if global_dimension(ks) == INFINITE:
        return True, "vacuous: gldim infinite"
    return _ok([f"id S_{i} = {x} > {b}" for i, x, b in simple_id_le_2d(ks)])


# -- stratification --------------------------------------------------------


@register("ss_fast_equals_bruteforce", "stratification", kinds=(CYCLIC,), needs_search=True)
def _fast_vs_brute(ks):
    fast = classify(ks).standardly_stratified
    witness = ss_search(ks)
    ok = fast == (witness is not None)
    return ok, f"classify {classify(ks).label}, search witness {witness}"


@register("proper_standard_ss_agrees", "stratification", kinds=(CYCLIC,), needs_search=True)
def _proper_agrees(ks):
    a, b = ss_search(ks), ss_search(ks, proper=True)
    return (a is None) == (b is None), f"standard witness {a}, proper standard witness {b}"


@register("classify_witness_valid", "stratification", kinds=(CYCLIC,))
def _witness_valid(ks):
    w = classify(ks).witness
    if w is None:
        return True, "no witness"
    return is_ss_with_order(ks, w), f"witness {w}"


@register("qh_iff_ss_and_finite_gldim", "stratification", kinds=(CYCLIC,), needs_search=True)
def _qh_iff(ks):
    qh = classify(ks).klass == QUASI_HEREDITARY
    other = ss_search(ks) is not None and global_dimension(ks) != INFINITE
    return qh == other, f"classify {classify(ks).label}, gldim {format_dim(global_dimension(ks))}"


@register("ss_not_qh_pd_profile", "stratification", kinds=(CYCLIC,))
def _ssnqh_profile(ks):
    if classify(ks).klass != SS_NOT_QH or ks.n == 1:
        return True, "vacuous"
    return pd_profile_is_one_infinite_rest_one(ks), f"pds {_dims(simple_pds(ks))}"


@register("ss_not_qh_iff_pattern", "stratification", kinds=(CYCLIC,))
def _ssnqh_pattern(ks):
    c = classify(ks)
    bad = []
    if (c.klass == SS_NOT_QH) != (pattern_match(ks) is not None):
        bad.append(f"class {c.label} but pattern {pattern_match(ks)}")
    if not is_selfinjective(ks) and (pattern_match(ks) is not None) != pd_profile_is_one_infinite_rest_one(ks):
        bad.append(f"pattern {pattern_match(ks)} vs pds {_dims(simple_pds(ks))}")
    if c.pattern is not None:
        k, q = c.pattern
        if not ((2 <= k <= ks.n and q >= 1) or (k == ks.n + 1 and q >= 0)):
            bad.append(f"pattern {c.pattern} out of range")
    return _ok(bad)


@register("findim_le_n", "stratification")
def _findim_n(ks):
    if not classify(ks).standardly_stratified:
        return True, "vacuous: not standardly stratified"
    f = finitistic_dimension(ks)
    return f <= ks.n, f"findim {f}, n {ks.n}"


@register("findim_le_2", "stratification", kinds=(CYCLIC,))
def _findim_2(ks):
    if classify(ks).klass != SS_NOT_QH:
        return True, "vacuous: not SS-not-QH"
    f = finitistic_dimension(ks)
    return f <= 2, f"findim {f}"


@register("opposite_ss", "stratification")
def _opposite_ss(ks):
    c = classify(ks)
    if not c.standardly_stratified:
        return True, "vacuous: not standardly stratified"
    op = classify(opposite(ks))
    return op.standardly_stratified and c.properly_stratified, f"opposite {opposite(ks)} is {op.label}"


@register("properly_stratified_iff_ss", "stratification", kinds=(CYCLIC,), needs_search=True)
def _properly(ks):
    c = classify(ks)
    both = ss_search(ks) is not None and ss_search(opposite(ks)) is not None
    return c.properly_stratified == both == c.standardly_stratified, f"classify {c.label}, properly {c.properly_stratified}"


@register("witness_trace_projective", "stratification", kinds=(CYCLIC,), needs_search=True)
def _witness_trace(ks):
    bad = []
    for order in itertools.permutations(range(1, ks.n + 1)):
        if is_ss_with_order(ks, order) and not trace_is_projective(ks, order[-1]):
            bad.append(f"witness {order}")
    return _ok(bad)


@register("standard_lengths_consistent", "stratification", kinds=(CYCLIC,), needs_search=True)
def _standard_lengths(ks):
    bad = []
    for order in itertools.permutations(range(1, ks.n + 1)):
        sl = standard_lengths(ks, order)
        for t, v in enumerate(order):
            if not 1 <= sl.proper_delta[t] <= sl.delta[t] <= ks.c(v):
                bad.append(f"{order} position {t + 1}")
        if sl.delta[-1] != ks.c(order[-1]):
            bad.append(f"{order}: last standard is not projective")
    return _ok(bad)


@register("ss_iff_local", "selfinjective", kinds=(CYCLIC,), needs_search=True)
def _ss_iff_local(ks):
    if not is_selfinjective(ks):
        return True, "vacuous: not selfinjective"
    ss = ss_search(ks) is not None
    c = classify(ks)
    ok = ss == (ks.n == 1) == c.standardly_stratified and c.klass != QUASI_HEREDITARY
    return ok, f"n = {ks.n}, search SS {ss}, classify {c.label}"


# -- idempotent quotients ----------------------------------------------------


def _quotient_point(ks, v, m):
    return ModulePoint(quotient_vertex(ks, v, m.top), m.length)


@register("quotient_finite_gldim", "quotient", kinds=(CYCLIC,))
def _quotient_finite(ks):
    if ks.n == 1:
        return True, "vacuous: n = 1"
    bad = [f"v={v}" for v in range(1, ks.n + 1) if global_dimension(quotient_by_vertex(ks, v)) == INFINITE]
    return _ok(bad)


@register("quotient_hereditary_if_corner_nonsemisimple", "quotient", kinds=(CYCLIC,))
def _quotient_hereditary(ks):
    if ks.n == 1:
        return True, "vacuous: n = 1"
    bad = []
    for v in range(1, ks.n + 1):
        if local_size_at(ks, v) > 1:
            g = global_dimension(quotient_by_vertex(ks, v))
            if g > 1:
                bad.append(f"v={v}: quotient gldim {g}")
    return _ok(bad)


def _projective_trace_vertices(ks):
    return [v for v in range(1, ks.n + 1) if trace_is_projective(ks, v)]


@register("pd_over_quotient_plus_one", "quotient", kinds=(CYCLIC,))
def _prop4(ks):
    if ks.n == 1:
        return True, "vacuous: n = 1"
    bad = []
    for v in _projective_trace_vertices(ks):
        q = quotient_by_vertex(ks, v)
        q_pd = pd_table(q)
        a_pd = pd_table(ks)
        for x in module_points(q):
            lhs = a_pd[_quotient_point(ks, v, x)]
            if lhs > q_pd[x] + 1:
                bad.append(f"v={v} X={x}: pd_A {format_dim(lhs)} > {q_pd[x]} + 1")
    return _ok(bad)


@register("gldim_over_quotient_plus_two", "quotient", kinds=(CYCLIC,))
def _prop5(ks):
    if ks.n == 1:
        return True, "vacuous: n = 1"
    bad = []
    g = global_dimension(ks)
    for v in _projective_trace_vertices(ks):
        if local_size_at(ks, v) == 1:
            gq = global_dimension(quotient_by_vertex(ks, v))
            if g > gq + 2:
                bad.append(f"v={v}: gldim {format_dim(g)} > {gq} + 2")
    return _ok(bad)


@register("findim_over_quotient_plus_two", "quotient", kinds=(CYCLIC,))
def _prop6(ks):
    if ks.n == 1:
        return True, "vacuous: n = 1"
    bad = []
    f = finitistic_dimension(ks)
    for v in _projective_trace_vertices(ks):
        fq = finitistic_dimension(quotient_by_vertex(ks, v))
        if f > fq + 2:
            bad.append(f"v={v}: findim {f} > {fq} + 2")
    return _ok(bad)


# -- oracles ---------------------------------------------------------------


@register("syzygy_closed_form_oracle", "oracles")
def _syzygy_oracle(ks):
    bad = [
        f"{m}: {syzygy(ks, m)} vs {oracles.syzygy_by_layers(ks, m)}"
        for m in module_points(ks)
        if syzygy(ks, m) != oracles.syzygy_by_layers(ks, m)
    ]
    return _ok(bad)


@register("cosyzygy_closed_form_oracle", "oracles")
def _cosyzygy_oracle(ks):
    bad = [
        f"{m}: {cosyzygy(ks, m)} vs {oracles.cosyzygy_by_layers(ks, m)}"
        for m in module_points(ks)
        if cosyzygy(ks, m) != oracles.cosyzygy_by_layers(ks, m)
    ]
    return _ok(bad)


@register("envelope_length_oracle", "oracles")
def _envelope_oracle(ks):
    bad = [
        f"w({i}) = {inj_env_length(ks, i)} vs {oracles.envelope_length_by_search(ks, i)}"
        for i in range(1, ks.n + 1)
        if inj_env_length(ks, i) != oracles.envelope_length_by_search(ks, i)
    ]
    return _ok(bad)


@register("injective_iff_envelope_length", "oracles")
def _injective_oracle(ks):
    bad = []
    for m in module_points(ks):
        by_cosyzygy = cosyzygy(ks, m) is None
        by_w = m.length == inj_env_length(ks, socle(ks, m))
        by_extension = oracles.is_injective_by_extension(ks, m)
        if not by_cosyzygy == by_w == by_extension:
            bad.append(f"{m}: cosyzygy {by_cosyzygy}, w {by_w}, extension {by_extension}")
    return _ok(bad)


@register("greedy_filtration_oracle", "oracles", kinds=(CYCLIC,), needs_search=True)
def _filtration_oracle(ks):
    points = [m for m in module_points(ks) if m.length <= FILTRATION_ORACLE_MAX_LENGTH]
    walks = oracles.projective_layers(ks)
    bad = []
    for order in itertools.permutations(range(1, ks.n + 1)):
        for proper, greedy in ((True, has_proper_standard_filtration), (False, has_standard_filtration)):
            allowed = set(oracles.standard_layers(ks, order, proper).values())
            for m in points:
                expected = oracles.filters_by_search(walks[m.top][: m.length], allowed)
                if greedy(ks, order, m) != expected:
                    bad.append(f"{order} {m} proper={proper}")
    return _ok(bad)


# -- sweeps ------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteSpec:
    n_range: tuple[int, int]
    max_len: Union[int, str] = "3n"
    kinds: tuple[str, ...] = (CYCLIC,)
    suites: tuple[str, ...] = SUITES
    parallelism: int = 1
    sample: Optional[float] = None
    seed: int = 0
    cutoff: int = DEFAULT_CUTOFF

    def __post_init__(self):
        lo, hi = self.n_range
        if lo < 1 or hi < lo:
            raise NakayamaError(f"bad n range {self.n_range}")
        if not self.kinds or any(k not in (CYCLIC, LINEAR) for k in self.kinds):
            raise NakayamaError(f"bad kinds {self.kinds}")
        unknown = set(self.suites) - set(SUITES)
        if not self.suites or unknown:
            raise NakayamaError(f"unknown suites {sorted(unknown)}")
        if self.sample is not None and not 0 < self.sample <= 1:
            raise NakayamaError("sample must lie in (0, 1]")
        if self.parallelism < 1:
            raise NakayamaError("parallelism must be positive")
        self.max_len_for(lo)

    def max_len_for(self, n: int) -> int:
        return resolve_max_len(self.max_len, n)


def resolve_max_len(max_len: Union[int, str], n: int) -> int:
    """``max_len`` is an integer or an expression ``<a>n`` such as ``"3n"``."""
    if isinstance(max_len, int):
        return max_len
    text = str(max_len).strip()
    try:
        if text.endswith("n"):
            return int(text[:-1] or 1) * n
        return int(text)
    except ValueError:
        raise NakayamaError(f"bad max length {max_len!r}") from None


@dataclass(frozen=True, order=True)
class PropertyResult:
    series: KupischSeries
    property: str
    passed: bool = field(compare=False)
    details: str = field(compare=False, default="")


def sweep_series(spec: SuiteSpec) -> list[KupischSeries]:
    out = []
    for n in range(spec.n_range[0], spec.n_range[1] + 1):
        for kind in spec.kinds:
            out.extend(enumerate_series(n, spec.max_len_for(n), kind))
    if spec.sample is not None and spec.sample < 1:
        rng = random.Random(spec.seed)
        out = [ks for ks in out if rng.random() < spec.sample]
    return out


def selected_properties(spec: SuiteSpec, registry: Optional[dict] = None) -> list[Property]:
    registry = REGISTRY if registry is None else registry
    return [p for p in registry.values() if p.suite in spec.suites]


def evaluate(ks: KupischSeries, props: Iterable[Property]) -> list[PropertyResult]:
    out = []
    for p in props:
        if ks.kind not in p.kinds:
            continue
        try:
            passed, details = p.check(ks)
        except Exception as exc:  # a crash is a reportable failure, not an abort
            passed, details = False, f"{type(exc).__name__}: {exc}"
        out.append(PropertyResult(ks, p.id, bool(passed), details))
    return out


def _evaluate_ids(args):
    ks, ids = args
    return evaluate(ks, [REGISTRY[i] for i in ids])


def run_suite(spec: SuiteSpec, registry: Optional[dict] = None) -> list[PropertyResult]:
    props = selected_properties(spec, registry)
    if any(p.needs_search for p in props) and spec.n_range[1] > spec.cutoff:
        raise CutoffExceeded(spec.n_range[1], spec.cutoff)
    series = sweep_series(spec)
    if spec.parallelism > 1 and registry is None:
        ids = [p.id for p in props]
        with ProcessPoolExecutor(spec.parallelism) as pool:
            chunks = pool.map(_evaluate_ids, [(ks, ids) for ks in series], chunksize=16)
            results = [r for chunk in chunks for r in chunk]
    else:
        results = [r for ks in series for r in evaluate(ks, props)]
    return sorted(results)


def failures(results: Iterable[PropertyResult]) -> list[PropertyResult]:
    return [r for r in results if not r.passed]


# -- reports -----------------------------------------------------------------


def invariant_record(ks: KupischSeries) -> dict:
    """Full invariant record of one series, JSON-ready."""
    tables = dim_tables(ks)
    strat = classify(ks)
    record = {
        "series": format_series(ks),
        "n": ks.n,
        "kind": ks.kind,
        "pd": _dims(tables.pd),
        "id": _dims(tables.id),
        "gldim": format_dim(tables.gldim),
        "findim": tables.findim,
        "w": envelope_lengths(ks),
    }
    if ks.is_cyclic:
        prof = psi_profile(ks)
        record.update(psi=list(prof.psi), regular=list(prof.regular), d=prof.d, m=prof.m)
    else:
        record.update(psi=None, regular=None, d=None, m=0)
    record.update(strat.as_dict())
    return record


def _summary(results: Sequence[PropertyResult]) -> dict:
    return {
        "series": len({r.series for r in results}),
        "results": len(results),
        "failures": len(failures(results)),
    }


def emit_report(results: Sequence[PropertyResult], format: str = "json") -> str:
    results = sorted(results)
    if format == "json":
        grouped: dict[KupischSeries, list[PropertyResult]] = {}
        for r in results:
            grouped.setdefault(r.series, []).append(r)
        records = []
        for ks, rows in grouped.items():
            record = invariant_record(ks)
            record["violations"] = [
                {"property": r.property, "details": r.details} for r in rows if not r.passed
            ]
            records.append(record)
        doc = {"schema_version": SCHEMA_VERSION, "summary": _summary(results), "series": records}
        return json.dumps(doc, indent=2) + "\n"
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["series", "property", "passed", "details"])
        for r in results:
            writer.writerow([format_series(r.series), r.property, str(r.passed).lower(), r.details])
        return buf.getvalue()
    raise UnsupportedFormat(f"unsupported report format {format!r}")


def property_counts(results: Iterable[PropertyResult]) -> dict[str, tuple[int, int]]:
    """``property -> (evaluated, failed)``."""
    seen, bad = Counter(), Counter()
    for r in results:
        seen[r.property] += 1
        bad[r.property] += not r.passed
    return {p: (seen[p], bad[p]) for p in sorted(seen)}


# -- extremal search ---------------------------------------------------------


@dataclass(frozen=True, order=True)
class Extremal:
    n: int
    m: int
    series: KupischSeries
    gldim: int


def find_extremal(
    n_range: tuple[int, int], max_len: Union[int, str] = "3n", kinds: Sequence[str] = (CYCLIC,)
) -> list[Extremal]:
    """Series whose global dimension equals ``n + m - 1``, ordered by ``(n, m, series)``."""
    out = []
    for n in range(n_range[0], n_range[1] + 1):
        for kind in kinds:
            for ks in enumerate_series(n, resolve_max_len(max_len, n), kind):
                g = global_dimension(ks)
                if g == INFINITE:
                    continue
                m = psi_profile(ks).m if ks.is_cyclic else 0
                if g == n + m - 1:
                    out.append(Extremal(n, m, ks, g))
    return sorted(out)
