"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary.
"""

import time

from conftest import ACCEPTANCE_LINES
from nakayama.algebra import CYCLIC, cyclic
from nakayama.homology import (
    INFINITE,
    dim_tables,
    finitistic_dimension,
    global_dimension,
    id_table,
    pd_table,
    simple_pds,
)
from nakayama.psi import BOUND_NAMES, bound_report, psi_profile
from nakayama.stratify import SS_NOT_QH, classify
from nakayama.verify import REGISTRY, SuiteSpec, failures, run_suite

TEN_MINUTES = 600.0


def report(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def sweep(ids, n_range, max_len):
    """Run the named properties exhaustively; return (results, failures, seconds)."""
    registry = {i: REGISTRY[i] for i in ids}
    suites = tuple(sorted({p.suite for p in registry.values()}))
    start = time.perf_counter()
    results = run_suite(SuiteSpec(n_range, max_len, kinds=(CYCLIC,), suites=suites), registry=registry)
    elapsed = time.perf_counter() - start
    assert {r.property for r in results} == set(ids)
    return results, failures(results), elapsed


def summary(results, bad, elapsed):
    series = len({r.series for r in results})
    text = f"{series} series, {len(results)} checks, {len(bad)} violations, {elapsed:.1f}s"
    if bad:
        text += f"; first: {bad[0].series} {bad[0].property} ({bad[0].details})"
    return text


def _clear_caches():
    pd_table.cache_clear()
    id_table.cache_clear()


def test_criterion_1_gldim_bound_attained_on_2_to_3_series():
    _clear_caches()
    start = time.perf_counter()
    problems = []
    for n in range(2, 9):
        ks = cyclic(*[2] * (n - 1), 3)
        if simple_pds(ks) != [n - i + 1 for i in range(1, n + 1)]:
            problems.append(f"n={n} pd {simple_pds(ks)}")
        if global_dimension(ks) != n:
            problems.append(f"n={n} gldim {global_dimension(ks)}")
        if psi_profile(ks).m != 1:
            problems.append(f"n={n} m {psi_profile(ks).m}")
        main = bound_report(ks)["gldim_le_n_plus_m_minus_1"]
        if not (main.attained and main.rhs == n):
            problems.append(f"n={n} bound {main.lhs} vs {main.rhs}")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 1.0
    assert report(1, ok, f"n = 2..8, {len(problems)} mismatches, {elapsed:.3f}s (< 1s)" + (f" {problems[:2]}" if problems else ""))


def test_criterion_2_series_4_5():
    _clear_caches()
    start = time.perf_counter()
    ks = cyclic(4, 5)
    c = classify(ks)
    t = dim_tables(ks)
    facts = {
        "class": c.klass == SS_NOT_QH,
        "witness": c.witness == (2, 1),
        "gldim": t.gldim == INFINITE,
        "findim": t.findim == 2,
        "pd profile": t.pd == (INFINITE, 1),
        "pattern": c.pattern == (2, 1),
        "properly stratified": c.properly_stratified,
    }
    elapsed = time.perf_counter() - start
    wrong = [k for k, v in facts.items() if not v]
    ok = not wrong and elapsed < 1.0
    assert report(2, ok, f"[4,5] facts wrong: {wrong or 'none'}, {elapsed:.3f}s (< 1s)")


def test_criterion_3_three_way_equivalence():
    results, bad, elapsed = sweep(
        ["finite_gldim_three_way", "psi_profile_consistent"], (1, 6), "3n"
    )
    ok = not bad and elapsed <= TEN_MINUTES
    assert report(3, ok, "three-way equivalence, n <= 6, c <= 3n: " + summary(results, bad, elapsed))


def test_criterion_4_bound_suite():
    ids = list(BOUND_NAMES) + ["id_simple_le_2d", "gldim_has_g_and_g_minus_1"]
    results, bad, elapsed = sweep(ids, (1, 6), "3n")
    finite = sum(1 for ks in {r.series for r in results} if global_dimension(ks) != INFINITE)
    ok = not bad and finite > 0
    assert report(
        4, ok, f"bound suite, n <= 6, c <= 3n ({finite} with finite gldim): " + summary(results, bad, elapsed)
    )


def test_criterion_5_fast_path_matches_search():
    results, bad, elapsed = sweep(["ss_fast_equals_bruteforce", "ss_not_qh_iff_pattern"], (1, 5), "3n")
    ok = not bad and elapsed <= TEN_MINUTES
    assert report(5, ok, "classify vs ordering search, n <= 5, c <= 3n: " + summary(results, bad, elapsed))


def test_criterion_6_finitistic_dimension_bounds():
    ids = [
        "findim_le_n",
        "findim_le_2",
        "ss_not_qh_pd_profile",
        "ss_not_qh_iff_pattern",
        "opposite_ss",
        "ss_iff_local",
        "qh_iff_ss_and_finite_gldim",
    ]
    results, bad, elapsed = sweep(ids, (1, 5), "3n")
    sharp = [finitistic_dimension(cyclic(*[2] * (n - 1), 3)) == n for n in range(2, 9)]
    sharp.append(finitistic_dimension(cyclic(4, 5)) == 2)
    ok = not bad and all(sharp)
    assert report(
        6, ok, f"findim bounds, n <= 5, c <= 3n, sharpness {'ok' if all(sharp) else 'broken'}: "
        + summary(results, bad, elapsed),
    )


def test_criterion_7_duality_and_quotients():
    ids = [
        "max_pd_equals_max_id",
        "opposite_valid",
        "opposite_involution",
        "opposite_multiset",
        "local_size_semisimple_iff",
        "quotient_validates_linear",
        "quotient_finite_gldim",
        "quotient_hereditary_if_corner_nonsemisimple",
        "pd_over_quotient_plus_one",
        "gldim_over_quotient_plus_two",
        "findim_over_quotient_plus_two",
        "witness_trace_projective",
    ]
    results, bad, elapsed = sweep(ids, (1, 5), 12)
    assert report(7, not bad, "duality and quotients, n <= 5, c <= 12: " + summary(results, bad, elapsed))


def test_criterion_8_closed_forms_match_oracles():
    ids = [
        "injective_iff_envelope_length",
        "envelope_length_oracle",
        "syzygy_closed_form_oracle",
        "cosyzygy_closed_form_oracle",
        "greedy_filtration_oracle",
    ]
    results, bad, elapsed = sweep(ids, (1, 5), 12)
    assert report(8, not bad, "closed forms vs oracles, n <= 5, c <= 12: " + summary(results, bad, elapsed))
