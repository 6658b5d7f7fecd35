"""End-to-end acceptance checks.

Each test covers one shipping criterion, is exact (tolerance 0), carries
its own runtime budget where one applies, and reports a single PASS line
directly to the terminal.
"""

import time

import pytest

from mahonian import (
    MahonianMethod,
    derangement_count,
    derangement_count_recurrence,
    gf_colored,
    i_colored,
    i_colored_row,
    involution_count,
    involution_count_recurrence,
    involution_inv_total,
    involution_inv_total_classical,
    max_inv_c,
    t_classical,
    t_colored,
    tilde_inv_c,
    total_inversions_closed,
    total_inversions_recurrence,
)
from mahonian import lehmer, tables
from mahonian.cli import main as cli_main
from mahonian.counting import binomial, total_inversions_ratio
from mahonian.oracle import (
    code_sum_histogram,
    coverage_pairs,
    group_size,
)
from mahonian.stats import StatisticKind


@pytest.fixture
def report(capsys, request):
    """Print one PASS line to the real terminal once the test body succeeds."""

    def _report(message: str) -> None:
        with capsys.disabled():
            print(f"[acceptance] {request.node.name}: PASS — {message}")

    return _report


def gf_hist(n, c):
    return {k: v for k, v in enumerate(gf_colored(n, c).coefficients) if v}


def test_01_derangement_inversion_table(report):
    start = time.perf_counter()
    fixture = tables.table2()
    assert len(fixture) == 63
    for (c, n), expected in fixture.items():
        assert t_colored(n, c) == expected, (c, n)
    assert fixture[(9, 7)] == 2671026822324
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report(f"63 cells exact, {elapsed:.3f}s < 1s")


def test_02_involution_inversion_table(report):
    start = time.perf_counter()
    fixture = tables.table4()
    assert len(fixture) == 72
    for (c, n), expected in fixture.items():
        assert involution_inv_total(n, c) == expected, (c, n)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report(f"72 cells exact, {elapsed:.3f}s < 1s")


def test_03_small_distribution_table(report, scan):
    start = time.perf_counter()
    expected_row = [1, 3, 5, 7, 8, 8, 7, 5, 3, 1]
    s = scan(2, 3)
    assert [s.hist_inv_c.get(k, 0) for k in range(10)] == expected_row
    assert [s.hist_tilde.get(k, 0) for k in range(10)] == expected_row
    sets = tables.table1_sets(StatisticKind.INV_C)
    assert [len(sets[k]) for k in range(10)] == expected_row
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report(f"both histograms and per-k set sizes exact, {elapsed:.3f}s < 1s")


def test_04_involution_count_and_misprinted_table(report, scan):
    checked = 0
    for c in range(1, 7):
        n = 0
        while group_size(n, c) <= 10**6:
            assert scan(c, n).involution_count == involution_count(n, c), (c, n)
            checked += 1
            n += 1
    # the shipped involution-count table is misprinted; the analysis must
    # explain every fixture row as a shifted copy of a computed sequence
    analyses = tables.table3_alignment()
    assert analyses
    assert all(not row.matches_label for row in analyses)
    assert all(row.explained_as_c is not None for row in analyses)
    report(
        f"formula matches enumeration on {checked} groups; "
        f"all {len(analyses)} misprinted rows explained"
    )


def test_05_seven_way_method_agreement(report):
    start = time.perf_counter()
    assert i_colored(4, 2, 3) == 10
    assert i_colored(4, 2, 1) == 5
    assert i_colored(4, 5, 2) == 32
    cells = 0
    for c in range(1, 5):
        for n in range(9):
            base = i_colored_row(n, c, MahonianMethod.GEN_FUNC)
            for method in MahonianMethod:
                row = i_colored_row(n, c, method)
                if method is MahonianMethod.KNUTH_NETTO:
                    assert row == base[: len(row)], (n, c, method)
                else:
                    assert row == base, (n, c, method)
                cells += len(row)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    report(f"{cells} cells across 7 methods, {elapsed:.3f}s < 10s")


def test_06_equidistribution_exhaustive(report, scan, coverage_1e6):
    start = time.perf_counter()
    for c, n in coverage_1e6:
        expected = gf_hist(n, c)
        assert scan(c, n).hist_inv_c == expected, (c, n)
        assert code_sum_histogram(n, c) == expected, (c, n)
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0
    report(
        f"{len(coverage_1e6)} groups: statistic histogram = code-sum "
        f"histogram = polynomial coefficients, {elapsed:.1f}s < 120s"
    )


def test_07_inversion_totals(report, scan, coverage_1e6):
    for c in range(1, 11):
        assert total_inversions_closed(1, c) == binomial(c, 2)
        for n in range(31):
            closed = total_inversions_closed(n, c)
            assert total_inversions_recurrence(n, c) == closed
            assert total_inversions_ratio(n, c) == closed
    oracle_checked = 0
    for c, n in coverage_1e6:
        if n <= 8:
            moment = sum(k * v for k, v in scan(c, n).hist_inv_c.items())
            assert moment == total_inversions_closed(n, c), (c, n)
            oracle_checked += 1
    report(
        f"3 formulas agree for n<=30, c<=10; oracle first moment on "
        f"{oracle_checked} groups"
    )


def test_08_derangements(report, scan, coverage_1e6):
    for n in range(13):
        assert t_classical(n) == t_colored(n, 1)
    for c, n in coverage_1e6:
        s = scan(c, n)
        count = derangement_count(n, c)
        assert count == derangement_count_recurrence(n, c) == s.derangement_count
        assert t_colored(n, c) == s.derangement_total, (c, n)
    report(f"counts and inversion totals exact on {len(coverage_1e6)} groups")


def test_09_involutions(report, scan, coverage_1e6):
    for n in range(13):
        assert involution_inv_total(n, 1) == involution_inv_total_classical(n)
    for c, n in coverage_1e6:
        s = scan(c, n)
        count = involution_count(n, c)
        assert count == involution_count_recurrence(n, c) == s.involution_count
        assert involution_inv_total(n, c) == s.involution_total, (c, n)
    report(f"counts and inversion totals exact on {len(coverage_1e6)} groups")


def test_10_bijections_and_symmetry(report):
    groups = 0
    for c, n in coverage_pairs(10**4):
        top = max_inv_c(n, c)
        for code in lehmer.iter_codes(n, c):
            sigma = lehmer.code_to_colored_perm(code)
            assert lehmer.perm_to_code(sigma) == code
            assert tilde_inv_c(sigma) == code.sum()
            mirrored = lehmer.complement(code)
            assert lehmer.complement(mirrored) == code
            assert mirrored.sum() == top - code.sum()
            a, b = lehmer.split_color(code)
            assert lehmer.join_color(a, b, c) == code
        groups += 1
    for c in range(1, 5):
        for n in range(9):
            row = i_colored_row(n, c)
            assert row == row[::-1], (n, c)
    report(f"round trips exhaustive on {groups} groups; all rows palindromic")


def test_11_verify_command_exit_discipline(report, capsys):
    start = time.perf_counter()
    code = cli_main(["verify"])
    capsys.readouterr()  # swallow the JSON report
    elapsed = time.perf_counter() - start
    assert code == 0
    assert elapsed < 300.0
    report(f"default-budget verify exits 0, {elapsed:.1f}s < 300s")
