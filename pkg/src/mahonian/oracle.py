"""Exhaustive enumeration of the colored permutation group and the
verification suite that cross-checks every closed form against it."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations, product
from typing import Iterator

from . import lehmer, special, tables
from .counting import (
    MahonianMethod,
    gf_colored,
    i_colored_row,
    total_inversions_closed,
    total_inversions_ratio,
    total_inversions_recurrence,
)
from .perm import ColoredPermutation
from .stats import StatisticKind, inv_c, max_inv_c, tilde_inv_c

DEFAULT_CAP = 10**7
DEFAULT_BUDGET = 10**6
_VERIFY_MAX_C = 10  # widest color count swept by the verification suite


class ClassKind(str, Enum):
    ALL = "all"
    DERANGEMENTS = "derangements"
    INVOLUTIONS = "involutions"


class CapExceeded(Exception):
    def __init__(self, size: int, cap: int):
        super().__init__(f"group size {size} exceeds the enumeration cap {cap}")
        self.size = size
        self.cap = cap


def group_size(n: int, c: int) -> int:
    if n < 0 or c < 1:
        raise ValueError("need n >= 0 and c >= 1")
    return c**n * math.factorial(n)


def enumerate_group(n: int, c: int, cap: int = DEFAULT_CAP) -> Iterator[ColoredPermutation]:
    """All elements of the group, underlying permutation in lexicographic
    order with the color vector counting in base c underneath."""
    size = group_size(n, c)
    if size > cap:
        raise CapExceeded(size, cap)

    def generate():
        for values in permutations(range(1, n + 1)):
            for colors in product(range(c), repeat=n):
                yield ColoredPermutation(c, values, colors)

    return generate()


@dataclass(frozen=True)
class Distribution:
    c: int
    n: int
    class_kind: ClassKind
    statistic: StatisticKind
    histogram: dict[int, int]
    total_count: int

    def __post_init__(self):
        if sum(self.histogram.values()) != self.total_count:
            raise ValueError("histogram does not sum to total_count")
        top = max_inv_c(self.n, self.c)
        for k, v in self.histogram.items():
            if not 0 <= k <= top:
                raise ValueError(f"statistic value {k} outside [0, {top}]")
            if v < 0:
                raise ValueError("negative count")

    def first_moment(self) -> int:
        return sum(k * v for k, v in self.histogram.items())


@dataclass
class _GroupScan:
    """Everything one exhaustive pass over the group can report."""

    size: int = 0
    hist_inv_c: dict[int, int] = field(default_factory=dict)
    hist_tilde: dict[int, int] = field(default_factory=dict)
    hist_inv: dict[int, int] = field(default_factory=dict)
    hist_col: dict[int, int] = field(default_factory=dict)
    derangement_count: int = 0
    derangement_total: int = 0
    derangement_hist: dict[int, int] = field(default_factory=dict)
    involution_count: int = 0
    involution_total: int = 0
    involution_hist: dict[int, int] = field(default_factory=dict)


def scan_group(n: int, c: int, cap: int = DEFAULT_CAP) -> _GroupScan:
    """One pass over the whole group, collecting histograms and class totals.

    Works on raw (values, colors) windows rather than permutation objects;
    per color vector only the color sum and the gated ascent sum change.
    """
    size = group_size(n, c)
    if size > cap:
        raise CapExceeded(size, cap)
    out = _GroupScan()
    color_vectors = list(product(range(c), repeat=n))
    for values in permutations(range(1, n + 1)):
        inv_p = sum(
            values[i] > values[j] for i in range(n) for j in range(i + 1, n)
        )
        asc = [sum(values[i] < values[j] for i in range(j)) for j in range(n)]
        fixed = [i for i in range(n) if values[i] == i + 1]
        underlying_involution = all(values[values[i] - 1] == i + 1 for i in range(n))
        pairs = (
            [(i, values[i] - 1) for i in range(n) if values[i] - 1 > i]
            if underlying_involution
            else []
        )
        for cv in color_vectors:
            colsum = 0
            cross = 0
            for j in range(n):
                cj = cv[j]
                if cj:
                    colsum += cj
                    cross += asc[j]
            k = inv_p + colsum + c * cross
            out.size += 1
            out.hist_inv_c[k] = out.hist_inv_c.get(k, 0) + 1
            kt = c * inv_p + colsum
            out.hist_tilde[kt] = out.hist_tilde.get(kt, 0) + 1
            out.hist_inv[inv_p] = out.hist_inv.get(inv_p, 0) + 1
            out.hist_col[colsum] = out.hist_col.get(colsum, 0) + 1
            if all(cv[i] for i in fixed):
                out.derangement_count += 1
                out.derangement_total += k
                out.derangement_hist[k] = out.derangement_hist.get(k, 0) + 1
            if underlying_involution:
                if all((2 * cv[i]) % c == 0 for i in fixed) and all(
                    (cv[i] + cv[j]) % c == 0 for i, j in pairs
                ):
                    out.involution_count += 1
                    out.involution_total += k
                    out.involution_hist[k] = out.involution_hist.get(k, 0) + 1
    return out


def distribution(
    n: int,
    c: int,
    class_kind: ClassKind = ClassKind.ALL,
    statistic: StatisticKind = StatisticKind.INV_C,
    cap: int = DEFAULT_CAP,
) -> Distribution:
    class_kind = ClassKind(class_kind)
    statistic = StatisticKind(statistic)
    size = group_size(n, c)
    if size > cap:
        raise CapExceeded(size, cap)
    hist: dict[int, int] = {}
    count = 0
    for sigma in enumerate_group(n, c, cap):
        if class_kind is ClassKind.DERANGEMENTS and not sigma.is_derangement():
            continue
        if class_kind is ClassKind.INVOLUTIONS and not sigma.is_involution():
            continue
        if statistic is StatisticKind.INV_C:
            k = inv_c(sigma)
        elif statistic is StatisticKind.TILDE_INV_C:
            k = tilde_inv_c(sigma)
        elif statistic is StatisticKind.INV_UNDERLYING:
            k = sum(
                sigma.values[i] > sigma.values[j]
                for i in range(n)
                for j in range(i + 1, n)
            )
        else:
            k = sum(sigma.colors)
        hist[k] = hist.get(k, 0) + 1
        count += 1
    return Distribution(c, n, class_kind, statistic, hist, count)


def total_statistic(
    n: int,
    c: int,
    class_kind: ClassKind = ClassKind.ALL,
    statistic: StatisticKind = StatisticKind.INV_C,
    cap: int = DEFAULT_CAP,
) -> int:
    return distribution(n, c, class_kind, statistic, cap).first_moment()


def code_sum_histogram(n: int, c: int, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Entry-sum histogram over all colored Lehmer codes, by direct iteration."""
    size = group_size(n, c)
    if size > cap:
        raise CapExceeded(size, cap)
    hist: dict[int, int] = {}
    for entries in product(*(range(c * i) for i in range(1, n + 1))):
        k = sum(entries)
        hist[k] = hist.get(k, 0) + 1
    return hist


def coverage_pairs(budget: int, max_c: int = _VERIFY_MAX_C) -> list[tuple[int, int]]:
    """All (c, n) whose group fits in the element budget, c capped at max_c."""
    pairs = []
    for c in range(1, max_c + 1):
        n = 0
        while group_size(n, c) <= budget:
            pairs.append((c, n))
            n += 1
    return pairs


# ---------------------------------------------------------------------------
# verification suite


def _entry(identity: str, params: dict, ok: bool, detail: str = "") -> dict:
    return {
        "identity": identity,
        "params": params,
        "status": "pass" if ok else "fail",
        "detail": detail,
    }


def _gf_histogram(n: int, c: int) -> dict[int, int]:
    return {
        k: v for k, v in enumerate(gf_colored(n, c).coefficients) if v
    }


def verify_suite(max_budget: int = DEFAULT_BUDGET) -> list[dict]:
    """Run every cross-check of the artifact and report pass/fail per identity.

    Failures become report entries, never exceptions.
    """
    report: list[dict] = []
    pairs = coverage_pairs(max_budget)
    if not pairs:
        report.append(
            _entry("coverage", {"budget": max_budget}, True, "empty coverage: budget too small to enumerate anything")
        )
        return report

    for c, n in pairs:
        params = {"c": c, "n": n}
        scan = scan_group(n, c, cap=max(max_budget, 1))
        expected = _gf_histogram(n, c)
        report.append(
            _entry(
                "group-size", params, scan.size == group_size(n, c),
                f"enumerated {scan.size}",
            )
        )
        report.append(
            _entry("inv-c-histogram-matches-gf", params, scan.hist_inv_c == expected)
        )
        report.append(
            _entry("tilde-histogram-matches-inv-c", params, scan.hist_tilde == scan.hist_inv_c)
        )
        codes = code_sum_histogram(n, c, cap=max(max_budget, 1))
        report.append(_entry("code-sum-histogram-matches-gf", params, codes == expected))
        top = max_inv_c(n, c)
        palindromic = all(
            scan.hist_inv_c.get(k, 0) == scan.hist_inv_c.get(top - k, 0)
            for k in range(top + 1)
        )
        full_support = set(scan.hist_inv_c) == set(range(top + 1))
        report.append(
            _entry("histogram-palindromic-full-support", params, palindromic and full_support)
        )
        report.append(
            _entry(
                "first-moment-matches-closed-form",
                params,
                sum(k * v for k, v in scan.hist_inv_c.items()) == total_inversions_closed(n, c),
            )
        )
        report.append(
            _entry(
                "derangement-count", params,
                scan.derangement_count == special.derangement_count(n, c)
                == special.derangement_count_recurrence(n, c),
                f"enumerated {scan.derangement_count}",
            )
        )
        report.append(
            _entry(
                "derangement-inversion-total", params,
                scan.derangement_total == special.t_colored(n, c),
                f"enumerated {scan.derangement_total}",
            )
        )
        report.append(
            _entry(
                "involution-count", params,
                scan.involution_count == special.involution_count(n, c)
                == special.involution_count_recurrence(n, c),
                f"enumerated {scan.involution_count}",
            )
        )
        report.append(
            _entry(
                "involution-inversion-total", params,
                scan.involution_total == special.involution_inv_total(n, c),
                f"enumerated {scan.involution_total}",
            )
        )

    # bijection round-trips on every small group
    for c, n in pairs:
        if group_size(n, c) > 10**4:
            continue
        params = {"c": c, "n": n}
        ok = True
        top = max_inv_c(n, c)
        for code in lehmer.iter_codes(n, c):
            sigma = lehmer.code_to_colored_perm(code)
            if lehmer.perm_to_code(sigma) != code:
                ok = False
                break
            if tilde_inv_c(sigma) != code.sum():
                ok = False
                break
            comp = lehmer.complement(code)
            if lehmer.complement(comp) != code or comp.sum() != top - code.sum():
                ok = False
                break
            a, b = lehmer.split_color(code)
            if lehmer.join_color(a, b, c) != code:
                ok = False
                break
        report.append(_entry("bijection-round-trips", params, ok))

    # seven-way method agreement
    methods_ok = True
    detail = ""
    for c in range(1, 5):
        for n in range(9):
            base = i_colored_row(n, c, MahonianMethod.GEN_FUNC)
            for method in MahonianMethod:
                row = i_colored_row(n, c, method)
                want = base[: len(row)] if method is MahonianMethod.KNUTH_NETTO else base
                if row != want:
                    methods_ok = False
                    detail = f"{method.value} disagrees at (n={n}, c={c})"
    report.append(
        _entry("method-agreement", {"n_max": 8, "c_max": 4}, methods_ok, detail)
    )

    # totals chain, formula versus formula
    totals_ok = all(
        total_inversions_closed(n, c)
        == total_inversions_recurrence(n, c)
        == total_inversions_ratio(n, c)
        for c in range(1, _VERIFY_MAX_C + 1)
        for n in range(31)
    )
    report.append(_entry("totals-chain", {"n_max": 30, "c_max": _VERIFY_MAX_C}, totals_ok))

    # paper table fixtures versus formulas
    t2 = tables.table2()
    report.append(
        _entry(
            "table-2-fixture",
            {"cells": len(t2)},
            all(special.t_colored(n, c) == v for (c, n), v in t2.items()),
        )
    )
    t4 = tables.table4()
    report.append(
        _entry(
            "table-4-fixture",
            {"cells": len(t4)},
            all(special.involution_inv_total(n, c) == v for (c, n), v in t4.items()),
        )
    )
    if group_size(3, 2) <= max_budget:
        fixture = tables.table1_sets(StatisticKind.INV_C)
        by_k: dict[int, set[str]] = {}
        for sigma in enumerate_group(3, 2):
            by_k.setdefault(inv_c(sigma), set()).add(str(sigma))
        report.append(_entry("table-1-inv-c-sets", {"c": 2, "n": 3}, by_k == fixture))
        fixture_t = tables.table1_sets(StatisticKind.TILDE_INV_C)
        by_kt: dict[int, set[str]] = {}
        for sigma in enumerate_group(3, 2):
            by_kt.setdefault(tilde_inv_c(sigma), set()).add(str(sigma))
        report.append(_entry("table-1-tilde-sets", {"c": 2, "n": 3}, by_kt == fixture_t))

    return report
