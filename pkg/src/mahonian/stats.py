"""Permutation statistics: inv, maj, col, and the two colored inversion numbers."""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from .perm import ColoredPermutation


class StatisticKind(str, Enum):
    INV_C = "inv_c"
    TILDE_INV_C = "tilde_inv_c"
    INV_UNDERLYING = "inv"
    COL = "col"


def inv(pi: Sequence[int]) -> int:
    """Number of pairs i < j with pi_i > pi_j."""
    n = len(pi)
    return sum(pi[i] > pi[j] for i in range(n) for j in range(i + 1, n))


def maj(pi: Sequence[int]) -> int:
    """Sum of the descent positions of pi (1-based)."""
    return sum(i for i in range(1, len(pi)) if pi[i - 1] > pi[i])


def col(sigma: ColoredPermutation) -> int:
    """Sum of the colors in the window."""
    return sum(sigma.colors)


def cross_term(sigma: ColoredPermutation) -> int:
    """Pairs i < j with sigma_i < sigma_j whose right entry has nonzero color."""
    values, colors = sigma.values, sigma.colors
    return sum(
        values[i] < values[j]
        for j in range(sigma.n)
        if colors[j] != 0
        for i in range(j)
    )


def inv_c(sigma: ColoredPermutation) -> int:
    """Colored inversion number: inv of the underlying permutation, plus the
    color sum, plus c times the gated non-inversion count."""
    return inv(sigma.values) + col(sigma) + sigma.c * cross_term(sigma)


def tilde_inv_c(sigma: ColoredPermutation) -> int:
    """The companion statistic c*inv(|sigma|) + col(sigma), equidistributed
    with inv_c over the whole group."""
    return sigma.c * inv(sigma.values) + col(sigma)


def max_inv_c(n: int, c: int) -> int:
    """Largest attainable inv_c value: (c-1)n + c*binom(n, 2)."""
    if n < 0 or c < 1:
        raise ValueError("need n >= 0 and c >= 1")
    return (c - 1) * n + c * (n * (n - 1) // 2)


def statistic_value(kind: StatisticKind, sigma: ColoredPermutation) -> int:
    if kind is StatisticKind.INV_C:
        return inv_c(sigma)
    if kind is StatisticKind.TILDE_INV_C:
        return tilde_inv_c(sigma)
    if kind is StatisticKind.INV_UNDERLYING:
        return inv(sigma.values)
    if kind is StatisticKind.COL:
        return col(sigma)
    raise ValueError(f"unknown statistic {kind!r}")
