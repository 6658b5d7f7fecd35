"""Classical and colored Lehmer codes.

A classical code has entries 0 <= l_i < i; a colored code relaxes the
bound to c*i.  Entry i is indexed by the *value* i: it counts the
smaller values sitting to the right of i in one-line notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .perm import ColoredPermutation


@dataclass(frozen=True)
class LehmerCode:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for i, e in enumerate(self.entries, start=1):
            if not 0 <= e < i:
                raise ValueError(f"entry {e} at position {i} violates 0 <= l_i < i")

    @property
    def n(self) -> int:
        return len(self.entries)

    def sum(self) -> int:
        return sum(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class ColoredLehmerCode:
    c: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.c < 1:
            raise ValueError(f"number of colors must be >= 1, got {self.c}")
        for i, e in enumerate(self.entries, start=1):
            if not 0 <= e < self.c * i:
                raise ValueError(f"entry {e} at position {i} violates 0 <= l_i < {self.c}*{i}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def sum(self) -> int:
        return sum(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def encode(pi: Sequence[int]) -> LehmerCode:
    """Lehmer code of a classical permutation: entry i counts values j < i
    appearing to the right of i."""
    pos = {v: i for i, v in enumerate(pi)}
    entries = tuple(
        sum(pos[j] > pos[i] for j in range(1, i)) for i in range(1, len(pi) + 1)
    )
    return LehmerCode(entries)


def decode(code: LehmerCode) -> tuple[int, ...]:
    """Rebuild the permutation by inserting value i at position l_i from the right."""
    out: list[int] = []
    for i, e in enumerate(code.entries, start=1):
        out.insert(len(out) - e, i)
    return tuple(out)


def complement(code: ColoredLehmerCode) -> ColoredLehmerCode:
    """Entrywise reflection l_i -> c*i - 1 - l_i; an involution that flips the
    entry sum across the midpoint of its range."""
    return ColoredLehmerCode(
        code.c,
        tuple(code.c * i - 1 - e for i, e in enumerate(code.entries, start=1)),
    )


def split_color(code: ColoredLehmerCode) -> tuple[LehmerCode, tuple[int, ...]]:
    """Write each entry as c*a_i + b_i with 0 <= b_i < c; returns (a, b)."""
    c = code.c
    a = tuple(e // c for e in code.entries)
    b = tuple(e % c for e in code.entries)
    return LehmerCode(a), b


def join_color(a: LehmerCode, b: Sequence[int], c: int) -> ColoredLehmerCode:
    """Inverse of split_color: entries c*a_i + b_i."""
    if len(b) != a.n:
        raise ValueError("length mismatch between code and color vector")
    for k in b:
        if not 0 <= k < c:
            raise ValueError(f"color {k} out of range [0, {c})")
    return ColoredLehmerCode(c, tuple(c * x + y for x, y in zip(a.entries, b)))


def split_radix(code: ColoredLehmerCode) -> tuple[tuple[int, ...], LehmerCode]:
    """Write each entry as q_i * i + r_i with 0 <= r_i < i; returns (q, r).

    The weighted sum of q encodes a partition into parts of size at most n
    with each part used at most c-1 times.
    """
    q = tuple(e // i for i, e in enumerate(code.entries, start=1))
    r = tuple(e % i for i, e in enumerate(code.entries, start=1))
    return q, LehmerCode(r)


def code_to_colored_perm(code: ColoredLehmerCode) -> ColoredPermutation:
    """Bijection onto colored permutations carrying the entry sum to tilde_inv_c.

    The classical part decodes to the underlying permutation; the color
    remainder b_i is attached to the value i wherever it sits.
    """
    a, b = split_color(code)
    values = decode(a)
    colors = tuple(b[v - 1] for v in values)
    return ColoredPermutation(code.c, values, colors)


def perm_to_code(sigma: ColoredPermutation) -> ColoredLehmerCode:
    """Inverse of code_to_colored_perm."""
    a = encode(sigma.values)
    b = [0] * sigma.n
    for v, k in zip(sigma.values, sigma.colors):
        b[v - 1] = k
    return join_color(a, tuple(b), sigma.c)


def iter_codes(n: int, c: int) -> Iterator[ColoredLehmerCode]:
    """All c^n * n! colored codes in lexicographic order, last entry fastest."""
    for entries in product(*(range(c * i) for i in range(1, n + 1))):
        yield ColoredLehmerCode(c, entries)
