"""
Closed-form counts for type A_n (the chain diagram, i.e. S_{n+1}).

Every label with a u.l.g. has contiguous support [l, m] and, read from one
end of the support to the other, one of the shapes

    Type I      1 1 ... 1
    Type II     1 2..2 1..1          (trailing 1-block may be empty)
    Type III(a) 1 2..2 1..1 2..2 1
    Type III(b) 1 2..2 3..3 2..2 1   (2-blocks may be empty)

`coefficient` evaluates the case table that assigns a coefficient to each
shape. The census in `ulg.geodesics` is the ground truth, and it disagrees
with the table on Type III(a): every such label has coefficient 2, while the
table gives 4. `coefficient` keeps the table as published; compare with
`census_series` when exact values matter.

>>> classify_label(5, (1, 2, 3, 2, 1)).tag
<LabelType.TYPE_III_B: 'III(b)'>
>>> coefficient(3, (1, 3, 1))
2
>>> nonzero_coefficient_count(5)
66
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ulg.diagram import build_chain
from ulg.geodesics import GeodesicCensus, LabelPolynomial, ball_census, generating_series

__all__ = [
    "LabelType", "LabelClass",
    "classify_label", "coefficient", "nonzero_coefficient_count",
    "total_ulg_count", "total_ulg_formula", "unique_geodesic_count", "max_ulg_length",
    "census_series", "typea_table", "TYPEA_COLUMNS",
]


class LabelType(enum.Enum):
    EMPTY = "empty"
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III_A = "III(a)"
    TYPE_III_B = "III(b)"
    NOT_ULG = "none"


@dataclass(frozen=True)
class LabelClass:
    """Shape of a type-A label.

    `l`, `m` are the 1-based ends of the support. The remaining indices are
    *oriented* coordinates: position p (0-based) of the reading is l + p,
    where the reading runs from l to m, or from m to l when `reversed`.

    - Type II: `i` is the last position of the 2-block.
    - Type III(a): `i` ends the first 2-block, `j` starts the second.
    - Type III(b): `i` and `j` are the first and last positions of the 3-block.
    """
    tag: LabelType
    l: int = 0
    m: int = 0
    reversed: bool = False
    i: int = 0
    j: int = 0


_SHAPES = [
    (LabelType.TYPE_I, re.compile(r"1+")),
    (LabelType.TYPE_II, re.compile(r"1(2+)1*")),
    (LabelType.TYPE_III_A, re.compile(r"1(2+)1+(2+)1")),
    (LabelType.TYPE_III_B, re.compile(r"12*(3+)2*1")),
]


def _check(n: int, label: Sequence[int]) -> tuple[int, ...]:
    label = tuple(int(x) for x in label)
    if len(label) != n:
        raise ValueError(f"label {label} has {len(label)} entries, expected {n}")
    if min(label) < 0:
        raise ValueError(f"label {label} has a negative entry")
    return label


def classify_label(n: int, label: Sequence[int]) -> LabelClass:
    label = _check(n, label)
    support = [k for k, x in enumerate(label) if x]
    if not support:
        return LabelClass(LabelType.EMPTY)
    lo, hi = support[0], support[-1]
    l, m = lo + 1, hi + 1
    body = label[lo:hi + 1]
    if 0 in body or max(body) > 3:
        return LabelClass(LabelType.NOT_ULG, l, m)
    for rev in (False, True):
        text = "".join(map(str, body[::-1] if rev else body))
        for tag, pattern in _SHAPES:
            match = pattern.fullmatch(text)
            if not match:
                continue
            if tag is LabelType.TYPE_I:
                return LabelClass(tag, l, m, rev)
            if tag is LabelType.TYPE_II:
                return LabelClass(tag, l, m, rev, i=l + match.end(1) - 1)
            if tag is LabelType.TYPE_III_A:
                return LabelClass(tag, l, m, rev, i=l + match.end(1) - 1, j=l + match.start(2))
            return LabelClass(tag, l, m, rev, i=l + match.start(1), j=l + match.end(1) - 1)
    return LabelClass(LabelType.NOT_ULG, l, m)


def coefficient(n: int, label: Sequence[int]) -> int:
    """Coefficient of t^label according to the type-A case table.

    1  Type I with l = m, Type II with m = i
    2  Type I with l < m, Type II with m > i + 1, Type III(b)
    4  Type III(a) with |i - j| > 1
    2(m - l)  Type III(a) with |i - j| = 1, Type II with m = i + 1

    The Type III(a) row is known to disagree with the census (which gives 2).
    """
    c = classify_label(n, label)
    tag = c.tag
    if tag is LabelType.NOT_ULG:
        return 0
    if tag is LabelType.EMPTY:
        return 1
    if tag is LabelType.TYPE_I:
        return 1 if c.l == c.m else 2
    if tag is LabelType.TYPE_II:
        if c.m == c.i:
            return 1
        if c.m == c.i + 1:
            return 2 * (c.m - c.l)
        return 2
    if tag is LabelType.TYPE_III_B:
        return 2
    # Type III(a); a nonempty middle 1-block forces |i - j| >= 2
    return 4 if abs(c.i - c.j) > 1 else 2 * (c.m - c.l)


def _exact_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise RuntimeError(f"{what} evaluated to the non-integer {value}")
    return int(value)


def nonzero_coefficient_count(n: int) -> int:
    """Number of labels with a u.l.g. in A_n, constant term included:
    n^4/12 - n^3/6 + 17 n^2/12 - n/3 + 1."""
    if n < 1:
        raise ValueError("rank must be positive")
    n = Fraction(n)
    value = n**4 / 12 - n**3 / 6 + 17 * n**2 / 12 - n / 3 + 1
    return _exact_int(value, "nonzero coefficient count")


def total_ulg_formula(n: int, form: str = "closed") -> Fraction:
    """Published closed form for U(1, ..., 1) in A_n, excluding the identity.

    form="closed" gives 6, 19 and n^4/3 - 3n^3/2 + 20n^2/3 - 19n/2 + 1 for
    n = 2, 3 and n >= 4. form="summed" gives the polynomial obtained by
    summing the case table, n^4/3 - n^3 + 8n^2/3 - n + 1/3 (n >= 4), which
    is not even an integer for n = 4, 5, 6. Neither matches the census for
    n >= 3; see `total_ulg_count`.
    """
    if n < 2:
        raise ValueError("the closed form needs n >= 2")
    if form == "closed":
        if n == 2:
            return Fraction(6)
        if n == 3:
            return Fraction(19)
        x = Fraction(n)
        return x**4 / 3 - Fraction(3, 2) * x**3 + Fraction(20, 3) * x**2 - Fraction(19, 2) * x + 1
    if form == "summed":
        x = Fraction(n)
        return x**4 / 3 - x**3 + Fraction(8, 3) * x**2 - x + Fraction(1, 3)
    raise ValueError(f"unknown form {form!r}")


@lru_cache(maxsize=None)
def _full_census(n: int) -> GeodesicCensus:
    return ball_census(build_chain(n), n * (n + 1) // 2)


def census_series(n: int) -> LabelPolynomial:
    """The full u.l.g. series of A_n, from an exhaustive census."""
    if n < 1:
        raise ValueError("rank must be positive")
    return generating_series(_full_census(n))


def total_ulg_count(n: int, include_identity: bool = False) -> int:
    """U(1, ..., 1) for A_n, computed from the census."""
    if n < 2:
        raise ValueError("total_ulg_count needs n >= 2")
    total = census_series(n).at_ones()
    return total if include_identity else total - 1


def unique_geodesic_count(n: int) -> int:
    """Elements of S_{n+1} with a single reduced expression: n^2 + 1."""
    if n < 1:
        raise ValueError("rank must be positive")
    return n * n + 1


def max_ulg_length(n: int) -> int:
    """Longest u.l.g. in A_n: 3n - 4 for n >= 3.

    The linear form undercounts the degenerate ranks, where the values are
    1 (A_1) and 3 (A_2, the word 121).
    """
    if n < 1:
        raise ValueError("rank must be positive")
    if n < 3:
        return (1, 3)[n - 1]
    return 3 * n - 4


TYPEA_COLUMNS = (
    "n", "nonzero_count_formula", "nonzero_count_oracle",
    "total_formula", "total_oracle", "unique_geodesics", "max_length",
)


def typea_table(ns: Sequence[int]) -> list[dict[str, object]]:
    """One row per rank: formulas next to census values.

    `total_formula` and `total_oracle` exclude the identity.
    """
    rows = []
    for n in ns:
        series = census_series(n)
        census = _full_census(n)
        total_formula = total_ulg_formula(n) if n >= 2 else Fraction(1)
        rows.append({
            "n": n,
            "nonzero_count_formula": nonzero_coefficient_count(n),
            "nonzero_count_oracle": len(series),
            "total_formula": total_formula,
            "total_oracle": series.at_ones() - 1,
            "unique_geodesics": census.unique_elements,
            "max_length": series.max_degree(),
        })
    return rows
