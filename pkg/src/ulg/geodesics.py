"""
Geodesic censuses and uniquely labelled geodesics.

A geodesic from 1 to w is a reduced expression of w; its label counts the
occurrences of each generator. A reduced word is a *uniquely labelled
geodesic* (u.l.g.) when no other reduced expression of the same element has
the same label. The generating series sums t^label over all pairs
(element, label) carried by exactly one geodesic.

`ball_census` walks the Cayley graph level by level. The count of geodesics
to f with label L is the sum, over right descents g of f, of the count to
f s_g with label L - e_g, so level k+1 is built from level k alone. Counts
are exact for every label of degree <= radius, also in infinite groups.

>>> from ulg.diagram import build_chain
>>> series = generating_series(ball_census(build_chain(1), 1))
>>> sorted(series.coeffs.items())
[((0,), 1), ((1,), 1)]
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from ulg.diagram import CoxeterDiagram
from ulg.engine import Element, _negative, _step, evaluate, identity, inverse, is_reduced, length

__all__ = [
    "ResourceLimitError", "IncompleteCensusError",
    "GeodesicCensus", "LabelPolynomial",
    "ball_census", "generating_series", "geodesic_count", "is_ulg",
    "reduced_words", "unique_geodesic_elements",
    "format_polynomial", "parse_polynomial",
]

log = logging.getLogger(__name__)

Label = tuple[int, ...]
Word = tuple[int, ...]

DEFAULT_WORD_CAP = 10**6
DEFAULT_STATE_CAP = 10**7


class ResourceLimitError(RuntimeError):
    """A configured memory or enumeration budget was exceeded."""

    def __init__(self, message: str, reached: int | None = None):
        super().__init__(message)
        self.reached = reached


class IncompleteCensusError(RuntimeError):
    """The operation needs a census that exhausted the whole group."""


@dataclass
class GeodesicCensus:
    """Per-(element, label) geodesic counts over the ball of radius `radius`.

    `levels` maps a length k to {element columns: {label: count}} for the
    levels that were retained. Unless the census was built with
    `keep_levels=True` only the outermost level is kept; the u.l.g. tally
    (`series`) and the per-level statistics are folded in as levels are
    produced.
    """
    diagram: CoxeterDiagram
    radius: int
    complete: bool
    levels: dict[int, dict[tuple, dict[Label, int]]]
    series: dict[Label, int]
    level_sizes: list[int]
    unique_elements: int
    ulg_words: list[Word] | None = None

    def count(self, e: Element, label: Label) -> int:
        k = sum(label)
        if k > self.radius:
            raise ValueError(f"label degree {k} exceeds the census radius {self.radius}")
        if k not in self.levels:
            raise ValueError(f"level {k} was not retained; rebuild with keep_levels=True")
        return self.levels[k].get(e.cols, {}).get(tuple(label), 0)

    def labels_of(self, e: Element) -> dict[Label, int]:
        """All labels of geodesics to `e`, with their counts."""
        for k, level in self.levels.items():
            if e.cols in level:
                return dict(level[e.cols])
        raise ValueError("element not found among the retained levels")

    def elements(self) -> Iterator[tuple[Element, dict[Label, int]]]:
        for k in sorted(self.levels):
            for cols, labels in self.levels[k].items():
                yield Element(self.diagram, cols), labels

    @property
    def size(self) -> int:
        return sum(self.level_sizes)


def _expand_shard(items, n, couplings, witnesses):
    """Push the counts of one shard of a level to the next level."""
    nxt: dict[tuple, dict[Label, int]] = {}
    nwit: dict[tuple, dict[Label, Word]] = {}
    for cols, labels in items:
        wit = witnesses.get(cols) if witnesses is not None else None
        for g in range(n):
            if _negative(cols[g]):
                continue
            f = _step(cols, g, couplings[g])
            dst = nxt.get(f)
            if dst is None:
                dst = nxt[f] = {}
            for lab, c in labels.items():
                nl = lab[:g] + (lab[g] + 1,) + lab[g + 1:]
                dst[nl] = dst.get(nl, 0) + c
                if wit is not None and c == 1:
                    nwit.setdefault(f, {})[nl] = wit[lab] + (g,)
    return nxt, nwit


def _merge(parts):
    nxt: dict[tuple, dict[Label, int]] = {}
    nwit: dict[tuple, dict[Label, Word]] = {}
    for part, wpart in parts:
        for f, labels in part.items():
            dst = nxt.get(f)
            if dst is None:
                nxt[f] = labels
            else:
                for lab, c in labels.items():
                    dst[lab] = dst.get(lab, 0) + c
        for f, ws in wpart.items():
            nwit.setdefault(f, {}).update(ws)
    return nxt, nwit


def ball_census(
    d: CoxeterDiagram,
    radius: int,
    *,
    keep_levels: bool = False,
    collect_ulgs: bool = False,
    threads: int = 1,
    max_entries: int | None = None,
) -> GeodesicCensus:
    """Geodesic counts for every element of length <= radius.

    `collect_ulgs` also records the word of every u.l.g. (u.l.g.'s are closed
    under prefixes, so each is an extension of one at the previous level).
    `max_entries` bounds the number of (element, label) pairs held in one
    level; exceeding it raises ResourceLimitError.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    n = d.n
    couplings = d.couplings
    zero = (0,) * n
    start = identity(d).cols
    level: dict[tuple, dict[Label, int]] = {start: {zero: 1}}
    witnesses = {start: {zero: ()}} if collect_ulgs else None
    levels = {0: level}
    series: dict[Label, int] = {zero: 1}
    ulg_words: list[Word] | None = [()] if collect_ulgs else None
    level_sizes = [1]
    unique_elements = 1
    complete = False
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for k in range(1, radius + 1):
            items = list(level.items())
            if pool is None:
                parts = [_expand_shard(items, n, couplings, witnesses)]
            else:
                shards = [items[i::threads] for i in range(threads)]
                parts = list(pool.map(lambda s: _expand_shard(s, n, couplings, witnesses), shards))
            level, nwit = _merge(parts)
            if not level:
                complete = True
                break
            entries = 0
            for f, labels in level.items():
                entries += len(labels)
                ones = [lab for lab, c in labels.items() if c == 1]
                for lab in ones:
                    series[lab] = series.get(lab, 0) + 1
                if len(labels) == 1 and len(ones) == 1:
                    unique_elements += 1
                if witnesses is not None:
                    ws = nwit.get(f, {})
                    kept = {lab: ws[lab] for lab in ones}
                    ulg_words.extend(kept.values())
                    nwit[f] = kept
            if max_entries is not None and entries > max_entries:
                raise ResourceLimitError(
                    f"census level {k} holds {entries} (element, label) pairs, budget {max_entries}",
                    reached=k,
                )
            witnesses = nwit if witnesses is not None else None
            level_sizes.append(len(level))
            if keep_levels:
                levels[k] = level
            else:
                levels = {k: level}
            log.debug("census %s level %d: %d elements, %d pairs", d, k, len(level), entries)
    finally:
        if pool is not None:
            pool.shutdown()
    if not complete:
        # the group is exhausted when no element of the last level has an ascent
        complete = all(all(_negative(col) for col in cols) for cols in level)
    if ulg_words is not None:
        ulg_words.sort(key=lambda w: (len(w), w))
    return GeodesicCensus(
        diagram=d,
        radius=radius,
        complete=complete,
        levels=levels,
        series=series,
        level_sizes=level_sizes,
        unique_elements=unique_elements,
        ulg_words=ulg_words,
    )


@dataclass
class LabelPolynomial:
    """Sparse polynomial in t_1..t_n: label -> positive integer coefficient.

    Coefficients are exact for labels of degree <= `radius`; when `complete`
    is true the group is finite and the polynomial is the whole series.
    """
    coeffs: dict[Label, int]
    radius: int
    complete: bool
    diagram_name: str = ""
    nvars: int = field(default=0)

    def __post_init__(self):
        if not self.nvars and self.coeffs:
            self.nvars = len(next(iter(self.coeffs)))

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, label: Label) -> int:
        return self.coeffs.get(tuple(label), 0)

    def support(self) -> set[Label]:
        return set(self.coeffs)

    def at_ones(self) -> int:
        return sum(self.coeffs.values())

    def max_degree(self) -> int:
        return max(sum(lab) for lab in self.coeffs)

    def by_degree(self) -> dict[int, dict[Label, int]]:
        out: dict[int, dict[Label, int]] = {}
        for lab, c in sorted(self.coeffs.items()):
            out.setdefault(sum(lab), {})[lab] = c
        return out

    def __str__(self) -> str:
        terms = []
        for lab, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0][::-1])):
            mono = "*".join(
                f"t{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(lab) if e
            )
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def generating_series(census: GeodesicCensus) -> LabelPolynomial:
    return LabelPolynomial(
        dict(census.series), census.radius, census.complete, str(census.diagram), census.diagram.n
    )


def unique_geodesic_elements(census: GeodesicCensus) -> int:
    """Number of elements with exactly one reduced expression, identity included."""
    if not census.complete:
        raise IncompleteCensusError("census does not cover the whole group")
    return census.unique_elements


class _Counter:
    """Memoized count of reduced words of an element with a given label."""

    def __init__(self, d: CoxeterDiagram, max_states: int = DEFAULT_STATE_CAP):
        self.d = d
        self.max_states = max_states
        self.memo: dict[tuple[tuple, Label], int] = {}

    def __call__(self, cols: tuple, label: Label) -> int:
        # iterative post-order over (element, remaining label) states
        memo = self.memo
        couplings = self.d.couplings
        root = (cols, label)
        if root in memo:
            return memo[root]
        stack = [root]
        while stack:
            state = stack[-1]
            if state in memo:
                stack.pop()
                continue
            c, lab = state
            if not any(lab):
                # lengths match by construction, so c is the identity here
                memo[state] = 1
                stack.pop()
                continue
            children = []
            for g, col in enumerate(c):
                if lab[g] and _negative(col):
                    children.append((_step(c, g, couplings[g]), lab[:g] + (lab[g] - 1,) + lab[g + 1:]))
            pending = [ch for ch in children if ch not in memo]
            if pending:
                stack.extend(pending)
                continue
            memo[state] = sum(memo[ch] for ch in children)
            stack.pop()
            if len(memo) > self.max_states:
                raise ResourceLimitError(
                    f"geodesic count exceeded {self.max_states} memoized states", reached=len(memo)
                )
        return memo[root]


def geodesic_count(
    d: CoxeterDiagram, e: Element, label: Label, *, max_states: int = DEFAULT_STATE_CAP
) -> int:
    """Number of reduced expressions of `e` whose label is `label`."""
    label = tuple(label)
    if len(label) != d.n or min(label, default=0) < 0:
        raise ValueError(f"label must be {d.n} nonnegative integers")
    if sum(label) != length(e):
        return 0
    return _Counter(d, max_states)(e.cols, label)


def is_ulg(d: CoxeterDiagram, word, *, max_states: int = DEFAULT_STATE_CAP) -> bool:
    word = d.parse_word(word) if isinstance(word, str) else tuple(word)
    if not is_reduced(d, word):
        return False
    return geodesic_count(d, evaluate(d, word), d.label(word), max_states=max_states) == 1


def reduced_words(
    d: CoxeterDiagram,
    e: Element,
    label_filter: Label | None = None,
    *,
    cap: int = DEFAULT_WORD_CAP,
    max_states: int = DEFAULT_STATE_CAP,
) -> list[Word]:
    """All reduced expressions of `e` in lexicographic order, optionally only
    those with label `label_filter`.

    Words are built front to back as right-descent chains of e^-1. A memoized
    count prunes every branch that cannot complete, so the work is
    proportional to the output.
    """
    ell = length(e)
    if label_filter is not None:
        label_filter = tuple(label_filter)
        if len(label_filter) != d.n:
            raise ValueError(f"label must have {d.n} entries")
        if sum(label_filter) != ell:
            return []
        budget = label_filter
    else:
        budget = None
    couplings = d.couplings
    counter = _Counter(d, max_states)
    start = inverse(e).cols

    if budget is not None:
        total = counter(start, budget)
    else:
        total = None
    if total is not None and total > cap:
        raise ResourceLimitError(f"{total} reduced words exceed the cap {cap}", reached=total)

    out: list[Word] = []
    prefix: list[int] = []

    def walk(cols, lab):
        if len(prefix) == ell:
            out.append(tuple(prefix))
            if len(out) > cap:
                raise ResourceLimitError(f"more than {cap} reduced words", reached=len(out))
            return
        for g, col in enumerate(cols):
            if not _negative(col):
                continue
            if lab is not None:
                if not lab[g]:
                    continue
                nlab = lab[:g] + (lab[g] - 1,) + lab[g + 1:]
            else:
                nlab = None
            nxt = _step(cols, g, couplings[g])
            if nlab is not None and counter(nxt, nlab) == 0:
                continue
            prefix.append(g)
            walk(nxt, nlab)
            prefix.pop()

    walk(start, budget)
    return out


# text format

def format_polynomial(p: LabelPolynomial) -> str:
    lines = [
        f"# diagram: {p.diagram_name}",
        f"# radius: {p.radius}",
        f"# complete: {'true' if p.complete else 'false'}",
    ]
    for lab in sorted(p.coeffs):
        lines.append(",".join(map(str, lab)) + "\t" + str(p.coeffs[lab]))
    return "\n".join(lines) + "\n"


def parse_polynomial(text: str) -> LabelPolynomial:
    header: dict[str, str] = {}
    coeffs: dict[Label, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            header[key.strip()] = value.strip()
            continue
        try:
            lab_text, coeff_text = line.split("\t")
            lab = tuple(int(x) for x in lab_text.split(","))
            coeff = int(coeff_text)
        except ValueError:
            raise ValueError(f"line {lineno}: expected '<i_1>,...,<i_n><TAB><coefficient>'") from None
        if lab in coeffs:
            raise ValueError(f"line {lineno}: repeated label {lab_text}")
        coeffs[lab] = coeff
    return LabelPolynomial(
        coeffs,
        radius=int(header.get("radius", "0")),
        complete=header.get("complete", "false") == "true",
        diagram_name=header.get("diagram", ""),
    )
