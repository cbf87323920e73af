"""
Coxeter diagrams with exponents in {2, 3, oo}.

A diagram is an ordered tuple of generator names plus two edge sets: braid
edges (exponent 3) and infinite edges (exponent oo). Every other pair of
distinct generators commutes (exponent 2). The name order is significant: it
fixes the coordinate order of label vectors and of the integer matrices in
`ulg.engine`.

>>> d = parse_diagram("vertices: 1 2 3\\nedges: 1-2 2-3")
>>> d == build_chain(3)
True
>>> d.exponent(0, 2), d.exponent(0, 1)
(2, 3)
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "INF", "CoxeterDiagram", "ParseError",
    "build_chain", "build_from_edges", "builtin", "builtin_names",
    "parse_diagram", "load_diagram",
]

INF = math.inf

_TOKEN = re.compile(r"^[^\s#\-]+$")


class ParseError(ValueError):
    """Malformed diagram or word text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class CoxeterDiagram:
    names: tuple[str, ...]
    braid_edges: frozenset[tuple[int, int]]
    infinite_edges: frozenset[tuple[int, int]] = frozenset()
    title: str | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r}") from None

    def exponent(self, i: int, j: int) -> float:
        if i == j:
            return 1
        p = _pair(i, j)
        if p in self.braid_edges:
            return 3
        if p in self.infinite_edges:
            return INF
        return 2

    def cartan(self, i: int, j: int) -> int:
        """Integer Cartan entry: 2 on the diagonal, then 0, -1, -2 for m = 2, 3, oo."""
        m = self.exponent(i, j)
        if m == 1:
            return 2
        return {2: 0, 3: -1}.get(m, -2)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Generators that do not commute with each generator (m != 2)."""
        nb: list[list[int]] = [[] for _ in self.names]
        for i, j in self.braid_edges | self.infinite_edges:
            nb[i].append(j)
            nb[j].append(i)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def braid_neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in self.names]
        for i, j in self.braid_edges:
            nb[i].append(j)
            nb[j].append(i)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def couplings(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per generator g, the pairs (j, -cartan(g, j)) over non-commuting j."""
        return tuple(
            tuple((j, -self.cartan(g, j)) for j in self.neighbors[g]) for g in range(self.n)
        )

    def degree(self, i: int) -> int:
        """Valency of `i` in the exponent-3 graph."""
        return len(self.braid_neighbors[i])

    def is_simply_laced_tree(self) -> bool:
        if self.infinite_edges:
            return False
        if len(self.braid_edges) != self.n - 1:
            return False
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.braid_neighbors[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    # words

    @property
    def compact_words(self) -> bool:
        """True when every generator name is one character, so words can be
        written without separators ("a1ab3b")."""
        return all(len(name) == 1 for name in self.names)

    def parse_word(self, text: str | Sequence[str]) -> tuple[int, ...]:
        """Word text to a tuple of generator indices.

        Accepts whitespace-separated tokens, or a contiguous string when all
        names are single characters. A sequence of names is also accepted.
        """
        if not isinstance(text, str):
            return tuple(self.index(t) for t in text)
        text = text.strip()
        if not text:
            return ()
        if any(ch.isspace() for ch in text):
            tokens = text.split()
        elif text in self._index:
            tokens = [text]
        elif self.compact_words:
            tokens = list(text)
        else:
            raise ParseError(f"cannot split word {text!r}; separate generators by spaces")
        try:
            return tuple(self.index(t) for t in tokens)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def format_word(self, word: Iterable[int]) -> str:
        sep = "" if self.compact_words else " "
        return sep.join(self.names[g] for g in word)

    def label(self, word: Iterable[int]) -> tuple[int, ...]:
        counts = [0] * self.n
        for g in word:
            counts[g] += 1
        return tuple(counts)

    def serialize(self) -> str:
        def fmt(edges):
            return " ".join(f"{self.names[i]}-{self.names[j]}" for i, j in sorted(edges))
        lines = ["vertices: " + " ".join(self.names), ("edges: " + fmt(self.braid_edges)).rstrip()]
        if self.infinite_edges:
            lines.append("infinite: " + fmt(self.infinite_edges))
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.title or self.serialize().replace("\n", "; ").rstrip("; ")


def build_from_edges(
    names: Sequence[str],
    braid_edges: Iterable[tuple[str, str]] = (),
    infinite_edges: Iterable[tuple[str, str]] = (),
    title: str | None = None,
) -> CoxeterDiagram:
    names = tuple(str(x) for x in names)
    if not names:
        raise ValueError("a diagram needs at least one generator")
    index: dict[str, int] = {}
    for name in names:
        if not _TOKEN.match(name):
            raise ValueError(f"bad generator name {name!r}")
        if name in index:
            raise ValueError(f"duplicate generator name {name!r}")
        index[name] = len(index)

    def resolve(edges, kind):
        out = set()
        for pair in edges:
            a, b = pair
            for tok in (a, b):
                if tok not in index:
                    raise ValueError(f"{kind} edge {a}-{b}: unknown generator {tok!r}")
            if a == b:
                raise ValueError(f"{kind} edge {a}-{b}: self-loop")
            out.add(_pair(index[a], index[b]))
        return frozenset(out)

    braid = resolve(braid_edges, "braid")
    inf = resolve(infinite_edges, "infinite")
    both = braid & inf
    if both:
        i, j = min(both)
        raise ValueError(f"pair {names[i]}-{names[j]} is both a braid and an infinite edge")
    return CoxeterDiagram(names, braid, inf, title=title)


def build_chain(n: int) -> CoxeterDiagram:
    """Type A_n: generators "1".."n", consecutive ones braid."""
    if n < 1:
        raise ValueError("chain length must be positive")
    names = [str(i) for i in range(1, n + 1)]
    return build_from_edges(names, zip(names, names[1:]), title=f"A{n}")


def _builtins() -> dict[str, CoxeterDiagram]:
    return {
        "Atilde2": build_from_edges("123", [("1", "2"), ("2", "3"), ("1", "3")], title="Atilde2"),
        "Dstar4": build_from_edges("0123", [("0", "1"), ("0", "2"), ("0", "3")], title="Dstar4"),
        "Dtilde6-paper": build_from_edges(
            ["1", "2", "a", "b", "3", "4"],
            [("1", "a"), ("2", "a"), ("a", "b"), ("b", "3"), ("b", "4")],
            title="Dtilde6-paper",
        ),
    }


def builtin_names() -> list[str]:
    return ["A<n>"] + sorted(_builtins())


def builtin(name: str) -> CoxeterDiagram:
    m = re.fullmatch(r"A([1-9][0-9]*)", name)
    if m:
        return build_chain(int(m.group(1)))
    table = _builtins()
    if name not in table:
        raise ValueError(f"unknown diagram {name!r}; available: {', '.join(builtin_names())}")
    return table[name]


def parse_diagram(text: str, title: str | None = None) -> CoxeterDiagram:
    """Parse the `vertices:` / `edges:` / `infinite:` text format."""
    sections: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("vertices", "edges", "infinite"):
            raise ParseError(f"expected 'vertices:', 'edges:' or 'infinite:', got {raw.strip()!r}", lineno)
        if key in sections:
            raise ParseError(f"repeated section {key!r}", lineno)
        if key != "vertices" and "vertices" not in sections:
            raise ParseError("'vertices:' must come first", lineno)
        tokens = rest.split()
        if key != "vertices":
            pairs = []
            for tok in tokens:
                a, dash, b = tok.partition("-")
                if not dash or not a or not b or "-" in b:
                    raise ParseError(f"bad edge {tok!r}; expected <name>-<name>", lineno)
                pairs.append((a, b))
            tokens = pairs
        sections[key] = tokens
    if "vertices" not in sections:
        raise ParseError("missing 'vertices:' line")
    try:
        return build_from_edges(
            sections["vertices"], sections.get("edges", []), sections.get("infinite", []), title=title
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_diagram(source: str) -> CoxeterDiagram:
    """A builtin name, or a path to a diagram file."""
    try:
        return builtin(source)
    except ValueError:
        pass
    try:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    except OSError:
        raise ValueError(
            f"{source!r} is neither a builtin diagram ({', '.join(builtin_names())}) nor a readable file"
        ) from None
    return parse_diagram(text, title=source)
