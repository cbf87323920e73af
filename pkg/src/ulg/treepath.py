"""
Words as paths on a simply laced tree diagram.

A u.l.g. on a tree must walk along edges of the diagram: two consecutive
letters that commute could be swapped without changing the label. This
module collects such necessary conditions. Each one can only *refute*: a
word that violates a condition is not a u.l.g., while a word that passes
all of them may still fail to be one.

A turning vertex of a word is the middle letter h of a factor g h g (the
path goes g -> h -> g). It is short when g is a branching vertex
(valency >= 3) and long otherwise. The branching index of a word counts its
short turning vertices, with repetition.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

from ulg.diagram import CoxeterDiagram
from ulg.engine import is_reduced

__all__ = [
    "Turn", "TurningProfile", "Finding", "StructureReport", "Branch",
    "path_legal", "turning_profile", "forbidden_pattern_scan",
    "length_bound", "ulg_structure_check", "branches", "chain_order",
]

Word = tuple[int, ...]


def _require_tree(d: CoxeterDiagram) -> None:
    if not d.is_simply_laced_tree():
        raise ValueError(f"diagram {d} is not a simply laced tree")


def path_legal(d: CoxeterDiagram, word: Sequence[int]) -> bool:
    """True iff consecutive letters are adjacent in the tree."""
    _require_tree(d)
    adj = d.braid_neighbors
    return all(b in adj[a] for a, b in zip(word, word[1:]))


@dataclass(frozen=True)
class Turn:
    position: int  # index of the turning letter in the word
    vertex: int
    via: int  # the vertex the path comes from and returns to
    short: bool


@dataclass(frozen=True)
class TurningProfile:
    word: Word
    turns: tuple[Turn, ...]
    start: int | None
    end: int | None

    @property
    def branching_index(self) -> int:
        return sum(t.short for t in self.turns)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(t.vertex for t in self.turns)

    def format(self, d: CoxeterDiagram) -> str:
        return ",".join(d.names[t.vertex] + ("s" if t.short else "l") for t in self.turns)


def turning_profile(d: CoxeterDiagram, word: Sequence[int]) -> TurningProfile:
    word = tuple(word)
    if not path_legal(d, word):
        raise ValueError(f"word {d.format_word(word)} is not a path on the diagram")
    turns = tuple(
        Turn(k, word[k], word[k - 1], d.degree(word[k - 1]) >= 3)
        for k in range(1, len(word) - 1)
        if word[k - 1] == word[k + 1]
    )
    return TurningProfile(word, turns, word[0] if word else None, word[-1] if word else None)


@dataclass(frozen=True)
class Finding:
    """A factor word[start:stop] that can be rewritten into a different word
    with the same label and the same value."""
    kind: str
    start: int
    stop: int
    alpha: int
    beta: int


def chain_order(d: CoxeterDiagram) -> list[int] | None:
    """Vertices along the chain from one end, or None if `d` is not a chain."""
    if not d.is_simply_laced_tree() or any(d.degree(v) > 2 for v in range(d.n)):
        return None
    if d.n == 1:
        return [0]
    start = min(v for v in range(d.n) if d.degree(v) == 1)
    order = [start]
    prev = None
    while len(order) < d.n:
        cur = order[-1]
        nxt = [u for u in d.braid_neighbors[cur] if u != prev]
        prev = cur
        order.append(nxt[0])
    return order


def _chain_patterns(order: list[int]) -> list[tuple[str, Word]]:
    """The four forbidden chain factors for every pair of positions l + 2 <= m."""
    out = []
    for l in range(len(order)):
        for m in range(l + 2, len(order)):
            up = [order[k] for k in range(l, m + 1)]  # l .. m
            down = up[::-1]  # m .. l
            out.append(("chain-1", tuple(down + up[1:] + [order[m - 1]])))
            out.append(("chain-2", tuple([order[m - 1]] + down + up[1:])))
            out.append(("chain-3", tuple(up + down[1:] + [order[l + 1]])))
            out.append(("chain-4", tuple([order[l + 1]] + up + down[1:])))
    return out


def forbidden_pattern_scan(d: CoxeterDiagram, word: Sequence[int]) -> list[Finding]:
    """Occurrences of the swap patterns

        a b . v . b a b    and    b a b . v . b a

    where v has no letter adjacent to a (both sides equal b a b . v . b a and
    a b . v . a b a respectively), plus the four chain factors when `d` is a
    chain. Any finding shows the word is not a u.l.g.
    """
    word = tuple(word)
    adj = d.braid_neighbors
    found: list[Finding] = []
    size = len(word)
    for p in range(size - 1):
        a, b = word[p], word[p + 1]
        if b not in adj[a]:
            continue
        # a b v b a b
        q = p + 2
        while q + 2 < size:
            if word[q] == b and word[q + 1] == a and word[q + 2] == b:
                found.append(Finding("swap-left", p, q + 3, a, b))
            if word[q] in adj[a]:
                break
            q += 1
        # b a b v b a, read with (b, a) = (word[p], word[p + 1])
        if p + 2 < size and word[p + 2] == a:
            alpha, beta = b, a
            q = p + 3
            while q + 1 < size:
                if word[q] == beta and word[q + 1] == alpha:
                    found.append(Finding("swap-right", p, q + 2, alpha, beta))
                if word[q] in adj[alpha]:
                    break
                q += 1
    order = chain_order(d)
    if order is not None and len(order) >= 3:
        for kind, pattern in _chain_patterns(order):
            k = len(pattern)
            for p in range(size - k + 1):
                if word[p:p + k] == pattern:
                    found.append(Finding(kind, p, p + k, pattern[0], pattern[1]))
    found.sort(key=lambda f: (f.start, f.stop, f.kind))
    return found


def length_bound(d: CoxeterDiagram, branching_index: int) -> int:
    """Upper bound on the length of a u.l.g. with the given branching index.

    For index 0 this is floor(n^2/2 + 5n/2 - 7); otherwise n^2 (B + 1) + n B.
    The index-0 value is degenerate for n <= 3 (it is 0 for n = 2) and a
    warning is issued there.
    """
    _require_tree(d)
    if branching_index < 0:
        raise ValueError("branching index must be nonnegative")
    n = d.n
    if branching_index == 0:
        if n <= 3:
            warnings.warn(
                f"the branching-index-0 bound is not meaningful for n = {n}", stacklevel=2
            )
        return (n * n + 5 * n - 14) // 2
    return n * n * (branching_index + 1) + n * branching_index


@dataclass(frozen=True)
class Branch:
    """A maximal chain of vertices of valency <= 2, with the branching
    vertices it hangs from."""
    vertices: frozenset[int]
    attached: tuple[int, ...]
    depth: dict = field(hash=False, compare=False)  # vertex -> distance to nearest attached vertex


def branches(d: CoxeterDiagram) -> list[Branch]:
    _require_tree(d)
    low = {v for v in range(d.n) if d.degree(v) <= 2}
    seen: set[int] = set()
    out = []
    for v in sorted(low):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in d.braid_neighbors[x]:
                if y in low and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        attached = sorted({y for x in comp for y in d.braid_neighbors[x] if y not in low})
        depth = {}
        frontier = [(y, 0) for y in attached]
        while frontier:
            x, dist = frontier.pop(0)
            for y in d.braid_neighbors[x]:
                if y in comp and y not in depth:
                    depth[y] = dist + 1
                    frontier.append((y, dist + 1))
        out.append(Branch(frozenset(comp), tuple(attached), depth))
    return out


@dataclass
class StructureReport:
    word: Word
    applicable: bool
    reason: str = ""
    violations: dict[str, list[str]] = field(default_factory=dict)

    CLAUSES = ("a", "b", "c", "d", "e")

    @property
    def passed(self) -> bool:
        """No violation found. This does not certify a u.l.g."""
        return self.applicable and not any(self.violations.values())

    def summary(self) -> str:
        if not self.applicable:
            return f"n/a ({self.reason})"
        bad = [k for k in self.CLAUSES if self.violations.get(k)]
        return "no violation found" if not bad else "violated: " + ",".join(bad)


def ulg_structure_check(d: CoxeterDiagram, word: Sequence[int]) -> StructureReport:
    """Check a reduced path word against the turning-vertex conditions.

    (a) the segment between consecutive turning vertices (start and end
        included) passes through each of its two ends exactly once;
    (b) the window from two turning vertices before to two after a turning
        vertex passes through it exactly once;
    (c) a visit to a branch that enters and leaves through the same branching
        vertex has exactly one turning vertex inside the branch;
    (d) for a word visiting a branch more than once: between two turning
        vertices of the branch, at depths d_i and d_j, lies a turning vertex
        of the branch at depth max(1, min(d_i, d_j) - 1);
    (e) for such a word, a long turning vertex in the branch is preceded or
        followed, within the branch's turning list, by a short one.

    Depth is the distance to the nearest branching vertex the branch hangs
    from. Branches of a chain hang from nothing and are skipped by (c)-(e).
    """
    word = tuple(word)
    if not path_legal(d, word):
        return StructureReport(word, False, "not a path on the diagram")
    if not is_reduced(d, word):
        return StructureReport(word, False, "not reduced")
    report = StructureReport(word, True, violations={k: [] for k in StructureReport.CLAUSES})
    if len(word) < 2:
        return report
    v = report.violations
    prof = turning_profile(d, word)
    turns = prof.turns
    # positions of start, turning vertices, end
    marks = [0] + [t.position for t in turns] + [len(word) - 1]
    names = d.names

    for i in range(len(marks) - 1):
        lo, hi = marks[i], marks[i + 1]
        seg = word[lo:hi + 1]
        for end in (word[lo], word[hi]):
            if seg.count(end) != 1:
                v["a"].append(f"segment {lo}..{hi} visits {names[end]} {seg.count(end)} times")

    r = len(turns)
    for i in range(1, r + 1):
        lo = marks[max(i - 2, 0)]
        hi = marks[min(i + 2, r + 1)]
        x = word[marks[i]]
        c = word[lo:hi + 1].count(x)
        if c != 1:
            v["b"].append(f"window {lo}..{hi} visits turning vertex {names[x]} {c} times")

    for br in branches(d):
        if not br.attached:
            continue
        inside = [k for k, g in enumerate(word) if g in br.vertices]
        # maximal runs inside the branch
        runs = []
        for k in inside:
            if runs and runs[-1][1] == k - 1:
                runs[-1][1] = k
            else:
                runs.append([k, k])
        for lo, hi in runs:
            if lo == 0 or hi == len(word) - 1 or word[lo - 1] != word[hi + 1]:
                continue
            t_in = [t for t in turns if lo <= t.position <= hi]
            if len(t_in) != 1:
                v["c"].append(
                    f"visit {lo}..{hi} to branch {{{','.join(names[x] for x in sorted(br.vertices))}}}"
                    f" has {len(t_in)} turning vertices"
                )
        bturns = [t for t in turns if t.vertex in br.vertices]
        # (d) and (e) concern words that visit the branch more than once
        if len(runs) < 2 or len(bturns) < 2:
            continue
        depth = br.depth
        for a in range(len(bturns)):
            for b in range(a + 1, len(bturns)):
                ta, tb = bturns[a], bturns[b]
                target = max(1, min(depth[ta.vertex], depth[tb.vertex]) - 1)
                if not any(depth[t.vertex] == target for t in bturns[a:b + 1]):
                    v["d"].append(
                        f"no depth-{target} turning vertex between positions {ta.position} and {tb.position}"
                    )
        for a, t in enumerate(bturns):
            if t.short:
                continue
            nbrs = [bturns[k] for k in (a - 1, a + 1) if 0 <= k < len(bturns)]
            if not any(x.short for x in nbrs):
                v["e"].append(f"long turning vertex {names[t.vertex]} at {t.position} has no short neighbour")
    return report
