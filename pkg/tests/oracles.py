"""Reference implementations that share no code with the package.

Type A is modelled by permutations of 0..n (s_i swaps positions i-1 and i),
right-angled groups by walks on the graph.
"""

from __future__ import annotations

import itertools
from collections import defaultdict


def perm_apply(perm: tuple[int, ...], i: int) -> tuple[int, ...]:
    """perm * s_i for the 1-based generator i (swap positions i-1, i)."""
    p = list(perm)
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def perm_of_word(n: int, word) -> tuple[int, ...]:
    p = tuple(range(n + 1))
    for i in word:
        p = perm_apply(p, i)
    return p


def inversions(perm) -> int:
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


def perm_reduced_word(perm) -> list[int]:
    """Bubble sort; the swaps read backwards give a reduced word (1-based)."""
    p = list(perm)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                swaps.append(i + 1)
                changed = True
    return swaps[::-1]


def typea_series_by_permutations(n: int) -> dict[tuple[int, ...], int]:
    """u.l.g. series of A_n: BFS over S_{n+1} with a right descent at i iff
    perm[i-1] > perm[i]."""
    start = tuple(range(n + 1))
    level = {start: {(0,) * n: 1}}
    series = {(0,) * n: 1}
    while level:
        nxt: dict = defaultdict(lambda: defaultdict(int))
        for p, labels in level.items():
            for i in range(1, n + 1):
                if p[i - 1] < p[i]:  # ascent
                    q = perm_apply(p, i)
                    for lab, c in labels.items():
                        nl = list(lab)
                        nl[i - 1] += 1
                        nxt[q][tuple(nl)] += c
        level = nxt
        for labels in level.values():
            for lab, c in labels.items():
                if c == 1:
                    series[lab] = series.get(lab, 0) + 1
    return series


def typea_series_by_words(n: int) -> dict[tuple[int, ...], int]:
    """Brute force over every word up to the longest length."""
    top = n * (n + 1) // 2
    groups: dict = defaultdict(int)
    for ell in range(top + 1):
        for word in itertools.product(range(1, n + 1), repeat=ell):
            p = perm_of_word(n, word)
            if inversions(p) != ell:
                continue
            lab = [0] * n
            for i in word:
                lab[i - 1] += 1
            groups[(p, tuple(lab))] += 1
    series: dict = defaultdict(int)
    for (_, lab), c in groups.items():
        if c == 1:
            series[lab] += 1
    return dict(series)


def walk_series(n: int, edges, radius: int) -> dict[tuple[int, ...], int]:
    """Number of walks (consecutive vertices adjacent) by visit count, up to
    length `radius`, plus the empty walk."""
    adj = defaultdict(set)
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    series: dict = defaultdict(int)
    series[(0,) * n] = 1
    level: dict = defaultdict(int)
    for v in range(n):
        lab = [0] * n
        lab[v] = 1
        level[(v, tuple(lab))] += 1
    for _ in range(radius):
        for (_, lab), c in level.items():
            series[lab] += c
        nxt: dict = defaultdict(int)
        for (v, lab), c in level.items():
            for u in adj[v]:
                nl = list(lab)
                nl[u] += 1
                nxt[(u, tuple(nl))] += c
        level = nxt
    return dict(series)


def affine_a2_is_reduced(word) -> bool:
    """Reducedness in A~2 via affine permutations in window notation:
    s_1, s_2 swap adjacent window entries, s_3 swaps the ends with a shift
    by 3."""
    w = [1, 2, 3]
    for g in word:
        if g == 1:
            w[0], w[1] = w[1], w[0]
        elif g == 2:
            w[1], w[2] = w[2], w[1]
        else:
            w[0], w[2] = w[2] - 3, w[0] + 3
    return _affine_length(w) == len(word)


def _affine_length(w) -> int:
    # sum over window pairs i < j of |floor((w(j) - w(i)) / 3)|
    return sum(abs((w[j] - w[i]) // 3) for i in range(3) for j in range(i + 1, 3))


def _affine_step(w, g):
    w = list(w)
    if g == 1:
        w[0], w[1] = w[1], w[0]
    elif g == 2:
        w[1], w[2] = w[2], w[1]
    else:
        w[0], w[2] = w[2] - 3, w[0] + 3
    return tuple(w)


def affine_a2_reduced_word_counts(word) -> dict[tuple[int, int, int], int]:
    """Reduced words of the A~2 element of `word`, counted by label.

    Right descents: s_1 iff w(1) > w(2), s_2 iff w(2) > w(3), s_3 iff
    w(3) - 3 > w(1)."""
    start = (1, 2, 3)
    for g in word:
        start = _affine_step(start, g)
    memo: dict = {}

    def count(w):
        if w == (1, 2, 3):
            return {(0, 0, 0): 1}
        if w in memo:
            return memo[w]
        out: dict = defaultdict(int)
        desc = [w[0] > w[1], w[1] > w[2], w[2] - 3 > w[0]]
        for g in (1, 2, 3):
            if desc[g - 1]:
                for lab, c in count(_affine_step(w, g)).items():
                    nl = list(lab)
                    nl[g - 1] += 1
                    out[tuple(nl)] += c
        memo[w] = dict(out)
        return memo[w]

    return count(start)
