"""
Exact group arithmetic through the integer geometric representation.

An element acts on the root space spanned by the simple roots. The simple
reflection of generator g sends alpha_j to alpha_j - A[g][j] * alpha_g, where
A is the integer Cartan matrix (2 on the diagonal, 0/-1/-2 for exponents
2/3/oo). Elements are stored by the images of the simple roots, i.e. the
columns of their matrix; every column is a root, hence sign-coherent.

Right multiplication by s_g only touches column g and the columns of the
neighbours of g, so it is cheap. Length is computed by stripping right
descents, which terminates after exactly l(w) steps.

>>> from ulg.diagram import build_chain
>>> d = build_chain(2)
>>> evaluate(d, d.parse_word("121")) == evaluate(d, d.parse_word("212"))
True
>>> length(evaluate(d, d.parse_word("1212")))
2
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ulg.diagram import CoxeterDiagram

__all__ = [
    "ENTRY_LIMIT", "Element",
    "identity", "right_multiply", "is_right_descent", "right_descents",
    "length", "evaluate", "is_reduced", "inverse", "multiply",
    "reduced_word", "distance",
]

# entries are checked against the signed 64-bit range
ENTRY_LIMIT = 2**63 - 1

Column = tuple[int, ...]
Columns = tuple[Column, ...]


class Element:
    """An element of the Coxeter group of `diagram`, as its matrix columns.

    Immutable and hashable. Two elements of the same diagram are equal iff
    their matrices are equal.
    """

    __slots__ = ("diagram", "cols", "_hash")

    def __init__(self, diagram: CoxeterDiagram, cols: Columns):
        self.diagram = diagram
        self.cols = cols
        self._hash = hash(cols)

    @property
    def key(self) -> tuple[int, ...]:
        """Row-major entry sequence of the matrix."""
        n = len(self.cols)
        return tuple(self.cols[j][i] for i in range(n) for j in range(n))

    def matrix(self) -> list[list[int]]:
        n = len(self.cols)
        return [[self.cols[j][i] for j in range(n)] for i in range(n)]

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.cols == other.cols and self.diagram == other.diagram

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __repr__(self):
        return f"Element({self.diagram}, {self.matrix()})"


def identity(d: CoxeterDiagram) -> Element:
    n = d.n
    return Element(d, tuple(tuple(int(i == j) for i in range(n)) for j in range(n)))


def _step(cols: Columns, g: int, coupling: Sequence[tuple[int, int]]) -> Columns:
    """Columns of M * S_g. `coupling` lists (j, -A[g][j]) for neighbours j."""
    cg = cols[g]
    out = list(cols)
    out[g] = tuple(-x for x in cg)
    for j, c in coupling:
        cj = cols[j]
        if c == 1:
            new = tuple(a + b for a, b in zip(cj, cg))
        else:
            new = tuple(a + c * b for a, b in zip(cj, cg))
        if max(new) > ENTRY_LIMIT or min(new) < -ENTRY_LIMIT:
            raise OverflowError("matrix entry exceeds the 64-bit range")
        out[j] = new
    return tuple(out)


def right_multiply(e: Element, g: int) -> Element:
    d = e.diagram
    if not 0 <= g < d.n:
        raise ValueError(f"generator index {g} out of range for rank {d.n}")
    return Element(d, _step(e.cols, g, d.couplings[g]))


def _negative(col: Column) -> bool:
    # columns are roots, so the sign of any nonzero entry decides
    return sum(col) < 0


def is_right_descent(e: Element, g: int) -> bool:
    """True iff l(e s_g) < l(e), i.e. e sends alpha_g to a negative root."""
    return _negative(e.cols[g])


def right_descents(e: Element) -> list[int]:
    return [g for g, col in enumerate(e.cols) if _negative(col)]


def reduced_word(e: Element) -> tuple[int, ...]:
    """Some reduced expression of `e`, found by stripping the smallest right
    descent at each step."""
    d = e.diagram
    coupling = d.couplings
    cols = e.cols
    rev: list[int] = []
    while True:
        for g, col in enumerate(cols):
            if _negative(col):
                break
        else:
            return tuple(reversed(rev))
        rev.append(g)
        cols = _step(cols, g, coupling[g])


def length(e: Element) -> int:
    return len(reduced_word(e))


def evaluate(d: CoxeterDiagram, word: Iterable[int]) -> Element:
    coupling = d.couplings
    cols = identity(d).cols
    n = d.n
    for g in word:
        if not 0 <= g < n:
            raise ValueError(f"generator index {g} out of range for rank {n}")
        cols = _step(cols, g, coupling[g])
    return Element(d, cols)


def is_reduced(d: CoxeterDiagram, word: Iterable[int]) -> bool:
    """Left-to-right scan: the word is reduced iff no letter is a right
    descent of the prefix before it."""
    coupling = d.couplings
    cols = identity(d).cols
    for g in word:
        if _negative(cols[g]):
            return False
        cols = _step(cols, g, coupling[g])
    return True


def inverse(e: Element) -> Element:
    return evaluate(e.diagram, reversed(reduced_word(e)))


def multiply(e: Element, f: Element) -> Element:
    if e.diagram != f.diagram:
        raise ValueError("elements belong to different diagrams")
    coupling = e.diagram.couplings
    cols = e.cols
    for g in reduced_word(f):
        cols = _step(cols, g, coupling[g])
    return Element(e.diagram, cols)


def distance(u: Element, v: Element) -> int:
    """Cayley graph distance l(u^-1 v)."""
    return length(multiply(inverse(u), v))
