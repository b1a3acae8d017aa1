"""Standard domino tableaux and the domino major index.

Cells are 1-based (row, col) pairs, row 1 at the top.  An odd-size shape
carries a zero square fixed at (1, 1); dominoes are labelled 1..n.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .qpoly import QPolynomial
from .shapes import Partition, check_partition

Cell = tuple[int, int]


@dataclass(frozen=True)
class DominoTableau:
    shape: Partition
    # dominoes[i] is the cell pair of the domino labelled i+1
    dominoes: tuple[tuple[Cell, Cell], ...]

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def has_zero_square(self) -> bool:
        return self.size % 2 == 1

    @property
    def n(self) -> int:
        return len(self.dominoes)

    def cells_of(self, label: int) -> tuple[Cell, Cell]:
        return self.dominoes[label - 1]

    def render(self) -> str:
        """Grid with each domino's label in both its cells, 0 for the
        zero square."""
        grid: dict[Cell, int] = {}
        if self.has_zero_square:
            grid[(1, 1)] = 0
        for label, (a, b) in enumerate(self.dominoes, start=1):
            grid[a] = label
            grid[b] = label
        width = max(len(str(self.n)), 1)
        lines = []
        for r, row_len in enumerate(self.shape, start=1):
            lines.append(" ".join(str(grid[(r, c)]).rjust(width) for c in range(1, row_len + 1)))
        return "\n".join(lines)

    def to_json(self) -> list[dict]:
        return [
            {"label": i + 1, "cells": [list(a), list(b)]}
            for i, (a, b) in enumerate(self.dominoes)
        ]


def enumerate_sdt(shape: Partition) -> Iterator[DominoTableau]:
    """All standard domino tableaux of the shape, built by peeling the
    largest-labelled border domino; empty iff the shape supports none."""
    n = sum(shape) // 2
    for dominoes in _enumerate_rec(shape, n):
        yield DominoTableau(shape=shape, dominoes=dominoes)


def _enumerate_rec(shape: Partition, n: int) -> Iterator[tuple[tuple[Cell, Cell], ...]]:
    if n == 0:
        size = sum(shape)
        if size == 0 or shape == (1,):
            yield ()
        return
    for smaller, cells in _removable_dominoes(shape):
        for rest in _enumerate_rec(smaller, n - 1):
            yield rest + (cells,)


def _removable_dominoes(shape: Partition) -> Iterator[tuple[Partition, tuple[Cell, Cell]]]:
    k = len(shape)
    for i in range(k):
        below = shape[i + 1] if i + 1 < k else 0
        if shape[i] - 2 >= below:
            parts = list(shape)
            parts[i] -= 2
            cells = ((i + 1, shape[i] - 1), (i + 1, shape[i]))
            yield tuple(x for x in parts if x), cells
        if i + 1 < k and shape[i] == shape[i + 1]:
            deeper = shape[i + 2] if i + 2 < k else 0
            if shape[i] - 1 >= deeper:
                parts = list(shape)
                parts[i] -= 1
                parts[i + 1] -= 1
                cells = ((i + 1, shape[i]), (i + 2, shape[i]))
                yield tuple(x for x in parts if x), cells


def maj_domino(t: DominoTableau) -> int:
    """Sum of labels i whose domino lies strictly above domino i+1.

    "Strictly above" compares rows only: every cell of i must have a
    smaller row index than every cell of i+1.
    """
    total = 0
    for i in range(1, t.n):
        (r1, _), (r2, _) = t.cells_of(i)
        (s1, _), (s2, _) = t.cells_of(i + 1)
        if max(r1, r2) < min(s1, s2):
            total += i
    return total


def sdt_maj_gf(shape: Partition) -> QPolynomial:
    """Sum of q^maj over all standard domino tableaux of the shape."""
    coeffs: list[int] = []
    for t in enumerate_sdt(shape):
        m = maj_domino(t)
        if m >= len(coeffs):
            coeffs.extend([0] * (m + 1 - len(coeffs)))
        coeffs[m] += 1
    return QPolynomial(coeffs)


def is_standard(t: DominoTableau) -> bool:
    """Every prefix of labels (plus the zero square) covers a Young
    diagram."""
    covered: set[Cell] = set()
    if t.has_zero_square:
        covered.add((1, 1))
    if not _is_young(covered):
        return False
    for label in range(1, t.n + 1):
        a, b = t.cells_of(label)
        if a in covered or b in covered:
            return False
        covered.add(a)
        covered.add(b)
        if not _is_young(covered):
            return False
    return _cells_of_shape(t.shape) == covered


def _is_young(cells: set[Cell]) -> bool:
    for (r, c) in cells:
        if r > 1 and (r - 1, c) not in cells:
            return False
        if c > 1 and (r, c - 1) not in cells:
            return False
    return True


def _cells_of_shape(shape: Partition) -> set[Cell]:
    return {(r, c) for r, row in enumerate(shape, start=1) for c in range(1, row + 1)}


def truncate(t: DominoTableau, k: int) -> DominoTableau:
    """The sub-tableau of labels <= k (keeping the zero square)."""
    cells: list[Cell] = []
    if t.has_zero_square:
        cells.append((1, 1))
    for label in range(1, k + 1):
        cells.extend(t.cells_of(label))
    max_row = max((r for r, _ in cells), default=0)
    shape = tuple(
        sum(1 for (r, _c) in cells if r == row) for row in range(1, max_row + 1)
    )
    return DominoTableau(shape=check_partition(shape), dominoes=t.dominoes[:k])
