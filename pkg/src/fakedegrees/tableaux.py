"""Standard Young tableaux, tuple tableaux, and their major indices.

A tableau is a tuple of row tuples.  A tuple tableau is a tuple of such
fillings, one per component of a multipartition, using each label 1..n
exactly once overall.
"""

from __future__ import annotations

from collections.abc import Iterator

from .qpoly import QPolynomial
from .shapes import Multipartition, Partition, total_size

Tableau = tuple[tuple[int, ...], ...]
TupleTableau = tuple[Tableau, ...]


def shape_of(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def enumerate_syt(shape: Partition) -> Iterator[Tableau]:
    """All standard Young tableaux of the given shape.

    Built by recursive removal of the largest label from a corner, so each
    tableau appears exactly once; order is deterministic.
    """
    n = sum(shape)
    if n == 0:
        yield ()
        return
    for corner in _corners(shape):
        smaller = _remove_cell(shape, corner)
        for t in enumerate_syt(smaller):
            yield _add_label(t, corner, n, len(shape))


def _corners(shape: Partition) -> Iterator[int]:
    """Row indices (0-based) whose last cell is removable."""
    for i, row in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < row:
            yield i


def _remove_cell(shape: Partition, row: int) -> Partition:
    parts = list(shape)
    parts[row] -= 1
    return tuple(x for x in parts if x)


def _add_label(t: Tableau, row: int, label: int, nrows: int) -> Tableau:
    rows = [list(r) for r in t]
    while len(rows) <= row:
        rows.append([])
    rows[row].append(label)
    return tuple(tuple(r) for r in rows)


def position_of(t: Tableau, label: int) -> tuple[int, int]:
    """1-based (row, col) of a label."""
    for i, row in enumerate(t, start=1):
        for j, x in enumerate(row, start=1):
            if x == label:
                return (i, j)
    raise ValueError(f"label {label} not in tableau {t}")


def maj_syt(t: Tableau) -> int:
    """Sum of labels i with i+1 in a strictly lower row than i."""
    n = sum(len(row) for row in t)
    rows = {}
    for i, row in enumerate(t, start=1):
        for x in row:
            rows[x] = i
    return sum(i for i in range(1, n) if rows[i + 1] > rows[i])


def syt_maj_gf(shape: Partition) -> QPolynomial:
    """Sum of q^maj over all SYT of the shape."""
    coeffs: list[int] = []
    for t in enumerate_syt(shape):
        m = maj_syt(t)
        if m >= len(coeffs):
            coeffs.extend([0] * (m + 1 - len(coeffs)))
        coeffs[m] += 1
    return QPolynomial(coeffs)


def enumerate_tuple_tableaux(mp: Multipartition) -> Iterator[TupleTableau]:
    """All standard tuple tableaux of a multipartition shape."""
    n = total_size(mp)
    if n == 0:
        yield tuple(() for _ in mp)
        return
    for ci, comp in enumerate(mp):
        for corner in _corners(comp):
            smaller = mp[:ci] + (_remove_cell(comp, corner),) + mp[ci + 1:]
            for t in enumerate_tuple_tableaux(smaller):
                filled = _add_label(t[ci], corner, n, len(comp))
                yield t[:ci] + (filled,) + t[ci + 1:]


def _label_positions(t: TupleTableau) -> dict[int, tuple[int, int, int]]:
    """label -> (component index 1-based, row, col)."""
    out = {}
    for ci, filling in enumerate(t, start=1):
        for ri, row in enumerate(filling, start=1):
            for cj, x in enumerate(row, start=1):
                out[x] = (ci, ri, cj)
    return out


def maj_tuple(t: TupleTableau) -> int:
    """Tuple-tableau major index.

    Label i is a descent if i sits strictly above i+1 within the same
    filling, or if i lives in an earlier filling than i+1.
    """
    pos = _label_positions(t)
    n = len(pos)
    total = 0
    for i in range(1, n):
        ci, ri, _ = pos[i]
        cj, rj, _ = pos[i + 1]
        if ci == cj:
            if ri < rj:
                total += i
        elif ci < cj:
            total += i
    return total


def largest_label_component(t: TupleTableau) -> int:
    """1-based index of the filling containing the largest label."""
    pos = _label_positions(t)
    return pos[max(pos)][0]


def tuple_maj_gf(mp: Multipartition) -> QPolynomial:
    """Sum of q^maj over all standard tuple tableaux of the shape."""
    return _gf(enumerate_tuple_tableaux(mp))


def tuple_maj_gf_restricted(mp: Multipartition) -> QPolynomial:
    """Same sum, restricted to tableaux whose largest label is in the
    first filling.  Defined for ordered pairs (d = 2)."""
    if len(mp) != 2:
        raise ValueError("restricted generating function needs a pair shape")
    if total_size(mp) == 0:
        raise ValueError("restricted generating function needs n >= 1")
    return _gf(
        t for t in enumerate_tuple_tableaux(mp) if largest_label_component(t) == 1
    )


def _gf(tableaux) -> QPolynomial:
    coeffs: list[int] = []
    for t in tableaux:
        m = maj_tuple(t)
        if m >= len(coeffs):
            coeffs.extend([0] * (m + 1 - len(coeffs)))
        coeffs[m] += 1
    return QPolynomial(coeffs)


def format_tableau(t: Tableau) -> str:
    return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in t) + "]"


def format_tuple_tableau(t: TupleTableau) -> str:
    return " ; ".join(format_tableau(f) for f in t)
