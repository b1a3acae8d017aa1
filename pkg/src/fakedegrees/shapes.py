"""Partitions, multipartitions, hooks, b-statistics, and the Lusztig map.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the empty partition.  A multipartition is a tuple of
partitions.  Rows and columns are indexed from 1, row 1 at the top.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from functools import lru_cache

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


def check_partition(parts: Sequence[int]) -> Partition:
    """Validate weak decrease and positivity; return a canonical tuple."""
    p = tuple(parts)
    for i, x in enumerate(p):
        if x < 1:
            raise ValueError(f"partition parts must be positive: {p}")
        if i and p[i - 1] < x:
            raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse "2,2,1" (empty string for the empty partition)."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return check_partition(parts)


def parse_pair(text: str) -> Multipartition:
    """Parse "p1|p2" into an ordered partition pair."""
    if text.count("|") != 1:
        raise ValueError(f"pair must contain exactly one '|': {text!r}")
    a, b = text.split("|")
    return (parse_partition(a), parse_partition(b))


def parse_multipartition(text: str) -> Multipartition:
    return tuple(parse_partition(t) for t in text.split("|"))


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p)


def format_multipartition(mp: Multipartition) -> str:
    return "|".join(format_partition(p) for p in mp)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= c) for c in range(1, p[0] + 1))


def hooks(p: Partition) -> list[int]:
    """Hook length (arm + leg + 1) of every cell, as a flat list."""
    conj = conjugate(p)
    out = []
    for i, row in enumerate(p, start=1):
        for j in range(1, row + 1):
            out.append((row - j) + (conj[j - 1] - i) + 1)
    return out


def b_statistic(p: Partition) -> int:
    """b(alpha) = sum (i-1)*alpha_i over rows numbered from 1."""
    return sum(i * part for i, part in enumerate(p))


def b_multi(mp: Multipartition) -> int:
    """b(lambda) = sum (i-1)*|component i|."""
    return sum(i * sum(comp) for i, comp in enumerate(mp))


def total_size(mp: Multipartition) -> int:
    return sum(sum(comp) for comp in mp)


def _starred_rows(pair: Multipartition) -> tuple[list[int], list[int]]:
    """Pad the pair to m+1 and m parts and add the staircases.

    Returns the alpha* and beta* sequences (decreasing, pairwise distinct
    across the two lists).
    """
    if len(pair) != 2:
        raise ValueError("Lusztig map needs an ordered pair of partitions")
    lam1, lam2 = pair
    m = max(len(lam2), len(lam1) - 1)
    alpha = list(lam1) + [0] * (m + 1 - len(lam1))
    beta = list(lam2) + [0] * (m - len(lam2))
    alpha_star = [alpha[i] + m + 1 - (i + 1) for i in range(m + 1)]
    beta_star = [beta[j] + m - (j + 1) for j in range(m)]
    return alpha_star, beta_star


def _merge_and_deflate(entries: list[int]) -> Partition:
    merged = sorted(entries, reverse=True)
    r = len(merged)
    parts = [merged[i] - r + (i + 1) for i in range(r)]
    while parts and parts[-1] == 0:
        parts.pop()
    return check_partition(parts)


def lusztig_rho1(pair: Multipartition) -> Partition:
    """Map an ordered partition pair of total size n to a partition of 2n."""
    alpha_star, beta_star = _starred_rows(pair)
    return _merge_and_deflate([2 * a for a in alpha_star] + [2 * b + 1 for b in beta_star])


def lusztig_rho2(pair: Multipartition) -> Partition:
    """Map an ordered partition pair of total size n to a partition of 2n+1."""
    alpha_star, beta_star = _starred_rows(pair)
    return _merge_and_deflate([2 * a + 1 for a in alpha_star] + [2 * b for b in beta_star])


def _beta_numbers(p: Partition, r: int) -> list[int]:
    """First-column hook lengths padded to r rows: p_i + r - i."""
    if r < len(p):
        raise ValueError("not enough rows")
    return [(p[i] if i < len(p) else 0) + r - 1 - i for i in range(r)]


def _unstar(starred: list[int], stair_top: int) -> Partition:
    """Subtract the staircase stair_top-1, ..., 0 from a decreasing list."""
    vals = sorted(starred, reverse=True)
    parts = [v - (stair_top - 1 - i) for i, v in enumerate(vals)]
    if any(x < 0 for x in parts) or any(
        parts[i] < parts[i + 1] for i in range(len(parts) - 1)
    ):
        raise ValueError("staircase removal failed")
    return tuple(x for x in parts if x)


def lusztig_rho1_inverse(p: Partition) -> Multipartition:
    """The unique pair mapping to p under lusztig_rho1.

    Splits the beta numbers of p (taken with an odd number of rows) by
    parity: even entries halve to the starred first component, odd entries
    to the starred second.  Raises ValueError when p is not in the image,
    i.e. does not support a standard domino tableau.
    """
    if sum(p) % 2 != 0:
        raise ValueError("lusztig_rho1_inverse needs an even-size shape")
    r = len(p) | 1
    betas = _beta_numbers(p, r)
    evens = [b // 2 for b in betas if b % 2 == 0]
    odds = [(b - 1) // 2 for b in betas if b % 2 == 1]
    m = (r - 1) // 2
    if len(evens) != m + 1:
        raise ValueError(f"shape {p} is not in the image of the even Lusztig map")
    return (_unstar(evens, m + 1), _unstar(odds, m))


def lusztig_rho2_inverse(p: Partition) -> Multipartition:
    """The unique pair mapping to p under lusztig_rho2."""
    if sum(p) % 2 != 1:
        raise ValueError("lusztig_rho2_inverse needs an odd-size shape")
    r = len(p) | 1
    betas = _beta_numbers(p, r)
    odds = [(b - 1) // 2 for b in betas if b % 2 == 1]
    evens = [b // 2 for b in betas if b % 2 == 0]
    m = (r - 1) // 2
    if len(odds) != m + 1:
        raise ValueError(f"shape {p} is not in the image of the odd Lusztig map")
    return (_unstar(odds, m + 1), _unstar(evens, m))


@lru_cache(maxsize=None)
def supports_domino(p: Partition) -> bool:
    """Whether at least one standard domino tableau of this shape exists.

    Ground truth by search: peel off one border domino at a time, keeping a
    Young diagram at each stage, down to the empty shape (even size) or the
    single zero square (odd size).
    """
    n = sum(p)
    if n == 0:
        return True
    if p == (1,):
        return True
    for smaller in _domino_removals(p):
        if supports_domino(smaller):
            return True
    return False


def _domino_removals(p: Partition) -> Iterator[Partition]:
    """Shapes obtained by removing one border domino from p."""
    k = len(p)
    for i in range(k):
        below = p[i + 1] if i + 1 < k else 0
        # horizontal domino at the end of row i+1
        if p[i] - 2 >= below:
            parts = list(p)
            parts[i] -= 2
            yield tuple(x for x in parts if x)
        if i + 1 < k and p[i] == p[i + 1]:
            deeper = p[i + 2] if i + 2 < k else 0
            # vertical domino at the end of rows i+1, i+2
            if p[i] - 1 >= deeper:
                parts = list(p)
                parts[i] -= 1
                parts[i + 1] -= 1
                yield tuple(x for x in parts if x)


def two_core(p: Partition) -> Partition:
    """Remove dominoes greedily until none can be removed."""
    current = p
    while True:
        for smaller in _domino_removals(current):
            current = smaller
            break
        else:
            return current


def supports_domino_by_core(p: Partition) -> bool:
    """2-core criterion: empty core for even size, single box for odd."""
    core = two_core(p)
    return core == () if sum(p) % 2 == 0 else core == (1,)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        raise ValueError("partitions_of requires n >= 0")
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def multipartitions_of(n: int, d: int) -> Iterator[Multipartition]:
    """All ordered d-tuples of partitions with total size n."""
    if d < 1:
        raise ValueError("multipartitions_of requires d >= 1")
    if d == 1:
        for p in partitions_of(n):
            yield (p,)
        return
    for k in range(n, -1, -1):
        for head in partitions_of(k):
            for tail in multipartitions_of(n - k, d - 1):
                yield (head,) + tail
