"""Exhaustive generation of loops (normalized Latin squares).

The search fills rows 1..n-1 cell by cell, keeping one bitmask of used
values per row and per column.  Values are tried in increasing order, so
tables come out in lexicographic row-major order.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .core import LoopTable
from .errors import OrderTooLarge

ENUMERATION_CAP = 6

Predicate = Callable[[LoopTable], bool]


def _check_order(n: int, force: bool) -> None:
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > ENUMERATION_CAP and not force:
        raise OrderTooLarge(
            f"exhaustive enumeration is capped at order {ENUMERATION_CAP}; pass force=True to override"
        )


def _fill(n: int, grid: list[list[int]], row_used: list[int], col_used: list[int], start: int):
    """Yield completed grids, continuing from flat cell index ``start``."""
    last = (n - 1) * (n - 1)
    stack = [(start, 0)]
    # Explicit stack: (cell index, next candidate value to try).
    while stack:
        cell, v = stack.pop()
        if cell == last:
            yield tuple(tuple(r) for r in grid)
            continue
        i, j = 1 + cell // (n - 1), 1 + cell % (n - 1)
        if v > 0:
            # undo the previous choice at this cell
            prev = grid[i][j]
            bit = 1 << prev
            row_used[i] ^= bit
            col_used[j] ^= bit
        free = ~(row_used[i] | col_used[j])
        while v < n and not (free >> v) & 1:
            v += 1
        if v == n:
            continue
        bit = 1 << v
        grid[i][j] = v
        row_used[i] |= bit
        col_used[j] |= bit
        stack.append((cell, v + 1))
        stack.append((cell + 1, 0))


def _initial(n: int):
    grid = [[0] * n for _ in range(n)]
    for k in range(n):
        grid[0][k] = k
        grid[k][0] = k
    row_used = [1 << i for i in range(n)]
    col_used = [1 << j for j in range(n)]
    row_used[0] = col_used[0] = (1 << n) - 1
    return grid, row_used, col_used


def _raw_tables(n: int) -> Iterator[tuple]:
    if n == 1:
        yield ((0,),)
        return
    grid, row_used, col_used = _initial(n)
    yield from _fill(n, grid, row_used, col_used, 0)


def _row1_prefixes(n: int) -> list[tuple[int, ...]]:
    """All admissible second rows; they partition the search space."""
    grid, row_used, col_used = _initial(n)
    out = []

    def rec(j, used, acc):
        if j == n:
            out.append(tuple(acc))
            return
        for v in range(n):
            if not (used >> v) & 1 and v != j:
                rec(j + 1, used | (1 << v), acc + [v])

    rec(1, 1 << 1, [1])
    return out


def _subtree(args) -> list[tuple]:
    n, row1 = args
    grid, row_used, col_used = _initial(n)
    for j, v in enumerate(row1):
        grid[1][j] = v
        row_used[1] |= 1 << v
        col_used[j] |= 1 << v
    return list(_fill(n, grid, row_used, col_used, n - 1))


def _raw_tables_parallel(n: int, workers: int) -> Iterator[tuple]:
    prefixes = _row1_prefixes(n)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map() yields results in submission order, which is lexicographic.
        for chunk in pool.map(_subtree, [(n, p) for p in prefixes]):
            yield from chunk


def enumerate_loops(
    n: int,
    filters: Sequence[Predicate] = (),
    *,
    force: bool = False,
    workers: int = 1,
) -> Iterator[LoopTable]:
    """Yield every loop of order ``n`` with identity 0, filters applied conjunctively."""
    _check_order(n, force)
    raw = _raw_tables_parallel(n, workers) if workers > 1 and n > 2 else _raw_tables(n)
    for index, rows in enumerate(raw):
        L = LoopTable(n, rows, f"n{n}-{index}")
        if all(f(L) for f in filters):
            yield L


def count_loops(n: int, filters: Sequence[Predicate] = (), *, force: bool = False) -> int:
    _check_order(n, force)
    if not filters:
        return sum(1 for _ in _raw_tables(n))
    return sum(1 for _ in enumerate_loops(n, filters, force=force))


def search_witness(n_max: int, predicate: Predicate, n_min: int = 1) -> LoopTable | None:
    """First loop in (order, lexicographic) order satisfying ``predicate``."""
    _check_order(n_max, False)
    for n in range(n_min, n_max + 1):
        for L in enumerate_loops(n):
            if predicate(L):
                return L
    return None


def corpus(n_max: int, filters: Sequence[Predicate] = ()) -> Iterator[LoopTable]:
    """All loops of order ``1..n_max`` in scan order."""
    _check_order(n_max, False)
    for n in range(1, n_max + 1):
        yield from enumerate_loops(n, filters)


@dataclass
class EnumerationJob:
    n: int
    filters: list[Predicate] = field(default_factory=list)
    emit: Callable[[LoopTable], None] | None = None
    generated: int = 0
    passing: int = 0

    def run(self, force: bool = False) -> list[LoopTable]:
        _check_order(self.n, force)
        kept = []
        for rows in _raw_tables(self.n):
            self.generated += 1
            L = LoopTable(self.n, rows, f"n{self.n}-{self.generated - 1}")
            if all(f(L) for f in self.filters):
                self.passing += 1
                if self.emit is not None:
                    self.emit(L)
                else:
                    kept.append(L)
        return kept
