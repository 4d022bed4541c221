"""Ground-truth exact minimum-imbalance search over all orderings of small graphs.

The search walks the permutation tree in lexicographic vertex order, so the
first optimum found is the lexicographically smallest one. Once a vertex is
placed, every neighbor placed later sits to its right, so its imbalance is
final at placement time; the branch-and-bound lower bound is the partial sum
plus one per odd-degree unplaced vertex (imbalance parity equals degree
parity). Pruning with that bound cannot change the minimum or the witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeCapExceededError
from .graph import Graph, Ordering

__all__ = ["OracleResult", "brute_force_min", "enumerate_optima", "DEFAULT_CAP"]

DEFAULT_CAP = 10


@dataclass(frozen=True)
class OracleResult:
    minimum: int
    witness: Ordering
    optima_count: int | None = None


def _bit_tables(g: Graph) -> tuple[list[str], list[int], list[int]]:
    verts = sorted(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for i, v in enumerate(verts):
        mask = 0
        for u in g.neighbors(v):
            mask |= 1 << index[u]
        adj[i] = mask
    deg = [m.bit_count() for m in adj]
    return verts, adj, deg


def _check_cap(g: Graph, cap: int) -> None:
    if g.vertex_count > cap:
        raise SizeCapExceededError(
            f"{g.vertex_count} vertices exceeds the search cap of {cap}"
        )


def _min_search(adj: list[int], deg: list[int], prune: bool) -> tuple[int, tuple[int, ...]]:
    n = len(adj)
    odd = [d & 1 for d in deg]
    full = (1 << n) - 1
    best_value: int | None = None
    best_path: tuple[int, ...] = ()
    path: list[int] = []

    def rec(mask: int, partial: int, odd_left: int) -> None:
        nonlocal best_value, best_path
        if mask == full:
            if best_value is None or partial < best_value:
                best_value = partial
                best_path = tuple(path)
            return
        for i in range(n):
            bit = 1 << i
            if mask & bit:
                continue
            left = (adj[i] & mask).bit_count()
            cost = partial + abs(2 * left - deg[i])
            rest = odd_left - odd[i]
            if prune and best_value is not None and cost + rest >= best_value:
                continue
            path.append(i)
            rec(mask | bit, cost, rest)
            path.pop()

    rec(0, 0, sum(odd))
    assert best_value is not None
    return best_value, best_path


def _enumerate_at(adj: list[int], deg: list[int], target: int) -> list[tuple[int, ...]]:
    n = len(adj)
    odd = [d & 1 for d in deg]
    full = (1 << n) - 1
    found: list[tuple[int, ...]] = []
    path: list[int] = []

    def rec(mask: int, partial: int, odd_left: int) -> None:
        if mask == full:
            if partial == target:
                found.append(tuple(path))
            return
        for i in range(n):
            bit = 1 << i
            if mask & bit:
                continue
            left = (adj[i] & mask).bit_count()
            cost = partial + abs(2 * left - deg[i])
            if cost + (odd_left - odd[i]) > target:
                continue
            path.append(i)
            rec(mask | bit, cost, odd_left - odd[i])
            path.pop()

    rec(0, 0, sum(odd))
    return found


def brute_force_min(
    g: Graph,
    cap: int = DEFAULT_CAP,
    prune: bool = True,
    count_optima: bool = False,
) -> OracleResult:
    """Exact minimum imbalance with the lexicographically smallest witness."""
    _check_cap(g, cap)
    verts, adj, deg = _bit_tables(g)
    value, indices = _min_search(adj, deg, prune)
    witness = Ordering(verts[i] for i in indices)
    count = len(_enumerate_at(adj, deg, value)) if count_optima else None
    return OracleResult(minimum=value, witness=witness, optima_count=count)


def enumerate_optima(g: Graph, cap: int = DEFAULT_CAP) -> list[Ordering]:
    """All minimum-imbalance orderings, in lexicographic order."""
    _check_cap(g, cap)
    verts, adj, deg = _bit_tables(g)
    value, _ = _min_search(adj, deg, prune=True)
    return [Ordering(verts[i] for i in p) for p in _enumerate_at(adj, deg, value)]
