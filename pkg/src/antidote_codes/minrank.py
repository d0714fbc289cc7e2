"""Exact GF(2) minrank of a side-information graph, and edge criticality.

A matrix fits the graph when its diagonal is all ones and every other 1
sits on an edge. The search fills rows top-down, trying the free entries of
each row left to right with 0 before 1, and abandons a branch as soon as the
rows placed so far already span as many dimensions as the best matrix found.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .gf2 import BitMatrix, DimensionError, XorBasis
from .model import ProblemSpec

DEFAULT_MAX_EDGES = 26
DEFAULT_MAX_NODES = 1 << 26


class SearchInconclusive(RuntimeError):
    """The search bounds were hit before the minimum was certified."""


@dataclass(frozen=True)
class MinrankResult:
    value: int
    witness: BitMatrix
    explored: int


@dataclass(frozen=True)
class CriticalityResult:
    minrank: int
    # edge -> minrank of the graph with that edge removed
    without: Dict[Tuple[int, int], int]

    def is_edge_critical(self, i: int, j: int) -> bool:
        return self.without[(i, j)] > self.minrank

    @property
    def critical(self) -> bool:
        return all(v > self.minrank for v in self.without.values())


def fits(a: BitMatrix, g: ProblemSpec) -> bool:
    if a.shape != (g.K, g.K):
        raise DimensionError(f"matrix is {a.nrows}x{a.ncols}, graph has K={g.K}")
    for i, row in enumerate(a.row_bits, start=1):
        diag = 1 << (i - 1)
        if not row & diag:
            return False
        allowed = diag
        for j in g.antidotes_of(i):
            allowed |= 1 << (j - 1)
        if row & ~allowed:
            return False
    return True


def _row_choices(g: ProblemSpec, i: int) -> List[int]:
    """All fitting contents of row ``i`` in search order.

    Free entries are read left to right as binary digits, most significant
    first, so counting upward visits the 0 branch before the 1 branch at
    every entry.
    """
    free = sorted(g.antidotes_of(i))
    diag = 1 << (i - 1)
    out = []
    d = len(free)
    for code in range(1 << d):
        row = diag
        for e, j in enumerate(free):
            if (code >> (d - 1 - e)) & 1:
                row |= 1 << (j - 1)
        out.append(row)
    return out


def _acyclic_lower_bound(cand: int, out_mask: List[int], in_mask: List[int]) -> int:
    """Size of an acyclic induced subgraph inside the vertex set ``cand``.

    Sinks and sources of what is left are peeled into the set; when none
    remain, the busiest vertex is discarded. A vertex that joins is never
    the first of a cycle to leave, so the peeled set has no cycle.
    """
    size = 0
    while cand:
        peeled = False
        v_bits = cand
        while v_bits:
            low = v_bits & -v_bits
            v_bits ^= low
            v = low.bit_length() - 1
            if not (out_mask[v] & cand) or not (in_mask[v] & cand):
                cand ^= low
                size += 1
                peeled = True
        if not peeled:
            worst, worst_deg = 0, -1
            v_bits = cand
            while v_bits:
                low = v_bits & -v_bits
                v_bits ^= low
                v = low.bit_length() - 1
                deg = (out_mask[v] & cand).bit_count() + (in_mask[v] & cand).bit_count()
                if deg > worst_deg:
                    worst, worst_deg = low, deg
            cand ^= worst
    return size


def minrank(g: ProblemSpec, max_edges: int = DEFAULT_MAX_EDGES, max_nodes: int = DEFAULT_MAX_NODES) -> MinrankResult:
    """Minimum GF(2) rank over matrices fitting ``g``, with the first witness found.

    Pruning uses ``rank(placed rows) + |T|`` where ``T`` is an acyclic set of
    unplaced rows whose diagonal columns are still zero in every placed row:
    the fitting matrix is block triangular there, so that much rank is forced.

    Raises :class:`SearchInconclusive` if ``g`` has more than ``max_edges``
    edges or the search visits more than ``max_nodes`` partial matrices.
    """
    if g.num_edges > max_edges:
        raise SearchInconclusive(f"graph has {g.num_edges} edges, limit is {max_edges}")
    K = g.K
    choices = [_row_choices(g, i) for i in range(1, K + 1)]
    out_mask = [0] * K
    in_mask = [0] * K
    for i, j in g.edges():
        out_mask[i - 1] |= 1 << (j - 1)
        in_mask[j - 1] |= 1 << (i - 1)
    full = (1 << K) - 1
    basis = XorBasis(K)
    rows = [0] * K
    best = K + 1
    best_rows: List[int] = []
    nodes = 0

    def descend(i: int, r: int, used: int) -> None:
        nonlocal best, best_rows, nodes
        if i == K:
            if r < best:
                best = r
                best_rows = rows[:]
            return
        rest = full ^ ((1 << i) - 1)
        for row in choices[i]:
            nodes += 1
            if nodes > max_nodes:
                raise SearchInconclusive(f"node budget {max_nodes} exhausted")
            grew = basis.push(row)
            r2 = r + grew
            if r2 < best:
                used2 = used | row
                cand = rest & ~(1 << i) & ~used2
                if r2 + _acyclic_lower_bound(cand, out_mask, in_mask) < best:
                    rows[i] = row
                    descend(i + 1, r2, used2)
            basis.pop()

    descend(0, 0, 0)
    return MinrankResult(best, BitMatrix(K, K, best_rows), nodes)


def is_critical(g: ProblemSpec, max_edges: int = DEFAULT_MAX_EDGES, max_nodes: int = DEFAULT_MAX_NODES) -> CriticalityResult:
    """Minrank with each edge removed in turn.

    An edge is critical when dropping it strictly raises the minrank. A graph
    with no edges is vacuously critical.
    """
    base = minrank(g, max_edges, max_nodes).value
    without = {}
    for i, j in g.edges():
        without[(i, j)] = minrank(g.without_edge(i, j), max_edges, max_nodes).value
    return CriticalityResult(base, without)
