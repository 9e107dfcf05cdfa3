"""Canonical labelling, isomorphism testing and isomorph-free generation.

The canonical code of a graph is the largest column-major upper-triangle
bitstring (the graph6 bit order, first bit most significant) over the
labellings reached by an individualise-and-refine search:

* the unit partition is refined to an equitable ordered partition, cells
  split by neighbour counts in ascending order;
* the first non-singleton cell is branched on, one vertex at a time;
* twins (``N(u) - v == N(v) - u``) in the branching cell are explored once,
  since swapping them is an automorphism fixing the current node;
* a node whose fixed leading columns already lose to the best leaf is cut.

Because refinement commutes with relabelling, the maximum is a function of
the isomorphism class only.

Generation is vertex-by-vertex canonical augmentation: a graph ``H`` on
``j + 1`` vertices is accepted from parent ``P`` when ``H - new_vertex`` is
isomorphic to ``H - c(H)``, where ``c(H)`` is the first vertex in canonical
order among the last cell of ``H``'s refined unit partition.  Children of one
parent are deduplicated by canonical code, so each class occurs once.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable
from dataclasses import dataclass
from itertools import combinations

from wheelturan.errors import CapacityExceeded
from wheelturan.graph import Graph, bits, encode_graph6

MAX_ENUM_ORDER = 10


@dataclass(frozen=True, order=True)
class CanonicalForm:
    order: int
    bits: int

    def graph(self) -> Graph:
        """The canonically labelled representative."""
        n = self.order
        nbits = n * (n - 1) // 2
        adj = [0] * n
        k = nbits - 1
        for j in range(1, n):
            for i in range(j):
                if self.bits >> k & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                k -= 1
        return Graph._trusted(n, tuple(adj))

    def graph6(self) -> str:
        return encode_graph6(self.graph())


def refine(adj: tuple[int, ...] | list[int], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition given as cell bitmasks."""
    queue = deque(cells)
    n_cells = len(cells)
    n = len(adj)
    while queue and n_cells < n:
        w = queue.popleft()
        out = []
        for c in cells:
            if not c & (c - 1):
                out.append(c)
                continue
            groups: dict[int, int] = {}
            for v in bits(c):
                k = (adj[v] & w).bit_count()
                groups[k] = groups.get(k, 0) | (1 << v)
            if len(groups) == 1:
                out.append(c)
                continue
            pieces = [groups[k] for k in sorted(groups)]
            out.extend(pieces)
            queue.extend(pieces)
            n_cells += len(pieces) - 1
        cells = out
    return cells


def _code(adj, lab: list[int], upto: int) -> int:
    """Column-major bits of columns ``1..upto-1`` under labelling ``lab``."""
    code = 0
    for j in range(1, upto):
        col = adj[lab[j]]
        for i in range(j):
            code = (code << 1) | (col >> lab[i] & 1)
    return code


def _twin_classes(adj) -> list[int]:
    """``rep[v]`` = smallest vertex that is a twin of ``v`` (or ``v`` itself)."""
    n = len(adj)
    rep = list(range(n))
    for v in range(n):
        if rep[v] != v:
            continue
        bv = 1 << v
        for u in range(v + 1, n):
            if rep[u] == u and adj[v] & ~(1 << u) == adj[u] & ~bv:
                rep[u] = v
    return rep


class _Canon:
    __slots__ = ("adj", "n", "nbits", "twin", "best", "best_lab")

    def __init__(self, adj) -> None:
        self.adj = adj
        self.n = len(adj)
        self.nbits = self.n * (self.n - 1) // 2
        self.twin = _twin_classes(adj)
        self.best = -1
        self.best_lab: list[int] = []

    def run(self, cells: list[int]) -> None:
        cells = refine(self.adj, cells)
        lab = []
        fixed = 0
        target = -1
        for idx, c in enumerate(cells):
            if c & (c - 1):
                if target < 0:
                    target = idx
            elif target < 0:
                lab.append(c.bit_length() - 1)
                fixed += 1
        if target < 0:
            code = _code(self.adj, lab, self.n)
            if code > self.best:
                self.best = code
                self.best_lab = lab
            return
        if self.best >= 0 and fixed > 1:
            shift = self.nbits - fixed * (fixed - 1) // 2
            prefix = _code(self.adj, lab, fixed)
            if prefix < self.best >> shift:
                return
        cell = cells[target]
        seen = 0
        for v in bits(cell):
            r = self.twin[v]
            if seen >> r & 1:
                continue
            seen |= 1 << r
            self.run(cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1:])


def canonical_labeling(g: Graph) -> tuple[CanonicalForm, list[int]]:
    """Canonical form plus ``lab`` with ``lab[position] = vertex``."""
    n = g.order
    if n <= 1:
        return CanonicalForm(n, 0), list(range(n))
    c = _Canon(g.adj)
    c.run([g.vertex_mask])
    return CanonicalForm(n, c.best), c.best_lab


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def canonical_graph6(g: Graph) -> str:
    return canonical_form(g).graph6()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    if sorted(map(int.bit_count, g.adj)) != sorted(map(int.bit_count, h.adj)):
        return False
    return canonical_form(g) == canonical_form(h)


# -- generation --------------------------------------------------------------


def _edge_slack(n: int, j: int) -> int:
    """Most edges that vertices ``j..n-1`` can still contribute."""
    rest = n - j
    return rest * (rest - 1) // 2 + rest * j


def _children(
    parent: Graph,
    parent_cf: CanonicalForm,
    n: int,
    min_edges: int,
    prune: Callable[[Graph], bool] | None,
):
    """Yield ``(child, child_cf)`` for each accepted, non-isomorphic child."""
    j = parent.order
    adj = parent.adj
    delta = parent.max_degree()
    lo = max(delta, min_edges - parent.size - _edge_slack(n, j + 1))
    new_bit = 1 << j
    seen: set[int] = set()
    for size in range(max(lo, 0), j + 1):
        for subset in combinations(range(j), size):
            s = 0
            for u in subset:
                s |= 1 << u
            # The new vertex must reach the maximum degree of the child.
            if any((adj[u] | new_bit).bit_count() > size for u in subset):
                continue
            child_adj = list(adj)
            for u in subset:
                child_adj[u] |= new_bit
            child_adj.append(s)
            child_adj = tuple(child_adj)
            cells = refine(child_adj, [(new_bit << 1) - 1])
            last = cells[-1]
            if not last >> j & 1:
                continue
            child = Graph._trusted(j + 1, child_adj, parent.size + size)
            if prune is not None and prune(child):
                continue
            cf, lab = canonical_labeling(child)
            if cf.bits in seen:
                continue
            if last != new_bit:
                c = next(v for v in lab if last >> v & 1)
                if c != j and child_adj[c] & ~new_bit != s & ~(1 << c):
                    if canonical_form(child.delete_vertex(c)) != parent_cf:
                        continue
            seen.add(cf.bits)
            yield child, cf


def _root() -> tuple[Graph, CanonicalForm]:
    return Graph._trusted(1, (0,), 0), CanonicalForm(1, 0)


def iter_classes(
    n: int,
    min_edges: int | Callable[[], int] = 0,
    prune: Callable[[Graph], bool] | None = None,
    start: tuple[Graph, CanonicalForm] | None = None,
):
    """Yield one representative per isomorphism class on ``n`` vertices.

    ``min_edges`` may be a callable, re-read at every node, so callers can
    raise the bound as the search proceeds.  ``prune`` must be hereditary
    (true for ``G`` implies true for every supergraph on more vertices): a
    pruned node's subtree is skipped.
    """
    bound = min_edges if callable(min_edges) else (lambda: min_edges)
    if n == 0:
        if bound() <= 0:
            yield Graph(0)
        return
    root = start if start is not None else _root()
    if root[0].order > n:
        return
    if prune is not None and prune(root[0]):
        return
    stack = [root]
    while stack:
        g, cf = stack.pop()
        if g.size + _edge_slack(n, g.order) < bound():
            continue
        if g.order == n:
            yield g
            continue
        kids = list(_children(g, cf, n, bound(), prune))
        stack.extend(reversed(kids))


def classes_at(
    level: int,
    n: int,
    min_edges: int = 0,
    prune: Callable[[Graph], bool] | None = None,
) -> list[tuple[Graph, CanonicalForm]]:
    """All surviving augmentation-tree nodes at ``level`` (for splitting work)."""
    out = []
    for g in iter_classes(level, lambda: min_edges - _edge_slack(n, level), prune):
        out.append((g, canonical_form(g)))
    return out


def enumerate_graphs(
    n: int,
    min_edges: int,
    visitor: Callable[[Graph], object],
    *,
    allow_large: bool = False,
) -> int:
    """Call ``visitor`` once per isomorphism class with at least ``min_edges`` edges."""
    if n < 0:
        raise CapacityExceeded(f"order must be >= 0, got {n}")
    if n > MAX_ENUM_ORDER and not allow_large:
        raise CapacityExceeded(
            f"exhaustive enumeration refused for n={n} > {MAX_ENUM_ORDER}; pass allow_large"
        )
    count = 0
    for g in iter_classes(n, min_edges):
        visitor(g)
        count += 1
    return count
