"""Generalized-wheel containment, maximum clique and exact chromatic number."""

from __future__ import annotations

from dataclasses import dataclass

from wheelturan.errors import CapacityExceeded, InvalidParameter
from wheelturan.graph import Graph, bits, join, make_clique, make_cycle

MAX_CHROMATIC_ORDER = 32


@dataclass(frozen=True)
class WheelSpec:
    """The pattern K_m + C_t: an ``m``-clique hub joined to a ``t``-cycle."""

    m: int
    t: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise InvalidParameter(f"hub size m must be >= 0, got {self.m}")
        if self.t < 3:
            raise InvalidParameter(f"cycle length t must be >= 3, got {self.t}")

    @property
    def k(self) -> int | None:
        return (self.t + 1) // 2 if self.t % 2 else None

    @property
    def order(self) -> int:
        return self.m + self.t

    def pattern(self) -> Graph:
        return join(make_clique(self.m), make_cycle(self.t))


@dataclass(frozen=True)
class WheelWitness:
    hub: tuple[int, ...]
    cycle: tuple[int, ...]

    def verify(self, g: Graph, spec: WheelSpec) -> bool:
        """Check every required adjacency of the embedded copy against ``g``."""
        hub, cycle = self.hub, self.cycle
        if len(hub) != spec.m or len(cycle) != spec.t:
            return False
        used = hub + cycle
        if len(set(used)) != len(used) or not all(0 <= v < g.order for v in used):
            return False
        for i, u in enumerate(hub):
            if any(not g.has_edge(u, w) for w in hub[i + 1:]):
                return False
            if any(not g.has_edge(u, w) for w in cycle):
                return False
        t = len(cycle)
        return all(g.has_edge(cycle[i], cycle[(i + 1) % t]) for i in range(t))

    def to_json(self) -> dict:
        return {"hub": list(self.hub), "cycle": list(self.cycle)}


def _find_clique(adj, cand: int, size: int) -> list[int] | None:
    """Some clique of exactly ``size`` vertices inside ``cand``, smallest-first."""
    if size == 0:
        return []
    if cand.bit_count() < size:
        return None
    while cand:
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        if size == 1:
            return [v]
        rest = _find_clique(adj, cand & adj[v], size - 1)
        if rest is not None:
            return [v] + rest
        if cand.bit_count() < size:
            return None
    return None


def _distances_to(adj, start: int, allowed: int) -> dict[int, int]:
    dist = {start: 0}
    frontier = 1 << start
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        for v in bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def find_cycle(adj, allowed: int, t: int) -> list[int] | None:
    """A cycle on exactly ``t`` vertices of ``allowed`` (not necessarily induced).

    The start is the cycle's smallest vertex and the orientation has
    ``cycle[1] > cycle[-1]``, so each cycle is met once.  A partial path is cut
    when its endpoint is further (by BFS) from the start than the remaining
    number of edges.
    """
    if allowed.bit_count() < t:
        return None
    remaining_set = allowed
    while remaining_set.bit_count() >= t:
        s = (remaining_set & -remaining_set).bit_length() - 1
        avail = remaining_set
        remaining_set &= remaining_set - 1
        # Vertices with fewer than two neighbours in play can never lie on a cycle.
        changed = True
        while changed:
            changed = False
            for v in bits(avail):
                if (adj[v] & avail).bit_count() < 2:
                    avail &= ~(1 << v)
                    changed = True
        if not avail >> s & 1 or avail.bit_count() < t:
            continue
        dist = _distances_to(adj, s, avail)
        path = [s]
        found = _extend(adj, avail & ~(1 << s), dist, path, t, s)
        if found:
            return path
    return None


def _extend(adj, free: int, dist: dict[int, int], path: list[int], t: int, s: int) -> bool:
    x = path[-1]
    d = len(path)
    if d == t:
        return bool(adj[x] >> s & 1) and path[1] > path[-1]
    # After this step the path has d+1 vertices; closing needs t-d more edges.
    budget = t - d
    for y in bits(adj[x] & free):
        dy = dist.get(y)
        if dy is None or dy > budget:
            continue
        path.append(y)
        if _extend(adj, free & ~(1 << y), dist, path, t, s):
            return True
        path.pop()
    return False


def _hub_search(adj, cand: int, hub: list[int], m: int, t: int) -> tuple[list[int], list[int]] | None:
    # ``cand`` is the common neighbourhood of ``hub`` restricted to later vertices;
    # the cycle may use any common neighbour, so it is recomputed at the leaf.
    if len(hub) == m:
        common = -1
        for h in hub:
            common &= adj[h]
        cycle = find_cycle(adj, common & ((1 << len(adj)) - 1), t)
        return (hub, cycle) if cycle is not None else None
    need = m - len(hub)
    while cand.bit_count() >= need:
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        common = -1
        for h in hub:
            common &= adj[h]
        common &= adj[v] & ((1 << len(adj)) - 1)
        if common.bit_count() < t + need - 1:
            continue
        found = _hub_search(adj, cand & adj[v], hub + [v], m, t)
        if found is not None:
            return found
    return None


def contains_wheel(g: Graph, spec: WheelSpec) -> WheelWitness | None:
    """A copy of K_m + C_t in ``g`` as a subgraph, or ``None``."""
    m, t = spec.m, spec.t
    if g.order < m + t:
        return None
    adj = g.adj
    if t == 3:
        clique = _find_clique(adj, g.vertex_mask, m + 3)
        if clique is None:
            return None
        return WheelWitness(tuple(clique[:m]), tuple(clique[m:]))
    if m == 0:
        cycle = find_cycle(adj, g.vertex_mask, t)
        return WheelWitness((), tuple(cycle)) if cycle is not None else None
    # A hub vertex is adjacent to the other m-1 hub vertices and all t cycle vertices.
    min_deg = m + t - 1
    cand = 0
    for v in range(g.order):
        if adj[v].bit_count() >= min_deg:
            cand |= 1 << v
    found = _hub_search(adj, cand, [], m, t)
    if found is None:
        return None
    return WheelWitness(tuple(found[0]), tuple(found[1]))


def is_wheel_free(g: Graph, spec: WheelSpec) -> bool:
    return contains_wheel(g, spec) is None


def _iter_cliques(adj, cand: int, size: int):
    """Every ``size``-clique inside ``cand`` as an increasing list."""
    if size == 0:
        yield []
        return
    while cand.bit_count() >= size:
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        for rest in _iter_cliques(adj, cand & adj[v], size - 1):
            yield [v] + rest


def _close_path(adj, free: int, path: list[int], t: int) -> bool:
    """Extend ``path`` to ``t`` vertices inside ``free`` and close it to ``path[0]``."""
    s = path[0]
    dist = _distances_to(adj, s, free | (1 << s))

    def go(free: int) -> bool:
        x = path[-1]
        d = len(path)
        if d == t:
            return bool(adj[x] >> s & 1)
        budget = t - d
        for y in bits(adj[x] & free):
            dy = dist.get(y)
            if dy is None or dy > budget:
                continue
            path.append(y)
            if go(free & ~(1 << y)):
                return True
            path.pop()
        return False

    return go(free)


def contains_wheel_through(g: Graph, spec: WheelSpec, u: int, v: int) -> WheelWitness | None:
    """A copy of K_m + C_t that uses the edge ``uv`` of ``g``, or ``None``.

    When ``g - uv`` is wheel-free this decides containment for ``g`` itself,
    which is how the local search checks a single added edge.
    """
    m, t = spec.m, spec.t
    adj = g.adj
    if not g.has_edge(u, v) or g.order < m + t:
        return None
    full = g.vertex_mask
    both = adj[u] & adj[v]
    if t == 3:
        rest = _find_clique(adj, both, m + 1)
        if rest is None:
            return None
        clique = sorted([u, v] + rest)
        return WheelWitness(tuple(clique[:m]), tuple(clique[m:]))

    def common_of(hub: list[int]) -> int:
        c = full
        for h in hub:
            c &= adj[h]
        return c

    # u and v both in the hub.
    if m >= 2:
        for extra in _iter_cliques(adj, both, m - 2):
            hub = sorted([u, v] + extra)
            cycle = find_cycle(adj, common_of(hub), t)
            if cycle is not None:
                return WheelWitness(tuple(hub), tuple(cycle))
    # One endpoint in the hub, the other on the cycle.
    if m >= 1:
        for a, b in ((u, v), (v, u)):
            for extra in _iter_cliques(adj, both, m - 1):
                hub = sorted([a] + extra)
                common = common_of(hub)
                path = [b]
                if _close_path(adj, common & ~(1 << b), path, t):
                    return WheelWitness(tuple(hub), tuple(path))
    # uv is a cycle edge; the hub lies in the common neighbourhood of u and v.
    for hub in _iter_cliques(adj, both, m):
        common = common_of(hub)
        path = [u, v]
        if _close_path(adj, common & ~(1 << u) & ~(1 << v), path, t):
            return WheelWitness(tuple(hub), tuple(path))
    return None


# -- cliques and colouring ---------------------------------------------------


def _greedy_color_bound(adj, cand: int) -> tuple[list[int], list[int]]:
    """Vertices of ``cand`` with greedy colour numbers, in non-decreasing colour order."""
    order: list[int] = []
    colors: list[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique(g: Graph) -> list[int]:
    """A maximum clique, by branch and bound with a greedy-colouring bound."""
    adj = g.adj
    best: list[int] = []

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        order, colors = _greedy_color_bound(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + colors[i] <= len(best):
                return
            v = order[i]
            new_cand = cand & adj[v]
            current.append(v)
            if new_cand:
                expand(current, new_cand)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    if g.order:
        expand([], g.vertex_mask)
    return sorted(best)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last elimination order, reversed (so dense cores come first)."""
    alive = g.vertex_mask
    adj = g.adj
    removed: list[int] = []
    while alive:
        v = min(bits(alive), key=lambda u: ((adj[u] & alive).bit_count(), u))
        removed.append(v)
        alive &= ~(1 << v)
    removed.reverse()
    return removed


def greedy_coloring(g: Graph, order: list[int] | None = None) -> list[int]:
    """Colour each vertex (0-based) with the smallest colour free among earlier neighbours."""
    if order is None:
        order = degeneracy_order(g)
    color = [-1] * g.order
    for v in order:
        used = {color[u] for u in bits(g.adj[v]) if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def _colorable(adj, order: list[int], k: int) -> list[int] | None:
    n = len(adj)
    color = [-1] * n
    # used[c] = bitmask of vertices already given colour c
    used = [0] * k

    def dfs(i: int, n_used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        nb = adj[v]
        for c in range(min(n_used + 1, k)):
            if used[c] & nb:
                continue
            color[v] = c
            used[c] |= 1 << v
            if dfs(i + 1, max(n_used, c + 1)):
                return True
            used[c] &= ~(1 << v)
        color[v] = -1
        return False

    return color if dfs(0, 0) else None


def chromatic_number(g: Graph) -> int:
    if g.order > MAX_CHROMATIC_ORDER:
        raise CapacityExceeded(
            f"exact chromatic number limited to order {MAX_CHROMATIC_ORDER}, got {g.order}"
        )
    if g.order == 0:
        return 0
    lower = clique_number(g)
    order = degeneracy_order(g)
    upper = max(greedy_coloring(g, order)) + 1
    for k in range(lower, upper):
        if _colorable(g.adj, order, k) is not None:
            return k
    return upper


def find_critical_edge(spec: WheelSpec) -> tuple[int, int]:
    """An edge of K_m + C_t whose deletion drops the chromatic number to m + 2.

    Labelling follows ``join``: hub vertices ``0..m-1``, cycle ``m..m+t-1``.
    Cycle edges are tried first, then hub-cycle, then hub-hub edges.
    """
    if spec.t % 2 == 0:
        raise InvalidParameter(f"cycle length must be odd, got {spec.t}")
    if spec.order > MAX_CHROMATIC_ORDER:
        raise CapacityExceeded(f"pattern order {spec.order} exceeds {MAX_CHROMATIC_ORDER}")
    h = spec.pattern()
    m = spec.m
    cycle_edges = [(u, v) for u, v in h.edges() if u >= m]
    hub_cycle = [(u, v) for u, v in h.edges() if u < m <= v]
    hub_hub = [(u, v) for u, v in h.edges() if v < m]
    for e in cycle_edges + hub_cycle + hub_hub:
        if chromatic_number(h.without_edge(*e)) == m + 2:
            return e
    raise InvalidParameter(f"no critical edge found for {spec}")
