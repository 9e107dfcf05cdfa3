"""Bitset simple graphs, standard constructors and the graph6 codec.

Vertices are the integers ``0..n-1`` and ``adj[v]`` is an ``int`` whose set
bits are the neighbours of ``v``.  Constructors fix their labelling:

* ``make_cycle(t)`` visits ``0, 1, ..., t-1`` in circular order;
* ``make_complete_multipartite`` places the parts contiguously, in the given order;
* ``join(g, h)`` keeps ``g``'s vertices first and shifts ``h``'s by ``g.order``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from wheelturan.errors import CapacityExceeded, Graph6ParseError, InvalidParameter

MAX_ORDER = 64

_GRAPH6_HEADER = ">>graph6<<"


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple undirected graph on at most 64 vertices."""

    __slots__ = ("_order", "_adj", "_size")

    def __init__(self, order: int, adj: Sequence[int] | None = None) -> None:
        if not 0 <= order <= MAX_ORDER:
            raise CapacityExceeded(f"order {order} outside 0..{MAX_ORDER}")
        if adj is None:
            adj = (0,) * order
        adj = tuple(adj)
        if len(adj) != order:
            raise InvalidParameter(f"expected {order} neighbour sets, got {len(adj)}")
        full = (1 << order) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise InvalidParameter(f"vertex {v} has a neighbour outside 0..{order - 1}")
            if nb >> v & 1:
                raise InvalidParameter(f"loop at vertex {v}")
            for u in bits(nb):
                if not adj[u] >> v & 1:
                    raise InvalidParameter(f"asymmetric adjacency between {v} and {u}")
        self._order = order
        self._adj = adj
        self._size = sum(nb.bit_count() for nb in adj) // 2

    @classmethod
    def _trusted(cls, order: int, adj: tuple[int, ...], size: int | None = None) -> Graph:
        # Skips validation; internal callers guarantee the invariants.
        g = object.__new__(cls)
        g._order = order
        g._adj = adj
        g._size = sum(nb.bit_count() for nb in adj) // 2 if size is None else size
        return g

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= order <= MAX_ORDER:
            raise CapacityExceeded(f"order {order} outside 0..{MAX_ORDER}")
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise InvalidParameter(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidParameter(f"edge ({u}, {v}) outside 0..{order - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(order, tuple(adj))

    @property
    def order(self) -> int:
        return self._order

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def size(self) -> int:
        """Number of edges e(G)."""
        return self._size

    @property
    def vertex_mask(self) -> int:
        return (1 << self._order) - 1

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def max_degree(self) -> int:
        return max((nb.bit_count() for nb in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nb in enumerate(self._adj):
            yield from ((u, v) for v in bits(nb >> (u + 1) << (u + 1)))

    def non_edges(self) -> Iterator[tuple[int, int]]:
        full = self.vertex_mask
        for u, nb in enumerate(self._adj):
            rest = full & ~nb & ~((1 << (u + 1)) - 1)
            yield from ((u, v) for v in bits(rest))

    def with_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise InvalidParameter(f"loop at vertex {u}")
        if self.has_edge(u, v):
            return self
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self._order, tuple(adj), self._size + 1)

    def without_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            return self
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self._order, tuple(adj), self._size - 1)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        n = self._order
        if sorted(perm) != list(range(n)):
            raise InvalidParameter("perm is not a permutation of the vertices")
        adj = [0] * n
        for v, nb in enumerate(self._adj):
            adj[perm[v]] = mask_of(perm[u] for u in bits(nb))
        return Graph._trusted(n, tuple(adj), self._size)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, vertex ``vertices[i]`` becoming ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            adj.append(mask_of(index[u] for u in bits(self._adj[v]) if u in index))
        return Graph._trusted(len(vertices), tuple(adj))

    def delete_vertex(self, v: int) -> Graph:
        return self.induced([u for u in range(self._order) if u != v])

    def complement(self) -> Graph:
        full = self.vertex_mask
        adj = tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(self._adj))
        return Graph._trusted(self._order, adj)

    def validate(self) -> None:
        """Re-check the structural invariants; raises on violation."""
        Graph(self._order, self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._order, self._adj))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, size={self._size}, g6={encode_graph6(self)!r})"


class GraphBuilder:
    """Mutable edge-flip facet used by the search engines; single owner only."""

    __slots__ = ("order", "adj", "size")

    def __init__(self, g: Graph | int) -> None:
        if isinstance(g, Graph):
            self.order = g.order
            self.adj = list(g.adj)
            self.size = g.size
        else:
            if not 0 <= g <= MAX_ORDER:
                raise CapacityExceeded(f"order {g} outside 0..{MAX_ORDER}")
            self.order = g
            self.adj = [0] * g
            self.size = 0

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def add_edge(self, u: int, v: int) -> None:
        if u == v or self.has_edge(u, v):
            raise InvalidParameter(f"cannot add edge ({u}, {v})")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u
        self.size += 1

    def remove_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise InvalidParameter(f"no edge ({u}, {v})")
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)
        self.size -= 1

    def freeze(self) -> Graph:
        return Graph._trusted(self.order, tuple(self.adj), self.size)


def make_cycle(t: int) -> Graph:
    if not 3 <= t <= MAX_ORDER:
        raise InvalidParameter(f"cycle length must be in 3..{MAX_ORDER}, got {t}")
    return Graph.from_edges(t, ((i, (i + 1) % t) for i in range(t)))


def make_clique(s: int) -> Graph:
    if s < 0 or s > MAX_ORDER:
        raise InvalidParameter(f"clique order must be in 0..{MAX_ORDER}, got {s}")
    full = (1 << s) - 1
    return Graph._trusted(s, tuple(full & ~(1 << v) for v in range(s)), s * (s - 1) // 2)


def join(g: Graph, h: Graph) -> Graph:
    """``g`` joined with ``h``: disjoint union plus every edge between them."""
    n = g.order + h.order
    if n > MAX_ORDER:
        raise CapacityExceeded(f"joined order {n} exceeds {MAX_ORDER}")
    shift = g.order
    g_mask = g.vertex_mask
    h_mask = h.vertex_mask << shift
    adj = [nb | h_mask for nb in g.adj] + [(nb << shift) | g_mask for nb in h.adj]
    return Graph._trusted(n, tuple(adj), g.size + h.size + g.order * h.order)


def balanced_parts(n: int, r: int) -> list[int]:
    """Split ``n`` into ``r`` non-increasing parts differing by at most one."""
    if r < 1:
        raise InvalidParameter(f"number of parts must be >= 1, got {r}")
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def make_complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts:
        raise InvalidParameter("parts must be non-empty")
    if any(p < 0 for p in parts):
        raise InvalidParameter(f"part sizes must be non-negative, got {list(parts)}")
    n = sum(parts)
    if n > MAX_ORDER:
        raise CapacityExceeded(f"order {n} exceeds {MAX_ORDER}")
    full = (1 << n) - 1
    adj = []
    start = 0
    for p in parts:
        own = ((1 << p) - 1) << start
        adj.extend([full & ~own] * p)
        start += p
    return Graph._trusted(n, tuple(adj))


def make_turan_graph(n: int, r: int) -> Graph:
    """The balanced complete ``r``-partite graph T_r(n)."""
    return make_complete_multipartite(balanced_parts(n, r))


def common_neighborhood(g: Graph, s: Iterable[int]) -> int:
    """Bitmask of vertices adjacent to every vertex of ``s`` (all vertices if ``s`` is empty)."""
    mask = g.vertex_mask
    for v in s:
        mask &= g.adj[v]
    return mask


# -- graph6 ------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    n = g.order
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(s: str) -> Graph:
    text = s.strip()
    base = len(s) - len(s.lstrip())
    if text.startswith(_GRAPH6_HEADER):
        base += len(_GRAPH6_HEADER)
        text = text[len(_GRAPH6_HEADER):]
    if not text:
        raise Graph6ParseError("empty graph6 string", base)
    data = []
    for i, ch in enumerate(text):
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise Graph6ParseError(f"byte {ch!r} outside graph6 range", base + i)
        data.append(c)
    if data[0] != 63:
        n, pos = data[0], 1
    else:
        if len(data) >= 2 and data[1] == 63:
            raise Graph6ParseError("order exceeds 258047", base + 1)
        if len(data) < 4:
            raise Graph6ParseError("truncated order field", base + len(data))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    if n > MAX_ORDER:
        raise Graph6ParseError(f"order {n} exceeds {MAX_ORDER}", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise Graph6ParseError(
            f"expected {nbytes} data bytes for order {n}, got {len(body)}",
            base + pos + min(len(body), nbytes),
        )
    pad = nbytes * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6ParseError("non-zero padding bits", base + pos + nbytes - 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph._trusted(n, tuple(adj))
