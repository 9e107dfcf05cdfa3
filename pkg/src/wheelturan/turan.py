"""Exact ex(n, K_m + C_t) by isomorph-free enumeration, and seeded lower bounds.

The exact engine walks the canonical-augmentation tree of ``iso`` with two
cuts: a node containing the wheel is dropped (containment is inherited by
every extension, and augmentation parents are induced subgraphs), and a node
that cannot reach the current best edge count is dropped.  The best value
starts at a wheel-free construction and rises as better graphs appear;
witnesses are kept only at the running maximum.
"""

from __future__ import annotations

import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from wheelturan.detect import WheelSpec, contains_wheel, contains_wheel_through
from wheelturan.errors import CapacityExceeded, InvalidParameter
from wheelturan.graph import Graph, GraphBuilder, decode_graph6, encode_graph6, make_turan_graph
from wheelturan.iso import MAX_ENUM_ORDER, canonical_form, classes_at, iter_classes

log = logging.getLogger(__name__)


@dataclass
class TuranResult:
    n: int
    spec: WheelSpec
    value: int
    witnesses: list[str]
    classes_visited: int
    elapsed: float = 0.0
    seed_value: int = 0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.spec.m,
            "t": self.spec.t,
            "value": self.value,
            "witnesses": list(self.witnesses),
            "witness_count": len(self.witnesses),
            "unique_extremal": len(self.witnesses) == 1,
            "classes_visited": self.classes_visited,
            "seed_value": self.seed_value,
        }


@dataclass
class SearchConfig:
    budget: int = 2000
    restarts: int = 10
    seed: int = 0
    target: int | None = None
    patience: int = 60

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise InvalidParameter(f"budget must be >= 1, got {self.budget}")
        if self.restarts < 1:
            raise InvalidParameter(f"restarts must be >= 1, got {self.restarts}")
        if self.patience < 1:
            raise InvalidParameter(f"patience must be >= 1, got {self.patience}")


@dataclass
class LowerBound:
    graph: Graph
    edges: int
    restart: int
    per_restart: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "edges": self.edges,
            "graph6": encode_graph6(self.graph),
            "best_restart": self.restart,
            "per_restart": list(self.per_restart),
        }


def construction(n: int, spec: WheelSpec) -> Graph:
    """A wheel-free starting graph: T_{m+2}(n) if it avoids the wheel, else T_{m+1}(n).

    T_{m+1}(n) never contains K_{m+2}, which sits inside every K_m + C_t.
    """
    g = make_turan_graph(n, spec.m + 2)
    if contains_wheel(g, spec) is None:
        return g
    return make_turan_graph(n, max(spec.m + 1, 1))


def _search_subtree(n, spec, seed_value, start):
    best = seed_value
    found: list[Graph] = []
    visited = 0

    def prune(g: Graph) -> bool:
        return contains_wheel(g, spec) is not None

    for g in iter_classes(n, lambda: best, prune, start=start):
        visited += 1
        if g.size > best:
            best = g.size
            found = [g]
        elif g.size == best:
            found.append(g)
    return best, found, visited


def _worker(args):
    n, m, t, seed_value, g6_adj = args
    g = decode_graph6(g6_adj)
    best, found, visited = _search_subtree(n, WheelSpec(m, t), seed_value, (g, canonical_form(g)))
    return best, [encode_graph6(w) for w in found], visited


def exact_turan(n: int, spec: WheelSpec, *, jobs: int = 1, allow_large: bool = False) -> TuranResult:
    """ex(n, K_m + C_t) with every extremal graph up to isomorphism."""
    if n < 1:
        raise InvalidParameter(f"n must be >= 1, got {n}")
    if n > MAX_ENUM_ORDER and not allow_large:
        raise CapacityExceeded(
            f"exact search refused for n={n} > {MAX_ENUM_ORDER}; pass allow_large"
        )
    t0 = time.perf_counter()
    seed_value = construction(n, spec).size
    if jobs <= 1 or n < 6:
        best, found, visited = _search_subtree(n, spec, seed_value, None)
    else:
        level = n - 3

        def prune(g: Graph) -> bool:
            return contains_wheel(g, spec) is not None

        roots = classes_at(level, n, seed_value, prune)
        tasks = [(n, spec.m, spec.t, seed_value, encode_graph6(g)) for g, _ in roots]
        best, found, visited = seed_value, [], 0
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for b, ws, v in pool.map(_worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs))):
                visited += v
                if b > best:
                    best, found = b, []
                if b == best:
                    found.extend(decode_graph6(w) for w in ws)
        found = [w for w in found if w.size == best]
    witnesses = sorted({canonical_form(w).graph6() for w in found})
    elapsed = time.perf_counter() - t0
    log.info("ex(%d, K_%d+C_%d) = %d, %d witness(es), %.2fs", n, spec.m, spec.t, best, len(witnesses), elapsed)
    return TuranResult(n, spec, best, witnesses, visited, elapsed, seed_value)


# -- local search ------------------------------------------------------------


def _random_free_graph(n: int, spec: WheelSpec, rng: random.Random) -> GraphBuilder:
    b = GraphBuilder(n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        b.add_edge(u, v)
        if contains_wheel_through(b.freeze(), spec, u, v) is not None:
            b.remove_edge(u, v)
    return b


def _climb(b: GraphBuilder, spec: WheelSpec, cfg: SearchConfig, rng: random.Random) -> Graph:
    n = b.order
    best = b.freeze()
    if n < 2:
        return best
    rejections = 0
    for _ in range(cfg.budget):
        if cfg.target is not None and best.size >= cfg.target:
            break
        non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not b.has_edge(u, v)]
        if not non_edges:
            break
        u, v = rng.choice(non_edges)
        b.add_edge(u, v)
        if contains_wheel_through(b.freeze(), spec, u, v) is None:
            rejections = 0
            if b.size > best.size:
                best = b.freeze()
            continue
        b.remove_edge(u, v)
        rejections += 1
        if rejections >= cfg.patience and b.size:
            # Plateau: trade a random edge for a random non-edge, same size.
            rejections = 0
            edges = [(x, y) for x in range(n) for y in range(x + 1, n) if b.has_edge(x, y)]
            x, y = rng.choice(edges)
            b.remove_edge(x, y)
            candidates = [e for e in non_edges if e != (u, v)] or [(x, y)]
            p, q = rng.choice(candidates)
            b.add_edge(p, q)
            if contains_wheel_through(b.freeze(), spec, p, q) is not None:
                b.remove_edge(p, q)
                b.add_edge(x, y)
    return best


def _restart(n: int, spec: WheelSpec, cfg: SearchConfig, r: int) -> Graph:
    rng = random.Random(f"{cfg.seed}/{r}")
    if r == 0:
        b = GraphBuilder(construction(n, spec))
    else:
        b = _random_free_graph(n, spec, rng)
    return _climb(b, spec, cfg, rng)


def _restart_task(args):
    n, m, t, cfg, r = args
    return encode_graph6(_restart(n, WheelSpec(m, t), cfg, r))


def heuristic_lower_bound(
    n: int, spec: WheelSpec, cfg: SearchConfig | None = None, *, jobs: int = 1
) -> LowerBound:
    """Best wheel-free graph found by seeded hill climbing; a certificate, never a claim of optimality.

    Restart 0 starts from the wheel-free construction, later restarts from
    random maximal wheel-free graphs.  Ties between restarts go to the lowest
    restart index.  Raises ``RuntimeError`` if the winner fails a fresh
    full detector check.
    """
    cfg = cfg or SearchConfig()
    if not 0 <= n <= 64:
        raise CapacityExceeded(f"order {n} outside 0..64")
    if jobs > 1 and cfg.restarts > 1:
        tasks = [(n, spec.m, spec.t, cfg, r) for r in range(cfg.restarts)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            graphs = [decode_graph6(s) for s in pool.map(_restart_task, tasks)]
    else:
        graphs = [_restart(n, spec, cfg, r) for r in range(cfg.restarts)]
    sizes = [g.size for g in graphs]
    r_best = max(range(len(graphs)), key=lambda r: (sizes[r], -r))
    best = graphs[r_best]
    if contains_wheel(best, spec) is not None:
        raise RuntimeError("lower-bound graph failed the wheel-free re-check")
    return LowerBound(best, best.size, r_best, sizes)
