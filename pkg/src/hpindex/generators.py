"""Instance sources: exhaustive enumerations, seeded random graphs, and the
glued-cycle family driven by the explorer.

Free trees are streamed as canonical level sequences (Beyer-Hedetniemi
successor), filtered so each isomorphism class is emitted exactly once:
a sequence survives iff it equals the lexicographically largest canonical
sequence of its own tree rooted at a centroid. The classical counting
recurrences are provided alongside as an independent check on the stream.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator

from .canon import graph_key
from .errors import PreconditionError, ValidationError
from .graphs import Graph, graph_from_token_edges, is_connected
from .rng import SplitMix64

FREE_TREE_CAP = 14
LABELED_GRAPH_CAP = 6


# ---------------------------------------------------------------- free trees


def _level_sequences(n: int) -> Iterator[list[int]]:
    """All canonical rooted level sequences on n >= 2 vertices.

    Successor rule: find the last position p with s[p] > 2, back up to the
    last q < p with s[q] == s[p] - 1, then repeat the block s[q:p] until the
    sequence is full again. Terminates at the all-2 star sequence.
    """
    s = list(range(1, n + 1))
    while True:
        yield s
        p = max((i for i in range(n) if s[i] > 2), default=None)
        if p is None:
            return
        q = p - 1
        while s[q] != s[p] - 1:
            q -= 1
        s = s[:p]
        while len(s) < n:
            s.append(s[len(s) - (p - q)])


def _tree_from_levels(s: list[int]) -> list[tuple[int, int]]:
    # vertex i sits at depth s[i]; its parent is the most recent vertex one
    # level up, which is well defined for canonical sequences
    last_at = {s[0]: 0}
    edges = []
    for i in range(1, len(s)):
        edges.append((last_at[s[i] - 1], i))
        last_at[s[i]] = i
    return edges


def _rooted_sequence(adj: list[list[int]], root: int) -> tuple[int, ...]:
    """Canonical level sequence of the tree rooted at `root`."""

    def sub(v: int, parent: int, depth: int) -> tuple[int, ...]:
        kids = sorted(
            (sub(w, v, depth + 1) for w in adj[v] if w != parent),
            reverse=True,
        )
        out = [depth]
        for k in kids:
            out.extend(k)
        return tuple(out)

    return sub(root, -1, 1)


def _centroids(adj: list[list[int]], n: int) -> list[int]:
    if n == 1:
        return [0]
    parent = [-1] * n
    order = [0]
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                order.append(w)
                stack.append(w)
    size = [1] * n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best = n
    cents: list[int] = []
    for v in range(n):
        heavy = max((size[w] for w in adj[v] if parent[w] == v), default=0)
        if parent[v] >= 0:
            heavy = max(heavy, n - size[v])
        if heavy < best:
            best, cents = heavy, [v]
        elif heavy == best:
            cents.append(v)
    return cents


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """Yield one tree per isomorphism class on n vertices, labels "1".."n".

    Deterministic order. Supported for 1 <= n <= 14; the stream length
    matches free_tree_counts.
    """
    if not 1 <= n <= FREE_TREE_CAP:
        raise ValidationError(
            f"free-tree enumeration supports 1..{FREE_TREE_CAP} vertices, got {n}"
        )
    labels = tuple(str(i + 1) for i in range(n))
    if n == 1:
        yield Graph(labels, [])
        return
    for s in _level_sequences(n):
        edges = _tree_from_levels(s)
        adj: list[list[int]] = [[] for _ in range(n)]
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        canon = max(_rooted_sequence(adj, c) for c in _centroids(adj, n))
        if tuple(s) == canon:
            yield Graph(labels, edges)


def rooted_tree_counts(n_max: int) -> list[int]:
    """r[n] = rooted trees on n unlabeled vertices (r[0] is a placeholder)."""
    r = [0] * (n_max + 1)
    if n_max >= 1:
        r[1] = 1
    for m in range(1, n_max):
        total = 0
        for k in range(1, m + 1):
            dsum = sum(d * r[d] for d in range(1, k + 1) if k % d == 0)
            total += dsum * r[m + 1 - k]
        assert total % m == 0
        r[m + 1] = total // m
    return r


def free_tree_counts(n_max: int) -> list[int]:
    """f[n] = free trees on n unlabeled vertices, via the rooted counts."""
    r = rooted_tree_counts(n_max)
    f = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        conv = sum(r[i] * r[n - i] for i in range(1, n))
        adjust = r[n // 2] if n % 2 == 0 else 0
        f[n] = r[n] - (conv - adjust) // 2
    return f


# ------------------------------------------------------------ labeled graphs


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on vertices "1".."n", smallest first.

    Exhaustive over all 2^C(n,2) edge subsets, so only small n are supported.
    """
    if not 2 <= n <= LABELED_GRAPH_CAP:
        raise ValidationError(
            f"labeled enumeration supports 2..{LABELED_GRAPH_CAP} vertices, got {n}"
        )
    labels = tuple(str(i + 1) for i in range(n))
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        g = Graph(labels, edges)
        if is_connected(g):
            yield g


def connected_graph_counts(n_max: int) -> list[int]:
    """c[n] = connected labeled graphs on n vertices, by inclusion-exclusion."""
    c = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        total = 1 << comb(n, 2)
        rooted = sum(
            comb(n - 1, k - 1) * c[k] * (1 << comb(n - k, 2))
            for k in range(1, n)
        )
        c[n] = total - rooted
    return c


# -------------------------------------------------------------- random draws


def _random_tree(n: int, rng: SplitMix64) -> Graph:
    seq = [rng.below(n) for _ in range(n - 2)]
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        deg[v] -= 1
        if deg[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(tuple(str(i + 1) for i in range(n)), edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on "1".."n", decoded from a seeded
    Pruefer sequence. Same seed, same tree, on every platform."""
    if n < 2:
        raise PreconditionError("random_tree needs n >= 2")
    return _random_tree(n, SplitMix64(seed))


def random_connected_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """Random spanning tree plus `extra_edges` distinct non-tree edges."""
    if n < 2:
        raise PreconditionError("random_connected_graph needs n >= 2")
    if extra_edges < 0:
        raise ValidationError("extra_edges must be nonnegative")
    rng = SplitMix64(seed)
    base = _random_tree(n, rng)
    present = set(base.edges)
    spare = [p for p in combinations(range(n), 2) if p not in present]
    rng.shuffle(spare)
    chosen = spare[: min(extra_edges, len(spare))]
    return Graph(base.labels, list(base.edges) + chosen)


# ----------------------------------------------------------- explorer family


@dataclass(frozen=True)
class FamilyParams:
    """Knobs for the glued-cycle family.

    Base trees come either from the exhaustive stream or from seeded random
    draws (`random_bases` per order). Cycles of the given sizes are glued at
    subsets of tree vertices, one cycle per chosen vertex, sharing exactly
    that vertex.
    """

    max_vertices: int = 12
    cycle_sizes: tuple[int, ...] = (3, 4, 5)
    base_tree_source: str = "enumerated"
    include_bases: bool = True
    seed: int = 0
    random_bases: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.max_vertices <= 14:
            raise ValidationError("max_vertices must be in 1..14")
        if not self.cycle_sizes or any(k < 3 for k in self.cycle_sizes):
            raise ValidationError("cycle sizes must all be at least 3")
        if self.base_tree_source not in ("enumerated", "random"):
            raise ValidationError("base_tree_source must be 'enumerated' or 'random'")
        if self.base_tree_source == "random" and self.random_bases < 1:
            raise ValidationError("random base trees need random_bases >= 1")


def _base_trees(params: FamilyParams, order: int) -> Iterator[Graph]:
    if params.base_tree_source == "enumerated":
        yield from enumerate_free_trees(order)
        return
    if order < 2:
        return
    rng = SplitMix64(params.seed ^ order)
    for _ in range(params.random_bases):
        yield _random_tree(order, rng)


def _glued(tree: Graph, assignment: tuple[tuple[str, int], ...]) -> Graph:
    token_edges = [tree.label_edge(e) for e in tree.edges]
    isolated = list(tree.labels) if not token_edges else []
    for idx, (site, k) in enumerate(assignment):
        ring = [site] + [f"g{idx}_{j}" for j in range(1, k)]
        for a, b in zip(ring, ring[1:]):
            token_edges.append((a, b))
        token_edges.append((ring[-1], ring[0]))
    return graph_from_token_edges(token_edges, isolated)


def gen_hamiltonian_2block_family(
    params: FamilyParams,
) -> Iterator[tuple[Graph, str]]:
    """Stream (graph, tag) pairs: trees with cycles glued at vertex subsets.

    Every glued cycle forms a 2-connected block with an obvious spanning
    cycle, so each graph meets the conjectural formula's hypothesis.
    Isomorphic duplicates are dropped by canonical key. Tags record the
    construction: base tree order and index, then one "+C{k}@{v}" per cycle.
    """
    sizes = tuple(sorted(set(params.cycle_sizes)))
    seen: set[str] = set()
    for order in range(1, params.max_vertices + 1):
        for ti, tree in enumerate(_base_trees(params, order)):
            base_tag = f"T{order}.{ti}"
            verts = sorted(tree.labels)

            def attachments(
                start: int, used: int
            ) -> Iterator[tuple[tuple[str, int], ...]]:
                yield ()
                for j in range(start, len(verts)):
                    for k in sizes:
                        if tree.n + used + k - 1 > params.max_vertices:
                            continue
                        for rest in attachments(j + 1, used + k - 1):
                            yield ((verts[j], k),) + rest

            for assignment in attachments(0, 0):
                if not assignment and not params.include_bases:
                    continue
                g = _glued(tree, assignment)
                key = graph_key(g)
                if key in seen:
                    continue
                seen.add(key)
                tag = base_tag + "".join(f"+C{k}@{v}" for v, k in assignment)
                yield g, tag
