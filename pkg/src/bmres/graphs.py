"""Finite simple graphs, rooted trees, invariants, and free-tree enumeration.

Vertices are the integers 0..n-1 throughout; optional labels are carried
only for display.  All functions treat graphs as immutable values.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import BadParams, NotATree, ParseError, TooLarge, Unreachable

BRUTE_FORCE_CAP = 24


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset
    labels: Optional[tuple] = field(default=None, compare=False)

    @cached_property
    def adjacency(self) -> tuple:
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def neighbors(self, v: int) -> tuple:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset:
        return frozenset(self.adjacency[v]) | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return f"x{v + 1}"

    def leaves(self) -> tuple:
        return tuple(v for v in range(self.n) if self.degree(v) == 1)


def graph(n: int, edges: Iterable, labels: Optional[Sequence[str]] = None) -> Graph:
    """Validate and normalize raw edge data into a Graph."""
    norm = set()
    for e in edges:
        u, v = e
        if u == v:
            raise ParseError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u},{v}) out of range for n={n}")
        norm.add((min(u, v), max(u, v)))
    if labels is not None:
        if len(labels) != n:
            raise ParseError("label count does not match vertex count")
        labels = tuple(labels)
    return Graph(n, frozenset(norm), labels)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and len(g.edges) == g.n - 1 and is_connected(g)


def bfs_levels(g: Graph, source: int) -> list:
    """Distance from source per vertex; -1 where unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> int:
    d = bfs_levels(g, u)[v]
    if d < 0:
        raise Unreachable(f"no path between {u} and {v}")
    return d


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_chordal(g: Graph) -> bool:
    """Perfect elimination ordering test via maximum cardinality search."""
    n = g.n
    if n == 0:
        return True
    weight = [0] * n
    visited = [False] * n
    order = []
    for _ in range(n):
        u = max((v for v in range(n) if not visited[v]), key=lambda v: (weight[v], -v))
        visited[u] = True
        order.append(u)
        for w in g.neighbors(u):
            if not visited[w]:
                weight[w] += 1
    # Reversed MCS order is a candidate PEO; verify it.
    pos = {v: i for i, v in enumerate(order)}
    adj = [set(a) for a in g.adjacency]
    for v in reversed(order):
        later = [w for w in g.neighbors(v) if pos[w] < pos[v]]
        if not later:
            continue
        u = max(later, key=lambda w: pos[w])
        if any(w != u and w not in adj[u] for w in later):
            return False
    return True


# ----------------------------------------------------------------------------
# independence number and matching number
# ----------------------------------------------------------------------------

def _tree_children(g: Graph, root: int) -> tuple:
    parent = [-1] * g.n
    order = [root]
    seen = {root}
    for u in order:
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                parent[w] = u
                order.append(w)
    children = [[] for _ in range(g.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    return order, children


def _independence_tree(g: Graph) -> int:
    order, children = _tree_children(g, 0)
    take = [0] * g.n
    skip = [0] * g.n
    for v in reversed(order):
        take[v] = 1 + sum(skip[c] for c in children[v])
        skip[v] = sum(max(take[c], skip[c]) for c in children[v])
    return max(take[0], skip[0])


def _matching_tree(g: Graph) -> int:
    order, children = _tree_children(g, 0)
    free = [0] * g.n   # v not matched to a child
    used = [0] * g.n   # v matched to one child
    for v in reversed(order):
        base = sum(max(free[c], used[c]) for c in children[v])
        free[v] = base
        best = -1
        for c in children[v]:
            gain = 1 + free[c] - max(free[c], used[c])
            best = max(best, base + gain)
        used[v] = best if best >= 0 else 0
    return max(free[0], used[0])


def independence_number_brute(g: Graph, cap: int = BRUTE_FORCE_CAP) -> int:
    """Exact maximum independent set by branching; exponential, small n only."""
    if g.n > cap:
        raise TooLarge(f"n={g.n} exceeds brute-force cap {cap}")
    closed = [0] * g.n
    for v in range(g.n):
        closed[v] = (1 << v) | sum(1 << w for w in g.neighbors(v))

    def rec(mask: int) -> int:
        if mask == 0:
            return 0
        v = (mask & -mask).bit_length() - 1
        if closed[v] & mask == (1 << v):
            return 1 + rec(mask & ~(1 << v))
        return max(rec(mask & ~(1 << v)), 1 + rec(mask & ~closed[v]))

    return rec((1 << g.n) - 1)


def matching_number_brute(g: Graph, cap: int = BRUTE_FORCE_CAP) -> int:
    if g.n > cap:
        raise TooLarge(f"n={g.n} exceeds brute-force cap {cap}")
    adj = g.adjacency

    def rec(mask: int) -> int:
        if mask == 0:
            return 0
        v = (mask & -mask).bit_length() - 1
        best = rec(mask & ~(1 << v))
        for w in adj[v]:
            if mask >> w & 1:
                best = max(best, 1 + rec(mask & ~(1 << v) & ~(1 << w)))
        return best

    return rec((1 << g.n) - 1)


def independence_number(g: Graph, cap: int = BRUTE_FORCE_CAP) -> int:
    """Size of a maximum independent set (tree DP, brute force otherwise)."""
    if is_tree(g):
        return _independence_tree(g)
    return independence_number_brute(g, cap)


def matching_number(g: Graph, cap: int = BRUTE_FORCE_CAP) -> int:
    """Maximum matching size (tree DP, brute force otherwise)."""
    if is_tree(g):
        return _matching_tree(g)
    return matching_number_brute(g, cap)


# ----------------------------------------------------------------------------
# rooted trees
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class RootedTree:
    """A tree with a distinguished root, per-vertex levels, and a total
    vertex order that is level-major: the root first, then level 1, etc."""

    base: Graph
    root: int
    level: tuple
    parent: tuple
    vertex_order: tuple

    @cached_property
    def position(self) -> tuple:
        pos = [0] * self.base.n
        for i, v in enumerate(self.vertex_order):
            pos[v] = i
        return tuple(pos)

    def children(self, v: int) -> tuple:
        return tuple(u for u in self.base.neighbors(v) if self.parent[u] == v)


def root_and_label(g: Graph, root: int = 0, intra_level: str = "parent") -> RootedTree:
    """Root a tree and fix the level-major vertex order.

    Within a level, vertices are sorted by the position of their parent in
    the order, then by vertex index (``intra_level="parent"``); the
    alternative rule ``"index"`` sorts by vertex index alone.
    """
    if not is_tree(g):
        raise NotATree("root_and_label requires a tree")
    if not 0 <= root < g.n:
        raise BadParams(f"root {root} out of range")
    level = bfs_levels(g, root)
    parent: list = [None] * g.n
    for v in range(g.n):
        if v == root:
            continue
        parent[v] = next(u for u in g.neighbors(v) if level[u] == level[v] - 1)
    by_level: dict = {}
    for v in range(g.n):
        by_level.setdefault(level[v], []).append(v)
    order = []
    pos: dict = {}
    for lev in sorted(by_level):
        if intra_level == "parent" and lev > 0:
            group = sorted(by_level[lev], key=lambda v: (pos[parent[v]], v))
        else:
            group = sorted(by_level[lev])
        for v in group:
            pos[v] = len(order)
            order.append(v)
    return RootedTree(g, root, tuple(level), tuple(parent), tuple(order))


# ----------------------------------------------------------------------------
# named graphs
# ----------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    if n < 1:
        raise BadParams("path needs n >= 1")
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> Graph:
    if k < 1:
        raise BadParams("star needs k >= 1 leaves")
    return graph(k + 1, [(0, i) for i in range(1, k + 1)])


def spider_graph(legs: int, leg_length: int) -> Graph:
    if legs < 1 or leg_length < 1:
        raise BadParams("spider needs positive legs and leg length")
    edges = []
    for i in range(legs):
        prev = 0
        for j in range(leg_length):
            v = 1 + i * leg_length + j
            edges.append((prev, v))
            prev = v
    return graph(1 + legs * leg_length, edges)


def make_named(kind: str, *params: int) -> Graph:
    makers = {
        "path": path_graph,
        "cycle": cycle_graph,
        "star": star_graph,
        "spider": spider_graph,
    }
    if kind not in makers:
        raise BadParams(f"unknown graph kind {kind!r}")
    try:
        return makers[kind](*params)
    except TypeError as exc:
        raise BadParams(str(exc)) from None


# ----------------------------------------------------------------------------
# free-tree enumeration
# ----------------------------------------------------------------------------

def _rooted_level_sequences(n: int) -> Iterator[tuple]:
    """Level sequences (root depth 0) of all rooted trees on n vertices,
    in lexicographically decreasing order (Beyer-Hedetniemi successor)."""
    if n == 1:
        yield (0,)
        return
    levels = list(range(n))
    while True:
        yield tuple(levels)
        p = next((i for i in range(n - 1, -1, -1) if levels[i] > 1), None)
        if p is None:
            return
        q = next(i for i in range(p - 1, -1, -1) if levels[i] == levels[p] - 1)
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]


def _tree_from_levels(levels: Sequence[int]) -> Graph:
    n = len(levels)
    latest = [0] * n
    edges = []
    for i in range(1, n):
        edges.append((latest[levels[i] - 1], i))
        latest[levels[i]] = i
    return graph(n, edges)


def _subtree_sizes(g: Graph, root: int) -> list:
    order, children = _tree_children(g, root)
    size = [1] * g.n
    for v in reversed(order):
        for c in children[v]:
            size[v] += size[c]
    return size


def centroids(g: Graph) -> tuple:
    """The one or two vertices minimizing the maximum split component size."""
    if not is_tree(g):
        raise NotATree("centroids requires a tree")
    size = _subtree_sizes(g, 0)
    order, children = _tree_children(g, 0)
    best = None
    winners = []
    for v in range(g.n):
        biggest = g.n - size[v]
        for c in children[v]:
            biggest = max(biggest, size[c])
        if best is None or biggest < best:
            best = biggest
            winners = [v]
        elif biggest == best:
            winners.append(v)
    return tuple(sorted(winners))


def _canonical_levels(g: Graph, v: int, parent: int, depth: int) -> tuple:
    subs = sorted(
        (_canonical_levels(g, u, v, depth + 1) for u in g.neighbors(v) if u != parent),
        reverse=True,
    )
    out = (depth,)
    for s in subs:
        out += s
    return out


def canonical_tree_id(g: Graph) -> str:
    """Canonical level sequence of the centroid-rooted tree, as a string.

    Equal exactly for isomorphic free trees.
    """
    seq = min(_canonical_levels(g, c, -1, 0) for c in centroids(g))
    return ",".join(map(str, seq))


def enumerate_trees(n: int) -> list:
    """One representative per isomorphism class of free trees on n vertices."""
    if not 1 <= n <= 16:
        raise BadParams("enumerate_trees supports 1 <= n <= 16")
    seen = set()
    out = []
    for levels in _rooted_level_sequences(n):
        t = _tree_from_levels(levels)
        key = canonical_tree_id(t)
        if key not in seen:
            seen.add(key)
            out.append(t)
    return out


def automorphisms(g: Graph) -> list:
    """All vertex permutations preserving the edge set (small graphs only)."""
    if g.n > 12:
        raise TooLarge("automorphism search capped at 12 vertices")
    adj = [set(a) for a in g.adjacency]
    deg = [g.degree(v) for v in range(g.n)]
    image = [-1] * g.n
    used = [False] * g.n
    found = []

    def rec(v: int) -> None:
        if v == g.n:
            found.append(tuple(image))
            return
        for w in range(g.n):
            if used[w] or deg[w] != deg[v]:
                continue
            ok = True
            for u in range(v):
                if (u in adj[v]) != (image[u] in adj[w]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                rec(v + 1)
                used[w] = False
        image[v] = -1

    rec(0)
    return found


# ----------------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------------

def graph_to_json_obj(g: Graph) -> dict:
    obj = {"n": g.n, "edges": sorted(map(list, g.edges))}
    if g.labels is not None:
        obj["labels"] = list(g.labels)
    return obj


def graph_from_json_obj(obj: dict) -> Graph:
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph object: {exc}") from None
    if len(edges) != len({(min(e), max(e)) for e in edges}):
        raise ParseError("duplicate edges")
    labels = obj.get("labels")
    return graph(n, edges, labels)


def parse_graph_text(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty graph file")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise ParseError(f"malformed graph text: {exc}") from None
    if len(edges) != len({(min(e), max(e)) for e in edges}):
        raise ParseError("duplicate edges")
    return graph(n, edges)


def load_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON in {path}: {exc}") from None
        return graph_from_json_obj(obj)
    return parse_graph_text(text)


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Labeled tree on n vertices from a Pruefer sequence (test oracle)."""
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    ptr = 0
    leaf = -1
    # classic linear-time decoding
    degs = degree[:]
    import heapq

    heap = [v for v in range(n) if degs[v] == 1]
    heapq.heapify(heap)
    for v in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, v))
        degs[v] -= 1
        if degs[v] == 1:
            heapq.heappush(heap, v)
    u = heapq.heappop(heap)
    w = heapq.heappop(heap)
    edges.append((u, w))
    return graph(n, edges)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on n vertices via Pruefer sequences (test oracle)."""
    if n == 1:
        yield graph(1, [])
        return
    if n == 2:
        yield graph(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)
