"""Edge-labeled path forests, decreasing trees and decreasing +-trees."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import permutations, product

MAX_TREE_VERTICES = 7


@dataclass(frozen=True, order=True)
class EdgeLabeledForest:
    n: int
    edges: tuple  # sorted (i, j, label), i < j, 1-based

    def to_json(self):
        return [list(e) for e in self.edges]


@dataclass(frozen=True, order=True)
class SignedTree:
    n: int
    edges: tuple  # sorted (i, j, sign), i < j, sign in "+-"

    def to_json(self):
        return [[i, j, s] for i, j, s in self.edges]

    def parents(self) -> dict:
        return _parents(self.n, [(i, j) for i, j, _ in self.edges])

    def is_path_from_root(self) -> bool:
        deg = [0] * (self.n + 1)
        for i, j, _ in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg[self.n] <= 1 and max(deg) <= 2


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for t in range(len(part)):
            yield part[:t] + [[first] + part[t]] + part[t + 1:]


def enumerate_path_forests(m: int, n: int, degree: int) -> list[EdgeLabeledForest]:
    """Forests on [n] whose components are paths ending at their largest vertex."""
    if not 0 <= degree <= n - 1:
        raise ValueError(f"degree must lie in [0, {n - 1}]")
    out = []
    for blocks in _set_partitions(list(range(1, n + 1))):
        if n - len(blocks) != degree:
            continue
        per_block = []
        for b in blocks:
            top, rest = max(b), sorted(v for v in b if v != max(b))
            paths = []
            for order in permutations(rest):
                seq = (top,) + order
                pairs = [tuple(sorted(seq[t:t + 2])) for t in range(len(seq) - 1)]
                for labels in product(range(m), repeat=len(pairs)):
                    paths.append([(a, b2, k) for (a, b2), k in zip(pairs, labels)])
            per_block.append(paths)
        for choice in product(*per_block):
            edges = tuple(sorted(e for path in choice for e in path))
            out.append(EdgeLabeledForest(n, edges))
    return sorted(out)


def prufer_trees(n: int):
    """All labeled trees on [n] as sorted edge lists, via Prufer sequences."""
    if n == 1:
        yield ()
        return
    if n == 2:
        yield ((1, 2),)
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        degree = [1] * (n + 1)
        for v in seq:
            degree[v] += 1
        leaves = [v for v in range(1, n + 1) if degree[v] == 1]
        heapq.heapify(leaves)
        edges = []
        for v in seq:
            leaf = heapq.heappop(leaves)
            edges.append(tuple(sorted((leaf, v))))
            degree[v] -= 1
            if degree[v] == 1:
                heapq.heappush(leaves, v)
        u, w = heapq.heappop(leaves), heapq.heappop(leaves)
        edges.append((u, w))
        yield tuple(sorted(edges))


def _parents(n, edges) -> dict:
    adj = {v: [] for v in range(1, n + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = {n: None}
    stack = [n]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in parent:
                parent[u] = v
                stack.append(u)
    return parent


def _check_bound(n):
    if n > MAX_TREE_VERTICES:
        raise ValueError(f"tree enumeration is limited to n <= {MAX_TREE_VERTICES}")


def enumerate_decreasing_trees(n: int) -> list[tuple]:
    """Trees on [n] rooted at n with parent > child everywhere, as sorted edge lists."""
    if n < 1:
        raise ValueError("need n >= 1")
    _check_bound(n)
    out = []
    for parents in product(*[range(v + 1, n + 1) for v in range(1, n)]):
        out.append(tuple(sorted((v, p) for v, p in zip(range(1, n), parents))))
    return sorted(out)


_FORBIDDEN_PLUS_PATTERNS = {(4, 1, 2, 3), (4, 1, 3, 2), (4, 2, 1, 3)}
_FORBIDDEN_PLUS_PATTERNS |= {tuple(reversed(p)) for p in _FORBIDDEN_PLUS_PATTERNS}


def _pattern(vertices):
    ranks = sorted(vertices)
    return tuple(ranks.index(v) + 1 for v in vertices)


def is_decreasing_pm_tree(n: int, signed_edges) -> bool:
    edges = [(i, j) for i, j, _ in signed_edges]
    sign = {frozenset((i, j)): s for i, j, s in signed_edges}
    parent = _parents(n, edges)
    if len(parent) != n:
        return False
    up = {v: sign[frozenset((v, p))] for v, p in parent.items() if p is not None}
    # (1) minus edges decrease away from the root
    for v, s in up.items():
        if s == "-" and parent[v] < v:
            return False
    # (2) no j -(-)-> i -(+)-> k with i < j
    for k, s in up.items():
        if s == "+":
            i = parent[k]
            if i != n and up[i] == "-" and parent[i] > i:
                return False
    # (3) no all-plus root-directed path a -> b -> c -> d with a forbidden shape
    for d in up:
        c = parent[d]
        if c is None or c == n:
            continue
        b = parent[c]
        if b == n:
            continue
        a = parent[b]
        if up[d] == up[c] == up[b] == "+" and _pattern((a, b, c, d)) in _FORBIDDEN_PLUS_PATTERNS:
            return False
    return True


def enumerate_pm_trees(n: int) -> list[SignedTree]:
    """Decreasing +-trees on [n] by filtering all trees times all sign choices."""
    if n < 2:
        raise ValueError("need n >= 2")
    _check_bound(n)
    out = []
    for tree in prufer_trees(n):
        for signs in product("-+", repeat=n - 1):
            signed = tuple((i, j, s) for (i, j), s in zip(tree, signs))
            if is_decreasing_pm_tree(n, signed):
                out.append(SignedTree(n, signed))
    return sorted(out)


# ---------------------------------------------------------------------------
# monomials of combinatorial objects


def pm_tree_monomial(tree: SignedTree, ring):
    """Exponent vector of prod y_ij^0 (minus edges) times y_ij^1 (plus edges)."""
    e = [0] * ring.nvars
    for i, j, s in tree.edges:
        e[ring.key_index[(i, j, 0 if s == "-" else 1)]] += 1
    return tuple(e)


def decreasing_forest_monomial(tree_edges, n, ring):
    """Drop vertex n from a decreasing tree on [n]; remaining edges give y_ij."""
    e = [0] * ring.nvars
    for i, j in tree_edges:
        if j != n:
            e[ring.key_index[(i, j)]] += 1
    return tuple(e)


def path_forest_monomial(forest: EdgeLabeledForest, ring):
    e = [0] * ring.nvars
    for i, j, k in forest.edges:
        e[ring.key_index[(i, j, k)]] += 1
    return tuple(e)
