"""Small simple undirected graphs stored as per-vertex adjacency bitsets.

Covers graph6 text I/O, the usual constructors, exhaustive labeled
enumeration for tiny orders, motif and clique-union counting, girth, and
exact tree-width by dynamic programming over vertex subsets.  Everything
here is exact and desk-scale: vertex counts are capped at 64 so adjacency
rows fit in one machine word.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

MAX_VERTICES = 64

# Maximum order n for exhaustive labeled enumeration (2^C(7,2) ~ 2.1M graphs).
MAX_ENUMERATION_ORDER = 7


def edge_slot(i: int, j: int) -> int:
    """Bit position of edge {i, j} in colex order: (0,1), (0,2), (1,2), (0,3), ...

    This matches the column-major upper-triangle order of the graph6 format.
    """
    if i == j:
        raise ValueError("no self-loops")
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the offending byte position."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedPatternError(ValueError):
    """A motif count was requested for a pattern this build cannot resolve."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on at most 64 vertices.

    adj[v] is the neighbour set of v as a bitmask.  Instances are immutable
    and safe to share between workers.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency tuple length must equal vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} mentions vertices >= {self.n}")
            if (row >> v) & 1:
                raise ValueError(f"vertex {v} is adjacent to itself")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    # -- basic accessors ----------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self):
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            for u in _bits(row):
                yield (v, v + 1 + u)

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("no self-loops")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    @staticmethod
    def from_edge_mask(n: int, mask: int) -> "Graph":
        """Graph from a colex-ordered bitmask over the C(n,2) vertex pairs."""
        adj = [0] * n
        slot = 0
        for j in range(1, n):
            for i in range(j):
                if (mask >> slot) & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                slot += 1
        if mask >> slot:
            raise ValueError("edge mask has bits beyond C(n,2)")
        return Graph(n, tuple(adj))

    def edge_mask(self) -> int:
        mask = 0
        for i, j in self.edges():
            mask |= 1 << edge_slot(i, j)
        return mask

    # -- derived graphs -----------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full ^ row ^ (1 << v)) for v, row in enumerate(self.adj)))

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on the given vertices, relabeled to 0..k-1."""
        verts = list(vertices)
        index = {v: i for i, v in enumerate(verts)}
        adj = [0] * len(verts)
        for i, v in enumerate(verts):
            for u in _bits(self.adj[v]):
                if u in index:
                    adj[i] |= 1 << index[u]
        return Graph(len(verts), tuple(adj))

    def relabel(self, perm) -> "Graph":
        """Image under the permutation `perm` (vertex v goes to perm[v])."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def components(self) -> list[int]:
        """Vertex bitmasks of the connected components."""
        seen = 0
        out = []
        for v in range(self.n):
            if (seen >> v) & 1:
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                nxt = 0
                for u in _bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __str__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"


# -- graph6 ------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optionally prefixed with '>>graph6<<')."""
    text = line.strip()
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    if not text:
        raise Graph6Error("empty graph6 line")
    data = text.encode("ascii", errors="replace")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside graph6 range 63..126", pos)
    if data[0] == 126:
        if len(data) < 4:
            raise Graph6Error("truncated extended header", len(data))
        if data[1] == 126:
            raise Graph6Error("graph6 order beyond 64 is not supported", 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body, body_offset = data[4:], 4
    else:
        n = data[0] - 63
        body, body_offset = data[1:], 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 order {n} exceeds supported maximum {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error("truncated graph6 bit vector", body_offset + len(body))
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 bit vector", body_offset + need)
    mask = 0
    slot = 0
    for byte in body:
        chunk = byte - 63
        for k in range(5, -1, -1):
            if slot >= nbits:
                break
            if (chunk >> k) & 1:
                mask |= 1 << slot
            slot += 1
    return Graph.from_edge_mask(n, mask)


def write_graph6(g: Graph) -> str:
    """Encode a graph as a canonical graph6 line (orders up to 64)."""
    n = g.n
    if n <= 62:
        header = chr(63 + n)
    else:
        header = "~" + chr(63 + ((n >> 12) & 63)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))
    mask = g.edge_mask()
    nbits = n * (n - 1) // 2
    chars = []
    for start in range(0, nbits, 6):
        chunk = 0
        for k in range(6):
            slot = start + k
            if slot < nbits and (mask >> slot) & 1:
                chunk |= 1 << (5 - k)
        chars.append(chr(63 + chunk))
    return header + "".join(chars)


def read_graph6_lines(lines) -> list[Graph]:
    out = []
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            out.append(parse_graph6(line))
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc
    return out


# -- constructors --------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel_graph(n: int) -> Graph:
    """Wheel of order n: a hub joined to every vertex of an (n-1)-cycle."""
    if n < 4:
        raise ValueError("wheels need at least 4 vertices")
    edges = [(i, i % (n - 1) + 1) for i in range(1, n)]
    edges += [(0, v) for v in range(1, n)]
    return Graph.from_edges(n, edges)


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise ValueError("both parts must be nonempty")
    if p + q > MAX_VERTICES:
        raise ValueError(f"order {p + q} exceeds {MAX_VERTICES}")
    left = (1 << p) - 1
    right = ((1 << q) - 1) << p
    adj = [right] * p + [left] * q
    return Graph(p + q, tuple(adj))


def complete_minus_matching(n: int, t: int) -> Graph:
    """K_n with t pairwise-disjoint edges removed (2t <= n)."""
    if 2 * t > n:
        raise ValueError(f"cannot remove {t} disjoint edges from {n} vertices")
    g = complete_graph(n)
    adj = list(g.adj)
    for k in range(t):
        u, v = 2 * k, 2 * k + 1
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
    return Graph(n, tuple(adj))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    adj = list(a.adj) + [row << a.n for row in b.adj]
    return Graph(a.n + b.n, tuple(adj))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    adj = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def enumerate_labeled(n: int):
    """Yield all 2^C(n,2) labeled graphs on n vertices in edge-mask order.

    Refuses n > 7; larger orders should be ingested from graph6 files
    produced by a dedicated generator.
    """
    if n > MAX_ENUMERATION_ORDER:
        raise ValueError(
            f"exhaustive enumeration is capped at n={MAX_ENUMERATION_ORDER}; "
            "ingest a graph6 file for larger orders"
        )
    for mask in range(1 << (n * (n - 1) // 2)):
        yield Graph.from_edge_mask(n, mask)


# -- girth ---------------------------------------------------------------------


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None if the graph is a forest."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for u in _bits(g.adj[v]):
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        parent[u] = v
                        nxt.append(u)
                    elif u != parent[v]:
                        length = dist[u] + dist[v] + 1
                        if best is None or length < best:
                            best = length
            if best is not None and frontier and 2 * dist[frontier[0]] + 1 > best:
                break
            frontier = nxt
    return best


# -- motif counting ------------------------------------------------------------


def count_cliques(g: Graph, k: int) -> int:
    """Number of k-cliques (for cliques, subgraph and induced counts agree)."""
    if k < 1:
        raise ValueError("clique order must be positive")
    if k == 1:
        return g.n
    count = 0

    def extend(allowed: int, need: int):
        nonlocal count
        if need == 0:
            count += 1
            return
        if allowed.bit_count() < need:
            return
        for v in _bits(allowed):
            # extend upward only, so each clique is counted once
            extend(allowed & g.adj[v] & ~((1 << (v + 1)) - 1), need - 1)

    extend((1 << g.n) - 1, k)
    return count


def count_cycles(g: Graph, length: int, induced: bool = False) -> int:
    """Number of cycles of the given length, as subgraphs or induced."""
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    if length > 10 and g.n > 16:
        raise ValueError("cycle counting is capped at length 10 for orders above 16")
    total = 0
    for subset in itertools.combinations(range(g.n), length):
        if induced:
            h = g.induced(subset)
            if h.m == length and all(d == 2 for d in h.degrees()) and h.is_connected():
                total += 1
        else:
            total += _hamiltonian_cycle_count(g, subset)
    return total


def _hamiltonian_cycle_count(g: Graph, subset) -> int:
    verts = list(subset)
    if len(verts) < 3:
        return 0
    first = verts[0]
    rest = verts[1:]
    count = 0
    for perm in itertools.permutations(rest):
        if perm[0] > perm[-1]:
            continue  # each cycle once, not once per direction
        cycle = (first,) + perm
        if all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))):
            count += 1
    return count


def _cycle_edge_sets(g: Graph):
    """All cycles of g as frozensets of (u, v) edges with u < v."""
    for size in range(3, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            first = subset[0]
            rest = subset[1:]
            for perm in itertools.permutations(rest):
                if perm[0] > perm[-1]:
                    continue
                cycle = (first,) + perm
                edges = []
                ok = True
                for i in range(len(cycle)):
                    u, v = cycle[i], cycle[(i + 1) % len(cycle)]
                    if not g.has_edge(u, v):
                        ok = False
                        break
                    edges.append((min(u, v), max(u, v)))
                if ok:
                    yield frozenset(edges)


@lru_cache(maxsize=256)
def _automorphism_count(key: tuple[int, tuple[int, ...]]) -> int:
    n, adj = key
    pattern = Graph(n, adj)
    count = 0
    for perm in itertools.permutations(range(n)):
        if all(
            pattern.has_edge(perm[u], perm[v]) == pattern.has_edge(u, v)
            for u in range(n)
            for v in range(u + 1, n)
        ):
            count += 1
    return count


def count_subgraph_copies(g: Graph, pattern: Graph) -> int:
    """Number of subgraphs of g isomorphic to `pattern` (not necessarily induced)."""
    k = pattern.n
    if k > g.n:
        return 0
    if k > 8:
        raise UnsupportedPatternError("pattern order capped at 8 for subset enumeration")
    aut = _automorphism_count((pattern.n, pattern.adj))
    pattern_edges = list(pattern.edges())
    total = 0
    for subset in itertools.combinations(range(g.n), k):
        embeddings = 0
        for perm in itertools.permutations(subset):
            if all(g.has_edge(perm[u], perm[v]) for u, v in pattern_edges):
                embeddings += 1
        total += embeddings
    assert total % aut == 0
    return total // aut


def count_induced_copies(g: Graph, pattern: Graph) -> int:
    """Number of induced subgraphs of g isomorphic to `pattern`."""
    k = pattern.n
    if k > g.n:
        return 0
    if k > 8:
        raise UnsupportedPatternError("pattern order capped at 8 for subset enumeration")
    want_m = pattern.m
    want_degs = sorted(pattern.degrees())
    total = 0
    for subset in itertools.combinations(range(g.n), k):
        h = g.induced(subset)
        if h.m != want_m or sorted(h.degrees()) != want_degs:
            continue
        if _isomorphic_small(h, pattern):
            total += 1
    return total


def _isomorphic_small(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    for perm in itertools.permutations(range(a.n)):
        if a.relabel(perm).adj == b.adj:
            return True
    return False


def count_clique_unions(g: Graph, weights) -> int:
    """Number of vertex-disjoint clique unions with part sizes weights[j]+1.

    `weights` is a multiset of positive integers m_j; the counted object is
    the disjoint union of cliques K_{m_j+1}.  Total weight is capped at 4.
    """
    weights = tuple(sorted(weights, reverse=True))
    if not weights or any(w < 1 for w in weights):
        raise ValueError("weights must be positive integers")
    if sum(weights) > 4:
        raise UnsupportedPatternError("clique-union counting supports total weight <= 4")
    sizes = [w + 1 for w in weights]
    if sum(sizes) > g.n:
        return 0
    cliques: dict[int, list[int]] = {}
    for s in set(sizes):
        masks = []
        for subset in itertools.combinations(range(g.n), s):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(subset, 2)):
                mask = 0
                for v in subset:
                    mask |= 1 << v
                masks.append(mask)
        cliques[s] = masks

    def choose(i: int, used: int, start: int) -> int:
        if i == len(sizes):
            return 1
        total = 0
        pool = cliques[sizes[i]]
        lo = start if i > 0 and sizes[i] == sizes[i - 1] else 0
        for idx in range(lo, len(pool)):
            mask = pool[idx]
            if mask & used:
                continue
            total += choose(i + 1, used | mask, idx + 1)
        return total

    return choose(0, 0, 0)


_NAMED_PATTERNS = {
    "K2": lambda: complete_graph(2),
    "K3": lambda: complete_graph(3),
    "K4": lambda: complete_graph(4),
    "K5": lambda: complete_graph(5),
    "K2,3": lambda: complete_bipartite(2, 3),
    "W5": lambda: wheel_graph(5),
}


def named_pattern(name: str) -> Graph:
    if name in _NAMED_PATTERNS:
        return _NAMED_PATTERNS[name]()
    if name.startswith("C") and name[1:].isdigit():
        return cycle_graph(int(name[1:]))
    if name == "H":
        raise UnsupportedPatternError(
            "the order-5 correction pattern must be pinned first (run identify-h) "
            "and passed as an explicit Graph"
        )
    raise UnsupportedPatternError(f"unknown pattern {name!r}")


def count_motif(g: Graph, pattern, induced: bool = False) -> int:
    """Count copies of a motif in g.

    `pattern` may be a named pattern ("K3", "C5", "K2,3", "W5", ...), an
    explicit Graph, or a tuple of clique-union weights.  `induced` selects
    induced-subgraph counting.
    """
    if isinstance(pattern, str):
        if pattern.startswith("C") and pattern[1:].isdigit() and not induced:
            return count_cycles(g, int(pattern[1:]), induced=False)
        pattern = named_pattern(pattern)
    if isinstance(pattern, tuple):
        if induced:
            union = empty_graph(0)
            for w in pattern:
                union = disjoint_union(union, complete_graph(w + 1))
            return count_induced_copies(g, union)
        return count_clique_unions(g, pattern)
    if not isinstance(pattern, Graph):
        raise UnsupportedPatternError(f"cannot interpret pattern {pattern!r}")
    # fast paths
    if pattern.m == pattern.n * (pattern.n - 1) // 2:
        return count_cliques(g, pattern.n)
    if pattern.n >= 3 and pattern.m == pattern.n and all(d == 2 for d in pattern.degrees()) and pattern.is_connected():
        return count_cycles(g, pattern.n, induced=induced)
    if induced:
        return count_induced_copies(g, pattern)
    return count_subgraph_copies(g, pattern)


# -- tree-width ----------------------------------------------------------------


def treewidth_exact(g: Graph) -> int:
    """Exact tree-width by Held-Karp style DP over elimination prefixes.

    Capped at 14 vertices (2^n subset table).
    """
    n = g.n
    if n == 0:
        raise ValueError("tree-width of the empty graph is undefined")
    if n > 14:
        raise ValueError("exact tree-width is capped at 14 vertices")
    if n == 1:
        return 0
    adj = g.adj

    def fill_degree(eliminated: int, v: int) -> int:
        # neighbours of v in the graph where `eliminated` has been contracted away:
        # vertices outside `eliminated` reachable from v via eliminated vertices
        out = adj[v]
        visited = (1 << v) | (adj[v] & eliminated)
        frontier = adj[v] & eliminated
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            out |= nxt
            frontier = nxt & eliminated & ~visited
            visited |= frontier
        return (out & ~eliminated & ~(1 << v)).bit_count()

    size = 1 << n
    dp = [0] * size
    for s in range(1, size):
        best = n
        rest = s
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            prev = s ^ low
            width = dp[prev]
            fd = fill_degree(prev, v)
            cand = fd if fd > width else width
            if cand < best:
                best = cand
        dp[s] = best
    return dp[size - 1]
