"""Exact chromatic polynomials by several independent routes.

The production route is deletion-contraction with simplicial/dominating
vertex peeling, component splitting, and a memo table keyed by a canonical
adjacency encoding.  Independent routes (a closed form for complete
bipartite graphs, a broken-cycle enumeration oracle, coefficient formulas
from motif counts, and falling-factorial coefficients counted in the
complement) exist so that each can be checked against the others.

A vectorised variant of the same deletion-contraction recurrence fills a
coefficient table for every labeled graph of a tiny order at once; the
exhaustive experiments deduplicate those tables by polynomial.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from math import comb

import numpy as np

from .graphs import (
    Graph,
    UnsupportedPatternError,
    _bits,
    _cycle_edge_sets,
    complete_bipartite,
    count_cliques,
    count_clique_unions,
    count_cycles,
    count_induced_copies,
    edge_slot,
    girth,
    wheel_graph,
    write_graph6,
)
from .polynomials import Poly

_ONE = Poly([1])
_X = Poly([0, 1])

DC_VERTEX_LIMIT = 24  # practical deletion-contraction bound
_CANONICAL_LIMIT = 9  # exhaustive-permutation canonicalisation cutoff
_CANONICAL_CAP = 40320  # max labelings tried per memo key

_DC_MEMO: dict = {}


def clear_memo():
    _DC_MEMO.clear()


def _comb0(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


# -- deletion-contraction route ------------------------------------------------


def _drop_bit(mask: int, v: int) -> int:
    return (mask & ((1 << v) - 1)) | ((mask >> (v + 1)) << v)


def _delete_vertex(adj: tuple[int, ...], v: int) -> tuple[int, ...]:
    return tuple(_drop_bit(adj[u], v) for u in range(len(adj)) if u != v)


def _contract(adj: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    """Merge v into u (u < v), collapsing any parallel edge."""
    rows = list(adj)
    rows[u] = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
    for w in _bits(adj[v] & ~(1 << u)):
        rows[w] |= 1 << u
    return _delete_vertex(tuple(rows), v)


def _is_clique(adj, mask: int) -> bool:
    for v in _bits(mask):
        if mask & ~adj[v] & ~(1 << v):
            return False
    return True


def _component_masks(adj) -> list[int]:
    seen = 0
    out = []
    for v in range(len(adj)):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def _induced_adj(adj, mask: int) -> tuple[int, ...]:
    verts = list(_bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in _bits(adj[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return tuple(rows)


def _refined_cells(adj) -> list[list[int]]:
    """Vertex cells of the iterated neighbour-colour refinement, in a
    colour order that is invariant under isomorphism."""
    n = len(adj)
    colors = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(adj[v]))))
            for v in range(n)
        ]
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [order[sigs[v]] for v in range(n)]
        if new == colors:
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _memo_key(adj):
    n = len(adj)
    if n > _CANONICAL_LIMIT:
        return ("labeled", adj)
    cells = _refined_cells(adj)
    count = 1
    for cell in cells:
        count *= math.factorial(len(cell))
        if count > _CANONICAL_CAP:
            return ("labeled", adj)
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in cells)):
        target = [0] * n
        pos = 0
        for cell_perm in perms:
            for v in cell_perm:
                target[v] = pos
                pos += 1
        rows = [0] * n
        for v in range(n):
            row = 0
            for u in _bits(adj[v]):
                row |= 1 << target[u]
            rows[target[v]] = row
        key = tuple(rows)
        if best is None or key < best:
            best = key
    return ("canon", best)


def _best_pair(adj, pairs):
    """Pair with the most common neighbours (ties broken by index order)."""
    best = None
    best_score = -1
    for u, v in pairs:
        score = (adj[u] & adj[v]).bit_count()
        if score > best_score:
            best, best_score = (u, v), score
    return best


def _chromatic_adj(adj: tuple[int, ...]) -> Poly:
    n = len(adj)
    if n == 0:
        return _ONE
    full = (1 << n) - 1
    # dominating vertex: colour it first, everything else avoids that colour
    for v in range(n):
        if adj[v] == full ^ (1 << v):
            return _X * _chromatic_adj(_delete_vertex(adj, v)).shift(-1)
    # simplicial vertex (includes isolated): its clique neighbourhood pins d colours
    for v in range(n):
        if _is_clique(adj, adj[v]):
            d = adj[v].bit_count()
            return Poly([-d, 1]) * _chromatic_adj(_delete_vertex(adj, v))
    comps = _component_masks(adj)
    if len(comps) > 1:
        out = _ONE
        for comp in comps:
            out = out * _chromatic_adj(_induced_adj(adj, comp))
        return out
    key = _memo_key(adj)
    hit = _DC_MEMO.get(key)
    if hit is not None:
        return hit
    m = sum(r.bit_count() for r in adj) // 2
    if 2 * m <= n * (n - 1) // 2:
        edges = [(u, v) for u in range(n) for v in _bits(adj[u] >> (u + 1) << (u + 1))]
        u, v = _best_pair(adj, edges)
        rows = list(adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        result = _chromatic_adj(tuple(rows)) - _chromatic_adj(_contract(adj, u, v))
    else:
        nonedges = [
            (u, v)
            for u in range(n)
            for v in _bits(full & ~adj[u] & ~((1 << (u + 1)) - 1))
        ]
        u, v = _best_pair(adj, nonedges)
        rows = list(adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        result = _chromatic_adj(tuple(rows)) + _chromatic_adj(_contract(adj, u, v))
    _DC_MEMO[key] = result
    return result


def chromatic_polynomial(g: Graph) -> Poly:
    """Exact chromatic polynomial via deletion-contraction.

    Practical up to ~24 vertices; for big complete bipartite graphs use
    chromatic_polynomial_bipartite instead.
    """
    if g.n > DC_VERTEX_LIMIT:
        raise ValueError(
            f"deletion-contraction is limited to {DC_VERTEX_LIMIT} vertices; "
            "use the closed-form routes for larger structured graphs"
        )
    return _chromatic_adj(g.adj)


def chromatic_number(g: Graph) -> int:
    """Smallest positive k with a proper k-colouring, from exact evaluation."""
    if g.n == 0:
        return 0
    return chromatic_number_of(chromatic_polynomial(g))


def chromatic_number_of(poly: Poly) -> int:
    for k in range(1, poly.degree + 1):
        if poly(k) > 0:
            return k
    raise ArithmeticError("no positive integer evaluates positive; not a chromatic polynomial?")


def count_colorings_bruteforce(g: Graph, k: int) -> int:
    """Proper colourings counted one assignment at a time (tiny oracle)."""
    edges = list(g.edges())
    total = 0
    for colouring in itertools.product(range(k), repeat=g.n):
        if all(colouring[u] != colouring[v] for u, v in edges):
            total += 1
    return total


# -- complete bipartite closed form ---------------------------------------------

BIPARTITE_ORDER_LIMIT = 400


def _stirling2_row(n: int) -> list[int]:
    row = [0] * (n + 1)
    row[0] = 1
    for _ in range(n):
        new = [0] * (n + 1)
        for k in range(1, n + 1):
            new[k] = k * row[k] + row[k - 1]
        row = new
    return row


def chromatic_polynomial_bipartite(p: int, q: int) -> Poly:
    """pi(K_{p,q}, x), exactly, for orders up to 400.

    Colourings split over the partition each side induces: with i colour
    classes on the small side there are S(p, i) * x(x-1)...(x-i+1) ways to
    colour it, and every vertex of the other side independently avoids those
    i colours.  This route is validated against deletion-contraction.
    """
    if p < 1 or q < 1:
        raise ValueError("both parts must be nonempty")
    if p + q > BIPARTITE_ORDER_LIMIT:
        raise ValueError(f"order {p + q} exceeds the configured cap {BIPARTITE_ORDER_LIMIT}")
    small, large = (p, q) if p <= q else (q, p)
    stirling = _stirling2_row(small)
    total = Poly()
    falling = _ONE
    for i in range(1, small + 1):
        falling = falling * Poly([-(i - 1), 1])
        total = total + stirling[i] * falling * (Poly([-i, 1]) ** large)
    return total


# -- broken-cycle oracle ----------------------------------------------------------


def broken_cycle_coefficients(g: Graph, edge_order=None) -> list[int]:
    """Coefficient magnitudes h_0..h_n by direct spanning-subgraph enumeration.

    h_i counts the spanning subgraphs with n-i edges containing no broken
    cycle (a cycle minus its highest edge under the given edge ordering).
    Exponential; this is an oracle for tiny graphs, not a production route.
    """
    if g.n > 8 or g.m > 16:
        raise ValueError("broken-cycle enumeration is capped at n<=8, m<=16")
    edges = list(g.edges())
    if edge_order is None:
        edge_order = edges
    normalized = [(min(u, v), max(u, v)) for u, v in edge_order]
    if sorted(normalized) != sorted(edges):
        raise ValueError("edge_order must be a permutation of the edge set")
    label = {e: i for i, e in enumerate(normalized)}
    index = {e: i for i, e in enumerate(edges)}
    broken = set()
    for cycle in _cycle_edge_sets(g):
        top = max(cycle, key=lambda e: label[e])
        mask = 0
        for e in cycle:
            if e != top:
                mask |= 1 << index[e]
        broken.add(mask)
    broken_masks = sorted(broken, key=lambda m: m.bit_count())
    m = len(edges)
    h = [0] * (g.n + 1)
    for subset in range(1 << m):
        ok = True
        for b in broken_masks:
            if b & subset == b:
                ok = False
                break
        if ok:
            h[g.n - subset.bit_count()] += 1
    return h


# -- coefficient formulas from motif counts -----------------------------------------


def coefficient_formulas(g: Graph, max_codegree: int = 4, correction_pattern: Graph | None = None) -> dict[int, int]:
    """Coefficient magnitudes h_{n-i} for i = 0..max_codegree from motif counts.

    The codegree-4 formula needs the order-5 correction pattern (pinned by
    the identify-h experiment) for its induced-count term.
    """
    if max_codegree > 4:
        raise ValueError("closed formulas are available for codegree at most 4")
    n, m = g.n, g.m
    out = {}
    triangles = count_cliques(g, 3) if n >= 3 else 0
    for i in range(0, max_codegree + 1):
        if n - i < 0:
            break
        if i == 0:
            out[n] = 1
        elif i == 1:
            out[n - 1] = m
        elif i == 2:
            out[n - 2] = _comb0(m, 2) - triangles
        elif i == 3:
            ic4 = count_cycles(g, 4, induced=True) if n >= 4 else 0
            k4 = count_cliques(g, 4) if n >= 4 else 0
            out[n - 3] = _comb0(m, 3) - (m - 2) * triangles - ic4 + 2 * k4
        else:
            if correction_pattern is None:
                raise UnsupportedPatternError(
                    "codegree-4 coefficients need the order-5 correction pattern; "
                    "run the identify-h experiment to pin it"
                )
            ic4 = count_cycles(g, 4, induced=True) if n >= 4 else 0
            k4 = count_cliques(g, 4) if n >= 4 else 0
            k5 = count_cliques(g, 5) if n >= 5 else 0
            ic5 = count_cycles(g, 5, induced=True) if n >= 5 else 0
            ik23 = count_induced_copies(g, complete_bipartite(2, 3)) if n >= 5 else 0
            iw5 = count_induced_copies(g, wheel_graph(5)) if n >= 5 else 0
            ih = count_induced_copies(g, correction_pattern) if n >= correction_pattern.n else 0
            # the complete-subgraph term enters with +(2m-9); the sign is
            # pinned by exhaustive agreement with deletion-contraction
            out[n - 4] = (
                _comb0(m, 4)
                - _comb0(m - 2, 2) * triangles
                + _comb0(triangles, 2)
                - (m - 3) * ic4
                + (2 * m - 9) * k4
                - ic5
                + ik23
                + 2 * ih
                - 6 * k5
                + 3 * iw5
            )
    return out


def girth_coefficient_formulas(g: Graph) -> dict[int, int]:
    """The girth-gated coefficient magnitudes: h_{n-i} = C(m, i) below the
    girth, and C(m, g0-1) minus the count of shortest cycles at codegree
    g0-1.  For forests every codegree follows the binomial rule."""
    n, m = g.n, g.m
    g0 = girth(g)
    if g0 is None:
        return {n - i: _comb0(m, i) for i in range(0, n + 1) if n - i >= 0}
    out = {n - i: _comb0(m, i) for i in range(0, g0 - 1) if n - i >= 0}
    if n - (g0 - 1) >= 0:
        out[n - g0 + 1] = _comb0(m, g0 - 1) - count_cycles(g, g0)
    return out


def bipartite_coefficient_formulas(p: int, q: int) -> dict[int, int]:
    """Top five coefficient magnitudes of pi(K_{p,q}) in closed form (p, q >= 2)."""
    if p < 2 or q < 2:
        raise ValueError("closed forms assume both parts have at least 2 vertices")
    n = p + q
    return {
        n: 1,
        n - 1: p * q,
        n - 2: _comb0(p * q, 2),
        n - 3: _comb0(p * q, 3) - comb(q, 2) * comb(p, 2),
        n - 4: (
            _comb0(p * q, 4)
            - (p * q - 3) * comb(q, 2) * comb(p, 2)
            + comb(q, 2) * _comb0(p, 3)
            + comb(p, 2) * _comb0(q, 3)
        ),
    }


# -- falling-factorial coefficients by complement counting -----------------------------


def falling_factorial_tail(g: Graph) -> dict[int, int]:
    """Falling-factorial coefficients a_n..a_{n-3} counted in the complement.

    a_{n-i} counts the vertex-disjoint unions of cliques of total weight i
    in the complement (weight of K_{m+1} is m).
    """
    n = g.n
    comp = g.complement()
    out = {n: 1}
    if n - 1 >= 0:
        out[n - 1] = comp.m
    if n - 2 >= 0:
        tri = count_cliques(comp, 3) if n >= 3 else 0
        two_k2 = count_clique_unions(comp, (1, 1)) if n >= 4 else 0
        out[n - 2] = tri + two_k2
    if n - 3 >= 0:
        k4 = count_cliques(comp, 4) if n >= 4 else 0
        k3k2 = count_clique_unions(comp, (2, 1)) if n >= 5 else 0
        three_k2 = count_clique_unions(comp, (1, 1, 1)) if n >= 6 else 0
        out[n - 3] = k4 + k3k2 + three_k2
    return out


def shifted_chromatic_quotient(g: Graph) -> Poly:
    """The factor f with pi(g, x + n - 1) = f(x) * prod_{i=1..chi} (x + n - i).

    The division is verified exact; a nonzero remainder would mean an
    internal inconsistency between the polynomial and chromatic number.
    """
    n = g.n
    poly = chromatic_polynomial(g)
    chi = chromatic_number_of(poly) if n >= 1 else 0
    shifted = poly.shift(n - 1) if n >= 1 else poly
    den = _ONE
    for i in range(1, chi + 1):
        den = den * Poly([n - i, 1])
    return shifted.exact_div(den)


def stability_inequality_sides(g: Graph) -> tuple[int, int]:
    """Both sides of the cubic-stability inequality for chi = n - 3 graphs.

    Returns (lhs, rhs) built from complement motif counts; lhs > rhs is the
    certified claim.
    """
    n = g.n
    chi = chromatic_number(g)
    if chi != n - 3:
        raise ValueError(f"inequality applies to chromatic number n-3 graphs, got chi={chi}, n={n}")
    tail = falling_factorial_tail(g)
    a1, a2, a3 = tail[n - 1], tail[n - 2], tail[n - 3]
    lhs = 6 + 9 * a1 + a2 + 3 * a1 * a1 + a1 * a2
    return lhs, a3


# -- per-graph record --------------------------------------------------------------


@dataclass
class ChromaticRecord:
    """Everything the experiments want to persist about one graph."""

    graph6: str
    polynomial: Poly
    coefficient_magnitudes: list[int]
    falling_factorial: list[int]
    chromatic_number: int

    @staticmethod
    def from_graph(g: Graph) -> "ChromaticRecord":
        poly = chromatic_polynomial(g)
        n = g.n
        coeffs = list(poly.coeffs) + [0] * (n + 1 - len(poly.coeffs))
        mags = []
        for i, c in enumerate(coeffs):
            expected_sign = (-1) ** (n - i)
            if c != 0 and (c > 0) != (expected_sign > 0):
                raise ArithmeticError("coefficient signs do not alternate")
            mags.append(abs(c))
        return ChromaticRecord(
            graph6=write_graph6(g),
            polynomial=poly,
            coefficient_magnitudes=mags,
            falling_factorial=[int(a) for a in poly.to_falling_factorial()],
            chromatic_number=chromatic_number_of(poly) if n >= 1 else 0,
        )

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "coefficients": self.polynomial.coefficient_strings(),
            "coefficient_magnitudes": [str(h) for h in self.coefficient_magnitudes],
            "falling_factorial": [str(a) for a in self.falling_factorial],
            "chromatic_number": self.chromatic_number,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @staticmethod
    def from_dict(data: dict) -> "ChromaticRecord":
        return ChromaticRecord(
            graph6=data["graph6"],
            polynomial=Poly([int(c) for c in data["coefficients"]]),
            coefficient_magnitudes=[int(h) for h in data["coefficient_magnitudes"]],
            falling_factorial=[int(a) for a in data["falling_factorial"]],
            chromatic_number=int(data["chromatic_number"]),
        )


# -- bulk labeled tables --------------------------------------------------------------

_TABLE_CACHE: dict[int, np.ndarray] = {}
TABLE_ORDER_LIMIT = 7


def labeled_polynomial_table(n: int) -> np.ndarray:
    """Chromatic coefficients for every labeled graph on n vertices at once.

    Row index is the colex edge mask; column i holds the coefficient of x^i.
    Built by the deletion-contraction recurrence applied to the highest edge
    at the last vertex, vectorised over all masks sharing that vertex's
    neighbourhood.
    """
    if not 1 <= n <= TABLE_ORDER_LIMIT:
        raise ValueError(f"bulk tables are limited to 1..{TABLE_ORDER_LIMIT} vertices")
    cached = _TABLE_CACHE.get(n)
    if cached is not None:
        return cached
    if n == 1:
        table = np.array([[0, 1]], dtype=np.int64)
    else:
        prev = labeled_polynomial_table(n - 1)
        low_bits = (n - 1) * (n - 2) // 2
        block = 1 << low_bits
        table = np.zeros((block << (n - 1), n + 1), dtype=np.int64)
        table[0:block, 1 : n + 1] = prev  # isolated new vertex: multiply by x
        low = np.arange(block, dtype=np.int64)
        for hi in range(1, 1 << (n - 1)):
            u = hi.bit_length() - 1  # branch on the edge (u, n-1)
            deleted = ((hi ^ (1 << u)) << low_bits) + low
            cadd = 0
            for w in _bits(hi ^ (1 << u)):
                cadd |= 1 << edge_slot(w, u)
            base = hi << low_bits
            table[base : base + block, :] = table[deleted, :]
            table[base : base + block, 0:n] -= prev[low | cadd, :]
    _TABLE_CACHE[n] = table
    return table


def distinct_polynomials(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Unique chromatic-coefficient rows over all labeled n-vertex graphs.

    Returns (rows, witness_masks) where witness_masks[i] is the first edge
    mask realising rows[i].  Order is deterministic (lexicographic rows).
    """
    table = labeled_polynomial_table(n)
    rows, idx = np.unique(table, axis=0, return_index=True)
    return rows, idx


def poly_from_row(row) -> Poly:
    return Poly([int(c) for c in row])
