"""Finite graphs with paired directed edges, and their zeta invariants.

A graph is a vertex list together with a dart (directed edge) list; every
dart has an origin, a terminus, and a distinguished inverse dart.  The
inversion pairing is a fixed-point-free involution, so the dart count is
even and the undirected edge count is half of it.  Loops are allowed (a
dart with equal endpoints paired with a distinct inverse) and contribute
two to both the degree and the adjacency diagonal; multi-edges are allowed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import GraphError
from .poly import TruncSeries, UniPoly

__all__ = [
    "SerreGraph",
    "adjacency_and_degree",
    "connected",
    "dart_transition_matrix",
    "euler_characteristic",
    "ihara_zeta_reciprocal",
    "reduced_closed_path_counts",
    "spanning_tree_count",
    "validate_graph",
    "zeta_reciprocal_series",
    "zeta_series_from_counts",
]


@dataclass(frozen=True)
class SerreGraph:
    """Vertices plus darts with incidence maps and inversion pairing."""

    vertices: tuple
    dart_origin: tuple[int, ...]
    dart_terminus: tuple[int, ...]
    dart_inverse: tuple[int, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_darts(self) -> int:
        return len(self.dart_origin)

    @property
    def n_edges(self) -> int:
        return len(self.dart_origin) // 2

    @staticmethod
    def from_edges(vertices, edges) -> "SerreGraph":
        """Build from undirected edges given as (origin, terminus) vertex pairs.

        Each pair contributes the dart pair (2i, 2i+1); endpoints may be
        vertex labels or plain indices.
        """
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        o, t, inv = [], [], []
        for k, (a, b) in enumerate(edges):
            ia = index[a] if a in index else a
            ib = index[b] if b in index else b
            o += [ia, ib]
            t += [ib, ia]
            inv += [2 * k + 1, 2 * k]
        return SerreGraph(vertices, tuple(o), tuple(t), tuple(inv))

    def edge_pairs(self) -> list[tuple[int, int]]:
        """One dart per undirected edge (the one with the smaller index)."""
        return [
            (self.dart_origin[e], self.dart_terminus[e])
            for e in range(self.n_darts)
            if e < self.dart_inverse[e]
        ]


def validate_graph(g: SerreGraph) -> None:
    """Check the Serre-graph invariants, reporting the first violation."""
    n, d = g.n_vertices, g.n_darts
    if not (len(g.dart_terminus) == len(g.dart_inverse) == d):
        raise GraphError("dart arrays have mismatched lengths")
    if d % 2:
        raise GraphError("dart count must be even")
    for e in range(d):
        for arr, what in ((g.dart_origin, "origin"), (g.dart_terminus, "terminus")):
            if not 0 <= arr[e] < n:
                raise GraphError(f"dart {e} has dangling {what} reference {arr[e]}")
        if not 0 <= g.dart_inverse[e] < d:
            raise GraphError(f"dart {e} has dangling inverse reference")
    for e in range(d):
        ebar = g.dart_inverse[e]
        if ebar == e:
            raise GraphError(f"inversion has a fixed point at dart {e}")
        if g.dart_inverse[ebar] != e:
            raise GraphError(f"inversion is not an involution at dart {e}")
        if g.dart_origin[ebar] != g.dart_terminus[e] or g.dart_terminus[ebar] != g.dart_origin[e]:
            raise GraphError(f"incidence mismatch between dart {e} and its inverse")


def euler_characteristic(g: SerreGraph) -> int:
    return g.n_vertices - g.n_edges


def adjacency_and_degree(g: SerreGraph) -> tuple[list[list[int]], list[list[int]]]:
    """Adjacency matrix A (A[i][j] = darts from v_j to v_i) and degree matrix."""
    n = g.n_vertices
    a = [[0] * n for _ in range(n)]
    deg = [[0] * n for _ in range(n)]
    for e in range(g.n_darts):
        a[g.dart_terminus[e]][g.dart_origin[e]] += 1
        deg[g.dart_origin[e]][g.dart_origin[e]] += 1
    return a, deg


def connected(g: SerreGraph) -> bool:
    if g.n_vertices == 0:
        return True
    adj = [[] for _ in range(g.n_vertices)]
    for e in range(g.n_darts):
        adj[g.dart_origin[e]].append(g.dart_terminus[e])
    seen = [False] * g.n_vertices
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return all(seen)


def spanning_tree_count(g: SerreGraph) -> int:
    """Exact spanning-tree count via a principal minor of the Laplacian."""
    if not connected(g):
        raise GraphError("graph not connected")
    n = g.n_vertices
    if n <= 1:
        return 1
    a, deg = adjacency_and_degree(g)
    minor = [
        [deg[i][j] - a[i][j] for j in range(1, n)] for i in range(1, n)
    ]
    count = linalg.det_int(minor)
    if count <= 0:
        raise GraphError(f"matrix-tree determinant came out nonpositive: {count}")
    return count


def dart_transition_matrix(g: SerreGraph) -> list[list[int]]:
    """Non-backtracking dart matrix: B[e][f] = 1 iff f follows e and f != inv(e)."""
    d = g.n_darts
    b = [[0] * d for _ in range(d)]
    for e in range(d):
        for f in range(d):
            if g.dart_terminus[e] == g.dart_origin[f] and f != g.dart_inverse[e]:
                b[e][f] = 1
    return b


def _mat_mul(x, y):
    n = len(x)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        xi = x[i]
        oi = out[i]
        for k, xv in enumerate(xi):
            if xv:
                yk = y[k]
                for jj in range(n):
                    oi[jj] += xv * yk[jj]
    return out


def reduced_closed_path_counts(g: SerreGraph, k_max: int) -> list[int]:
    """N_1..N_k: traces of powers of the non-backtracking dart matrix."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    b = dart_transition_matrix(g)
    counts = []
    power = b
    counts.append(sum(power[i][i] for i in range(len(b))))
    for _ in range(k_max - 1):
        power = _mat_mul(power, b)
        counts.append(sum(power[i][i] for i in range(len(b))))
    return counts


def ihara_zeta_reciprocal(g: SerreGraph) -> tuple[UniPoly, int]:
    """(h(u), chi) with h = det(I - Au + (D - I)u^2); Z^-1 = (1-u^2)^(-chi) h."""
    a, deg = adjacency_and_degree(g)
    n = g.n_vertices
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            c0 = 1 if i == j else 0
            c1 = -a[i][j]
            c2 = deg[i][j] - (1 if i == j else 0)
            row.append(UniPoly([c0, c1, c2]))
        mat.append(row)
    det = linalg.det_commutative(mat) if n else UniPoly.constant(1)
    if not isinstance(det, UniPoly):
        det = UniPoly.constant(det)
    coeffs = []
    for c in det.coeffs:
        fr = Fraction(c)
        if fr.denominator != 1:
            raise GraphError("zeta determinant produced a non-integer coefficient")
        coeffs.append(fr.numerator)
    return UniPoly(coeffs), euler_characteristic(g)


def zeta_series_from_counts(counts: list[int], prec: int) -> TruncSeries:
    """exp(sum N_k u^k / k) as a truncated series over Q."""
    logz = [Fraction(0)] * prec
    for k, nk in enumerate(counts, start=1):
        if k < prec:
            logz[k] = Fraction(nk, k)
    return TruncSeries(logz, prec).exp()


def zeta_reciprocal_series(h: UniPoly, chi: int, prec: int) -> TruncSeries:
    """(1-u^2)^(-chi) * h(u) as a truncated series over Q."""
    base = TruncSeries([1, 0, -1], prec)
    return (base ** (-chi)) * TruncSeries.from_poly(h, prec)
