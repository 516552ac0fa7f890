"""Branched towers of graph covers built from integer voltage assignments.

A tower datum is a connected base graph, a prime p, an antisymmetric
integer voltage on the darts, and a ramification choice per vertex:
either unramified (trivial stabilizer at every level) or Ramified(k),
meaning the level-n stabilizer is the subgroup p^min(k,n) Z/p^n Z.

The level-n cover has vertex fiber {cosets of the stabilizer} over each
base vertex and dart fiber Z/p^n Z over each base dart; the dart (s, sigma)
runs from (o(s), sigma) to (t(s), sigma + voltage(s)), cosets taken on both
ends, and its inverse is (sbar, sigma + voltage(s)).  Vertex and dart
orderings are lexicographic (base index, then representative), so matrix
output and golden files are stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import DatumError
from .graphs import SerreGraph, connected, validate_graph
from .groupring import GroupRingElem, norm_element

__all__ = [
    "LevelGraph",
    "TowerDatum",
    "build_level_graph",
    "level_matrices",
    "quotient_level_graph",
    "ramification_profile",
    "tower_euler_char",
]

UNRAMIFIED = None


@dataclass(frozen=True)
class TowerDatum:
    """Base graph + prime + voltage assignment + ramification family."""

    base: SerreGraph
    p: int
    voltage: tuple[int, ...]
    ram: tuple[int | None, ...]  # None = unramified, k >= 0 = Ramified(k)

    def __post_init__(self):
        validate_graph(self.base)
        if not linalg.is_probable_prime(self.p):
            raise DatumError(f"{self.p} is not prime")
        if len(self.voltage) != self.base.n_darts:
            raise DatumError("voltage must assign an integer to every dart")
        for e in range(self.base.n_darts):
            if self.voltage[e] != -self.voltage[self.base.dart_inverse[e]]:
                raise DatumError(f"voltage is not antisymmetric at dart {e}")
        if len(self.ram) != self.base.n_vertices:
            raise DatumError("ramification must cover every vertex")
        for k in self.ram:
            if k is not None and (not isinstance(k, int) or k < 0):
                raise DatumError(f"ramification exponent must be a nonnegative integer, got {k!r}")
        if not connected(self.base):
            raise DatumError("base graph not connected")

    @property
    def ramified_vertices(self) -> list[int]:
        return [i for i, k in enumerate(self.ram) if k is not None]

    @property
    def unramified_vertices(self) -> list[int]:
        return [i for i, k in enumerate(self.ram) if k is None]

    @property
    def n1(self) -> int:
        """Maximal ramification exponent (0 for an unramified datum)."""
        ks = [k for k in self.ram if k is not None]
        return max(ks) if ks else 0

    def fiber_size(self, v: int, n: int) -> int:
        """Number of level-n vertices above v: the stabilizer's index."""
        k = self.ram[v]
        if k is None:
            return self.p**n
        return self.p ** min(k, n)

    def stabilizer_order(self, v: int, n: int) -> int:
        k = self.ram[v]
        if k is None:
            return 1
        return self.p ** (n - min(k, n))


@dataclass(frozen=True)
class LevelGraph:
    """A level of the tower, with its labels back to the base."""

    graph: SerreGraph
    level: int
    vertex_base: tuple[int, ...]
    vertex_rep: tuple[int, ...]
    dart_base: tuple[int, ...]
    dart_sigma: tuple[int, ...]


def build_level_graph(d: TowerDatum, n: int) -> LevelGraph:
    if n < 0:
        raise DatumError("level must be nonnegative")
    p, base = d.p, d.base
    order = p**n
    vertex_index: dict[tuple[int, int], int] = {}
    labels = []
    vbase, vrep = [], []
    for i, v in enumerate(base.vertices):
        for rep in range(d.fiber_size(i, n)):
            vertex_index[(i, rep)] = len(labels)
            labels.append((v, rep))
            vbase.append(i)
            vrep.append(rep)
    o, t, inv = [], [], []
    dbase, dsig = [], []
    for e in range(base.n_darts):
        a = d.voltage[e] % order
        fo = d.fiber_size(base.dart_origin[e], n)
        ft = d.fiber_size(base.dart_terminus[e], n)
        for sigma in range(order):
            o.append(vertex_index[(base.dart_origin[e], sigma % fo)])
            t.append(vertex_index[(base.dart_terminus[e], (sigma + a) % ft)])
            inv.append(base.dart_inverse[e] * order + (sigma + a) % order)
            dbase.append(e)
            dsig.append(sigma)
    graph = SerreGraph(tuple(labels), tuple(o), tuple(t), tuple(inv))
    return LevelGraph(graph, n, tuple(vbase), tuple(vrep), tuple(dbase), tuple(dsig))


def quotient_level_graph(d: TowerDatum, lg: LevelGraph, m: int) -> SerreGraph:
    """Quotient of a level-n cover by p^m Z/p^n Z, relabelled at level m.

    Forgetting the high digits of the labels must reproduce the level-m
    cover exactly, ordering included.
    """
    if m > lg.level:
        raise DatumError("quotient level above the built level")
    p = d.p
    qorder = p**m
    vertex_index: dict[tuple[int, int], int] = {}
    labels = []
    for i, rep in zip(lg.vertex_base, lg.vertex_rep):
        key = (i, rep % d.fiber_size(i, m))
        if key not in vertex_index:
            vertex_index[key] = len(labels)
            labels.append((d.base.vertices[i], key[1]))
    dart_index: dict[tuple[int, int], int] = {}
    o, t, inv = [], [], []
    for e, sigma in zip(lg.dart_base, lg.dart_sigma):
        key = (e, sigma % qorder)
        if key in dart_index:
            continue
        dart_index[key] = len(o)
        a = d.voltage[e] % qorder
        o.append(vertex_index[(d.base.dart_origin[e], key[1] % d.fiber_size(d.base.dart_origin[e], m))])
        t.append(
            vertex_index[
                (d.base.dart_terminus[e], (key[1] + a) % d.fiber_size(d.base.dart_terminus[e], m))
            ]
        )
        inv.append(-1)  # fixed below once all darts exist
    for (e, sigma), idx in dart_index.items():
        a = d.voltage[e] % qorder
        inv[idx] = dart_index[(d.base.dart_inverse[e], (sigma + a) % qorder)]
    return SerreGraph(tuple(labels), tuple(o), tuple(t), tuple(inv))


def ramification_profile(d: TowerDatum, n: int) -> list[tuple[int, int]]:
    """Per base vertex: (fiber size, ramification index m_{v,n})."""
    return [(d.fiber_size(v, n), d.stabilizer_order(v, n)) for v in range(d.base.n_vertices)]


def tower_euler_char(d: TowerDatum, n: int) -> int:
    """Euler characteristic of the level-n cover (Riemann-Hurwitz form)."""
    p = d.p
    chi_base = d.base.n_vertices - d.base.n_edges
    branch = sum(
        d.fiber_size(v, n) * (d.stabilizer_order(v, n) - 1) for v in d.ramified_vertices
    )
    return p**n * chi_base - branch


def level_matrices(
    d: TowerDatum, n: int
) -> tuple[list[list[GroupRingElem]], list[GroupRingElem], list[int]]:
    """Voltage adjacency A_alpha over Q[Z/p^n Z], stabilizer diagonal C, degrees D.

    A_alpha[i][j] is the sum of the group elements alpha(s) over the base
    darts s from v_j to v_i; C[i] is the subgroup sum N of the level-n
    stabilizer of v_i; D holds the base degrees.
    """
    base = d.base
    m = d.p**n
    g = base.n_vertices
    a_alpha = [[GroupRingElem.zero(m) for _ in range(g)] for _ in range(g)]
    for e in range(base.n_darts):
        i, j = base.dart_terminus[e], base.dart_origin[e]
        a_alpha[i][j] = a_alpha[i][j] + GroupRingElem.basis(m, d.voltage[e] % m)
    c = [norm_element(m, d.stabilizer_order(v, n)) for v in range(g)]
    deg = [0] * g
    for e in range(base.n_darts):
        deg[base.dart_origin[e]] += 1
    return a_alpha, c, deg
