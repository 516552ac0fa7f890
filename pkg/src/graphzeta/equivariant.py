"""Equivariant zeta data over the group ring, and the norm/trace formalism.

For the cyclic group G = Z/p^n Z acting on a level graph, the central
objects are the equivariant Euler characteristic (a group-ring element),
the polynomial eta(u) whose character projections are the h(u, psi), and
the exponent vector of gamma(u) = (1-u^2)^(-chi_{C[G]}).  Subgroups H of G
act on the same cover; eta for the H-action is computed from the graph
itself via orbit bookkeeping, which is what the induction (norm) identity
N_{G/H}(eta_G) = eta_H is tested against.

Inflation genuinely fails here: pushing eta_G down the quotient map
C[G] -> C[G/H] does not in general give the eta of the quotient cover.
The check reports both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cyclo import CycloNum
from .groupring import GroupRingElem, from_character_values, groupring_idempotent
from .lfunctions import CharacterLabel, characters, h_poly, r0
from .poly import UniPoly
from .tower import TowerDatum, build_level_graph, level_matrices

__all__ = [
    "EquivEulerChar",
    "EquivZeta",
    "InflationReport",
    "equivariant_euler_char",
    "eta_direct",
    "eta_for_subgroup_action",
    "eta_poly",
    "equiv_zeta",
    "gamma_exponents",
    "gamma_expand",
    "inflation_check",
    "norm_map",
    "norm_map_direct",
    "norm_gamma_exponents",
    "trace_map",
]


@dataclass(frozen=True)
class EquivEulerChar:
    """Group-ring Euler characteristic: sum of vertex idempotents minus |E_X|."""

    m: int
    value: GroupRingElem


def equivariant_euler_char(d: TowerDatum, n: int) -> EquivEulerChar:
    m = d.p**n
    total = GroupRingElem.zero(m)
    for v in range(d.base.n_vertices):
        total = total + groupring_idempotent(m, d.stabilizer_order(v, n))
    total = total - d.base.n_edges
    return EquivEulerChar(m, total)


def gamma_exponents(d: TowerDatum, n: int) -> tuple[int, ...]:
    """chi_psi for each character exponent a = 0..p^n-1 (free dart action)."""
    chi_base = d.base.n_vertices - d.base.n_edges
    return tuple(chi_base - r0(d, n, psi) for psi in characters(d.p, n))


def gamma_expand(p: int, n: int, exponents: tuple[int, ...]) -> UniPoly:
    """Expand gamma(u) = sum_psi (1-u^2)^(-chi_psi) e_psi as a polynomial.

    Only available when every exponent is <= 0; otherwise gamma is a genuine
    power series and stays in exponent-vector form.
    """
    if any(e > 0 for e in exponents):
        raise ValueError("gamma is not polynomial: some character exponent is positive")
    one_minus = UniPoly([1, 0, -1])
    polys = [one_minus ** (-e) for e in exponents]
    length = max(q.degree + 1 for q in polys)
    coeffs = []
    for k in range(length):
        vals = [CycloNum.rational(p, q.coefficient(k), 0) for q in polys]
        coeffs.append(from_character_values(p, n, [v.lift(n) for v in vals]))
    return UniPoly(coeffs)


@dataclass(frozen=True)
class EquivZeta:
    """eta(u) plus the per-character exponent vector representing gamma(u)."""

    m: int
    eta: UniPoly
    gamma: tuple[int, ...]


def eta_poly(d: TowerDatum, n: int) -> UniPoly:
    """eta(u) over Q[Z/p^n Z]: per-character determinants reassembled."""
    p = d.p
    polys = [h_poly(d, n, psi) for psi in characters(p, n)]
    length = max(q.degree + 1 for q in polys)
    coeffs = []
    for k in range(length):
        vals = []
        for q in polys:
            c = q.coefficient(k)
            vals.append(c if isinstance(c, CycloNum) else CycloNum.rational(p, c, 0))
        coeffs.append(from_character_values(p, n, [v.lift(n) for v in vals]))
    return UniPoly(coeffs)


def equiv_zeta(d: TowerDatum, n: int) -> EquivZeta:
    return EquivZeta(d.p**n, eta_poly(d, n), gamma_exponents(d, n))


def eta_direct(d: TowerDatum, n: int) -> UniPoly:
    """eta(u) by cofactor expansion straight over the group ring.

    Independent of the character route; exponential in the number of base
    vertices, so reserved for small cross-checks.
    """
    a_alpha, c, deg = level_matrices(d, n)
    m = d.p**n
    g = d.base.n_vertices
    rows = []
    for i in range(g):
        e_i = groupring_idempotent(m, d.stabilizer_order(i, n))
        row = []
        for j in range(g):
            ident = GroupRingElem.one(m) if i == j else GroupRingElem.zero(m)
            a_entry = e_i * a_alpha[i][j] * c[j]
            if i == j:
                q_entry = e_i * (d.stabilizer_order(i, n) * deg[i] - 1)
            else:
                q_entry = GroupRingElem.zero(m)
            row.append(UniPoly([ident, -a_entry, q_entry]))
        rows.append(row)
    det = linalg.det_cofactor(rows)
    return det if isinstance(det, UniPoly) else UniPoly.constant(det)


# -- subgroup actions on a level graph ---------------------------------


def eta_for_subgroup_action(d: TowerDatum, n: int, subgroup_order: int) -> UniPoly:
    """eta(u) for the order-p^h subgroup H of Z/p^n Z acting on the level-n cover.

    The cover is treated as a plain graph; H permutes it through the dart
    labels.  Orbits are identified with H = Z/p^h Z via t -> t * p^(n-h).
    The result lives over Q[Z/p^h Z].
    """
    m = d.p**n
    if subgroup_order <= 0 or m % subgroup_order:
        raise ValueError("subgroup order must divide the group order")
    h_ord = subgroup_order
    step = m // h_ord
    lg = build_level_graph(d, n)
    graph = lg.graph

    def act_vertex(vi: int, t: int) -> int:
        base = lg.vertex_base[vi]
        rep = (lg.vertex_rep[vi] + t * step) % d.fiber_size(base, n)
        return _vertex_lookup(lg, d, base, rep)

    # Orbit representatives in vertex order.
    reps: list[int] = []
    orbit_of = [-1] * graph.n_vertices
    for vi in range(graph.n_vertices):
        if orbit_of[vi] >= 0:
            continue
        idx = len(reps)
        reps.append(vi)
        for t in range(h_ord):
            orbit_of[act_vertex(vi, t)] = idx
    stab_orders = []
    for w in reps:
        stab = sum(1 for t in range(h_ord) if act_vertex(w, t) == w)
        stab_orders.append(stab)

    # a[w][v] = number of darts from v to w, for the orbit bookkeeping below.
    darts_into: dict[tuple[int, int], int] = {}
    for e in range(graph.n_darts):
        key = (graph.dart_terminus[e], graph.dart_origin[e])
        darts_into[key] = darts_into.get(key, 0) + 1

    gsize = len(reps)
    rows = []
    for i in range(gsize):
        w_i = reps[i]
        e_i = groupring_idempotent(h_ord, stab_orders[i])
        val = sum(1 for e in range(graph.n_darts) if graph.dart_origin[e] == w_i)
        row = []
        for j in range(gsize):
            w_j = reps[j]
            ell = GroupRingElem.zero(h_ord)
            for t in range(h_ord):
                count = darts_into.get((w_i, act_vertex(w_j, t)), 0)
                if count:
                    ell = ell + GroupRingElem.basis(h_ord, -t, Fraction(count, stab_orders[i]))
            ident = GroupRingElem.one(h_ord) if i == j else GroupRingElem.zero(h_ord)
            q_entry = e_i * (val - 1) if i == j else GroupRingElem.zero(h_ord)
            row.append(UniPoly([ident, -ell, q_entry]))
        rows.append(row)
    det = linalg.det_commutative(rows)
    return det if isinstance(det, UniPoly) else UniPoly.constant(det)


def _vertex_lookup(lg, d: TowerDatum, base: int, rep: int) -> int:
    offset = 0
    for i in range(base):
        offset += d.fiber_size(i, lg.level)
    return offset + rep


# -- norm and trace ----------------------------------------------------


def _as_groupring_poly(x, m: int) -> UniPoly:
    if isinstance(x, GroupRingElem):
        return UniPoly.constant(x)
    if isinstance(x, UniPoly):
        return x
    return UniPoly.constant(GroupRingElem.basis(m, 0, x))


def norm_map(x: UniPoly | GroupRingElem, subgroup_order: int) -> UniPoly:
    """N_{G/H}: determinant of multiplication by x on C[G] over C[H].

    Computed per character of H as the product of psi(x) over the characters
    psi of G restricting to it, then reassembled; the result lives over
    Q[Z/p^h Z] with H identified with Z/p^h Z.
    """
    m = _modulus_of(x)
    from .groupring import factor_prime_power

    p, n = factor_prime_power(m)
    if subgroup_order <= 0 or m % subgroup_order:
        raise ValueError("subgroup order must divide the group order")
    h_exp = 0
    t = subgroup_order
    while t > 1:
        t //= p
        h_exp += 1
    poly = _as_groupring_poly(x, m)
    # psi_a(x) for every character of G, all at ambient level n.
    projections = []
    for a in range(m):
        psi = CharacterLabel(p, n, a)
        proj = poly.map_coeffs(
            lambda c: _char_apply(c, psi, p, n)
        )
        projections.append(proj)
    ph = p**h_exp
    per_h_char: list[UniPoly] = []
    one = UniPoly.constant(CycloNum.rational(p, 1, n))
    for b in range(ph):
        prod = one
        for a in range(m):
            if a % ph == b:
                prod = prod * projections[a]
        per_h_char.append(prod)
    length = max(q.degree + 1 for q in per_h_char)
    coeffs = []
    for k in range(length):
        vals = []
        for q in per_h_char:
            c = q.coefficient(k)
            vals.append(c if isinstance(c, CycloNum) else CycloNum.rational(p, c, n))
        coeffs.append(_idft_subgroup(p, n, h_exp, vals))
    return UniPoly(coeffs)


def _char_apply(c, psi: CharacterLabel, p: int, n: int) -> CycloNum:
    if isinstance(c, GroupRingElem):
        acc = CycloNum.rational(p, 0, n)
        for s, coeff in enumerate(c.coeffs):
            if coeff:
                acc = acc + psi.value(s).lift(n) * coeff
        return acc
    return CycloNum.rational(p, c, n)


def _idft_subgroup(p: int, n: int, h_exp: int, values: list[CycloNum]) -> GroupRingElem:
    # Inverse DFT over the characters of H = Z/p^h Z, computed at level n.
    ph = p**h_exp
    coeffs = []
    for t in range(ph):
        acc = CycloNum.rational(p, 0, n)
        for b, v in enumerate(values):
            phase = CharacterLabel(p, h_exp, b).value((-t) % ph).lift(n)
            acc = acc + v * phase
        if not acc.is_rational():
            raise ValueError("norm reassembly produced a nonrational coefficient")
        coeffs.append(acc.to_rational() * Fraction(1, ph))
    return GroupRingElem(ph, coeffs)


def _modulus_of(x) -> int:
    if isinstance(x, GroupRingElem):
        return x.m
    if isinstance(x, UniPoly):
        for c in x.coeffs:
            if isinstance(c, GroupRingElem):
                return c.m
    raise ValueError("cannot infer the group order from the argument")


def norm_map_direct(x: UniPoly | GroupRingElem, subgroup_order: int) -> UniPoly:
    """N_{G/H} straight from the definition: cofactor determinant of the
    multiplication matrix over Q[H][u] with coset representatives 0..(G:H)-1."""
    m = _modulus_of(x)
    ph = subgroup_order
    index = m // ph
    poly = _as_groupring_poly(x, m)

    def decompose(elem: GroupRingElem) -> list[GroupRingElem]:
        # elem = sum_i comp[i] * [i] with comp[i] in Q[H], H = <index>.
        comps = [dict() for _ in range(index)]
        for s, c in enumerate(elem.coeffs):
            if c:
                i = s % index
                t = ((s - i) // index) % ph
                comps[i][t] = comps[i].get(t, 0) + c
        return [GroupRingElem.from_dict(ph, comp) for comp in comps]

    mat = [[UniPoly() for _ in range(index)] for _ in range(index)]
    for k in range(poly.degree + 1):
        coeff = poly.coefficient(k)
        if isinstance(coeff, (int, Fraction)):
            coeff = GroupRingElem.basis(m, 0, coeff)
        if not coeff:
            continue
        for jcol in range(index):
            shifted_coeffs = [Fraction(0)] * m
            for s, c in enumerate(coeff.coeffs):
                shifted_coeffs[(s + jcol) % m] = c
            comps = decompose(GroupRingElem(m, shifted_coeffs))
            for irow in range(index):
                if comps[irow]:
                    mat[irow][jcol] = mat[irow][jcol] + UniPoly.monomial(k, 1) * UniPoly.constant(
                        comps[irow]
                    )
    for i in range(index):
        for jcol in range(index):
            if mat[i][jcol].is_zero():
                mat[i][jcol] = UniPoly.constant(GroupRingElem.zero(ph))
    det = linalg.det_cofactor(mat)
    return det if isinstance(det, UniPoly) else UniPoly.constant(det)


def trace_map(x: GroupRingElem, subgroup_order: int) -> GroupRingElem:
    """T_{G/H}: trace of multiplication by x on C[G] over C[H].

    Equals (G:H) times the restriction of x to H, reindexed by Z/p^h Z.
    """
    if x.m % subgroup_order:
        raise ValueError("subgroup order must divide the group order")
    index = x.m // subgroup_order
    return x.restrict_to_subgroup(subgroup_order) * index


def norm_gamma_exponents(
    d: TowerDatum, n: int, subgroup_order: int
) -> tuple[int, ...]:
    """Exponent vector of N_{G/H}(gamma): fiberwise sums of the chi_psi."""
    exps = gamma_exponents(d, n)
    m = d.p**n
    ph = subgroup_order
    out = []
    for b in range(ph):
        out.append(sum(exps[a] for a in range(m) if a % ph == b))
    return tuple(out)


# -- inflation ----------------------------------------------------------


@dataclass(frozen=True)
class InflationReport:
    lhs: UniPoly  # projection of eta at level n to the quotient group ring
    rhs: UniPoly  # eta of the quotient cover
    equal: bool


def inflation_check(d: TowerDatum, n: int, subgroup_order: int) -> InflationReport:
    """Compare pi_H(eta at level n) with eta of the quotient level.

    The two need not agree: inflation is the one piece of the usual
    L-function formalism that branched covers break.
    """
    m = d.p**n
    if subgroup_order <= 0 or m % subgroup_order:
        raise ValueError("subgroup order must divide the group order")
    h_exp = 0
    t = subgroup_order
    while t > 1:
        t //= d.p
        h_exp += 1
    quotient_order = m // subgroup_order
    eta_full = eta_poly(d, n)
    lhs = eta_full.map_coeffs(lambda c: c.project_to_quotient(quotient_order))
    rhs = eta_poly(d, n - h_exp)
    return InflationReport(lhs, rhs, lhs == rhs)
