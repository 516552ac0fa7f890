"""The cross-check battery behind `graphzeta verify`.

Every item recomputes one identity from two independent routes at a single
tower level and reports pass/fail; the inflation item is informational
(the two sides genuinely may differ, and for ramified data they should).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycloNum
from .equivariant import (
    eta_for_subgroup_action,
    eta_poly,
    inflation_check,
    norm_gamma_exponents,
    norm_map,
)
from .errors import HypothesisError
from .graphs import (
    connected,
    ihara_zeta_reciprocal,
    reduced_closed_path_counts,
    spanning_tree_count,
    zeta_reciprocal_series,
    zeta_series_from_counts,
)
from .lfunctions import (
    characters,
    h_poly,
    product_formula_check,
    r0,
    vanishing_order_check,
    z_poly,
)
from .poly import UniPoly
from .report import poly_text
from .tower import TowerDatum, build_level_graph, ramification_profile, tower_euler_char

__all__ = ["VerifyItem", "run_battery"]

PATH_COUNT_PRECISION = 13  # compare series through u^12


@dataclass(frozen=True)
class VerifyItem:
    name: str
    status: str  # "pass" | "fail" | "skip" | "info"
    detail: str


def run_battery(d: TowerDatum, n: int, subgroup_order: int | None = None) -> list[VerifyItem]:
    items: list[VerifyItem] = []
    p = d.p
    if subgroup_order is None:
        subgroup_order = p
    lg = build_level_graph(d, n)
    graph = lg.graph
    if not connected(graph):
        raise HypothesisError(f"level {n} disconnected")

    pc = product_formula_check(d, n)
    items.append(
        VerifyItem(
            "product-formula-h",
            "pass" if pc.h_equal else "fail",
            f"prod h(u,psi) vs level h: {poly_text(pc.h_product)}",
        )
    )
    items.append(
        VerifyItem(
            "product-formula-chi",
            "pass" if pc.chi_equal else "fail",
            f"sum chi_psi = {pc.chi_sum}, chi(level) = {pc.chi_direct}",
        )
    )

    reduction_ok = True
    one_minus = UniPoly([1, 0, -1])
    for psi in characters(p, n):
        j = psi.order_exponent
        h = h_poly(d, n, psi)
        z = z_poly(d, n, psi)
        factor = one_minus.map_coeffs(lambda c: CycloNum.rational(p, c, j)) ** r0(d, n, psi)
        if factor * h != z:
            reduction_ok = False
    items.append(
        VerifyItem(
            "zeta-reduction",
            "pass" if reduction_ok else "fail",
            "(1-u^2)^r0 * h(u,psi) = z(u,psi) for every character",
        )
    )

    h_level, chi_level = ihara_zeta_reciprocal(graph)
    kappa = spanning_tree_count(graph)
    hashimoto_ok = h_level.derivative()(1) == -2 * chi_level * kappa
    items.append(
        VerifyItem(
            "hashimoto",
            "pass" if hashimoto_ok else "fail",
            f"h'(1) = {h_level.derivative()(1)}, -2*chi*kappa = {-2 * chi_level * kappa}",
        )
    )

    counts = reduced_closed_path_counts(graph, PATH_COUNT_PRECISION - 1)
    lhs_series = zeta_series_from_counts(counts, PATH_COUNT_PRECISION)
    rhs_series = zeta_reciprocal_series(h_level, chi_level, PATH_COUNT_PRECISION).inverse()
    items.append(
        VerifyItem(
            "path-count-oracle",
            "pass" if lhs_series == rhs_series else "fail",
            f"exp(sum N_k u^k/k) matches 1/Z^-1 through u^{PATH_COUNT_PRECISION - 1}",
        )
    )

    profile = ramification_profile(d, n)
    branch_sum = sum(fiber * (m - 1) for fiber, m in profile)
    chi_base = d.base.n_vertices - d.base.n_edges
    rh_value = p**n * chi_base - branch_sum
    rh_ok = rh_value == chi_level == tower_euler_char(d, n)
    items.append(
        VerifyItem(
            "riemann-hurwitz",
            "pass" if rh_ok else "fail",
            f"chi = {chi_level}, branched closed form = {rh_value}",
        )
    )

    r0_total = sum(r0(d, n, psi) for psi in characters(p, n))
    r0_ok = r0_total == branch_sum
    items.append(
        VerifyItem(
            "r0-sum",
            "pass" if r0_ok else "fail",
            f"sum r0(psi) = {r0_total}, sum (m_w - 1) = {branch_sum}",
        )
    )

    if tower_euler_char(d, n) == 0:
        items.append(
            VerifyItem("vanishing-order", "skip", f"chi(X_{n}) = 0, hypothesis not met")
        )
    else:
        res = vanishing_order_check(d, n)
        items.append(
            VerifyItem(
                "vanishing-order",
                "pass" if res["ok"] else "fail",
                "simple zero at u=1 for the trivial character only",
            )
        )

    eta_G = eta_poly(d, n)
    eta_H = eta_for_subgroup_action(d, n, subgroup_order)
    norm_ok = norm_map(eta_G, subgroup_order) == eta_H
    items.append(
        VerifyItem(
            "norm-induction-eta",
            "pass" if norm_ok else "fail",
            f"N maps eta over Z/{p**n} to eta of the order-{subgroup_order} subgroup action",
        )
    )

    gamma_H = norm_gamma_exponents(d, n, subgroup_order)
    exps_H = _subgroup_gamma_direct(d, n, subgroup_order)
    items.append(
        VerifyItem(
            "norm-induction-gamma",
            "pass" if gamma_H == exps_H else "fail",
            f"summed exponents {gamma_H} vs direct {exps_H}",
        )
    )

    infl = inflation_check(d, n, subgroup_order)
    note = "not equal (expected)" if not infl.equal else "equal"
    items.append(
        VerifyItem(
            "inflation",
            "info",
            f"{note}: pi_H(eta) = {poly_text(infl.lhs)}; eta of quotient = {poly_text(infl.rhs)}",
        )
    )
    return items


def _subgroup_gamma_direct(d: TowerDatum, n: int, subgroup_order: int) -> tuple[int, ...]:
    # chi_phi for the subgroup action, from the orbit structure of the cover.
    lg = build_level_graph(d, n)
    graph = lg.graph
    m = d.p**n
    step = m // subgroup_order
    from .lfunctions import CharacterLabel

    p = d.p
    h_exp = 0
    t = subgroup_order
    while t > 1:
        t //= p
        h_exp += 1
    # Stabilizer of a vertex (base, rep) in H has order |H| / orbit size.
    out = []
    for b in range(subgroup_order):
        phi = CharacterLabel(p, h_exp, b)
        killed = 0
        seen = set()
        for vi in range(graph.n_vertices):
            base = lg.vertex_base[vi]
            fiber = d.fiber_size(base, n)
            rep = lg.vertex_rep[vi]
            orbit = frozenset((base, (rep + t0 * step) % fiber) for t0 in range(subgroup_order))
            if orbit in seen:
                continue
            seen.add(orbit)
            stab = subgroup_order // len(orbit)
            if not phi.kernel_contains(stab):
                killed += 1
        n_orbit_vertices = len(seen)
        n_orbit_edges = graph.n_edges // subgroup_order
        out.append(n_orbit_vertices - n_orbit_edges - killed)
    return tuple(out)
