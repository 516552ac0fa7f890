"""Iwasawa invariants of the tower: mu, lambda, nu, and the series g(T).

ord_p of the spanning-tree count grows like mu p^n + lambda n + nu along
the tower.  mu and lambda have closed forms: mu is the mu-invariant of the
power series g(T) = det(D - A_rho) on the unramified vertex block, with
rho(a) = (1+T)^a, and lambda assembles the contribution of each character
block plus the trivial-character term.  nu has no closed form; it is
certified empirically from the sweep together with the first level n0 from
which the formula reproduces every computed row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cyclo import euler_phi_prime_power, ordp_fraction
from .errors import CertificationError, HypothesisError
from .graphs import connected, euler_characteristic, spanning_tree_count
from .poly import UniPoly
from .tower import TowerDatum, build_level_graph, tower_euler_char

__all__ = [
    "GSeries",
    "IwasawaInvariants",
    "TowerRow",
    "char_ideal_generator",
    "closed_form_invariants",
    "fit_and_certify",
    "g_series",
    "lambda_components",
    "mu_lambda",
    "tower_sweep",
]


def mu_lambda(coeffs, p: int) -> tuple[int, int]:
    """mu and lambda of a nonzero integer polynomial (or coefficient list).

    mu is the least p-adic valuation of a coefficient; lambda is the least
    index attaining it.
    """
    if isinstance(coeffs, UniPoly):
        coeffs = coeffs.coeffs
    checked = []
    for c in coeffs:
        fr = Fraction(c)
        if fr.denominator != 1:
            raise ValueError("mu/lambda extraction needs integer coefficients")
        checked.append(fr.numerator)
    coeffs = checked
    if not any(coeffs):
        raise ValueError("mu/lambda of the zero series is undefined")
    best_mu = None
    best_lambda = None
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        v = ordp_fraction(c, p).value
        if best_mu is None or v < best_mu:
            best_mu = int(v)
            best_lambda = i
    return best_mu, best_lambda


@dataclass(frozen=True)
class GSeries:
    """Integer-polynomial representative of g(T), up to a (1+T)-power unit.

    The unit does not move mu or lambda, so the extracted invariants are
    those of g itself.
    """

    rep: UniPoly
    unit_exponent: int
    p: int

    @property
    def mu_unr(self) -> int:
        return mu_lambda(self.rep, self.p)[0]

    @property
    def lambda_unr(self) -> int:
        return mu_lambda(self.rep, self.p)[1]


def g_series(d: TowerDatum) -> GSeries:
    """g(T) = det(D - A_rho) on the unramified block, rho(a) = (1+T)^a.

    Rows are premultiplied by (1+T)^(sum of |negative voltages| in the row)
    so every entry is an honest integer polynomial; the determinant is then
    the g(T) representative times that total (1+T)-power.
    """
    unram = d.unramified_vertices
    if not unram:
        return GSeries(UniPoly.constant(1), 0, d.p)
    pos = {v: i for i, v in enumerate(unram)}
    base = d.base
    one_plus = UniPoly([1, 1])
    # Row normalization exponents.
    row_shift = [0] * len(unram)
    for e in range(base.n_darts):
        o, t = base.dart_origin[e], base.dart_terminus[e]
        if o in pos and t in pos and d.voltage[e] < 0:
            row_shift[pos[t]] += -d.voltage[e]
    deg = [0] * base.n_vertices
    for e in range(base.n_darts):
        deg[base.dart_origin[e]] += 1
    rows = []
    for i, vi in enumerate(unram):
        shift = one_plus ** row_shift[i]
        row = []
        for vj in unram:
            entry = UniPoly.constant(deg[vi]) * shift if vi == vj else UniPoly()
            for e in range(base.n_darts):
                if base.dart_origin[e] == vj and base.dart_terminus[e] == vi:
                    entry = entry - one_plus ** (row_shift[i] + d.voltage[e])
            row.append(entry)
        rows.append(row)
    det = linalg.det_commutative(rows)
    if not isinstance(det, UniPoly):
        det = UniPoly.constant(det)
    int_coeffs = []
    for c in det.coeffs:
        fr = Fraction(c)
        if fr.denominator != 1:
            raise CertificationError("g(T) representative has a non-integer coefficient")
        int_coeffs.append(fr.numerator)
    return GSeries(UniPoly(int_coeffs), sum(row_shift), d.p)


def lambda_components(d: TowerDatum) -> tuple[int, list[int], int]:
    """(lambda_0, [lambda_j for j = 1..n1], lambda_unr)."""
    ram = d.ramified_vertices
    chi_base = d.base.n_vertices - d.base.n_edges
    if ram:
        lambda0 = len(ram) - 1
    elif chi_base != 0:
        lambda0 = 0
    else:
        raise HypothesisError("undefined: V^ram is empty and chi(X) = 0")
    lambdas = []
    for j in range(1, d.n1 + 1):
        count = sum(1 for v in ram if d.ram[v] >= j)
        lambdas.append(euler_phi_prime_power(d.p, j) * count)
    return lambda0, lambdas, g_series(d).lambda_unr


def closed_form_invariants(d: TowerDatum) -> tuple[int, int]:
    """(mu, lambda) from the closed forms; requires chi(X_n) < 0 eventually."""
    if tower_euler_char(d, d.n1 + 2) >= 0:
        raise HypothesisError("tower does not satisfy chi(X_n) < 0 eventually")
    gs = g_series(d)
    lambda0, lambdas, lambda_unr = lambda_components(d)
    ram = d.ramified_vertices
    if ram:
        assembled = lambda0 + sum(lambdas) + lambda_unr
        alt = lambda_unr + sum(d.p ** d.ram[v] for v in ram) - 1
        if assembled != alt:
            raise CertificationError(
                f"lambda assemblies disagree: {assembled} vs {alt}"
            )
        lam = assembled
    else:
        lam = lambda0 + lambda_unr - 1
    return gs.mu_unr, lam


@dataclass(frozen=True)
class TowerRow:
    n: int
    n_vertices: int
    n_edges: int
    chi: int
    kappa: int
    ordp_kappa: int


def tower_sweep(d: TowerDatum, n_max: int) -> list[TowerRow]:
    """Exact rows for levels 0..n_max; every level must be connected."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    rows = []
    for n in range(n_max + 1):
        lg = build_level_graph(d, n)
        if not connected(lg.graph):
            raise HypothesisError(f"level {n} disconnected")
        kappa = spanning_tree_count(lg.graph)
        ordp = ordp_fraction(kappa, d.p).value
        rows.append(
            TowerRow(
                n,
                lg.graph.n_vertices,
                lg.graph.n_edges,
                euler_characteristic(lg.graph),
                kappa,
                int(ordp),
            )
        )
    return rows


@dataclass(frozen=True)
class IwasawaInvariants:
    mu: int
    lam: int
    nu: int
    n0: int


def fit_and_certify(rows: list[TowerRow], p: int, mu: int, lam: int, n1: int = 0) -> IwasawaInvariants:
    """Certify ord_p(kappa) = mu p^n + lambda n + nu over the swept range.

    nu is read off the last row; n0 is the least level from which the
    formula reproduces every subsequent row.  The last three rows must
    agree, and at least three rows must lie beyond max(n1, first level
    with negative Euler characteristic).
    """
    if not rows:
        raise ValueError("empty sweep")
    first_negative = next((r.n for r in rows if r.chi < 0), None)
    if first_negative is None:
        raise CertificationError("asymptotic regime not reached by n_max")
    threshold = max(n1, first_negative)
    tail = [r for r in rows if r.n > threshold]
    if len(tail) < 3:
        raise CertificationError("asymptotic regime not reached by n_max")
    residuals = {r.n: r.ordp_kappa - mu * p**r.n - lam * r.n for r in rows}
    last = [r.n for r in rows[-3:]]
    nu = residuals[last[-1]]
    if any(residuals[n] != nu for n in last):
        raise CertificationError("asymptotic regime not reached by n_max")
    n0 = rows[-1].n
    for r in reversed(rows):
        if residuals[r.n] == nu:
            n0 = r.n
        else:
            break
    return IwasawaInvariants(mu, lam, nu, n0)


@dataclass(frozen=True)
class CharIdealGenerator:
    """f(T) = g(T) * prod over ramified v of ((1+T)^(p^k_v) - 1), and f/T."""

    f: UniPoly
    f_over_t: UniPoly
    mu: int
    lam_f_over_t: int


def char_ideal_generator(d: TowerDatum) -> CharIdealGenerator:
    gs = g_series(d)
    f = gs.rep
    one_plus = UniPoly([1, 1])
    for v in d.ramified_vertices:
        f = f * (one_plus ** (d.p ** d.ram[v]) - 1)
    if f.is_zero():
        raise CertificationError("characteristic-ideal representative vanished")
    quotient = f.divide_by_u(1) if f.coefficient(0) == 0 else None
    if quotient is None:
        raise CertificationError(
            "characteristic-ideal representative is not divisible by T"
        )
    mu_f, _ = mu_lambda(f, d.p)
    _, lam_q = mu_lambda(quotient, d.p)
    return CharIdealGenerator(f, quotient, mu_f, lam_q)
