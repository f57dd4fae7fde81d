"""Independent checks of covers, packings and the duality bounds tying them.

Everything here is recomputed from the raw instance, the candidate cover
and the per-edge packing values; nothing is taken from engine state.
Exact inputs (ints, Fractions) are checked exactly. As soon as a float
shows up, inequalities get a slack of ``1e-9 * w(V)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import EpsTooLarge, InvalidInputs, NegativePackingValue, NonIntegerWeights, NotEpsMaximal
from .hypergraph import Hypergraph, as_fraction

__all__ = [
    "CertificateReport",
    "certify",
    "check_duality",
    "check_integer_tightening",
    "check_slackness",
    "duality_chain",
    "vertex_loads",
    "verify_cover",
    "verify_eps_maximal",
    "verify_packing",
]

REL_TOL = 1e-9


class PackingCheck(NamedTuple):
    feasible: bool
    violations: list[int]


class CoverCheck(NamedTuple):
    is_cover: bool
    uncovered: list[int]


class EpsMaximalCheck(NamedTuple):
    eps_maximal: bool
    c_p: list[int]


@dataclass
class CertificateReport:
    packing_feasible: bool
    violations: list[int]
    is_cover: bool
    uncovered: list[int]
    eps_maximal: bool
    cover: list[int]
    cover_weight: Real
    packing_weight: Real
    duality_gap: Real
    slackness_lhs: Real
    slackness_rhs: Real
    ratio_bound: Real
    tolerance: float = 0.0

    @property
    def weak_duality(self) -> bool:
        return self.duality_gap >= -self.tolerance

    @property
    def slackness(self) -> bool:
        return self.slackness_lhs <= self.slackness_rhs + self.tolerance

    @property
    def passed(self) -> bool:
        return (
            self.packing_feasible
            and self.is_cover
            and self.eps_maximal
            and self.weak_duality
            and self.slackness
        )


def _values(h: Hypergraph, p: Sequence[Real] | Mapping[int, Real]) -> list:
    if isinstance(p, Mapping):
        vals = [0] * h.m
        for e, x in p.items():
            vals[e] = x
    else:
        vals = list(p)
        if len(vals) != h.m:
            raise InvalidInputs(f"packing has {len(vals)} values for {h.m} edges")
    for e, x in enumerate(vals):
        if x < 0:
            raise NegativePackingValue(f"p({e}) = {x!r} < 0")
    return vals


def _tolerance(h: Hypergraph, *values: Iterable) -> float:
    seqs = (h.weights,) + values
    if any(isinstance(x, float) for seq in seqs for x in seq):
        return REL_TOL * float(h.total_weight())
    return 0.0


def vertex_loads(h: Hypergraph, p: Sequence[Real]) -> list:
    """``p(E(v))`` for every vertex, summed in ascending edge id."""
    return [sum((p[e] for e in inc), 0) for inc in h.incidence]


def verify_packing(h: Hypergraph, p, tol: float | None = None) -> PackingCheck:
    """Check ``p(E(v)) <= w(v)`` at every vertex; list the violators."""
    vals = _values(h, p)
    if tol is None:
        tol = _tolerance(h, vals)
    loads = vertex_loads(h, vals)
    bad = [v for v, (load, w) in enumerate(zip(loads, h.weights)) if load > w + tol]
    return PackingCheck(not bad, bad)


def verify_cover(h: Hypergraph, cover: Iterable[int]) -> CoverCheck:
    chosen = set(cover)
    uncovered = [e for e, edge in enumerate(h.edges) if chosen.isdisjoint(edge)]
    return CoverCheck(not uncovered, uncovered)


def _c_p(h: Hypergraph, vals: list, eps, tol: float) -> list[int]:
    loads = vertex_loads(h, vals)
    if tol:
        one_minus = 1 - float(eps)
        return [v for v, (ld, w) in enumerate(zip(loads, h.weights)) if ld >= one_minus * w - tol]
    one_minus = 1 - as_fraction(eps)
    return [v for v, (ld, w) in enumerate(zip(loads, h.weights)) if ld >= one_minus * as_fraction(w)]


def verify_eps_maximal(h: Hypergraph, p, eps, tol: float | None = None) -> EpsMaximalCheck:
    """Build ``C_p = {v : p(E(v)) >= (1 - eps) w(v)}`` and check that it covers."""
    vals = _values(h, p)
    if tol is None:
        tol = _tolerance(h, vals)
    c_p = _c_p(h, vals, eps, tol)
    return EpsMaximalCheck(verify_cover(h, c_p).is_cover, c_p)


def check_duality(h: Hypergraph, cover: Iterable[int], p, tol: float | None = None) -> bool:
    """Weak duality: ``p(E) <= w(C)`` for any cover ``C`` and packing ``p``."""
    cover = list(cover)
    vals = _values(h, p)
    if tol is None:
        tol = _tolerance(h, vals)
    if not verify_cover(h, cover).is_cover:
        raise InvalidInputs("the given vertex set is not a cover")
    if not verify_packing(h, vals, tol).feasible:
        raise InvalidInputs("the given edge values are not a packing")
    return sum(vals) <= h.total_weight(cover) + tol


def duality_chain(h: Hypergraph, cover: Iterable[int], p) -> tuple:
    """The four quantities of the weak-duality chain.

    Returns ``(p(E), sum_e |e & C| p(e), sum_{v in C} p(E(v)), w(C))``.
    The middle two are equal (a swap of summation order); the whole
    tuple is non-decreasing when ``C`` is a cover and ``p`` a packing.
    """
    chosen = set(cover)
    vals = _values(h, p)
    loads = vertex_loads(h, vals)
    by_edge = sum(len(chosen.intersection(edge)) * vals[e] for e, edge in enumerate(h.edges))
    by_vertex = sum(loads[v] for v in sorted(chosen))
    return sum(vals), by_edge, by_vertex, h.total_weight(sorted(chosen))


def check_slackness(h: Hypergraph, p, eps, tol: float | None = None) -> CertificateReport:
    """Certify an eps-maximal packing and its cover ``C_p``.

    Checks ``(1 - eps) w(C_p) <= r p(E)``. Together with weak duality this
    puts both ``C_p`` and ``p`` within ``r / (1 - eps)`` of their optima.

    Raises
    ------
    NotEpsMaximal
        if ``C_p`` does not cover every edge.
    """
    vals = _values(h, p)
    if tol is None:
        tol = _tolerance(h, vals)
    ok, c_p = verify_eps_maximal(h, vals, eps, tol)
    if not ok:
        raise NotEpsMaximal("C_p leaves edges uncovered")
    return certify(h, c_p, vals, eps, tol)


def certify(h: Hypergraph, cover: Iterable[int], p, eps, tol: float | None = None) -> CertificateReport:
    """Full report for a candidate (cover, packing) pair. Never raises on failed checks."""
    cover = sorted(set(cover))
    vals = _values(h, p)
    if tol is None:
        tol = _tolerance(h, vals)
    feasible, violations = verify_packing(h, vals, tol)
    is_cover, uncovered = verify_cover(h, cover)
    eps_max, _ = verify_eps_maximal(h, vals, eps, tol)
    wc = h.total_weight(cover)
    pe = sum(vals)
    if tol:
        eps_v, ratio = float(eps), h.r / (1 - float(eps))
    else:
        eps_v = as_fraction(eps)
        ratio = Fraction(h.r) / (1 - eps_v)
    return CertificateReport(
        packing_feasible=feasible,
        violations=violations,
        is_cover=is_cover,
        uncovered=uncovered,
        eps_maximal=eps_max,
        cover=cover,
        cover_weight=wc,
        packing_weight=pe,
        duality_gap=wc - pe,
        slackness_lhs=(1 - eps_v) * wc,
        slackness_rhs=h.r * pe,
        ratio_bound=ratio,
        tolerance=tol,
    )


def check_integer_tightening(h: Hypergraph, cover_weight, opt_weight, eps) -> bool:
    """With integer weights and ``eps < 1/w(V)``: is ``cover_weight <= r * opt_weight``?"""
    for v, w in enumerate(h.weights):
        if as_fraction(w).denominator != 1:
            raise NonIntegerWeights(f"vertex {v} has non-integer weight {w!r}")
    total = h.total_weight()
    if as_fraction(eps) * total >= 1:
        raise EpsTooLarge(f"eps = {eps} is not below 1/w(V) = 1/{total}")
    return cover_weight <= h.r * opt_weight
