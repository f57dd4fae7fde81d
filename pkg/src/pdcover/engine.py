"""Synchronous primal-dual rounds for hypergraph vertex cover.

Each round raises every live edge ``e`` by
``delta(e) = min over v in e of w_p(v) / d_p(v)``, where ``w_p`` is the
residual weight and ``d_p`` the residual degree, both read from a
snapshot taken at the start of the round. A vertex whose residual weight
falls to ``eps * w(v)`` or below joins the cover and takes its edges with
it. When no edge is left the deleted vertices form a cover of weight at
most ``r / (1 - eps)`` times the minimum, and the raised values form an
``eps``-maximal edge packing.

Three arithmetic modes are supported:

``NumericMode.FLOAT64``
    binary64 floats, fixed ascending-edge-id summation order.
``NumericMode.RATIONAL``
    exact :class:`fractions.Fraction` arithmetic.
``NumericMode.SCALED_INTEGER``
    integer weights pre-scaled so that every weight is at least ``m/eps``
    (see :func:`scale_weights_integer`); quotients use floor division.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from concurrent.futures import Executor, ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    CoverError,
    EpsOutOfRange,
    NoLiveEdges,
    NonIntegerWeights,
    RoundBoundExceeded,
)
from .hypergraph import GraphStats, Hypergraph, as_fraction

__all__ = [
    "CoverResult",
    "NumericMode",
    "PackingState",
    "RoundReport",
    "good_vertex_fraction",
    "init_state",
    "potential",
    "round_bound",
    "round_cap",
    "run_cover",
    "run_round",
    "scale_weights_integer",
    "solve",
    "work_bound",
]


class NumericMode(str, enum.Enum):
    FLOAT64 = "float"
    RATIONAL = "rational"
    SCALED_INTEGER = "int"

    @classmethod
    def parse(cls, value: "NumericMode | str") -> "NumericMode":
        if isinstance(value, cls):
            return value
        key = str(value).lower()
        aliases = {"float64": "float", "fraction": "rational", "scaledinteger": "int", "scaled_integer": "int"}
        return cls(aliases.get(key, key))

    @property
    def bound_factor(self) -> int:
        """Slack on the round and work bounds (floor division halves progress)."""
        return 2 if self is NumericMode.SCALED_INTEGER else 1


def round_bound(r: int, m: int, eps) -> float:
    """``(1 + r ln(1/eps)) (1 + ln m)``: the proven cap on the number of rounds."""
    if m == 0:
        return 0.0
    return (1 + r * math.log(1 / float(eps))) * (1 + math.log(m))


def work_bound(m: int, M: int, eps) -> float:
    """``m + M ln(1/eps)``: cap on the edges processed, summed over rounds."""
    return m + M * math.log(1 / float(eps))


def round_cap(r: int, m: int, eps) -> float:
    """Hard stop for :func:`run_cover`; crossing it means the arithmetic is broken."""
    if m == 0:
        return 0.0
    a = r * math.log(1 / float(eps))
    return 2 * round_bound(r, m, eps) + a + 2


def _check_eps(eps) -> Fraction:
    try:
        q = as_fraction(eps)
    except (TypeError, ValueError) as exc:
        raise EpsOutOfRange(f"eps must be a number in (0, 1), got {eps!r}") from exc
    if not 0 < q < 1:
        raise EpsOutOfRange(f"eps must lie strictly between 0 and 1, got {eps!r}")
    return q


def _as_int_weight(v: int, w) -> int:
    if isinstance(w, int):
        return w
    if isinstance(w, Fraction) and w.denominator == 1:
        return int(w)
    if isinstance(w, float) and w.is_integer():
        return int(w)
    raise NonIntegerWeights(f"vertex {v} has non-integer weight {w!r}")


def scale_weights_integer(h: Hypergraph, eps) -> tuple[Hypergraph, int]:
    """Scale integer weights so the smallest is at least ``ceil(m/eps)``.

    Returns the scaled hypergraph and the integer scale factor
    ``ceil(ceil(m/eps) / min_weight)`` (1 when no scaling is needed). With
    the scaled weights every live vertex keeps ``w_p(v) >= m``, so the
    floored quotient ``w_p(v) // d_p(v)`` is at least half the exact one.

    When ``eps >= 1/(2 w(V))`` and the inputs are ``k``-bit integers the
    scaled weights are checked to fit in ``2k + 3 + log2(m) + log2(n)``
    bits; a violation raises ``AssertionError``.
    """
    q = _check_eps(eps)
    weights = [_as_int_weight(v, w) for v, w in enumerate(h.weights)]
    if not weights or h.m == 0:
        return Hypergraph(weights, h.edges), 1
    target = math.ceil(h.m / q)
    factor = max(1, -(-target // min(weights)))
    scaled = [w * factor for w in weights]
    k = max(weights).bit_length()
    if q >= Fraction(1, 2 * sum(weights)):
        limit = 2 ** (2 * k + 3) * h.m * h.n
        if max(scaled) > limit:
            raise AssertionError(f"scaled weight {max(scaled)} exceeds 2^(2k+3) m n = {limit}")
    return Hypergraph(scaled, h.edges), factor


@dataclass
class PackingState:
    """Mutable state of one run; see :func:`init_state`.

    ``w`` holds the weights converted to the run's numeric type,
    ``w_p`` the residual weights, ``d_p`` the residual degrees, ``p`` the
    accumulated packing value of every edge (live or not) and ``deleted``
    the cover vertices in the order they were admitted.
    """

    h: Hypergraph
    eps: Fraction
    mode: NumericMode
    w: list
    w_p: list
    d_p: list[int]
    p: list
    live: list[bool]
    live_edges: list[int]
    live_inc: list[list[int]]
    active: list[int]
    deleted: list[int] = field(default_factory=list)
    in_cover: list[bool] = field(default_factory=list)
    round: int = 0
    phi: float = 0.0

    @property
    def remaining(self) -> list[int]:
        return self.live_edges

    def is_spent(self, v: int) -> bool:
        """The deletion test ``w_p(v) <= eps * w(v)``."""
        wp, w = self.w_p[v], self.w[v]
        if self.mode is NumericMode.SCALED_INTEGER:
            return wp * self.eps.denominator <= self.eps.numerator * w
        if self.mode is NumericMode.FLOAT64:
            return wp <= float(self.eps) * w
        return wp <= self.eps * w

    def quotient(self, v: int):
        if self.mode is NumericMode.SCALED_INTEGER:
            return self.w_p[v] // self.d_p[v]
        return self.w_p[v] / self.d_p[v]


@dataclass
class RoundReport:
    """Instrumentation for one round.

    ``delta`` and ``limiter`` are keyed by the edges live at the start of
    the round; ``limiter[e]`` is the lowest-id vertex attaining the
    minimum quotient and ``L[v]`` counts the edges ``v`` limits.
    """

    index: int
    edges_at_start: int
    edges_at_end: int
    delta: dict
    deleted_this_round: tuple[int, ...]
    phi_before: float
    phi_after: float
    limiter: dict
    L: dict
    good_edge_fraction: Fraction
    touches: int

    @property
    def phi_drop(self) -> float:
        return self.phi_before - self.phi_after


@dataclass
class CoverResult:
    cover: tuple[int, ...]
    deletion_order: tuple[int, ...]
    packing: tuple
    cover_weight: object
    packing_weight: object
    rounds: list[RoundReport]
    stats: GraphStats
    eps: Fraction
    mode: NumericMode
    scale_factor: int = 1

    @property
    def num_rounds(self) -> int:
        return len(self.rounds)

    @property
    def work(self) -> int:
        """Edges processed, summed over rounds."""
        return sum(rep.edges_at_start for rep in self.rounds)

    @property
    def touches(self) -> int:
        """Edge-vertex incidences processed, summed over rounds."""
        return sum(rep.touches for rep in self.rounds)

    def original_packing(self) -> tuple:
        """Packing in the units of the unscaled weights."""
        if self.scale_factor == 1:
            return self.packing
        return tuple(Fraction(x, self.scale_factor) for x in self.packing)


def init_state(h: Hypergraph, eps, mode: NumericMode | str = NumericMode.RATIONAL) -> PackingState:
    """Fresh state: ``w_p = w``, zero packing, every edge live."""
    q = _check_eps(eps)
    mode = NumericMode.parse(mode)
    if mode is NumericMode.FLOAT64:
        w = [float(x) for x in h.weights]
        zero = 0.0
    elif mode is NumericMode.RATIONAL:
        w = [as_fraction(x) for x in h.weights]
        zero = Fraction(0)
    else:
        w = [_as_int_weight(v, x) for v, x in enumerate(h.weights)]
        zero = 0
        if h.m and min(w[v] for v in range(h.n) if h.incidence[v]) < h.m / q:
            raise CoverError("integer weights must be at least m/eps; use scale_weights_integer first")
    d_p = [len(inc) for inc in h.incidence]
    state = PackingState(
        h=h,
        eps=q,
        mode=mode,
        w=w,
        w_p=list(w),
        d_p=d_p,
        p=[zero] * h.m,
        live=[True] * h.m,
        live_edges=list(range(h.m)),
        live_inc=[list(inc) for inc in h.incidence],
        active=[v for v in range(h.n) if d_p[v]],
        in_cover=[False] * h.n,
    )
    state.phi = potential(state)
    return state


def potential(state: PackingState) -> float:
    """``sum_v d_p(v) ln(w_p(v) / (eps w(v)))``, evaluated in binary64."""
    eps = state.eps
    terms = []
    for v in state.active:
        d = state.d_p[v]
        if not d:
            continue
        if state.mode is NumericMode.FLOAT64:
            ratio = state.w_p[v] / (float(eps) * state.w[v])
        else:
            ratio = Fraction(state.w_p[v] * eps.denominator, eps.numerator * state.w[v])
        terms.append(d * math.log(ratio))
    return math.fsum(terms)


def good_vertex_fraction(limiter: Mapping[int, int], edges: Sequence[Sequence[int]]) -> Fraction:
    """Share of edges directed into good vertices.

    Each edge ``e`` in ``limiter`` is directed into ``limiter[e]``. A vertex
    is good when strictly more than a third of its incident edges (among
    those in ``limiter``) point into it.
    """
    if not limiter:
        return Fraction(1)
    degree: Counter = Counter()
    for e in limiter:
        degree.update(edges[e])
    indeg = Counter(limiter.values())
    into_good = sum(k for v, k in indeg.items() if 3 * k > degree[v])
    return Fraction(into_good, len(limiter))


def _limit_chunk(state: PackingState, quot: dict, chunk: Sequence[int]):
    edges = state.h.edges
    out = []
    for e in chunk:
        vs = edges[e]
        best, best_q = vs[0], quot[vs[0]]
        for v in vs[1:]:
            qv = quot[v]
            if qv < best_q or (qv == best_q and v < best):
                best, best_q = v, qv
        out.append((e, best, best_q))
    return out


def _charge_chunk(state: PackingState, delta: dict, chunk: Sequence[int]):
    # per-vertex sums run over live_inc[v], which is in ascending edge id
    return [(v, sum(delta[e] for e in state.live_inc[v])) for v in chunk]


def _split(seq: Sequence[int], parts: int):
    size = -(-len(seq) // parts)
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def _map_chunks(executor: Executor | None, workers: int, fn, state, aux, seq):
    if executor is None or workers <= 1 or len(seq) < 2 * workers:
        return fn(state, aux, seq)
    out = []
    for part in executor.map(lambda c: fn(state, aux, c), _split(seq, workers)):
        out.extend(part)
    return out


def _check_scaled_progress(state: PackingState) -> None:
    m = state.h.m
    for v in state.active:
        wp, d = state.w_p[v], state.d_p[v]
        if not isinstance(wp, int):
            raise AssertionError(f"non-integer residual weight {wp!r} at vertex {v}")
        q = wp // d
        if wp < m or q < 1 or 2 * q * d < wp:
            raise AssertionError(f"scaled progress guarantee broken at vertex {v}: w_p={wp}, d_p={d}, m={m}")


def run_round(state: PackingState, executor: Executor | None = None, workers: int = 1) -> RoundReport:
    """Run one synchronous round in place and return its report.

    All quotients are read from the round-start snapshot; packing values,
    residual weights and deletions are committed afterwards. With an
    ``executor`` the per-edge and per-vertex maps are split into
    ``workers`` contiguous chunks; the committed result is identical to
    the sequential evaluation.
    """
    if not state.live_edges:
        raise NoLiveEdges("no live edges left; the packing is already eps-maximal")
    scaled = state.mode is NumericMode.SCALED_INTEGER
    if scaled:
        _check_scaled_progress(state)

    h = state.h
    live_edges = state.live_edges
    active = state.active
    d_start = {v: state.d_p[v] for v in active}
    quot = {v: state.quotient(v) for v in active}

    limited = _map_chunks(executor, workers, _limit_chunk, state, quot, live_edges)
    delta = {e: q for e, _, q in limited}
    limiter = {e: v for e, v, _ in limited}

    charges = _map_chunks(executor, workers, _charge_chunk, state, delta, active)
    for e in live_edges:
        state.p[e] += delta[e]
    for v, s in charges:
        state.w_p[v] -= s

    newly = [v for v in active if state.is_spent(v)]
    touched = set()
    for v in newly:
        state.in_cover[v] = True
        state.deleted.append(v)
        for e in state.live_inc[v]:
            if state.live[e]:
                state.live[e] = False
                for u in h.edges[e]:
                    state.d_p[u] -= 1
                    touched.add(u)
    if newly:
        live = state.live
        for u in touched:
            state.live_inc[u] = [e for e in state.live_inc[u] if live[e]]
        state.live_edges = [e for e in live_edges if live[e]]
        state.active = [v for v in active if state.d_p[v]]

    L = Counter(limiter.values())
    into_good = sum(k for v, k in L.items() if 3 * k > d_start[v])
    phi_before = state.phi
    state.phi = potential(state)
    state.round += 1
    return RoundReport(
        index=state.round,
        edges_at_start=len(live_edges),
        edges_at_end=len(state.live_edges),
        delta=delta,
        deleted_this_round=tuple(newly),
        phi_before=phi_before,
        phi_after=state.phi,
        limiter=limiter,
        L=dict(L),
        good_edge_fraction=Fraction(into_good, len(live_edges)),
        touches=sum(len(h.edges[e]) for e in live_edges),
    )


def run_cover(h: Hypergraph, eps, mode: NumericMode | str = NumericMode.RATIONAL, workers: int = 1) -> CoverResult:
    """Run rounds until no edge is live and return the cover and packing.

    In ``SCALED_INTEGER`` mode ``h`` must already carry scaled integer
    weights; :func:`solve` does the scaling for you.

    Raises
    ------
    RoundBoundExceeded
        if the run passes :func:`round_cap` rounds.
    """
    state = init_state(h, eps, mode)
    cap = round_cap(h.r, h.m, state.eps)
    reports: list[RoundReport] = []
    executor = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while state.live_edges:
            if state.round >= cap:
                raise RoundBoundExceeded(f"{state.round} rounds exceed the cap {cap:.1f} (m={h.m}, r={h.r})")
            reports.append(run_round(state, executor, workers))
    finally:
        if executor is not None:
            executor.shutdown()
    cover = tuple(sorted(state.deleted))
    return CoverResult(
        cover=cover,
        deletion_order=tuple(state.deleted),
        packing=tuple(state.p),
        cover_weight=h.total_weight(cover),
        packing_weight=sum(state.p),
        rounds=reports,
        stats=h.stats(),
        eps=state.eps,
        mode=state.mode,
    )


def solve(h: Hypergraph, eps=Fraction(1, 10), mode: NumericMode | str | None = None, workers: int = 1) -> CoverResult:
    """Approximate minimum-weight vertex cover of ``h``.

    ``mode=None`` picks exact rationals for small instances
    (``n * m <= 10**5``) and floats otherwise. In ``SCALED_INTEGER`` mode
    the weights are scaled first and the returned weights are expressed
    in the original units (``packing`` stays scaled; see
    :meth:`CoverResult.original_packing`).
    """
    if mode is None:
        mode = NumericMode.RATIONAL if h.n * h.m <= 10**5 else NumericMode.FLOAT64
    mode = NumericMode.parse(mode)
    if mode is not NumericMode.SCALED_INTEGER:
        return run_cover(h, eps, mode, workers)
    scaled, factor = scale_weights_integer(h, eps)
    res = run_cover(scaled, eps, mode, workers)
    return replace(
        res,
        cover_weight=h.total_weight(res.cover),
        packing_weight=Fraction(res.packing_weight, factor),
        scale_factor=factor,
    )
