import math
from fractions import Fraction

import pytest

from conftest import random_small
from oracles import interpret_cover
from pdcover import (
    CoverError,
    EpsOutOfRange,
    NoLiveEdges,
    NonIntegerWeights,
    NumericMode,
    RoundBoundExceeded,
    build_hypergraph,
    good_vertex_fraction,
    init_state,
    potential,
    round_bound,
    run_cover,
    run_round,
    scale_weights_integer,
    solve,
    work_bound,
)
from pdcover import engine

F = Fraction


def test_init_state(triangle):
    s = init_state(triangle, 0.1)
    assert s.w_p == [1, 1, 1]
    assert s.d_p == [2, 2, 2]
    assert s.remaining == [0, 1, 2]
    assert s.p == [0, 0, 0] and s.deleted == [] and s.round == 0


@pytest.mark.parametrize("eps", [0, 1, -0.5, 1.5, "abc"])
def test_eps_out_of_range(triangle, eps):
    with pytest.raises(EpsOutOfRange):
        init_state(triangle, eps)


def test_scaled_mode_needs_integers():
    h = build_hypergraph([F(1, 2), 100], [(0, 1)])
    with pytest.raises(NonIntegerWeights):
        init_state(h, "0.5", NumericMode.SCALED_INTEGER)


def test_scaled_mode_needs_scaled_weights(triangle):
    with pytest.raises(CoverError):
        init_state(triangle, "0.1", "int")


def test_round_path(path3):
    s = init_state(path3, "0.25")
    rep = run_round(s)
    assert rep.delta == {0: F(1, 2), 1: F(1, 2)}
    assert s.w_p == [F(1, 2), 0, F(1, 2)]
    assert s.deleted == [1]
    assert s.remaining == []
    assert rep.deleted_this_round == (1,)
    assert (rep.edges_at_start, rep.edges_at_end) == (2, 0)


def test_round_triangle(triangle):
    s = init_state(triangle, "0.1")
    rep = run_round(s)
    assert set(rep.delta.values()) == {F(1, 2)}
    assert s.w_p == [0, 0, 0]
    assert sorted(s.deleted) == [0, 1, 2]
    # lowest-id tie breaking
    assert rep.limiter == {0: 0, 1: 1, 2: 0}
    assert rep.L == {0: 2, 1: 1}
    assert rep.good_edge_fraction == 1


def test_round_star(star3):
    s = init_state(star3, "0.25")
    rep = run_round(s)
    assert rep.delta == {0: F(2, 3), 1: F(2, 3), 2: F(2, 3)}
    assert s.w_p == [0, F(1, 3), F(1, 3), F(1, 3)]
    assert s.deleted == [0]
    assert s.d_p == [0, 0, 0, 0]
    assert rep.good_edge_fraction == 1


def test_no_live_edges(path3):
    s = init_state(path3, "0.25")
    run_round(s)
    with pytest.raises(NoLiveEdges):
        run_round(s)


def test_run_cover_path(path3):
    res = run_cover(path3, "0.25")
    assert res.cover == (1,)
    assert res.cover_weight == 1
    assert res.packing == (F(1, 2), F(1, 2))
    assert res.num_rounds == 1


def test_run_cover_triangle(triangle):
    eps = F(1, 10)
    res = run_cover(triangle, eps)
    assert res.cover_weight == 3
    assert res.packing_weight == F(3, 2)
    assert (1 - eps) * 3 <= 2 * res.packing_weight


def test_run_cover_single_edge_boundary(single_edge):
    # vertex 1 ends at w_p = 1 = eps * w(1); the deletion test is inclusive
    res = run_cover(single_edge, "0.5")
    assert res.packing == (1,)
    assert res.cover == (0, 1)
    assert res.deletion_order == (0, 1)


def test_run_cover_single_edge_interior(single_edge):
    res = run_cover(single_edge, "0.2")
    assert res.cover == (0,)
    assert res.cover_weight == 1


def test_empty_instance():
    res = run_cover(build_hypergraph([1, 2], []), "0.1")
    assert res.cover == () and res.num_rounds == 0 and res.packing == ()


def test_potential(triangle):
    s = init_state(triangle, 0.1)
    assert potential(s) == pytest.approx(6 * math.log(10), abs=1e-12)
    assert potential(s) == pytest.approx(13.8155, abs=1e-4)
    run_round(s)
    assert potential(s) == 0


@pytest.mark.parametrize("seed", range(5))
def test_initial_potential_is_M_ln_inv_eps(seed):
    h = random_small(seed)
    for mode in ("float", "rational"):
        s = init_state(h, "0.3", mode)
        assert potential(s) == pytest.approx(h.M * math.log(1 / 0.3), rel=1e-12)


def test_scale_weights_integer():
    h = build_hypergraph([1, 2], [(0,), (0, 1), (1,)])
    scaled, factor = scale_weights_integer(h, F(1, 4))
    assert factor == 12
    assert scaled.weights == (12, 24)
    same, factor = scale_weights_integer(build_hypergraph([12, 30], [(0,), (0, 1), (1,)]), F(1, 4))
    assert factor == 1 and same.weights == (12, 30)
    with pytest.raises(NonIntegerWeights):
        scale_weights_integer(build_hypergraph([F(3, 2)], [(0,)]), F(1, 4))


@pytest.mark.parametrize("seed", range(20))
def test_scaled_bit_bound(seed):
    h = random_small(seed, wmax=1000)
    eps = F(1, 10)
    scaled, factor = scale_weights_integer(h, eps)
    k = max(h.weights).bit_length()
    assert min(scaled.weights) >= math.ceil(h.m / eps)
    assert max(scaled.weights) <= 2 ** (2 * k + 3) * h.m * h.n
    assert max(scaled.weights).bit_length() <= 2 * k + 3 + math.log2(h.m) + math.log2(h.n)


def test_good_vertex_fraction():
    edges = [(0, 1), (0, 2), (0, 3)]
    assert good_vertex_fraction({0: 0, 1: 0, 2: 0}, edges) == 1
    tri = [(0, 1), (1, 2), (2, 0)]
    assert good_vertex_fraction({0: 0, 1: 1, 2: 0}, tri) == 1
    # 4-star with one edge into the center (1 of 4: not good) and three into leaves
    star4 = [(0, 1), (0, 2), (0, 3), (0, 4)]
    assert good_vertex_fraction({0: 0, 1: 2, 2: 3, 3: 4}, star4) == F(3, 4)


def test_round_cap(monkeypatch):
    h = random_small(0)
    assert run_cover(h, "0.1").num_rounds == 3
    monkeypatch.setattr(engine, "round_cap", lambda r, m, eps: 1)
    with pytest.raises(RoundBoundExceeded):
        run_cover(h, "0.1")


def test_bounds_formulas():
    assert round_bound(2, 3, 0.1) == pytest.approx((1 + 2 * math.log(10)) * (1 + math.log(3)))
    assert round_bound(2, 3, 0.1) == pytest.approx(11.8, abs=0.05)
    assert work_bound(3, 6, 0.1) == pytest.approx(16.8, abs=0.05)


@pytest.mark.parametrize("seed", range(40))
@pytest.mark.parametrize("eps", ["0.01", "0.1", "0.3"])
def test_matches_pseudocode_interpreter(seed, eps):
    h = random_small(seed, n_max=10)
    deleted, p, trace = interpret_cover(h.weights, h.edges, eps)
    res = run_cover(h, eps, "rational")
    assert res.packing == tuple(p)
    assert sorted(res.deletion_order) == sorted(deleted)
    assert res.num_rounds == len(trace)
    for rep, delta in zip(res.rounds, trace):
        assert rep.delta == delta


def _check_state(s, h):
    exact = s.mode is not NumericMode.FLOAT64
    for v in range(h.n):
        load = sum(s.p[e] for e in h.incidence[v])
        tol = 0 if exact else 1e-9 * s.w[v]
        assert load <= s.w[v] + tol
        if exact:
            assert s.w_p[v] == s.w[v] - load
        else:
            assert s.w_p[v] == pytest.approx(s.w[v] - load, abs=1e-9 * s.w[v])
        live_deg = sum(1 for e in h.incidence[v] if s.live[e])
        assert s.d_p[v] == live_deg
        if s.in_cover[v]:
            assert s.is_spent(v)
        elif live_deg:
            assert not s.is_spent(v)
    for e in s.remaining:
        assert not any(s.in_cover[u] for u in h.edges[e])


@pytest.mark.parametrize("mode", list(NumericMode))
@pytest.mark.parametrize("seed", range(15))
def test_state_invariants_each_round(mode, seed):
    h0 = random_small(seed)
    eps = F(1, 10)
    h = scale_weights_integer(h0, eps)[0] if mode is NumericMode.SCALED_INTEGER else h0
    s = init_state(h, eps, mode)
    _check_state(s, h)
    while s.remaining:
        rep = run_round(s)
        _check_state(s, h)
        assert good_vertex_fraction(rep.limiter, h.edges) == rep.good_edge_fraction
        if mode is NumericMode.SCALED_INTEGER:
            assert all(type(x) is int for x in s.w_p + s.p + list(rep.delta.values()))


@pytest.mark.parametrize("mode", list(NumericMode))
def test_workers_bit_identical(mode):
    h = random_small(3, n_max=16)
    big = build_hypergraph(
        [w + i % 7 for i, w in enumerate(h.weights * 20)],
        [tuple(v + h.n * k for v in e) for k in range(20) for e in h.edges],
    )
    a = solve(big, "0.1", mode)
    b = solve(big, "0.1", mode, workers=4)
    assert a.packing == b.packing
    assert a.deletion_order == b.deletion_order
    assert [r.delta for r in a.rounds] == [r.delta for r in b.rounds]
    assert [r.phi_after for r in a.rounds] == [r.phi_after for r in b.rounds]


@pytest.mark.parametrize("seed", range(60))
def test_float_and_rational_agree(seed):
    h = random_small(seed)
    eps = F(1, 10)
    exact = run_cover(h, eps, "rational")
    # skip instances where a deletion test sits within 1e-6 of equality
    s = init_state(h, eps, "rational")
    near_tie = False
    while s.remaining:
        tested = list(s.active)
        run_round(s)
        near_tie |= any(abs(s.w_p[v] - eps * s.w[v]) <= F(1, 10**6) * s.w[v] for v in tested)
    if near_tie:
        pytest.skip("deletion test within 1e-6 of equality")
    approx = run_cover(h, eps, "float")
    assert approx.cover == exact.cover
