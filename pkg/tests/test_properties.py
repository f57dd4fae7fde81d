from fractions import Fraction

from hypothesis import given, settings, strategies as st

from oracles import exhaustive_min_cover
from pdcover import build_hypergraph, good_vertex_fraction, run_cover, solve


@st.composite
def graphs(draw, max_n=10, rank=2, exact_rank=False):
    n = draw(st.integers(rank, max_n))
    weights = draw(st.lists(st.integers(1, 50), min_size=n, max_size=n))
    lo = rank if exact_rank else 1
    edges = draw(
        st.lists(st.lists(st.integers(0, n - 1), min_size=lo, max_size=rank, unique=True), min_size=1, max_size=25)
    )
    return build_hypergraph(weights, edges)


eps_st = st.sampled_from([Fraction(1, 100), Fraction(1, 10), Fraction(3, 10), Fraction(1, 2)])


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=12, rank=2, exact_rank=True), st.randoms(use_true_random=False))
def test_any_orientation_sends_half_into_good_vertices(h, rnd):
    limiter = {e: rnd.choice(edge) for e, edge in enumerate(h.edges)}
    assert 2 * good_vertex_fraction(limiter, h.edges) >= 1


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8, rank=3), eps_st)
def test_rational_run_is_certified(h, eps):
    res = run_cover(h, eps, "rational")
    opt, _ = exhaustive_min_cover(h.weights, h.edges)
    assert (1 - eps) * res.cover_weight <= h.r * opt
    assert res.packing_weight <= opt
    for rep in res.rounds:
        assert rep.phi_drop >= rep.edges_at_end
        assert sum(rep.L.values()) == rep.edges_at_start


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10, rank=4), eps_st, st.sampled_from(["float", "rational", "int"]))
def test_repeat_runs_identical(h, eps, mode):
    a, b = solve(h, eps, mode), solve(h, eps, mode, workers=3)
    assert a.cover == b.cover and a.packing == b.packing
    assert [r.phi_after for r in a.rounds] == [r.phi_after for r in b.rounds]
