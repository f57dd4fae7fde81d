from fractions import Fraction

import pytest

from conftest import random_small
from oracles import exhaustive_min_cover
from pdcover import (
    TooLarge,
    bar_yehuda_even,
    brute_force_min_cover,
    build_hypergraph,
    verify_cover,
    verify_packing,
)


def test_brute_force_examples(triangle, path3, star3):
    assert brute_force_min_cover(triangle)[:2] == ((0, 1), 2)
    assert brute_force_min_cover(path3)[:2] == ((1,), 1)
    assert brute_force_min_cover(star3)[:2] == ((0,), 2)
    assert brute_force_min_cover(star3).instances_searched == 16


def test_brute_force_limit():
    with pytest.raises(TooLarge):
        brute_force_min_cover(build_hypergraph([1] * 25, [(0, 24)]))


def test_brute_force_fractional_and_float_weights():
    h = build_hypergraph([Fraction(1, 3), Fraction(1, 2), Fraction(1, 4)], [(0, 1), (1, 2)])
    assert brute_force_min_cover(h)[:2] == ((1,), Fraction(1, 2))
    hf = build_hypergraph([0.3, 0.5, 0.25], [(0, 1), (1, 2)])
    assert brute_force_min_cover(hf).opt_cover == (1,)


@pytest.mark.parametrize("seed", range(40))
def test_brute_force_matches_itertools(seed):
    h = random_small(seed, n_max=12)
    res = brute_force_min_cover(h)
    weight, cover = exhaustive_min_cover(h.weights, h.edges)
    assert res.opt_weight == weight
    assert res.opt_cover == cover
    assert verify_cover(h, res.opt_cover).is_cover


def _path_cover_dp(weights):
    # best cover of the path prefix ending with vertex i taken / not taken
    take, skip = weights[0], 0
    for w in weights[1:]:
        take, skip = w + min(take, skip), take
    return min(take, skip)


def test_brute_force_chunked_path():
    # n > 20 exercises the high-bit chunk loop
    w = [1 + (i * 7) % 5 for i in range(22)]
    h = build_hypergraph(w, [(i, i + 1) for i in range(21)])
    res = brute_force_min_cover(h)
    assert verify_cover(h, res.opt_cover).is_cover
    assert res.opt_weight == _path_cover_dp(w)
    assert res.instances_searched == 2**22


def test_bar_yehuda_even_examples(path3, single_edge):
    cover, p = bar_yehuda_even(path3)
    assert cover == (0, 1) and p == [1, 0]
    cover, p = bar_yehuda_even(single_edge)
    assert cover == (0,) and p == [1]
    assert bar_yehuda_even(build_hypergraph([1, 1], [])) == ((), [])


@pytest.mark.parametrize("seed", range(40))
def test_bar_yehuda_even_maximal(seed):
    h = random_small(seed)
    cover, p = bar_yehuda_even(h)
    loads = [sum(p[e] for e in inc) for inc in h.incidence]
    assert verify_packing(h, p).feasible
    assert all(any(loads[v] == h.weights[v] for v in e) for e in h.edges)
    assert verify_cover(h, cover).is_cover
    assert h.total_weight(cover) <= h.r * brute_force_min_cover(h).opt_weight
