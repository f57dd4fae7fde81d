"""Reference solvers: an exhaustive minimum-cover oracle and the sequential baseline."""

from __future__ import annotations

import math
from typing import NamedTuple
from fractions import Fraction

import numpy as np

from .errors import TooLarge
from .hypergraph import Hypergraph, as_fraction

__all__ = ["OracleResult", "MAX_ORACLE_VERTICES", "bar_yehuda_even", "brute_force_min_cover"]

MAX_ORACLE_VERTICES = 24
_CHUNK_BITS = 20


class OracleResult(NamedTuple):
    opt_cover: tuple[int, ...]
    opt_weight: object
    instances_searched: int


def _integer_weights(weights):
    """Weights as int64 after clearing denominators, plus the common denominator.

    Returns ``(None, None)`` for floats or when the scaled sum would overflow.
    """
    if any(isinstance(w, float) for w in weights):
        return None, None
    fr = [as_fraction(w) for w in weights]
    den = math.lcm(*(f.denominator for f in fr)) if fr else 1
    ints = [int(f * den) for f in fr]
    if sum(ints) >= 2**62:
        return None, None
    return np.array(ints, dtype=np.int64), den


def _lex_key(mask: int, n: int) -> tuple[int, ...]:
    return tuple(v for v in range(n) if mask >> v & 1)


def brute_force_min_cover(h: Hypergraph) -> OracleResult:
    """Exact minimum-weight vertex cover by enumerating all ``2**n`` subsets.

    Subsets are bitmasks evaluated in vectorized chunks of ``2**20``. Among
    optimal covers the lexicographically smallest sorted vertex tuple wins.
    Exact for int and Fraction weights; float weights are summed in binary64.

    Raises
    ------
    TooLarge
        if ``h`` has more than 24 vertices.
    """
    n = h.n
    if n > MAX_ORACLE_VERTICES:
        raise TooLarge(f"exhaustive search is capped at {MAX_ORACLE_VERTICES} vertices, got {n}")
    int_w, den = _integer_weights(h.weights)
    w = int_w if int_w is not None else np.array([float(x) for x in h.weights])
    edge_masks = sorted({sum(1 << v for v in e) for e in h.edges})

    low_bits = min(n, _CHUNK_BITS)
    low = np.arange(1 << low_bits, dtype=np.int64)
    low_weight = np.zeros(1 << low_bits, dtype=w.dtype)
    for v in range(low_bits):
        low_weight[1 << v:2 << v] = low_weight[: 1 << v] + w[v]

    best_w = None
    best_masks: list[int] = []
    for hi in range(1 << (n - low_bits)):
        hi_mask = hi << low_bits
        hi_weight = sum(w[v] for v in range(low_bits, n) if hi_mask >> v & 1)
        masks = low | hi_mask
        ok = np.ones(masks.shape, dtype=bool)
        for em in edge_masks:
            ok &= (masks & em) != 0
        if not ok.any():
            continue
        cand = low_weight[ok] + hi_weight
        cmin = cand.min()
        if best_w is None or cmin < best_w:
            best_w, best_masks = cmin, []
        if cmin == best_w:
            best_masks.extend(int(x) for x in masks[ok][cand == cmin])

    best = min(best_masks, key=lambda s: _lex_key(s, n))
    cover = _lex_key(best, n)
    if int_w is not None:
        opt = Fraction(int(best_w), den)
        opt = int(opt) if opt.denominator == 1 else opt
    else:
        opt = float(best_w)
    return OracleResult(cover, opt, 1 << n)


def bar_yehuda_even(h: Hypergraph) -> tuple[tuple[int, ...], list]:
    """Sequential maximal edge packing and the cover of its tight vertices.

    Edges are visited in ascending id; each is raised as far as its
    vertices' residual weights allow. The result is a maximal packing
    and a cover of weight at most ``r`` times the minimum. Arithmetic is
    exact (Fractions) unless the weights are floats.
    """
    use_float = any(isinstance(x, float) for x in h.weights)
    residual = [float(x) if use_float else as_fraction(x) for x in h.weights]
    packing = []
    for edge in h.edges:
        raise_by = min(residual[v] for v in edge)
        for v in edge:
            residual[v] -= raise_by
        packing.append(raise_by)
    cover = tuple(v for v in range(h.n) if residual[v] <= 0)
    return cover, packing
