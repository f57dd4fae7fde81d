"""Instance files, seeded generators and JSON result documents.

Instance format (ASCII, LF line endings, single-space separators)::

    c comment lines may appear anywhere
    p hg <n> <m>                 hypergraph header
    v <id> <weight>              one line per vertex
    e <vid> <vid> ...            one line per edge

    p sc <num_sets> <num_elements>
    s <id> <weight> <elem> ...   one line per set

Weights are decimal integers or decimals with at most 9 fractional digits
and are parsed to exact rationals (integral values become ``int``).
"""

from __future__ import annotations

import json
import random
import re
from fractions import Fraction
from typing import Union

from .certificates import CertificateReport, certify
from .engine import CoverResult, round_bound, work_bound
from .errors import CoverError, InfeasibleParams, InstanceSemanticError, InstanceSyntaxError
from .hypergraph import Hypergraph, SetCoverInstance, cover_to_set_solution, from_set_cover, packing_to_element_solution
from .reference import OracleResult

__all__ = [
    "GENERATORS",
    "MAX_ROUND_REPORTS",
    "SCHEMA_VERSION",
    "emit_instance",
    "format_weight",
    "generate",
    "generate_instance",
    "parse_instance",
    "result_document",
    "verify_result_document",
]

Instance = Union[Hypergraph, SetCoverInstance]

SCHEMA_VERSION = 1
MAX_ROUND_REPORTS = 10_000

_WEIGHT_RE = re.compile(r"-?\d+(\.\d{1,9})?\Z")
_INT_RE = re.compile(r"\d+\Z")


def _parse_weight(tok: str, lineno: int):
    if not _WEIGHT_RE.match(tok):
        raise InstanceSyntaxError(f"bad weight {tok!r}", lineno)
    w = Fraction(tok)
    if w <= 0:
        raise InstanceSemanticError(f"weight {tok} is not positive", lineno)
    return int(w) if w.denominator == 1 else w


def _parse_int(tok: str, lineno: int, what: str) -> int:
    if not _INT_RE.match(tok):
        raise InstanceSyntaxError(f"bad {what} {tok!r}", lineno)
    return int(tok)


def format_weight(w) -> str:
    """Decimal text for a weight; raises ValueError if it needs more than 9 fractional digits."""
    if isinstance(w, int):
        return str(w)
    q = Fraction(repr(w)) if isinstance(w, float) else Fraction(w)
    if q.denominator == 1:
        return str(q.numerator)
    scaled = q * 10**9
    if scaled.denominator != 1:
        raise ValueError(f"weight {w!r} has no decimal form with at most 9 fractional digits")
    whole, frac = divmod(scaled.numerator, 10**9)
    return f"{whole}.{frac:09d}".rstrip("0")


def parse_instance(text: str) -> Instance:
    """Parse instance text into a :class:`Hypergraph` or :class:`SetCoverInstance`.

    Raises
    ------
    InstanceSyntaxError
        for malformed lines.
    InstanceSemanticError
        for ids out of range, duplicates, empty edges, missing lines or
        uncovered elements.
    """
    header = None
    weights: dict[int, object] = {}
    rows: list[tuple[int, list[int]]] = []
    for lineno, line in enumerate(text.split("\n"), 1):
        if not line.strip() or line.startswith("c"):
            continue
        toks = line.split(" ")
        tag = toks[0]
        if header is None:
            if tag != "p" or len(toks) != 4 or toks[1] not in ("hg", "sc"):
                raise InstanceSyntaxError("expected header 'p hg <n> <m>' or 'p sc <sets> <elements>'", lineno)
            header = (toks[1], _parse_int(toks[2], lineno, "count"), _parse_int(toks[3], lineno, "count"))
            continue
        kind, n, m = header
        if tag == "p":
            raise InstanceSyntaxError("duplicate header", lineno)
        if kind == "hg" and tag == "v":
            if len(toks) != 3:
                raise InstanceSyntaxError("expected 'v <id> <weight>'", lineno)
            vid = _parse_int(toks[1], lineno, "vertex id")
            if vid >= n:
                raise InstanceSemanticError(f"vertex id {vid} out of range 0..{n - 1}", lineno)
            if vid in weights:
                raise InstanceSemanticError(f"vertex {vid} defined twice", lineno)
            weights[vid] = _parse_weight(toks[2], lineno)
        elif kind == "hg" and tag == "e":
            ids = [_parse_int(t, lineno, "vertex id") for t in toks[1:]]
            if not ids:
                raise InstanceSemanticError("empty edge", lineno)
            bad = [v for v in ids if v >= n]
            if bad:
                raise InstanceSemanticError(f"vertex id {bad[0]} out of range 0..{n - 1}", lineno)
            if len(set(ids)) != len(ids):
                raise InstanceSemanticError("edge repeats a vertex", lineno)
            if len(rows) == m:
                raise InstanceSemanticError(f"more than the declared {m} edges", lineno)
            rows.append((lineno, ids))
        elif kind == "sc" and tag == "s":
            if len(toks) < 3:
                raise InstanceSyntaxError("expected 's <id> <weight> <elem>...'", lineno)
            sid = _parse_int(toks[1], lineno, "set id")
            if sid >= n:
                raise InstanceSemanticError(f"set id {sid} out of range 0..{n - 1}", lineno)
            if sid in weights:
                raise InstanceSemanticError(f"set {sid} defined twice", lineno)
            weights[sid] = _parse_weight(toks[2], lineno)
            elems = [_parse_int(t, lineno, "element id") for t in toks[3:]]
            bad = [x for x in elems if x >= m]
            if bad:
                raise InstanceSemanticError(f"element id {bad[0]} out of range 0..{m - 1}", lineno)
            if len(set(elems)) != len(elems):
                raise InstanceSemanticError("set repeats an element", lineno)
            rows.append((sid, elems))
        else:
            raise InstanceSyntaxError(f"unexpected line tag {tag!r} in a '{kind}' file", lineno)
    if header is None:
        raise InstanceSyntaxError("missing header line", None)
    kind, n, m = header
    last = len(text.rstrip("\n").split("\n"))
    missing = [i for i in range(n) if i not in weights]
    if missing:
        what = "vertex" if kind == "hg" else "set"
        raise InstanceSemanticError(f"{what} {missing[0]} has no line", last)
    w = [weights[i] for i in range(n)]
    if kind == "hg":
        if len(rows) != m:
            raise InstanceSemanticError(f"declared {m} edges, found {len(rows)}", last)
        return Hypergraph(w, [ids for _, ids in rows])
    sets: list[list[int]] = [[] for _ in range(n)]
    for sid, elems in rows:
        sets[sid] = elems
    inst = SetCoverInstance(w, sets, m)
    try:
        from_set_cover(inst)
    except CoverError as exc:
        raise InstanceSemanticError(str(exc), last) from exc
    return inst


def emit_instance(inst: Instance, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    if isinstance(inst, SetCoverInstance):
        lines.append(f"p sc {inst.num_sets} {inst.num_elements}")
        for i, (w, s) in enumerate(zip(inst.weights, inst.sets)):
            lines.append(" ".join(["s", str(i), format_weight(w), *map(str, s)]))
    else:
        lines.append(f"p hg {inst.n} {inst.m}")
        lines.extend(f"v {v} {format_weight(w)}" for v, w in enumerate(inst.weights))
        lines.extend("e " + " ".join(map(str, e)) for e in inst.edges)
    return "\n".join(lines) + "\n"


# generators --------------------------------------------------------------


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InfeasibleParams(msg)


def _weights(rng: random.Random, count: int, wmin: int, wmax: int) -> list[int]:
    _need(1 <= wmin <= wmax, f"weight range must satisfy 1 <= wmin <= wmax, got {wmin}..{wmax}")
    return [rng.randint(wmin, wmax) for _ in range(count)]


def _random_hg(rng, n, m, r, wmin=1, wmax=100, min_size=1):
    _need(n >= 1 and m >= 0 and r >= 1, "need n >= 1, m >= 0, r >= 1")
    _need(1 <= min_size <= r <= n, f"need 1 <= min_size <= r <= n, got min_size={min_size}, r={r}, n={n}")
    w = _weights(rng, n, wmin, wmax)
    edges = [rng.sample(range(n), rng.randint(min_size, r)) for _ in range(m)]
    return Hypergraph(w, edges)


def _random_sc(rng, sets, elements, r, wmin=1, wmax=100):
    _need(sets >= 1 and elements >= 0 and r >= 1, "need sets >= 1, elements >= 0, r >= 1")
    _need(r <= sets, f"an element cannot occur in r={r} of only {sets} sets")
    members: list[list[int]] = [[] for _ in range(sets)]
    for x in range(elements):
        for s in sorted(rng.sample(range(sets), rng.randint(1, r))):
            members[s].append(x)
    return SetCoverInstance(_weights(rng, sets, wmin, wmax), members, elements)


def _star(rng, k, center_weight=1, leaf_weight=1):
    _need(k >= 1, "a star needs k >= 1 leaves")
    return Hypergraph([center_weight] + [leaf_weight] * k, [(0, i) for i in range(1, k + 1)])


def _path(rng, n, weight=1):
    _need(n >= 2, "a path needs n >= 2 vertices")
    return Hypergraph([weight] * n, [(i, i + 1) for i in range(n - 1)])


def _clique(rng, n, weight=1):
    _need(n >= 2, "a clique needs n >= 2 vertices")
    return Hypergraph([weight] * n, [(i, j) for i in range(n) for j in range(i + 1, n)])


GENERATORS = {
    "random-hg": _random_hg,
    "random-sc": _random_sc,
    "star": _star,
    "path": _path,
    "clique": _clique,
}


def generate_instance(kind: str, seed: int = 0, **params) -> Instance:
    """Build an instance in memory; same ``(kind, seed, params)`` gives the same instance."""
    if kind not in GENERATORS:
        raise InfeasibleParams(f"unknown generator {kind!r}; choose from {sorted(GENERATORS)}")
    _need(0 <= seed < 2**64, "seed must be an unsigned 64-bit integer")
    for key, val in params.items():
        _need(isinstance(val, int) and not isinstance(val, bool), f"parameter {key} must be an integer")
    try:
        return GENERATORS[kind](random.Random(seed), **params)
    except TypeError as exc:
        raise InfeasibleParams(f"bad parameters for {kind}: {exc}") from exc


def generate(kind: str, seed: int = 0, **params) -> str:
    """Instance file text for a seeded generator.

    Kinds and their integer parameters:

    * ``random-hg``: ``n``, ``m``, ``r`` and optional ``wmin``, ``wmax``,
      ``min_size`` (edge sizes are uniform in ``min_size..r``)
    * ``random-sc``: ``sets``, ``elements``, ``r`` (each element joins
      ``1..r`` sets) and optional ``wmin``, ``wmax``
    * ``star``: ``k`` leaves, ``center_weight``, ``leaf_weight``
    * ``path``, ``clique``: ``n``, ``weight``
    """
    inst = generate_instance(kind, seed, **params)
    desc = " ".join(f"{k}={v}" for k, v in sorted(params.items()))
    return emit_instance(inst, f"{kind} seed={seed} {desc}".rstrip())


# result documents -------------------------------------------------------


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else float(x)
    return x


def _exact(x) -> str:
    return str(Fraction(x)) if not isinstance(x, float) else repr(x)


def result_document(
    inst: Instance,
    res: CoverResult,
    cert: CertificateReport,
    oracle: OracleResult | str | None = None,
) -> dict:
    """JSON-ready summary of a run. Carries no timings, so it is reproducible byte for byte."""
    n, m, r, M = res.stats
    packing = res.original_packing()
    exact = res.mode.value != "float"
    if isinstance(inst, SetCoverInstance):
        kind = "sc"
        cover_ids = cover_to_set_solution(inst, res.cover)
        packing_out = packing_to_element_solution(inst, packing)
    else:
        kind, cover_ids, packing_out = "hg", list(res.cover), list(packing)
    reports = res.rounds[:MAX_ROUND_REPORTS]
    rb, wb = round_bound(r, m, res.eps), work_bound(m, M, res.eps)
    factor = res.mode.bound_factor
    doc = {
        "schema": SCHEMA_VERSION,
        "kind": kind,
        "mode": res.mode.value,
        "eps": str(res.eps),
        "stats": {"n": n, "m": m, "r": r, "M": M},
        "cover": cover_ids,
        "cover_weight": _num(res.cover_weight),
        "packing": [_num(x) for x in packing_out],
        "packing_weight": _num(res.packing_weight),
        "scale_factor": res.scale_factor,
        "rounds": res.num_rounds,
        "work": res.work,
        "touches": res.touches,
        "round_reports": [
            {
                "round": rep.index,
                "edges_at_start": rep.edges_at_start,
                "edges_at_end": rep.edges_at_end,
                "deleted": list(rep.deleted_this_round),
                "phi_before": rep.phi_before,
                "phi_after": rep.phi_after,
                "good_edge_fraction": float(rep.good_edge_fraction),
            }
            for rep in reports
        ],
        "round_reports_truncated": len(res.rounds) > MAX_ROUND_REPORTS,
        "bounds": {
            "round_bound": factor * rb,
            "work_bound": factor * wb,
            "rounds_ok": res.num_rounds <= factor * rb,
            "work_ok": res.work <= factor * wb,
        },
        "certificate": {
            "passed": cert.passed,
            "packing_feasible": cert.packing_feasible,
            "violations": cert.violations,
            "is_cover": cert.is_cover,
            "uncovered": cert.uncovered,
            "eps_maximal": cert.eps_maximal,
            "weak_duality": cert.weak_duality,
            "slackness": cert.slackness,
            "duality_gap": _num(cert.duality_gap),
            "slackness_lhs": _num(cert.slackness_lhs),
            "slackness_rhs": _num(cert.slackness_rhs),
            "ratio_bound": _num(cert.ratio_bound),
        },
    }
    if exact:
        doc["exact"] = {
            "cover_weight": _exact(res.cover_weight),
            "packing_weight": _exact(res.packing_weight),
            "packing": [_exact(x) for x in packing_out],
        }
    if isinstance(oracle, OracleResult):
        ratio = Fraction(res.cover_weight) / Fraction(oracle.opt_weight) if exact else res.cover_weight / oracle.opt_weight
        doc["oracle"] = {
            "opt_cover": list(oracle.opt_cover),
            "opt_weight": _num(oracle.opt_weight),
            "ratio": _num(ratio),
            "within_bound": ratio <= cert.ratio_bound,
        }
    elif oracle is not None:
        doc["oracle"] = {"skipped": oracle}
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def verify_result_document(doc: dict, inst: Instance) -> CertificateReport:
    """Re-run the certificates on a (possibly re-parsed) result document."""
    if isinstance(inst, SetCoverInstance):
        h = from_set_cover(inst)
        cover = [inst.vertex_of_set[s] for s in doc["cover"]]
        src = doc["exact"]["packing"] if "exact" in doc else doc["packing"]
        packing = [0] * h.m
        for x, val in enumerate(src):
            packing[inst.edge_of_element[x]] = val
    else:
        h = inst
        cover = doc["cover"]
        packing = doc["exact"]["packing"] if "exact" in doc else doc["packing"]
    if "exact" in doc:
        packing = [Fraction(x) for x in packing]
    else:
        packing = [float(x) for x in packing]
    return certify(h, cover, packing, Fraction(doc["eps"]))

