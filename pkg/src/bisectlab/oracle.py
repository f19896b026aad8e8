"""Brute-force ground truth: exact max-bisection, exact maximum matching,
exact cut probabilities under the two-stage algorithm, and seeded Monte
Carlo estimation.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .graphs import Graph
from .matching import QuasiPerfectMatching
from .rng import MONTE_CARLO, stream


class OracleCapError(ValueError):
    """Instance exceeds the configured enumeration cap."""


def max_bisection_exact(
    g: Graph, cap: int = 20
) -> tuple[int, tuple[int, ...]]:
    """Enumerate all balanced bipartitions; return (size, witness labels)."""
    if g.n > cap:
        raise OracleCapError(f"n={g.n} exceeds the bisection cap {cap}")
    if g.n == 0:
        return 0, ()
    half = g.n // 2
    verts = list(range(g.n))
    best = -1
    best_labels: tuple[int, ...] = ()
    if g.n % 2 == 0:
        # fix vertex 0 on side 0 so each unordered bisection appears once
        pool = [combo for combo in combinations(verts[1:], half - 1)]
        side0_sets = [frozenset((0,) + combo) for combo in pool]
    else:
        side0_sets = [frozenset(combo) for combo in combinations(verts, half)]
    for side0 in side0_sets:
        cut = 0
        for u, v in g.edges:
            if (u in side0) != (v in side0):
                cut += 1
        if cut > best:
            best = cut
            best_labels = tuple(0 if v in side0 else 1 for v in verts)
    return best, best_labels


def max_matching_exact(g: Graph, cap: int = 12) -> int:
    """Exhaustive maximum matching size via bitmask recursion."""
    if g.n > cap:
        raise OracleCapError(f"n={g.n} exceeds the matching cap {cap}")
    adj_mask = [0] * g.n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u

    @lru_cache(maxsize=None)
    def rec(mask: int) -> int:
        if mask == 0:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        best = rec(rest)  # leave v unmatched
        nbrs = adj_mask[v] & rest
        while nbrs:
            w = (nbrs & -nbrs).bit_length() - 1
            nbrs &= nbrs - 1
            best = max(best, 1 + rec(rest & ~(1 << w)))
        return best

    result = rec((1 << g.n) - 1)
    rec.cache_clear()
    return result


def _check_unique_e1_edge(g: Graph, q: QuasiPerfectMatching, u: int, v: int) -> None:
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    eu = {u, q.partner(u)}
    ev = {v, q.partner(v)}
    if eu == ev:
        raise ValueError(f"({u},{v}) is a matching pair, not a connecting edge")
    between = [
        (a, b) for a in eu for b in ev if g.has_edge(a, b)
    ]
    if len(between) != 1:
        raise ValueError(
            f"({u},{v}) is not the unique edge between its pairs; found {between}"
        )


def _sigma_sign(g, q, labels: dict[int, int], v: int) -> int:
    """Sigma of v's pair under a (possibly partial) labeling dict."""
    total = 0
    for x in (v, q.partner(v)):
        partner = q.partner(x)
        hx = labels[x]
        for w in g.adj[x]:
            if w == partner:
                continue
            total += 1 if labels[w] != hx else -1
    return total


def cut_probability_exact(
    g: Graph, q: QuasiPerfectMatching, u: int, v: int, pair_cap: int = 16
) -> tuple[Fraction, Fraction, Fraction]:
    """Exact (cut probability, p_uv, q_uv) for a unique connecting edge uv.

    Averages over all first-stage orientations.  Conditioned on the stage-1
    labels, only the two endpoint pairs matter for whether uv ends up cut:
    if both are stable the stage-1 answer stands, otherwise at least one
    endpoint is re-flipped by a fair independent coin and the edge is cut
    with probability exactly 1/2.  Only pairs whose labels can influence
    sigma of the endpoint pairs are enumerated; all others average out.

    p_uv / q_uv are the probabilities that both endpoint pairs are stable
    conditioned on u, v starting on different / equal sides.
    """
    if len(q.pairs) > pair_cap:
        raise OracleCapError(
            f"{len(q.pairs)} pairs exceed the enumeration cap {pair_cap}"
        )
    _check_unique_e1_edge(g, q, u, v)

    closure = {u, q.partner(u), v, q.partner(v)}
    relevant: set[int] = set()
    for x in list(closure):
        for w in g.adj[x]:
            relevant.add(q.pair_index[w])
        relevant.add(q.pair_index[x])
    rel = sorted(relevant)

    cut_num = 0  # numerator over 2^(len(rel)+1): counts (labeling, half-weights)
    p_num = 0
    q_num = 0
    total = 1 << len(rel)
    labels: dict[int, int] = {}
    for mask in range(total):
        for bit_pos, j in enumerate(rel):
            a, b, _tag = q.pairs[j]
            bit = (mask >> bit_pos) & 1
            labels[a] = bit
            labels[b] = 1 - bit
        both_stable = (
            _sigma_sign(g, q, labels, u) >= 0 and _sigma_sign(g, q, labels, v) >= 0
        )
        differs = labels[u] != labels[v]
        if both_stable:
            if differs:
                p_num += 1
                cut_num += 2  # cut with certainty
            else:
                q_num += 1
        else:
            cut_num += 1  # re-flip makes it a fair coin
    return (
        Fraction(cut_num, 2 * total),
        Fraction(p_num, total // 2),
        Fraction(q_num, total // 2),
    )


def estimate_cut_probability(
    g: Graph,
    q: QuasiPerfectMatching,
    u: int,
    v: int,
    samples: int,
    seed: int = 0,
) -> tuple[float, float]:
    """Monte Carlo over full two-stage runs; returns (estimate, std error)."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rnd = stream(seed, MONTE_CARLO)
    n_pairs = len(q.pairs)
    pair_u = [p[0] for p in q.pairs]
    pair_v = [p[1] for p in q.pairs]
    # per-vertex: pair index and orientation flag of every non-partner neighbor
    nbr_refs: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    pair_index = q.pair_index
    for x in range(g.n):
        partner = q.partner(x)
        for w in g.adj[x]:
            if w != partner:
                nbr_refs[x].append((pair_index[w], 0 if w == pair_u[pair_index[w]] else 1))
    own = [
        (pair_index[x], 0 if x == pair_u[pair_index[x]] else 1) for x in range(g.n)
    ]
    members = [(pair_u[j], pair_v[j]) for j in range(n_pairs)]

    hits = 0
    getrandbits = rnd.getrandbits
    for _ in range(samples):
        mask = getrandbits(n_pairs)
        flips = getrandbits(n_pairs)
        # full stage 2: every active pair gets a fresh fair orientation
        # (XOR of the old bit with an independent fair coin)
        new_mask = mask
        for j in range(n_pairs):
            a, b = members[j]
            sig = 0
            for x in (a, b):
                bit_own = (mask >> own[x][0]) & 1 ^ own[x][1]
                for pj, flag in nbr_refs[x]:
                    hw = (mask >> pj) & 1 ^ flag
                    sig += 1 if hw != bit_own else -1
            if sig < 0 and (flips >> j) & 1:
                new_mask ^= 1 << j
        ju, fu = own[u]
        jv, fv = own[v]
        hu = (new_mask >> ju) & 1 ^ fu
        hv = (new_mask >> jv) & 1 ^ fv
        if hu != hv:
            hits += 1
    estimate = hits / samples
    stderr = math.sqrt(max(estimate * (1 - estimate), 1e-12) / samples)
    return estimate, stderr
