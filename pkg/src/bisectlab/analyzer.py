"""Structural analysis of bisection instances: the edge partition into
matching / singly-connecting / doubly-connecting classes, special path
classification around singly-connecting edges, the exact closed-form cut
probabilities by case, and the square-root lower-bound formulas.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .graphs import Graph, degeneracy_ordering, find_cycle
from .matching import M1, QuasiPerfectMatching
from .tails import phi


class StructuralError(ValueError):
    """The instance contradicts an assumed structural property."""


class DomainError(ValueError):
    """Arguments outside an operation's documented domain."""


# ---------------------------------------------------------------------------
# edge partition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuasiTriangle:
    """Two pairs joined by exactly two edges (which then share an endpoint)."""

    pair_i: tuple[int, int]
    pair_j: tuple[int, int]
    edges: tuple[tuple[int, int], tuple[int, int]]


@dataclass
class EdgePartition:
    matching_edges: list[tuple[int, int]]
    e1: list[tuple[int, int]]
    e2: list[tuple[int, int]]
    quasi_triangles: list[QuasiTriangle]
    k_counts: list[int]  # per pair: incident E2 edges
    violations: list[str] = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "matching_edges": len(self.matching_edges),
            "e1": len(self.e1),
            "e2": len(self.e2),
            "quasi_triangles": len(self.quasi_triangles),
            "violations": list(self.violations),
        }


def edge_partition(g: Graph, q: QuasiPerfectMatching) -> EdgePartition:
    """Split E(G) into matching edges and singly/doubly connecting edges.

    Records per-pair counts of incident doubly-connecting edges and checks
    the counting facts: no two pairs joined by three or more edges,
    |E2| <= n, and sum of the per-pair counts equal to 2|E2|.
    """
    if q.n != g.n:
        raise ValueError(f"matching covers {q.n} vertices, graph has {g.n}")
    pair_index = q.pair_index
    matching_edges: list[tuple[int, int]] = []
    between: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for u, v in g.edges:
        i, j = pair_index[u], pair_index[v]
        if i == j:
            matching_edges.append((u, v))
            continue
        key = (i, j) if i < j else (j, i)
        between.setdefault(key, []).append((u, v))

    e1: list[tuple[int, int]] = []
    e2: list[tuple[int, int]] = []
    tris: list[QuasiTriangle] = []
    violations: list[str] = []
    overflow = 0
    k_counts = [0] * len(q.pairs)
    for (i, j), edges in sorted(between.items()):
        if len(edges) == 1:
            e1.extend(edges)
        elif len(edges) == 2:
            e2.extend(edges)
            k_counts[i] += 2
            k_counts[j] += 2
            shared = set(edges[0]).intersection(edges[1])
            if not shared:
                violations.append(
                    f"doubly connecting edges {edges} between pairs {i},{j} "
                    "share no endpoint"
                )
            tris.append(
                QuasiTriangle(q.pairs[i][:2], q.pairs[j][:2], (edges[0], edges[1]))
            )
        else:
            overflow += len(edges)
            violations.append(
                f"pairs {q.pairs[i][:2]} and {q.pairs[j][:2]} joined by "
                f"{len(edges)} edges: {edges}"
            )

    if len(e2) > g.n:
        violations.append(f"|E2| = {len(e2)} exceeds n = {g.n}")
    assert sum(k_counts) == 2 * len(e2)
    assert len(matching_edges) + len(e1) + len(e2) + overflow == g.m
    return EdgePartition(matching_edges, e1, e2, tris, k_counts, violations)


# ---------------------------------------------------------------------------
# special paths
# ---------------------------------------------------------------------------


def s_set(g: Graph, q: QuasiPerfectMatching, x: int) -> set[int]:
    """Trimmed neighborhood of x: drop the partner, common neighbors with the
    partner, and both members of any pair lying entirely inside what remains.

    The deletions apply in that order: a pair counts as inside only when both
    members survive the earlier rules.  (A pair member that was already
    dropped as a common neighbor must not re-trigger the pair rule, otherwise
    its mate would be dropped alone and the balance would shift.)  Every
    deletion is then exactly neutral for the balance of x's pair under any
    pair-respecting labeling, which is what makes the trimming sound.
    """
    nx = set(g.adj[x])
    xp = q.partner(x)
    nx.discard(xp)
    nx -= nx.intersection(g.adj[xp])
    return {y for y in nx if q.partner(y) not in nx}


def sigma_trimmed(g, q, labels, pair: tuple[int, int]) -> int:
    """Balance of a pair computed over trimmed neighborhoods only."""
    total = 0
    for x in pair:
        sx = s_set(g, q, x)
        hx = labels[x]
        total += sum(1 if labels[w] != hx else -1 for w in sx)
    return total


@dataclass(frozen=True)
class SpecialPath:
    """The path u'-u-v-v' around a singly-connecting edge uv, classified.

    ``k`` counts the seven correlation channels: pairs bridging N(u) and
    N(v') (k1), pairs bridging N(v) and N(u') (k2), common neighbors of u,v
    (k3), of u',v' (k4), of u,v' (k5), and pairs bridging N(v) and N(u)
    (k6); u and v themselves are the seventh channel.  ``k_sub`` splits k1
    and k2 by the tag of the bridging pair.  ``flags`` mark features that
    take the instance outside the clean closed-form model.
    """

    u_prime: int
    u: int
    v: int
    v_prime: int
    vv_tag: str
    type_members: dict
    k: tuple[int, int, int, int, int, int]
    k_sub: dict
    s1: int
    s2: int
    flags: tuple[str, ...]

    @property
    def edge(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)

    @property
    def case_id(self) -> int | None:
        delta = self.k[0] + self.k[1] + self.k[2] - self.k[3]
        return {-1: 1, 1: 2, 2: 3, 0: 4}.get(delta)


def _classify(g: Graph, q: QuasiPerfectMatching, u: int, v: int) -> SpecialPath:
    up, vp = q.partner(u), q.partner(v)
    base = {u, up, v, vp}
    nu = set(g.adj[u]) - base
    nup = set(g.adj[up]) - base
    nv = set(g.adj[v]) - base
    nvp = set(g.adj[vp]) - base

    flags: list[str] = []
    s3 = sorted(nu & nv)
    s4 = sorted(nup & nvp)
    s5 = sorted(nu & nvp)
    ghost = sorted(nup & nv)
    if ghost:
        flags.append(f"common-neighbors-of-u'-and-v {ghost} (impossible if C4-free)")
    singles = s3 + s4 + s5
    if len(set(singles)) != len(singles):
        flags.append("vertex in more than one common-neighborhood class")

    s1_pairs: list[tuple[int, int]] = []
    s2_pairs: list[tuple[int, int]] = []
    s6_pairs: list[tuple[int, int]] = []
    k_sub = {"k11": 0, "k12": 0, "k13": 0, "k21": 0, "k22": 0, "k23": 0}
    own = {q.pair_index[u], q.pair_index[v]}
    for idx, (a, b, tag) in enumerate(q.pairs):
        if idx in own:
            continue
        hits = 0
        for x, y in ((a, b), (b, a)):
            if x in nu and y in nvp:
                s1_pairs.append((x, y))
                k_sub["k1" + tag[1]] += 1
                hits += 1
            if x in nv and y in nup:
                s2_pairs.append((x, y))
                k_sub["k2" + tag[1]] += 1
                hits += 1
            if x in nv and y in nu:
                s6_pairs.append((x, y))  # (z, z') with z next to v, z' next to u
                hits += 1
        if hits > 1:
            flags.append(f"pair ({a},{b}) matches several bridge classes")
        # unlisted correlations that break the independent-coin model
        for x, y in ((a, b), (b, a)):
            if x in nup and y in nvp:
                flags.append(f"pair ({a},{b}) bridges N(u') and N(v') (unlisted)")
                break
        if sum(w in nu or w in nup for w in (a, b)) == 2 and not (
            a in nu and b in nu
        ) and not (a in nup and b in nup):
            flags.append(f"pair ({a},{b}) spans N(u) and N(u') on one side")
        if sum(w in nv or w in nvp for w in (a, b)) == 2 and not (
            a in nv and b in nv
        ) and not (a in nvp and b in nvp):
            flags.append(f"pair ({a},{b}) spans N(v) and N(v') on one side")

    type_vertices = set()
    for x, y in s1_pairs + s2_pairs + s6_pairs:
        type_vertices.update((x, y))
    type_vertices.update(singles)
    for w in singles:
        if q.partner(w) in type_vertices or q.partner(w) in (nu | nup | nv | nvp):
            flags.append(f"partner of common neighbor {w} overlaps the neighborhoods")

    s_u, s_up = s_set(g, q, u), s_set(g, q, up)
    s_v, s_vp = s_set(g, q, v), s_set(g, q, vp)
    sp_all = {u, v} | type_vertices
    t_u, t_up = s_u & sp_all, s_up & sp_all
    t_v, t_vp = s_v & sp_all, s_vp & sp_all
    s1_size = len(s_u) - len(t_u) + len(s_up) - len(t_up)
    s2_size = len(s_v) - len(t_v) + len(s_vp) - len(t_vp)

    k = (
        len(s1_pairs),
        len(s2_pairs),
        len(s3),
        len(s4),
        len(s5),
        len(s6_pairs),
    )
    members = {
        "S1": tuple(s1_pairs),
        "S2": tuple(s2_pairs),
        "S3": tuple(s3),
        "S4": tuple(s4),
        "S5": tuple(s5),
        "S6": tuple(s6_pairs),
        "S7": (u, v),
    }
    return SpecialPath(
        u_prime=up,
        u=u,
        v=v,
        v_prime=vp,
        vv_tag=q.tag_of(v),
        type_members=members,
        k=k,
        k_sub=k_sub,
        s1=s1_size,
        s2=s2_size,
        flags=tuple(flags),
    )


def special_path(g: Graph, q: QuasiPerfectMatching, edge) -> SpecialPath:
    """Classify the special path around a singly-connecting edge.

    The endpoint whose pair is an edge of G plays the u role; when both
    pairs qualify, the orientation with no bridging pairs outside M1 on the
    (u, v') side is preferred (then fewer flags, then the given order).
    """
    a, b = edge
    if not g.has_edge(a, b):
        raise DomainError(f"({a},{b}) is not an edge")
    ea = {a, q.partner(a)}
    eb = {b, q.partner(b)}
    if ea == eb:
        raise DomainError(f"({a},{b}) is a matching pair")
    between = [(x, y) for x in ea for y in eb if g.has_edge(x, y)]
    if len(between) != 1:
        raise DomainError(
            f"({a},{b}) is not the unique edge between its pairs: {between}"
        )

    candidates = []
    for cu, cv in ((a, b), (b, a)):
        if g.has_edge(cu, q.partner(cu)):
            candidates.append(_classify(g, q, cu, cv))
    if not candidates:
        raise StructuralError(
            f"neither endpoint pair of ({a},{b}) is an edge; the uncovered "
            "set of the matching is not independent"
        )
    return min(
        candidates,
        key=lambda sp: (sp.k_sub["k12"] + sp.k_sub["k13"], len(sp.flags)),
    )


PROPOSITION_IDS = ("I", "II", "III", "IV", "V")


def check_propositions(sp: SpecialPath) -> list[str]:
    """Evaluate the five k-count constraints; returns the violated ones."""
    k1, k2, k3, k4, k5, k6 = sp.k
    sub = sp.k_sub
    out = []
    if not (sub["k12"] == sub["k13"] == sub["k22"] == 0):
        out.append("I")
    if not (
        k1 == sub["k11"]
        and all(x in (0, 1) for x in (sub["k11"], sub["k21"], sub["k23"], k3, k4, k5))
    ):
        out.append("II")
    if not (
        sub["k11"] * sub["k23"] == 0
        and sub["k11"] * k4 == 0
        and sub["k21"] * k3 == 0
    ):
        out.append("III")
    if sp.vv_tag == M1 and not (k3 * k4 == 0 and sub["k21"] * k4 == 0):
        out.append("IV")
    if not (-1 <= k1 + k2 + k3 - k4 <= 2):
        out.append("V")
    return out


# ---------------------------------------------------------------------------
# closed-form stability probabilities
# ---------------------------------------------------------------------------


def st_values(k, counts, cond: tuple[int, int]) -> tuple[int, int]:
    """The two pair-imbalance offsets under a conditioning of (h(u), h(v)).

    ``k`` is a six-channel count vector or a :class:`SpecialPath`;
    ``counts`` = (a, b, c, d, e, f) are the numbers of 0-labelled vertices in
    the six channel classes.  The unequal conditionings share one value pair;
    the equal conditionings are (t1 + 2, -t2).
    """
    if isinstance(k, SpecialPath):
        k = k.k
    k1, k2, k3, k4, k5, k6 = k
    a, b, c, d, e, f = counts
    for cnt, cap, name in zip(counts, k, "abcdef"):
        if not 0 <= cnt <= cap:
            raise DomainError(f"count {name}={cnt} outside [0,{cap}]")
    if cond not in ((0, 0), (0, 1), (1, 0), (1, 1)):
        raise DomainError(f"conditioning {cond} is not a label pair")
    t1 = 2 * (a + b + c - d) + 2 * (e - f) - k1 - k2 - k3 + k4 - k5 + k6 - 1
    t2 = -2 * (a + b + c - d) + 2 * (e - f) + k1 + k2 + k3 - k4 - k5 + k6 - 1
    if cond in ((0, 1), (1, 0)):
        return t1, t2
    return t1 + 2, -t2


@dataclass(frozen=True)
class CaseConfig:
    """A k-vector together with its case id (1..4 keyed by k1+k2+k3-k4
    equal to -1, 1, 2, 0 respectively)."""

    case_id: int
    k: tuple[int, int, int, int, int, int]


def case_for_k(k) -> CaseConfig:
    k = tuple(k)
    k1, k2, k3, k4, k5, k6 = k
    if min(k) < 0 or max(k1, k3, k4, k5) > 1 or k2 > 2:
        raise DomainError(f"k vector {k} outside the channel bounds")
    delta = k1 + k2 + k3 - k4
    case_id = {-1: 1, 1: 2, 2: 3, 0: 4}.get(delta)
    if case_id is None:
        raise DomainError(f"k1+k2+k3-k4 = {delta} outside [-1, 2]")
    if case_id in (2, 3) and k4 != 0:
        raise DomainError(f"case {case_id} requires k4 = 0, got k = {k}")
    if case_id == 4 and k4 == 1 and k1 != 0:
        raise DomainError("case 4 with a u-side bridge pair is unrealizable")
    return CaseConfig(case_id, k)


@dataclass(frozen=True)
class PijTable:
    p00: Fraction
    p01: Fraction
    p10: Fraction
    p11: Fraction

    def difference(self) -> Fraction:
        return self.p01 + self.p10 - self.p00 - self.p11

    def cut_probability(self) -> Fraction:
        """1/2 + (P01 + P10 - P00 - P11)/8; equivalently 1/2 + (p-q)/4 for
        the conditionals p = (P01+P10)/2, q = (P00+P11)/2."""
        return Fraction(1, 2) + self.difference() / 8


def _ef_weights(k5: int, k6: int):
    for e in range(k5 + 1):
        we = math.comb(k5, e)
        for f in range(k6 + 1):
            yield e, f, we * math.comb(k6, f)


def pij_closed_form(cfg: CaseConfig, s1: int, s2: int) -> PijTable:
    """Stability probabilities P_ij from the per-case tables.

    Each case fixes the bridge/common-neighbor channels and sums the
    tail-product over the free channels (e over k5, f over k6) with binomial
    weights.  Cross-checked against :func:`pij_by_enumeration` and against
    the exhaustive algorithm oracle in the test suite.
    """
    k1, k2, k3, k4, k5, k6 = cfg.k
    if cfg != case_for_k(cfg.k):
        raise DomainError(f"case id {cfg.case_id} inconsistent with k {cfg.k}")
    P = lambda t1, t2: phi(t1, t2, s1, s2)
    p01 = p00 = Fraction(0)
    if cfg.case_id in (1, 2):
        shift = k5 + k6 + 1
        for e, f, w in _ef_weights(k5, k6):
            t = 2 * e - 2 * f - k5 + k6
            p01 += w * (P(t, t - 2) + P(t - 2, t))
            p00 += w * (P(t + 2, -t + 2) + P(t, -t))
    elif cfg.case_id == 3:
        shift = k5 + k6 + 2
        for e, f, w in _ef_weights(k5, k6):
            t = 2 * e - 2 * f - k5 + k6 - 1
            p01 += w * (P(t - 2, t + 2) + 2 * P(t, t) + P(t + 2, t - 2))
            p00 += w * (P(t, -t - 2) + 2 * P(t + 2, -t) + P(t + 4, -t + 2))
    elif k4 == 1:
        shift = k5 + k6 + 2
        for e, f, w in _ef_weights(k5, k6):
            t = 2 * e - 2 * f - k5 + k6 - 1
            p01 += w * (2 * P(t, t) + P(t + 2, t - 2) + P(t - 2, t + 2))
            p00 += w * (2 * P(t + 2, -t) + P(t + 4, -t + 2) + P(t, -t - 2))
    else:
        shift = k5 + k6
        for e, f, w in _ef_weights(k5, k6):
            t = 2 * e - 2 * f - k5 + k6 - 1
            p01 += w * P(t, t)
            p00 += w * P(t + 2, -t)
    scale = Fraction(1, 1 << shift)
    return PijTable(p00 * scale, p01 * scale, p01 * scale, p00 * scale)


def pij_by_enumeration(k, s1: int, s2: int) -> PijTable:
    """Generic enumerator over all channel labelings; the table-free route."""
    k = tuple(k)
    p01 = p00 = Fraction(0)
    ranges = [range(x + 1) for x in k]
    for counts in product(*ranges):
        w = 1
        for cnt, cap in zip(counts, k):
            w *= math.comb(cap, cnt)
        t1, t2 = st_values(k, counts, (0, 1))
        p01 += w * phi(t1, t2, s1, s2)
        t1e, t2e = st_values(k, counts, (0, 0))
        p00 += w * phi(t1e, t2e, s1, s2)
    scale = Fraction(1, 1 << sum(k))
    return PijTable(p00 * scale, p01 * scale, p01 * scale, p00 * scale)


def cut_probability_closed_form(sp: SpecialPath, s1=None, s2=None) -> Fraction:
    """Exact probability that the path's middle edge is cut, via the case
    tables.  Requires a clean (flag-free, proposition-satisfying) path."""
    if sp.flags:
        raise DomainError(f"path has model flags: {sp.flags}")
    violated = check_propositions(sp)
    if violated:
        raise DomainError(f"k-count propositions violated: {violated}")
    cfg = case_for_k(sp.k)
    table = pij_closed_form(cfg, sp.s1 if s1 is None else s1, sp.s2 if s2 is None else s2)
    return table.cut_probability()


# ---------------------------------------------------------------------------
# square-root bounds and the degeneracy chain
# ---------------------------------------------------------------------------


def isqrt_fraction_lower(x: Fraction, digits: int = 9) -> Fraction:
    """Largest multiple of 10^-digits not exceeding sqrt(x)."""
    if x < 0:
        raise DomainError("negative radicand")
    scale = 10 ** digits
    num = x.numerator * x.denominator * scale * scale
    return Fraction(math.isqrt(num) // x.denominator, scale)


def integer_nth_root(x: int, r: int) -> int:
    """floor(x ** (1/r)) for nonnegative integer x."""
    if x < 0 or r < 1:
        raise DomainError("nth root needs x >= 0, r >= 1")
    if x in (0, 1):
        return x
    guess = 1 << (-(-x.bit_length() // r))
    while True:
        nxt = ((r - 1) * guess + x // guess ** (r - 1)) // r
        if nxt >= guess:
            break
        guess = nxt
    return guess


def power_lower(m: int, num: int, den: int, digits: int = 9) -> Fraction:
    """Largest multiple of 10^-digits not exceeding m ** (num/den)."""
    if m < 0:
        raise DomainError("negative base")
    scale = 10 ** digits
    return Fraction(integer_nth_root(m ** num * scale ** den, den), scale)


def hou_yan_bound(g: Graph) -> Fraction:
    """m/2 + (n-1)/4, exact."""
    return Fraction(g.m, 2) + Fraction(g.n - 1, 4)


def shearer_bisection_bound(g: Graph, xi: Fraction, digits: int = 9) -> Fraction:
    """m/2 + xi * sum of sqrt(d_i), square roots bracketed from below."""
    if xi <= 0:
        raise DomainError("xi must be positive")
    total = sum(
        (isqrt_fraction_lower(Fraction(g.degree(v)), digits) for v in range(g.n)),
        Fraction(0),
    )
    return Fraction(g.m, 2) + xi * total


def power_law_bound(m: int, k: int, c: Fraction, digits: int = 9) -> Fraction:
    """m/2 + c * m ** ((2k+1)/(2k+2)), the power bracketed from below."""
    if c <= 0 or k < 1:
        raise DomainError("need c > 0 and k >= 1")
    return Fraction(m, 2) + c * power_lower(m, 2 * k + 1, 2 * k + 2, digits)


@dataclass
class ChainReport:
    ok: bool
    witness_cycle: list[int] | None
    sum_sqrt_deg: Fraction
    sum_sqrt_back: Fraction
    rhs: Fraction
    detail: str


def degeneracy_chain_check(g: Graph, k: int = 3, digits: int = 12) -> ChainReport:
    """Verify sum sqrt(d_i) >= sum sqrt(d+_i) >= m / sqrt(max d+ + 1)
    for a graph checked to contain no cycle of length 2k.

    The first inequality is exact (termwise integer domination); the second
    is compared through 10^-digits brackets with a 1e-9 tolerance.
    """
    if k < 2:
        raise DomainError("k must be >= 2")
    cycle = find_cycle(g, 2 * k)
    if cycle is not None:
        return ChainReport(
            False, cycle, Fraction(0), Fraction(0), Fraction(0),
            f"graph contains a {2 * k}-cycle",
        )
    order = degeneracy_ordering(g)
    back = order.back_degrees
    degs = [g.degree(v) for v in order.order]
    termwise = all(d >= b for d, b in zip(degs, back))
    cap = max(back, default=0) + 1
    lhs1 = sum((isqrt_fraction_lower(Fraction(d), digits) for d in degs), Fraction(0))
    lhs2 = sum((isqrt_fraction_lower(Fraction(b), digits) for b in back), Fraction(0))
    sqrt_cap = isqrt_fraction_lower(Fraction(cap), digits)
    rhs = Fraction(g.m) / sqrt_cap if sqrt_cap > 0 else Fraction(0)
    tol = Fraction(1, 10 ** 9)
    ok = termwise and lhs1 + tol >= lhs2 and lhs2 + tol >= rhs
    return ChainReport(
        ok,
        None,
        lhs1,
        lhs2,
        rhs,
        f"termwise domination: {termwise}; back-degree cap {cap}",
    )


# ---------------------------------------------------------------------------
# whole-graph analyzer report
# ---------------------------------------------------------------------------


@dataclass
class AnalyzerReport:
    partition: EdgePartition
    special_paths: list[SpecialPath]
    proposition_violations: list[tuple[tuple[int, int], list[str]]]
    flags: list[tuple[tuple[int, int], tuple[str, ...]]]

    @property
    def ok(self) -> bool:
        return not (
            self.partition.violations or self.proposition_violations or self.flags
        )

    def to_json(self) -> dict:
        paths = []
        for sp in self.special_paths:
            entry = {
                "edge": list(sp.edge),
                "k": list(sp.k),
                "s1": sp.s1,
                "s2": sp.s2,
                "case": sp.case_id,
            }
            if not sp.flags and not check_propositions(sp):
                entry["p_cut"] = str(cut_probability_closed_form(sp))
            paths.append(entry)
        return {
            "edge_partition_summary": self.partition.summary(),
            "special_paths": paths,
            "violations": [
                *self.partition.violations,
                *(
                    f"edge {edge}: propositions {props} violated"
                    for edge, props in self.proposition_violations
                ),
                *(f"edge {edge}: {'; '.join(fl)}" for edge, fl in self.flags),
            ],
        }


def analyze_graph(g: Graph, q: QuasiPerfectMatching) -> AnalyzerReport:
    """Edge partition plus a special-path classification of every singly
    connecting edge."""
    part = edge_partition(g, q)
    paths = [special_path(g, q, e) for e in part.e1]
    prop_violations = []
    flags = []
    for sp in paths:
        violated = check_propositions(sp)
        if violated:
            prop_violations.append((sp.edge, violated))
        if sp.flags:
            flags.append((sp.edge, sp.flags))
    return AnalyzerReport(part, paths, prop_violations, flags)
