"""Maximum matching in general graphs (blossom contraction) and the
quasi-perfect matching construction M1 | M2 | M3 covering every vertex.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graphs import Graph, build_graph
from .rng import M3_SHUFFLE, MATCHING, mix, stream

M1 = "M1"
M2 = "M2"
M3 = "M3"


class InvalidMatchingError(ValueError):
    """The uncovered set of the supplied matching is not independent."""


class ParityError(ValueError):
    """Quasi-perfect matchings need an even number of vertices."""


@dataclass(frozen=True)
class Matching:
    """Vertex-disjoint set of edges, each pair stored as (min, max)."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for p in self.pairs for v in p)


def maximum_matching(g: Graph, seed: int | None = None) -> Matching:
    """Maximum-cardinality matching via augmenting paths with blossom
    contraction.

    ``seed`` permutes the scan order and adjacency lists, so different seeds
    can produce different (equally maximum) matchings; ``None`` keeps the
    natural vertex order.  Exactness is checked against a brute-force oracle
    in the test suite.
    """
    n = g.n
    order = list(range(n))
    adj = [list(g.adj[v]) for v in range(n)]
    if seed is not None:
        rnd = stream(seed, MATCHING)
        rnd.shuffle(order)
        for lst in adj:
            rnd.shuffle(lst)

    match = [-1] * n
    for v in order:
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v] = w
                    match[w] = v
                    break

    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used_path = set()
        x = a
        while True:
            x = base[x]
            used_path.add(x)
            if match[x] == -1:
                break
            x = p[match[x]]
        x = b
        while True:
            x = base[x]
            if x in used_path:
                return x
            x = p[match[x]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_augmenting(root: int) -> int:
        for i in range(n):
            p[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    q.append(match[to])
        return -1

    for v in order:
        if match[v] == -1:
            end = find_augmenting(v)
            while end != -1:
                prev = p[end]
                nxt = match[prev]
                match[end] = prev
                match[prev] = end
                end = nxt

    pairs = sorted(
        (v, match[v]) for v in range(n) if match[v] != -1 and v < match[v]
    )
    return Matching(pairs=tuple(pairs))


@dataclass(frozen=True)
class AuxiliaryGraph:
    """Graph H over the uncovered set W: x,y adjacent iff they share a
    neighbor z covered by M1.  Witness lists live on original vertex ids;
    in a C4-free host each list has exactly one entry."""

    graph: Graph
    w_vertices: tuple[int, ...]
    witnesses: dict[tuple[int, int], tuple[int, ...]]


def build_auxiliary_graph(g: Graph, m1: Matching) -> AuxiliaryGraph:
    covered = m1.covered
    w = sorted(v for v in range(g.n) if v not in covered)
    w_index = {v: i for i, v in enumerate(w)}
    for x in w:
        for nb in g.adj[x]:
            if nb not in covered:
                raise InvalidMatchingError(
                    f"uncovered vertices {x} and {nb} are adjacent; "
                    "matching is not maximal"
                )
    edges = []
    witnesses: dict[tuple[int, int], tuple[int, ...]] = {}
    for i, x in enumerate(w):
        nx = set(g.adj[x])
        for y in w[i + 1 :]:
            common = sorted(nx.intersection(g.adj[y]))
            if common:
                edges.append((w_index[x], w_index[y]))
                witnesses[(x, y)] = tuple(common)
    return AuxiliaryGraph(
        graph=build_graph(len(w), edges),
        w_vertices=tuple(w),
        witnesses=witnesses,
    )


@dataclass(frozen=True)
class QuasiPerfectMatching:
    """Partition of all vertices into tagged pairs.

    M1 pairs are edges of a maximum matching; M2 pairs are uncovered vertices
    joined through a common M1-covered neighbor (the recorded witness); M3
    pairs soak up the remaining uncovered vertices.
    """

    pairs: tuple[tuple[int, int, str], ...]
    m2_witness: dict[tuple[int, int], int]
    partner_of: tuple[int, ...] = field(repr=False)
    pair_index: tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return 2 * len(self.pairs)

    def partner(self, v: int) -> int:
        return self.partner_of[v]

    def pair_of(self, v: int) -> tuple[int, int, str]:
        return self.pairs[self.pair_index[v]]

    def tag_of(self, v: int) -> str:
        return self.pairs[self.pair_index[v]][2]


def make_qpm(pairs, m2_witness=None) -> QuasiPerfectMatching:
    """Assemble a :class:`QuasiPerfectMatching` from (u, v, tag) triples."""
    canon = tuple(
        sorted((min(u, v), max(u, v), tag) for u, v, tag in pairs)
    )
    n = 2 * len(canon)
    partner = [-1] * n
    index = [-1] * n
    for i, (u, v, _tag) in enumerate(canon):
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"pair ({u},{v}) out of range for n={n}")
        if partner[u] != -1 or partner[v] != -1:
            raise ValueError(f"vertex repeated across pairs at ({u},{v})")
        partner[u], partner[v] = v, u
        index[u] = index[v] = i
    return QuasiPerfectMatching(
        pairs=canon,
        m2_witness=dict(m2_witness or {}),
        partner_of=tuple(partner),
        pair_index=tuple(index),
    )


def quasi_perfect_matching(
    g: Graph, seed: int = 0, restarts: int = 16
) -> QuasiPerfectMatching:
    """Build M1 | M2 | M3 for a graph of even order.

    The extremal choice of M1 (maximizing |M2| over all maximum matchings) is
    approximated by ``restarts`` seeded matchings, keeping the first one that
    attains the best |M2|.  M2 is a maximum matching of the auxiliary graph H;
    M3 pairs the leftover vertices after a seeded shuffle.  Deterministic
    given (graph, seed, restarts).
    """
    if g.n % 2 != 0:
        raise ParityError(
            f"graph has odd order {g.n}; apply parity_augment first"
        )
    if restarts < 1:
        raise ValueError("restarts must be >= 1")

    best: tuple[int, Matching, AuxiliaryGraph, Matching] | None = None
    for r in range(restarts):
        m1 = maximum_matching(g, seed=mix(seed, MATCHING, r))
        aux = build_auxiliary_graph(g, m1)
        m2 = maximum_matching(aux.graph)
        if best is None or m2.size > best[0]:
            best = (m2.size, m1, aux, m2)
    _, m1, aux, m2 = best

    pairs: list[tuple[int, int, str]] = [(u, v, M1) for u, v in m1.pairs]
    m2_witness: dict[tuple[int, int], int] = {}
    in_m2 = set()
    for a, b in m2.pairs:
        x, y = aux.w_vertices[a], aux.w_vertices[b]
        if x > y:
            x, y = y, x
        pairs.append((x, y, M2))
        m2_witness[(x, y)] = aux.witnesses[(x, y)][0]
        in_m2.update((x, y))

    leftover = [v for v in aux.w_vertices if v not in in_m2]
    stream(seed, M3_SHUFFLE).shuffle(leftover)
    for i in range(0, len(leftover), 2):
        pairs.append((leftover[i], leftover[i + 1], M3))

    return make_qpm(pairs, m2_witness)


@dataclass
class AuditReport:
    """Named pass/fail checks with human-readable witnesses."""

    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, ok, detail))

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def failures(self) -> list[tuple[str, str]]:
        return [(name, detail) for name, passed, detail in self.checks if not passed]


def verify_qpm(g: Graph, q: QuasiPerfectMatching) -> AuditReport:
    """Check every structural invariant of a quasi-perfect matching."""
    report = AuditReport()

    seen: list[int] = []
    for u, v, _ in q.pairs:
        seen.extend((u, v))
    report.add(
        "partition",
        sorted(seen) == list(range(g.n)),
        f"covered {len(set(seen))} of {g.n} vertices",
    )

    bad_m1 = [(u, v) for u, v, tag in q.pairs if tag == M1 and not g.has_edge(u, v)]
    report.add("m1-edges", not bad_m1, f"non-edges tagged M1: {bad_m1}")

    m1_covered = {x for u, v, tag in q.pairs if tag == M1 for x in (u, v)}
    w = [v for v in range(g.n) if v not in m1_covered]
    w_set = set(w)
    w_edges = [
        (x, y) for x in w for y in g.adj[x] if y in w_set and x < y
    ]
    report.add("w-independent", not w_edges, f"edges inside W: {w_edges[:5]}")

    for u, v, tag in q.pairs:
        if tag != M2:
            continue
        key = (u, v)
        if u not in w_set or v not in w_set:
            report.add("m2-in-w", False, f"M2 pair {key} not inside W")
            continue
        z = q.m2_witness.get(key)
        commons = sorted(set(g.adj[u]).intersection(g.adj[v]))
        ok = z is not None and z in commons and z in m1_covered
        report.add(
            "m2-witness",
            ok,
            f"pair {key}: witness {z}, common M1 neighbors "
            f"{[c for c in commons if c in m1_covered]}",
        )
        report.add(
            "m2-witness-unique",
            len([c for c in commons if c in m1_covered]) == 1,
            f"pair {key} has common neighbors {commons}",
        )

    bad_m3 = [
        (u, v)
        for u, v, tag in q.pairs
        if tag == M3 and (u not in w_set or v not in w_set)
    ]
    report.add("m3-in-w", not bad_m3, f"M3 pairs outside W: {bad_m3}")
    return report


def qpm_to_json(q: QuasiPerfectMatching) -> list[dict]:
    """Serialize as a list of {u, v, tag, witness?} objects."""
    out = []
    for u, v, tag in q.pairs:
        entry: dict = {"u": u, "v": v, "tag": tag}
        if tag == M2:
            entry["witness"] = q.m2_witness[(u, v)]
        out.append(entry)
    return out


def qpm_from_json(data) -> QuasiPerfectMatching:
    pairs = [(d["u"], d["v"], d["tag"]) for d in data]
    witness = {
        (min(d["u"], d["v"]), max(d["u"], d["v"])): d["witness"]
        for d in data
        if "witness" in d
    }
    return make_qpm(pairs, witness)
