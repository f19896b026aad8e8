"""Corpus construction: {C4,C6}-free families and gadget graphs that realize
prescribed special-path configurations.
"""
from __future__ import annotations

from dataclasses import dataclass

from .analyzer import check_propositions, special_path
from .graphs import Graph, build_graph, find_cycle, is_free
from .matching import M1, M3, QuasiPerfectMatching, make_qpm
from .rng import GENERATOR, stream


class GenerationError(RuntimeError):
    """Random generation produced nothing usable."""


class GadgetRefusal(ValueError):
    """The requested configuration cannot exist in a {C4,C6}-free graph
    with a legal quasi-perfect matching; never silently approximated."""


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def two_subdivision(g: Graph) -> Graph:
    """Replace every edge with a three-edge path; girth triples."""
    edges = []
    nxt = g.n
    for u, v in g.edges:
        a, b = nxt, nxt + 1
        nxt += 2
        edges.extend([(u, a), (a, b), (b, v)])
    return build_graph(nxt, edges)


# the (3,8)-cage: 30 vertices, 45 edges, 3-regular, girth 8
_TUTTE_COXETER_EDGES = (
    (0, 1), (0, 17), (0, 29), (1, 2), (1, 22), (2, 3),
    (2, 9), (3, 4), (3, 26), (4, 5), (4, 13), (5, 6),
    (5, 18), (6, 7), (6, 23), (7, 8), (7, 28), (8, 9),
    (8, 15), (9, 10), (10, 11), (10, 19), (11, 12), (11, 24),
    (12, 13), (12, 29), (13, 14), (14, 15), (14, 21), (15, 16),
    (16, 17), (16, 25), (17, 18), (18, 19), (19, 20), (20, 21),
    (20, 27), (21, 22), (22, 23), (23, 24), (24, 25), (25, 26),
    (26, 27), (27, 28), (28, 29),
)


def tutte_coxeter() -> Graph:
    """The girth-8 cage, from its embedded edge list, revalidated on each
    call: order, size, 3-regularity, and no cycle shorter than 8."""
    g = build_graph(30, _TUTTE_COXETER_EDGES)
    assert g.n == 30 and g.m == 45
    assert all(g.degree(v) == 3 for v in range(30))
    for ell in range(3, 8):
        assert find_cycle(g, ell) is None, f"unexpected {ell}-cycle"
    assert find_cycle(g, 8) is not None
    return g


def _creates_short_cycle(g_adj: list[set[int]], u: int, v: int) -> bool:
    """Would adding uv close a 4- or 6-cycle?  True iff a simple u-v path of
    length 3 or 5 exists."""

    def paths(length: int) -> bool:
        # breadth-first over simple paths with exactly `length` edges
        frontier = [(u, (u,))]
        for _ in range(length - 1):
            nxt = []
            for node, path in frontier:
                for w in g_adj[node]:
                    if w not in path and w != v:
                        nxt.append((w, path + (w,)))
            frontier = nxt
        return any(v in g_adj[node] for node, _ in frontier)

    return paths(3) or paths(5)


def random_free_graph(n: int, target_m: int, seed: int = 0) -> Graph:
    """Seeded random {C4,C6}-free graph with minimum degree >= 2.

    Candidate edges are inserted in a shuffled order, rejecting any that
    closes a 4- or 6-cycle; vertices of degree < 2 are then peeled and the
    survivors relabeled.  May return fewer than ``target_m`` edges.  Raises
    :class:`GenerationError` when nothing survives the peeling.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    rnd = stream(seed, GENERATOR, n, target_m)
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rnd.shuffle(candidates)
    adj: list[set[int]] = [set() for _ in range(n)]
    count = 0
    for u, v in candidates:
        if count >= target_m:
            break
        if _creates_short_cycle(adj, u, v):
            continue
        adj[u].add(v)
        adj[v].add(u)
        count += 1

    alive = set(range(n))
    while True:
        weak = [v for v in alive if len(adj[v] & alive) < 2]
        if not weak:
            break
        alive -= set(weak)
    if not alive:
        raise GenerationError(
            f"nothing of minimum degree 2 survives (n={n}, target_m={target_m}, "
            f"seed={seed})"
        )
    relabel = {v: i for i, v in enumerate(sorted(alive))}
    edges = [
        (relabel[u], relabel[v])
        for u in alive
        for v in adj[u]
        if v in alive and u < v
    ]
    g = build_graph(len(alive), edges)
    free, witness = is_free(g, (4, 6))
    assert free, f"generator produced forbidden cycle {witness}"
    return g


# ---------------------------------------------------------------------------
# gadgets realizing prescribed special-path configurations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GadgetRequest:
    """A target k-vector plus extra free-neighbor counts for the two sides."""

    k1: int = 0
    k2: int = 0
    k3: int = 0
    k4: int = 0
    k5: int = 0
    k6: int = 0
    s1: int = 0
    s2: int = 0

    @property
    def k(self) -> tuple[int, int, int, int, int, int]:
        return (self.k1, self.k2, self.k3, self.k4, self.k5, self.k6)


class _Builder:
    def __init__(self):
        self.edges: list[tuple[int, int]] = []
        self.pairs: list[tuple[int, int, str]] = []
        self.n = 0

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def pair(self, u: int, v: int, tag: str) -> None:
        self.pairs.append((u, v, tag))

    def padded_vertex(self, attach_to: int) -> int:
        """A fresh vertex joined to ``attach_to``, matched to a fresh
        partner that touches nothing else."""
        w = self.vertex()
        mate = self.vertex()
        self.edge(attach_to, w)
        self.edge(w, mate)
        self.pair(w, mate, M1)
        return w


def _resolve_realization(req: GadgetRequest) -> str:
    """Pick a legal tag for the v-side pair, or refuse.

    The refusals encode the structural exclusions: a u-side bridge pair
    together with a common neighbor of u',v' or of u,v would close a
    6-cycle; a common neighbor of u,v' closes a 4-cycle unless the v-side
    pair is a non-edge, which in turn rules out bridge pairs between N(u)
    and N(v) (their members must stay outside the uncovered set's
    neighborhoods).
    """
    k1, k2, k3, k4, k5, k6 = req.k
    if min(req.k) < 0 or req.s1 < 0 or req.s2 < 0:
        raise GadgetRefusal("negative counts")
    if max(k1, k3, k4, k5) > 1 or k2 > 2:
        raise GadgetRefusal(f"k vector {req.k} outside the channel bounds")
    if k6 > 3:
        raise GadgetRefusal("k6 > 3 not supported")
    if req.s1 > 12 or req.s2 > 12:
        raise GadgetRefusal("free-neighbor counts above 12 not supported")
    delta = k1 + k2 + k3 - k4
    if not -1 <= delta <= 2:
        raise GadgetRefusal(f"k1+k2+k3-k4 = {delta} outside [-1, 2]")
    if k1 and k4:
        raise GadgetRefusal("k1 = k4 = 1 closes a 6-cycle")
    if k2 == 2 and k3:
        raise GadgetRefusal("k2 = 2 with k3 = 1 forces two non-matching bridges")
    if k2 == 2 and k4:
        raise GadgetRefusal("k2 = 2 with k4 = 1 forces two non-matching bridges")

    need_nonedge = bool(k5) or (k3 and k4) or (k1 and k3)
    need_edge = bool(k6) or (k2 and (k3 or k4)) or k2 == 2
    if need_nonedge and need_edge:
        raise GadgetRefusal(
            "request needs the v-side pair to be both an edge and a non-edge"
        )
    return M3 if need_nonedge else M1


def gadget_for_config(
    req: GadgetRequest, complete: bool = False
) -> tuple[Graph, QuasiPerfectMatching, tuple[int, int]]:
    """Build (graph, quasi-perfect matching, edge uv) whose special-path
    analysis reproduces the request exactly; refuse otherwise.

    Bridge pairs on the (u, v') side are matching edges; pairs on the
    (v, u') side are matching edges unless a common neighbor of u,v or of
    u',v' forces them into M3.  The v-side pair itself becomes an M3
    non-edge when a common neighbor of u,v' (or the k3/k4 or k1/k3
    combination) would otherwise close a short cycle.  With ``complete``
    set, every non-path vertex of degree < 2 gets a private 9-cycle
    attached, which leaves the analysis untouched.  The result is
    validated: forbidden-cycle freeness and an exact round trip through
    the classifier.
    """
    vv_tag = _resolve_realization(req)
    k1, k2, k3, k4, k5, k6 = req.k

    b = _Builder()
    up, u, v, vp = (b.vertex() for _ in range(4))
    b.edge(up, u)
    b.edge(u, v)
    b.pair(u, up, M1)
    if vv_tag == M1:
        b.edge(v, vp)
        b.pair(v, vp, M1)
    else:
        b.pair(v, vp, M3)  # non-edge pair; both endpoints stay uncovered

    if k1:
        x, xp = b.vertex(), b.vertex()
        b.edge(u, x)
        b.edge(x, xp)
        b.edge(xp, vp)
        b.pair(x, xp, M1)
    if k2 == 2:
        k21, k23 = 1, 1  # two matching-edge bridges would close a 6-cycle
    elif k2 == 1:
        k23 = 1 if (k3 or k4) else 0
        k21 = 1 - k23
    else:
        k21 = k23 = 0
    if k21:
        y, yp = b.vertex(), b.vertex()
        b.edge(v, y)
        b.edge(y, yp)
        b.edge(yp, up)
        b.pair(y, yp, M1)
    if k23:
        y, yp = b.vertex(), b.vertex()
        b.edge(v, y)
        b.edge(up, yp)
        b.pair(y, yp, M3)
    if k3:
        p = b.vertex()
        mate = b.vertex()
        b.edge(u, p)
        b.edge(p, v)
        b.edge(p, mate)
        b.pair(p, mate, M1)
    if k4:
        q = b.vertex()
        mate = b.vertex()
        b.edge(up, q)
        b.edge(q, vp)
        b.edge(q, mate)
        b.pair(q, mate, M1)
    if k5:
        r = b.vertex()
        mate = b.vertex()
        b.edge(u, r)
        b.edge(r, vp)
        b.edge(r, mate)
        b.pair(r, mate, M1)
    for _ in range(k6):
        z, zp = b.vertex(), b.vertex()
        b.edge(v, z)
        b.edge(u, zp)
        b.pair(z, zp, M3)

    for _ in range(req.s1):
        b.padded_vertex(u)
    for _ in range(req.s2):
        b.padded_vertex(v)

    if complete:
        deg: dict[int, int] = {i: 0 for i in range(b.n)}
        for a, c in b.edges:
            deg[a] += 1
            deg[c] += 1
        for w in range(b.n):
            if w in (u, up, v, vp) or deg[w] >= 2:
                continue
            ring = [b.vertex() for _ in range(8)]
            chain = [w, *ring, w]
            for i in range(len(chain) - 1):
                b.edge(chain[i], chain[i + 1])
            for i in range(0, 8, 2):
                b.pair(ring[i], ring[i + 1], M1)

    g = build_graph(b.n, b.edges)
    q = make_qpm(b.pairs)
    free, witness_cycle = is_free(g, (4, 6))
    if not free:
        raise GadgetRefusal(f"construction closes a forbidden cycle {witness_cycle}")

    sp = special_path(g, q, (u, v))
    if sp.k != req.k or (sp.s1, sp.s2) != (req.s1, req.s2) or sp.flags:
        raise GadgetRefusal(
            f"round trip failed: built k={sp.k} s=({sp.s1},{sp.s2}) "
            f"flags={sp.flags} for request {req}"
        )
    if check_propositions(sp):
        raise GadgetRefusal(f"built path violates propositions for {req}")
    return g, q, (u, v)


def gadget_catalog() -> list[GadgetRequest]:
    """Requests spanning all four cases, used by the acceptance suite."""
    reqs = [
        # case 1: delta = -1
        GadgetRequest(k4=1),
        GadgetRequest(k4=1, k6=1),
        GadgetRequest(k4=1, k6=2, s1=1),
        GadgetRequest(k4=1, k6=3, s2=2),
        GadgetRequest(k4=1, k5=1),
        GadgetRequest(k4=1, k5=1, s1=2, s2=1),
        GadgetRequest(k4=1, s1=3, s2=3),
        # case 2: delta = 1
        GadgetRequest(k1=1),
        GadgetRequest(k1=1, k6=1, s1=1),
        GadgetRequest(k2=1),
        GadgetRequest(k2=1, k6=2),
        GadgetRequest(k3=1),
        GadgetRequest(k3=1, k5=1),
        GadgetRequest(k3=1, k6=1, s1=2, s2=2),
        # case 3: delta = 2
        GadgetRequest(k1=1, k2=1),
        GadgetRequest(k1=1, k2=1, k6=1, s2=1),
        GadgetRequest(k1=1, k3=1),
        GadgetRequest(k2=1, k3=1),
        GadgetRequest(k2=2),
        GadgetRequest(k2=2, k6=1, s1=1),
        # case 4: delta = 0
        GadgetRequest(),
        GadgetRequest(s1=1, s2=1),
        GadgetRequest(k5=1),
        GadgetRequest(k5=1, s1=2),
        GadgetRequest(k6=1),
        GadgetRequest(k6=2, s1=1, s2=1),
        GadgetRequest(k6=3),
        GadgetRequest(k2=1, k4=1),
        GadgetRequest(k3=1, k4=1),
        GadgetRequest(k3=1, k4=1, k6=0, s1=1, s2=2),
    ]
    return reqs
