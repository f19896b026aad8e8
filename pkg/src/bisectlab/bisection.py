"""Two-stage randomized bisection driven by a quasi-perfect matching.

Stage 1 orients every pair by a fair coin.  A pair is *stable* when its
balance sigma (cross edges minus same-side edges over both endpoints,
matching edges excluded) is nonnegative; stage 2 re-randomizes exactly the
active (sigma < 0) pairs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .analyzer import edge_partition
from .graphs import Graph, parity_augment
from .matching import AuditReport, QuasiPerfectMatching, quasi_perfect_matching
from .rng import STAGE1, STAGE2, coin


@dataclass(frozen=True)
class BisectionResult:
    labels: tuple[int, ...]
    cut_size: int
    stage1_cut: int
    stable_pairs: tuple[tuple[int, int], ...]
    active_pairs: tuple[tuple[int, int], ...]
    seed: int
    run_index: int

    def sides(self) -> tuple[list[int], list[int]]:
        zero = [v for v, h in enumerate(self.labels) if h == 0]
        one = [v for v, h in enumerate(self.labels) if h == 1]
        return zero, one

    def to_json(self) -> dict:
        zero, one = self.sides()
        return {
            "seed": self.seed,
            "cut_size": self.cut_size,
            "stage1_cut": self.stage1_cut,
            "sides": [zero, one],
            "active_pairs": len(self.active_pairs),
        }


def sigma(
    g: Graph,
    q: QuasiPerfectMatching,
    labels,
    pair: tuple[int, int],
) -> int:
    """Cross-minus-same balance of a pair; nonnegative means stable.

    Neighborhoods exclude the pair partner (the one incident matching edge);
    everything else counts with its full multiplicity.
    """
    v, vp = pair
    if q.partner(v) != vp:
        raise ValueError(f"({v},{vp}) is not a pair of the quasi-perfect matching")
    total = 0
    for x in (v, vp):
        partner = q.partner(x)
        hx = labels[x]
        for w in g.adj[x]:
            if w == partner:
                continue
            total += 1 if labels[w] != hx else -1
    return total


def stage1(q: QuasiPerfectMatching, seed: int, run_index: int = 0) -> tuple[int, ...]:
    """Independently orient each pair with a fair, addressable coin."""
    labels = [0] * q.n
    for j, (u, v, _tag) in enumerate(q.pairs):
        bit = coin(seed, run_index, STAGE1, j)
        labels[u] = bit
        labels[v] = 1 - bit
    return tuple(labels)


def stage2(
    g: Graph,
    q: QuasiPerfectMatching,
    labels,
    seed: int,
    run_index: int = 0,
) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Re-randomize every active pair; returns (labels, stable, active)."""
    new_labels = list(labels)
    stable: list[tuple[int, int]] = []
    active: list[tuple[int, int]] = []
    for j, (u, v, _tag) in enumerate(q.pairs):
        if sigma(g, q, labels, (u, v)) >= 0:
            stable.append((u, v))
        else:
            active.append((u, v))
            bit = coin(seed, run_index, STAGE2, j)
            new_labels[u] = bit
            new_labels[v] = 1 - bit
    return tuple(new_labels), tuple(stable), tuple(active)


def cut_size(g: Graph, labels) -> int:
    return sum(1 for u, v in g.edges if labels[u] != labels[v])


def run_once(
    g: Graph, q: QuasiPerfectMatching, seed: int, run_index: int = 0
) -> BisectionResult:
    """One full two-stage run, addressable by (seed, run_index)."""
    h1 = stage1(q, seed, run_index)
    h2, stable, active = stage2(g, q, h1, seed, run_index)
    return BisectionResult(
        labels=h2,
        cut_size=cut_size(g, h2),
        stage1_cut=cut_size(g, h1),
        stable_pairs=stable,
        active_pairs=active,
        seed=seed,
        run_index=run_index,
    )


@dataclass(frozen=True)
class BisectionRun:
    """Best-of-R outcome plus the even-order context the audit needs.

    For odd-order inputs the graph is parity-augmented before running;
    ``result`` is then the restriction to the original vertices (the helper
    vertex is dropped, leaving sides within one of each other), while
    ``raw_result`` / ``graph_even`` / ``qpm`` describe the run as executed.
    """

    graph: Graph
    graph_even: Graph
    qpm: QuasiPerfectMatching
    raw_result: BisectionResult
    result: BisectionResult
    augmented: bool


def run_bisection(
    g: Graph,
    seed: int = 0,
    restarts: int = 1,
    qpm_restarts: int = 16,
    qpm: QuasiPerfectMatching | None = None,
) -> BisectionRun:
    """Best of ``restarts`` runs by cut size; ties go to the lowest run index."""
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    augmented = g.n % 2 != 0
    g_even = parity_augment(g) if augmented else g
    if qpm is None:
        qpm = quasi_perfect_matching(g_even, seed=seed, restarts=qpm_restarts)
    elif qpm.n != g_even.n:
        raise ValueError(
            f"matching covers {qpm.n} vertices, run needs {g_even.n} "
            "(odd-order inputs are parity-augmented first)"
        )

    best: BisectionResult | None = None
    for r in range(restarts):
        res = run_once(g_even, qpm, seed, r)
        if best is None or res.cut_size > best.cut_size:
            best = res

    if not augmented:
        return BisectionRun(g, g_even, qpm, best, best, augmented=False)

    restricted_labels = best.labels[: g.n]
    h1 = stage1(qpm, seed, best.run_index)
    restricted = BisectionResult(
        labels=restricted_labels,
        cut_size=cut_size(g, restricted_labels),
        stage1_cut=cut_size(g, h1[: g.n]),
        stable_pairs=best.stable_pairs,
        active_pairs=best.active_pairs,
        seed=best.seed,
        run_index=best.run_index,
    )
    return BisectionRun(g, g_even, qpm, best, restricted, augmented=True)


def audit_run(
    g: Graph, q: QuasiPerfectMatching, b: BisectionResult
) -> AuditReport:
    """Per-run structural facts of the two-stage algorithm.

    (a) every pair that is an edge is cut, (b) exactly half of the doubly
    connecting edges are cut, (c) sides balance, (d) the recorded cut size
    matches a recount.
    """
    report = AuditReport()

    uncut_pairs = [
        (u, v)
        for u, v, _tag in q.pairs
        if g.has_edge(u, v) and b.labels[u] == b.labels[v]
    ]
    report.add("matching-edges-cut", not uncut_pairs, f"uncut pairs: {uncut_pairs}")

    part = edge_partition(g, q)
    e2_cut = sum(1 for u, v in part.e2 if b.labels[u] != b.labels[v])
    report.add(
        "e2-exactly-half-cut",
        2 * e2_cut == len(part.e2),
        f"{e2_cut} of {len(part.e2)} E2 edges cut",
    )

    zero = sum(1 for h in b.labels if h == 0)
    report.add(
        "balanced",
        abs(2 * zero - len(b.labels)) <= (len(b.labels) % 2),
        f"side sizes {zero}/{len(b.labels) - zero}",
    )

    recount = cut_size(g, b.labels)
    report.add(
        "cut-size-consistent",
        recount == b.cut_size,
        f"recorded {b.cut_size}, recount {recount}",
    )
    return report
