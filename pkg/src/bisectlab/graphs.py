"""Simple undirected graphs: representation, forbidden-cycle detection,
degeneracy ordering, and the odd-order parity fix.
"""
from __future__ import annotations

from dataclasses import dataclass, field


class GraphInputError(ValueError):
    """Loop, duplicate edge, or out-of-range vertex id."""


class GraphFormatError(ValueError):
    """Malformed graph text file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class AugmentationError(RuntimeError):
    """No attachment pair exists for the odd-order parity fix."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...]
    edge_set: frozenset[tuple[int, int]] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_set if u < v else (v, u) in self.edge_set

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]


def build_graph(n: int, edges) -> Graph:
    """Validate and build a :class:`Graph`; rejects loops and duplicate edges."""
    if n < 0:
        raise GraphInputError(f"negative vertex count {n}")
    seen: set[tuple[int, int]] = set()
    canon: list[tuple[int, int]] = []
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphInputError(f"loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphInputError(f"duplicate edge ({e[0]},{e[1]})")
        seen.add(e)
        canon.append(e)
        adj[u].append(v)
        adj[v].append(u)
    canon.sort()
    return Graph(
        n=n,
        edges=tuple(canon),
        adj=tuple(tuple(sorted(a)) for a in adj),
        edge_set=frozenset(canon),
    )


def find_cycle(g: Graph, length: int) -> list[int] | None:
    """Find a cycle of exactly ``length`` distinct vertices, or ``None``.

    Depth-bounded DFS rooted at each vertex in turn; every cycle is found via
    its minimum vertex, so non-root path vertices are restricted to larger
    ids.  The returned cycle is re-verified edge by edge before returning.
    """
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    target = length

    for s in range(g.n):
        path = [s]
        on_path = bytearray(g.n)
        on_path[s] = 1

        def dfs() -> bool:
            v = path[-1]
            if len(path) == target:
                return s in g.adj[v]
            for w in g.adj[v]:
                if w > s and not on_path[w]:
                    path.append(w)
                    on_path[w] = 1
                    if dfs():
                        return True
                    path.pop()
                    on_path[w] = 0
            return False

        if dfs():
            cycle = list(path)
            assert len(set(cycle)) == target
            for i in range(target):
                assert g.has_edge(cycle[i], cycle[(i + 1) % target])
            return cycle
    return None


def is_free(g: Graph, lengths) -> tuple[bool, list[int] | None]:
    """``(True, None)`` if no cycle of any length in ``lengths`` exists,
    else ``(False, witness_cycle)``."""
    for ell in sorted(lengths):
        cycle = find_cycle(g, ell)
        if cycle is not None:
            return False, cycle
    return True, None


@dataclass(frozen=True)
class DegeneracyOrder:
    """Vertex order from min-degree peeling, reversed, with per-vertex counts
    of neighbors occurring earlier in the order."""

    order: tuple[int, ...]
    back_degrees: tuple[int, ...]

    @property
    def degeneracy(self) -> int:
        return max(self.back_degrees, default=0)


def degeneracy_ordering(g: Graph) -> DegeneracyOrder:
    """Repeated minimum-degree peeling; ties broken by smallest vertex id."""
    deg = [g.degree(v) for v in range(g.n)]
    removed = bytearray(g.n)
    peel: list[int] = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not removed[v] and (best == -1 or deg[v] < deg[best]):
                best = v
        removed[best] = 1
        peel.append(best)
        for w in g.adj[best]:
            if not removed[w]:
                deg[w] -= 1
    order = tuple(reversed(peel))
    pos = {v: i for i, v in enumerate(order)}
    back = tuple(sum(1 for w in g.adj[v] if pos[w] < pos[v]) for v in order)
    return DegeneracyOrder(order=order, back_degrees=back)


def _paths_of_length_exist(g: Graph, a: int, b: int, length: int) -> bool:
    """Is there a simple a-b path with exactly ``length`` edges?"""
    path = [a]
    on_path = bytearray(g.n)
    on_path[a] = 1

    def dfs() -> bool:
        v = path[-1]
        if len(path) == length:
            return b in g.adj[v] and not on_path[b]
        for w in g.adj[v]:
            if not on_path[w] and w != b:
                path.append(w)
                on_path[w] = 1
                if dfs():
                    return True
                path.pop()
                on_path[w] = 0
        return False

    return dfs()


def parity_augment(g: Graph) -> Graph:
    """Even-order fix for {C4,C6}-free graphs.

    If ``g`` already has even order it is returned unchanged.  Otherwise a new
    vertex is joined to the first pair (a, b), in ascending lexicographic
    order, such that ``g`` has no a-b path of length 2 or 4; attaching there
    creates no new 4- or 6-cycle.  Raises :class:`AugmentationError` when no
    such pair exists.
    """
    if g.n % 2 == 0:
        return g
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if _paths_of_length_exist(g, a, b, 2):
                continue
            if _paths_of_length_exist(g, a, b, 4):
                continue
            x = g.n
            return build_graph(g.n + 1, list(g.edges) + [(a, x), (b, x)])
    raise AugmentationError(
        "no attachment pair (a,b) without an a-b path of length 2 or 4"
    )


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = bytearray(g.n)
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = 1
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def min_degree(g: Graph) -> int:
    return min((g.degree(v) for v in range(g.n)), default=0)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees sorted descending."""
    return sorted((g.degree(v) for v in range(g.n)), reverse=True)


def parse_graph(text: str) -> Graph:
    """Parse the plain text format: ``n m`` header then ``u v`` edge lines.

    Lines starting with ``#`` are ignored anywhere; the trailing newline is
    optional.
    """
    data: list[tuple[int, str]] = []
    for i, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("#"):
            continue
        data.append((i, raw))
    if not data:
        raise GraphFormatError("empty input")
    line_no, header = data[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"expected 'n m' header, got {header!r}", line_no)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"non-integer header {header!r}", line_no) from None
    if len(data) - 1 != m:
        raise GraphFormatError(
            f"header promises {m} edges, found {len(data) - 1}", line_no
        )
    edges = []
    for line_no, raw in data[1:]:
        parts = raw.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {raw!r}", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer edge {raw!r}", line_no) from None
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except GraphInputError as exc:
        raise GraphFormatError(str(exc)) from exc


def write_graph(g: Graph) -> str:
    """Canonical text form: header, then edges sorted ascending."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_graph(g))
