"""Signed graphs: switching, closed-walk signs, girth vectors, text format.

A signed graph is a finite simple graph together with a sign (+1 or -1) on
every edge.  Vertices are numbered 1..n.  Switching at a vertex set X flips
the sign of every edge with exactly one endpoint in X; the sign of a closed
walk (the product of its edge signs, with multiplicity) is invariant under
switching, and two signatures on the same graph are switching equivalent
exactly when they induce the same set of positive cycles.

The text format used throughout the package::

    # optional comments
    p signed <n> <m>
    e <u> <v> <+|->

Edges are serialized sorted by (min endpoint, max endpoint).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

INFINITY = math.inf

Edge = tuple[int, int, int]  # (u, v, sign) with u < v, sign in {+1, -1}


def _normalize_edge(u: int, v: int, sign: int) -> Edge:
    if u > v:
        u, v = v, u
    return (u, v, sign)


@dataclass(frozen=True)
class SignedGraph:
    """Immutable signed graph on vertices 1..n."""

    n: int
    edges: tuple[Edge, ...]

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        normalized = sorted(_normalize_edge(*e) for e in edges)
        seen: set[tuple[int, int]] = set()
        for u, v, sign in normalized:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if (u, v) in seen:
                raise ValueError(f"parallel edge ({u},{v}) not allowed")
            if sign not in (1, -1):
                raise ValueError(f"edge sign must be +1 or -1, got {sign!r}")
            seen.add((u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """Vertex -> tuple of (neighbour, sign), neighbours ascending."""
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in self.vertices()}
        for u, v, sign in self.edges:
            adj[u].append((v, sign))
            adj[v].append((u, sign))
        return {v: tuple(sorted(nbrs)) for v, nbrs in adj.items()}

    @cached_property
    def sign_of(self) -> dict[tuple[int, int], int]:
        table: dict[tuple[int, int], int] = {}
        for u, v, sign in self.edges:
            table[(u, v)] = sign
            table[(v, u)] = sign
        return table

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.sign_of

    def underlying_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, _ in self.edges)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen: set[int] = set()
        comps: list[list[int]] = []
        for start in self.vertices():
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y, _ in self.adjacency[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> "SignedGraph":
        """Induced subgraph, renumbered 1..k in ascending vertex order."""
        verts = sorted(set(vertices))
        index = {v: i + 1 for i, v in enumerate(verts)}
        vert_set = set(verts)
        edges = [
            (index[u], index[v], s)
            for u, v, s in self.edges
            if u in vert_set and v in vert_set
        ]
        return SignedGraph(len(verts), edges)


SwitchSet = frozenset


def switch(g: SignedGraph, x: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in x."""
    xs = frozenset(x)
    for v in xs:
        if not (1 <= v <= g.n):
            raise ValueError(f"switch set contains {v}, outside 1..{g.n}")
    return SignedGraph(
        g.n,
        (
            (u, v, -s if (u in xs) != (v in xs) else s)
            for u, v, s in g.edges
        ),
    )


def walk_sign(g: SignedGraph, walk: Sequence[int]) -> int:
    """Sign (+1/-1) of a closed walk given as a vertex sequence.

    The walk must revisit its start (first = last) and consecutive vertices
    must be adjacent.  Edge signs are multiplied with multiplicity.  The
    trivial one-vertex walk has sign +1 (empty product).
    """
    if len(walk) == 0:
        raise ValueError("empty sequence is not a walk")
    if walk[0] != walk[-1]:
        raise ValueError(f"walk is not closed: starts at {walk[0]}, ends at {walk[-1]}")
    sign = 1
    for a, b in zip(walk, walk[1:]):
        s = g.sign_of.get((a, b))
        if s is None:
            raise ValueError(f"consecutive vertices {a},{b} are not adjacent")
        sign *= s
    return sign


@dataclass(frozen=True)
class GirthVector:
    """Lengths of shortest nontrivial closed walks by (sign, parity) type.

    g00: positive even, g01: positive odd, g10: negative even,
    g11: negative odd.  INFINITY when no such walk exists.
    """

    g00: float
    g01: float
    g10: float
    g11: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.g00, self.g01, self.g10, self.g11)

    def dominates(self, other: "GirthVector") -> bool:
        """Componentwise >= ; what a homomorphism source must satisfy."""
        return all(a >= b for a, b in zip(self.as_tuple(), other.as_tuple()))

    def __str__(self) -> str:
        return " ".join(
            "inf" if x == INFINITY else str(int(x)) for x in self.as_tuple()
        )


def girth_vector(g: SignedGraph) -> GirthVector:
    """Shortest nontrivial closed walk of each (sign, parity) type.

    BFS in the lifted state space (vertex, parity, sign) from every vertex;
    a closed walk at s of length L >= 1 corresponds to entering a state
    (s, L mod 2, sign) along some final edge.
    """
    best = {(0, 0): INFINITY, (0, 1): INFINITY, (1, 0): INFINITY, (1, 1): INFINITY}
    for s in g.vertices():
        # dist[(v, parity, signbit)] from (s, 0, 0)
        dist: dict[tuple[int, int, int], int] = {(s, 0, 0): 0}
        queue = deque([(s, 0, 0)])
        while queue:
            v, par, sgn = queue.popleft()
            d = dist[(v, par, sgn)]
            for w, es in g.adjacency[v]:
                state = (w, par ^ 1, sgn ^ (es < 0))
                if state not in dist:
                    dist[state] = d + 1
                    queue.append(state)
        # close the walk with one final edge into s
        for w, es in g.adjacency[s]:
            for (v, par, sgn), d in dist.items():
                if v != w:
                    continue
                total_par = par ^ 1
                total_sgn = sgn ^ (es < 0)
                length = d + 1
                key = (total_sgn, total_par)
                if length < best[key]:
                    best[key] = length
    return GirthVector(best[(0, 0)], best[(0, 1)], best[(1, 0)], best[(1, 1)])


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> SwitchSet | None:
    """Switch set X with switch(g1, X) == g2, or None when no such set exists.

    Works per component: normalize along a BFS spanning tree and check the
    remaining edges.  Raises ValueError when the underlying graphs differ
    (different vertex counts or edge sets), since the question is then
    ill-posed rather than answered negatively.
    """
    if g1.n != g2.n:
        raise ValueError(f"vertex counts differ: {g1.n} vs {g2.n}")
    if g1.underlying_edges() != g2.underlying_edges():
        raise ValueError("underlying graphs differ")
    s2 = g2.sign_of
    flips: dict[int, int] = {}
    for comp in g1.components():
        root = comp[0]
        flips[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, s in g1.adjacency[u]:
                need = 0 if s == s2[(u, v)] else 1
                if v not in flips:
                    flips[v] = flips[u] ^ need
                    queue.append(v)
                elif flips[u] ^ flips[v] != need:
                    return None
    return frozenset(v for v, f in flips.items() if f)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def loads(text: str) -> SignedGraph:
    """Parse the signed-graph text format."""
    n = m = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] != "signed":
                raise ValueError(f"line {lineno}: expected 'p signed <n> <m>'")
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer counts") from None
        elif fields[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            if len(fields) != 4 or fields[3] not in ("+", "-"):
                raise ValueError(f"line {lineno}: expected 'e <u> <v> <+|->'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer endpoints") from None
            edges.append((u, v, 1 if fields[3] == "+" else -1))
        else:
            raise ValueError(f"line {lineno}: unknown record {fields[0]!r}")
    if n is None:
        raise ValueError("missing problem line 'p signed <n> <m>'")
    if m != len(edges):
        raise ValueError(f"problem line declares {m} edges, found {len(edges)}")
    return SignedGraph(n, edges)


def dumps(g: SignedGraph, comments: Iterable[str] = ()) -> str:
    """Serialize; edges sorted by (min, max) endpoint, trailing newline."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"p signed {g.n} {g.m}")
    for u, v, s in g.edges:
        lines.append(f"e {u} {v} {'+' if s > 0 else '-'}")
    return "\n".join(lines) + "\n"


def load(path) -> SignedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dump(g: SignedGraph, path, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(g, comments))


def spanning_tree_classes(g: SignedGraph) -> Iterator[SignedGraph]:
    """All signature classes of g's underlying graph, up to switching.

    Signs on a BFS spanning forest are fixed positive; the classes are the
    sign patterns on the remaining (co-tree) edges.  Distinct patterns give
    distinct positive-cycle sets, so this enumerates each class exactly once.
    """
    tree: set[tuple[int, int]] = set()
    seen: set[int] = set()
    for comp in g.components():
        root = comp[0]
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, _ in g.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    tree.add((min(u, v), max(u, v)))
                    queue.append(v)
    cotree = [(u, v) for u, v, _ in g.edges if (u, v) not in tree]
    base = [(u, v) for u, v, _ in g.edges]
    for bits in range(1 << len(cotree)):
        signs = {e: 1 for e in base}
        for i, e in enumerate(cotree):
            if bits >> i & 1:
                signs[e] = -1
        yield SignedGraph(g.n, ((u, v, signs[(u, v)]) for u, v in base))
