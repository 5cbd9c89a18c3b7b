"""Structure scanners: degree labels, reducible patterns, poor paths.

Everything here reads only the underlying graph — edge signs play no role,
so a scan is invariant under switching (and under sign changes generally).

A vertex's label is "d_i": degree d with exactly i neighbors of degree 2.
The pattern detectors report every occurrence of the structures that the
sparse-graph arguments forbid inside a minimum counterexample; each witness
is a vertex tuple that re-validates against the pattern's predicate.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import SignedGraph

__all__ = [
    "DegreeProfile",
    "LowDegreeComponent",
    "PatternWitness",
    "PoorPath",
    "StructureReport",
    "degree_profiles",
    "scan_structures",
]


@dataclass(frozen=True)
class DegreeProfile:
    vertex: int
    degree: int
    two_neighbors: int

    @property
    def label(self) -> str:
        return f"{self.degree}_{self.two_neighbors}"


@dataclass(frozen=True)
class PatternWitness:
    pattern: str
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class LowDegreeComponent:
    """Connected component of the subgraph induced by degree <= 3 vertices."""

    vertices: tuple[int, ...]
    n0: int  # vertices that are 3_0 in the host graph
    n1: int  # 3_1 vertices of the host with all three neighbors low-degree

    @property
    def surplus_ok(self) -> bool:
        return self.n0 >= self.n1


@dataclass(frozen=True)
class PoorPath:
    """Alternating 3_0/3_1 path whose 3_0 endpoints are of the poorest kind.

    end_types holds the certificate kind per endpoint: 1 when the endpoint's
    remaining neighbors are two more 3_1-vertices, 2 when a single
    3_1-neighbor continues to a further 3_1-vertex.  certificates lists the
    vertices realizing each endpoint's kind.  review is set when the path
    qualifies but only through certificates that reuse path vertices or each
    other — shapes the case analysis never depicts.
    """

    path: tuple[int, ...]
    end_types: tuple[int, int]
    certificates: tuple[tuple[int, ...], tuple[int, ...]]
    review: bool


@dataclass(frozen=True)
class StructureReport:
    profiles: tuple[DegreeProfile, ...]
    k6_patterns: tuple[PatternWitness, ...]
    k8_patterns: tuple[PatternWitness, ...]
    components: tuple[LowDegreeComponent, ...]
    poor_paths: tuple[PoorPath, ...]

    def lines(self) -> list[str]:
        out = []
        for p in self.profiles:
            out.append(f"vertex.{p.vertex}: {p.label}")
        for side, pats in (("k6", self.k6_patterns), ("k8", self.k8_patterns)):
            out.append(f"{side}.patterns: {len(pats)}")
            for i, w in enumerate(pats):
                verts = " ".join(str(v) for v in w.vertices)
                out.append(f"{side}.{i}: {w.pattern} @ {verts}")
        out.append(f"components: {len(self.components)}")
        for i, c in enumerate(self.components):
            verts = " ".join(str(v) for v in c.vertices)
            out.append(f"component.{i}.vertices: {verts}")
            out.append(f"component.{i}.n0: {c.n0}")
            out.append(f"component.{i}.n1: {c.n1}")
            out.append(
                f"component.{i}.surplus: {'ok' if c.surplus_ok else 'VIOLATED'}"
            )
        out.append(f"poor-paths: {len(self.poor_paths)}")
        for i, p in enumerate(self.poor_paths):
            out.append(f"poor-path.{i}.path: {' '.join(str(v) for v in p.path)}")
            out.append(
                f"poor-path.{i}.ends: type{p.end_types[0]} type{p.end_types[1]}"
            )
            certs = "; ".join(
                " ".join(str(v) for v in c) for c in p.certificates
            )
            out.append(f"poor-path.{i}.certificates: {certs}")
            if p.review:
                out.append(f"poor-path.{i}.review: certificates overlap")
        return out


def degree_profiles(g: SignedGraph) -> dict[int, DegreeProfile]:
    out = {}
    for v in g.vertices():
        two = sum(1 for w, _ in g.adjacency[v] if g.degree(w) == 2)
        out[v] = DegreeProfile(v, g.degree(v), two)
    return out


def _neighbors(g: SignedGraph, v: int) -> list[int]:
    return sorted(w for w, _ in g.adjacency[v])


def _k6_patterns(g: SignedGraph, label: dict[int, str]) -> list[PatternWitness]:
    found: list[PatternWitness] = []
    for v in g.vertices():
        if label[v] in ("2_1", "3_2", "4_4", "5_5"):
            found.append(PatternWitness(f"k6:{label[v]}", (v,)))
    for u, v, _ in g.edges:
        pair = {label[u], label[v]}
        if pair == {"3_1", "4_3"}:
            three = u if label[u] == "3_1" else v
            four = v if three == u else u
            found.append(PatternWitness("k6:4_3-3_1", (three, four)))
    for u, v, _ in g.edges:
        if label[u] == label[v] == "3_1":
            for w in _neighbors(g, u):
                if w in dict(g.adjacency[v]) and g.degree(w) == 2:
                    found.append(
                        PatternWitness("k6:3_1-3_1-shared-2", (u, v, w))
                    )
                elif w in dict(g.adjacency[v]) and label[w] == "3_0":
                    found.append(
                        PatternWitness("k6:3_0-3_1-3_1-triangle", (w, u, v))
                    )
    for v in g.vertices():
        if label[v] != "3_1":
            continue
        mates = [w for w in _neighbors(g, v) if label[w] == "3_1"]
        for i in range(len(mates)):
            for j in range(i + 1, len(mates)):
                found.append(
                    PatternWitness("k6:3_1-3_1-3_1", (v, mates[i], mates[j]))
                )
    for u in g.vertices():
        if label[u] != "3_0":
            continue
        nbrs = _neighbors(g, u)
        if any(label[x] != "3_1" for x in nbrs):
            continue
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                x, y = nbrs[i], nbrs[j]
                common = set(_neighbors(g, x)) & set(_neighbors(g, y))
                for w in sorted(common - {u}):
                    if g.degree(w) <= 3:
                        found.append(
                            PatternWitness("k6:3_0-nbrs", (u, x, y, w))
                        )
    return found


def _k8_patterns(g: SignedGraph, label: dict[int, str]) -> list[PatternWitness]:
    found: list[PatternWitness] = []
    for v in g.vertices():
        if g.degree(v) == 1:
            found.append(PatternWitness("k8:1-vertex", (v,)))
        elif label[v] in ("2_1", "3_1", "4_3", "5_5"):
            found.append(PatternWitness(f"k8:{label[v]}", (v,)))
    return found


def _low_degree_components(
    g: SignedGraph, label: dict[int, str]
) -> list[LowDegreeComponent]:
    low = {v for v in g.vertices() if g.degree(v) <= 3}
    seen: set[int] = set()
    comps: list[LowDegreeComponent] = []
    for start in sorted(low):
        if start in seen:
            continue
        stack, members = [start], []
        seen.add(start)
        while stack:
            v = stack.pop()
            members.append(v)
            for w, _ in g.adjacency[v]:
                if w in low and w not in seen:
                    seen.add(w)
                    stack.append(w)
        members.sort()
        n0 = sum(1 for v in members if label[v] == "3_0")
        n1 = sum(
            1
            for v in members
            if label[v] == "3_1"
            and sum(1 for w, _ in g.adjacency[v] if w in low) == 3
        )
        comps.append(LowDegreeComponent(tuple(members), n0, n1))
    return comps


# ---------------------------------------------------------------------------
# poor paths
# ---------------------------------------------------------------------------


def _end_certificates(
    g: SignedGraph, label: dict[int, str], v: int, pred: int | None
) -> list[tuple[int, tuple[int, ...]]]:
    """Certificate candidates (kind, vertices) for a path endpoint v.

    pred is the endpoint's path neighbor (None on a single-vertex path).
    Kind 1 uses two 3_1-neighbors besides pred; kind 2 uses one
    3_1-neighbor x besides pred together with a further 3_1-neighbor of x.
    """
    nbrs = [w for w in _neighbors(g, v) if w != pred]
    certs: list[tuple[int, tuple[int, ...]]] = []
    ones = [w for w in nbrs if label[w] == "3_1"]
    for i in range(len(ones)):
        for j in range(i + 1, len(ones)):
            certs.append((1, (ones[i], ones[j])))
    for x in ones:
        for y in _neighbors(g, x):
            if y != v and label[y] == "3_1":
                certs.append((2, (x, y)))
    return certs


def _poor_paths(g: SignedGraph, label: dict[int, str]) -> list[PoorPath]:
    paths: list[PoorPath] = []

    def witness(path: tuple[int, ...]) -> PoorPath | None:
        k2 = len(path)
        left = _end_certificates(g, label, path[0], path[1] if k2 > 1 else None)
        right = _end_certificates(
            g, label, path[-1], path[-2] if k2 > 1 else None
        )
        if not left or not right:
            return None
        best: tuple[tuple[int, int], tuple, bool] | None = None
        interior = set(path)
        for lk, lc in left:
            for rk, rc in right:
                if k2 == 1:
                    # both certificates anchor at the same vertex: their
                    # first-step neighbors must be distinct, and a 3-vertex
                    # cannot host two kind-1 certificates
                    if lk == rk == 1:
                        continue
                    anchors_l = set(lc) if lk == 1 else {lc[0]}
                    anchors_r = set(rc) if rk == 1 else {rc[0]}
                    if anchors_l & anchors_r:
                        continue
                clean = (
                    not (set(lc) | set(rc)) & interior
                    and not set(lc) & set(rc)
                )
                cand = ((lk, rk), (lc, rc), clean)
                if clean:
                    return PoorPath(path, (lk, rk), (lc, rc), False)
                if best is None:
                    best = cand
        if best is None:
            return None
        return PoorPath(path, best[0], best[1], True)

    zeros = sorted(v for v in g.vertices() if label[v] == "3_0")

    def extend(path: list[int]) -> None:
        if len(path) % 2 == 1:
            candidate = tuple(path)
            if candidate <= candidate[::-1]:
                w = witness(candidate)
                if w is not None:
                    paths.append(w)
            want = "3_1"
        else:
            want = "3_0"
        for nxt in _neighbors(g, path[-1]):
            if label[nxt] == want and nxt not in path:
                path.append(nxt)
                extend(path)
                path.pop()

    for v in zeros:
        extend([v])
    paths.sort(key=lambda p: (len(p.path), p.path))
    return paths


def scan_structures(g: SignedGraph) -> StructureReport:
    profiles = degree_profiles(g)
    label = {v: p.label for v, p in profiles.items()}
    return StructureReport(
        tuple(profiles[v] for v in g.vertices()),
        tuple(_k6_patterns(g, label)),
        tuple(_k8_patterns(g, label)),
        tuple(_low_degree_components(g, label)),
        tuple(_poor_paths(g, label)),
    )
