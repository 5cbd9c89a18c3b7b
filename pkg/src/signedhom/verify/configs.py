"""Extension checks for the reducible configurations of the sparse-graph proofs.

A configuration is a small graph with *internal* vertices (to be colored)
and *boundary* vertices (degree-1 squares carrying an arbitrary precolor
from the doubled target).  The check enumerates every boundary precoloring
and every signature class of the configuration, and confirms that each
precoloring extends to a full list coloring of the internal vertices.

Signatures are normalized by switching a spanning tree positive; the 2^r
residual sign patterns on the co-tree edges are checked separately (r = 0
for tree configurations).  Switching an internal vertex permutes the
precolor space bijectively (lists invert), so normalizing over all vertices
loses nothing.

Boundary precolorings are not enumerated one by one.  On trees, possible
admissible lists are collapsed bottom-up with multiplicity counts: a
boundary vertex contributes its forbidden mask per precolor, equal masks
merge, and the check is exact because an empty admissible list propagates
to the root.  Configurations with cycles strip their pendant trees the same
way, then solve the list-homomorphism problem on the small 2-core for each
deduplicated combination of effective lists.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from ..core import SignedGraph, spanning_tree_classes
from ..hom import SolveOptions, forbidden_mask, list_sp_hom
from ..targets import TargetSpace, dsg_space, k2km_space
from .suites import ClauseReport, LemmaReport, _Tally, _run_units

__all__ = ["CONFIG_IDS", "ConfigSpec", "config", "verify_config_extension"]


@dataclass(frozen=True)
class ConfigSpec:
    """A reducible configuration over the doubled (K_2k, M) color space."""

    name: str
    base_k: int
    vertex_names: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    boundary: tuple[int, ...]
    root: int | None = None
    gate: int | None = None
    description: str = ""

    @property
    def n(self) -> int:
        return len(self.vertex_names)

    def graph(self) -> SignedGraph:
        return SignedGraph(self.n, tuple((u, v, 1) for u, v in self.edges))

    def target(self) -> TargetSpace:
        return dsg_space(k2km_space(self.base_k))


def _build(
    name: str,
    base_k: int,
    edges: list[tuple[str, str]],
    boundary: list[str],
    root: str | None = None,
    gate: str | None = None,
    description: str = "",
    extra_vertices: list[str] | None = None,
) -> ConfigSpec:
    order: dict[str, int] = {}

    def vid(label: str) -> int:
        if label not in order:
            order[label] = len(order) + 1
        return order[label]

    for label in extra_vertices or []:
        vid(label)
    edge_ids = tuple((vid(a), vid(b)) for a, b in edges)
    bnd = tuple(sorted(vid(b) for b in boundary))
    return ConfigSpec(
        name=name,
        base_k=base_k,
        vertex_names=tuple(order),
        edges=edge_ids,
        boundary=bnd,
        root=vid(root) if root else None,
        gate=vid(gate) if gate else None,
        description=description,
    )


def _branch2(owner: str, tag: str, edges: list, boundary: list) -> None:
    """Attach a 2-vertex ending in a square: owner - <tag>m - <tag>s."""
    edges.append((owner, f"{tag}m"))
    edges.append((f"{tag}m", f"{tag}s"))
    boundary.append(f"{tag}s")


def _square(owner: str, tag: str, edges: list, boundary: list) -> None:
    edges.append((owner, f"{tag}s"))
    boundary.append(f"{tag}s")


def _poor_path(k: int, left: int, right: int) -> ConfigSpec:
    """Alternating low-degree path with poorest endpoints of the given types.

    Path v1..v_{2k+1}, odd positions of degree 3 with no 2-neighbor, even
    positions with one pendant 2-vertex; each endpoint carries either two
    certifying neighbors of the same shape (type 1) or a two-step chain of
    them (type 2), and a pendant square wherever a third neighbor is needed
    to reach degree 3.
    """
    edges: list[tuple[str, str]] = []
    boundary: list[str] = []
    path = [f"v{i}" for i in range(1, 2 * k + 2)]
    for a, b in itertools.pairwise(path):
        edges.append((a, b))
    for i in range(2, 2 * k + 1):
        v = path[i - 1]
        if i % 2 == 0:
            _branch2(v, v, edges, boundary)
        else:
            _square(v, v, edges, boundary)

    def attach_end(end: str, kind: int, tag: str) -> int:
        """Returns the number of path-external neighbors added to end."""
        if kind == 1:
            for j in (1, 2):
                c = f"{tag}c{j}"
                edges.append((end, c))
                _square(c, f"{c}q", edges, boundary)
                _branch2(c, f"{c}b", edges, boundary)
            return 2
        a, b = f"{tag}a", f"{tag}b"
        edges.append((end, a))
        _branch2(a, f"{a}b", edges, boundary)
        edges.append((a, b))
        _square(b, f"{b}q", edges, boundary)
        _branch2(b, f"{b}b", edges, boundary)
        return 1

    degree = (1 if k >= 1 else 0) + attach_end(path[0], left, "l")
    if k >= 1:
        degree_r = 1 + attach_end(path[-1], right, "r")
    else:
        degree_r = degree + attach_end(path[0], right, "r")
        degree = degree_r
    if degree < 3:
        _square(path[0], f"{path[0]}x", edges, boundary)
    if k >= 1 and degree_r < 3:
        _square(path[-1], f"{path[-1]}x", edges, boundary)
    return _build(
        f"k6:poor-path:k{k}-t{left}t{right}",
        3,
        edges,
        boundary,
        description=(
            f"alternating low-degree path on {2 * k + 1} vertices,"
            f" endpoint certificates of types {left} and {right}"
        ),
    )


def _registry() -> dict[str, ConfigSpec]:
    specs: list[ConfigSpec] = []

    def weak_vertex(name: str, base_k: int, branches: int, squares: int) -> ConfigSpec:
        edges: list[tuple[str, str]] = []
        boundary: list[str] = []
        for j in range(1, branches + 1):
            _branch2("v", f"b{j}", edges, boundary)
        for j in range(1, squares + 1):
            _square("v", f"q{j}", edges, boundary)
        return _build(
            name,
            base_k,
            edges,
            boundary,
            description=f"degree-{branches + squares} vertex with {branches} pendant 2-vertices",
        )

    # -- single weak vertices -------------------------------------------
    specs.append(
        _build(
            "k6:2_1",
            3,
            [("y", "u"), ("u", "v"), ("v", "x")],
            ["x", "y"],
            description="2-vertex adjacent to a 2-vertex",
        )
    )
    specs.append(
        _build(
            "k6:3_2",
            3,
            [("v", "u"), ("u", "y"), ("v", "w"), ("w", "z"), ("v", "x")],
            ["x", "y", "z"],
            description="3-vertex with two pendant 2-vertices",
        )
    )
    specs.append(weak_vertex("k6:4_4", 3, 4, 0))
    specs.append(weak_vertex("k6:5_5", 3, 5, 0))

    # -- composite configurations ---------------------------------------
    e: list[tuple[str, str]] = [("u", "v")]
    b: list[str] = []
    _square("u", "u1", e, b)
    _branch2("u", "u2", e, b)
    for j in (1, 2, 3):
        _branch2("v", f"v{j}", e, b)
    specs.append(
        _build(
            "k6:4_3-3_1",
            3,
            e,
            b,
            description="3-vertex with one 2-neighbor adjacent to a 4-vertex with three",
        )
    )

    e = [("u", "v"), ("u", "w"), ("v", "w")]
    b = []
    _square("u", "u1", e, b)
    _branch2("v", "v1", e, b)
    _branch2("v", "v2", e, b)
    specs.append(
        _build(
            "k6:4_3-3_1-shared",
            3,
            e,
            b,
            description="the 4_3-3_1 pair whose shared neighbor is the 2-vertex w",
        )
    )

    e = [("u", "v"), ("u", "w"), ("v", "w")]
    b = []
    _square("u", "u1", e, b)
    _square("v", "v1", e, b)
    specs.append(
        _build(
            "k6:3_1-3_1-shared-2",
            3,
            e,
            b,
            description="adjacent 3-vertices sharing their 2-neighbor",
        )
    )

    e = [("u", "v"), ("u", "w"), ("v", "w")]
    b = []
    _branch2("u", "u1", e, b)
    _branch2("v", "v1", e, b)
    _square("w", "w1", e, b)
    specs.append(
        _build(
            "k6:3_0-3_1-3_1-triangle",
            3,
            e,
            b,
            description="triangle of two 3_1-vertices and one 3_0-vertex",
        )
    )

    e = [("u", "v"), ("v", "w")]
    b = []
    _branch2("u", "u1", e, b)
    _square("u", "u2", e, b)
    _branch2("v", "v1", e, b)
    _branch2("w", "w1", e, b)
    _square("w", "w2", e, b)
    specs.append(
        _build(
            "k6:3_1-3_1-3_1",
            3,
            e,
            b,
            description="3_1-vertex with two 3_1-neighbors, path form",
        )
    )

    e = [("u", "v"), ("v", "w"), ("w", "x"), ("x", "u")]
    b = []
    _square("u", "u2", e, b)
    _branch2("v", "v1", e, b)
    _square("w", "w2", e, b)
    specs.append(
        _build(
            "k6:3_1-3_1-3_1-cycle",
            3,
            e,
            b,
            description="3_1-vertex with two 3_1-neighbors closed through a 2-vertex",
        )
    )

    e = [("u", "x"), ("u", "y"), ("u", "z"), ("x", "w"), ("y", "w")]
    b = []
    _square("x", "x1", e, b)
    _square("y", "y1", e, b)
    _square("z", "z3", e, b)
    _branch2("z", "z1", e, b)
    specs.append(
        _build(
            "k6:3_0-nbrs-2",
            3,
            e,
            b,
            description="3_0-vertex with all neighbors 3_1, two of them sharing a 2-vertex",
        )
    )

    e = [("u", "x"), ("u", "y"), ("u", "z"), ("w", "x"), ("w", "y"), ("w", "z")]
    b = []
    for s in ("x", "y", "z"):
        _branch2(s, f"{s}1", e, b)
    specs.append(
        _build(
            "k6:3_0-nbrs-3_0-adj",
            3,
            e,
            b,
            description="3_0-vertex whose 3_1-neighbors all meet a second 3_0-vertex",
        )
    )

    e = [("u", "x"), ("u", "y"), ("u", "z"), ("w", "x"), ("w", "y")]
    b = []
    _square("w", "w1", e, b)
    _branch2("x", "x1", e, b)
    _branch2("y", "y1", e, b)
    _branch2("z", "z1", e, b)
    _square("z", "z3", e, b)
    specs.append(
        _build(
            "k6:3_0-nbrs-3_0-nonadj",
            3,
            e,
            b,
            description="3_0-vertex, two 3_1-neighbors meeting a non-adjacent 3_0-vertex",
        )
    )

    # -- poor paths up to k = 2 ------------------------------------------
    specs.append(_poor_path(0, 1, 2))
    specs.append(_poor_path(0, 2, 2))
    for k in (1, 2):
        for left, right in ((1, 1), (1, 2), (2, 2)):
            specs.append(_poor_path(k, left, right))

    # -- the (K_8, M) set --------------------------------------------------
    specs.append(
        _build(
            "k8:1-vertex",
            4,
            [("v", "b")],
            ["b"],
            description="vertex of degree 1",
        )
    )
    specs.append(
        _build(
            "k8:2_1",
            4,
            [("y", "u"), ("u", "v"), ("v", "x")],
            ["x", "y"],
            description="2-vertex adjacent to a 2-vertex",
        )
    )
    specs.append(
        _build(
            "k8:3_1",
            4,
            [("u", "u1"), ("u", "v"), ("v", "v1"), ("v", "v2")],
            ["u1", "v1", "v2"],
            root="u",
            gate="v",
            description=(
                "3-vertex with a 2-neighbor adjacent to a 3-vertex with two;"
                " precolorings leaving the gate vertex listless are skipped"
                " (the surrounding coloring they mimic cannot exist)"
            ),
        )
    )
    e = []
    b = []
    for j in (1, 2, 3):
        _branch2("v", f"b{j}", e, b)
    _square("v", "q", e, b)
    specs.append(
        _build(
            "k8:4_3",
            4,
            e,
            b,
            description="4-vertex with three pendant 2-vertices",
        )
    )
    specs.append(weak_vertex("k8:5_5", 4, 5, 0))

    specs.append(
        _build(
            "sanity:isolated",
            3,
            [],
            [],
            description="single internal vertex, trivially extendable",
            extra_vertices=["v"],
        )
    )
    return {s.name: s for s in specs}


_CONFIGS = _registry()
CONFIG_IDS = tuple(_CONFIGS)


def config(config_id: str) -> ConfigSpec:
    try:
        return _CONFIGS[config_id]
    except KeyError:
        raise ValueError(
            f"unknown configuration {config_id!r}; choose from {', '.join(CONFIG_IDS)}"
        ) from None


# ---------------------------------------------------------------------------
# the extension check
# ---------------------------------------------------------------------------


class _Gate:
    __slots__ = ("vertex", "filtered")

    def __init__(self, vertex: int | None) -> None:
        self.vertex = vertex
        self.filtered = 0


def _branch_tables(
    g: SignedGraph,
    t: TargetSpace,
    spec: ConfigSpec,
    v: int,
    parent: int,
    gate: _Gate,
):
    """Admissible-mask table of the subtree below v: mask -> (count, rep).

    count is the number of boundary precolorings of the subtree producing
    the mask; rep is one of them, keyed by vertex id.
    """
    full = (1 << t.num_colors) - 1
    boundary = set(spec.boundary)
    if v in boundary:
        return {1 << (c - 1): (1, {v: c}) for c in range(1, t.num_colors + 1)}
    table: dict[int, tuple[int, dict[int, int]]] = {full: (1, {})}
    for w, sign in g.adjacency[v]:
        if w == parent:
            continue
        sub = _branch_tables(g, t, spec, w, v, gate)
        fm: dict[int, tuple[int, dict[int, int]]] = {}
        for mask, (count, rep) in sub.items():
            f = forbidden_mask(t, sign, mask)
            if f in fm:
                fm[f] = (fm[f][0] + count, fm[f][1])
            else:
                fm[f] = (count, rep)
        nxt: dict[int, tuple[int, dict[int, int]]] = {}
        for m1, (c1, r1) in table.items():
            for f, (c2, r2) in fm.items():
                nm = m1 & ~f
                if nm in nxt:
                    nxt[nm] = (nxt[nm][0] + c1 * c2, nxt[nm][1])
                else:
                    nxt[nm] = (c1 * c2, r1 | r2)
        table = nxt
    if gate.vertex == v and 0 in table:
        gate.filtered += table.pop(0)[0]
    return table


def _describe(spec: ConfigSpec, t: TargetSpace, rep: dict[int, int], extra: str = "") -> str:
    parts = [
        f"{spec.vertex_names[v - 1]}={t.label(c)}" for v, c in sorted(rep.items())
    ]
    return ", ".join(parts) + (f" [{extra}]" if extra else "") + " -> no extension"


def _two_core(g: SignedGraph) -> set[int]:
    deg = {v: g.degree(v) for v in g.vertices()}
    peel = [v for v, d in deg.items() if d <= 1]
    alive = set(g.vertices())
    while peel:
        v = peel.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w, _ in g.adjacency[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    peel.append(w)
    return alive


def _u_config_class(config_id: str, index: int) -> list[ClauseReport]:
    spec = config(config_id)
    t = spec.target()
    variants = list(spanning_tree_classes(spec.graph()))
    g = variants[index]
    gate = _Gate(spec.gate)
    tally = _Tally(f"extends-class{index}")
    boundary = set(spec.boundary)
    core = _two_core(g)

    if not core:
        internal = [v for v in g.vertices() if v not in boundary]
        root = spec.root if spec.root is not None else min(internal)
        table = _branch_tables(g, t, spec, root, 0, gate)
        checked = sum(count for count, _ in table.values())
        tally.bulk(checked)
        zero = table.get(0)
        if zero is not None:
            tally.failure_count += zero[0]
            tally.samples.append(_describe(spec, t, zero[1]))
    else:
        if core & boundary:
            raise ValueError(f"{config_id}: boundary vertex inside the 2-core")
        if gate.vertex is not None:
            raise ValueError(f"{config_id}: gates are only supported on trees")
        tables = {}
        for v in sorted(core):
            full = (1 << t.num_colors) - 1
            table = {full: (1, {})}
            for w, sign in g.adjacency[v]:
                if w in core:
                    continue
                sub = _branch_tables(g, t, spec, w, v, gate)
                fm: dict[int, tuple[int, dict[int, int]]] = {}
                for mask, (count, rep) in sub.items():
                    f = forbidden_mask(t, sign, mask)
                    if f in fm:
                        fm[f] = (fm[f][0] + count, fm[f][1])
                    else:
                        fm[f] = (count, rep)
                nxt: dict[int, tuple[int, dict[int, int]]] = {}
                for m1, (c1, r1) in table.items():
                    for f, (c2, r2) in fm.items():
                        nm = m1 & ~f
                        if nm in nxt:
                            nxt[nm] = (nxt[nm][0] + c1 * c2, nxt[nm][1])
                        else:
                            nxt[nm] = (c1 * c2, r1 | r2)
                table = nxt
            tables[v] = table
        core_sorted = sorted(core)
        renum = {v: i + 1 for i, v in enumerate(core_sorted)}
        core_graph = SignedGraph(
            len(core_sorted),
            tuple(
                (renum[u], renum[v], s)
                for u, v, s in g.edges
                if u in core and v in core
            ),
        )
        opts = SolveOptions(check_girth=False)
        for combo in itertools.product(*(tables[v].items() for v in core_sorted)):
            lists = {
                renum[v]: t.set_of(mask)
                for v, (mask, _) in zip(core_sorted, combo)
            }
            count = math.prod(c for _, (_, (c, _)) in zip(core_sorted, combo))
            tally.bulk(count)
            result = list_sp_hom(core_graph, t, lists, opts)
            if not result.found:
                rep: dict[int, int] = {}
                for _, (_, (_, r)) in zip(core_sorted, combo):
                    rep |= r
                tally.failure_count += count
                if len(tally.samples) < 5:
                    core_desc = "; ".join(
                        f"L({spec.vertex_names[v - 1]})={t.format_set(t.set_of(mask))}"
                        for v, (mask, _) in zip(core_sorted, combo)
                    )
                    tally.samples.append(_describe(spec, t, rep, core_desc))
    if gate.filtered:
        tally.note = f"gate-filtered precolorings: {gate.filtered}"
    return [tally.report()]


def verify_config_extension(config_id: str, jobs: int = 1) -> LemmaReport:
    """Check that every boundary precoloring of the configuration extends.

    One clause per signature class; instance counts are boundary
    precolorings actually checked (gate-filtered ones are reported in the
    clause note).
    """
    spec = config(config_id)
    classes = spec.graph().m - (spec.n - len(spec.graph().components()))
    units = [
        (_u_config_class, {"config_id": config_id, "index": i})
        for i in range(1 << classes)
    ]
    clauses = _run_units(units, jobs)
    params = (
        ("classes", str(1 << classes)),
        ("boundary", str(len(spec.boundary))),
    )
    return LemmaReport(config_id, tuple(clauses), params)
