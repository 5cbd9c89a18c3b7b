"""Desk-scale sweeps: exhaustive and randomized checks of the main claims.

The density theorems are universal statements; here they are replayed on
every connected graph up to a fixed order (all signature classes up to
switching), which is the strongest finite slice a desk machine can do
exhaustively.  The remaining sweeps cross-check the chromatic-number
correspondence, the positive-cycle-set characterization of switching
equivalence, and the cited sparse-girth bound on generated instances.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from ..core import SignedGraph, spanning_tree_classes, switch, switching_equivalent
from ..density import mad
from ..gadgets import coloring_gadget
from ..hom import fold_bipartite, switch_hom
from ..targets import k2km_space, kkkm_space
from .chromatic import chromatic_number_leq
from .scan import scan_structures
from .smallgraphs import connected_graph_classes, graph_classes, plain_graph
from .suites import ClauseReport, LemmaReport, _Tally, _run_units

__all__ = [
    "SWEEP_IDS",
    "positive_cycle_set",
    "sparse_high_girth_graph",
    "verify_sweep",
]

SWEEP_IDS = ("density-k6", "density-k8", "chromatic", "switch-classes", "sparse-girth")


# ---------------------------------------------------------------------------
# density sweeps
# ---------------------------------------------------------------------------


def _u_density(n: int, k: int, num: int, den: int) -> list[ClauseReport]:
    t = k2km_space(k)
    bound = Fraction(num, den)
    tally = _Tally(f"n{n}")
    graphs = 0
    patterned = 0
    for g in connected_graph_classes(n):
        if g.m and mad(g).value >= bound:
            continue
        graphs += 1
        report = scan_structures(g)
        has_pattern = bool(
            report.k6_patterns if k == 3 else report.k8_patterns
        )
        patterned += has_pattern
        for sg in spanning_tree_classes(g):
            result = switch_hom(sg, t)
            tally.add(
                result.found,
                lambda sg=sg: f"no mapping for n={sg.n} edges={sg.edges}",
            )
    tally.note = (
        f"graphs below bound: {graphs}, of them carrying a reducible"
        f" pattern: {patterned}"
    )
    return [tally.report()]


def _density_units(k: int, num: int, den: int, max_n: int):
    return [
        (_u_density, {"n": n, "k": k, "num": num, "den": den})
        for n in range(1, max_n + 1)
    ]


# ---------------------------------------------------------------------------
# chromatic-number correspondence
# ---------------------------------------------------------------------------


def _u_chromatic(n: int, k: int) -> list[ClauseReport]:
    """chi(G) <= k  <=>  S(G) switch-maps to (K_2k, M)  <=>  to (K_kk, M)."""
    t2k = k2km_space(k)
    tkk = kkkm_space(k)
    tally = _Tally(f"n{n}-k{k}")
    for mask in graph_classes(n):
        g = plain_graph(n, mask)
        s = coloring_gadget(g)
        colorable = chromatic_number_leq(g, k)
        via_2k = switch_hom(s, t2k)
        via_kk = switch_hom(s, tkk)
        ok = colorable == via_2k.found == via_kk.found
        if ok and via_2k.found:
            parts = (range(1, g.n + 1), range(g.n + 1, s.n + 1))
            folded = fold_bipartite(
                s, parts, via_2k.mapping, k, via_2k.switch_set
            )
            ok = all(c in range(1, 2 * k + 1) for c in folded.values())
        tally.add(
            ok,
            lambda g=g, a=colorable, b=via_2k.found, c=via_kk.found: (
                f"edges={g.edges}: chromatic<= {a},"
                f" doubled-complete {b}, bipartite {c}"
            ),
        )
    return [tally.report()]


# ---------------------------------------------------------------------------
# switching equivalence vs positive cycle sets
# ---------------------------------------------------------------------------


def positive_cycle_set(g: SignedGraph) -> frozenset[frozenset[tuple[int, int]]]:
    """All positive cycles of g, each as its frozenset of edges.

    Brute force by DFS anchored at each cycle's minimum vertex; intended as
    an independent oracle for switching equivalence, not for large graphs.
    """
    adj = {v: sorted(w for w, _ in g.adjacency[v]) for v in g.vertices()}
    positive: set[frozenset[tuple[int, int]]] = set()

    def record(path: list[int]) -> None:
        if path[1] > path[-1]:
            return  # each cycle reported in one direction only
        sign = 1
        edges = []
        for u, v in itertools.pairwise(path + [path[0]]):
            sign *= g.sign_of[(u, v)]
            edges.append((min(u, v), max(u, v)))
        if sign > 0:
            positive.add(frozenset(edges))

    def extend(start: int, path: list[int], seen: set[int]) -> None:
        for w in adj[path[-1]]:
            if w == start and len(path) >= 3:
                record(path)
            elif w > start and w not in seen:
                path.append(w)
                seen.add(w)
                extend(start, path, seen)
                path.pop()
                seen.discard(w)

    for s in g.vertices():
        extend(s, [s], {s})
    return frozenset(positive)


def _u_switch_classes(pairs: int, seed: int, max_n: int) -> list[ClauseReport]:
    rng = random.Random(seed)
    tally = _Tally("agrees-with-cycle-oracle")
    for i in range(pairs):
        n = rng.randint(1, max_n)
        edges = []
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                if rng.random() < 0.45:
                    edges.append((u, v, rng.choice((1, -1))))
        g1 = SignedGraph(n, tuple(edges))
        if i % 2 == 0:
            x = frozenset(v for v in g1.vertices() if rng.random() < 0.5)
            g2 = switch(g1, x)
        else:
            g2 = SignedGraph(
                n, tuple((u, v, rng.choice((1, -1))) for u, v, _ in edges)
            )
        witness = switching_equivalent(g1, g2)
        same_cycles = positive_cycle_set(g1) == positive_cycle_set(g2)
        ok = (witness is not None) == same_cycles
        if ok and witness is not None:
            ok = switch(g1, witness).edges == g2.edges
        tally.add(
            ok,
            lambda g1=g1, g2=g2, w=witness, s=same_cycles: (
                f"n={g1.n} signs1={[e[2] for e in g1.edges]}"
                f" signs2={[e[2] for e in g2.edges]} witness={w} oracle={s}"
            ),
        )
    return [tally.report()]


# ---------------------------------------------------------------------------
# sparse high-girth spot check
# ---------------------------------------------------------------------------


def _plain_girth(g: SignedGraph) -> float:
    """Length of a shortest cycle (inf when acyclic), ignoring signs."""
    best = float("inf")
    for u, v, _ in g.edges:
        rest = SignedGraph(
            g.n, tuple(e for e in g.edges if (e[0], e[1]) != (u, v))
        )
        dist = {u: 0}
        frontier = [u]
        while frontier and v not in dist:
            nxt = []
            for a in frontier:
                for b, _ in rest.adjacency[a]:
                    if b not in dist:
                        dist[b] = dist[a] + 1
                        nxt.append(b)
            frontier = nxt
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def sparse_high_girth_graph(rng: random.Random) -> SignedGraph:
    """Random graph of girth >= 7 and mad <= 28/11: tree plus careful chords."""
    n = rng.randint(12, 22)
    edges = [(rng.randint(1, v - 1), v, 1) for v in range(2, n + 1)]
    bound = Fraction(28, 11)
    chords = 0
    for _ in range(60):
        if chords == 2:
            break
        u, v = rng.sample(range(1, n + 1), 2)
        u, v = min(u, v), max(u, v)
        if any((a, b) == (u, v) for a, b, _ in edges):
            continue
        trial = SignedGraph(n, tuple(edges) + ((u, v, 1),))
        if _plain_girth(trial) >= 7 and mad(trial).value <= bound:
            edges.append((u, v, 1))
            chords += 1
    return SignedGraph(n, tuple(edges))


def _u_sparse_girth(count: int, seed: int) -> list[ClauseReport]:
    t = k2km_space(3)
    tally = _Tally("maps-to-k6m")
    rng = random.Random(seed)
    bound = Fraction(28, 11)
    for _ in range(count):
        g = sparse_high_girth_graph(rng)
        if not (_plain_girth(g) >= 7 and mad(g).value <= bound):
            tally.add(False, f"generator violated its own bounds: {g.edges}")
            continue
        for sg in spanning_tree_classes(g):
            result = switch_hom(sg, t)
            tally.add(
                result.found,
                lambda sg=sg: f"no mapping: n={sg.n} edges={sg.edges}",
            )
    return [tally.report()]


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------


def verify_sweep(
    sweep: str,
    jobs: int = 1,
    max_n: int | None = None,
    count: int | None = None,
    seed: int = 2026,
) -> LemmaReport:
    """Run one named sweep and merge its per-chunk reports.

    max_n bounds the graph order for the exhaustive sweeps (defaults: 7 for
    the density sweeps, 6 for the chromatic sweep, 8 for switch-classes);
    count sets the number of randomized instances (default 500 pairs for
    switch-classes, 50 graphs for sparse-girth).
    """
    if sweep == "density-k6":
        units = _density_units(3, 14, 5, max_n or 7)
        params = (("bound", "14/5"), ("target", "k6m"))
    elif sweep == "density-k8":
        units = _density_units(4, 3, 1, max_n or 7)
        params = (("bound", "3"), ("target", "k8m"))
    elif sweep == "chromatic":
        units = [
            (_u_chromatic, {"n": n, "k": k})
            for n in range(1, (max_n or 6) + 1)
            for k in (3, 4)
        ]
        params = (("ks", "3 4"),)
    elif sweep == "switch-classes":
        units = [
            (
                _u_switch_classes,
                {"pairs": count or 500, "seed": seed, "max_n": max_n or 8},
            )
        ]
        params = (("pairs", str(count or 500)), ("seed", str(seed)))
    elif sweep == "sparse-girth":
        units = [(_u_sparse_girth, {"count": count or 50, "seed": seed})]
        params = (
            ("count", str(count or 50)),
            ("seed", str(seed)),
            ("girth", ">=7"),
            ("bound", "28/11"),
        )
    else:
        raise ValueError(f"unknown sweep {sweep!r}; choose from {SWEEP_IDS}")
    clauses = _run_units(units, jobs)
    return LemmaReport(sweep, tuple(clauses), params)
