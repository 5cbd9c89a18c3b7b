"""Sign-preserving and switching homomorphism search.

A sign-preserving (SP) homomorphism maps adjacent guest vertices to adjacent
target colors so that every edge sign is reproduced exactly.  A switching
homomorphism of (G, sigma) into (H, pi) exists precisely when (G, sigma) has
an SP homomorphism into the doubled target dsg((H, pi)); the solver works on
the doubled graph and projects colors on the negative side back to their
positive twins, collecting those guest vertices into the switch set.

The search is plain backtracking over bitmask domains with arc-consistency
propagation (the forbidden-set operator of the list machinery) after every
assignment.  Variable order is smallest-domain-first with vertex-index ties
unless a canonical (lexicographically least) solution is requested, in which
case the order is static.  Value order is ascending target vertex number;
for doubled targets the positive copies come first, so this is "index, then
side".  On every successful solve the witness is re-checked edge by edge and
the girth-vector dominance necessary condition is asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .core import SignedGraph, girth_vector, switch
from .targets import TargetSpace, dsg_space, k2km_space, kkkm_space


class BudgetExceeded(Exception):
    """Search ran out of its node budget: the answer is indeterminate."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exceeded after {nodes} nodes")
        self.nodes = nodes


@dataclass
class SolveStats:
    nodes: int = 0
    propagations: int = 0
    solutions: int = 0
    girth_checked: bool = False


@dataclass(frozen=True)
class SolveOptions:
    canonical: bool = False
    max_nodes: int = 5_000_000
    symmetry: bool = True
    check_girth: bool = True


@dataclass(frozen=True)
class HomResult:
    status: str  # FOUND | NONE
    mode: str  # SP | SWITCH | LIST
    target: str
    mapping: dict[int, int] | None
    switch_set: frozenset[int] | None
    stats: SolveStats

    @property
    def found(self) -> bool:
        return self.status == "FOUND"


def forbidden_set(
    t: TargetSpace, edge_sign: int, neighbor_list: Iterable[int]
) -> frozenset[int]:
    """Colors at x killed by an edge of the given sign towards list L(y).

    A color survives iff some color of L(y) is adjacent to it with exactly
    the edge's sign; an empty L(y) therefore forbids everything.
    """
    mask = forbidden_mask(t, edge_sign, t.mask_of(neighbor_list))
    return t.set_of(mask)


def forbidden_mask(t: TargetSpace, edge_sign: int, list_mask: int) -> int:
    masks = t.sign_masks[0 if edge_sign > 0 else 1]
    allowed = 0
    m = list_mask
    while m:
        low = m & -m
        allowed |= masks[low.bit_length()]
        m ^= low
    return ((1 << t.num_colors) - 1) & ~allowed


def admissible_sets(
    g: SignedGraph, root: int, lists: Mapping[int, Iterable[int]], t: TargetSpace
) -> dict[int, frozenset[int]]:
    """Bottom-up admissible lists on a tree rooted at root.

    The admissible list of a vertex is its own list minus the forbidden set
    contributed by each child's admissible list.  Exact for trees: a color
    is admissible at the root iff it extends to the whole subtree.  Vertices
    missing from lists are unrestricted, as in list_sp_hom.
    """
    if g.m != g.n - 1 or not g.is_connected():
        raise ValueError("admissible_sets requires a tree")
    full = (1 << t.num_colors) - 1
    masks = {
        v: t.mask_of(lists[v]) if v in lists else full for v in g.vertices()
    }
    order = [root]
    parent = {root: 0}
    for v in order:
        for w, _ in g.adjacency[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    for v in reversed(order):
        if v == root:
            continue
        up_sign = g.sign_of[(v, parent[v])]
        masks[parent[v]] &= ~forbidden_mask(t, up_sign, masks[v])
    return {v: t.set_of(masks[v]) for v in g.vertices()}


# ---------------------------------------------------------------------------
# the solver
# ---------------------------------------------------------------------------


class _Solver:
    def __init__(self, g: SignedGraph, t: TargetSpace, opts: SolveOptions):
        self.g = g
        self.t = t
        self.opts = opts
        self.stats = SolveStats()
        self.pos_masks, self.neg_masks = t.sign_masks
        self.adj = [()] * (g.n + 1)
        for v in g.vertices():
            self.adj[v] = g.adjacency[v]
        self.full = (1 << t.num_colors) - 1

    def _propagate(self, domains: list[int], dirty: list[int]) -> bool:
        pos_masks, neg_masks = self.pos_masks, self.neg_masks
        while dirty:
            y = dirty.pop()
            self.stats.propagations += 1
            dy = domains[y]
            allowed_pos = allowed_neg = 0
            m = dy
            while m:
                low = m & -m
                c = low.bit_length()
                allowed_pos |= pos_masks[c]
                allowed_neg |= neg_masks[c]
                m ^= low
            for x, s in self.adj[y]:
                nd = domains[x] & (allowed_pos if s > 0 else allowed_neg)
                if nd != domains[x]:
                    if nd == 0:
                        return False
                    domains[x] = nd
                    dirty.append(x)
        return True

    def solve(
        self,
        domains: list[int],
        enumerate_all: bool = False,
        cap: int | None = None,
        on_solution: Callable[[dict[int, int]], None] | None = None,
        symmetry_fix: bool = False,
    ) -> dict[int, int] | None | bool:
        """First solution (or None).  In enumerate mode, calls on_solution
        for each solution and returns whether the cap cut the search short.
        Raises BudgetExceeded past opts.max_nodes."""
        n = self.g.n
        if n == 0:
            if on_solution is not None:
                on_solution({})
            self.stats.solutions += 1
            return False if enumerate_all else {}
        work = domains[:]
        for v in self.g.vertices():
            if work[v] == 0:
                return None
        if not self._propagate(work, list(self.g.vertices())):
            return None
        if symmetry_fix and not enumerate_all and not self.opts.canonical:
            # vertex-transitive target, full domain: pinning one image keeps
            # satisfiability and costs a factor |C| of the search
            v0 = min(self.g.vertices(), key=lambda v: (-len(self.adj[v]), v))
            if work[v0] == self.full:
                work[v0] = 1
                if not self._propagate(work, [v0]):
                    return None
        found: list[dict[int, int]] = []
        capped = [False]

        def emit(assignment: list[int]) -> bool:
            self.stats.solutions += 1
            mapping = {v: assignment[v].bit_length() for v in self.g.vertices()}
            if enumerate_all:
                if on_solution is not None:
                    on_solution(mapping)
                if cap is not None and self.stats.solutions >= cap:
                    capped[0] = True
                    return True
                return False
            found.append(mapping)
            return True

        def search(work: list[int]) -> bool:
            self.stats.nodes += 1
            if self.stats.nodes > self.opts.max_nodes:
                raise BudgetExceeded(self.stats.nodes)
            pick = 0
            if self.opts.canonical or enumerate_all:
                for v in range(1, n + 1):
                    if work[v] & (work[v] - 1):
                        pick = v
                        break
                else:
                    # every domain a singleton: propagation already verified
                    # consistency, so this is a solution
                    return emit(work)
            else:
                best = 1 << 30
                for v in range(1, n + 1):
                    size = work[v].bit_count()
                    if 1 < size < best:
                        best, pick = size, v
                if pick == 0:
                    return emit(work)
            m = work[pick]
            while m:
                low = m & -m
                m ^= low
                child = work[:]
                child[pick] = low
                if self._propagate(child, [pick]):
                    if search(child):
                        return True
            return False

        search(work)
        if enumerate_all:
            return capped[0]
        return found[0] if found else None


def _mapping_is_sp(g: SignedGraph, t: TargetSpace, mapping: Mapping[int, int]) -> bool:
    for u, v, s in g.edges:
        a, b = mapping[u], mapping[v]
        if t.graph.sign_of.get((a, b)) != s:
            return False
    return True


@lru_cache(maxsize=256)
def _target_girth(graph: SignedGraph):
    return girth_vector(graph)


def _assert_girth_dominance(g: SignedGraph, t: TargetSpace, stats: SolveStats) -> None:
    tgv = _target_girth(t.graph)
    ggv = girth_vector(g)
    if not ggv.dominates(tgv):
        raise AssertionError(
            f"mapped guest has girth vector {ggv} below target's {tgv}"
        )
    stats.girth_checked = True


def sp_hom(
    g: SignedGraph, t: TargetSpace, opts: SolveOptions = SolveOptions()
) -> HomResult:
    """Decide existence of a sign-preserving homomorphism g -> t."""
    solver = _Solver(g, t, opts)
    full = solver.full
    mapping = solver.solve(
        [full] * (g.n + 1),
        symmetry_fix=opts.symmetry and t.vertex_transitive,
    )
    return _finish(g, t, "SP", mapping, None, solver.stats, opts)


def list_sp_hom(
    g: SignedGraph,
    t: TargetSpace,
    lists: Mapping[int, Iterable[int]],
    opts: SolveOptions = SolveOptions(),
) -> HomResult:
    """SP homomorphism with per-vertex color lists (missing = unrestricted)."""
    fixed = {v: frozenset(colors) for v, colors in lists.items()}
    solver = _Solver(g, t, opts)
    domains = [solver.full] * (g.n + 1)
    for v, colors in fixed.items():
        if not 1 <= v <= g.n:
            raise ValueError(f"list assigned to nonexistent vertex {v}")
        domains[v] = t.mask_of(colors)
    mapping = solver.solve(domains)
    result = _finish(g, t, "LIST", mapping, None, solver.stats, opts)
    if result.found:
        for v, colors in fixed.items():
            assert result.mapping[v] in colors, "solution strayed from its list"
    return result


def _finish(
    g: SignedGraph,
    t: TargetSpace,
    mode: str,
    mapping: dict[int, int] | None,
    switch_set: frozenset[int] | None,
    stats: SolveStats,
    opts: SolveOptions,
) -> HomResult:
    if mapping is None:
        return HomResult("NONE", mode, t.name, None, None, stats)
    if not _mapping_is_sp(g, t, mapping):
        raise AssertionError("solver produced a mapping that fails edge-sign recheck")
    if opts.check_girth:
        _assert_girth_dominance(g, t, stats)
    return HomResult("FOUND", mode, t.name, mapping, switch_set, stats)


def switch_hom(
    g: SignedGraph, t: TargetSpace, opts: SolveOptions = SolveOptions()
) -> HomResult:
    """Decide existence of a switching homomorphism g -> t.

    Solved as an SP homomorphism into the doubled target; colors landing on
    the negative side are projected to their positive twins and the guest
    vertices carrying them form the switch set.  The projected witness is
    re-validated as an SP homomorphism of the switched guest.
    """
    doubled = dsg_space(t)
    inner = sp_hom(g, doubled, opts)
    if not inner.found:
        return HomResult("NONE", "SWITCH", t.name, None, None, inner.stats)
    nbase = t.num_colors
    mapping = {}
    switched = set()
    for v, c in inner.mapping.items():
        if c > nbase:
            mapping[v] = c - nbase
            switched.add(v)
        else:
            mapping[v] = c
    switch_set = frozenset(switched)
    if not _mapping_is_sp(switch(g, switch_set), t, mapping):
        raise AssertionError("switch-homomorphism projection failed re-validation")
    return HomResult("FOUND", "SWITCH", t.name, mapping, switch_set, inner.stats)


@dataclass(frozen=True)
class EnumerationResult:
    results: tuple[HomResult, ...]
    complete: bool


def enumerate_homs(
    g: SignedGraph,
    t: TargetSpace,
    mode: str = "SP",
    cap: int = 100_000,
    opts: SolveOptions = SolveOptions(),
) -> EnumerationResult:
    """All homomorphisms in canonical (lexicographic) order, up to cap.

    SWITCH mode enumerates SP homomorphisms into the doubled target and
    projects each; distinct doubled solutions give distinct (switch set,
    mapping) witnesses, so nothing collapses.
    """
    if mode not in ("SP", "SWITCH"):
        raise ValueError(f"mode must be SP or SWITCH, got {mode!r}")
    space = dsg_space(t) if mode == "SWITCH" else t
    solver = _Solver(g, space, opts)
    collected: list[HomResult] = []

    def keep(mapping: dict[int, int]) -> None:
        if mode == "SWITCH":
            nbase = t.num_colors
            switched = frozenset(v for v, c in mapping.items() if c > nbase)
            projected = {v: c - nbase if c > nbase else c for v, c in mapping.items()}
            if not _mapping_is_sp(switch(g, switched), t, projected):
                raise AssertionError("enumerated witness failed re-validation")
            collected.append(
                HomResult("FOUND", "SWITCH", t.name, projected, switched, solver.stats)
            )
        else:
            if not _mapping_is_sp(g, t, mapping):
                raise AssertionError("enumerated witness failed re-validation")
            collected.append(
                HomResult("FOUND", "SP", t.name, dict(mapping), None, solver.stats)
            )

    capped = solver.solve(
        [solver.full] * (g.n + 1),
        enumerate_all=True,
        cap=cap,
        on_solution=keep,
    )
    complete = capped is not True
    if collected and opts.check_girth:
        _assert_girth_dominance(g, space, solver.stats)
    return EnumerationResult(tuple(collected), complete)


def fold_bipartite(
    g: SignedGraph,
    parts: tuple[Iterable[int], Iterable[int]],
    mapping: Mapping[int, int],
    k: int,
    switch_set: frozenset[int] = frozenset(),
) -> dict[int, int]:
    """Fold a homomorphism into (K_2k, M) down to (K_kk, M) along the parts.

    Viewing (K_kk, M) inside (K_2k, M) with part A the odd vertices and part
    B the even ones: a part-respecting image is kept, anything else is sent
    to its matching partner.  Edge signs survive untouched (cross-layer
    edges are positive whichever representatives are used, and matched-pair
    images flip together), so the folded mapping is valid in the same mode
    as the input.  Returns the mapping in (K_kk, M) vertex numbering
    (a_i = i, b_i = k + i).
    """
    x_part, y_part = frozenset(parts[0]), frozenset(parts[1])
    if x_part | y_part != frozenset(g.vertices()) or x_part & y_part:
        raise ValueError("parts do not bipartition the vertex set")
    for u, v, _ in g.edges:
        if (u in x_part) == (v in x_part):
            raise ValueError(f"edge ({u},{v}) lies inside one part")
    work = switch(g, switch_set) if switch_set else g
    t2k = k2km_space(k)
    if not _mapping_is_sp(work, t2k, mapping):
        raise ValueError("input mapping is not valid into (K_2k, M)")

    def partner(c: int) -> int:
        return c + 1 if c % 2 == 1 else c - 1

    folded: dict[int, int] = {}
    for v in g.vertices():
        c = mapping[v]
        want_odd = v in x_part
        if (c % 2 == 1) != want_odd:
            c = partner(c)
        folded[v] = c
    kkk = kkkm_space(k)
    renumber = {}
    for i in range(1, k + 1):
        renumber[2 * i - 1] = i  # a_i
        renumber[2 * i] = k + i  # b_i
    out = {v: renumber[c] for v, c in folded.items()}
    if not _mapping_is_sp(work, kkk, out):
        raise AssertionError("folded mapping failed re-validation")
    return out
