"""Exhaustive machine checks of the list-coloring toolbox on doubled targets.

Every suite enumerates a finite instance space (precolored edges, paths,
cycles or small trees over the doubled (K_2k, M) color space) and checks the
claimed restriction or colorability statement on each instance, reporting
per-clause instance counts and any counterexamples found.

Two reductions keep the spaces finite and small, both recorded in the
report notes where they apply:

* sign patterns are normalized by switching: resigning a vertex while
  inverting its candidate lists preserves colorability, and every list
  family used here is closed under inversion, so paths are checked with all
  edges positive and cycles with the single residual sign on the closing
  edge;
* hypotheses of the form "the list contains X" or "the list has at least
  j colors" are checked at the minimal families, colorability being
  monotone under list supersets.

Paths and cycles are checked for *every* assignment from the stated
families through a reachable-set dynamic program that deduplicates
equivalent list prefixes, so the astronomic-looking instance counts are
covered exactly, not sampled.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..core import SignedGraph
from ..hom import admissible_sets, forbidden_mask
from ..targets import TargetSpace, classify_set, dsg_space, k2km_space

__all__ = ["SUITE_IDS", "ClauseReport", "LemmaReport", "verify_suite"]

SUITE_IDS = (
    "edge-restriction",
    "tree-lemmas",
    "path-lemmas",
    "cycle-lemmas",
    "k8-lemmas",
)

_MAX_SAMPLES = 5


@dataclass(frozen=True)
class ClauseReport:
    """Outcome of one checked clause: instance count and counterexamples."""

    clause: str
    instances: int
    failure_count: int = 0
    samples: tuple[str, ...] = ()
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.failure_count == 0


@dataclass(frozen=True)
class LemmaReport:
    """Merged outcome of a suite (or of one configuration-extension check)."""

    suite: str
    clauses: tuple[ClauseReport, ...]
    params: tuple[tuple[str, str], ...] = ()

    @property
    def instances(self) -> int:
        return sum(c.instances for c in self.clauses)

    @property
    def failure_count(self) -> int:
        return sum(c.failure_count for c in self.clauses)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def lines(self) -> list[str]:
        out = [f"suite: {self.suite}"]
        for key, value in self.params:
            out.append(f"{key}: {value}")
        out.append(f"instances: {self.instances}")
        out.append(f"failures: {self.failure_count}")
        out.append(f"status: {'ok' if self.ok else 'FAIL'}")
        for c in self.clauses:
            out.append(f"clause.{c.clause}.instances: {c.instances}")
            out.append(f"clause.{c.clause}.failures: {c.failure_count}")
            if c.note:
                out.append(f"clause.{c.clause}.note: {c.note}")
            for j, sample in enumerate(c.samples, 1):
                out.append(f"clause.{c.clause}.failure.{j}: {sample}")
        return out

    def render(self) -> str:
        return "\n".join(self.lines()) + "\n"


class _Tally:
    """Mutable accumulator for one clause."""

    __slots__ = ("clause", "instances", "failure_count", "samples", "note")

    def __init__(self, clause: str, note: str = "") -> None:
        self.clause = clause
        self.instances = 0
        self.failure_count = 0
        self.samples: list[str] = []
        self.note = note

    def add(self, ok: bool, describe) -> None:
        self.instances += 1
        if not ok:
            self.fail(describe)

    def bulk(self, instances: int) -> None:
        self.instances += instances

    def fail(self, describe) -> None:
        self.failure_count += 1
        if len(self.samples) < _MAX_SAMPLES:
            self.samples.append(describe() if callable(describe) else describe)

    def report(self) -> ClauseReport:
        return ClauseReport(
            self.clause,
            self.instances,
            self.failure_count,
            tuple(self.samples),
            self.note,
        )


def _space(k: int) -> TargetSpace:
    return dsg_space(k2km_space(k))


def _sign_name(s: int) -> str:
    return "+" if s > 0 else "-"


def _union_fn(table: tuple[int, ...]):
    """Memoized union of per-color neighbor masks over a color mask."""
    cache: dict[int, int] = {0: 0}

    def union(mask: int) -> int:
        r = cache.get(mask)
        if r is None:
            r = 0
            m = mask
            while m:
                low = m & -m
                r |= table[low.bit_length()]
                m ^= low
            cache[mask] = r
        return r

    return union


def _masks(t: TargetSpace, sets) -> list[int]:
    return sorted(t.mask_of(s) for s in sets)


# ---------------------------------------------------------------------------
# edge-restriction suite: forbidden sets across one signed edge
# ---------------------------------------------------------------------------

_EDGE_CLAUSES = (
    "empty-list",
    "singleton",
    "singleton-complement",
    "paired-2-set",
    "paired-3-set",
    "paired-3-set-sides",
    "paired-4-set",
    "paired-4-set-unlayered",
    "paired-4-set-one-sided",
    "neighbored-5-set",
    "paired-6-set",
    "paired-6-set-degenerate",
    "paired-8-set",
    "neighbored-3-set-complement",
)


def _u_edge_restriction(k: int, sign: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    full = (1 << t.num_colors) - 1
    plus = t.mask_of(alg.side_colors(0))
    minus = t.mask_of(alg.side_colors(1))
    sn = _sign_name(sign)
    tallies = {cid: _Tally(cid) for cid in _EDGE_CLAUSES}

    def fmt(mask: int) -> str:
        return t.format_set(t.set_of(mask))

    for mask in range(1 << t.num_colors):
        fmask = forbidden_mask(t, sign, mask)
        shape = classify_set(alg, t.set_of(mask))
        fshape = classify_set(alg, t.set_of(fmask))

        def bad() -> str:
            return f"sign {sn}: L={fmt(mask)} F={fmt(fmask)} ({fshape.summary()})"

        if shape.size == 0:
            tallies["empty-list"].add(fmask == full, bad)
        if shape.size == 1:
            tallies["singleton"].add(fshape.paired and fshape.size == 7, bad)
            comp = full & ~fmask
            cshape = classify_set(alg, t.set_of(comp))
            tallies["singleton-complement"].add(
                cshape.neighbored == 2,
                lambda: f"sign {sn}: L={fmt(mask)} C\\F={fmt(comp)} ({cshape.summary()})",
            )
        if shape.paired and shape.size == 2:
            tallies["paired-2-set"].add(fshape.paired and fshape.size == 6, bad)
        if shape.paired and shape.size == 3:
            tallies["paired-3-set"].add(fshape.paired and fshape.size <= 4, bad)
            if not shape.one_sided:
                ok = (
                    (plus & ~fmask).bit_count() >= 4
                    and (minus & ~fmask).bit_count() >= 4
                )
                tallies["paired-3-set-sides"].add(ok, bad)
        if shape.paired and shape.size == 4:
            tallies["paired-4-set"].add(fshape.paired and fshape.size <= 4, bad)
            if not shape.layered:
                tallies["paired-4-set-unlayered"].add(fmask == 0, bad)
            if shape.one_sided:
                tallies["paired-4-set-one-sided"].add(
                    fshape.paired and fshape.size == 2, bad
                )
        if shape.neighbored == 2:
            tallies["neighbored-5-set"].add(fshape.paired and fshape.size == 2, bad)
        if shape.paired and shape.size == 6:
            tallies["paired-6-set"].add(fshape.paired and fshape.size <= 2, bad)
            if not shape.layered or shape.one_sided:
                tallies["paired-6-set-degenerate"].add(fmask == 0, bad)
        if shape.paired and shape.size == 8:
            tallies["paired-8-set"].add(fmask == 0, bad)
        if shape.neighbored == 1:
            comp = full & ~fmask
            cshape = classify_set(alg, t.set_of(comp))
            ok = (
                cshape.paired
                and cshape.size == 8
                and (comp & plus) != plus
                and (comp & minus) != minus
            )
            tallies["neighbored-3-set-complement"].add(
                ok,
                lambda: f"sign {sn}: L={fmt(mask)} C\\F={fmt(comp)} ({cshape.summary()})",
            )
    return [tallies[cid].report() for cid in _EDGE_CLAUSES]


# ---------------------------------------------------------------------------
# tree-lemmas suite: admissible lists at the root of small precolored trees
# ---------------------------------------------------------------------------


def _u_tree_two_path(k: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    C = frozenset(range(1, t.num_colors + 1))
    tally = _Tally("two-path")
    for s1, s2 in itertools.product((1, -1), repeat=2):
        g = SignedGraph(3, ((1, 2, s1), (2, 3, s2)))
        for c in sorted(C):
            adm = admissible_sets(g, 1, {1: C, 2: C, 3: (c,)}, t)[1]
            sh = classify_set(alg, adm)
            tally.add(
                sh.paired and sh.size == 10,
                lambda: (
                    f"signs {_sign_name(s1)}{_sign_name(s2)} leaf {t.label(c)}"
                    f" -> {t.format_set(adm)} ({sh.summary()})"
                ),
            )
    return [tally.report()]


def _u_tree_two_branch(k: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    C = frozenset(range(1, t.num_colors + 1))
    tally = _Tally("two-branch")
    for signs in itertools.product((1, -1), repeat=3):
        sa, sb, sc = signs
        g = SignedGraph(4, ((1, 2, sa), (2, 3, sb), (1, 4, sc)))
        for c1 in sorted(C):
            for c3 in sorted(C):
                adm = admissible_sets(g, 1, {1: C, 2: C, 3: (c1,), 4: (c3,)}, t)[1]
                sh = classify_set(alg, adm)
                ok = sh.neighbored in (1, 2) or (
                    sh.paired and sh.size == 4 and sh.one_sided
                )
                tally.add(
                    ok,
                    lambda: (
                        f"signs {''.join(map(_sign_name, signs))}"
                        f" leaves {t.label(c1)},{t.label(c3)}"
                        f" -> {t.format_set(adm)} ({sh.summary()})"
                    ),
                )
    return [tally.report()]


def _u_tree_three_one(k: int) -> list[ClauseReport]:
    t = _space(k)
    C = frozenset(range(1, t.num_colors + 1))
    tally = _Tally("three-one")
    for signs in itertools.product((1, -1), repeat=4):
        s1, s2, s3, s4 = signs
        g = SignedGraph(5, ((1, 2, s1), (2, 3, s2), (2, 4, s3), (3, 5, s4)))
        for c2 in sorted(C):
            for c1p in sorted(C):
                adm = admissible_sets(
                    g, 1, {1: C, 2: C, 3: C, 4: (c2,), 5: (c1p,)}, t
                )[1]
                tally.add(
                    len(adm) >= 8,
                    lambda: (
                        f"signs {''.join(map(_sign_name, signs))}"
                        f" leaves {t.label(c2)},{t.label(c1p)}"
                        f" -> {t.format_set(adm)} (size {len(adm)})"
                    ),
                )
    return [tally.report()]


# ---------------------------------------------------------------------------
# path-lemmas suite
# ---------------------------------------------------------------------------


def _u_different_layers_edge(k: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    shapes = _masks(t, alg.neighbored_sets(5)) + _masks(t, alg.paired_sets(8))
    layer_mask = [
        t.mask_of(c for c in range(1, t.num_colors + 1) if alg.layer(c) == l)
        for l in range(alg.k)
    ]
    tally = _Tally("different-layers-edge")
    for lx, ly, sign in itertools.product(shapes, shapes, (1, -1)):
        table = t.sign_masks[0 if sign > 0 else 1]
        ok = False
        m = lx
        while m:
            low = m & -m
            cx = low.bit_length()
            m ^= low
            if table[cx] & ly & ~layer_mask[alg.layer(cx)]:
                ok = True
                break
        tally.add(
            ok,
            lambda: (
                f"sign {_sign_name(sign)}: "
                f"L(x)={t.format_set(t.set_of(lx))} L(y)={t.format_set(t.set_of(ly))}"
            ),
        )
    return [tally.report()]


def _u_precolored_3path(k: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    nc = t.num_colors
    tally = _Tally(
        "precolored-3-path",
        note="colorable iff not an exceptional pattern, both directions checked",
    )
    for cx, cy, s1, s2 in itertools.product(
        range(1, nc + 1), range(1, nc + 1), (1, -1), (1, -1)
    ):
        middle = t.sign_masks[0 if s1 > 0 else 1][cx] & t.sign_masks[0 if s2 > 0 else 1][cy]
        exceptional = alg.layer(cx) == alg.layer(cy) and (
            (alg.side(cx) != alg.side(cy)) == (s1 * s2 > 0)
        )
        tally.add(
            (middle != 0) == (not exceptional),
            lambda: (
                f"ends {t.label(cx)},{t.label(cy)} signs"
                f" {_sign_name(s1)}{_sign_name(s2)}:"
                f" middle options {t.format_set(t.set_of(middle))}"
                f" exceptional={exceptional}"
            ),
        )
    return [tally.report()]


def _u_middle_full_3path(k: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    nc = t.num_colors
    tally = _Tally("middle-full-3-path")
    for cx in range(1, nc + 1):
        for cz in range(1, nc + 1):
            if alg.layer(cx) == alg.layer(cz):
                continue
            for s1, s2 in itertools.product((1, -1), repeat=2):
                middle = (
                    t.sign_masks[0 if s1 > 0 else 1][cx]
                    & t.sign_masks[0 if s2 > 0 else 1][cz]
                )
                tally.add(
                    middle != 0,
                    lambda: (
                        f"ends {t.label(cx)},{t.label(cz)} signs"
                        f" {_sign_name(s1)}{_sign_name(s2)}: no middle color"
                    ),
                )
    return [tally.report()]


def _u_middle_10set_3path(k: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    ten = _masks(t, alg.paired_sets(10))
    n5 = _masks(t, alg.neighbored_sets(5))
    nc = t.num_colors
    tally = _Tally("middle-10-set-3-path")
    # colors whose s2-neighborhood meets the end list lz
    hits: dict[tuple[int, int], int] = {}
    for s2 in (1, -1):
        table = t.sign_masks[0 if s2 > 0 else 1]
        for lz in n5:
            hits[s2, lz] = t.mask_of(
                c for c in range(1, nc + 1) if table[c] & lz
            )
    for ly, cx, lz, s1, s2 in itertools.product(
        ten, range(1, nc + 1), n5, (1, -1), (1, -1)
    ):
        ok = ly & t.sign_masks[0 if s1 > 0 else 1][cx] & hits[s2, lz] != 0
        tally.add(
            ok,
            lambda: (
                f"L(y)={t.format_set(t.set_of(ly))} x={t.label(cx)}"
                f" L(z)={t.format_set(t.set_of(lz))}"
                f" signs {_sign_name(s1)}{_sign_name(s2)}"
            ),
        )
    return [tally.report()]


def _u_middle_5subsets_3path(k: int, lo: int, hi: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    nc = t.num_colors
    n5 = _masks(t, alg.neighbored_sets(5))
    fives = sorted(
        t.mask_of(combo)
        for combo in itertools.combinations(range(1, nc + 1), 5)
    )[lo:hi]
    hits: dict[tuple[int, int], int] = {}
    for s in (1, -1):
        table = t.sign_masks[0 if s > 0 else 1]
        for l in n5:
            hits[s, l] = t.mask_of(c for c in range(1, nc + 1) if table[c] & l)
    tally = _Tally(
        "middle-5-subsets-3-path",
        note="middle lists at minimal size 5; colorable under any superset",
    )
    for ly in fives:
        for lx, s1 in itertools.product(n5, (1, -1)):
            left = ly & hits[s1, lx]
            for lz, s2 in itertools.product(n5, (1, -1)):
                tally.add(
                    left & hits[s2, lz] != 0,
                    lambda: (
                        f"L(y)={t.format_set(t.set_of(ly))}"
                        f" L(x)={t.format_set(t.set_of(lx))}"
                        f" L(z)={t.format_set(t.set_of(lz))}"
                        f" signs {_sign_name(s1)}{_sign_name(s2)}"
                    ),
                )
    return [tally.report()]


def _u_side_list_edge(k: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    n5 = _masks(t, alg.neighbored_sets(5))
    sides = [t.mask_of(alg.side_colors(0)), t.mask_of(alg.side_colors(1))]
    tally = _Tally("side-list-edge")
    for lu, lv, sign in itertools.product(n5, sides, (1, -1)):
        table = t.sign_masks[0 if sign > 0 else 1]
        best = 0
        m = lu
        while m:
            low = m & -m
            cu = low.bit_length()
            m ^= low
            best = max(best, (table[cu] & lv).bit_count())
        tally.add(
            best >= 4,
            lambda: (
                f"sign {_sign_name(sign)}: L(u)={t.format_set(t.set_of(lu))}"
                f" L(v)={t.format_set(t.set_of(lv))} best {best}"
            ),
        )
    return [tally.report()]


def _u_layered_6_middle(k: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    tally = _Tally("layered-6-set-middle")
    for x in sorted(_masks(t, alg.layered_sets_of_full_pairs(6))):
        xset = t.set_of(x)
        for alpha, beta in itertools.product((1, -1), repeat=2):
            yset = xset if alpha * beta > 0 else alg.inverse_set(xset)
            ta = t.sign_masks[0 if alpha > 0 else 1]
            tb = t.sign_masks[0 if beta > 0 else 1]
            for cx in sorted(xset):
                for cy in sorted(yset):
                    tally.add(
                        ta[cx] & tb[cy] != 0,
                        lambda: (
                            f"X={t.format_set(xset)} signs"
                            f" {_sign_name(alpha)}{_sign_name(beta)}:"
                            f" ends {t.label(cx)},{t.label(cy)} have no middle"
                        ),
                    )
    return [tally.report()]


_NORMALIZED_NOTE = (
    "signs normalized positive by switching; all list families closed under"
    " inversion"
)
_MINIMAL_NOTE = (
    "interior lists at minimal families; colorable under any superset"
)


def _u_even_path(k: int, case: int, kk: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    union = _union_fn(t.sign_masks[0])
    three = _masks(t, alg.paired_sets(3))
    four = _masks(t, alg.one_sided_sets(4))
    n5 = _masks(t, alg.neighbored_sets(5))
    ten = sorted(
        t.mask_of(c) for c in itertools.combinations(range(1, t.num_colors + 1), 10)
    )
    fams = [three if case == 1 else four]
    for i in range(2, 2 * kk):
        fams.append(n5 if i % 2 == 1 else ten)
    fams.append(four if case == 1 else three)
    tally = _Tally(
        f"end-anchored-even-path-case{case}-k{kk}",
        note=f"{_MINIMAL_NOTE}; {_NORMALIZED_NOTE}",
    )
    frontier: dict[int, tuple[int, ...]] = {}
    for m in fams[0]:
        frontier.setdefault(m, (m,))
    for fam in fams[1:]:
        nxt: dict[int, tuple[int, ...]] = {}
        for state, rep in frontier.items():
            reach = union(state)
            for m in fam:
                ns = m & reach
                if ns not in nxt:
                    nxt[ns] = rep + (m,)
        frontier = nxt
    tally.bulk(math.prod(len(f) for f in fams))
    for state, rep in frontier.items():
        if state == 0:
            tally.fail(
                " / ".join(t.format_set(t.set_of(m)) for m in rep) + " -> no coloring"
            )
    return [tally.report()]


# ---------------------------------------------------------------------------
# cycle-lemmas suite
# ---------------------------------------------------------------------------


def _cycle_check(t: TargetSpace, fams: list[list[int]], closing: int, tally: _Tally) -> int:
    """Reachability product over every assignment from fams around a cycle.

    State: per start color of v1, the mask of colors reachable at the
    current vertex; assignments deduplicate on equal states.  Returns the
    peak state count (a capacity diagnostic, not part of the report).
    """
    nc = t.num_colors
    union = _union_fn(t.sign_masks[0])
    close_tbl = t.sign_masks[0 if closing > 0 else 1]
    frontier: dict[tuple[int, ...], tuple[int, ...]] = {}
    for m in fams[0]:
        state = tuple(
            (1 << (a - 1)) if m >> (a - 1) & 1 else 0 for a in range(1, nc + 1)
        )
        frontier.setdefault(state, (m,))
    peak = len(frontier)
    for fam in fams[1:]:
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for state, rep in frontier.items():
            reach = [union(s) for s in state]
            for m in fam:
                ns = tuple(m & r for r in reach)
                if ns not in nxt:
                    nxt[ns] = rep + (m,)
        frontier = nxt
        peak = max(peak, len(frontier))
    tally.bulk(math.prod(len(f) for f in fams))
    for state, rep in frontier.items():
        if not any(state[a - 1] & close_tbl[a] for a in range(1, nc + 1)):
            tally.fail(
                " / ".join(t.format_set(t.set_of(m)) for m in rep)
                + f" closing {_sign_name(closing)} -> no coloring"
            )
    return peak


def _u_four_cycle(k: int, closing: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    pos = t.sign_masks[0]
    close_tbl = t.sign_masks[0 if closing > 0 else 1]
    union = _union_fn(pos)
    n5 = _masks(t, alg.neighbored_sets(5))
    ten = _masks(t, alg.paired_sets(10))
    tally = _Tally("four-cycle", note=_NORMALIZED_NOTE)
    for lx, ly, lz, lt in itertools.product(n5, ten, ten, n5):
        ok = False
        m = lx
        while m:
            low = m & -m
            cx = low.bit_length()
            m ^= low
            sy = ly & pos[cx]
            if not sy:
                continue
            sz = lz & union(sy)
            if not sz:
                continue
            if lt & union(sz) & close_tbl[cx]:
                ok = True
                break
        tally.add(
            ok,
            lambda: (
                f"L={t.format_set(t.set_of(lx))} / {t.format_set(t.set_of(ly))}"
                f" / {t.format_set(t.set_of(lz))} / {t.format_set(t.set_of(lt))}"
                f" closing {_sign_name(closing)}"
            ),
        )
    return [tally.report()]


def _u_long_cycle(
    k: int, parity: str, case: int, kk: int, closing: int
) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    full = [(1 << t.num_colors) - 1]
    n5 = _masks(t, alg.neighbored_sets(5))
    ten = _masks(t, alg.paired_sets(10))
    eight_balanced = sorted(
        t.mask_of(s) for s in alg.paired_sets(8) if len(s & alg.side_colors(0)) == 4
    )
    if parity == "even":
        n = 2 * kk
        if case == 1:
            fams = [ten if i % 2 == 1 else n5 for i in range(1, n + 1)]
        elif case == 2:
            fams = [full, eight_balanced]
            fams += [n5 if i % 2 == 1 else ten for i in range(3, n)]
            fams.append(n5)
        else:
            fams = [full, n5, eight_balanced]
            fams += [n5 if i % 2 == 1 else ten for i in range(4, n)]
            fams.append(n5)
    else:
        n = 2 * kk + 1
        if case == 1:
            fams = [ten if i % 2 == 1 else n5 for i in range(1, n + 1)]
        else:
            fams = [full]
            fams += [ten if i % 2 == 1 else n5 for i in range(2, n)]
            fams.append(n5)
    tally = _Tally(f"{parity}-cycle-case{case}-k{kk}", note=_NORMALIZED_NOTE)
    _cycle_check(t, fams, closing, tally)
    return [tally.report()]


# ---------------------------------------------------------------------------
# k8-lemmas suite: restrictions over the doubled (K_8, M) color space
# ---------------------------------------------------------------------------


def _u_k8_singleton(k: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    tally = _Tally("singleton-restriction")
    for c in range(1, t.num_colors + 1):
        for sign in (1, -1):
            fmask = forbidden_mask(t, sign, 1 << (c - 1))
            fshape = classify_set(alg, t.set_of(fmask))
            tally.add(
                fshape.paired and fshape.size == 9,
                lambda: (
                    f"sign {_sign_name(sign)}: L={{{t.label(c)}}}"
                    f" F={t.format_set(t.set_of(fmask))} ({fshape.summary()})"
                ),
            )
    return [tally.report()]


def _u_k8_large_lists(k: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    lists = _masks(t, alg.neighbored_sets(5)) + _masks(t, alg.one_sided_sets(6))
    tally = _Tally(
        "large-list-restriction",
        note="lists at minimal families; forbidden sets shrink under supersets",
    )
    for mask in lists:
        for sign in (1, -1):
            fmask = forbidden_mask(t, sign, mask)
            fshape = classify_set(alg, t.set_of(fmask))
            tally.add(
                fshape.paired and fshape.size <= 2,
                lambda: (
                    f"sign {_sign_name(sign)}: L={t.format_set(t.set_of(mask))}"
                    f" F={t.format_set(t.set_of(fmask))} ({fshape.summary()})"
                ),
            )
    return [tally.report()]


def _u_k8_precolored_3path(k: int) -> list[ClauseReport]:
    t = _space(k)
    alg = t.algebra
    nc = t.num_colors
    full = (1 << nc) - 1
    tally = _Tally(
        "precolored-3-path",
        note="two remaining colors in different layers iff not exceptional",
    )
    for cx, cy, s1, s2 in itertools.product(
        range(1, nc + 1), range(1, nc + 1), (1, -1), (1, -1)
    ):
        f1 = forbidden_mask(t, s1, 1 << (cx - 1))
        f2 = forbidden_mask(t, s2, 1 << (cy - 1))
        remaining = full & ~(f1 | f2)
        layers = {alg.layer(c) for c in t.set_of(remaining)}
        exceptional = alg.layer(cx) == alg.layer(cy) and (
            (alg.side(cx) != alg.side(cy)) == (s1 * s2 > 0)
        )
        ok = (remaining == 0) if exceptional else (len(layers) >= 2)
        tally.add(
            ok,
            lambda: (
                f"ends {t.label(cx)},{t.label(cy)} signs"
                f" {_sign_name(s1)}{_sign_name(s2)}:"
                f" remaining {t.format_set(t.set_of(remaining))}"
                f" exceptional={exceptional}"
            ),
        )
    return [tally.report()]


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------


def _call_unit(unit) -> list[ClauseReport]:
    fn, kwargs = unit
    return fn(**kwargs)


def _run_units(units, jobs: int) -> list[ClauseReport]:
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(units))) as ex:
            pieces = list(ex.map(_call_unit, units))
    else:
        pieces = [fn(**kwargs) for fn, kwargs in units]
    merged: dict[str, list[ClauseReport]] = {}
    order: list[str] = []
    for piece in pieces:
        for c in piece:
            if c.clause not in merged:
                merged[c.clause] = []
                order.append(c.clause)
            merged[c.clause].append(c)
    out = []
    for cid in order:
        parts = merged[cid]
        samples: list[str] = []
        notes: list[str] = []
        for p in parts:
            samples.extend(p.samples)
            if p.note and p.note not in notes:
                notes.append(p.note)
        out.append(
            ClauseReport(
                cid,
                sum(p.instances for p in parts),
                sum(p.failure_count for p in parts),
                tuple(samples[:_MAX_SAMPLES]),
                "; ".join(notes),
            )
        )
    return out


def _suite_units(suite: str, kmax: int) -> list:
    if suite == "edge-restriction":
        return [(_u_edge_restriction, {"k": 3, "sign": s}) for s in (1, -1)]
    if suite == "tree-lemmas":
        return [
            (_u_tree_two_path, {"k": 3}),
            (_u_tree_two_branch, {"k": 3}),
            (_u_tree_three_one, {"k": 3}),
        ]
    if suite == "path-lemmas":
        units = [
            (_u_different_layers_edge, {"k": 3}),
            (_u_precolored_3path, {"k": 3}),
            (_u_middle_full_3path, {"k": 3}),
            (_u_middle_10set_3path, {"k": 3}),
            (_u_middle_5subsets_3path, {"k": 3, "lo": 0, "hi": 396}),
            (_u_middle_5subsets_3path, {"k": 3, "lo": 396, "hi": 792}),
            (_u_side_list_edge, {"k": 3}),
            (_u_layered_6_middle, {"k": 3}),
        ]
        for case in (1, 2):
            for kk in range(1, kmax + 1):
                units.append((_u_even_path, {"k": 3, "case": case, "kk": kk}))
        return units
    if suite == "cycle-lemmas":
        units = [(_u_four_cycle, {"k": 3, "closing": s}) for s in (1, -1)]
        for case in (1, 2, 3):
            for kk in range(2, kmax + 1):
                for s in (1, -1):
                    units.append(
                        (
                            _u_long_cycle,
                            {
                                "k": 3,
                                "parity": "even",
                                "case": case,
                                "kk": kk,
                                "closing": s,
                            },
                        )
                    )
        for case in (1, 2):
            for kk in range(1, kmax + 1):
                for s in (1, -1):
                    units.append(
                        (
                            _u_long_cycle,
                            {
                                "k": 3,
                                "parity": "odd",
                                "case": case,
                                "kk": kk,
                                "closing": s,
                            },
                        )
                    )
        return units
    if suite == "k8-lemmas":
        return [
            (_u_k8_singleton, {"k": 4}),
            (_u_k8_large_lists, {"k": 4}),
            (_u_k8_precolored_3path, {"k": 4}),
        ]
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_IDS)}")


def verify_suite(suite: str, kmax: int = 4, jobs: int = 1) -> LemmaReport:
    """Run one verification suite and return its merged report.

    kmax bounds the path/cycle lengths checked (cycles up to 2*kmax+1
    vertices); jobs > 1 distributes independent chunks over processes, with
    a merge that does not depend on scheduling.
    """
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    units = _suite_units(suite, kmax)
    clauses = _run_units(units, jobs)
    params = (
        (("kmax", str(kmax)),) if suite in ("path-lemmas", "cycle-lemmas") else ()
    )
    return LemmaReport(suite, tuple(clauses), params)
