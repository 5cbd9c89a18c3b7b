"""Target graphs and the color algebra of doubled targets.

The targets of interest are (K_2k, M) — the complete graph on 2k vertices
whose negative edges form the perfect matching {2i-1, 2i} — and (K_kk, M),
the complete bipartite graph with parts {a_i}, {b_i} whose negative edges
are exactly {a_i b_i}.  Every signed graph h also has a *doubled* version
dsg(h) on two copies of V(h): within a side edges keep their sign, across
sides (distinct vertices) the sign flips, and the two copies of one vertex
are never adjacent.  A switching homomorphism into h is the same thing as a
sign-preserving homomorphism into dsg(h).

For dsg((K_2k, M)) the colors carry extra structure used all over the list
machinery: each color x has a unique *pair* (its negative neighbour on the
same side), a unique *inverse* (its non-neighbour, the twin on the other
side), and lives in a *layer* of four colors {x, pair, and their inverses}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .core import SignedGraph


def make_k2k_m(k: int) -> SignedGraph:
    """(K_2k, M): complete on 2k vertices, negative matching {2i-1, 2i}."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = 2 * k
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            negative = v == u + 1 and u % 2 == 1
            edges.append((u, v, -1 if negative else 1))
    return SignedGraph(n, edges)


def make_kkk_m(k: int) -> SignedGraph:
    """(K_kk, M): parts {1..k}, {k+1..2k}, negative edges {i, k+i}."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    edges = []
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            edges.append((a, k + b, -1 if a == b else 1))
    return SignedGraph(2 * k, edges)


def dsg(h: SignedGraph) -> SignedGraph:
    """Doubled signed graph: positive copies 1..n, negative copies n+1..2n.

    Same-side edges copy the base sign; cross-side edges between distinct
    base vertices flip it; the two copies of one vertex are non-adjacent.
    """
    n = h.n
    edges: list[tuple[int, int, int]] = []
    for u, v, s in h.edges:
        edges.append((u, v, s))
        edges.append((n + u, n + v, s))
        edges.append((u, n + v, -s))
        edges.append((v, n + u, -s))
    return SignedGraph(2 * n, edges)


@dataclass(frozen=True)
class ColorAlgebra:
    """pair / inverse / layer structure on the colors of dsg((K_2k, M)).

    Colors are the 4k vertices of the doubled graph.  side 0 holds the
    positive copies 1..2k, side 1 the negative copies 2k+1..4k.
    """

    k: int

    @property
    def num_colors(self) -> int:
        return 4 * self.k

    def side(self, c: int) -> int:
        return 0 if c <= 2 * self.k else 1

    def base_index(self, c: int) -> int:
        """Underlying (K_2k, M) vertex, 1..2k."""
        return c if c <= 2 * self.k else c - 2 * self.k

    def pair(self, c: int) -> int:
        i = self.base_index(c)
        partner = i + 1 if i % 2 == 1 else i - 1
        return partner if self.side(c) == 0 else partner + 2 * self.k

    def inverse(self, c: int) -> int:
        return c + 2 * self.k if self.side(c) == 0 else c - 2 * self.k

    def layer(self, c: int) -> int:
        """Layer number 0..k-1; a layer is {x, pair(x), inverse(x), pair(inverse(x))}."""
        return (self.base_index(c) - 1) // 2

    def side_colors(self, side: int) -> frozenset[int]:
        lo = 1 if side == 0 else 2 * self.k + 1
        return frozenset(range(lo, lo + 2 * self.k))

    def inverse_set(self, colors: Iterable[int]) -> frozenset[int]:
        return frozenset(self.inverse(c) for c in colors)

    # shape-family enumerators -------------------------------------------

    def pairs(self) -> list[frozenset[int]]:
        """All 2k negative same-side pairs, k per side."""
        out = []
        for side in (0, 1):
            off = 0 if side == 0 else 2 * self.k
            for i in range(1, 2 * self.k, 2):
                out.append(frozenset({off + i, off + i + 1}))
        return out

    def paired_sets(self, size: int) -> Iterator[frozenset[int]]:
        """All paired sets of the given size (at most one unpaired element)."""
        all_pairs = self.pairs()
        if size % 2 == 0:
            for combo in itertools.combinations(all_pairs, size // 2):
                yield frozenset().union(*combo)
        else:
            for combo in itertools.combinations(all_pairs, size // 2):
                used = frozenset().union(*combo) if combo else frozenset()
                for single in range(1, self.num_colors + 1):
                    if single not in used and self.pair(single) not in used:
                        yield used | {single}

    def neighbored_sets(self, size: int) -> Iterator[frozenset[int]]:
        """Layered (2j+1)-sets made of j pairs on one side plus one single
        on the other side; for size 2j+1 with j in {0, 1, 2}."""
        if size % 2 == 0 or size > 5:
            raise ValueError(f"neighbored sets have size 1, 3 or 5, got {size}")
        j = size // 2
        for side in (0, 1):
            off = 0 if side == 0 else 2 * self.k
            side_pairs = [frozenset({off + i, off + i + 1}) for i in range(1, 2 * self.k, 2)]
            for combo in itertools.combinations(side_pairs, j):
                used_layers = {self.layer(next(iter(p))) for p in combo}
                base = frozenset().union(*combo) if combo else frozenset()
                for single in self.side_colors(1 - side):
                    if self.layer(single) not in used_layers:
                        yield base | {single}

    def one_sided_sets(self, size: int) -> Iterator[frozenset[int]]:
        """Layered paired sets of even size lying on a single side."""
        if size % 2 != 0:
            raise ValueError("one-sided layered sets as used here have even size")
        for side in (0, 1):
            off = 0 if side == 0 else 2 * self.k
            side_pairs = [frozenset({off + i, off + i + 1}) for i in range(1, 2 * self.k, 2)]
            for combo in itertools.combinations(side_pairs, size // 2):
                yield frozenset().union(*combo)

    def layered_sets_of_full_pairs(self, size: int) -> Iterator[frozenset[int]]:
        """Layered sets made of size/2 full pairs (sides per pair arbitrary)."""
        if size % 2 != 0:
            raise ValueError("full-pair layered sets have even size")
        per_layer = [
            [frozenset({i, i + 1}), frozenset({2 * self.k + i, 2 * self.k + i + 1})]
            for i in range(1, 2 * self.k, 2)
        ]
        for layers in itertools.combinations(range(self.k), size // 2):
            for choice in itertools.product(*(per_layer[l] for l in layers)):
                yield frozenset().union(*choice)


@dataclass(frozen=True)
class ShapeDescriptor:
    """Classification of a color set in the doubled-target algebra."""

    size: int
    on_plus: int
    on_minus: int
    paired: bool
    layered: bool
    one_sided: bool
    neighbored: int | None  # j when the set is a neighbored (2j+1)-set

    def summary(self) -> str:
        tags = []
        if self.neighbored is not None:
            tags.append(f"neighbored {2 * self.neighbored + 1}-set")
        if self.one_sided:
            tags.append("one-sided")
        if self.layered:
            tags.append("layered")
        if self.paired:
            tags.append(f"paired {self.size}-set")
        if not tags:
            tags.append(f"unstructured {self.size}-set")
        return ", ".join(tags) + f" (+{self.on_plus}/-{self.on_minus})"


def classify_set(algebra: ColorAlgebra, colors: Iterable[int]) -> ShapeDescriptor:
    s = frozenset(colors)
    for c in s:
        if not 1 <= c <= algebra.num_colors:
            raise ValueError(f"color {c} outside 1..{algebra.num_colors}")
    unpaired = sum(1 for c in s if algebra.pair(c) not in s)
    paired = unpaired <= 1
    per_layer = [0] * algebra.k
    for c in s:
        per_layer[algebra.layer(c)] += 1
    layered = paired and max(per_layer, default=0) <= 2
    on_plus = sum(1 for c in s if algebra.side(c) == 0)
    on_minus = len(s) - on_plus
    one_sided = layered and (on_plus == 0 or on_minus == 0)
    neighbored = None
    if layered and len(s) % 2 == 1 and len(s) <= 5:
        j = len(s) // 2
        # j full pairs on one side, one single on the other
        if {on_plus, on_minus} == {2 * j, 1} and unpaired == 1:
            neighbored = j
    return ShapeDescriptor(len(s), on_plus, on_minus, paired, layered, one_sided, neighbored)


@dataclass(frozen=True)
class TargetSpace:
    """A signed target graph with color names and solver-facing caches.

    kind is one of "k2km", "kkkm", "dsg" or "custom"; doubled spaces carry
    the side/index naming (labels like "3+" / "3-") and, when the base is a
    (K_2k, M), the full ColorAlgebra.
    """

    graph: SignedGraph
    name: str
    kind: str
    labels: tuple[str, ...]
    algebra: ColorAlgebra | None = None
    vertex_transitive: bool = False
    base: "TargetSpace | None" = None

    @property
    def num_colors(self) -> int:
        return self.graph.n

    def label(self, c: int) -> str:
        return self.labels[c - 1]

    def color_named(self, label: str) -> int:
        try:
            return self.labels.index(label) + 1
        except ValueError:
            raise KeyError(f"no color named {label!r} in target {self.name}") from None

    @cached_property
    def sign_masks(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(positive, negative) neighbour bitmasks per color, bit c-1 for color c."""
        pos = [0] * (self.num_colors + 1)
        neg = [0] * (self.num_colors + 1)
        for u, v, s in self.graph.edges:
            table = pos if s > 0 else neg
            table[u] |= 1 << (v - 1)
            table[v] |= 1 << (u - 1)
        return tuple(pos), tuple(neg)

    def mask_of(self, colors: Iterable[int]) -> int:
        mask = 0
        for c in colors:
            mask |= 1 << (c - 1)
        return mask

    def set_of(self, mask: int) -> frozenset[int]:
        return frozenset(
            c for c in range(1, self.num_colors + 1) if mask >> (c - 1) & 1
        )

    def format_set(self, colors: Iterable[int]) -> str:
        return "{" + ", ".join(self.label(c) for c in sorted(colors)) + "}"


def _doubled_labels(base_labels: Sequence[str]) -> tuple[str, ...]:
    return tuple(f"{l}+" for l in base_labels) + tuple(f"{l}-" for l in base_labels)


@lru_cache(maxsize=None)
def k2km_space(k: int) -> TargetSpace:
    g = make_k2k_m(k)
    return TargetSpace(
        graph=g,
        name=f"k{2 * k}m" if 2 * k in (6, 8, 10) else f"k2km:{k}",
        kind="k2km",
        labels=tuple(str(v) for v in g.vertices()),
        vertex_transitive=True,
    )


@lru_cache(maxsize=None)
def kkkm_space(k: int) -> TargetSpace:
    g = make_kkk_m(k)
    labels = tuple(str(v) for v in g.vertices())
    return TargetSpace(
        graph=g,
        name=f"k{k}{k}m" if k <= 9 else f"kkkm:{k}",
        kind="kkkm",
        labels=labels,
        vertex_transitive=True,
    )


@lru_cache(maxsize=256)
def dsg_space(base: TargetSpace) -> TargetSpace:
    algebra = None
    if base.kind == "k2km":
        algebra = ColorAlgebra(base.num_colors // 2)
    return TargetSpace(
        graph=dsg(base.graph),
        name=f"dsg:{base.name}",
        kind="dsg",
        labels=_doubled_labels(base.labels),
        algebra=algebra,
        vertex_transitive=base.vertex_transitive,
        base=base,
    )


def custom_space(g: SignedGraph, name: str) -> TargetSpace:
    return TargetSpace(
        graph=g,
        name=name,
        kind="custom",
        labels=tuple(str(v) for v in g.vertices()),
    )


def builtin_target(name: str) -> TargetSpace | None:
    """Resolve a built-in target name; None when the name is not built in.

    Names: k6m, k8m, k10m, k2km:<k>, k33m, k44m, kkkm:<k>, dsg:<name>.
    """
    if name.startswith("dsg:"):
        inner = builtin_target(name[4:])
        return dsg_space(inner) if inner is not None else None
    fixed = {"k6m": 3, "k8m": 4, "k10m": 5}
    if name in fixed:
        return k2km_space(fixed[name])
    if name in ("k33m", "k44m"):
        return kkkm_space(int(name[1]))
    if name.startswith("k2km:"):
        return k2km_space(int(name.split(":", 1)[1]))
    if name.startswith("kkkm:"):
        return kkkm_space(int(name.split(":", 1)[1]))
    return None
