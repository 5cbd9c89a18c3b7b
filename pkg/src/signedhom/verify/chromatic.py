"""Exact chromatic-number decisions for small graphs."""

from __future__ import annotations

from ..core import SignedGraph

__all__ = ["chromatic_number_leq"]


def chromatic_number_leq(g: SignedGraph, k: int) -> bool:
    """Decide whether the underlying graph of ``g`` is properly k-colorable.

    Exact backtracking, vertices in descending-degree order.  A fresh color
    is only ever introduced as the single next unused one, which prunes the
    k! relabelings of any partial coloring.  Edge signs are ignored.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k >= g.n:
        return True
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    position = {v: i for i, v in enumerate(order)}
    neighbors = [[position[w] for w, _ in g.adjacency[v]] for v in order]
    colors = [-1] * g.n

    def place(i: int, used: int) -> bool:
        if i == g.n:
            return True
        banned = {colors[j] for j in neighbors[i] if colors[j] >= 0}
        for c in range(min(k, used + 1)):
            if c in banned:
                continue
            colors[i] = c
            if place(i + 1, max(used, c + 1)):
                return True
        colors[i] = -1
        return False

    return place(0, 0)
