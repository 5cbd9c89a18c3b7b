"""Small constructed signed graphs: sharpness examples and the coloring gadget.

Three families recur in the tests and experiments:

* ``subdivided_k4`` — the 5-vertex graph at the sparsity threshold 14/5 that
  admits no switching homomorphism to (K_6, M);
* ``signed_cube`` — a signature on the cube separating (K_{3,3}, M) from
  (K_{4,4}, M);
* ``apex_cycle(l)`` — a family of maximum average degree exactly 3 admitting
  no switching homomorphism to any (K_2k, M);
* ``coloring_gadget`` — the edge-to-negative-quadrilateral expansion that
  turns proper k-colorability into a switching homomorphism question.
"""

from __future__ import annotations

from .core import SignedGraph


def subdivided_k4() -> SignedGraph:
    """K4 with one edge subdivided; the new path gets one negative edge.

    Vertices: 1, 2 the branch vertices of the intact triangle pair, 3, 4 the
    endpoints of the subdivided edge, 5 the subdivision vertex.  All edges
    positive except (4, 5).  Degrees (3, 3, 3, 3, 2); 7 edges; the whole
    graph is its own densest subgraph at average degree 14/5.
    """
    return SignedGraph(
        5,
        [
            (1, 2, 1),
            (1, 3, 1),
            (1, 4, 1),
            (2, 3, 1),
            (2, 4, 1),
            (3, 5, 1),
            (4, 5, -1),
        ],
    )


def signed_cube() -> SignedGraph:
    """The cube with negative edges: one outer, one inner, one spoke.

    Outer 4-cycle 1-2-3-4, inner 4-cycle 5-6-7-8, spokes i ~ i+4.  Negative
    edges: (1,4) on the outer cycle, (7,8) on the inner cycle, and the spoke
    (2,6).  Bipartite with parts {1,3,6,8} / {2,4,5,7}.  Every two vertices
    of a common part lie on a common negative 4-cycle, which blocks
    (K_{3,3}, M) while (K_{4,4}, M) still works.
    """
    return SignedGraph(
        8,
        [
            (1, 2, 1),
            (2, 3, 1),
            (3, 4, 1),
            (1, 4, -1),
            (5, 6, 1),
            (6, 7, 1),
            (7, 8, -1),
            (5, 8, 1),
            (1, 5, 1),
            (2, 6, -1),
            (3, 7, 1),
            (4, 8, 1),
        ],
    )


def apex_cycle(l: int) -> SignedGraph:
    """Negative l-cycle with a positive triangle raised over every edge.

    Cycle vertices 1..l (edge (1, l) negative, the rest positive); apex
    vertex l+i sits over the cycle edge from i to i+1 (wrapping), and the
    apex over the negative edge has its edge to vertex l negative so that
    every triangle is positive while the base cycle stays negative.
    2l vertices, 3l edges, maximum average degree exactly 3.
    """
    if l < 3:
        raise ValueError(f"cycle length must be >= 3, got {l}")
    edges: list[tuple[int, int, int]] = []
    for i in range(1, l):
        edges.append((i, i + 1, 1))
    edges.append((1, l, -1))
    for i in range(1, l):
        edges.append((i, l + i, 1))
        edges.append((i + 1, l + i, 1))
    edges.append((l, 2 * l, -1))
    edges.append((1, 2 * l, 1))
    return SignedGraph(2 * l, edges)


def coloring_gadget(g: SignedGraph) -> SignedGraph:
    """Replace every edge by a negative quadrilateral through two new vertices.

    For the j-th edge uv (u < v, edges in sorted order) the original edge is
    dropped and fresh vertices x = n + 2j - 1 and y = n + 2j are joined to
    both ends; the single negative edge of the quadrilateral u-x-v-y is ux.
    Input signs are ignored — only the underlying graph matters.  The result
    is bipartite (originals against added vertices) with n + 2m vertices and
    4m edges, and it admits a switching homomorphism to (K_2k, M) exactly
    when the input is properly k-colorable.
    """
    n = g.n
    edges: list[tuple[int, int, int]] = []
    for j, (u, v, _) in enumerate(g.edges, start=1):
        x = n + 2 * j - 1
        y = n + 2 * j
        edges.extend([(u, x, -1), (v, x, 1), (u, y, 1), (v, y, 1)])
    return SignedGraph(n + 2 * g.m, edges)


def builtin_gadget(name: str) -> SignedGraph | None:
    """Resolve a built-in gadget name; None when the name is not built in.

    Names: subdivided-k4, signed-cube, apex-cycle:<l>.
    """
    if name == "subdivided-k4":
        return subdivided_k4()
    if name == "signed-cube":
        return signed_cube()
    if name.startswith("apex-cycle:"):
        return apex_cycle(int(name.split(":", 1)[1]))
    return None
