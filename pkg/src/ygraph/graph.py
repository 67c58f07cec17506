"""Y-graph construction: parameters, edges and Laplacians.

Vertex v_{x,y} (segment x in 0..3, position y mod n) has index x*n + y.
Segment 0 is the inner segment; segments 1, 2, 3 are the outer cycles with
jumps k, l, m.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

from .algebra import IntMatrix
from .errors import BadSize, DisconnectedGraph, LoopEdge


@dataclass(frozen=True)
class YGraphParams:
    n: int
    k: int
    l: int
    m: int

    @property
    def jumps(self) -> tuple[int, int, int]:
        return self.k, self.l, self.m

    @property
    def jump_square_sum(self) -> int:
        return self.k**2 + self.l**2 + self.m**2

    @property
    def num_vertices(self) -> int:
        return 4 * self.n

    def in_closed_form_range(self) -> bool:
        """Whether n is in the range n >= 4 where the closed Y(n;1,1,1) forms apply."""
        return self.n >= 4

    def as_dict(self) -> dict[str, int]:
        return {"n": self.n, "k": self.k, "l": self.l, "m": self.m}


def normalize_jump(j: int, n: int) -> int:
    j %= n
    return min(j, n - j)


def validate_params(n: int, k: int, l: int, m: int) -> YGraphParams:
    """Check and normalize raw parameters.

    Jumps are reduced to min(j mod n, n - j mod n); T^j + T^-j does not see
    the difference.
    """
    n, k, l, m = (int(v) for v in (n, k, l, m))
    if n < 2:
        raise BadSize(f"n must be at least 2, got {n}")
    for name, j in (("k", k), ("l", l), ("m", m)):
        if j % n == 0:
            raise LoopEdge(f"jump {name}={j} is 0 mod n={n}: loops are not allowed")
    g = gcd(gcd(k, l), gcd(m, n))
    if g > 1:
        raise DisconnectedGraph(f"disconnected: gcd(k,l,m,n)={g}")
    return YGraphParams(n, normalize_jump(k, n), normalize_jump(l, n), normalize_jump(m, n))


def vertex_index(x: int, y: int, n: int) -> int:
    return x * n + y % n


def edge_multiset(p: YGraphParams) -> list[tuple[int, int]]:
    """All 6n edges as (u, v) with u < v; parallel edges appear repeatedly.

    When 2j = 0 mod n the outer segment with jump j degenerates into a
    perfect matching of doubled edges.
    """
    n = p.n
    edges = []
    for y in range(n):
        for x in (1, 2, 3):
            edges.append((vertex_index(0, y, n), vertex_index(x, y, n)))
    for x, j in zip((1, 2, 3), p.jumps):
        for y in range(n):
            u, v = vertex_index(x, y, n), vertex_index(x, y + j, n)
            edges.append((min(u, v), max(u, v)))
    return edges


def laplacian_from_edges(num_vertices: int, edges: list[tuple[int, int]]) -> IntMatrix:
    """Degree matrix minus adjacency matrix, parallel edges counted."""
    L = [[0] * num_vertices for _ in range(num_vertices)]
    for (u, v), mult in Counter(edges).items():
        L[u][v] -= mult
        L[v][u] -= mult
        L[u][u] += mult
        L[v][v] += mult
    return IntMatrix(L)


def outer_block(n: int, j: int) -> IntMatrix:
    """3I - T^j - T^-j."""
    return 3 * IntMatrix.identity(n) - IntMatrix.shift(n, j) - IntMatrix.shift(n, -j)


def laplacian_full(p: YGraphParams) -> IntMatrix:
    """4n x 4n Laplacian in circulant block form."""
    n = p.n
    eye = IntMatrix.identity(n)
    zero = IntMatrix.zeros(n)
    A, B, C = (outer_block(n, j) for j in p.jumps)
    return IntMatrix.block(
        [
            [3 * eye, -eye, -eye, -eye],
            [-eye, A, zero, zero],
            [-eye, zero, B, zero],
            [-eye, zero, zero, C],
        ]
    )


def reduced_matrix(p: YGraphParams) -> IntMatrix:
    """2n x 2n matrix [[3AB - A - B, -A], [-B, C]] with the same Jacobian."""
    n = p.n
    A, B, C = (outer_block(n, j) for j in p.jumps)
    top_left = 3 * (A @ B) - A - B
    return IntMatrix.block([[top_left, -A], [-B, C]])
