from collections import Counter

import pytest

from ygraph.algebra import IntMatrix, bareiss_determinant, smith_normal_form
from ygraph.errors import BadSize, DisconnectedGraph, LoopEdge
from ygraph.graph import (
    YGraphParams,
    edge_multiset,
    laplacian_from_edges,
    laplacian_full,
    reduced_matrix,
    validate_params,
)
from ygraph.jacobian import cokernel_torsion
from ygraph.oracles import normalized_params


def all_valid(max_n, min_n=2):
    """Every valid parameter tuple with jumps in 1..n/2, in every order."""
    for n in range(min_n, max_n + 1):
        for k in range(1, n // 2 + 1):
            for l in range(1, n // 2 + 1):
                for m in range(1, n // 2 + 1):
                    try:
                        yield validate_params(n, k, l, m)
                    except DisconnectedGraph:
                        pass


class TestValidate:
    def test_already_normal(self):
        assert validate_params(5, 1, 1, 1) == YGraphParams(5, 1, 1, 1)

    def test_gcd_one(self):
        assert validate_params(6, 2, 2, 3) == YGraphParams(6, 2, 2, 3)

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraph, match="gcd"):
            validate_params(6, 2, 2, 4)

    def test_loop(self):
        with pytest.raises(LoopEdge):
            validate_params(5, 1, 5, 2)

    def test_size(self):
        with pytest.raises(BadSize):
            validate_params(1, 1, 1, 1)

    def test_normalization(self):
        assert validate_params(7, 6, 8, -3) == YGraphParams(7, 1, 1, 3)
        assert validate_params(10, 7, 5, 13).jumps == (3, 5, 3)


class TestEdges:
    def test_y3(self):
        edges = edge_multiset(validate_params(3, 1, 1, 1))
        assert len(edges) == 18
        assert max(Counter(edges).values()) == 1

    def test_y2_doubled_outer_edges(self):
        edges = edge_multiset(validate_params(2, 1, 1, 1))
        assert len(edges) == 12
        c = Counter(edges)
        for x in (1, 2, 3):
            assert c[(2 * x, 2 * x + 1)] == 2

    def test_matching_segment(self):
        c = Counter(edge_multiset(validate_params(4, 1, 1, 2)))
        # v_{3,0}-v_{3,2} and v_{3,1}-v_{3,3}
        assert c[(12, 14)] == 2 and c[(13, 15)] == 2

    def test_counts_and_no_loops(self):
        for p in normalized_params(50):
            edges = edge_multiset(p)
            assert len(edges) == 6 * p.n
            assert all(u != v for u, v in edges)
            assert max(max(e) for e in edges) < 4 * p.n


class TestLaplacian:
    def test_n2_outer_block(self):
        L = laplacian_full(validate_params(2, 1, 1, 1))
        assert L.shape == (8, 8)
        for x in (1, 2, 3):
            block = L.submatrix(range(2 * x, 2 * x + 2), range(2 * x, 2 * x + 2))
            assert block == IntMatrix([[3, -2], [-2, 3]])

    def test_y3_singular_rank_11(self):
        L = laplacian_full(validate_params(3, 1, 1, 1))
        assert bareiss_determinant(L) == 0
        assert smith_normal_form(L).rank == 11

    def test_laplacian_properties(self):
        for p in all_valid(12):
            L = laplacian_full(p)
            assert L.is_symmetric()
            assert all(s == 0 for s in L.row_sums())
            assert all(L[i, i] == 3 for i in range(4 * p.n))
            assert all(L[i, j] <= 0 for i in range(4 * p.n) for j in range(4 * p.n) if i != j)

    def test_matches_edge_laplacian(self):
        # segment order does not matter to either construction beyond n = 10
        params = list(all_valid(10)) + list(normalized_params(20, min_n=11))
        for p in params:
            assert laplacian_from_edges(4 * p.n, edge_multiset(p)) == laplacian_full(p)


class TestReduced:
    def test_n2(self):
        # A = [[3,-2],[-2,3]], A^2 = [[13,-12],[-12,13]], 3A^2 - 2A by hand
        M = reduced_matrix(validate_params(2, 1, 1, 1))
        assert M == IntMatrix(
            [[33, -32, -3, 2], [-32, 33, 2, -3], [-3, 2, 3, -2], [2, -3, -2, 3]]
        )

    def test_y5_torsion_matches_full(self):
        p = validate_params(5, 1, 1, 1)
        assert cokernel_torsion(reduced_matrix(p)).torsion() == cokernel_torsion(laplacian_full(p)).torsion()

    def test_reduction_on_all_small(self):
        for p in all_valid(12):
            full = cokernel_torsion(laplacian_full(p))
            red = cokernel_torsion(reduced_matrix(p))
            assert full.torsion() == red.torsion(), p
            assert full.free_rank == 1
