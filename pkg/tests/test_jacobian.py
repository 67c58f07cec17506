import random

import pytest
from hypothesis import given, settings, strategies as st

from ygraph.algebra import IntMatrix
from ygraph.errors import OutOfStatedRange
from ygraph.graph import laplacian_full, outer_block, validate_params
from ygraph.jacobian import (
    AbelianGroup,
    circulant_tridiag,
    circulant_tridiag_coker,
    cokernel_torsion,
    fib_lucas,
    groups_isomorphic,
    jacobian_of,
    jacobian_y111_closed,
    jacobian_y111_decomposed,
    normalize_cyclic_sum,
)
from ygraph.trees import tree_count_kirchhoff


class TestNormalize:
    def test_crt(self):
        assert normalize_cyclic_sum([2, 3]) == AbelianGroup((6,))

    def test_n4_summands(self):
        g = normalize_cyclic_sum([3, 9, 12, 15, 45])
        assert g.invariant_factors == (3, 3, 3, 45, 180)
        assert g.order == 218700

    def test_n5_summands(self):
        g = normalize_cyclic_sum([3, 15, 11, 11, 33, 33])
        assert g.invariant_factors == (33, 33, 33, 165)
        assert g.order == 5929605

    def test_drops_trivial(self):
        assert normalize_cyclic_sum([1, 1, 4]) == AbelianGroup((4,))

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(2, 400), min_size=1, max_size=8))
    def test_order_preserved_and_matches_snf(self, orders):
        g = normalize_cyclic_sum(orders)
        prod = 1
        for o in orders:
            prod *= o
        assert g.order == prod
        assert g == cokernel_torsion(IntMatrix.diag(orders))


class TestGroups:
    def test_isomorphic(self):
        assert groups_isomorphic(AbelianGroup((6,)), normalize_cyclic_sum([2, 3]))
        assert not groups_isomorphic(AbelianGroup((2, 2)), AbelianGroup((4,)))
        assert not groups_isomorphic(AbelianGroup((), 1), AbelianGroup((), 0))

    def test_invalid_chain(self):
        with pytest.raises(ValueError):
            AbelianGroup((4, 6))
        with pytest.raises(ValueError):
            AbelianGroup((1, 2))

    def test_str(self):
        assert str(AbelianGroup((3, 15), 1)) == "Z_3 + Z_15 + Z"
        assert str(AbelianGroup()) == "0"


class TestCokernel:
    def test_identity(self):
        assert cokernel_torsion(IntMatrix.identity(3)) == AbelianGroup((), 0)

    def test_zero(self):
        assert cokernel_torsion(IntMatrix.zeros(2)) == AbelianGroup((), 2)

    def test_y5_laplacian(self):
        g = cokernel_torsion(laplacian_full(validate_params(5, 1, 1, 1)))
        assert g.order == 81 * 5 * 11**4 == 5929605
        assert g.free_rank == 1

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(-30, 30), min_size=1, max_size=6), st.integers(1, 12))
    def test_diagonal_scaling(self, diag, k):
        g = cokernel_torsion(k * IntMatrix.diag(diag))
        zeros = sum(1 for d in diag if d == 0)
        assert g == normalize_cyclic_sum([abs(k * d) for d in diag if d], zeros)


class TestJacobianRoutes:
    def test_y4(self):
        p = validate_params(4, 1, 1, 1)
        for route in ("full", "reduced"):
            assert jacobian_of(p, route).invariant_factors == (3, 3, 3, 45, 180)

    def test_y5(self):
        assert jacobian_of(validate_params(5, 1, 1, 1)).invariant_factors == (33, 33, 33, 165)

    def test_order_is_tree_count(self):
        p = validate_params(4, 1, 1, 2)
        assert jacobian_of(p).order == tree_count_kirchhoff(p)

    def test_unknown_route(self):
        with pytest.raises(ValueError):
            jacobian_of(validate_params(4, 1, 1, 1), "magic")


class TestClosedY111:
    def test_n4(self):
        assert jacobian_y111_closed(4).invariant_factors == (3, 3, 3, 45, 180)

    def test_n5(self):
        assert jacobian_y111_closed(5).invariant_factors == (33, 33, 33, 165)

    def test_n6(self):
        # 3, 3, 18 and F_6 = 8: 8, 24, 40, 120
        g = jacobian_y111_closed(6)
        assert g == normalize_cyclic_sum([3, 3, 18, 8, 24, 40, 120])
        assert g.order == 149299200

    @pytest.mark.parametrize("n", [2, 3])
    def test_refuses_small_n(self, n):
        with pytest.raises(OutOfStatedRange):
            jacobian_y111_closed(n)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_decomposed_matches_snf(self, n):
        assert jacobian_y111_decomposed(n) == jacobian_of(validate_params(n, 1, 1, 1), "full")

    def test_first_summand_free_rank(self):
        for n in range(3, 10):
            A = outer_block(n, 1)
            assert cokernel_torsion(3 * (A @ A - A)).free_rank == 1


class TestCirculantCoker:
    def test_fibonacci_case(self):
        assert circulant_tridiag_coker(3, -1, 4) == AbelianGroup((3, 15))

    def test_lucas_case(self):
        assert circulant_tridiag_coker(3, -1, 5) == AbelianGroup((11, 11))

    def test_cycle_laplacian(self):
        assert circulant_tridiag_coker(2, -1, 7) == AbelianGroup((7,), 1)

    @pytest.mark.parametrize("n", range(2, 21))
    def test_fib_lucas_specialization(self, n):
        fl = fib_lucas(n)
        expected = [fl.F, 5 * fl.F] if n % 2 == 0 else [fl.L, fl.L]
        assert circulant_tridiag_coker(3, -1, n) == normalize_cyclic_sum(expected)
        assert circulant_tridiag_coker(2, -1, n) == AbelianGroup((n,), 1)

    def test_random_against_explicit_matrix(self):
        rng = random.Random(7)
        for _ in range(150):
            a, b, n = rng.randint(-6, 6), rng.choice((-2, -1, 1, 2)), rng.randint(2, 16)
            assert circulant_tridiag_coker(a, b, n) == cokernel_torsion(circulant_tridiag(a, b, n))

    def test_b_zero_rejected(self):
        with pytest.raises(ValueError):
            circulant_tridiag_coker(3, 0, 5)


class TestFibLucas:
    @pytest.mark.parametrize("n,F,L", [(4, 3, 7), (5, 5, 11), (6, 8, 18), (1, 1, 1), (2, 1, 3)])
    def test_values(self, n, F, L):
        fl = fib_lucas(n)
        assert (fl.F, fl.L) == (F, L)

    def test_identity(self):
        for n in range(1, 60):
            fl = fib_lucas(n)
            assert fl.L**2 - 5 * fl.F**2 == 4 * (-1) ** n
