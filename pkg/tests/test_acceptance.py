"""Acceptance criteria, one test (or test group) per criterion.

Each test carries an ``acceptance`` marker; conftest.py prints a PASS/FAIL
line per criterion at the end of the run.
"""

import random
import time

import mpmath
import pytest

from ygraph.algebra import IntPoly, smith_normal_form
from ygraph.asymptotics import asymptotic_ratio, mahler_integral, mahler_report, mahler_roots
from ygraph.errors import DisconnectedGraph
from ygraph.graph import edge_multiset, laplacian_full, reduced_matrix, validate_params
from ygraph.jacobian import (
    circulant_tridiag,
    circulant_tridiag_coker,
    cokernel_torsion,
    fib_lucas,
    jacobian_of,
    jacobian_y111_closed,
    normalize_cyclic_sum,
)
from ygraph.oracles import enumerate_spanning_trees, normalized_params
from ygraph.trees import (
    build_spectral,
    eval_P_lambda_at_unit,
    square_property,
    tree_count_chebyshev,
    tree_count_kirchhoff,
    tree_count_resultant,
)


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.1f} s, limit {self.limit} s"


def valid_normalized(max_n, min_n=2):
    """All connected loop-free parameters with jumps in 1..n/2, in every order."""
    for n in range(min_n, max_n + 1):
        half = n // 2
        for k in range(1, half + 1):
            for l in range(1, half + 1):
                for m in range(1, half + 1):
                    try:
                        yield validate_params(n, k, l, m)
                    except DisconnectedGraph:
                        pass


@pytest.mark.acceptance(1, "Jac(Y(n;1,1,1)) closed form vs full-Laplacian SNF, n = 4..12")
def test_c01_y111_jacobian():
    with Timer(10):
        for n in range(4, 13):
            full = cokernel_torsion(laplacian_full(validate_params(n, 1, 1, 1))).torsion()
            assert full == jacobian_y111_closed(n), n


@pytest.mark.acceptance(2, "reduction: torsion of full and reduced cokernels agree, n <= 10")
def test_c02_reduction():
    count = 0
    with Timer(60):
        for p in valid_normalized(10):
            full = cokernel_torsion(laplacian_full(p))
            red = cokernel_torsion(reduced_matrix(p))
            assert full.free_rank == 1, p
            assert full.torsion() == red.torsion(), p
            count += 1
    # ordered jump triples in 1..n/2 with gcd(k, l, m, n) = 1, n = 2..10
    assert count == 304


@pytest.mark.acceptance(3, "tau_{1,1,1}(n) closed form vs Kirchhoff, n = 4..30")
def test_c03_y111_tree_formula():
    for n in range(4, 31):
        fl = fib_lucas(n)
        expected = 3 ** (n - 1) * n * fl.L**4 if n % 2 else 25 * 3 ** (n - 1) * n * fl.F**4
        assert tree_count_kirchhoff(validate_params(n, 1, 1, 1)) == expected, n


@pytest.mark.acceptance(3, "tau_{1,1,1}(n) closed form vs Kirchhoff, n = 4..30")
@pytest.mark.parametrize("n,tau", [(4, 218700), (5, 5929605), (6, 149299200)])
def test_c03_spot_values(n, tau):
    assert tree_count_kirchhoff(validate_params(n, 1, 1, 1)) == tau


@pytest.mark.acceptance(4, "kirchhoff = resultant = chebyshev for all params, n <= 14")
def test_c04_route_agreement():
    with Timer(300):
        for p in normalized_params(14):
            k = tree_count_kirchhoff(p)
            assert tree_count_resultant(p) == k, p
            assert tree_count_chebyshev(p).value == k, p


@pytest.mark.acceptance(5, "subset enumeration equals Kirchhoff, n in {2, 3}")
def test_c05_enumeration():
    seen = 0
    with Timer(30):
        for p in valid_normalized(3):
            assert enumerate_spanning_trees(4 * p.n, edge_multiset(p)) == tree_count_kirchhoff(p), p
            seen += 1
    assert seen >= 2


@pytest.mark.acceptance(6, "|Jac| equals tau for all params, n <= 10")
def test_c06_order_is_tree_count():
    for p in valid_normalized(10):
        assert jacobian_of(p, "reduced").order == tree_count_kirchhoff(p), p


@pytest.mark.acceptance(7, "A_{1,1,2} and A_{1,2,2} by roots and integral, methods agree")
def test_c07_mahler_constants():
    targets = {(1, 1, 2): mpmath.mpf("22.7697"), (1, 2, 2): mpmath.mpf("23.5623")}
    with Timer(10):
        for klm, target in targets.items():
            A_roots = mahler_roots(*klm).A_roots
            A_int = mahler_integral(*klm)
            assert abs(A_roots - target) < 1e-3, klm
            assert abs(A_int - target) < 1e-3, klm
            assert abs(A_roots - A_int) / A_roots < 1e-6, klm
            assert mahler_report(*klm).relative_gap < 1e-6


@pytest.mark.acceptance(8, "asymptotic law within 1% at n = 40 for (1,1,1) and (1,1,2)")
@pytest.mark.parametrize("klm", [(1, 1, 1), (1, 1, 2)])
def test_c08_asymptotic_law(klm):
    with Timer(30):
        tau = tree_count_resultant(validate_params(40, *klm))
        A = mahler_roots(*klm).A_roots
        assert abs(asymptotic_ratio(tau, *klm, 40, A) - 1) < 0.01


@pytest.mark.acceptance(9, "polynomial invariants for k + l + m <= 12 and P(1, lambda)")
def test_c09_polynomial_invariants():
    count = 0
    for k in range(1, 11):
        for l in range(k, 11):
            for m in range(l, 11):
                N = k + l + m
                if N > 12:
                    continue
                sp = build_spectral((k, l, m))
                assert sp.Q(1) == -2 * (k * k + l * l + m * m)
                assert sp.Q.degree == N - 1
                assert sp.Q.lc == -3 * 2**N
                Pt = sp.Ptilde
                assert Pt.is_palindromic()
                assert Pt(1) == 0 and Pt.derivative()(1) == 0
                assert Pt.derivative().derivative()(1) != 0
                count += 1
    assert count == 53  # sorted triples with k + l + m <= 12
    lam = IntPoly([0, 1])
    assert eval_P_lambda_at_unit() == lam * (lam - 1) ** 2 * (lam - 4)


@pytest.mark.acceptance(10, "tau_{1,2,2}(n) = n a(n)^2 for n = 2..40")
def test_c10_square_property():
    rows = square_property(1, 2, 2, range(2, 41))
    bad = [r for r in rows if not r.is_square]
    assert not bad, "counterexamples: " + "; ".join(repr(r) for r in bad)
    for r in rows:
        assert r.tau == r.n * r.a**2


@pytest.mark.acceptance(11, "circulant cokernels: closed form vs SNF, random and special cases")
def test_c11_circulant_random():
    rng = random.Random(20240611)
    for _ in range(100):
        n = rng.randint(2, 24)
        a = rng.randint(-12, 12)
        b = rng.choice([v for v in range(-6, 7) if v])
        direct = cokernel_torsion(circulant_tridiag(a, b, n))
        snf = smith_normal_form(circulant_tridiag(a, b, n))
        assert circulant_tridiag_coker(a, b, n) == direct, (a, b, n)
        assert direct.free_rank == snf.zero_count


@pytest.mark.acceptance(11, "circulant cokernels: closed form vs SNF, random and special cases")
@pytest.mark.parametrize("n", range(3, 21))
def test_c11_specializations(n):
    fl = fib_lucas(n)
    if n % 2:
        expected = normalize_cyclic_sum([fl.L, fl.L])
    else:
        expected = normalize_cyclic_sum([fl.F, 5 * fl.F])
    assert circulant_tridiag_coker(3, -1, n) == expected
    assert cokernel_torsion(circulant_tridiag(3, -1, n)) == expected
    laplacian_cycle = normalize_cyclic_sum([n], free_rank=1)
    assert circulant_tridiag_coker(2, -1, n) == laplacian_cycle
    assert cokernel_torsion(circulant_tridiag(2, -1, n)) == laplacian_cycle
