"""Jacobian (critical) groups of Y-graphs.

Three independent routes: SNF of the full Laplacian, SNF of the reduced
2n x 2n matrix, and the closed Fibonacci/Lucas description for Y(n;1,1,1).
Groups are compared only in canonical invariant-factor form.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable

from .algebra import IntMatrix, divisibility_chain, lucas_like, smith_normal_form
from .errors import OutOfStatedRange
from .graph import YGraphParams, laplacian_full, outer_block, reduced_matrix


@dataclass(frozen=True)
class AbelianGroup:
    """Z_{d_1} + ... + Z_{d_r} + Z^free_rank with 2 <= d_1 | d_2 | ... | d_r."""

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        d = self.invariant_factors
        if any(x < 2 for x in d):
            raise ValueError(f"invariant factors must be >= 2: {d}")
        if any(b % a for a, b in zip(d, d[1:])):
            raise ValueError(f"not a divisibility chain: {d}")
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")

    @property
    def order(self) -> int:
        """Order of the torsion part."""
        return prod(self.invariant_factors)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def torsion(self) -> AbelianGroup:
        return AbelianGroup(self.invariant_factors, 0)

    def __add__(self, other: AbelianGroup) -> AbelianGroup:
        """Direct sum."""
        g = normalize_cyclic_sum(self.invariant_factors + other.invariant_factors)
        return AbelianGroup(g.invariant_factors, self.free_rank + other.free_rank)

    def __str__(self) -> str:
        parts = [f"Z_{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def normalize_cyclic_sum(orders: Iterable[int], free_rank: int = 0) -> AbelianGroup:
    """Canonical form of the direct sum of Z_{orders[i]}."""
    orders = list(orders)
    if any(o < 1 for o in orders):
        raise ValueError(f"cyclic orders must be positive: {orders}")
    chain = [d for d in divisibility_chain(orders) if d > 1]
    return AbelianGroup(tuple(chain), free_rank)


def groups_isomorphic(g1: AbelianGroup, g2: AbelianGroup) -> bool:
    return g1.invariant_factors == g2.invariant_factors and g1.free_rank == g2.free_rank


def cokernel_torsion(M: IntMatrix, check=None) -> AbelianGroup:
    """coker(M) = Z^rows / im(M): torsion factors plus free rank."""
    snf = smith_normal_form(M, check)
    return AbelianGroup(tuple(d for d in snf.factors if d > 1), snf.zero_count)


def jacobian_of(p: YGraphParams, route: str = "reduced", check=None) -> AbelianGroup:
    """Jac(Y(n;k,l,m)) as a finite group (free rank 0)."""
    if route == "full":
        M = laplacian_full(p)
    elif route == "reduced":
        M = reduced_matrix(p)
    else:
        raise ValueError(f"unknown route {route!r}")
    return cokernel_torsion(M, check).torsion()


@dataclass(frozen=True)
class FibLucasPair:
    n: int
    F: int
    L: int


def fib_lucas(n: int) -> FibLucasPair:
    if n < 0:
        raise ValueError("index must be non-negative")
    f0, f1 = 0, 1
    l0, l1 = 2, 1
    for _ in range(n):
        f0, f1 = f1, f0 + f1
        l0, l1 = l1, l0 + l1
    return FibLucasPair(n, f0, l0)


def y111_closed_summands(n: int) -> list[int]:
    """Cyclic orders in the Y(n;1,1,1) decomposition, before normalization."""
    if n < 4:
        raise OutOfStatedRange(f"closed form for Jac(Y(n;1,1,1)) requires n >= 4, got {n}")
    fl = fib_lucas(n)
    head = [3] * (n - 4) + [3 * n]
    if n % 2:
        L = fl.L
        return head + [L, L, 3 * L, 3 * L]
    F = fl.F
    return head + [F, 3 * F, 5 * F, 15 * F]


def jacobian_y111_closed(n: int) -> AbelianGroup:
    return normalize_cyclic_sum(y111_closed_summands(n))


def jacobian_y111_decomposed(n: int) -> AbelianGroup:
    """Torsion of coker(3(A^2 - A)) + coker(A), A = 3I - T - T^-1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    A = outer_block(n, 1)
    first = cokernel_torsion(3 * (A @ A - A))
    second = cokernel_torsion(A)
    return (first + second).torsion()


def circulant_tridiag(a: int, b: int, n: int) -> IntMatrix:
    """a I + b T + b T^-1 as an explicit n x n matrix."""
    return a * IntMatrix.identity(n) + b * IntMatrix.shift(n, 1) + b * IntMatrix.shift(n, -1)


def circulant_tridiag_reduced(a: int, b: int, n: int) -> IntMatrix:
    """The 2 x 2 matrix whose cokernel matches that of a I + b T + b T^-1.

    With g_j = lucas_like(a, b, j): even n gives g_{n/2-1} [[a, 2b], [2b, a]],
    odd n gives (g_{(n-1)/2} - b g_{(n-3)/2}) diag(1, a + 2b).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if n % 2 == 0:
        s = lucas_like(a, b, n // 2 - 1)
        return IntMatrix([[s * a, s * 2 * b], [s * 2 * b, s * a]])
    h = (n - 1) // 2
    s = lucas_like(a, b, h) - b * (lucas_like(a, b, h - 1) if h >= 1 else 0)
    return IntMatrix([[s, 0], [0, s * (a + 2 * b)]])


def circulant_tridiag_coker(a: int, b: int, n: int) -> AbelianGroup:
    """coker(a I + b T + b T^-1) through its 2 x 2 reduction.

    The reduction needs gcd(a, b) = 1.  A common factor g is pulled out
    first: the coprime matrix is equivalent to diag(1, ..., 1, d_1, d_2), and
    scaling a diagonal matrix by g scales every cyclic summand by g.
    """
    if b == 0:
        raise ValueError("b must be nonzero")
    if n < 2:
        raise ValueError("n must be at least 2")
    g = gcd(a, b)
    snf = smith_normal_form(circulant_tridiag_reduced(a // g, b // g, n))
    diagonal = [1] * (n - 2) + list(snf.factors)
    return normalize_cyclic_sum([g * d for d in diagonal], snf.zero_count)
