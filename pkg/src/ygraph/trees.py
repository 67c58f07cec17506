"""Spanning-tree counts of Y(n;k,l,m) by several independent routes.

kirchhoff   cofactor of the 4n x 4n Laplacian (Bareiss determinant)
resultant   |Res(1 + z + ... + z^(n-1), z^N P(z))| / n, exact
chebyshev   n 3^n / (k^2+l^2+m^2) * prod |2 T_n(w_p) - 2| over roots of Q
closed111   Fibonacci/Lucas closed form for Y(n;1,1,1)
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Callable, Iterable

import mpmath

from .algebra import (
    IntPoly,
    LaurentPoly,
    bareiss_determinant,
    chebyshev_T,
    chebyshev_T_eval,
    poly_divmod,
    resultant,
    squarefree_decomposition,
)
from .algebra.roots import roots_with_multiplicity
from .errors import (
    InexactDivision,
    InternalInconsistency,
    InvalidParams,
    LoopEdge,
    NoConvergence,
)
from .graph import YGraphParams, laplacian_full, normalize_jump, validate_params
from .jacobian import fib_lucas

DEFAULT_MAX_PRECISION = 4096

TREE_METHODS = ("kirchhoff", "resultant", "chebyshev", "closed")


def max_precision_cap() -> int:
    """Precision cap in bits; YGRAPH_MAX_PRECISION overrides the default."""
    raw = os.environ.get("YGRAPH_MAX_PRECISION")
    return int(raw) if raw else DEFAULT_MAX_PRECISION


@dataclass(frozen=True)
class SpectralPolynomial:
    """P(z) = 3abc - ab - bc - ac with a = 3 - z^k - z^-k etc., and its
    companions Ptilde(z) = z^(k+l+m) P(z) and Q(w) = P / (w - 1),
    w = (z + 1/z) / 2."""

    P: LaurentPoly
    Ptilde: IntPoly
    Q: IntPoly
    s: int


@dataclass(frozen=True)
class TreeCountReport:
    params: YGraphParams
    method: str
    value: int
    precision_used: int | None = None


def tree_count_kirchhoff(p: YGraphParams, check=None) -> int:
    """Determinant of the Laplacian with row and column 0 removed."""
    return bareiss_determinant(laplacian_full(p).minor(0, 0), check)


def _outer_factor_laurent(j: int) -> LaurentPoly:
    return LaurentPoly.from_terms({0: 3, j: -1, -j: -1}) if j else LaurentPoly(0, [1])


def build_spectral(p: YGraphParams | tuple[int, int, int]) -> SpectralPolynomial:
    k, l, m = p.jumps if isinstance(p, YGraphParams) else p
    a, b, c = (_outer_factor_laurent(j) for j in (k, l, m))
    P = 3 * a * b * c - a * b - b * c - a * c
    N = k + l + m
    Ptilde = P.shifted_poly(N)

    # same polynomial written in w, using z^j + z^-j = 2 T_j(w)
    aw, bw, cw = (3 - 2 * chebyshev_T(j) for j in (k, l, m))
    Pw = 3 * aw * bw * cw - aw * bw - bw * cw - aw * cw
    Q, rem = poly_divmod(Pw, IntPoly([-1, 1]))
    if not rem.is_zero():
        raise InternalInconsistency(f"P(w) not divisible by w - 1 for {(k, l, m)}")
    return SpectralPolynomial(P, Ptilde, Q, N - 1)


def eval_P_lambda_at_unit() -> IntPoly:
    """P(1, lambda) = (3 - lambda)(1 - lambda)^3 - 3(1 - lambda)^2 as a polynomial in lambda."""
    one_minus = IntPoly([1, -1])
    return IntPoly([3, -1]) * one_minus**3 - 3 * one_minus**2


def tree_count_resultant(p: YGraphParams, method: str = "euclid") -> int:
    """|prod_{j=1}^{n-1} P(e^(2 pi i j / n))| / n as an exact resultant."""
    n = p.n
    sp = build_spectral(p)
    cyclo = IntPoly([1] * n)
    res = abs(resultant(cyclo, sp.Ptilde, method))
    if res % n:
        raise InexactDivision(f"resultant {res} not divisible by n={n}")
    return res // n


def _certified_round(
    evaluate: Callable[[int], mpmath.mpf],
    start_precision: int,
    max_precision: int | None,
) -> tuple[int, int]:
    """Evaluate at doubling precision until the nearest integer is unchanged
    across two doublings (three evaluations), the rounding residual is below
    1/4, and the working precision exceeds the result's bit length."""
    cap = max_precision_cap() if max_precision is None else max_precision
    prec = max(int(start_precision), 16)
    history: list[int] = []
    while prec <= cap:
        with mpmath.workprec(prec):
            value = evaluate(prec)
            nearest = int(mpmath.nint(value))
            residual = abs(value - nearest)
        history.append(nearest)
        if (
            history[-3:] == [nearest] * 3
            and residual < mpmath.mpf(1) / 4
            and prec > nearest.bit_length() + 8
        ):
            return nearest, prec
        prec *= 2
    raise NoConvergence(f"no stable integer below the {cap}-bit precision cap")


def tree_count_chebyshev(
    p: YGraphParams, start_precision: int = 64, max_precision: int | None = None
) -> TreeCountReport:
    """Evaluate n 3^n / (k^2+l^2+m^2) * prod_p |2 T_n(w_p) - 2| numerically.

    Q is split into square-free parts first so repeated roots (Q = -6(3-2w)^2
    for jumps (1,1,1)) are found as simple roots with a multiplicity.
    """
    n = p.n
    sp = build_spectral(p)
    factors = squarefree_decomposition(sp.Q)
    pre = n * 3**n

    def evaluate(prec: int):
        roots = roots_with_multiplicity(factors, prec)
        with mpmath.workprec(prec + 32):
            acc = mpmath.mpf(pre) / p.jump_square_sum
            for r in roots:
                acc *= abs(2 * chebyshev_T_eval(n, r.value) - 2) ** r.multiplicity
        return +acc

    value, prec = _certified_round(evaluate, start_precision, max_precision)
    return TreeCountReport(p, "chebyshev", value, prec)


def tree_count_y111_closed(n: int) -> int:
    """3^(n-1) n L_n^4 for odd n, 25 3^(n-1) n F_n^4 for even n."""
    if n < 2:
        raise InvalidParams("n must be at least 2")
    fl = fib_lucas(n)
    if n % 2:
        return 3 ** (n - 1) * n * fl.L**4
    return 25 * 3 ** (n - 1) * n * fl.F**4


def tree_count_y112_formula(n: int, start_precision: int = 64) -> int:
    """4n 3^(n-1) |(T_n(3/2)-1)(T_n((1+sqrt193)/12)-1)(T_n((1-sqrt193)/12)-1)|."""

    def evaluate(prec: int):
        with mpmath.workprec(prec + 32):
            r193 = mpmath.sqrt(193)
            prod = 1
            for w in (mpmath.mpf(3) / 2, (1 + r193) / 12, (1 - r193) / 12):
                prod *= chebyshev_T_eval(n, w) - 1
            return 4 * n * mpmath.mpf(3) ** (n - 1) * abs(prod)

    return _certified_round(evaluate, start_precision, None)[0]


def tree_count_y122_formula(n: int, start_precision: int = 64) -> int:
    """n 3^(n-2) prod over z in {(1+-sqrt13)/2, (1+sqrt5)/2, (-1-sqrt5)/2} of (z^n + z^-n - 2)."""

    def evaluate(prec: int):
        with mpmath.workprec(prec + 32):
            r13, r5 = mpmath.sqrt(13), mpmath.sqrt(5)
            prod = 1
            for z in ((1 + r13) / 2, (1 - r13) / 2, (1 + r5) / 2, (-1 - r5) / 2):
                prod *= z**n + z ** (-n) - 2
            return n * mpmath.mpf(3) ** (n - 2) * prod

    return _certified_round(evaluate, start_precision, None)[0]


def tree_count(p: YGraphParams, method: str = "resultant") -> TreeCountReport:
    if method == "kirchhoff":
        return TreeCountReport(p, method, tree_count_kirchhoff(p))
    if method == "resultant":
        return TreeCountReport(p, method, tree_count_resultant(p))
    if method == "chebyshev":
        return tree_count_chebyshev(p)
    if method in ("closed", "closed111"):
        if p.jumps != (1, 1, 1):
            raise InvalidParams("closed form is only available for k = l = m = 1")
        if p.n < 4:
            raise InvalidParams(f"closed form requires n >= 4, got n={p.n}")
        return TreeCountReport(p, "closed111", tree_count_y111_closed(p.n))
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class SquareCheck:
    n: int
    is_square: bool | None
    a: int | None
    tau: int | None
    note: str = ""


def square_property(k: int, l: int, m: int, ns: Iterable[int]) -> list[SquareCheck]:
    """Check whether tau(n) = n a(n)^2 for integer a(n), per n.

    If a jump is 0 mod n the outer segment is a set of loops.  Loops never
    lie in a spanning tree and the circulant Laplacian (block I) still
    describes the loopless graph, so tau is computed from it and the row
    carries a note.  Disconnected parameters are reported with
    is_square=None.
    """
    out = []
    for n in ns:
        note = ""
        try:
            p = validate_params(n, k, l, m)
        except LoopEdge as exc:
            if gcd(gcd(k, l), gcd(m, n)) != 1:
                out.append(SquareCheck(n, None, None, None, str(exc)))
                continue
            p = YGraphParams(n, *(normalize_jump(j, n) for j in (k, l, m)))
            note = "graph has loops; tau from the circulant Laplacian"
        except InvalidParams as exc:
            out.append(SquareCheck(n, None, None, None, str(exc)))
            continue
        tau = tree_count_resultant(p)
        if tau % n:
            out.append(SquareCheck(n, False, None, tau, "n does not divide tau"))
            continue
        q = tau // n
        r = isqrt(q)
        ok = r * r == q
        out.append(SquareCheck(n, ok, r if ok else None, tau, note))
    return out
