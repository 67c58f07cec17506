"""Aberth-Ehrlich simultaneous root finding at arbitrary precision.

Inputs must be square-free; callers split off multiplicities first with
``squarefree_decomposition``.  Each returned root carries an a-posteriori
inclusion radius deg * |p(z)| / |p'(z)|: the disc of that radius around the
approximation contains a true root.
"""
from __future__ import annotations

from dataclasses import dataclass

import mpmath

from ..errors import NoConvergence
from .poly import IntPoly


@dataclass(frozen=True)
class RootCluster:
    value: mpmath.mpc
    radius: mpmath.mpf
    multiplicity: int = 1


def _eval_with_derivative(coeffs, z):
    p = coeffs[-1]
    dp = 0
    for c in reversed(coeffs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def aberth_roots(f: IntPoly, prec: int, max_iter: int = 500) -> list[RootCluster]:
    """All complex roots of the square-free polynomial ``f`` at ``prec`` bits."""
    deg = f.degree
    if deg < 1:
        return []
    with mpmath.workprec(prec + 32):
        coeffs = [mpmath.mpf(c) for c in f.coeffs]
        if deg == 1:
            z = mpmath.mpc(-coeffs[0] / coeffs[1])
            return [RootCluster(z, mpmath.mpf(0))]
        # initial guesses on a circle through the root-modulus estimate
        lc = abs(coeffs[-1])
        r = max(abs(c / lc) ** (mpmath.mpf(1) / (deg - i)) for i, c in enumerate(coeffs[:-1]) if c)
        r = max(r, mpmath.mpf(1) / 2)
        zs = [
            r * mpmath.expj(2 * mpmath.pi * k / deg + mpmath.mpf(0.4))
            for k in range(deg)
        ]
        tol = mpmath.mpf(2) ** (-prec)
        for _ in range(max_iter):
            biggest = mpmath.mpf(0)
            for i in range(deg):
                zi = zs[i]
                p, dp = _eval_with_derivative(coeffs, zi)
                if p == 0:
                    continue
                ratio = p / dp if dp != 0 else mpmath.mpc(tol)
                s = mpmath.fsum(1 / (zi - zs[j]) for j in range(deg) if j != i)
                step = ratio / (1 - ratio * s)
                zs[i] = zi - step
                rel = abs(step) / max(abs(zs[i]), 1)
                if rel > biggest:
                    biggest = rel
            if biggest < tol:
                break
        else:
            raise NoConvergence(f"Aberth iteration did not converge at {prec} bits")
        out = []
        for z in zs:
            p, dp = _eval_with_derivative(coeffs, z)
            rad = deg * abs(p) / abs(dp) if dp != 0 else mpmath.inf
            out.append(RootCluster(mpmath.mpc(z), +rad))
    return out


def roots_with_multiplicity(factors: list[tuple[IntPoly, int]], prec: int) -> list[RootCluster]:
    """Roots of prod(f_i ** m_i) given its square-free decomposition."""
    out = []
    for poly, mult in factors:
        for rc in aberth_roots(poly, prec):
            out.append(RootCluster(rc.value, rc.radius, mult))
    return out
