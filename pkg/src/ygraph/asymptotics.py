"""Growth constant A_{k,l,m} = Mahler measure of P(z), two ways.

Root route: |lc| times the product of |z| over roots outside the unit disc.
Integral route: exp of the mean of log|P| on the unit circle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import mpmath
import numpy as np

from .algebra import IntPoly, poly_exact_div, squarefree_decomposition
from .algebra.roots import RootCluster, roots_with_multiplicity
from .errors import BadGcd, UnitCircleRoot
from .trees import build_spectral

DEFAULT_PRECISION = 128
PRECISION_CAP = 2048
UNIT_CIRCLE_GAP = mpmath.mpf("1e-8")


@dataclass
class MahlerReport:
    jumps: tuple[int, int, int]
    A_roots: mpmath.mpf
    precision: int
    roots_outside: list[RootCluster] = field(default_factory=list)
    roots_inside: list[RootCluster] = field(default_factory=list)
    unit_root_multiplicity: int = 2
    A_integral: mpmath.mpf | None = None

    @property
    def relative_gap(self) -> mpmath.mpf | None:
        if self.A_integral is None:
            return None
        return abs(self.A_roots - self.A_integral) / self.A_roots

    def census(self) -> tuple[int, int, int]:
        """(outside, inside, at z = 1) root counts with multiplicity."""
        return (
            sum(r.multiplicity for r in self.roots_outside),
            sum(r.multiplicity for r in self.roots_inside),
            self.unit_root_multiplicity,
        )


def _check_gcd(k: int, l: int, m: int) -> None:
    g = gcd(gcd(k, l), m)
    if g != 1:
        raise BadGcd(f"gcd(k,l,m)={g}; the growth constant needs gcd(k,l,m)=1")


def deflated_polynomial(k: int, l: int, m: int) -> IntPoly:
    """Ptilde(z) / (z - 1)^2: the double root at z = 1 removed exactly."""
    Pt = build_spectral((k, l, m)).Ptilde
    return poly_exact_div(Pt, IntPoly([1, -2, 1]))


def mahler_roots(k: int, l: int, m: int, precision: int = DEFAULT_PRECISION) -> MahlerReport:
    """A = |lc(Ptilde)| * prod_{|z| > 1} |z|.

    A root is classified only once its inclusion disc clears the unit circle;
    otherwise the precision is doubled up to PRECISION_CAP.
    """
    _check_gcd(k, l, m)
    R = deflated_polynomial(k, l, m)
    factors = squarefree_decomposition(R)
    prec = precision
    while True:
        roots = roots_with_multiplicity(factors, prec)
        outside, inside, undecided = [], [], []
        with mpmath.workprec(prec + 32):
            for r in roots:
                gap = abs(r.value) - 1
                if abs(gap) < UNIT_CIRCLE_GAP:
                    raise UnitCircleRoot(f"root {r.value} lies on the unit circle")
                if abs(gap) <= r.radius:
                    undecided.append(r)
                elif gap > 0:
                    outside.append(r)
                else:
                    inside.append(r)
            if not undecided:
                A = mpmath.mpf(abs(R.lc))
                for r in outside:
                    A *= abs(r.value) ** r.multiplicity
                break
        if prec >= PRECISION_CAP:
            raise UnitCircleRoot(f"{len(undecided)} roots undecided at {prec} bits")
        prec *= 2
    return MahlerReport((k, l, m), A, prec, outside, inside)


def mahler_integral(k: int, l: int, m: int, grid_points: int = 2**14) -> mpmath.mpf:
    """exp(integral_0^1 log|P(e^(2 pi i t))| dt) by the periodic trapezoid rule.

    On |z| = 1, |P(z)| = |R(z)| |z - 1|^2 with R the deflated polynomial, and
    the integral of log|z - 1| over the circle vanishes; so only the smooth
    log|R| is integrated.  numpy's sum is a pairwise reduction, so the result
    is reproducible bit for bit.
    """
    _check_gcd(k, l, m)
    if grid_points < 256:
        raise ValueError("grid_points must be at least 256")
    R = deflated_polynomial(k, l, m)
    t = np.arange(grid_points, dtype=np.float64) / grid_points
    z = np.exp(2j * np.pi * t)
    vals = np.polyval(np.array(R.coeffs[::-1], dtype=np.float64), z)
    mean_log = np.sum(np.log(np.abs(vals))) / grid_points
    return mpmath.exp(mpmath.mpf(float(mean_log)))


def mahler_report(
    k: int, l: int, m: int, precision: int = DEFAULT_PRECISION, grid_points: int = 2**14
) -> MahlerReport:
    rep = mahler_roots(k, l, m, precision)
    rep.A_integral = mahler_integral(k, l, m, grid_points)
    return rep


def asymptotic_estimate(k: int, l: int, m: int, n: int, A: mpmath.mpf | None = None) -> mpmath.mpf:
    """n / (k^2 + l^2 + m^2) * A^n."""
    if A is None:
        A = mahler_roots(k, l, m).A_roots
    else:
        _check_gcd(k, l, m)
    with mpmath.workprec(DEFAULT_PRECISION + 64):
        return mpmath.mpf(n) / (k * k + l * l + m * m) * A**n


def asymptotic_ratio(tau: int, k: int, l: int, m: int, n: int, A: mpmath.mpf | None = None) -> mpmath.mpf:
    """tau(n) divided by the asymptotic estimate; tends to 1."""
    with mpmath.workprec(DEFAULT_PRECISION + 64):
        return mpmath.mpf(tau) / asymptotic_estimate(k, l, m, n, A)
