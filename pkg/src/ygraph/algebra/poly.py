"""Integer polynomials, Laurent polynomials, resultants and Chebyshev helpers."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from ..errors import InexactDivision, ZeroPolynomial
from .matrix import IntMatrix, bareiss_determinant


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


class IntPoly:
    """Univariate polynomial over Z, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = (0,)):
        self.coeffs = _trim([int(c) for c in coeffs])

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def x(cls) -> IntPoly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1."""
        return -1 if self.is_zero() else len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            mon = "" if d == 0 else ("w" if d == 1 else f"w^{d}")
            if mon and abs(c) == 1:
                body = mon
            else:
                body = f"{abs(c)}{'*' + mon if mon else ''}"
            terms.append(("-" if c < 0 else "+") + body)
        s = " ".join(terms)
        return s[1:] if s.startswith("+") else s

    @staticmethod
    def _coerce(other) -> IntPoly:
        return other if isinstance(other, IntPoly) else IntPoly([other])

    def __add__(self, other) -> IntPoly:
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(other * c for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        result = IntPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; works for ints, Fractions, mpmath numbers."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i) if len(self.coeffs) > 1 else IntPoly()

    def compose(self, inner: IntPoly) -> IntPoly:
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntPoly:
        """Divide by the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def reversed(self) -> IntPoly:
        return IntPoly(reversed(self.coeffs))

    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))


def poly_divmod(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division with remainder in Z[x]; raises InexactDivision when a
    quotient coefficient is not an integer."""
    if g.is_zero():
        raise ZeroPolynomial("division by the zero polynomial")
    r = list(f.coeffs)
    dg = g.degree
    if f.degree < dg:
        return IntPoly(), f
    q = [0] * (f.degree - dg + 1)
    lc = g.lc
    for k in range(len(q) - 1, -1, -1):
        c = r[k + dg]
        if c % lc:
            raise InexactDivision(f"{c} not divisible by leading coefficient {lc}")
        qk = c // lc
        q[k] = qk
        if qk:
            for i, gc in enumerate(g.coeffs):
                r[k + i] -= qk * gc
    return IntPoly(q), IntPoly(r[:dg] if dg else [0])


def poly_exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    q, r = poly_divmod(f, g)
    if not r.is_zero():
        raise InexactDivision(f"{f} is not divisible by {g}")
    return q


# -- polynomials over Q, used by the Euclidean resultant and gcd --------------

def _qtrim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _qdivmod(f: list[Fraction], g: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], _qtrim(r)
    q = [Fraction(0)] * (len(r) - dg)
    inv = 1 / g[-1]
    for k in range(len(q) - 1, -1, -1):
        c = r[k + dg] * inv
        q[k] = c
        if c:
            for i, gc in enumerate(g):
                r[k + i] -= c * gc
    return _qtrim(q), _qtrim(r[:dg])


def _from_fractions(c: list[Fraction]) -> IntPoly:
    if not c:
        return IntPoly()
    den = 1
    for x in c:
        den = den * x.denominator // gcd(den, x.denominator)
    return IntPoly(int(x * den) for x in c).primitive()


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd (positive leading coefficient) via Euclid over Q."""
    a = [Fraction(c) for c in f.coeffs] if not f.is_zero() else []
    b = [Fraction(c) for c in g.coeffs] if not g.is_zero() else []
    return _from_fractions(_qgcd(a, b))


def _qgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, r
    return [x / a[-1] for x in a] if a else a


def squarefree_decomposition(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: primitive square-free factors with multiplicities.

    The product of factor**mult equals f up to a constant.
    """
    if f.degree < 1:
        return []
    fq = [Fraction(x) for x in f.coeffs]
    a = _qgcd(fq, _deriv(fq))
    b, _ = _qdivmod(fq, a)
    c, _ = _qdivmod(_deriv(fq), a)
    d = _sub(c, _deriv(b))
    out = []
    i = 1
    while len(b) > 1:
        g = _qgcd(b, d) if d else [x / b[-1] for x in b]
        if len(g) > 1:
            out.append((_from_fractions(g), i))
        b, r1 = _qdivmod(b, g)
        c, r2 = _qdivmod(d, g) if d else ([], [])
        if r1 or r2:
            raise InexactDivision("square-free decomposition lost exactness")
        d = _sub(c, _deriv(b))
        i += 1
    return out


def _deriv(c: list[Fraction]) -> list[Fraction]:
    return _qtrim([i * x for i, x in enumerate(c)][1:])


def _sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _qtrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


# -- resultants ---------------------------------------------------------------

def sylvester_matrix(f: IntPoly, g: IntPoly) -> IntMatrix:
    m, n = f.degree, g.degree
    size = m + n
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return IntMatrix(rows)


def resultant(f: IntPoly, g: IntPoly, method: str = "euclid") -> int:
    """Res(f, g) = lc(f)^deg(g) * prod over roots a of f of g(a).

    ``method="sylvester"`` takes the Bareiss determinant of the Sylvester
    matrix; ``method="euclid"`` runs the Euclidean remainder sequence over Q,
    which is much faster for large degrees.  Both are exact.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    m, n = f.degree, g.degree
    if m == 0:
        return f.lc ** n
    if n == 0:
        return g.lc ** m
    if method == "sylvester":
        return bareiss_determinant(sylvester_matrix(f, g))
    if method != "euclid":
        raise ValueError(f"unknown resultant method {method!r}")
    a = [Fraction(c) for c in f.coeffs]
    b = [Fraction(c) for c in g.coeffs]
    res = Fraction(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            res *= b[0] ** da
            break
        _, r = _qdivmod(a, b)
        if not r:
            return 0
        dr = len(r) - 1
        # Res(a, b) = (-1)^(da*db) * lc(b)^(da - dr) * Res(b, r)
        if (da * db) & 1:
            res = -res
        res *= b[-1] ** (da - dr)
        a, b = b, r
    assert res.denominator == 1
    return int(res)


# -- Laurent polynomials ------------------------------------------------------

class LaurentPoly:
    """Finite sum of c_i z^i with i possibly negative."""

    __slots__ = ("min_degree", "coeffs")

    def __init__(self, min_degree: int, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.min_degree, self.coeffs = 0, (0,)
        else:
            self.min_degree, self.coeffs = min_degree + lo, tuple(c[lo:hi])

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> LaurentPoly:
        if not terms:
            return cls(0, [0])
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(i, 0) for i in range(lo, hi + 1)])

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def terms(self) -> dict[int, int]:
        return {self.min_degree + i: c for i, c in enumerate(self.coeffs) if c}

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.min_degree == other.min_degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.min_degree, self.coeffs))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.min_degree}, {list(self.coeffs)!r})"

    def __add__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(0, [other])
        t = self.terms()
        for d, c in other.terms().items():
            t[d] = t.get(d, 0) + c
        return LaurentPoly.from_terms(t)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.min_degree, [-c for c in self.coeffs])

    def __sub__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(0, [other])
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return LaurentPoly(0, [other]) - self

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(self.min_degree, [other * c for c in self.coeffs])
        prod = IntPoly(self.coeffs) * IntPoly(other.coeffs)
        return LaurentPoly(self.min_degree + other.min_degree, prod.coeffs)

    __rmul__ = __mul__

    def __call__(self, z):
        return z ** self.min_degree * IntPoly(self.coeffs)(z)

    def shifted_poly(self, shift: int) -> IntPoly:
        """z^shift * self as an ordinary polynomial (shift must clear negative powers)."""
        if self.is_zero():
            return IntPoly()
        if self.min_degree + shift < 0:
            raise ValueError("shift too small to clear negative exponents")
        return IntPoly([0] * (self.min_degree + shift) + list(self.coeffs))


# -- Chebyshev-type sequences -------------------------------------------------

@lru_cache(maxsize=None)
def _chebyshev_T_cached(j: int) -> IntPoly:
    if j == 0:
        return IntPoly([1])
    if j == 1:
        return IntPoly([0, 1])
    prev, cur = IntPoly([1]), IntPoly([0, 1])
    two_w = IntPoly([0, 2])
    for _ in range(j - 1):
        prev, cur = cur, two_w * cur - prev
    return cur


def chebyshev_T(j: int) -> IntPoly:
    """T_j(w) via T_{j+1} = 2w T_j - T_{j-1}."""
    if j < 0:
        raise ValueError("Chebyshev index must be non-negative")
    return _chebyshev_T_cached(j)


def chebyshev_T_eval(j: int, x):
    """T_j(x) by the three-term recurrence at the current working precision.

    ``x`` may be an int, Fraction or mpmath real/complex.  For |x| > 1 the
    recurrence follows the dominant solution and is stable; integer and
    half-integer arguments stay exact while they fit the precision.
    """
    if j < 0:
        raise ValueError("Chebyshev index must be non-negative")
    prev, cur = x * 0 + 1, x
    if j == 0:
        return prev
    for _ in range(j - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def lucas_like(a: int, b: int, j: int) -> int:
    """g_0 = 1, g_1 = a, g_j = a g_{j-1} - b^2 g_{j-2}; equals b^j U_j(a / 2b)."""
    if j < 0:
        raise ValueError("index must be non-negative")
    prev, cur = 1, a
    if j == 0:
        return 1
    b2 = b * b
    for _ in range(j - 1):
        prev, cur = cur, a * cur - b2 * prev
    return cur
