"""Dense integer matrices, fraction-free determinants and Smith normal form.

Everything here works on Python ints, so nothing overflows.  Matrices are
immutable; the elimination routines copy the entries into scratch lists.
"""
from __future__ import annotations

from math import gcd
from typing import Callable, Iterable, NamedTuple, Sequence

from ..errors import NonSquare

CancelCheck = Callable[[], None]


class IntMatrix:
    """Immutable rows x cols matrix of arbitrary-precision integers."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if not data or not data[0]:
            raise ValueError("matrix dimensions must be >= 1")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = width

    # construction helpers
    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> IntMatrix:
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def shift(cls, n: int, power: int = 1) -> IntMatrix:
        """T^power where T = circ(0, 1, 0, ..., 0) is the cyclic shift."""
        return cls([[int(j == (i + power) % n) for j in range(n)] for i in range(n)])

    @classmethod
    def circulant(cls, first_row: Sequence[int]) -> IntMatrix:
        n = len(first_row)
        return cls([[first_row[(j - i) % n] for j in range(n)] for i in range(n)])

    @classmethod
    def block(cls, blocks: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
        rows = []
        for brow in blocks:
            for i in range(brow[0].nrows):
                rows.append([x for b in brow for x in b._rows[i]])
        return cls(rows)

    # access
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self._rows))

    def minor(self, drop_row: int, drop_col: int) -> IntMatrix:
        return IntMatrix(
            [x for j, x in enumerate(r) if j != drop_col]
            for i, r in enumerate(self._rows)
            if i != drop_row
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
        return IntMatrix([[self._rows[i][j] for j in cols] for i in rows])

    # arithmetic
    def _check_same(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same(other)
        return IntMatrix(
            [a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same(other)
        return IntMatrix(
            [a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix([-a for a in r] for r in self._rows)

    def __rmul__(self, k: int) -> IntMatrix:
        return IntMatrix([k * a for a in r] for r in self._rows)

    def __mul__(self, k: int) -> IntMatrix:
        return self.__rmul__(k)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other._rows))
        return IntMatrix(
            [sum(a * b for a, b in zip(r, c) if a) for c in cols] for r in self._rows
        )

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self._rows]

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.transpose()


def bareiss_determinant(M: IntMatrix, check: CancelCheck | None = None) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    Every intermediate value is a minor of ``M``, so entry size grows only
    linearly with the dimension.
    """
    if not M.is_square():
        raise NonSquare(f"determinant of a {M.nrows}x{M.ncols} matrix")
    a = M.tolist()
    n = M.nrows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if check is not None:
            check()
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


class SmithForm(NamedTuple):
    """Nonzero invariant factors d_1 | d_2 | ... | d_rank of a matrix.

    ``nrows - rank`` zero diagonal entries are implied; they are the free
    rank of the cokernel.
    """

    factors: tuple[int, ...]
    rank: int
    nrows: int
    ncols: int

    @property
    def zero_count(self) -> int:
        return self.nrows - self.rank


def divisibility_chain(values: Iterable[int]) -> list[int]:
    """Rewrite positive integers d_i as an invariant-factor chain with the same
    cokernel of diag(d_i): gcd/lcm exchanges, no factoring required."""
    a = sorted(abs(v) for v in values)
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            g = gcd(a[i], a[j])
            if g != a[i]:
                a[i], a[j] = g, a[i] // g * a[j]
    return a


def _min_nonzero(a: list[list[int]], t: int, nrows: int, ncols: int):
    best = None
    best_abs = 0
    for i in range(t, nrows):
        row = a[i]
        for j in range(t, ncols):
            v = row[j]
            if v:
                av = v if v > 0 else -v
                if best is None or av < best_abs:
                    best, best_abs = (i, j), av
                    if av == 1:
                        return best
    return best


def smith_normal_form(M: IntMatrix, check: CancelCheck | None = None) -> SmithForm:
    """Invariant factors of ``M`` under unimodular row and column operations.

    Pivot is always the entry of least absolute value in the remaining block,
    which keeps the entries small.  Transform matrices are not tracked.
    """
    nrows, ncols = M.shape
    a = M.tolist()
    diag: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        if check is not None:
            check()
        pos = _min_nonzero(a, t, nrows, ncols)
        if pos is None:
            break
        pi, pj = pos
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for r in a:
                r[t], r[pj] = r[pj], r[t]
        while True:
            p = a[t][t]
            rt = a[t]
            dirty = False
            for i in range(t + 1, nrows):
                ri = a[i]
                v = ri[t]
                if v:
                    q = v // p
                    if q:
                        for j in range(t, ncols):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if ri[t]:
                        dirty = True
            for j in range(t + 1, ncols):
                v = rt[j]
                if v:
                    q = v // p
                    if q:
                        for r in a[t:]:
                            if r[t]:
                                r[j] -= q * r[t]
                    if rt[j]:
                        dirty = True
            if not dirty:
                break
            # a remainder smaller than the pivot survived: bring it to (t, t)
            best = None
            for i in range(t + 1, nrows):
                v = a[i][t]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, None)
            for j in range(t + 1, ncols):
                v = rt[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), None, j)
            _, bi, bj = best
            if bi is not None:
                a[t], a[bi] = a[bi], a[t]
            else:
                for r in a:
                    r[t], r[bj] = r[bj], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    factors = tuple(divisibility_chain(diag))
    return SmithForm(factors, len(factors), nrows, ncols)
