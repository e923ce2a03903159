"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  :class:`RatMatrix` is a small dense immutable matrix type;
the graphs we care about have a few dozen vertices at most, so nothing here
tries to be clever about sparsity.
"""

from __future__ import annotations

import contextlib
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import DisconnectedNetwork, NonPositiveResistance, SingularMatrix

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings.  Floats are refused."""
    if isinstance(x, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def format_rational(x: Fraction) -> str:
    """'p/q', or just 'p' when the denominator is one."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class RatMatrix:
    """Dense row-major matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[Scalar]], cols: int | None = None):
        rows = tuple(tuple(as_rational(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows

    # -- construction -----------------------------------------------------

    @classmethod
    def _wrap(cls, rows: list[list[Fraction]], cols: int) -> "RatMatrix":
        m = object.__new__(cls)
        m._data = tuple(tuple(r) for r in rows)
        m.rows = len(rows)
        m.cols = cols
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RatMatrix":
        cols = rows if cols is None else cols
        return cls._wrap([[Fraction(0)] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = Fraction(1)
        return cls._wrap(rows, n)

    @classmethod
    def full(cls, rows: int, cols: int, value: Scalar) -> "RatMatrix":
        v = as_rational(value)
        return cls._wrap([[v] * cols for _ in range(rows)], cols)

    @classmethod
    def column(cls, values: Sequence[Scalar]) -> "RatMatrix":
        return cls([[v] for v in values], cols=1)

    # -- access -----------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def flat(self) -> list[Fraction]:
        return [x for r in self._data for x in r]

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter(self._data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(format_rational(x) for x in r) + "]" for r in self._data
        )
        return f"RatMatrix([{body}])"

    # -- arithmetic -------------------------------------------------------

    def T(self) -> "RatMatrix":
        return RatMatrix._wrap([list(c) for c in zip(*self._data)] if self.rows else
                               [[] for _ in range(self.cols)], self.rows)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix._wrap(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            self.cols,
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix._wrap(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            self.cols,
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix._wrap([[-a for a in r] for r in self._data], self.cols)

    def scale(self, c: Scalar) -> "RatMatrix":
        c = as_rational(c)
        return RatMatrix._wrap([[c * a for a in r] for r in self._data], self.cols)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other._data)) if other.rows else [() for _ in range(other.cols)]
        out = []
        for r in self._data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * c[k] for k, a in nz), Fraction(0)) for c in cols])
        return RatMatrix._wrap(out, other.cols)

    def _same_shape(self, other: "RatMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        d = self._data
        return all(d[i][j] == d[j][i] for i in range(self.rows) for j in range(i))

    def is_zero(self) -> bool:
        return not any(x for r in self._data for x in r)

    def bilinear(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Fraction:
        """x^T M y for plain sequences."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            r = self._data[i]
            total += xi * sum((r[j] * yj for j, yj in enumerate(y) if yj), Fraction(0))
        return total

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix._wrap([[self._data[i][j] for j in cols] for i in rows], len(cols))

    def rank(self) -> int:
        work = self.tolist()
        rank = 0
        for c in range(self.cols):
            piv = next((i for i in range(rank, self.rows) if work[i][c]), None)
            if piv is None:
                continue
            work[rank], work[piv] = work[piv], work[rank]
            p = work[rank][c]
            for i in range(rank + 1, self.rows):
                f = work[i][c]
                if f:
                    f = f / p
                    work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
            rank += 1
        return rank


def _eliminate(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan with full pivoting; solves A X = B in place.

    Column swaps permute the unknowns; the permutation is undone on return.
    """
    n = len(a)
    nrhs = len(b[0]) if b else 0
    perm = list(range(n))
    for k in range(n):
        best, bi, bj = None, -1, -1
        for i in range(k, n):
            row = a[i]
            for j in range(k, n):
                v = row[j]
                if v and (best is None or abs(v) > best):
                    best, bi, bj = abs(v), i, j
        if best is None:
            raise SingularMatrix(f"no pivot at elimination step {k}")
        if bi != k:
            a[k], a[bi] = a[bi], a[k]
            b[k], b[bi] = b[bi], b[k]
        if bj != k:
            for row in a:
                row[k], row[bj] = row[bj], row[k]
            perm[k], perm[bj] = perm[bj], perm[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        b[k] = [x * inv for x in b[k]]
        ak, bk = a[k], b[k]
        for i in range(n):
            if i == k:
                continue
            f = a[i][k]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], ak)]
                b[i] = [x - f * y for x, y in zip(b[i], bk)]
    out = [[Fraction(0)] * nrhs for _ in range(n)]
    for k in range(n):
        out[perm[k]] = b[k]
    return out


def solve_linear(a: RatMatrix, b: RatMatrix | Sequence[Scalar]):
    """Solve ``a @ x == b`` exactly.

    ``b`` may be a RatMatrix (one column per right-hand side) or a plain
    sequence, in which case a list of Fractions is returned.
    """
    if not a.is_square():
        raise ValueError("solve_linear needs a square matrix")
    vector = not isinstance(b, RatMatrix)
    rhs = [[as_rational(x)] for x in b] if vector else b.tolist()
    if len(rhs) != a.rows:
        raise ValueError("right-hand side has the wrong length")
    x = _eliminate(a.tolist(), rhs)
    if vector:
        return [r[0] for r in x]
    return RatMatrix._wrap(x, b.cols)


def inverse(a: RatMatrix) -> RatMatrix:
    return solve_linear(a, RatMatrix.identity(a.rows))


def laplacian(graph, resistance: Mapping[str, Scalar]) -> RatMatrix:
    """Weighted Laplacian with conductance 1/mu(e) on each non-loop edge."""
    n = len(graph.vertices)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for e in graph.edges:
        mu = as_rational(resistance[e.id])
        if mu <= 0:
            raise NonPositiveResistance(f"edge {e.id!r} has resistance {mu}")
        if e.u == e.v:
            continue
        i, j = graph.index(e.u), graph.index(e.v)
        c = 1 / mu
        rows[i][i] += c
        rows[j][j] += c
        rows[i][j] -= c
        rows[j][i] -= c
    return RatMatrix._wrap(rows, n)


# Optional recording of every (L, L+) pair produced, for auditing.
_recorders: list[list] = []
CHECK_PENROSE = False


@contextlib.contextmanager
def record_pseudoinverses():
    """Collect every ``(L, L_plus)`` computed inside the block."""
    log: list[tuple[RatMatrix, RatMatrix]] = []
    _recorders.append(log)
    try:
        yield log
    finally:
        _recorders.remove(log)


def penrose_identities(a: RatMatrix, p: RatMatrix) -> dict[str, bool]:
    ap = a @ p
    pa = p @ a
    return {
        "A P A = A": ap @ a == a,
        "P A P = P": pa @ p == p,
        "(A P)^T = A P": ap.is_symmetric(),
        "(P A)^T = P A": pa.is_symmetric(),
    }


def laplacian_pseudoinverse(lap: RatMatrix, n: int | None = None) -> RatMatrix:
    """Moore-Penrose pseudoinverse of a connected network Laplacian.

    Uses ``(L + J/n)^-1 - J/n``, exact because ker L is the constants.
    """
    n = lap.rows if n is None else n
    if lap.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} Laplacian, got {lap.shape}")
    if not lap.is_symmetric():
        raise ValueError("Laplacian must be symmetric")
    if any(sum(r, Fraction(0)) for r in lap):
        raise ValueError("Laplacian rows must sum to zero")
    if n == 0:
        return RatMatrix.zeros(0)
    j = RatMatrix.full(n, n, Fraction(1, n))
    try:
        plus = inverse(lap + j) - j
    except SingularMatrix:
        raise DisconnectedNetwork(
            f"Laplacian kernel has dimension {n - lap.rank()} > 1"
        ) from None
    for log in _recorders:
        log.append((lap, plus))
    if CHECK_PENROSE:
        bad = [k for k, ok in penrose_identities(lap, plus).items() if not ok]
        assert not bad, f"Penrose identities failed: {bad}"
    return plus
