"""Height-jump multiplicities and the checks built around them.

For a labelled graph, degree-zero divisors D, E and a test curve with
orders m, the jump is

    gr(G, m.l; D, E) - sum_i gr(G, m.l_i; D, E)

where ``l_i`` keeps only the i-th exponent of every label.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NonZeroDegree, NotSymmetric, UnknownVertex
from .graph import MultiGraph, require_connected
from .green import CombinatorialDivisor, GreenKernel, green_kernel
from .labels import (
    AlignmentVerdict,
    LabelledGraph,
    OrderVector,
    is_aligned,
    pullback_orders,
    restrict,
)
from .ratlin import RatMatrix, solve_linear


@dataclass(frozen=True)
class SectionDivisor:
    """Integer combination of sections, each meeting one component (vertex)."""

    supports: tuple[tuple[str, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "supports", tuple((v, int(d)) for v, d in self.supports))

    @property
    def degree(self) -> int:
        return sum(d for _, d in self.supports)


def to_combinatorial(d: SectionDivisor, g: MultiGraph) -> CombinatorialDivisor:
    if d.degree != 0:
        raise NonZeroDegree(f"section divisor has degree {d.degree}")
    w: dict[str, int] = {}
    for v, c in d.supports:
        if not g.has_vertex(v):
            raise UnknownVertex(f"divisor supported on unknown vertex {v!r}")
        w[v] = w.get(v, 0) + c
    return CombinatorialDivisor(w)


DivisorArg = Union[SectionDivisor, CombinatorialDivisor]


def _divisor(d: DivisorArg, g: MultiGraph) -> CombinatorialDivisor:
    if isinstance(d, SectionDivisor):
        return to_combinatorial(d, g)
    d = d if isinstance(d, CombinatorialDivisor) else CombinatorialDivisor(d)
    if not d.is_degree_zero:
        raise NonZeroDegree(f"combinatorial divisor has degree {d.degree}")
    d.vector(g)
    return d


@dataclass(frozen=True)
class JumpForm:
    """The r+1 Green's kernels behind the jump, for one (graph, orders) pair."""

    lg: LabelledGraph
    orders: OrderVector
    full: GreenKernel
    singles: tuple[GreenKernel, ...]

    @classmethod
    def build(cls, lg: LabelledGraph, m: OrderVector) -> "JumpForm":
        lg.require_canonical()
        require_connected(lg.graph)
        full = green_kernel(lg.graph, pullback_orders(lg, m))
        singles = tuple(
            green_kernel(lg.graph, pullback_orders(restrict(lg, [i]), m))
            for i in range(len(lg.basis))
        )
        return cls(lg, m, full, singles)

    def terms(self, d: CombinatorialDivisor, e: CombinatorialDivisor) -> tuple[Fraction, tuple[Fraction, ...]]:
        return self.full.pair(d, e), tuple(k.pair(d, e) for k in self.singles)

    def value(self, d: CombinatorialDivisor, e: CombinatorialDivisor) -> Fraction:
        full, singles = self.terms(d, e)
        return full - sum(singles, Fraction(0))

    def matrix(self) -> RatMatrix:
        """The jump as a bilinear form on all vertex weightings."""
        m = self.full.matrix()
        for k in self.singles:
            m = m - k.matrix()
        return m


@dataclass(frozen=True)
class JumpResult:
    value: Fraction
    full: Fraction
    singles: tuple[Fraction, ...]
    alignment: AlignmentVerdict | None = field(default=None, compare=False)

    @property
    def per_term(self) -> dict:
        return {"full": self.full, "single": self.singles}


def height_jump(
    lg: LabelledGraph,
    d: DivisorArg,
    e: DivisorArg,
    m: OrderVector,
    check_alignment: bool = True,
) -> JumpResult:
    form = JumpForm.build(lg, m)
    d, e = _divisor(d, lg.graph), _divisor(e, lg.graph)
    full, singles = form.terms(d, e)
    verdict = is_aligned(lg) if check_alignment else None
    return JumpResult(full - sum(singles, Fraction(0)), full, singles, verdict)


def divisor_basis(g: MultiGraph) -> list[CombinatorialDivisor]:
    """u_i - u_0 for i >= 1, a basis of the degree-zero divisors."""
    u0 = g.vertices[0]
    return [CombinatorialDivisor.difference(u, u0) for u in g.vertices[1:]]


def jump_gram(lg: LabelledGraph, m: OrderVector) -> RatMatrix:
    form = JumpForm.build(lg, m)
    basis = divisor_basis(lg.graph)
    n = len(basis)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = form.value(basis[i], basis[j])
    return RatMatrix(rows, cols=n)


@dataclass(frozen=True)
class PSDCertificate:
    """Outcome of the exact PSD test.

    When ``psd`` is true, ``perm``, ``lower`` and ``diag`` satisfy
    ``A[perm][:, perm] == lower @ diag(diag) @ lower.T``.  Otherwise
    ``witness`` is a vector with ``witness^T A witness < 0``.
    """

    psd: bool
    perm: tuple[int, ...] = ()
    lower: RatMatrix | None = None
    diag: tuple[Fraction, ...] = ()
    witness: tuple[Fraction, ...] | None = None

    def __bool__(self) -> bool:
        return self.psd

    def verify(self, a: RatMatrix) -> bool:
        if not self.psd:
            return a.bilinear(self.witness, self.witness) < 0
        n = a.rows
        permuted = a.submatrix(self.perm, self.perm)
        d = RatMatrix([[self.diag[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n)
        return self.lower @ d @ self.lower.T() == permuted


def _lift_witness(a: RatMatrix, perm: list[int], k: int, y: list[Fraction]) -> tuple[Fraction, ...]:
    # Extend y on the uneliminated block so that x^T A x equals y^T S y,
    # S the Schur complement: x_P = -A_PP^{-1} A_PR y.
    n = a.rows
    p_idx, r_idx = perm[:k], perm[k:]
    x = [Fraction(0)] * n
    for pos, i in enumerate(r_idx):
        x[i] = y[pos]
    if k:
        a_pr = a.submatrix(p_idx, r_idx)
        rhs = [-sum((a_pr[i, j] * y[j] for j in range(len(r_idx))), Fraction(0)) for i in range(k)]
        xp = solve_linear(a.submatrix(p_idx, p_idx), rhs)
        for pos, i in enumerate(p_idx):
            x[i] = xp[pos]
    return tuple(x)


def check_psd(a: RatMatrix) -> PSDCertificate:
    """Exact PSD decision by symmetric-pivoted LDL^T."""
    if not a.is_symmetric():
        raise NotSymmetric("check_psd needs a symmetric matrix")
    n = a.rows
    w = a.tolist()
    perm = list(range(n))
    low = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    diag = [Fraction(0)] * n
    for k in range(n):
        rest = range(k, n)
        neg = next((i for i in rest if w[i][i] < 0), None)
        if neg is not None:
            y = [Fraction(int(i == neg)) for i in rest]
            return PSDCertificate(False, witness=_lift_witness(a, perm, k, y))
        p = max(rest, key=lambda i: w[i][i])
        if w[p][p] == 0:
            for i, j in itertools.combinations(rest, 2):
                if w[i][j]:
                    sign = 1 if w[i][j] > 0 else -1
                    y = [Fraction(int(t == i) - sign * int(t == j)) for t in rest]
                    return PSDCertificate(False, witness=_lift_witness(a, perm, k, y))
            break
        if p != k:
            w[k], w[p] = w[p], w[k]
            for row in w:
                row[k], row[p] = row[p], row[k]
            perm[k], perm[p] = perm[p], perm[k]
            low[k][:k], low[p][:k] = low[p][:k], low[k][:k]
        d = w[k][k]
        diag[k] = d
        for i in range(k + 1, n):
            low[i][k] = w[i][k] / d
        for i in range(k + 1, n):
            li = low[i][k]
            if li:
                wk = w[k]
                wi = w[i]
                for j in range(k + 1, n):
                    wi[j] -= li * wk[j]
        for i in range(k + 1, n):
            w[i][k] = w[k][i] = Fraction(0)
    return PSDCertificate(True, tuple(perm), RatMatrix(low, cols=n), tuple(diag))


@dataclass
class SweepReport:
    rows: list[tuple[tuple[int, ...], Fraction]]
    face_rows: list[tuple[tuple[int, ...], Fraction]]
    homogeneity: list[tuple[tuple[int, ...], int, bool]]

    def _all(self) -> list[Fraction]:
        return [v for _, v in self.rows] + [v for _, v in self.face_rows]

    @property
    def minimum(self) -> Fraction | None:
        vals = [v for _, v in self.rows]
        return min(vals) if vals else None

    @property
    def maximum(self) -> Fraction | None:
        vals = [v for _, v in self.rows]
        return max(vals) if vals else None

    @property
    def all_nonnegative(self) -> bool:
        return all(v >= 0 for v in self._all())

    @property
    def all_zero(self) -> bool:
        return all(v == 0 for v in self._all())

    @property
    def zero_locus(self) -> list[tuple[int, ...]]:
        return [m for m, v in self.rows + self.face_rows if v == 0]


def _jump_at(args) -> Fraction:
    lg, d, e, orders = args
    return height_jump(lg, d, e, OrderVector(lg.basis, orders), check_alignment=False).value


def sweep(
    lg: LabelledGraph,
    d: DivisorArg,
    e: DivisorArg,
    max_order: int,
    include_faces: bool = True,
    spot_checks: int = 3,
    lambdas: Sequence[int] = (2, 3),
    workers: int = 1,
) -> SweepReport:
    """Evaluate the jump over the order grid {1..max_order}^r.

    Faces (grid points with some zero order, other than the origin) are
    evaluated separately when ``include_faces``.  Rows come back in
    lexicographic order of m whatever ``workers`` is.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    d, e = _divisor(d, lg.graph), _divisor(e, lg.graph)
    r = len(lg.basis)
    interior = list(itertools.product(range(1, max_order + 1), repeat=r))
    faces = []
    if include_faces:
        faces = [m for m in itertools.product(range(0, max_order + 1), repeat=r)
                 if 0 in m and any(m)]
    points = interior + faces
    jobs = [(lg, d, e, m) for m in points]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            values = list(pool.map(_jump_at, jobs))
    else:
        values = [_jump_at(j) for j in jobs]
    table = dict(zip(points, values))
    homog = []
    for m in interior[:spot_checks]:
        for lam in lambdas:
            scaled = tuple(lam * x for x in m)
            homog.append((m, lam, _jump_at((lg, d, e, scaled)) == lam * table[m]))
    return SweepReport(
        [(m, table[m]) for m in interior], [(m, table[m]) for m in faces], homog
    )


def find_positive_jump(
    lg: LabelledGraph, max_order: int = 3, pairs: Iterable[tuple[str, str]] | None = None
) -> tuple[CombinatorialDivisor, tuple[int, ...], Fraction] | None:
    """Search D = E = p - q and orders in {1..max_order}^r for a positive jump.

    With ``pairs`` unset, the endpoints of the offending edges reported by
    :func:`is_aligned` are tried first, then every vertex pair.
    """
    if pairs is None:
        verdict = is_aligned(lg)
        first = []
        if not verdict.aligned:
            for eid in verdict.edges:
                edge = lg.graph.edge(eid)
                first.append((edge.u, edge.v))
        pairs = first + list(itertools.combinations(lg.graph.vertices, 2))
    r = len(lg.basis)
    forms = {m: JumpForm.build(lg, OrderVector(lg.basis, m))
             for m in itertools.product(range(1, max_order + 1), repeat=r)}
    for p, q in pairs:
        dd = CombinatorialDivisor.difference(p, q)
        for m, form in forms.items():
            val = form.value(dd, dd)
            if val > 0:
                return dd, m, val
    return None
