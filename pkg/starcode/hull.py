"""Quadratic hulls of codes.

The columns of a k x n generator matrix of C, taken as points of P^{k-1},
form the point set V(C).  Evaluating the k(k+1)/2 quadratic monomials
X_i X_j (i <= j, lexicographic order) at these points gives an n x k(k+1)/2
matrix whose kernel is I2(V(C)), the space of quadratic forms vanishing on
V(C), and whose image is C * C.  Hence

    dim C*C + dim I2(V(C)) = k(k+1)/2.

The quadratic hull is the common zero set of I2(V(C)).  It is represented
here by its F_q-rational points, found by enumerating P^{k-1}(F_q); nothing
is decided about its dimension or irreducibility.
"""

from typing import List, NamedTuple, Optional, Tuple
import logging

import numpy as np

from .errors import (DegenerateSquare, DependentColumns, TooLargeToEnumerate,
                     ZeroCode)
from .field import FieldCtx
from . import families
from .families import AgCodeSpec
from . import linear_code
from .linear_code import LinearCode
from . import matfq
from .matfq import MatrixFq
from .projective import Point, normalize_columns, point_chunks

logger = logging.getLogger(__name__)

HULL_ENUMERATION_LIMIT = 2**22

ProjectivePointSet = NamedTuple('ProjectivePointSet', [
    ('ctx', FieldCtx),
    ('k', int),
    ('points', Tuple[Point, ...]),
])

QuadricIdeal = NamedTuple('QuadricIdeal', [
    ('ctx', FieldCtx),
    ('k', int),
    # Rows are coefficient vectors over `quadratic_monomials(k)`.
    ('basis', MatrixFq),
])

HullReport = NamedTuple('HullReport', [
    ('n', int),
    ('k', int),
    ('dim_square', int),
    ('dim_i2', int),
    ('num_monomials', int),
    ('exact_sequence', bool),
    ('hull_count', int),
    ('contains_code_points', bool),
    ('gamma', Optional[int]),
    ('square_at_most_3k_minus_4', bool),
    ('gamma_in_freiman_range', bool),
    # None unless the code comes from a one-point family.
    ('degree_hypotheses_hold', Optional[bool]),
    ('hull_equals_curve', Optional[bool]),
    ('ideal', QuadricIdeal),
    ('hull', Tuple[Point, ...]),
])


def quadratic_monomials(k: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(k) for j in range(i, k)]


def _monomial_values(ctx: FieldCtx, points: np.ndarray) -> np.ndarray:
    """Rows: points; columns: X_i X_j in `quadratic_monomials` order."""
    k = points.shape[1]
    i, j = np.triu_indices(k)
    return ctx.mul_arrays(points[:, i], points[:, j])


def points_from_code(code: LinearCode) -> ProjectivePointSet:
    """Normalized columns of the RREF generator.

    Raises `DependentColumns` naming the first zero column, or the first pair
    of proportional columns.
    """
    if code.k == 0:
        raise ZeroCode('the zero code has no point set')
    ctx = code.ctx
    columns = code.gen.entries
    for i in range(code.n):
        if not np.any(columns[:, i]):
            raise DependentColumns((i, i))
    normalized = normalize_columns(ctx, columns)
    first = {}  # type: dict
    points = []
    for j in range(code.n):
        point = tuple(int(x) for x in normalized[:, j])
        if point in first:
            raise DependentColumns((first[point], j))
        first[point] = j
        points.append(point)
    return ProjectivePointSet(ctx=ctx, k=code.k, points=tuple(points))


def quadric_ideal(ps: ProjectivePointSet) -> QuadricIdeal:
    values = _monomial_values(
        ps.ctx, np.array(ps.points, dtype=np.int64).reshape(-1, ps.k))
    return QuadricIdeal(
        ctx=ps.ctx, k=ps.k, basis=matfq.kernel(MatrixFq(ps.ctx, values)))


def evaluate_quadrics(ideal: QuadricIdeal, points: np.ndarray) -> np.ndarray:
    """Values of every basis quadric (columns) at every point (rows)."""
    values = _monomial_values(ideal.ctx, np.asarray(points, dtype=np.int64))
    return ideal.ctx.matmul(values, ideal.basis.entries.T)


def verify_exact_sequence(code: LinearCode) -> bool:
    ideal = quadric_ideal(points_from_code(code))
    return (linear_code.square(code).k + ideal.basis.rows ==
            len(quadratic_monomials(code.k)))


def hull_points(ideal: QuadricIdeal) -> ProjectivePointSet:
    """Rational points of P^{k-1} on which every quadric of `ideal` vanishes."""
    ctx = ideal.ctx
    if ctx.q**ideal.k > HULL_ENUMERATION_LIMIT:
        raise TooLargeToEnumerate(
            'P^%d(F_%d) has too many points to enumerate' % (ideal.k - 1, ctx.q))
    found = []  # type: List[Point]
    for chunk in point_chunks(ctx, ideal.k):
        if ideal.basis.rows:
            chunk = chunk[~np.any(evaluate_quadrics(ideal, chunk), axis=1)]
        found.extend(tuple(int(x) for x in row) for row in chunk)
    return ProjectivePointSet(ctx=ctx, k=ideal.k, points=tuple(found))


def _degree_hypotheses_hold(spec: AgCodeSpec) -> Optional[bool]:
    if spec.family not in (families.REED_SOLOMON,
                           families.HERMITIAN_ONE_POINT):
        return None
    n = len(spec.points)
    return (2 * spec.genus + 2 <= spec.divisor_degree and
            2 * spec.divisor_degree < n)


def hull_report(code: LinearCode,
                spec: Optional[AgCodeSpec] = None) -> HullReport:
    """Aggregates the hull computations for `code`.

    When `spec` describes `code`, the report also says whether the hull is
    exactly the image of the curve (or the given point set), and whether the
    degree hypotheses 2g + 2 <= deg G < n / 2 under which that is expected
    hold.  These are observations only.
    """
    ps = points_from_code(code)
    ideal = quadric_ideal(ps)
    hull = hull_points(ideal)
    k = code.k
    num_monomials = len(quadratic_monomials(k))
    dim_square = linear_code.square(code).k
    try:
        gamma = linear_code.gamma(code)  # type: Optional[int]
    except DegenerateSquare:
        gamma = None
    hull_set = set(hull.points)
    degree_hypotheses_hold = None  # type: Optional[bool]
    hull_equals_curve = None  # type: Optional[bool]
    if spec is not None:
        degree_hypotheses_hold = _degree_hypotheses_hold(spec)
        if degree_hypotheses_hold is False:
            logger.warning(
                'degree %d is outside [2g + 2, n / 2) for g = %d, n = %d; '
                'the hull need not equal the curve', spec.divisor_degree,
                spec.genus, len(spec.points))
        hull_equals_curve = hull_set == set(families.curve_points(spec))
    return HullReport(
        n=code.n,
        k=k,
        dim_square=dim_square,
        dim_i2=ideal.basis.rows,
        num_monomials=num_monomials,
        exact_sequence=dim_square + ideal.basis.rows == num_monomials,
        hull_count=len(hull.points),
        contains_code_points=hull_set.issuperset(ps.points),
        gamma=gamma,
        square_at_most_3k_minus_4=dim_square <= 3 * k - 4,
        gamma_in_freiman_range=gamma is not None and 0 < gamma <= k - 3,
        degree_hypotheses_hold=degree_hypotheses_hold,
        hull_equals_curve=hull_equals_curve,
        ideal=ideal,
        hull=hull.points)
