"""Constructors for evaluation codes: Reed-Solomon, one-point Hermitian, monomial
evaluation codes, and codes given by the columns of a projective point set.

Every constructor can also return an `AgCodeSpec`, a symbolic description
(family, field, evaluation points, divisor degree, genus, monomial basis) from
which the code is rebuilt by `evaluation_code` and from which designed
parameters are derived.

One-point Hermitian codes
=========================

The Hermitian curve over F_{q0^2} is y^q0 + y = x^(q0+1).  It has q0^3 affine
rational points plus one point at infinity P, and genus g = q0 (q0 - 1) / 2.
The Riemann-Roch space L(mP) has the basis

    x^i y^j  with  0 <= j <= q0 - 1,  i >= 0,  i q0 + j (q0 + 1) <= m,

where i q0 + j (q0 + 1) is the pole order at P.  Evaluation points are the
affine points sorted by (x encoding, y encoding); basis monomials are sorted by
pole order.  Since deg mP = m < n, evaluation is injective on L(mP) and the code
dimension equals the basis size.

The dual of C_L(mP) on all affine points is C_L((n + 2g - 2 - m)P), which
gives the dual designed distance m - 2g + 2.
"""

from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple
import logging

import numpy as np

from .errors import (BadDegree, DuplicateExponents, DuplicatePoints,
                     DuplicateProjectivePoints, SpecFormatError, TooManyPoints)
from .field import FieldCtx, field_create, prime_power
from . import linear_code
from .linear_code import LinearCode
from . import matfq
from .matfq import MatrixFq
from . import projective
from . import spec_parsing

logger = logging.getLogger(__name__)

REED_SOLOMON = 'ReedSolomon'
HERMITIAN_ONE_POINT = 'HermitianOnePoint'
MONOMIAL_EVAL = 'MonomialEval'
POINT_SET_LINEAR = 'PointSetLinear'

AgCodeSpec = NamedTuple('AgCodeSpec', [
    ('family', str),
    ('ctx', FieldCtx),
    # Field encodings for univariate families, (x, y) pairs for Hermitian codes,
    # normalized coordinate tuples for point-set codes.
    ('points', Tuple),
    ('divisor_degree', int),
    ('genus', int),
    # Exponent tuples: (e,) for univariate families, (i, j) for x^i y^j.
    ('basis', Tuple[Tuple[int, ...], ...]),
])

DesignedParams = NamedTuple('DesignedParams', [
    ('n', int),
    ('k_lower', int),
    ('k_exact', bool),
    # None when no designed distance is known (point-set codes).
    ('d_star', Optional[int]),
])


def _check_distinct_points(ctx: FieldCtx, points: Sequence[int]) -> np.ndarray:
    array = ctx.asarray(list(points))
    if array.size > ctx.q:
        raise TooManyPoints('%d points requested, F_%d has only %d' %
                            (array.size, ctx.q, ctx.q))
    if np.unique(array).size != array.size:
        raise DuplicatePoints('evaluation points are not distinct: %r' %
                              (list(points), ))
    return array


def rs_spec(ctx: FieldCtx, points: Sequence[int], k: int) -> AgCodeSpec:
    array = _check_distinct_points(ctx, points)
    if not 0 <= k <= array.size:
        raise BadDegree('dimension %d outside [0, %d]' % (k, array.size))
    return AgCodeSpec(
        family=REED_SOLOMON,
        ctx=ctx,
        points=tuple(int(x) for x in array),
        divisor_degree=k - 1,
        genus=0,
        basis=tuple((e, ) for e in range(k)))


def reed_solomon(ctx: FieldCtx, points: Sequence[int], k: int) -> LinearCode:
    """Evaluations of all polynomials of degree < k at `points`."""
    return evaluation_code(rs_spec(ctx, points, k))


def monomial_spec(ctx: FieldCtx, points: Sequence[int],
                  exponents: Sequence[int]) -> AgCodeSpec:
    array = _check_distinct_points(ctx, points)
    if len(set(exponents)) != len(exponents):
        raise DuplicateExponents('exponents are not distinct: %r' %
                                 (list(exponents), ))
    if any(e < 0 for e in exponents):
        raise BadDegree('negative exponent in %r' % (list(exponents), ))
    return AgCodeSpec(
        family=MONOMIAL_EVAL,
        ctx=ctx,
        points=tuple(int(x) for x in array),
        divisor_degree=max(exponents) if exponents else -1,
        genus=0,
        basis=tuple((e, ) for e in exponents))


def monomial_eval_code(ctx: FieldCtx, points: Sequence[int],
                       exponents: Sequence[int]) -> LinearCode:
    return evaluation_code(monomial_spec(ctx, points, exponents))


def hermitian_field(q0: int) -> FieldCtx:
    p, e = prime_power(q0)
    return field_create(p, 2 * e)


def hermitian_q0(ctx: FieldCtx) -> int:
    """q0 for the field F_{q0^2}."""
    return ctx.p**(ctx.m // 2)


def hermitian_genus(q0: int) -> int:
    return q0 * (q0 - 1) // 2


def hermitian_points(q0: int) -> List[Tuple[int, int]]:
    """All affine points of y^q0 + y = x^(q0+1), sorted by (x, y)."""
    ctx = hermitian_field(q0)
    elements = np.arange(ctx.q, dtype=np.int64)
    norm = ctx.pow_arrays(elements, q0 + 1)
    trace = ctx.add_arrays(ctx.pow_arrays(elements, q0), elements)
    points = []
    for x in range(ctx.q):
        for y in np.nonzero(trace == norm[x])[0]:
            points.append((x, int(y)))
    assert len(points) == q0**3
    return points


def hermitian_basis(q0: int, m: int) -> List[Tuple[int, int]]:
    """Exponents (i, j) of the basis x^i y^j of L(mP), by pole order."""
    basis = []
    for j in range(q0):
        i = 0
        while i * q0 + j * (q0 + 1) <= m:
            basis.append((i, j))
            i += 1
    basis.sort(key=lambda ij: ij[0] * q0 + ij[1] * (q0 + 1))
    return basis


def hermitian_spec(q0: int, m: int) -> AgCodeSpec:
    ctx = hermitian_field(q0)
    n = q0**3
    if not 0 <= m < n:
        raise BadDegree('Hermitian divisor degree %d outside [0, %d)' % (m, n))
    return AgCodeSpec(
        family=HERMITIAN_ONE_POINT,
        ctx=ctx,
        points=tuple(hermitian_points(q0)),
        divisor_degree=m,
        genus=hermitian_genus(q0),
        basis=tuple(hermitian_basis(q0, m)))


def hermitian_code(q0: int, m: int) -> Tuple[LinearCode, AgCodeSpec]:
    spec = hermitian_spec(q0, m)
    return evaluation_code(spec), spec


def point_set_spec(ctx: FieldCtx,
                   proj_points: Sequence[Sequence[int]]) -> AgCodeSpec:
    points = tuple(tuple(int(x) for x in p) for p in proj_points)
    if not points:
        raise ValueError('empty point set')
    k = len(points[0])
    for p in points:
        if len(p) != k:
            raise ValueError('points of different dimensions: %r' % (points, ))
        ctx.asarray(p)
        if not projective.is_normalized(p):
            raise ValueError('%r is not a normalized projective point' % (p, ))
    if len(set(points)) != len(points):
        raise DuplicateProjectivePoints('projective points are not distinct')
    return AgCodeSpec(
        family=POINT_SET_LINEAR,
        ctx=ctx,
        points=points,
        divisor_degree=1,
        genus=0,
        basis=tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))


def point_set_linear_code(
        ctx: FieldCtx, proj_points: Sequence[Sequence[int]]) -> LinearCode:
    """Evaluations of the linear forms at the points (columns = points)."""
    return evaluation_code(point_set_spec(ctx, proj_points))


def plane_and_line_points(ctx: FieldCtx) -> List[Tuple[int, ...]]:
    """Rational points of the plane X3 = 0 together with the line X0 = X1 = 0.

    There are q^2 + 2q + 1 of them; the line meets the plane in (0, 0, 1, 0).
    """
    plane = [p + (0, ) for p in projective.projective_points(ctx, 3)]
    line = [(0, 0) + p for p in projective.projective_points(ctx, 2)]
    return plane + [p for p in line if p[3] != 0]


def _evaluation_matrix(spec: AgCodeSpec) -> np.ndarray:
    """Rows are the basis functions evaluated at the points."""
    ctx = spec.ctx
    if spec.family == POINT_SET_LINEAR:
        return np.array(spec.points, dtype=np.int64).T.copy()
    if spec.family == HERMITIAN_ONE_POINT:
        xs = np.array([p[0] for p in spec.points], dtype=np.int64)
        ys = np.array([p[1] for p in spec.points], dtype=np.int64)
        rows = [
            ctx.mul_arrays(ctx.pow_arrays(xs, i), ctx.pow_arrays(ys, j))
            for i, j in spec.basis
        ]
    else:
        xs = np.array(spec.points, dtype=np.int64)
        rows = [ctx.pow_arrays(xs, e) for e, in spec.basis]
    if not rows:
        return np.zeros((0, len(spec.points)), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def evaluation_code(spec: AgCodeSpec) -> LinearCode:
    return linear_code.from_generator(
        MatrixFq(spec.ctx, _evaluation_matrix(spec)))


def designed_params(spec: AgCodeSpec) -> DesignedParams:
    n = len(spec.points)
    if spec.family == POINT_SET_LINEAR:
        return DesignedParams(n=n, k_lower=len(spec.basis), k_exact=False,
                              d_star=None)
    if spec.family == MONOMIAL_EVAL:
        # Distinct monomials of degree < n stay independent on n points.
        if spec.divisor_degree < n:
            return DesignedParams(n=n, k_lower=len(spec.basis), k_exact=True,
                                  d_star=n - spec.divisor_degree)
        low = [e for e, in spec.basis if e < n]
        return DesignedParams(n=n, k_lower=len(low), k_exact=False,
                              d_star=None)
    g = spec.genus
    return DesignedParams(
        n=n,
        k_lower=spec.divisor_degree + 1 - g,
        k_exact=spec.divisor_degree > 2 * g - 2,
        d_star=n - spec.divisor_degree)


def dual_designed_distance(spec: AgCodeSpec) -> Optional[int]:
    """Lower bound on the minimum distance of the dual code.

    Returns n + 1 when the dual is the zero code, and None when no bound is
    known for the family.
    """
    if spec.family == REED_SOLOMON:
        return len(spec.basis) + 1
    if spec.family == HERMITIAN_ONE_POINT:
        return max(1, spec.divisor_degree - 2 * spec.genus + 2)
    return None


def with_degree(spec: AgCodeSpec, degree: int) -> AgCodeSpec:
    """The one-point code of the same family on the same points."""
    if spec.family == REED_SOLOMON:
        return rs_spec(spec.ctx, spec.points, degree + 1)
    if spec.family == HERMITIAN_ONE_POINT:
        return hermitian_spec(hermitian_q0(spec.ctx), degree)
    raise ValueError('%s codes have no one-point divisor' % (spec.family, ))


def shamir_points(ctx: FieldCtx, n: int) -> List[int]:
    """Player points 1, ..., n - 1 followed by the secret point 0."""
    if n > ctx.q:
        raise TooManyPoints('%d points requested, F_%d has only %d' %
                            (n, ctx.q, ctx.q))
    return list(range(1, n)) + [0]


def _raw_curve_points(spec: AgCodeSpec) -> np.ndarray:
    """Images of all rational points of the curve, as columns in the basis."""
    ctx = spec.ctx
    k = len(spec.basis)
    if spec.family == POINT_SET_LINEAR:
        return _evaluation_matrix(spec)
    if spec.family == HERMITIAN_ONE_POINT:
        q0 = hermitian_q0(ctx)
        affine = spec._replace(points=tuple(hermitian_points(q0)))
        columns = _evaluation_matrix(affine)
        pole_orders = [i * q0 + j * (q0 + 1) for i, j in spec.basis]
    else:
        everywhere = spec._replace(points=tuple(range(ctx.q)))
        columns = _evaluation_matrix(everywhere)
        pole_orders = [e for e, in spec.basis]
    # The basis function of largest pole order dominates at infinity.
    infinity = np.zeros((k, 1), dtype=np.int64)
    infinity[int(np.argmax(pole_orders)), 0] = 1
    return np.hstack([columns, infinity])


def curve_points(spec: AgCodeSpec) -> List[projective.Point]:
    """Projective image of the curve in the coordinates of the code's generator.

    The code generator is the RREF of the evaluation matrix G, so its columns
    are T g for the columns g of G, where T is the inverse of G restricted to
    the pivot columns.  The curve is mapped through the same T.
    """
    ctx = spec.ctx
    raw = _evaluation_matrix(spec)
    k = raw.shape[0]
    if k == 0:
        raise ValueError('the zero code has no point set')
    pivots = matfq.rref(MatrixFq(ctx, raw)).pivots
    if len(pivots) != k:
        raise ValueError('evaluation is not injective on the basis')
    transform = matfq.inverse(MatrixFq(ctx, raw[:, pivots]))
    images = ctx.matmul(transform.entries, _raw_curve_points(spec))
    result = []  # type: List[projective.Point]
    seen = set()
    for column in images.T:
        if not np.any(column):
            continue
        point = projective.normalize_point(ctx, column)
        if point not in seen:
            seen.add(point)
            result.append(point)
    return result


# Spec strings.


def _take_int(params: Dict[str, str], key: str,
              default: Optional[int] = None) -> int:
    if key not in params:
        if default is None:
            raise SpecFormatError('missing parameter %r' % (key, ))
        return default
    values = spec_parsing.parse_int_list(params.pop(key))
    if len(values) != 1:
        raise SpecFormatError('parameter %r must be a single integer' % (key, ))
    return values[0]


def _take_field(params: Dict[str, str]) -> FieldCtx:
    if 'q' not in params:
        raise SpecFormatError('missing parameter %r' % ('q', ))
    return spec_parsing.parse_field(params.pop('q'))


def build_from_spec_string(
        x: str) -> Tuple[LinearCode, Optional[AgCodeSpec]]:
    """Builds a code from a string such as "rs:q=7,n=7,k=3".

    Families:

      rs:q=Q,k=K[,n=N][,points=A|B|...]   points default to 0, ..., n - 1
      shamir:q=Q,n=N,k=K                  points 1, ..., n - 1, 0
      herm:q0=Q0,m=M
      monomial:q=Q,exps=E|E|...[,n=N]
      planeline:q=Q
      random:q=Q,n=N,k=K[,seed=S]

    Random codes carry no symbolic description, so the second element of the
    result is None for them.
    """
    parsed = spec_parsing.parse_code_spec(x)
    params = dict(parsed.params)
    family = parsed.family
    spec = None  # type: Optional[AgCodeSpec]
    code = None  # type: Optional[LinearCode]
    if family == 'rs':
        ctx = _take_field(params)
        if 'points' in params:
            points = spec_parsing.parse_int_list(params.pop('points'), '|')
            n = _take_int(params, 'n', len(points))
            if n != len(points):
                raise SpecFormatError('n=%d but %d points given' %
                                      (n, len(points)))
        else:
            n = _take_int(params, 'n', ctx.q)
            points = list(range(n))
        spec = rs_spec(ctx, points, _take_int(params, 'k'))
    elif family == 'shamir':
        ctx = _take_field(params)
        n = _take_int(params, 'n')
        spec = rs_spec(ctx, shamir_points(ctx, n), _take_int(params, 'k'))
    elif family == 'herm':
        spec = hermitian_spec(_take_int(params, 'q0'), _take_int(params, 'm'))
    elif family == 'monomial':
        ctx = _take_field(params)
        if 'exps' not in params:
            raise SpecFormatError('missing parameter %r' % ('exps', ))
        exponents = spec_parsing.parse_int_list(params.pop('exps'), '|')
        n = _take_int(params, 'n', ctx.q)
        spec = monomial_spec(ctx, list(range(n)), exponents)
    elif family == 'planeline':
        ctx = _take_field(params)
        spec = point_set_spec(ctx, plane_and_line_points(ctx))
    elif family == 'random':
        ctx = _take_field(params)
        code = linear_code.random_code(ctx, _take_int(params, 'n'),
                                       _take_int(params, 'k'),
                                       seed=_take_int(params, 'seed', 0))
    else:
        raise SpecFormatError('unknown code family %r in %r' % (family, x))
    if params:
        raise SpecFormatError('unknown parameters %r in %r' %
                              (sorted(params), x))
    if code is None:
        assert spec is not None
        code = evaluation_code(spec)
    logger.debug('built %r from %r', code, x)
    return code, spec
