"""Decoding with error-correcting pairs.

Given the code C to decode, an auxiliary code A of the same length and a
received word y = c + e, the locator space is

    K = {a in A : a * y in A * C}.

Every a in A vanishing on the support of e lies in K, since then
a * y = a * c.  When

    (i)   dim A > t,
    (ii)  d(A * C) > t,
    (iii) d(A) + d(C) > n,

K is exactly the subcode of A vanishing on supp(e) whenever wt(e) <= t, its
common zeros J contain supp(e), and the columns of a parity-check matrix of C
indexed by J are independent.  The error is then the unique solution of
H e^T = H y^T supported on J.

When only (i) and dim A - t + dim A * C <= n hold, the decoder still runs but
may fail on some error patterns.  Every returned codeword is verified: a
`DECODED` outcome always satisfies y - c = e, c in C and wt(e) <= t.

For an AG code C = C_L(X, P, G), the auxiliary code C_L(X, P, F) with
deg F = t + g satisfies the conditions when 2t <= d* - 1 - g, where
d* = n - deg G.

The same data also gives the pair (A, B) with B = (A * C)^perp, which satisfies
A * B orthogonal to C; `error_correcting_pair_b` computes it as a check.
"""

from typing import FrozenSet, NamedTuple, Optional
import logging

import numpy as np

from .errors import (EmptyLocator, GuaranteeViolation, LengthMismatch,
                     NoSolution, RadiusTooLarge)
from . import families
from .families import AgCodeSpec
from . import linear_code
from .linear_code import LinearCode
from . import matfq
from .matfq import MatrixFq, Vector
from . import thread_helpers

logger = logging.getLogger(__name__)

GUARANTEE_FULL = 'Full'
GUARANTEE_RELAXED = 'Relaxed'
GUARANTEE_NONE = 'None'

DECODED = 'Decoded'
FAILURE = 'Failure'

# Lower bounds on minimum distances; None means compute exactly.
DistanceBounds = NamedTuple('DistanceBounds', [
    ('aux', Optional[int]),
    ('code', Optional[int]),
    ('aux_code', Optional[int]),
])

NO_BOUNDS = DistanceBounds(aux=None, code=None, aux_code=None)

DecodeInstance = NamedTuple('DecodeInstance', [
    ('code', LinearCode),
    ('aux', LinearCode),
    ('aux_code', LinearCode),
    ('t', int),
    ('guarantee', str),
])

DecodeOutcome = NamedTuple('DecodeOutcome', [
    ('status', str),
    ('codeword', Optional[np.ndarray]),
    ('error', Optional[np.ndarray]),
    ('locator_dim', int),
    ('located', FrozenSet[int]),
])

FailureRateReport = NamedTuple('FailureRateReport', [
    ('weight', int),
    ('trials', int),
    ('decoded', int),
    ('failures', int),
    ('failure_rate', float),
])


def _failure(locator_dim: int = 0,
             located: FrozenSet[int] = frozenset()) -> DecodeOutcome:
    return DecodeOutcome(
        status=FAILURE,
        codeword=None,
        error=None,
        locator_dim=locator_dim,
        located=located)


def _distance(code: LinearCode, bound: Optional[int]) -> int:
    if bound is not None:
        return bound
    if code.k == 0:
        return code.n + 1
    return linear_code.min_distance(code)


def _guarantee(code: LinearCode, aux: LinearCode, aux_code: LinearCode, t: int,
               bounds: DistanceBounds) -> str:
    if aux.k <= t:
        return GUARANTEE_NONE
    if (_distance(aux_code, bounds.aux_code) > t and
            _distance(aux, bounds.aux) + _distance(code, bounds.code) > code.n):
        return GUARANTEE_FULL
    if aux.k - t + aux_code.k <= code.n:
        return GUARANTEE_RELAXED
    return GUARANTEE_NONE


def check_conditions(code: LinearCode, aux: LinearCode, t: int,
                     bounds: DistanceBounds = NO_BOUNDS) -> str:
    """Returns GUARANTEE_FULL, GUARANTEE_RELAXED or GUARANTEE_NONE.

    Distances missing from `bounds` are computed exactly, which raises
    `TooLargeToEnumerate` for large codes.
    """
    return _guarantee(code, aux, linear_code.star_product(aux, code), t, bounds)


def make_instance(code: LinearCode, aux: LinearCode, t: int,
                  bounds: DistanceBounds = NO_BOUNDS) -> DecodeInstance:
    aux_code = linear_code.star_product(aux, code)
    guarantee = _guarantee(code, aux, aux_code, t, bounds)
    logger.debug('decoder for %r with aux %r, t=%d: %s', code, aux, t,
                 guarantee)
    return DecodeInstance(
        code=code, aux=aux, aux_code=aux_code, t=t, guarantee=guarantee)


def locator_space(y: Vector, aux: LinearCode, aux_code: LinearCode) -> MatrixFq:
    """RREF basis of {a in aux : a * y in aux_code}.

    With a = m G_A, the condition reads H_AC (G_A * y)^T m^T = 0.
    """
    ctx = aux.ctx
    y = ctx.asarray(y)
    if y.shape != (aux.n, ):
        raise LengthMismatch('received word of length %d, expected %d' %
                             (y.shape[0] if y.ndim else 0, aux.n))
    if aux.k == 0:
        return MatrixFq.zeros(ctx, 0, aux.n)
    scaled = ctx.mul_arrays(aux.gen.entries, y[None, :])
    checks = aux_code.parity_check().entries
    system = ctx.matmul(checks, scaled.T)
    messages = matfq.kernel(MatrixFq(ctx, system))
    if messages.rows == 0:
        return MatrixFq.zeros(ctx, 0, aux.n)
    return matfq.row_space(
        MatrixFq(ctx, ctx.matmul(messages.entries, aux.gen.entries)))


def common_zeros(k: MatrixFq) -> FrozenSet[int]:
    """Coordinates on which every row of `k` vanishes."""
    if k.rows == 0:
        raise EmptyLocator('the locator space is zero')
    return frozenset(int(i) for i in np.nonzero(~np.any(k.entries, axis=0))[0])


def solve_error(y: Vector, code: LinearCode, located: FrozenSet[int],
                t: int) -> DecodeOutcome:
    """Finds the unique e supported on `located` with H e^T = H y^T."""
    ctx = code.ctx
    y = ctx.asarray(y)
    checks = code.parity_check()
    syndrome = checks.apply(y)
    columns = sorted(located)
    error = np.zeros(code.n, dtype=np.int64)
    if columns:
        restricted = checks.select_columns(columns)
        try:
            values = matfq.solve(restricted, syndrome)
        except NoSolution:
            return _failure(located=located)
        if matfq.kernel(restricted).rows:
            logger.debug('error values on %r are not unique', columns)
            return _failure(located=located)
        error[columns] = values
    elif np.any(syndrome):
        return _failure(located=located)
    if linear_code.weight(error) > t:
        return _failure(located=located)
    codeword = ctx.sub_arrays(y, error)
    return DecodeOutcome(
        status=DECODED,
        codeword=codeword,
        error=error,
        locator_dim=0,
        located=located)


def decode_with(instance: DecodeInstance, y: Vector) -> DecodeOutcome:
    if instance.guarantee == GUARANTEE_NONE:
        raise GuaranteeViolation(
            'no decoding guarantee for t=%d with aux %r' %
            (instance.t, instance.aux))
    code = instance.code
    y = code.ctx.asarray(y)
    locator = locator_space(y, instance.aux, instance.aux_code)
    logger.debug('locator space has dimension %d', locator.rows)
    try:
        located = common_zeros(locator)
    except EmptyLocator:
        return _failure()
    outcome = solve_error(y, code, located, instance.t)._replace(
        locator_dim=locator.rows)
    if outcome.status == DECODED:
        assert outcome.codeword is not None and outcome.error is not None
        assert code.contains(outcome.codeword)
        assert linear_code.weight(outcome.error) <= instance.t
        assert np.array_equal(
            code.ctx.add_arrays(outcome.codeword, outcome.error), y)
    return outcome


def decode(code: LinearCode, aux: LinearCode, y: Vector, t: int,
           bounds: DistanceBounds = NO_BOUNDS) -> DecodeOutcome:
    return decode_with(make_instance(code, aux, t, bounds), y)


def error_correcting_pair_b(aux: LinearCode, code: LinearCode) -> LinearCode:
    """B = (A * C)^perp; A * B is then orthogonal to C."""
    b = linear_code.dual(linear_code.star_product(aux, code))
    assert linear_code.is_subcode(
        linear_code.star_product(aux, b), linear_code.dual(code))
    return b


def max_radius(spec: AgCodeSpec) -> int:
    """Largest t with 2t <= d* - 1 - g."""
    d_star = families.designed_params(spec).d_star
    assert d_star is not None
    return max(-1, (d_star - 1 - spec.genus) // 2)


def auxiliary_spec(spec: AgCodeSpec, t: int) -> AgCodeSpec:
    if spec.family not in (families.REED_SOLOMON,
                           families.HERMITIAN_ONE_POINT):
        raise ValueError('no auxiliary code for %s codes' % (spec.family, ))
    if t < 0 or t > max_radius(spec):
        raise RadiusTooLarge('radius %d exceeds (d* - 1 - g) / 2 = %d' %
                             (t, max_radius(spec)))
    return families.with_degree(spec, t + spec.genus)


def auxiliary_for_ag(spec: AgCodeSpec, t: int) -> LinearCode:
    """C_L(X, P, F) with deg F = t + g on the points of `spec`."""
    return families.evaluation_code(auxiliary_spec(spec, t))


def ag_instance(spec: AgCodeSpec, t: int) -> DecodeInstance:
    """Decoder for an AG code using designed distances as bounds."""
    aux_spec = auxiliary_spec(spec, t)
    n = len(spec.points)
    bounds = DistanceBounds(
        aux=n - aux_spec.divisor_degree,
        code=n - spec.divisor_degree,
        aux_code=max(1, n - aux_spec.divisor_degree - spec.divisor_degree))
    return make_instance(
        families.evaluation_code(spec),
        families.evaluation_code(aux_spec), t, bounds)


def relaxed_failure_rate(instance: DecodeInstance, weight: int, trials: int,
                         seed: int) -> FailureRateReport:
    """Decodes random codewords plus random errors of exactly `weight`.

    Trial i uses the seed `seed + i`.
    """
    code = instance.code
    ctx = code.ctx
    if not 0 <= weight <= code.n:
        raise ValueError('error weight %d outside [0, %d]' % (weight, code.n))

    def run_trial(trial_seed: int) -> bool:
        rng = np.random.default_rng(trial_seed)
        message = rng.integers(0, ctx.q, size=code.k)
        codeword = code.encode(message)
        error = np.zeros(code.n, dtype=np.int64)
        positions = rng.choice(code.n, size=weight, replace=False)
        error[positions] = rng.integers(1, ctx.q, size=weight)
        outcome = decode_with(instance, ctx.add_arrays(codeword, error))
        if outcome.status != DECODED:
            return False
        if not np.array_equal(outcome.error, error):
            # A different codeword within distance t; only possible beyond
            # half the minimum distance.
            logger.info('decoded to a different codeword in trial seed %d',
                        trial_seed)
        return True

    results = thread_helpers.map_trials(run_trial,
                                        [seed + i for i in range(trials)])
    decoded = sum(results)
    return FailureRateReport(
        weight=weight,
        trials=trials,
        decoded=decoded,
        failures=trials - decoded,
        failure_rate=(trials - decoded) / trials if trials else 0.0)
