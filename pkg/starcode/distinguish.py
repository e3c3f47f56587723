"""Telling structured codes from random ones by the dimension of their square.

For any code of length n and dimension k, dim C*C <= min(n, k(k+1)/2), and a
random code reaches this bound with high probability.  Codes from curves have
much smaller squares (2k - 1 + g for one-point AG codes in the right range), so
any gap from the generic dimension marks the code as structured.
"""

from typing import Dict, NamedTuple, Optional
import collections
import logging

import numpy as np

from .errors import ZeroCode
from .field import FieldCtx
from . import linear_code
from .linear_code import LinearCode
from . import thread_helpers

logger = logging.getLogger(__name__)

RANDOM_LIKE = 'RandomLike'
STRUCTURED = 'Structured'

# Fraction of random trials that must reach the generic square dimension for
# the calibration parameters used in tests.
HIGH_PROBABILITY_THRESHOLD = 0.95

DistinguishReport = NamedTuple('DistinguishReport', [
    ('n', int),
    ('k', int),
    ('dim_square', int),
    ('generic_dim', int),
    ('slack', int),
    ('verdict', str),
])

AuditReport = NamedTuple('AuditReport', [
    # None when the respective code is the zero code.
    ('code', Optional[DistinguishReport]),
    ('dual', Optional[DistinguishReport]),
])


def generic_square_dimension(n: int, k: int) -> int:
    return min(n, k * (k + 1) // 2)


def distinguish(code: LinearCode) -> DistinguishReport:
    """For k = 1 the square always has the generic dimension 1."""
    if code.k == 0:
        raise ZeroCode('cannot distinguish the zero code')
    dim_square = linear_code.square(code).k
    generic_dim = generic_square_dimension(code.n, code.k)
    slack = generic_dim - dim_square
    return DistinguishReport(
        n=code.n,
        k=code.k,
        dim_square=dim_square,
        generic_dim=generic_dim,
        slack=slack,
        verdict=STRUCTURED if slack > 0 else RANDOM_LIKE)


def audit_subcode(code: LinearCode) -> AuditReport:
    """Runs `distinguish` on a public code and on its dual."""
    dual = linear_code.dual(code)
    return AuditReport(
        code=distinguish(code) if code.k else None,
        dual=distinguish(dual) if dual.k else None)


def randomized_equivalent(code: LinearCode, seed: int) -> LinearCode:
    """Applies a random coordinate permutation and full-support scaling."""
    rng = np.random.default_rng(seed)
    permutation = rng.permutation(code.n)
    scale = rng.integers(1, code.ctx.q, size=code.n)
    return linear_code.permute_and_scale(code, permutation, scale)


def random_square_experiment(ctx: FieldCtx, n: int, k: int, trials: int,
                             seed: int,
                             control: Optional[LinearCode] = None
                             ) -> Dict[int, int]:
    """Histogram {dim C*C: count} over `trials` codes.

    Trial i draws a random [n, k] code with seed `seed + i`, or, when
    `control` is given, a random equivalent of `control` with that seed.
    """
    if trials < 1:
        raise ValueError('trials must be positive, got %r' % (trials, ))
    if control is not None and (control.n, control.k) != (n, k):
        raise ValueError('control code %r does not have parameters [%d,%d]' %
                         (control, n, k))

    def run_trial(trial_seed: int) -> int:
        if control is None:
            code = linear_code.random_code(ctx, n, k, trial_seed)
        else:
            code = randomized_equivalent(control, trial_seed)
        return linear_code.square(code).k

    dims = thread_helpers.map_trials(run_trial,
                                     [seed + i for i in range(trials)])
    histogram = collections.Counter(dims)
    logger.debug('random square histogram for [%d,%d] over F_%d: %r', n, k,
                 ctx.q, dict(histogram))
    return dict(sorted(histogram.items()))


def mass_at(histogram: Dict[int, int], dim: int) -> float:
    total = sum(histogram.values())
    return histogram.get(dim, 0) / total if total else 0.0


def random_like_fraction(ctx: FieldCtx, n: int, k: int, trials: int,
                         seed: int) -> float:
    """Fraction of random [n, k] codes the distinguisher calls random-like."""
    histogram = random_square_experiment(ctx, n, k, trials, seed)
    return mass_at(histogram, generic_square_dimension(n, k))
