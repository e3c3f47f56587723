"""Linear codes over finite fields and their star-product arithmetic.

A `LinearCode` is a subspace of F_q^n stored as its canonical generator: the
nonzero rows of the reduced row echelon form.  Two codes are equal exactly
when their generators are equal as matrices, so subspace equality,
containment and the like all reduce to exact matrix comparisons.

The star (component-wise, Schur) product of two codes A and B is the span of
all products a * b with a in A and b in B.  By bilinearity it suffices to take
the products of generator rows.

Degeneracy
==========

A code is degenerate when it is the direct sum of nonzero subcodes with
pairwise disjoint supports.  The finest such decomposition is computed by a
union-find over the supports of the RREF generator rows.  This is exact: if
C = C1 + C2 with disjoint supports, every RREF row lies wholly in C1 or in C2,
because its component in the other summand is a codeword of that summand
which vanishes on all of the summand's pivot columns, and is therefore zero.
"""

from typing import AbstractSet, Iterator, List, NamedTuple, Optional, Sequence
import collections
import logging
import threading

import cachetools
import numpy as np

from .errors import (ContextMismatch, DegenerateSquare, LengthMismatch,
                     NotAnExtension, ShapeMismatch, TooLargeToEnumerate,
                     ZeroCode)
from .field import FieldCtx
from . import matfq
from .matfq import MatrixFq, Vector

logger = logging.getLogger(__name__)

# Largest number of codewords any exhaustive enumeration will visit.
ENUMERATION_LIMIT = 2**20

_ENUMERATION_CHUNK = 2**14


class LinearCode(object):
    """A subspace of F_q^n held as its RREF generator matrix.

    Construct codes with `from_generator`; the constructor itself trusts that
    `gen` is already in RREF with independent rows.
    """

    __slots__ = ('gen', )

    def __init__(self, gen: MatrixFq) -> None:
        self.gen = gen

    @property
    def ctx(self) -> FieldCtx:
        return self.gen.ctx

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearCode) and self.gen == other.gen

    def __hash__(self) -> int:
        return hash(self.gen)

    def __repr__(self) -> str:
        return 'LinearCode(F_%d, [%d,%d])' % (self.ctx.q, self.n, self.k)

    def contains(self, v: Vector) -> bool:
        v = self.ctx.asarray(v)
        if v.shape != (self.n, ):
            raise LengthMismatch('vector of length %d, code of length %d' %
                                 (v.shape[0] if v.ndim else 0, self.n))
        return matfq.membership(v, self.gen)

    def encode(self, message: Vector) -> np.ndarray:
        message = self.ctx.asarray(message)
        if message.shape != (self.k, ):
            raise LengthMismatch('message of length %d, code of dimension %d' %
                                 (message.shape[0] if message.ndim else 0,
                                  self.k))
        return self.ctx.matmul(message.reshape(1, -1),
                               self.gen.entries).reshape(-1)

    def num_codewords(self) -> int:
        return self.ctx.q**self.k

    def codeword_chunks(self) -> Iterator[np.ndarray]:
        """Yields every codeword exactly once, as rows of 2-d arrays.

        Codewords are produced in message order: message index i has digits
        (i mod q, i // q mod q, ...) as its coordinates.
        """
        total = self.num_codewords()
        if total > ENUMERATION_LIMIT:
            raise TooLargeToEnumerate(
                '%r has %d^%d codewords, more than the limit of %d' %
                (self, self.ctx.q, self.k, ENUMERATION_LIMIT))
        q = self.ctx.q
        powers = q**np.arange(self.k, dtype=np.int64)
        for start in range(0, total, _ENUMERATION_CHUNK):
            index = np.arange(start, min(total, start + _ENUMERATION_CHUNK),
                              dtype=np.int64)
            messages = (index[:, None] // powers[None, :]) % q
            yield self.ctx.matmul(messages, self.gen.entries)

    def codewords(self) -> np.ndarray:
        """All codewords as the rows of one array, in message order."""
        chunks = list(self.codeword_chunks())
        return np.vstack(chunks)

    def parity_check(self) -> MatrixFq:
        return dual(self).gen


DegeneracyResult = NamedTuple('DegeneracyResult', [
    ('degenerate', bool),
    ('components', List[LinearCode]),
])


def from_generator(m: MatrixFq) -> LinearCode:
    return LinearCode(matfq.row_space(m))


def zero_code(ctx: FieldCtx, n: int) -> LinearCode:
    return LinearCode(MatrixFq.zeros(ctx, 0, n))


def full_space(ctx: FieldCtx, n: int) -> LinearCode:
    return LinearCode(MatrixFq.identity(ctx, n))


def _check_same_space(a: LinearCode, b: LinearCode) -> None:
    if a.ctx != b.ctx:
        raise ContextMismatch('codes over F_%d and F_%d' % (a.ctx.q, b.ctx.q))
    if a.n != b.n:
        raise LengthMismatch('codes of length %d and %d' % (a.n, b.n))


def weight(v: Vector) -> int:
    """Hamming weight."""
    return int(np.count_nonzero(np.asarray(v)))


_cache_lock = threading.RLock()

dual_cache = cachetools.LFUCache(maxsize=256)  # type: cachetools.Cache
square_cache = cachetools.LFUCache(maxsize=256)  # type: cachetools.Cache
min_distance_cache = cachetools.LFUCache(maxsize=1024)  # type: cachetools.Cache


@cachetools.cached(cache=dual_cache, lock=_cache_lock)
def dual(code: LinearCode) -> LinearCode:
    """The orthogonal complement under sum(x_i * y_i)."""
    return LinearCode(matfq.kernel(code.gen))


@cachetools.cached(cache=min_distance_cache, lock=_cache_lock)
def min_distance(code: LinearCode) -> int:
    """Exact minimum distance by exhaustive enumeration of the codewords."""
    if code.k == 0:
        raise ZeroCode('the zero code has no minimum distance')
    best = min(weight(row) for row in code.gen.entries)
    for chunk in code.codeword_chunks():
        weights = np.count_nonzero(chunk, axis=1)
        nonzero = weights[weights > 0]
        if nonzero.size:
            best = min(best, int(nonzero.min()))
        if best == 1:
            break
    logger.debug('min_distance(%r) = %d', code, best)
    return best


def star_product(a: LinearCode, b: LinearCode) -> LinearCode:
    _check_same_space(a, b)
    ctx = a.ctx
    products = ctx.mul_arrays(a.gen.entries[:, None, :],
                              b.gen.entries[None, :, :]).reshape(-1, a.n)
    return from_generator(MatrixFq(ctx, products))


@cachetools.cached(cache=square_cache, lock=_cache_lock)
def square(code: LinearCode) -> LinearCode:
    rows = code.gen.entries
    i, j = np.triu_indices(code.k)
    products = code.ctx.mul_arrays(rows[i], rows[j]).reshape(-1, code.n)
    return from_generator(MatrixFq(code.ctx, products))


def star_power(code: LinearCode, t: int) -> LinearCode:
    if t < 1:
        raise ValueError('star power exponent must be positive, got %r' % (t, ))
    result = code
    for _ in range(t - 1):
        result = star_product(result, code)
    return result


def intersection(a: LinearCode, b: LinearCode) -> LinearCode:
    _check_same_space(a, b)
    return LinearCode(matfq.row_space_intersection(a.gen, b.gen))


def is_subcode(a: LinearCode, b: LinearCode) -> bool:
    """Whether `a` is contained in `b`."""
    _check_same_space(a, b)
    if a.k == 0:
        return True
    return matfq.rank(b.gen.vstack(a.gen)) == b.k


def is_degenerate(code: LinearCode) -> DegeneracyResult:
    if code.k == 0:
        raise ZeroCode('degeneracy is undefined for the zero code')
    rows = code.gen.entries
    parent = list(range(code.k))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner = {}  # type: dict
    for i in range(code.k):
        for c in np.nonzero(rows[i])[0]:
            c = int(c)
            if c in owner:
                ri, rj = find(owner[c]), find(i)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
            else:
                owner[c] = i

    groups = collections.OrderedDict()  # type: collections.OrderedDict
    for i in range(code.k):
        groups.setdefault(find(i), []).append(i)
    # Any subset of RREF rows is again in RREF.
    components = [
        LinearCode(MatrixFq(code.ctx, rows[indices]))
        for indices in groups.values()
    ]
    return DegeneracyResult(len(components) > 1, components)


def gamma(code: LinearCode) -> int:
    """dim(C*C) - (2 dim C - 1); requires a non-degenerate square."""
    sq = square(code)
    if is_degenerate(sq).degenerate:
        raise DegenerateSquare('the square of %r is degenerate' % (code, ))
    return sq.k - (2 * code.k - 1)


def _check_coordinates(code: LinearCode, coordinates: AbstractSet[int]) -> None:
    for i in coordinates:
        if not 0 <= i < code.n:
            raise ShapeMismatch('coordinate %d out of range for length %d' %
                                (i, code.n))


def puncture(code: LinearCode, coordinates: AbstractSet[int]) -> LinearCode:
    """Deletes the given coordinates."""
    _check_coordinates(code, coordinates)
    keep = [i for i in range(code.n) if i not in coordinates]
    return from_generator(code.gen.select_columns(keep))


def shorten(code: LinearCode, coordinates: AbstractSet[int],
            keep_length: bool = False) -> LinearCode:
    """The subcode vanishing on `coordinates`.

    With `keep_length`, the subcode is returned at the full length n;
    otherwise the (all-zero) coordinates are deleted.
    """
    _check_coordinates(code, coordinates)
    if not coordinates:
        return code
    columns = sorted(coordinates)
    # Messages m with (m G)_I = 0 form the kernel of G_I^T.
    messages = matfq.kernel(code.gen.select_columns(columns).transpose())
    subcode = from_generator(
        MatrixFq(code.ctx,
                 code.ctx.matmul(messages.entries, code.gen.entries))
        if messages.rows else MatrixFq.zeros(code.ctx, 0, code.n))
    if keep_length:
        return subcode
    return puncture(subcode, coordinates)


def subfield_subcode(code: LinearCode, target: FieldCtx) -> LinearCode:
    """Codewords of `code` whose entries all lie in the prime field `target`.

    Each parity check of the dual over F_{p^m} becomes m parity checks over
    F_p, one per coordinate of the encoding.
    """
    ctx = code.ctx
    if ctx.m < 2 or target.m != 1 or target.p != ctx.p:
        raise NotAnExtension('F_%d is not a prime subfield of F_%d of lower order' %
                             (target.q, ctx.q))
    checks = dual(code).gen.entries
    digits = ctx.digit_arrays(checks)  # shape (r, n, m)
    expanded = digits.transpose(0, 2, 1).reshape(-1, code.n)
    return LinearCode(matfq.kernel(MatrixFq(target, expanded)))


def random_code(ctx: FieldCtx, n: int, k: int, seed: int) -> LinearCode:
    """A uniformly random k-dimensional subspace of F_q^n."""
    if not 0 <= k <= n:
        raise ShapeMismatch('dimension %d outside [0, %d]' % (k, n))
    rng = np.random.default_rng(seed)
    while True:
        candidate = from_generator(
            MatrixFq(ctx, rng.integers(0, ctx.q, size=(k, n))))
        if candidate.k == k:
            return candidate


def random_subcode(code: LinearCode, k: int, seed: int) -> LinearCode:
    """A uniformly random k-dimensional subcode of `code`."""
    if not 0 <= k <= code.k:
        raise ShapeMismatch('subcode dimension %d outside [0, %d]' %
                            (k, code.k))
    ctx = code.ctx
    rng = np.random.default_rng(seed)
    while True:
        coefficients = rng.integers(0, ctx.q, size=(k, code.k))
        if matfq.rank(MatrixFq(ctx, coefficients)) == k:
            break
    if k == 0:
        return zero_code(ctx, code.n)
    return from_generator(
        MatrixFq(ctx, ctx.matmul(coefficients, code.gen.entries)))


def permute_and_scale(code: LinearCode, permutation: Sequence[int],
                      scale: Optional[Vector] = None) -> LinearCode:
    """Image of `code` under c -> (x_j * c_{permutation[j]})_j.

    `scale` must have full support; both maps preserve the star structure.
    """
    ctx = code.ctx
    if sorted(permutation) != list(range(code.n)):
        raise ShapeMismatch('%r is not a permutation of range(%d)' %
                            (list(permutation), code.n))
    entries = code.gen.entries[:, list(permutation)]
    if scale is not None:
        x = ctx.asarray(scale)
        if x.shape != (code.n, ):
            raise LengthMismatch('scaling vector of length %d, expected %d' %
                                 (x.shape[0] if x.ndim else 0, code.n))
        if np.any(x == 0):
            raise ValueError('scaling vector must have full support')
        entries = ctx.mul_arrays(entries, x[None, :])
    return from_generator(MatrixFq(ctx, entries))
