"""Dense exact linear algebra over a finite field.

Matrices are immutable wrappers around 2-d numpy arrays of element encodings.
All bases returned by this module are in reduced row echelon form, so two
bases of the same subspace are equal as matrices.

Matrix text format
==================

    # comment lines start with '#'
    3^2 4 2
    1 0 2 5
    0 1 7 3

The first non-comment line is "q n k", with q written as "p^m" (or as a
decimal prime for prime fields), followed by k lines of n space-separated
decimal encodings.  The text must end with a newline.
"""

from typing import List, NamedTuple, Optional, Sequence, Tuple, Union
import re

import atomicwrites
import numpy as np

from .errors import (ContextMismatch, LengthMismatch, MatrixFormatError,
                     NoSolution, ShapeMismatch, StarcodeError)
from .field import FieldCtx
from . import spec_parsing

Vector = Union[np.ndarray, Sequence[int]]


class MatrixFq(object):
    __slots__ = ('ctx', 'entries')

    def __init__(self, ctx: FieldCtx, entries) -> None:
        array = ctx.asarray(entries)
        if array.ndim != 2:
            raise ShapeMismatch('expected a 2-d array, got shape %r' %
                                (array.shape, ))
        array = array.copy()
        array.flags.writeable = False
        self.ctx = ctx
        self.entries = array

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Vector],
                  cols: Optional[int] = None) -> 'MatrixFq':
        if len(rows) == 0:
            if cols is None:
                raise ShapeMismatch('column count required for an empty matrix')
            return cls(ctx, np.zeros((0, cols), dtype=np.int64))
        array = np.array([np.asarray(r, dtype=np.int64) for r in rows])
        if cols is not None and array.shape[1] != cols:
            raise ShapeMismatch('expected %d columns, got %d' %
                                (cols, array.shape[1]))
        return cls(ctx, array)

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> 'MatrixFq':
        return cls(ctx, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> 'MatrixFq':
        return cls(ctx, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatrixFq) and self.ctx == other.ctx and
                self.entries.shape == other.entries.shape and
                bool(np.array_equal(self.entries, other.entries)))

    def __hash__(self) -> int:
        return hash((self.ctx, self.entries.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return 'MatrixFq(%s, %r)' % (self.ctx, self.to_lists())

    def to_lists(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self.entries]

    def row(self, i: int) -> np.ndarray:
        return self.entries[i]

    def transpose(self) -> 'MatrixFq':
        return MatrixFq(self.ctx, self.entries.T)

    def vstack(self, other: Union['MatrixFq', Vector]) -> 'MatrixFq':
        if isinstance(other, MatrixFq):
            _check_compatible(self, other)
            other_entries = other.entries
        else:
            other_entries = self.ctx.asarray(other).reshape(1, -1)
            if other_entries.shape[1] != self.cols:
                raise LengthMismatch('vector of length %d, expected %d' %
                                     (other_entries.shape[1], self.cols))
        return MatrixFq(self.ctx, np.vstack([self.entries, other_entries]))

    def select_columns(self, columns: Sequence[int]) -> 'MatrixFq':
        return MatrixFq(self.ctx, self.entries[:, list(columns)])

    def matmul(self, other: 'MatrixFq') -> 'MatrixFq':
        if self.ctx != other.ctx:
            raise ContextMismatch('matrices over F_%d and F_%d' %
                                  (self.ctx.q, other.ctx.q))
        if self.cols != other.rows:
            raise ShapeMismatch('cannot multiply %dx%d by %dx%d' %
                                (self.rows, self.cols, other.rows, other.cols))
        return MatrixFq(self.ctx, self.ctx.matmul(self.entries, other.entries))

    def apply(self, v: Vector) -> np.ndarray:
        """Returns M * v^T as a 1-d array."""
        v = self.ctx.asarray(v)
        if v.shape != (self.cols, ):
            raise LengthMismatch('vector of length %d, expected %d' %
                                 (v.shape[0], self.cols))
        return self.ctx.matmul(self.entries, v.reshape(-1, 1)).reshape(-1)


def _check_compatible(a: MatrixFq, b: MatrixFq) -> None:
    if a.ctx != b.ctx:
        raise ContextMismatch('matrices over F_%d and F_%d' % (a.ctx.q, b.ctx.q))
    if a.cols != b.cols:
        raise ShapeMismatch('matrices with %d and %d columns' % (a.cols, b.cols))


RrefResult = NamedTuple('RrefResult', [
    ('matrix', MatrixFq),
    ('pivots', List[int]),
    ('rank', int),
])


def _rref_array(ctx: FieldCtx, a: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    a = np.array(a, dtype=np.int64)
    num_rows, num_cols = a.shape
    pivots = []  # type: List[int]
    r = 0
    for c in range(num_cols):
        if r == num_rows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        i = r + int(nonzero[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        pivot = int(a[r, c])
        if pivot != 1:
            a[r] = ctx.mul_arrays(a[r], ctx.inv(pivot))
        factors = a[:, c].copy()
        factors[r] = 0
        targets = np.nonzero(factors)[0]
        if targets.size:
            a[targets] = ctx.sub_arrays(
                a[targets], ctx.mul_arrays(factors[targets, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: MatrixFq) -> RrefResult:
    """Reduced row echelon form, pivoting on the first nonzero entry."""
    reduced, pivots = _rref_array(m.ctx, m.entries)
    return RrefResult(MatrixFq(m.ctx, reduced), pivots, len(pivots))


def rank(m: MatrixFq) -> int:
    return len(_rref_array(m.ctx, m.entries)[1])


def row_space(m: MatrixFq) -> MatrixFq:
    """The canonical basis of the row space: the nonzero rows of the RREF."""
    reduced, pivots = _rref_array(m.ctx, m.entries)
    return MatrixFq(m.ctx, reduced[:len(pivots)])


def kernel(m: MatrixFq) -> MatrixFq:
    """Rows form the RREF basis of {v : M v^T = 0}."""
    ctx = m.ctx
    reduced, pivots = _rref_array(ctx, m.entries)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = np.zeros((len(free), m.cols), dtype=np.int64)
    if free:
        basis[np.arange(len(free)), free] = 1
        if pivots:
            basis[:, pivots] = ctx.neg_arrays(reduced[:len(pivots)][:, free].T)
    return row_space(MatrixFq(ctx, basis))


def solve(m: MatrixFq, b: Vector) -> np.ndarray:
    """Returns x with M x^T = b^T; free variables are set to zero.

    Raises `NoSolution` when the system is inconsistent.
    """
    ctx = m.ctx
    b = ctx.asarray(b)
    if b.shape != (m.rows, ):
        raise LengthMismatch('right-hand side of length %d, expected %d' %
                             (b.shape[0] if b.ndim else 0, m.rows))
    augmented = np.hstack([m.entries, b.reshape(-1, 1)])
    reduced, pivots = _rref_array(ctx, augmented)
    if pivots and pivots[-1] == m.cols:
        raise NoSolution('inconsistent linear system')
    x = np.zeros(m.cols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = reduced[i, -1]
    return x


def inverse(m: MatrixFq) -> MatrixFq:
    if m.rows != m.cols:
        raise ShapeMismatch('cannot invert a %dx%d matrix' % (m.rows, m.cols))
    n = m.rows
    augmented = np.hstack([m.entries, np.eye(n, dtype=np.int64)])
    reduced, pivots = _rref_array(m.ctx, augmented)
    if pivots[:n] != list(range(n)):
        raise NoSolution('matrix is singular')
    return MatrixFq(m.ctx, reduced[:, n:])


def row_space_intersection(a: MatrixFq, b: MatrixFq) -> MatrixFq:
    """RREF basis of rowspace(A) ∩ rowspace(B) (Zassenhaus)."""
    _check_compatible(a, b)
    n = a.cols
    top = np.hstack([a.entries, a.entries])
    bottom = np.hstack([b.entries, np.zeros_like(b.entries)])
    reduced, pivots = _rref_array(a.ctx, np.vstack([top, bottom]))
    reduced = reduced[:len(pivots)]
    left_zero = ~np.any(reduced[:, :n], axis=1)
    return row_space(MatrixFq(a.ctx, reduced[left_zero][:, n:]))


def membership(v: Vector, a: MatrixFq) -> bool:
    """Whether `v` lies in the row space of `a`."""
    return rank(a.vstack(v)) == rank(a)


# Text format.

_header_re = re.compile(r'(\S+)\s+([0-9]+)\s+([0-9]+)')


def parse_matrix(text: str) -> MatrixFq:
    lines = text.split('\n')
    if not text.endswith('\n'):
        raise MatrixFormatError('missing trailing newline', lineno=len(lines))
    ctx = None  # type: Optional[FieldCtx]
    n = k = 0
    rows = []  # type: List[List[int]]
    last_lineno = 0
    for lineno, line in enumerate(lines[:-1], 1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        last_lineno = lineno
        if ctx is None:
            m = _header_re.fullmatch(stripped)
            if m is None:
                raise MatrixFormatError('expected header "q n k", got %r' %
                                        (stripped, ), lineno)
            try:
                ctx = spec_parsing.parse_field(m.group(1))
            except StarcodeError as e:
                raise MatrixFormatError(str(e), lineno)
            n = int(m.group(2))
            k = int(m.group(3))
            continue
        tokens = stripped.split()
        if len(tokens) != n:
            raise MatrixFormatError('expected %d entries, got %d' % (n, len(tokens)),
                                    lineno)
        row = []
        for token in tokens:
            if not re.fullmatch(r'[0-9]+', token) or int(token) >= ctx.q:
                raise MatrixFormatError(
                    '%r is not an element of F_%d' % (token, ctx.q), lineno)
            row.append(int(token))
        if len(rows) == k:
            raise MatrixFormatError('more than %d rows' % (k, ), lineno)
        rows.append(row)
    if ctx is None:
        raise MatrixFormatError('missing header', len(lines))
    if len(rows) != k:
        raise MatrixFormatError('expected %d rows, got %d' % (k, len(rows)),
                                last_lineno)
    return MatrixFq.from_rows(ctx, rows, cols=n)


def format_matrix(m: MatrixFq) -> str:
    lines = ['%s %d %d' % (m.ctx, m.cols, m.rows)]
    for row in m.entries:
        lines.append(' '.join('%d' % x for x in row))
    return '\n'.join(lines) + '\n'


def read_matrix_file(path: str) -> MatrixFq:
    with open(path, 'r', encoding='utf-8', newline='\n') as f:
        return parse_matrix(f.read())


def write_matrix_file(path: str, m: MatrixFq) -> None:
    with atomicwrites.atomic_write(path, overwrite=True, newline='\n') as f:
        f.write(format_matrix(m))
