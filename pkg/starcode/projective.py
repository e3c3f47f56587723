"""Points of the projective space P^{k-1}(F_q) in normalized form.

A point is normalized when its first nonzero coordinate is 1.  Enumeration
order groups points by the position of that leading 1 (position 0 first) and,
within a group, orders the remaining coordinates lexicographically.
"""

from typing import Iterator, List, Sequence, Tuple

import numpy as np

from .field import FieldCtx

Point = Tuple[int, ...]


def normalize_point(ctx: FieldCtx, v: Sequence[int]) -> Point:
    v = ctx.asarray(v)
    nonzero = np.nonzero(v)[0]
    if nonzero.size == 0:
        raise ValueError('the zero vector is not a projective point')
    lead = int(v[nonzero[0]])
    if lead != 1:
        v = ctx.mul_arrays(v, ctx.inv(lead))
    return tuple(int(x) for x in v)


def normalize_columns(ctx: FieldCtx, m: np.ndarray) -> np.ndarray:
    """Normalizes every nonzero column of `m`; zero columns stay zero."""
    m = np.asarray(m, dtype=np.int64)
    nonzero = m != 0
    has_lead = nonzero.any(axis=0)
    lead_row = np.argmax(nonzero, axis=0)
    lead = m[lead_row, np.arange(m.shape[1])]
    lead = np.where(has_lead, lead, 1)
    return ctx.mul_arrays(m, ctx.inv_arrays(lead)[None, :])


def is_normalized(v: Sequence[int]) -> bool:
    for x in v:
        if x != 0:
            return x == 1
    return False


def num_points(q: int, k: int) -> int:
    """|P^{k-1}(F_q)|."""
    if k <= 0:
        return 0
    return (q**k - 1) // (q - 1)


def point_chunks(ctx: FieldCtx, k: int,
                 chunk_size: int = 2**14) -> Iterator[np.ndarray]:
    """Yields all normalized points of P^{k-1}(F_q) as rows of 2-d arrays."""
    q = ctx.q
    for lead in range(k):
        tail = k - 1 - lead
        total = q**tail
        powers = q**np.arange(tail - 1, -1, -1, dtype=np.int64)
        for start in range(0, total, chunk_size):
            index = np.arange(start, min(total, start + chunk_size),
                              dtype=np.int64)
            block = np.zeros((index.size, k), dtype=np.int64)
            block[:, lead] = 1
            if tail:
                block[:, lead + 1:] = (index[:, None] // powers[None, :]) % q
            yield block


def projective_points(ctx: FieldCtx, k: int) -> List[Point]:
    return [
        tuple(int(x) for x in row)
        for chunk in point_chunks(ctx, k) for row in chunk
    ]
