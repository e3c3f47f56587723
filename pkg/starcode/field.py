"""Exact arithmetic in finite fields F_{p^m}.

An element of F_{p^m} = F_p[x] / (modulus) is the residue class of a polynomial
a_0 + a_1 x + ... + a_{m-1} x^{m-1} and is encoded as the integer
sum(a_i * p**i).  The encodings of a field of order q are exactly
0, 1, ..., q - 1; in particular the prime subfield F_p occupies the encodings
0, ..., p - 1, so a subfield element keeps its encoding when embedded.

The modulus of F_{p^m} is the smallest monic irreducible polynomial of degree m
over F_p, where the coefficient vector (a_0, ..., a_{m-1}) is ordered by the
same integer map as the element encoding.  For m = 1 the modulus is the
placeholder `x` and arithmetic is plain arithmetic mod p.

Two arithmetic paths exist:

- the reference path (`add_reference`, `mul_reference`, `pow_reference`)
  works directly on coefficient lists and is slow;

- the table path, used by every other method, relies on log/antilog tables
  that are built lazily from the reference path on first use.

Scalar methods of `FieldCtx` operate on integer encodings; the `*_arrays`
methods operate element-wise on numpy integer arrays and support broadcasting.
`FieldElem` wraps an encoding together with its context for callers that want
operator syntax and context checking.
"""

from typing import List, Sequence, Tuple, Union
import functools
import logging

import numpy as np

from .errors import (ContextMismatch, DivisionByZero, NoIrreducibleFound,
                     NotPrime, OrderTooLarge, ReducibleModulus)

logger = logging.getLogger(__name__)

MAX_ORDER = 2**16

ArrayLike = Union[np.ndarray, Sequence[int], int]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> List[int]:
    """Returns the distinct prime factors of `n` in increasing order."""
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def prime_power(q: int) -> Tuple[int, int]:
    """Decomposes `q` as p**m, raising `NotPrime` if it is not a prime power."""
    factors = prime_factors(q) if q >= 2 else []
    if len(factors) != 1:
        raise NotPrime('%r is not a prime power' % (q, ))
    p = factors[0]
    m = 0
    while q > 1:
        q //= p
        m += 1
    return p, m


def _digits(value: int, p: int, m: int) -> List[int]:
    result = []
    for _ in range(m):
        result.append(value % p)
        value //= p
    return result


def _poly_mod(a: List[int], b: Sequence[int], p: int) -> List[int]:
    """Remainder of `a` modulo the monic polynomial `b` over F_p."""
    a = list(a)
    deg_b = len(b) - 1
    for i in range(len(a) - 1, deg_b - 1, -1):
        c = a[i] % p
        if c == 0:
            continue
        shift = i - deg_b
        for j in range(deg_b + 1):
            a[shift + j] = (a[shift + j] - c * b[j]) % p
    return [x % p for x in a[:deg_b]]


def _monic_polynomials(p: int, degree: int):
    for index in range(p**degree):
        yield _digits(index, p, degree) + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Tests a monic polynomial (constant term first) for irreducibility over F_p.

    Roots are checked first; for degree <= 3 absence of roots is sufficient.
    Otherwise every monic polynomial of degree 2..m//2 is tried as a divisor.
    """
    m = len(modulus) - 1
    if m <= 1:
        return True
    for a in range(p):
        value = 0
        for c in reversed(modulus):
            value = (value * a + c) % p
        if value == 0:
            return False
    for degree in range(2, m // 2 + 1):
        for divisor in _monic_polynomials(p, degree):
            if not any(_poly_mod(list(modulus), divisor, p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> Tuple[int, ...]:
    for index in range(p**m):
        coefficients = _digits(index, p, m)
        if coefficients[0] == 0:
            continue
        modulus = coefficients + [1]
        if is_irreducible(modulus, p):
            return tuple(modulus)
    raise NoIrreducibleFound('no irreducible polynomial of degree %d over F_%d' %
                             (m, p))


class FieldCtx(object):
    """The finite field F_{p^m}; immutable and safe to share between threads."""

    def __init__(self, p: int, m: int, modulus: Sequence[int]) -> None:
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ReducibleModulus(
                'modulus %r is not a monic polynomial of degree %d' %
                (tuple(modulus), m))
        if m > 1 and not is_irreducible(modulus, p):
            raise ReducibleModulus('modulus %r is reducible over F_%d' %
                                   (tuple(modulus), p))
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        self._powers = np.array([p**i for i in range(m)], dtype=np.int64)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldCtx) and self.p == other.p and
                self.m == other.m and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __str__(self) -> str:
        if self.m == 1:
            return '%d' % self.p
        return '%d^%d' % (self.p, self.m)

    def __repr__(self) -> str:
        return 'FieldCtx(%s)' % self

    # Reference arithmetic on coefficient lists.

    def digits(self, a: int) -> List[int]:
        return _digits(a, self.p, self.m)

    def from_digits(self, coefficients: Sequence[int]) -> int:
        value = 0
        for c in reversed(coefficients):
            value = value * self.p + c % self.p
        return value

    def add_reference(self, a: int, b: int) -> int:
        return self.from_digits(
            [(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def mul_reference(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        da = self.digits(a)
        db = self.digits(b)
        product = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                product[i + j] += x * y
        return self.from_digits(_poly_mod(product, self.modulus, self.p))

    def pow_reference(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e > 0:
            if e & 1:
                result = self.mul_reference(result, base)
            base = self.mul_reference(base, base)
            e >>= 1
        return result

    # Log/antilog tables.

    @functools.cached_property
    def primitive_element(self) -> int:
        """Smallest encoding whose multiplicative order is q - 1."""
        order = self.q - 1
        factors = prime_factors(order)
        for g in range(1, self.q):
            if all(self.pow_reference(g, order // r) != 1 for r in factors):
                return g
        raise RuntimeError('F_%d has no primitive element' % (self.q, ))

    @functools.cached_property
    def _tables(self) -> Tuple[np.ndarray, np.ndarray]:
        logger.debug('building log tables for F_%d', self.q)
        order = self.q - 1
        g = self.primitive_element
        exp = np.zeros(2 * order, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self.mul_reference(x, g)
        exp[order:] = exp[:order]
        return exp, log

    # Scalar arithmetic on encodings.

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.add_reference(a, b)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_digits([(-x) % self.p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        exp, log = self._tables
        return int(exp[log[a] + log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero('0 has no inverse in F_%d' % (self.q, ))
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        exp, log = self._tables
        return int(exp[(self.q - 1 - log[a]) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.m == 1:
            return pow(a, e, self.p)
        exp, log = self._tables
        return int(exp[(int(log[a]) * e) % (self.q - 1)])

    # Element-wise arithmetic on integer arrays.

    def asarray(self, values: ArrayLike) -> np.ndarray:
        result = np.asarray(values, dtype=np.int64)
        if result.size and (result.min() < 0 or result.max() >= self.q):
            raise ValueError('values out of range for F_%d' % (self.q, ))
        return result

    def digit_arrays(self, a: np.ndarray) -> np.ndarray:
        return (a[..., None] // self._powers) % self.p

    def from_digit_arrays(self, d: np.ndarray) -> np.ndarray:
        return (d * self._powers).sum(axis=-1)

    def add_arrays(self, a: ArrayLike, b: ArrayLike) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.from_digit_arrays(
            (self.digit_arrays(a) + self.digit_arrays(b)) % self.p)

    def neg_arrays(self, a: ArrayLike) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a.copy()
        return self.from_digit_arrays((-self.digit_arrays(a)) % self.p)

    def sub_arrays(self, a: ArrayLike, b: ArrayLike) -> np.ndarray:
        return self.add_arrays(a, self.neg_arrays(b))

    def mul_arrays(self, a: ArrayLike, b: ArrayLike) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        exp, log = self._tables
        product = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, product)

    def inv_arrays(self, a: ArrayLike) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero('0 has no inverse in F_%d' % (self.q, ))
        exp, log = self._tables
        return exp[(self.q - 1 - log[a]) % (self.q - 1)]

    def pow_arrays(self, a: ArrayLike, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if e < 0:
            return self.pow_arrays(self.inv_arrays(a), -e)
        exp, log = self._tables
        result = exp[(log[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0, result)

    def matmul(self, a: ArrayLike, b: ArrayLike) -> np.ndarray:
        """Matrix product of 2-d arrays over the field."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            # Entries are below 2**16, so int64 accumulation cannot overflow
            # for any inner dimension used here.
            return (a @ b) % self.p
        result = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for j in range(a.shape[1]):
            result = self.add_arrays(result,
                                     self.mul_arrays(a[:, j, None], b[None, j, :]))
        return result

    # Elements.

    def element(self, value: int) -> 'FieldElem':
        return FieldElem(self, value)

    def elements(self) -> List['FieldElem']:
        return [FieldElem(self, v) for v in range(self.q)]


@functools.lru_cache(maxsize=None)
def field_create(p: int, m: int = 1) -> FieldCtx:
    """Returns the field F_{p^m}; equal arguments return the same context."""
    if not is_prime(p):
        raise NotPrime('%r is not prime' % (p, ))
    if m < 1 or p**m > MAX_ORDER:
        raise OrderTooLarge('field order %d^%d is outside [2, %d]' %
                            (p, m, MAX_ORDER))
    if m == 1:
        modulus = (0, 1)  # type: Tuple[int, ...]
    else:
        modulus = smallest_irreducible(p, m)
    logger.debug('created F_%d^%d with modulus %r', p, m, modulus)
    return FieldCtx(p, m, modulus)


def field_of_order(q: int) -> FieldCtx:
    p, m = prime_power(q)
    return field_create(p, m)


class FieldElem(object):
    """An encoding bound to its field."""

    __slots__ = ('ctx', 'value')

    def __init__(self, ctx: FieldCtx, value: int) -> None:
        value = int(value)
        if not 0 <= value < ctx.q:
            raise ValueError('%r is not an element of F_%d' % (value, ctx.q))
        self.ctx = ctx
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise ContextMismatch('cannot combine elements of F_%d and F_%d' %
                                      (self.ctx.q, other.ctx.q))
            return other.value
        if isinstance(other, (int, np.integer)):
            return FieldElem(self.ctx, other).value
        raise TypeError('cannot combine FieldElem with %r' % (other, ))

    def __add__(self, other):
        return FieldElem(self.ctx, self.ctx.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.ctx, self.ctx.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self) -> 'FieldElem':
        return FieldElem(self.ctx, self.ctx.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx, self.value))

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return 'FieldElem(%s, %d)' % (self.ctx, self.value)

    def __str__(self) -> str:
        return '%d' % self.value


def add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def neg(a: FieldElem) -> FieldElem:
    return -a


def inv(a: FieldElem) -> FieldElem:
    return a.inverse()


def enumerate_elements(ctx: FieldCtx) -> List[FieldElem]:
    """Elements of `ctx` in encoding order 0, ..., q - 1."""
    return ctx.elements()
