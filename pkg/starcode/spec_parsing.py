"""Parsing of the small text forms used on the command line and in files."""

from typing import Dict, FrozenSet, List, NamedTuple
import re

import numpy as np

from .errors import NotPrime, OrderTooLarge, SpecFormatError
from .field import FieldCtx, field_create, prime_power

CodeSpecString = NamedTuple('CodeSpecString', [
    ('family', str),
    ('params', Dict[str, str]),
])


def parse_field(x: str) -> FieldCtx:
    """Parses "p^m", or a decimal order such as "7" or "9"."""
    m = re.fullmatch(r'\s*([0-9]+)\s*(?:\^\s*([0-9]+))?\s*', x)
    if m is None:
        raise SpecFormatError('Failed to parse field from %r' % (x, ))
    try:
        if m.group(2) is not None:
            return field_create(int(m.group(1)), int(m.group(2)))
        p, e = prime_power(int(m.group(1)))
        return field_create(p, e)
    except (NotPrime, OrderTooLarge) as e:
        raise SpecFormatError('Invalid field %r: %s' % (x, e))


def parse_int_list(x: str, separator: str = ',') -> List[int]:
    x = x.strip()
    if not x:
        return []
    result = []
    for part in x.split(separator):
        part = part.strip()
        if not re.fullmatch(r'-?[0-9]+', part):
            raise SpecFormatError('Failed to parse integer from %r in %r' %
                                  (part, x))
        result.append(int(part))
    return result


def parse_coordinate_set(x: str) -> FrozenSet[int]:
    """Parses comma-separated 0-based coordinate indices."""
    values = parse_int_list(x)
    if any(v < 0 for v in values):
        raise SpecFormatError('Negative coordinate in %r' % (x, ))
    return frozenset(values)


def parse_vector(x: str, ctx: FieldCtx) -> np.ndarray:
    """Parses comma-separated element encodings."""
    values = parse_int_list(x)
    for v in values:
        if not 0 <= v < ctx.q:
            raise SpecFormatError('%d is not an element of F_%d' % (v, ctx.q))
    return np.array(values, dtype=np.int64)


def parse_code_spec(x: str) -> CodeSpecString:
    """Parses "family:key=value,key=value"; list values use '|' separators."""
    m = re.fullmatch(r'([a-z]+):(.*)', x.strip())
    if m is None:
        raise SpecFormatError('Failed to parse code spec from %r' % (x, ))
    params = {}  # type: Dict[str, str]
    body = m.group(2).strip()
    if body:
        for item in body.split(','):
            kv = re.fullmatch(r'\s*([a-z_0-9]+)\s*=\s*([^=]*?)\s*', item)
            if kv is None:
                raise SpecFormatError('Failed to parse parameter %r in %r' %
                                      (item, x))
            if kv.group(1) in params:
                raise SpecFormatError('Duplicate parameter %r in %r' %
                                      (kv.group(1), x))
            params[kv.group(1)] = kv.group(2)
    return CodeSpecString(family=m.group(1), params=params)


def looks_like_code_spec(x: str) -> bool:
    return re.fullmatch(r'[a-z]+:.*', x.strip()) is not None
