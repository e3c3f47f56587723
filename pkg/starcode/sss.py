"""Secret sharing with linear codes.

To share s with a code C of length n, the dealer draws a uniformly random
codeword c in C with c_{n-1} = s and hands c_i to player i for
i = 0, ..., n - 2.  Then

- any coalition of more than n - d(C) players recovers s, since projecting C
  onto their coordinates is injective;

- any coalition of fewer than d(C^perp) - 1 players learns nothing: the
  coalition's shares together with the secret are uniform on F_q^{|I|+1}.

Reed-Solomon codes at points (x_1, ..., x_{n-1}, 0) give Shamir's threshold
scheme.  Sharing is linear, and the share-wise product of two packets for C is
a packet for C * C whose secret is the product of the secrets.
"""

from typing import Dict, List, Mapping, NamedTuple, Optional, Union
import hashlib
import itertools
import json
import logging
import math

import jsonschema
import numpy as np
from typing_extensions import TypedDict

from .errors import (CodeMismatch, InconsistentShares, NoSolution,
                     SecretCoordinateDead, ShapeMismatch)
from . import linear_code
from .linear_code import LinearCode
from . import matfq
from .matfq import MatrixFq

logger = logging.getLogger(__name__)

INSUFFICIENT = 'Insufficient'

SharePacket = NamedTuple('SharePacket', [
    ('code_id', str),
    ('secret_index', int),
    ('shares', Dict[int, int]),
])

AuditRow = NamedTuple('AuditRow', [
    ('size', int),
    ('coalitions', int),
    # Number of codewords expected per (shares, secret) pattern.
    ('expected_count', int),
    ('uniform', bool),
    ('guaranteed', bool),
])


class PacketJson(TypedDict):
    code: str
    secret_index: int
    shares: Dict[str, int]


packet_schema = {
    'type': 'object',
    'required': ['code', 'secret_index', 'shares'],
    'additionalProperties': False,
    'properties': {
        'code': {
            'type': 'string'
        },
        'secret_index': {
            'type': 'integer',
            'minimum': 0
        },
        'seed': {
            'type': 'integer'
        },
        'shares': {
            'type': 'object',
            'patternProperties': {
                '^[0-9]+$': {
                    'type': 'integer',
                    'minimum': 0
                },
            },
            'additionalProperties': False,
        },
    },
}


def code_fingerprint(code: LinearCode) -> str:
    """sha256 of the canonical matrix text of the generator."""
    return hashlib.sha256(matfq.format_matrix(code.gen).encode()).hexdigest()


def secret_index(code: LinearCode) -> int:
    return code.n - 1


def _check_packet(packet: SharePacket, code: LinearCode) -> None:
    if packet.code_id != code_fingerprint(code):
        raise CodeMismatch('packet for code %s, expected %s' %
                           (packet.code_id[:12], code_fingerprint(code)[:12]))
    if packet.secret_index != secret_index(code):
        raise CodeMismatch('packet secret index %d, expected %d' %
                           (packet.secret_index, secret_index(code)))


def _check_players(code: LinearCode, players) -> None:
    for i in players:
        if not 0 <= i < secret_index(code):
            raise ShapeMismatch('player %r outside [0, %d)' %
                                (i, secret_index(code)))


def deal(code: LinearCode, s: int, seed: int) -> SharePacket:
    ctx = code.ctx
    s = int(ctx.asarray(s))
    if code.n == 0 or not np.any(code.gen.entries[:, secret_index(code)]):
        raise SecretCoordinateDead(
            'every codeword of %r vanishes on the secret coordinate' % (code, ))
    column = code.gen.entries[:, secret_index(code)]
    constraint = MatrixFq(ctx, column.reshape(1, -1))
    message = matfq.solve(constraint, [s])
    free = matfq.kernel(constraint)
    rng = np.random.default_rng(seed)
    if free.rows:
        coefficients = rng.integers(0, ctx.q, size=(1, free.rows))
        message = ctx.add_arrays(
            message, ctx.matmul(coefficients, free.entries).reshape(-1))
    codeword = code.encode(message)
    assert int(codeword[-1]) == s
    return SharePacket(
        code_id=code_fingerprint(code),
        secret_index=secret_index(code),
        shares={i: int(codeword[i]) for i in range(code.n - 1)})


def recovery_threshold(code: LinearCode,
                       distance: Optional[int] = None) -> int:
    """Smallest coalition size r with r > n - d(C).

    `distance` may be a lower bound on d(C), which only raises the threshold.
    """
    if distance is None:
        distance = linear_code.min_distance(code)
    return code.n - distance + 1


def reconstruct(code: LinearCode, shares: Mapping[int, int],
                distance: Optional[int] = None) -> Union[int, str]:
    """Recovers the secret from the shares of the players in `shares`.

    Returns INSUFFICIENT when the coalition is not above the threshold.
    """
    ctx = code.ctx
    players = sorted(shares)
    _check_players(code, players)
    if len(players) < recovery_threshold(code, distance):
        return INSUFFICIENT
    values = ctx.asarray([shares[i] for i in players])
    restricted = code.gen.select_columns(players).transpose()
    try:
        message = matfq.solve(restricted, values)
    except NoSolution:
        raise InconsistentShares('shares of players %r match no codeword' %
                                 (players, ))
    return int(code.encode(message)[secret_index(code)])


def reconstruct_packet(code: LinearCode, packet: SharePacket,
                       players=None,
                       distance: Optional[int] = None) -> Union[int, str]:
    _check_packet(packet, code)
    if players is None:
        players = packet.shares.keys()
    players = sorted(players)
    _check_players(code, players)
    missing = [i for i in players if i not in packet.shares]
    if missing:
        raise ShapeMismatch('packet holds no shares for players %r' %
                            (missing, ))
    return reconstruct(code, {i: packet.shares[i] for i in players}, distance)


def linear_combination(alpha: int, p1: SharePacket, beta: int,
                       p2: SharePacket, code: LinearCode) -> SharePacket:
    """Share-wise alpha * p1 + beta * p2, a packet for alpha s1 + beta s2."""
    _check_packet(p1, code)
    _check_packet(p2, code)
    if p1.shares.keys() != p2.shares.keys():
        raise ValueError('packets hold shares of different players')
    ctx = code.ctx
    return p1._replace(shares={
        i: ctx.add(ctx.mul(alpha, p1.shares[i]), ctx.mul(beta, p2.shares[i]))
        for i in p1.shares
    })


def multiply_shares(p1: SharePacket, p2: SharePacket,
                    code: LinearCode) -> SharePacket:
    """Share-wise product, a packet for s1 * s2 under square(code)."""
    try:
        _check_packet(p1, code)
        _check_packet(p2, code)
    except CodeMismatch:
        raise CodeMismatch('packets were not dealt with the same code')
    if p1.shares.keys() != p2.shares.keys():
        raise ValueError('packets hold shares of different players')
    ctx = code.ctx
    return SharePacket(
        code_id=code_fingerprint(linear_code.square(code)),
        secret_index=p1.secret_index,
        shares={i: ctx.mul(p1.shares[i], p2.shares[i])
                for i in p1.shares})


def privacy_audit(code: LinearCode, r_max: int,
                  dual_distance: Optional[int] = None) -> List[AuditRow]:
    """Checks, for each coalition size up to `r_max`, that every coalition's
    shares together with the secret are uniformly distributed.

    Every (shares, secret) pattern must occur exactly q^(k - |I| - 1) times
    among the codewords.  `guaranteed` records whether |I| < d(C^perp) - 1;
    a zero dual counts as having distance n + 1.
    """
    ctx = code.ctx
    q = ctx.q
    secret = secret_index(code)
    if not 0 <= r_max <= secret:
        raise ValueError('coalition size %d outside [0, %d]' % (r_max, secret))
    dual = linear_code.dual(code)
    if dual_distance is None:
        dual_distance = (code.n + 1 if dual.k == 0 else
                         linear_code.min_distance(dual))
    if dual.k == 0:
        logger.warning(
            '%r is the full space: shares are independent of the secret and '
            'no coalition can reconstruct it', code)
    words = code.codewords()
    rows = []
    for size in range(r_max + 1):
        expected = q**(code.k - size - 1) if code.k >= size + 1 else 0
        uniform = expected > 0
        weights = q**np.arange(size + 1, dtype=np.int64)
        for coalition in itertools.combinations(range(secret), size):
            if not uniform:
                break
            patterns = words[:, list(coalition) + [secret]] @ weights
            counts = np.bincount(patterns, minlength=q**(size + 1))
            uniform = bool(np.all(counts == expected))
        guaranteed = size < dual_distance - 1
        if guaranteed and not uniform:
            raise AssertionError(
                'coalition of size %d learns about the secret below the '
                'privacy bound' % (size, ))
        if not uniform:
            logger.warning('coalitions of size %d are not private', size)
        rows.append(
            AuditRow(
                size=size,
                coalitions=math.comb(secret, size),
                expected_count=expected,
                uniform=uniform,
                guaranteed=guaranteed))
    return rows


# JSON form.


def packet_to_json(packet: SharePacket) -> PacketJson:
    return {
        'code': packet.code_id,
        'secret_index': packet.secret_index,
        'shares': {str(i): v for i, v in sorted(packet.shares.items())},
    }


def packet_from_json(data) -> SharePacket:
    jsonschema.validate(data, packet_schema)
    return SharePacket(
        code_id=data['code'],
        secret_index=data['secret_index'],
        shares={int(i): v for i, v in data['shares'].items()})


def dumps_packet(packet: SharePacket) -> str:
    return json.dumps(packet_to_json(packet), indent=2, sort_keys=True) + '\n'


def loads_packet(text: str) -> SharePacket:
    return packet_from_json(json.loads(text))
