import numpy as np
import pytest

from .field import field_create
from . import projective

F4 = field_create(2, 2)
F5 = field_create(5)


def test_normalize_point():
    assert projective.normalize_point(F5, [0, 2, 4]) == (0, 1, 2)
    assert projective.normalize_point(F5, (1, 3)) == (1, 3)
    assert projective.normalize_point(F4, [3, 2]) == (1, F4.div(2, 3))
    with pytest.raises(ValueError):
        projective.normalize_point(F5, [0, 0])


def test_normalize_columns():
    m = np.array([[0, 2, 0], [3, 4, 0]])
    normalized = projective.normalize_columns(F5, m)
    assert normalized.tolist() == [[0, 1, 0], [1, 2, 0]]


def test_is_normalized():
    assert projective.is_normalized((0, 1, 4))
    assert not projective.is_normalized((0, 2, 1))
    assert not projective.is_normalized((0, 0))


@pytest.mark.parametrize('q,k,expected', [(5, 1, 1), (5, 3, 31), (4, 4, 85),
                                          (7, 0, 0)])
def test_num_points(q, k, expected):
    assert projective.num_points(q, k) == expected


def test_projective_points_order():
    points = projective.projective_points(field_create(2), 3)
    assert points == [
        (1, 0, 0),
        (1, 0, 1),
        (1, 1, 0),
        (1, 1, 1),
        (0, 1, 0),
        (0, 1, 1),
        (0, 0, 1),
    ]


@pytest.mark.parametrize('q,k', [(5, 3), (4, 4), (3, 5)])
def test_point_chunks(q, k):
    ctx = field_create(*{5: (5, 1), 4: (2, 2), 3: (3, 1)}[q])
    whole = projective.projective_points(ctx, k)
    assert len(whole) == projective.num_points(q, k)
    assert len(set(whole)) == len(whole)
    assert all(projective.is_normalized(p) for p in whole)
    chunked = [
        tuple(int(x) for x in row)
        for chunk in projective.point_chunks(ctx, k, chunk_size=7)
        for row in chunk
    ]
    assert chunked == whole
