import numpy as np
import pytest

from .errors import (BadDegree, DuplicateExponents, DuplicatePoints,
                     DuplicateProjectivePoints, SpecFormatError, TooManyPoints)
from . import families
from .field import field_create
from . import linear_code
from .matfq import MatrixFq
from . import projective

F5 = field_create(5)
F7 = field_create(7)
F11 = field_create(11)


def test_reed_solomon_examples():
    code = families.reed_solomon(F7, range(7), 3)
    assert (code.n, code.k) == (7, 3)
    assert linear_code.min_distance(code) == 5
    assert code.gen.to_lists() == [
        [1, 0, 0, 1, 3, 6, 3],
        [0, 1, 0, 4, 6, 6, 4],
        [0, 0, 1, 3, 6, 3, 1],
    ]
    repetition = families.reed_solomon(F7, range(7), 1)
    assert repetition.gen.to_lists() == [[1] * 7]
    almost_full = families.reed_solomon(F7, range(7), 6)
    assert linear_code.min_distance(almost_full) == 2


def test_reed_solomon_edge_dimensions():
    assert families.reed_solomon(F7, range(5), 0).k == 0
    assert families.reed_solomon(F7, range(5), 5) == linear_code.full_space(
        F7, 5)


@pytest.mark.parametrize('points,k,error', [
    ([0, 1, 2, 3, 4, 5, 6, 0], 3, TooManyPoints),
    ([0, 1, 1], 2, DuplicatePoints),
    ([0, 1, 2], 4, BadDegree),
    ([0, 1, 2], -1, BadDegree),
])
def test_reed_solomon_errors(points, k, error):
    with pytest.raises(error):
        families.reed_solomon(F7, points, k)


@pytest.mark.parametrize('q', [5, 7, 11, 13])
def test_reed_solomon_is_mds(q):
    ctx = field_create(q)
    for k in range(1, q):
        if q**k > 2**20:
            break
        code = families.reed_solomon(ctx, range(q), k)
        assert code.k == k
        assert linear_code.min_distance(code) == q - k + 1


def test_hermitian_examples():
    code, spec = families.hermitian_code(2, 3)
    assert (code.n, code.k) == (8, 3)
    assert spec.ctx == field_create(2, 2)
    assert spec.genus == 1
    assert spec.basis == ((0, 0), (1, 0), (0, 1))
    assert families.designed_params(spec) == families.DesignedParams(
        n=8, k_lower=3, k_exact=True, d_star=5)

    code, spec = families.hermitian_code(3, 7)
    assert (code.n, code.k) == (27, 5)
    assert spec.genus == 3
    assert spec.basis == ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1))
    assert families.designed_params(spec) == families.DesignedParams(
        n=27, k_lower=5, k_exact=True, d_star=20)

    code, _ = families.hermitian_code(2, 0)
    assert code.gen.to_lists() == [[1] * 8]


@pytest.mark.parametrize('q0', [2, 3, 4])
def test_hermitian_points_lie_on_curve(q0):
    ctx = families.hermitian_field(q0)
    points = families.hermitian_points(q0)
    assert len(points) == q0**3
    assert points == sorted(set(points))
    for x, y in points:
        assert ctx.add(ctx.pow(y, q0), y) == ctx.pow(x, q0 + 1)


def test_hermitian_bad_degree():
    with pytest.raises(BadDegree):
        families.hermitian_spec(2, 8)
    with pytest.raises(BadDegree):
        families.hermitian_spec(2, -1)


@pytest.mark.parametrize('q0', [2, 3])
def test_hermitian_dimension_law(q0):
    g = families.hermitian_genus(q0)
    n = q0**3
    for m in range(max(0, 2 * g - 1), n):
        code, spec = families.hermitian_code(q0, m)
        assert code.k == m + 1 - g == len(spec.basis)


@pytest.mark.parametrize('q0', [2, 3])
def test_hermitian_square_law(q0):
    g = families.hermitian_genus(q0)
    n = q0**3
    ms = [m for m in range(2 * g + 1, n) if 2 * m < n]
    assert ms
    for m in ms:
        code, _ = families.hermitian_code(q0, m)
        assert linear_code.square(code).k == 2 * code.k - 1 + g


@pytest.mark.parametrize('q0', [2, 3])
def test_hermitian_star_law(q0):
    g = families.hermitian_genus(q0)
    n = q0**3
    checked = 0
    for f in range(2 * g, n):
        for h in range(2 * g + 1, n - f):
            a, _ = families.hermitian_code(q0, f)
            b, _ = families.hermitian_code(q0, h)
            c, _ = families.hermitian_code(q0, f + h)
            assert linear_code.star_product(a, b) == c
            checked += 1
    assert checked


def test_reed_solomon_star_law():
    for ka in range(1, 7):
        for kb in range(1, 8 - ka):
            a = families.reed_solomon(F7, range(7), ka)
            b = families.reed_solomon(F7, range(7), kb)
            c = families.reed_solomon(F7, range(7), ka + kb - 1)
            assert linear_code.star_product(a, b) == c


def test_hermitian_distance_bound():
    g = families.hermitian_genus(2)
    for m in range(8):
        code, spec = families.hermitian_code(2, m)
        d = linear_code.min_distance(code) if code.k else None
        if d is not None:
            assert code.k + d >= code.n + 1 - g
            assert d >= families.designed_params(spec).d_star


def test_monomial_codes():
    assert families.monomial_eval_code(F7, range(7), [0, 1, 2]) == (
        families.reed_solomon(F7, range(7), 3))
    assert families.monomial_eval_code(F7, range(7), [0]).gen.to_lists() == [
        [1] * 7
    ]
    gap = families.monomial_eval_code(F11, range(11), [0, 2, 3, 4])
    assert gap.k == 4
    assert linear_code.square(gap).k == 8
    gap = families.monomial_eval_code(F11, range(11), [0, 2, 3])
    assert linear_code.square(gap).k == 6
    with pytest.raises(DuplicateExponents):
        families.monomial_eval_code(F11, range(11), [0, 2, 2])
    with pytest.raises(DuplicatePoints):
        families.monomial_eval_code(F11, [1, 1], [0])
    spec = families.monomial_spec(F11, range(11), [0, 2, 3, 4])
    assert families.designed_params(spec).d_star == 7


def test_designed_params_monomial_high_exponents():
    spec = families.monomial_spec(F7, range(7), [1, 7])
    assert families.evaluation_code(spec).k == 1
    assert families.designed_params(spec) == families.DesignedParams(
        n=7, k_lower=1, k_exact=False, d_star=None)
    spec = families.monomial_spec(F7, range(5), [0, 3, 5])
    assert families.evaluation_code(spec).k == 3
    assert families.designed_params(spec) == families.DesignedParams(
        n=5, k_lower=2, k_exact=False, d_star=None)


def test_curve_points_ignore_exponent_order():
    ordered = families.monomial_spec(F7, range(7), [0, 1, 2])
    shuffled = families.monomial_spec(F7, range(7), [2, 0, 1])
    assert families.evaluation_code(ordered) == families.evaluation_code(
        shuffled)
    assert set(families.curve_points(ordered)) == set(
        families.curve_points(shuffled))
    assert len(families.curve_points(shuffled)) == 8


def test_point_set_codes():
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert families.point_set_linear_code(F5, basis) == linear_code.full_space(
        F5, 3)
    assert families.point_set_linear_code(F5, [(0, 1, 3)]).k == 1
    points = families.plane_and_line_points(F5)
    assert len(points) == 5**2 + 2 * 5 + 1 == 36
    code = families.point_set_linear_code(F5, points)
    assert (code.n, code.k) == (36, 4)
    with pytest.raises(DuplicateProjectivePoints):
        families.point_set_linear_code(F5, [(1, 2), (1, 2)])
    with pytest.raises(ValueError):
        families.point_set_linear_code(F5, [(2, 1)])
    spec = families.point_set_spec(F5, points)
    assert families.designed_params(spec).d_star is None


def test_designed_params_reed_solomon():
    spec = families.rs_spec(F7, range(7), 3)
    assert families.designed_params(spec) == families.DesignedParams(
        n=7, k_lower=3, k_exact=True, d_star=5)


def test_dual_designed_distance():
    assert families.dual_designed_distance(families.rs_spec(F7, range(7),
                                                            3)) == 4
    _, spec = families.hermitian_code(2, 3)
    assert families.dual_designed_distance(spec) == 3
    code, spec = families.hermitian_code(2, 5)
    assert linear_code.min_distance(
        linear_code.dual(code)) >= families.dual_designed_distance(spec)
    assert families.dual_designed_distance(
        families.point_set_spec(F5, [(1, 0)])) is None


def test_with_degree():
    spec = families.rs_spec(F7, range(7), 3)
    assert families.with_degree(spec, 4) == families.rs_spec(F7, range(7), 5)
    _, herm = families.hermitian_code(2, 3)
    assert families.with_degree(herm, 5) == families.hermitian_spec(2, 5)
    with pytest.raises(ValueError):
        families.with_degree(families.point_set_spec(F5, [(1, 0)]), 1)


def test_shamir_points():
    assert families.shamir_points(F7, 7) == [1, 2, 3, 4, 5, 6, 0]
    with pytest.raises(TooManyPoints):
        families.shamir_points(F7, 8)


def test_curve_points():
    spec = families.rs_spec(F7, range(7), 3)
    code = families.evaluation_code(spec)
    curve = families.curve_points(spec)
    assert len(curve) == 8
    columns = {
        projective.normalize_point(F7, col) for col in code.gen.entries.T
    }
    assert columns <= set(curve)
    _, herm = families.hermitian_code(2, 3)
    assert len(families.curve_points(herm)) == 9


@pytest.mark.parametrize('x,n,k', [
    ('rs:q=7,k=3', 7, 3),
    ('rs:q=7,n=5,k=2', 5, 2),
    ('rs:q=7,k=2,points=1|3|5', 3, 2),
    ('shamir:q=7,n=7,k=3', 7, 3),
    ('herm:q0=2,m=3', 8, 3),
    ('monomial:q=11,exps=0|2|3|4', 11, 4),
    ('planeline:q=5', 36, 4),
    ('random:q=7,n=8,k=3,seed=4', 8, 3),
])
def test_build_from_spec_string(x, n, k):
    code, spec = families.build_from_spec_string(x)
    assert (code.n, code.k) == (n, k)
    if x.startswith('random'):
        assert spec is None
    else:
        assert families.evaluation_code(spec) == code


def test_build_from_spec_string_shamir_points():
    _, spec = families.build_from_spec_string('shamir:q=7,n=5,k=2')
    assert spec.points == (1, 2, 3, 4, 0)


@pytest.mark.parametrize('x,error', [
    ('bch:q=7,k=3', SpecFormatError),
    ('rs:q=7', SpecFormatError),
    ('rs:q=7,k=3,color=red', SpecFormatError),
    ('rs:q=7,k=2,n=4,points=1|2', SpecFormatError),
    ('rs:q=7,k=1|2', SpecFormatError),
    ('rs:q=6,k=2', SpecFormatError),
    ('rs:q=7,n=9,k=2', ValueError),
    ('herm:q0=2,m=9', BadDegree),
    ('monomial:q=7', SpecFormatError),
])
def test_build_from_spec_string_errors(x, error):
    with pytest.raises(error):
        families.build_from_spec_string(x)


def test_evaluation_matrix_rows_are_monomials():
    spec = families.monomial_spec(F7, [2, 3], [0, 3])
    gen = families._evaluation_matrix(spec)
    assert gen.tolist() == [[1, 1], [1, 6]]
    code = families.evaluation_code(spec)
    assert code == linear_code.from_generator(MatrixFq(F7, gen))
    assert np.array_equal(code.gen.entries, [[1, 0], [0, 1]])
