import collections
import logging

import numpy as np
import pytest

from .errors import DependentColumns, TooLargeToEnumerate, ZeroCode
from . import families
from .field import field_create
from . import hull
from . import linear_code
from .matfq import MatrixFq
from . import projective
from .test_util import matrix

F4 = field_create(2, 2)
F5 = field_create(5)
F7 = field_create(7)
F9 = field_create(3, 2)
F11 = field_create(11)


def test_quadratic_monomials():
    assert hull.quadratic_monomials(1) == [(0, 0)]
    assert hull.quadratic_monomials(3) == [(0, 0), (0, 1), (0, 2), (1, 1),
                                          (1, 2), (2, 2)]
    assert len(hull.quadratic_monomials(6)) == 21


def test_reed_solomon_conic():
    spec = families.rs_spec(F7, range(7), 3)
    code = families.evaluation_code(spec)
    report = hull.hull_report(code, spec)
    assert report.dim_square == 5
    assert report.dim_i2 == 1
    assert report.num_monomials == 6
    assert report.exact_sequence
    assert report.hull_count == 8
    assert report.contains_code_points
    assert report.degree_hypotheses_hold is True
    assert report.hull_equals_curve is True
    assert report.gamma == 0
    assert report.square_at_most_3k_minus_4
    assert not report.gamma_in_freiman_range


def test_twisted_cubic():
    spec = families.rs_spec(F11, range(11), 4)
    report = hull.hull_report(families.evaluation_code(spec), spec)
    assert report.dim_i2 == 3
    assert report.hull_count == 12
    assert report.hull_equals_curve is True


@pytest.mark.parametrize('k', [2, 3, 4])
def test_rational_normal_curve_ideal(k):
    code = families.reed_solomon(F7, range(7), k)
    ideal = hull.quadric_ideal(hull.points_from_code(code))
    assert ideal.basis.rows == (k - 1) * (k - 2) // 2


def test_plane_and_line():
    code, spec = families.build_from_spec_string('planeline:q=5')
    report = hull.hull_report(code, spec)
    assert (report.n, report.k) == (36, 4)
    assert report.dim_i2 == 2
    assert report.dim_square == 8
    assert report.hull_count == 36
    assert report.degree_hypotheses_hold is None


def test_hermitian_degree_too_large(caplog):
    code, spec = families.hermitian_code(2, 6)
    with caplog.at_level(logging.WARNING):
        report = hull.hull_report(code, spec)
    assert report.degree_hypotheses_hold is False
    assert 'need not equal the curve' in caplog.text
    assert report.exact_sequence


def test_hermitian_hull_is_curve():
    code, spec = families.hermitian_code(3, 8)
    report = hull.hull_report(code, spec)
    assert report.degree_hypotheses_hold is True
    assert report.hull_count == 28
    assert report.hull_equals_curve is True


def test_random_code_has_trivial_hull():
    seed = 0
    while True:
        code = linear_code.random_code(F7, 10, 4, seed)
        seed += 1
        if linear_code.square(code).k != 10:
            continue
        try:
            report = hull.hull_report(code)
        except DependentColumns:
            continue
        break
    assert report.dim_i2 == 0
    assert report.hull_count == 7**3 + 7**2 + 7 + 1
    assert report.hull_equals_curve is None


def test_points_from_code():
    ps = hull.points_from_code(
        linear_code.from_generator(matrix(F7, [[1, 0, 3], [0, 1, 2]])))
    assert ps.k == 2
    assert ps.points == ((1, 0), (0, 1), (1, 3))


@pytest.mark.parametrize('rows,pair', [
    ([[1, 2, 0], [0, 0, 1]], (0, 1)),
    ([[1, 0, 2], [0, 0, 1]], (1, 1)),
    ([[1, 0, 0, 3], [0, 1, 0, 0], [0, 0, 1, 0]], (0, 3)),
])
def test_dependent_columns(rows, pair):
    code = linear_code.from_generator(matrix(F7, rows))
    with pytest.raises(DependentColumns) as info:
        hull.points_from_code(code)
    assert info.value.pair == pair


def test_zero_code():
    with pytest.raises(ZeroCode):
        hull.points_from_code(linear_code.zero_code(F7, 3))


def test_evaluate_quadrics():
    ideal = hull.QuadricIdeal(
        ctx=F7, k=2, basis=matrix(F7, [[0, 1, 0]]))
    values = hull.evaluate_quadrics(ideal, np.array([[1, 0], [1, 1], [2, 3]]))
    assert values.tolist() == [[0], [1], [6]]


def test_hull_points_without_quadrics():
    ideal = hull.QuadricIdeal(ctx=F5, k=3, basis=MatrixFq.zeros(F5, 0, 6))
    assert len(hull.hull_points(ideal).points) == 31


def test_hull_points_too_large():
    ideal = hull.QuadricIdeal(ctx=F11, k=7, basis=MatrixFq.zeros(F11, 0, 28))
    with pytest.raises(TooLargeToEnumerate):
        hull.hull_points(ideal)


def test_exact_sequence_on_random_codes():
    fields = [F4, F9, F11]
    verified = collections.Counter()  # type: collections.Counter
    seed = 0
    while sum(verified.values()) < 500:
        assert seed < 20000
        rng = np.random.default_rng(seed)
        ctx = min(fields, key=lambda f: verified[f.q])
        k = int(rng.integers(2, 5))
        n = int(rng.integers(k + 1,
                             min(10, projective.num_points(ctx.q, k)) + 1))
        code = linear_code.random_code(ctx, n, k, seed)
        seed += 1
        try:
            ideal = hull.quadric_ideal(hull.points_from_code(code))
        except DependentColumns:
            continue
        assert (linear_code.square(code).k + ideal.basis.rows ==
                k * (k + 1) // 2)
        assert hull.verify_exact_sequence(code)
        verified[ctx.q] += 1
    assert min(verified.values()) >= 166


def test_gamma_matches_linear_code():
    for k in [2, 3, 4]:
        code = families.reed_solomon(F11, range(11), k)
        report = hull.hull_report(code)
        assert report.gamma == linear_code.gamma(code) == 0


@pytest.mark.parametrize('spec_string', [
    'rs:q=7,n=7,k=2',
    'rs:q=11,n=11,k=5',
    'shamir:q=7,n=7,k=3',
    'herm:q0=2,m=3',
    'herm:q0=2,m=5',
    'herm:q0=3,m=4',
    'monomial:q=11,exps=0|2|3|4',
    'planeline:q=5',
])
def test_exact_sequence_on_family_codes(spec_string):
    code, _ = families.build_from_spec_string(spec_string)
    assert hull.verify_exact_sequence(code)


@pytest.mark.parametrize('spec_string', [
    'monomial:q=7,exps=0|1|2',
    'monomial:q=7,exps=2|0|1',
    'monomial:q=7,exps=1|2|0',
])
def test_hull_equals_curve_for_any_exponent_order(spec_string):
    code, spec = families.build_from_spec_string(spec_string)
    report = hull.hull_report(code, spec)
    assert report.hull_count == 8
    assert report.hull_equals_curve is True
