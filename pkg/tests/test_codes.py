from __future__ import annotations

import pytest

from pumdp.codes import (
    CauchySpec,
    ConvCode,
    build_X,
    cauchy_matrix,
    compute_degree,
    fixed_degree_construct,
    default_q,
    primitive_element,
    sliding_matrix,
    cauchy_construct,
    guaranteed_degree,
)
from pumdp.errors import CapacityError, FieldError, ParameterError, UsageError
from pumdp.gf import Level, min_poly_degree, tower_create
from pumdp.matrix import FieldMatrix, is_superregular


@pytest.mark.parametrize("delta,d", [(1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (6, 10)])
def test_guaranteed_degree(delta, d):
    # ceil((delta^2 - 1) / 4) + 1 worked by hand
    assert guaranteed_degree(delta) == d


@pytest.mark.parametrize("n,k,q,d", [(3, 2, 5, 1), (5, 3, 8, 2), (7, 4, 11, 3), (8, 5, 13, 3), (9, 5, 16, 5)])
def test_defaults(n, k, q, d):
    code = cauchy_construct(n, k)
    assert default_q(n, k) == q
    assert (code.tower.q, code.tower.d) == (q, d)
    assert code.delta == n - k and code.L == 1


def test_small_code_matrices():
    code = cauchy_construct(3, 2)
    # 1 / (alpha_j - beta_i) over F_5 with betas 0, 1 and alphas 2, 3, 4
    assert code.G0.codes() == [[3, 2, 4], [1, 3, 2]]
    # alpha is the smallest primitive element of F_5
    assert code.G1.codes() == [[2, 0, 0], [0, 0, 0]]
    assert code.G0.level is Level.BASE


def test_g1_pattern_and_alpha():
    code = cauchy_construct(7, 4)
    a = code.alpha
    assert a == code.tower.generator()
    assert min_poly_degree(a) == code.tower.d
    nz = code.G1.nonzero_entries()
    assert [(i, j) for i, j, _ in nz] == [(0, 0), (1, 1), (2, 2)]
    assert [v for _, _, v in nz] == [a, a**2, a**3]


def test_family_precondition():
    with pytest.raises(ParameterError):
        cauchy_construct(4, 2)
    with pytest.raises(ParameterError):
        cauchy_construct(5, 2)
    with pytest.raises(ParameterError):
        cauchy_construct(3, 3)


def test_field_too_small():
    with pytest.raises(CapacityError):
        cauchy_construct(5, 3, q=7)


def test_cauchy_points_must_differ():
    t = tower_create(7)
    pts = [t.element(v, Level.BASE) for v in (1, 2, 1)]
    with pytest.raises(FieldError, match=r"beta\[0\] and alpha\[1\]"):
        CauchySpec(alphas=tuple(pts[1:]), betas=tuple(pts[:1]))


def test_cauchy_override():
    code = cauchy_construct(3, 2, cauchy_points=([4, 3], [0, 1, 2]))
    assert code.G0.codes()[0] == [1, 3, 2]  # 1/(0-4), 1/(1-4), 1/(2-4) = 1/1, 1/2, 1/3 over F_5


@pytest.mark.parametrize("q", [7, 11])
def test_cauchy_superregular(q):
    t = tower_create(q)
    pts = [t.element(v, Level.BASE) for v in range(6)]
    G = cauchy_matrix(CauchySpec(tuple(pts[2:]), tuple(pts[:2])))
    assert is_superregular(G)


def test_build_x_checks():
    t = tower_create(5)
    a = t.element(2)
    assert build_X(2, 1, a).codes() == [[2], [0]]
    with pytest.raises(ParameterError):
        build_X(1, 2, a)
    with pytest.raises(ParameterError):
        build_X(2, 1, t.zero())


def test_primitive_elements():
    assert primitive_element(tower_create(5)).value == 2
    assert primitive_element(tower_create(7)).value == 3
    assert primitive_element(tower_create(11)).value == 2


def test_sliding_matrix_layout():
    code = cauchy_construct(3, 2)
    S = sliding_matrix(code, 2).body
    assert S.shape == (6, 9)
    assert S.codes()[0][:6] == [3, 2, 4, 2, 0, 0]
    assert S.codes()[2][:3] == [0, 0, 0]
    assert S.codes()[4][6:] == [3, 2, 4]
    with pytest.raises(UsageError):
        sliding_matrix(code, -1)


@pytest.mark.parametrize("n,k", [(3, 2), (5, 3), (7, 4)])
def test_computed_degree_is_n_minus_k(n, k):
    assert compute_degree(cauchy_construct(n, k)) == n - k


def test_computed_degree_zero_g1():
    code = cauchy_construct(3, 2)
    flat = ConvCode(code.tower, 3, 2, 1, code.G0, FieldMatrix.zeros(code.tower, 2, 3))
    assert compute_degree(flat) == 0


def test_fixed_degree_construct_uses_given_degree():
    code = fixed_degree_construct(9, 5, 4, seed=7)
    assert (code.tower.q, code.tower.d) == (16, 4)
    assert code.G1.level is Level.EXT
    again = fixed_degree_construct(9, 5, 4, seed=7)
    assert again.tower.f == code.tower.f
    with pytest.raises(ParameterError):
        fixed_degree_construct(9, 5, 0)


def test_convcode_shape_checks():
    code = cauchy_construct(3, 2)
    with pytest.raises(UsageError):
        ConvCode(code.tower, 3, 2, 1, code.G0, FieldMatrix.zeros(code.tower, 2, 4))
