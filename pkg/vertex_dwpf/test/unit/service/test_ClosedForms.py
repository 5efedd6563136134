import numpy as np
import pytest

from vertex_dwpf.exceptions import PreconditionError, IndexRangeError
from vertex_dwpf.model.ModelParams import ModelParams
from vertex_dwpf.model.RootOfUnity import RootOfUnity
from vertex_dwpf.service.ClosedForms import ClosedForms

CLOSED_FORMS = ClosedForms()


def test_single_vertex_da():
    params = ModelParams(u=[0.4], v=[0.1], alpha=[0.3j], beta=[0.2])
    value = CLOSED_FORMS.dwpf_factorized_da(params, 3)
    rho = RootOfUnity(1, 3)
    expected = np.exp(2 * 0.3)
    for k in range(2):
        expected *= np.sqrt(1 - rho.power(k) * (0.3j) ** 2) * np.sqrt(1 - rho.power(k) * 0.2 ** 2)

    assert abs(value.value - expected) < 1e-14 * abs(expected)
    assert [] == value.vanishing_factors()


def test_single_vertex_ps():
    params = ModelParams(u=[0.5], v=[0.2], eta=0.8)
    assert abs(CLOSED_FORMS.dwpf_factorized_ps(params).value - np.exp(0.8 * 0.3)) < 1e-14


def test_zero_fields_da():
    u = [0.1, -0.2]
    v = [0.3, 0.05]
    params = ModelParams(u=u, v=v)
    expected = np.exp(u[0] - v[0] + 2 * (u[1] - v[1]))
    assert abs(CLOSED_FORMS.dwpf_factorized_da(params, 2).value - expected) < 1e-14


def test_da_zero_points_vanish_exactly():
    params = ModelParams.random_da(np.random.default_rng(1), 3, RootOfUnity(1, 3), 0.9, 0.1)
    points = CLOSED_FORMS.da_zero_points(params, 3)
    assert 4 == len(points)

    for j, k, u1 in points:
        value = CLOSED_FORMS.dwpf_factorized_da(params.with_u(0, u1), 3)
        assert 0 == value.value
        assert [f'(1 - rho^{j - 1} alpha_1 alpha_{k} e^(u_1 - u_{k}))'] == value.vanishing_factors()


def test_ps_zero_points_vanish_exactly():
    params = ModelParams.random_ps(np.random.default_rng(2), 3, 1.0)
    points = CLOSED_FORMS.ps_zero_points(params)
    assert [2, 3] == [k for k, _ in points]

    for k, u1 in points:
        value = CLOSED_FORMS.dwpf_factorized_ps(params.with_u(0, u1))
        assert 0 == value.value
        assert [f'R^(1,1)_(1,1)(u_1 - u_{k})'] == value.vanishing_factors()


def test_zero_points_need_fields():
    params = ModelParams(u=[0.1, 0.2], v=[0, 0])
    with pytest.raises(PreconditionError):
        CLOSED_FORMS.da_zero_points(params, 2)


def test_root_of_unity_mismatch():
    params = ModelParams(u=[0.1], v=[0], rho=RootOfUnity(1, 3))
    with pytest.raises(PreconditionError):
        CLOSED_FORMS.dwpf_factorized_da(params, 2)
    with pytest.raises(IndexRangeError):
        CLOSED_FORMS.dwpf_factorized_da(params, 1)


def test_ps_needs_eta():
    with pytest.raises(PreconditionError):
        CLOSED_FORMS.dwpf_factorized_ps(ModelParams(u=[0.1], v=[0]))


def test_da_substitution_point():
    params = ModelParams(u=[0.1, 0.2], v=[0.3, 0.4], alpha=[0.5, 0.2], beta=[0.1, 0.25])
    point = CLOSED_FORMS.da_substitution_point(params)
    assert abs(np.exp(point.u[0]) - 0.25 / 0.5 * np.exp(0.4)) < 1e-14
    assert params.u[1] == point.u[1]


def test_da_substitution_point_needs_fields():
    with pytest.raises(PreconditionError):
        CLOSED_FORMS.da_substitution_point(ModelParams(u=[0.1, 0.2], v=[0.3, 0.4]))


def test_recursion_rhs_single_vertex():
    # with the empty lattice as reduced value the right-hand side is the 1 x 1 partition function
    for N in [2, 3, 4]:
        params = ModelParams.random_da(np.random.default_rng(N), 1, RootOfUnity(1, N), 0.9, 0.1)
        point = CLOSED_FORMS.da_substitution_point(params)
        expected = CLOSED_FORMS.dwpf_factorized_da(point, N).value
        assert abs(CLOSED_FORMS.da_recursion_rhs(point, N, 1) - expected) < 1e-12 * abs(expected)

    params = CLOSED_FORMS.ps_substitution_point(ModelParams(u=[0.3], v=[-0.1], eta=1.0))
    assert abs(CLOSED_FORMS.ps_recursion_rhs(params, 1) - 1) < 1e-14


def test_recursion_rhs_matches_factorized():
    for N in [2, 3, 4]:
        params = ModelParams.random_da(np.random.default_rng(10 + N), 3, RootOfUnity(1, N), 0.9, 0.1)
        point = CLOSED_FORMS.da_substitution_point(params)
        reduced_Z = CLOSED_FORMS.dwpf_factorized_da(point.reduced(), N).value
        expected = CLOSED_FORMS.dwpf_factorized_da(point, N).value
        assert abs(CLOSED_FORMS.da_recursion_rhs(point, N, reduced_Z) - expected) < 1e-9 * abs(expected)

    params = CLOSED_FORMS.ps_substitution_point(ModelParams.random_ps(np.random.default_rng(5), 3, 1.0))
    reduced_Z = CLOSED_FORMS.dwpf_factorized_ps(params.reduced()).value
    expected = CLOSED_FORMS.dwpf_factorized_ps(params).value
    assert abs(CLOSED_FORMS.ps_recursion_rhs(params, reduced_Z) - expected) < 1e-9 * abs(expected)


def test_recursion_rhs_off_substitution_point():
    params = ModelParams(u=[0.1, 0.2], v=[0.3, 0.4], alpha=[0.5, 0.2], beta=[0.1, 0.25])
    with pytest.raises(PreconditionError):
        CLOSED_FORMS.da_recursion_rhs(params, 2, 1)
    with pytest.raises(PreconditionError):
        CLOSED_FORMS.ps_recursion_rhs(ModelParams(u=[0.1, 0.2], v=[0.3, 0.4], eta=1.0), 1)
