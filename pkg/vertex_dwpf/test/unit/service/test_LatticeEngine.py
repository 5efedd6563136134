import numpy as np
import pytest

from vertex_dwpf.exceptions import CapacityError, IndexRangeError
from vertex_dwpf.model.BoundaryCondition import BoundaryCondition
from vertex_dwpf.model.LatticeSpec import LatticeSpec
from vertex_dwpf.model.ModelParams import ModelParams
from vertex_dwpf.model.RootOfUnity import RootOfUnity
from vertex_dwpf.model.weights.DAWeightTable import DAWeightTable
from vertex_dwpf.model.weights.PSWeightTable import PSWeightTable
from vertex_dwpf.service.LatticeEngine import LatticeEngine
from vertex_dwpf.service.PluginTableLoader import register_plugin_table

ENGINE = LatticeEngine()

TABLE_N2 = DAWeightTable.builtin(2)
TABLE_N3 = DAWeightTable.builtin(3)
TABLE_N4 = DAWeightTable.builtin(4)


def random_da_spec(table: DAWeightTable, L: int, seed: int) -> LatticeSpec:
    return LatticeSpec(ModelParams.random_da(np.random.default_rng(seed), L, table.rho), table)


def relative(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(a), abs(b))


def test_single_vertex_da():
    params = ModelParams(u=[0.3 + 0.1j], v=[-0.2], alpha=[0.2 + 0.1j], beta=[-0.3j])
    spec = LatticeSpec(params, TABLE_N2)
    expected = np.exp(0.5 + 0.1j) * np.sqrt(1 - (0.2 + 0.1j) ** 2) * np.sqrt(1 - (-0.3j) ** 2)

    assert relative(expected, ENGINE.dwpf_enumerate(spec)) < 1e-14
    assert relative(expected, ENGINE.dwpf_contract(spec)) < 1e-14


def test_single_vertex_ps():
    params = ModelParams(u=[1.0], v=[0.0], eta=1.0)
    spec = LatticeSpec(params, PSWeightTable.create(1, 1))
    assert relative(np.e, ENGINE.dwpf_enumerate(spec)) < 1e-14
    assert relative(np.e, ENGINE.dwpf_contract(spec)) < 1e-14


def test_two_by_two_zero_fields():
    # with zero fields only the configuration with a_plus at the top left and c_plus weights on the
    # anti-diagonal survives
    u = np.array([0.1 + 0.2j, -0.3 + 0.1j])
    v = np.array([0.2 - 0.1j, 0.05j])
    spec = LatticeSpec(ModelParams(u=u, v=v), TABLE_N2)
    expected = np.exp(u[0] + 2 * u[1] - v[0] - 2 * v[1])

    assert relative(expected, ENGINE.dwpf_enumerate(spec)) < 1e-13
    assert relative(expected, ENGINE.dwpf_contract(spec)) < 1e-13


def test_contract_matches_enumerate():
    for table in [TABLE_N2, TABLE_N3, TABLE_N4]:
        for L in [2, 3]:
            spec = random_da_spec(table, L, seed=10 * table.N + L)
            assert relative(ENGINE.dwpf_enumerate(spec), ENGINE.dwpf_contract(spec)) < 1e-9


def test_contract_matches_enumerate_ps():
    table = PSWeightTable.create(1, 1, eta=0.7 + 0.2j)
    spec = LatticeSpec(ModelParams.random_ps(np.random.default_rng(4), 3, table.eta), table)
    assert relative(ENGINE.dwpf_enumerate(spec), ENGINE.dwpf_contract(spec)) < 1e-9


def test_parallel_contract_matches_sequential():
    spec = random_da_spec(TABLE_N3, 3, seed=8)
    assert relative(ENGINE.dwpf_contract(spec), ENGINE.dwpf_contract(spec, threads=2)) < 1e-12
    assert relative(ENGINE.dwpf_contract(spec), ENGINE.dwpf_contract(spec, threads=3)) < 1e-12


def test_sequential_contract_deterministic():
    spec = random_da_spec(TABLE_N4, 3, seed=9)
    assert ENGINE.dwpf_contract(spec) == ENGINE.dwpf_contract(spec)


def test_zero_table():
    table = register_plugin_table(5, [])
    spec = LatticeSpec(ModelParams(u=[0.1, 0.2], v=[0.0, 0.3], rho=RootOfUnity(1, 5)), table)
    assert 0 == ENGINE.dwpf_contract(spec)
    assert 0 == ENGINE.dwpf_enumerate(spec)


def test_enumeration_cap():
    engine = LatticeEngine(enumeration_cap=10)
    spec = random_da_spec(TABLE_N2, 2, seed=1)
    assert not engine.enumeration_feasible(2, 2)
    with pytest.raises(CapacityError):
        engine.dwpf_enumerate(spec)


def test_memory_cap():
    engine = LatticeEngine(memory_bytes=100)
    spec = random_da_spec(TABLE_N2, 2, seed=1)
    with pytest.raises(CapacityError):
        engine.dwpf_contract(spec)


def test_dwpf_falls_back_to_enumeration():
    engine = LatticeEngine(memory_bytes=100)
    spec = random_da_spec(TABLE_N2, 2, seed=1)
    assert relative(ENGINE.dwpf_contract(spec), engine.dwpf(spec)) < 1e-12


def test_boundary_mismatch():
    spec = random_da_spec(TABLE_N2, 2, seed=1)
    with pytest.raises(IndexRangeError):
        ENGINE.dwpf_contract(spec, BoundaryCondition.dwbc(2, 3))


def test_identity_permutation():
    spec = random_da_spec(TABLE_N3, 3, seed=2)
    assert ENGINE.dwpf_contract(spec) == ENGINE.dwpf_with_permuted_columns(spec, [1, 2, 3])


def test_swap_columns():
    spec = random_da_spec(TABLE_N2, 2, seed=3)
    params = spec.params
    a_plus, a_minus = TABLE_N2.line_permuters(params.alpha[0], params.alpha[1], params.u[0] - params.u[1])
    swapped = ENGINE.dwpf_with_permuted_columns(spec, [2, 1])
    assert relative(ENGINE.dwpf_contract(spec) * a_minus, a_plus * swapped) < 1e-9


def test_pinned_site_sums_to_total():
    spec = random_da_spec(TABLE_N2, 2, seed=5)
    total = sum(ENGINE.dwpf_contract(spec, pinned={(1, 2): idx}) for idx in TABLE_N2.entries())
    assert relative(ENGINE.dwpf_contract(spec), total) < 1e-12


def test_absolute_scale():
    spec = random_da_spec(TABLE_N2, 2, seed=6)
    scale = ENGINE.absolute_scale(spec)
    assert scale > 0
    assert ENGINE.enumerate_with_scale(spec)[1] == scale
    assert abs(ENGINE.dwpf_contract(spec, absolute=True)) >= scale


def test_ps_boundary_choices():
    table = PSWeightTable.create(1, 1)
    spec = LatticeSpec(ModelParams.random_ps(np.random.default_rng(7), 2, table.eta), table)
    reference = ENGINE.dwpf_contract(spec)
    for sigma_minus in table.space.B_minus:
        for sigma_plus in table.space.B_plus:
            bc = BoundaryCondition.dwbc(table.N, 2, sigma_minus, sigma_plus)
            assert relative(reference, ENGINE.dwpf_contract(spec, bc)) < 1e-9
