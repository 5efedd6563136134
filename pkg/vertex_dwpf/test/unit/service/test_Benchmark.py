import numpy as np
import pytest

from vertex_dwpf.exceptions import ConfigError
from vertex_dwpf.model.weights.DAWeightTable import DAWeightTable
from vertex_dwpf.service.Benchmark import Benchmark, METHODS
from vertex_dwpf.service.LatticeEngine import LatticeEngine
from vertex_dwpf.service.Verifier import Verifier


def test_run():
    benchmark = Benchmark(Verifier(seed=1))
    df = benchmark.run(DAWeightTable.builtin(2), [1, 2], METHODS, np.random.default_rng(1))

    assert ['method', 'L', 'seconds', 'value_re', 'value_im', 'note'] == list(df.columns)
    assert 6 == len(df)
    assert (df['seconds'] >= 0).all()

    for L in [1, 2]:
        values = df[df['L'] == L]
        z = (values['value_re'] + 1j * values['value_im']).tolist()
        assert np.allclose(z, z[0], rtol=1e-9, atol=0)


def test_infeasible_method():
    benchmark = Benchmark(Verifier(engine=LatticeEngine(enumeration_cap=10), seed=1))
    df = benchmark.run(DAWeightTable.builtin(2), [2], ['enumerate', 'contract'], np.random.default_rng(1))

    enumerate_row = df[df['method'] == 'enumerate'].iloc[0]
    assert np.isnan(enumerate_row['seconds'])
    assert np.isnan(enumerate_row['value_re'])
    assert '' != enumerate_row['note']
    assert not np.isnan(df[df['method'] == 'contract'].iloc[0]['value_re'])


def test_unknown_method():
    with pytest.raises(ConfigError):
        Benchmark(Verifier()).evaluator('guess')
