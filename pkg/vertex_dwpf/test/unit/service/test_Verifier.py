import numpy as np
import pytest

from vertex_dwpf.exceptions import PreconditionError
from vertex_dwpf.model.YBEInstance import YBEInstance
from vertex_dwpf.model.weights.DAWeightTable import DAWeightTable
from vertex_dwpf.model.weights.PSWeightTable import PSWeightTable
from vertex_dwpf.model.weights.da_tables import to_plugin_document
from vertex_dwpf.service.PluginTableLoader import register_plugin_table
from vertex_dwpf.service.Verifier import Verifier

VERIFIER = Verifier(seed=1, ybe_samples=5, dwpf_samples=3)

# default sample counts: 100 Yang-Baxter instances and 25 draws per lattice check
FULL_VERIFIER = Verifier()

DA_TABLES = [DAWeightTable.builtin(N) for N in [2, 3, 4]]
PS_TABLES = [PSWeightTable.create(r, s) for r, s in [(0, 0), (1, 1), (2, 1)]]

GRADINGS = [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_ybe():
    for table in DA_TABLES + PS_TABLES:
        report = VERIFIER.check_ybe(table)
        assert report.passed, report.notes
        assert 5 == report.samples


def test_ybe_other_roots_of_unity():
    for N, n in [(3, 2), (4, 3)]:
        assert VERIFIER.check_ybe(DAWeightTable.builtin(N, n)).passed


def test_ybe_single_component():
    table = DA_TABLES[1]
    instance = YBEInstance(0.1, 0.2, -0.3, 0.1j, 0.05, -0.2, indices=(1, 2, 3, 3, 2, 1))
    assert VERIFIER.ybe_residual(table, instance) < 1e-10


def test_ybe_detects_perturbation():
    table = DA_TABLES[0].perturbed((1, 2, 1, 2), 1.001)
    assert not VERIFIER.check_ybe(table).passed


def test_factorization():
    for table in DA_TABLES:
        for L in [1, 2, 3]:
            report = VERIFIER.check_factorization(table, L)
            assert report.passed, report.notes

    for table in PS_TABLES:
        for L in [1, 2, 3]:
            assert VERIFIER.check_factorization(table, L).passed


def test_factorization_reproducible():
    first = Verifier(seed=3, dwpf_samples=2).check_factorization(DA_TABLES[1], 2)
    second = Verifier(seed=3, dwpf_samples=2).check_factorization(DA_TABLES[1], 2)
    assert first.residuals == second.residuals


def test_engines():
    for table in DA_TABLES + PS_TABLES[:2]:
        assert VERIFIER.check_engine_agreement(table, 2).passed


def test_property1():
    for table in DA_TABLES:
        for L in [2, 3]:
            report = VERIFIER.check_property1(table, L)
            assert report.passed, report.notes
    for table in PS_TABLES[:2]:
        assert VERIFIER.check_property1(table, 3).passed


def test_property2():
    for table in DA_TABLES + PS_TABLES[:2]:
        for L in [2, 3]:
            report = VERIFIER.check_property2_zeros(table, L)
            assert report.passed, report.notes


def test_property3():
    for table in DA_TABLES + PS_TABLES:
        for L in [2, 3]:
            assert VERIFIER.check_property3_recursion(table, L).passed


def test_property3_needs_two_lines():
    with pytest.raises(PreconditionError):
        VERIFIER.check_property3_recursion(DA_TABLES[0], 1)
    with pytest.raises(PreconditionError):
        VERIFIER.check_closed_form_recursion(DA_TABLES[0], 1)


def test_closed_form_recursion():
    for table in DA_TABLES + PS_TABLES:
        assert VERIFIER.check_closed_form_recursion(table, 4).passed


def test_property4():
    for table in DA_TABLES + PS_TABLES:
        report = VERIFIER.check_property4(table)
        assert report.passed
        assert 1 == report.model['L']


def test_permutation():
    for table in DA_TABLES + PS_TABLES[:2]:
        assert VERIFIER.check_line_permutation(table, 3).passed


def test_permutation_single_line():
    report = VERIFIER.check_line_permutation(DA_TABLES[0], 1)
    assert report.passed
    assert 0 == report.samples


def test_freezing():
    for table in DA_TABLES + PS_TABLES[:2]:
        report = VERIFIER.check_boundary_freezing(table, 2)
        assert report.passed, report.notes


def test_column_structure():
    for table in DA_TABLES:
        report = VERIFIER.check_column_structure(table)
        assert report.passed, report.notes

    report = VERIFIER.check_column_structure(PS_TABLES[0])
    assert 0 == report.samples


def test_symmetries():
    for table in DA_TABLES + PS_TABLES:
        report = VERIFIER.check_table_symmetries(table)
        assert report.passed, report.notes


def test_rs_independence():
    report = VERIFIER.check_rs_independence([(0, 0), (0, 1), (1, 0), (1, 1)], 2, trials=2)
    assert report.passed
    # one reference per trial for each boundary choice of each grading
    assert 2 * (1 + 2 + 2 + 4) == report.samples


def test_rs_independence_needs_grading():
    with pytest.raises(PreconditionError):
        VERIFIER.check_rs_independence([], 2)


def test_mutation():
    report = Verifier(seed=1, ybe_samples=3, dwpf_samples=3).check_mutation_sensitivity(DA_TABLES[0], targets=10,
                                                                                         trials=3)
    assert report.passed, report.notes
    assert 10 == report.samples


def test_conjecture_probe_reproduces_builtin():
    table = DA_TABLES[1]
    plugin = register_plugin_table(3, to_plugin_document(3)['entries'], allow_builtin_sizes=True)

    native = VERIFIER.conjecture_probe_reports(table, 2)
    probed = VERIFIER.conjecture_probe_reports(plugin, 2)

    assert [r.name for r in native] == [r.name for r in probed]
    for expected, actual in zip(native, probed):
        assert expected.passed
        assert actual.passed
        assert np.allclose(expected.residuals, actual.residuals, rtol=0, atol=1e-12)

    summary = VERIFIER.run_conjecture_probe(plugin, 2)
    assert summary.passed
    assert 'conjecture-probe' == summary.name


def test_conjecture_probe_needs_entries():
    with pytest.raises(PreconditionError):
        VERIFIER.run_conjecture_probe(register_plugin_table(5, []))


def test_checks_for():
    checks = VERIFIER.checks_for(DA_TABLES[0], ['ybe', 'prop4'], 2)
    assert ['ybe', 'prop4'] == list(checks)
    assert checks['prop4']().passed


def test_checks_for_unknown():
    with pytest.raises(PreconditionError):
        VERIFIER.checks_for(DA_TABLES[0], ['ybe', 'nonsense'], 2)


def test_factorized():
    table = DA_TABLES[0]
    params = VERIFIER.random_params(table, np.random.default_rng(2), 2)
    assert VERIFIER.factorized(table, params) == VERIFIER.closed_forms.dwpf_factorized_da(params, 2).value


@pytest.mark.parametrize('N', [2, 3, 4])
def test_ybe_default_samples_da(N):
    report = FULL_VERIFIER.check_ybe(DAWeightTable.builtin(N))
    assert report.passed, report.notes
    assert 100 == report.samples


@pytest.mark.parametrize('r,s', GRADINGS + [(2, 1)])
def test_ybe_default_samples_ps(r, s):
    report = FULL_VERIFIER.check_ybe(PSWeightTable.create(r, s))
    assert report.passed, report.notes
    assert 100 == report.samples


@pytest.mark.parametrize('N,L', [(N, L) for N in [2, 3, 4] for L in [1, 2, 3]] + [(2, 4), (2, 5), (2, 6)])
def test_factorization_default_draws_da(N, L):
    report = FULL_VERIFIER.check_factorization(DAWeightTable.builtin(N), L)
    assert report.passed, report.notes
    assert 25 == report.samples


@pytest.mark.parametrize('r,s,L', [(r, s, L) for r, s in GRADINGS for L in [1, 2, 3, 4]])
def test_factorization_default_draws_ps(r, s, L):
    report = FULL_VERIFIER.check_factorization(PSWeightTable.create(r, s), L)
    assert report.passed, report.notes
    assert 25 == report.samples


@pytest.mark.parametrize('N,L', [(N, L) for N in [2, 3, 4] for L in [2, 3]] + [(2, 4)])
def test_property1_default_draws_da(N, L):
    report = FULL_VERIFIER.check_property1(DAWeightTable.builtin(N), L)
    assert report.passed, report.notes
    assert 25 == report.samples


@pytest.mark.parametrize('r,s,L', [(r, s, L) for r, s in GRADINGS + [(2, 1)] for L in [2, 3]])
def test_property1_default_draws_ps(r, s, L):
    report = FULL_VERIFIER.check_property1(PSWeightTable.create(r, s), L)
    assert report.passed, report.notes
    assert 25 == report.samples


def test_conjecture_probe_detects_perturbed_plugin():
    document = to_plugin_document(3)
    for entry in document['entries']:
        if (1, 1, 1, 1) == (entry['iota1'], entry['iota2'], entry['kappa2'], entry['kappa1']):
            entry['formula'] = f"(1 + 1/1000)*({entry['formula']})"
    plugin = register_plugin_table(3, document['entries'], allow_builtin_sizes=True)

    reports = VERIFIER.conjecture_probe_reports(plugin, 2)
    assert 'ybe' == reports[0].name
    assert not reports[0].passed

    summary = VERIFIER.run_conjecture_probe(plugin, 2)
    assert not summary.passed
    assert any(note.startswith('ybe [') and 'pass=False' in note for note in summary.notes)


def test_conjecture_probe_rejects_zero_plugin():
    entries = [{'iota1': i1, 'iota2': i2, 'kappa2': k2, 'kappa1': k1, 'formula': '0'}
               for i1, i2, k2, k1 in [(1, 5, 1, 5), (1, 1, 1, 1), (5, 5, 5, 5)]]
    plugin = register_plugin_table(5, entries)

    reports = VERIFIER.conjecture_probe_reports(plugin, 2)
    factorization = [report for report in reports if 'factorization' == report.name]
    assert [1, 2] == [report.model['L'] for report in factorization]
    assert not any(report.passed for report in factorization)
    assert not VERIFIER.run_conjecture_probe(plugin, 2).passed
