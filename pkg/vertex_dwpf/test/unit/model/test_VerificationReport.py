import math

import pytest

from vertex_dwpf.exceptions import ConfigError
from vertex_dwpf.model.VerificationReport import VerificationReport


def test_pass():
    report = VerificationReport('ybe', {'family': 'da', 'N': 2}, 1e-10, seed=1)
    report.add_residuals([1e-12, 3e-12])

    assert report.passed
    assert 2 == report.samples
    assert 3e-12 == report.max_residual
    assert abs(report.mean_residual - 2e-12) < 1e-25


def test_fail():
    report = VerificationReport('factorization', {}, 1e-9)
    report.add_residual(1e-12)
    report.add_residual(1e-3)
    assert not report.passed


def test_not_finite_fails():
    report = VerificationReport('factorization', {}, 1e-9)
    report.add_residual(float('nan'))
    assert math.inf == report.max_residual
    assert not report.passed


def test_fail_with_note():
    report = VerificationReport('symmetries', {}, 1e-9)
    report.fail('Weights invariant under conjugation')
    assert not report.passed
    assert ['Weights invariant under conjugation'] == report.notes


def test_empty_passes():
    assert VerificationReport('permutation', {}, 1e-9).passed


def test_to_dict():
    report = VerificationReport('prop4', {'family': 'ps', 'L': 1}, 1e-9, seed=42)
    report.add_residual(0.5)
    report.add_note('note')

    assert {
        'name': 'prop4',
        'model': {'family': 'ps', 'L': 1},
        'seed': 42,
        'samples': 1,
        'max_residual': 0.5,
        'mean_residual': 0.5,
        'tolerance': 1e-9,
        'pass': False,
        'notes': ['note'],
    } == report.to_dict()


def test_to_dict_infinite_residual():
    report = VerificationReport('prop4', {}, 1e-9)
    report.fail('raised')
    assert report.to_dict()['max_residual'] is None


def test_name_required():
    with pytest.raises(ConfigError):
        VerificationReport(None, {}, 1e-9)
