import time

import pytest

from vertex_dwpf.exceptions import ConfigError
from vertex_dwpf.model.VerificationReport import VerificationReport
from vertex_dwpf.service.CheckRunner import CheckRunner, CheckJob


def make_job(name: str, delay: float = 0.0, residual: float = 0.0) -> CheckJob:
    def run():
        time.sleep(delay)
        report = VerificationReport(name, {'family': 'da'}, 1e-9)
        report.add_residual(residual)
        return report

    return CheckJob(name, {'family': 'da'}, run)


def failing_job(name: str) -> CheckJob:
    def run():
        raise RuntimeError('boom')

    return CheckJob(name, {'family': 'da'}, run)


def test_inline():
    reports = CheckRunner().run([make_job('a'), make_job('b', residual=1.0)])
    assert ['a', 'b'] == [r.name for r in reports]
    assert [True, False] == [r.passed for r in reports]


def test_threads_preserve_order():
    jobs = [make_job('slow', delay=0.2), make_job('fast'), make_job('middle', delay=0.1)]
    reports = CheckRunner(threads=2).run(jobs)
    assert ['slow', 'fast', 'middle'] == [r.name for r in reports]
    assert all(r.passed for r in reports)


def test_exception_becomes_failed_report():
    for threads in [1, 2]:
        reports = CheckRunner(threads=threads).run([make_job('a'), failing_job('b')])
        assert ['a', 'b'] == [r.name for r in reports]
        assert reports[0].passed
        assert not reports[1].passed
        assert ['Check raised RuntimeError: boom'] == reports[1].notes


def test_empty():
    assert [] == CheckRunner(threads=2).run([])


def test_invalid_threads():
    with pytest.raises(ConfigError):
        CheckRunner(threads=0)
