import pytest

from HigherPowerSums.extra.suites import Suite, RecRel1, Impl1, suites
from HigherPowerSums.verifier import Verifier, VerificationReport


class Parity(Suite):
    """fails at odd m"""
    name = 'parity'
    parameters = ('m',)

    def call(self, m):
        report = VerificationReport(self.name)
        report.record({'m': m}, m % 2, 0)
        return report


def test_record_and_counts():
    report = VerificationReport('demo')
    assert report.record({'m': 1}, 2, 2)
    assert not report.record({'m': 2}, 1, 2)
    report.record({'m': 3}, 'x', 'nonzero', ok=True)
    assert (report.passed, report.failed) == (2, 1)
    assert report.failures == [({'m': 2}, 1, 2)]
    assert not report
    assert report.summary() == 'demo: 2 passed, 1 failed'


def test_merge_is_sorted():
    a, b = VerificationReport('x'), VerificationReport('x')
    b.record({'m': 2, 'k': 1}, 1, 1)
    a.record({'m': 1, 'k': 2}, 1, 1)
    b.record({'m': 1, 'k': 1}, 1, 1)
    merged = VerificationReport.merge([b, a])
    assert [p[0] for p in merged.points] == [{'m': 1, 'k': 1}, {'m': 1, 'k': 2}, {'m': 2, 'k': 1}]
    assert merged.name == 'x'
    assert VerificationReport.merge([]).ok


def test_rows_and_dict():
    report = VerificationReport('demo')
    report.record({'m': 1, 'check': 'first'}, 3, 4)
    assert report.rows() == [{'m': 1, 'check': 'first', 'lhs': '3', 'rhs': '4', 'result': 'FAIL'}]
    payload = report.to_dict()
    assert payload['identity'] == 'demo'
    assert payload['grid'] == [{'m': 1}]
    assert payload['failures'] == [{'params': {'m': 1, 'check': 'first'}, 'lhs': '3', 'rhs': '4'}]


def test_verifier_failures():
    report = Verifier(Parity(), {'m': [0, 1, 2, 3]}).run()
    assert report.passed == 2
    assert [params['m'] for params, _, _ in report.failures] == [1, 3]


def test_verifier_validates_grid():
    with pytest.raises(ValueError, match='missing'):
        Verifier(RecRel1(), {'m': [1]})
    with pytest.raises(ValueError, match='unexpected'):
        Verifier(RecRel1(), {'m': [1], 'k': [1], 'n': [1]})
    with pytest.raises(ValueError):
        Verifier(RecRel1(), {'m': [1], 'k': [1]}, workers=0)


def test_preconditions_filter_points():
    verifier = Verifier(Impl1(), {'m': [1], 'k': [1, 2], 'r': [1, 2, 3]})
    assert verifier.points() == [{'m': 1, 'k': 1, 'r': 1}, {'m': 1, 'k': 2, 'r': 1}, {'m': 1, 'k': 2, 'r': 2}]


def test_workers_do_not_change_the_report():
    grid = {'m': list(range(6)), 'k': [1, 2, 3]}
    serial = Verifier(RecRel1(), grid, workers=1).run()
    parallel = Verifier(RecRel1(), grid, workers=4).run()
    assert serial.ok
    assert serial.rows() == parallel.rows()


def test_every_suite_passes_on_a_small_grid():
    small = {'m': [1, 3], 'k': [1, 2], 'n': [1, 2], 'r': [1, 2]}
    for name, cls in suites.items():
        report = Verifier(cls(), {p: small[p] for p in cls.parameters}).run()
        assert report.ok, (name, report.failures)
