from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import TYPE_CHECKING

from tqdm import tqdm

from HigherPowerSums.utils.math import exact_str

if TYPE_CHECKING:
    from HigherPowerSums.extra.suites import Suite

logger = logging.getLogger(__name__)


class VerificationReport:
    """
    VerificationReport collects exact outcomes of one identity over a parameter grid.
    Each point is (params, ok, lhs, rhs); params may carry a 'check' label when one
    grid point verifies several sub-identities.
    """
    def __init__(self, name: str, points: list | None = None):
        self.name = name
        self.points = points if points is not None else list()

    def record(self, params: dict, lhs, rhs, ok: bool | None = None) -> bool:
        """Record one exact comparison

        :param params: grid point, plus optional 'check' label
        :param lhs: left-hand side value
        :param rhs: right-hand side value
        :param ok: outcome override for non-equality predicates, defaults to lhs == rhs
        :return: outcome
        """
        if ok is None:
            ok = lhs == rhs
        ok = bool(ok)
        self.points.append((dict(params), ok, lhs, rhs))
        if not ok:
            logger.debug('%s failed at %s: %s != %s', self.name, params, exact_str(lhs), exact_str(rhs))
        return ok

    def extend(self, other: VerificationReport) -> VerificationReport:
        self.points += other.points
        return self

    @property
    def grid(self) -> list[dict]:
        seen, out = set(), list()
        for params, *_ in self.points:
            key = tuple((k, v) for k, v in params.items() if k != 'check')
            if key not in seen:
                seen.add(key)
                out.append(dict(key))
        return out

    @property
    def passed(self) -> int:
        return sum(ok for _, ok, _, _ in self.points)

    @property
    def failed(self) -> int:
        return len(self.points) - self.passed

    @property
    def failures(self) -> list[tuple]:
        return [(params, lhs, rhs) for params, ok, lhs, rhs in self.points if not ok]

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def __bool__(self):
        return self.ok

    @classmethod
    def merge(cls, reports: list[VerificationReport], name: str | None = None) -> VerificationReport:
        """Concatenate reports in parameter order, independent of completion order"""
        points = [point for report in reports for point in report.points]
        points.sort(key=lambda point: tuple(point[0].items()))
        if name is None:
            name = reports[0].name if reports else 'empty'
        return cls(name, points)

    def rows(self) -> list[dict]:
        rows = list()
        for params, ok, lhs, rhs in self.points:
            row = dict(params)
            row.setdefault('check', 'main')
            row.update({'lhs': exact_str(lhs), 'rhs': exact_str(rhs), 'result': 'pass' if ok else 'FAIL'})
            rows.append(row)
        return rows

    def to_dict(self) -> dict:
        return {
            'identity': self.name,
            'grid': self.grid,
            'passed': self.passed,
            'failed': self.failed,
            'failures': [
                {'params': params, 'lhs': exact_str(lhs), 'rhs': exact_str(rhs)}
                for params, lhs, rhs in self.failures
            ]
        }

    def summary(self) -> str:
        return f'{self.name}: {self.passed} passed, {self.failed} failed'

    def __repr__(self):
        return f'VerificationReport({self.summary()})'


def _run_point(job: tuple) -> VerificationReport:
    suite, point = job
    return suite.call(**point)


class Verifier:
    """
    Verifier is responsible for running a suite over every point of a parameter grid
    """
    def __init__(self, suite: Suite, grid: dict[str, list[int]], workers: int = 1):
        """
        :param suite: Suite instance
        :param grid: parameter name -> list of values, Cartesian product is taken
        :param workers: process count, 1 runs in-process
        """
        missing = [p for p in suite.parameters if p not in grid]
        if missing:
            raise ValueError(f'{suite.name}: missing grid for {", ".join(missing)}')
        extra = [p for p in grid if p not in suite.parameters]
        if extra:
            raise ValueError(f'{suite.name}: unexpected parameter {", ".join(extra)}')
        if workers < 1:
            raise ValueError(f'workers must be positive, got {workers}')

        self.suite = suite
        self.grid = grid
        self.workers = workers

    def points(self) -> list[dict]:
        names = list(self.suite.parameters)
        points = [dict(zip(names, values)) for values in product(*(self.grid[n] for n in names))]
        return [point for point in points if self.suite.accepts(point)]

    def run(self, silent: bool = True) -> VerificationReport:
        points = self.points()
        logger.info('%s: %d grid points, %d workers', self.suite.name, len(points), self.workers)
        jobs = [(self.suite, point) for point in points]

        if self.workers == 1 or len(jobs) < 2:
            reports = [_run_point(job) for job in tqdm(jobs, desc=self.suite.name, disable=silent)]
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                chunksize = max(1, len(jobs) // (4 * self.workers))
                reports = list(tqdm(
                    executor.map(_run_point, jobs, chunksize=chunksize),
                    total=len(jobs), desc=self.suite.name, disable=silent
                ))

        report = VerificationReport.merge(reports, self.suite.name)
        logger.info(report.summary())
        return report
