from __future__ import annotations

from config import oracle_order
from HigherPowerSums.verifier import VerificationReport
from HigherPowerSums.sequences import (
    recurrence_rel1_check,
    impl1_check,
    gandhi_genocchi_check,
    dumont_foata_check,
    norlund_table_check,
    stirling_poly_check,
)
from HigherPowerSums.powersums import (
    theorem1_consistency_check,
    theorem2_report,
    lemma1_check,
    kimura_root_check,
    faulhaber_form_check,
    q_roots_check,
    series_oracle_check,
    recurrence_id_check,
)
from HigherPowerSums.binomial_sums import (
    conjecture_relation_check,
    multiple_sum_c2_check,
    eq23_check,
    eq241_check,
    eq251_check,
    prop32_check,
    lemma2_check,
)
from HigherPowerSums.ansatz import eq36_point_check, ansatz_gandhi_check


class Suite:
    """
    Suite checks one identity at a single grid point.

    Subclasses set `name`, the grid `parameters` in call order and `defaults`,
    the grid used when a parameter is not given on the command line.
    """
    name = 'empty'
    parameters = ()
    defaults = {}

    def __init__(self, **options):
        """
        :param options: cap (enumeration cap), order (series truncation)
        """
        self.options = options

    def __repr__(self):
        return f'{self.name} suite ({", ".join(self.parameters)})'

    def accepts(self, point: dict) -> bool:
        """Filter for grid points where the identity is stated

        :param point: parameter name -> value
        :return: True - run, False - skip
        """
        return True

    def call(self, **point) -> VerificationReport:
        raise NotImplementedError(f'{self.name}: call is not implemented')


class RecRel1(Suite):
    name = 'rec-rel1'
    parameters = ('m', 'k')
    defaults = {'m': '0..8', 'k': '1..6'}

    def call(self, m, k):
        return recurrence_rel1_check(m, k)


class Impl1(Suite):
    name = 'impl1'
    parameters = ('m', 'k', 'r')
    defaults = {'m': '0..8', 'k': '1..6', 'r': '1..6'}

    def accepts(self, point):
        return 1 <= point['r'] <= point['k']

    def call(self, m, k, r):
        return impl1_check(m, k, r)


class Id(Suite):
    name = 'id'
    parameters = ('m', 'k', 'r', 'n')
    defaults = {'m': '0..6', 'k': '1..5', 'r': '1..5', 'n': '1..6'}

    def accepts(self, point):
        return 1 <= point['r'] <= point['k']

    def call(self, m, k, r, n):
        return recurrence_id_check(m, k, r, n)


class Theorem1Consistency(Suite):
    name = 'theorem1-consistency'
    parameters = ('m', 'k', 'n')
    defaults = {'m': '0..10', 'k': '1..5', 'n': '1..12'}

    def call(self, m, k, n):
        return theorem1_consistency_check(m, k, n, self.options.get('order') or oracle_order)


class Theorem2(Suite):
    name = 'theorem2'
    parameters = ('m', 'k')
    defaults = {'m': '1..12', 'k': '1..6'}

    def accepts(self, point):
        return point['m'] >= 1

    def call(self, m, k):
        return theorem2_report(m, k)


class Lemma1(Suite):
    name = 'lemma1'
    parameters = ('m', 'k')
    defaults = {'m': '1..12', 'k': '1..8'}

    def accepts(self, point):
        return point['m'] >= 1

    def call(self, m, k):
        return lemma1_check(m, k)


class Lemma2(Suite):
    name = 'lemma2'
    parameters = ('k',)
    defaults = {'k': '1..10'}

    def call(self, k):
        return lemma2_check(k)


class Prop32(Suite):
    name = 'prop32'
    parameters = ('k',)
    defaults = {'k': '1..8'}

    def call(self, k):
        return prop32_check(k)


class Eq23(Suite):
    name = 'eq23'
    parameters = ('m', 'k')
    defaults = {'m': '1,3,5,7,9,11', 'k': '1..8'}

    def accepts(self, point):
        return point['m'] % 2 == 1

    def call(self, m, k):
        return eq23_check(m, k)


class Eq241(Suite):
    name = 'eq241'
    parameters = ('m', 'k')
    defaults = {'m': '1,3,5,7,9,11', 'k': '2..8'}

    def accepts(self, point):
        return point['m'] % 2 == 1 and point['k'] >= 2

    def call(self, m, k):
        return eq241_check(m, k)


class Eq251(Suite):
    name = 'eq251'
    parameters = ('r', 'k')
    defaults = {'r': '0..5', 'k': '1..8'}

    def call(self, r, k):
        return eq251_check(r, k)


class Eq36(Suite):
    name = 'eq36'
    parameters = ('r', 'k')
    defaults = {'r': '1..6', 'k': '1..6'}

    def accepts(self, point):
        return 1 <= point['r'] <= 6 and point['k'] >= 1

    def call(self, r, k):
        return eq36_point_check(r, k)


class Eq36Gandhi(Suite):
    name = 'eq36-gandhi'
    parameters = ('r',)
    defaults = {'r': '1..6'}

    def call(self, r):
        return ansatz_gandhi_check(r)


class GandhiGenocchi(Suite):
    name = 'gandhi-genocchi'
    parameters = ('r',)
    defaults = {'r': '1..8'}

    def call(self, r):
        return gandhi_genocchi_check(r)


class DumontFoataSymmetry(Suite):
    name = 'dumont-foata-symmetry'
    parameters = ('r',)
    defaults = {'r': '1..6'}

    def call(self, r):
        return dumont_foata_check(r)


class Kimura(Suite):
    name = 'kimura'
    parameters = ('m',)
    defaults = {'m': '1..15'}

    def call(self, m):
        return kimura_root_check(m)


class FaulhaberForms(Suite):
    name = 'faulhaber-form'
    parameters = ('m',)
    defaults = {'m': '1..15'}

    def call(self, m):
        return faulhaber_form_check(m)


class NorlundTable(Suite):
    name = 'norlund-table'
    parameters = ('m', 'k')
    defaults = {'m': '0..12', 'k': '1..10'}

    def call(self, m, k):
        return norlund_table_check(m, k)


class StirlingPoly(Suite):
    name = 'stirling-poly'
    parameters = ('m', 'k')
    defaults = {'m': '0..10', 'k': '0..12'}

    def call(self, m, k):
        return stirling_poly_check(m, k)


class SeriesOracle(Suite):
    name = 'series-oracle'
    parameters = ('m', 'k', 'n')
    defaults = {'m': '0..8', 'k': '1..4', 'n': '1..6'}

    def call(self, m, k, n):
        return series_oracle_check(m, k, n)


class QRoots(Suite):
    name = 'q-roots'
    parameters = ('k',)
    defaults = {'k': '1..8'}

    def call(self, k):
        return q_roots_check(k)


class GandhiP(Suite):
    name = 'gandhi-p'
    parameters = ('r',)
    defaults = {'r': '1..8'}

    def call(self, r):
        report = gandhi_genocchi_check(r)
        return VerificationReport('gandhi-p', [p for p in report.points if p[0]['check'] == 'p-relation'])


class MultipleSumC2(Suite):
    name = 'multiple-sum-c2'
    parameters = ('n', 'm')
    defaults = {'n': '1..6', 'm': '1,3,5'}

    def accepts(self, point):
        return point['m'] % 2 == 1

    def call(self, n, m):
        return multiple_sum_c2_check(n, m)


class Conjecture(Suite):
    name = 'conjecture'
    parameters = ('m', 'k', 'n')
    defaults = {'m': '1,3,5,7,9', 'k': '1..4', 'n': '1..6'}

    def accepts(self, point):
        return point['m'] % 2 == 1

    def call(self, m, k, n):
        return conjecture_relation_check(m, k, n, self.options.get('cap'))


suites = {suite.name: suite for suite in (
    RecRel1,
    Impl1,
    Id,
    Theorem1Consistency,
    Theorem2,
    Lemma1,
    Lemma2,
    Prop32,
    Eq23,
    Eq241,
    Eq251,
    Eq36,
    GandhiGenocchi,
    DumontFoataSymmetry,
    Kimura,
    FaulhaberForms,
    NorlundTable,
    StirlingPoly,
    SeriesOracle,
    QRoots,
    GandhiP,
    Eq36Gandhi,
    MultipleSumC2,
    Conjecture,
)}
