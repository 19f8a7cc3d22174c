from __future__ import annotations

import csv
import json

import pandas as pd

from HigherPowerSums.utils.math import exact_str
from HigherPowerSums.sequences import (
    bernoulli,
    bernoulli_high,
    stirling2,
    poly_coefficient,
    genocchi,
    norlund_poly,
    stirling_poly,
    gandhi_poly,
    dumont_foata,
    p_poly,
)
from HigherPowerSums.powersums import (
    power_sum,
    iterated_sum,
    power_sum_high,
    power_sum_poly,
    power_sum_high_poly,
    q_poly,
)
from HigherPowerSums.binomial_sums import (
    multiple_sum_bruteforce,
    binomial_sum,
    binomial_sum_at_1,
    binomial_sum_poly,
)
from HigherPowerSums.ansatz import tabulated_F
from HigherPowerSums.utils.polynomials import binomial_poly, central_binomial_poly
from HigherPowerSums.series import (
    egf_power_sum,
    egf_factorized_power_sum,
    egf_bernoulli_high,
    egf_stirling_column,
    egf_genocchi,
)


# name -> (parameters in call order, function)
quantities = {
    'power-sum':          (('m', 'n'), power_sum),
    'iterated-sum':       (('k', 'm', 'n'), iterated_sum),
    'power-sum-high':     (('m', 'k', 'n'), power_sum_high),
    'bernoulli':          (('m',), bernoulli),
    'bernoulli-high':     (('m', 'k'), bernoulli_high),
    'stirling2':          (('n', 'k'), stirling2),
    'poly-coefficient':   (('k', 'q', 'n'), poly_coefficient),
    'genocchi':           (('r',), genocchi),
    'multiple-sum':       (('m', 'k', 'n'), multiple_sum_bruteforce),
    'binomial-sum':       (('m', 'k', 'n'), binomial_sum),
    'binomial-sum-at-1':  (('m', 'k'), binomial_sum_at_1),
}

polynomials = {
    'power-sum':          (('m',), power_sum_poly),
    'power-sum-high':     (('m', 'k'), power_sum_high_poly),
    'q':                  (('m', 'k'), q_poly),
    'binomial-sum':       (('m', 'k'), binomial_sum_poly),
    'norlund':            (('m',), norlund_poly),
    'stirling':           (('m',), stirling_poly),
    'gandhi':             (('r',), gandhi_poly),
    'p':                  (('r',), p_poly),
    'central-binomial':   (('k',), central_binomial_poly),
    'binomial':           (('k', 'q'), binomial_poly),
    'dumont-foata':       (('r',), dumont_foata),
    'tabulated-f':        (('r',), tabulated_F),
}

# series oracles: name -> (parameters, function taking the parameters and the order)
oracles = {
    'power-sum':            (('n', 'k'), egf_power_sum),
    'power-sum-factorized': (('n', 'k'), egf_factorized_power_sum),
    'bernoulli-high':       (('k',), egf_bernoulli_high),
    'stirling-column':      (('k',), egf_stirling_column),
    'genocchi':             ((), egf_genocchi),
}


def table(family: str, grid: dict[str, list[int]], **options) -> pd.DataFrame:
    """
    Exact values of a scalar family over the Cartesian product of a grid.

    :param family: key of `quantities`
    :param grid: parameter -> values, every parameter of the family is required
    :param options: keyword arguments passed to every call, such as the enumeration cap
    :return: DataFrame with one integer column per parameter and a string 'value' column
    """
    parameters, function = quantities[family]
    index = pd.MultiIndex.from_product([grid[p] for p in parameters], names=list(parameters))
    frame = index.to_frame(index=False)
    frame['value'] = [exact_str(function(*map(int, point), **options)) for point in index]
    return frame


def render(rows: list[dict], fmt: str, columns: list[str] | None = None) -> str:
    """
    Render row dicts as one JSON document, RFC-4180 CSV or aligned text.
    Exact values must already be strings.
    """
    if fmt == 'json':
        return json.dumps(rows, indent=2) + '\n'
    frame = pd.DataFrame(rows, columns=columns)
    if fmt == 'csv':
        return frame.to_csv(index=False, quoting=csv.QUOTE_NONNUMERIC, lineterminator='\n')
    if fmt == 'text':
        if frame.empty:
            return ''
        return frame.to_string(index=False) + '\n'
    raise ValueError(f'unknown format {fmt}')


def render_frame(frame: pd.DataFrame, fmt: str) -> str:
    return render(frame.astype(object).to_dict(orient='records'), fmt, list(frame.columns))
