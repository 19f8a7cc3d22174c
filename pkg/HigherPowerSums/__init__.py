from HigherPowerSums.series import (
    TruncatedSeries,
    series_exp_linear,
    series_mul,
    series_div,
    series_pow,
    egf_power_sum,
    egf_factorized_power_sum,
    egf_signed_power_sum,
    egf_bernoulli_high,
    egf_stirling_column,
    egf_genocchi
)
from HigherPowerSums.sequences import (
    SequenceCache,
    bernoulli,
    bernoulli_high,
    norlund_chain,
    norlund_poly,
    stirling2,
    stirling_poly,
    poly_coefficient,
    genocchi,
    gandhi_poly,
    dumont_foata,
    p_poly,
    recurrence_rel1_check,
    impl1_check
)
from HigherPowerSums.powersums import (
    power_sum,
    iterated_sum,
    power_sum_high,
    power_sum_high_convolution,
    power_sum_poly,
    power_sum_high_poly,
    power_sum_high_poly_eq18,
    q_poly,
    theorem2_report,
    lemma1_check,
    kimura_root_check,
    recurrence_id_check
)
from HigherPowerSums.binomial_sums import (
    MultipleSumCoefficients,
    multiple_sum_bruteforce,
    multiple_sum_coefficients,
    binomial_sum,
    binomial_sum_poly,
    binomial_sum_at_1,
    conjecture_relation_check,
    eq23_check,
    eq241_check,
    eq251_check,
    prop32_check,
    lemma2_check
)
from HigherPowerSums.ansatz import (
    BivariateF,
    tabulated_F,
    eq36_verify,
    eq36_reconstruct
)
from HigherPowerSums.verifier import (
    Verifier,
    VerificationReport
)
