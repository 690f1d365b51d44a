"""
Exact arithmetic for cycle-type q-Eulerian polynomials, Eulerian symmetric
functions, their values at roots of unity, and the cyclic sieving checks
tying them to centralizers of powers of the long cycle.
"""

from .combinat import (
    BoundExceededError,
    Partition,
    Permutation,
    conjugate,
    cycle_type,
    dex_set,
    enumerate_by_type,
    gamma,
    identity,
    mobius,
    parse_permutation,
    partition_stats,
    partitions_of,
    par_mdr,
    perm_statistics,
    pi_nu,
    rectangle,
)
from .polyring import (
    InexactDivisionError,
    MultiPoly,
    TruncatedSeries,
    a_lambda_all,
    a_lambda_j,
    cycle_eulerian_poly,
    cycle_stat_polynomial,
    eulerian_poly,
    exp_q_series,
    filter_coprime,
    filter_gcd,
    format_poly,
    identity_euleq,
    identity_exfor,
    identity_expgen,
    parse_poly,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial,
    series_exp,
    series_log,
    stat_polynomial,
    t_mu_poly,
)
from .cyclotomic import (
    CycloNum,
    CycloPoly,
    NonRationalValueError,
    cyclotomic_poly,
    downcast_rational,
    eval_at_root,
    eval_rational,
    q_multinomial_at_root,
    specialize_q,
)
from .symfunc import (
    GradedSeries,
    PSymFunc,
    a_at_root,
    apply_H,
    apply_L,
    chi_lambda_closed,
    chi_rm_closed,
    expand_in_variables,
    g_nu,
    g_nu_resum,
    h_to_p,
    omega_bridge,
    pleth_h,
    pleth_power,
    q_circular_direct,
    q_circular_via_L,
    q_lambda,
    q_lambda_direct,
    qnj_symfunc,
)
from .csp import (
    CentElt,
    cent_statistics,
    centralizer_elements,
    circor_check,
    ckr_poly,
    csp_check,
    csp_check_snj,
    decode,
    theta_poly,
    theta_structural,
    triple_identity,
)

__version__ = "0.1.0"
