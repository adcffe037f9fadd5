"""Exact verification suite for Apery-number supercongruences and p-adic identities."""

from .checks import (
    CHECKS,
    CheckConfig,
    CheckResult,
    CrtAccumulator,
    Status,
    default_config,
    recover_cm,
    run_check,
    sweep,
)
from .exactcore import ExactInt, ExactRat, PowerSeries, rat_reduce
from .modring import (
    FactorialTable,
    NotPIntegral,
    PadicFactored,
    PrimeInfo,
    Residue,
    factored_binomial,
    factored_factorial,
    mod_inv,
    prime_info,
    primes_in_range,
    reduce_rat,
    residue,
    to_residue,
)
from .sequences import SeqId, seq_exact, seq_mod
from .special import (
    PadicGammaValue,
    bernoulli,
    bernoulli_table,
    cornacchia_4y2,
    euler_mod,
    fermat_quotient,
    gamma_quarter_closed_form,
    padic_gamma,
    wilson_side,
)

__version__ = "0.1.0"
