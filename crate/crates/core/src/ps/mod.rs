//! Piatetski-Shapiro membership and enumeration, prime sieving, and the
//! empirical statistics built on them.

pub mod chen;
pub mod counts;
pub mod expsum;
pub mod floor;
pub mod ndiag;
pub mod primes;
pub mod sequence;

pub use chen::{
    chen_counts, chen_counts_with, verify_weight_inequality, ChenCounts, ChenParams, ChenThresholds, LevelExponent,
    RhoWeights, WeightCheck, WeightWitness,
};
pub use counts::{bv_discrepancy, bv_discrepancy_with, pi_gamma, pi_gamma_with, ps_primes, DiscrepancyReport, DiscrepancyRow, PiGamma};
pub use expsum::{exp_sum_progression, lemma_bound, ExpSumQuery, ExpSumReport};
pub use floor::{ceil_pow, cmp_pow, floor_pow, floor_root, PrecisionPolicy};
pub use ndiag::{count_near_diagonal, count_near_diagonal_with, NearDiagonal};
pub use primes::{sieve_primes, sieve_primes_with, PrimeTable};
pub use sequence::{enumerate_ps, enumerate_ps_with, index_bound, is_ps, ps_flags, PSContext};
