//! Exact arithmetic functions over a smallest-prime-factor table, the twin
//! singular series, the sawtooth ψ, and the Heath-Brown identity check.

pub mod functions;
pub mod heath_brown;
pub mod psi;
pub mod singular;
pub mod spf;

pub use functions::{arith_fn, big_omega, euler_phi, mobius, tau_r, von_mangoldt, ArithFn, ArithValue};
pub use heath_brown::{cube_root_ceil, heath_brown_check, HeathBrownCheck};
pub use psi::{dist_to_int, psi, psi_truncation_gap, PsiGap};
pub use singular::{twin_singular_series, twin_singular_series_with, SingularSeriesResult};
pub use spf::SpfTable;
