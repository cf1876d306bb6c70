//! Complex special functions used everywhere else: gamma, incomplete gamma,
//! Bernoulli numbers, Whittaker W and the G^{2,0}_{1,2} Meijer function.
//!
//! Everything here is pure and reentrant; the Bernoulli table is built once
//! behind a `OnceLock` before concurrent use.

mod bernoulli;
mod gamma;
mod incgamma;
mod meijer;
mod whittaker;

pub use bernoulli::{bernoulli_f64, bernoulli_number, MAX_INDEX as BERNOULLI_MAX_INDEX};
pub use gamma::{digamma_real, gamma, log_gamma};
pub use incgamma::{lower_incomplete_gamma_series, upper_incomplete_gamma};
pub use meijer::{meijer_g_120, meijer_g_120_with_height, QuadValue};
pub use whittaker::{whittaker_w, WhittakerParams};
