//! Exact rational Bernoulli numbers by the binomial recurrence, up to index 64.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

pub const MAX_INDEX: usize = 64;

fn table() -> &'static Vec<BigRational> {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j, B_0 = 1
        let mut b: Vec<BigRational> = Vec::with_capacity(MAX_INDEX + 1);
        b.push(BigRational::one());
        for n in 1..=MAX_INDEX {
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one(); // C(n+1, 0)
            for (j, bj) in b.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * bj;
                // C(n+1, j+1) = C(n+1, j) * (n+1-j)/(j+1)
                binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
            }
            let divisor = BigRational::from_integer(BigInt::from(n + 1));
            b.push(-acc / divisor);
        }
        b
    })
}

/// Exact B_idx for even idx in 2..=64.
pub fn bernoulli_number(idx: usize) -> Result<BigRational> {
    if idx < 2 || idx % 2 != 0 || idx > MAX_INDEX {
        return Err(Error::BernoulliIndex(idx as i64));
    }
    Ok(table()[idx].clone())
}

pub fn bernoulli_f64(idx: usize) -> Result<f64> {
    let b = bernoulli_number(idx)?;
    b.to_f64()
        .ok_or_else(|| Error::InvalidParameter(format!("B_{idx} does not fit in f64")))
}
