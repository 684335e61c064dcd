//! Batch verification of structural claims about surd expansions:
//! palindromic periods, the Theodorus range, scaling invariance, and the
//! species-count formula.

use num_bigint::BigInt;
use std::collections::BTreeMap;

use crate::engine::{anth_integers, anth_surd_logos, default_max_steps};
use crate::error::Error;
use crate::expansion::Expansion;
use crate::SurdContext;

/// What the palindrome check saw for one radicand: the period of sqrt(N)
/// should read `[c_1, ..., c_{L-1}, 2*I_0]` with the inner part a
/// palindrome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromeReport {
    pub n: BigInt,
    pub initial_quotient: BigInt,
    pub period: Vec<BigInt>,
    pub inner_palindrome: bool,
    pub last_is_double: bool,
    pub holds: bool,
}

/// Expand sqrt(N) and test the palindrome shape of its period.
pub fn verify_palindrome(n: &BigInt) -> Result<PalindromeReport, Error> {
    let ctx = SurdContext::new(n.clone())?;
    let exp = anth_surd_logos(&ctx, default_max_steps(n))?.into_expansion();
    let initial_quotient = exp.initial()[0].clone();
    let period = exp.period().expect("surd expansions are periodic").to_vec();
    let inner = &period[..period.len() - 1];
    let inner_palindrome = inner.iter().eq(inner.iter().rev());
    let last_is_double =
        *period.last().expect("period is non-empty") == &initial_quotient * BigInt::from(2);
    Ok(PalindromeReport {
        n: n.clone(),
        initial_quotient,
        period,
        inner_palindrome,
        last_is_double,
        holds: inner_palindrome && last_is_double,
    })
}

/// The non-square radicands from 2 through 17: sqrt(2) plus the range
/// treated by Theodorus. 19, the first case he left out, is reachable
/// through the engine directly.
pub const THEODORUS_RADICANDS: [u32; 13] = [2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 17];

/// Expansions, each carrying its logos witness, for the whole range.
pub fn theodorus_batch() -> BTreeMap<u32, Expansion> {
    THEODORUS_RADICANDS
        .iter()
        .map(|&n| {
            let big_n = BigInt::from(n);
            let ctx = SurdContext::new(big_n.clone()).expect("radicands are non-square");
            let exp = anth_surd_logos(&ctx, default_max_steps(&big_n))
                .expect("small radicands certify well inside the default budget")
                .into_expansion();
            (n, exp)
        })
        .collect()
}

/// Scaling invariance of integer expansions: the quotient list of
/// `(scale*a, scale*b)` equals that of `(a, b)`.
pub fn topica_check(a: &BigInt, b: &BigInt, scale: &BigInt) -> Result<bool, Error> {
    if scale < &BigInt::from(1) {
        return Err(Error::NotPositive);
    }
    let (base, _) = anth_integers(a, b)?;
    let (scaled, _) = anth_integers(&(a * scale), &(b * scale))?;
    Ok(base.initial() == scaled.initial())
}

/// Number of mutually equalized species in a periodic expansion:
/// period length + 1.
pub fn species_count(expansion: &Expansion) -> Result<usize, Error> {
    match expansion.period() {
        Some(period) => Ok(period.len() + 1),
        None => Err(Error::NotPeriodic),
    }
}
