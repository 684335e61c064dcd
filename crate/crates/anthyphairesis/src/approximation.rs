//! Convergents of a quotient sequence, Pell residues, the side-and-diameter
//! numbers of sqrt(2), and finite truncations of infinite expansions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith::SurdContext;
use crate::error::Error;
use crate::expansion::Expansion;

/// The rational `p/q` built from an initial segment of quotients.
/// Convergents of a simple continued fraction are automatically coprime;
/// construction asserts it, since a violation means the quotient recurrence
/// upstream is broken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    p: BigInt,
    q: BigInt,
}

impl Convergent {
    fn new(p: BigInt, q: BigInt) -> Self {
        assert!(
            p.gcd(&q).is_one(),
            "convergent {p}/{q} is not in lowest terms: engine bug"
        );
        Convergent { p, q }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }
}

impl std::fmt::Display for Convergent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// First `count` convergents of a quotient list via the classical
/// three-term recurrence `p_k = I_k p_{k-1} + p_{k-2}`,
/// `q_k = I_k q_{k-1} + q_{k-2}`.
pub fn convergents(quotients: &[BigInt], count: usize) -> Result<Vec<Convergent>, Error> {
    if count > quotients.len() {
        return Err(Error::OutOfRange {
            what: "convergent count",
            requested: count,
            available: Some(quotients.len()),
        });
    }
    let one = BigInt::one();
    for q in quotients.iter().take(count) {
        if q < &one {
            return Err(Error::InvalidQuotient(q.clone()));
        }
    }
    let mut out = Vec::with_capacity(count);
    let (mut p_prev, mut p_last) = (BigInt::from(0), BigInt::from(1));
    let (mut q_prev, mut q_last) = (BigInt::from(1), BigInt::from(0));
    for quotient in quotients.iter().take(count) {
        let p = quotient * &p_last + &p_prev;
        let q = quotient * &q_last + &q_prev;
        out.push(Convergent::new(p.clone(), q.clone()));
        p_prev = std::mem::replace(&mut p_last, p);
        q_prev = std::mem::replace(&mut q_last, q);
    }
    Ok(out)
}

/// `p^2 - N*q^2`, the exact quality measure of a convergent of sqrt(N).
pub fn pell_residue(ctx: &SurdContext, convergent: &Convergent) -> BigInt {
    let p = convergent.p();
    let q = convergent.q();
    p * p - ctx.radicand() * q * q
}

/// The k-th side and diameter pair: `d^2 - 2s^2` alternates between -1
/// and +1, and `(s, d)` runs through the convergents of sqrt(2) as `(q, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideDiameterPair {
    pub s: BigInt,
    pub d: BigInt,
    pub k: usize,
}

/// `s_1 = d_1 = 1`, then `s_{k+1} = s_k + d_k`, `d_{k+1} = 2*s_k + d_k`.
pub fn side_diameter(k: usize) -> Result<SideDiameterPair, Error> {
    if k < 1 {
        return Err(Error::OutOfRange {
            what: "side-and-diameter index (minimum 1)",
            requested: k,
            available: None,
        });
    }
    let mut s = BigInt::one();
    let mut d = BigInt::one();
    for _ in 1..k {
        let s_next = &s + &d;
        d = BigInt::from(2) * &s + &d;
        s = s_next;
    }
    Ok(SideDiameterPair { s, d, k })
}

/// A finite approximation of an expansion: the first `level` quotients
/// together with their final convergent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrueJudgement {
    pub level: usize,
    pub prefix: Vec<BigInt>,
    pub approx: Convergent,
}

/// Unrolls the (possibly periodic) quotient stream to `level` terms.
/// Periodic expansions support any level; terminated ones only up to their
/// quotient count.
pub fn true_judgement(expansion: &Expansion, level: usize) -> Result<TrueJudgement, Error> {
    if level < 1 {
        return Err(Error::OutOfRange {
            what: "judgement level (minimum 1)",
            requested: level,
            available: None,
        });
    }
    let prefix: Vec<BigInt> = expansion.quotients().take(level).cloned().collect();
    if prefix.len() < level {
        return Err(Error::OutOfRange {
            what: "judgement level",
            requested: level,
            available: Some(prefix.len()),
        });
    }
    let approx = convergents(&prefix, level)?
        .pop()
        .expect("level >= 1 yields at least one convergent");
    Ok(TrueJudgement {
        level,
        prefix,
        approx,
    })
}
