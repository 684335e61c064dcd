//! The anthyphairesis stepper over generic magnitudes, with two independent
//! period detectors for surds: the logos criterion (ratio equality certified
//! by cross-multiplication in Z[sqrt(N)]) and the classical (P, Q) state
//! recurrence used as an internal oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::arith::{logos_cross_equal, Sign, SurdContext, SurdElement};
use crate::error::Error;
use crate::expansion::{Expansion, LogosWitness};

/// Anything the reciprocal-subtraction step can divide: exact sign, exact
/// linear arithmetic and exact floored division.
pub trait Magnitude: Clone {
    fn sign(&self) -> Sign;
    fn sub(&self, other: &Self) -> Result<Self, Error>;
    fn scale(&self, k: &BigInt) -> Self;
    fn floor_div(&self, other: &Self) -> Result<BigInt, Error>;
}

impl Magnitude for BigInt {
    fn sign(&self) -> Sign {
        BigInt::sign(self)
    }

    fn sub(&self, other: &Self) -> Result<Self, Error> {
        Ok(self - other)
    }

    fn scale(&self, k: &BigInt) -> Self {
        self * k
    }

    fn floor_div(&self, other: &Self) -> Result<BigInt, Error> {
        if !self.is_positive() || !other.is_positive() {
            return Err(Error::NotPositive);
        }
        Ok(Integer::div_floor(self, other))
    }
}

impl Magnitude for SurdElement {
    fn sign(&self) -> Sign {
        SurdElement::sign(self)
    }

    fn sub(&self, other: &Self) -> Result<Self, Error> {
        SurdElement::sub(self, other)
    }

    fn scale(&self, k: &BigInt) -> Self {
        SurdElement::scale(self, k)
    }

    fn floor_div(&self, other: &Self) -> Result<BigInt, Error> {
        SurdElement::floor_div(self, other)
    }
}

/// One division step: `larger = quotient * smaller + remainder` with
/// `0 <= remainder < smaller`. Requires `larger > smaller > 0`.
pub fn anth_step<M: Magnitude>(larger: &M, smaller: &M) -> Result<(BigInt, M), Error> {
    if smaller.sign() != Sign::Plus {
        return Err(Error::OrderViolated);
    }
    if larger.sub(smaller)?.sign() != Sign::Plus {
        return Err(Error::OrderViolated);
    }
    let quotient = larger.floor_div(smaller)?;
    let remainder = larger.sub(&smaller.scale(&quotient))?;
    debug_assert_ne!(remainder.sign(), Sign::Minus);
    debug_assert_eq!(remainder.sub(smaller)?.sign(), Sign::Minus);
    Ok((quotient, remainder))
}

/// Full division chain of an integer pair `a > b >= 1`: the expansion always
/// terminates and the last nonzero remainder is the gcd.
pub fn anth_integers(a: &BigInt, b: &BigInt) -> Result<(Expansion, BigInt), Error> {
    let mut quotients = Vec::new();
    let mut larger = a.clone();
    let mut smaller = b.clone();
    loop {
        let (quotient, remainder) = anth_step(&larger, &smaller)?;
        quotients.push(quotient);
        if remainder.is_zero() {
            return Ok((Expansion::terminated(quotients), smaller));
        }
        larger = smaller;
        smaller = remainder;
    }
}

/// A completed surd run: the executed quotients `I_0..I_k`, the remainders
/// `e_1..e_{k+1}` expressed over the seeds, and the canonical expansion with
/// its logos witness.
#[derive(Debug, Clone)]
pub struct SurdRun {
    seed_a: SurdElement,
    seed_b: SurdElement,
    quotients: Vec<BigInt>,
    remainders: Vec<SurdElement>,
    expansion: Expansion,
}

impl SurdRun {
    pub fn context(&self) -> &SurdContext {
        self.seed_b.context()
    }

    /// The dividend/divisor pair the run started from.
    pub fn seeds(&self) -> (&SurdElement, &SurdElement) {
        (&self.seed_a, &self.seed_b)
    }

    pub fn quotients(&self) -> &[BigInt] {
        &self.quotients
    }

    /// `e_1..e_{k+1}`, one remainder per executed step.
    pub fn remainders(&self) -> &[SurdElement] {
        &self.remainders
    }

    pub fn expansion(&self) -> &Expansion {
        &self.expansion
    }

    pub fn into_expansion(self) -> Expansion {
        self.expansion
    }

    /// Continue the remainder recurrence mechanically (no further period
    /// scanning) until `total_steps` quotients have been produced. The
    /// quotient stream past the witness is periodic, so this only serves
    /// rendering of longer traces.
    pub fn extend_trace(&mut self, total_steps: usize) -> Result<(), Error> {
        while self.quotients.len() < total_steps {
            let s = self.quotients.len();
            let prev = if s >= 2 {
                self.remainders[s - 2].clone()
            } else {
                self.seed_b.clone()
            };
            let cur = self.remainders[s - 1].clone();
            let (quotient, next) = anth_step(&prev, &cur)?;
            self.quotients.push(quotient);
            self.remainders.push(next);
        }
        Ok(())
    }
}

/// Anthyphairesis of `sqrt(N)` to 1 with logos-criterion period detection.
///
/// Runs `e_{-1} = a = sqrt(N)`, `e_0 = b = 1`,
/// `e_{k+1} = e_{k-1} - I_k * e_k`, and after every step tests
/// `e_n/e_{n+1} = e_k/e_{k+1}` for all `n < k` by cross-multiplication.
/// The first pair that fires becomes the witness `(n, k)`, the quotients
/// `I_{n+1}..I_k` the period.
pub fn anth_surd_logos(ctx: &SurdContext, max_steps: usize) -> Result<SurdRun, Error> {
    anth_surd_logos_seeded(ctx.sqrt(), ctx.one(), max_steps)
}

/// Same detector from arbitrary seeds `a > b > 0` in a shared context.
/// Scaling both seeds by a positive integer leaves the quotient stream
/// unchanged, which is how the scaling invariance is exercised.
pub fn anth_surd_logos_seeded(
    seed_a: SurdElement,
    seed_b: SurdElement,
    max_steps: usize,
) -> Result<SurdRun, Error> {
    anth_surd_logos_filtered(seed_a, seed_b, max_steps, FILTER_MODULUS)
}

/// Prime below 2^64 used to pre-filter the witness scan. Remainder
/// coefficients grow geometrically, so comparing full cross-products for
/// every candidate pair costs a large-integer multiplication per pair;
/// comparing them modulo a fixed prime is one word multiplication instead.
/// Equal values always have equal residues, and every residue match is
/// confirmed with the full cross-multiplication before it is accepted, so
/// the filter changes nothing but speed.
const FILTER_MODULUS: u64 = 0xFFFF_FFFF_FFFF_FFC5; // 2^64 - 59

fn mulmod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

fn addmod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 + b as u128) % modulus as u128) as u64
}

fn residues(e: &SurdElement, modulus: &BigInt) -> (u64, u64) {
    let reduce = |x: &BigInt| {
        Integer::mod_floor(x, modulus)
            .to_u64()
            .expect("residue fits the modulus")
    };
    (reduce(e.m()), reduce(e.n()))
}

/// Cross-product comparison of `(e_n, e_{n+1})` against `(e_k, e_{k+1})`
/// with all coefficients reduced modulo the filter prime.
fn cross_residues_equal(
    rn: (u64, u64),
    rn1: (u64, u64),
    rk: (u64, u64),
    rk1: (u64, u64),
    radicand: u64,
    modulus: u64,
) -> bool {
    let lhs_m = addmod(
        mulmod(rn.0, rk1.1, modulus),
        mulmod(rk1.0, rn.1, modulus),
        modulus,
    );
    let rhs_m = addmod(
        mulmod(rk.0, rn1.1, modulus),
        mulmod(rn1.0, rk.1, modulus),
        modulus,
    );
    if lhs_m != rhs_m {
        return false;
    }
    let lhs_n = addmod(
        mulmod(mulmod(rn.0, rk1.0, modulus), radicand, modulus),
        mulmod(rn.1, rk1.1, modulus),
        modulus,
    );
    let rhs_n = addmod(
        mulmod(mulmod(rk.0, rn1.0, modulus), radicand, modulus),
        mulmod(rk.1, rn1.1, modulus),
        modulus,
    );
    lhs_n == rhs_n
}

fn anth_surd_logos_filtered(
    seed_a: SurdElement,
    seed_b: SurdElement,
    max_steps: usize,
    modulus: u64,
) -> Result<SurdRun, Error> {
    let modulus_big = BigInt::from(modulus);
    let radicand_mod = Integer::mod_floor(seed_b.context().radicand(), &modulus_big)
        .to_u64()
        .expect("residue fits the modulus");
    let mut quotients: Vec<BigInt> = Vec::new();
    let mut remainders: Vec<SurdElement> = Vec::new();
    // residue_pairs[i] mirrors e_i with e_0 = seed_b
    let mut residue_pairs: Vec<(u64, u64)> = vec![residues(&seed_b, &modulus_big)];
    let mut prev = seed_a.clone();
    let mut cur = seed_b.clone();
    for k in 0..max_steps {
        let (quotient, next) = anth_step(&prev, &cur)?;
        debug_assert!(next.is_positive());
        quotients.push(quotient);
        remainders.push(next.clone());
        residue_pairs.push(residues(&next, &modulus_big));

        let nth = |i: usize| -> &SurdElement {
            if i == 0 {
                &seed_b
            } else {
                &remainders[i - 1]
            }
        };
        let (e_k, e_k1) = (nth(k), nth(k + 1));
        for n in 0..k {
            if !cross_residues_equal(
                residue_pairs[n],
                residue_pairs[n + 1],
                residue_pairs[k],
                residue_pairs[k + 1],
                radicand_mod,
                modulus,
            ) {
                continue;
            }
            // confirm the residue match exactly; a collision just moves on
            if let Some((m, c)) = logos_cross_equal(nth(n), nth(n + 1), e_k, e_k1) {
                let ctx = seed_b.context();
                let cross = (ctx.element(m.clone(), c.clone()), ctx.element(m, c));
                let witness = LogosWitness::new(n, k, cross);
                let initial = quotients[..=n].to_vec();
                let period = quotients[n + 1..=k].to_vec();
                let expansion = Expansion::periodic(initial, period, Some(witness));
                return Ok(SurdRun {
                    seed_a,
                    seed_b,
                    quotients,
                    remainders,
                    expansion,
                });
            }
        }
        prev = cur;
        cur = next;
    }
    Err(Error::BudgetExceeded {
        max_steps,
        quotients,
    })
}

/// The logos criterion for one index pair: `e_n/e_{n+1} = e_m/e_{m+1}`
/// iff `e_n * e_{m+1} = e_m * e_{n+1}` componentwise. All four elements
/// must be strictly positive and share a context.
pub fn logos_equal(
    e_n: &SurdElement,
    e_n1: &SurdElement,
    e_m: &SurdElement,
    e_m1: &SurdElement,
) -> Result<bool, Error> {
    for other in [e_n1, e_m, e_m1] {
        e_n.check_context(other)?;
    }
    if ![e_n, e_n1, e_m, e_m1].iter().all(|e| e.is_positive()) {
        return Err(Error::NotPositive);
    }
    Ok(logos_cross_equal(e_n, e_n1, e_m, e_m1).is_some())
}

/// Anthyphairesis of `(P + sqrt(D))/Q` by the classical state recurrence:
/// `I = floor((P + sqrt(D))/Q)`, `P' = I*Q - P`, `Q' = (D - P'^2)/Q`.
/// The period is declared at the first repeated `(P, Q)` state, counting
/// states from the second division on so the output shape matches the
/// logos detector. Inputs with `Q` not dividing `D - P^2` are scaled first.
pub fn anth_surd_state(
    p: &BigInt,
    q: &BigInt,
    d: &BigInt,
    max_steps: usize,
) -> Result<Expansion, Error> {
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    SurdContext::new(d.clone())?;
    let (mut p, mut q, d) = if ((d - p * p) % q).is_zero() {
        (p.clone(), q.clone(), d.clone())
    } else {
        let scale = q.abs();
        (p * &scale, q * &scale, d * q * q)
    };
    let sqrt_floor = d.sqrt();
    let mut states: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut quotients: Vec<BigInt> = Vec::new();
    loop {
        let step = quotients.len();
        if step > 0 {
            match states.entry((p.clone(), q.clone())) {
                Entry::Occupied(seen) => {
                    let cycle_start = *seen.get();
                    let initial = quotients[..cycle_start].to_vec();
                    let period = quotients[cycle_start..].to_vec();
                    return Ok(Expansion::periodic(initial, period, None));
                }
                Entry::Vacant(slot) => {
                    slot.insert(step);
                }
            }
        }
        if step == max_steps {
            return Err(Error::BudgetExceeded {
                max_steps,
                quotients,
            });
        }
        let quotient = floor_shifted_sqrt(&p, &q, &sqrt_floor);
        let p_next = &quotient * &q - &p;
        let q_next = exact_div(&d - &p_next * &p_next, &q);
        quotients.push(quotient);
        p = p_next;
        q = q_next;
    }
}

/// Exact `floor((p + sqrt(d))/q)` given `rd = floor(sqrt(d))` with `sqrt(d)`
/// irrational: the numerator may be floored first because its fractional
/// part never carries the quotient across an integer.
fn floor_shifted_sqrt(p: &BigInt, q: &BigInt, rd: &BigInt) -> BigInt {
    let num = p + rd;
    if q.is_positive() {
        Integer::div_floor(&num, q)
    } else {
        let floored: BigInt = Integer::div_floor(&num, &-q);
        -(floored + BigInt::from(1))
    }
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    debug_assert!((&num % den).is_zero(), "state recurrence divisibility");
    num / den
}

/// Step budget used when the caller does not override it:
/// `10 * isqrt(N) * (decimal digits of N)`, floored at 64. Generous against
/// the known period growth, so exhausting it flags a bug rather than a
/// slightly long period.
pub fn default_max_steps(radicand: &BigInt) -> usize {
    if radicand < &BigInt::from(2) {
        return 64;
    }
    let digits = radicand.to_string().len();
    let budget: BigInt = radicand.sqrt() * BigInt::from(10 * digits);
    budget.to_usize().unwrap_or(usize::MAX).max(64)
}

/// An input pair for the commensurability dichotomy.
#[derive(Debug, Clone)]
pub enum MagnitudePair {
    Integers { a: BigInt, b: BigInt },
    Surd { ctx: SurdContext },
}

/// Outcome of the dichotomy: integer pairs share a measure, surd pairs are
/// certified infinite by a logos witness.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)] // constructed once per query
pub enum Commensurability {
    Commensurable { gcd: BigInt },
    Incommensurable { witness: LogosWitness },
}

pub fn commensurability(pair: &MagnitudePair) -> Result<Commensurability, Error> {
    match pair {
        MagnitudePair::Integers { a, b } => {
            let (_, gcd) = anth_integers(a, b)?;
            Ok(Commensurability::Commensurable { gcd })
        }
        MagnitudePair::Surd { ctx } => {
            let run = anth_surd_logos(ctx, default_max_steps(ctx.radicand()))?;
            let witness = run
                .expansion()
                .witness()
                .cloned()
                .expect("logos run always carries a witness");
            Ok(Commensurability::Incommensurable { witness })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bigs(vs: &[i64]) -> Vec<BigInt> {
        vs.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn ctx(n: i64) -> SurdContext {
        SurdContext::new(big(n)).unwrap()
    }

    #[test]
    fn step_on_integers() {
        let (q, r) = anth_step(&big(19), &big(4)).unwrap();
        assert_eq!((q, r), (big(4), big(3)));
    }

    #[test]
    fn step_rejects_bad_order() {
        assert_eq!(anth_step(&big(4), &big(19)), Err(Error::OrderViolated));
        assert_eq!(anth_step(&big(4), &big(4)), Err(Error::OrderViolated));
        assert_eq!(anth_step(&big(4), &big(0)), Err(Error::OrderViolated));
        let c = ctx(19);
        assert_eq!(anth_step(&c.one(), &c.sqrt()), Err(Error::OrderViolated));
    }

    #[test]
    fn step_on_surds() {
        let c = ctx(19);
        let (q, e1) = anth_step(&c.sqrt(), &c.one()).unwrap();
        assert_eq!(q, big(4));
        assert_eq!(e1, c.element(1, -4));

        let e2 = c.element(-2, 9);
        let e3 = c.element(3, -13);
        let (q, e4) = anth_step(&e2, &e3).unwrap();
        assert_eq!(q, big(3));
        assert_eq!(e4, c.element(-11, 48));
    }

    #[test]
    fn integer_expansions() {
        let (exp, gcd) = anth_integers(&big(6), &big(4)).unwrap();
        assert_eq!(exp.initial(), &bigs(&[1, 2])[..]);
        assert!(exp.is_terminated());
        assert_eq!(gcd, big(2));

        let (exp, gcd) = anth_integers(&big(5), &big(3)).unwrap();
        assert_eq!(exp.initial(), &bigs(&[1, 1, 2])[..]);
        assert_eq!(gcd, big(1));

        let (exp, gcd) = anth_integers(&big(4), &big(2)).unwrap();
        assert_eq!(exp.initial(), &bigs(&[2])[..]);
        assert_eq!(gcd, big(2));
    }

    #[test]
    fn logos_run_reproduces_sqrt19() {
        let c = ctx(19);
        let run = anth_surd_logos(&c, 64).unwrap();
        assert_eq!(run.quotients(), &bigs(&[4, 2, 1, 3, 1, 2, 8])[..]);
        let expected = [
            (1, -4),
            (-2, 9),
            (3, -13),
            (-11, 48),
            (14, -61),
            (-39, 170),
            (326, -1421),
        ];
        for (remainder, (m, n)) in run.remainders().iter().zip(expected) {
            assert_eq!(remainder, &c.element(m, n));
        }
        let exp = run.expansion();
        assert_eq!(exp.initial(), &bigs(&[4])[..]);
        assert_eq!(exp.period(), Some(&bigs(&[2, 1, 3, 1, 2, 8])[..]));
        let witness = exp.witness().unwrap();
        assert_eq!(witness.indices(), (0, 6));
        let (lhs, rhs) = witness.cross_products();
        assert_eq!(lhs, &c.element(326, -1421));
        assert_eq!(rhs, &c.element(326, -1421));
    }

    #[test]
    fn logos_run_reproduces_sqrt2() {
        let run = anth_surd_logos(&ctx(2), 64).unwrap();
        let exp = run.expansion();
        assert_eq!(exp.initial(), &bigs(&[1])[..]);
        assert_eq!(exp.period(), Some(&bigs(&[2])[..]));
        assert_eq!(exp.witness().unwrap().indices(), (0, 1));
    }

    #[test]
    fn perfect_square_rejected_before_any_run() {
        assert!(matches!(
            SurdContext::new(big(4)),
            Err(Error::InvalidSurdRadicand(_))
        ));
    }

    #[test]
    fn budget_error_carries_partial_quotients() {
        let err = anth_surd_logos(&ctx(19), 3).unwrap_err();
        match err {
            Error::BudgetExceeded {
                max_steps,
                quotients,
            } => {
                assert_eq!(max_steps, 3);
                assert_eq!(quotients, bigs(&[4, 2, 1]));
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn extend_trace_continues_the_recurrence() {
        let c = ctx(19);
        let mut run = anth_surd_logos(&c, 64).unwrap();
        run.extend_trace(13).unwrap();
        assert_eq!(run.quotients().len(), 13);
        assert_eq!(run.remainders().len(), 13);
        // quotients past the witness repeat the period
        assert_eq!(run.quotients()[7..], bigs(&[2, 1, 3, 1, 2, 8])[..]);
        // the recurrence invariant still holds on the extension
        for k in 7..13 {
            let prev = if k >= 2 {
                run.remainders()[k - 2].clone()
            } else {
                c.one()
            };
            let expect = prev
                .sub(&run.remainders()[k - 1].scale(&run.quotients()[k]))
                .unwrap();
            assert_eq!(run.remainders()[k], expect);
        }
    }

    #[test]
    fn logos_equal_on_table4_pairs() {
        let c = ctx(19);
        let b = c.one();
        let e1 = c.element(1, -4);
        let e2 = c.element(-2, 9);
        let e6 = c.element(-39, 170);
        let e7 = c.element(326, -1421);
        assert_eq!(logos_equal(&b, &e1, &e6, &e7), Ok(true));
        assert_eq!(logos_equal(&b, &e1, &b, &e1), Ok(true));
        assert_eq!(logos_equal(&b, &e1, &e1, &e2), Ok(false));
    }

    #[test]
    fn logos_equal_checks_preconditions() {
        let c = ctx(19);
        let b = c.one();
        let neg = c.element(1, -5);
        assert_eq!(logos_equal(&b, &neg, &b, &b), Err(Error::NotPositive));
        let other = ctx(2).one();
        assert!(matches!(
            logos_equal(&b, &b, &other, &b),
            Err(Error::ContextMismatch { .. })
        ));
    }

    #[test]
    fn logos_equal_is_an_equivalence_on_run_pairs() {
        let run = anth_surd_logos(&ctx(31), 128).unwrap();
        let mut pairs = Vec::new();
        let seed_b = run.seeds().1.clone();
        let elems: Vec<SurdElement> = std::iter::once(seed_b)
            .chain(run.remainders().iter().cloned())
            .collect();
        for w in elems.windows(2) {
            pairs.push((w[0].clone(), w[1].clone()));
        }
        for (x, x1) in &pairs {
            assert_eq!(logos_equal(x, x1, x, x1), Ok(true));
        }
        for (x, x1) in &pairs {
            for (y, y1) in &pairs {
                let xy = logos_equal(x, x1, y, y1).unwrap();
                let yx = logos_equal(y, y1, x, x1).unwrap();
                assert_eq!(xy, yx);
                for (z, z1) in &pairs {
                    let yz = logos_equal(y, y1, z, z1).unwrap();
                    let xz = logos_equal(x, x1, z, z1).unwrap();
                    if xy && yz {
                        assert!(xz);
                    }
                }
            }
        }
    }

    #[test]
    fn filter_collisions_are_rejected_exactly() {
        // a tiny modulus forces frequent residue collisions in the witness
        // scan; exact confirmation must discard them all and land on the
        // same witness as the wide modulus
        for n in [19i64, 31, 61, 94, 1861] {
            let c = ctx(n);
            let budget = default_max_steps(&big(n));
            let reference = anth_surd_logos(&c, budget).unwrap();
            let filtered = anth_surd_logos_filtered(c.sqrt(), c.one(), budget, 251).unwrap();
            assert_eq!(filtered.quotients(), reference.quotients(), "N={n}");
            assert_eq!(filtered.expansion(), reference.expansion(), "N={n}");
        }
    }

    #[test]
    fn state_run_matches_known_expansions() {
        let exp = anth_surd_state(&big(0), &big(1), &big(19), 64).unwrap();
        assert_eq!(exp.initial(), &bigs(&[4])[..]);
        assert_eq!(exp.period(), Some(&bigs(&[2, 1, 3, 1, 2, 8])[..]));

        let exp = anth_surd_state(&big(0), &big(1), &big(2), 64).unwrap();
        assert_eq!(exp.initial(), &bigs(&[1])[..]);
        assert_eq!(exp.period(), Some(&bigs(&[2])[..]));

        // golden ratio (1 + sqrt(5))/2 = [1; (1)]
        let exp = anth_surd_state(&big(1), &big(2), &big(5), 64).unwrap();
        assert_eq!(exp.initial(), &bigs(&[1])[..]);
        assert_eq!(exp.period(), Some(&bigs(&[1])[..]));
    }

    #[test]
    fn state_run_normalizes_and_handles_negatives() {
        // (1 + sqrt(3))/3: 3 does not divide 3 - 1, so the state is scaled
        let exp = anth_surd_state(&big(1), &big(3), &big(3), 64).unwrap();
        // (1 + sqrt(3))/3 = 0.910..: [0; 1, 9, ...] starts below 1
        assert_eq!(exp.initial()[0], big(0));

        // negative denominator: -(sqrt(2)) = [-2; (2, ...)] territory
        let exp = anth_surd_state(&big(0), &big(-1), &big(2), 64).unwrap();
        assert_eq!(exp.initial()[0], big(-2));
    }

    #[test]
    fn state_run_rejects_bad_inputs() {
        assert_eq!(
            anth_surd_state(&big(0), &big(0), &big(19), 64),
            Err(Error::ZeroDenominator)
        );
        assert!(matches!(
            anth_surd_state(&big(0), &big(1), &big(9), 64),
            Err(Error::InvalidSurdRadicand(_))
        ));
        assert!(matches!(
            anth_surd_state(&big(0), &big(1), &big(19), 2),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn engines_agree_on_small_radicands() {
        for n in 2i64..=100 {
            let Ok(c) = SurdContext::new(big(n)) else {
                continue;
            };
            let logos = anth_surd_logos(&c, default_max_steps(&big(n))).unwrap();
            let state =
                anth_surd_state(&big(0), &big(1), &big(n), default_max_steps(&big(n))).unwrap();
            assert_eq!(logos.expansion().initial(), state.initial(), "N={n}");
            assert_eq!(logos.expansion().period(), state.period(), "N={n}");
        }
    }

    #[test]
    fn remainder_recurrence_invariant() {
        for n in [2i64, 19, 31, 61, 94] {
            let c = ctx(n);
            let run = anth_surd_logos(&c, 256).unwrap();
            let e = |i: usize| -> SurdElement {
                match i {
                    0 => c.one(),
                    _ => run.remainders()[i - 1].clone(),
                }
            };
            for k in 0..run.quotients().len() {
                let prev = if k == 0 { c.sqrt() } else { e(k - 1) };
                let expect = prev.sub(&e(k).scale(&run.quotients()[k])).unwrap();
                assert_eq!(e(k + 1), expect, "recurrence at N={n} k={k}");
                assert_eq!(e(k + 1).sign(), Sign::Plus);
                assert_eq!(e(k).sub(&e(k + 1)).unwrap().sign(), Sign::Plus);
            }
        }
    }

    #[test]
    fn tail_is_a_cyclic_rotation_of_the_period() {
        for n in [2i64, 19, 61, 94] {
            let exp = anth_surd_logos(&ctx(n), 256).unwrap().into_expansion();
            let pre = exp.initial().len();
            let cycle = exp.period().unwrap();
            let len = cycle.len();
            let stream: Vec<BigInt> = exp.quotients().take(pre + 4 * len).cloned().collect();
            for k in pre..pre + len {
                let offset = (k - pre) % len;
                for (i, q) in stream[k..k + 3 * len].iter().enumerate() {
                    assert_eq!(q, &cycle[(offset + i) % len], "N={n} k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn commensurability_dichotomy() {
        let c = commensurability(&MagnitudePair::Integers {
            a: big(6),
            b: big(4),
        })
        .unwrap();
        assert_eq!(c, Commensurability::Commensurable { gcd: big(2) });

        let c = commensurability(&MagnitudePair::Surd { ctx: ctx(19) }).unwrap();
        match c {
            Commensurability::Incommensurable { witness } => {
                assert_eq!(witness.indices(), (0, 6));
            }
            other => panic!("expected incommensurable, got {other:?}"),
        }

        let c = commensurability(&MagnitudePair::Surd { ctx: ctx(2) }).unwrap();
        match c {
            Commensurability::Incommensurable { witness } => {
                assert_eq!(witness.indices(), (0, 1));
            }
            other => panic!("expected incommensurable, got {other:?}"),
        }
    }

    #[test]
    fn default_budget_has_floor_and_scales() {
        assert_eq!(default_max_steps(&big(2)), 64);
        assert_eq!(default_max_steps(&big(19)), 80);
        assert_eq!(default_max_steps(&big(9999)), 3960);
    }

    proptest! {
        #[test]
        fn integer_expansion_reconstructs_the_ratio(
            a in 2u64..=1_000_000, b in 1u64..=1_000_000
        ) {
            prop_assume!(a > b);
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            let (exp, gcd) = anth_integers(&a, &b).unwrap();
            // evaluate the continued fraction back to a fraction
            let (mut num, mut den) = (BigInt::from(1), BigInt::from(0));
            for q in exp.initial().iter().rev() {
                let next_num = q * &num + &den;
                den = num;
                num = next_num;
            }
            prop_assert_eq!(&num * &gcd, a);
            prop_assert_eq!(&den * &gcd, b);
            prop_assert_eq!(num.gcd(&den), BigInt::from(1));
        }
    }
}
