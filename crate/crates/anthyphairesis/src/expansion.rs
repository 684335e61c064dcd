//! Quotient sequences: terminated expansions of commensurable pairs and
//! eventually-periodic expansions of surds, in canonical form.

use num_bigint::BigInt;
use std::fmt;

use crate::arith::SurdElement;

/// Certificate that two consecutive-remainder ratios are equal:
/// `e_n / e_{n+1} = e_m / e_{m+1}`, witnessed by the componentwise-equal
/// cross-products `e_n * e_{m+1}` and `e_m * e_{n+1}`.
///
/// Indices follow the remainder numbering with `e_0 = b`, so the witness
/// `(0, 6)` of sqrt(19) reads `b/e1 = e6/e7`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogosWitness {
    n: usize,
    m: usize,
    cross: (SurdElement, SurdElement),
}

impl LogosWitness {
    pub(crate) fn new(n: usize, m: usize, cross: (SurdElement, SurdElement)) -> Self {
        debug_assert!(n < m);
        debug_assert_eq!(cross.0, cross.1);
        LogosWitness { n, m, cross }
    }

    pub fn indices(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    /// `(e_n * e_{m+1}, e_m * e_{n+1})`; equal by construction.
    pub fn cross_products(&self) -> (&SurdElement, &SurdElement) {
        (&self.cross.0, &self.cross.1)
    }
}

/// A quotient sequence, either finite (commensurable input) or eventually
/// periodic with the period in canonical form: the cycle is primitive and
/// starts as early as the representation allows (the first quotient always
/// stays in the pre-period, mirroring how both detectors certify a repeat
/// only from the second division on).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    initial: Vec<BigInt>,
    period: Option<Vec<BigInt>>,
    terminated: bool,
    witness: Option<LogosWitness>,
}

impl Expansion {
    pub(crate) fn terminated(quotients: Vec<BigInt>) -> Self {
        Expansion {
            initial: quotients,
            period: None,
            terminated: true,
            witness: None,
        }
    }

    pub(crate) fn periodic(
        mut initial: Vec<BigInt>,
        mut period: Vec<BigInt>,
        witness: Option<LogosWitness>,
    ) -> Self {
        assert!(!initial.is_empty() && !period.is_empty());
        canonicalize(&mut initial, &mut period);
        Expansion {
            initial,
            period: Some(period),
            terminated: false,
            witness,
        }
    }

    /// Pre-periodic quotients.
    pub fn initial(&self) -> &[BigInt] {
        &self.initial
    }

    /// The quotient cycle, if the expansion is periodic.
    pub fn period(&self) -> Option<&[BigInt]> {
        self.period.as_deref()
    }

    pub fn is_terminated(&self) -> bool {
        self.terminated
    }

    pub fn witness(&self) -> Option<&LogosWitness> {
        self.witness.as_ref()
    }

    /// The quotient stream: finite for a terminated expansion, endless for
    /// a periodic one.
    pub fn quotients(&self) -> impl Iterator<Item = &BigInt> + '_ {
        let cycle = self.period.as_deref().unwrap_or(&[]);
        self.initial.iter().chain(cycle.iter().cycle())
    }
}

/// Reduce the cycle to its primitive root, then roll the period start as
/// far left as the quotients allow. The pre-period keeps at least one
/// quotient: neither detector can certify a repeat involving the seed pair
/// itself, so index 0 is never part of a certified cycle.
fn canonicalize(initial: &mut Vec<BigInt>, period: &mut Vec<BigInt>) {
    let len = period.len();
    for root in 1..len {
        if len.is_multiple_of(root) && (root..len).all(|i| period[i] == period[i - root]) {
            period.truncate(root);
            break;
        }
    }
    while initial.len() > 1 && initial.last() == period.last() {
        let rolled = initial.pop().expect("initial is non-empty");
        period.rotate_right(1);
        debug_assert_eq!(period.first(), Some(&rolled));
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |qs: &[BigInt], sep: &str| {
            qs.iter()
                .map(|q| q.to_string())
                .collect::<Vec<_>>()
                .join(sep)
        };
        match &self.period {
            None => write!(f, "[{}]", join(&self.initial, ", ")),
            Some(period) => write!(
                f,
                "[{}; ({})]",
                join(&self.initial, ", "),
                join(period, ",")
            ),
        }
    }
}
