//! Rendering: the division-trace table in remainder notation (`a`, `b`,
//! `e1`, ...) and the machine-readable record with every integer as a
//! decimal string.

use std::cmp::Ordering;
use std::fmt::Write;

use anthyphairesis::{convergents, pell_residue, BigInt, Expansion, SurdContext, SurdRun};
use serde::{Deserialize, Serialize};

/// Name of the k-th magnitude in the division chain: the seeds `a` and `b`,
/// then the remainders `e1`, `e2`, ...
fn magnitude_name(index: isize) -> String {
    match index {
        -1 => "a".to_string(),
        0 => "b".to_string(),
        i => format!("e{i}"),
    }
}

/// `m*a + n*b` in positive-term-first style: `a - 4b`, `9b - 2a`,
/// `326a - 1421b`. Unit coefficients are omitted.
fn linear_combination(m: &BigInt, n: &BigInt) -> String {
    fn term(coeff: &BigInt, unit: char) -> String {
        if *coeff == BigInt::from(1) {
            unit.to_string()
        } else {
            format!("{coeff}{unit}")
        }
    }
    let zero = BigInt::from(0);
    match (m.cmp(&zero), n.cmp(&zero)) {
        (Ordering::Equal, Ordering::Equal) => "0".to_string(),
        (Ordering::Equal, Ordering::Greater) => term(n, 'b'),
        (Ordering::Equal, Ordering::Less) => format!("-{}", term(&-n, 'b')),
        (Ordering::Greater, Ordering::Equal) => term(m, 'a'),
        (Ordering::Less, Ordering::Equal) => format!("-{}", term(&-m, 'a')),
        (Ordering::Greater, Ordering::Greater) => {
            format!("{} + {}", term(m, 'a'), term(n, 'b'))
        }
        (Ordering::Greater, Ordering::Less) => {
            format!("{} - {}", term(m, 'a'), term(&-n, 'b'))
        }
        (Ordering::Less, Ordering::Greater) => {
            format!("{} - {}", term(n, 'b'), term(&-m, 'a'))
        }
        (Ordering::Less, Ordering::Less) => {
            format!("-{} - {}", term(&-m, 'a'), term(&-n, 'b'))
        }
    }
}

/// `e_{k-1} = I_k e_k + e_{k+1}` with a unit quotient left implicit.
fn step_equation(k: usize, quotient: &BigInt) -> String {
    let lhs = magnitude_name(k as isize - 1);
    let rhs = magnitude_name(k as isize);
    let remainder = magnitude_name(k as isize + 1);
    if *quotient == BigInt::from(1) {
        format!("{lhs} = {rhs} + {remainder}")
    } else {
        format!("{lhs} = {quotient}{rhs} + {remainder}")
    }
}

/// The full table for an expansion run: summary line, one line per division
/// step pairing the step equation with the remainder expressed over the
/// seeds, then the certified logos and its cross-product.
pub fn render_expand_table(run: &SurdRun, shown_steps: usize) -> String {
    let mut out = String::new();
    let exp = run.expansion();
    let _ = writeln!(out, "sqrt({}) = {}", run.context().radicand(), exp);
    for k in 0..shown_steps.min(run.quotients().len()) {
        let remainder = &run.remainders()[k];
        let _ = writeln!(
            out,
            "{}   ({} = {})",
            step_equation(k, &run.quotients()[k]),
            magnitude_name(k as isize + 1),
            linear_combination(remainder.m(), remainder.n()),
        );
    }
    if let Some(witness) = exp.witness() {
        let (n, m) = witness.indices();
        let _ = writeln!(
            out,
            "logos: {}/{} = {}/{}",
            magnitude_name(n as isize),
            magnitude_name(n as isize + 1),
            magnitude_name(m as isize),
            magnitude_name(m as isize + 1),
        );
        let (cross, _) = witness.cross_products();
        let _ = writeln!(
            out,
            "cross-product: {}",
            linear_combination(cross.m(), cross.n())
        );
    }
    out
}

/// One line per convergent: `p/q  residue`.
pub fn render_convergents(ctx: &SurdContext, exp: &Expansion, count: usize) -> String {
    let quotients: Vec<BigInt> = exp.quotients().take(count).cloned().collect();
    let cs = convergents(&quotients, count).expect("periodic expansions supply any prefix");
    let mut out = String::new();
    for c in &cs {
        let _ = writeln!(out, "{c}  {}", pell_residue(ctx, c));
    }
    out
}

/// Machine-readable expansion record. Every integer travels as a decimal
/// string so arbitrary precision survives transport; field order is fixed
/// and serialization is canonical (compact, no whitespace variance).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: String,
    pub initial: Vec<String>,
    pub period: Vec<String>,
    pub preperiod_length: String,
    pub logos_witness: [String; 2],
    pub remainders: Vec<[String; 2]>,
    pub convergents: Vec<[String; 2]>,
}

impl OutputRecord {
    pub fn from_run(run: &SurdRun) -> Self {
        let exp = run.expansion();
        let witness = exp.witness().expect("logos runs carry a witness");
        let (wn, wm) = witness.indices();
        let steps = run.quotients().len();
        let cs = convergents(run.quotients(), steps).expect("surd quotients are all >= 1");
        OutputRecord {
            n: run.context().radicand().to_string(),
            initial: exp.initial().iter().map(ToString::to_string).collect(),
            period: exp
                .period()
                .unwrap_or(&[])
                .iter()
                .map(ToString::to_string)
                .collect(),
            preperiod_length: exp.initial().len().to_string(),
            logos_witness: [wn.to_string(), wm.to_string()],
            remainders: run
                .remainders()
                .iter()
                .map(|e| [e.m().to_string(), e.n().to_string()])
                .collect(),
            convergents: cs
                .iter()
                .map(|c| [c.p().to_string(), c.q().to_string()])
                .collect(),
        }
    }
}
