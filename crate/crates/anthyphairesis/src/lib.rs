//! Exact anthyphairesis: the reciprocal-subtraction (continued-fraction)
//! expansion of integer pairs and quadratic surds sqrt(N), in arbitrary
//! precision throughout.
//!
//! Integer pairs terminate in their gcd. Surd expansions are detected
//! periodic two independent ways: by the logos criterion — equality of two
//! consecutive-remainder ratios, certified exactly by cross-multiplication
//! in Z[sqrt(N)] — and by the classical (P, Q) state recurrence. On top of
//! the expansions sit convergents, Pell residues, side-and-diameter
//! numbers, palindromic-period checks and finite truncations.

pub mod analysis;
pub mod approximation;
pub mod arith;
pub mod engine;
pub mod error;
pub mod expansion;

pub use analysis::{
    species_count, theodorus_batch, topica_check, verify_palindrome, PalindromeReport,
    THEODORUS_RADICANDS,
};
pub use approximation::{
    convergents, pell_residue, side_diameter, true_judgement, Convergent, SideDiameterPair,
    TrueJudgement,
};
pub use arith::{isqrt, Sign, SurdContext, SurdElement};
pub use engine::{
    anth_integers, anth_step, anth_surd_logos, anth_surd_logos_seeded, anth_surd_state,
    commensurability, default_max_steps, logos_equal, Commensurability, Magnitude, MagnitudePair,
    SurdRun,
};
pub use error::Error;
pub use expansion::{Expansion, LogosWitness};

pub use num_bigint::BigInt;
