//! Exact verification of prime-power congruences for generalized central
//! trinomial coefficients.
//!
//! The generalized central trinomial coefficient `T_n(b, c)` is the
//! coefficient of `x^n` in `(x^2 + bx + c)^n`. With `d = b^2 - 4c`, sums of
//! the form `Σ_{k<p} T_k(b,c)^2 / m^k` satisfy congruences modulo `p^2` and
//! `p^3` for odd primes `p`. This crate provides
//!
//! * [`modnt`] — arithmetic modulo `p^e` (`e ≤ 3`) with p-adic valuation
//!   tracking, deterministic primality, Legendre symbols, Fermat quotients,
//!   and the `x^2 + 4y^2` representation of primes `p ≡ 1 (mod 4)`;
//! * [`sequences`] — exact (big-integer) and modular generators for the
//!   trinomial coefficients, central binomials, harmonic numbers, and the
//!   auxiliary sums the congruences are phrased in;
//! * [`identities`] — exact verification of the underlying binomial/harmonic
//!   identities together with their recurrence certificates;
//! * [`congruences`] — per-prime congruence checks producing structured
//!   verdicts;
//! * [`cli`] — prime sieving, sweep orchestration, and JSON/CSV reports.
//!
//! Everything is exact: no floats, no probabilistic primality, no tolerance
//! knobs. A failing verdict carries both residues and is a reproducible
//! counterexample certificate.

pub mod cli;
pub mod congruences;
pub mod identities;
pub mod modnt;
pub mod sequences;

pub use congruences::{CheckId, CheckVerdict};
pub use modnt::{Modulus, NtError, Residue, ValuedResidue};
pub use sequences::TrinomialParams;
