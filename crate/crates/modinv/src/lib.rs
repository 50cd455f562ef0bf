//! Modular inverses over arbitrary-precision signed integers.
//!
//! The inverse definition here is sign-aware: `(a^-1)_m` lands in
//! `[1, m-1]` for `m > 1`, in `[m+1, -1]` for `m < -1`, and has a
//! closed form (not 0) for `|m| = 1`. That convention makes the
//! reciprocity identity `a(a^-1)_b + b(b^-1)_a = 1 + ab` hold for every
//! co-prime pair, which in turn drives everything else in the crate:
//!
//! - [`modmath`]: signed modulo, the inverse, and the reciprocity
//!   identities as checkable operations.
//! - [`dayan`]: the generalized "find one" division trace computing
//!   extended inverses `(b(a^-1)_m)_m`, with pluggable per-step sign
//!   choices, built-in gcd discovery, early termination, and the
//!   series formulas for ordinary inverses.
//! - [`crt`]: Chinese Remainder solvers for co-prime and non-co-prime
//!   moduli, including a balanced parallel reduction tree.
//! - [`oracle`]: brute-force reference implementations and a counted
//!   extended-Euclid baseline for division-step comparisons.
//! - [`render`]: trace tables (TSV/markdown) and a JSON document
//!   format that round-trips.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `modinv` binary for the command-line surface.

pub mod crt;
pub mod dayan;
pub mod modmath;
pub mod oracle;
pub mod render;

pub use num_bigint::BigInt;
