//! Shared fixtures for the benchmarks.

use cliffsym::repgen::{enumerate_idempotents, IdempotentSpec};
use cliffsym::AlgebraSig;

/// Algebras of increasing size covering the real, complex and quaternionic
/// simple types.
pub const SIGNATURES: [(u32, u32); 4] = [(3, 1), (1, 3), (4, 4), (2, 6)];

/// The first enumerated idempotent of Cl(p,q).
pub fn first_idempotent(p: u32, q: u32) -> (AlgebraSig, IdempotentSpec) {
    let sig = AlgebraSig::real(p, q);
    let spec = enumerate_idempotents(sig).expect("simple signature").remove(0);
    (sig, spec)
}
