//! Long codes from nested Reed-Solomon codes.
//!
//! Three RS codes `C_z ⊆ C_b ⊆ C_a` of length `n` over `GF(2^m)` are mixed
//! blockwise into a length-`3n` code `(a | a + b | a + alpha*b + z)`, which is
//! decoded by a four-step cascade: `z` first, then `b` with the step-one error
//! locations erased, then three candidate decodes of `a`, keeping the one
//! that explains the received word with the fewest symbol errors.
//!
//! Modules:
//! - [`field`]: `GF(2^m)` arithmetic.
//! - [`rs`]: evaluation-form RS codes with errors-and-erasures decoding.
//! - [`construction`]: the nested triple, encoding and membership.
//! - [`cascade`]: the cascade decoder and its ground-truth analysis.
//! - [`oracle`]: exhaustive enumeration and nearest-codeword search for tiny codes.
//! - [`channel`] and [`sim`]: seeded Monte Carlo frame-error simulation.

pub mod cascade;
pub mod channel;
pub mod construction;
pub mod error;
pub mod field;
pub mod oracle;
pub mod par;
mod poly;
pub mod rs;
pub mod sim;

pub use cascade::{CascadeOutcome, CascadeStatus, DecodeTrace, ReceivedWord};
pub use construction::{CodeParams, MessageTriple, NestedTriple};
pub use error::{Error, Result};
pub use field::{FieldElement, GaloisField};
pub use par::Execution;
pub use rs::{ErasureSet, RsCode, RsDecodeOutcome};

/// Number of nonzero symbols.
pub fn hamming_weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Number of coordinates where `u` and `v` differ. Both must have equal length.
pub fn hamming_distance(u: &[FieldElement], v: &[FieldElement]) -> usize {
    debug_assert_eq!(u.len(), v.len());
    u.iter().zip(v).filter(|(x, y)| x != y).count()
}
