//! Brute-force reference for tiny codes: every codeword, the true minimum
//! distance, and maximum-likelihood (nearest codeword) decoding.

use crate::cascade;
use crate::construction::{MessageTriple, NestedTriple};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::par::{self, Execution};
use crate::{hamming_distance, hamming_weight};

/// Largest code, in codewords, that [`enumerate`] will build.
pub const ENUMERATION_LIMIT: u128 = 1 << 24;

#[derive(Debug, Clone)]
pub struct TinyCodeTable {
    pub triple: NestedTriple,
    /// Indexed by message number, base-`q` digits of `(msg_a | msg_b | msg_z)`.
    pub codewords: Vec<Vec<FieldElement>>,
    pub min_distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nearest {
    pub codeword: Vec<FieldElement>,
    pub distance: usize,
    /// No other codeword is at the same distance.
    pub unique: bool,
}

fn message_for(index: u64, q: u64, dims: (usize, usize, usize)) -> MessageTriple {
    let k0 = dims.0 + dims.1 + dims.2;
    let mut rest = index;
    let flat: Vec<FieldElement> = (0..k0)
        .map(|_| {
            let d = rest % q;
            rest /= q;
            FieldElement::from_raw(d as u16)
        })
        .collect();
    MessageTriple::split(&flat, dims).expect("sized from dims")
}

/// Encodes every message of `triple`.
pub fn enumerate(triple: &NestedTriple, exec: Execution) -> Result<TinyCodeTable> {
    let q = triple.field().size() as u128;
    let k0 = triple.params().k0 as u32;
    let size = q.checked_pow(k0).unwrap_or(u128::MAX);
    if size > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge {
            size,
            limit: ENUMERATION_LIMIT,
        });
    }
    let dims = triple.dims();
    let codewords = par::map_collect(exec, 0..size as u64, |i| {
        triple
            .encode(&message_for(i, q as u64, dims))
            .expect("sized from dims")
    });
    // linear code: minimum distance is the minimum nonzero weight
    let min_distance = codewords
        .iter()
        .map(|c| hamming_weight(c))
        .filter(|&w| w > 0)
        .min()
        .unwrap_or(0);
    Ok(TinyCodeTable {
        triple: triple.clone(),
        codewords,
        min_distance,
    })
}

pub fn nearest_codeword(table: &TinyCodeTable, received: &[FieldElement]) -> Nearest {
    let mut best = usize::MAX;
    let mut best_idx = 0;
    let mut ties = 0;
    for (i, c) in table.codewords.iter().enumerate() {
        let d = hamming_distance(c, received);
        if d < best {
            best = d;
            best_idx = i;
            ties = 1;
        } else if d == best {
            ties += 1;
        }
    }
    Nearest {
        codeword: table.codewords[best_idx].clone(),
        distance: best,
        unique: ties == 1,
    }
}

/// Every vector of length `len` and weight at most `max_weight` over a field
/// of size `q`.
pub fn error_patterns(len: usize, q: usize, max_weight: usize) -> Vec<Vec<FieldElement>> {
    let mut out = vec![vec![FieldElement::ZERO; len]];
    let mut frontier = out.clone();
    for _ in 0..max_weight {
        let mut next = Vec::new();
        for e in &frontier {
            // extend only past the last nonzero position to avoid repeats
            let start = e.iter().rposition(|x| !x.is_zero()).map_or(0, |p| p + 1);
            for pos in start..len {
                for v in 1..q {
                    let mut e2 = e.clone();
                    e2[pos] = FieldElement::from_raw(v as u16);
                    next.push(e2);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Result of comparing the cascade decoder with nearest-codeword decoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub checked: u64,
    pub mismatches: u64,
}

/// Decodes every codeword plus every error pattern of weight up to the
/// guaranteed radius with both the cascade decoder and brute force, counting
/// disagreements.
pub fn cascade_ml_equivalence(table: &TinyCodeTable, exec: Execution) -> EquivalenceReport {
    let t = &table.triple;
    let radius = t.params().correction_radius();
    let patterns = error_patterns(t.len(), t.field().size(), radius);
    let per_word = patterns.len() as u64;
    let total = table.codewords.len() as u64 * per_word;
    let mismatches = par::map_reduce(
        exec,
        0..total,
        || 0u64,
        |i| {
            let c = &table.codewords[(i / per_word) as usize];
            let e = &patterns[(i % per_word) as usize];
            let r: Vec<FieldElement> = c.iter().zip(e).map(|(&x, &y)| x + y).collect();
            let ml = nearest_codeword(table, &r);
            let out = cascade::decode_flat(t, &r).expect("sized from the triple");
            u64::from(out.codeword.as_ref() != Some(&ml.codeword))
        },
        |a, b| a + b,
    );
    EquivalenceReport {
        checked: total,
        mismatches,
    }
}
