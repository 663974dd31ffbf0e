//! Four-step cascade decoder for [`NestedTriple`] codes.
//!
//! For `r = (r_a | r_b | r_z)`:
//!
//! 1. Decode `r_z - alpha*r_b + (alpha-1)*r_a` in `C_z`. The support of the
//!    corrected error is the location set `E`.
//! 2. Decode `r_b - r_a` in `C_b` with the positions of `E` erased.
//! 3. Decode the three streams `r_a`, `r_b - b`, `r_z - alpha*b - z` in
//!    `C_a`, keeping every stream that decodes.
//! 4. Pick the surviving candidate `a` minimising the total symbol errors it
//!    implies over all three blocks; ties go to the earliest stream.
//!
//! Every error pattern of weight at most `(d0 - 1) / 2` is corrected. Many
//! heavier patterns are too, since step 1 only sees the combined error and
//! errors that line up across blocks count once or not at all.

use crate::construction::{MessageTriple, NestedTriple};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::hamming_weight;
use crate::rs::ErasureSet;

/// A received word split into its three length-`n` blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReceivedWord {
    pub a: Vec<FieldElement>,
    pub b: Vec<FieldElement>,
    pub z: Vec<FieldElement>,
}

impl ReceivedWord {
    pub fn from_flat(word: &[FieldElement], n: usize) -> Result<Self> {
        if word.len() != 3 * n {
            return Err(Error::LengthMismatch {
                expected: 3 * n,
                got: word.len(),
            });
        }
        Ok(ReceivedWord {
            a: word[..n].to_vec(),
            b: word[n..2 * n].to_vec(),
            z: word[2 * n..].to_vec(),
        })
    }

    pub fn to_flat(&self) -> Vec<FieldElement> {
        [self.a.as_slice(), &self.b, &self.z].concat()
    }
}

/// Which step-3 stream a candidate came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stream {
    /// `r_a`
    A,
    /// `r_b - b`
    B,
    /// `r_z - alpha*b - z`
    Z,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub stream: Stream,
    pub a: Vec<FieldElement>,
    pub message: Vec<FieldElement>,
    /// Implied error weights in blocks a, b and z.
    pub weights: [usize; 3],
    pub total: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DecodeTrace {
    pub z_hat: Option<Vec<FieldElement>>,
    /// Step-1 error locations, erased in step 2.
    pub e_locs: ErasureSet,
    pub b_hat: Option<Vec<FieldElement>>,
    /// Errors the punctured `C_b` decode corrected outside `e_locs`.
    pub step2_errors: Option<usize>,
    pub candidates: Vec<Candidate>,
    /// Index into `candidates`.
    pub chosen: Option<usize>,
    pub tau_min: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CascadeStatus {
    Success,
    Step1Failure,
    Step2Failure,
    AllCandidatesFailed,
}

impl CascadeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CascadeStatus::Success => "success",
            CascadeStatus::Step1Failure => "step1-failure",
            CascadeStatus::Step2Failure => "step2-failure",
            CascadeStatus::AllCandidatesFailed => "all-candidates-failed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeOutcome {
    pub status: CascadeStatus,
    pub codeword: Option<Vec<FieldElement>>,
    pub message: Option<MessageTriple>,
    pub trace: DecodeTrace,
}

impl CascadeOutcome {
    fn failed(status: CascadeStatus, trace: DecodeTrace) -> Self {
        CascadeOutcome {
            status,
            codeword: None,
            message: None,
            trace,
        }
    }

    pub fn is_success(&self) -> bool {
        self.status == CascadeStatus::Success
    }
}

/// `r_z - alpha*r_b + (alpha-1)*r_a`, which equals `z + e_z - alpha*e_b +
/// (alpha-1)*e_a`.
pub fn combine_step1(triple: &NestedTriple, r: &ReceivedWord) -> Vec<FieldElement> {
    let f = &**triple.field();
    let alpha = triple.alpha();
    let alpha_m1 = alpha - FieldElement::ONE;
    r.a.iter()
        .zip(&r.b)
        .zip(&r.z)
        .map(|((&ra, &rb), &rz)| rz - f.mul(alpha, rb) + f.mul(alpha_m1, ra))
        .collect()
}

fn check_received(triple: &NestedTriple, r: &ReceivedWord) -> Result<()> {
    let n = triple.component_len();
    for part in [&r.a, &r.b, &r.z] {
        if part.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: part.len(),
            });
        }
    }
    Ok(())
}

fn sub(x: &[FieldElement], y: &[FieldElement]) -> Vec<FieldElement> {
    x.iter().zip(y).map(|(&p, &q)| p - q).collect()
}

/// Index of the candidate with the smallest total weight; the first one wins
/// ties, so stream order `A, B, Z` breaks them.
pub fn select_candidate(candidates: &[Candidate]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, c) in candidates.iter().enumerate() {
        if best.is_none_or(|j| c.total < candidates[j].total) {
            best = Some(i);
        }
    }
    best
}

pub fn decode(triple: &NestedTriple, r: &ReceivedWord) -> Result<CascadeOutcome> {
    check_received(triple, r)?;
    let f = &**triple.field();
    let alpha = triple.alpha();
    let mut trace = DecodeTrace::default();

    // Step 1
    let combined = combine_step1(triple, r);
    let Some(z_dec) = triple
        .code_z()
        .decode(&combined, &ErasureSet::none())?
        .into_corrected()
    else {
        return Ok(CascadeOutcome::failed(CascadeStatus::Step1Failure, trace));
    };
    let e_locs = ErasureSet::support_of(&z_dec.error_vector);
    trace.z_hat = Some(z_dec.codeword.clone());
    trace.e_locs = e_locs.clone();

    // Step 2
    let diff = sub(&r.b, &r.a);
    let Some(b_dec) = triple.code_b().decode(&diff, &e_locs)?.into_corrected() else {
        return Ok(CascadeOutcome::failed(CascadeStatus::Step2Failure, trace));
    };
    trace.step2_errors = Some(
        b_dec
            .error_vector
            .iter()
            .enumerate()
            .filter(|(i, e)| !e.is_zero() && !e_locs.contains(*i))
            .count(),
    );
    trace.b_hat = Some(b_dec.codeword.clone());
    let b_hat = &b_dec.codeword;
    let z_hat = &z_dec.codeword;

    // Step 3
    let stream_b = sub(&r.b, b_hat);
    let stream_z: Vec<FieldElement> = r
        .z
        .iter()
        .zip(b_hat)
        .zip(z_hat)
        .map(|((&rz, &b), &z)| rz - f.mul(alpha, b) - z)
        .collect();
    let streams = [
        (Stream::A, r.a.as_slice()),
        (Stream::B, stream_b.as_slice()),
        (Stream::Z, stream_z.as_slice()),
    ];
    for (stream, word) in streams {
        let Some(a_dec) = triple
            .code_a()
            .decode(word, &ErasureSet::none())?
            .into_corrected()
        else {
            continue;
        };
        // Step 4 bookkeeping: errors implied by this candidate in each block.
        let weights = [
            hamming_weight(&sub(&r.a, &a_dec.codeword)),
            hamming_weight(&sub(&stream_b, &a_dec.codeword)),
            hamming_weight(&sub(&stream_z, &a_dec.codeword)),
        ];
        trace.candidates.push(Candidate {
            stream,
            a: a_dec.codeword,
            message: a_dec.message,
            weights,
            total: weights.iter().sum(),
        });
    }

    // Step 4
    let Some(chosen) = select_candidate(&trace.candidates) else {
        return Ok(CascadeOutcome::failed(
            CascadeStatus::AllCandidatesFailed,
            trace,
        ));
    };
    trace.chosen = Some(chosen);
    let winner = &trace.candidates[chosen];
    trace.tau_min = Some(winner.total);

    let codeword = triple.compose(&winner.a, b_hat, z_hat);
    let message = MessageTriple {
        a: winner.message.clone(),
        b: b_dec.message,
        z: z_dec.message,
    };
    Ok(CascadeOutcome {
        status: CascadeStatus::Success,
        codeword: Some(codeword),
        message: Some(message),
        trace,
    })
}

/// Decodes a flat length-`3n` word.
pub fn decode_flat(triple: &NestedTriple, word: &[FieldElement]) -> Result<CascadeOutcome> {
    decode(triple, &ReceivedWord::from_flat(word, triple.component_len())?)
}

/// What the decoder faces for a known transmitted word. Test and simulation
/// support only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundTruthAnalysis {
    /// Weight of the full error over all `3n` positions.
    pub tau: usize,
    /// Support of `e_z - alpha*e_b + (alpha-1)*e_a`.
    pub e_locs_true: ErasureSet,
    /// Positions where `e_b - e_a != 0` but the step-1 combination cancels.
    pub cancelled: ErasureSet,
    /// `|e_a|, |e_b|, |e_z|`: the errors on the three step-3 streams when
    /// steps 1 and 2 are right.
    pub stream_weights: [usize; 3],
}

/// Per-pattern checks of the inequalities that make the cascade correct
/// within the guaranteed radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProofObligations {
    /// `|E| + 2|I| <= tau`
    pub location_budget: bool,
    /// `min(|e_a|, |e_b|, |e_z|) < (d_a - 1) / 2`, strict as written in the
    /// original correctness argument.
    pub stream_strict: bool,
    /// `min(|e_a|, |e_b|, |e_z|) <= (d_a - 1) / 2`, what step 3 needs.
    pub stream_decodable: bool,
    /// `|I| <= (d_b - |E| - 1) / 2` for the punctured step-2 code; false when
    /// `|E| >= d_b`.
    pub step2_budget: bool,
}

impl ProofObligations {
    pub fn all_hold(&self) -> bool {
        self.location_budget && self.stream_strict && self.stream_decodable && self.step2_budget
    }
}

impl GroundTruthAnalysis {
    pub fn obligations(&self, triple: &NestedTriple) -> ProofObligations {
        let d_a = triple.code_a().min_distance();
        let d_b = triple.code_b().min_distance();
        let e = self.e_locs_true.len();
        let i = self.cancelled.len();
        let min_stream = *self.stream_weights.iter().min().unwrap();
        ProofObligations {
            location_budget: e + 2 * i <= self.tau,
            stream_strict: min_stream < (d_a - 1) / 2,
            stream_decodable: min_stream <= (d_a - 1) / 2,
            step2_budget: e < d_b && i <= (d_b - e - 1) / 2,
        }
    }
}

pub fn analyze_ground_truth(
    triple: &NestedTriple,
    transmitted: &[FieldElement],
    received: &[FieldElement],
) -> Result<GroundTruthAnalysis> {
    let n = triple.component_len();
    if transmitted.len() != 3 * n || received.len() != 3 * n {
        return Err(Error::LengthMismatch {
            expected: 3 * n,
            got: if transmitted.len() != 3 * n {
                transmitted.len()
            } else {
                received.len()
            },
        });
    }
    let e = sub(received, transmitted);
    let er = ReceivedWord::from_flat(&e, n)?;
    let combined = combine_step1(triple, &er);
    let diff = sub(&er.b, &er.a);
    let e_locs_true = ErasureSet::support_of(&combined);
    let cancelled = (0..n)
        .filter(|&i| !diff[i].is_zero() && combined[i].is_zero())
        .collect();
    Ok(GroundTruthAnalysis {
        tau: hamming_weight(&e),
        e_locs_true,
        cancelled,
        stream_weights: [
            hamming_weight(&er.a),
            hamming_weight(&er.b),
            hamming_weight(&er.z),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GaloisField;
    use crate::sim::random_message;
    use rand::seq::index::sample;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn small() -> NestedTriple {
        let f = Arc::new(GaloisField::new(4, None).unwrap());
        NestedTriple::new(f, 15, 11, 9, 5, None).unwrap()
    }

    fn add(x: &[FieldElement], y: &[FieldElement]) -> Vec<FieldElement> {
        x.iter().zip(y).map(|(&p, &q)| p + q).collect()
    }

    fn random_error(rng: &mut impl Rng, len: usize, q: usize, tau: usize) -> Vec<FieldElement> {
        let mut e = vec![FieldElement::ZERO; len];
        for i in sample(rng, len, tau) {
            e[i] = FieldElement::from_raw(rng.gen_range(1..q) as u16);
        }
        e
    }

    #[test]
    fn noiseless_word() {
        let t = small();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let msg = random_message(&t, &mut rng);
        let c = t.encode(&msg).unwrap();
        let out = decode_flat(&t, &c).unwrap();
        assert!(out.is_success());
        assert_eq!(out.codeword.as_ref(), Some(&c));
        assert_eq!(out.message.as_ref(), Some(&msg));
        assert!(out.trace.e_locs.is_empty());
        assert_eq!(out.trace.tau_min, Some(0));
        assert_eq!(out.trace.candidates.len(), 3);
        assert_eq!(out.trace.chosen, Some(0));
    }

    #[test]
    fn combine_examples() {
        let t = small();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let msg = random_message(&t, &mut rng);
        let c = t.encode(&msg).unwrap();
        let z = t.code_z().encode(&msg.z).unwrap();
        let r = ReceivedWord::from_flat(&c, 15).unwrap();
        assert_eq!(combine_step1(&t, &r), z);

        let zero = ReceivedWord::from_flat(&[FieldElement::ZERO; 45], 15).unwrap();
        assert!(combine_step1(&t, &zero).iter().all(|x| x.is_zero()));

        // single error in block a at position 6
        let f = t.field();
        let ea = FieldElement::from_raw(9);
        let mut r = r.clone();
        r.a[6] += ea;
        let got = combine_step1(&t, &r);
        let diff: Vec<_> = got.iter().zip(&z).map(|(&x, &y)| x - y).collect();
        let expected = f.mul(t.alpha() - FieldElement::ONE, ea);
        assert!(!expected.is_zero());
        assert_eq!(ErasureSet::support_of(&diff).positions(), &[6]);
        assert_eq!(diff[6], expected);
    }

    #[test]
    fn within_radius_always_recovers() {
        let t = small();
        let radius = t.params().correction_radius();
        assert_eq!(radius, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..10_000 {
            let tau = trial % (radius + 1);
            let msg = random_message(&t, &mut rng);
            let c = t.encode(&msg).unwrap();
            let r = add(&c, &random_error(&mut rng, 45, 16, tau));
            let out = decode_flat(&t, &r).unwrap();
            assert_eq!(out.status, CascadeStatus::Success);
            assert_eq!(out.codeword.as_ref(), Some(&c));
            assert_eq!(out.message.as_ref(), Some(&msg));

            // trace consistency: recovered codeword + inferred error = r
            let tr = &out.trace;
            let w = &tr.candidates[tr.chosen.unwrap()];
            let rebuilt = t.compose(&w.a, tr.b_hat.as_ref().unwrap(), tr.z_hat.as_ref().unwrap());
            let inferred: Vec<_> = r.iter().zip(&rebuilt).map(|(&x, &y)| x - y).collect();
            assert_eq!(add(&rebuilt, &inferred), r);
            assert_eq!(crate::hamming_weight(&inferred), tr.tau_min.unwrap());
            assert_eq!(tr.tau_min, Some(tau));

            let gt = analyze_ground_truth(&t, &c, &r).unwrap();
            assert_eq!(gt.tau, tau);
            assert_eq!(tr.e_locs, gt.e_locs_true);
            assert_eq!(tr.step2_errors, Some(gt.cancelled.len()));
            assert!(gt.obligations(&t).all_hold(), "{gt:?}");
        }
    }

    #[test]
    fn ground_truth_examples() {
        let t = small();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let c = t.encode(&random_message(&t, &mut rng)).unwrap();

        let gt = analyze_ground_truth(&t, &c, &c).unwrap();
        assert_eq!(gt.tau, 0);
        assert!(gt.e_locs_true.is_empty() && gt.cancelled.is_empty());

        // single error in block b
        let mut r = c.clone();
        r[15 + 4] += FieldElement::from_raw(3);
        let gt = analyze_ground_truth(&t, &c, &r).unwrap();
        assert_eq!(gt.e_locs_true.positions(), &[4]);
        assert!(gt.cancelled.is_empty());

        // e_a = 0, e_b = x at i; e_z = alpha*x cancels the combination while
        // e_b - e_a stays nonzero
        let f = t.field();
        let x = FieldElement::from_raw(7);
        let mut r = c.clone();
        r[15 + 2] += x;
        r[30 + 2] += f.mul(t.alpha(), x);
        let gt = analyze_ground_truth(&t, &c, &r).unwrap();
        assert_eq!(gt.tau, 2);
        assert!(gt.e_locs_true.is_empty());
        assert_eq!(gt.cancelled.positions(), &[2]);
        assert!(gt.obligations(&t).location_budget);
        // step 2 must find it without an erasure
        let out = decode_flat(&t, &r).unwrap();
        assert_eq!(out.codeword.as_ref(), Some(&c));
        assert!(out.trace.e_locs.is_empty());
        assert_eq!(out.trace.step2_errors, Some(1));

        assert!(analyze_ground_truth(&t, &c, &r[..44]).is_err());
    }

    /// Errors `(x, x, x)` stacked on one column vanish from both the step-1
    /// combination and `r_b - r_a`, so only step 3 sees them.
    fn aligned_pattern(t: &NestedTriple, columns: &[usize], extra_a: &[usize]) -> Vec<FieldElement> {
        let n = t.component_len();
        let mut e = vec![FieldElement::ZERO; 3 * n];
        for (j, &col) in columns.iter().enumerate() {
            let x = FieldElement::from_raw(1 + j as u16);
            e[col] = x;
            e[n + col] = x;
            e[2 * n + col] = x;
        }
        for &col in extra_a {
            e[col] += FieldElement::from_raw(5);
        }
        e
    }

    #[test]
    fn aligned_errors_beyond_radius_decode() {
        let t = small();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let c = t.encode(&random_message(&t, &mut rng)).unwrap();
        for (e, tau, locs) in [
            (aligned_pattern(&t, &[1, 8], &[]), 6, 0),
            (aligned_pattern(&t, &[1, 8], &[12]), 7, 1),
        ] {
            let r = add(&c, &e);
            let gt = analyze_ground_truth(&t, &c, &r).unwrap();
            assert_eq!(gt.tau, tau);
            assert!(tau > t.params().correction_radius());
            assert_eq!(gt.e_locs_true.len(), locs);
            let out = decode_flat(&t, &r).unwrap();
            assert!(out.is_success());
            assert_eq!(out.codeword.as_ref(), Some(&c));
            assert_eq!(out.trace.tau_min, Some(tau));
            assert!(out.trace.e_locs.len() < tau);
        }
    }

    #[test]
    fn selection_prefers_lowest_total_then_earliest() {
        let cand = |stream, total| Candidate {
            stream,
            a: Vec::new(),
            message: Vec::new(),
            weights: [total, 0, 0],
            total,
        };
        assert_eq!(select_candidate(&[]), None);
        assert_eq!(
            select_candidate(&[cand(Stream::A, 4), cand(Stream::B, 2), cand(Stream::Z, 3)]),
            Some(1)
        );
        assert_eq!(
            select_candidate(&[cand(Stream::A, 3), cand(Stream::B, 3), cand(Stream::Z, 3)]),
            Some(0)
        );
        assert_eq!(select_candidate(&[cand(Stream::B, 5), cand(Stream::Z, 5)]), Some(0));
    }

    #[test]
    fn heavy_noise_reports_failure_statuses() {
        let t = small();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..3000 {
            let c = t.encode(&random_message(&t, &mut rng)).unwrap();
            let tau = rng.gen_range(8..=30);
            let r = add(&c, &random_error(&mut rng, 45, 16, tau));
            let out = decode_flat(&t, &r).unwrap();
            if !out.is_success() {
                assert!(out.codeword.is_none() && out.message.is_none());
            } else {
                assert!(t.is_codeword(out.codeword.as_ref().unwrap()));
            }
            seen.insert(out.status);
        }
        assert!(seen.contains(&CascadeStatus::Step1Failure));
    }

    #[test]
    fn rejects_wrong_lengths() {
        let t = small();
        assert!(decode_flat(&t, &[FieldElement::ZERO; 44]).is_err());
        let r = ReceivedWord {
            a: vec![FieldElement::ZERO; 15],
            b: vec![FieldElement::ZERO; 14],
            z: vec![FieldElement::ZERO; 15],
        };
        assert!(decode(&t, &r).is_err());
    }
}
