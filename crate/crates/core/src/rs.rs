//! Evaluation-form Reed-Solomon codes.
//!
//! A codeword is the evaluation of a message polynomial of degree `< k` at
//! `n` distinct field points. Codes over the same points with decreasing `k`
//! are nested, which is what the Plotkin-style construction relies on.
//!
//! Decoding uses Gao's algorithm (interpolate, partial extended Euclid, one
//! division) and corrects up to `(d - 1) / 2` errors. Erasures are handled by
//! puncturing the erased coordinates, decoding in the shorter MDS code, and
//! re-extending the result to all `n` points.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, GaloisField};
use crate::hamming_weight;
use crate::poly::{self, Poly};

/// Known-bad coordinate positions, kept sorted and free of duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ErasureSet(Vec<usize>);

impl ErasureSet {
    pub fn none() -> Self {
        ErasureSet(Vec::new())
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    /// Coordinates of `0..n` that are not erased, in increasing order.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|i| !self.contains(*i)).collect()
    }

    /// Support of a vector: every index holding a nonzero symbol.
    pub fn support_of(v: &[FieldElement]) -> Self {
        ErasureSet(
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, _)| i)
                .collect(),
        )
    }
}

impl FromIterator<usize> for ErasureSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ErasureSet(v)
    }
}

/// A successful component decode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corrected {
    pub codeword: Vec<FieldElement>,
    /// Coefficients of the message polynomial, length `k`.
    pub message: Vec<FieldElement>,
    /// `received - codeword`, over all `n` coordinates.
    pub error_vector: Vec<FieldElement>,
    pub error_weight: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RsDecodeOutcome {
    Success(Corrected),
    Failure,
}

impl RsDecodeOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, RsDecodeOutcome::Success(_))
    }

    pub fn corrected(&self) -> Option<&Corrected> {
        match self {
            RsDecodeOutcome::Success(c) => Some(c),
            RsDecodeOutcome::Failure => None,
        }
    }

    pub fn into_corrected(self) -> Option<Corrected> {
        match self {
            RsDecodeOutcome::Success(c) => Some(c),
            RsDecodeOutcome::Failure => None,
        }
    }
}

/// The first `n` elements of `(1, g, g^2, ..., g^(q-2), 0)`.
pub fn default_eval_points(field: &GaloisField, n: usize) -> Vec<FieldElement> {
    (0..field.order())
        .map(|i| field.exp(i))
        .chain(std::iter::once(FieldElement::ZERO))
        .take(n)
        .collect()
}

/// An `[n, k, n - k + 1]` Reed-Solomon code.
#[derive(Debug, Clone)]
pub struct RsCode {
    field: Arc<GaloisField>,
    k: usize,
    points: Vec<FieldElement>,
    /// `prod (x - x_i)` over all evaluation points.
    vanishing: Poly,
}

impl RsCode {
    pub fn new(
        field: Arc<GaloisField>,
        n: usize,
        k: usize,
        eval_points: Option<Vec<FieldElement>>,
    ) -> Result<Self> {
        let q = field.size();
        if k < 1 || k > n || n > q {
            return Err(Error::InvalidDimensions { n, k, q });
        }
        let points = match eval_points {
            Some(p) => {
                if p.len() != n {
                    return Err(Error::EvalPointCount {
                        expected: n,
                        got: p.len(),
                    });
                }
                let mut seen = vec![false; q];
                for x in &p {
                    let v = x.value() as usize;
                    if v >= q {
                        return Err(Error::ElementOutOfRange { value: v as u32, q });
                    }
                    if std::mem::replace(&mut seen[v], true) {
                        return Err(Error::DuplicateEvalPoint(x.value()));
                    }
                }
                p
            }
            None => default_eval_points(&field, n),
        };
        let vanishing = poly::from_roots(&field, &points);
        Ok(RsCode {
            field,
            k,
            points,
            vanishing,
        })
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn min_distance(&self) -> usize {
        self.len() - self.k + 1
    }

    /// Number of errors always corrected when there are no erasures.
    pub fn correction_radius(&self) -> usize {
        (self.min_distance() - 1) / 2
    }

    pub fn eval_points(&self) -> &[FieldElement] {
        &self.points
    }

    pub fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if message.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                got: message.len(),
            });
        }
        Ok(self.evaluate(message))
    }

    fn evaluate(&self, coeffs: &[FieldElement]) -> Vec<FieldElement> {
        self.points
            .iter()
            .map(|&x| poly::eval(&self.field, coeffs, x))
            .collect()
    }

    fn interpolate_all(&self, word: &[FieldElement]) -> Poly {
        poly::interpolate(&self.field, &self.points, word, &self.vanishing)
    }

    /// Whether `word` is a codeword: its interpolating polynomial through all
    /// `n` points has degree below `k`.
    pub fn contains(&self, word: &[FieldElement]) -> bool {
        word.len() == self.len() && self.interpolate_all(word).len() <= self.k
    }

    fn check_len(&self, word: &[FieldElement]) -> Result<()> {
        if word.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: word.len(),
            });
        }
        Ok(())
    }

    fn check_indices(&self, indices: &[usize]) -> Result<()> {
        let mut seen = vec![false; self.len()];
        for &i in indices {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    n: self.len(),
                });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::DuplicateIndex(i));
            }
        }
        Ok(())
    }

    /// Errors-and-erasures decoding.
    ///
    /// With `s` erasures and `e` errors elsewhere, the transmitted codeword is
    /// returned whenever `2e + s <= d - 1`. Outside that region the result is
    /// either `Failure` or a codeword within `(d - s - 1) / 2` of `received`
    /// on the non-erased coordinates. `s >= d` always fails.
    pub fn decode(
        &self,
        received: &[FieldElement],
        erasures: &ErasureSet,
    ) -> Result<RsDecodeOutcome> {
        self.check_len(received)?;
        self.check_indices(erasures.positions())?;
        if erasures.is_empty() {
            return Ok(self.decode_errors(received));
        }
        if erasures.len() >= self.min_distance() {
            return Ok(RsDecodeOutcome::Failure);
        }

        let keep = erasures.complement(self.len());
        let punctured = self.puncture(&keep)?;
        let short: Vec<FieldElement> = keep.iter().map(|&i| received[i]).collect();
        let Some(inner) = punctured.decode_errors(&short).into_corrected() else {
            return Ok(RsDecodeOutcome::Failure);
        };
        let codeword = self.reextend(&inner.codeword, &keep)?;
        Ok(RsDecodeOutcome::Success(self.finish(
            received,
            codeword,
            inner.message,
        )))
    }

    fn finish(
        &self,
        received: &[FieldElement],
        codeword: Vec<FieldElement>,
        mut message: Vec<FieldElement>,
    ) -> Corrected {
        message.resize(self.k, FieldElement::ZERO);
        let error_vector: Vec<FieldElement> = received
            .iter()
            .zip(&codeword)
            .map(|(&r, &c)| r - c)
            .collect();
        let error_weight = hamming_weight(&error_vector);
        Corrected {
            codeword,
            message,
            error_vector,
            error_weight,
        }
    }

    /// Gao's decoder, errors only.
    fn decode_errors(&self, received: &[FieldElement]) -> RsDecodeOutcome {
        let f = &*self.field;
        let n = self.len();
        let g1 = self.interpolate_all(received);
        let (g, v) = poly::partial_xgcd(f, &self.vanishing, &g1, (n + self.k).div_ceil(2));
        if poly::degree(&v).is_none() {
            return RsDecodeOutcome::Failure;
        }
        let (msg, rem) = poly::div_rem(f, &g, &v);
        if !rem.is_empty() || msg.len() > self.k {
            return RsDecodeOutcome::Failure;
        }
        let codeword = self.evaluate(&msg);
        let out = self.finish(received, codeword, msg);
        if out.error_weight > self.correction_radius() {
            return RsDecodeOutcome::Failure;
        }
        RsDecodeOutcome::Success(out)
    }

    /// The `[keep.len(), k]` code on the retained evaluation points.
    pub fn puncture(&self, keep: &[usize]) -> Result<RsCode> {
        self.check_indices(keep)?;
        if keep.len() < self.k {
            return Err(Error::TooFewCoordinates {
                k: self.k,
                got: keep.len(),
            });
        }
        let points = keep.iter().map(|&i| self.points[i]).collect();
        RsCode::new(self.field.clone(), keep.len(), self.k, Some(points))
    }

    /// Rebuilds the full-length codeword from a codeword of
    /// `self.puncture(keep)`, interpolating through the first `k` retained
    /// coordinates.
    pub fn reextend(
        &self,
        punctured_codeword: &[FieldElement],
        keep: &[usize],
    ) -> Result<Vec<FieldElement>> {
        self.check_indices(keep)?;
        if keep.len() < self.k {
            return Err(Error::TooFewCoordinates {
                k: self.k,
                got: keep.len(),
            });
        }
        if punctured_codeword.len() != keep.len() {
            return Err(Error::LengthMismatch {
                expected: keep.len(),
                got: punctured_codeword.len(),
            });
        }
        let f = &*self.field;
        let pts: Vec<FieldElement> = keep[..self.k].iter().map(|&i| self.points[i]).collect();
        let vanishing = poly::from_roots(f, &pts);
        let msg = poly::interpolate(f, &pts, &punctured_codeword[..self.k], &vanishing);
        Ok(self.evaluate(&msg))
    }
}
