//! The length-`3n` code built from three nested Reed-Solomon codes
//! `C_z ⊆ C_b ⊆ C_a` over shared evaluation points:
//!
//! ```text
//! C = { (a | a + b | a + alpha*b + z) : a in C_a, b in C_b, z in C_z }
//! ```
//!
//! with parameters `n0 = 3n`, `k0 = k_a + k_b + k_z` and
//! `d0 = min(3 d_a, 2 d_b, d_z)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, GaloisField};
use crate::rs::RsCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n0: usize,
    pub k0: usize,
    pub d0: usize,
}

impl CodeParams {
    /// Errors always corrected by the cascade decoder, `(d0 - 1) / 2`.
    pub fn correction_radius(&self) -> usize {
        (self.d0 - 1) / 2
    }
}

/// Payload for the three component encoders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MessageTriple {
    pub a: Vec<FieldElement>,
    pub b: Vec<FieldElement>,
    pub z: Vec<FieldElement>,
}

impl MessageTriple {
    /// Splits a flat `k_a + k_b + k_z` symbol vector.
    pub fn split(flat: &[FieldElement], dims: (usize, usize, usize)) -> Result<Self> {
        let (ka, kb, kz) = dims;
        if flat.len() != ka + kb + kz {
            return Err(Error::LengthMismatch {
                expected: ka + kb + kz,
                got: flat.len(),
            });
        }
        Ok(MessageTriple {
            a: flat[..ka].to_vec(),
            b: flat[ka..ka + kb].to_vec(),
            z: flat[ka + kb..].to_vec(),
        })
    }

    pub fn concat(&self) -> Vec<FieldElement> {
        let mut v = Vec::with_capacity(self.a.len() + self.b.len() + self.z.len());
        v.extend_from_slice(&self.a);
        v.extend_from_slice(&self.b);
        v.extend_from_slice(&self.z);
        v
    }
}

/// Component words `(a, b, z)` of a length-`3n` vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub a: Vec<FieldElement>,
    pub b: Vec<FieldElement>,
    pub z: Vec<FieldElement>,
}

/// Three nested RS codes and the mixing coefficient `alpha`.
#[derive(Debug, Clone)]
pub struct NestedTriple {
    field: Arc<GaloisField>,
    code_a: RsCode,
    code_b: RsCode,
    code_z: RsCode,
    alpha: FieldElement,
}

impl NestedTriple {
    /// Builds the triple on the default evaluation points. `alpha` defaults to
    /// the field generator.
    pub fn new(
        field: Arc<GaloisField>,
        n: usize,
        k_a: usize,
        k_b: usize,
        k_z: usize,
        alpha: Option<FieldElement>,
    ) -> Result<Self> {
        Self::with_eval_points(field, n, (k_a, k_b, k_z), alpha, None)
    }

    pub fn with_eval_points(
        field: Arc<GaloisField>,
        n: usize,
        (k_a, k_b, k_z): (usize, usize, usize),
        alpha: Option<FieldElement>,
        eval_points: Option<Vec<FieldElement>>,
    ) -> Result<Self> {
        if !(k_a >= k_b && k_b >= k_z && k_z >= 1) {
            return Err(Error::NotNested { k_a, k_b, k_z });
        }
        let alpha = alpha.unwrap_or_else(|| field.generator());
        if (alpha.value() as usize) >= field.size() {
            return Err(Error::ElementOutOfRange {
                value: alpha.value() as u32,
                q: field.size(),
            });
        }
        if alpha == FieldElement::ZERO || alpha == FieldElement::ONE {
            return Err(Error::InvalidAlpha);
        }
        let code_a = RsCode::new(field.clone(), n, k_a, eval_points)?;
        let points = Some(code_a.eval_points().to_vec());
        let code_b = RsCode::new(field.clone(), n, k_b, points.clone())?;
        let code_z = RsCode::new(field.clone(), n, k_z, points)?;
        Ok(NestedTriple {
            field,
            code_a,
            code_b,
            code_z,
            alpha,
        })
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn code_a(&self) -> &RsCode {
        &self.code_a
    }

    pub fn code_b(&self) -> &RsCode {
        &self.code_b
    }

    pub fn code_z(&self) -> &RsCode {
        &self.code_z
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    /// Component length `n`.
    pub fn component_len(&self) -> usize {
        self.code_a.len()
    }

    /// Full length `3n`.
    pub fn len(&self) -> usize {
        3 * self.component_len()
    }

    pub fn is_empty(&self) -> bool {
        self.component_len() == 0
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (
            self.code_a.dimension(),
            self.code_b.dimension(),
            self.code_z.dimension(),
        )
    }

    pub fn params(&self) -> CodeParams {
        let (ka, kb, kz) = self.dims();
        let d0 = (3 * self.code_a.min_distance())
            .min(2 * self.code_b.min_distance())
            .min(self.code_z.min_distance());
        CodeParams {
            n0: self.len(),
            k0: ka + kb + kz,
            d0,
        }
    }

    pub fn encode(&self, msg: &MessageTriple) -> Result<Vec<FieldElement>> {
        let a = self.code_a.encode(&msg.a)?;
        let b = self.code_b.encode(&msg.b)?;
        let z = self.code_z.encode(&msg.z)?;
        Ok(self.compose(&a, &b, &z))
    }

    /// `(a | a + b | a + alpha*b + z)` from component codewords.
    pub fn compose(
        &self,
        a: &[FieldElement],
        b: &[FieldElement],
        z: &[FieldElement],
    ) -> Vec<FieldElement> {
        let n = self.component_len();
        debug_assert!(a.len() == n && b.len() == n && z.len() == n);
        let f = &*self.field;
        let mut out = Vec::with_capacity(3 * n);
        out.extend_from_slice(a);
        out.extend(a.iter().zip(b).map(|(&x, &y)| x + y));
        out.extend(
            a.iter()
                .zip(b)
                .zip(z)
                .map(|((&x, &y), &w)| x + f.mul(self.alpha, y) + w),
        );
        out
    }

    /// Inverts [`compose`](Self::compose) blockwise. Any vector is accepted;
    /// membership of the parts is not checked.
    pub fn extract_components(&self, word: &[FieldElement]) -> Result<Components> {
        let n = self.component_len();
        if word.len() != 3 * n {
            return Err(Error::LengthMismatch {
                expected: 3 * n,
                got: word.len(),
            });
        }
        let f = &*self.field;
        let (c1, rest) = word.split_at(n);
        let (c2, c3) = rest.split_at(n);
        let a = c1.to_vec();
        let b: Vec<FieldElement> = c2.iter().zip(c1).map(|(&y, &x)| y - x).collect();
        let z = c3
            .iter()
            .zip(c1)
            .zip(&b)
            .map(|((&w, &x), &y)| w - x - f.mul(self.alpha, y))
            .collect();
        Ok(Components { a, b, z })
    }

    pub fn is_codeword(&self, word: &[FieldElement]) -> bool {
        match self.extract_components(word) {
            Ok(c) => {
                self.code_a.contains(&c.a) && self.code_b.contains(&c.b) && self.code_z.contains(&c.z)
            }
            Err(_) => false,
        }
    }
}
