//! Dense univariate polynomials over a [`GaloisField`], coefficients stored
//! lowest degree first. The zero polynomial is the empty vector; every
//! function here returns trimmed polynomials.

use crate::field::{FieldElement, GaloisField};

pub(crate) type Poly = Vec<FieldElement>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[FieldElement]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn eval(f: &GaloisField, p: &[FieldElement], x: FieldElement) -> FieldElement {
    p.iter()
        .rev()
        .fold(FieldElement::ZERO, |acc, &c| f.mul(acc, x) + c)
}

/// `prod (x - r)` over all roots.
pub(crate) fn from_roots(f: &GaloisField, roots: &[FieldElement]) -> Poly {
    let mut out = Vec::with_capacity(roots.len() + 1);
    out.push(FieldElement::ONE);
    for &r in roots {
        // (x - r) * p = x*p + r*p in characteristic 2
        out.push(FieldElement::ZERO);
        for i in (1..out.len()).rev() {
            out[i] = out[i - 1] + f.mul(r, out[i]);
        }
        out[0] = f.mul(r, out[0]);
    }
    out
}

pub(crate) fn mul(f: &GaloisField, a: &[FieldElement], b: &[FieldElement]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += f.mul(x, y);
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn add(a: &[FieldElement], b: &[FieldElement]) -> Poly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b`. Panics if `b` is zero.
pub(crate) fn div_rem(f: &GaloisField, a: &[FieldElement], b: &[FieldElement]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = f.inv_nonzero(b[db]);
    let mut quot = vec![FieldElement::ZERO; rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = rem[i];
        if c.is_zero() {
            continue;
        }
        let factor = f.mul(c, lead_inv);
        quot[i - db] = factor;
        for j in 0..=db {
            rem[i - db + j] -= f.mul(factor, b[j]);
        }
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// Divides `p` by the monic linear factor `(x - root)`, discarding the
/// remainder.
fn div_linear(f: &GaloisField, p: &[FieldElement], root: FieldElement) -> Poly {
    if p.len() < 2 {
        return Vec::new();
    }
    let mut out = vec![FieldElement::ZERO; p.len() - 1];
    let mut carry = FieldElement::ZERO;
    for i in (1..p.len()).rev() {
        carry = p[i] + f.mul(carry, root);
        out[i - 1] = carry;
    }
    out
}

/// Unique polynomial of degree `< points.len()` through `(points[i],
/// values[i])`. `vanishing` must be `from_roots(points)`.
pub(crate) fn interpolate(
    f: &GaloisField,
    points: &[FieldElement],
    values: &[FieldElement],
    vanishing: &[FieldElement],
) -> Poly {
    debug_assert_eq!(points.len(), values.len());
    let mut out = vec![FieldElement::ZERO; points.len()];
    for (&x, &y) in points.iter().zip(values) {
        if y.is_zero() {
            continue;
        }
        let basis = div_linear(f, vanishing, x);
        let scale = f.mul(y, f.inv_nonzero(eval(f, &basis, x)));
        for (o, &b) in out.iter_mut().zip(&basis) {
            *o += f.mul(scale, b);
        }
    }
    trim(&mut out);
    out
}

/// Extended Euclid on `(a, b)` stopped as soon as the remainder has degree
/// below `stop_degree`. Returns that remainder `g` and the cofactor `v` with
/// `u*a + v*b = g`.
pub(crate) fn partial_xgcd(
    f: &GaloisField,
    a: &[FieldElement],
    b: &[FieldElement],
    stop_degree: usize,
) -> (Poly, Poly) {
    let mut r0: Poly = a.to_vec();
    let mut r1: Poly = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut v0: Poly = Vec::new();
    let mut v1: Poly = vec![FieldElement::ONE];
    while degree(&r1).is_some_and(|d| d >= stop_degree) {
        let (q, r) = div_rem(f, &r0, &r1);
        let v2 = add(&v0, &mul(f, &q, &v1));
        r0 = std::mem::replace(&mut r1, r);
        v0 = std::mem::replace(&mut v1, v2);
    }
    (r1, v1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_poly(rng: &mut ChaCha8Rng, f: &GaloisField, len: usize) -> Poly {
        let mut p: Poly = (0..len)
            .map(|_| FieldElement::from_raw(rng.gen_range(0..f.size()) as u16))
            .collect();
        trim(&mut p);
        p
    }

    #[test]
    fn roots_vanish() {
        let f = GaloisField::new(4, None).unwrap();
        let roots: Vec<_> = (0..6).map(|i| f.exp(i)).collect();
        let p = from_roots(&f, &roots);
        assert_eq!(degree(&p), Some(6));
        assert_eq!(p[6], FieldElement::ONE);
        for x in f.elements() {
            assert_eq!(eval(&f, &p, x).is_zero(), roots.contains(&x));
        }
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = GaloisField::new(8, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = random_poly(&mut rng, &f, 40);
            let mut b = random_poly(&mut rng, &f, 12);
            if b.is_empty() {
                b.push(FieldElement::ONE);
            }
            let (q, r) = div_rem(&f, &a, &b);
            assert!(r.len() < b.len());
            assert_eq!(add(&mul(&f, &q, &b), &r), a);
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = GaloisField::new(8, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let points: Vec<_> = (0..30).map(|i| f.exp(i * 5)).collect();
        let vanishing = from_roots(&f, &points);
        for _ in 0..50 {
            let p = random_poly(&mut rng, &f, 30);
            let values: Vec<_> = points.iter().map(|&x| eval(&f, &p, x)).collect();
            assert_eq!(interpolate(&f, &points, &values, &vanishing), p);
        }
    }

    #[test]
    fn xgcd_cofactor_identity() {
        let f = GaloisField::new(4, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let a = random_poly(&mut rng, &f, 12);
            let b = random_poly(&mut rng, &f, 10);
            if degree(&a).is_none() {
                continue;
            }
            let (g, v) = partial_xgcd(&f, &a, &b, 4);
            assert!(degree(&g).is_none_or(|d| d < 4));
            // g - v*b must be a multiple of a
            let (_, r) = div_rem(&f, &add(&g, &mul(&f, &v, &b)), &a);
            assert!(r.is_empty());
        }
    }
}
