//! Arithmetic in GF(2^m) for 2 <= m <= 16.
//!
//! Elements are stored in polynomial basis as the low `m` bits of a `u16`.
//! Multiplication, inversion and powers go through exp/log tables built once
//! when the field is created; addition is XOR and needs no field context.

use std::fmt;
use std::ops::{Add, AddAssign, Sub, SubAssign};

use crate::error::{Error, Result};

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

/// Default primitive polynomial for each degree, indexed by `m`.
///
/// Bit `i` of the mask is the coefficient of `x^i`.
const DEFAULT_PRIMITIVE: [u32; 17] = [
    0, 0, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443,
    0x8003, 0x1100B,
];

/// Default primitive polynomial for `GF(2^m)`, if `m` is supported.
pub fn default_primitive_poly(m: u32) -> Option<u32> {
    (MIN_DEGREE..=MAX_DEGREE)
        .contains(&m)
        .then(|| DEFAULT_PRIMITIVE[m as usize])
}

/// An element of some `GF(2^m)`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw value. The caller is responsible for `value < q`; use
    /// [`GaloisField::element`] for a checked constructor.
    pub const fn from_raw(value: u16) -> Self {
        FieldElement(value)
    }

    pub const fn value(self) -> u16 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::LowerHex for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

// Characteristic 2: addition and subtraction are both XOR.
impl Add for FieldElement {
    type Output = FieldElement;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
    fn sub(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl AddAssign for FieldElement {
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

impl SubAssign for FieldElement {
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
    fn sub_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

/// The field `GF(2^m)` defined by a primitive polynomial.
///
/// Immutable once built; share it behind an `Arc` between codes and workers.
#[derive(Clone)]
pub struct GaloisField {
    m: u32,
    prim_poly: u32,
    /// `exp[i] = x^i`, stored twice over so that `exp[log a + log b]` needs no
    /// reduction.
    exp: Vec<u16>,
    /// `log[0]` is unused.
    log: Vec<u16>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("m", &self.m)
            .field("prim_poly", &format_args!("{:#x}", self.prim_poly))
            .finish()
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.prim_poly == other.prim_poly
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    /// Builds `GF(2^m)`, using the built-in primitive polynomial when
    /// `prim_poly` is `None`.
    pub fn new(m: u32, prim_poly: Option<u32>) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        let poly = prim_poly.unwrap_or(DEFAULT_PRIMITIVE[m as usize]);
        if poly >> m != 1 {
            return Err(Error::WrongPolyDegree { poly, m });
        }

        let order = (1usize << m) - 1;
        let mut exp = vec![0u16; 2 * order];
        let mut log = vec![0u16; order + 1];
        let mut cur: u32 = 1;
        for (i, slot) in exp[..order].iter_mut().enumerate() {
            // x has order < q-1 exactly when a power below q-1 returns to 1.
            if i > 0 && cur == 1 {
                return Err(Error::NotPrimitive { poly, m });
            }
            *slot = cur as u16;
            log[cur as usize] = i as u16;
            cur <<= 1;
            if cur >> m != 0 {
                cur ^= poly;
            }
        }
        if cur != 1 {
            // Powers of x never reached 1 (reducible polynomial with x | p, or
            // similar); the map above is not a bijection.
            return Err(Error::NotPrimitive { poly, m });
        }
        exp.copy_within(0..order, order);

        Ok(GaloisField {
            m,
            prim_poly: poly,
            exp,
            log,
        })
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn prim_poly(&self) -> u32 {
        self.prim_poly
    }

    /// Field size `q = 2^m`.
    pub fn size(&self) -> usize {
        1 << self.m
    }

    /// Order of the multiplicative group, `q - 1`.
    pub fn order(&self) -> usize {
        self.size() - 1
    }

    /// Checked element constructor.
    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if (value as usize) < self.size() {
            Ok(FieldElement(value as u16))
        } else {
            Err(Error::ElementOutOfRange {
                value,
                q: self.size(),
            })
        }
    }

    /// Iterates over all `q` elements in increasing raw value.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size()).map(|v| FieldElement(v as u16))
    }

    /// The element `x`, a generator of the multiplicative group because the
    /// defining polynomial is primitive.
    pub fn generator(&self) -> FieldElement {
        FieldElement(2)
    }

    #[inline]
    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        x + y
    }

    #[inline]
    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        x - y
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.0 == 0 || y.0 == 0 {
            return FieldElement::ZERO;
        }
        let idx = self.log[x.0 as usize] as usize + self.log[y.0 as usize] as usize;
        FieldElement(self.exp[idx])
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.inv_nonzero(x))
    }

    /// Inverse of a value the caller already knows to be nonzero.
    #[inline]
    pub(crate) fn inv_nonzero(&self, x: FieldElement) -> FieldElement {
        debug_assert!(!x.is_zero());
        let l = self.log[x.0 as usize] as usize;
        FieldElement(self.exp[(self.order() - l) % self.order()])
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^e`, with `0^0 = 1`.
    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if x.is_zero() {
            return FieldElement::ZERO;
        }
        let l = self.log[x.0 as usize] as u64;
        let idx = (l * (e % self.order() as u64)) % self.order() as u64;
        FieldElement(self.exp[idx as usize])
    }

    /// `g^i` for the generator `g`.
    #[inline]
    pub fn exp(&self, i: usize) -> FieldElement {
        FieldElement(self.exp[i % self.order()])
    }

    /// Discrete log base the generator, `None` for zero.
    pub fn log(&self, x: FieldElement) -> Option<usize> {
        (!x.is_zero()).then(|| self.log[x.0 as usize] as usize)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, x: FieldElement) -> Option<usize> {
        let l = self.log(x)?;
        let q1 = self.order();
        Some(q1 / gcd(l, q1))
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
