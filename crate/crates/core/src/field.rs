//! Exact coefficient fields: the rationals and prime fields `F_p` with `p < 2^31`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ArithError;

pub const DEFAULT_PRIME: u32 = 32003;

/// Coefficient field tag, fixed per ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(DEFAULT_PRIME)
    }
}

impl Field {
    /// Prime field, rejecting composite or out-of-range moduli.
    pub fn prime(p: u64) -> Result<Self, ArithError> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn zero(self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldElement::Modular {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let r = ((n % &m) + &m) % &m;
                FieldElement::Modular {
                    value: r.to_u32().expect("residue fits in u32"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den` in this field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<FieldElement, ArithError> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        self.from_bigint(num).try_div(&d)
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "Fp({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `QQ` (reduced, positive denominator) or of `F_p` (residue in `[0, p)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Modular { value, .. } => *value == 1,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => Ok(FieldElement::Rational(a + b)),
            (
                FieldElement::Modular { value: a, modulus: p },
                FieldElement::Modular { value: b, modulus: q },
            ) if p == q => Ok(FieldElement::Modular {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                modulus: *p,
            }),
            _ => Err(ArithError::FieldMismatch),
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => Ok(FieldElement::Rational(a * b)),
            (
                FieldElement::Modular { value: a, modulus: p },
                FieldElement::Modular { value: b, modulus: q },
            ) if p == q => Ok(FieldElement::Modular {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                modulus: *p,
            }),
            _ => Err(ArithError::FieldMismatch),
        }
    }

    pub fn try_inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::Modular { value, modulus } => FieldElement::Modular {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_mul(&other.try_inv()?)
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(-q),
            FieldElement::Modular { value, modulus } => FieldElement::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    // Infallible forms for code paths where the ring already guarantees a common field.

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("coefficients from one field")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("coefficients from one field")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("coefficients from one field")
    }

    pub fn inv(&self) -> Self {
        self.try_inv().expect("nonzero coefficient")
    }

    pub fn div(&self, other: &Self) -> Self {
        self.try_div(other).expect("nonzero divisor from one field")
    }

    /// Whether the printed form starts with a minus sign.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_negative(),
            FieldElement::Modular { .. } => false,
        }
    }

    /// Integer value if the element is an integer in `QQ`, or the residue in `F_p`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            FieldElement::Rational(q) if q.is_integer() => q.numer().to_i64(),
            FieldElement::Rational(_) => None,
            FieldElement::Modular { value, .. } => Some(*value as i64),
        }
    }
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u32
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElement::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElement {
        Field::Rational
            .from_ratio(&BigInt::from(n), &BigInt::from(d))
            .unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q(1, 3).try_add(&q(1, 6)).unwrap(), q(1, 2));
    }

    #[test]
    fn rationals_are_normalized() {
        assert_eq!(q(2, -4), q(-1, 2));
        assert_eq!(q(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn prime_field_product() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(3).try_mul(&f.from_i64(5)).unwrap(), f.from_i64(1));
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Field::Rational.zero().try_inv(), Err(ArithError::DivisionByZero));
        assert_eq!(Field::Prime(7).zero().try_inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn mixed_fields_fail() {
        let a = Field::Rational.one();
        let b = Field::Prime(7).one();
        assert_eq!(a.try_add(&b), Err(ArithError::FieldMismatch));
        let c = Field::Prime(11).one();
        assert_eq!(b.try_mul(&c), Err(ArithError::FieldMismatch));
    }

    #[test]
    fn prime_inverses() {
        let f = Field::Prime(DEFAULT_PRIME);
        for a in [1i64, 2, 3, 31999, 32002] {
            let x = f.from_i64(a);
            assert!(x.mul(&x.inv()).is_one());
        }
        assert_eq!(f.from_i64(-1).to_i64(), Some(32002));
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(Field::prime(32004).is_err());
        assert!(Field::prime(1 << 31).is_err());
        assert!(Field::prime(2).is_ok());
    }
}
