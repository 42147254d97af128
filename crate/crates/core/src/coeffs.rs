//! Exact coefficient arithmetic for the ground ring and the weight.
//!
//! A [`Scalar`] lives in exactly one [`RingMode`]. Arithmetic between two
//! modes is an error: the `checked_*` methods report it, the operator impls
//! panic (they are used internally where every value comes from one handle).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("ring mode mismatch: {left} vs {right}")]
    ModeMismatch { left: RingMode, right: RingMode },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not divisible by {1} in the integers")]
    NotDivisible(String, String),
    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(u64, u64),
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// Which ring the coefficients live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingMode {
    Rational,
    Integer,
    Modular(u64),
}

impl RingMode {
    pub fn modular(modulus: u64) -> Result<Self, CoeffError> {
        if modulus < 2 {
            return Err(CoeffError::InvalidModulus(modulus));
        }
        Ok(RingMode::Modular(modulus))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            RingMode::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            RingMode::Integer => Scalar::Integer(n.clone()),
            RingMode::Modular(m) => Scalar::Modular {
                value: reduce_bigint(n, m),
                modulus: m,
            },
        }
    }

    /// Maps `num/den` into the ring; fails when `den` has no inverse there.
    pub fn from_fraction(self, num: &BigInt, den: &BigInt) -> Result<Scalar, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        self.from_bigint(num).checked_div(&self.from_bigint(den))
    }

    /// Parses a literal in this mode: `p`, `p/q`, or `r mod m` (the modulus
    /// must then match).
    pub fn parse_scalar(self, src: &str) -> Result<Scalar, CoeffError> {
        let s = src.trim();
        if let Some((r, m)) = s.split_once("mod") {
            let m: u64 = m.trim().parse().map_err(|_| CoeffError::Parse(src.into()))?;
            let value = RingMode::modular(m)?.from_bigint(&parse_int(r.trim(), src)?);
            return match self {
                RingMode::Modular(own) if own == m => Ok(value),
                _ => Err(CoeffError::ModeMismatch {
                    left: self,
                    right: RingMode::Modular(m),
                }),
            };
        }
        match s.split_once('/') {
            Some((p, q)) => self.from_fraction(&parse_int(p.trim(), src)?, &parse_int(q.trim(), src)?),
            None => Ok(self.from_bigint(&parse_int(s, src)?)),
        }
    }

    /// Exact binomial coefficient `C(n, k)` computed over the integers and
    /// mapped into the ring.
    pub fn binomial(self, n: u64, k: u64) -> Scalar {
        self.from_bigint(&binomial(n, k))
    }
}

impl fmt::Display for RingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingMode::Rational => write!(f, "q"),
            RingMode::Integer => write!(f, "z"),
            RingMode::Modular(m) => write!(f, "zmod:{m}"),
        }
    }
}

impl FromStr for RingMode {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "q" | "Q" => Ok(RingMode::Rational),
            "z" | "Z" => Ok(RingMode::Integer),
            other => {
                let m = other
                    .strip_prefix("zmod:")
                    .and_then(|m| m.parse::<u64>().ok())
                    .ok_or_else(|| CoeffError::Parse(s.into()))?;
                RingMode::modular(m)
            }
        }
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn parse_int(s: &str, whole: &str) -> Result<BigInt, CoeffError> {
    s.parse::<BigInt>().map_err(|_| CoeffError::Parse(whole.into()))
}

fn reduce_bigint(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits in u64")
}

/// An exact element of the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Always in lowest terms with a positive denominator.
    Rational(BigRational),
    Integer(BigInt),
    /// Always reduced into `[0, modulus)`.
    Modular {
        value: u64,
        modulus: u64,
    },
}

impl Scalar {
    pub fn mode(&self) -> RingMode {
        match self {
            Scalar::Rational(_) => RingMode::Rational,
            Scalar::Integer(_) => RingMode::Integer,
            Scalar::Modular { modulus, .. } => RingMode::Modular(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Integer(n) => n.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Integer(n) => n.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// True when the canonical rendering starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Integer(n) => n.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    fn same_mode(&self, other: &Scalar) -> Result<(), CoeffError> {
        if self.mode() == other.mode() {
            Ok(())
        } else {
            Err(CoeffError::ModeMismatch {
                left: self.mode(),
                right: other.mode(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        self.same_mode(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => Scalar::Modular {
                value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        self.same_mode(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => Scalar::Modular {
                value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    /// Exact quotient. Integers must divide exactly; residues need a unit
    /// divisor.
    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, CoeffError> {
        self.same_mode(other)?;
        if other.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a / b)),
            (Scalar::Integer(a), Scalar::Integer(b)) => {
                let (q, r) = a.div_rem(b);
                if r.is_zero() {
                    Ok(Scalar::Integer(q))
                } else {
                    Err(CoeffError::NotDivisible(a.to_string(), b.to_string()))
                }
            }
            (Scalar::Modular { .. }, Scalar::Modular { value: b, modulus }) => {
                let inv = mod_inverse(*b, *modulus).ok_or(CoeffError::NotInvertible(*b, *modulus))?;
                self.checked_mul(&Scalar::Modular {
                    value: inv,
                    modulus: *modulus,
                })
            }
            _ => unreachable!(),
        }
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Integer(a) => Scalar::Integer(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = self.mode().one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Equality of canonical forms; errors when the modes differ.
    pub fn checked_eq(&self, other: &Scalar) -> Result<bool, CoeffError> {
        self.same_mode(other)?;
        Ok(self == other)
    }

    /// Renders the scalar without the ` mod m` suffix, for use inside
    /// element text where the ring is implied by the handle.
    pub fn to_bare_string(&self) -> String {
        match self {
            Scalar::Modular { value, .. } => value.to_string(),
            other => other.to_string(),
        }
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let g = BigInt::from(a).extended_gcd(&BigInt::from(m));
    if !g.gcd.is_one() {
        return None;
    }
    Some(reduce_bigint(&g.x, m))
}

/// Free-function spellings of the checked operations.
pub fn scalar_add(a: &Scalar, b: &Scalar) -> Result<Scalar, CoeffError> {
    a.checked_add(b)
}

pub fn scalar_mul(a: &Scalar, b: &Scalar) -> Result<Scalar, CoeffError> {
    a.checked_mul(b)
}

pub fn scalar_eq(a: &Scalar, b: &Scalar) -> Result<bool, CoeffError> {
    a.checked_eq(b)
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar ring modes agree")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar ring modes agree")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar ring modes agree")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Integer(n) => write!(f, "{n}"),
            Scalar::Modular { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

/// Parses the rendering produced by `Display`: `r mod m` yields a residue,
/// anything else a rational.
impl FromStr for Scalar {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((_, m)) = s.split_once("mod") {
            let m: u64 = m.trim().parse().map_err(|_| CoeffError::Parse(s.into()))?;
            return RingMode::modular(m)?.parse_scalar(s);
        }
        RingMode::Rational.parse_scalar(s)
    }
}

/// The fixed weight λ shared by every weighted operation in a context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(Scalar);

impl Weight {
    pub fn new(lambda: Scalar) -> Self {
        Weight(lambda)
    }

    pub fn zero(mode: RingMode) -> Self {
        Weight(mode.zero())
    }

    pub fn lambda(&self) -> &Scalar {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
