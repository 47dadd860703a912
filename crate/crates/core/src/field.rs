//! Exact arithmetic in the real multiquadratic field Q(√2, √3, √5).
//!
//! Elements are stored as eight rational coordinates. Internally the basis
//! element `√m` is indexed by a bitmask over the primes `[2, 3, 5]`, so that
//! `√a · √b = √(a ∧ b)² · √(a ⊕ b)` becomes a mask operation. The public
//! (serialized) order is `{1, √2, √3, √5, √6, √10, √15, √30}`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

const PRIMES: [i64; 3] = [2, 3, 5];

/// Mask index of each entry in the public basis order.
const PUBLIC_TO_MASK: [usize; 8] = [0, 1, 2, 4, 3, 5, 6, 7];

/// Squarefree radicands in mask order.
const RADICANDS: [i64; 8] = [1, 2, 3, 6, 5, 10, 15, 30];

pub type Rational = BigRational;

/// An exact element of Q(√2, √3, √5).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    coords: [Rational; 8],
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn mul_level(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = x.len();
    let mut out = vec![Rational::zero(); n];
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (b, yb) in y.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            let common = a & b;
            let mut factor = 1i64;
            for (bit, p) in PRIMES.iter().enumerate() {
                if common & (1 << bit) != 0 {
                    factor *= p;
                }
            }
            out[a ^ b] += xa * yb * rat(factor);
        }
    }
    out
}

/// Sign of `Σ c_m √m` where the slice spans the first `log2(len)` primes.
///
/// Splits off the top radicand: `a + b√p` has the sign of `a` and `b` when
/// they agree, and otherwise the sign of `a` times the sign of `a² − p b²`.
fn sign_level(c: &[Rational]) -> Ordering {
    if c.len() == 1 {
        return c[0].cmp(&Rational::zero());
    }
    let half = c.len() / 2;
    let level = half.trailing_zeros() as usize;
    let (a, b) = c.split_at(half);
    let sa = sign_level(a);
    let sb = sign_level(b);
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    let p = rat(PRIMES[level]);
    let a2 = mul_level(a, a);
    let b2 = mul_level(b, b);
    let diff: Vec<Rational> = a2.iter().zip(&b2).map(|(u, v)| u - &p * v).collect();
    let sd = sign_level(&diff);
    match sa {
        Ordering::Greater => sd,
        _ => sd.reverse(),
    }
}

impl FieldScalar {
    pub fn zero() -> Self {
        Self {
            coords: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut s = Self::zero();
        s.coords[0] = r;
        s
    }

    /// `√m` for a squarefree radicand `m` dividing 30.
    pub fn sqrt_of(m: i64) -> Result<Self, Error> {
        let idx = RADICANDS
            .iter()
            .position(|&r| r == m)
            .ok_or_else(|| Error::Parse(format!("√{m} is not a basis radical of Q(√2,√3,√5)")))?;
        let mut s = Self::zero();
        s.coords[idx] = Rational::one();
        Ok(s)
    }

    /// Builds an element from coordinates in the public basis order
    /// `{1, √2, √3, √5, √6, √10, √15, √30}`.
    pub fn from_public_coords(coords: [Rational; 8]) -> Self {
        let mut s = Self::zero();
        for (public, value) in coords.into_iter().enumerate() {
            s.coords[PUBLIC_TO_MASK[public]] = value;
        }
        s
    }

    pub fn public_coords(&self) -> [Rational; 8] {
        std::array::from_fn(|public| self.coords[PUBLIC_TO_MASK[public]].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coords[0])
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn signum(&self) -> Ordering {
        sign_level(&self.coords)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.coords
            .iter()
            .zip(RADICANDS)
            .map(|(c, m)| c.to_f64().unwrap_or(f64::NAN) * (m as f64).sqrt())
            .sum()
    }

    /// Image under the Galois automorphism flipping the signs of the radicals
    /// selected by `mask`.
    fn conjugate(&self, mask: usize) -> Self {
        let mut out = self.clone();
        for (m, c) in out.coords.iter_mut().enumerate() {
            if (m & mask).count_ones() % 2 == 1 {
                *c = -c.clone();
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut cofactor = Self::one();
        for mask in 1..8 {
            cofactor = &cofactor * &self.conjugate(mask);
        }
        let norm = self * &cofactor;
        let n = norm
            .as_rational()
            .cloned()
            .expect("field norm is rational");
        Ok(cofactor.scale(&n.recip()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            coords: std::array::from_fn(|m| &self.coords[m] * r),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Square root of a non-negative rational element, when it lies in the field.
    pub fn sqrt(&self) -> Option<Self> {
        let q = self.as_rational()?;
        if q.is_negative() {
            return None;
        }
        if q.is_zero() {
            return Some(Self::zero());
        }
        for (idx, &m) in RADICANDS.iter().enumerate() {
            let scaled = q / rat(m);
            if let (Some(n), Some(d)) = (int_sqrt(scaled.numer()), int_sqrt(scaled.denom())) {
                let mut s = Self::zero();
                s.coords[idx] = Rational::new(n, d);
                return Some(s);
            }
        }
        None
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if let Some(r) = self.as_rational() {
            return r.floor().to_integer();
        }
        let approx = self.to_f64().floor();
        let mut n = BigInt::from(approx as i64);
        while FieldScalar::from_rational(Rational::from_integer(n.clone())) > *self {
            n -= 1;
        }
        while FieldScalar::from_rational(Rational::from_integer(&n + 1)) <= *self {
            n += 1;
        }
        n
    }

    /// Nearest integer, ties rounded down.
    pub fn round(&self) -> BigInt {
        (self + &Self::from_ratio(1, 2)).floor()
    }
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Default for FieldScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialOrd for FieldScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl From<i64> for FieldScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for FieldScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &FieldScalar) -> FieldScalar {
        FieldScalar {
            coords: std::array::from_fn(|m| &self.coords[m] + &rhs.coords[m]),
        }
    }
}

impl<'a> Sub<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        FieldScalar {
            coords: std::array::from_fn(|m| &self.coords[m] - &rhs.coords[m]),
        }
    }
}

impl<'a> Mul<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &FieldScalar) -> FieldScalar {
        let v = mul_level(&self.coords, &rhs.coords);
        FieldScalar {
            coords: v.try_into().expect("eight coordinates"),
        }
    }
}

impl<'a> Div<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    /// Panics on division by zero; use [`FieldScalar::inverse`] to handle it.
    fn div(self, rhs: &FieldScalar) -> FieldScalar {
        self * &rhs.inverse().expect("division by zero in FieldScalar")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: FieldScalar) -> FieldScalar { (&self).$method(&rhs) }
        }
        impl<'a> $tr<&'a FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: &FieldScalar) -> FieldScalar { (&self).$method(rhs) }
        }
        impl<'a> $tr<FieldScalar> for &'a FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: FieldScalar) -> FieldScalar { self.$method(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: &FieldScalar) {
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a += b;
        }
    }
}

impl SubAssign<&FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, rhs: &FieldScalar) {
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a -= b;
        }
    }
}

impl MulAssign<&FieldScalar> for FieldScalar {
    fn mul_assign(&mut self, rhs: &FieldScalar) {
        *self = &*self * rhs;
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar {
            coords: self.coords.map(|c| -c),
        }
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -self.clone()
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for public in 0..8 {
            let m = PUBLIC_TO_MASK[public];
            let c = &self.coords[m];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            if m == 0 {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "√{}", RADICANDS[m])?;
            } else {
                write!(f, "{}√{}", format_rational(&a), RADICANDS[m])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldScalar({self})")
    }
}

impl FromStr for FieldScalar {
    type Err = Error;

    /// Accepts a rational literal such as `"-3/4"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_rational(s).map(Self::from_rational)
    }
}

impl Serialize for FieldScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if let Some(q) = self.as_rational() {
            return format_rational(q).serialize(serializer);
        }
        let coords: Vec<String> = self.public_coords().iter().map(format_rational).collect();
        coords.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FieldScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
            Coords(Vec<String>),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(n) => Ok(Self::from_int(n)),
            Repr::Text(s) => s.parse().map_err(D::Error::custom),
            Repr::Coords(v) => {
                if v.len() != 8 {
                    return Err(D::Error::custom("expected 8 rational coordinates"));
                }
                let mut coords: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
                for (slot, s) in coords.iter_mut().zip(&v) {
                    *slot = parse_rational(s).map_err(D::Error::custom)?;
                }
                Ok(Self::from_public_coords(coords))
            }
        }
    }
}

/// Greatest common divisor of a list of integers; zero for an all-zero list.
pub fn gcd_all(values: &[BigInt]) -> BigInt {
    values
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v))
}
