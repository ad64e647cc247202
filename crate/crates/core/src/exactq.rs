//! Exact quaternion scalars over arbitrary-precision rationals.
//!
//! A [`Quaternion`] is `w + x i + y j + z k` with every component a
//! [`Rational`] kept in lowest terms. Multiplication is the Hamilton product,
//! so `p * q` and `q * p` differ in general; every routine in this crate
//! preserves factor order.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always normalized (lowest terms, positive denominator).
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or `"p"` into a rational. Whitespace around the parts is not allowed.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::parse(format!("rational {s:?}"), msg);
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num = BigInt::from_str(num).map_err(|_| bad("invalid numerator"))?;
    let den = match den {
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return Err(bad("signed denominator"));
            }
            BigInt::from_str(d).map_err(|_| bad("invalid denominator"))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text of a rational: `"p"` when integral, else `"p/q"` in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Builds a quaternion from integer components.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        let r = |v: i64| Rational::from_integer(BigInt::from(v));
        Quaternion::new(r(w), r(x), r(y), r(z))
    }

    pub fn real(w: Rational) -> Self {
        Quaternion::new(w, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn from_int(w: i64) -> Self {
        Quaternion::from_ints(w, 0, 0, 0)
    }

    /// `re + im i`, an element of the complex subfield.
    pub fn complex(re: Rational, im: Rational) -> Self {
        Quaternion::new(re, im, Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Quaternion::default()
    }

    pub fn one() -> Self {
        Quaternion::from_int(1)
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.w.is_one() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// True when the i, j, k parts vanish.
    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// True when the j, k parts vanish.
    pub fn is_complex(&self) -> bool {
        self.y.is_zero() && self.z.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `w² + x² + y² + z²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    /// Two-sided inverse `conj(q) / norm²(q)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Quaternion::new(
            &self.w / &n,
            -&self.x / &n,
            -&self.y / &n,
            -&self.z / &n,
        ))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Quaternion::new(&self.w * r, &self.x * r, &self.y * r, &self.z * r)
    }

    /// Divides every component by a nonzero rational.
    pub fn div_real(&self, r: &Rational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Quaternion::new(
            &self.w / r,
            &self.x / r,
            &self.y / r,
            &self.z / r,
        ))
    }

    /// The four canonical component strings `[w, x, y, z]`.
    pub fn to_strings(&self) -> [String; 4] {
        [
            format_rational(&self.w),
            format_rational(&self.x),
            format_rational(&self.y),
            format_rational(&self.z),
        ]
    }

    pub fn from_strs<S: AsRef<str>>(parts: &[S]) -> Result<Self> {
        if parts.len() != 4 {
            return Err(Error::parse(
                "quaternion",
                format!("expected 4 components, got {}", parts.len()),
            ));
        }
        Ok(Quaternion::new(
            parse_rational(parts[0].as_ref())?,
            parse_rational(parts[1].as_ref())?,
            parse_rational(parts[2].as_ref())?,
            parse_rational(parts[3].as_ref())?,
        ))
    }
}

fn hamilton(p: &Quaternion, q: &Quaternion) -> Quaternion {
    if p.is_zero() || q.is_zero() {
        return Quaternion::zero();
    }
    let (a1, b1, c1, d1) = (&p.w, &p.x, &p.y, &p.z);
    let (a2, b2, c2, d2) = (&q.w, &q.x, &q.y, &q.z);
    Quaternion::new(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )
}

impl Mul<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        hamilton(self, rhs)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        hamilton(&self, &rhs)
    }
}

impl Mul<&Quaternion> for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        hamilton(&self, rhs)
    }
}

impl Add<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &rhs.w,
            &self.x + &rhs.x,
            &self.y + &rhs.y,
            &self.z + &rhs.z,
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(mut self, rhs: Quaternion) -> Quaternion {
        self += &rhs;
        self
    }
}

impl AddAssign<&Quaternion> for Quaternion {
    fn add_assign(&mut self, rhs: &Quaternion) {
        self.w += &rhs.w;
        self.x += &rhs.x;
        self.y += &rhs.y;
        self.z += &rhs.z;
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, rhs: Quaternion) {
        *self += &rhs;
    }
}

impl Sub<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &rhs.w,
            &self.x - &rhs.x,
            &self.y - &rhs.y,
            &self.z - &rhs.z,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(mut self, rhs: Quaternion) -> Quaternion {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Quaternion> for Quaternion {
    fn sub_assign(&mut self, rhs: &Quaternion) {
        self.w -= &rhs.w;
        self.x -= &rhs.x;
        self.y -= &rhs.y;
        self.z -= &rhs.z;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -(self.clone())
    }
}

impl std::iter::Sum for Quaternion {
    fn sum<I: Iterator<Item = Quaternion>>(iter: I) -> Self {
        iter.fold(Quaternion::zero(), |acc, q| acc + q)
    }
}

impl From<i64> for Quaternion {
    fn from(v: i64) -> Self {
        Quaternion::from_int(v)
    }
}

impl From<Rational> for Quaternion {
    fn from(r: Rational) -> Self {
        Quaternion::real(r)
    }
}

// Human-readable form, e.g. `-1/2i+1/2k` or `0`.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (c, unit) in [(&self.w, ""), (&self.x, "i"), (&self.y, "j"), (&self.z, "k")] {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if !(mag.is_one() && !unit.is_empty()) {
                out.push_str(&format_rational(&mag));
            }
            out.push_str(unit);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quaternion({self})")
    }
}

impl Serialize for Quaternion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(4)?;
        for s in self.to_strings() {
            t.serialize_element(&s)?;
        }
        t.end()
    }
}

impl<'de> Deserialize<'de> for Quaternion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct QVisitor;

        impl<'de> Visitor<'de> for QVisitor {
            type Value = Quaternion;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of four rational strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Quaternion, A::Error> {
                let mut parts: Vec<String> = Vec::with_capacity(4);
                while let Some(s) = seq.next_element::<String>()? {
                    parts.push(s);
                }
                Quaternion::from_strs(&parts).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_seq(QVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
        Quaternion::from_ints(w, x, y, z)
    }

    #[test]
    fn basis_products() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let minus_one = q(-1, 0, 0, 0);
        assert_eq!(&i * &i, minus_one);
        assert_eq!(&j * &j, minus_one);
        assert_eq!(&k * &k, minus_one);
        assert_eq!(&(&i * &j) * &k, minus_one);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&q(0, 2, 0, 0) * &q(0, -2, 0, 0), q(4, 0, 0, 0));
        assert_eq!(&q(1, 1, 0, 0) * &q(1, 0, 1, 0), q(1, 1, 1, 1));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(Quaternion::k().conj(), q(0, 0, 0, -1));
        assert_eq!(q(1, 1, 1, 1).conj(), q(1, -1, -1, -1));
        assert_eq!(Quaternion::zero().conj(), Quaternion::zero());
    }

    #[test]
    fn inv_examples() {
        assert_eq!(Quaternion::i().inv().unwrap(), q(0, -1, 0, 0));
        let half = Rational::new(1.into(), 2.into());
        let expected = Quaternion::new(half.clone(), -half, Rational::zero(), Rational::zero());
        assert_eq!(q(1, 1, 0, 0).inv().unwrap(), expected);
        assert_eq!(Quaternion::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("-2/4").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(format_rational(&parse_rational("6/3").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("-3/6").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn display() {
        let half = Rational::new(1.into(), 2.into());
        let v = Quaternion::new(Rational::zero(), -half.clone(), Rational::zero(), half);
        assert_eq!(v.to_string(), "-1/2i+1/2k");
        assert_eq!(q(1, -1, 0, 0).to_string(), "1-i");
        assert_eq!(Quaternion::zero().to_string(), "0");
    }

    #[test]
    fn serde_encoding() {
        let v: Quaternion = serde_json::from_str(r#"["0","1/2","0","-1"]"#).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["0","1/2","0","-1"]"#);
        assert!(serde_json::from_str::<Quaternion>(r#"["0","1"]"#).is_err());
    }
}
