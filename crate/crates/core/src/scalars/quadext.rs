use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalars::{Rational, Sign};

/// `a + b·√d` with rational `a`, `b` and a fixed squarefree `d ≥ 2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u32,
}

pub const DEFAULT_RADICAND: u32 = 2;

fn is_squarefree(d: u32) -> bool {
    let mut k = 2u32;
    while k.saturating_mul(k) <= d {
        if d.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: u32) -> Result<Self> {
        if d < 2 || !is_squarefree(d) {
            return Err(Error::domain(format!("radicand {d} is not a squarefree integer >= 2")));
        }
        Ok(QuadExt { a, b, d })
    }

    /// Element of `Q(√2)`.
    pub fn sqrt2(a: Rational, b: Rational) -> Self {
        QuadExt { a, b, d: DEFAULT_RADICAND }
    }

    pub fn from_rational(a: Rational, d: u32) -> Result<Self> {
        QuadExt::new(a, Rational::zero(), d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn same_field(&self, rhs: &QuadExt) -> Result<()> {
        if self.d != rhs.d {
            return Err(Error::domain(format!("mixed radicands sqrt({}) and sqrt({})", self.d, rhs.d)));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.same_field(rhs)?;
        Ok(QuadExt { a: &self.a + &rhs.a, b: &self.b + &rhs.b, d: self.d })
    }

    pub fn try_sub(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.same_field(rhs)?;
        Ok(QuadExt { a: &self.a - &rhs.a, b: &self.b - &rhs.b, d: self.d })
    }

    pub fn try_mul(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.same_field(rhs)?;
        let d = Rational::from(self.d as i64);
        let a = &self.a * &rhs.a + &d * &(&self.b * &rhs.b);
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(QuadExt { a, b, d: self.d })
    }

    pub fn try_div(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.same_field(rhs)?;
        self.try_mul(&rhs.try_inv()?)
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt { a: -&self.a, b: -&self.b, d: self.d }
    }

    pub fn conjugate(&self) -> QuadExt {
        QuadExt { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// `a² − d·b²`, the field norm.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &Rational::from(self.d as i64) * &(&self.b * &self.b)
    }

    pub fn try_inv(&self) -> Result<QuadExt> {
        if self.is_zero() {
            return Err(Error::domain("inverse of zero in quadratic extension"));
        }
        // norm is nonzero for nonzero elements since d is not a square
        let n = self.norm();
        let c = self.conjugate();
        Ok(QuadExt { a: c.a.checked_div(&n)?, b: c.b.checked_div(&n)?, d: self.d })
    }

    /// Exact sign by case analysis on the signs of `a`, `b` and `a²` vs `d·b²`.
    pub fn sign(&self) -> Sign {
        let sa = self.a.sign();
        let sb = self.b.sign();
        if sb == Sign::Zero {
            return sa;
        }
        if sa == Sign::Zero || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let db2 = &Rational::from(self.d as i64) * &(&self.b * &self.b);
        match a2.cmp(&db2) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => unreachable!("d is not a perfect square"),
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.sign() == Sign::Negative {
            write!(f, "{}-{}*sqrt({})", self.a, self.b.abs(), self.d)
        } else {
            write!(f, "{}+{}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl FromStr for QuadExt {
    type Err = Error;

    /// Parses the `a+b*sqrt(d)` form produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `a+b*sqrt(d)`, got `{s}`"));
        let t = s.trim().strip_suffix(')').ok_or_else(bad)?;
        let (lin, d) = t.split_once("*sqrt(").ok_or_else(bad)?;
        let d: u32 = d.trim().parse().map_err(|_| bad())?;
        let cut = lin
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back()
            .ok_or_else(bad)?;
        let a: Rational = lin[..cut].parse()?;
        let mut b: Rational = lin[cut + 1..].parse()?;
        if &lin[cut..cut + 1] == "-" {
            b = -b;
        }
        QuadExt::new(a, b, d)
    }
}

impl Serialize for QuadExt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QuadExt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn conjugate_product() {
        let x = QuadExt::sqrt2(r(1), r(1));
        let y = QuadExt::sqrt2(r(1), r(-1));
        assert_eq!(x.try_mul(&y).unwrap(), QuadExt::sqrt2(r(-1), r(0)));
    }

    #[test]
    fn exact_signs() {
        assert_eq!(QuadExt::sqrt2(r(2), r(-1)).sign(), Sign::Positive);
        assert_eq!(QuadExt::sqrt2(r(1), r(-1)).sign(), Sign::Negative);
        assert_eq!(QuadExt::sqrt2(r(-3), r(2)).sign(), Sign::Negative);
        assert_eq!(QuadExt::sqrt2(r(0), r(0)).sign(), Sign::Zero);
    }

    #[test]
    fn mixed_radicands_rejected() {
        let x = QuadExt::new(r(1), r(1), 2).unwrap();
        let y = QuadExt::new(r(1), r(1), 3).unwrap();
        assert!(matches!(x.try_add(&y), Err(Error::Domain(_))));
        assert!(matches!(x.try_mul(&y), Err(Error::Domain(_))));
        assert!(QuadExt::new(r(1), r(1), 4).is_err());
    }

    #[test]
    fn inverse_and_zero_division() {
        let x = QuadExt::sqrt2(r(3), r(-2));
        let one = QuadExt::sqrt2(r(1), r(0));
        assert_eq!(x.try_mul(&x.try_inv().unwrap()).unwrap(), one);
        assert!(one.try_div(&QuadExt::sqrt2(r(0), r(0))).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["1+1*sqrt(2)", "-3/2-1/2*sqrt(2)", "0+0*sqrt(5)"] {
            let x: QuadExt = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert!("1+sqrt(2)".parse::<QuadExt>().is_err());
    }
}
