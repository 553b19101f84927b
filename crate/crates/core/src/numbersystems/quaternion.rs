use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numbersystems::traits::{Scalar, SystemKind};
use crate::numbersystems::write_terms;
use crate::scalars::Rational;

/// `r0 + r1 e1 + r2 e2 + r3 e3` with `e1 e2 = e3` and cyclic permutations.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Quaternion {
    pub r: [Rational; 4],
}

impl Quaternion {
    pub fn new(r0: Rational, r1: Rational, r2: Rational, r3: Rational) -> Self {
        Quaternion { r: [r0, r1, r2, r3] }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Quaternion { r: c.map(Rational::from) }
    }

    pub fn scalar(c: Rational) -> Self {
        Quaternion::new(c, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Quaternion::default()
    }

    pub fn one() -> Self {
        Quaternion::scalar(Rational::one())
    }

    /// The unit `e_i`, `i` in `0..4`.
    pub fn unit(i: usize) -> Self {
        assert!(i < 4, "quaternion unit index {i} out of range");
        let mut q = Quaternion::zero();
        q.r[i] = Rational::one();
        q
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().all(Rational::is_zero)
    }

    pub fn add(&self, o: &Quaternion) -> Quaternion {
        Quaternion { r: std::array::from_fn(|i| &self.r[i] + &o.r[i]) }
    }

    pub fn sub(&self, o: &Quaternion) -> Quaternion {
        Quaternion { r: std::array::from_fn(|i| &self.r[i] - &o.r[i]) }
    }

    pub fn neg(&self) -> Quaternion {
        Quaternion { r: std::array::from_fn(|i| -&self.r[i]) }
    }

    pub fn scale(&self, c: &Rational) -> Quaternion {
        Quaternion { r: std::array::from_fn(|i| c * &self.r[i]) }
    }

    pub fn mul(&self, o: &Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = &self.r;
        let [b0, b1, b2, b3] = &o.r;
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }

    pub fn conj(&self) -> Quaternion {
        let [a0, a1, a2, a3] = &self.r;
        Quaternion::new(a0.clone(), -a1, -a2, -a3)
    }

    /// Sum of squared coefficients.
    pub fn norm(&self) -> Rational {
        self.r.iter().fold(Rational::zero(), |acc, c| acc + c * c)
    }

    pub fn inv(&self) -> Result<Quaternion> {
        if self.is_zero() {
            return Err(Error::domain("inverse of zero quaternion"));
        }
        Ok(self.conj().scale(&self.norm().recip()?))
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["", "e1", "e2", "e3"];
        write_terms(f, " ", self.r.iter().zip(NAMES).map(|(c, n)| (c.clone(), n.to_string())))
    }
}

impl Serialize for Quaternion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Scalar for Quaternion {
    const KIND: SystemKind = SystemKind::Quaternion;

    fn from_rational(r: &Rational) -> Self {
        Quaternion::scalar(r.clone())
    }
    fn add(&self, rhs: &Self) -> Self {
        Quaternion::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Quaternion::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Quaternion::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Quaternion::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        Quaternion::inv(self)
    }
    fn is_zero(&self) -> bool {
        Quaternion::is_zero(self)
    }
    fn same(&self, rhs: &Self) -> bool {
        self == rhs
    }
    fn scale(&self, r: &Rational) -> Self {
        Quaternion::scale(self, r)
    }
}
