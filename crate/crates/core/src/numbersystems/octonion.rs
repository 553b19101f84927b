use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numbersystems::quaternion::Quaternion;
use crate::numbersystems::traits::{Scalar, SystemKind};
use crate::numbersystems::write_terms;
use crate::scalars::Rational;

/// Octonion as a pair of quaternions `q + Q e`.
///
/// The eight real coordinates are ordered `e0..e3` from `q` and
/// `e4 = e, e5 = e1 e, e6 = e2 e, e7 = e3 e` from `Q`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Octonion {
    pub q: Quaternion,
    pub big_q: Quaternion,
}

impl Octonion {
    pub fn new(q: Quaternion, big_q: Quaternion) -> Self {
        Octonion { q, big_q }
    }

    pub fn from_coeffs(c: [Rational; 8]) -> Self {
        let [a0, a1, a2, a3, a4, a5, a6, a7] = c;
        Octonion::new(Quaternion::new(a0, a1, a2, a3), Quaternion::new(a4, a5, a6, a7))
    }

    pub fn from_ints(c: [i64; 8]) -> Self {
        Octonion::from_coeffs(c.map(Rational::from))
    }

    pub fn coeffs(&self) -> [Rational; 8] {
        std::array::from_fn(|i| if i < 4 { self.q.r[i].clone() } else { self.big_q.r[i - 4].clone() })
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        if i < 4 {
            &self.q.r[i]
        } else {
            &self.big_q.r[i - 4]
        }
    }

    pub fn scalar(c: Rational) -> Self {
        Octonion::new(Quaternion::scalar(c), Quaternion::zero())
    }

    pub fn zero() -> Self {
        Octonion::default()
    }

    pub fn one() -> Self {
        Octonion::scalar(Rational::one())
    }

    /// The unit `e_i`, `i` in `0..8`.
    pub fn unit(i: usize) -> Self {
        assert!(i < 8, "octonion unit index {i} out of range");
        let mut c: [i64; 8] = [0; 8];
        c[i] = 1;
        Octonion::from_ints(c)
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero() && self.big_q.is_zero()
    }

    pub fn add(&self, o: &Octonion) -> Octonion {
        Octonion::new(self.q.add(&o.q), self.big_q.add(&o.big_q))
    }

    pub fn sub(&self, o: &Octonion) -> Octonion {
        Octonion::new(self.q.sub(&o.q), self.big_q.sub(&o.big_q))
    }

    pub fn neg(&self) -> Octonion {
        Octonion::new(self.q.neg(), self.big_q.neg())
    }

    pub fn scale(&self, c: &Rational) -> Octonion {
        Octonion::new(self.q.scale(c), self.big_q.scale(c))
    }

    /// `(q + Q e)(r + R e) = (q r − R̄ Q) + (R q + Q r̄) e`.
    pub fn mul(&self, o: &Octonion) -> Octonion {
        let (q, bq) = (&self.q, &self.big_q);
        let (r, br) = (&o.q, &o.big_q);
        Octonion::new(q.mul(r).sub(&br.conj().mul(bq)), br.mul(q).add(&bq.mul(&r.conj())))
    }

    pub fn conj(&self) -> Octonion {
        Octonion::new(self.q.conj(), self.big_q.neg())
    }

    /// `N(q) + N(Q)`, the sum of the eight squared coefficients.
    pub fn norm(&self) -> Rational {
        self.q.norm() + self.big_q.norm()
    }

    pub fn inv(&self) -> Result<Octonion> {
        if self.is_zero() {
            return Err(Error::domain("inverse of zero octonion"));
        }
        Ok(self.conj().scale(&self.norm().recip()?))
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, if i == 0 { String::new() } else { format!("e{i}") }));
        write_terms(f, " ", terms)
    }
}

impl Serialize for Octonion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Scalar for Octonion {
    const KIND: SystemKind = SystemKind::Octonion;

    fn from_rational(r: &Rational) -> Self {
        Octonion::scalar(r.clone())
    }
    fn add(&self, rhs: &Self) -> Self {
        Octonion::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Octonion::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Octonion::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Octonion::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        Octonion::inv(self)
    }
    fn is_zero(&self) -> bool {
        Octonion::is_zero(self)
    }
    fn same(&self, rhs: &Self) -> bool {
        self == rhs
    }
    fn scale(&self, r: &Rational) -> Self {
        Octonion::scale(self, r)
    }
}

/// The 8×8 multiplication table of the units as printed in the classical
/// presentation: entry `[i][j]` is `(sign, k)` with `e_i e_j = sign · e_k`.
pub const UNIT_TABLE: [[(i8, usize); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Octonion {
        Octonion::unit(i)
    }

    #[test]
    fn dickson_matches_unit_table() {
        for (i, row) in UNIT_TABLE.iter().enumerate() {
            for (j, &(sign, k)) in row.iter().enumerate() {
                let want = if sign > 0 { e(k) } else { e(k).neg() };
                assert_eq!(e(i).mul(&e(j)), want, "e{i} e{j}");
            }
        }
    }

    #[test]
    fn non_associative_triple() {
        assert_eq!(e(1).mul(&e(2)).mul(&e(4)), e(7));
        assert_eq!(e(1).mul(&e(2).mul(&e(4))), e(7).neg());
    }

    #[test]
    fn conjugate_gives_norm() {
        let a = Octonion::from_ints([1, -2, 0, 3, 1, 0, -1, 2]);
        assert_eq!(a.mul(&a.conj()), Octonion::scalar(a.norm()));
        assert_eq!(a.mul(&a.inv().unwrap()), Octonion::one());
    }

    #[test]
    fn text_form() {
        assert_eq!(e(7).scale(&Rational::from(2)).to_string(), "2 e7");
        assert_eq!(Octonion::from_ints([-1, 0, 0, 0, 0, 1, 0, 0]).to_string(), "-1 + 1 e5");
    }
}
