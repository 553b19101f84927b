use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numbersystems::series::Series;
use crate::numbersystems::traits::{Scalar, SystemKind};
use crate::numbersystems::{write_terms, DEFAULT_TERMS};
use crate::scalars::{Rational, Sign};

/// Formal Laurent series `Σ α_i t^i` over the rationals, ordered by the
/// sign of the lowest nonzero coefficient (so `0 < t ≪ 1`).
///
/// Coefficients at exponents `≥ trunc_order()` are unknown when the series
/// is truncated; exact series (polynomials in `t`, `t⁻¹`) carry no bound.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries {
    series: Series<Rational>,
}

impl LaurentSeries {
    /// `Σ_j coeffs[j] t^{start_exp + j} + O(t^trunc)`.
    pub fn new(start_exp: i64, coeffs: Vec<Rational>, trunc: Option<i64>) -> Result<Self> {
        if trunc.is_some_and(|t| t <= start_exp) {
            return Err(Error::domain("truncation order must exceed the start exponent"));
        }
        let terms = coeffs.into_iter().enumerate().map(|(j, c)| (start_exp + j as i64, c));
        Ok(LaurentSeries { series: Series::new(terms, trunc, DEFAULT_TERMS) })
    }

    pub fn exact(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        LaurentSeries { series: Series::new(terms, None, DEFAULT_TERMS) }
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        LaurentSeries { series: Series::monomial(c, e, DEFAULT_TERMS) }
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        LaurentSeries::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        LaurentSeries::monomial(c, 0)
    }

    pub fn series(&self) -> &Series<Rational> {
        &self.series
    }

    /// Sets how many terms an inverse computes.
    pub fn with_window(self, window: usize) -> Self {
        LaurentSeries { series: self.series.with_window(window) }
    }

    pub fn window(&self) -> usize {
        self.series.window()
    }

    pub fn trunc_order(&self) -> Option<i64> {
        self.series.trunc()
    }

    /// Exponent of the lowest stored term.
    pub fn start_exp(&self) -> Option<i64> {
        self.series.terms().keys().next().copied()
    }

    /// Coefficient of `t^e`; errors when `e` lies beyond the truncation.
    pub fn coeff(&self, e: i64) -> Result<Rational> {
        if self.series.trunc().is_some_and(|t| e >= t) {
            return Err(Error::precision(format!("coefficient of t^{e} is beyond the truncation")));
        }
        Ok(self.series.coeff(e).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.series.terms().iter().map(|(e, c)| (*e, c))
    }

    pub fn is_exact(&self) -> bool {
        self.series.trunc().is_none()
    }

    /// Substitutes `2^i·t` for `t`.
    pub(crate) fn dilate2(&self, i: i64) -> Self {
        let terms = self.terms().map(|(e, c)| (e, c * &Rational::pow2(i * e))).collect::<Vec<_>>();
        LaurentSeries { series: Series::new(terms, self.series.trunc(), self.window()) }
    }

    /// Writes the series with `var` as the indeterminate.
    pub(crate) fn write_in(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        let terms = self.terms().map(|(e, c)| (c.clone(), format!("{var}^{e}")));
        write_terms(f, " * ", terms)?;
        if let Some(t) = self.series.trunc() {
            write!(f, " + O({var}^{t})")?;
        }
        Ok(())
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_in(f, "t")
    }
}

impl Serialize for LaurentSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Scalar for LaurentSeries {
    const KIND: SystemKind = SystemKind::Laurent;

    fn from_rational(r: &Rational) -> Self {
        LaurentSeries::constant(r.clone())
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        LaurentSeries { series: Series::monomial(r.clone(), 0, self.window()) }
    }
    fn add(&self, rhs: &Self) -> Self {
        LaurentSeries { series: self.series.add(&rhs.series) }
    }
    fn sub(&self, rhs: &Self) -> Self {
        LaurentSeries { series: self.series.sub(&rhs.series) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        LaurentSeries { series: self.series.mul(&rhs.series) }
    }
    fn neg(&self) -> Self {
        LaurentSeries { series: self.series.neg() }
    }
    fn inv(&self) -> Result<Self> {
        Ok(LaurentSeries { series: self.series.inv()? })
    }
    fn is_zero(&self) -> bool {
        self.series.is_zero()
    }
    fn is_indeterminate(&self) -> bool {
        self.series.is_zero() && self.series.trunc().is_some()
    }
    fn sign(&self) -> Result<Sign> {
        self.series.sign()
    }
    fn scale(&self, r: &Rational) -> Self {
        let terms = self.terms().map(|(e, c)| (e, r * c)).collect::<Vec<_>>();
        LaurentSeries { series: Series::new(terms, self.series.trunc(), self.window()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn geometric_series_inverse() {
        let x = LaurentSeries::exact([(0, q(1)), (1, q(-1))]);
        let inv = x.inv().unwrap();
        assert_eq!(inv.trunc_order(), Some(DEFAULT_TERMS as i64));
        for e in 0..DEFAULT_TERMS as i64 {
            assert_eq!(inv.coeff(e).unwrap(), q(1));
        }
        assert!(inv.coeff(DEFAULT_TERMS as i64).is_err());
        assert!(x.mul(&inv).same(&x.one_like()));
    }

    #[test]
    fn infinitesimal_ordering() {
        let big = LaurentSeries::exact([(0, q(1)), (1, q(-1_000_000))]);
        assert_eq!(big.sign().unwrap(), Sign::Positive);
        assert_eq!(LaurentSeries::t().neg().sign().unwrap(), Sign::Negative);
    }

    #[test]
    fn monomial_inverse_is_exact() {
        let x = LaurentSeries::monomial(q(4), -3);
        let inv = x.inv().unwrap();
        assert!(inv.is_exact());
        assert_eq!(inv, LaurentSeries::monomial(Rational::new(1, 4).unwrap(), 3));
    }

    #[test]
    fn truncation_propagates() {
        let x = LaurentSeries::new(0, vec![q(1), q(2)], Some(3)).unwrap();
        let y = LaurentSeries::new(-1, vec![q(1)], Some(4)).unwrap();
        assert_eq!(x.mul(&y).trunc_order(), Some(2));
        assert_eq!(x.add(&y).trunc_order(), Some(3));
        let unknown = x.sub(&x);
        assert!(unknown.is_zero());
        assert!(matches!(unknown.sign(), Err(Error::Precision(_))));
        assert!(matches!(unknown.inv(), Err(Error::Precision(_))));
        assert!(LaurentSeries::new(2, vec![], Some(2)).is_err());
    }

    #[test]
    fn text_form() {
        let x = LaurentSeries::new(-1, vec![q(2), q(0), q(-3)], Some(4)).unwrap();
        assert_eq!(x.to_string(), "2 * t^-1 - 3 * t^1 + O(t^4)");
    }
}
