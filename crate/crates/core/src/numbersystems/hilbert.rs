use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numbersystems::laurent::LaurentSeries;
use crate::numbersystems::series::Series;
use crate::numbersystems::srow::SRow;
use crate::numbersystems::traits::{Scalar, SystemKind};
use crate::numbersystems::DEFAULT_TERMS;
use crate::scalars::{Rational, Sign};

/// Element of Hilbert's ordered skew field: `Σ_i P_i(s) t^i` subject to
/// `t s = 2 s t`.
///
/// The `t`-series is truncated. Each coefficient `P_i` is a rational
/// function of `s`, read as its Laurent expansion at `s = 0`; it is kept
/// exactly while its degree is small and otherwise expanded to `s_window`
/// terms. A row whose known terms all vanish hides everything after it,
/// so the `t`-truncation moves down to that row.
///
/// Ordering compares the coefficient of the smallest power of `t`, then of
/// `s`, so `0 < t ≪ s ≪ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertElement {
    series: Series<SRow>,
    s_window: usize,
}

impl HilbertElement {
    /// Exact finite sum of monomials `c · s^k t^i`, given as `(k, i, c)`.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64, Rational)>) -> Self {
        let rows = terms.into_iter().map(|(k, i, c)| (i, SRow::monomial(c, k)));
        HilbertElement { series: Series::new(rows, None, DEFAULT_TERMS), s_window: DEFAULT_TERMS }
    }

    /// `c · s^k t^i`.
    pub fn monomial(c: Rational, k: i64, i: i64) -> Self {
        HilbertElement::from_terms([(k, i, c)])
    }

    pub fn s() -> Self {
        HilbertElement::monomial(Rational::one(), 1, 0)
    }

    pub fn t() -> Self {
        HilbertElement::monomial(Rational::one(), 0, 1)
    }

    pub fn constant(c: Rational) -> Self {
        HilbertElement::monomial(c, 0, 0)
    }

    /// Sets the number of `t`-terms an inverse computes and the number of
    /// `s`-terms shown per row.
    pub fn with_precision(self, t_terms: usize, s_terms: usize) -> Self {
        let rows = self.series.terms().iter().map(|(i, p)| (*i, p.clone().with_window(s_terms))).collect::<Vec<_>>();
        let series = Series::new(rows, self.series.trunc(), t_terms);
        HilbertElement { series, s_window: s_terms.max(1) }
    }

    pub fn t_window(&self) -> usize {
        self.series.window()
    }

    pub fn s_window(&self) -> usize {
        self.s_window
    }

    pub fn t_trunc(&self) -> Option<i64> {
        self.series.trunc()
    }

    pub fn is_exact(&self) -> bool {
        self.series.is_exact()
    }

    /// The `s`-series multiplying `t^i`, expanded to `s_window` terms when
    /// it is not a Laurent polynomial.
    pub fn row(&self, i: i64) -> Result<LaurentSeries> {
        if self.series.trunc().is_some_and(|t| i >= t) {
            return Err(Error::precision(format!("row t^{i} is beyond the truncation")));
        }
        Ok(match self.series.coeff(i) {
            Some(r) => r.to_laurent(self.s_window),
            None => LaurentSeries::exact([]).with_window(self.s_window),
        })
    }

    /// Coefficient of `s^k t^i`; exact rows answer at any `k`.
    pub fn coeff(&self, k: i64, i: i64) -> Result<Rational> {
        if self.series.trunc().is_some_and(|t| i >= t) {
            return Err(Error::precision(format!("row t^{i} is beyond the truncation")));
        }
        self.series.coeff(i).map_or_else(|| Ok(Rational::zero()), |r| r.coeff(k))
    }

    /// Listed monomials `(k, i, c)` sorted by `(i, k)`.
    pub fn terms(&self) -> Vec<(i64, i64, Rational)> {
        self.series
            .terms()
            .iter()
            .flat_map(|(i, p)| p.terms(self.s_window).0.into_iter().map(move |(k, c)| (k, *i, c)))
            .collect()
    }

    fn wrap(&self, series: Series<SRow>) -> Self {
        HilbertElement { series, s_window: self.s_window }
    }
}

impl fmt::Display for HilbertElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, p) in self.series.terms() {
            let (terms, rest) = p.terms(self.s_window);
            for (k, c) in terms {
                let neg = c.sign() == Sign::Negative;
                match (first, neg) {
                    (true, _) => write!(f, "{c}")?,
                    (false, true) => write!(f, " - {}", c.abs())?,
                    (false, false) => write!(f, " + {c}")?,
                }
                write!(f, " * s^{k} t^{i}")?;
                first = false;
            }
            if let Some(ts) = rest {
                if !first {
                    f.write_str(" + ")?;
                }
                write!(f, "O(s^{ts} t^{i})")?;
                first = false;
            }
        }
        if let Some(tt) = self.series.trunc() {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "O(t^{tt})")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for HilbertElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Scalar for HilbertElement {
    const KIND: SystemKind = SystemKind::Hilbert;

    fn from_rational(r: &Rational) -> Self {
        HilbertElement::constant(r.clone())
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        self.wrap(Series::monomial(SRow::monomial(r.clone(), 0).with_window(self.s_window), 0, self.t_window()))
    }
    fn add(&self, rhs: &Self) -> Self {
        HilbertElement { series: self.series.add(&rhs.series), s_window: self.s_window.max(rhs.s_window) }
    }
    fn sub(&self, rhs: &Self) -> Self {
        HilbertElement { series: self.series.sub(&rhs.series), s_window: self.s_window.max(rhs.s_window) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        HilbertElement { series: self.series.mul(&rhs.series), s_window: self.s_window.max(rhs.s_window) }
    }
    fn neg(&self) -> Self {
        self.wrap(self.series.neg())
    }
    fn inv(&self) -> Result<Self> {
        Ok(self.wrap(self.series.inv()?))
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
        let rows = self.series.terms().iter().map(|(i, p)| (*i, p.scale(r))).collect::<Vec<_>>();
        self.wrap(Series::new(rows, self.series.trunc(), self.t_window()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn commutation_rule() {
        let (s, t) = (HilbertElement::s(), HilbertElement::t());
        assert_eq!(t.mul(&s), HilbertElement::monomial(q(2), 1, 1));
        assert_eq!(s.mul(&t), HilbertElement::monomial(q(1), 1, 1));
        // t^p s^q = 2^{pq} s^q t^p
        let t3 = t.mul(&t).mul(&t);
        let s2 = s.mul(&s);
        assert_eq!(t3.mul(&s2), HilbertElement::monomial(q(64), 2, 3));
    }

    #[test]
    fn monomial_inverse() {
        let st = HilbertElement::monomial(q(1), 1, 1);
        let inv = st.inv().unwrap();
        assert_eq!(inv, HilbertElement::monomial(q(2), -1, -1));
        assert!(inv.is_exact());
        assert!(st.mul(&inv).is_one());
        assert!(inv.mul(&st).is_one());
    }

    #[test]
    fn series_inverse_both_sides() {
        // 1 + s + t: the leading row 1 + s is inverted exactly, the t-series
        // is truncated
        let x = HilbertElement::from_terms([(0, 0, q(1)), (1, 0, q(1)), (0, 1, q(1))]).with_precision(6, 6);
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
        assert!(inv.mul(&x).is_one());
        assert!(!inv.is_exact());
        assert_eq!(inv.t_trunc(), Some(6));
        assert_eq!(inv.coeff(20, 0).unwrap(), q(1));
        assert_eq!(
            inv.to_string().split(" + O(s^6 t^0)").next().unwrap(),
            "1 * s^0 t^0 - 1 * s^1 t^0 + 1 * s^2 t^0 - 1 * s^3 t^0 + 1 * s^4 t^0 - 1 * s^5 t^0"
        );
    }

    #[test]
    fn ordering_witnesses() {
        let m = q(1_000_000);
        let a = HilbertElement::s().sub(&HilbertElement::t().scale(&m));
        assert_eq!(a.sign().unwrap(), Sign::Positive);
        let b = HilbertElement::constant(q(1)).sub(&HilbertElement::s().scale(&m));
        assert_eq!(b.sign().unwrap(), Sign::Positive);
        assert_eq!(HilbertElement::t().neg().sign().unwrap(), Sign::Negative);
    }

    #[test]
    fn text_form() {
        let x = HilbertElement::from_terms([(1, 0, q(1)), (0, 1, q(-3)), (-2, 0, q(5))]);
        assert_eq!(x.to_string(), "5 * s^-2 t^0 + 1 * s^1 t^0 - 3 * s^0 t^1");
    }
}
