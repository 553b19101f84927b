//! Coefficients of `t^i` in a Hilbert element: series in `s`, ordered as
//! `s → 0+`.
//!
//! A row starts as an exact rational function of `s`. Twisted inverses make
//! the degrees of later rows grow quickly, so once a non-polynomial row
//! has degree above half its `window` it is expanded into a Laurent series
//! that keeps `window` terms past its valuation. An expanded row can no
//! longer be shown to vanish, which is why exactness is kept as long as
//! it is affordable.

use std::fmt;

use crate::error::{Error, Result};
use crate::numbersystems::laurent::LaurentSeries;
use crate::numbersystems::ratfunc::Poly;
use crate::numbersystems::series::Coeff;
use crate::numbersystems::traits::{Scalar, SystemKind};
use crate::numbersystems::DEFAULT_TERMS;
use crate::scalars::{Rational, Sign};

/// `s^v · p(s)/q(s)` with `p(0) ≠ 0`, `q(0) = 1` and `gcd(p, q) = 1`,
/// or zero (empty `p`). The form is unique, so `==` is equality.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ExactRow {
    v: i64,
    num: Poly,
    den: Poly,
}

fn one_poly() -> Poly {
    Poly::constant(Rational::one())
}

/// Splits `s^m` off a polynomial: `(m, p / s^m)`.
fn strip_s(p: &Poly) -> (i64, Poly) {
    let m = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    (m as i64, Poly::new(p.coeffs()[m..].to_vec()))
}

fn shift(p: &Poly, m: usize) -> Poly {
    let mut c = vec![Rational::zero(); m];
    c.extend(p.coeffs().iter().cloned());
    Poly::new(c)
}

impl ExactRow {
    fn zero() -> Self {
        ExactRow { v: 0, num: Poly::default(), den: one_poly() }
    }

    fn monomial(c: Rational, k: i64) -> Self {
        if c.is_zero() {
            return ExactRow::zero();
        }
        ExactRow { v: k, num: Poly::constant(c), den: one_poly() }
    }

    fn from_parts(v: i64, num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return ExactRow::zero();
        }
        let (mn, num) = strip_s(&num);
        let (md, den) = strip_s(&den);
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).expect("gcd divides").0, den.div_rem(&g).expect("gcd divides").0)
        };
        let d0 = den.coeffs()[0].recip().expect("den(0) is nonzero after stripping s");
        ExactRow { v: v + mn - md, num: num.scale(&d0), den: den.scale(&d0) }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    /// The first `n` coefficients of the expansion in `s`, starting at the
    /// valuation.
    fn expand(&self, n: usize) -> Vec<Rational> {
        let p = self.num.coeffs();
        let q = self.den.coeffs();
        let mut c: Vec<Rational> = Vec::with_capacity(n);
        for j in 0..n {
            let mut x = p.get(j).cloned().unwrap_or_else(Rational::zero);
            for m in 1..=j.min(q.len().saturating_sub(1)) {
                x = &x - &(&q[m] * &c[j - m]);
            }
            c.push(x);
        }
        c
    }

    fn coeff(&self, k: i64) -> Rational {
        if self.is_zero() || k < self.v {
            return Rational::zero();
        }
        let j = (k - self.v) as usize;
        if self.is_polynomial() {
            return self.num.coeffs().get(j).cloned().unwrap_or_else(Rational::zero);
        }
        self.expand(j + 1).pop().expect("j + 1 terms")
    }

    fn to_laurent(&self, window: usize) -> LaurentSeries {
        if self.is_zero() {
            return LaurentSeries::exact([]).with_window(window);
        }
        if self.is_polynomial() {
            let terms = self.num.coeffs().iter().enumerate().map(|(j, c)| (self.v + j as i64, c.clone()));
            return LaurentSeries::exact(terms).with_window(window);
        }
        LaurentSeries::new(self.v, self.expand(window), Some(self.v + window as i64))
            .expect("window is positive")
            .with_window(window)
    }

    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let v = self.v.min(o.v);
        let (sa, sb) = ((self.v - v) as usize, (o.v - v) as usize);
        if self.den == o.den {
            let num = shift(&self.num, sa).add(&shift(&o.num, sb));
            if self.is_polynomial() {
                let (m, num) = strip_s(&num);
                return if num.is_zero() { ExactRow::zero() } else { ExactRow { v: v + m, num, den: one_poly() } };
            }
            return ExactRow::from_parts(v, num, self.den.clone());
        }
        let num = shift(&self.num.mul(&o.den), sa).add(&shift(&o.num.mul(&self.den), sb));
        ExactRow::from_parts(v, num, self.den.mul(&o.den))
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ExactRow::zero();
        }
        let v = self.v + o.v;
        if self.is_polynomial() && o.is_polynomial() {
            return ExactRow { v, num: self.num.mul(&o.num), den: one_poly() };
        }
        ExactRow::from_parts(v, self.num.mul(&o.num), self.den.mul(&o.den))
    }

    fn neg(&self) -> Self {
        ExactRow { v: self.v, num: self.num.neg(), den: self.den.clone() }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        let p0 = self.num.coeffs()[0].recip()?;
        Ok(ExactRow { v: -self.v, num: self.den.scale(&p0), den: self.num.scale(&p0) })
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return ExactRow::zero();
        }
        ExactRow { v: self.v, num: self.num.scale(r), den: self.den.clone() }
    }

    /// Substitutes `2^i·s` for `s`.
    fn dilate2(&self, i: i64) -> Self {
        if i == 0 || self.is_zero() {
            return self.clone();
        }
        let sub = |p: &Poly| {
            Poly::new(p.coeffs().iter().enumerate().map(|(k, c)| c * &Rational::pow2(i * k as i64)).collect())
        };
        let head = Rational::pow2(i * self.v);
        ExactRow { v: self.v, num: sub(&self.num).scale(&head), den: sub(&self.den) }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Repr {
    Exact(ExactRow),
    Approx(LaurentSeries),
}

/// One `s`-row. `window` is the number of terms kept when the row has to
/// be expanded, and the number an inverse of an expanded row computes.
#[derive(Clone, Debug)]
pub(crate) struct SRow {
    repr: Repr,
    window: usize,
}

impl PartialEq for SRow {
    fn eq(&self, o: &Self) -> bool {
        self.repr == o.repr
    }
}

impl SRow {
    fn exact(r: ExactRow, window: usize) -> Self {
        let repr = if !r.is_polynomial() && 2 * r.degree() > window {
            Repr::Approx(r.to_laurent(window))
        } else {
            Repr::Exact(r)
        };
        SRow { repr, window }
    }

    pub(crate) fn monomial(c: Rational, k: i64) -> Self {
        SRow { repr: Repr::Exact(ExactRow::monomial(c, k)), window: DEFAULT_TERMS }
    }

    pub(crate) fn with_window(self, window: usize) -> Self {
        let window = window.max(1);
        let repr = match self.repr {
            Repr::Approx(l) => Repr::Approx(l.with_window(window)),
            e => e,
        };
        SRow { repr, window }
    }

    /// Coefficient of `s^k`.
    pub(crate) fn coeff(&self, k: i64) -> Result<Rational> {
        match &self.repr {
            Repr::Exact(r) => Ok(r.coeff(k)),
            Repr::Approx(l) => l.coeff(k),
        }
    }

    /// Known `(k, c)` pairs: all of them for a Laurent polynomial,
    /// otherwise at most `window` terms and the order of the remainder.
    pub(crate) fn terms(&self, window: usize) -> (Vec<(i64, Rational)>, Option<i64>) {
        let l = self.to_laurent(window);
        let rest = l.trunc_order();
        (l.terms().map(|(k, c)| (k, c.clone())).collect(), rest)
    }

    pub(crate) fn to_laurent(&self, window: usize) -> LaurentSeries {
        match &self.repr {
            Repr::Exact(r) => r.to_laurent(window),
            Repr::Approx(l) => l.clone().with_window(window),
        }
    }

    fn combine(
        &self,
        o: &Self,
        exact: impl Fn(&ExactRow, &ExactRow) -> ExactRow,
        approx: impl Fn(&LaurentSeries, &LaurentSeries) -> LaurentSeries,
    ) -> Self {
        let window = self.window.max(o.window);
        match (&self.repr, &o.repr) {
            (Repr::Exact(a), Repr::Exact(b)) => SRow::exact(exact(a, b), window),
            _ => SRow { repr: Repr::Approx(approx(&self.to_laurent(window), &o.to_laurent(window))), window },
        }
    }
}

impl fmt::Display for SRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Exact(r) => {
                write!(f, "s^{} * (", r.v)?;
                r.num.write_in(f, "s")?;
                f.write_str(")/(")?;
                r.den.write_in(f, "s")?;
                f.write_str(")")
            }
            Repr::Approx(l) => l.write_in(f, "s"),
        }
    }
}

impl Scalar for SRow {
    const KIND: SystemKind = SystemKind::Laurent;

    fn from_rational(r: &Rational) -> Self {
        SRow::monomial(r.clone(), 0)
    }

    fn from_rational_like(&self, r: &Rational) -> Self {
        SRow { repr: Repr::Exact(ExactRow::monomial(r.clone(), 0)), window: self.window }
    }

    fn add(&self, o: &Self) -> Self {
        self.combine(o, ExactRow::add, Scalar::add)
    }

    fn mul(&self, o: &Self) -> Self {
        self.combine(o, ExactRow::mul, Scalar::mul)
    }

    fn neg(&self) -> Self {
        let repr = match &self.repr {
            Repr::Exact(r) => Repr::Exact(r.neg()),
            Repr::Approx(l) => Repr::Approx(l.neg()),
        };
        SRow { repr, window: self.window }
    }

    fn inv(&self) -> Result<Self> {
        Ok(match &self.repr {
            Repr::Exact(r) => SRow::exact(r.inv()?, self.window),
            Repr::Approx(l) => SRow { repr: Repr::Approx(l.inv()?), window: self.window },
        })
    }

    fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Exact(r) => r.is_zero(),
            Repr::Approx(l) => l.is_zero(),
        }
    }

    fn sign(&self) -> Result<Sign> {
        match &self.repr {
            Repr::Exact(r) => Ok(r.num.coeffs().first().map_or(Sign::Zero, |c| c.sign())),
            Repr::Approx(l) => l.sign(),
        }
    }

    fn same(&self, o: &Self) -> bool {
        match (&self.repr, &o.repr) {
            (Repr::Exact(a), Repr::Exact(b)) => a == b,
            _ => self.sub(o).is_zero(),
        }
    }

    fn scale(&self, r: &Rational) -> Self {
        let repr = match &self.repr {
            Repr::Exact(x) => Repr::Exact(x.scale(r)),
            Repr::Approx(l) => Repr::Approx(l.scale(r)),
        };
        SRow { repr, window: self.window }
    }
}

/// `σ^i` substitutes `2^i·s` for `s`.
impl Coeff for SRow {
    fn twist(&self, i: i64) -> Self {
        let repr = match &self.repr {
            Repr::Exact(r) => Repr::Exact(r.dilate2(i)),
            Repr::Approx(l) => Repr::Approx(l.dilate2(i)),
        };
        SRow { repr, window: self.window }
    }

    fn is_exact_zero(&self) -> bool {
        match &self.repr {
            Repr::Exact(r) => r.is_zero(),
            Repr::Approx(l) => l.is_exact() && l.is_zero(),
        }
    }

    fn is_exact(&self) -> bool {
        match &self.repr {
            Repr::Exact(_) => true,
            Repr::Approx(l) => l.is_exact(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn m(c: i64, k: i64) -> SRow {
        SRow::monomial(q(c), k)
    }

    #[test]
    fn geometric_expansion() {
        // 1/(1 - s) = 1 + s + s^2 + ...
        let x = m(1, 0).sub(&m(1, 1));
        let inv = x.inv().unwrap();
        assert_eq!(inv.to_laurent(5).terms().map(|(_, c)| c.clone()).collect::<Vec<_>>(), vec![q(1); 5]);
        assert!(x.mul(&inv).is_one());
        assert_eq!(inv.coeff(7).unwrap(), q(1));
    }

    #[test]
    fn normal_form_is_unique() {
        // s / (s + s^2) = 1 / (1 + s)
        let a = m(1, 1);
        let b = m(1, 1).add(&m(1, 2));
        let x = a.mul(&b.inv().unwrap());
        let y = m(1, 0).add(&m(1, 1)).inv().unwrap();
        assert_eq!(x, y);
        assert!(x.sub(&y).is_zero());
    }

    #[test]
    fn twist_scales_powers() {
        let x = m(3, 2).add(&m(1, -1));
        let want = m(12, 2).add(&SRow::monomial(Rational::new(1, 2).unwrap(), -1));
        assert_eq!(x.twist(1), want);
        let y = x.inv().unwrap();
        assert_eq!(y.twist(3).mul(&x.twist(3)), m(1, 0));
    }

    #[test]
    fn order_at_zero() {
        let x = m(-1, 3).add(&m(2, 5));
        assert_eq!(x.sign().unwrap(), Sign::Negative);
        assert_eq!(x.inv().unwrap().sign().unwrap(), Sign::Negative);
        assert_eq!(x.coeff(3).unwrap(), q(-1));
        assert_eq!(x.coeff(2).unwrap(), q(0));
    }

    #[test]
    fn high_degree_rows_are_expanded() {
        // a product of many distinct twisted denominators passes the cap
        let base = m(1, 0).add(&m(1, 1)).inv().unwrap().with_window(8);
        let mut x = base.clone();
        for i in 1..=4 {
            x = x.mul(&base.twist(i));
        }
        assert!(!x.is_exact());
        assert_eq!(x.to_laurent(8).trunc_order(), Some(8));
        assert_eq!(x.coeff(0).unwrap(), q(1));
        assert!(x.coeff(8).is_err());
        // the expansion agrees with the exact product up to its window
        let b = ExactRow::monomial(q(1), 0).add(&ExactRow::monomial(q(1), 1)).inv().unwrap();
        let mut exact = ExactRow::monomial(q(1), 0);
        for i in 0..=4 {
            exact = exact.mul(&b.dilate2(i));
        }
        assert_eq!(x.to_laurent(8), exact.to_laurent(8));
    }
}
