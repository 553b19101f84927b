//! Truncated formal Laurent series in one variable over a coefficient ring
//! twisted by an automorphism `σ`, so that `t^i · c = σ^i(c) · t^i`.
//!
//! With rational coefficients and trivial twist this is the ordinary
//! Laurent field; with Laurent-series coefficients in `s` and
//! `σ(s) = 2s` it is the Hilbert skew field.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::numbersystems::traits::Scalar;
use crate::scalars::Sign;

/// Coefficient rings usable inside [`Series`].
pub trait Coeff: Scalar + PartialEq {
    /// `σ^i(self)`.
    fn twist(&self, i: i64) -> Self;

    /// Zero with no truncation attached.
    fn is_exact_zero(&self) -> bool;

    /// No unknown tail.
    fn is_exact(&self) -> bool;
}

impl Coeff for crate::scalars::Rational {
    fn twist(&self, _i: i64) -> Self {
        self.clone()
    }
    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }
    fn is_exact(&self) -> bool {
        true
    }
}

/// `Σ c_e t^e + O(t^trunc)`.
///
/// `trunc = None` means the stored terms are the whole series. `window`
/// bounds how many terms an inverse computes.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    terms: BTreeMap<i64, C>,
    trunc: Option<i64>,
    window: usize,
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<C: Coeff> Series<C> {
    pub fn new(terms: impl IntoIterator<Item = (i64, C)>, trunc: Option<i64>, window: usize) -> Self {
        let mut map: BTreeMap<i64, C> = BTreeMap::new();
        for (e, c) in terms {
            match map.remove(&e) {
                Some(prev) => {
                    map.insert(e, prev.add(&c));
                }
                None => {
                    map.insert(e, c);
                }
            }
        }
        Series { terms: map, trunc, window: window.max(1) }.normalized()
    }

    pub fn exact_zero(window: usize) -> Self {
        Series { terms: BTreeMap::new(), trunc: None, window: window.max(1) }
    }

    pub fn monomial(c: C, e: i64, window: usize) -> Self {
        Series::new([(e, c)], None, window)
    }

    fn normalized(mut self) -> Self {
        if let Some(t) = self.trunc {
            self.terms.retain(|&e, _| e < t);
        }
        self.terms.retain(|_, c| !c.is_exact_zero());
        // a coefficient with no known nonzero part says nothing about the
        // terms after it
        if let Some(e) = self.terms.iter().find(|(_, c)| c.is_zero()).map(|(e, _)| *e) {
            self.trunc = Some(self.trunc.map_or(e, |t| t.min(e)));
            self.terms.retain(|&x, _| x < e);
        }
        self
    }

    pub fn terms(&self) -> &BTreeMap<i64, C> {
        &self.terms
    }

    pub fn trunc(&self) -> Option<i64> {
        self.trunc
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn with_window(mut self, window: usize) -> Self {
        self.window = window.max(1);
        self
    }

    pub fn coeff(&self, e: i64) -> Option<&C> {
        self.terms.get(&e)
    }

    pub fn is_exact(&self) -> bool {
        self.trunc.is_none() && self.terms.values().all(|c| c.is_exact())
    }

    pub fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.trunc.is_none()
    }

    /// All known coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.terms.values().all(Scalar::is_zero)
    }

    /// Lowest exponent that might carry a nonzero coefficient.
    fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied().or(self.trunc)
    }

    /// Lowest-order term, which must be known and known to be nonzero.
    pub fn leading(&self) -> Result<(i64, &C)> {
        match self.terms.iter().next() {
            Some((&e, c)) if !c.is_zero() => Ok((e, c)),
            Some((&e, _)) => Err(Error::precision(format!("leading coefficient at exponent {e} is not known"))),
            None => match self.trunc {
                Some(t) => Err(Error::precision(format!("no known term below exponent {t}"))),
                None => Err(Error::domain("leading term of zero series")),
            },
        }
    }

    pub fn sign(&self) -> Result<Sign> {
        if self.is_exact_zero() {
            return Ok(Sign::Zero);
        }
        self.leading()?.1.sign()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            let sum = match terms.get(e) {
                Some(prev) => prev.add(c),
                None => c.clone(),
            };
            terms.insert(*e, sum);
        }
        Series { terms, trunc: min_opt(self.trunc, o.trunc), window: self.window.max(o.window) }.normalized()
    }

    pub fn neg(&self) -> Self {
        Series {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
            trunc: self.trunc,
            window: self.window,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Applies `σ^k` to every coefficient.
    pub fn twist_coeffs(&self, k: i64) -> Self {
        Series {
            terms: self.terms.iter().map(|(e, c)| (*e, c.twist(k))).collect(),
            trunc: self.trunc,
            window: self.window,
        }
    }

    /// Truncation of a product: an unknown tail of one factor pollutes
    /// everything from its order plus the other factor's valuation.
    fn product_trunc(&self, o: &Self) -> Option<i64> {
        if self.is_exact_zero() || o.is_exact_zero() {
            return None;
        }
        let from_self = self.trunc.and_then(|t| o.valuation().map(|v| t + v));
        let from_other = o.trunc.and_then(|t| self.valuation().map(|v| t + v));
        min_opt(from_self, from_other)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let trunc = self.product_trunc(o);
        let mut acc: BTreeMap<i64, C> = BTreeMap::new();
        for (&i, a) in &self.terms {
            for (&m, b) in &o.terms {
                let e = i + m;
                if trunc.is_some_and(|t| e >= t) {
                    break;
                }
                let p = a.mul(&b.twist(i));
                let sum = match acc.remove(&e) {
                    Some(prev) => prev.add(&p),
                    None => p,
                };
                acc.insert(e, sum);
            }
        }
        Series { terms: acc, trunc, window: self.window.max(o.window) }.normalized()
    }

    /// Two-sided inverse, solved coefficient by coefficient from the
    /// leading term: with `a = Σ_{i≥n} a_i t^i`, each `b_{j−n}` satisfies
    /// `a_n σ^n(b_{j−n}) = δ_{j0} − Σ_{i>n} a_i σ^i(b_{j−i})`.
    pub fn inv(&self) -> Result<Self> {
        let (n, an) = self.leading()?;
        let an_inv = an.inv()?;
        if self.trunc.is_none() && self.terms.len() == 1 {
            return Ok(Series::monomial(an_inv.twist(-n), -n, self.window));
        }
        let rel = match self.trunc {
            Some(t) => self.window.min((t - n) as usize),
            None => self.window,
        };
        let zero = an.zero_like();
        let mut b: Vec<C> = Vec::with_capacity(rel);
        for j in 0..rel as i64 {
            if j == 0 {
                b.push(an_inv.twist(-n));
                continue;
            }
            let mut rhs = zero.clone();
            for (&i, ai) in self.terms.range(n + 1..=n + j) {
                let bj = &b[(j - (i - n)) as usize];
                rhs = rhs.sub(&ai.mul(&bj.twist(i)));
            }
            b.push(an_inv.mul(&rhs).twist(-n));
        }
        let terms = b.into_iter().enumerate().map(|(j, c)| (j as i64 - n, c));
        Ok(Series::new(terms, Some(rel as i64 - n), self.window))
    }
}
