//! Random elements for law suites and configuration samplers.

use rand::Rng;
use serde::Serialize;

use crate::numbersystems::traits::Scalar;
use crate::numbersystems::{HilbertElement, LaurentSeries, Octonion, Poly, Quaternion, RatFunc, DEFAULT_TERMS};
use crate::scalars::{QuadExt, Rational};

/// Truncation windows applied to sampled series elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Precision {
    pub t_terms: usize,
    pub s_terms: usize,
}

impl Default for Precision {
    fn default() -> Self {
        Precision { t_terms: DEFAULT_TERMS, s_terms: DEFAULT_TERMS }
    }
}

fn small_int<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    Rational::from(rng.random_range(-bound..=bound))
}

fn nonzero_int<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let v = rng.random_range(1..=bound);
    Rational::from(if rng.random_bool(0.5) { v } else { -v })
}

fn small_fraction<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    Rational::new(rng.random_range(-9i64..=9), rng.random_range(1i64..=6)).expect("positive denominator")
}

/// Samplers: `sample` for algebraic-law suites, `sample_coord` for the
/// small coefficient pool used in geometric configurations.
pub trait Sample: Scalar {
    fn sample<R: Rng + ?Sized>(rng: &mut R, prec: Precision) -> Self;

    fn sample_coord<R: Rng + ?Sized>(rng: &mut R, prec: Precision) -> Self {
        Self::sample(rng, prec)
    }

    /// Rational constant carrying the given precision.
    fn embed(r: &Rational, prec: Precision) -> Self;

    fn sample_nonzero<R: Rng + ?Sized>(rng: &mut R, prec: Precision) -> Self {
        loop {
            let x = Self::sample(rng, prec);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

impl Sample for Rational {
    fn sample<R: Rng + ?Sized>(rng: &mut R, _prec: Precision) -> Self {
        small_fraction(rng)
    }
    fn sample_coord<R: Rng + ?Sized>(rng: &mut R, _prec: Precision) -> Self {
        small_int(rng, 5)
    }
    fn embed(r: &Rational, _prec: Precision) -> Self {
        r.clone()
    }
}

impl Sample for QuadExt {
    fn sample<R: Rng + ?Sized>(rng: &mut R, _prec: Precision) -> Self {
        QuadExt::sqrt2(small_fraction(rng), small_fraction(rng))
    }
    fn sample_coord<R: Rng + ?Sized>(rng: &mut R, _prec: Precision) -> Self {
        QuadExt::sqrt2(small_int(rng, 5), small_int(rng, 2))
    }
    fn embed(r: &Rational, _prec: Precision) -> Self {
        QuadExt::sqrt2(r.clone(), Rational::zero())
    }
}

impl Sample for RatFunc {
    fn sample<R: Rng + ?Sized>(rng: &mut R, _prec: Precision) -> Self {
        let deg = rng.random_range(0..=2);
        let num = Poly::new((0..=deg).map(|_| small_int(rng, 5)).collect());
        let den = if rng.random_bool(0.5) {
            Poly::constant(Rational::one())
        } else {
            Poly::new(vec![small_int(rng, 5), Rational::one()])
        };
        RatFunc::new(num, den).expect("monic denominator is nonzero")
    }
    fn embed(r: &Rational, _prec: Precision) -> Self {
        RatFunc::constant(r.clone())
    }
}

impl Sample for LaurentSeries {
    fn sample<R: Rng + ?Sized>(rng: &mut R, prec: Precision) -> Self {
        let start = rng.random_range(-2i64..=2);
        let len = rng.random_range(1..=3);
        let terms = (0..len).map(|j| (start + j, small_int(rng, 5))).collect::<Vec<_>>();
        LaurentSeries::exact(terms).with_window(prec.t_terms)
    }
    fn embed(r: &Rational, prec: Precision) -> Self {
        LaurentSeries::constant(r.clone()).with_window(prec.t_terms)
    }
}

impl Sample for Quaternion {
    fn sample<R: Rng + ?Sized>(rng: &mut R, _prec: Precision) -> Self {
        Quaternion { r: std::array::from_fn(|_| small_int(rng, 5)) }
    }
    fn sample_coord<R: Rng + ?Sized>(rng: &mut R, _prec: Precision) -> Self {
        let mut q = Quaternion::zero();
        for _ in 0..2 {
            let i = rng.random_range(0..4);
            q.r[i] = &q.r[i] + &small_int(rng, 3);
        }
        q
    }
    fn embed(r: &Rational, _prec: Precision) -> Self {
        Quaternion::scalar(r.clone())
    }
}

impl Sample for Octonion {
    fn sample<R: Rng + ?Sized>(rng: &mut R, _prec: Precision) -> Self {
        Octonion::from_coeffs(std::array::from_fn(|_| small_int(rng, 3)))
    }
    /// Sums of at most two units with small integer weights.
    fn sample_coord<R: Rng + ?Sized>(rng: &mut R, _prec: Precision) -> Self {
        let mut c: [Rational; 8] = Default::default();
        for _ in 0..2 {
            let i = rng.random_range(0..8);
            c[i] = &c[i] + &small_int(rng, 3);
        }
        Octonion::from_coeffs(c)
    }
    fn embed(r: &Rational, _prec: Precision) -> Self {
        Octonion::scalar(r.clone())
    }
}

impl Sample for HilbertElement {
    fn sample<R: Rng + ?Sized>(rng: &mut R, prec: Precision) -> Self {
        let len = rng.random_range(1..=3);
        let terms = (0..len)
            .map(|_| (rng.random_range(-2i64..=2), rng.random_range(-2i64..=2), nonzero_int(rng, 5)))
            .collect::<Vec<_>>();
        HilbertElement::from_terms(terms).with_precision(prec.t_terms, prec.s_terms)
    }
    /// Single monomials `c · s^k t^i` with `|k|, |i| ≤ 2`, or zero.
    fn sample_coord<R: Rng + ?Sized>(rng: &mut R, prec: Precision) -> Self {
        let c = small_int(rng, 5);
        let (k, i) = (rng.random_range(-2i64..=2), rng.random_range(-2i64..=2));
        HilbertElement::monomial(c, k, i).with_precision(prec.t_terms, prec.s_terms)
    }
    fn embed(r: &Rational, prec: Precision) -> Self {
        HilbertElement::constant(r.clone()).with_precision(prec.t_terms, prec.s_terms)
    }
}
