//! Norm multiplicativity and the eight-square identity.

use rand_chacha::ChaCha8Rng;

use super::{run_samples, summarize};
use crate::error::Result;
use crate::numbersystems::{Octonion, Precision, Quaternion, Sample};
use crate::report::{Verdict, Witness};
use crate::scalars::Rational;

/// Systems with a multiplicative quadratic norm.
pub trait Normed: Sample {
    fn norm(&self) -> Rational;
}

impl Normed for Quaternion {
    fn norm(&self) -> Rational {
        Quaternion::norm(self)
    }
}

impl Normed for Octonion {
    fn norm(&self) -> Rational {
        Octonion::norm(self)
    }
}

fn norm_sample<S: Normed>(rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let a = S::sample(rng, Precision::default());
    let b = S::sample(rng, Precision::default());
    let (na, nb, nab) = (a.norm(), b.norm(), a.mul(&b).norm());
    if &na * &nb == nab {
        return Ok(Verdict::holds("N(ab) = N(a)N(b)"));
    }
    let w = Witness::new().with("a", &a).with("b", &b).with("N(a)N(b)", &na * &nb).with("N(ab)", nab);
    Ok(Verdict::fails(w, "norm is not multiplicative"))
}

pub fn norm_verdicts<S: Normed>(n: u64, seed: u64) -> Result<Vec<Verdict>> {
    run_samples(n, seed, norm_sample::<S>)
}

/// `N(ab) = N(a)·N(b)` on `n` random pairs.
pub fn check_norm_multiplicative<S: Normed>(n: u64, seed: u64) -> Result<Verdict> {
    Ok(summarize(&norm_verdicts::<S>(n, seed)?))
}

/// Right-hand side of the eight-square identity, one row per square:
/// `(sign, i, j)` stands for `± αᵢβⱼ`.
pub type SquareTerms = [[(i8, usize, usize); 8]; 8];

pub const EIGHT_SQUARE_TERMS: SquareTerms = [
    [(1, 0, 0), (-1, 1, 1), (-1, 2, 2), (-1, 3, 3), (-1, 4, 4), (-1, 5, 5), (-1, 6, 6), (-1, 7, 7)],
    [(1, 0, 1), (1, 1, 0), (1, 2, 3), (-1, 3, 2), (1, 4, 5), (-1, 5, 4), (-1, 6, 7), (1, 7, 6)],
    [(1, 0, 2), (1, 2, 0), (-1, 1, 3), (1, 3, 1), (1, 4, 6), (-1, 6, 4), (1, 5, 7), (-1, 7, 5)],
    [(1, 0, 3), (1, 3, 0), (1, 1, 2), (-1, 2, 1), (1, 4, 7), (-1, 7, 4), (-1, 5, 6), (1, 6, 5)],
    [(1, 0, 4), (1, 4, 0), (-1, 1, 5), (1, 5, 1), (-1, 2, 6), (1, 6, 2), (-1, 3, 7), (1, 7, 3)],
    [(1, 0, 5), (1, 5, 0), (1, 1, 4), (-1, 4, 1), (-1, 2, 7), (1, 7, 2), (1, 3, 6), (-1, 6, 3)],
    [(1, 0, 6), (1, 6, 0), (1, 1, 7), (-1, 7, 1), (1, 2, 4), (-1, 4, 2), (-1, 3, 5), (1, 5, 3)],
    [(1, 0, 7), (1, 7, 0), (-1, 1, 6), (1, 6, 1), (1, 2, 5), (-1, 5, 2), (1, 3, 4), (-1, 4, 3)],
];

/// Sum of the eight squares given by `terms`.
pub fn eight_square_rhs(terms: &SquareTerms, alpha: &[Rational; 8], beta: &[Rational; 8]) -> Rational {
    terms
        .iter()
        .map(|row| {
            let s = row.iter().fold(Rational::zero(), |acc, &(sign, i, j)| {
                let t = &alpha[i] * &beta[j];
                if sign > 0 {
                    &acc + &t
                } else {
                    &acc - &t
                }
            });
            &s * &s
        })
        .fold(Rational::zero(), |acc, sq| &acc + &sq)
}

fn sum_squares(v: &[Rational; 8]) -> Rational {
    v.iter().fold(Rational::zero(), |acc, x| &acc + &(x * x))
}

/// `Σαᵢ²·Σβᵢ²` against the printed sum of eight squares, and against the
/// octonion norm of the product.
pub fn eight_square_identity(alpha: &[Rational; 8], beta: &[Rational; 8]) -> bool {
    eight_square_with(&EIGHT_SQUARE_TERMS, alpha, beta)
}

pub(crate) fn eight_square_with(terms: &SquareTerms, alpha: &[Rational; 8], beta: &[Rational; 8]) -> bool {
    let lhs = &sum_squares(alpha) * &sum_squares(beta);
    let printed = eight_square_rhs(terms, alpha, beta);
    let a = Octonion::from_coeffs(alpha.clone());
    let b = Octonion::from_coeffs(beta.clone());
    lhs == printed && lhs == a.mul(&b).norm()
}

fn eight_square_sample(rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let alpha: [Rational; 8] = std::array::from_fn(|_| Rational::sample(rng, Precision::default()));
    let beta: [Rational; 8] = std::array::from_fn(|_| Rational::sample(rng, Precision::default()));
    if eight_square_identity(&alpha, &beta) {
        return Ok(Verdict::holds("eight-square identity"));
    }
    let show = |v: &[Rational; 8]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    let w = Witness::new().with("alpha", show(&alpha)).with("beta", show(&beta));
    Ok(Verdict::fails(w, "eight-square identity violated"))
}

pub(crate) fn eight_square_verdicts(n: u64, seed: u64) -> Result<Vec<Verdict>> {
    run_samples(n, seed, eight_square_sample)
}

/// The eight-square identity on `n` random rational pairs.
pub fn check_eight_square(n: u64, seed: u64) -> Result<Verdict> {
    Ok(summarize(&eight_square_verdicts(n, seed)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: [i64; 8]) -> [Rational; 8] {
        c.map(Rational::from)
    }

    #[test]
    fn quaternion_norm_example() {
        let a = Quaternion::from_ints([1, 1, 0, 0]);
        let b = Quaternion::from_ints([1, 0, 1, 0]);
        assert_eq!(a.mul(&b), Quaternion::from_ints([1, 1, 1, 1]));
        assert_eq!((a.norm(), b.norm(), a.mul(&b).norm()), (Rational::from(2), Rational::from(2), Rational::from(4)));
    }

    #[test]
    fn unit_alpha_reduces_to_beta_squares() {
        let b = ints([3, -1, 4, 1, -5, 9, 2, -6]);
        let e0 = ints([1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(eight_square_rhs(&EIGHT_SQUARE_TERMS, &e0, &b), sum_squares(&b));
        assert!(eight_square_identity(&e0, &b));
    }

    #[test]
    fn one_sign_mutation_is_caught() {
        let mut bad = EIGHT_SQUARE_TERMS;
        bad[5][6].0 = -bad[5][6].0;
        let a = ints([1, 2, -1, 3, 0, 2, 1, -2]);
        let b = ints([2, -1, 1, 0, 3, 1, -2, 1]);
        assert!(eight_square_with(&EIGHT_SQUARE_TERMS, &a, &b));
        assert!(!eight_square_with(&bad, &a, &b));
    }

    #[test]
    fn random_suites_hold() {
        assert!(check_eight_square(300, 9).unwrap().is_holds());
        assert!(check_norm_multiplicative::<Octonion>(300, 9).unwrap().is_holds());
        assert!(check_norm_multiplicative::<Quaternion>(300, 9).unwrap().is_holds());
    }
}
