//! Wagner's identity `L(AB − BA)² = (AB − BA)²L` for 2×2 rational matrices.

use std::fmt;

use rand_chacha::ChaCha8Rng;

use super::{run_samples, summarize};
use crate::error::Result;
use crate::numbersystems::{Precision, Sample};
use crate::report::{Verdict, Witness};
use crate::scalars::Rational;

/// `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix2 {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Matrix2 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Matrix2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        Matrix2 {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    pub fn sub(&self, o: &Matrix2) -> Matrix2 {
        Matrix2 { a: &self.a - &o.a, b: &self.b - &o.b, c: &self.c - &o.c, d: &self.d - &o.d }
    }

    pub fn commutator(&self, o: &Matrix2) -> Matrix2 {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn sample(rng: &mut ChaCha8Rng) -> Matrix2 {
        let mut r = || Rational::sample(rng, Precision::default());
        Matrix2::new(r(), r(), r(), r())
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

pub fn wagner_holds(l: &Matrix2, a: &Matrix2, b: &Matrix2) -> bool {
    let c = a.commutator(b);
    let c2 = c.mul(&c);
    l.mul(&c2) == c2.mul(l)
}

fn wagner_sample(rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let (l, a, b) = (Matrix2::sample(rng), Matrix2::sample(rng), Matrix2::sample(rng));
    let w = Witness::new().with("L", &l).with("A", &a).with("B", &b);
    if !wagner_holds(&l, &a, &b) {
        return Ok(Verdict::fails(w, "Wagner identity violated"));
    }
    // a holding sample with AB ≠ BA is kept as evidence that the identity
    // does not force commutativity
    if a.commutator(&b).is_zero() {
        Ok(Verdict::holds("Wagner identity"))
    } else {
        Ok(Verdict::holds_with(w.with("AB − BA", a.commutator(&b)), "Wagner identity with AB ≠ BA"))
    }
}

pub(crate) fn wagner_verdicts(n: u64, seed: u64) -> Result<Vec<Verdict>> {
    run_samples(n, seed, wagner_sample)
}

/// The identity on `n` random triples. Holding additionally requires a
/// sampled pair with `AB ≠ BA`, recorded as the witness.
pub fn check_wagner_identity(n: u64, seed: u64) -> Result<Verdict> {
    let v = summarize(&wagner_verdicts(n, seed)?);
    if v.is_holds() && v.witness.is_none() {
        return Ok(Verdict::degenerate("no sampled pair with AB ≠ BA"));
    }
    Ok(v)
}
