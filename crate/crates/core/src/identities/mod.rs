//! Algebraic-law suites over the number systems.
//!
//! Each suite draws `n` independently seeded samples, evaluates them in
//! parallel and folds the outcomes in sample order. All comparisons are
//! exact; for truncated series, "equal" means equal on every known term.
//!
//! Whether a linearly ordered alternative field that is not associative
//! exists was once open. Bruck and Kleinfeld settled it negatively, so the
//! ordered systems here are all associative and there is nothing further
//! to check.

mod squares;
mod wagner;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use squares::{
    check_eight_square, check_norm_multiplicative, eight_square_identity, eight_square_rhs, norm_verdicts, Normed,
    SquareTerms, EIGHT_SQUARE_TERMS,
};
pub use wagner::{check_wagner_identity, wagner_holds, Matrix2};

use crate::error::{Error, Result};
use crate::numbersystems::{Octonion, Precision, Quaternion, Sample, Scalar, SystemKind};
use crate::report::{split_seed, SuiteReport, Verdict, Witness};
use crate::scalars::{Rational, Sign};

/// `(xy)z − x(yz)`.
pub fn associator<S: Scalar>(x: &S, y: &S, z: &S) -> S {
    x.mul(y).mul(z).sub(&x.mul(&y.mul(z)))
}

/// The named law suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    Alternative,
    Alternator,
    Inverse,
    FourIdentity,
    Monotonicity,
    Norm,
    EightSquare,
    CommutingTriple,
    Wagner,
}

impl Law {
    pub const ALL: [Law; 9] = [
        Law::Alternative,
        Law::Alternator,
        Law::Inverse,
        Law::FourIdentity,
        Law::Monotonicity,
        Law::Norm,
        Law::EightSquare,
        Law::CommutingTriple,
        Law::Wagner,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Alternative => "alternative",
            Law::Alternator => "alternator",
            Law::Inverse => "inverse",
            Law::FourIdentity => "four-identity",
            Law::Monotonicity => "monotonicity",
            Law::Norm => "norm",
            Law::EightSquare => "eight-square",
            Law::CommutingTriple => "commuting-triple",
            Law::Wagner => "wagner",
        }
    }

    /// Laws stated for an arbitrary system; the rest fix their own.
    pub fn is_generic(self) -> bool {
        matches!(self, Law::Alternative | Law::Alternator | Law::Inverse | Law::FourIdentity | Law::Monotonicity)
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Law::ALL.into_iter().find(|l| l.name() == s).ok_or_else(|| Error::Parse(format!("unknown law `{s}`")))
    }
}

/// Evaluates `f` on `n` independently seeded generators.
pub(crate) fn run_samples<F>(n: u64, seed: u64, f: F) -> Result<Vec<Verdict>>
where
    F: Fn(&mut ChaCha8Rng) -> Result<Verdict> + Sync,
{
    if n == 0 {
        return Err(Error::domain("suite needs n >= 1"));
    }
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(split_seed(seed, i));
            match f(&mut rng) {
                Ok(v) => Ok(v),
                Err(e) => Verdict::from_error(e),
            }
        })
        .collect()
}

/// One verdict for a whole run: the first failure if any, otherwise holds
/// when at least one sample was decided.
pub fn summarize(verdicts: &[Verdict]) -> Verdict {
    let n = verdicts.len();
    if let Some(v) = verdicts.iter().find(|v| v.is_fails()) {
        let k = verdicts.iter().filter(|v| v.is_fails()).count();
        return Verdict::fails(v.witness.clone().unwrap_or_default(), format!("{k} of {n} samples fail"));
    }
    let decided = verdicts.iter().filter(|v| v.is_holds()).count();
    if decided == 0 {
        let why = verdicts.first().map(|v| v.note.clone()).unwrap_or_default();
        return Verdict::degenerate(format!("no sample decided: {why}"));
    }
    let witness = verdicts.iter().find_map(|v| v.witness.clone());
    let note = format!("{decided} of {n} samples hold");
    match witness {
        Some(w) => Verdict::holds_with(w, note),
        None => Verdict::holds(note),
    }
}

fn expect_zero<S: Scalar>(label: &str, value: S, args: &[(&str, &S)]) -> Option<Witness> {
    if value.is_zero() {
        return None;
    }
    let mut w = Witness::new();
    for (k, v) in args {
        w.push(*k, v);
    }
    w.push(label, value);
    Some(w)
}

fn verdict(witness: Option<Witness>, law: &str) -> Verdict {
    match witness {
        Some(w) => Verdict::fails(w, format!("{law} violated")),
        None => Verdict::holds(law),
    }
}

fn alternative_sample<S: Sample>(rng: &mut ChaCha8Rng, prec: Precision) -> Result<Verdict> {
    let x = S::sample(rng, prec);
    let y = S::sample(rng, prec);
    let args = [("x", &x), ("y", &y)];
    let w = expect_zero("[x,x,y]", associator(&x, &x, &y), &args)
        .or_else(|| expect_zero("[y,x,x]", associator(&y, &x, &x), &args))
        .or_else(|| expect_zero("[x,y,x]", associator(&x, &y, &x), &args));
    Ok(verdict(w, "alternative laws"))
}

fn alternator_sample<S: Sample>(rng: &mut ChaCha8Rng, prec: Precision) -> Result<Verdict> {
    let a = S::sample(rng, prec);
    let b = S::sample(rng, prec);
    let c = S::sample(rng, prec);
    let abc = associator(&a, &b, &c);
    let args = [("a", &a), ("b", &b), ("c", &c)];
    let w = expect_zero("[b,a,c] + [a,b,c]", associator(&b, &a, &c).add(&abc), &args)
        .or_else(|| expect_zero("[a,c,b] + [a,b,c]", associator(&a, &c, &b).add(&abc), &args));
    Ok(verdict(w, "alternator antisymmetry"))
}

fn inverse_sample<S: Sample>(rng: &mut ChaCha8Rng, prec: Precision) -> Result<Verdict> {
    let a = S::sample_nonzero(rng, prec);
    let b = S::sample_nonzero(rng, prec);
    let ai = a.inv()?;
    let args = [("a", &a), ("b", &b)];
    let w = expect_zero("a(a⁻¹b) − b", a.mul(&ai.mul(&b)).sub(&b), &args)
        .or_else(|| expect_zero("(ba⁻¹)a − b", b.mul(&ai).mul(&a).sub(&b), &args))
        .or_else(|| expect_zero("(aa⁻¹)b − b", a.mul(&ai).mul(&b).sub(&b), &args));
    let w = match w {
        Some(w) => Some(w),
        None => expect_zero("(ab)⁻¹ − b⁻¹a⁻¹", a.mul(&b).inv()?.sub(&b.inv()?.mul(&ai)), &args),
    };
    Ok(verdict(w, "inverse identities"))
}

fn four_identity_sample<S: Sample>(rng: &mut ChaCha8Rng, prec: Precision) -> Result<Verdict> {
    let [a, b, c, d]: [S; 4] = std::array::from_fn(|_| S::sample(rng, prec));
    let lhs = associator(&a.mul(&b), &c, &d).sub(&associator(&a, &b.mul(&c), &d)).add(&associator(&a, &b, &c.mul(&d)));
    let rhs = a.mul(&associator(&b, &c, &d)).add(&associator(&a, &b, &c).mul(&d));
    let args = [("a", &a), ("b", &b), ("c", &c), ("d", &d)];
    Ok(verdict(expect_zero("lhs − rhs", lhs.sub(&rhs), &args), "four identity"))
}

fn positive<S: Scalar>(x: &S) -> Result<bool> {
    Ok(x.sign()? == Sign::Positive)
}

/// `a > b` gives `a + c > b + c`, and with `c > 0` also `ac > bc` and
/// `ca > cb`. The sample is arranged so that `a > b` and `c > 0`.
fn monotonicity_sample<S: Sample>(rng: &mut ChaCha8Rng, prec: Precision) -> Result<Verdict> {
    let mut a = S::sample(rng, prec);
    let mut b = S::sample(rng, prec);
    let c0 = S::sample_nonzero(rng, prec);
    match a.sub(&b).sign()? {
        Sign::Negative => std::mem::swap(&mut a, &mut b),
        Sign::Zero => a = b.add(&b.one_like()),
        Sign::Positive => {}
    }
    let c = if positive(&c0)? { c0 } else { c0.neg() };
    let mut w = Witness::new().with("a", &a).with("b", &b).with("c", &c);
    let checks = [
        ("a + c > b + c", a.add(&c).sub(&b.add(&c))),
        ("ac > bc", a.mul(&c).sub(&b.mul(&c))),
        ("ca > cb", c.mul(&a).sub(&c.mul(&b))),
    ];
    for (law, diff) in checks {
        if !positive(&diff)? {
            w.push("violated", law);
            return Ok(Verdict::fails(w, "monotonicity violated"));
        }
    }
    Ok(Verdict::holds("monotonicity"))
}

/// Per-sample verdicts of a law stated for an arbitrary system.
pub fn law_verdicts<S: Sample>(law: Law, n: u64, seed: u64, prec: Precision) -> Result<Vec<Verdict>> {
    let f: fn(&mut ChaCha8Rng, Precision) -> Result<Verdict> = match law {
        Law::Alternative => alternative_sample::<S>,
        Law::Alternator => alternator_sample::<S>,
        Law::Inverse => inverse_sample::<S>,
        Law::FourIdentity => four_identity_sample::<S>,
        Law::Monotonicity => {
            S::descriptor().require_ordered("monotonicity")?;
            monotonicity_sample::<S>
        }
        other => return Err(Error::domain(format!("law {other} is not stated for an arbitrary system"))),
    };
    run_samples(n, seed, |rng| f(rng, prec))
}

/// Suite report of a generic law over `S`.
pub fn law_report<S: Sample>(law: Law, n: u64, seed: u64, prec: Precision) -> Result<SuiteReport> {
    let verdicts = law_verdicts::<S>(law, n, seed, prec)?;
    Ok(SuiteReport::new("identity", law.name(), S::KIND.name(), n, seed).absorb(&verdicts))
}

/// Suite report of a law that fixes its own system. The norm law runs
/// over `kind`, which must be the quaternions or the octonions.
pub fn fixed_law_report(law: Law, kind: SystemKind, n: u64, seed: u64) -> Result<SuiteReport> {
    let (system, verdicts) = match law {
        Law::Norm => match kind {
            SystemKind::Quaternion => (kind.name(), norm_verdicts::<Quaternion>(n, seed)?),
            SystemKind::Octonion => (kind.name(), norm_verdicts::<Octonion>(n, seed)?),
            other => {
                return Err(Error::capability(format!("the norm law needs quaternions or octonions, not {other}")))
            }
        },
        Law::EightSquare => ("rational", squares::eight_square_verdicts(n, seed)?),
        Law::CommutingTriple => ("octonion", commuting_verdicts(n, seed)?),
        Law::Wagner => ("matrix2", wagner::wagner_verdicts(n, seed)?),
        other => return Err(Error::domain(format!("law {other} takes a system parameter"))),
    };
    Ok(SuiteReport::new("identity", law.name(), system, n, seed).absorb(&verdicts))
}

pub fn check_alternative_laws<S: Sample>(n: u64, seed: u64, prec: Precision) -> Result<Verdict> {
    Ok(summarize(&law_verdicts::<S>(Law::Alternative, n, seed, prec)?))
}

pub fn check_alternator_antisymmetry<S: Sample>(n: u64, seed: u64, prec: Precision) -> Result<Verdict> {
    Ok(summarize(&law_verdicts::<S>(Law::Alternator, n, seed, prec)?))
}

pub fn check_inverse_identities<S: Sample>(n: u64, seed: u64, prec: Precision) -> Result<Verdict> {
    Ok(summarize(&law_verdicts::<S>(Law::Inverse, n, seed, prec)?))
}

pub fn check_four_identity<S: Sample>(n: u64, seed: u64, prec: Precision) -> Result<Verdict> {
    Ok(summarize(&law_verdicts::<S>(Law::FourIdentity, n, seed, prec)?))
}

pub fn check_monotonicity<S: Sample>(n: u64, seed: u64, prec: Precision) -> Result<Verdict> {
    Ok(summarize(&law_verdicts::<S>(Law::Monotonicity, n, seed, prec)?))
}

/// A random pairwise-commuting triple: `a, b, c ∈ ℚ + ℚu` for a random
/// imaginary octonion `u`, which spans a commutative subalgebra.
pub fn commuting_triple(rng: &mut ChaCha8Rng) -> [Octonion; 3] {
    let u = loop {
        let mut c = Octonion::sample(rng, Precision::default()).coeffs();
        c[0] = Rational::zero();
        let u = Octonion::from_coeffs(c);
        if !u.is_zero() {
            break u;
        }
    };
    std::array::from_fn(|_| {
        let p = Rational::sample(rng, Precision::default());
        let q = Rational::sample(rng, Precision::default());
        Octonion::scalar(p).add(&u.scale(&q))
    })
}

fn commuting_sample(rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let [a, b, c] = commuting_triple(rng);
    for (x, y) in [(&a, &b), (&b, &c), (&a, &c)] {
        if !x.mul(y).same(&y.mul(x)) {
            return Err(Error::domain("constructed triple does not commute"));
        }
    }
    let args = [("a", &a), ("b", &b), ("c", &c)];
    Ok(verdict(expect_zero("[a,b,c]", associator(&a, &b, &c), &args), "commuting triples associate"))
}

/// Pairwise-commuting octonion triples associate.
pub fn check_commuting_triple_associates(n: u64, seed: u64) -> Result<Verdict> {
    Ok(summarize(&run_samples(n, seed, commuting_sample)?))
}

pub(crate) fn commuting_verdicts(n: u64, seed: u64) -> Result<Vec<Verdict>> {
    run_samples(n, seed, commuting_sample)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbersystems::{HilbertElement, Quaternion};

    #[test]
    fn octonion_associator_of_e1_e2_e4() {
        let e = Octonion::unit;
        assert_eq!(associator(&e(1), &e(2), &e(4)), Octonion::unit(7).scale(&Rational::from(2)));
    }

    #[test]
    fn quaternions_associate() {
        let q = |c| Quaternion::from_ints(c);
        assert!(associator(&q([1, 2, 0, -1]), &q([0, 3, 1, 1]), &q([2, 0, 0, 5])).is_zero());
    }

    #[test]
    fn octonion_suites_hold() {
        let p = Precision::default();
        assert!(check_alternative_laws::<Octonion>(200, 1, p).unwrap().is_holds());
        assert!(check_alternator_antisymmetry::<Octonion>(200, 1, p).unwrap().is_holds());
        assert!(check_inverse_identities::<Octonion>(200, 1, p).unwrap().is_holds());
        assert!(check_four_identity::<Octonion>(200, 1, p).unwrap().is_holds());
    }

    #[test]
    fn rational_four_identity_is_trivial() {
        assert!(check_four_identity::<Rational>(50, 3, Precision::default()).unwrap().is_holds());
    }

    #[test]
    fn hilbert_alternative_laws_hold() {
        let p = Precision { t_terms: 6, s_terms: 6 };
        assert!(check_alternative_laws::<HilbertElement>(20, 2, p).unwrap().is_holds());
    }

    #[test]
    fn monotonicity_needs_order() {
        let e = check_monotonicity::<Quaternion>(5, 0, Precision::default()).unwrap_err();
        assert!(matches!(e, Error::Capability(_)));
        assert!(check_monotonicity::<Rational>(100, 0, Precision::default()).unwrap().is_holds());
    }

    #[test]
    fn commuting_triples() {
        assert!(check_commuting_triple_associates(200, 5).unwrap().is_holds());
    }

    #[test]
    fn law_names_round_trip() {
        for l in Law::ALL {
            assert_eq!(l.name().parse::<Law>().unwrap(), l);
        }
    }
}
