use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{canonical_aux, fourth_harmonic, harmonic_check, HarmonicAux};
use crate::error::{Error, Result};
use crate::numbersystems::{Precision, Sample};
use crate::planes::{Direction, ExtPoint, Plane, Point};
use crate::report::{split_seed, SuiteReport, Verdict, Witness};

/// Three distinct points on a random line.
pub fn random_triple<P: Plane, R: Rng>(plane: &P, rng: &mut R, prec: Precision) -> Result<[Point<P::S>; 3]>
where
    P::S: Sample,
{
    let pt = |rng: &mut R| Point::new(P::S::sample_coord(rng, prec), P::S::sample_coord(rng, prec));
    let p = pt(rng);
    let q = loop {
        let q = pt(rng);
        if !q.same(&p) {
            break q;
        }
    };
    let mut out: Vec<Point<P::S>> = vec![p.clone()];
    for _ in 0..100 {
        let x = plane.point_on_join(&p, &q, &P::S::sample(rng, prec))?;
        if !out.iter().any(|y| y.same(&x)) {
            out.push(x);
        }
        if out.len() == 3 {
            return Ok([out[0].clone(), out[1].clone(), out[2].clone()]);
        }
    }
    Err(Error::degenerate("could not draw three distinct collinear points"))
}

/// A random line `s` through `C` other than `AB`, and a random `O` off
/// both lines, such that the construction does not degenerate.
pub fn random_aux<P: Plane, R: Rng>(
    plane: &P,
    rng: &mut R,
    a: &Point<P::S>,
    b: &Point<P::S>,
    c: &Point<P::S>,
    prec: Precision,
) -> Result<HarmonicAux<P::Line, P::S>>
where
    P::S: Sample,
{
    let ab = plane.join(a, b)?;
    for _ in 0..50 {
        let dir = if rng.random_ratio(1, 8) { Direction::Vertical } else { Direction::Slope(P::S::sample(rng, prec)) };
        if dir.same(&plane.direction(&ab)) {
            continue;
        }
        let s = plane.line_through_dir(c, &dir);
        let o = Point::new(P::S::sample_coord(rng, prec), P::S::sample_coord(rng, prec));
        let aux = HarmonicAux { s, o };
        match fourth_harmonic(plane, a, b, c, &aux) {
            Ok(_) => return Ok(aux),
            Err(Error::Degenerate { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::degenerate("no generic random aux found"))
}

/// Auxiliary choices compared per sample in the suite.
const AUX_PER_SAMPLE: usize = 5;

fn sample_verdict<P: Plane>(plane: &P, rng: &mut ChaCha8Rng, prec: Precision) -> Result<Verdict>
where
    P::S: Sample,
{
    let [a, b, c] = random_triple(plane, rng, prec)?;
    let d = fourth_harmonic(plane, &a, &b, &c, &canonical_aux(plane, &a, &b, &c)?)?;
    let base = || Witness::new().with("A", &a).with("B", &b).with("C", &c).with("D", &d);
    for _ in 0..AUX_PER_SAMPLE {
        let aux = random_aux(plane, rng, &a, &b, &c, prec)?;
        let d2 = fourth_harmonic(plane, &a, &b, &c, &aux)?;
        if !d2.same(&d) {
            let w = base().with("O", &aux.o).with("s", &aux.s).with("D with this aux", &d2);
            return Ok(Verdict::fails(w, "fourth harmonic depends on the auxiliary choice"));
        }
    }
    let swapped = fourth_harmonic(plane, &b, &a, &c, &canonical_aux(plane, &b, &a, &c)?)?;
    if !swapped.same(&d) {
        return Ok(Verdict::fails(base().with("D for (B, A, C)", &swapped), "exchanging A and B moves D"));
    }
    if !harmonic_check(plane, &a, &b, &c, &d)? {
        return Ok(Verdict::fails(base(), "constructed D is not recognised as harmonic"));
    }
    if let ExtPoint::Proper(dp) = &d {
        // C and D play symmetric roles
        let back = fourth_harmonic(plane, &a, &b, dp, &canonical_aux(plane, &a, &b, dp)?)?;
        if !back.same(&ExtPoint::Proper(c.clone())) {
            return Ok(Verdict::fails(base().with("conjugate of D", &back), "C is not the conjugate of D"));
        }
    }
    Ok(Verdict::holds("fourth harmonic"))
}

/// Verdict for sample `index` of the harmonic suite.
pub fn harmonic_verdict<P: Plane>(plane: &P, seed: u64, index: u64, prec: Precision) -> Result<Verdict>
where
    P::S: Sample,
{
    let mut rng = ChaCha8Rng::seed_from_u64(split_seed(seed, index));
    match sample_verdict(plane, &mut rng, prec) {
        Ok(v) => Ok(v),
        Err(e) => Verdict::from_error(e),
    }
}

/// Aux independence, pair exchange, recognition and the `C ↔ D` symmetry
/// on `n` random collinear triples.
pub fn run_harmonic_suite<P: Plane>(plane: &P, n: u64, seed: u64, prec: Precision) -> Result<SuiteReport>
where
    P::S: Sample,
{
    if n == 0 {
        return Err(Error::domain("suite needs n >= 1"));
    }
    let verdicts =
        (0..n).into_par_iter().map(|i| harmonic_verdict(plane, seed, i, prec)).collect::<Result<Vec<Verdict>>>()?;
    Ok(SuiteReport::new("harmonic", "fourth-harmonic", &plane.system(), n, seed).absorb(&verdicts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbersystems::{Octonion, Quaternion};
    use crate::planes::{AltPlane, SkewPlane};
    use crate::scalars::Rational;

    #[test]
    fn rational_suite_holds() {
        let r = run_harmonic_suite(&SkewPlane::<Rational>::new(), 100, 2, Precision::default()).unwrap();
        assert_eq!(r.fails, 0, "{r}");
        assert!(r.holds >= 90, "{r}");
    }

    #[test]
    fn skew_and_alternative_suites_hold() {
        let r = run_harmonic_suite(&SkewPlane::<Quaternion>::new(), 40, 2, Precision::default()).unwrap();
        assert_eq!(r.fails, 0, "{r}");
        let r = run_harmonic_suite(&AltPlane::<Octonion>::new(), 40, 2, Precision::default()).unwrap();
        assert_eq!(r.fails, 0, "{r}");
        assert!(r.holds >= 30, "{r}");
    }
}
