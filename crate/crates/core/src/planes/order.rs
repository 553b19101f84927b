//! Sampled order axioms: betweenness on a line and Pasch's axiom.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{between, pasch_check, Plane, Point};
use crate::error::{Error, Result};
use crate::numbersystems::{Precision, Sample, Scalar};
use crate::report::{split_seed, SuiteReport, Verdict, Witness};
use crate::scalars::Rational;

fn sample_point<P: Plane>(rng: &mut ChaCha8Rng, prec: Precision) -> Point<P::S>
where
    P::S: Sample,
{
    Point::new(P::S::sample_coord(rng, prec), P::S::sample_coord(rng, prec))
}

fn distinct_points<P: Plane>(rng: &mut ChaCha8Rng, prec: Precision, k: usize) -> Result<Vec<Point<P::S>>>
where
    P::S: Sample,
{
    let mut out: Vec<Point<P::S>> = Vec::with_capacity(k);
    for _ in 0..100 * k {
        let p = sample_point::<P>(rng, prec);
        if !out.iter().any(|q| q.same(&p)) {
            out.push(p);
            if out.len() == k {
                return Ok(out);
            }
        }
    }
    Err(Error::degenerate("could not draw distinct points"))
}

/// Exactly one of three distinct collinear points lies between the others.
fn trichotomy<P: Plane>(plane: &P, rng: &mut ChaCha8Rng, prec: Precision) -> Result<Option<Witness>>
where
    P::S: Sample,
{
    let pq = distinct_points::<P>(rng, prec, 2)?;
    let mut pts: Vec<Point<P::S>> = Vec::new();
    for _ in 0..100 {
        let r = P::S::sample(rng, prec);
        let x = plane.point_on_join(&pq[0], &pq[1], &r)?;
        if !pts.iter().any(|q| q.same(&x)) {
            pts.push(x);
        }
        if pts.len() == 3 {
            break;
        }
    }
    let [a, b, c] = <[Point<P::S>; 3]>::try_from(pts).map_err(|_| Error::degenerate("collinear triple"))?;
    let count = [between(plane, &a, &b, &c)?, between(plane, &b, &c, &a)?, between(plane, &c, &a, &b)?]
        .iter()
        .filter(|&&x| x)
        .count();
    Ok((count != 1)
        .then(|| Witness::new().with("A", &a).with("B", &b).with("C", &c).with("points between the others", count)))
}

/// Pasch for a random triangle and a line through the midpoint of `AB`
/// when that midpoint is on the line `AB`, otherwise a random line.
fn pasch<P: Plane>(plane: &P, rng: &mut ChaCha8Rng, prec: Precision) -> Result<Verdict>
where
    P::S: Sample,
{
    let v = distinct_points::<P>(rng, prec, 4)?;
    let (a, b, c, y) = (&v[0], &v[1], &v[2], &v[3]);
    let half = Rational::new(1, 2).expect("nonzero denominator");
    let mid = Point::new(a.x.add(&b.x).scale(&half), a.y.add(&b.y).scale(&half));
    let x = if plane.on_line(&mid, &plane.join(a, b)?) && !mid.same(y) { mid } else { v[2].clone() };
    let through = if x.same(y) { sample_point::<P>(rng, prec) } else { y.clone() };
    let l = plane.join(&x, &through)?;
    pasch_check(plane, a, b, c, &l)
}

/// Verdict for sample `index` of the order suite.
pub fn order_verdict<P: Plane>(plane: &P, seed: u64, index: u64, prec: Precision) -> Result<Verdict>
where
    P::S: Sample,
{
    plane.descriptor().require_ordered("betweenness")?;
    let mut rng = ChaCha8Rng::seed_from_u64(split_seed(seed, index));
    let body = |rng: &mut ChaCha8Rng| -> Result<Verdict> {
        if let Some(w) = trichotomy(plane, rng, prec)? {
            return Ok(Verdict::fails(w, "betweenness trichotomy violated"));
        }
        let p = pasch(plane, rng, prec)?;
        if p.is_fails() {
            return Ok(p);
        }
        Ok(Verdict::holds("betweenness and Pasch"))
    };
    match body(&mut rng) {
        Ok(v) => Ok(v),
        Err(e) => Verdict::from_error(e),
    }
}

/// `n` samples of the order axioms, folded in sample order.
pub fn run_order_suite<P: Plane>(plane: &P, n: u64, seed: u64, prec: Precision) -> Result<SuiteReport>
where
    P::S: Sample,
{
    if n == 0 {
        return Err(Error::domain("suite needs n >= 1"));
    }
    plane.descriptor().require_ordered("betweenness")?;
    let verdicts =
        (0..n).into_par_iter().map(|i| order_verdict(plane, seed, i, prec)).collect::<Result<Vec<Verdict>>>()?;
    Ok(SuiteReport::new("between", "order", &plane.system(), n, seed).absorb(&verdicts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::numbersystems::{Octonion, RatFunc};
    use crate::planes::{AltPlane, MoultonPlane, SkewPlane};

    #[test]
    fn ordered_planes_hold() {
        let p = Precision::default();
        let r = run_order_suite(&SkewPlane::<Rational>::new(), 200, 5, p).unwrap();
        assert_eq!(r.fails, 0);
        assert!(r.holds > 150, "{r}");
        let r = run_order_suite(&SkewPlane::<RatFunc>::new(), 50, 5, p).unwrap();
        assert_eq!(r.fails, 0);
        let r = run_order_suite(&MoultonPlane::new(), 200, 5, p).unwrap();
        assert_eq!(r.fails, 0);
    }

    #[test]
    fn octonions_are_rejected() {
        let e = run_order_suite(&AltPlane::<Octonion>::new(), 10, 5, Precision::default()).unwrap_err();
        assert!(matches!(e, Error::Capability(_)));
    }
}
