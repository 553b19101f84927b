//! Joining a point `P` to the meet of two lines without using that meet.

use rand::Rng;

use crate::error::{Error, Result};
use crate::numbersystems::{Precision, Sample};
use crate::planes::{join_ext, ExtPoint, Plane, Point, SkewLine, SkewPlane};
use crate::scalars::Rational;

/// Free choices for the perspective construction: `A`, `A'` on `g`,
/// `B`, `B'` on `h`, and `O` on the line `AP`.
#[derive(Clone, Debug)]
pub struct D0Aux<S> {
    pub a: Point<S>,
    pub a2: Point<S>,
    pub b: Point<S>,
    pub b2: Point<S>,
    pub o: Point<S>,
}

impl<S: Sample> D0Aux<S> {
    /// Random auxiliary points; may be degenerate, which the construction
    /// reports.
    pub fn sample<P: Plane<S = S>, R: Rng>(
        plane: &P,
        g: &P::Line,
        h: &P::Line,
        p: &Point<S>,
        rng: &mut R,
        prec: Precision,
    ) -> Result<Self> {
        let mut r = || S::sample_coord(rng, prec);
        let a = plane.point_on(g, &r());
        let a2 = plane.point_on(g, &r());
        let b = plane.point_on(h, &r());
        let b2 = plane.point_on(h, &r());
        let ap = plane.join(&a, p)?;
        let o = plane.point_on(&ap, &r());
        Ok(D0Aux { a, a2, b, b2, o })
    }
}

fn named<T>(r: Result<T>, step: &str) -> Result<T> {
    r.map_err(|e| match e {
        Error::Domain(msg) => Error::degenerate(format!("{step}: {msg}")),
        other => other,
    })
}

fn check_lines<P: Plane>(plane: &P, g: &P::Line, h: &P::Line, p: &Point<P::S>) -> Result<()> {
    if plane.parallel(g, h) {
        return Err(Error::domain("g and h are parallel"));
    }
    if plane.on_line(p, g) || plane.on_line(p, h) {
        return Err(Error::domain("P lies on g or h"));
    }
    Ok(())
}

/// With `R = AB∩A'B'`, `Q = PB∩RO` and `P' = B'Q∩OA'`, the triangles
/// `ABP` and `A'B'P'` are axial with axis `RO`; where Desargues holds they
/// are perspective and the returned line `PP'` passes through `g∩h`.
pub fn connect_inaccessible_d0<P: Plane>(
    plane: &P,
    g: &P::Line,
    h: &P::Line,
    p: &Point<P::S>,
    aux: &D0Aux<P::S>,
) -> Result<P::Line> {
    check_lines(plane, g, h, p)?;
    let D0Aux { a, a2, b, b2, o } = aux;
    for (name, pt, l) in [("A", a, g), ("A'", a2, g), ("B", b, h), ("B'", b2, h)] {
        if !plane.on_line(pt, l) {
            return Err(Error::domain(format!("{name} is off its line")));
        }
    }
    if plane.on_line(o, g) || plane.on_line(o, h) {
        return Err(Error::degenerate("O lies on g or h"));
    }
    if o.same(p) {
        return Err(Error::degenerate("O coincides with P"));
    }
    if !plane.on_line(o, &named(plane.join(a, p), "AP")?) {
        return Err(Error::domain("O is off the line AP"));
    }
    let pe = |x: &Point<P::S>| ExtPoint::Proper(x.clone());
    let ab = named(plane.join(a, b), "AB")?;
    let ab2 = named(plane.join(a2, b2), "A'B'")?;
    let r = named(plane.meet(&ab, &ab2), "R = AB ∩ A'B'")?;
    let ro = named(join_ext(plane, &r, &pe(o)), "RO")?;
    let pb = named(plane.join(p, b), "PB")?;
    let q = named(plane.meet(&pb, &ro), "Q = PB ∩ RO")?;
    let b2q = named(join_ext(plane, &pe(b2), &q), "B'Q")?;
    let oa2 = named(plane.join(o, a2), "OA'")?;
    let p2 = named(plane.meet(&b2q, &oa2), "P' = B'Q ∩ OA'")?;
    if p2.proper().is_some_and(|x| x.same(p)) {
        return Err(Error::degenerate("P' coincides with P"));
    }
    named(join_ext(plane, &pe(p), &p2), "PP'")
}

/// Mirror image of `p` in `l` under the Euclidean metric.
pub fn reflect(l: &SkewLine<Rational>, p: &Point<Rational>) -> Point<Rational> {
    let (a, b, c) = l.coeffs();
    let k = &(&(a * &p.x) + &(b * &p.y)) + c;
    let k = &(&k * &Rational::from(2)) / &(&(a * a) + &(b * b));
    Point::new(&p.x - &(&k * a), &p.y - &(&k * b))
}

/// `Q1` is `P` reflected in `h` then `g`, `Q2` is `P` reflected in `g`
/// then `h`; reflecting `P` in `Q1Q2` gives `P'`, and `PP'` passes
/// through `g∩h`. Perpendicular `g`, `h` make `Q1 = Q2`, which is
/// degenerate.
pub fn connect_inaccessible_hjelmslev(
    g: &SkewLine<Rational>,
    h: &SkewLine<Rational>,
    p: &Point<Rational>,
) -> Result<SkewLine<Rational>> {
    let plane = SkewPlane::<Rational>::new();
    check_lines(&plane, g, h, p)?;
    let q1 = reflect(g, &reflect(h, p));
    let q2 = reflect(h, &reflect(g, p));
    if q1 == q2 {
        return Err(Error::degenerate("Q1 = Q2, so s = Q1Q2 is undefined"));
    }
    let s = plane.join(&q1, &q2)?;
    let p2 = reflect(&s, p);
    if &p2 == p {
        return Err(Error::degenerate("P' = P"));
    }
    plane.join(p, &p2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point<Rational> {
        Point::new(Rational::from(x), Rational::from(y))
    }

    fn lines() -> (SkewPlane<Rational>, SkewLine<Rational>, SkewLine<Rational>) {
        let pl = SkewPlane::<Rational>::new();
        let g = pl.join(&pt(0, 0), &pt(1, 0)).unwrap();
        let h = pl.join(&pt(0, 0), &pt(1, 1)).unwrap();
        (pl, g, h)
    }

    #[test]
    fn d0_fixed_aux_passes_origin() {
        let (pl, g, h) = lines();
        let p = pt(1, 2);
        let a = pt(2, 0);
        let ap = pl.join(&a, &p).unwrap();
        let aux = D0Aux { a, a2: pt(5, 0), b: pt(1, 1), b2: pt(3, 3), o: pl.point_on(&ap, &Rational::from(4)) };
        let l = connect_inaccessible_d0(&pl, &g, &h, &p, &aux).unwrap();
        assert!(pl.on_line(&pt(0, 0), &l));
        assert!(pl.on_line(&p, &l));
    }

    #[test]
    fn d0_center_on_g_is_degenerate() {
        let (pl, g, h) = lines();
        let aux = D0Aux { a: pt(2, 0), a2: pt(5, 0), b: pt(1, 1), b2: pt(3, 3), o: pt(2, 0) };
        let e = connect_inaccessible_d0(&pl, &g, &h, &pt(1, 2), &aux).unwrap_err();
        assert!(matches!(e, Error::Degenerate { .. }));
    }

    #[test]
    fn hjelmslev_passes_origin() {
        let (pl, g, h) = lines();
        let l = connect_inaccessible_hjelmslev(&g, &h, &pt(1, 2)).unwrap();
        assert!(pl.on_line(&pt(0, 0), &l));
    }

    #[test]
    fn hjelmslev_perpendicular_lines_degenerate() {
        let pl = SkewPlane::<Rational>::new();
        let g = pl.join(&pt(0, 0), &pt(1, 0)).unwrap();
        let h = pl.join(&pt(0, 0), &pt(0, 1)).unwrap();
        assert!(matches!(connect_inaccessible_hjelmslev(&g, &h, &pt(1, 2)), Err(Error::Degenerate { .. })));
    }
}
