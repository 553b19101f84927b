//! Segment arithmetic by ruler-and-parallel constructions inside a
//! coordinate plane.
//!
//! Every operation works on points of the x-axis and uses only `join`,
//! `meet` and parallels, so comparing its result with the algebraic
//! operation tests the plane against its own coordinates. The y-axis copy
//! `y_a` of `x_a` is fixed by `y_e x_e ∥ y_a x_a`.
//!
//! Product order: the construction draws the parallel to `y_e x_a`
//! through `y_b` and reads off `x_c`. Replayed over the octonions with
//! `a = e1`, `b = e2` it yields `e3 = e1·e2`, so `geometric_mul(a, b)`
//! realizes the algebraic product `a·b` in both plane models.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numbersystems::{Precision, Sample, Scalar};
use crate::planes::{ExtPoint, Plane, Point, SkewLine};
use crate::report::svg::SvgScene;
use crate::report::{split_seed, SuiteReport, Verdict, Witness};
use crate::scalars::Rational;

/// Two axes through `O`, each with a unit point.
#[derive(Clone, Debug)]
pub struct AxisFrame<P: Plane> {
    pub origin: Point<P::S>,
    pub x_unit: Point<P::S>,
    pub y_unit: Point<P::S>,
    pub x_axis: P::Line,
    pub y_axis: P::Line,
}

impl<P: Plane> AxisFrame<P> {
    /// The axes `O x_unit` and `O y_unit`. The coordinate of a point of an
    /// axis is its offset from `O` in units of the axis vector; this is
    /// exact for unit vectors with rational components.
    pub fn new(plane: &P, origin: Point<P::S>, x_unit: Point<P::S>, y_unit: Point<P::S>) -> Result<Self> {
        let x_axis = plane.join(&origin, &x_unit)?;
        let y_axis = plane.join(&origin, &y_unit)?;
        if plane.same_line(&x_axis, &y_axis) {
            return Err(Error::domain("the axes coincide"));
        }
        Ok(AxisFrame { origin, x_unit, y_unit, x_axis, y_axis })
    }

    /// `O = (0, 0)`, `x_e = (1, 0)`, `y_e = (0, 1)`.
    pub fn standard(plane: &P, one: &P::S) -> Self {
        let zero = one.zero_like();
        let pt = |x: &P::S, y: &P::S| Point::new(x.clone(), y.clone());
        AxisFrame::new(plane, pt(&zero, &zero), pt(one, &zero), pt(&zero, one)).expect("standard axes are distinct")
    }

    fn along(&self, unit: &Point<P::S>, a: &P::S) -> Point<P::S> {
        let o = &self.origin;
        Point::new(o.x.add(&unit.x.sub(&o.x).mul(a)), o.y.add(&unit.y.sub(&o.y).mul(a)))
    }

    fn coord(&self, unit: &Point<P::S>, p: &Point<P::S>) -> Result<P::S> {
        let o = &self.origin;
        let dx = unit.x.sub(&o.x);
        if !dx.is_zero() {
            return Ok(dx.inv()?.mul(&p.x.sub(&o.x)));
        }
        unit.y.sub(&o.y).inv().map(|d| d.mul(&p.y.sub(&o.y)))
    }

    pub fn x_point(&self, a: &P::S) -> Point<P::S> {
        self.along(&self.x_unit, a)
    }

    pub fn y_point(&self, a: &P::S) -> Point<P::S> {
        self.along(&self.y_unit, a)
    }

    pub fn x_coord(&self, p: &Point<P::S>) -> Result<P::S> {
        self.coord(&self.x_unit, p)
    }
}

/// Points and lines of one construction, in drawing order.
#[derive(Clone, Debug)]
pub struct Construction<P: Plane> {
    pub result: P::S,
    pub points: Vec<(String, Point<P::S>)>,
    pub lines: Vec<(String, P::Line)>,
}

struct Tracer<'a, P: Plane> {
    plane: &'a P,
    points: Vec<(String, Point<P::S>)>,
    lines: Vec<(String, P::Line)>,
}

impl<'a, P: Plane> Tracer<'a, P> {
    fn new(plane: &'a P) -> Self {
        Tracer { plane, points: Vec::new(), lines: Vec::new() }
    }

    fn point(&mut self, label: &str, p: Point<P::S>) -> Point<P::S> {
        self.points.push((label.to_string(), p.clone()));
        p
    }

    fn line(&mut self, label: &str, l: P::Line) -> P::Line {
        self.lines.push((label.to_string(), l.clone()));
        l
    }

    fn join(&mut self, label: &str, p: &Point<P::S>, q: &Point<P::S>) -> Result<P::Line> {
        let l = named(self.plane.join(p, q), label)?;
        Ok(self.line(label, l))
    }

    fn parallel(&mut self, label: &str, to: &P::Line, through: &Point<P::S>) -> P::Line {
        let l = self.plane.parallel_through(to, through);
        self.line(label, l)
    }

    fn meet(&mut self, label: &str, l: &P::Line, m: &P::Line) -> Result<Point<P::S>> {
        let p = named(self.plane.meet(l, m), label)?;
        let p = match p {
            ExtPoint::Proper(p) => p,
            ExtPoint::Ideal(_) => return Err(Error::degenerate(format!("{label} is at infinity"))),
        };
        Ok(self.point(label, p))
    }

    fn finish(self, result: P::S) -> Construction<P> {
        Construction { result, points: self.points, lines: self.lines }
    }
}

fn named<T>(r: Result<T>, step: &str) -> Result<T> {
    r.map_err(|e| match e {
        Error::Domain(msg) => Error::degenerate(format!("{step}: {msg}")),
        other => other,
    })
}

/// `y_a` from `y_e x_e ∥ y_a x_a`.
fn to_y<P: Plane>(t: &mut Tracer<'_, P>, f: &AxisFrame<P>, xa: &Point<P::S>, label: &str) -> Result<Point<P::S>> {
    let ee = t.join("y_e x_e", &f.y_unit, &f.x_unit)?;
    let l = t.parallel(&format!("{label} ∥ y_e x_e"), &ee, xa);
    t.meet(label, &l, &f.y_axis)
}

/// The inverse transfer `y_a ↦ x_a`.
fn to_x<P: Plane>(t: &mut Tracer<'_, P>, f: &AxisFrame<P>, ya: &Point<P::S>, label: &str) -> Result<Point<P::S>> {
    let ee = t.join("y_e x_e", &f.y_unit, &f.x_unit)?;
    let l = t.parallel(&format!("{label} ∥ y_e x_e"), &ee, ya);
    t.meet(label, &l, &f.x_axis)
}

/// `g` is the parallel to the x-axis through the y-axis point at height
/// `aux_height`, meeting the y-axis at `P`; the parallel to the y-axis
/// through `b` meets `g` at `Q`; the parallel to `Pa` through `Q` meets the
/// x-axis at `c = a + b`.
pub fn geometric_add_traced<P: Plane>(
    plane: &P,
    f: &AxisFrame<P>,
    a: &P::S,
    b: &P::S,
    aux_height: &P::S,
) -> Result<Construction<P>> {
    let mut t = Tracer::new(plane);
    let xa = t.point("a", f.x_point(a));
    let xb = t.point("b", f.x_point(b));
    let p = t.point("P", f.y_point(aux_height));
    let g = t.parallel("g", &f.x_axis, &p);
    if plane.same_line(&g, &f.x_axis) {
        return Err(Error::degenerate("g is the x-axis"));
    }
    let vb = t.parallel("parallel to the y-axis through b", &f.y_axis, &xb);
    let q = t.meet("Q", &vb, &g)?;
    let pa = t.join("Pa", &p, &xa)?;
    let qc = t.parallel("Qc ∥ Pa", &pa, &q);
    let c = t.meet("c", &qc, &f.x_axis)?;
    let r = f.x_coord(&c)?;
    Ok(t.finish(r))
}

pub fn geometric_add<P: Plane>(plane: &P, f: &AxisFrame<P>, a: &P::S, b: &P::S, aux_height: &P::S) -> Result<P::S> {
    Ok(geometric_add_traced(plane, f, a, b, aux_height)?.result)
}

/// The line through `O` parallel to `Pa` meets `g` at `Q`; the parallel to
/// the y-axis through `Q` meets the x-axis at `−a`, so that `(−a) + a`
/// lands on `O`.
pub fn geometric_neg_traced<P: Plane>(plane: &P, f: &AxisFrame<P>, a: &P::S) -> Result<Construction<P>> {
    let mut t = Tracer::new(plane);
    let xa = t.point("a", f.x_point(a));
    let p = t.point("P", f.y_unit.clone());
    let g = t.parallel("g", &f.x_axis, &p);
    let pa = t.join("Pa", &p, &xa)?;
    let oq = t.parallel("OQ ∥ Pa", &pa, &f.origin);
    let q = t.meet("Q", &oq, &g)?;
    let vq = t.parallel("parallel to the y-axis through Q", &f.y_axis, &q);
    let c = t.meet("-a", &vq, &f.x_axis)?;
    let r = f.x_coord(&c)?;
    Ok(t.finish(r))
}

pub fn geometric_neg<P: Plane>(plane: &P, f: &AxisFrame<P>, a: &P::S) -> Result<P::S> {
    Ok(geometric_neg_traced(plane, f, a)?.result)
}

/// The parallel to `y_e x_a` through `y_b` cuts the x-axis at `x_c`.
pub fn geometric_mul_traced<P: Plane>(plane: &P, f: &AxisFrame<P>, a: &P::S, b: &P::S) -> Result<Construction<P>> {
    let mut t = Tracer::new(plane);
    let xa = t.point("x_a", f.x_point(a));
    let xb = t.point("x_b", f.x_point(b));
    let yb = if b.is_zero() { f.origin.clone() } else { to_y(&mut t, f, &xb, "y_b")? };
    let ea = if a.is_zero() { f.y_axis.clone() } else { t.join("y_e x_a", &f.y_unit, &xa)? };
    let c = if yb.same(&f.origin) {
        t.point("x_c", f.origin.clone())
    } else {
        let l = t.parallel("y_b x_c ∥ y_e x_a", &ea, &yb);
        t.meet("x_c", &l, &f.x_axis)?
    };
    let r = f.x_coord(&c)?;
    Ok(t.finish(r))
}

pub fn geometric_mul<P: Plane>(plane: &P, f: &AxisFrame<P>, a: &P::S, b: &P::S) -> Result<P::S> {
    Ok(geometric_mul_traced(plane, f, a, b)?.result)
}

/// The parallel to `x_a y_e` through `x_e` cuts the y-axis at `y_{a⁻¹}`,
/// which is carried back to the x-axis.
pub fn geometric_recip_traced<P: Plane>(plane: &P, f: &AxisFrame<P>, a: &P::S) -> Result<Construction<P>> {
    if a.is_zero() {
        return Err(Error::domain("reciprocal of zero"));
    }
    let mut t = Tracer::new(plane);
    let xa = t.point("x_a", f.x_point(a));
    let ae = t.join("x_a y_e", &xa, &f.y_unit)?;
    let l = t.parallel("x_e y ∥ x_a y_e", &ae, &f.x_unit);
    let y_inv = t.meet("y_a⁻¹", &l, &f.y_axis)?;
    let x_inv = to_x(&mut t, f, &y_inv, "x_a⁻¹")?;
    let r = f.x_coord(&x_inv)?;
    Ok(t.finish(r))
}

pub fn geometric_recip<P: Plane>(plane: &P, f: &AxisFrame<P>, a: &P::S) -> Result<P::S> {
    Ok(geometric_recip_traced(plane, f, a)?.result)
}

/// The four segment operations by name, for drivers and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SegOp {
    Add,
    Mul,
    Neg,
    Recip,
}

impl SegOp {
    pub const ALL: [SegOp; 4] = [SegOp::Add, SegOp::Mul, SegOp::Neg, SegOp::Recip];

    pub fn name(self) -> &'static str {
        match self {
            SegOp::Add => "add",
            SegOp::Mul => "mul",
            SegOp::Neg => "neg",
            SegOp::Recip => "recip",
        }
    }
}

impl fmt::Display for SegOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Geometric result and algebraic value of `op` on `(a, b)`; unary
/// operations ignore `b`. Addition uses height one.
pub fn both_ways<P: Plane>(plane: &P, f: &AxisFrame<P>, op: SegOp, a: &P::S, b: &P::S) -> Result<(P::S, P::S)> {
    let one = a.one_like();
    Ok(match op {
        SegOp::Add => (geometric_add(plane, f, a, b, &one)?, a.add(b)),
        SegOp::Mul => (geometric_mul(plane, f, a, b)?, a.mul(b)),
        SegOp::Neg => (geometric_neg(plane, f, a)?, a.neg()),
        SegOp::Recip => (geometric_recip(plane, f, a)?, a.inv()?),
    })
}

/// Verdict for sample `index` of the segment-calculus suite: the four
/// operations on random `a`, `b` in the standard frame, each compared
/// with the algebraic value.
pub fn segcalc_verdict<P: Plane>(plane: &P, seed: u64, index: u64, prec: Precision) -> Result<Verdict>
where
    P::S: Sample,
{
    let mut rng = ChaCha8Rng::seed_from_u64(split_seed(seed, index));
    let a = P::S::sample_nonzero(&mut rng, prec);
    let b = P::S::sample(&mut rng, prec);
    let f = AxisFrame::standard(plane, &a.one_like());
    for op in SegOp::ALL {
        let (geo, alg) = match both_ways(plane, &f, op, &a, &b) {
            Ok(v) => v,
            Err(e) => return Verdict::from_error(e),
        };
        if !geo.same(&alg) {
            let w = Witness::new()
                .with("op", op)
                .with("a", &a)
                .with("b", &b)
                .with("geometric", &geo)
                .with("algebraic", &alg);
            return Ok(Verdict::fails(w, "construction disagrees with the algebra"));
        }
    }
    Ok(Verdict::holds("add, mul, neg, recip"))
}

pub fn run_segcalc_suite<P: Plane>(plane: &P, n: u64, seed: u64, prec: Precision) -> Result<SuiteReport>
where
    P::S: Sample,
{
    if n == 0 {
        return Err(Error::domain("suite needs n >= 1"));
    }
    let verdicts =
        (0..n).into_par_iter().map(|i| segcalc_verdict(plane, seed, i, prec)).collect::<Result<Vec<Verdict>>>()?;
    Ok(SuiteReport::new("segcalc", "all-ops", &plane.system(), n, seed).absorb(&verdicts))
}

/// Drawing of a construction in the rational plane.
pub fn trace_svg(title: &str, c: &Construction<crate::planes::SkewPlane<Rational>>) -> String {
    let mut scene = SvgScene::new(title);
    for (label, l) in &c.lines {
        let stroke = if label.contains('∥') { "#c0392b" } else { "#555555" };
        scene.line(l as &SkewLine<Rational>, stroke);
    }
    for (label, p) in &c.points {
        scene.point(p, label.clone());
    }
    scene.render()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbersystems::Octonion;
    use crate::planes::{AltPlane, SkewPlane};

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn rational_examples() {
        let pl = SkewPlane::<Rational>::new();
        let f = AxisFrame::standard(&pl, &r(1));
        assert_eq!(geometric_add(&pl, &f, &r(2), &r(3), &r(1)).unwrap(), r(5));
        assert_eq!(geometric_add(&pl, &f, &r(2), &r(3), &r(-4)).unwrap(), r(5));
        assert_eq!(geometric_add(&pl, &f, &r(7), &r(0), &r(1)).unwrap(), r(7));
        assert_eq!(geometric_mul(&pl, &f, &r(2), &r(3)).unwrap(), r(6));
        assert_eq!(geometric_mul(&pl, &f, &r(5), &r(1)).unwrap(), r(5));
        assert_eq!(geometric_neg(&pl, &f, &r(3)).unwrap(), r(-3));
        assert_eq!(geometric_recip(&pl, &f, &r(3)).unwrap(), Rational::new(1, 3).unwrap());
        assert_eq!(geometric_recip(&pl, &f, &r(1)).unwrap(), r(1));
    }

    #[test]
    fn zero_height_is_degenerate() {
        let pl = SkewPlane::<Rational>::new();
        let f = AxisFrame::standard(&pl, &r(1));
        assert!(matches!(geometric_add(&pl, &f, &r(2), &r(3), &r(0)), Err(Error::Degenerate { .. })));
        assert!(matches!(geometric_recip(&pl, &f, &r(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn octonion_product_order() {
        let pl = AltPlane::<Octonion>::new();
        let f = AxisFrame::standard(&pl, &Octonion::one());
        let (e1, e2) = (Octonion::unit(1), Octonion::unit(2));
        let c = geometric_mul(&pl, &f, &e1, &e2).unwrap();
        assert_eq!(c, Octonion::unit(3));
        assert_eq!(c, e1.mul(&e2));
        assert_ne!(c, e2.mul(&e1));
    }

    #[test]
    fn octonion_examples() {
        let pl = AltPlane::<Octonion>::new();
        let f = AxisFrame::standard(&pl, &Octonion::one());
        let (e1, e2) = (Octonion::unit(1), Octonion::unit(2));
        assert_eq!(geometric_add(&pl, &f, &e1, &e2, &Octonion::one()).unwrap(), e1.add(&e2));
        assert_eq!(geometric_neg(&pl, &f, &e1).unwrap(), e1.neg());
        assert_eq!(geometric_recip(&pl, &f, &e1).unwrap(), e1.neg());
    }

    #[test]
    fn skewed_frame() {
        let pl = SkewPlane::<Rational>::new();
        let pt = |x, y| Point::new(r(x), r(y));
        let f = AxisFrame::new(&pl, pt(1, 1), pt(3, 2), pt(0, 4)).unwrap();
        assert_eq!(geometric_add(&pl, &f, &r(2), &r(-5), &r(1)).unwrap(), r(-3));
        assert_eq!(geometric_mul(&pl, &f, &r(2), &r(-5)).unwrap(), r(-10));
        assert_eq!(geometric_recip(&pl, &f, &r(4)).unwrap(), Rational::new(1, 4).unwrap());
    }

    #[test]
    fn svg_trace_is_stable() {
        let pl = SkewPlane::<Rational>::new();
        let f = AxisFrame::standard(&pl, &r(1));
        let c = geometric_add_traced(&pl, &f, &r(2), &r(3), &r(1)).unwrap();
        let a = trace_svg("2 + 3", &c);
        assert_eq!(a, trace_svg("2 + 3", &c));
        assert!(a.starts_with("<?xml"));
        assert_eq!(a.matches("<polyline").count(), c.lines.len());
    }
}
