use std::fmt;
use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::numbersystems::{Scalar, SystemDescriptor};
use crate::planes::{Direction, ExtPoint, Plane, Point};
use crate::scalars::Sign;

/// `a·x + b·y + c = 0`, stored with the first nonzero of `a`, `b` scaled
/// to 1 by multiplying the whole equation on the left.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewLine<S> {
    a: S,
    b: S,
    c: S,
}

impl<S: Scalar> SkewLine<S> {
    pub fn new(a: S, b: S, c: S) -> Result<Self> {
        let lead = if !a.decide_zero()? {
            &a
        } else if !b.decide_zero()? {
            &b
        } else {
            return Err(Error::domain("line with a = b = 0"));
        };
        let lam = lead.inv()?;
        let (a, b, c) = (lam.mul(&a), lam.mul(&b), lam.mul(&c));
        // the lead is exactly one, even for truncated series
        let one = a.one_like();
        let (a, b) = if !a.is_zero() { (one, b) } else { (a.zero_like(), one) };
        // `b` decides between vertical and sloped
        b.decide_zero()?;
        Ok(SkewLine { a, b, c })
    }

    pub fn coeffs(&self) -> (&S, &S, &S) {
        (&self.a, &self.b, &self.c)
    }

    /// `a·x + b·y + c` at `p`.
    pub fn eval(&self, p: &Point<S>) -> S {
        self.a.mul(&p.x).add(&self.b.mul(&p.y)).add(&self.c)
    }

    fn x_led(&self) -> bool {
        !self.a.is_zero()
    }
}

impl<S: fmt::Display> fmt::Display for SkewLine<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})x + ({})y + ({}) = 0", self.a, self.b, self.c)
    }
}

/// The coordinate plane over an associative division ring.
#[derive(Clone, Copy, Debug, Default)]
pub struct SkewPlane<S> {
    _sys: PhantomData<fn() -> S>,
}

impl<S: Scalar> SkewPlane<S> {
    pub fn new() -> Self {
        SkewPlane { _sys: PhantomData }
    }
}

impl<S: Scalar> Plane for SkewPlane<S> {
    type S = S;
    type Line = SkewLine<S>;

    fn name(&self) -> String {
        format!("skew-plane/{}", S::KIND)
    }

    fn descriptor(&self) -> SystemDescriptor {
        S::descriptor()
    }

    fn join(&self, p: &Point<S>, q: &Point<S>) -> Result<SkewLine<S>> {
        let (same_x, same_y) = (p.x.decide_same(&q.x)?, p.y.decide_same(&q.y)?);
        if same_x && same_y {
            return Err(Error::domain(format!("join of identical points {p}")));
        }
        let one = p.x.one_like();
        let zero = p.x.zero_like();
        if same_x {
            return SkewLine::new(one, zero, p.x.neg());
        }
        if same_y {
            return SkewLine::new(zero, one, p.y.neg());
        }
        // x + b·y + c = 0 through both: b·(y1 − y2) = x2 − x1
        let b = q.x.sub(&p.x).mul(&p.y.sub(&q.y).inv()?);
        let c = p.x.add(&b.mul(&p.y)).neg();
        SkewLine::new(one, b, c)
    }

    fn meet(&self, l: &SkewLine<S>, m: &SkewLine<S>) -> Result<ExtPoint<S>> {
        if l.a.decide_same(&m.a)? && l.b.decide_same(&m.b)? && l.c.decide_same(&m.c)? {
            return Err(Error::domain("meet of identical lines"));
        }
        // read x off a vertical line when there is one, so a shared
        // coordinate stays exact
        let (l, m) = if (!l.x_led() && m.x_led()) || (m.x_led() && m.b.is_zero()) { (m, l) } else { (l, m) };
        let y = match (l.x_led(), m.x_led()) {
            (true, true) => {
                let db = l.b.sub(&m.b);
                if db.decide_zero()? {
                    return Ok(ExtPoint::Ideal(self.direction(l)));
                }
                // (b1 − b2)·y + (c1 − c2) = 0
                db.inv()?.mul(&m.c.sub(&l.c))
            }
            (true, false) => m.c.neg(),
            _ => return Ok(ExtPoint::Ideal(self.direction(l))),
        };
        let x = l.b.mul(&y).add(&l.c).neg();
        Ok(ExtPoint::Proper(Point::new(x, y)))
    }

    fn direction(&self, l: &SkewLine<S>) -> Direction<S> {
        if !l.x_led() {
            Direction::Slope(l.a.zero_like())
        } else if l.b.is_zero() {
            Direction::Vertical
        } else {
            Direction::Slope(l.b.inv().expect("nonzero b").neg())
        }
    }

    fn line_through_dir(&self, p: &Point<S>, d: &Direction<S>) -> SkewLine<S> {
        let one = p.x.one_like();
        let zero = p.x.zero_like();
        let line = match d {
            Direction::Vertical => SkewLine::new(one, zero, p.x.neg()),
            Direction::Slope(m) if m.is_zero() => SkewLine::new(zero, one, p.y.neg()),
            Direction::Slope(m) => {
                // y = m·x + k  ⇔  x − m⁻¹·y + m⁻¹·k = 0
                let b = m.inv().expect("nonzero slope").neg();
                let c = p.x.add(&b.mul(&p.y)).neg();
                SkewLine::new(one, b, c)
            }
        };
        line.expect("a or b is one")
    }

    /// `p + (q − p)·r`, which avoids inverting anything: coefficients act
    /// from the left, so a right multiple of `q − p` stays on the line.
    fn point_on_join(&self, p: &Point<S>, q: &Point<S>, r: &S) -> Result<Point<S>> {
        if p.decide_same(q)? {
            return Err(Error::domain(format!("join of identical points {p}")));
        }
        Ok(Point::new(p.x.add(&q.x.sub(&p.x).mul(r)), p.y.add(&q.y.sub(&p.y).mul(r))))
    }

    fn on_line(&self, p: &Point<S>, l: &SkewLine<S>) -> bool {
        l.eval(p).is_zero()
    }

    fn point_on(&self, l: &SkewLine<S>, r: &S) -> Point<S> {
        if l.x_led() {
            Point::new(l.b.mul(r).add(&l.c).neg(), r.clone())
        } else {
            Point::new(r.clone(), l.c.neg())
        }
    }

    fn same_line(&self, l: &SkewLine<S>, m: &SkewLine<S>) -> bool {
        l.a.same(&m.a) && l.b.same(&m.b) && l.c.same(&m.c)
    }

    fn side_of(&self, l: &SkewLine<S>, p: &Point<S>) -> Result<Sign> {
        S::descriptor().require_ordered("side_of")?;
        l.eval(p).sign()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbersystems::HilbertElement;
    use crate::planes::{between, collinear, pasch_check};
    use crate::scalars::Rational;

    fn pt(x: i64, y: i64) -> Point<Rational> {
        Point::new(Rational::from(x), Rational::from(y))
    }

    #[test]
    fn join_and_meet_roundtrip() {
        let pl = SkewPlane::<Rational>::new();
        let l = pl.join(&pt(0, 0), &pt(2, 1)).unwrap();
        let m = pl.join(&pt(0, 3), &pt(3, 0)).unwrap();
        let x = pl.meet(&l, &m).unwrap().expect_proper("lm").unwrap();
        assert!(pl.on_line(&x, &l) && pl.on_line(&x, &m));
        assert_eq!(x, pt(2, 1));
        assert!(pl.join(&pt(1, 1), &pt(1, 1)).is_err());
        assert!(pl.meet(&l, &l).is_err());
    }

    #[test]
    fn parallels_meet_at_infinity() {
        let pl = SkewPlane::<Rational>::new();
        let l = pl.join(&pt(0, 0), &pt(1, 2)).unwrap();
        let m = pl.parallel_through(&l, &pt(5, 0));
        assert!(matches!(pl.meet(&l, &m).unwrap(), ExtPoint::Ideal(Direction::Slope(_))));
        assert!(pl.same_line(&pl.parallel_through(&l, &pt(1, 2)), &l));
    }

    #[test]
    fn hilbert_axis_meets() {
        let pl = SkewPlane::<HilbertElement>::new();
        let (s, t) = (HilbertElement::s(), HilbertElement::t());
        let one = s.one_like();
        let zero = s.zero_like();
        let x_axis = SkewLine::new(zero.clone(), one.clone(), zero.clone()).unwrap();
        // g: s·y + x − s = 0 meets y = 0 at (s, 0)
        let g = SkewLine::new(one.clone(), s.clone(), s.neg()).unwrap();
        let p = pl.meet(&g, &x_axis).unwrap().expect_proper("g").unwrap();
        assert!(p.same(&Point::new(s.clone(), zero.clone())));
        // k': t·y + x − t·s = 0 meets y = 0 at t·s = 2st
        let kp = SkewLine::new(one.clone(), t.clone(), t.mul(&s).neg()).unwrap();
        let p = pl.meet(&kp, &x_axis).unwrap().expect_proper("k'").unwrap();
        assert!(p.x.same(&HilbertElement::monomial(Rational::from(2), 1, 1)));
    }

    #[test]
    fn hilbert_betweenness() {
        let pl = SkewPlane::<HilbertElement>::new();
        let zero = HilbertElement::s().zero_like();
        let p = |x: HilbertElement| Point::new(x, zero.clone());
        let one = zero.one_like();
        assert!(between(&pl, &p(HilbertElement::t()), &p(HilbertElement::s()), &p(one.clone())).unwrap());
        assert!(!between(&pl, &p(HilbertElement::s()), &p(HilbertElement::t()), &p(one)).unwrap());
    }

    #[test]
    fn rational_pasch() {
        let pl = SkewPlane::<Rational>::new();
        let two = Rational::from(2);
        let l = SkewLine::new(Rational::one(), Rational::one(), -two).unwrap();
        let v = pasch_check(&pl, &pt(0, 0), &pt(4, 0), &pt(0, 4), &l).unwrap();
        assert!(v.is_holds());
        let w = v.witness.unwrap();
        assert_eq!(w.get("AB"), Some("(2, 0)"));
        assert_eq!(w.get("AC"), Some("(0, 2)"));
        assert_eq!(w.get("BC"), None);
        assert!(collinear(&pl, &pt(0, 0), &pt(1, 1), &pt(2, 2)).unwrap());
    }
}
