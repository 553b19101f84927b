//! Affine coordinate planes over the number systems.
//!
//! Three line representations are provided: `a·x + b·y + c = 0` with
//! left-multiplied coefficients for skew fields ([`SkewPlane`]),
//! `x = b` / `y + a·x − b = 0` for alternative fields ([`AltPlane`]), and
//! the bent lines of the Moulton plane ([`MoultonPlane`]). Points at
//! infinity are parallel classes, never homogeneous coordinates.

mod alt;
mod moulton;
mod order;
mod skew;

use std::fmt;

pub use alt::{AltLine, AltPlane};
pub use moulton::{MoultonLine, MoultonPlane};
pub use order::{order_verdict, run_order_suite};
pub use skew::{SkewLine, SkewPlane};

use crate::error::{Error, Result};
use crate::numbersystems::{Scalar, SystemDescriptor};
use crate::report::{Verdict, Witness};
use crate::scalars::Sign;

#[derive(Clone, Debug, PartialEq)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }

    pub fn same(&self, o: &Point<S>) -> bool {
        self.x.same(&o.x) && self.y.same(&o.y)
    }

    /// [`Point::same`], failing when truncation hides the answer.
    pub fn decide_same(&self, o: &Point<S>) -> Result<bool> {
        Ok(self.x.decide_same(&o.x)? && self.y.decide_same(&o.y)?)
    }

    pub fn add(&self, o: &Point<S>) -> Point<S> {
        Point::new(self.x.add(&o.x), self.y.add(&o.y))
    }
}

impl<S: fmt::Display> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A parallel class. What `Slope` stores is fixed by each plane: the
/// alternative plane keeps the `a` of `y + a·x − b = 0`, the others the `m`
/// of `y = m·x + k` (the lower slope for bent lines).
#[derive(Clone, Debug, PartialEq)]
pub enum Direction<S> {
    Slope(S),
    Vertical,
}

impl<S: Scalar> Direction<S> {
    pub fn same(&self, o: &Direction<S>) -> bool {
        match (self, o) {
            (Direction::Vertical, Direction::Vertical) => true,
            (Direction::Slope(a), Direction::Slope(b)) => a.same(b),
            _ => false,
        }
    }
}

impl<S: fmt::Display> fmt::Display for Direction<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Slope(a) => write!(f, "ideal[{a}]"),
            Direction::Vertical => f.write_str("ideal[vertical]"),
        }
    }
}

/// A proper point or a point at infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtPoint<S> {
    Proper(Point<S>),
    Ideal(Direction<S>),
}

impl<S: Scalar> ExtPoint<S> {
    pub fn proper(&self) -> Option<&Point<S>> {
        match self {
            ExtPoint::Proper(p) => Some(p),
            ExtPoint::Ideal(_) => None,
        }
    }

    /// The proper point, or a degenerate-construction error naming `step`.
    pub fn expect_proper(self, step: &str) -> Result<Point<S>> {
        match self {
            ExtPoint::Proper(p) => Ok(p),
            ExtPoint::Ideal(_) => Err(Error::degenerate(format!("{step} is at infinity"))),
        }
    }

    pub fn same(&self, o: &ExtPoint<S>) -> bool {
        match (self, o) {
            (ExtPoint::Proper(p), ExtPoint::Proper(q)) => p.same(q),
            (ExtPoint::Ideal(d), ExtPoint::Ideal(e)) => d.same(e),
            _ => false,
        }
    }
}

impl<S: fmt::Display> fmt::Display for ExtPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPoint::Proper(p) => p.fmt(f),
            ExtPoint::Ideal(d) => d.fmt(f),
        }
    }
}

/// Incidence, parallelism and (for ordered systems) order in a plane.
pub trait Plane: Send + Sync {
    type S: Scalar;
    type Line: Clone + fmt::Debug + fmt::Display + Send + Sync;

    fn name(&self) -> String;

    fn descriptor(&self) -> SystemDescriptor;

    /// The unique line through two distinct points.
    fn join(&self, p: &Point<Self::S>, q: &Point<Self::S>) -> Result<Self::Line>;

    /// Common point of two distinct lines, ideal when they are parallel.
    fn meet(&self, l: &Self::Line, m: &Self::Line) -> Result<ExtPoint<Self::S>>;

    fn direction(&self, l: &Self::Line) -> Direction<Self::S>;

    fn line_through_dir(&self, p: &Point<Self::S>, d: &Direction<Self::S>) -> Self::Line;

    fn parallel_through(&self, l: &Self::Line, p: &Point<Self::S>) -> Self::Line {
        self.line_through_dir(p, &self.direction(l))
    }

    fn on_line(&self, p: &Point<Self::S>, l: &Self::Line) -> bool;

    /// The point of `l` with parameter `r`: the `y` coordinate on lines
    /// that meet every horizontal, the `x` coordinate otherwise.
    fn point_on(&self, l: &Self::Line, r: &Self::S) -> Point<Self::S>;

    /// A point of the line `pq` chosen by `r`; not `p` unless `r` is zero.
    fn point_on_join(&self, p: &Point<Self::S>, q: &Point<Self::S>, r: &Self::S) -> Result<Point<Self::S>> {
        let l = self.join(p, q)?;
        Ok(self.point_on(&l, r))
    }

    /// Short system label used in reports.
    fn system(&self) -> String {
        Self::S::KIND.name().to_string()
    }

    fn same_line(&self, l: &Self::Line, m: &Self::Line) -> bool;

    /// Sign of the line's defining form at `p`.
    fn side_of(&self, l: &Self::Line, p: &Point<Self::S>) -> Result<Sign>;

    fn parallel(&self, l: &Self::Line, m: &Self::Line) -> bool {
        self.direction(l).same(&self.direction(m))
    }
}

fn check_distinct_points<S: Scalar>(pts: &[&Point<S>]) -> Result<()> {
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[i].decide_same(pts[j])? {
                return Err(Error::domain(format!("repeated point {}", pts[i])));
            }
        }
    }
    Ok(())
}

pub fn collinear<P: Plane>(plane: &P, a: &Point<P::S>, b: &Point<P::S>, c: &Point<P::S>) -> Result<bool> {
    check_distinct_points(&[a, b, c])?;
    Ok(plane.on_line(c, &plane.join(a, b)?))
}

/// Three lines through one point, where a shared parallel class counts
/// as a common point at infinity.
pub fn concurrent<P: Plane>(plane: &P, l1: &P::Line, l2: &P::Line, l3: &P::Line) -> Result<bool> {
    if plane.same_line(l1, l2) || plane.same_line(l1, l3) || plane.same_line(l2, l3) {
        return Err(Error::domain("concurrency test on repeated lines"));
    }
    Ok(on_line_ext(plane, &plane.meet(l1, l2)?, l3))
}

pub fn on_line_ext<P: Plane>(plane: &P, p: &ExtPoint<P::S>, l: &P::Line) -> bool {
    match p {
        ExtPoint::Proper(p) => plane.on_line(p, l),
        ExtPoint::Ideal(d) => plane.direction(l).same(d),
    }
}

/// Line through two extended points; two ideal points span the line at
/// infinity, which has no affine representative.
pub fn join_ext<P: Plane>(plane: &P, p: &ExtPoint<P::S>, q: &ExtPoint<P::S>) -> Result<P::Line> {
    match (p, q) {
        (ExtPoint::Proper(a), ExtPoint::Proper(b)) => plane.join(a, b),
        (ExtPoint::Proper(a), ExtPoint::Ideal(d)) | (ExtPoint::Ideal(d), ExtPoint::Proper(a)) => {
            Ok(plane.line_through_dir(a, d))
        }
        (ExtPoint::Ideal(_), ExtPoint::Ideal(_)) => Err(Error::degenerate("join of two points at infinity")),
    }
}

/// Collinearity of extended points. Points at infinity lie on every line
/// of their class and on the line at infinity; repeated points are
/// trivially collinear.
pub fn collinear_ext<P: Plane>(plane: &P, pts: [&ExtPoint<P::S>; 3]) -> Result<bool> {
    let proper: Vec<&Point<P::S>> = pts.iter().filter_map(|p| p.proper()).collect();
    let ideal: Vec<&Direction<P::S>> = pts
        .iter()
        .filter_map(|p| match p {
            ExtPoint::Ideal(d) => Some(d),
            ExtPoint::Proper(_) => None,
        })
        .collect();
    match proper.len() {
        0 => Ok(true),
        1 => Ok(ideal[0].same(ideal[1])),
        2 => {
            if proper[0].decide_same(proper[1])? {
                return Ok(true);
            }
            Ok(plane.direction(&plane.join(proper[0], proper[1])?).same(ideal[0]))
        }
        _ => {
            let [a, b, c] = [proper[0], proper[1], proper[2]];
            if a.decide_same(b)? || a.decide_same(c)? || b.decide_same(c)? {
                return Ok(true);
            }
            Ok(plane.on_line(c, &plane.join(a, b)?))
        }
    }
}

/// `(p1 p2 p3)`: `p2` strictly between `p1` and `p3` on a common line,
/// compared by `x`, or by `y` on a vertical line.
pub fn between<P: Plane>(plane: &P, p1: &Point<P::S>, p2: &Point<P::S>, p3: &Point<P::S>) -> Result<bool> {
    plane.descriptor().require_ordered("betweenness")?;
    if !collinear(plane, p1, p2, p3)? {
        return Err(Error::domain("betweenness of non-collinear points"));
    }
    let (a, b, c) = if p1.x.same(&p3.x) { (&p1.y, &p2.y, &p3.y) } else { (&p1.x, &p2.x, &p3.x) };
    let s1 = b.sub(a).sign()?;
    let s2 = c.sub(b).sign()?;
    Ok(s1 != Sign::Zero && s1 == s2)
}

/// Interior point where `l` crosses the open segment `ab`, if any.
pub fn segment_crossing<P: Plane>(
    plane: &P,
    l: &P::Line,
    a: &Point<P::S>,
    b: &Point<P::S>,
) -> Result<Option<Point<P::S>>> {
    let ab = plane.join(a, b)?;
    if plane.same_line(&ab, l) {
        return Ok(None);
    }
    match plane.meet(&ab, l)? {
        ExtPoint::Proper(p) if !p.same(a) && !p.same(b) && between(plane, a, &p, b)? => Ok(Some(p)),
        _ => Ok(None),
    }
}

/// Pasch's axiom for one triangle and one line: if `l` enters the triangle
/// through side `AB` it leaves through exactly one of `AC`, `BC`.
pub fn pasch_check<P: Plane>(
    plane: &P,
    a: &Point<P::S>,
    b: &Point<P::S>,
    c: &Point<P::S>,
    l: &P::Line,
) -> Result<Verdict> {
    plane.descriptor().require_ordered("Pasch check")?;
    for (name, p) in [("A", a), ("B", b), ("C", c)] {
        if plane.on_line(p, l) {
            return Err(Error::domain(format!("vertex {name} lies on the line")));
        }
    }
    if collinear(plane, a, b, c)? {
        return Err(Error::domain("triangle vertices are collinear"));
    }
    let Some(pab) = segment_crossing(plane, l, a, b)? else {
        return Ok(Verdict::holds("line misses segment AB"));
    };
    let pac = segment_crossing(plane, l, a, c)?;
    let pbc = segment_crossing(plane, l, b, c)?;
    let mut w = Witness::new().with("AB", &pab);
    if let Some(p) = &pac {
        w.push("AC", p);
    }
    if let Some(p) = &pbc {
        w.push("BC", p);
    }
    if pac.is_some() != pbc.is_some() {
        Ok(Verdict::holds_with(w, "exactly one further side crossed"))
    } else {
        Ok(Verdict::fails(w, "line crosses AB but not exactly one of AC, BC"))
    }
}
