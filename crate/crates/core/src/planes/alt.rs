use std::fmt;
use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::numbersystems::{Scalar, SystemDescriptor};
use crate::planes::{Direction, ExtPoint, Plane, Point};
use crate::scalars::Sign;

/// `x − b = 0` or `y + a·x − b = 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum AltLine<S> {
    Vertical { b: S },
    Sloped { a: S, b: S },
}

impl<S: fmt::Display> fmt::Display for AltLine<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AltLine::Vertical { b } => write!(f, "x - ({b}) = 0"),
            AltLine::Sloped { a, b } => write!(f, "y + ({a})x - ({b}) = 0"),
        }
    }
}

/// The coordinate plane over an alternative division ring. Every formula
/// keeps the bracketing of a product explicit, since associativity is not
/// available.
#[derive(Clone, Copy, Debug, Default)]
pub struct AltPlane<S> {
    _sys: PhantomData<fn() -> S>,
}

impl<S: Scalar> AltPlane<S> {
    pub fn new() -> Self {
        AltPlane { _sys: PhantomData }
    }

    /// The horizontal line `y = c`.
    pub fn horizontal(c: &S) -> AltLine<S> {
        AltLine::Sloped { a: c.zero_like(), b: c.clone() }
    }

    pub fn vertical(c: &S) -> AltLine<S> {
        AltLine::Vertical { b: c.clone() }
    }
}

impl<S: Scalar> Plane for AltPlane<S> {
    type S = S;
    type Line = AltLine<S>;

    fn name(&self) -> String {
        format!("alt-plane/{}", S::KIND)
    }

    fn descriptor(&self) -> SystemDescriptor {
        S::descriptor()
    }

    fn join(&self, p: &Point<S>, q: &Point<S>) -> Result<AltLine<S>> {
        if p.same(q) {
            return Err(Error::domain(format!("join of identical points {p}")));
        }
        if p.x.same(&q.x) {
            return Ok(AltLine::Vertical { b: p.x.clone() });
        }
        // a = (y1 − y2)(x2 − x1)⁻¹,  b = y1 + a·x1
        let a = p.y.sub(&q.y).mul(&q.x.sub(&p.x).inv()?);
        let b = p.y.add(&a.mul(&p.x));
        Ok(AltLine::Sloped { a, b })
    }

    fn meet(&self, l: &AltLine<S>, m: &AltLine<S>) -> Result<ExtPoint<S>> {
        if self.same_line(l, m) {
            return Err(Error::domain("meet of identical lines"));
        }
        match (l, m) {
            (AltLine::Vertical { .. }, AltLine::Vertical { .. }) => Ok(ExtPoint::Ideal(Direction::Vertical)),
            (AltLine::Vertical { b: c }, AltLine::Sloped { a, b })
            | (AltLine::Sloped { a, b }, AltLine::Vertical { b: c }) => {
                Ok(ExtPoint::Proper(Point::new(c.clone(), b.sub(&a.mul(c)))))
            }
            (AltLine::Sloped { a: a1, b: b1 }, AltLine::Sloped { a: a2, b: b2 }) => {
                let da = a1.sub(a2);
                if da.is_zero() {
                    return Ok(ExtPoint::Ideal(Direction::Slope(a1.clone())));
                }
                // x = (a1 − a2)⁻¹(b1 − b2),  y = b1 − a1·x
                let x = da.inv()?.mul(&b1.sub(b2));
                let y = b1.sub(&a1.mul(&x));
                Ok(ExtPoint::Proper(Point::new(x, y)))
            }
        }
    }

    fn direction(&self, l: &AltLine<S>) -> Direction<S> {
        match l {
            AltLine::Vertical { .. } => Direction::Vertical,
            AltLine::Sloped { a, .. } => Direction::Slope(a.clone()),
        }
    }

    fn line_through_dir(&self, p: &Point<S>, d: &Direction<S>) -> AltLine<S> {
        match d {
            Direction::Vertical => AltLine::Vertical { b: p.x.clone() },
            Direction::Slope(a) => AltLine::Sloped { a: a.clone(), b: p.y.add(&a.mul(&p.x)) },
        }
    }

    fn on_line(&self, p: &Point<S>, l: &AltLine<S>) -> bool {
        match l {
            AltLine::Vertical { b } => p.x.same(b),
            AltLine::Sloped { a, b } => p.y.add(&a.mul(&p.x)).same(b),
        }
    }

    fn point_on(&self, l: &AltLine<S>, r: &S) -> Point<S> {
        match l {
            AltLine::Vertical { b } => Point::new(b.clone(), r.clone()),
            AltLine::Sloped { a, b } => Point::new(r.clone(), b.sub(&a.mul(r))),
        }
    }

    fn same_line(&self, l: &AltLine<S>, m: &AltLine<S>) -> bool {
        match (l, m) {
            (AltLine::Vertical { b: b1 }, AltLine::Vertical { b: b2 }) => b1.same(b2),
            (AltLine::Sloped { a: a1, b: b1 }, AltLine::Sloped { a: a2, b: b2 }) => a1.same(a2) && b1.same(b2),
            _ => false,
        }
    }

    fn side_of(&self, l: &AltLine<S>, p: &Point<S>) -> Result<Sign> {
        S::descriptor().require_ordered("side_of")?;
        match l {
            AltLine::Vertical { b } => p.x.sub(b).sign(),
            AltLine::Sloped { a, b } => p.y.add(&a.mul(&p.x)).sub(b).sign(),
        }
    }
}
