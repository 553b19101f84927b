use std::fmt;

use crate::error::{Error, Result};
use crate::numbersystems::{Scalar, SystemDescriptor};
use crate::planes::{Direction, ExtPoint, Plane, Point};
use crate::scalars::{Rational, Sign};

/// Lines of the Moulton plane over the rationals. Lines of negative slope
/// `m` bend where they cross the x-axis and continue above it with slope
/// `m/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoultonLine {
    Vertical {
        c: Rational,
    },
    /// `y = m·x + b` with `m ≥ 0`.
    NonNeg {
        m: Rational,
        b: Rational,
    },
    /// `y = m(x − x0)` for `y ≤ 0` and `y = (m/2)(x − x0)` for `y ≥ 0`, `m < 0`.
    Bent {
        m: Rational,
        x0: Rational,
    },
}

impl fmt::Display for MoultonLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoultonLine::Vertical { c } => write!(f, "x = {c}"),
            MoultonLine::NonNeg { m, b } => write!(f, "y = {m}x + {b}"),
            MoultonLine::Bent { m, x0 } => write!(f, "bent(m = {m}, x0 = {x0})"),
        }
    }
}

/// A non-vertical straight piece `y = k·x + d`.
#[derive(Clone, Debug)]
struct Piece {
    k: Rational,
    d: Rational,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Half {
    Lower,
    Upper,
}

impl MoultonLine {
    pub fn bent(m: Rational, x0: Rational) -> Result<Self> {
        if m.sign() != Sign::Negative {
            return Err(Error::domain("bent line needs a negative slope"));
        }
        Ok(MoultonLine::Bent { m, x0 })
    }

    pub fn non_neg(m: Rational, b: Rational) -> Result<Self> {
        if m.sign() == Sign::Negative {
            return Err(Error::domain("straight non-vertical Moulton line needs slope >= 0"));
        }
        Ok(MoultonLine::NonNeg { m, b })
    }

    /// The straight piece governing the closed half-plane `half`.
    fn piece(&self, half: Half) -> Option<Piece> {
        match self {
            MoultonLine::Vertical { .. } => None,
            MoultonLine::NonNeg { m, b } => Some(Piece { k: m.clone(), d: b.clone() }),
            MoultonLine::Bent { m, x0 } => {
                let k = match half {
                    Half::Lower => m.clone(),
                    Half::Upper => m / &Rational::from(2),
                };
                let d = -(&k * x0);
                Some(Piece { k, d })
            }
        }
    }

    /// Height of the line above `x`; `None` for vertical lines.
    pub fn y_at(&self, x: &Rational) -> Option<Rational> {
        match self {
            MoultonLine::Vertical { .. } => None,
            MoultonLine::NonNeg { m, b } => Some(m * x + b),
            MoultonLine::Bent { m, x0 } => {
                let lower = m * &(x - x0);
                if lower.sign() != Sign::Positive {
                    Some(lower)
                } else {
                    Some(&lower / &Rational::from(2))
                }
            }
        }
    }

    /// Same point set, read in the ordinary rational plane: the lower
    /// piece of a bent line, extended.
    pub fn unbent(&self) -> MoultonLine {
        match self {
            MoultonLine::Bent { m, x0 } => MoultonLine::NonNeg { m: m.clone(), b: -(m * x0) },
            other => other.clone(),
        }
    }
}

fn in_half(y: &Rational, half: Half) -> bool {
    match half {
        Half::Lower => y.sign() != Sign::Positive,
        Half::Upper => y.sign() != Sign::Negative,
    }
}

/// The Moulton plane: rational points, bent lines.
#[derive(Clone, Copy, Debug, Default)]
pub struct MoultonPlane;

impl MoultonPlane {
    pub fn new() -> Self {
        MoultonPlane
    }
}

impl Plane for MoultonPlane {
    type S = Rational;
    type Line = MoultonLine;

    fn name(&self) -> String {
        "moulton-plane/rational".to_string()
    }

    fn descriptor(&self) -> SystemDescriptor {
        Rational::descriptor()
    }

    fn join(&self, p: &Point<Rational>, q: &Point<Rational>) -> Result<MoultonLine> {
        if p == q {
            return Err(Error::domain(format!("join of identical points {p}")));
        }
        if p.x == q.x {
            return Ok(MoultonLine::Vertical { c: p.x.clone() });
        }
        let k = (&q.y - &p.y).checked_div(&(&q.x - &p.x))?;
        if k.sign() != Sign::Negative {
            return Ok(MoultonLine::NonNeg { b: &p.y - &(&k * &p.x), m: k });
        }
        let (sp, sq) = (p.y.sign(), q.y.sign());
        let two = Rational::from(2);
        if sp != Sign::Negative && sq != Sign::Negative {
            // both on the upper piece of slope m/2
            let x0 = &p.x - &p.y.checked_div(&k)?;
            return MoultonLine::bent(&k * &two, x0);
        }
        if sp != Sign::Positive && sq != Sign::Positive {
            let x0 = &p.x - &p.y.checked_div(&k)?;
            return MoultonLine::bent(k, x0);
        }
        // strictly on opposite sides of the axis with the upper point to the left
        let (up, down) = if sp == Sign::Positive { (p, q) } else { (q, p) };
        let m = (&(&two * &up.y) - &down.y).checked_div(&(&up.x - &down.x))?;
        let x0 = &down.x - &down.y.checked_div(&m)?;
        MoultonLine::bent(m, x0)
    }

    fn meet(&self, l: &MoultonLine, m: &MoultonLine) -> Result<ExtPoint<Rational>> {
        if l == m {
            return Err(Error::domain("meet of identical lines"));
        }
        match (l, m) {
            (MoultonLine::Vertical { .. }, MoultonLine::Vertical { .. }) => {
                return Ok(ExtPoint::Ideal(Direction::Vertical));
            }
            (MoultonLine::Vertical { c }, other) | (other, MoultonLine::Vertical { c }) => {
                let y = other.y_at(c).expect("non-vertical");
                return Ok(ExtPoint::Proper(Point::new(c.clone(), y)));
            }
            _ => {}
        }
        let mut found: Vec<Point<Rational>> = Vec::new();
        for half in [Half::Lower, Half::Upper] {
            let (p1, p2) = (l.piece(half).expect("non-vertical"), m.piece(half).expect("non-vertical"));
            let dk = &p1.k - &p2.k;
            if dk.is_zero() {
                continue;
            }
            let x = (&p2.d - &p1.d).checked_div(&dk)?;
            let y = &p1.k * &x + &p1.d;
            if in_half(&y, half) && !found.contains(&Point::new(x.clone(), y.clone())) {
                found.push(Point::new(x, y));
            }
        }
        match found.len() {
            0 => Ok(ExtPoint::Ideal(self.direction(l))),
            1 => Ok(ExtPoint::Proper(found.pop().expect("one point"))),
            _ => Err(Error::domain(format!("lines {l} and {m} share two points"))),
        }
    }

    fn direction(&self, l: &MoultonLine) -> Direction<Rational> {
        match l {
            MoultonLine::Vertical { .. } => Direction::Vertical,
            MoultonLine::NonNeg { m, .. } | MoultonLine::Bent { m, .. } => Direction::Slope(m.clone()),
        }
    }

    fn line_through_dir(&self, p: &Point<Rational>, d: &Direction<Rational>) -> MoultonLine {
        match d {
            Direction::Vertical => MoultonLine::Vertical { c: p.x.clone() },
            Direction::Slope(m) if m.sign() != Sign::Negative => {
                MoultonLine::NonNeg { m: m.clone(), b: &p.y - &(m * &p.x) }
            }
            Direction::Slope(m) => {
                let k = if p.y.sign() == Sign::Positive { m / &Rational::from(2) } else { m.clone() };
                MoultonLine::Bent { m: m.clone(), x0: &p.x - &(&p.y / &k) }
            }
        }
    }

    fn on_line(&self, p: &Point<Rational>, l: &MoultonLine) -> bool {
        match l {
            MoultonLine::Vertical { c } => &p.x == c,
            _ => l.y_at(&p.x).as_ref() == Some(&p.y),
        }
    }

    fn point_on(&self, l: &MoultonLine, r: &Rational) -> Point<Rational> {
        match l {
            MoultonLine::Vertical { c } => Point::new(c.clone(), r.clone()),
            _ => Point::new(r.clone(), l.y_at(r).expect("non-vertical")),
        }
    }

    fn system(&self) -> String {
        "moulton".to_string()
    }

    fn same_line(&self, l: &MoultonLine, m: &MoultonLine) -> bool {
        l == m
    }

    fn side_of(&self, l: &MoultonLine, p: &Point<Rational>) -> Result<Sign> {
        Ok(match l {
            MoultonLine::Vertical { c } => (&p.x - c).sign(),
            _ => (&p.y - &l.y_at(&p.x).expect("non-vertical")).sign(),
        })
    }
}
