//! Harmonic quadruples: the complete-quadrilateral construction of the
//! fourth harmonic point, cross-ratios and Möbius maps over commutative
//! fields, and the harmonic scale that places infinitely many points on a
//! segment.
//!
//! The construction direction is the only one tested. Uniqueness of the
//! fourth harmonic point follows from the little Desargues property, but
//! the converse claim (that the complete-quadrilateral theorem alone
//! yields that property) is known to be historically incorrect, so no
//! check here depends on it.

mod mobius;
mod suite;

use std::fmt;

use crate::error::{Error, Result};
use crate::numbersystems::Scalar;
use crate::planes::{between, collinear, join_ext, Direction, ExtPoint, Plane, Point};

pub use mobius::{mobius_apply, mobius_from_three_pairs, MobiusMap};
pub use suite::{harmonic_verdict, random_aux, random_triple, run_harmonic_suite};

/// An element of the projective line over a commutative field.
#[derive(Clone, Debug, PartialEq)]
pub enum Proj<S> {
    Finite(S),
    Infinity,
}

impl<S: Scalar> Proj<S> {
    pub fn same(&self, o: &Proj<S>) -> bool {
        match (self, o) {
            (Proj::Finite(a), Proj::Finite(b)) => a.same(b),
            (Proj::Infinity, Proj::Infinity) => true,
            _ => false,
        }
    }
}

impl<S: Scalar> From<S> for Proj<S> {
    fn from(x: S) -> Self {
        Proj::Finite(x)
    }
}

impl<S: fmt::Display> fmt::Display for Proj<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Proj::Finite(x) => x.fmt(f),
            Proj::Infinity => f.write_str("∞"),
        }
    }
}

/// The free choices of the complete quadrilateral: a line `s` through `C`
/// other than `AB`, and a point `O` on neither line.
#[derive(Clone, Debug)]
pub struct HarmonicAux<L, S> {
    pub s: L,
    pub o: Point<S>,
}

fn named<T>(r: Result<T>, step: &str) -> Result<T> {
    r.map_err(|e| match e {
        Error::Domain(msg) => Error::degenerate(format!("{step}: {msg}")),
        other => other,
    })
}

fn check_triple<P: Plane>(plane: &P, a: &Point<P::S>, b: &Point<P::S>, c: &Point<P::S>) -> Result<P::Line> {
    if !collinear(plane, a, b, c)? {
        return Err(Error::domain("A, B, C are not collinear"));
    }
    plane.join(a, b)
}

/// `P = OA∩s`, `Q = OB∩s`, `M = AQ∩BP`, and the result `D = OM∩AB`,
/// which is ideal when `OM` is parallel to `AB`.
pub fn fourth_harmonic<P: Plane>(
    plane: &P,
    a: &Point<P::S>,
    b: &Point<P::S>,
    c: &Point<P::S>,
    aux: &HarmonicAux<P::Line, P::S>,
) -> Result<ExtPoint<P::S>> {
    let ab = check_triple(plane, a, b, c)?;
    let HarmonicAux { s, o } = aux;
    if !plane.on_line(c, s) {
        return Err(Error::domain("s does not pass through C"));
    }
    if plane.same_line(s, &ab) {
        return Err(Error::degenerate("s coincides with AB"));
    }
    if plane.on_line(o, &ab) || plane.on_line(o, s) {
        return Err(Error::degenerate("O lies on AB or s"));
    }
    let oa = named(plane.join(o, a), "OA")?;
    let ob = named(plane.join(o, b), "OB")?;
    let p = named(plane.meet(&oa, s), "P = OA ∩ s")?.expect_proper("P = OA ∩ s")?;
    let q = named(plane.meet(&ob, s), "Q = OB ∩ s")?.expect_proper("Q = OB ∩ s")?;
    let aq = named(plane.join(a, &q), "AQ")?;
    let bp = named(plane.join(b, &p), "BP")?;
    let m = named(plane.meet(&aq, &bp), "M = AQ ∩ BP")?.expect_proper("M = AQ ∩ BP")?;
    let om = named(plane.join(o, &m), "OM")?;
    named(plane.meet(&om, &ab), "D = OM ∩ AB")
}

/// Deterministic generic aux for `(A, B, C)`: the vertical through `C`
/// (the line of slope one through `C` when `AB` is itself vertical) and
/// `O = C + (1 + k, 1 + 2k)` for the least `k ≥ 0` that makes every step
/// of the construction proper. Both offsets move with `k`, so no single
/// alignment of `O` with `A` or `B` can persist across all tries.
pub fn canonical_aux<P: Plane>(
    plane: &P,
    a: &Point<P::S>,
    b: &Point<P::S>,
    c: &Point<P::S>,
) -> Result<HarmonicAux<P::Line, P::S>> {
    let ab = check_triple(plane, a, b, c)?;
    let one = c.x.one_like();
    let s = if matches!(plane.direction(&ab), Direction::Vertical) {
        plane.line_through_dir(c, &Direction::Slope(one.clone()))
    } else {
        plane.line_through_dir(c, &Direction::Vertical)
    };
    for k in 0..16 {
        let o = Point::new(c.x.add(&c.x.from_int_like(1 + k)), c.y.add(&c.y.from_int_like(1 + 2 * k)));
        let aux = HarmonicAux { s: s.clone(), o };
        match fourth_harmonic(plane, a, b, c, &aux) {
            Ok(_) => return Ok(aux),
            Err(Error::Degenerate { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::degenerate("no generic canonical O within 16 unit steps"))
}

/// Affine parameter of a point of `AB`: `x`, or `y` when `AB` is vertical.
/// The point at infinity of `AB` maps to `∞`.
fn parameter<P: Plane>(plane: &P, ab: &P::Line, p: &ExtPoint<P::S>) -> Result<Proj<P::S>> {
    let vertical = matches!(plane.direction(ab), Direction::Vertical);
    match p {
        ExtPoint::Proper(q) => {
            if !plane.on_line(q, ab) {
                return Err(Error::domain(format!("{q} is off the line AB")));
            }
            Ok(Proj::Finite(if vertical { q.y.clone() } else { q.x.clone() }))
        }
        ExtPoint::Ideal(d) => {
            if !plane.direction(ab).same(d) {
                return Err(Error::domain("the ideal point is not on AB"));
            }
            Ok(Proj::Infinity)
        }
    }
}

/// Whether `(A, B; C, D)` is harmonic. Commutative planes compare the
/// cross-ratio with −1; others replay the construction with
/// [`canonical_aux`] and compare the result with `D`.
pub fn harmonic_check<P: Plane>(
    plane: &P,
    a: &Point<P::S>,
    b: &Point<P::S>,
    c: &Point<P::S>,
    d: &ExtPoint<P::S>,
) -> Result<bool> {
    let ab = check_triple(plane, a, b, c)?;
    if plane.descriptor().commutative {
        let xs = [
            parameter(plane, &ab, &ExtPoint::Proper(a.clone()))?,
            parameter(plane, &ab, &ExtPoint::Proper(b.clone()))?,
            parameter(plane, &ab, &ExtPoint::Proper(c.clone()))?,
            parameter(plane, &ab, d)?,
        ];
        let cr = cross_ratio(&xs[0], &xs[1], &xs[2], &xs[3])?;
        return Ok(cr.same(&cr.one_like().neg()));
    }
    parameter(plane, &ab, d)?;
    if let ExtPoint::Proper(q) = d {
        for (name, p) in [("A", a), ("B", b), ("C", c)] {
            if q.decide_same(p)? {
                return Err(Error::domain(format!("D repeats {name}")));
            }
        }
    }
    let aux = canonical_aux(plane, a, b, c)?;
    Ok(fourth_harmonic(plane, a, b, c, &aux)?.same(d))
}

/// `(x₃−x₁)/(x₃−x₂) : (x₄−x₁)/(x₄−x₂)`. An infinite argument drops the
/// two differences that contain it.
pub fn cross_ratio<S: Scalar>(x1: &Proj<S>, x2: &Proj<S>, x3: &Proj<S>, x4: &Proj<S>) -> Result<S> {
    S::descriptor().require_commutative("cross-ratio")?;
    let xs = [x1, x2, x3, x4];
    for i in 0..4 {
        for j in i + 1..4 {
            if xs[i].same(xs[j]) {
                return Err(Error::domain(format!("cross-ratio of repeated point {}", xs[i])));
            }
        }
    }
    let diff = |u: &Proj<S>, v: &Proj<S>| match (u, v) {
        (Proj::Finite(u), Proj::Finite(v)) => Some(u.sub(v)),
        _ => None,
    };
    // numerator (x3−x1)(x4−x2), denominator (x3−x2)(x4−x1)
    let prod = |f: [Option<S>; 2]| -> Option<S> {
        match f {
            [Some(u), Some(v)] => Some(u.mul(&v)),
            [Some(u), None] | [None, Some(u)] => Some(u),
            [None, None] => None,
        }
    };
    let num = prod([diff(x3, x1), diff(x4, x2)]);
    let den = prod([diff(x3, x2), diff(x4, x1)]);
    match (num, den) {
        (Some(n), Some(d)) => Ok(n.mul(&d.inv()?)),
        _ => Err(Error::domain("cross-ratio with more than one infinite point")),
    }
}

/// The first `n` points `B₁ … Bₙ` of the harmonic scale on segment `BC`,
/// for `A, B, C` in the order `(ABC)`.
///
/// With `E = A + (0, 1)` (or `A + (1, 0)` on a vertical line) and `F` the
/// midpoint of `AE`: `G = FC∩EB`, `R = AG∩EC`, then with `B₀ = B`,
/// `Gᵢ₊₁ = BᵢR∩FC` and `Bᵢ₊₁ = Gᵢ₊₁E∩AC`.
pub fn harmonic_scale<P: Plane>(
    plane: &P,
    a: &Point<P::S>,
    b: &Point<P::S>,
    c: &Point<P::S>,
    n: usize,
) -> Result<Vec<Point<P::S>>> {
    let desc = plane.descriptor();
    desc.require_ordered("harmonic scale")?;
    desc.require_commutative("harmonic scale")?;
    let ac = check_triple(plane, a, c, b)?;
    if !between(plane, a, b, c)? {
        return Err(Error::domain("B must lie between A and C"));
    }
    let zero = a.x.zero_like();
    let one = a.x.one_like();
    let e = if matches!(plane.direction(&ac), Direction::Vertical) {
        a.add(&Point::new(one.clone(), zero.clone()))
    } else {
        a.add(&Point::new(zero.clone(), one.clone()))
    };
    let half = crate::scalars::Rational::new(1, 2).expect("nonzero denominator");
    let f = Point::new(a.x.add(&e.x.sub(&a.x).scale(&half)), a.y.add(&e.y.sub(&a.y).scale(&half)));
    let fc = named(plane.join(&f, c), "FC")?;
    let eb = named(plane.join(&e, b), "EB")?;
    let ec = named(plane.join(&e, c), "EC")?;
    let g = named(plane.meet(&fc, &eb), "G = FC ∩ EB")?.expect_proper("G = FC ∩ EB")?;
    let ag = named(plane.join(a, &g), "AG")?;
    let r = named(plane.meet(&ag, &ec), "R = AG ∩ EC")?.expect_proper("R = AG ∩ EC")?;
    let pe = |p: &Point<P::S>| ExtPoint::Proper(p.clone());
    let mut out = Vec::with_capacity(n);
    let mut bi = b.clone();
    for i in 0..n {
        let step_g = format!("G{} = B{}R ∩ FC", i + 1, i);
        let step_b = format!("B{} = G{}E ∩ AC", i + 1, i + 1);
        let br = named(join_ext(plane, &pe(&bi), &pe(&r)), &step_g)?;
        let gi = named(plane.meet(&br, &fc), &step_g)?.expect_proper(&step_g)?;
        let ge = named(plane.join(&gi, &e), &step_b)?;
        bi = named(plane.meet(&ge, &ac), &step_b)?.expect_proper(&step_b)?;
        out.push(bi.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbersystems::{Octonion, Quaternion};
    use crate::planes::{AltPlane, SkewPlane};
    use crate::scalars::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn pt(x: Rational, y: Rational) -> Point<Rational> {
        Point::new(x, y)
    }

    fn on_axis(x: Rational) -> Point<Rational> {
        pt(x, Rational::from(0))
    }

    #[test]
    fn midpoint_conjugate_is_ideal() {
        let pl = SkewPlane::<Rational>::new();
        let (a, b, c) = (on_axis(q(0, 1)), on_axis(q(2, 1)), on_axis(q(1, 1)));
        let aux = HarmonicAux { s: pl.line_through_dir(&c, &Direction::Vertical), o: pt(q(3, 1), q(1, 1)) };
        let d = fourth_harmonic(&pl, &a, &b, &c, &aux).unwrap();
        assert_eq!(d, ExtPoint::Ideal(Direction::Slope(q(0, 1))));
    }

    #[test]
    fn conjugate_of_two_is_two_thirds() {
        let pl = SkewPlane::<Rational>::new();
        let (a, b, c) = (on_axis(q(0, 1)), on_axis(q(1, 1)), on_axis(q(2, 1)));
        let aux = canonical_aux(&pl, &a, &b, &c).unwrap();
        let d = fourth_harmonic(&pl, &a, &b, &c, &aux).unwrap();
        assert_eq!(d, ExtPoint::Proper(on_axis(q(2, 3))));
    }

    #[test]
    fn degenerate_aux_names_step() {
        let pl = SkewPlane::<Rational>::new();
        let (a, b, c) = (on_axis(q(0, 1)), on_axis(q(2, 1)), on_axis(q(1, 1)));
        // O on the parallel to s through A makes OA parallel to s
        let aux = HarmonicAux { s: pl.line_through_dir(&c, &Direction::Vertical), o: pt(q(0, 1), q(1, 1)) };
        let e = fourth_harmonic(&pl, &a, &b, &c, &aux).unwrap_err();
        assert!(e.to_string().contains("P = OA ∩ s"), "{e}");
    }

    #[test]
    fn check_examples() {
        let pl = SkewPlane::<Rational>::new();
        let x = |v| on_axis(v);
        let ideal = ExtPoint::Ideal(Direction::Slope(q(0, 1)));
        assert!(harmonic_check(&pl, &x(q(0, 1)), &x(q(2, 1)), &x(q(1, 1)), &ideal).unwrap());
        assert!(harmonic_check(&pl, &x(q(0, 1)), &x(q(1, 1)), &x(q(2, 1)), &ExtPoint::Proper(x(q(2, 3)))).unwrap());
        assert!(!harmonic_check(&pl, &x(q(0, 1)), &x(q(1, 1)), &x(q(2, 1)), &ExtPoint::Proper(x(q(3, 1)))).unwrap());
    }

    #[test]
    fn cross_ratio_values() {
        let f = |n, d| Proj::Finite(q(n, d));
        assert_eq!(cross_ratio(&f(0, 1), &f(1, 1), &f(2, 1), &f(2, 3)).unwrap(), q(-1, 1));
        assert!(cross_ratio(&f(0, 1), &f(1, 1), &f(2, 1), &f(2, 1)).is_err());
        // the limit convention gives 1/λ
        assert_eq!(cross_ratio(&f(0, 1), &Proj::Infinity, &f(1, 1), &f(5, 1)).unwrap(), q(1, 5));
    }

    #[test]
    fn cross_ratio_rejects_quaternions() {
        let one = Proj::Finite(Quaternion::from_rational(&q(1, 1)));
        let e = cross_ratio(&one, &Proj::Infinity, &one, &one).unwrap_err();
        assert!(matches!(e, Error::Capability(_)));
    }

    #[test]
    fn octonion_replay_matches_construction() {
        let pl = AltPlane::<Octonion>::new();
        let o = |n: i64| Octonion::from_rational(&q(n, 1));
        let (a, b, c) = (Point::new(o(0), o(0)), Point::new(o(1), o(0)), Point::new(o(2), o(0)));
        let d = ExtPoint::Proper(Point::new(Octonion::from_rational(&q(2, 3)), o(0)));
        assert!(harmonic_check(&pl, &a, &b, &c, &d).unwrap());
    }

    #[test]
    fn scale_matches_closed_form() {
        let pl = SkewPlane::<Rational>::new();
        let pts = harmonic_scale(&pl, &on_axis(q(0, 1)), &on_axis(q(1, 1)), &on_axis(q(2, 1)), 6).unwrap();
        for (i, p) in pts.iter().enumerate() {
            let i = i as i64 + 1;
            assert_eq!(p, &on_axis(q(2 * (i + 1), i + 2)));
        }
    }
}
