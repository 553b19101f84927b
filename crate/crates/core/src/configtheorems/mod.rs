//! Configuration theorems: Pappus, Desargues with its special cases,
//! seeded samplers and suite runners, and the constructions that connect a
//! point with the inaccessible meet of two lines.
//!
//! Checks never panic on awkward input: coincidences and missing
//! intersections become degenerate verdicts naming the failing step.

mod inaccessible;
mod sample;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

pub use inaccessible::{connect_inaccessible_d0, connect_inaccessible_hjelmslev, reflect, D0Aux};
pub use sample::{
    evaluate, run_suite, sample_config, sample_desargues, sample_pappus, Config, DesarguesVariant, PappusVariant,
    Theorem,
};

use crate::error::{Error, Result};
use crate::numbersystems::Scalar;
use crate::planes::{collinear, collinear_ext, join_ext, on_line_ext, ExtPoint, Plane, Point};
use crate::report::{Verdict, Witness};

/// Hexagon `1..6` with odd vertices on `g` and even vertices on `h`.
#[derive(Clone, Debug)]
pub struct PappusConfig<S, L> {
    pub g: L,
    pub h: L,
    pub vertices: [Point<S>; 6],
}

impl<S: Scalar, L> PappusConfig<S, L> {
    fn v(&self, i: usize) -> &Point<S> {
        &self.vertices[i - 1]
    }
}

/// Triangles `1 2 3` and `1' 2' 3'`. The center is present when the
/// configuration was built as a perspective pair.
#[derive(Clone, Debug)]
pub struct DesarguesConfig<S> {
    pub center: Option<ExtPoint<S>>,
    pub tri: [Point<S>; 3],
    pub tri2: [Point<S>; 3],
}

/// Which half of the double theorem is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DesarguesDirection {
    /// Given perspective from the center, conclude axial.
    PerspectiveToAxial,
    /// Given axial, conclude perspective.
    AxialToPerspective,
}

impl fmt::Display for DesarguesDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DesarguesDirection::PerspectiveToAxial => "perspective-to-axial",
            DesarguesDirection::AxialToPerspective => "axial-to-perspective",
        })
    }
}

/// Special positions recognised by [`classify_special_case`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialCase {
    D0Only,
    D1,
    D2a,
    D2b,
    D2c,
    Little,
}

impl fmt::Display for SpecialCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialCase::D0Only => "d0-only",
            SpecialCase::D1 => "d1",
            SpecialCase::D2a => "d2a",
            SpecialCase::D2b => "d2b",
            SpecialCase::D2c => "d2c",
            SpecialCase::Little => "little",
        })
    }
}

fn guard<T>(r: Result<T>) -> Result<std::result::Result<T, Verdict>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e) => Verdict::from_error(e).map(Err),
    }
}

/// Runs a fallible check body, turning construction failures into a
/// degenerate verdict. Capability errors still propagate.
fn verdict_of(body: impl FnOnce() -> Result<Verdict>) -> Result<Verdict> {
    Ok(guard(body())?.unwrap_or_else(|v| v))
}

fn meet_named<P: Plane>(plane: &P, l: &P::Line, m: &P::Line, step: &str) -> Result<ExtPoint<P::S>> {
    plane.meet(l, m).map_err(|e| match e {
        Error::Domain(msg) => Error::degenerate(format!("{step}: {msg}")),
        other => other,
    })
}

fn join_named<P: Plane>(plane: &P, p: &Point<P::S>, q: &Point<P::S>, step: &str) -> Result<P::Line> {
    plane.join(p, q).map_err(|e| match e {
        Error::Domain(msg) => Error::degenerate(format!("{step}: {msg}")),
        other => other,
    })
}

/// Opposite-side meets `P = 12∩45`, `Q = 23∩56`, `R = 34∩61`.
pub fn pappus_points<P: Plane>(plane: &P, cfg: &PappusConfig<P::S, P::Line>) -> Result<[ExtPoint<P::S>; 3]> {
    let side = |i: usize, j: usize| join_named(plane, cfg.v(i), cfg.v(j), &format!("side {i}{j}"));
    let p = meet_named(plane, &side(1, 2)?, &side(4, 5)?, "P = 12 ∩ 45")?;
    let q = meet_named(plane, &side(2, 3)?, &side(5, 6)?, "Q = 23 ∩ 56")?;
    let r = meet_named(plane, &side(3, 4)?, &side(6, 1)?, "R = 34 ∩ 61")?;
    Ok([p, q, r])
}

fn validate_pappus<P: Plane>(plane: &P, cfg: &PappusConfig<P::S, P::Line>) -> Result<()> {
    if plane.same_line(&cfg.g, &cfg.h) {
        return Err(Error::degenerate("carrier lines g and h coincide"));
    }
    for i in 1..=6 {
        for j in i + 1..=6 {
            if cfg.v(i).same(cfg.v(j)) {
                return Err(Error::degenerate(format!("vertices {i} and {j} coincide")));
            }
        }
        let (own, other) = if i % 2 == 1 { (&cfg.g, &cfg.h) } else { (&cfg.h, &cfg.g) };
        if !plane.on_line(cfg.v(i), own) {
            return Err(Error::domain(format!("vertex {i} is off its carrier line")));
        }
        if plane.on_line(cfg.v(i), other) {
            return Err(Error::degenerate(format!("vertex {i} lies on both carrier lines")));
        }
    }
    Ok(())
}

/// Pappus: the three opposite-side meets of the hexagon are collinear.
/// Three points at infinity count as collinear (the Pappus line is the
/// line at infinity); the note says which case occurred.
pub fn check_pappus<P: Plane>(plane: &P, cfg: &PappusConfig<P::S, P::Line>) -> Result<Verdict> {
    verdict_of(|| {
        validate_pappus(plane, cfg)?;
        let [p, q, r] = pappus_points(plane, cfg)?;
        let w = Witness::new().with("P", &p).with("Q", &q).with("R", &r);
        let ideal = [&p, &q, &r].iter().filter(|x| x.proper().is_none()).count();
        if collinear_ext(plane, [&p, &q, &r])? {
            let note = match ideal {
                0 => "P, Q, R collinear",
                3 => "P, Q, R all at infinity (affine Pappus)",
                _ => "P, Q, R collinear through a point at infinity",
            };
            Ok(Verdict::holds_with(w, note))
        } else {
            let mut w = w;
            if let Ok(pq) = join_ext(plane, &p, &q) {
                w.push("line PQ", pq);
            }
            Ok(Verdict::fails(w, "R is not on the line PQ"))
        }
    })
}

/// Meets of corresponding sides: `A = 23∩2'3'`, `B = 13∩1'3'`, `C = 12∩1'2'`.
pub fn axis_points<P: Plane>(plane: &P, cfg: &DesarguesConfig<P::S>) -> Result<[ExtPoint<P::S>; 3]> {
    let (t, u) = (&cfg.tri, &cfg.tri2);
    let mut out = Vec::with_capacity(3);
    for (name, i, j) in [("A", 1, 2), ("B", 0, 2), ("C", 0, 1)] {
        let s = join_named(plane, &t[i], &t[j], &format!("side {}{}", i + 1, j + 1))?;
        let s2 = join_named(plane, &u[i], &u[j], &format!("side {}'{}'", i + 1, j + 1))?;
        if plane.same_line(&s, &s2) {
            return Err(Error::degenerate(format!("corresponding sides for {name} coincide")));
        }
        out.push(meet_named(plane, &s, &s2, name)?);
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

/// Lines `ii'` through corresponding vertices.
pub fn vertex_joins<P: Plane>(plane: &P, cfg: &DesarguesConfig<P::S>) -> Result<[P::Line; 3]> {
    let l = |i: usize| join_named(plane, &cfg.tri[i], &cfg.tri2[i], &format!("join {}{}'", i + 1, i + 1));
    Ok([l(0)?, l(1)?, l(2)?])
}

fn validate_triangles<P: Plane>(plane: &P, cfg: &DesarguesConfig<P::S>) -> Result<()> {
    for (name, t) in [("123", &cfg.tri), ("1'2'3'", &cfg.tri2)] {
        if collinear(plane, &t[0], &t[1], &t[2])
            .map_err(|_| Error::degenerate(format!("triangle {name} has repeated vertices")))?
        {
            return Err(Error::degenerate(format!("triangle {name} is flat")));
        }
    }
    for i in 0..3 {
        if cfg.tri[i].same(&cfg.tri2[i]) {
            return Err(Error::degenerate(format!("vertices {} and {}' coincide", i + 1, i + 1)));
        }
    }
    Ok(())
}

/// Desargues in either direction. Forward: the vertex joins pass through
/// the center, and the verdict says whether `A`, `B`, `C` are collinear.
/// Converse: `A`, `B`, `C` are collinear, and the verdict says whether the
/// vertex joins are concurrent (possibly at infinity).
pub fn check_desargues<P: Plane>(
    plane: &P,
    cfg: &DesarguesConfig<P::S>,
    direction: DesarguesDirection,
) -> Result<Verdict> {
    verdict_of(|| {
        validate_triangles(plane, cfg)?;
        let joins = vertex_joins(plane, cfg)?;
        match direction {
            DesarguesDirection::PerspectiveToAxial => {
                let o = cfg.center.as_ref().ok_or_else(|| Error::domain("perspective check needs a center"))?;
                for (i, l) in joins.iter().enumerate() {
                    if let ExtPoint::Proper(p) = o {
                        if p.same(&cfg.tri[i]) || p.same(&cfg.tri2[i]) {
                            return Err(Error::degenerate(format!("center coincides with vertex {}", i + 1)));
                        }
                    }
                    if !on_line_ext(plane, o, l) {
                        return Err(Error::domain(format!("join {}{}' misses the center", i + 1, i + 1)));
                    }
                }
                let [a, b, c] = axis_points(plane, cfg)?;
                let w = Witness::new().with("O", o).with("A", &a).with("B", &b).with("C", &c);
                if collinear_ext(plane, [&a, &b, &c])? {
                    Ok(Verdict::holds_with(w, "A, B, C collinear"))
                } else {
                    Ok(Verdict::fails(w, "perspective triangles are not axial: A, B, C not collinear"))
                }
            }
            DesarguesDirection::AxialToPerspective => {
                let [a, b, c] = axis_points(plane, cfg)?;
                if !collinear_ext(plane, [&a, &b, &c])? {
                    return Err(Error::domain("converse check needs axial triangles"));
                }
                for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                    if plane.same_line(&joins[i], &joins[j]) {
                        return Err(Error::degenerate(format!("vertex joins {} and {} coincide", i + 1, j + 1)));
                    }
                }
                let o = meet_named(plane, &joins[0], &joins[1], "O = 11' ∩ 22'")?;
                let w = Witness::new().with("A", &a).with("B", &b).with("C", &c).with("O = 11' ∩ 22'", &o);
                if on_line_ext(plane, &o, &joins[2]) {
                    Ok(Verdict::holds_with(w, "vertex joins concurrent"))
                } else {
                    let mut w = w;
                    w.push("join 33'", &joins[2]);
                    Ok(Verdict::fails(w, "axial triangles are not perspective: 33' misses O"))
                }
            }
        }
    })
}

/// All special-position incidences the configuration satisfies exactly.
pub fn classify_special_case<P: Plane>(plane: &P, cfg: &DesarguesConfig<P::S>) -> BTreeSet<SpecialCase> {
    let mut out = BTreeSet::new();
    let sides = |t: &[Point<P::S>; 3]| -> Vec<P::Line> {
        [(0, 1), (0, 2), (1, 2)].iter().filter_map(|&(i, j)| plane.join(&t[i], &t[j]).ok()).collect()
    };
    let on_sides = |vs: &[Point<P::S>; 3], other: &[Point<P::S>; 3]| -> usize {
        let ls = sides(other);
        vs.iter().filter(|v| ls.iter().any(|l| plane.on_line(v, l))).count()
    };
    let first = on_sides(&cfg.tri, &cfg.tri2);
    let second = on_sides(&cfg.tri2, &cfg.tri);

    let axis = axis_points(plane, cfg).ok();
    let joins = vertex_joins(plane, cfg).ok();
    let mut axis_on_joins = false;
    let mut two_axis_on_two_joins = false;
    if let (Some(ax), Some(js)) = (&axis, &joins) {
        let inc: Vec<Vec<bool>> = ax.iter().map(|p| js.iter().map(|l| on_line_ext(plane, p, l)).collect()).collect();
        axis_on_joins = inc.iter().flatten().any(|&b| b);
        'outer: for x in 0..3 {
            for y in 0..3 {
                if x == y || ax[x].same(&ax[y]) {
                    continue;
                }
                for i in 0..3 {
                    for j in 0..3 {
                        if i != j && inc[x][i] && inc[y][j] && !plane.same_line(&js[i], &js[j]) {
                            two_axis_on_two_joins = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
    }

    if first + second > 0 || axis_on_joins {
        out.insert(SpecialCase::D1);
    }
    if first > 0 && second > 0 {
        out.insert(SpecialCase::D2a);
    }
    if two_axis_on_two_joins {
        out.insert(SpecialCase::D2b);
    }
    if first >= 2 || second >= 2 {
        out.insert(SpecialCase::D2c);
    }
    if let (Some(o), Some(ax)) = (&cfg.center, &axis) {
        let distinct: Vec<&ExtPoint<P::S>> = ax.iter().fold(Vec::new(), |mut acc, p| {
            if !acc.iter().any(|q: &&ExtPoint<P::S>| q.same(p)) {
                acc.push(p);
            }
            acc
        });
        if distinct.len() >= 2
            && collinear_ext(plane, [&ax[0], &ax[1], &ax[2]]).unwrap_or(false)
            && collinear_ext(plane, [o, distinct[0], distinct[1]]).unwrap_or(false)
        {
            out.insert(SpecialCase::Little);
        }
    }
    if out.is_empty() {
        out.insert(SpecialCase::D0Only);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planes::{Direction, SkewPlane};
    use crate::scalars::Rational;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pt(x: &str, y: &str) -> Point<Rational> {
        Point::new(q(x), q(y))
    }

    fn rational_hexagon() -> PappusConfig<Rational, crate::planes::SkewLine<Rational>> {
        let pl = SkewPlane::<Rational>::new();
        let v = [pt("1", "0"), pt("1", "1"), pt("2", "0"), pt("2", "1"), pt("3", "0"), pt("3", "1")];
        PappusConfig { g: pl.join(&v[0], &v[2]).unwrap(), h: pl.join(&v[1], &v[3]).unwrap(), vertices: v }
    }

    #[test]
    fn pappus_rational_hexagon() {
        let pl = SkewPlane::<Rational>::new();
        let cfg = rational_hexagon();
        let [p, q_, r] = pappus_points(&pl, &cfg).unwrap();
        assert_eq!(p, ExtPoint::Proper(pt("1", "2")));
        assert_eq!(q_, ExtPoint::Proper(pt("3", "-1")));
        assert_eq!(r, ExtPoint::Proper(pt("2", "1/2")));
        let v = check_pappus(&pl, &cfg).unwrap();
        assert!(v.is_holds(), "{v:?}");
        assert_eq!(v.note, "P, Q, R collinear");
    }

    #[test]
    fn pappus_repeated_vertex_is_degenerate() {
        let pl = SkewPlane::<Rational>::new();
        let mut cfg = rational_hexagon();
        cfg.vertices[4] = cfg.vertices[0].clone();
        let v = check_pappus(&pl, &cfg).unwrap();
        assert_eq!(v.status, crate::report::Status::Degenerate);
        assert!(v.note.contains("1 and 5"));
    }

    #[test]
    fn pappus_line_at_infinity() {
        // parallel carriers with 12 ∥ 45, 23 ∥ 56 force 34 ∥ 61
        let pl = SkewPlane::<Rational>::new();
        let v = [pt("0", "0"), pt("1", "1"), pt("2", "0"), pt("6", "1"), pt("5", "0"), pt("4", "1")];
        let cfg = PappusConfig { g: pl.join(&v[0], &v[2]).unwrap(), h: pl.join(&v[1], &v[3]).unwrap(), vertices: v };
        let pts = pappus_points(&pl, &cfg).unwrap();
        assert!(pts.iter().all(|p| matches!(p, ExtPoint::Ideal(_))));
        let v = check_pappus(&pl, &cfg).unwrap();
        assert!(v.is_holds());
        assert!(v.note.contains("affine"));
    }

    fn perspective_example() -> DesarguesConfig<Rational> {
        DesarguesConfig {
            center: Some(ExtPoint::Proper(pt("0", "0"))),
            tri: [pt("1", "0"), pt("0", "1"), pt("1", "2")],
            tri2: [pt("3", "0"), pt("0", "2"), pt("2", "4")],
        }
    }

    #[test]
    fn desargues_both_directions_rational() {
        let pl = SkewPlane::<Rational>::new();
        let cfg = perspective_example();
        let v = check_desargues(&pl, &cfg, DesarguesDirection::PerspectiveToAxial).unwrap();
        assert!(v.is_holds(), "{v:?}");
        let v = check_desargues(&pl, &cfg, DesarguesDirection::AxialToPerspective).unwrap();
        assert!(v.is_holds(), "{v:?}");
        assert_eq!(v.witness.unwrap().get("O = 11' ∩ 22'"), Some("(0, 0)"));
        assert_eq!(classify_special_case(&pl, &cfg), BTreeSet::from([SpecialCase::D0Only]));
    }

    #[test]
    fn perspective_precondition_is_checked() {
        let pl = SkewPlane::<Rational>::new();
        let mut cfg = perspective_example();
        cfg.tri2[2] = pt("5", "3");
        let v = check_desargues(&pl, &cfg, DesarguesDirection::PerspectiveToAxial).unwrap();
        assert_eq!(v.status, crate::report::Status::Degenerate);
    }

    #[test]
    fn classify_vertex_on_side() {
        let pl = SkewPlane::<Rational>::new();
        // 3 on side 1'2' : 1' = (3,0), 2' = (0,3) so 1'2' is x + y = 3
        let cfg = DesarguesConfig {
            center: Some(ExtPoint::Proper(pt("0", "0"))),
            tri: [pt("1", "0"), pt("0", "1"), pt("1", "2")],
            tri2: [pt("3", "0"), pt("0", "3"), pt("2", "4")],
        };
        let c = classify_special_case(&pl, &cfg);
        assert!(c.contains(&SpecialCase::D1), "{c:?}");
        assert!(!c.contains(&SpecialCase::D0Only));
    }

    #[test]
    fn classify_center_on_axis() {
        let pl = SkewPlane::<Rational>::new();
        // translation-like pair: center at infinity, axis at infinity
        let cfg = DesarguesConfig {
            center: Some(ExtPoint::Ideal(Direction::Slope(Rational::zero()))),
            tri: [pt("0", "0"), pt("1", "2"), pt("2", "1")],
            tri2: [pt("5", "0"), pt("6", "2"), pt("7", "1")],
        };
        let c = classify_special_case(&pl, &cfg);
        assert!(c.contains(&SpecialCase::Little), "{c:?}");
        let v = check_desargues(&pl, &cfg, DesarguesDirection::PerspectiveToAxial).unwrap();
        assert!(v.is_holds(), "{v:?}");
    }
}
