//! Seeded configuration samplers and the parallel suite runner.
//!
//! Special positions are imposed by construction: a vertex that must lie
//! on a side is placed on that side, never found by rejection. Rejection
//! is used only to skip coincidences.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    axis_points, check_desargues, check_pappus, validate_pappus, validate_triangles, vertex_joins, DesarguesConfig,
    DesarguesDirection, PappusConfig,
};
use crate::error::{Error, Result};
use crate::numbersystems::{Precision, Sample, Scalar};
use crate::planes::{join_ext, ExtPoint, Plane, Point};
use crate::report::{split_seed, SuiteReport, Verdict};

const SAMPLE_BUDGET: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PappusVariant {
    /// Two random carrier lines.
    General,
    /// Parallel carrier lines.
    Parallel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DesarguesVariant {
    D0,
    /// Vertex 3 on side 1'2'.
    D1,
    /// Vertex 3 on side 1'2' and vertex 3' on side 12.
    D2a,
    /// `A` on 11' and `B` on 22'.
    D2b,
    /// Vertices 1 and 2 on sides 2'3' and 1'3'.
    D2c,
    /// Center on the axis.
    Little,
}

impl DesarguesVariant {
    pub const ALL: [DesarguesVariant; 6] = [
        DesarguesVariant::D0,
        DesarguesVariant::D1,
        DesarguesVariant::D2a,
        DesarguesVariant::D2b,
        DesarguesVariant::D2c,
        DesarguesVariant::Little,
    ];

    /// The direction in which the special position can be imposed without
    /// presupposing the conclusion. `D2b` fixes two axis points, so its
    /// configurations are built axial and checked for perspectivity.
    pub fn natural_direction(self) -> DesarguesDirection {
        match self {
            DesarguesVariant::D2b => DesarguesDirection::AxialToPerspective,
            _ => DesarguesDirection::PerspectiveToAxial,
        }
    }

    pub fn supports(self, dir: DesarguesDirection) -> bool {
        self == DesarguesVariant::D0 || dir == self.natural_direction()
    }
}

impl fmt::Display for DesarguesVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DesarguesVariant::D0 => "d0",
            DesarguesVariant::D1 => "d1",
            DesarguesVariant::D2a => "d2a",
            DesarguesVariant::D2b => "d2b",
            DesarguesVariant::D2c => "d2c",
            DesarguesVariant::Little => "little",
        })
    }
}

impl fmt::Display for PappusVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PappusVariant::General => "general",
            PappusVariant::Parallel => "parallel",
        })
    }
}

/// A sampled configuration theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    Pappus(PappusVariant),
    Desargues(DesarguesVariant, DesarguesDirection),
}

impl Theorem {
    pub fn desargues(v: DesarguesVariant) -> Theorem {
        Theorem::Desargues(v, v.natural_direction())
    }

    pub fn name(&self) -> &'static str {
        match self {
            Theorem::Pappus(_) => "pappus",
            Theorem::Desargues(..) => "desargues",
        }
    }

    pub fn variant(&self) -> String {
        match self {
            Theorem::Pappus(v) => v.to_string(),
            Theorem::Desargues(v, d) if *d == v.natural_direction() => v.to_string(),
            Theorem::Desargues(v, _) => format!("{v}-converse"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Config<S, L> {
    Pappus(PappusConfig<S, L>),
    Desargues(DesarguesConfig<S>, DesarguesDirection),
}

impl<S: Sample, L> Config<S, L> {
    pub fn check<P: Plane<S = S, Line = L>>(&self, plane: &P) -> Result<Verdict> {
        match self {
            Config::Pappus(c) => check_pappus(plane, c),
            Config::Desargues(c, d) => check_desargues(plane, c, *d),
        }
    }
}

struct Sampler<'a, P: Plane, R> {
    plane: &'a P,
    rng: &'a mut R,
    prec: Precision,
}

impl<P: Plane, R: Rng> Sampler<'_, P, R>
where
    P::S: Sample,
{
    fn scalar(&mut self) -> P::S {
        P::S::sample_coord(self.rng, self.prec)
    }

    fn point(&mut self) -> Point<P::S> {
        Point::new(self.scalar(), self.scalar())
    }

    fn line(&mut self) -> Result<P::Line> {
        let (p, q) = (self.point(), self.point());
        self.plane.join(&p, &q)
    }

    fn on(&mut self, l: &P::Line) -> Point<P::S> {
        let r = self.scalar();
        self.plane.point_on(l, &r)
    }

    fn on_join(&mut self, p: &Point<P::S>, q: &Point<P::S>) -> Result<Point<P::S>> {
        let r = self.scalar();
        self.plane.point_on_join(p, q, &r)
    }

    fn meet_proper(&self, l: &P::Line, m: &P::Line, step: &str) -> Result<Point<P::S>> {
        self.plane.meet(l, m)?.expect_proper(step)
    }

    fn join_ext(&self, p: &ExtPoint<P::S>, q: &ExtPoint<P::S>) -> Result<P::Line> {
        join_ext(self.plane, p, q)
    }

    fn pappus(&mut self, variant: PappusVariant) -> Result<PappusConfig<P::S, P::Line>> {
        let g = self.line()?;
        let h = match variant {
            PappusVariant::General => self.line()?,
            PappusVariant::Parallel => {
                let p = self.point();
                self.plane.parallel_through(&g, &p)
            }
        };
        let vertices = std::array::from_fn(|i| if i % 2 == 0 { self.on(&g) } else { self.on(&h) });
        let cfg = PappusConfig { g, h, vertices };
        validate_pappus(self.plane, &cfg)?;
        Ok(cfg)
    }

    fn desargues(&mut self, variant: DesarguesVariant, dir: DesarguesDirection) -> Result<DesarguesConfig<P::S>> {
        if !variant.supports(dir) {
            return Err(Error::domain(format!("variant {variant} is only sampled as {}", variant.natural_direction())));
        }
        let pl = self.plane;
        let cfg = match (variant, dir) {
            (DesarguesVariant::D0, DesarguesDirection::AxialToPerspective) => {
                let tri: [Point<P::S>; 3] = std::array::from_fn(|_| self.point());
                let axis = self.line()?;
                let side = |i: usize, j: usize| pl.join(&tri[i], &tri[j]);
                let a = pl.meet(&side(1, 2)?, &axis)?;
                let b = pl.meet(&side(0, 2)?, &axis)?;
                let c = pl.meet(&side(0, 1)?, &axis)?;
                let p1 = self.point();
                let l1c = self.join_ext(&ExtPoint::Proper(p1.clone()), &c)?;
                let p2 = self.on(&l1c);
                let l2 = self.join_ext(&ExtPoint::Proper(p2.clone()), &a)?;
                let l1 = self.join_ext(&ExtPoint::Proper(p1.clone()), &b)?;
                let p3 = self.meet_proper(&l2, &l1, "3' = 2'A ∩ 1'B")?;
                DesarguesConfig { center: None, tri, tri2: [p1, p2, p3] }
            }
            (DesarguesVariant::D2b, _) => {
                let o = self.point();
                let (v1, v2) = (self.point(), self.point());
                let l1 = pl.join(&o, &v1)?;
                let l2 = pl.join(&o, &v2)?;
                let (w1, w2) = (self.on(&l1), self.on(&l2));
                let c = pl.meet(&pl.join(&v1, &v2)?, &pl.join(&w1, &w2)?)?;
                let a = ExtPoint::Proper(self.on(&l1));
                let axis = self.join_ext(&a, &c)?;
                let b = pl.meet(&axis, &l2)?;
                let pr = |p: &Point<P::S>| ExtPoint::Proper(p.clone());
                let v3 =
                    self.meet_proper(&self.join_ext(&pr(&v2), &a)?, &self.join_ext(&pr(&v1), &b)?, "3 = 2A ∩ 1B")?;
                let w3 =
                    self.meet_proper(&self.join_ext(&pr(&w2), &a)?, &self.join_ext(&pr(&w1), &b)?, "3' = 2'A ∩ 1'B")?;
                DesarguesConfig { center: None, tri: [v1, v2, v3], tri2: [w1, w2, w3] }
            }
            (DesarguesVariant::D2c, _) => {
                let o = self.point();
                let tri2: [Point<P::S>; 3] = std::array::from_fn(|_| self.point());
                let v1 = self.meet_proper(&pl.join(&o, &tri2[0])?, &pl.join(&tri2[1], &tri2[2])?, "1 = O1' ∩ 2'3'")?;
                let v2 = self.meet_proper(&pl.join(&o, &tri2[1])?, &pl.join(&tri2[0], &tri2[2])?, "2 = O2' ∩ 1'3'")?;
                let v3 = self.on_join(&o, &tri2[2])?;
                DesarguesConfig { center: Some(ExtPoint::Proper(o)), tri: [v1, v2, v3], tri2 }
            }
            (DesarguesVariant::Little, _) => {
                let o = self.point();
                let axis = pl.join(&o, &self.point())?;
                let tri: [Point<P::S>; 3] = std::array::from_fn(|_| self.point());
                let w1 = self.on_join(&o, &tri[0])?;
                let c = pl.meet(&pl.join(&tri[0], &tri[1])?, &axis)?;
                let b = pl.meet(&pl.join(&tri[0], &tri[2])?, &axis)?;
                let pw1 = ExtPoint::Proper(w1.clone());
                let w2 = self.meet_proper(&pl.join(&o, &tri[1])?, &self.join_ext(&pw1, &c)?, "2' = O2 ∩ 1'C")?;
                let w3 = self.meet_proper(&pl.join(&o, &tri[2])?, &self.join_ext(&pw1, &b)?, "3' = O3 ∩ 1'B")?;
                DesarguesConfig { center: Some(ExtPoint::Proper(o)), tri, tri2: [w1, w2, w3] }
            }
            (v, _) => {
                let o = self.point();
                let (v1, v2) = (self.point(), self.point());
                let w1 = self.on_join(&o, &v1)?;
                let w2 = self.on_join(&o, &v2)?;
                let v3 = if v == DesarguesVariant::D0 { self.point() } else { self.on_join(&w1, &w2)? };
                let w3 = if v == DesarguesVariant::D2a {
                    self.meet_proper(&pl.join(&o, &v3)?, &pl.join(&v1, &v2)?, "3' = O3 ∩ 12")?
                } else {
                    self.on_join(&o, &v3)?
                };
                DesarguesConfig { center: Some(ExtPoint::Proper(o)), tri: [v1, v2, v3], tri2: [w1, w2, w3] }
            }
        };
        validate_triangles(pl, &cfg)?;
        axis_points(pl, &cfg)?;
        let joins = vertex_joins(pl, &cfg)?;
        if let Some(ExtPoint::Proper(o)) = &cfg.center {
            if cfg.tri.iter().chain(cfg.tri2.iter()).any(|v| v.same(o)) {
                return Err(Error::degenerate("center coincides with a vertex"));
            }
        }
        if (0..3).any(|i| (i + 1..3).any(|j| pl.same_line(&joins[i], &joins[j]))) {
            return Err(Error::degenerate("vertex joins coincide"));
        }
        Ok(cfg)
    }
}

fn retry<T>(mut attempt: impl FnMut() -> Result<T>) -> Result<T> {
    let mut last = Error::degenerate("sampling budget exhausted");
    for _ in 0..SAMPLE_BUDGET {
        match attempt() {
            Ok(v) => return Ok(v),
            Err(e @ Error::Capability(_)) => return Err(e),
            Err(e) => last = e,
        }
    }
    Err(Error::degenerate(format!("sampling budget exhausted (last: {last})")))
}

pub fn sample_pappus<P: Plane, R: Rng>(
    plane: &P,
    variant: PappusVariant,
    rng: &mut R,
    prec: Precision,
) -> Result<PappusConfig<P::S, P::Line>>
where
    P::S: Sample,
{
    let mut s = Sampler { plane, rng, prec };
    retry(|| s.pappus(variant))
}

pub fn sample_desargues<P: Plane, R: Rng>(
    plane: &P,
    variant: DesarguesVariant,
    dir: DesarguesDirection,
    rng: &mut R,
    prec: Precision,
) -> Result<DesarguesConfig<P::S>>
where
    P::S: Sample,
{
    if !variant.supports(dir) {
        return Err(Error::domain(format!("variant {variant} is only sampled as {}", variant.natural_direction())));
    }
    let mut s = Sampler { plane, rng, prec };
    retry(|| s.desargues(variant, dir))
}

/// The configuration drawn for sample `index` of a suite with `seed`.
pub fn sample_config<P: Plane>(
    plane: &P,
    theorem: Theorem,
    seed: u64,
    index: u64,
    prec: Precision,
) -> Result<Config<P::S, P::Line>>
where
    P::S: Sample,
{
    let mut rng = ChaCha8Rng::seed_from_u64(split_seed(seed, index));
    match theorem {
        Theorem::Pappus(v) => sample_pappus(plane, v, &mut rng, prec).map(Config::Pappus),
        Theorem::Desargues(v, d) => sample_desargues(plane, v, d, &mut rng, prec).map(|c| Config::Desargues(c, d)),
    }
}

/// How often a truncated sample is redrawn with doubled windows.
const PRECISION_RETRIES: usize = 1;

/// Verdict for sample `index`. When truncation hides the answer the same
/// figure is drawn again with both windows doubled, at most
/// [`PRECISION_RETRIES`] times; coordinates do not depend on the windows.
pub fn evaluate<P: Plane>(plane: &P, theorem: Theorem, seed: u64, index: u64, prec: Precision) -> Result<Verdict>
where
    P::S: Sample,
{
    let mut prec = prec;
    let mut attempt = 0;
    loop {
        let v = match sample_config(plane, theorem, seed, index, prec) {
            Ok(cfg) => cfg.check(plane)?,
            Err(e) => Verdict::from_error(e)?,
        };
        if !v.is_precision_loss() || attempt == PRECISION_RETRIES || !<P::S as Scalar>::KIND.truncated() {
            return Ok(v);
        }
        attempt += 1;
        prec.t_terms *= 2;
        prec.s_terms *= 2;
    }
}

/// Checks `n` independently seeded configurations in parallel and folds
/// the verdicts in sample order, so the report does not depend on thread
/// scheduling.
pub fn run_suite<P: Plane>(plane: &P, theorem: Theorem, n: u64, seed: u64, prec: Precision) -> Result<SuiteReport>
where
    P::S: Sample,
{
    if n == 0 {
        return Err(Error::domain("suite needs n >= 1"));
    }
    if let Theorem::Desargues(v, d) = theorem {
        if !v.supports(d) {
            return Err(Error::domain(format!("variant {v} is only sampled as {}", v.natural_direction())));
        }
    }
    let verdicts =
        (0..n).into_par_iter().map(|i| evaluate(plane, theorem, seed, i, prec)).collect::<Result<Vec<Verdict>>>()?;
    Ok(SuiteReport::new(theorem.name(), &theorem.variant(), &plane.system(), n, seed).absorb(&verdicts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configtheorems::{classify_special_case, SpecialCase};
    use crate::numbersystems::Octonion;
    use crate::planes::{AltPlane, SkewPlane};
    use crate::scalars::Rational;

    #[test]
    fn same_seed_same_config() {
        let pl = SkewPlane::<Rational>::new();
        let t = Theorem::Pappus(PappusVariant::General);
        let a = sample_config(&pl, t, 0, 0, Precision::default()).unwrap();
        let b = sample_config(&pl, t, 0, 0, Precision::default()).unwrap();
        let (Config::Pappus(a), Config::Pappus(b)) = (a, b) else { panic!() };
        assert_eq!(a.vertices, b.vertices);
    }

    #[test]
    fn constrained_variants_classify() {
        let pl = AltPlane::<Octonion>::new();
        let want = [
            (DesarguesVariant::D1, vec![SpecialCase::D1]),
            (DesarguesVariant::D2a, vec![SpecialCase::D1, SpecialCase::D2a]),
            (DesarguesVariant::D2b, vec![SpecialCase::D1, SpecialCase::D2b]),
            (DesarguesVariant::D2c, vec![SpecialCase::D1, SpecialCase::D2c]),
        ];
        for (v, cases) in want {
            for i in 0..10 {
                let Config::Desargues(cfg, _) =
                    sample_config(&pl, Theorem::desargues(v), 3, i, Precision::default()).unwrap()
                else {
                    panic!()
                };
                let got = classify_special_case(&pl, &cfg);
                for c in &cases {
                    assert!(got.contains(c), "{v}: {got:?}");
                }
            }
        }
    }

    #[test]
    fn rational_suites_hold() {
        let pl = SkewPlane::<Rational>::new();
        for t in [
            Theorem::Pappus(PappusVariant::General),
            Theorem::Pappus(PappusVariant::Parallel),
            Theorem::desargues(DesarguesVariant::D0),
            Theorem::Desargues(DesarguesVariant::D0, DesarguesDirection::AxialToPerspective),
            Theorem::desargues(DesarguesVariant::Little),
        ] {
            let r = run_suite(&pl, t, 50, 11, Precision::default()).unwrap();
            assert_eq!(r.holds, 50, "{r}");
        }
    }

    #[test]
    fn unsupported_direction_is_rejected() {
        let pl = SkewPlane::<Rational>::new();
        let t = Theorem::Desargues(DesarguesVariant::D1, DesarguesDirection::AxialToPerspective);
        assert!(run_suite(&pl, t, 5, 0, Precision::default()).is_err());
    }
}
