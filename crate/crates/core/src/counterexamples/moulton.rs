use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::CounterexampleReport;
use crate::configtheorems::{check_desargues, vertex_joins, DesarguesConfig, DesarguesDirection};
use crate::error::Result;
use crate::numbersystems::{Precision, Sample};
use crate::planes::{ExtPoint, MoultonPlane, Plane, Point, SkewPlane};
use crate::report::svg::SvgScene;
use crate::report::{split_seed, Verdict, Witness};
use crate::scalars::Rational;

/// Defining data of a triangle pair with pairwise parallel sides: the
/// first triangle, the vertex `1'`, and the parameter placing `2'` on the
/// parallel to `12` through `1'`. Vertex `3'` is the meet of the parallels
/// to `13` and `23` through `1'` and `2'`.
#[derive(Clone, Debug, PartialEq)]
pub struct MoultonDesargues {
    pub tri: [Point<Rational>; 3],
    pub p1: Point<Rational>,
    pub r: Rational,
}

impl MoultonDesargues {
    /// Builds the configuration in `plane`.
    pub fn build<P: Plane<S = Rational>>(&self, plane: &P) -> Result<DesarguesConfig<Rational>> {
        let [a, b, c] = &self.tri;
        let l12 = plane.parallel_through(&plane.join(a, b)?, &self.p1);
        let p2 = plane.point_on(&l12, &self.r);
        let l13 = plane.parallel_through(&plane.join(a, c)?, &self.p1);
        let l23 = plane.parallel_through(&plane.join(b, c)?, &p2);
        let p3 = plane.meet(&l13, &l23)?.expect_proper("3' = parallels to 13 and 23")?;
        Ok(DesarguesConfig { center: None, tri: self.tri.clone(), tri2: [self.p1.clone(), p2, p3] })
    }
}

/// A frozen search hit: the seed and attempt that produced it, the
/// defining data, and the raw coordinates of all six vertices.
#[derive(Clone, Copy, Debug)]
pub struct FrozenMoulton {
    pub seed: u64,
    pub attempt: u64,
    pub tri: [[&'static str; 2]; 3],
    pub p1: [&'static str; 2],
    pub r: &'static str,
    pub tri2: [[&'static str; 2]; 3],
}

/// Found by `search_moulton_desargues(2024, _)`; rerun with
/// `cargo run --example moulton_search -- 2024`.
pub const FROZEN_MOULTON: FrozenMoulton = FrozenMoulton {
    seed: 2024,
    attempt: 0,
    tri: [["2", "-4"], ["-4", "-2"], ["4", "5"]],
    p1: ["-1", "2"],
    r: "3",
    tri2: [["-1", "2"], ["3", "4/3"], ["-187/87", "-92/29"]],
};

fn q(s: &str) -> Rational {
    s.parse().expect("frozen rational")
}

fn pt(c: &[&str; 2]) -> Point<Rational> {
    Point::new(q(c[0]), q(c[1]))
}

impl FrozenMoulton {
    pub fn defining(&self) -> MoultonDesargues {
        MoultonDesargues { tri: self.tri.each_ref().map(pt), p1: pt(&self.p1), r: q(self.r) }
    }

    pub fn raw(&self) -> DesarguesConfig<Rational> {
        DesarguesConfig { center: None, tri: self.tri.each_ref().map(pt), tri2: self.tri2.each_ref().map(pt) }
    }
}

fn straddles(pts: &[Point<Rational>]) -> bool {
    let up = pts.iter().any(|p| p.y > Rational::zero());
    let down = pts.iter().any(|p| p.y < Rational::zero());
    up && down
}

fn candidate(rng: &mut ChaCha8Rng) -> MoultonDesargues {
    let prec = Precision::default();
    let mut p = || Point::new(Rational::sample_coord(rng, prec), Rational::sample_coord(rng, prec));
    let tri = [p(), p(), p()];
    let p1 = p();
    let r = Rational::sample_coord(rng, prec);
    MoultonDesargues { tri, p1, r }
}

fn is_hit(d: &MoultonDesargues) -> Option<DesarguesConfig<Rational>> {
    let cfg = d.build(&MoultonPlane::new()).ok()?;
    let all: Vec<_> = cfg.tri.iter().chain(cfg.tri2.iter()).cloned().collect();
    if !straddles(&all) {
        return None;
    }
    let v = check_desargues(&MoultonPlane::new(), &cfg, DesarguesDirection::AxialToPerspective).ok()?;
    v.is_fails().then_some(cfg)
}

/// Seeded search for axial triangles in the Moulton plane whose vertex
/// joins are not concurrent. Attempt `i` draws small integer coordinates
/// from `split_seed(seed, i)`; the first hit in attempt order is returned.
pub fn search_moulton_desargues(seed: u64, budget: u64) -> Option<(u64, MoultonDesargues, DesarguesConfig<Rational>)> {
    (0..budget).into_par_iter().find_map_first(|i| {
        let mut rng = ChaCha8Rng::seed_from_u64(split_seed(seed, i));
        let d = candidate(&mut rng);
        is_hit(&d).map(|cfg| (i, d, cfg))
    })
}

/// Join and meet against the incidence axioms on `n` random pairs of
/// points and `n` random pairs of lines.
pub fn moulton_incidence_check(n: u64, seed: u64) -> Verdict {
    let pl = MoultonPlane::new();
    let bad = (0..n).into_par_iter().find_map_first(|i| {
        let mut rng = ChaCha8Rng::seed_from_u64(split_seed(seed, i));
        let mut c = || Rational::sample(&mut rng, Precision::default());
        let (p, q, r, s, u) =
            (Point::new(c(), c()), Point::new(c(), c()), Point::new(c(), c()), Point::new(c(), c()), c());
        if p == q || r == s {
            return None;
        }
        let l = pl.join(&p, &q).ok()?;
        if !pl.on_line(&p, &l) || !pl.on_line(&q, &l) {
            return Some(
                Witness::new().with("P", &p).with("Q", &q).with("PQ", &l).with("axiom", "join contains both points"),
            );
        }
        let x = pl.point_on(&l, &u);
        if !pl.on_line(&x, &l) || (x != p && !pl.same_line(&pl.join(&p, &x).ok()?, &l)) {
            return Some(Witness::new().with("P", &p).with("X", &x).with("PQ", &l).with("axiom", "join is unique"));
        }
        let m = pl.join(&r, &s).ok()?;
        if pl.same_line(&l, &m) {
            return None;
        }
        match pl.meet(&l, &m).ok()? {
            ExtPoint::Proper(z) if !(pl.on_line(&z, &l) && pl.on_line(&z, &m)) => Some(
                Witness::new().with("l", &l).with("m", &m).with("meet", &z).with("axiom", "meet lies on both lines"),
            ),
            ExtPoint::Ideal(_) if !pl.parallel(&l, &m) => {
                Some(Witness::new().with("l", &l).with("m", &m).with("axiom", "lines without a meet are parallel"))
            }
            _ => None,
        }
    });
    match bad {
        Some(w) => Verdict::fails(w, "Moulton incidence axiom violated"),
        None => Verdict::holds(format!("incidence axioms on {n} samples")),
    }
}

const INCIDENCE_N: u64 = 10_000;

fn scene(cfg: &DesarguesConfig<Rational>) -> Result<String> {
    let pl = MoultonPlane::new();
    let mut sc = SvgScene::new("Desargues failure in the Moulton plane");
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        sc.line(&pl.join(&cfg.tri[i], &cfg.tri[j])?, "#1f77b4");
        sc.line(&pl.join(&cfg.tri2[i], &cfg.tri2[j])?, "#d62728");
    }
    for l in vertex_joins(&pl, cfg)? {
        sc.line(&l, "#888888");
    }
    for (i, p) in cfg.tri.iter().enumerate() {
        sc.point(p, format!("{}", i + 1));
    }
    for (i, p) in cfg.tri2.iter().enumerate() {
        sc.point(p, format!("{}'", i + 1));
    }
    Ok(sc.render())
}

/// The frozen search hit, re-checked from its raw coordinates.
pub fn desargues_fails_moulton() -> Result<CounterexampleReport> {
    let frozen = FROZEN_MOULTON;
    let raw = frozen.raw();
    let moulton = MoultonPlane::new();
    let verdict = check_desargues(&moulton, &raw, DesarguesDirection::AxialToPerspective)?;

    let defining = frozen.defining();
    let rebuilt = defining.build(&moulton)?;
    let rational = SkewPlane::<Rational>::new();
    let field_cfg = defining.build(&rational)?;
    let field = check_desargues(&rational, &field_cfg, DesarguesDirection::AxialToPerspective)?;
    let incidence = moulton_incidence_check(INCIDENCE_N, frozen.seed);

    let sides_parallel = [(0, 1), (0, 2), (1, 2)].iter().all(|&(i, j)| {
        match (moulton.join(&raw.tri[i], &raw.tri[j]), moulton.join(&raw.tri2[i], &raw.tri2[j])) {
            (Ok(l), Ok(m)) => moulton.parallel(&l, &m),
            _ => false,
        }
    });
    let all: Vec<_> = raw.tri.iter().chain(raw.tri2.iter()).cloned().collect();
    let checks = [
        ("raw vertices rebuild from the defining data", rebuilt.tri == raw.tri && rebuilt.tri2 == raw.tri2),
        ("corresponding sides parallel", sides_parallel),
        ("configuration straddles y = 0", straddles(&all)),
        ("Moulton verdict fails", verdict.is_fails()),
        ("rational-plane rebuild holds", field.is_holds()),
        ("Moulton incidence axioms", incidence.is_holds()),
    ];
    let verified = checks.iter().all(|c| c.1);
    let mut controls = Witness::new()
        .with("rational-plane rebuild", format!("{}: {}", field.status, field.note))
        .with("incidence", format!("{}: {}", incidence.status, incidence.note));
    for (name, ok) in checks {
        controls.push(name, if ok { "ok" } else { "MISMATCH" });
    }

    let mut construction =
        Witness::new().with("seed", frozen.seed).with("attempt", frozen.attempt).with("r", &defining.r);
    for (i, p) in raw.tri.iter().enumerate() {
        construction.push(format!("{}", i + 1), p);
    }
    for (i, p) in raw.tri2.iter().enumerate() {
        construction.push(format!("{}'", i + 1), p);
    }
    let mut witness = verdict.witness.clone().unwrap_or_default();
    if let Ok(joins) = vertex_joins(&moulton, &raw) {
        for (i, l) in joins.iter().enumerate() {
            witness.push(format!("join {}{}'", i + 1, i + 1), l);
        }
    }
    Ok(CounterexampleReport {
        name: "desargues-moulton".into(),
        system: "moulton".into(),
        construction,
        violated_claim: "axial triangles are perspective".into(),
        verdict,
        witness,
        controls,
        verified,
        svg: Some(scene(&raw)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_config_verifies() {
        let r = desargues_fails_moulton().unwrap();
        assert!(r.verified, "{:?}", r.controls);
        assert!(r.verdict.is_fails());
        assert!(r.svg.unwrap().contains("<svg"));
    }

    #[test]
    fn search_reproduces_the_frozen_hit() {
        let f = FROZEN_MOULTON;
        let (i, d, cfg) = search_moulton_desargues(f.seed, f.attempt + 1).expect("hit within budget");
        assert_eq!(i, f.attempt);
        assert_eq!(d, f.defining());
        assert_eq!((cfg.tri, cfg.tri2), (f.raw().tri, f.raw().tri2));
    }

    #[test]
    fn incidence_small() {
        assert!(moulton_incidence_check(500, 1).is_holds());
    }
}
