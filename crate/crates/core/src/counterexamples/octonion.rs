use super::CounterexampleReport;
use crate::configtheorems::{
    check_desargues, evaluate, run_suite, DesarguesConfig, DesarguesDirection, DesarguesVariant, Theorem,
};
use crate::error::Result;
use crate::identities::associator;
use crate::numbersystems::{Octonion, Precision, Scalar};
use crate::planes::{AltLine, AltPlane, ExtPoint, Plane, Point};
use crate::report::{Verdict, Witness};
use crate::segcalc::{geometric_mul, AxisFrame};

type Alt = AltPlane<Octonion>;

/// The associativity figure for `a, b, c` in the standard frame.
///
/// The products come from the segment calculus. `M1 = y_e x_ab ∩ x_b y_b`
/// and `M2 = y_c x_(ab)c ∩ x_bc y_bc`. The first pair of triangles
/// `y_e x_b M1`, `y_c x_bc M2` has all sides pairwise parallel, so the
/// converse Desargues theorem puts `M1 M2` through `O`; the second pair
/// `y_b M1 x_ab`, `y_bc M2 x_(ab)c` is then perspective from `O`, and the
/// direct theorem yields `y_b x_ab ∥ y_bc x_(ab)c`.
#[derive(Clone, Debug)]
pub struct ProductFigure {
    pub points: Vec<(&'static str, Point<Octonion>)>,
    pub ab: Octonion,
    pub bc: Octonion,
    pub ab_c: Octonion,
    pub a_bc: Octonion,
    pub stage1: DesarguesConfig<Octonion>,
    pub stage2: DesarguesConfig<Octonion>,
    /// `y_b x_ab` and `y_bc x_(ab)c`.
    pub claim_lines: (AltLine<Octonion>, AltLine<Octonion>),
}

impl ProductFigure {
    pub fn point(&self, name: &str) -> &Point<Octonion> {
        &self.points.iter().find(|(n, _)| *n == name).expect("named point").1
    }
}

fn proper(p: ExtPoint<Octonion>, step: &str) -> Result<Point<Octonion>> {
    p.expect_proper(step)
}

pub fn product_figure(a: &Octonion, b: &Octonion, c: &Octonion) -> Result<ProductFigure> {
    let pl = Alt::new();
    let f = AxisFrame::standard(&pl, &Octonion::one());
    let ab = geometric_mul(&pl, &f, a, b)?;
    let bc = geometric_mul(&pl, &f, b, c)?;
    let ab_c = geometric_mul(&pl, &f, &ab, c)?;
    let a_bc = geometric_mul(&pl, &f, a, &bc)?;

    let transfer = pl.join(&f.x_unit, &f.y_unit)?;
    let to_y = |x: &Point<Octonion>, step: &str| -> Result<Point<Octonion>> {
        proper(pl.meet(&pl.parallel_through(&transfer, x), &f.y_axis)?, step)
    };
    let (x_b, x_bc, x_ab, x_ab_c) = (f.x_point(b), f.x_point(&bc), f.x_point(&ab), f.x_point(&ab_c));
    let y_b = to_y(&x_b, "y_b")?;
    let y_bc = to_y(&x_bc, "y_bc")?;
    let y_c = to_y(&f.x_point(c), "y_c")?;
    let y_e = f.y_unit.clone();

    let m1 = proper(pl.meet(&pl.join(&y_e, &x_ab)?, &pl.join(&x_b, &y_b)?)?, "M1")?;
    let m2 = proper(pl.meet(&pl.join(&y_c, &x_ab_c)?, &pl.join(&x_bc, &y_bc)?)?, "M2")?;

    let o = ExtPoint::Proper(f.origin.clone());
    let stage1 = DesarguesConfig {
        center: None,
        tri: [y_e.clone(), x_b.clone(), m1.clone()],
        tri2: [y_c.clone(), x_bc.clone(), m2.clone()],
    };
    let stage2 = DesarguesConfig {
        center: Some(o),
        tri: [y_b.clone(), m1.clone(), x_ab.clone()],
        tri2: [y_bc.clone(), m2.clone(), x_ab_c.clone()],
    };
    let claim_lines = (pl.join(&y_b, &x_ab)?, pl.join(&y_bc, &x_ab_c)?);
    let points = vec![
        ("O", f.origin.clone()),
        ("x_e", f.x_unit.clone()),
        ("y_e", y_e),
        ("x_b", x_b),
        ("y_b", y_b),
        ("y_c", y_c),
        ("x_ab", x_ab),
        ("x_bc", x_bc),
        ("y_bc", y_bc),
        ("x_(ab)c", x_ab_c),
        ("M1", m1),
        ("M2", m2),
    ];
    Ok(ProductFigure { points, ab, bc, ab_c, a_bc, stage1, stage2, claim_lines })
}

/// Sample size of the D2 control suites in the octonion report.
const CONTROL_N: u64 = 100;
const CONTROL_SEED: u64 = 3;

/// Seed and sample index of a sampled D0 configuration over the octonions
/// that fails; the first sample of the seed already does.
pub const SAMPLED_D0: (u64, u64) = (1, 0);

/// `(e1 e2) e4 ≠ e1 (e2 e4)` seen through the associativity figure.
pub fn desargues_fails_octonion() -> Result<CounterexampleReport> {
    let pl = Alt::new();
    let (a, b, c) = (Octonion::unit(1), Octonion::unit(2), Octonion::unit(4));
    let fig = product_figure(&a, &b, &c)?;

    let stage1 = check_desargues(&pl, &fig.stage1, DesarguesDirection::AxialToPerspective)?;
    let stage2 = check_desargues(&pl, &fig.stage2, DesarguesDirection::PerspectiveToAxial)?;
    let (l1, l2) = &fig.claim_lines;
    let claim_holds = pl.parallel(l1, l2);
    let verdict = if claim_holds {
        Verdict::holds("y_b x_ab ∥ y_bc x_(ab)c")
    } else {
        let w = Witness::new()
            .with("y_b x_ab", l1)
            .with("y_bc x_(ab)c", l2)
            .with("direction y_b x_ab", pl.direction(l1))
            .with("direction y_bc x_(ab)c", pl.direction(l2));
        Verdict::fails(w, "y_b x_ab is not parallel to y_bc x_(ab)c")
    };

    let sampled =
        evaluate(&pl, Theorem::desargues(DesarguesVariant::D0), SAMPLED_D0.0, SAMPLED_D0.1, Precision::default())?;

    let assoc = associator(&a, &b, &c);
    let expected = Octonion::unit(7).scale(&2.into());
    let mut controls = Witness::new();
    let mut checks = vec![
        ("[e1, e2, e4] = 2e7", assoc.same(&expected)),
        ("(ab)c from the figure", fig.ab_c.same(&a.mul(&b).mul(&c))),
        ("a(bc) from the figure", fig.a_bc.same(&a.mul(&b.mul(&c)))),
        ("claim fails", verdict.is_fails()),
        ("stage 1 axial triangles are not perspective", stage1.is_fails()),
        ("sampled D0 configuration fails", sampled.is_fails()),
    ];
    for v in [DesarguesVariant::D2a, DesarguesVariant::D2b, DesarguesVariant::D2c] {
        let r = run_suite(&pl, Theorem::desargues(v), CONTROL_N, CONTROL_SEED, Precision::default())?;
        controls.push(format!("{v} suite"), &r);
        let label = match v {
            DesarguesVariant::D2a => "d2a control holds",
            DesarguesVariant::D2b => "d2b control holds",
            _ => "d2c control holds",
        };
        checks.push((label, r.fails == 0 && r.holds > 0));
    }
    let verified = checks.iter().all(|c| c.1);
    for (name, ok) in &checks {
        controls.push(*name, if *ok { "ok" } else { "MISMATCH" });
    }

    let mut construction = Witness::new().with("a", &a).with("b", &b).with("c", &c);
    for (n, p) in &fig.points {
        construction.push(*n, p);
    }
    let witness = Witness::new()
        .with("ab", &fig.ab)
        .with("bc", &fig.bc)
        .with("(ab)c", &fig.ab_c)
        .with("a(bc)", &fig.a_bc)
        .with("[a, b, c]", &assoc)
        .with("stage 1 (y_e x_b M1, y_c x_bc M2)", describe(&stage1))
        .with("stage 2 (y_b M1 x_ab, y_bc M2 x_(ab)c)", describe(&stage2))
        .with("sampled D0 (seed 1, sample 0)", describe(&sampled));
    Ok(CounterexampleReport {
        name: "desargues-octonion".into(),
        system: "octonion".into(),
        construction,
        violated_claim: "y_b x_ab ∥ y_bc x_(ab)c, equivalently (ab)c = a(bc)".into(),
        verdict,
        witness,
        controls,
        verified,
        svg: None,
    })
}

fn describe(v: &Verdict) -> String {
    format!("{}: {}", v.status, v.note)
}
