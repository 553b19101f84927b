//! Deterministic reproductions of the separating examples: Pappus fails in
//! the Hilbert plane, Desargues fails in the octonion and Moulton planes,
//! and side-angle-side fails under a pseudo-length.
//!
//! A report never stores a verdict it did not just compute: every witness
//! is rebuilt from raw coordinates through the public plane operations
//! when the report is made.

mod moulton;
mod octonion;
mod pseudolength;

use serde::Serialize;

pub use moulton::{
    desargues_fails_moulton, moulton_incidence_check, search_moulton_desargues, MoultonDesargues, FROZEN_MOULTON,
};
pub use octonion::{desargues_fails_octonion, product_figure, ProductFigure};
pub use pseudolength::{ordinary_length_sq, pseudo_length_sq, sas_fails_pseudolength, Point3};

use crate::configtheorems::{check_pappus, run_suite, DesarguesVariant, PappusConfig, Theorem};
use crate::error::Result;
use crate::numbersystems::{HilbertElement, Precision, Scalar};
use crate::planes::{Plane, Point, SkewLine, SkewPlane};
use crate::report::{Verdict, Witness};

/// Outcome of one curated counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub name: String,
    pub system: String,
    /// Named points and lines of the construction.
    pub construction: Witness,
    pub violated_claim: String,
    /// The check of the claim on this construction; a counterexample
    /// report expects `fails`.
    pub verdict: Verdict,
    pub witness: Witness,
    /// Related checks that are expected to hold.
    pub controls: Witness,
    /// Every recomputed expectation matched.
    pub verified: bool,
    #[serde(skip)]
    pub svg: Option<String>,
}

impl CounterexampleReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// The six lines `g, g'` (through `s` and `st` on the x-axis), `k, k'`
/// (through `t` and `ts`) and `l, l'` (through `s` and `t`) in the Hilbert
/// plane, with hexagon vertices alternating between the axes.
pub struct HilbertPappusFigure {
    pub lines: Vec<(&'static str, SkewLine<HilbertElement>)>,
    pub vertices: [Point<HilbertElement>; 6],
    pub x_axis: SkewLine<HilbertElement>,
    pub y_axis: SkewLine<HilbertElement>,
}

/// Builds the figure at the given precision. The hexagon is
/// `1* = l'∩x`, `2* = l'∩y`, `3* = g'∩x`, `4* = l∩y`, `5* = l∩x`,
/// `6* = g∩y`, so that `1*2* ∥ 4*5*` and `2*3* ∥ 5*6*` by construction
/// and Pappus would force `3*4* ∥ 6*1*`, where `6*1*` is the line `k`.
pub fn hilbert_pappus_figure(prec: Precision) -> Result<HilbertPappusFigure> {
    let h = |c: HilbertElement| c.with_precision(prec.t_terms, prec.s_terms);
    let one = h(HilbertElement::constant(1.into()));
    let zero = one.zero_like();
    let s = h(HilbertElement::s());
    let t = h(HilbertElement::t());
    let st = s.mul(&t);
    let ts = t.mul(&s);
    // a·x + b·y + c = 0 with the coefficients written as printed
    let line =
        |a: &HilbertElement, b: &HilbertElement, c: &HilbertElement| SkewLine::new(a.clone(), b.clone(), c.clone());
    let g = line(&one, &s, &s.neg())?;
    let g2 = line(&one, &s, &st.neg())?;
    let k = line(&one, &t, &t.neg())?;
    let k2 = line(&one, &t, &ts.neg())?;
    let l = line(&one, &one, &s.neg())?;
    let l2 = line(&one, &one, &t.neg())?;
    let x_axis = line(&zero, &one, &zero)?;
    let y_axis = line(&one, &zero, &zero)?;
    let pl = SkewPlane::<HilbertElement>::new();
    let meet =
        |a: &SkewLine<HilbertElement>, b: &SkewLine<HilbertElement>, step: &str| pl.meet(a, b)?.expect_proper(step);
    let vertices = [
        meet(&l2, &x_axis, "1* = l' ∩ x-axis")?,
        meet(&l2, &y_axis, "2* = l' ∩ y-axis")?,
        meet(&g2, &x_axis, "3* = g' ∩ x-axis")?,
        meet(&l, &y_axis, "4* = l ∩ y-axis")?,
        meet(&l, &x_axis, "5* = l ∩ x-axis")?,
        meet(&g, &y_axis, "6* = g ∩ y-axis")?,
    ];
    let lines = vec![("g", g), ("g'", g2), ("k", k), ("k'", k2), ("l", l), ("l'", l2)];
    Ok(HilbertPappusFigure { lines, vertices, x_axis, y_axis })
}

/// Sample size of the D0 control suite in the Hilbert report.
const HILBERT_CONTROL_N: u64 = 10;
const HILBERT_CONTROL_PREC: Precision = Precision { t_terms: 8, s_terms: 16 };

/// Pappus fails in the Hilbert plane because `ts = 2st ≠ st`.
pub fn pappus_fails_hilbert() -> Result<CounterexampleReport> {
    pappus_fails_hilbert_at(Precision::default())
}

pub fn pappus_fails_hilbert_at(prec: Precision) -> Result<CounterexampleReport> {
    let fig = hilbert_pappus_figure(prec)?;
    let pl = SkewPlane::<HilbertElement>::new();
    let line = |name: &str| &fig.lines.iter().find(|(n, _)| *n == name).expect("named line").1;
    let v = |i: usize| &fig.vertices[i - 1];

    let mut construction = Witness::new();
    for (name, l) in &fig.lines {
        construction.push(*name, l);
    }
    for (i, p) in fig.vertices.iter().enumerate() {
        construction.push(format!("{}*", i + 1), p);
    }

    let cfg = PappusConfig { g: fig.x_axis.clone(), h: fig.y_axis.clone(), vertices: fig.vertices.clone() };
    let verdict = check_pappus(&pl, &cfg)?;

    let s = HilbertElement::s().with_precision(prec.t_terms, prec.s_terms);
    let t = HilbertElement::t().with_precision(prec.t_terms, prec.s_terms);
    let (st, ts) = (s.mul(&t), t.mul(&s));
    let on_x = |l: &SkewLine<HilbertElement>| -> Result<HilbertElement> {
        Ok(pl.meet(l, &fig.x_axis)?.expect_proper("x-axis meet")?.x)
    };
    let g2_x = on_x(line("g'"))?;
    let k2_x = on_x(line("k'"))?;
    let two = HilbertElement::constant(2.into());
    let j34 = pl.join(v(3), v(4))?;
    let j61 = pl.join(v(6), v(1))?;
    let not_parallel = !pl.parallel(&j34, &j61);

    let mut checks = vec![
        ("ts = 2st", ts.same(&two.mul(&st))),
        ("st ≠ ts", !st.same(&ts)),
        ("g' meets the x-axis at st", g2_x.same(&st)),
        ("k' meets the x-axis at ts", k2_x.same(&ts)),
        ("k is the line 6*1*", pl.same_line(&j61, line("k"))),
        ("3*4* is not parallel to 6*1*", not_parallel),
        ("Pappus check fails", verdict.is_fails()),
    ];
    for (name, a, b) in [("g", 5, 6), ("g'", 3, 2), ("l", 5, 4), ("l'", 1, 2)] {
        let ok = pl.on_line(v(a), line(name)) && pl.on_line(v(b), line(name));
        checks.push((name, ok));
    }
    let d0 = run_suite(&pl, Theorem::desargues(DesarguesVariant::D0), HILBERT_CONTROL_N, 1, HILBERT_CONTROL_PREC)?;
    checks.push(("D0 control holds", d0.fails == 0 && d0.holds > 0));
    let verified = checks.iter().all(|c| c.1);

    let witness = Witness::new()
        .with("st", &st)
        .with("ts", &ts)
        .with("g' ∩ x-axis", &g2_x)
        .with("k' ∩ x-axis", &k2_x)
        .with("3*4*", &j34)
        .with("6*1*", &j61)
        .with("direction 3*4*", pl.direction(&j34))
        .with("direction 6*1*", pl.direction(&j61));
    let mut controls = Witness::new().with("d0 suite", &d0);
    for (name, ok) in &checks {
        controls.push(*name, if *ok { "ok" } else { "MISMATCH" });
    }
    Ok(CounterexampleReport {
        name: "pappus-hilbert".into(),
        system: "hilbert".into(),
        construction,
        violated_claim: "Pappus: 3*4* ∥ 6*1* when 1*2* ∥ 4*5* and 2*3* ∥ 5*6*".into(),
        verdict,
        witness,
        controls,
        verified,
        svg: None,
    })
}
