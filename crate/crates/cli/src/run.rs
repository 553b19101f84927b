//! Executing a [`RunSpec`].

use std::fmt::Write as _;
use std::path::PathBuf;

use numplane::configtheorems::run_suite;
use numplane::counterexamples::{
    desargues_fails_moulton, desargues_fails_octonion, pappus_fails_hilbert_at, sas_fails_pseudolength,
    CounterexampleReport,
};
use numplane::harmonic::run_harmonic_suite;
use numplane::identities::{fixed_law_report, law_report, Law};
use numplane::planes::run_order_suite;
use numplane::segcalc::{geometric_mul_traced, run_segcalc_suite, trace_svg, AxisFrame};
use numplane::{
    AltPlane, Error, HilbertElement, LaurentSeries, MoultonPlane, Octonion, Plane, Precision, QuadExt, Quaternion,
    RatFunc, Rational, Sample, SkewPlane, SuiteReport, SystemKind,
};

use crate::registry::{self, Counterexample, SuiteKind, SystemChoice};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Text,
    Json,
}

/// One requested run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunSpec {
    pub suite: String,
    /// Defaults to `rational`, or to the counterexample's own system.
    pub system: Option<String>,
    pub n: u64,
    pub seed: u64,
    pub trunc: (usize, usize),
    pub output: Output,
    pub svg: Option<PathBuf>,
}

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// The expected verdict pattern was not met.
    pub const UNEXPECTED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CAPABILITY: i32 = 3;
}

/// What a run prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: exit::USAGE, stdout: String::new(), stderr: msg.into() }
    }

    fn from_error(e: Error) -> Self {
        let code = match e {
            Error::Capability(_) => exit::CAPABILITY,
            Error::Parse(_) => exit::USAGE,
            _ => exit::UNEXPECTED,
        };
        Outcome { code, stdout: String::new(), stderr: format!("error: {e}") }
    }
}

enum Report {
    Suite(SuiteReport),
    Counterexample(CounterexampleReport),
}

pub fn run(spec: &RunSpec) -> Outcome {
    let Some(entry) = registry::suite(&spec.suite) else {
        return Outcome::usage(format!("unknown suite `{}`; see `numplane list`", spec.suite));
    };
    if spec.n == 0 {
        return Outcome::usage("--n must be at least 1");
    }
    if spec.trunc.0 == 0 || spec.trunc.1 == 0 {
        return Outcome::usage("truncation bounds must be at least 1");
    }
    let prec = Precision { t_terms: spec.trunc.0, s_terms: spec.trunc.1 };

    let result = match entry.kind {
        SuiteKind::Counterexample(cx) => {
            if let Some(sys) = &spec.system {
                if sys != cx.system() {
                    return Outcome::usage(format!("{} runs over {}, not {sys}", entry.name, cx.system()));
                }
            }
            counterexample(cx, prec).map(Report::Counterexample)
        }
        kind => {
            let name = spec.system.as_deref().unwrap_or("rational");
            let Some(system) = registry::system(name) else {
                return Outcome::usage(format!("unknown system `{name}`; see `numplane list`"));
            };
            match suite_report(kind, system, spec, prec) {
                Ok(Some(r)) => Ok(Report::Suite(r)),
                Ok(None) => return Outcome::usage(format!("suite {} does not run over {name}", entry.name)),
                Err(e) => Err(e),
            }
        }
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => return Outcome::from_error(e),
    };

    let mut stderr = String::new();
    if let Some(path) = &spec.svg {
        let svg = match (&report, registry::system(spec.system.as_deref().unwrap_or("rational"))) {
            (Report::Counterexample(r), _) => r.svg.clone(),
            (Report::Suite(_), Some(SystemChoice::Number(SystemKind::Rational)))
                if entry.kind == SuiteKind::Segcalc =>
            {
                segcalc_drawing(spec.seed)
            }
            _ => None,
        };
        let Some(svg) = svg else {
            return Outcome::usage(format!("no drawing is available for {}", entry.name));
        };
        if let Err(e) = std::fs::write(path, svg) {
            return Outcome {
                code: exit::USAGE,
                stdout: String::new(),
                stderr: format!("cannot write {}: {e}", path.display()),
            };
        }
        let _ = writeln!(stderr, "wrote {}", path.display());
    }

    let (ok, stdout) = match (&report, spec.output) {
        (Report::Suite(r), out) => {
            (r.fails == 0 && r.holds > 0, if out == Output::Json { r.to_json() } else { r.to_string() })
        }
        (Report::Counterexample(r), out) => {
            (r.verified && r.verdict.is_fails(), if out == Output::Json { r.to_json() } else { counterexample_text(r) })
        }
    };
    Outcome { code: if ok { exit::OK } else { exit::UNEXPECTED }, stdout: stdout + "\n", stderr }
}

fn counterexample(cx: Counterexample, prec: Precision) -> numplane::Result<CounterexampleReport> {
    match cx {
        Counterexample::PappusHilbert => pappus_fails_hilbert_at(prec),
        Counterexample::DesarguesOctonion => desargues_fails_octonion(),
        Counterexample::DesarguesMoulton => desargues_fails_moulton(),
        Counterexample::SasPseudolength => sas_fails_pseudolength(),
    }
}

/// Suites that run on a plane; `None` when the suite has no meaning there.
fn plane_report<P: Plane>(
    plane: &P,
    kind: SuiteKind,
    spec: &RunSpec,
    prec: Precision,
) -> numplane::Result<Option<SuiteReport>>
where
    P::S: Sample,
{
    let (n, seed) = (spec.n, spec.seed);
    Ok(Some(match kind {
        SuiteKind::Theorem(t) => run_suite(plane, t, n, seed, prec)?,
        SuiteKind::Between => run_order_suite(plane, n, seed, prec)?,
        SuiteKind::Harmonic => run_harmonic_suite(plane, n, seed, prec)?,
        SuiteKind::Segcalc => run_segcalc_suite(plane, n, seed, prec)?,
        SuiteKind::Law(_) | SuiteKind::Counterexample(_) => return Ok(None),
    }))
}

fn law<S: Sample>(law: Law, spec: &RunSpec, prec: Precision) -> numplane::Result<SuiteReport> {
    if law.is_generic() {
        law_report::<S>(law, spec.n, spec.seed, prec)
    } else {
        fixed_law_report(law, S::KIND, spec.n, spec.seed)
    }
}

fn suite_report(
    kind: SuiteKind,
    system: SystemChoice,
    spec: &RunSpec,
    prec: Precision,
) -> numplane::Result<Option<SuiteReport>> {
    let k = match system {
        SystemChoice::Moulton => return plane_report(&MoultonPlane::new(), kind, spec, prec),
        SystemChoice::Number(k) => k,
    };
    if let SuiteKind::Law(l) = kind {
        return match k {
            SystemKind::Rational => law::<Rational>(l, spec, prec),
            SystemKind::QuadExt => law::<QuadExt>(l, spec, prec),
            SystemKind::RatFunc => law::<RatFunc>(l, spec, prec),
            SystemKind::Laurent => law::<LaurentSeries>(l, spec, prec),
            SystemKind::Quaternion => law::<Quaternion>(l, spec, prec),
            SystemKind::Octonion => law::<Octonion>(l, spec, prec),
            SystemKind::Hilbert => law::<HilbertElement>(l, spec, prec),
        }
        .map(Some);
    }
    match k {
        SystemKind::Rational => plane_report(&SkewPlane::<Rational>::new(), kind, spec, prec),
        SystemKind::QuadExt => plane_report(&SkewPlane::<QuadExt>::new(), kind, spec, prec),
        SystemKind::RatFunc => plane_report(&SkewPlane::<RatFunc>::new(), kind, spec, prec),
        SystemKind::Laurent => plane_report(&SkewPlane::<LaurentSeries>::new(), kind, spec, prec),
        SystemKind::Quaternion => plane_report(&SkewPlane::<Quaternion>::new(), kind, spec, prec),
        SystemKind::Octonion => plane_report(&AltPlane::<Octonion>::new(), kind, spec, prec),
        SystemKind::Hilbert => plane_report(&SkewPlane::<HilbertElement>::new(), kind, spec, prec),
    }
}

/// The product construction `x_a · x_b` with `a` and `b` read off the seed.
fn segcalc_drawing(seed: u64) -> Option<String> {
    let a = Rational::from((seed % 7) as i64 + 2);
    let b = Rational::new((seed / 7 % 5) as i64 + 1, 2).ok()?;
    let pl = SkewPlane::<Rational>::new();
    let f = AxisFrame::standard(&pl, &Rational::one());
    let c = geometric_mul_traced(&pl, &f, &a, &b).ok()?;
    Some(trace_svg(&format!("x_a · x_b for a = {a}, b = {b}"), &c))
}

fn counterexample_text(r: &CounterexampleReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} over {}", r.name, r.system);
    let _ = writeln!(s, "claim: {}", r.violated_claim);
    let _ = writeln!(s, "verdict: {} ({})", r.verdict.status, r.verdict.note);
    for (k, v) in &r.witness.0 {
        let _ = writeln!(s, "  {k} = {v}");
    }
    let _ = writeln!(s, "controls:");
    for (k, v) in &r.controls.0 {
        let _ = writeln!(s, "  {k}: {v}");
    }
    let _ = write!(s, "verified: {}", r.verified);
    s
}
