//! Named suites and systems, with the section each suite reproduces.

use numplane::configtheorems::{DesarguesDirection as Dir, DesarguesVariant as DV, PappusVariant, Theorem};
use numplane::identities::Law;
use numplane::SystemKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Counterexample {
    PappusHilbert,
    DesarguesOctonion,
    DesarguesMoulton,
    SasPseudolength,
}

impl Counterexample {
    /// The system the counterexample lives in.
    pub fn system(self) -> &'static str {
        match self {
            Counterexample::PappusHilbert => "hilbert",
            Counterexample::DesarguesOctonion => "octonion",
            Counterexample::DesarguesMoulton => "moulton",
            Counterexample::SasPseudolength => "quadext",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    Theorem(Theorem),
    Law(Law),
    Between,
    Harmonic,
    Segcalc,
    Counterexample(Counterexample),
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteEntry {
    pub name: &'static str,
    pub anchor: &'static str,
    pub kind: SuiteKind,
}

const fn entry(name: &'static str, anchor: &'static str, kind: SuiteKind) -> SuiteEntry {
    SuiteEntry { name, anchor, kind }
}

use SuiteKind as K;

pub const SUITES: &[SuiteEntry] = &[
    entry("pappus", "§2.6.1", K::Theorem(Theorem::Pappus(PappusVariant::General))),
    entry("pappus-parallel", "§2.6.1", K::Theorem(Theorem::Pappus(PappusVariant::Parallel))),
    entry("d0", "§3.1.1", K::Theorem(Theorem::Desargues(DV::D0, Dir::PerspectiveToAxial))),
    entry("d0-converse", "§3.1.1", K::Theorem(Theorem::Desargues(DV::D0, Dir::AxialToPerspective))),
    entry("d1", "§3.1.1", K::Theorem(Theorem::Desargues(DV::D1, Dir::PerspectiveToAxial))),
    entry("d2a", "§3.1.1", K::Theorem(Theorem::Desargues(DV::D2a, Dir::PerspectiveToAxial))),
    entry("d2b", "§3.1.1", K::Theorem(Theorem::Desargues(DV::D2b, Dir::AxialToPerspective))),
    entry("d2c", "§3.1.1", K::Theorem(Theorem::Desargues(DV::D2c, Dir::PerspectiveToAxial))),
    entry("little-desargues", "§3.1.1", K::Theorem(Theorem::Desargues(DV::Little, Dir::PerspectiveToAxial))),
    entry("between", "§1.2", K::Between),
    entry("harmonic", "§3.1.2", K::Harmonic),
    entry("segcalc", "§3.2", K::Segcalc),
    entry("alternative", "§2.7.1", K::Law(Law::Alternative)),
    entry("inverse", "§2.7.1", K::Law(Law::Inverse)),
    entry("norm", "§2.7.3", K::Law(Law::Norm)),
    entry("eight-square", "§2.7.3", K::Law(Law::EightSquare)),
    entry("alternator", "§2.7.5", K::Law(Law::Alternator)),
    entry("four-identity", "§2.7.5", K::Law(Law::FourIdentity)),
    entry("commuting-triple", "§2.7.5", K::Law(Law::CommutingTriple)),
    entry("monotonicity", "§2.5.2", K::Law(Law::Monotonicity)),
    entry("wagner", "Appendix 2", K::Law(Law::Wagner)),
    entry("counterexample.sas-pseudolength", "§2.4.6", K::Counterexample(Counterexample::SasPseudolength)),
    entry("counterexample.desargues-moulton", "§2.5.4b", K::Counterexample(Counterexample::DesarguesMoulton)),
    entry("counterexample.pappus-hilbert", "§2.6.2", K::Counterexample(Counterexample::PappusHilbert)),
    entry("counterexample.desargues-octonion", "§3.3.5", K::Counterexample(Counterexample::DesarguesOctonion)),
];

/// Names accepted by `--system`.
pub const SYSTEMS: &[&str] =
    &["rational", "quadext", "ratfunc", "laurent", "quaternion", "octonion", "hilbert", "moulton"];

pub fn suite(name: &str) -> Option<&'static SuiteEntry> {
    SUITES.iter().find(|s| s.name == name)
}

/// A coordinate system or the Moulton plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemChoice {
    Number(SystemKind),
    Moulton,
}

pub fn system(name: &str) -> Option<SystemChoice> {
    if name == "moulton" {
        return Some(SystemChoice::Moulton);
    }
    name.parse().ok().map(SystemChoice::Number)
}

/// The registry as printed by `list`: one line per suite, then the
/// systems.
pub fn listing() -> String {
    let mut out = String::from("suites:\n");
    for s in SUITES {
        out.push_str(&format!("  {} → {}\n", s.name, s.anchor));
    }
    out.push_str("systems:\n");
    for s in SYSTEMS {
        out.push_str(&format!("  {s}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_system_name_parses() {
        for s in SYSTEMS {
            assert!(system(s).is_some(), "{s}");
        }
        assert!(system("complex").is_none());
    }

    #[test]
    fn suite_names_unique() {
        for (i, a) in SUITES.iter().enumerate() {
            assert!(SUITES[i + 1..].iter().all(|b| b.name != a.name), "{}", a.name);
        }
    }
}
