//! Exact arithmetic over a gallery of number systems (fields, skew fields,
//! alternative fields) together with the coordinate planes they induce and
//! checkers for the configuration theorems that separate them.

pub mod configtheorems;
pub mod counterexamples;
pub mod error;
pub mod harmonic;
pub mod identities;
pub mod numbersystems;
pub mod planes;
pub mod report;
pub mod scalars;
pub mod segcalc;

pub use error::{Error, Result};
pub use numbersystems::{
    HilbertElement, LaurentSeries, Octonion, Precision, Quaternion, RatFunc, Sample, Scalar, SystemDescriptor,
    SystemKind,
};
pub use planes::{AltPlane, Direction, ExtPoint, MoultonPlane, Plane, Point, SkewPlane};
pub use report::{Status, SuiteReport, Verdict, Witness};
pub use scalars::{QuadExt, Rational, Sign};
