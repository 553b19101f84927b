//! The number systems behind one arithmetic interface, each tagged with
//! the axiom groups it satisfies.

mod hilbert;
mod laurent;
mod octonion;
mod ops;
mod quaternion;
mod ratfunc;
mod sample;
pub mod series;
mod srow;
mod traits;

use std::fmt;

pub use hilbert::HilbertElement;
pub use laurent::LaurentSeries;
pub use octonion::{Octonion, UNIT_TABLE};
pub use ops::{archimedean_witness, rational_between, sys_arith, sys_inv, sys_sign, ArchimedeanOutcome};
pub use quaternion::Quaternion;
pub use ratfunc::{Poly, RatFunc};
pub use sample::{Precision, Sample};
pub use traits::{less, Scalar, SystemDescriptor, SystemKind};

use crate::scalars::{Rational, Sign};

/// Default number of terms kept by series inverses, per variable.
pub const DEFAULT_TERMS: usize = 16;

/// Writes `c₀ m₀ ± |c₁| m₁ ± …`, skipping zero coefficients; an empty
/// monomial name marks the constant term.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    sep: &str,
    terms: impl Iterator<Item = (Rational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.sign() == Sign::Negative;
        match (first, neg) {
            (true, _) => write!(f, "{c}")?,
            (false, true) => write!(f, " - {}", c.abs())?,
            (false, false) => write!(f, " + {c}")?,
        }
        if !mono.is_empty() {
            write!(f, "{sep}{mono}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
