use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{QuadExt, Rational, Sign};

/// Every number system in the gallery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemKind {
    Rational,
    QuadExt,
    RatFunc,
    Laurent,
    Quaternion,
    Octonion,
    Hilbert,
}

impl SystemKind {
    pub const ALL: [SystemKind; 7] = [
        SystemKind::Rational,
        SystemKind::QuadExt,
        SystemKind::RatFunc,
        SystemKind::Laurent,
        SystemKind::Quaternion,
        SystemKind::Octonion,
        SystemKind::Hilbert,
    ];

    /// Elements carry truncated series.
    pub fn truncated(self) -> bool {
        matches!(self, SystemKind::Laurent | SystemKind::Hilbert)
    }

    pub fn name(self) -> &'static str {
        match self {
            SystemKind::Rational => "rational",
            SystemKind::QuadExt => "quadext",
            SystemKind::RatFunc => "ratfunc",
            SystemKind::Laurent => "laurent",
            SystemKind::Quaternion => "quaternion",
            SystemKind::Octonion => "octonion",
            SystemKind::Hilbert => "hilbert",
        }
    }

    /// Capability flags of each system.
    pub fn descriptor(self) -> SystemDescriptor {
        let d = |commutative, associative, alternative, ordered, archimedean| SystemDescriptor {
            name: self.name(),
            commutative,
            associative,
            alternative,
            ordered,
            archimedean,
        };
        match self {
            SystemKind::Rational => d(true, true, true, true, true),
            SystemKind::QuadExt => d(true, true, true, true, true),
            SystemKind::RatFunc => d(true, true, true, true, false),
            SystemKind::Laurent => d(true, true, true, true, false),
            SystemKind::Quaternion => d(false, true, true, false, false),
            SystemKind::Octonion => d(false, false, true, false, false),
            SystemKind::Hilbert => d(false, true, true, true, false),
        }
    }
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SystemKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown number system `{s}`")))
    }
}

/// Which axiom groups a number system satisfies.
///
/// Flags are data so that checkers can run a probe against the "wrong"
/// system and report the failure as a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SystemDescriptor {
    pub name: &'static str,
    pub commutative: bool,
    pub associative: bool,
    pub alternative: bool,
    pub ordered: bool,
    pub archimedean: bool,
}

impl SystemDescriptor {
    pub fn require_ordered(&self, what: &str) -> Result<()> {
        if self.ordered {
            Ok(())
        } else {
            Err(Error::capability(format!("{what} needs an ordered system; {} is not ordered", self.name)))
        }
    }

    pub fn require_commutative(&self, what: &str) -> Result<()> {
        if self.commutative {
            Ok(())
        } else {
            Err(Error::capability(format!("{what} needs a commutative system; {} is not", self.name)))
        }
    }

    pub fn require_associative(&self, what: &str) -> Result<()> {
        if self.associative {
            Ok(())
        } else {
            Err(Error::capability(format!("{what} needs an associative system; {} is not", self.name)))
        }
    }

    pub fn require_archimedean(&self, what: &str) -> Result<()> {
        self.require_ordered(what)?;
        if self.archimedean {
            Ok(())
        } else {
            Err(Error::capability(format!("{what} needs an Archimedean system; {} is not", self.name)))
        }
    }
}

/// Common arithmetic interface over every number system.
///
/// Constants are built "like" an existing element so truncated series
/// inherit its precision settings.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const KIND: SystemKind;

    fn descriptor() -> SystemDescriptor {
        Self::KIND.descriptor()
    }

    /// Embeds a rational using default precision settings.
    fn from_rational(r: &Rational) -> Self;

    #[allow(clippy::wrong_self_convention)]
    fn from_rational_like(&self, r: &Rational) -> Self {
        Self::from_rational(r)
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_int_like(&self, n: i64) -> Self {
        self.from_rational_like(&Rational::from(n))
    }

    fn zero_like(&self) -> Self {
        self.from_int_like(0)
    }

    fn one_like(&self) -> Self {
        self.from_int_like(1)
    }

    fn add(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self;

    fn neg(&self) -> Self;

    fn inv(&self) -> Result<Self>;

    /// Zero, or for truncated series: zero in every known coefficient.
    fn is_zero(&self) -> bool;

    fn sign(&self) -> Result<Sign> {
        Err(Error::capability(format!("{} is not ordered", Self::KIND.name())))
    }

    fn same(&self, rhs: &Self) -> bool {
        self.sub(rhs).is_zero()
    }

    /// Truncated: no coefficient is known to be nonzero, yet the value
    /// need not be zero.
    fn is_indeterminate(&self) -> bool {
        false
    }

    /// `is_zero` for use in a branch, where "zero up to truncation" is not
    /// good enough.
    fn decide_zero(&self) -> Result<bool> {
        if self.is_indeterminate() {
            return Err(Error::precision(format!("cannot tell whether {self} vanishes at this truncation")));
        }
        Ok(self.is_zero())
    }

    fn decide_same(&self, rhs: &Self) -> Result<bool> {
        if Self::KIND.truncated() {
            self.sub(rhs).decide_zero()
        } else {
            Ok(self.same(rhs))
        }
    }

    fn is_one(&self) -> bool {
        self.same(&self.one_like())
    }

    /// Scalar multiple by a rational (lands in the embedded rational subfield).
    fn scale(&self, r: &Rational) -> Self {
        self.from_rational_like(r).mul(self)
    }
}

impl Scalar for Rational {
    const KIND: SystemKind = SystemKind::Rational;

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        self.recip()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn sign(&self) -> Result<Sign> {
        Ok(Rational::sign(self))
    }
    fn same(&self, rhs: &Self) -> bool {
        self == rhs
    }
}

/// `Q(√2)`; all elements built through this trait share the default radicand.
impl Scalar for QuadExt {
    const KIND: SystemKind = SystemKind::QuadExt;

    fn from_rational(r: &Rational) -> Self {
        QuadExt::sqrt2(r.clone(), Rational::zero())
    }
    #[allow(clippy::wrong_self_convention)]
    fn from_rational_like(&self, r: &Rational) -> Self {
        QuadExt::new(r.clone(), Rational::zero(), self.radicand()).expect("radicand already validated")
    }
    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("mixed radicands")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("mixed radicands")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("mixed radicands")
    }
    fn neg(&self) -> Self {
        QuadExt::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        self.try_inv()
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn sign(&self) -> Result<Sign> {
        Ok(QuadExt::sign(self))
    }
    fn same(&self, rhs: &Self) -> bool {
        self == rhs
    }
}

/// `x < y` in an ordered system.
pub fn less<S: Scalar>(x: &S, y: &S) -> Result<bool> {
    Ok(y.sub(x).sign()? == Sign::Positive)
}
