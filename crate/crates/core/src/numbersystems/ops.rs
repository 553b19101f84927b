//! System-generic arithmetic entry points: dispatch on the field
//! operation, gated sign, Archimedean search and rational interpolation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numbersystems::traits::{less, Scalar};
use crate::scalars::{ArithOp, Rational, Sign};

/// `x op y`; division is right division `x · y⁻¹`.
pub fn sys_arith<S: Scalar>(x: &S, y: &S, op: ArithOp) -> Result<S> {
    Ok(match op {
        ArithOp::Add => x.add(y),
        ArithOp::Sub => x.sub(y),
        ArithOp::Mul => x.mul(y),
        ArithOp::Div => x.mul(&y.inv()?),
    })
}

pub fn sys_inv<S: Scalar>(x: &S) -> Result<S> {
    if x.is_zero() {
        return Err(Error::domain(format!("inverse of zero in {}", S::KIND)));
    }
    x.inv()
}

pub fn sys_sign<S: Scalar>(x: &S) -> Result<Sign> {
    S::descriptor().require_ordered("sign")?;
    x.sign()
}

/// Result of a bounded search for `n` with `n·a > b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArchimedeanOutcome {
    Witness(u64),
    NoneUpTo(u64),
}

/// Smallest `n ≤ n_max` with `n·a > b`.
///
/// Since `n ↦ n·a` is increasing for `a > 0`, one comparison at `n_max`
/// certifies that no smaller multiple exceeds `b` either; the witness itself
/// is then located by bisection.
pub fn archimedean_witness<S: Scalar>(a: &S, b: &S, n_max: u64) -> Result<ArchimedeanOutcome> {
    S::descriptor().require_ordered("archimedean_witness")?;
    if a.sign()? != Sign::Positive || b.sign()? != Sign::Positive {
        return Err(Error::domain("archimedean_witness needs a > 0 and b > 0"));
    }
    let exceeds = |n: u64| -> Result<bool> { less(b, &a.scale(&Rational::from(n as i64))) };
    if n_max == 0 || !exceeds(n_max)? {
        return Ok(ArchimedeanOutcome::NoneUpTo(n_max));
    }
    let (mut lo, mut hi) = (0u64, n_max);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if exceeds(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(ArchimedeanOutcome::Witness(hi))
}

/// Smallest integer `n ≥ 1` with `pred(n)`, for a monotone predicate.
fn least_integer(mut pred: impl FnMut(i64) -> Result<bool>) -> Result<i64> {
    let mut hi = 1i64;
    while !pred(hi)? {
        hi = hi.checked_mul(2).ok_or_else(|| Error::domain("integer search overflowed"))?;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pred(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Largest integer not exceeding `x`, found by comparisons alone.
fn floor_of<S: Scalar>(x: &S) -> Result<i64> {
    let int = |n: i64| x.from_int_like(n);
    if x.sign()? != Sign::Negative {
        // least n ≥ 1 with x < n, minus one
        Ok(least_integer(|n| less(x, &int(n)))? - 1)
    } else {
        // least n ≥ 1 with −n ≤ x
        Ok(-least_integer(|n| Ok(!less(x, &int(-n))?))?)
    }
}

/// A rational `ρ` of the embedded prime field with `a < ρ < b`.
///
/// With `n = ⌊a⌋`, returns `n + 1` when it is already below `b`; otherwise
/// takes the least `m` with `m(b − a) > 1` and `k = ⌊m·a⌋`, and returns
/// `(k + 1)/m`.
pub fn rational_between<S: Scalar>(a: &S, b: &S) -> Result<S> {
    S::descriptor().require_archimedean("rational_between")?;
    if !less(a, b)? {
        return Err(Error::domain("rational_between needs a < b"));
    }
    let n = floor_of(a)?;
    let next = a.from_int_like(n + 1);
    if less(&next, b)? {
        return Ok(next);
    }
    let gap = b.sub(a);
    let one = a.one_like();
    let m = least_integer(|m| less(&one, &gap.scale(&Rational::from(m))))?;
    let k = floor_of(&a.scale(&Rational::from(m)))?;
    Ok(a.from_rational_like(&Rational::new(k + 1, m)?))
}
