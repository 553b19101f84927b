use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numbersystems::traits::{Scalar, SystemKind};
use crate::numbersystems::write_terms;
use crate::scalars::{Rational, Sign};

/// Dense polynomial in `t` with rational coefficients, lowest degree
/// first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = Rational::zero();
        Poly::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::default();
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }

    /// Euclidean division: `(q, r)` with `self = q·d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dl = d.lead().ok_or_else(|| Error::domain("polynomial division by zero"))?.clone();
        let dd = d.0.len() - 1;
        let mut r = self.0.clone();
        let mut q = vec![Rational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let c = r.last().unwrap().checked_div(&dl)?;
            for (j, dc) in d.0.iter().enumerate() {
                r[shift + j] = &r[shift + j] - &(&c * dc);
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(Rational::is_zero) {
                r.pop();
            }
        }
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            Some(l) => self.scale(&l.recip().expect("nonzero leading coefficient")),
            None => Poly::default(),
        }
    }

    /// Monic greatest common divisor.
    ///
    /// A gcd of degree zero modulo a prime that keeps both degrees proves
    /// coprimality, which settles the common case without big-integer
    /// work. Otherwise a primitive remainder sequence over the integers
    /// keeps coefficient growth in check.
    pub fn gcd(&self, o: &Poly) -> Poly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.degree() == Some(0) || o.degree() == Some(0) {
            return Poly::constant(Rational::one());
        }
        if let (Some(a), Some(b)) = (modp::reduce(self), modp::reduce(o)) {
            if modp::gcd_degree(a, b) == 0 {
                return Poly::constant(Rational::one());
            }
        }
        let (mut a, mut b) = (primitive(self), primitive(o));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = if r.is_empty() { r } else { make_primitive(r) };
        }
        Poly::new(a.into_iter().map(Rational::from_bigint).collect()).monic()
    }

    pub(crate) fn write_in(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        let terms = self.0.iter().enumerate().map(|(e, c)| {
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            (c.clone(), mono)
        });
        write_terms(f, "*", terms)
    }
}

/// Integer coefficients of `p` scaled to content one.
fn primitive(p: &Poly) -> Vec<BigInt> {
    let l = p.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    make_primitive(p.0.iter().map(|c| c.numer() * (&l / c.denom())).collect())
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_one() && !g.is_zero() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

/// Remainder of `a` by `b` after scaling by powers of `lc(b)`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().expect("nonzero divisor");
    let db = b.len() - 1;
    let mut r = a.to_vec();
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

mod modp {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::ToPrimitive;

    use super::Poly;

    const P: u64 = (1 << 61) - 1;

    fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn pow(mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        r
    }

    fn inv(a: u64) -> u64 {
        pow(a, P - 2)
    }

    fn residue(n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(P)).to_u64().expect("residue fits")
    }

    /// Image of `p` modulo the prime, or `None` when a denominator or
    /// the leading coefficient vanishes there.
    pub(super) fn reduce(p: &Poly) -> Option<Vec<u64>> {
        let mut out = Vec::with_capacity(p.0.len());
        for c in &p.0 {
            let d = residue(c.denom());
            if d == 0 {
                return None;
            }
            out.push(mul(residue(c.numer()), inv(d)));
        }
        (*out.last()? != 0).then_some(out)
    }

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub(super) fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let il = inv(*b.last().unwrap());
            let db = b.len() - 1;
            while a.len() > db {
                let shift = a.len() - 1 - db;
                let c = mul(*a.last().unwrap(), il);
                for (j, &bc) in b.iter().enumerate() {
                    a[shift + j] = (a[shift + j] + P - mul(c, bc)) % P;
                }
                a.pop();
                trim(&mut a);
            }
            std::mem::swap(&mut a, &mut b);
        }
        a.len().saturating_sub(1)
    }
}

/// Rational function `P₁(t)/P₂(t)` in lowest terms with monic
/// denominator, ordered by its eventual sign as `t → +∞` (so `t` is
/// infinitely large).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("rational function with zero denominator"));
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: Poly::constant(Rational::one()) });
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g)?.0;
        let den = den.div_rem(&g)?.0;
        let l = den.lead().expect("nonzero").recip()?;
        Ok(RatFunc { num: num.scale(&l), den: den.scale(&l) })
    }

    pub fn poly(p: Poly) -> Self {
        RatFunc::new(p, Poly::constant(Rational::one())).expect("unit denominator")
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        RatFunc::poly(Poly::new(vec![Rational::zero(), Rational::one()]))
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::poly(Poly::constant(c))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Sign of the leading numerator coefficient; the denominator is monic.
    pub fn sign(&self) -> Sign {
        self.num.lead().map_or(Sign::Zero, Rational::sign)
    }

    fn combine(num: Poly, den: Poly) -> RatFunc {
        RatFunc::new(num, den).expect("denominators of nonzero factors are nonzero")
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        RatFunc::combine(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::combine(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::domain("inverse of zero rational function"));
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return self.num.write_in(f, "t");
        }
        f.write_str("(")?;
        self.num.write_in(f, "t")?;
        f.write_str(")/(")?;
        self.den.write_in(f, "t")?;
        f.write_str(")")
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Scalar for RatFunc {
    const KIND: SystemKind = SystemKind::RatFunc;

    fn from_rational(r: &Rational) -> Self {
        RatFunc::constant(r.clone())
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFunc::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RatFunc::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        RatFunc::inv(self)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn sign(&self) -> Result<Sign> {
        Ok(RatFunc::sign(self))
    }
    fn same(&self, rhs: &Self) -> bool {
        self == rhs
    }
}
