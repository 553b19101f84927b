use std::fmt;

use super::Proj;
use crate::error::{Error, Result};
use crate::numbersystems::Scalar;

/// `x ↦ (αx + β)/(γx + δ)` with `αδ − βγ ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct MobiusMap<S> {
    pub alpha: S,
    pub beta: S,
    pub gamma: S,
    pub delta: S,
}

impl<S: Scalar> MobiusMap<S> {
    pub fn new(alpha: S, beta: S, gamma: S, delta: S) -> Result<Self> {
        S::descriptor().require_commutative("Möbius map")?;
        if alpha.mul(&delta).sub(&beta.mul(&gamma)).is_zero() {
            return Err(Error::domain("Möbius map with vanishing determinant"));
        }
        Ok(MobiusMap { alpha, beta, gamma, delta })
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &MobiusMap<S>) -> MobiusMap<S> {
        let (a, b, c, d) = (&self.alpha, &self.beta, &self.gamma, &self.delta);
        let (e, f, g, h) = (&other.alpha, &other.beta, &other.gamma, &other.delta);
        MobiusMap {
            alpha: a.mul(e).add(&b.mul(g)),
            beta: a.mul(f).add(&b.mul(h)),
            gamma: c.mul(e).add(&d.mul(g)),
            delta: c.mul(f).add(&d.mul(h)),
        }
    }

    pub fn inverse(&self) -> MobiusMap<S> {
        MobiusMap {
            alpha: self.delta.clone(),
            beta: self.beta.neg(),
            gamma: self.gamma.neg(),
            delta: self.alpha.clone(),
        }
    }

    /// Whether both maps agree as functions (coefficients up to a scalar).
    pub fn same(&self, o: &MobiusMap<S>) -> bool {
        let u = [&self.alpha, &self.beta, &self.gamma, &self.delta];
        let v = [&o.alpha, &o.beta, &o.gamma, &o.delta];
        (0..4).all(|i| (i + 1..4).all(|j| u[i].mul(v[j]).same(&u[j].mul(v[i]))))
    }
}

impl<S: fmt::Display> fmt::Display for MobiusMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x ↦ (({})x + ({}))/(({})x + ({}))", self.alpha, self.beta, self.gamma, self.delta)
    }
}

/// The map through three pairs, from the homogeneous system
/// `γ·x·x′ + δ·x′ − α·x − β = 0` in the unknowns `(γ, δ, α, β)`. Infinite
/// entries keep only the terms of top degree in that entry. The last free
/// unknown of the reduced system is set to one.
pub fn mobius_from_three_pairs<S: Scalar>(pairs: &[(Proj<S>, Proj<S>); 3]) -> Result<MobiusMap<S>> {
    S::descriptor().require_commutative("Möbius map from three pairs")?;
    for i in 0..3 {
        for j in i + 1..3 {
            if pairs[i].0.same(&pairs[j].0) || pairs[i].1.same(&pairs[j].1) {
                return Err(Error::domain("Möbius pairs must have distinct sources and distinct images"));
            }
        }
    }
    let unit = pairs
        .iter()
        .flat_map(|(x, y)| [x, y])
        .find_map(|p| match p {
            Proj::Finite(v) => Some(v.one_like()),
            Proj::Infinity => None,
        })
        .ok_or_else(|| Error::domain("at most one pair can involve ∞"))?;
    let zero = unit.zero_like();
    let mut rows: Vec<[S; 4]> = pairs
        .iter()
        .map(|(x, y)| match (x, y) {
            (Proj::Finite(x), Proj::Finite(y)) => [x.mul(y), y.clone(), x.neg(), unit.neg()],
            (Proj::Infinity, Proj::Finite(y)) => [y.clone(), zero.clone(), unit.neg(), zero.clone()],
            (Proj::Finite(x), Proj::Infinity) => [x.clone(), unit.clone(), zero.clone(), zero.clone()],
            (Proj::Infinity, Proj::Infinity) => [unit.clone(), zero.clone(), zero.clone(), zero.clone()],
        })
        .collect();

    // reduced row echelon form
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..4 {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv()?;
        for v in rows[r].iter_mut() {
            *v = inv.mul(v);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let k = rows[i][col].clone();
                let pivot = rows[r].clone();
                for (v, p) in rows[i].iter_mut().zip(&pivot) {
                    *v = v.sub(&k.mul(p));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if pivots.len() < 3 {
        return Err(Error::domain("singular Möbius system"));
    }
    let free = (0..4).rev().find(|c| !pivots.contains(c)).expect("one free column");
    let mut sol = vec![zero.clone(); 4];
    sol[free] = unit.clone();
    for (i, &pc) in pivots.iter().enumerate() {
        sol[pc] = rows[i][free].neg();
    }
    let [gamma, delta, alpha, beta]: [S; 4] = sol.try_into().expect("four unknowns");
    MobiusMap::new(alpha, beta, gamma, delta)
}

/// `(αx + β)/(γx + δ)`; a pole maps to `∞` and `∞` maps to `α/γ`.
pub fn mobius_apply<S: Scalar>(map: &MobiusMap<S>, x: &Proj<S>) -> Result<Proj<S>> {
    let (num, den) = match x {
        Proj::Finite(x) => (map.alpha.mul(x).add(&map.beta), map.gamma.mul(x).add(&map.delta)),
        Proj::Infinity => (map.alpha.clone(), map.gamma.clone()),
    };
    if den.is_zero() {
        return Ok(Proj::Infinity);
    }
    Ok(Proj::Finite(num.mul(&den.inv()?)))
}
