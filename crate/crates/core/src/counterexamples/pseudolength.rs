use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::CounterexampleReport;
use crate::error::Result;
use crate::numbersystems::{Precision, Sample, Scalar};
use crate::report::{split_seed, Verdict, Witness};
use crate::scalars::{QuadExt, Rational};

/// A point of space over `ℚ(√2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point3 {
    pub x: QuadExt,
    pub y: QuadExt,
    pub z: QuadExt,
}

impl Point3 {
    pub fn new(x: QuadExt, y: QuadExt, z: QuadExt) -> Self {
        Point3 { x, y, z }
    }

    pub fn rational(x: i64, y: i64, z: i64) -> Self {
        let r = |v: i64| QuadExt::sqrt2(v.into(), Rational::zero());
        Point3::new(r(x), r(y), r(z))
    }
}

impl std::fmt::Display for Point3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// `(x₁ − x₂ + y₁ − y₂)² + (y₁ − y₂)² + (z₁ − z₂)²`.
pub fn pseudo_length_sq(p: &Point3, q: &Point3) -> QuadExt {
    let dx = p.x.sub(&q.x);
    let dy = p.y.sub(&q.y);
    let dz = p.z.sub(&q.z);
    let u = dx.add(&dy);
    u.mul(&u).add(&dy.mul(&dy)).add(&dz.mul(&dz))
}

pub fn ordinary_length_sq(p: &Point3, q: &Point3) -> QuadExt {
    let dx = p.x.sub(&q.x);
    let dy = p.y.sub(&q.y);
    let dz = p.z.sub(&q.z);
    dx.mul(&dx).add(&dy.mul(&dy)).add(&dz.mul(&dz))
}

const AGREEMENT_N: u64 = 1000;
const AGREEMENT_SEED: u64 = 11;

/// Pseudo-length and ordinary length on random pairs with `y₁ = y₂`.
fn agreement_on_level_pairs(n: u64, seed: u64) -> Verdict {
    for i in 0..n {
        let mut rng = ChaCha8Rng::seed_from_u64(split_seed(seed, i));
        let mut c = || QuadExt::sample(&mut rng, Precision::default());
        let y = c();
        let p = Point3::new(c(), y.clone(), c());
        let q = Point3::new(c(), y, c());
        if !pseudo_length_sq(&p, &q).same(&ordinary_length_sq(&p, &q)) {
            let w = Witness::new().with("P1", &p).with("P2", &q);
            return Verdict::fails(w, "pseudo-length differs from length with y1 = y2");
        }
    }
    Verdict::holds(format!("agreement on {n} pairs with y1 = y2"))
}

/// Two triangles `OAC` and `OBC` with equal sides at `O` and equal angles
/// there, but different third sides under the pseudo-length.
pub fn sas_fails_pseudolength() -> Result<CounterexampleReport> {
    let q = |a: i64, b: Rational| QuadExt::sqrt2(a.into(), b);
    let half = Rational::new(1, 2)?;
    let o = Point3::rational(0, 0, 0);
    let a = Point3::rational(1, 0, 0);
    let b = Point3::rational(-1, 0, 0);
    // 1/√2 = √2/2
    let c = Point3::new(q(0, Rational::zero()), q(0, half), q(0, Rational::zero()));

    let l = |p: &Point3, r: &Point3| pseudo_length_sq(p, r);
    let (oa, ob, oc, ac, bc) = (l(&o, &a), l(&o, &b), l(&o, &c), l(&a, &c), l(&b, &c));
    let one = q(1, Rational::zero());
    let ac_expected = q(2, Rational::from(-1));
    let bc_expected = q(2, Rational::one());
    let agreement = agreement_on_level_pairs(AGREEMENT_N, AGREEMENT_SEED);
    let example = pseudo_length_sq(&Point3::rational(0, 0, 0), &Point3::rational(1, 1, 0));

    let checks = [
        ("OA² = 1", oa.same(&one)),
        ("OB² = 1", ob.same(&one)),
        ("OC² = 1", oc.same(&one)),
        ("AC² = 2 − √2", ac.same(&ac_expected)),
        ("BC² = 2 + √2", bc.same(&bc_expected)),
        ("(0,0,0)-(1,1,0) has squared pseudo-length 5", example.same(&q(5, Rational::zero()))),
        ("agrees with length when y1 = y2", agreement.is_holds()),
    ];
    let verified = checks.iter().all(|c| c.1);
    let verdict = if ac.same(&bc) {
        Verdict::holds("AC = BC")
    } else {
        Verdict::fails(
            Witness::new().with("AC²", &ac).with("BC²", &bc),
            "equal side-angle-side data, unequal third sides",
        )
    };
    let mut controls = Witness::new().with("y1 = y2 agreement", format!("{}: {}", agreement.status, agreement.note));
    for (name, ok) in checks {
        controls.push(name, if ok { "ok" } else { "MISMATCH" });
    }
    let construction = Witness::new().with("O", &o).with("A", &a).with("B", &b).with("C", &c);
    let witness = Witness::new().with("OA²", &oa).with("OB²", &ob).with("OC²", &oc).with("AC²", &ac).with("BC²", &bc);
    Ok(CounterexampleReport {
        name: "sas-pseudolength".into(),
        system: "quadext".into(),
        construction,
        violated_claim: "side-angle-side congruence: OA = OB, OC common, equal angles at O force AC = BC".into(),
        verdict,
        witness,
        controls,
        verified,
        svg: None,
    })
}
