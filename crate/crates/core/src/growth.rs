//! Growth series `W(t) = Σ c_n t^n` of a Coxeter group.
//!
//! For infinite `W` the series is recovered from
//! `1 / W(1/t) = Σ_J (-1)^|J| / W_J(t)` over the spherical subsets `J`, each
//! `W_J(t)` being a product of `[d] = 1 + t + ... + t^{d-1}` over the degrees.
//! Writing every `[d]` as a product of cyclotomic polynomials makes the
//! common denominator exact.
//!
//! The coefficients are non-negative, so by Pringsheim's theorem the radius
//! of convergence is a singularity on the positive real axis: the least
//! positive root of the reduced denominator.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gcm::{classify, CoxeterMatrix, FiniteType, GeneralizedCartanMatrix};
use crate::poly::{cauchy_bound, Cyclotomics, Poly, Sturm};
use crate::weyl::WeylGroup;

pub const MAX_RANK: usize = 24;

/// Exponents of cyclotomic factors `Φ_k`, keyed by `k`.
type CycloVector = BTreeMap<u32, u32>;

fn cyclo_vector(types: &[FiniteType]) -> CycloVector {
    let mut v = CycloVector::new();
    for t in types {
        for d in t.degrees() {
            for k in 2..=d {
                if d % k == 0 {
                    *v.entry(k).or_insert(0) += 1;
                }
            }
        }
    }
    v
}

fn cyclo_product(cy: &mut Cyclotomics, v: &CycloVector) -> Poly {
    let mut p = Poly::one();
    for (&k, &e) in v {
        p = &p * &cy.get(k).pow(e);
    }
    p
}

/// `∏ [d_i]` over the degrees of a finite Coxeter group.
pub fn poincare_of_types(types: &[FiniteType]) -> Poly {
    let mut p = Poly::one();
    for t in types {
        for d in t.degrees() {
            p = &p * &Poly::q_integer(d);
        }
    }
    p
}

pub fn finite_poincare_polynomial(cox: &CoxeterMatrix) -> Result<Poly> {
    let types = classify(cox).finite_types().ok_or(Error::NotSpherical)?;
    Ok(poincare_of_types(&types))
}

/// An isolating interval `(lo, hi]` for the radius, or no positive pole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Radius {
    Infinite,
    Isolated { lo: BigRational, hi: BigRational },
}

impl Radius {
    pub fn approx(&self) -> Option<f64> {
        match self {
            Radius::Infinite => None,
            Radius::Isolated { lo, hi } => {
                Some(((lo + hi) / BigRational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN))
            }
        }
    }
}

impl Serialize for Radius {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match self {
            Radius::Infinite => s.serialize_str("inf"),
            Radius::Isolated { lo, hi } => {
                let mut st = s.serialize_struct("Radius", 3)?;
                st.serialize_field("lo", &lo.to_string())?;
                st.serialize_field("hi", &hi.to_string())?;
                st.serialize_field("approx", &self.approx())?;
                st.end()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluation {
    Finite(BigRational),
    Divergent,
}

impl Evaluation {
    pub fn is_finite(&self) -> bool {
        matches!(self, Evaluation::Finite(_))
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluation::Finite(v) => write!(f, "{v}"),
            Evaluation::Divergent => write!(f, "divergent"),
        }
    }
}

impl Serialize for Evaluation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `W(t) = numerator / denominator`, coprime, `denominator(0) = 1`.
#[derive(Debug, Clone, Serialize)]
pub struct GrowthSeries {
    pub numerator: Poly,
    pub denominator: Poly,
    pub radius: Radius,
    #[serde(skip)]
    sturm: Option<std::sync::Arc<Sturm>>,
}

impl PartialEq for GrowthSeries {
    fn eq(&self, other: &Self) -> bool {
        self.numerator == other.numerator && self.denominator == other.denominator
    }
}

impl GrowthSeries {
    fn from_fraction(num: Poly, den: Poly) -> Result<GrowthSeries> {
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).ok_or_else(|| Error::Inconsistent("gcd does not divide numerator".into()))?;
        let mut den = den.div_exact(&g).ok_or_else(|| Error::Inconsistent("gcd does not divide denominator".into()))?;
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::Inconsistent("growth series has a pole at 0".into()));
        }
        let c = num.content().gcd(&den.content());
        let c = if d0.is_negative() { -c } else { c };
        num = Poly::new(num.coeffs().iter().map(|x| x / &c).collect());
        den = Poly::new(den.coeffs().iter().map(|x| x / &c).collect());
        if !den.coeff(0).is_one() {
            return Err(Error::Inconsistent(format!("reduced denominator {den} has constant term other than 1")));
        }
        let (radius, sturm) = isolate_radius(&den);
        Ok(GrowthSeries { numerator: num, denominator: den, radius, sturm })
    }

    /// Taylor coefficients `c_0, ..., c_n`.
    pub fn coefficients(&self, n: usize) -> Vec<BigInt> {
        self.numerator.series_div(&self.denominator, n)
    }

    /// `W(x)` for rational `x ≥ 0`; divergent from the radius on.
    pub fn evaluate_at(&self, x: &BigRational) -> Evaluation {
        if x.is_zero() {
            return Evaluation::Finite(BigRational::one());
        }
        if let Some(s) = &self.sturm {
            if s.count(&BigRational::zero(), x) > 0 {
                return Evaluation::Divergent;
            }
        }
        Evaluation::Finite(self.numerator.eval(x) / self.denominator.eval(x))
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.degree() == Some(0)
    }
}

impl fmt::Display for GrowthSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

fn isolate_radius(den: &Poly) -> (Radius, Option<std::sync::Arc<Sturm>>) {
    if den.degree().unwrap_or(0) == 0 {
        return (Radius::Infinite, None);
    }
    let sturm = Sturm::new(den);
    let zero = BigRational::zero();
    let mut hi = cauchy_bound(den);
    if sturm.count(&zero, &hi) == 0 {
        return (Radius::Infinite, Some(std::sync::Arc::new(sturm)));
    }
    let mut lo = zero.clone();
    let two = BigRational::from_integer(2.into());
    let eps = BigRational::new(1.into(), BigInt::one() << 48);
    // invariant: no root in (0, lo], at least one in (0, hi]
    while &hi - &lo > eps || sturm.count(&lo, &hi) != 1 {
        let mid = (&lo + &hi) / &two;
        if sturm.count(&zero, &mid) > 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (Radius::Isolated { lo, hi }, Some(std::sync::Arc::new(sturm)))
}

/// Spherical subsets of `S` with the finite types of their parabolics.
pub fn spherical_subsets(cox: &CoxeterMatrix) -> Vec<(Vec<usize>, Vec<FiniteType>)> {
    fn go(cox: &CoxeterMatrix, start: usize, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Vec<FiniteType>)>) {
        for s in start..cox.size() {
            cur.push(s);
            if let Some(types) = classify(&cox.restrict(cur)).finite_types() {
                out.push((cur.clone(), types));
                go(cox, s + 1, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = vec![(Vec::new(), Vec::new())];
    go(cox, 0, &mut Vec::new(), &mut out);
    out
}

pub fn growth_series(cox: &CoxeterMatrix) -> Result<GrowthSeries> {
    let n = cox.size();
    if n > MAX_RANK {
        return Err(Error::BudgetExceeded(format!("rank {n} exceeds the subset enumeration cap {MAX_RANK}")));
    }
    if let Some(types) = classify(cox).finite_types() {
        return GrowthSeries::from_fraction(poincare_of_types(&types), Poly::one());
    }
    let mut grouped: BTreeMap<CycloVector, i64> = BTreeMap::new();
    for (subset, types) in spherical_subsets(cox) {
        let sign = if subset.len() % 2 == 0 { 1 } else { -1 };
        *grouped.entry(cyclo_vector(&types)).or_insert(0) += sign;
    }
    grouped.retain(|_, c| *c != 0);
    let mut lcm = CycloVector::new();
    for v in grouped.keys() {
        for (&k, &e) in v {
            let slot = lcm.entry(k).or_insert(0);
            *slot = (*slot).max(e);
        }
    }
    let mut cy = Cyclotomics::default();
    let l = cyclo_product(&mut cy, &lcm);
    let mut p = Poly::zero();
    for (v, c) in &grouped {
        let quotient: CycloVector = lcm.iter().map(|(&k, &e)| (k, e - v.get(&k).copied().unwrap_or(0))).collect();
        p = &p + &cyclo_product(&mut cy, &quotient).scale(&BigInt::from(*c));
    }
    // 1/W(1/t) = p(t)/l(t), so W(t) = t^(dp - dl) rev(l) / rev(p)
    let dl = l.degree().unwrap();
    let dp = p.degree().ok_or_else(|| Error::Inconsistent("alternating sum vanishes".into()))?;
    let (num, den) = if dp >= dl {
        (l.reversed().shift(dp - dl), p.reversed())
    } else {
        (l.reversed(), p.reversed().shift(dl - dp))
    };
    GrowthSeries::from_fraction(num, den)
}

/// Sphere sizes `c_0, ..., c_n` counted in the group itself.
pub fn bfs_coefficients(gcm: &GeneralizedCartanMatrix, n: usize, ball_cap: usize) -> Result<Vec<u64>> {
    WeylGroup::with_ball_cap(gcm.clone(), ball_cap).sphere_sizes(n)
}

/// `W(1/q_min)` as an exact value or divergence.
pub fn lattice_value(cox: &CoxeterMatrix, q_min: u64) -> Result<Evaluation> {
    if q_min < 2 {
        return Err(Error::InvalidInput(format!("q_min = {q_min} must be at least 2")));
    }
    let series = growth_series(cox)?;
    Ok(series.evaluate_at(&BigRational::new(BigInt::one(), BigInt::from(q_min))))
}

pub fn lattice_criterion(cox: &CoxeterMatrix, q_min: u64) -> Result<bool> {
    Ok(lattice_value(cox, q_min)?.is_finite())
}
