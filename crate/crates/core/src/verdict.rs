//! Decides the hypotheses of the simplicity, property (T), non-arithmeticity
//! and integrability statements for a Kac-Moody lattice given by `(A, q)`.
//!
//! Every flag carries the checks that produced it. A [`Check`] can be
//! re-evaluated on its own against the same input.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gcm::{
    classify, coxeter_of, is_simply_laced, is_two_spherical, ComponentType, CoxeterMatrix, GeneralizedCartanMatrix,
    Order, TypeClassification,
};
use crate::growth::{lattice_value, Evaluation};
use crate::poly::Poly;

/// Properties of the twin root datum that the Cartan matrix alone does not
/// determine. The defaults describe a split or almost split Kac-Moody group.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Assumptions {
    /// The datum is not of Kac-Moody origin; the flags below then apply.
    pub exotic: bool,
    pub nilpotent_root_groups: Option<bool>,
    pub derived_dense: Option<bool>,
    pub rank_one_perfect: Option<bool>,
    /// The commutation condition on infinite dihedral prenilpotent pairs.
    pub pp: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeInput {
    pub gcm: GeneralizedCartanMatrix,
    pub q: u64,
    pub root_group_orders: Vec<u64>,
    pub torus_order: BigUint,
    pub assumptions: Assumptions,
}

impl LatticeInput {
    pub fn new(gcm: GeneralizedCartanMatrix, q: u64) -> Result<LatticeInput> {
        Self::with_options(gcm, q, None, None, Assumptions::default())
    }

    pub fn with_options(
        gcm: GeneralizedCartanMatrix,
        q: u64,
        root_group_orders: Option<Vec<u64>>,
        torus_order: Option<BigUint>,
        assumptions: Assumptions,
    ) -> Result<LatticeInput> {
        let n = gcm.size();
        if q < 2 {
            return Err(Error::InvalidInput(format!("q = {q} must be at least 2")));
        }
        let orders = root_group_orders.unwrap_or_else(|| vec![q; n]);
        if orders.len() != n {
            return Err(Error::InvalidInput(format!("{} root group orders given for rank {n}", orders.len())));
        }
        if let Some(&bad) = orders.iter().find(|&&o| o < 2) {
            return Err(Error::InvalidInput(format!("root group order {bad} must be at least 2")));
        }
        let torus_order = torus_order.unwrap_or_else(|| BigUint::from(q - 1).pow(n as u32));
        Ok(LatticeInput { gcm, q, root_group_orders: orders, torus_order, assumptions })
    }

    pub fn rank(&self) -> usize {
        self.gcm.size()
    }

    pub fn q_min(&self) -> u64 {
        *self.root_group_orders.iter().min().unwrap()
    }

    pub fn coxeter(&self) -> CoxeterMatrix {
        coxeter_of(&self.gcm)
    }
}

pub fn kazhdan_threshold(n: u32) -> BigUint {
    BigUint::from(1764u32).pow(n)
}

/// A single hypothesis test, re-runnable against a [`LatticeInput`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Check {
    Irreducible,
    Infinite,
    NonAffine,
    TwoSpherical,
    NoCriticalPairs,
    SimplyLaced,
    /// `W(1/q_min)` is finite.
    Lattice,
    QMinAbove {
        bound: u64,
    },
    /// `q_min > 1764^n`.
    KazhdanThreshold,
    KacMoodyDatum,
    AssumedNilpotentRootGroups,
    AssumedDerivedDense,
    AssumedRankOnePerfect,
    AssumedPp,
    AffineSubsetOfRankAtLeast3,
    CommutingNonSphericalPair,
}

impl Check {
    pub fn evaluate(&self, input: &LatticeInput) -> Result<bool> {
        let cox = input.coxeter();
        let a = &input.assumptions;
        Ok(match self {
            Check::Irreducible => classify(&cox).irreducible,
            Check::Infinite => classify(&cox).infinite,
            Check::NonAffine => !has_affine_component(&classify(&cox)),
            Check::TwoSpherical => is_two_spherical(&cox, None).two_spherical,
            Check::NoCriticalPairs => is_two_spherical(&cox, Some(input.q_min())).critical_pairs.is_empty(),
            Check::SimplyLaced => is_simply_laced(&cox),
            Check::Lattice => lattice_value(&cox, input.q_min())?.is_finite(),
            Check::QMinAbove { bound } => input.q_min() > *bound,
            Check::KazhdanThreshold => BigUint::from(input.q_min()) > kazhdan_threshold(input.rank() as u32),
            Check::KacMoodyDatum => !a.exotic,
            Check::AssumedNilpotentRootGroups => a.nilpotent_root_groups.unwrap_or(true),
            Check::AssumedDerivedDense => a.derived_dense.unwrap_or(false),
            Check::AssumedRankOnePerfect => a.rank_one_perfect.unwrap_or(false),
            Check::AssumedPp => a.pp.unwrap_or(false),
            Check::AffineSubsetOfRankAtLeast3 => has_large_affine_subset(&cox),
            Check::CommutingNonSphericalPair => has_commuting_non_spherical_pair(&cox),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    #[serde(flatten)]
    pub check: Check,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub value: bool,
    pub trail: Vec<Evidence>,
}

struct Evaluator<'a> {
    input: &'a LatticeInput,
}

impl Evaluator<'_> {
    fn ev(&self, c: Check) -> Result<Evidence> {
        let holds = c.evaluate(self.input)?;
        Ok(Evidence { check: c, holds })
    }

    /// Conjunction; the trail stops at the first failing check.
    fn all(&self, checks: Vec<Check>) -> Result<Flag> {
        let mut trail = Vec::new();
        for c in checks {
            let e = self.ev(c)?;
            let ok = e.holds;
            trail.push(e);
            if !ok {
                return Ok(Flag { value: false, trail });
            }
        }
        Ok(Flag { value: true, trail })
    }

    /// Disjunction of conjunctions; the trail is the first route that fires,
    /// or the failing checks of every route.
    fn any(&self, routes: Vec<Vec<Check>>) -> Result<(Flag, Option<usize>)> {
        let mut failed = Vec::new();
        for (k, r) in routes.into_iter().enumerate() {
            let f = self.all(r)?;
            if f.value {
                return Ok((f, Some(k)));
            }
            failed.extend(f.trail);
        }
        Ok((Flag { value: false, trail: failed }, None))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SimplicityClass {
    SimpleModCenter,
    VirtuallySimple,
    Inconclusive,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Simplicity {
    pub verdict: SimplicityClass,
    pub trail: Vec<Evidence>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoSphericalFlag {
    pub value: bool,
    pub critical_pairs: Vec<(usize, usize)>,
    pub trail: Vec<Evidence>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeFlag {
    pub value: bool,
    pub q_min: u64,
    /// `W(1/q_min)`, exact, or "divergent".
    pub growth_value: Evaluation,
    pub trail: Vec<Evidence>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuotientCondition {
    /// Rank one groups of Lie type and `q_min > 3`.
    LieTypeQMinAbove3,
    /// 2-spherical and `q_min > 2`.
    TwoSphericalQMinAbove2,
    SimplyLaced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientsFlag {
    pub value: bool,
    pub fired: Option<QuotientCondition>,
    pub trail: Vec<Evidence>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KazhdanFlag {
    pub value: bool,
    #[serde(serialize_with = "ser_big")]
    pub threshold: BigUint,
    pub trail: Vec<Evidence>,
}

fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationSummary {
    pub label: String,
    pub components: Vec<ComponentSummary>,
    pub irreducible: bool,
    pub infinite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub indices: Vec<usize>,
    #[serde(rename = "type")]
    pub kind: String,
}

impl From<&TypeClassification> for ClassificationSummary {
    fn from(cl: &TypeClassification) -> Self {
        ClassificationSummary {
            label: cl.label(),
            components: cl
                .components
                .iter()
                .map(|c| ComponentSummary { indices: c.indices.clone(), kind: c.kind.to_string() })
                .collect(),
            irreducible: cl.irreducible,
            infinite: cl.infinite,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub rank: usize,
    pub q: u64,
    pub root_group_orders: Vec<u64>,
    #[serde(serialize_with = "ser_big")]
    pub torus_order: BigUint,
    pub classification: ClassificationSummary,
    pub irreducible: Flag,
    pub infinite: Flag,
    pub non_affine: Flag,
    pub s0: Flag,
    pub two_spherical: TwoSphericalFlag,
    pub simply_laced: Flag,
    pub lattice: LatticeFlag,
    pub rank_one_perfect: Flag,
    pub simplicity: Simplicity,
    #[serde(serialize_with = "ser_big")]
    pub finite_quotient_bound: BigUint,
    pub quotients_trivial: QuotientsFlag,
    pub kazhdan: KazhdanFlag,
    pub finitely_presented: Flag,
    pub fprs_guaranteed: Flag,
    pub commensurator_discrete: Flag,
    pub flat_rank_geq_2: Flag,
}

impl Verdict {
    /// Every recorded check, for re-evaluation.
    pub fn all_evidence(&self) -> Vec<&Evidence> {
        let mut v: Vec<&Evidence> = Vec::new();
        for f in [
            &self.irreducible,
            &self.infinite,
            &self.non_affine,
            &self.s0,
            &self.simply_laced,
            &self.rank_one_perfect,
            &self.finitely_presented,
            &self.fprs_guaranteed,
            &self.commensurator_discrete,
            &self.flat_rank_geq_2,
        ] {
            v.extend(&f.trail);
        }
        v.extend(&self.two_spherical.trail);
        v.extend(&self.lattice.trail);
        v.extend(&self.simplicity.trail);
        v.extend(&self.quotients_trivial.trail);
        v.extend(&self.kazhdan.trail);
        v
    }
}

fn s0_checks() -> Vec<Check> {
    vec![Check::Irreducible, Check::Infinite, Check::NonAffine]
}

pub fn analyze(input: &LatticeInput) -> Result<Verdict> {
    let e = Evaluator { input };
    let cox = input.coxeter();
    let cl = classify(&cox);
    let q_min = input.q_min();
    let km = !input.assumptions.exotic;

    let irreducible = e.all(vec![Check::Irreducible])?;
    let infinite = e.all(vec![Check::Infinite])?;
    let non_affine = e.all(vec![Check::NonAffine])?;
    let s0 = e.all(s0_checks())?;

    let ts = is_two_spherical(&cox, Some(q_min));
    let two_spherical = TwoSphericalFlag {
        value: ts.two_spherical,
        critical_pairs: ts.critical_pairs.clone(),
        trail: vec![e.ev(Check::TwoSpherical)?],
    };
    let simply_laced = e.all(vec![Check::SimplyLaced])?;

    let growth_value = lattice_value(&cox, q_min)?;
    let lattice =
        LatticeFlag { value: growth_value.is_finite(), q_min, growth_value, trail: vec![e.ev(Check::Lattice)?] };

    let rank_one_perfect = if km {
        e.all(vec![Check::KacMoodyDatum, Check::QMinAbove { bound: 3 }])?
    } else {
        e.all(vec![Check::AssumedRankOnePerfect])?
    };

    let simplicity = decide_simplicity(&e, &s0, &lattice, km)?;

    let finite_quotient_bound = input.root_group_orders.iter().fold(BigUint::one(), |acc, &o| acc * BigUint::from(o));

    let (qt, fired) = e.any(vec![
        [s0_checks(), vec![Check::KacMoodyDatum, Check::QMinAbove { bound: 3 }]].concat(),
        [s0_checks(), vec![Check::TwoSpherical, Check::QMinAbove { bound: 2 }]].concat(),
        [s0_checks(), vec![Check::SimplyLaced]].concat(),
    ])?;
    let conds = [
        QuotientCondition::LieTypeQMinAbove3,
        QuotientCondition::TwoSphericalQMinAbove2,
        QuotientCondition::SimplyLaced,
    ];
    let quotients_trivial = QuotientsFlag { value: qt.value, fired: fired.map(|k| conds[k]), trail: qt.trail };

    let mut kz_checks = s0_checks();
    kz_checks.push(Check::AssumedNilpotentRootGroups);
    kz_checks.push(Check::Lattice);
    kz_checks.push(if km { Check::QMinAbove { bound: 3 } } else { Check::AssumedRankOnePerfect });
    kz_checks.push(Check::TwoSpherical);
    kz_checks.push(Check::KazhdanThreshold);
    let kz = e.all(kz_checks)?;
    let kazhdan = KazhdanFlag { value: kz.value, threshold: kazhdan_threshold(input.rank() as u32), trail: kz.trail };

    let finitely_presented = e.all(vec![Check::TwoSpherical, Check::QMinAbove { bound: 2 }])?;

    let fprs_guaranteed = e
        .any(vec![
            vec![Check::KacMoodyDatum],
            vec![Check::AssumedPp],
            vec![Check::TwoSpherical, Check::NoCriticalPairs],
        ])?
        .0;

    let commensurator_discrete =
        e.all([s0_checks(), vec![Check::KacMoodyDatum, Check::QMinAbove { bound: 3 }]].concat())?;

    let flat_rank_geq_2 =
        e.any(vec![vec![Check::AffineSubsetOfRankAtLeast3], vec![Check::CommutingNonSphericalPair]])?.0;

    Ok(Verdict {
        rank: input.rank(),
        q: input.q,
        root_group_orders: input.root_group_orders.clone(),
        torus_order: input.torus_order.clone(),
        classification: (&cl).into(),
        irreducible,
        infinite,
        non_affine,
        s0,
        two_spherical,
        simply_laced,
        lattice,
        rank_one_perfect,
        simplicity,
        finite_quotient_bound,
        quotients_trivial,
        kazhdan,
        finitely_presented,
        fprs_guaranteed,
        commensurator_discrete,
        flat_rank_geq_2,
    })
}

fn decide_simplicity(e: &Evaluator<'_>, s0: &Flag, lattice: &LatticeFlag, km: bool) -> Result<Simplicity> {
    let mut trail = s0.trail.clone();
    if !s0.value {
        return Ok(Simplicity { verdict: SimplicityClass::Inapplicable, trail });
    }
    trail.extend(lattice.trail.iter().cloned());
    if !lattice.value {
        return Ok(Simplicity { verdict: SimplicityClass::Inconclusive, trail });
    }
    if km {
        trail.push(e.ev(Check::KacMoodyDatum)?);
        return Ok(Simplicity { verdict: SimplicityClass::SimpleModCenter, trail });
    }
    let nil = e.ev(Check::AssumedNilpotentRootGroups)?;
    let nil_ok = nil.holds;
    trail.push(nil);
    if !nil_ok {
        return Ok(Simplicity { verdict: SimplicityClass::Inconclusive, trail });
    }
    let plus = e.ev(Check::AssumedRankOnePerfect)?;
    if plus.holds {
        trail.push(plus);
        return Ok(Simplicity { verdict: SimplicityClass::SimpleModCenter, trail });
    }
    trail.push(plus);
    let dense = e.ev(Check::AssumedDerivedDense)?;
    let verdict = if dense.holds { SimplicityClass::VirtuallySimple } else { SimplicityClass::Inconclusive };
    trail.push(dense);
    Ok(Simplicity { verdict, trail })
}

fn has_affine_component(cl: &TypeClassification) -> bool {
    cl.components.iter().any(|c| matches!(c.kind, ComponentType::Affine(_)))
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u64..(1u64 << n)).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

fn has_large_affine_subset(cox: &CoxeterMatrix) -> bool {
    subsets(cox.size()).filter(|j| j.len() >= 3).any(|j| {
        let cl = classify(&cox.restrict(&j));
        cl.irreducible && matches!(cl.components[0].kind, ComponentType::Affine(_))
    })
}

fn has_commuting_non_spherical_pair(cox: &CoxeterMatrix) -> bool {
    let n = cox.size();
    subsets(n).any(|j| {
        if classify(&cox.restrict(&j)).is_spherical() {
            return false;
        }
        let commuting: Vec<usize> =
            (0..n).filter(|t| !j.contains(t) && j.iter().all(|&s| cox.entry(s, *t) == Order::Finite(2))).collect();
        !commuting.is_empty() && !classify(&cox.restrict(&commuting)).is_spherical()
    })
}

/// Moussong: the Coxeter group contains `Z^2` iff it has an irreducible
/// affine parabolic of rank at least 3 or two commuting infinite parabolics.
pub fn flat_rank_geq_2(cox: &CoxeterMatrix) -> bool {
    has_large_affine_subset(cox) || has_commuting_non_spherical_pair(cox)
}

/// Largest `n` with `(4^(n+1) - 1) / 3 ≤ dist`.
pub fn fprs_fix_radius_bound(dist: u64) -> Option<u32> {
    if dist < 1 {
        return None;
    }
    let mut n = 0u32;
    // (4^(n+2) - 1) / 3 = 4 * (4^(n+1) - 1) / 3 + 1
    let mut next: u128 = 5;
    while next <= dist as u128 {
        n += 1;
        next = 4 * next + 1;
    }
    Some(n)
}

/// `3X^2 + (6L+3)X + (3L^2+3L+1)`.
pub fn q_h_polynomial(l: u64) -> Poly {
    let l = l as i64;
    Poly::from_i64(&[3 * l * l + 3 * l + 1, 6 * l + 3, 3])
}

/// `P_k` with `Σ_{n≥0} n^k x^n = P_k(x) / (1-x)^(k+1)`.
fn eulerian_numerator(k: usize) -> Poly {
    let x = Poly::from_i64(&[0, 1]);
    let one_minus_x = Poly::from_i64(&[1, -1]);
    let mut p = Poly::one();
    for j in 1..=k {
        let inner = &(&one_minus_x * &p.derivative()) + &p.scale(&(j as i64).into());
        p = &x * &inner;
    }
    p
}

/// `|T| Σ_{n≥0} Q(n)^p / q^n` in closed form, `L = L_- + L_+`.
pub fn integrability_bound(l_minus: u64, l_plus: u64, p: u32, q: u64, torus_order: &BigUint) -> Result<Evaluation> {
    if q < 2 {
        return Err(Error::InvalidInput(format!("q = {q} must be at least 2")));
    }
    if p == 0 {
        return Err(Error::InvalidInput("p must be at least 1".into()));
    }
    let qp = q_h_polynomial(l_minus + l_plus).pow(p);
    let x = BigRational::new(1.into(), q.into());
    let one_minus = BigRational::one() - &x;
    let mut total = BigRational::zero();
    let mut denom = one_minus.clone();
    for (k, a) in qp.coeffs().iter().enumerate() {
        if !a.is_zero() {
            total += BigRational::from_integer(a.clone()) * eulerian_numerator(k).eval(&x) / &denom;
        }
        denom = &denom * &one_minus;
    }
    Ok(Evaluation::Finite(total * BigRational::from_integer(torus_order.clone().into())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcm(rows: &[&[i64]]) -> GeneralizedCartanMatrix {
        GeneralizedCartanMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn all_minus_two() -> GeneralizedCartanMatrix {
        gcm(&[&[2, -2, -2], &[-2, 2, -2], &[-2, -2, 2]])
    }

    #[test]
    fn worked_example_over_f2() {
        let v = analyze(&LatticeInput::new(all_minus_two(), 2).unwrap()).unwrap();
        assert!(v.non_affine.value);
        assert!(!v.two_spherical.value);
        assert!(!v.lattice.value);
        assert_eq!(v.finite_quotient_bound, BigUint::from(8u32));
        assert!(!v.quotients_trivial.value);
        assert_eq!(v.simplicity.verdict, SimplicityClass::Inconclusive);
        let v = analyze(&LatticeInput::new(all_minus_two(), 5).unwrap()).unwrap();
        assert!(v.lattice.value && v.rank_one_perfect.value);
        assert_eq!(v.lattice.growth_value, Evaluation::Finite(BigRational::from_integer(2.into())));
        assert_eq!(v.simplicity.verdict, SimplicityClass::SimpleModCenter);
    }

    #[test]
    fn spherical_is_inapplicable() {
        let v = analyze(&LatticeInput::new(gcm(&[&[2, -1], &[-1, 2]]), 7).unwrap()).unwrap();
        assert_eq!(v.simplicity.verdict, SimplicityClass::Inapplicable);
    }

    #[test]
    fn exotic_routes() {
        let a = Assumptions { exotic: true, derived_dense: Some(true), ..Default::default() };
        let v = analyze(&LatticeInput::with_options(all_minus_two(), 5, None, None, a).unwrap()).unwrap();
        assert_eq!(v.simplicity.verdict, SimplicityClass::VirtuallySimple);
        assert!(!v.fprs_guaranteed.value);
        let a = Assumptions { exotic: true, ..Default::default() };
        let v = analyze(&LatticeInput::with_options(all_minus_two(), 5, None, None, a).unwrap()).unwrap();
        assert_eq!(v.simplicity.verdict, SimplicityClass::Inconclusive);
    }

    #[test]
    fn trails_recheck() {
        let input = LatticeInput::new(all_minus_two(), 5).unwrap();
        let v = analyze(&input).unwrap();
        for ev in v.all_evidence() {
            assert_eq!(ev.check.evaluate(&input).unwrap(), ev.holds, "{:?}", ev.check);
        }
    }

    #[test]
    fn thresholds() {
        assert_eq!(kazhdan_threshold(0), BigUint::from(1u32));
        assert_eq!(kazhdan_threshold(1), BigUint::from(1764u32));
        assert_eq!(kazhdan_threshold(2), BigUint::from(3111696u32));
        let cases = [(0, None), (1, Some(0)), (4, Some(0)), (5, Some(1)), (20, Some(1)), (21, Some(2))];
        for (d, n) in cases {
            assert_eq!(fprs_fix_radius_bound(d), n, "dist {d}");
        }
    }

    #[test]
    fn integrability() {
        assert_eq!(q_h_polynomial(0), Poly::from_i64(&[1, 3, 3]));
        assert_eq!(q_h_polynomial(1), Poly::from_i64(&[7, 9, 3]));
        let v = integrability_bound(0, 0, 1, 2, &BigUint::one()).unwrap();
        assert_eq!(v, Evaluation::Finite(BigRational::from_integer(26.into())));
    }

    #[test]
    fn flats() {
        let all3 = CoxeterMatrix::new(
            (0..4)
                .map(|i| (0..4).map(|j| if i == j { Order::Finite(1) } else { Order::Finite(3) }).collect())
                .collect(),
        )
        .unwrap();
        assert!(flat_rank_geq_2(&all3));
        assert!(!flat_rank_geq_2(&coxeter_of(&all_minus_two())));
        assert!(flat_rank_geq_2(&coxeter_of(&gcm(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]))));
    }
}
