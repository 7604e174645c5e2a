//! Disjoint half-spaces: pairs, pairwise disjoint triples, and the
//! `β = τ^h(-α)`, `γ = (τ')^h(-β)` configuration.
//!
//! All searches walk the roots by depth and return the first hit, so the
//! output is deterministic. Every answer carries certificates that can be
//! re-checked without searching.

use std::cmp::Ordering;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gcm::{classify, ComponentType, Order};
use crate::roots::{
    act, halfspace_included, halfspace_relation, reflection_of, roots_up_to_depth, HalfspaceRelation, Root,
};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleType {
    Spherical,
    Euclidean,
    Hyperbolic,
}

/// Compares `1/a + 1/b + 1/c` with 1, an infinite order contributing 0.
pub fn triangle_type(a: Order, b: Order, c: Order) -> TriangleType {
    // over the common denominator abc, with finite factors only
    let fin: Vec<u128> = [a, b, c]
        .iter()
        .filter_map(|o| match o {
            Order::Finite(m) => Some(*m as u128),
            Order::Infinite => None,
        })
        .collect();
    let prod: u128 = fin.iter().product();
    let sum: u128 = fin.iter().map(|m| prod / m).sum();
    match sum.cmp(&prod) {
        Ordering::Greater => TriangleType::Spherical,
        Ordering::Equal => TriangleType::Euclidean,
        Ordering::Less => TriangleType::Hyperbolic,
    }
}

fn require_infinite_irreducible(g: &WeylGroup) -> Result<()> {
    let cl = classify(g.coxeter());
    if !cl.infinite {
        return Err(Error::Inapplicable("infinite hypothesis fails: the Weyl group is finite".into()));
    }
    if !cl.irreducible {
        return Err(Error::Inapplicable("irreducible hypothesis fails".into()));
    }
    Ok(())
}

fn require_non_affine(g: &WeylGroup) -> Result<()> {
    require_infinite_irreducible(g)?;
    let cl = classify(g.coxeter());
    if cl.components.iter().any(|c| matches!(c.kind, ComponentType::Affine(_))) {
        return Err(Error::Inapplicable("non-affine hypothesis fails".into()));
    }
    Ok(())
}

/// First root in depth order satisfying `pred`, trying the depths of the
/// radius schedule in turn.
fn search_by_depth<F>(g: &WeylGroup, budget: &Budget, mut pred: F) -> Result<(Root, usize)>
where
    F: FnMut(&Root) -> Result<bool>,
{
    let mut checked = 0;
    for &r in &budget.radius_schedule {
        let roots = roots_up_to_depth(g, r)?;
        for cand in roots.iter().skip(checked) {
            if pred(cand)? {
                return Ok((cand.clone(), r));
            }
        }
        checked = checked.max(roots.len());
    }
    Err(Error::BudgetExceeded(format!(
        "no witness among roots of depth at most {} (inconclusive, not a proof of nonexistence)",
        budget.max_radius()
    )))
}

fn nested_disjoint(g: &WeylGroup, x: &Root, y: &Root, budget: &Budget) -> Result<Option<HalfspaceRelation>> {
    if x == y || *x == y.negate() {
        return Ok(None);
    }
    let rel = halfspace_relation(g, x, y, budget)?;
    Ok(if rel.is_disjoint() { Some(rel) } else { None })
}

#[derive(Debug, Clone, Serialize)]
pub struct DisjointRoot {
    pub root: Root,
    pub certificate: HalfspaceRelation,
    pub depth: usize,
}

/// A root `η` with `H_α ∩ H_η = ∅`, avoiding the given roots.
pub fn find_disjoint_root(g: &WeylGroup, alpha: &Root, avoid: &[Root], budget: &Budget) -> Result<DisjointRoot> {
    require_infinite_irreducible(g)?;
    let mut cert = None;
    let (root, depth) = search_by_depth(g, budget, |eta| {
        if avoid.contains(eta) {
            return Ok(false);
        }
        cert = nested_disjoint(g, alpha, eta, budget)?;
        Ok(cert.is_some())
    })?;
    Ok(DisjointRoot { root, certificate: cert.unwrap(), depth })
}

/// Three pairwise disjoint half-spaces with one certificate per pair,
/// ordered `(α, β)`, `(α, γ)`, `(β, γ)`.
#[derive(Debug, Clone, Serialize)]
pub struct TripleWitness {
    pub alpha: Root,
    pub beta: Root,
    pub gamma: Root,
    pub certificates: [HalfspaceRelation; 3],
    pub radius: usize,
}

impl TripleWitness {
    fn pairs(&self) -> [(&Root, &Root, &HalfspaceRelation); 3] {
        [
            (&self.alpha, &self.beta, &self.certificates[0]),
            (&self.alpha, &self.gamma, &self.certificates[1]),
            (&self.beta, &self.gamma, &self.certificates[2]),
        ]
    }

    /// Re-checks the certificates against the action matrices and confirms
    /// by brute force that no chamber of length at most `radius` lies in two
    /// of the half-spaces.
    pub fn verify(&self, g: &WeylGroup, radius: usize) -> Result<bool> {
        for (x, y, cert) in self.pairs() {
            if !cert.is_disjoint() || !cert.verify(x, y)? {
                return Ok(false);
            }
            if !matches!(cert, HalfspaceRelation::Nested { .. }) {
                return Ok(false);
            }
        }
        for w in g.ball(radius)? {
            let inside = [&self.alpha, &self.beta, &self.gamma]
                .iter()
                .map(|r| crate::roots::chamber_in_halfspace(&w, r))
                .collect::<Result<Vec<_>>>()?;
            if inside.iter().filter(|&&b| b).count() > 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Given disjoint `H_α`, `H_β`, a root `γ` whose half-space misses both.
pub fn find_disjoint_triple(g: &WeylGroup, alpha: &Root, beta: &Root, budget: &Budget) -> Result<TripleWitness> {
    require_non_affine(g)?;
    let Some(ab) = nested_disjoint(g, alpha, beta, budget)? else {
        return Err(Error::Inapplicable("the two input half-spaces are not disjoint".into()));
    };
    let mut certs = None;
    let (gamma, radius) = search_by_depth(g, budget, |gamma| {
        let Some(ag) = nested_disjoint(g, alpha, gamma, budget)? else {
            return Ok(false);
        };
        let Some(bg) = nested_disjoint(g, beta, gamma, budget)? else {
            return Ok(false);
        };
        certs = Some((ag, bg));
        Ok(true)
    })?;
    let (ag, bg) = certs.unwrap();
    Ok(TripleWitness { alpha: alpha.clone(), beta: beta.clone(), gamma, certificates: [ab, ag, bg], radius })
}

#[derive(Debug, Clone, Serialize)]
pub struct SimplicityWitness {
    pub alpha: Root,
    pub h: u32,
    pub eta: Root,
    pub beta: Root,
    pub xi: Root,
    pub gamma: Root,
    /// `τ = r_η r_α`
    pub tau: WeylElement,
    /// `τ' = r_ξ r_β`
    pub tau_prime: WeylElement,
    pub triple: TripleWitness,
    /// `H_β ⊆ H_η`
    pub beta_in_eta: bool,
}

impl SimplicityWitness {
    /// Recomputes `β` and `γ` from the matrices and re-verifies the triple.
    pub fn verify(&self, g: &WeylGroup, radius: usize) -> Result<bool> {
        let tau = g.multiply(&reflection_of(g, &self.eta)?, &reflection_of(g, &self.alpha)?)?;
        let tau_h = g.power(&tau, self.h as i64)?;
        let neg_alpha = self.alpha.negate();
        let beta_ok = tau == self.tau
            && tau_h.root_action().apply(neg_alpha.vec())? == self.beta.vec()
            && tau_h.coroot_action().apply(neg_alpha.covec())? == self.beta.covec();
        let tp = g.multiply(&reflection_of(g, &self.xi)?, &reflection_of(g, &self.beta)?)?;
        let tp_h = g.power(&tp, self.h as i64)?;
        let neg_beta = self.beta.negate();
        let gamma_ok = tp == self.tau_prime
            && tp_h.root_action().apply(neg_beta.vec())? == self.gamma.vec()
            && tp_h.coroot_action().apply(neg_beta.covec())? == self.gamma.covec();
        Ok(beta_ok
            && gamma_ok
            && self.beta_in_eta
            && halfspace_included(g, &self.beta, &self.eta, &Budget::default())?
            && self.triple.verify(g, radius)?)
    }
}

pub fn simplicity_witness(g: &WeylGroup, alpha: &Root, h: u32, budget: &Budget) -> Result<SimplicityWitness> {
    if h == 0 {
        return Err(Error::InvalidInput("h must be at least 1".into()));
    }
    require_non_affine(g)?;
    let eta = find_disjoint_root(g, alpha, &[], budget)?.root;
    let tau = g.multiply(&reflection_of(g, &eta)?, &reflection_of(g, alpha)?)?;
    let beta = act(g, &g.power(&tau, h as i64)?, &alpha.negate())?;
    let xi = find_disjoint_triple(g, alpha, &eta, budget)?.gamma;
    let tau_prime = g.multiply(&reflection_of(g, &xi)?, &reflection_of(g, &beta)?)?;
    let gamma = act(g, &g.power(&tau_prime, h as i64)?, &beta.negate())?;
    let mut certs = Vec::with_capacity(3);
    for (x, y) in [(alpha, &beta), (alpha, &gamma), (&beta, &gamma)] {
        match nested_disjoint(g, x, y, budget)? {
            Some(c) => certs.push(c),
            None => {
                return Err(Error::Inconsistent(format!(
                    "{x} and {y} are not disjoint in the constructed configuration"
                )))
            }
        }
    }
    let certificates: [HalfspaceRelation; 3] = certs.try_into().unwrap();
    let triple =
        TripleWitness { alpha: alpha.clone(), beta: beta.clone(), gamma: gamma.clone(), certificates, radius: 0 };
    let beta_in_eta = halfspace_included(g, &beta, &eta, budget)?;
    Ok(SimplicityWitness { alpha: alpha.clone(), h, eta, beta, xi, gamma, tau, tau_prime, triple, beta_in_eta })
}
