//! Real roots as half-spaces of chambers.
//!
//! A chamber is a group element `w` and `w` lies in the half-space of `γ` iff
//! `w^-1(γ)` is positive. The identity is the fundamental chamber.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gcm::Order;
use crate::weyl::{is_negative, is_positive, Int, WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn of(positive: bool) -> Sign {
        if positive {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn factor(self) -> Int {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// JSON form of a root: `sign * (s_{word[0]} ... s_{word[k-1]})(alpha_simple)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootLiteral {
    #[serde(default)]
    pub word: Vec<usize>,
    pub simple: usize,
    pub sign: Sign,
}

/// A real root together with its coroot and a derivation `±u(alpha_i)`.
#[derive(Debug, Clone)]
pub struct Root {
    vec: Vec<Int>,
    covec: Vec<Int>,
    word: Vec<usize>,
    simple: usize,
    sign: Sign,
}

impl PartialEq for Root {
    fn eq(&self, other: &Self) -> bool {
        self.vec == other.vec && self.covec == other.covec
    }
}

impl Eq for Root {}

impl Hash for Root {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.vec.hash(state);
        self.covec.hash(state);
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.vec, &self.covec).cmp(&(&other.vec, &other.covec))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vec.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Root", 4)?;
        st.serialize_field("word", &self.word)?;
        st.serialize_field("simple", &self.simple)?;
        st.serialize_field("sign", &self.sign)?;
        st.serialize_field("vec", &self.vec)?;
        st.end()
    }
}

impl Root {
    pub fn simple(g: &WeylGroup, i: usize) -> Root {
        Root::from_element(&g.identity(), i, Sign::Plus)
    }

    /// `sign * u(alpha_i)` read off the action matrices of `u`.
    pub fn from_element(u: &WeylElement, i: usize, sign: Sign) -> Root {
        let f = sign.factor();
        Root {
            vec: u.root_action().column(i).into_iter().map(|x| f * x).collect(),
            covec: u.coroot_action().column(i).into_iter().map(|x| f * x).collect(),
            word: u.word().to_vec(),
            simple: i,
            sign,
        }
    }

    pub fn from_witness(g: &WeylGroup, word: &[usize], simple: usize, sign: Sign) -> Result<Root> {
        if simple >= g.rank() {
            return Err(Error::InvalidInput(format!("simple root index {simple} out of range for rank {}", g.rank())));
        }
        Ok(Root::from_element(&g.element(word)?, simple, sign))
    }

    pub fn from_literal(g: &WeylGroup, lit: &RootLiteral) -> Result<Root> {
        Root::from_witness(g, &lit.word, lit.simple, lit.sign)
    }

    pub fn literal(&self) -> RootLiteral {
        RootLiteral { word: self.word.clone(), simple: self.simple, sign: self.sign }
    }

    pub fn vec(&self) -> &[Int] {
        &self.vec
    }

    pub fn covec(&self) -> &[Int] {
        &self.covec
    }

    pub fn witness_word(&self) -> &[usize] {
        &self.word
    }

    pub fn simple_index(&self) -> usize {
        self.simple
    }

    pub fn witness_sign(&self) -> Sign {
        self.sign
    }

    pub fn is_positive(&self) -> bool {
        is_positive(&self.vec)
    }

    pub fn negate(&self) -> Root {
        Root {
            vec: self.vec.iter().map(|x| -x).collect(),
            covec: self.covec.iter().map(|x| -x).collect(),
            word: self.word.clone(),
            simple: self.simple,
            sign: self.sign.flip(),
        }
    }

    /// Two adjacent chambers `u` and `u s_i` on either side of the wall.
    pub fn wall_chambers(&self, g: &WeylGroup) -> Result<(WeylElement, WeylElement)> {
        let u = g.element(&self.word)?;
        let us = g.multiply(&u, &g.generator(self.simple))?;
        Ok((u, us))
    }

    /// Re-derives `(vec, covec)` from the witness.
    pub fn check_witness(&self, g: &WeylGroup) -> Result<bool> {
        let r = Root::from_witness(g, &self.word, self.simple, self.sign)?;
        Ok(r.vec == self.vec && r.covec == self.covec)
    }
}

/// `<lambda, mu^vee>` for `lambda` in root coordinates and `mu^vee` in coroot coordinates.
pub fn pairing(g: &WeylGroup, lambda: &[Int], mu_vee: &[Int]) -> i128 {
    let n = g.rank();
    let mut acc = 0i128;
    for i in 0..n {
        for j in 0..n {
            acc += mu_vee[i] as i128 * g.gcm().entry(i, j) as i128 * lambda[j] as i128;
        }
    }
    acc
}

pub fn act(g: &WeylGroup, w: &WeylElement, gamma: &Root) -> Result<Root> {
    let vec = w.root_action().apply(&gamma.vec)?;
    let covec = w.coroot_action().apply(&gamma.covec)?;
    let u = g.multiply(w, &g.element(&gamma.word)?)?;
    Ok(Root { vec, covec, word: u.word().to_vec(), simple: gamma.simple, sign: gamma.sign })
}

/// The reflection `u s_i u^-1` in the wall of `±u(alpha_i)`.
pub fn reflection_of(g: &WeylGroup, gamma: &Root) -> Result<WeylElement> {
    let mut word = gamma.word.clone();
    word.push(gamma.simple);
    word.extend(gamma.word.iter().rev());
    g.element(&word)
}

pub fn chamber_in_halfspace(w: &WeylElement, gamma: &Root) -> Result<bool> {
    let v = w.inverse_root_action().apply(&gamma.vec)?;
    Ok(is_positive(&v))
}

pub fn product_order(g: &WeylGroup, gamma: &Root, delta: &Root) -> Order {
    if gamma == delta || *gamma == delta.negate() {
        return Order::Finite(1);
    }
    let k = pairing(g, &gamma.vec, &delta.covec) * pairing(g, &delta.vec, &gamma.covec);
    Order::from_cartan_product(k)
}

/// A quadrant `sign1 H_γ ∩ sign2 H_δ` of a pair of half-spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Quadrant {
    pub first: Sign,
    pub second: Sign,
}

impl Quadrant {
    pub const PLUS_PLUS: Quadrant = Quadrant { first: Sign::Plus, second: Sign::Plus };
    pub const MINUS_MINUS: Quadrant = Quadrant { first: Sign::Minus, second: Sign::Minus };

    pub fn new(first: Sign, second: Sign) -> Quadrant {
        Quadrant { first, second }
    }

    pub fn all() -> [Quadrant; 4] {
        use Sign::*;
        [Quadrant::new(Plus, Plus), Quadrant::new(Plus, Minus), Quadrant::new(Minus, Plus), Quadrant::new(Minus, Minus)]
    }

    pub fn opposite(self) -> Quadrant {
        Quadrant::new(self.first.flip(), self.second.flip())
    }

    pub fn swapped(self) -> Quadrant {
        Quadrant::new(self.second, self.first)
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

pub fn quadrant_of(w: &WeylElement, gamma: &Root, delta: &Root) -> Result<Quadrant> {
    Ok(Quadrant::new(Sign::of(chamber_in_halfspace(w, gamma)?), Sign::of(chamber_in_halfspace(w, delta)?)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadrantWitness {
    pub quadrant: Quadrant,
    pub chamber: WeylElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HalfspaceRelation {
    Equal,
    Opposite,
    Crossing {
        order: u32,
    },
    /// Exactly one quadrant is empty; the other three carry a chamber.
    Nested {
        empty: Quadrant,
        witnesses: Vec<QuadrantWitness>,
    },
}

impl HalfspaceRelation {
    pub fn empty_quadrant(&self) -> Option<Quadrant> {
        match self {
            HalfspaceRelation::Nested { empty, .. } => Some(*empty),
            _ => None,
        }
    }

    /// `H_γ ∩ H_δ = ∅`.
    pub fn is_disjoint(&self) -> bool {
        matches!(self, HalfspaceRelation::Opposite) || self.empty_quadrant() == Some(Quadrant::PLUS_PLUS)
    }

    /// Whether quadrant `q` of the pair is empty.
    pub fn quadrant_is_empty(&self, q: Quadrant) -> bool {
        match self {
            HalfspaceRelation::Equal => q.first != q.second,
            HalfspaceRelation::Opposite => q.first == q.second,
            HalfspaceRelation::Crossing { .. } => false,
            HalfspaceRelation::Nested { empty, .. } => *empty == q,
        }
    }

    /// Re-checks a nested certificate against the action matrices.
    pub fn verify(&self, gamma: &Root, delta: &Root) -> Result<bool> {
        match self {
            HalfspaceRelation::Nested { empty, witnesses } => {
                let mut seen = HashSet::new();
                for wit in witnesses {
                    if wit.quadrant == *empty || quadrant_of(&wit.chamber, gamma, delta)? != wit.quadrant {
                        return Ok(false);
                    }
                    seen.insert(wit.quadrant);
                }
                Ok(seen.len() == 3)
            }
            HalfspaceRelation::Equal => Ok(gamma == delta),
            HalfspaceRelation::Opposite => Ok(*gamma == delta.negate()),
            HalfspaceRelation::Crossing { .. } => Ok(true),
        }
    }
}

/// Visits chambers `b x` for every base `b` and `x` of growing length, until
/// `visit` returns true or the radius schedule is exhausted.
fn scan<F>(g: &WeylGroup, bases: &[WeylElement], budget: &Budget, mut visit: F) -> Result<bool>
where
    F: FnMut(&WeylElement) -> Result<bool>,
{
    for b in bases {
        if visit(b)? {
            return Ok(true);
        }
    }
    for r in 1..=budget.max_radius() {
        let sphere = g.sphere(r)?;
        if sphere.is_empty() {
            break;
        }
        for b in bases {
            for x in sphere.iter() {
                if visit(&g.multiply(b, x)?)? {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

fn local_bases(g: &WeylGroup, roots: &[&Root]) -> Result<Vec<WeylElement>> {
    let mut out = vec![g.identity()];
    for r in roots {
        let (u, us) = r.wall_chambers(g)?;
        for c in [u, us] {
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// First chamber found for each quadrant, searching around the walls.
fn quadrant_witnesses(
    g: &WeylGroup,
    gamma: &Root,
    delta: &Root,
    budget: &Budget,
    enough: usize,
) -> Result<BTreeMap<Quadrant, WeylElement>> {
    let bases = local_bases(g, &[gamma, delta])?;
    let mut found: BTreeMap<Quadrant, WeylElement> = BTreeMap::new();
    scan(g, &bases, budget, |w| {
        let q = quadrant_of(w, gamma, delta)?;
        found.entry(q).or_insert_with(|| w.clone());
        Ok(found.len() >= enough)
    })?;
    Ok(found)
}

/// Decides which quadrants of `(H_γ, H_δ)` are empty.
///
/// Distinct walls whose reflections generate a finite group cross. Otherwise
/// exactly one quadrant is empty, and the chambers on both sides of each wall
/// already meet the other three.
pub fn halfspace_relation(g: &WeylGroup, gamma: &Root, delta: &Root, budget: &Budget) -> Result<HalfspaceRelation> {
    if gamma == delta {
        return Ok(HalfspaceRelation::Equal);
    }
    if *gamma == delta.negate() {
        return Ok(HalfspaceRelation::Opposite);
    }
    if let Order::Finite(m) = product_order(g, gamma, delta) {
        return Ok(HalfspaceRelation::Crossing { order: m });
    }
    let found = quadrant_witnesses(g, gamma, delta, budget, 3)?;
    if found.len() < 3 {
        return Err(Error::BudgetExceeded(format!(
            "only {} quadrants of {gamma} and {delta} met within radius {}",
            found.len(),
            budget.max_radius()
        )));
    }
    let empty = Quadrant::all().into_iter().find(|q| !found.contains_key(q)).unwrap();
    // one more scan at radius 0 guards the exactly-one-empty fact locally
    for c in local_bases(g, &[gamma, delta])? {
        if quadrant_of(&c, gamma, delta)? == empty {
            return Err(Error::Inconsistent(format!(
                "walls of {gamma} and {delta} cross but generate an infinite group"
            )));
        }
    }
    let witnesses = found.into_iter().map(|(quadrant, chamber)| QuadrantWitness { quadrant, chamber }).collect();
    Ok(HalfspaceRelation::Nested { empty, witnesses })
}

pub fn is_prenilpotent(g: &WeylGroup, gamma: &Root, delta: &Root, budget: &Budget) -> Result<bool> {
    let rel = halfspace_relation(g, gamma, delta, budget)?;
    Ok(!rel.quadrant_is_empty(Quadrant::PLUS_PLUS) && !rel.quadrant_is_empty(Quadrant::MINUS_MINUS))
}

/// `H_small ⊆ H_large`, i.e. `H_small ∩ H_{-large} = ∅`.
pub fn halfspace_included(g: &WeylGroup, small: &Root, large: &Root, budget: &Budget) -> Result<bool> {
    let rel = halfspace_relation(g, small, large, budget)?;
    Ok(rel.quadrant_is_empty(Quadrant::new(Sign::Plus, Sign::Minus)))
}

/// Writes `ε = aγ + bδ` and reports whether `a, b ≥ 0`.
fn in_cone(gamma: &[Int], delta: &[Int], eps: &[Int]) -> bool {
    let n = gamma.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let det = gamma[i] as i128 * delta[j] as i128 - gamma[j] as i128 * delta[i] as i128;
            if det == 0 {
                continue;
            }
            let a = eps[i] as i128 * delta[j] as i128 - eps[j] as i128 * delta[i] as i128;
            let b = gamma[i] as i128 * eps[j] as i128 - gamma[j] as i128 * eps[i] as i128;
            let in_span = (0..n).all(|k| eps[k] as i128 * det == a * gamma[k] as i128 + b * delta[k] as i128);
            return in_span && a * det.signum() >= 0 && b * det.signum() >= 0;
        }
    }
    false
}

/// The roots whose walls separate chamber `c` from chamber `d`, oriented so
/// that `c` lies in each half-space, in gallery order.
pub fn separating_roots(g: &WeylGroup, c: &WeylElement, d: &WeylElement) -> Result<Vec<Root>> {
    let x = g.multiply(&g.inverse(c)?, d)?;
    let mut prefix = c.clone();
    let mut out = Vec::with_capacity(x.length());
    for &i in x.word() {
        out.push(Root::from_element(&prefix, i, Sign::Plus));
        prefix = g.multiply(&prefix, &g.generator(i))?;
    }
    Ok(out)
}

/// The interval `[γ, δ]`: roots `ε` with `H_γ ∩ H_δ ⊆ H_ε` and
/// `H_{-γ} ∩ H_{-δ} ⊆ H_{-ε}`.
///
/// Every such wall separates a chamber of `H_γ ∩ H_δ` from a chamber of
/// `H_{-γ} ∩ H_{-δ}`, so the walls crossed by one minimal gallery between
/// them are a complete candidate list. Members in the closed cone spanned by
/// `γ` and `δ` need no search; the rest are settled by half-space inclusions
/// (nested walls) or by a chamber certificate (crossing walls).
pub fn interval(g: &WeylGroup, gamma: &Root, delta: &Root, budget: &Budget) -> Result<Vec<Root>> {
    let rel = halfspace_relation(g, gamma, delta, budget)?;
    if rel.quadrant_is_empty(Quadrant::PLUS_PLUS) || rel.quadrant_is_empty(Quadrant::MINUS_MINUS) {
        return Err(Error::NotPrenilpotent);
    }
    if rel == HalfspaceRelation::Equal {
        return Ok(vec![gamma.clone()]);
    }
    let found = quadrant_witnesses(g, gamma, delta, budget, 4)?;
    let (Some(c), Some(d)) = (found.get(&Quadrant::PLUS_PLUS), found.get(&Quadrant::MINUS_MINUS)) else {
        return Err(Error::BudgetExceeded(format!(
            "no chamber pair certifying prenilpotence of {gamma}, {delta} within radius {}",
            budget.max_radius()
        )));
    };
    let candidates = separating_roots(g, c, d)?;
    let mut out = Vec::new();
    for eps in candidates {
        if eps == *gamma || eps == *delta || in_cone(&gamma.vec, &delta.vec, &eps.vec) {
            out.push(eps);
            continue;
        }
        let member = match rel.empty_quadrant() {
            Some(empty) => {
                // H_small ⊆ H_large; the interval is {ε : H_small ⊆ H_ε ⊆ H_large}
                let (small, large) =
                    if empty == Quadrant::new(Sign::Plus, Sign::Minus) { (gamma, delta) } else { (delta, gamma) };
                halfspace_included(g, small, &eps, budget)? && halfspace_included(g, &eps, large, budget)?
            }
            None => {
                let bases = local_bases(g, &[gamma, delta, &eps])?;
                let refuted = scan(g, &bases, budget, |w| {
                    let q = quadrant_of(w, gamma, delta)?;
                    let inside = chamber_in_halfspace(w, &eps)?;
                    Ok((q == Quadrant::PLUS_PLUS && !inside) || (q == Quadrant::MINUS_MINUS && inside))
                })?;
                if !refuted {
                    return Err(Error::BudgetExceeded(format!(
                        "could not certify {eps} outside [{gamma}, {delta}] within radius {}",
                        budget.max_radius()
                    )));
                }
                false
            }
        };
        if member {
            out.push(eps);
        }
    }
    Ok(out)
}

/// The roots `±τ^k γ`, `±τ^k δ` of the dihedral reflection group generated by
/// the two reflections, `τ = r_γ r_δ`, for `|k| ≤ k_bound` (or one period).
pub fn dihedral_roots(g: &WeylGroup, gamma: &Root, delta: &Root, k_bound: usize) -> Result<Vec<Root>> {
    let tau = g.multiply(&reflection_of(g, gamma)?, &reflection_of(g, delta)?)?;
    let ks: Vec<i64> = match product_order(g, gamma, delta) {
        Order::Finite(m) => (0..m as i64).collect(),
        Order::Infinite => (-(k_bound as i64)..=k_bound as i64).collect(),
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for k in ks {
        let t = g.power(&tau, k)?;
        for base in [gamma, delta] {
            let r = act(g, &t, base)?;
            for x in [r.negate(), r] {
                if seen.insert(x.clone()) {
                    out.push(x);
                }
            }
        }
    }
    Ok(out)
}

fn closure_failure(g: &WeylGroup, psi: &[Root], budget: &Budget) -> Result<Option<String>> {
    let set: HashSet<&Root> = psi.iter().collect();
    for (a, x) in psi.iter().enumerate() {
        for y in &psi[a + 1..] {
            if !is_prenilpotent(g, x, y, budget)? {
                return Ok(Some(format!("{{{x}, {y}}} is not prenilpotent")));
            }
            for z in interval(g, x, y, budget)? {
                if !set.contains(&z) {
                    return Ok(Some(format!("[{x}, {y}] contains {z} outside the set")));
                }
            }
        }
    }
    Ok(None)
}

/// Pairwise prenilpotent and closed under intervals.
pub fn is_nilpotent_set(g: &WeylGroup, psi: &[Root], budget: &Budget) -> Result<bool> {
    Ok(closure_failure(g, &dedup(psi), budget)?.is_none())
}

fn dedup(psi: &[Root]) -> Vec<Root> {
    let mut seen = HashSet::new();
    psi.iter().filter(|r| seen.insert((*r).clone())).cloned().collect()
}

/// Removes roots one at a time, always the first (in input order) whose
/// removal leaves a nilpotent set.
pub fn nibbling_sequence(g: &WeylGroup, psi: &[Root], budget: &Budget) -> Result<Vec<Root>> {
    let mut rest = dedup(psi);
    if let Some(reason) = closure_failure(g, &rest, budget)? {
        return Err(Error::NotNilpotent(reason));
    }
    let mut seq = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut removed = None;
        for k in 0..rest.len() {
            let mut trial = rest.clone();
            trial.remove(k);
            if closure_failure(g, &trial, budget)?.is_none() {
                removed = Some(k);
                break;
            }
        }
        let k = removed.ok_or(Error::NoNibblingFound)?;
        seq.push(rest.remove(k));
    }
    Ok(seq)
}

/// Gallery distance from chamber `w` to the nearest chamber of `H_γ`.
pub fn chamber_to_halfspace_distance(g: &WeylGroup, w: &WeylElement, gamma: &Root) -> Result<usize> {
    let v = w.inverse_root_action().apply(&gamma.vec)?;
    for k in 0.. {
        let sphere = g.sphere(k)?;
        if sphere.is_empty() {
            break;
        }
        for x in sphere.iter() {
            if is_positive(&x.inverse_root_action().apply(&v)?) {
                return Ok(k);
            }
        }
    }
    Err(Error::Inconsistent(format!("half-space of {gamma} has no chamber")))
}

/// All roots `±u(alpha_i)` with `l(u) ≤ depth`, ordered by the length of
/// `u`, then ShortLex, then `i`, then sign; each root once.
pub fn roots_up_to_depth(g: &WeylGroup, depth: usize) -> Result<Vec<Root>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for k in 0..=depth {
        let sphere = g.sphere(k)?;
        if sphere.is_empty() {
            break;
        }
        for u in sphere.iter() {
            for i in 0..g.rank() {
                for sign in [Sign::Plus, Sign::Minus] {
                    let r = Root::from_element(u, i, sign);
                    debug_assert!(is_positive(&r.vec) || is_negative(&r.vec));
                    if seen.insert((r.vec.clone(), r.covec.clone())) {
                        out.push(r);
                    }
                }
            }
        }
    }
    Ok(out)
}
