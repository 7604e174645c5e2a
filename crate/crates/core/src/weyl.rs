//! Exact Weyl group elements of a Kac-Moody root datum.
//!
//! An element is stored as its ShortLex normal form together with its
//! integral action on the root lattice `Z^S` and on the coroot lattice. With
//! `a_ij = <alpha_j, alpha_i^vee>` the simple reflections act by
//! `s_i(alpha_j) = alpha_j - a_ij alpha_i` and
//! `s_i(alpha_j^vee) = alpha_j^vee - a_ji alpha_i^vee`.
//!
//! Normal forms come from greedy left descents: the first letter of the
//! ShortLex word of `w` is the least `i` with `w^-1(alpha_i) < 0`.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, RwLock};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gcm::{coxeter_of, CoxeterMatrix, GeneralizedCartanMatrix};

pub type Int = i64;

pub const DEFAULT_BALL_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<Int>]) -> Self {
        let n = rows.len();
        IntMatrix { n, data: rows.iter().flatten().copied().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Int {
        self.data[r * self.n + c]
    }

    pub fn rows(&self) -> Vec<Vec<Int>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Int> {
        (0..self.n).map(|r| self.get(r, c)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n)
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc: i128 = 0;
                for k in 0..n {
                    acc += self.get(r, k) as i128 * rhs.get(k, c) as i128;
                }
                data.push(Int::try_from(acc).map_err(|_| Error::Overflow)?);
            }
        }
        Ok(IntMatrix { n, data })
    }

    pub fn apply(&self, v: &[Int]) -> Result<Vec<Int>> {
        (0..self.n)
            .map(|r| {
                let acc: i128 = (0..self.n).map(|k| self.get(r, k) as i128 * v[k] as i128).sum();
                Int::try_from(acc).map_err(|_| Error::Overflow)
            })
            .collect()
    }
}

/// Sign of a nonzero vector all of whose coordinates share a sign.
pub fn is_positive(v: &[Int]) -> bool {
    v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
}

pub fn is_negative(v: &[Int]) -> bool {
    v.iter().all(|&x| x <= 0) && v.iter().any(|&x| x < 0)
}

/// An element of the Weyl group.
///
/// Equality and hashing use the pair of action matrices; ordering is
/// ShortLex on the normal form.
#[derive(Debug, Clone)]
pub struct WeylElement {
    word: Vec<usize>,
    root_action: IntMatrix,
    coroot_action: IntMatrix,
    inverse_root_action: IntMatrix,
}

impl WeylElement {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn root_action(&self) -> &IntMatrix {
        &self.root_action
    }

    pub fn coroot_action(&self) -> &IntMatrix {
        &self.coroot_action
    }

    /// Action of `w^-1` on the root lattice.
    pub fn inverse_root_action(&self) -> &IntMatrix {
        &self.inverse_root_action
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// `w(alpha_i) > 0`, i.e. `l(w s_i) = l(w) + 1`.
    pub fn has_right_ascent(&self, i: usize) -> bool {
        (0..self.root_action.n).all(|r| self.root_action.get(r, i) >= 0)
    }

    /// `w^-1(alpha_i) < 0`, i.e. `l(s_i w) = l(w) - 1`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        (0..self.inverse_root_action.n).all(|r| self.inverse_root_action.get(r, i) <= 0)
    }

    pub fn word_string(&self) -> String {
        self.word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.root_action == other.root_action && self.coroot_action == other.coroot_action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.root_action.hash(state);
        self.coroot_action.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        shortlex(&self.word, &other.word)
    }
}

pub fn shortlex(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", self.word_string())
        }
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.word_string())
    }
}

struct BallCache {
    layers: Vec<Arc<Vec<WeylElement>>>,
    total: usize,
}

/// The Weyl group of a GCM with a lazily grown cache of length spheres.
pub struct WeylGroup {
    gcm: GeneralizedCartanMatrix,
    coxeter: CoxeterMatrix,
    root_gens: Vec<IntMatrix>,
    coroot_gens: Vec<IntMatrix>,
    ball_cap: usize,
    cache: RwLock<BallCache>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup").field("gcm", &self.gcm).field("ball_cap", &self.ball_cap).finish()
    }
}

impl WeylGroup {
    pub fn new(gcm: GeneralizedCartanMatrix) -> Self {
        Self::with_ball_cap(gcm, DEFAULT_BALL_CAP)
    }

    pub fn with_ball_cap(gcm: GeneralizedCartanMatrix, ball_cap: usize) -> Self {
        let n = gcm.size();
        let mut root_gens = Vec::with_capacity(n);
        let mut coroot_gens = Vec::with_capacity(n);
        for i in 0..n {
            let mut s = IntMatrix::identity(n);
            let mut c = IntMatrix::identity(n);
            for j in 0..n {
                s.data[i * n + j] -= gcm.entry(i, j);
                c.data[i * n + j] -= gcm.entry(j, i);
            }
            root_gens.push(s);
            coroot_gens.push(c);
        }
        let coxeter = coxeter_of(&gcm);
        let identity = WeylElement {
            word: Vec::new(),
            root_action: IntMatrix::identity(n),
            coroot_action: IntMatrix::identity(n),
            inverse_root_action: IntMatrix::identity(n),
        };
        WeylGroup {
            gcm,
            coxeter,
            root_gens,
            coroot_gens,
            ball_cap,
            cache: RwLock::new(BallCache { layers: vec![Arc::new(vec![identity])], total: 1 }),
        }
    }

    pub fn rank(&self) -> usize {
        self.gcm.size()
    }

    pub fn gcm(&self) -> &GeneralizedCartanMatrix {
        &self.gcm
    }

    pub fn coxeter(&self) -> &CoxeterMatrix {
        &self.coxeter
    }

    pub fn ball_cap(&self) -> usize {
        self.ball_cap
    }

    /// Matrix of `s_i` on the root lattice.
    pub fn root_generator(&self, i: usize) -> &IntMatrix {
        &self.root_gens[i]
    }

    pub fn coroot_generator(&self, i: usize) -> &IntMatrix {
        &self.coroot_gens[i]
    }

    pub fn identity(&self) -> WeylElement {
        self.cache.read().unwrap().layers[0][0].clone()
    }

    pub fn generator(&self, i: usize) -> WeylElement {
        assert!(i < self.rank(), "generator index {i} out of range");
        WeylElement {
            word: vec![i],
            root_action: self.root_gens[i].clone(),
            coroot_action: self.coroot_gens[i].clone(),
            inverse_root_action: self.root_gens[i].clone(),
        }
    }

    /// The element represented by an arbitrary (not necessarily reduced) word.
    pub fn element(&self, word: &[usize]) -> Result<WeylElement> {
        let n = self.rank();
        if let Some(&bad) = word.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidInput(format!("generator index {bad} out of range for rank {n}")));
        }
        let mut root = IntMatrix::identity(n);
        let mut coroot = IntMatrix::identity(n);
        let mut inverse = IntMatrix::identity(n);
        for &i in word {
            root = root.mul(&self.root_gens[i])?;
            coroot = coroot.mul(&self.coroot_gens[i])?;
            inverse = self.root_gens[i].mul(&inverse)?;
        }
        self.assemble(root, coroot, inverse)
    }

    fn assemble(&self, root: IntMatrix, coroot: IntMatrix, inverse: IntMatrix) -> Result<WeylElement> {
        let word = self.normal_form_of_inverse(&inverse)?;
        Ok(WeylElement { word, root_action: root, coroot_action: coroot, inverse_root_action: inverse })
    }

    /// ShortLex normal form of `w`, given the root action of `w^-1`.
    fn normal_form_of_inverse(&self, inverse: &IntMatrix) -> Result<Vec<usize>> {
        let n = self.rank();
        let mut x = inverse.clone();
        let mut word = Vec::new();
        loop {
            let descent = (0..n).find(|&i| (0..n).all(|r| x.get(r, i) <= 0));
            match descent {
                Some(i) => {
                    word.push(i);
                    x = x.mul(&self.root_gens[i])?;
                }
                None => break,
            }
        }
        Ok(word)
    }

    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> Result<WeylElement> {
        let root = u.root_action.mul(&v.root_action)?;
        let coroot = u.coroot_action.mul(&v.coroot_action)?;
        let inverse = v.inverse_root_action.mul(&u.inverse_root_action)?;
        self.assemble(root, coroot, inverse)
    }

    pub fn inverse(&self, w: &WeylElement) -> Result<WeylElement> {
        let rev: Vec<usize> = w.word.iter().rev().copied().collect();
        self.element(&rev)
    }

    /// `w^k` for any integer `k`, by repeated squaring.
    pub fn power(&self, w: &WeylElement, k: i64) -> Result<WeylElement> {
        let base = if k < 0 { self.inverse(w)? } else { w.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = self.multiply(&sq, &sq)?;
            }
        }
        Ok(acc)
    }

    /// Elements of length exactly `k`, ShortLex-sorted.
    pub fn sphere(&self, k: usize) -> Result<Arc<Vec<WeylElement>>> {
        {
            let cache = self.cache.read().unwrap();
            if let Some(layer) = cache.layers.get(k) {
                return Ok(layer.clone());
            }
        }
        let mut cache = self.cache.write().unwrap();
        while cache.layers.len() <= k {
            let prev = cache.layers.last().unwrap().clone();
            let next = self.next_layer(&prev)?;
            cache.total += next.len();
            if cache.total > self.ball_cap {
                cache.total -= next.len();
                return Err(Error::BudgetExceeded(format!(
                    "ball of radius {} exceeds the cap of {} elements",
                    cache.layers.len(),
                    self.ball_cap
                )));
            }
            cache.layers.push(Arc::new(next));
        }
        Ok(cache.layers[k].clone())
    }

    fn next_layer(&self, prev: &[WeylElement]) -> Result<Vec<WeylElement>> {
        let n = self.rank();
        let mut seen: HashMap<(IntMatrix, IntMatrix), WeylElement> = HashMap::new();
        for w in prev {
            for i in 0..n {
                if !w.has_right_ascent(i) {
                    continue;
                }
                let root = w.root_action.mul(&self.root_gens[i])?;
                let coroot = w.coroot_action.mul(&self.coroot_gens[i])?;
                let key = (root, coroot);
                if seen.contains_key(&key) {
                    continue;
                }
                let inverse = self.root_gens[i].mul(&w.inverse_root_action)?;
                let word = self.normal_form_of_inverse(&inverse)?;
                let e = WeylElement {
                    word,
                    root_action: key.0.clone(),
                    coroot_action: key.1.clone(),
                    inverse_root_action: inverse,
                };
                seen.insert(key, e);
            }
        }
        let mut layer: Vec<WeylElement> = seen.into_values().collect();
        layer.sort();
        Ok(layer)
    }

    /// All elements of length at most `radius`, ShortLex-sorted.
    pub fn ball(&self, radius: usize) -> Result<Vec<WeylElement>> {
        let mut out = Vec::new();
        for k in 0..=radius {
            let layer = self.sphere(k)?;
            if layer.is_empty() {
                break;
            }
            out.extend(layer.iter().cloned());
        }
        Ok(out)
    }

    /// Sphere sizes `c_0, ..., c_radius`.
    pub fn sphere_sizes(&self, radius: usize) -> Result<Vec<u64>> {
        (0..=radius).map(|k| self.sphere(k).map(|l| l.len() as u64)).collect()
    }

    /// The whole group if it has at most `max_length`-long elements.
    pub fn is_finite_within(&self, max_length: usize) -> Result<bool> {
        for k in 0..=max_length + 1 {
            if self.sphere(k)?.is_empty() {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(rows: &[&[i64]]) -> WeylGroup {
        WeylGroup::new(GeneralizedCartanMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap())
    }

    fn a2() -> WeylGroup {
        group(&[&[2, -1], &[-1, 2]])
    }

    fn d_inf() -> WeylGroup {
        group(&[&[2, -2], &[-2, 2]])
    }

    #[test]
    fn generator_matrices() {
        let g = a2();
        // columns are the images of alpha_0, alpha_1
        assert_eq!(g.generator(0).root_action().rows(), vec![vec![-1, 1], vec![0, 1]]);
        let g = d_inf();
        assert_eq!(g.generator(0).root_action().rows(), vec![vec![-1, 2], vec![0, 1]]);
        for i in 0..2 {
            let s = g.generator(i);
            assert!(g.multiply(&s, &s).unwrap().is_identity());
        }
    }

    #[test]
    fn braid_relation_in_a2() {
        let g = a2();
        let x = g.element(&[0, 1, 0]).unwrap();
        let y = g.element(&[1, 0, 1]).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.word(), &[0, 1, 0]);
        assert_eq!(y.word(), &[0, 1, 0]);
    }

    #[test]
    fn inverse_and_powers() {
        let g = d_inf();
        let w = g.element(&[0, 1, 0]).unwrap();
        let wi = g.inverse(&w).unwrap();
        assert!(g.multiply(&w, &wi).unwrap().is_identity());
        let t = g.element(&[0, 1]).unwrap();
        for k in 0..=6 {
            assert_eq!(g.power(&t, k).unwrap().length(), 2 * k as usize);
        }
        assert_eq!(g.power(&t, -2).unwrap().word(), &[1, 0, 1, 0]);
    }

    #[test]
    fn balls() {
        let g = a2();
        assert_eq!(g.sphere_sizes(3).unwrap(), vec![1, 2, 2, 1]);
        assert_eq!(g.ball(10).unwrap().len(), 6);
        assert!(g.is_finite_within(3).unwrap());
        let g = d_inf();
        assert_eq!(g.sphere_sizes(4).unwrap(), vec![1, 2, 2, 2, 2]);
        assert_eq!(g.ball(4).unwrap().len(), 9);
        assert_eq!(g.ball(0).unwrap(), vec![g.identity()]);
    }

    #[test]
    fn ball_cap_is_enforced() {
        let gcm = GeneralizedCartanMatrix::new(vec![vec![2, -2, -2], vec![-2, 2, -2], vec![-2, -2, 2]]).unwrap();
        let g = WeylGroup::with_ball_cap(gcm, 20);
        assert!(g.ball(2).is_ok());
        assert!(matches!(g.ball(3), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn rejects_bad_index() {
        assert!(matches!(a2().element(&[0, 2]), Err(Error::InvalidInput(_))));
    }
}
