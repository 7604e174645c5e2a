#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use twinlat::gcm::{CoxeterMatrix, GeneralizedCartanMatrix, Order};
use twinlat::roots::{quadrant_of, Quadrant, Root};
use twinlat::weyl::WeylElement;

pub fn gcm(rows: &[&[i64]]) -> GeneralizedCartanMatrix {
    GeneralizedCartanMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

pub fn a2() -> GeneralizedCartanMatrix {
    gcm(&[&[2, -1], &[-1, 2]])
}
pub fn b2() -> GeneralizedCartanMatrix {
    gcm(&[&[2, -1], &[-2, 2]])
}
pub fn g2() -> GeneralizedCartanMatrix {
    gcm(&[&[2, -1], &[-3, 2]])
}
pub fn a3() -> GeneralizedCartanMatrix {
    gcm(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])
}
pub fn affine_a1() -> GeneralizedCartanMatrix {
    gcm(&[&[2, -2], &[-2, 2]])
}
pub fn affine_a2() -> GeneralizedCartanMatrix {
    gcm(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]])
}
/// Rank 3, every off-diagonal entry −2.
pub fn all_minus_two() -> GeneralizedCartanMatrix {
    gcm(&[&[2, -2, -2], &[-2, 2, -2], &[-2, -2, 2]])
}
pub fn mixed() -> GeneralizedCartanMatrix {
    gcm(&[&[2, -2, -1], &[-2, 2, -1], &[-1, -1, 2]])
}
/// 2-spherical hyperbolic: Coxeter entries 3, 3, 4.
pub fn two_spherical() -> GeneralizedCartanMatrix {
    gcm(&[&[2, -1, -1], &[-1, 2, -2], &[-1, -1, 2]])
}
pub fn non_symmetrizable() -> GeneralizedCartanMatrix {
    gcm(&[&[2, -1, -1], &[-2, 2, -1], &[-1, -2, 2]])
}
/// A chain of two infinite edges.
pub fn chain() -> GeneralizedCartanMatrix {
    gcm(&[&[2, -2, 0], &[-2, 2, -2], &[0, -2, 2]])
}

pub fn corpus() -> Vec<(&'static str, GeneralizedCartanMatrix)> {
    vec![
        ("A2", a2()),
        ("B2", b2()),
        ("G2", g2()),
        ("A3", a3()),
        ("affine A1", affine_a1()),
        ("affine A2", affine_a2()),
        ("all -2", all_minus_two()),
        ("mixed", mixed()),
        ("two-spherical", two_spherical()),
        ("non-symmetrizable", non_symmetrizable()),
        ("chain", chain()),
    ]
}

pub fn indefinite_corpus() -> Vec<(&'static str, GeneralizedCartanMatrix)> {
    vec![
        ("all -2", all_minus_two()),
        ("mixed", mixed()),
        ("two-spherical", two_spherical()),
        ("non-symmetrizable", non_symmetrizable()),
    ]
}

pub fn cox(rows: &[&[u32]]) -> CoxeterMatrix {
    CoxeterMatrix::new(
        rows.iter()
            .map(|r| r.iter().map(|&m| if m == 0 { Order::Infinite } else { Order::Finite(m) }).collect())
            .collect(),
    )
    .unwrap()
}

fn braid_neighbours(cox: &CoxeterMatrix, w: &[usize], out: &mut Vec<Vec<usize>>) {
    for start in 0..w.len() {
        for end in start + 2..=w.len() {
            let (s, t) = (w[start], w[start + 1]);
            if s == t {
                break;
            }
            let m = match cox.entry(s, t) {
                Order::Finite(m) => m as usize,
                Order::Infinite => break,
            };
            if end - start > m {
                break;
            }
            let alternating = (start..end).all(|k| w[k] == if (k - start) % 2 == 0 { s } else { t });
            if !alternating {
                break;
            }
            if end - start == m {
                let mut v = w.to_vec();
                for k in start..end {
                    v[k] = if (k - start) % 2 == 0 { t } else { s };
                }
                out.push(v);
            }
        }
    }
}

/// Braid class of a word, or `None` once some member contains `ss`.
fn braid_class(cox: &CoxeterMatrix, w: Vec<usize>) -> Option<BTreeSet<Vec<usize>>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w);
    let mut next = Vec::new();
    while let Some(v) = queue.pop_front() {
        if v.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        next.clear();
        braid_neighbours(cox, &v, &mut next);
        for u in next.drain(..) {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    Some(seen)
}

/// Sphere sizes from words alone: reduced words are those whose braid class
/// avoids `ss`, and two reduced words are equal iff braid-equivalent.
pub fn word_sphere_sizes(cox: &CoxeterMatrix, radius: usize) -> Vec<u64> {
    let n = cox.size();
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    let mut sizes = vec![1];
    for _ in 0..radius {
        let mut reps = BTreeSet::new();
        for w in &layer {
            for s in 0..n {
                let mut v = w.clone();
                v.push(s);
                if let Some(class) = braid_class(cox, v) {
                    reps.insert(class.into_iter().next().unwrap());
                }
            }
        }
        sizes.push(reps.len() as u64);
        layer = reps.into_iter().collect();
    }
    sizes
}

/// Quadrants realized by chambers of a finite set.
pub fn brute_quadrants(chambers: &[WeylElement], gamma: &Root, delta: &Root) -> HashSet<Quadrant> {
    chambers.iter().map(|w| quadrant_of(w, gamma, delta).unwrap()).collect()
}

pub mod integrability {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn big(n: u64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    /// `Q(n)` written out directly.
    pub fn q_at(l: u64, n: u64) -> BigRational {
        big(3 * n * n + (6 * l + 3) * n + 3 * l * l + 3 * l + 1)
    }

    fn term(l: u64, p: u32, q: u64, n: u64) -> BigRational {
        num_traits::pow(q_at(l, n), p as usize) / num_traits::pow(big(q), n as usize)
    }

    pub fn partial_sum(l: u64, p: u32, q: u64, last: u64) -> BigRational {
        (0..=last).fold(BigRational::zero(), |acc, n| acc + term(l, p, q, n))
    }

    /// `(q/(q-1)) Q(N)^p / q^N`, the bound as literally stated.
    pub fn literal_bound(l: u64, p: u32, q: u64, first_omitted: u64) -> BigRational {
        big(q) / big(q - 1) * term(l, p, q, first_omitted)
    }

    /// Geometric bound on the tail from `N` on: terms shrink at least by
    /// `ρ = (Q(N+1)/Q(N))^p / q`, since `Q(n+1)/Q(n)` decreases in `n`.
    pub fn ratio_bound(l: u64, p: u32, q: u64, first_omitted: u64) -> Option<BigRational> {
        let rho = num_traits::pow(q_at(l, first_omitted + 1) / q_at(l, first_omitted), p as usize) / big(q);
        if rho >= BigRational::one() {
            return None;
        }
        Some(term(l, p, q, first_omitted) / (BigRational::one() - rho))
    }

    /// Twelve `(L_-, L_+, p, q)` points.
    pub fn grid() -> Vec<(u64, u64, u32, u64)> {
        let mut g = Vec::new();
        for (lm, lp) in [(0, 0), (1, 0), (1, 2)] {
            for p in [1, 2] {
                for q in [2, 5] {
                    g.push((lm, lp, p, q));
                }
            }
        }
        g
    }
}
