mod common;

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use common::*;
use proptest::prelude::*;
use twinlat::gcm::{classify, GeneralizedCartanMatrix};
use twinlat::roots::*;
use twinlat::weyl::WeylGroup;
use twinlat::Budget;

fn budget() -> Budget {
    Budget::default()
}

/// Quadrants of `(γ, δ)` that are empty, by brute force over `chambers`.
fn brute_empty(chambers: &[twinlat::weyl::WeylElement], gamma: &Root, delta: &Root) -> Vec<Quadrant> {
    let seen = brute_quadrants(chambers, gamma, delta);
    Quadrant::all().into_iter().filter(|q| !seen.contains(q)).collect()
}

fn claimed_empty(rel: &HalfspaceRelation) -> Vec<Quadrant> {
    Quadrant::all().into_iter().filter(|&q| rel.quadrant_is_empty(q)).collect()
}

#[test]
fn quadrants_match_radius_six_brute_force() {
    for (name, a) in corpus() {
        let g = WeylGroup::new(a);
        let finite = classify(g.coxeter()).is_spherical();
        let chambers = if finite { g.ball(40).unwrap() } else { g.ball(6).unwrap() };
        let mut far: Option<Vec<twinlat::weyl::WeylElement>> = None;
        let roots = roots_up_to_depth(&g, 4).unwrap();
        for (i, gamma) in roots.iter().enumerate() {
            for delta in &roots[i..] {
                let rel = halfspace_relation(&g, gamma, delta, &budget()).unwrap();
                assert!(rel.verify(gamma, delta).unwrap(), "{name}");
                let empty = brute_empty(&chambers, gamma, delta);
                let claimed = claimed_empty(&rel);
                for q in &claimed {
                    assert!(empty.contains(q), "{name}: {gamma} {delta} claimed empty {q:?} is populated");
                }
                match rel {
                    HalfspaceRelation::Crossing { .. } if !finite && empty.len() > claimed.len() => {
                        // The walls meet away from the identity.
                        let far = far.get_or_insert_with(|| g.ball(12).unwrap());
                        assert!(brute_empty(far, gamma, delta).is_empty(), "{name}: {gamma} {delta}");
                    }
                    HalfspaceRelation::Nested { .. } => assert!(!finite, "{name}"),
                    _ => {}
                }
                if finite || matches!(rel, HalfspaceRelation::Nested { .. }) {
                    assert_eq!(empty, claimed, "{name}: {gamma} {delta} {rel:?}");
                }
            }
        }
    }
}

#[test]
fn reflection_negates_its_root() {
    for (name, a) in corpus() {
        let g = WeylGroup::new(a);
        for gamma in roots_up_to_depth(&g, 4).unwrap() {
            let r = reflection_of(&g, &gamma).unwrap();
            let neg: Vec<i64> = gamma.vec().iter().map(|x| -x).collect();
            let neg_co: Vec<i64> = gamma.covec().iter().map(|x| -x).collect();
            assert_eq!(r.root_action().apply(gamma.vec()).unwrap(), neg, "{name}");
            assert_eq!(r.coroot_action().apply(gamma.covec()).unwrap(), neg_co, "{name}");
            assert!(g.multiply(&r, &r).unwrap().is_identity());
            assert_eq!(reflection_of(&g, &gamma.negate()).unwrap(), r);
        }
    }
}

/// `ε ∈ [γ, δ]` by brute force over a ball.
fn in_interval_brute(chambers: &[twinlat::weyl::WeylElement], gamma: &Root, delta: &Root, eps: &Root) -> bool {
    chambers.iter().all(|w| {
        let q = quadrant_of(w, gamma, delta).unwrap();
        let e = chamber_in_halfspace(w, eps).unwrap();
        (q != Quadrant::PLUS_PLUS || e) && (q != Quadrant::MINUS_MINUS || !e)
    })
}

#[test]
fn interval_matches_exhaustive_candidates() {
    let systems: Vec<(&str, GeneralizedCartanMatrix)> = vec![
        ("A2", a2()),
        ("B2", b2()),
        ("G2", g2()),
        ("A3", a3()),
        ("affine A1", affine_a1()),
        ("affine A2", affine_a2()),
        ("all -2", all_minus_two()),
        ("mixed", mixed()),
    ];
    for (name, a) in systems {
        let g = WeylGroup::new(a);
        let chambers = g.ball(9).unwrap();
        let candidates = roots_up_to_depth(&g, 5).unwrap();
        let pairs = roots_up_to_depth(&g, 2).unwrap();
        for (i, gamma) in pairs.iter().enumerate() {
            for delta in &pairs[i..] {
                if !is_prenilpotent(&g, gamma, delta, &budget()).unwrap() {
                    assert!(matches!(interval(&g, gamma, delta, &budget()), Err(twinlat::Error::NotPrenilpotent)));
                    continue;
                }
                let got: BTreeSet<Root> = interval(&g, gamma, delta, &budget()).unwrap().into_iter().collect();
                assert!(got.contains(gamma) && got.contains(delta), "{name}");
                let brute: BTreeSet<Root> =
                    candidates.iter().filter(|e| in_interval_brute(&chambers, gamma, delta, e)).cloned().collect();
                let cand: HashSet<&Root> = candidates.iter().collect();
                let got_in_range: BTreeSet<Root> = got.iter().filter(|r| cand.contains(r)).cloned().collect();
                assert_eq!(got_in_range, brute, "{name}: [{gamma}, {delta}]");
                for e in &got {
                    assert!(in_interval_brute(&chambers, gamma, delta, e), "{name}");
                }
                if let Ok(d) = dihedral_roots(&g, gamma, delta, 4) {
                    // Dihedral candidates that pass the test are members; the
                    // converse fails in general.
                    assert!(d
                        .iter()
                        .filter(|e| in_interval_brute(&chambers, gamma, delta, e))
                        .all(|e| got.contains(e)));
                }
            }
        }
    }
}

struct Fixture {
    groups: Vec<WeylGroup>,
    roots: Vec<Vec<Root>>,
    balls: Vec<Vec<twinlat::weyl::WeylElement>>,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let groups: Vec<WeylGroup> = corpus().into_iter().map(|(_, a)| WeylGroup::new(a)).collect();
        let roots = groups.iter().map(|g| roots_up_to_depth(g, 3).unwrap()).collect();
        let balls = groups.iter().map(|g| g.ball(3).unwrap()).collect();
        Fixture { groups, roots, balls }
    })
}

fn pick(v: usize, len: usize) -> usize {
    v % len
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn relation_is_w_equivariant(sys in 0usize..11, i in 0usize..1000, j in 0usize..1000, k in 0usize..1000) {
        let f = fixture();
        let g = &f.groups[sys];
        let roots = &f.roots[sys];
        let (gamma, delta) = (&roots[pick(i, roots.len())], &roots[pick(j, roots.len())]);
        let w = &f.balls[sys][pick(k, f.balls[sys].len())];
        let rel = halfspace_relation(g, gamma, delta, &budget()).unwrap();
        let moved = halfspace_relation(g, &act(g, w, gamma).unwrap(), &act(g, w, delta).unwrap(), &budget()).unwrap();
        prop_assert_eq!(std::mem::discriminant(&rel), std::mem::discriminant(&moved));
        prop_assert_eq!(rel.empty_quadrant(), moved.empty_quadrant());
    }

    #[test]
    fn negation_swaps_empty_quadrant(sys in 0usize..11, i in 0usize..1000, j in 0usize..1000) {
        let f = fixture();
        let g = &f.groups[sys];
        let roots = &f.roots[sys];
        let (gamma, delta) = (&roots[pick(i, roots.len())], &roots[pick(j, roots.len())]);
        let rel = halfspace_relation(g, gamma, delta, &budget()).unwrap();
        let neg = halfspace_relation(g, &gamma.negate(), &delta.negate(), &budget()).unwrap();
        prop_assert_eq!(rel.empty_quadrant().map(Quadrant::opposite), neg.empty_quadrant());
        let swapped = halfspace_relation(g, delta, gamma, &budget()).unwrap();
        prop_assert_eq!(rel.empty_quadrant().map(Quadrant::swapped), swapped.empty_quadrant());
    }

    #[test]
    fn interval_is_w_equivariant(sys in 0usize..11, i in 0usize..1000, j in 0usize..1000, k in 0usize..1000) {
        let f = fixture();
        let g = &f.groups[sys];
        let roots = &f.roots[sys];
        let (gamma, delta) = (&roots[pick(i, roots.len())], &roots[pick(j, roots.len())]);
        prop_assume!(is_prenilpotent(g, gamma, delta, &budget()).unwrap());
        let w = &f.balls[sys][pick(k, f.balls[sys].len())];
        let moved: BTreeSet<Root> = interval(g, gamma, delta, &budget()).unwrap().iter().map(|e| act(g, w, e).unwrap()).collect();
        let direct: BTreeSet<Root> = interval(g, &act(g, w, gamma).unwrap(), &act(g, w, delta).unwrap(), &budget()).unwrap().into_iter().collect();
        prop_assert_eq!(moved, direct);
    }

    #[test]
    fn chamber_membership_is_equivariant(sys in 0usize..11, i in 0usize..1000, k in 0usize..1000, m in 0usize..1000) {
        let f = fixture();
        let g = &f.groups[sys];
        let gamma = &f.roots[sys][pick(i, f.roots[sys].len())];
        let w = &f.balls[sys][pick(k, f.balls[sys].len())];
        let x = &f.balls[sys][pick(m, f.balls[sys].len())];
        let wx = g.multiply(w, x).unwrap();
        prop_assert_eq!(chamber_in_halfspace(x, gamma).unwrap(), chamber_in_halfspace(&wx, &act(g, w, gamma).unwrap()).unwrap());
    }
}

#[test]
fn distance_matches_brute_force() {
    for (name, a) in corpus() {
        let g = WeylGroup::new(a);
        let ball = g.ball(6).unwrap();
        for gamma in roots_up_to_depth(&g, 2).unwrap() {
            for w in g.ball(2).unwrap() {
                let d = chamber_to_halfspace_distance(&g, &w, &gamma).unwrap();
                let winv = g.inverse(&w).unwrap();
                let brute = ball
                    .iter()
                    .filter(|x| chamber_in_halfspace(x, &gamma).unwrap())
                    .map(|x| g.multiply(&winv, x).unwrap().length())
                    .min()
                    .unwrap();
                assert_eq!(d, brute, "{name}: d({w}, {gamma})");
            }
        }
    }
}

#[test]
fn nibbling_removals_stay_nilpotent() {
    for a in [a3(), affine_a2(), mixed()] {
        let g = WeylGroup::new(a);
        let pos: Vec<Root> = roots_up_to_depth(&g, 2).unwrap().into_iter().filter(|r| r.is_positive()).collect();
        for gamma in &pos {
            for delta in &pos {
                if !is_prenilpotent(&g, gamma, delta, &budget()).unwrap() {
                    continue;
                }
                let psi = interval(&g, gamma, delta, &budget()).unwrap();
                assert!(is_nilpotent_set(&g, &psi, &budget()).unwrap());
                let seq = nibbling_sequence(&g, &psi, &budget()).unwrap();
                assert_eq!(seq.len(), psi.len());
                for k in 0..seq.len() {
                    assert!(is_nilpotent_set(&g, &seq[k..], &budget()).unwrap());
                }
            }
        }
    }
}
