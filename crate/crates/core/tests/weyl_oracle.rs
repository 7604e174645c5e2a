mod common;

use common::*;
use twinlat::gcm::coxeter_of;
use twinlat::roots::pairing;
use twinlat::weyl::WeylGroup;

#[test]
fn ball_matches_braid_rewriting() {
    for (name, a) in corpus() {
        let radius = if a.size() == 2 { 8 } else { 6 };
        let g = WeylGroup::new(a.clone());
        let from_matrices = g.sphere_sizes(radius).unwrap();
        let from_words = word_sphere_sizes(&coxeter_of(&a), radius);
        assert_eq!(from_matrices, from_words, "{name}");
    }
}

#[test]
fn exchange_property_radius_five() {
    for (name, a) in corpus() {
        let g = WeylGroup::new(a);
        for w in g.ball(5).unwrap() {
            for s in 0..g.rank() {
                let sw = g.multiply(&g.generator(s), &w).unwrap();
                let up = sw.length() == w.length() + 1;
                let down = sw.length() + 1 == w.length();
                assert!(up ^ down, "{name}: {w} s{s}");
                assert_eq!(down, w.has_left_descent(s), "{name}");
            }
        }
    }
}

#[test]
fn normal_form_is_idempotent_and_inverse_preserves_length() {
    for (name, a) in corpus() {
        let g = WeylGroup::new(a);
        for w in g.ball(4).unwrap() {
            let again = g.element(w.word()).unwrap();
            assert_eq!(again.word(), w.word(), "{name}");
            let inv = g.inverse(&w).unwrap();
            assert_eq!(inv.length(), w.length(), "{name}");
            assert!(g.multiply(&w, &inv).unwrap().is_identity(), "{name}");
        }
    }
}

#[test]
fn words_are_shortlex_least() {
    // Every element of the ball appears once, and its word is not beaten by
    // any other word of the same length naming the same element.
    let g = WeylGroup::new(affine_a2());
    let ball = g.ball(4).unwrap();
    for w in &ball {
        let n = w.length();
        let mut word = vec![0usize; n];
        loop {
            if word.as_slice() < w.word() {
                let e = g.element(&word).unwrap();
                assert_ne!(e, *w, "{:?} beats {:?}", word, w.word());
            } else {
                break;
            }
            let mut k = n;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                word[k] += 1;
                if word[k] < g.rank() {
                    break;
                }
                word[k] = 0;
            }
            if k == 0 && word.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
}

#[test]
fn actions_preserve_pairing() {
    for (name, a) in corpus() {
        let n = a.size();
        let g = WeylGroup::new(a);
        for w in g.ball(3).unwrap() {
            for i in 0..n {
                for j in 0..n {
                    let mut lam = vec![0; n];
                    lam[i] = 1;
                    let mut mu = vec![0; n];
                    mu[j] = 1;
                    let wl = w.root_action().apply(&lam).unwrap();
                    let wm = w.coroot_action().apply(&mu).unwrap();
                    assert_eq!(pairing(&g, &wl, &wm), pairing(&g, &lam, &mu), "{name}");
                }
            }
        }
    }
}

#[test]
fn dihedral_lengths_are_linear() {
    let g = WeylGroup::new(affine_a1());
    let st = g.element(&[0, 1]).unwrap();
    for k in 0..=6 {
        assert_eq!(g.power(&st, k).unwrap().length(), 2 * k as usize);
    }
}
