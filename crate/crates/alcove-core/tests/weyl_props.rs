mod common;

use std::collections::{BTreeSet, HashMap};

use alcove_core::{AffineWeylElement, FaceType, Hyperplane, RootSystem, Sign};
use proptest::prelude::*;

fn separating_count(rs: &RootSystem, x: &AffineWeylElement) -> usize {
    let id = rs.identity();
    let mut count = 0;
    for g in 0..rs.num_positive_roots() {
        for k in -30..=30 {
            let h = Hyperplane { root: g, level: k };
            if rs.alcove_side(&id, &h) != rs.alcove_side(x, &h) {
                count += 1;
            }
        }
    }
    count
}

// distance from the identity by breadth-first search
fn ball(rs: &RootSystem, radius: usize) -> HashMap<AffineWeylElement, usize> {
    let mut dist = HashMap::from([(rs.identity(), 0)]);
    let mut frontier = vec![rs.identity()];
    for d in 1..=radius {
        let mut next = Vec::new();
        for x in &frontier {
            for s in 0..=rs.rank() {
                let y = rs.mul_gen(x, s);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    dist
}

#[test]
fn three_lengths_agree_in_rank_two() {
    for name in common::RANK_TWO {
        let rs = common::system(name);
        let dist = ball(&rs, 6);
        let listed = rs.elements_up_to_length(6);
        assert_eq!(listed.len(), dist.len(), "{name}");
        for x in listed {
            let d = dist[&x];
            assert_eq!(rs.length(&x), d, "{name}");
            assert_eq!(rs.reduced_word(&x).len(), d, "{name}");
            assert_eq!(separating_count(&rs, &x), d, "{name}");
        }
    }
}

#[test]
fn every_reduced_word_spells_the_element() {
    for name in common::RANK_TWO {
        let rs = common::system(name);
        for x in rs.elements_up_to_length(6) {
            let words = rs.all_reduced_words(&x);
            assert!(words.contains(&rs.reduced_word(&x)));
            for w in &words {
                assert_eq!(w.len(), rs.length(&x));
                assert_eq!(rs.from_word(w).unwrap(), x);
            }
        }
    }
}

#[test]
fn x_lambda_is_the_short_end_of_its_coset() {
    for name in common::RANK_TWO {
        let rs = common::system(name);
        for lambda in common::dominant_up_to(&rs, 4) {
            let x = rs.x_lambda(&lambda).unwrap();
            // the origin is a vertex of the fundamental alcove
            assert_eq!(x.apply(&[0, 0]).to_vec(), lambda);
            let coset = rs.star_alcoves(&lambda).unwrap();
            assert!(coset.contains(&x));
            let min = coset.iter().map(|c| rs.length(c)).min().unwrap();
            assert_eq!(rs.length(&x), min, "{name} {lambda:?}");
            assert_eq!(coset.iter().filter(|c| rs.length(c) == min).count(), 1);
        }
    }
}

// nu lies in conv(W_0 lambda) iff every W_0-conjugate of every fundamental
// weight is bounded on nu by its maximum over the orbit
fn in_hull(rs: &RootSystem, lambda: &[i64], nu: &[i64]) -> bool {
    let top = rs.dominant(lambda);
    rs.finite_weyl_group().iter().all(|w| {
        let v = w.apply_coroot(nu);
        (0..rs.rank()).all(|i| v[i] <= top[i])
    })
}

#[test]
fn polytope_points_match_the_hull_inequalities() {
    for name in ["A2", "C2", "G2", "A3", "B3"] {
        let rs = common::system(name);
        for lambda in common::dominant_up_to(&rs, 3) {
            let pts: BTreeSet<Vec<i64>> = rs.polytope_points(&lambda).unwrap().iter().map(|p| p.to_vec()).collect();
            for p in &pts {
                assert!(in_hull(&rs, &lambda, p));
            }
            // a box well beyond the orbit finds nothing extra
            let b = 2 * lambda.iter().map(|x| x.abs()).max().unwrap_or(0) + 2;
            let mut v = vec![-b; rs.rank()];
            'grid: loop {
                if in_hull(&rs, &lambda, &v) {
                    assert!(pts.contains(&v), "{name} {lambda:?} missing {v:?}");
                }
                for c in v.iter_mut() {
                    if *c < b {
                        *c += 1;
                        continue 'grid;
                    }
                    *c = -b;
                }
                break;
            }
            for w in rs.finite_weyl_group() {
                for p in &pts {
                    assert!(pts.contains(&w.apply_coroot(p).to_vec()));
                }
            }
            for o in rs.orbit(&lambda).unwrap() {
                assert!(pts.contains(&o.to_vec()));
            }
        }
    }
}

#[test]
fn a2_polytope_of_two_two_has_nineteen_points() {
    let rs = common::system("A2");
    assert_eq!(rs.polytope_points(&[2, 2]).unwrap().len(), 19);
}

fn element() -> impl Strategy<Value = (&'static str, Vec<usize>)> {
    prop::sample::select(&["A2", "C2", "G2", "A3", "C3"][..])
        .prop_flat_map(|name| {
            let n = common::system(name).rank();
            (Just(name), prop::collection::vec(0..=n, 0..12))
        })
}

proptest! {
    #[test]
    fn action_is_compatible_with_sides(
        (name, a) in element(),
        b in prop::collection::vec(0usize..=3, 0..12),
        g in 0usize..20,
        k in -6i64..=6,
    ) {
        let rs = common::system(name);
        let n = rs.rank();
        let b: Vec<usize> = b.into_iter().map(|s| s % (n + 1)).collect();
        let x = rs.from_word(&a).unwrap();
        let z = rs.from_word(&b).unwrap();
        // hyperplanes carry no orientation, so compare half-apartments
        let h = rs.half_apartment(g % rs.num_positive_roots(), k, Sign::Plus);
        let moved = rs.act_on_halfapartment(&x.inverse(), &h);
        prop_assert_eq!(moved.hyperplane, rs.act_on_hyperplane(&x.inverse(), &h.hyperplane));
        prop_assert_eq!(rs.contains_alcove(&h, &x.compose(&z)), rs.contains_alcove(&moved, &z));
    }

    #[test]
    fn word_length_bounds_length((name, w) in element()) {
        let rs = common::system(name);
        let x = rs.from_word(&w).unwrap();
        prop_assert!(rs.length(&x) <= w.len());
        // a word is reduced iff no prefix ends in a descent
        let mut y = rs.identity();
        let mut reduced = true;
        for &s in &w {
            if rs.is_right_descent(&y, s) {
                reduced = false;
            }
            y = rs.mul_gen(&y, s);
        }
        prop_assert_eq!(rs.length(&x) == w.len(), reduced);
        prop_assert_eq!(rs.from_word(&rs.reduced_word(&x)).unwrap(), x);
    }

    #[test]
    fn min_coset_rep_is_the_unique_minimum(
        (name, w) in element(),
        left in 0u32..8,
        right in 0u32..8,
    ) {
        let rs = common::system(name);
        let faces = common::all_faces(&rs);
        let (l, r) = (faces[left as usize % faces.len()], faces[right as usize % faces.len()]);
        let x = rs.from_word(&w).unwrap();
        let id = rs.identity();
        let mut coset = BTreeSet::new();
        for u in rs.parabolic_subgroup(l.mask()) {
            let u = AffineWeylElement::from_parts(id.translation().clone(), u);
            for v in rs.parabolic_subgroup(r.mask()) {
                let v = AffineWeylElement::from_parts(id.translation().clone(), v);
                coset.insert(u.compose(&x).compose(&v));
            }
        }
        let m = rs.min_coset_rep(&x, l, r);
        prop_assert!(coset.contains(&m));
        let min = coset.iter().map(|c| rs.length(c)).min().unwrap();
        prop_assert_eq!(rs.length(&m), min);
        prop_assert_eq!(coset.iter().filter(|c| rs.length(c) == min).count(), 1);
        prop_assert!(rs.is_reduced(&m, l, r));
        prop_assert_eq!(rs.end_simplex(&x, r), rs.end_simplex(&rs.min_coset_rep(&x, FaceType::alcove(), r), r));
    }
}
