mod common;

use alcove_core::shadow::enumerate_pf_galleries;
use alcove_core::{Chimney, Error, FaceType, Gallery, GalleryType, Interval, Move, RootSystem};

fn alcove_type(rs: &RootSystem, word: Vec<usize>) -> GalleryType {
    let _ = rs;
    GalleryType { start: FaceType::alcove(), word, end: FaceType::alcove() }
}

fn same_shape(rs: &RootSystem, a: &Gallery, b: &Gallery) -> bool {
    let t = a.gallery_type();
    t == b.gallery_type() && rs.end_simplex(a.first_alcove(), t.start) == rs.end_simplex(b.first_alcove(), t.start)
}

// all y with l(y) <= 4 together with their ascents s
fn ascents(rs: &RootSystem) -> Vec<(alcove_core::AffineWeylElement, usize)> {
    let mut out = Vec::new();
    for y in rs.elements_up_to_length(4) {
        for s in 0..=rs.rank() {
            if !rs.is_right_descent(&y, s) {
                out.push((y.clone(), s));
            }
        }
    }
    out
}

#[test]
fn folding_outcrops_moves_the_chimney_one_step() {
    for name in ["A2", "C2"] {
        let rs = common::system(name);
        let types: Vec<GalleryType> =
            rs.elements_up_to_length(6).iter().map(|x| alcove_type(&rs, rs.reduced_word(x))).collect();
        let mut checked = 0;
        for (y, s) in ascents(&rs) {
            let h = rs.wall(&y, s).unwrap();
            let before = Chimney::alcove(&rs, y.clone());
            let after = Chimney::alcove(&rs, rs.mul_gen(&y, s));
            for t in &types {
                for g in enumerate_pf_galleries(&rs, t, &before) {
                    let e = g.apply_e(&rs, &h, &g.maximal_outcrop(&rs, &h)).unwrap();
                    assert!(e.is_positively_folded(&rs, &after), "{name} maximal outcrop");
                    assert!(same_shape(&rs, &g, &e));
                    if let Some(near) = g.near_maximal_outcrop(&rs, &h) {
                        let e = g.apply_e(&rs, &h, &near).unwrap();
                        assert!(e.is_positively_folded(&rs, &after), "{name} near-maximal outcrop");
                        assert!(same_shape(&rs, &g, &e));
                    }
                    checked += 1;
                }
                for g in enumerate_pf_galleries(&rs, t, &after) {
                    let f = g.apply_f(&rs, &h, &g.maximal_ingrowth(&rs, &h)).unwrap();
                    assert!(f.is_positively_folded(&rs, &before), "{name} maximal ingrowth");
                    assert!(same_shape(&rs, &g, &f));
                }
            }
        }
        assert!(checked > 1000);
    }
}

#[test]
fn e_and_f_undo_each_other() {
    for name in ["A2", "C2", "G2"] {
        let rs = common::system(name);
        let chimney = Chimney::new(&rs, FaceType::from_letters(&[1], 2).unwrap(), rs.identity());
        for x in rs.elements_up_to_length(5) {
            let t = alcove_type(&rs, rs.reduced_word(&x));
            for g in enumerate_pf_galleries(&rs, &t, &chimney) {
                for h in g.panel_walls(&rs) {
                    let out = g.maximal_outcrop(&rs, &h);
                    let e = g.apply_e(&rs, &h, &out).unwrap();
                    assert_eq!(e.apply_f(&rs, &h, &out).unwrap(), g);
                    let inw = g.maximal_ingrowth(&rs, &h);
                    let f = g.apply_f(&rs, &h, &inw).unwrap();
                    assert_eq!(f.apply_e(&rs, &h, &inw).unwrap(), g);
                }
            }
        }
    }
}

#[test]
fn wrong_intervals_are_rejected() {
    let rs = common::system("A2");
    let g = alcove_core::minimal_gallery(&rs, &rs.from_word(&[1, 2]).unwrap(), FaceType::alcove(), FaceType::alcove())
        .unwrap();
    let h = g.panel_walls(&rs)[0];
    // c_0 is the fundamental alcove, never off the identity side
    assert_eq!(g.apply_e(&rs, &h, &[Interval::closed(0, 1)]), Err(Error::NotOutcrop));
    assert_eq!(g.apply_f(&rs, &h, &[Interval::closed(0, 1)]), Err(Error::NotIngrowth));
}

#[test]
fn end_alcove_coordinates_are_bounded_by_length() {
    for name in common::RANK_TWO {
        let rs = common::system(name);
        for x in rs.elements_up_to_length(6) {
            let word = rs.reduced_word(&x);
            let l = word.len();
            for mask in 0u32..1 << l {
                let moves: Vec<Move> =
                    (0..l).map(|i| if mask & (1 << i) != 0 { Move::Fold } else { Move::Cross }).collect();
                let g = Gallery::new(&rs, alcove_type(&rs, word.clone()), rs.identity(), moves).unwrap();
                for k in rs.alcove_coordinates(&g.last_alcove(&rs)) {
                    assert!(k.unsigned_abs() as usize <= l, "{name}");
                }
            }
        }
    }
}

#[test]
fn non_reduced_input_suggests_a_representative() {
    let rs = common::system("A2");
    let v = FaceType::vertex(2);
    let x = rs.from_word(&[0, 1]).unwrap();
    match alcove_core::minimal_gallery(&rs, &x, v, v) {
        Err(Error::NotReduced { suggested }) => assert_eq!(suggested, vec![0]),
        other => panic!("{other:?}"),
    }
}

#[test]
fn move_count_must_match_word() {
    let rs = common::system("A2");
    let t = alcove_type(&rs, vec![1, 2]);
    assert_eq!(
        Gallery::new(&rs, t, rs.identity(), vec![Move::Cross]),
        Err(Error::MoveCountMismatch { expected: 2, got: 1 })
    );
}
