#![allow(dead_code)]

use alcove_core::{AffineWeylElement, Chimney, FaceType, RootSystem};

pub const RANK_TWO: [&str; 3] = ["A2", "C2", "G2"];

pub fn system(name: &str) -> RootSystem {
    RootSystem::from_name(name).unwrap()
}

/// Every subset of the simple letters, as face types.
pub fn all_faces(rs: &RootSystem) -> Vec<FaceType> {
    let n = rs.rank();
    (0..1u32 << n)
        .map(|m| {
            let letters: Vec<usize> = (1..=n).filter(|l| m & (1 << (l - 1)) != 0).collect();
            FaceType::from_letters(&letters, n).unwrap()
        })
        .collect()
}

pub fn vertex_and_alcove(rs: &RootSystem) -> [FaceType; 2] {
    [FaceType::vertex(rs.rank()), FaceType::alcove()]
}

/// (J, y) for every J and every y with l(y) <= max_y.
pub fn chimneys(rs: &RootSystem, max_y: usize) -> Vec<Chimney> {
    let ys = rs.elements_up_to_length(max_y);
    let mut out = Vec::new();
    for j in all_faces(rs) {
        for y in &ys {
            out.push(Chimney::new(rs, j, y.clone()));
        }
    }
    out
}

pub fn finite_part(rs: &RootSystem, x: &AffineWeylElement) -> AffineWeylElement {
    AffineWeylElement::from_parts(rs.identity().translation().clone(), x.finite().clone())
}

/// Dominant coweights lambda with <theta, lambda> <= bound.
pub fn dominant_up_to(rs: &RootSystem, bound: i64) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let theta = rs.highest_root().clone();
    let mut out = Vec::new();
    let mut v = vec![-4 * bound; n];
    loop {
        if rs.is_dominant(&v) && rs.pairing(&theta, &v).unwrap() <= bound {
            out.push(v.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if v[i] < 4 * bound {
                v[i] += 1;
                break;
            }
            v[i] = -4 * bound;
            i += 1;
        }
    }
}
