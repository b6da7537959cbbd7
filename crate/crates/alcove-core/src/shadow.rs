//! Shadows: end simplices of positively folded galleries of a fixed type.
//!
//! `shadow` runs the wall-by-wall recursion; `shadow_oracle` enumerates
//! galleries directly and is only meant for small lengths.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::chimney::Chimney;
use crate::error::{Error, Result};
use crate::gallery::{minimal_gallery, Gallery, GalleryType, Move};
use crate::root_system::RootSystem;
use crate::weyl::{AffineWeylElement, EndSimplex, FaceType, Hyperplane, Sign};

pub const DEFAULT_CAP: usize = 14;

pub type Shadow = BTreeSet<EndSimplex>;

/// W_sigma . x tau, the shadow with respect to the fundamental alcove.
pub fn shadow_base(rs: &RootSystem, x: &AffineWeylElement, sigma: FaceType, tau: FaceType) -> Result<Shadow> {
    minimal_gallery(rs, x, sigma, tau)?;
    Ok(rs
        .parabolic_subgroup(sigma.mask())
        .into_iter()
        .map(|w| rs.end_simplex(&AffineWeylElement::from_parts(rs.identity().translation().clone(), w).compose(x), tau))
        .collect())
}

/// S united with the reflection across H of everything in S strictly on the far side.
pub fn shadow_step(rs: &RootSystem, set: &Shadow, h: &Hyperplane, far: Sign) -> Shadow {
    let mut out = set.clone();
    out.extend(reflected(rs, set, h, far));
    out
}

fn reflected<'a>(rs: &'a RootSystem, set: &'a Shadow, h: &'a Hyperplane, far: Sign) -> impl Iterator<Item = EndSimplex> + 'a {
    set.iter()
        .filter(move |s| rs.simplex_side(s, h) == Some(far))
        .map(move |s| rs.reflect_simplex(h, s))
}

/// max over w in W_sigma of l(wx).
pub fn gallery_radius(rs: &RootSystem, x: &AffineWeylElement, sigma: FaceType) -> usize {
    rs.parabolic_subgroup(sigma.mask())
        .into_iter()
        .map(|w| rs.length(&AffineWeylElement::from_parts(rs.identity().translation().clone(), w).compose(x)))
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub wall: Hyperplane,
    pub added: Vec<EndSimplex>,
}

/// The recursion with every step recorded.
pub fn shadow_trace(
    rs: &RootSystem,
    x: &AffineWeylElement,
    sigma: FaceType,
    tau: FaceType,
    chimney: &Chimney,
) -> Result<(Shadow, Vec<TraceStep>)> {
    shadow_trace_deeper(rs, x, sigma, tau, chimney, 0)
}

/// As `shadow_trace`, with the deep alcove pushed `extra` periods further.
pub fn shadow_trace_deeper(
    rs: &RootSystem,
    x: &AffineWeylElement,
    sigma: FaceType,
    tau: FaceType,
    chimney: &Chimney,
    extra: usize,
) -> Result<(Shadow, Vec<TraceStep>)> {
    let mut set = shadow_base(rs, x, sigma, tau)?;
    let radius = gallery_radius(rs, x, sigma);
    let deep = chimney.deep_alcove_deeper(rs, radius, extra);
    let mut y = rs.identity();
    let mut trace = Vec::with_capacity(deep.word.len());
    for (&s, h) in deep.word.iter().zip(&deep.crossed) {
        y = rs.mul_gen(&y, s);
        // galleries of length `radius` never reach beyond level radius + 1
        if h.level.unsigned_abs() as usize > radius + 1 {
            trace.push(TraceStep { wall: *h, added: Vec::new() });
            continue;
        }
        let far = rs.alcove_side(&y, h);
        let added: Vec<EndSimplex> = reflected(rs, &set, h, far).filter(|t| !set.contains(t)).collect();
        set.extend(added.iter().cloned());
        trace.push(TraceStep { wall: *h, added });
    }
    Ok((set, trace))
}

pub fn shadow(rs: &RootSystem, x: &AffineWeylElement, sigma: FaceType, tau: FaceType, chimney: &Chimney) -> Result<Shadow> {
    Ok(shadow_trace(rs, x, sigma, tau, chimney)?.0)
}

/// Vertex shadow of lambda: sigma = tau = the origin, x = x_{lambda+}.
pub fn vertex_shadow(rs: &RootSystem, lambda: &[i64], chimney: &Chimney) -> Result<Shadow> {
    let x = rs.x_lambda(&rs.dominant(lambda))?;
    let v = FaceType::vertex(rs.rank());
    shadow(rs, &x, v, v, chimney)
}

/// Visit every positively folded gallery of the given type, starting in any
/// alcove containing the start face. The callback sees the last alcove and
/// the moves.
pub fn for_each_pf_gallery<F>(rs: &RootSystem, gtype: &GalleryType, chimney: &Chimney, mut f: F)
where
    F: FnMut(&AffineWeylElement, &[Move]),
{
    let mut moves = Vec::with_capacity(gtype.word.len());
    for w in rs.parabolic_subgroup(gtype.start.mask()) {
        let first = AffineWeylElement::from_parts(rs.identity().translation().clone(), w);
        walk(rs, &gtype.word, chimney, &first, &mut moves, &mut |c: &AffineWeylElement, m: &[Move]| f(c, m));
    }
}

fn walk(
    rs: &RootSystem,
    word: &[usize],
    chimney: &Chimney,
    c: &AffineWeylElement,
    moves: &mut Vec<Move>,
    f: &mut dyn FnMut(&AffineWeylElement, &[Move]),
) {
    let i = moves.len();
    if i == word.len() {
        f(c, moves);
        return;
    }
    let s = word[i];
    moves.push(Move::Cross);
    walk(rs, word, chimney, &rs.mul_gen(c, s), moves, f);
    moves.pop();
    let h = rs.act_on_hyperplane(c, &rs.gen_wall(s));
    if chimney.orientation_at(rs, c, &h) == Sign::Plus {
        moves.push(Move::Fold);
        walk(rs, word, chimney, c, moves, f);
        moves.pop();
    }
}

/// All positively folded galleries of the given type.
pub fn enumerate_pf_galleries(rs: &RootSystem, gtype: &GalleryType, chimney: &Chimney) -> Vec<Gallery> {
    let mut out = Vec::new();
    for w in rs.parabolic_subgroup(gtype.start.mask()) {
        let first = AffineWeylElement::from_parts(rs.identity().translation().clone(), w);
        let mut moves = Vec::new();
        walk(rs, &gtype.word, chimney, &first, &mut moves, &mut |_, m| {
            out.push(Gallery::new(rs, gtype.clone(), first.clone(), m.to_vec()).expect("valid gallery"));
        });
    }
    out
}

/// Shadow with multiplicities by direct enumeration of galleries.
pub fn shadow_oracle(
    rs: &RootSystem,
    x: &AffineWeylElement,
    sigma: FaceType,
    tau: FaceType,
    chimney: &Chimney,
    cap: usize,
) -> Result<BTreeMap<EndSimplex, usize>> {
    let g = minimal_gallery(rs, x, sigma, tau)?;
    if g.len() > cap {
        return Err(Error::CapExceeded { cap, needed: g.len() });
    }
    let mut ends: HashMap<AffineWeylElement, usize> = HashMap::new();
    for_each_pf_gallery(rs, g.gallery_type(), chimney, |c, _| *ends.entry(c.clone()).or_insert(0) += 1);
    let mut out = BTreeMap::new();
    for (c, k) in ends {
        *out.entry(rs.end_simplex(&c, tau)).or_insert(0) += k;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_for_alcove_start_is_single() {
        let rs = RootSystem::from_name("A2").unwrap();
        let x = rs.from_word(&[0, 1]).unwrap();
        let b = shadow_base(&rs, &x, FaceType::alcove(), FaceType::alcove()).unwrap();
        assert_eq!(b.len(), 1);
    }

    #[test]
    fn base_for_vertices_is_orbit() {
        let rs = RootSystem::from_name("A2").unwrap();
        let x = rs.x_lambda(&[2, 2]).unwrap();
        let v = FaceType::vertex(2);
        let b = shadow_base(&rs, &x, v, v).unwrap();
        let pts: BTreeSet<_> = b.iter().map(|s| s.rep.translation().clone()).collect();
        let orbit: BTreeSet<_> = rs.orbit(&[2, 2]).unwrap().into_iter().collect();
        assert_eq!(pts, orbit);
    }

    #[test]
    fn cap_is_enforced() {
        let rs = RootSystem::from_name("A2").unwrap();
        let x = rs.x_lambda(&[4, 4]).unwrap();
        let v = FaceType::vertex(2);
        let c = Chimney::alcove(&rs, rs.identity());
        assert!(matches!(shadow_oracle(&rs, &x, v, v, &c, 6), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn fold_free_count_is_group_order() {
        let rs = RootSystem::from_name("A2").unwrap();
        let x = rs.x_lambda(&[2, 2]).unwrap();
        let v = FaceType::vertex(2);
        let g = minimal_gallery(&rs, &x, v, v).unwrap();
        let c = Chimney::alcove(&rs, rs.identity());
        let galleries = enumerate_pf_galleries(&rs, g.gallery_type(), &c);
        assert_eq!(galleries.iter().filter(|g| g.num_folds() == 0).count(), 6);
    }
}
