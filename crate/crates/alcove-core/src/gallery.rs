//! Combinatorial galleries, positive folding, outcrops and ingrowths.

use crate::chimney::Chimney;
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::weyl::{AffineWeylElement, EndSimplex, FaceType, Hyperplane, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    Cross,
    Fold,
}

/// The type of a gallery: start face type, word, end face type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GalleryType {
    pub start: FaceType,
    pub word: Vec<usize>,
    pub end: FaceType,
}

/// Gallery with alcoves c_0 = `first`, c_i = c_{i-1} s_{j_i} on a cross and
/// c_i = c_{i-1} on a fold. Panel p_i (1 <= i <= l) is the type-j_i panel of
/// c_{i-1}; p_0 is the start face and p_{l+1} the end face.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gallery {
    gtype: GalleryType,
    first: AffineWeylElement,
    moves: Vec<Move>,
}

/// Index interval [start, end] of a gallery; `end = None` means [start, infinity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub start: usize,
    pub end: Option<usize>,
}

impl Interval {
    pub fn closed(start: usize, end: usize) -> Interval {
        Interval { start, end: Some(end) }
    }

    pub fn tail(start: usize) -> Interval {
        Interval { start, end: None }
    }

    /// Alcove indices c_start .. c_{end-1}, or through c_last for a tail.
    fn alcoves(&self, last: usize) -> std::ops::Range<usize> {
        self.start..self.end.unwrap_or(last + 1)
    }
}

impl Gallery {
    pub fn new(rs: &RootSystem, gtype: GalleryType, first: AffineWeylElement, moves: Vec<Move>) -> Result<Gallery> {
        if moves.len() != gtype.word.len() {
            return Err(Error::MoveCountMismatch { expected: gtype.word.len(), got: moves.len() });
        }
        if let Some(&bad) = gtype.word.iter().find(|&&s| s > rs.rank()) {
            return Err(Error::BadLetter { letter: bad, max: rs.rank() });
        }
        rs.check_dim(first.rank())?;
        if rs.end_simplex(&first, gtype.start).rep != rs.identity() {
            return Err(Error::BadFirstAlcove);
        }
        Ok(Gallery { gtype, first, moves })
    }

    pub fn gallery_type(&self) -> &GalleryType {
        &self.gtype
    }

    pub fn first_alcove(&self) -> &AffineWeylElement {
        &self.first
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn num_folds(&self) -> usize {
        self.moves.iter().filter(|m| **m == Move::Fold).count()
    }

    /// c_0, ..., c_l
    pub fn alcoves(&self, rs: &RootSystem) -> Vec<AffineWeylElement> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut c = self.first.clone();
        out.push(c.clone());
        for (&s, m) in self.gtype.word.iter().zip(&self.moves) {
            if *m == Move::Cross {
                c = rs.mul_gen(&c, s);
            }
            out.push(c.clone());
        }
        out
    }

    /// Walls of the panels p_1, ..., p_l.
    pub fn panel_walls(&self, rs: &RootSystem) -> Vec<Hyperplane> {
        let alcoves = self.alcoves(rs);
        self.gtype
            .word
            .iter()
            .enumerate()
            .map(|(i, &s)| rs.act_on_hyperplane(&alcoves[i], &rs.gen_wall(s)))
            .collect()
    }

    pub fn last_alcove(&self, rs: &RootSystem) -> AffineWeylElement {
        self.alcoves(rs).pop().expect("nonempty")
    }

    pub fn end_simplex(&self, rs: &RootSystem) -> EndSimplex {
        rs.end_simplex(&self.last_alcove(rs), self.gtype.end)
    }

    /// Index of the first fold with negative orientation, if any.
    pub fn first_negative_fold(&self, rs: &RootSystem, chimney: &Chimney) -> Option<usize> {
        let alcoves = self.alcoves(rs);
        (0..self.len()).find(|&i| {
            self.moves[i] == Move::Fold
                && chimney.orientation_at(rs, &alcoves[i], &rs.act_on_hyperplane(&alcoves[i], &rs.gen_wall(self.gtype.word[i])))
                    == Sign::Minus
        })
    }

    pub fn is_positively_folded(&self, rs: &RootSystem, chimney: &Chimney) -> bool {
        self.first_negative_fold(rs, chimney).is_none()
    }

    /// p_i lies in H, for 0 <= i <= l+1.
    fn panel_in(&self, rs: &RootSystem, alcoves: &[AffineWeylElement], walls: &[Hyperplane], h: &Hyperplane, i: usize) -> bool {
        let l = self.len();
        if i == 0 {
            rs.face_side(&alcoves[0], self.gtype.start, h).is_none()
        } else if i <= l {
            walls[i - 1] == *h
        } else {
            rs.face_side(&alcoves[l], self.gtype.end, h).is_none()
        }
    }

    fn sides(&self, rs: &RootSystem, h: &Hyperplane) -> Analysis {
        let alcoves = self.alcoves(rs);
        let walls = self.panel_walls(rs);
        let near = if h.level <= 0 { Sign::Plus } else { Sign::Minus };
        let far: Vec<bool> = alcoves.iter().map(|c| rs.alcove_side(c, h) != near).collect();
        let on: Vec<bool> = (0..=self.len() + 1).map(|i| self.panel_in(rs, &alcoves, &walls, h, i)).collect();
        let end_far = rs.face_side(&alcoves[self.len()], self.gtype.end, h) == Some(near.flip());
        Analysis { far, on, end_far }
    }

    /// Union of all H-protrusions, as maximal runs of alcoves off H^id.
    pub fn maximal_outcrop(&self, rs: &RootSystem, h: &Hyperplane) -> Vec<Interval> {
        let a = self.sides(rs, h);
        runs(&a.far)
    }

    /// The maximal outcrop without its tail beyond the last panel in H.
    /// Absent when the final simplex is not strictly off H^id.
    pub fn near_maximal_outcrop(&self, rs: &RootSystem, h: &Hyperplane) -> Option<Vec<Interval>> {
        let a = self.sides(rs, h);
        if !a.end_far {
            return None;
        }
        let l = self.len();
        let last = (0..=l).rev().find(|&i| a.on[i]).expect("a far alcove is entered through H");
        let mut out = runs(&a.far);
        let tail = out.pop().expect("tail");
        debug_assert!(tail.end.is_none());
        if tail.start < last {
            out.push(Interval::closed(tail.start, last));
        }
        Some(out)
    }

    /// Union of all H-indentations.
    pub fn maximal_ingrowth(&self, rs: &RootSystem, h: &Hyperplane) -> Vec<Interval> {
        let a = self.sides(rs, h);
        let l = self.len();
        let Some(first) = (1..=l + 1).find(|&i| a.on[i]) else {
            return Vec::new();
        };
        let near: Vec<bool> = a.far.iter().enumerate().map(|(i, f)| !f && i >= first).collect();
        runs(&near)
    }

    pub fn is_outcrop(&self, rs: &RootSystem, h: &Hyperplane, intervals: &[Interval]) -> bool {
        let a = self.sides(rs, h);
        intervals.iter().all(|iv| a.is_run(iv, self.len(), true))
    }

    pub fn is_ingrowth(&self, rs: &RootSystem, h: &Hyperplane, intervals: &[Interval]) -> bool {
        let a = self.sides(rs, h);
        intervals.iter().all(|iv| iv.start >= 1 && a.is_run(iv, self.len(), false))
    }

    /// Reflect the alcoves of an H-outcrop into H^id.
    pub fn apply_e(&self, rs: &RootSystem, h: &Hyperplane, intervals: &[Interval]) -> Result<Gallery> {
        if !self.is_outcrop(rs, h, intervals) {
            return Err(Error::NotOutcrop);
        }
        Ok(self.reflect_intervals(rs, h, intervals))
    }

    /// Reflect the alcoves of an H-ingrowth out of H^id.
    pub fn apply_f(&self, rs: &RootSystem, h: &Hyperplane, intervals: &[Interval]) -> Result<Gallery> {
        if !self.is_ingrowth(rs, h, intervals) {
            return Err(Error::NotIngrowth);
        }
        Ok(self.reflect_intervals(rs, h, intervals))
    }

    fn reflect_intervals(&self, rs: &RootSystem, h: &Hyperplane, intervals: &[Interval]) -> Gallery {
        let l = self.len();
        let r = rs.reflection(h);
        let mut alcoves = self.alcoves(rs);
        let mut hit = vec![false; l + 1];
        for iv in intervals {
            for i in iv.alcoves(l) {
                hit[i] = true;
            }
        }
        for (c, flag) in alcoves.iter_mut().zip(&hit) {
            if *flag {
                *c = r.compose(c);
            }
        }
        let moves = (1..=l)
            .map(|i| {
                if alcoves[i] == alcoves[i - 1] {
                    Move::Fold
                } else {
                    debug_assert_eq!(alcoves[i], rs.mul_gen(&alcoves[i - 1], self.gtype.word[i - 1]));
                    Move::Cross
                }
            })
            .collect();
        Gallery { gtype: self.gtype.clone(), first: alcoves.swap_remove(0), moves }
    }
}

struct Analysis {
    far: Vec<bool>,
    on: Vec<bool>,
    end_far: bool,
}

impl Analysis {
    fn is_run(&self, iv: &Interval, l: usize, far: bool) -> bool {
        if !self.on.get(iv.start).copied().unwrap_or(false) {
            return false;
        }
        match iv.end {
            Some(k) if k <= iv.start || k > l + 1 || !self.on[k] => return false,
            _ => {}
        }
        iv.alcoves(l).all(|i| self.far[i] == far)
    }
}

/// Maximal runs of `true` alcoves as intervals bounded by the panels
/// entering and leaving the run; a run reaching c_l becomes a tail.
fn runs(flags: &[bool]) -> Vec<Interval> {
    let l = flags.len() - 1;
    let mut out = Vec::new();
    let mut i = 0;
    while i <= l {
        if flags[i] {
            let start = i;
            while i <= l && flags[i] {
                i += 1;
            }
            out.push(if i > l { Interval::tail(start) } else { Interval::closed(start, i) });
        } else {
            i += 1;
        }
    }
    out
}

/// The minimal gallery of type (sigma, reduced word of x, tau) from the
/// fundamental alcove.
pub fn minimal_gallery(rs: &RootSystem, x: &AffineWeylElement, sigma: FaceType, tau: FaceType) -> Result<Gallery> {
    rs.check_dim(x.rank())?;
    if !rs.is_reduced(x, sigma, tau) {
        let m = rs.min_coset_rep(x, sigma, tau);
        return Err(Error::NotReduced { suggested: rs.reduced_word(&m) });
    }
    let word = rs.reduced_word(x);
    let moves = vec![Move::Cross; word.len()];
    Ok(Gallery { gtype: GalleryType { start: sigma, word, end: tau }, first: rs.identity(), moves })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::from_name("A2").unwrap()
    }

    fn gallery(rs: &RootSystem, word: &[usize], folds: &[usize]) -> Gallery {
        let moves = (0..word.len()).map(|i| if folds.contains(&i) { Move::Fold } else { Move::Cross }).collect();
        let t = GalleryType { start: FaceType::alcove(), word: word.to_vec(), end: FaceType::alcove() };
        Gallery::new(rs, t, rs.identity(), moves).unwrap()
    }

    #[test]
    fn minimal_gallery_of_s0() {
        let rs = a2();
        let s0 = rs.from_word(&[0]).unwrap();
        let g = minimal_gallery(&rs, &s0, FaceType::vertex(2), FaceType::alcove()).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.last_alcove(&rs), s0);
    }

    #[test]
    fn non_reduced_is_rejected_with_suggestion() {
        let rs = a2();
        let x = rs.from_word(&[1, 0]).unwrap();
        match minimal_gallery(&rs, &x, FaceType::vertex(2), FaceType::alcove()) {
            Err(Error::NotReduced { suggested }) => assert_eq!(suggested, vec![0]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fold_keeps_alcove() {
        let rs = a2();
        let g = gallery(&rs, &[1, 2], &[0]);
        let cs = g.alcoves(&rs);
        assert_eq!(cs[0], cs[1]);
        assert_eq!(cs[2], rs.from_word(&[2]).unwrap());
    }

    #[test]
    fn outcrop_runs() {
        // far, far, near, near, far, far with l = 5
        let r = runs(&[true, true, false, false, true, true]);
        assert_eq!(r, vec![Interval::closed(0, 2), Interval::tail(4)]);
    }

    #[test]
    fn e_with_maximal_outcrop_lands_in_near_half() {
        let rs = a2();
        // cross H_{alpha,0}, then wander
        let g = gallery(&rs, &[1, 2, 0, 1], &[]);
        let h = Hyperplane { root: 0, level: 0 };
        let l = g.maximal_outcrop(&rs, &h);
        assert!(!l.is_empty());
        let e = g.apply_e(&rs, &h, &l).unwrap();
        assert_eq!(e.gallery_type(), g.gallery_type());
        for c in e.alcoves(&rs) {
            assert_eq!(rs.alcove_side(&c, &h), Sign::Plus);
        }
        assert!(e.maximal_outcrop(&rs, &h).is_empty());
    }

    #[test]
    fn e_rejects_non_outcrop() {
        let rs = a2();
        let g = gallery(&rs, &[1, 2], &[]);
        let h = Hyperplane { root: 0, level: 0 };
        assert_eq!(g.apply_e(&rs, &h, &[Interval::closed(0, 2)]), Err(Error::NotOutcrop));
    }
}
