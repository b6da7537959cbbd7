//! Affine Weyl group elements t^lambda w acting on the coroot space.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::root_system::{identity_matrix, IVec, RationalPoint, RootSystem};

pub type IMat = SmallVec<[i64; 16]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn of(x: i64) -> Option<Sign> {
        match x.cmp(&0) {
            Ordering::Greater => Some(Sign::Plus),
            Ordering::Less => Some(Sign::Minus),
            Ordering::Equal => None,
        }
    }
}

/// H_{alpha,k} = { v : <alpha, v> = k } for the positive root with index `root`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    pub root: usize,
    pub level: i64,
}

/// The closed half-space `side * (<alpha, v> - k) >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfApartment {
    pub hyperplane: Hyperplane,
    pub side: Sign,
}

impl HalfApartment {
    pub fn opposite(&self) -> HalfApartment {
        HalfApartment { hyperplane: self.hyperplane, side: self.side.flip() }
    }
}

/// Subset T of the simple letters {1..n}; W_T fixes a face of the
/// fundamental alcove containing the origin. All letters give the origin,
/// the empty set gives the whole alcove.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FaceType(u32);

impl FaceType {
    pub fn alcove() -> FaceType {
        FaceType(0)
    }

    pub fn vertex(rank: usize) -> FaceType {
        FaceType((1u32 << rank) - 1)
    }

    pub fn from_letters(letters: &[usize], rank: usize) -> Result<FaceType> {
        let mut m = 0u32;
        for &l in letters {
            if l == 0 || l > rank {
                return Err(Error::BadFaceLetter { letter: l, max: rank });
            }
            m |= 1 << (l - 1);
        }
        Ok(FaceType(m))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, letter: usize) -> bool {
        letter >= 1 && self.0 & (1 << (letter - 1)) != 0
    }

    pub fn letters(self) -> Vec<usize> {
        (1..=32).filter(|&l| self.contains(l)).collect()
    }

    pub fn is_alcove(self) -> bool {
        self.0 == 0
    }

    pub fn is_vertex(self, rank: usize) -> bool {
        self == FaceType::vertex(rank)
    }
}

/// Element of the finite Weyl group, kept as its matrices on the coroot and
/// root lattices together with their inverses.
#[derive(Debug, Clone)]
pub struct FiniteWeylElement {
    n: usize,
    coroot: IMat,
    coroot_inv: IMat,
    root: IMat,
    root_inv: IMat,
}

impl PartialEq for FiniteWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.coroot == other.coroot
    }
}

impl Eq for FiniteWeylElement {}

impl Hash for FiniteWeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coroot.hash(state);
    }
}

impl PartialOrd for FiniteWeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FiniteWeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coroot.cmp(&other.coroot)
    }
}

fn mat_mul(n: usize, a: &IMat, b: &IMat) -> IMat {
    let mut c = IMat::from_elem(0, n * n);
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += x * b[k * n + j];
            }
        }
    }
    c
}

fn mat_vec(n: usize, a: &[i64], v: &[i64]) -> IVec {
    (0..n).map(|i| (0..n).map(|j| a[i * n + j] * v[j]).sum()).collect()
}

impl FiniteWeylElement {
    pub(crate) fn from_involution(n: usize, coroot: IMat, root: IMat) -> Self {
        FiniteWeylElement { n, coroot_inv: coroot.clone(), coroot, root_inv: root.clone(), root }
    }

    pub fn identity_like(&self) -> Self {
        let id = identity_matrix(self.n);
        FiniteWeylElement::from_involution(self.n, id.clone(), id)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        self.coroot == identity_matrix(self.n)
    }

    /// Matrix on the coroot lattice, row-major; column j is the image of alpha_j^vee.
    pub fn matrix(&self) -> &[i64] {
        &self.coroot
    }

    pub fn root_matrix(&self) -> &[i64] {
        &self.root
    }

    pub fn compose(&self, other: &Self) -> Self {
        let n = self.n;
        FiniteWeylElement {
            n,
            coroot: mat_mul(n, &self.coroot, &other.coroot),
            coroot_inv: mat_mul(n, &other.coroot_inv, &self.coroot_inv),
            root: mat_mul(n, &self.root, &other.root),
            root_inv: mat_mul(n, &other.root_inv, &self.root_inv),
        }
    }

    pub fn inverse(&self) -> Self {
        FiniteWeylElement {
            n: self.n,
            coroot: self.coroot_inv.clone(),
            coroot_inv: self.coroot.clone(),
            root: self.root_inv.clone(),
            root_inv: self.root.clone(),
        }
    }

    pub fn apply_coroot(&self, v: &[i64]) -> IVec {
        mat_vec(self.n, &self.coroot, v)
    }

    pub fn apply_root(&self, r: &[i64]) -> IVec {
        mat_vec(self.n, &self.root, r)
    }
}

/// x = t^lambda w, acting by v -> w v + lambda.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    translation: IVec,
    finite: FiniteWeylElement,
}

impl AffineWeylElement {
    pub fn from_parts(translation: IVec, finite: FiniteWeylElement) -> Self {
        AffineWeylElement { translation, finite }
    }

    pub fn translation(&self) -> &IVec {
        &self.translation
    }

    pub fn finite(&self) -> &FiniteWeylElement {
        &self.finite
    }

    pub fn rank(&self) -> usize {
        self.translation.len()
    }

    /// (t^lambda u)(t^mu v) = t^{lambda + u mu} uv
    pub fn compose(&self, other: &Self) -> Self {
        let um = self.finite.apply_coroot(&other.translation);
        AffineWeylElement {
            translation: self.translation.iter().zip(&um).map(|(a, b)| a + b).collect(),
            finite: self.finite.compose(&other.finite),
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = self.finite.inverse();
        let t = inv.apply_coroot(&self.translation);
        AffineWeylElement { translation: t.iter().map(|x| -x).collect(), finite: inv }
    }

    pub fn apply(&self, v: &[i64]) -> IVec {
        let w = self.finite.apply_coroot(v);
        w.iter().zip(&self.translation).map(|(a, b)| a + b).collect()
    }

    pub fn apply_rational(&self, p: &RationalPoint) -> RationalPoint {
        let w = self.finite.apply_coroot(p.num());
        let d = p.den();
        RationalPoint::new(w.iter().zip(&self.translation).map(|(a, b)| a + d * b).collect(), d)
    }

    /// Numerator of x.p over the denominator of p, unreduced.
    fn apply_scaled(&self, p: &RationalPoint) -> IVec {
        let w = self.finite.apply_coroot(p.num());
        let d = p.den();
        w.iter().zip(&self.translation).map(|(a, b)| a + d * b).collect()
    }
}

/// The face x.T of the alcove x, normalised so that `rep` is the minimal
/// element of x W_T.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndSimplex {
    pub rep: AffineWeylElement,
    pub face: FaceType,
}

impl RootSystem {
    pub fn identity(&self) -> AffineWeylElement {
        let n = self.rank();
        let id = identity_matrix(n);
        AffineWeylElement {
            translation: IVec::from_elem(0, n),
            finite: FiniteWeylElement::from_involution(n, id.clone(), id),
        }
    }

    pub fn translation(&self, lambda: &[i64]) -> Result<AffineWeylElement> {
        self.check_dim(lambda.len())?;
        let mut x = self.identity();
        x.translation = lambda.iter().copied().collect();
        Ok(x)
    }

    pub fn from_word(&self, word: &[usize]) -> Result<AffineWeylElement> {
        let mut x = self.identity();
        for &s in word {
            x = x.compose(self.generator(s)?);
        }
        Ok(x)
    }

    /// Finite part from a word in the simple letters 1..n.
    pub fn finite_from_word(&self, word: &[usize]) -> Result<FiniteWeylElement> {
        let mut w = self.identity().finite;
        for &s in word {
            if s == 0 || s > self.rank() {
                return Err(Error::BadLetter { letter: s, max: self.rank() });
            }
            w = w.compose(self.gen(s).finite());
        }
        Ok(w)
    }

    /// t^lambda times the finite element with the given word.
    pub fn element(&self, translation: &[i64], finite_word: &[usize]) -> Result<AffineWeylElement> {
        self.check_dim(translation.len())?;
        Ok(AffineWeylElement {
            translation: translation.iter().copied().collect(),
            finite: self.finite_from_word(finite_word)?,
        })
    }

    pub fn mul_gen(&self, x: &AffineWeylElement, s: usize) -> AffineWeylElement {
        x.compose(self.gen(s))
    }

    /// Sides of x.b for every positive root: k_gamma with k < <gamma, x b> < k + 1.
    pub fn alcove_coordinates(&self, x: &AffineWeylElement) -> Vec<i64> {
        let b = self.alcove_barycenter();
        let p = x.apply_scaled(b);
        let d = b.den();
        (0..self.num_positive_roots())
            .map(|g| {
                let v = self.eval(g, &p);
                debug_assert!(v % d != 0, "barycenter on a wall");
                v.div_euclid(d)
            })
            .collect()
    }

    /// Number of hyperplanes separating the fundamental alcove from x.a.
    pub fn length(&self, x: &AffineWeylElement) -> usize {
        self.alcove_coordinates(x).iter().map(|k| k.unsigned_abs() as usize).sum()
    }

    /// x H_{alpha,k} = H_{u alpha, k + <u alpha, mu>} for x = t^mu u, renormalised
    /// to a positive root.
    pub fn act_on_hyperplane(&self, x: &AffineWeylElement, h: &Hyperplane) -> Hyperplane {
        self.act_on_halfapartment(x, &HalfApartment { hyperplane: *h, side: Sign::Plus }).hyperplane
    }

    pub fn act_on_halfapartment(&self, x: &AffineWeylElement, h: &HalfApartment) -> HalfApartment {
        let ua = x.finite.apply_root(self.root(h.hyperplane.root));
        let (g, sign) = self.signed_root_index(&ua);
        let shift = self.eval(g, &x.translation);
        // <u alpha, v'> = <alpha, v> + <u alpha, mu>
        match sign {
            Sign::Plus => HalfApartment {
                hyperplane: Hyperplane { root: g, level: h.hyperplane.level + shift },
                side: h.side,
            },
            Sign::Minus => HalfApartment {
                hyperplane: Hyperplane { root: g, level: -h.hyperplane.level + shift },
                side: h.side.flip(),
            },
        }
    }

    /// Side of the alcove x.a with respect to H.
    pub fn alcove_side(&self, x: &AffineWeylElement, h: &Hyperplane) -> Sign {
        self.face_side(x, FaceType::alcove(), h).expect("alcove barycenter on a hyperplane")
    }

    /// Side of the face x.T; `None` when the face lies in H.
    pub fn face_side(&self, x: &AffineWeylElement, face: FaceType, h: &Hyperplane) -> Option<Sign> {
        let c = self.face_center(face.mask());
        let p = x.apply_scaled(c);
        Sign::of(self.eval(h.root, &p) - h.level * c.den())
    }

    pub fn point_side(&self, v: &[i64], h: &Hyperplane) -> Option<Sign> {
        Sign::of(self.eval(h.root, v) - h.level)
    }

    pub fn contains_alcove(&self, half: &HalfApartment, x: &AffineWeylElement) -> bool {
        self.alcove_side(x, &half.hyperplane) == half.side
    }

    /// The wall of y.a of type s: y H_s.
    pub fn wall(&self, y: &AffineWeylElement, s: usize) -> Result<Hyperplane> {
        if s > self.rank() {
            return Err(Error::BadLetter { letter: s, max: self.rank() });
        }
        Ok(self.act_on_hyperplane(y, &self.gen_wall(s)))
    }

    /// l(xs) < l(x)
    pub fn is_right_descent(&self, x: &AffineWeylElement, s: usize) -> bool {
        let h = self.act_on_hyperplane(x, &self.gen_wall(s));
        let base = if h.level <= 0 { Sign::Plus } else { Sign::Minus };
        self.alcove_side(x, &h) != base
    }

    /// l(s_i x) < l(x) for a simple letter i >= 1.
    pub fn is_left_descent(&self, x: &AffineWeylElement, i: usize) -> bool {
        self.alcove_side(x, &Hyperplane { root: i - 1, level: 0 }) == Sign::Minus
    }

    /// Canonical reduced word: repeatedly strip the least right descent, with
    /// letters ordered s_1 < ... < s_n < s_0.
    pub fn reduced_word(&self, x: &AffineWeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut y = x.clone();
        let n = self.rank();
        'outer: loop {
            for s in (1..=n).chain(std::iter::once(0)) {
                if self.is_right_descent(&y, s) {
                    word.push(s);
                    y = self.mul_gen(&y, s);
                    continue 'outer;
                }
            }
            break;
        }
        debug_assert!(y == self.identity());
        word.reverse();
        word
    }

    /// Every reduced word of x, sorted lexicographically.
    pub fn all_reduced_words(&self, x: &AffineWeylElement) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        self.collect_words(x, &mut suffix, &mut out);
        out.sort();
        out
    }

    fn collect_words(&self, x: &AffineWeylElement, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let descents: Vec<usize> = (0..=self.rank()).filter(|&s| self.is_right_descent(x, s)).collect();
        if descents.is_empty() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for s in descents {
            suffix.push(s);
            self.collect_words(&self.mul_gen(x, s), suffix, out);
            suffix.pop();
        }
    }

    /// Reduced word of a finite element in letters 1..n.
    pub fn finite_word(&self, w: &FiniteWeylElement) -> Vec<usize> {
        let x = AffineWeylElement { translation: IVec::from_elem(0, self.rank()), finite: w.clone() };
        self.reduced_word(&x)
    }

    /// Minimal element of W_left x W_right.
    pub fn min_coset_rep(&self, x: &AffineWeylElement, left: FaceType, right: FaceType) -> AffineWeylElement {
        let mut y = x.clone();
        'outer: loop {
            for i in 1..=self.rank() {
                if left.contains(i) && self.is_left_descent(&y, i) {
                    y = self.gen(i).compose(&y);
                    continue 'outer;
                }
                if right.contains(i) && self.is_right_descent(&y, i) {
                    y = self.mul_gen(&y, i);
                    continue 'outer;
                }
            }
            return y;
        }
    }

    pub fn is_reduced(&self, x: &AffineWeylElement, left: FaceType, right: FaceType) -> bool {
        (1..=self.rank()).all(|i| {
            !(left.contains(i) && self.is_left_descent(x, i)) && !(right.contains(i) && self.is_right_descent(x, i))
        })
    }

    pub fn end_simplex(&self, x: &AffineWeylElement, face: FaceType) -> EndSimplex {
        EndSimplex { rep: self.min_coset_rep(x, FaceType::alcove(), face), face }
    }

    pub fn reflect_simplex(&self, h: &Hyperplane, s: &EndSimplex) -> EndSimplex {
        self.end_simplex(&self.reflection(h).compose(&s.rep), s.face)
    }

    pub fn simplex_side(&self, s: &EndSimplex, h: &Hyperplane) -> Option<Sign> {
        self.face_side(&s.rep, s.face, h)
    }

    /// All elements of length at most `radius`, ordered by length then canonical word.
    pub fn elements_up_to_length(&self, radius: usize) -> Vec<AffineWeylElement> {
        let mut layers = vec![vec![self.identity()]];
        let mut seen: std::collections::HashSet<AffineWeylElement> = layers[0].iter().cloned().collect();
        for _ in 0..radius {
            let mut next = Vec::new();
            for x in layers.last().unwrap() {
                for s in 0..=self.rank() {
                    let y = self.mul_gen(x, s);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            layers.push(next);
        }
        let mut out = Vec::new();
        for layer in layers {
            let mut keyed: Vec<(Vec<usize>, AffineWeylElement)> =
                layer.into_iter().map(|x| (self.reduced_word(&x), x)).collect();
            keyed.sort();
            out.extend(keyed.into_iter().map(|(_, x)| x));
        }
        out
    }

    /// The alcoves t^mu w, w in W_0.
    pub fn star_alcoves(&self, mu: &[i64]) -> Result<Vec<AffineWeylElement>> {
        self.check_dim(mu.len())?;
        Ok(self
            .finite_weyl_group()
            .iter()
            .map(|w| AffineWeylElement { translation: mu.iter().copied().collect(), finite: w.clone() })
            .collect())
    }

    /// W_0 lambda, sorted.
    pub fn orbit(&self, lambda: &[i64]) -> Result<Vec<IVec>> {
        self.check_dim(lambda.len())?;
        let set: BTreeSet<IVec> = self.finite_weyl_group().iter().map(|w| w.apply_coroot(lambda)).collect();
        Ok(set.into_iter().collect())
    }

    pub fn is_dominant(&self, lambda: &[i64]) -> bool {
        (0..self.rank()).all(|i| self.eval(i, lambda) >= 0)
    }

    pub fn dominant(&self, lambda: &[i64]) -> IVec {
        let mut v: IVec = lambda.iter().copied().collect();
        'outer: loop {
            for i in 0..self.rank() {
                if self.eval(i, &v) < 0 {
                    v = self.gen(i + 1).finite().apply_coroot(&v);
                    continue 'outer;
                }
            }
            return v;
        }
    }

    /// Coroot lattice points of the convex hull of W_0 lambda: those nu whose
    /// dominant conjugate is below the dominant conjugate of lambda.
    pub fn polytope_points(&self, lambda: &[i64]) -> Result<Vec<IVec>> {
        let n = self.rank();
        let orbit = self.orbit(lambda)?;
        let top = self.dominant(lambda);
        let bound: Vec<i64> = (0..n).map(|i| orbit.iter().map(|v| v[i].abs()).max().unwrap_or(0)).collect();
        let mut out = Vec::new();
        let mut nu: IVec = bound.iter().map(|b| -b).collect();
        loop {
            let d = self.dominant(&nu);
            if top.iter().zip(&d).all(|(a, b)| a >= b) {
                out.push(nu.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
                    out.sort();
                    return Ok(out);
                }
                if nu[i] < bound[i] {
                    nu[i] += 1;
                    break;
                }
                nu[i] = -bound[i];
                i += 1;
            }
        }
    }

    /// x_lambda: the minimal element of t^lambda W_0.
    pub fn x_lambda(&self, lambda: &[i64]) -> Result<AffineWeylElement> {
        let t = self.translation(lambda)?;
        Ok(self.min_coset_rep(&t, FaceType::alcove(), FaceType::vertex(self.rank())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    fn a2() -> RootSystem {
        RootSystem::from_name("A2").unwrap()
    }

    // word length by breadth-first search in the Cayley graph
    fn bfs_lengths(rs: &RootSystem, radius: usize) -> HashMap<AffineWeylElement, usize> {
        let mut dist = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(rs.identity(), 0);
        queue.push_back(rs.identity());
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            if d == radius {
                continue;
            }
            for s in 0..=rs.rank() {
                let y = rs.mul_gen(&x, s);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    #[test]
    fn length_agrees_with_cayley_graph_distance() {
        for name in ["A2", "C2", "G2", "A3"] {
            let rs = RootSystem::from_name(name).unwrap();
            for (x, d) in bfs_lengths(&rs, 6) {
                assert_eq!(rs.length(&x), d, "{name}");
                let w = rs.reduced_word(&x);
                assert_eq!(w.len(), d);
                assert_eq!(rs.from_word(&w).unwrap(), x);
            }
        }
    }

    #[test]
    fn s0_in_a2() {
        let rs = a2();
        let s0 = rs.from_word(&[0]).unwrap();
        assert_eq!(s0.translation().as_slice(), &[1, 1]);
        let theta = rs.highest_root_index();
        assert_eq!(s0.finite(), &rs.finite_reflection(theta));
        assert_eq!(s0, rs.reflection(&Hyperplane { root: theta, level: 1 }));
    }

    #[test]
    fn a2_lengths_and_words() {
        let rs = a2();
        let t = rs.translation(&[1, 1]).unwrap();
        assert_eq!(rs.length(&t), 4);
        let r = rs.reflection(&Hyperplane { root: 0, level: 1 });
        assert_eq!(rs.length(&r), 3);
        assert_eq!(rs.reduced_word(&r), vec![2, 0, 2]);
    }

    #[test]
    fn a2_walls_and_cosets() {
        let rs = a2();
        let s0 = rs.from_word(&[0]).unwrap();
        assert_eq!(rs.wall(&s0, 1).unwrap(), Hyperplane { root: 1, level: 1 });
        assert_eq!(rs.x_lambda(&[1, 1]).unwrap(), s0);
        assert!(rs.is_reduced(&s0, FaceType::vertex(2), FaceType::alcove()));
        assert!(rs.wall(&s0, 3).is_err());
    }

    #[test]
    fn composition_matches_action() {
        let rs = RootSystem::from_name("C2").unwrap();
        let x = rs.from_word(&[0, 1, 2, 0]).unwrap();
        let y = rs.from_word(&[2, 1, 0]).unwrap();
        let v = [3, -2];
        assert_eq!(x.compose(&y).apply(&v), x.apply(&y.apply(&v)));
        assert_eq!(x.inverse().apply(&x.apply(&v)).as_slice(), &v);
    }

    #[test]
    fn polytope_contains_orbit_and_is_stable() {
        for (name, lambda) in [("A2", vec![2, 2]), ("C2", vec![4, 3]), ("G2", vec![2, 3])] {
            let rs = RootSystem::from_name(name).unwrap();
            let pts = rs.polytope_points(&lambda).unwrap();
            let set: BTreeSet<IVec> = pts.iter().cloned().collect();
            for v in rs.orbit(&lambda).unwrap() {
                assert!(set.contains(&v));
            }
            for w in rs.finite_weyl_group() {
                for p in &pts {
                    assert!(set.contains(&w.apply_coroot(p)));
                }
            }
        }
    }

    #[test]
    fn a2_polytope_of_2_2_has_19_points() {
        let rs = a2();
        assert_eq!(rs.polytope_points(&[2, 2]).unwrap().len(), 19);
    }

    #[test]
    fn finite_group_orders() {
        for (name, order) in [("A1", 2), ("A2", 6), ("C2", 8), ("G2", 12), ("A3", 24), ("A4", 120)] {
            assert_eq!(RootSystem::from_name(name).unwrap().finite_weyl_group().len(), order);
        }
    }
}
