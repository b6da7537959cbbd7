//! Finite crystallographic root systems over the simple-root basis.
//!
//! Roots are integer vectors in the basis of simple roots, coroots integer
//! vectors in the basis of simple coroots. The Cartan entry `a(i, j)` is the
//! pairing of the simple root `i` with the simple coroot `j`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::Ratio;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::weyl::{AffineWeylElement, FiniteWeylElement, HalfApartment, Hyperplane, Sign};

pub type IVec = SmallVec<[i64; 4]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=7).contains(&rank),
            Family::B | Family::C => (2..=6).contains(&rank),
            Family::D => (4..=6).contains(&rank),
            Family::E => rank == 6,
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{:?}{}", family, rank)))
        }
    }

    /// Cartan matrix, row-major, entry `(i, j)` = <alpha_i, alpha_j^vee>.
    fn cartan_matrix(&self) -> Vec<i64> {
        let n = self.rank;
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            a[i * n + i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i * n + j] = aij;
            a[j * n + i] = aji;
        };
        match self.family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1, -1, -1);
                }
            }
            Family::B => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                // alpha_n short
                link(n - 2, n - 1, -2, -1);
            }
            Family::C if n == 2 => {
                // alpha_1 long, so alpha_1^vee is the short simple coroot
                link(0, 1, -2, -1);
            }
            Family::C => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                // alpha_n long
                link(n - 2, n - 1, -1, -2);
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                link(0, 2, -1, -1);
                link(2, 3, -1, -1);
                link(1, 3, -1, -1);
                for i in 3..n - 1 {
                    link(i, i + 1, -1, -1);
                }
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -2, -1);
                link(2, 3, -1, -1);
            }
            Family::G => {
                // alpha_1 short, alpha_2 long
                link(0, 1, -1, -3);
            }
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnsupportedType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank).map_err(|_| bad())
    }
}

/// A point with rational coordinates in the simple-coroot basis, stored as
/// an integer numerator vector over a common positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    num: IVec,
    den: i64,
}

impl RationalPoint {
    pub fn new(num: IVec, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let mut g = den.abs();
        for &x in &num {
            g = g.gcd(&x);
        }
        let s = if den < 0 { -g } else { g };
        RationalPoint {
            num: num.iter().map(|x| x / s).collect(),
            den: den / s,
        }
    }

    pub fn from_integral(v: &[i64]) -> Self {
        RationalPoint { num: v.iter().copied().collect(), den: 1 }
    }

    pub fn num(&self) -> &[i64] {
        &self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn coord(&self, i: usize) -> Ratio<i64> {
        Ratio::new(self.num[i], self.den)
    }

    pub fn coords(&self) -> Vec<Ratio<i64>> {
        (0..self.num.len()).map(|i| self.coord(i)).collect()
    }
}

pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    cartan: Vec<i64>,
    roots: Vec<IVec>,
    coroots: Vec<IVec>,
    // forms[g][k] = <gamma_g, alpha_k^vee>, so <gamma, v> = forms[g] . v
    forms: Vec<IVec>,
    lookup: HashMap<IVec, usize>,
    highest: usize,
    // barycenters of the faces of the fundamental alcove containing 0,
    // indexed by the bitmask of the face type
    face_centers: Vec<RationalPoint>,
    coweights: Vec<RationalPoint>,
    generators: Vec<AffineWeylElement>,
    finite_group: OnceLock<Vec<FiniteWeylElement>>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.cartan_type)
    }
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let cartan_type = CartanType::new(cartan_type.family, cartan_type.rank)?;
        let n = cartan_type.rank;
        let cartan = cartan_type.cartan_matrix();
        let a = |i: usize, j: usize| cartan[i * n + j];

        // positive roots by root strings, processed in order of height
        let simple: Vec<IVec> = (0..n).map(|i| unit(n, i)).collect();
        let mut roots: Vec<IVec> = simple.clone();
        let mut known: HashMap<IVec, usize> = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            known.insert(r.clone(), i);
        }
        let mut idx = 0;
        while idx < roots.len() {
            let beta = roots[idx].clone();
            for i in 0..n {
                if beta == simple[i] {
                    continue;
                }
                // p = largest r with beta - r alpha_i a root
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] >= 0 && known.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..n).map(|j| beta[j] * a(j, i)).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !known.contains_key(&up) {
                        known.insert(up.clone(), roots.len());
                        roots.push(up);
                    }
                }
            }
            idx += 1;
        }
        let height = |r: &IVec| r.iter().sum::<i64>();
        let mut rest: Vec<IVec> = roots.split_off(n);
        rest.sort_by(|x, y| height(x).cmp(&height(y)).then_with(|| x.cmp(y)));
        roots.extend(rest);

        // symmetrizer d_i = (alpha_i, alpha_i)/2, with d_j a(i,j) = d_i a(j,i)
        let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
        d[0] = Some(Ratio::from_integer(1));
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..n {
                for j in 0..n {
                    if i != j && a(i, j) != 0 {
                        if let (Some(di), None) = (d[i], d[j]) {
                            d[j] = Some(di * Ratio::new(a(j, i), a(i, j)));
                            changed = true;
                        }
                    }
                }
            }
        }
        let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
        let lcm = d.iter().fold(1i64, |l, x| l.lcm(x.denom()));
        let d: Vec<i64> = d.iter().map(|x| (x * lcm).to_integer()).collect();

        let coroots: Vec<IVec> = roots
            .iter()
            .map(|r| {
                // (beta, beta)/2 = sum_ij c_i c_j d_j a(i,j) / 2
                let mut norm2 = 0i64;
                for i in 0..n {
                    for j in 0..n {
                        norm2 += r[i] * r[j] * d[j] * a(i, j);
                    }
                }
                let dbeta = norm2 / 2;
                r.iter()
                    .enumerate()
                    .map(|(i, &c)| {
                        let v = c * d[i];
                        assert!(v % dbeta == 0, "non-integral coroot");
                        v / dbeta
                    })
                    .collect()
            })
            .collect();
        let forms: Vec<IVec> = roots
            .iter()
            .map(|r| (0..n).map(|k| (0..n).map(|i| r[i] * a(i, k)).sum()).collect())
            .collect();
        let lookup: HashMap<IVec, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let highest = (0..roots.len())
            .max_by_key(|&i| (height(&roots[i]), std::cmp::Reverse(i)))
            .unwrap();

        // fundamental coweights: columns of the inverse Cartan matrix
        let inv = rational_inverse(&cartan, n);
        let marks = roots[highest].clone();
        let mut face_centers = Vec::with_capacity(1 << n);
        for mask in 0..(1usize << n) {
            let mut sum: Vec<Ratio<i64>> = vec![Ratio::from_integer(0); n];
            let mut count = 1i64;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    count += 1;
                    for (k, s) in sum.iter_mut().enumerate() {
                        *s += inv[k * n + j] / marks[j];
                    }
                }
            }
            let avg: Vec<Ratio<i64>> = sum.iter().map(|x| x / count).collect();
            let den = avg.iter().fold(1i64, |l, x| l.lcm(x.denom()));
            let num: IVec = avg.iter().map(|x| (x * den).to_integer()).collect();
            face_centers.push(RationalPoint::new(num, den));
        }

        let coweights: Vec<RationalPoint> = (0..n)
            .map(|j| {
                let den = (0..n).fold(1i64, |l, k| l.lcm(inv[k * n + j].denom()));
                RationalPoint::new((0..n).map(|k| (inv[k * n + j] * den).to_integer()).collect(), den)
            })
            .collect();

        let mut rs = RootSystem {
            cartan_type,
            rank: n,
            cartan,
            roots,
            coroots,
            forms,
            lookup,
            highest,
            face_centers,
            coweights,
            generators: Vec::new(),
            finite_group: OnceLock::new(),
        };
        let mut gens = Vec::with_capacity(n + 1);
        let theta = rs.highest;
        gens.push(AffineWeylElement::from_parts(
            rs.coroots[theta].clone(),
            rs.finite_reflection(theta),
        ));
        for i in 0..n {
            gens.push(AffineWeylElement::from_parts(IVec::from_elem(0, n), rs.simple_reflection(i)));
        }
        rs.generators = gens;
        Ok(rs)
    }

    pub fn from_name(name: &str) -> Result<Self> {
        RootSystem::new(name.parse()?)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.rank + j]
    }

    pub fn positive_roots(&self) -> &[IVec] {
        &self.roots
    }

    pub fn positive_coroots(&self) -> &[IVec] {
        &self.coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, g: usize) -> &IVec {
        &self.roots[g]
    }

    pub fn coroot(&self, g: usize) -> &IVec {
        &self.coroots[g]
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest
    }

    pub fn highest_root(&self) -> &IVec {
        &self.roots[self.highest]
    }

    /// Index of a positive root given by its coefficients.
    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.lookup.get(coeffs).copied()
    }

    /// Index of +-root together with the sign needed to make it positive.
    pub(crate) fn signed_root_index(&self, coeffs: &IVec) -> (usize, Sign) {
        if let Some(&i) = self.lookup.get(coeffs) {
            return (i, Sign::Plus);
        }
        let neg: IVec = coeffs.iter().map(|x| -x).collect();
        match self.lookup.get(&neg) {
            Some(&i) => (i, Sign::Minus),
            None => panic!("not a root: {:?}", coeffs),
        }
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        if self.lookup.contains_key(coeffs) {
            return true;
        }
        let neg: IVec = coeffs.iter().map(|x| -x).collect();
        self.lookup.contains_key(&neg)
    }

    pub fn pairing(&self, root: &[i64], coroot: &[i64]) -> Result<i64> {
        self.check_dim(root.len())?;
        self.check_dim(coroot.len())?;
        let n = self.rank;
        let mut s = 0;
        for (row, &r) in self.cartan.chunks(n).zip(root) {
            if r != 0 {
                s += r * row.iter().zip(coroot).map(|(a, c)| a * c).sum::<i64>();
            }
        }
        Ok(s)
    }

    pub fn pairing_rational(&self, root: &[i64], point: &RationalPoint) -> Result<Ratio<i64>> {
        Ok(Ratio::new(self.pairing(root, &point.num)?, point.den))
    }

    /// <gamma, v> for the positive root with index `g`.
    #[inline]
    pub(crate) fn eval(&self, g: usize, v: &[i64]) -> i64 {
        self.forms[g].iter().zip(v).map(|(a, b)| a * b).sum()
    }

    /// Affine reflection s_{alpha,k}(v) = v - (<alpha,v> - k) alpha^vee.
    pub fn affine_reflect(&self, h: &Hyperplane, v: &[i64]) -> Result<IVec> {
        self.check_dim(v.len())?;
        let c = self.eval(h.root, v) - h.level;
        Ok(v.iter().zip(&self.coroots[h.root]).map(|(x, r)| x - c * r).collect())
    }

    pub fn affine_reflect_rational(&self, h: &Hyperplane, p: &RationalPoint) -> Result<RationalPoint> {
        self.check_dim(p.num.len())?;
        let c = self.eval(h.root, &p.num) - h.level * p.den;
        Ok(RationalPoint::new(
            p.num.iter().zip(&self.coroots[h.root]).map(|(x, r)| x - c * r).collect(),
            p.den,
        ))
    }

    pub(crate) fn check_dim(&self, got: usize) -> Result<()> {
        if got == self.rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rank, got })
        }
    }

    /// Barycenter of the face of the fundamental alcove fixed by W_T.
    pub(crate) fn face_center(&self, mask: u32) -> &RationalPoint {
        &self.face_centers[mask as usize]
    }

    pub fn alcove_barycenter(&self) -> &RationalPoint {
        &self.face_centers[0]
    }

    /// Vertices of the fundamental alcove: 0 followed by omega_i^vee / m_i.
    pub fn alcove_vertices(&self) -> Vec<RationalPoint> {
        let n = self.rank;
        let full = (1u32 << n) - 1;
        let mut out = vec![RationalPoint::from_integral(&vec![0; n])];
        for j in 0..n {
            // the vertex fixed by all simple reflections but s_j
            let c = &self.face_centers[(full & !(1 << j)) as usize];
            out.push(RationalPoint::new(c.num.iter().map(|x| x * 2).collect(), c.den));
        }
        out
    }

    /// Fundamental coweight omega_i^vee (0-based index), dual to the simple roots.
    pub fn fundamental_coweight(&self, i: usize) -> &RationalPoint {
        &self.coweights[i]
    }

    /// Generator s_0 (letter 0) or s_i (letter i).
    pub fn generator(&self, letter: usize) -> Result<&AffineWeylElement> {
        self.generators.get(letter).ok_or(Error::BadLetter { letter, max: self.rank })
    }

    pub(crate) fn gen(&self, letter: usize) -> &AffineWeylElement {
        &self.generators[letter]
    }

    /// The hyperplane H_s fixed by the generator s.
    pub fn generator_wall(&self, letter: usize) -> Result<Hyperplane> {
        if letter > self.rank {
            return Err(Error::BadLetter { letter, max: self.rank });
        }
        Ok(self.gen_wall(letter))
    }

    pub(crate) fn gen_wall(&self, letter: usize) -> Hyperplane {
        if letter == 0 {
            Hyperplane { root: self.highest, level: 1 }
        } else {
            Hyperplane { root: letter - 1, level: 0 }
        }
    }

    fn simple_reflection(&self, i: usize) -> FiniteWeylElement {
        let n = self.rank;
        let mut coroot = identity_matrix(n);
        let mut root = identity_matrix(n);
        for j in 0..n {
            coroot[i * n + j] -= self.cartan_entry(i, j);
            root[i * n + j] -= self.cartan_entry(j, i);
        }
        FiniteWeylElement::from_involution(n, coroot, root)
    }

    /// Linear reflection s_gamma for the positive root with index `g`.
    pub fn finite_reflection(&self, g: usize) -> FiniteWeylElement {
        let n = self.rank;
        let gv = &self.coroots[g];
        let gr = &self.roots[g];
        let form = &self.forms[g];
        // <delta, gamma^vee> = delta . (A gamma^vee)
        let agv: IVec = (0..n).map(|j| (0..n).map(|k| self.cartan_entry(j, k) * gv[k]).sum()).collect();
        let mut coroot = identity_matrix(n);
        let mut root = identity_matrix(n);
        for r in 0..n {
            for j in 0..n {
                coroot[r * n + j] -= gv[r] * form[j];
                root[r * n + j] -= gr[r] * agv[j];
            }
        }
        FiniteWeylElement::from_involution(n, coroot, root)
    }

    pub fn reflection(&self, h: &Hyperplane) -> AffineWeylElement {
        let t: IVec = self.coroots[h.root].iter().map(|c| c * h.level).collect();
        AffineWeylElement::from_parts(t, self.finite_reflection(h.root))
    }

    pub fn half_apartment(&self, root: usize, level: i64, side: Sign) -> HalfApartment {
        HalfApartment { hyperplane: Hyperplane { root, level }, side }
    }

    /// All elements of the finite Weyl group, identity first, in BFS order.
    pub fn finite_weyl_group(&self) -> &[FiniteWeylElement] {
        self.finite_group.get_or_init(|| self.parabolic_subgroup((1u32 << self.rank) - 1))
    }

    /// Elements of the parabolic subgroup W_T (T a bitmask over simple letters 1..n).
    pub fn parabolic_subgroup(&self, mask: u32) -> Vec<FiniteWeylElement> {
        let id = self.gen(0).finite().identity_like();
        let mut seen = std::collections::HashSet::new();
        seen.insert(id.clone());
        let mut out = vec![id];
        let mut k = 0;
        while k < out.len() {
            for i in 0..self.rank {
                if mask & (1 << i) == 0 {
                    continue;
                }
                let next = out[k].compose(self.gen(i + 1).finite());
                if seen.insert(next.clone()) {
                    out.push(next);
                }
            }
            k += 1;
        }
        out
    }
}

pub(crate) fn unit(n: usize, i: usize) -> IVec {
    let mut v = IVec::from_elem(0, n);
    v[i] = 1;
    v
}

pub(crate) fn identity_matrix(n: usize) -> SmallVec<[i64; 16]> {
    let mut m = SmallVec::from_elem(0, n * n);
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn rational_inverse(a: &[i64], n: usize) -> Vec<Ratio<i64>> {
    let mut m: Vec<Ratio<i64>> = a.iter().map(|&x| Ratio::from_integer(x)).collect();
    let mut inv: Vec<Ratio<i64>> = (0..n * n)
        .map(|k| Ratio::from_integer(if k / n == k % n { 1 } else { 0 }))
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r * n + col] != Ratio::from_integer(0)).expect("singular");
        if piv != col {
            for k in 0..n {
                m.swap(piv * n + k, col * n + k);
                inv.swap(piv * n + k, col * n + k);
            }
        }
        let p = m[col * n + col];
        for k in 0..n {
            m[col * n + k] /= p;
            inv[col * n + k] /= p;
        }
        for r in 0..n {
            if r != col {
                let f = m[r * n + col];
                if f != Ratio::from_integer(0) {
                    for k in 0..n {
                        let (mc, ic) = (m[col * n + k], inv[col * n + k]);
                        m[r * n + k] -= f * mc;
                        inv[r * n + k] -= f * ic;
                    }
                }
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        for (name, count) in [("A1", 1), ("A2", 3), ("C2", 4), ("B2", 4), ("G2", 6), ("A3", 6), ("A4", 10), ("D4", 12), ("F4", 24), ("E6", 36)] {
            assert_eq!(rs(name).num_positive_roots(), count, "{name}");
        }
    }

    #[test]
    fn a2_pairings() {
        let r = rs("A2");
        assert_eq!(r.pairing(&[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(r.pairing(&[1, 1], &[2, 2]).unwrap(), 4);
        assert_eq!(r.highest_root().as_slice(), &[1, 1]);
    }

    #[test]
    fn root_pairs_with_own_coroot_to_two() {
        for name in ["A3", "B3", "C3", "G2", "F4", "D5"] {
            let r = rs(name);
            for g in 0..r.num_positive_roots() {
                assert_eq!(r.pairing(r.root(g), r.coroot(g)).unwrap(), 2, "{name} root {g}");
            }
        }
    }

    #[test]
    fn simple_roots_come_first_then_height() {
        let r = rs("G2");
        assert_eq!(r.root(0).as_slice(), &[1, 0]);
        assert_eq!(r.root(1).as_slice(), &[0, 1]);
        let h: Vec<i64> = r.positive_roots().iter().map(|x| x.iter().sum()).collect();
        assert!(h.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(r.highest_root().as_slice(), &[3, 2]);
    }

    #[test]
    fn a2_affine_reflections() {
        let r = rs("A2");
        let h = Hyperplane { root: 1, level: -1 };
        assert_eq!(r.affine_reflect(&h, &[2, 0]).unwrap().as_slice(), &[2, 1]);
        assert_eq!(r.affine_reflect(&h, &[0, -2]).unwrap().as_slice(), &[0, 1]);
    }

    #[test]
    fn dimension_mismatch() {
        let r = rs("A2");
        assert_eq!(r.pairing(&[1, 0, 0], &[0, 1]), Err(Error::DimensionMismatch { expected: 2, got: 3 }));
    }

    #[test]
    fn barycenter_is_interior() {
        for name in ["A2", "C2", "G2", "A4", "F4"] {
            let r = rs(name);
            let b = r.alcove_barycenter();
            for g in 0..r.num_positive_roots() {
                let v = r.pairing_rational(r.root(g), b).unwrap();
                assert!(v > Ratio::from_integer(0) && v < Ratio::from_integer(1), "{name}");
            }
        }
    }

    #[test]
    fn unsupported_names() {
        assert!(RootSystem::from_name("A0").is_err());
        assert!(RootSystem::from_name("Z2").is_err());
        assert!(RootSystem::from_name("E8").is_err());
    }
}
