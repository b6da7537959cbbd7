//! Counting points in intersections of double cosets via positively folded
//! walks: each walk contributes q^{#negative-to-positive crossings} (q-1)^{#folds}.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::chimney::Chimney;
use crate::error::{Error, Result};
use crate::gallery::{Gallery, Move};
use crate::root_system::RootSystem;
use crate::shadow::shadow;
use crate::weyl::{AffineWeylElement, EndSimplex, FaceType, Sign};

/// Polynomial in q with integer coefficients, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial(Vec<i64>);

impl QPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial(coeffs)
    }

    pub fn zero() -> Self {
        QPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        QPolynomial(vec![1])
    }

    /// q^a (q-1)^b
    pub fn monomial(a: usize, b: usize) -> Self {
        let mut p = vec![0i64; a];
        p.push(1);
        let mut out = QPolynomial(p);
        for _ in 0..b {
            out = out * QPolynomial(vec![-1, 1]);
        }
        out
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, q: i64) -> i128 {
        self.0.iter().rev().fold(0i128, |acc, &c| acc * q as i128 + c as i128)
    }
}

impl QPolynomial {
    /// Factored form q^a*(q-1)^b*(rest), e.g. "q^2*(q-1)".
    pub fn human(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let a = self.0.iter().take_while(|&&c| c == 0).count();
        let mut rest = QPolynomial(self.0[a..].to_vec());
        let mut b = 0;
        while rest.degree().unwrap_or(0) > 0 && rest.eval(1) == 0 {
            rest = rest.div_q_minus_one();
            b += 1;
        }
        let mut parts = Vec::new();
        match a {
            0 => {}
            1 => parts.push("q".to_string()),
            _ => parts.push(format!("q^{a}")),
        }
        let lone = a == 0 && rest == QPolynomial::one();
        match b {
            0 => {}
            1 if lone => parts.push("q-1".to_string()),
            1 => parts.push("(q-1)".to_string()),
            _ => parts.push(format!("(q-1)^{b}")),
        }
        if rest != QPolynomial::one() || parts.is_empty() {
            let r = rest.to_string();
            let single = rest.0.iter().filter(|&&c| c != 0).count() == 1 && !r.starts_with('-');
            let r = if parts.is_empty() || single { r } else { format!("({r})") };
            // constants lead, other factors follow the power of q
            let at = if rest.degree() == Some(0) || a == 0 { 0 } else { 1 };
            parts.insert(at, r);
        }
        parts.join("*")
    }

    // exact division by q-1; the caller guarantees p(1) = 0
    fn div_q_minus_one(&self) -> QPolynomial {
        let d = self.0.len() - 1;
        let mut out = vec![0i64; d];
        let mut carry = 0i64;
        for k in (1..=d).rev() {
            carry += self.0[k];
            out[k - 1] = carry;
        }
        QPolynomial::new(out)
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        let n = self.0.len().max(rhs.0.len());
        let c = (0..n)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + rhs.0.get(i).copied().unwrap_or(0))
            .collect();
        QPolynomial::new(c)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut c = vec![0i64; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPolynomial::new(c)
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> QPolynomial {
        iter.fold(QPolynomial::zero(), |a, b| a + b)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let body = match (k, a) {
                (0, _) => a.to_string(),
                (1, 1) => "q".to_string(),
                (1, _) => format!("{a}*q"),
                (_, 1) => format!("q^{k}"),
                _ => format!("{a}*q^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// Crossing and fold counts of a positively folded walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WalkStats {
    /// crossings from the negative to the positive side
    pub up: usize,
    /// crossings from the positive to the negative side
    pub down: usize,
    pub folds: usize,
}

impl WalkStats {
    pub fn monomial(&self) -> QPolynomial {
        QPolynomial::monomial(self.up, self.folds)
    }
}

pub fn walk_stats(rs: &RootSystem, g: &Gallery, chimney: &Chimney) -> Result<WalkStats> {
    if let Some(step) = g.first_negative_fold(rs, chimney) {
        return Err(Error::NotPositivelyFolded { step });
    }
    let alcoves = g.alcoves(rs);
    let mut st = WalkStats::default();
    for (i, m) in g.moves().iter().enumerate() {
        match m {
            Move::Fold => st.folds += 1,
            Move::Cross => match chimney.orientation(rs, &alcoves[i], g.gallery_type().word[i])? {
                Sign::Minus => st.up += 1,
                Sign::Plus => st.down += 1,
            },
        }
    }
    Ok(st)
}

pub fn walk_monomial(rs: &RootSystem, g: &Gallery, chimney: &Chimney) -> Result<QPolynomial> {
    Ok(walk_stats(rs, g, chimney)?.monomial())
}

/// For every end alcove, the sum of monomials over positively folded walks
/// of the given word from the fundamental alcove.
pub fn walk_distribution(rs: &RootSystem, word: &[usize], chimney: &Chimney) -> BTreeMap<AffineWeylElement, QPolynomial> {
    // end alcove -> histogram over (up, folds)
    let mut hist: BTreeMap<AffineWeylElement, BTreeMap<(usize, usize), i64>> = BTreeMap::new();
    walk_from(rs, word, chimney, &rs.identity(), 0, 0, &mut |c, up, folds| {
        *hist.entry(c.clone()).or_default().entry((up, folds)).or_insert(0) += 1;
    });
    hist.into_iter()
        .map(|(c, h)| {
            let p = h.into_iter().map(|((a, b), k)| QPolynomial::monomial(a, b) * QPolynomial(vec![k])).sum();
            (c, p)
        })
        .collect()
}

fn walk_from(
    rs: &RootSystem,
    word: &[usize],
    chimney: &Chimney,
    c: &AffineWeylElement,
    up: usize,
    folds: usize,
    f: &mut dyn FnMut(&AffineWeylElement, usize, usize),
) {
    let Some((&s, rest)) = word.split_first() else {
        f(c, up, folds);
        return;
    };
    let h = rs.act_on_hyperplane(c, &rs.gen_wall(s));
    let next = rs.mul_gen(c, s);
    match chimney.orientation_at(rs, c, &h) {
        Sign::Minus => walk_from(rs, rest, chimney, &next, up + 1, folds, f),
        Sign::Plus => {
            walk_from(rs, rest, chimney, &next, up, folds, f);
            walk_from(rs, rest, chimney, c, up, folds + 1, f);
        }
    }
}

/// Walks of the reduced word of x from the fundamental alcove to z.a.
pub fn count_iwahori(rs: &RootSystem, x: &AffineWeylElement, z: &AffineWeylElement, chimney: &Chimney) -> QPolynomial {
    let word = rs.reduced_word(x);
    count_word(rs, &word, chimney, |c| c == z)
}

fn count_word<F: Fn(&AffineWeylElement) -> bool>(rs: &RootSystem, word: &[usize], chimney: &Chimney, accept: F) -> QPolynomial {
    let mut hist: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    walk_from(rs, word, chimney, &rs.identity(), 0, 0, &mut |c, up, folds| {
        if accept(c) {
            *hist.entry((up, folds)).or_insert(0) += 1;
        }
    });
    hist.into_iter().map(|((a, b), k)| QPolynomial::monomial(a, b) * QPolynomial(vec![k])).sum()
}

/// Sum over w in W_sigma of the walks of type (reduced word of w)(reduced word
/// of x) from the fundamental alcove ending in an alcove that contains z.tau.
pub fn count_parahoric(
    rs: &RootSystem,
    sigma: FaceType,
    tau: FaceType,
    x: &AffineWeylElement,
    z: &AffineWeylElement,
    chimney: &Chimney,
) -> Result<QPolynomial> {
    if !rs.is_reduced(x, sigma, tau) {
        let m = rs.min_coset_rep(x, sigma, tau);
        return Err(Error::NotReduced { suggested: rs.reduced_word(&m) });
    }
    let target = rs.end_simplex(z, tau);
    let xw = rs.reduced_word(x);
    let id = rs.identity();
    Ok(rs
        .parabolic_subgroup(sigma.mask())
        .into_iter()
        .map(|w| {
            let mut word = rs.reduced_word(&AffineWeylElement::from_parts(id.translation().clone(), w));
            word.extend_from_slice(&xw);
            count_word(rs, &word, chimney, |c| rs.end_simplex(c, tau) == target)
        })
        .sum())
}

/// `count_parahoric` for every z at once, keyed by the end simplex z.tau.
/// Simplices absent from the map have count zero.
pub fn parahoric_distribution(
    rs: &RootSystem,
    sigma: FaceType,
    tau: FaceType,
    x: &AffineWeylElement,
    chimney: &Chimney,
) -> Result<BTreeMap<EndSimplex, QPolynomial>> {
    if !rs.is_reduced(x, sigma, tau) {
        let m = rs.min_coset_rep(x, sigma, tau);
        return Err(Error::NotReduced { suggested: rs.reduced_word(&m) });
    }
    let xw = rs.reduced_word(x);
    let id = rs.identity();
    let mut out: BTreeMap<EndSimplex, QPolynomial> = BTreeMap::new();
    for w in rs.parabolic_subgroup(sigma.mask()) {
        let mut word = rs.reduced_word(&AffineWeylElement::from_parts(id.translation().clone(), w));
        word.extend_from_slice(&xw);
        for (c, p) in walk_distribution(rs, &word, chimney) {
            let e = out.entry(rs.end_simplex(&c, tau)).or_default();
            *e = std::mem::take(e) + p;
        }
    }
    Ok(out)
}

/// Walks of type (reduced word of w)(reduced word of x_lambda), w in W_0,
/// ending in the star of mu.
pub fn count_grassmannian(rs: &RootSystem, lambda: &[i64], mu: &[i64], chimney: &Chimney) -> Result<QPolynomial> {
    rs.check_dim(lambda.len())?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant);
    }
    let v = FaceType::vertex(rs.rank());
    let x = rs.x_lambda(lambda)?;
    count_parahoric(rs, v, v, &x, &rs.translation(mu)?, chimney)
}

/// Whether z.tau lies in the shadow of x.
pub fn nonempty(
    rs: &RootSystem,
    sigma: FaceType,
    tau: FaceType,
    x: &AffineWeylElement,
    z: &AffineWeylElement,
    chimney: &Chimney,
) -> Result<bool> {
    Ok(shadow(rs, x, sigma, tau, chimney)?.contains(&rs.end_simplex(z, tau)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_display() {
        assert_eq!(QPolynomial::monomial(0, 1).to_string(), "q-1");
        assert_eq!(QPolynomial::monomial(2, 1).to_string(), "q^3-q^2");
        assert_eq!(QPolynomial::new(vec![1, 0, 0]).to_string(), "1");
        assert_eq!(QPolynomial::new(vec![0, 0]).coeffs(), &[] as &[i64]);
        assert_eq!(QPolynomial::new(vec![-1, 2, 3]).to_string(), "3*q^2+2*q-1");
    }

    #[test]
    fn polynomial_human_form() {
        assert_eq!(QPolynomial::monomial(2, 1).human(), "q^2*(q-1)");
        assert_eq!(QPolynomial::monomial(0, 1).human(), "q-1");
        assert_eq!(QPolynomial::monomial(1, 0).human(), "q");
        assert_eq!(QPolynomial::one().human(), "1");
        assert_eq!(QPolynomial::zero().human(), "0");
        assert_eq!(QPolynomial::monomial(0, 2).human(), "(q-1)^2");
        assert_eq!(QPolynomial::new(vec![3]).human(), "3");
        assert_eq!(QPolynomial::new(vec![0, 2]).human(), "2*q");
        // 2q^2 - 2q = 2q(q-1)
        assert_eq!(QPolynomial::new(vec![0, -2, 2]).human(), "2*q*(q-1)");
        assert_eq!(QPolynomial::new(vec![1, 1]).human(), "q+1");
        assert_eq!(QPolynomial::new(vec![0, 1, 1]).human(), "q*(q+1)");
    }

    #[test]
    fn polynomial_eval() {
        assert_eq!(QPolynomial::monomial(2, 1).eval(3), 18);
    }

    #[test]
    fn length_one_cases() {
        let rs = RootSystem::from_name("A2").unwrap();
        let s1 = rs.from_word(&[1]).unwrap();
        let id = rs.identity();
        let empty = Chimney::new(&rs, FaceType::alcove(), id.clone());
        assert_eq!(count_iwahori(&rs, &s1, &s1, &empty), QPolynomial::one());
        assert_eq!(count_iwahori(&rs, &s1, &id, &empty), QPolynomial::monomial(0, 1));
        let j1 = Chimney::new(&rs, FaceType::from_letters(&[1], 2).unwrap(), id);
        assert_eq!(count_iwahori(&rs, &s1, &s1, &j1), QPolynomial::monomial(1, 0));
    }

    #[test]
    fn grassmannian_rejects_non_dominant() {
        let rs = RootSystem::from_name("A2").unwrap();
        let c = Chimney::alcove(&rs, rs.identity());
        assert_eq!(count_grassmannian(&rs, &[1, -1], &[0, 0], &c), Err(Error::NotDominant));
    }
}
