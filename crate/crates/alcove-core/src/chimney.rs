//! Chimneys (J, y), their sectors, and the orientations they induce.

use num_integer::Integer;

use crate::error::Result;
use crate::root_system::{IVec, RootSystem};
use crate::weyl::{AffineWeylElement, FaceType, HalfApartment, Hyperplane, Sign};

/// The chimney xi_{J,y}: for J = all letters this is the alcove y.a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chimney {
    j: FaceType,
    y: AffineWeylElement,
    y_inv: AffineWeylElement,
    // in_j[g]: the positive root g lies in Phi_J
    in_j: Vec<bool>,
}

impl Chimney {
    pub fn new(rs: &RootSystem, j: FaceType, y: AffineWeylElement) -> Chimney {
        let in_j = rs
            .positive_roots()
            .iter()
            .map(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || j.contains(i + 1)))
            .collect();
        Chimney { j, y_inv: y.inverse(), y, in_j }
    }

    pub fn alcove(rs: &RootSystem, y: AffineWeylElement) -> Chimney {
        Chimney::new(rs, FaceType::vertex(rs.rank()), y)
    }

    pub fn j(&self) -> FaceType {
        self.j
    }

    pub fn y(&self) -> &AffineWeylElement {
        &self.y
    }

    pub fn is_alcove(&self, rs: &RootSystem) -> bool {
        self.j.is_vertex(rs.rank())
    }

    /// Membership of a half-apartment, after transporting by y^{-1}.
    pub fn contains(&self, rs: &RootSystem, h: &HalfApartment) -> bool {
        let t = rs.act_on_halfapartment(&self.y_inv, h);
        let k = t.hyperplane.level;
        if self.in_j[t.hyperplane.root] {
            match t.side {
                Sign::Plus => k <= 0,
                Sign::Minus => k >= 1,
            }
        } else {
            t.side == Sign::Minus
        }
    }

    /// The side of H whose half-apartment is not in the chimney.
    pub fn positive_side(&self, rs: &RootSystem, h: &Hyperplane) -> Sign {
        if self.contains(rs, &HalfApartment { hyperplane: *h, side: Sign::Plus }) {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// phi(c, p) for the alcove x.a and its panel of type `letter`.
    pub fn orientation(&self, rs: &RootSystem, x: &AffineWeylElement, letter: usize) -> Result<Sign> {
        let h = rs.wall(x, letter)?;
        Ok(self.orientation_at(rs, x, &h))
    }

    pub(crate) fn orientation_at(&self, rs: &RootSystem, x: &AffineWeylElement, h: &Hyperplane) -> Sign {
        if rs.alcove_side(x, h) == self.positive_side(rs, h) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Half-apartments cutting out the sector S_{J,y}(0).
    pub fn sector(&self, rs: &RootSystem) -> Vec<HalfApartment> {
        let mut out = Vec::new();
        for g in 0..rs.num_positive_roots() {
            let mut push = |level, side| {
                out.push(rs.act_on_halfapartment(&self.y, &rs.half_apartment(g, level, side)));
            };
            if self.in_j[g] {
                push(0, Sign::Plus);
                push(1, Sign::Minus);
            } else {
                push(0, Sign::Minus);
            }
        }
        out
    }

    pub fn sector_contains_alcove(&self, rs: &RootSystem, x: &AffineWeylElement) -> bool {
        self.sector(rs).iter().all(|h| rs.contains_alcove(h, x))
    }

    /// An alcove deep enough in a (J,y)-sector that its orientation agrees
    /// with this chimney on every panel within `radius` of the fundamental alcove.
    pub fn deep_alcove(&self, rs: &RootSystem, radius: usize) -> DeepAlcove {
        self.deep_alcove_deeper(rs, radius, 0)
    }

    /// `deep_alcove` followed by `extra` further periods.
    pub fn deep_alcove_deeper(&self, rs: &RootSystem, radius: usize, extra: usize) -> DeepAlcove {
        if self.is_alcove(rs) {
            let word = rs.reduced_word(&self.y);
            return DeepAlcove {
                crossed: crossed_walls(rs, &word),
                element: self.y.clone(),
                period_word: Vec::new(),
                repetitions: 0,
                word,
            };
        }
        let n = rs.rank();
        // nu = -m * sum_{i not in J} omega_i^vee with m minimal making it integral
        let mut den = 1i64;
        let mut sum: Vec<num_rational::Ratio<i64>> = vec![0.into(); n];
        for i in 0..n {
            if !self.j.contains(i + 1) {
                let w = rs.fundamental_coweight(i);
                for (k, s) in sum.iter_mut().enumerate() {
                    *s -= w.coord(k);
                }
            }
        }
        for s in &sum {
            den = den.lcm(s.denom());
        }
        let nu: IVec = sum.iter().map(|s| (s * den).to_integer()).collect();

        // levels reached by galleries of length `radius`, transported by y^{-1}
        let reach = (radius + rs.length(&self.y) + 1) as i64;
        let reps = (0..rs.num_positive_roots())
            .filter(|&g| !self.in_j[g])
            .map(|g| {
                let d = -rs.eval(g, &nu);
                debug_assert!(d > 0);
                (reach + d - 1) / d
            })
            .max()
            .unwrap_or(1)
            .max(1) as usize
            + extra;
        let period = rs.translation(&nu).expect("rank");
        let shift: IVec = nu.iter().map(|x| x * reps as i64).collect();
        let element = self.y.compose(&rs.translation(&shift).expect("rank"));
        let word = rs.reduced_word(&element);
        DeepAlcove {
            crossed: crossed_walls(rs, &word),
            element,
            period_word: rs.reduced_word(&period),
            repetitions: reps,
            word,
        }
    }
}

fn crossed_walls(rs: &RootSystem, word: &[usize]) -> Vec<Hyperplane> {
    let mut x = rs.identity();
    let mut out = Vec::with_capacity(word.len());
    for &s in word {
        out.push(rs.act_on_hyperplane(&x, &rs.gen_wall(s)));
        x = rs.mul_gen(&x, s);
    }
    out
}

#[derive(Debug, Clone)]
pub struct DeepAlcove {
    pub element: AffineWeylElement,
    /// reduced word of the translation t^nu repeated to go deep
    pub period_word: Vec<usize>,
    pub repetitions: usize,
    /// canonical reduced word of `element`
    pub word: Vec<usize>,
    /// walls crossed along `word`, in order
    pub crossed: Vec<Hyperplane>,
}
