//! Cross-check sweeps: the shadow recursion against gallery enumeration, and
//! point counts against shadow membership.

use std::collections::BTreeSet;

use alcove_core::coset_count::parahoric_distribution;
use alcove_core::shadow::{shadow, shadow_oracle};
use alcove_core::{AffineWeylElement, Chimney, EndSimplex, FaceType, Result, RootSystem};

#[derive(Debug, Clone, Copy)]
pub struct Sweep {
    pub max_x_len: usize,
    pub max_y_len: usize,
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub x: Vec<usize>,
    pub j: Vec<usize>,
    pub y: Vec<usize>,
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub cases: usize,
    pub mismatches: Vec<(Case, String)>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Every chimney (J, y) with l(y) <= max_y_len, J running over all subsets.
pub fn chimneys(rs: &RootSystem, max_y_len: usize) -> Vec<Chimney> {
    let n = rs.rank();
    let ys = rs.elements_up_to_length(max_y_len);
    let mut out = Vec::new();
    for m in 0..1u32 << n {
        let letters: Vec<usize> = (1..=n).filter(|l| m & (1 << (l - 1)) != 0).collect();
        let j = FaceType::from_letters(&letters, n).expect("letters in range");
        out.extend(ys.iter().map(|y| Chimney::new(rs, j, y.clone())));
    }
    out
}

fn for_each_case<F>(rs: &RootSystem, sweep: &Sweep, mut f: F) -> Result<Report>
where
    F: FnMut(&AffineWeylElement, FaceType, FaceType, &Chimney) -> Result<Option<String>>,
{
    let xs = rs.elements_up_to_length(sweep.max_x_len);
    let faces = [FaceType::vertex(rs.rank()), FaceType::alcove()];
    let mut report = Report::default();
    for c in chimneys(rs, sweep.max_y_len) {
        for x in &xs {
            for sigma in faces {
                for tau in faces {
                    if !rs.is_reduced(x, sigma, tau) {
                        continue;
                    }
                    report.cases += 1;
                    if let Some(why) = f(x, sigma, tau, &c)? {
                        let case = Case {
                            x: rs.reduced_word(x),
                            j: c.j().letters(),
                            y: rs.reduced_word(c.y()),
                            sigma: sigma.letters(),
                            tau: tau.letters(),
                        };
                        report.mismatches.push((case, why));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Recursion and enumeration give the same simplices.
pub fn recursion_vs_oracle(rs: &RootSystem, sweep: &Sweep) -> Result<Report> {
    for_each_case(rs, sweep, |x, sigma, tau, c| {
        let fast = shadow(rs, x, sigma, tau, c)?;
        let slow: BTreeSet<EndSimplex> = shadow_oracle(rs, x, sigma, tau, c, sweep.cap)?.into_keys().collect();
        Ok((fast != slow).then(|| {
            format!("recursion has {} simplices, enumeration {}, {} in common", fast.len(), slow.len(), fast.intersection(&slow).count())
        }))
    })
}

/// A simplex has a nonzero parahoric count iff it lies in the shadow.
pub fn count_vs_membership(rs: &RootSystem, sweep: &Sweep) -> Result<Report> {
    for_each_case(rs, sweep, |x, sigma, tau, c| {
        let sh = shadow(rs, x, sigma, tau, c)?;
        let dist = parahoric_distribution(rs, sigma, tau, x, c)?;
        let support: BTreeSet<EndSimplex> = dist.into_iter().filter(|(_, p)| !p.is_zero()).map(|(s, _)| s).collect();
        Ok((support != sh).then(|| {
            format!(
                "{} simplices with nonzero count outside the shadow, {} shadow simplices with zero count",
                support.difference(&sh).count(),
                sh.difference(&support).count()
            )
        }))
    })
}
