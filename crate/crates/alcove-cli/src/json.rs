//! JSON documents emitted by the CLI, and their conversions to core values.

use std::collections::BTreeMap;

use alcove_core::{
    AffineWeylElement, Chimney, EndSimplex, FaceType, Gallery, GalleryType, Move, QPolynomial, Result, RootSystem,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementJson {
    pub translation: Vec<i64>,
    pub finite_word: Vec<usize>,
}

impl ElementJson {
    pub fn new(rs: &RootSystem, x: &AffineWeylElement) -> Self {
        ElementJson { translation: x.translation().to_vec(), finite_word: rs.finite_word(x.finite()) }
    }

    pub fn to_element(&self, rs: &RootSystem) -> Result<AffineWeylElement> {
        rs.element(&self.translation, &self.finite_word)
    }
}

/// A face of an alcove; `vertex` carries the coweight when the face is a
/// special vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplexJson {
    pub alcove: ElementJson,
    pub face: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<Vec<i64>>,
}

impl SimplexJson {
    pub fn new(rs: &RootSystem, s: &EndSimplex) -> Self {
        SimplexJson {
            alcove: ElementJson::new(rs, &s.rep),
            face: s.face.letters(),
            vertex: s.face.is_vertex(rs.rank()).then(|| s.rep.translation().to_vec()),
        }
    }

    pub fn to_simplex(&self, rs: &RootSystem) -> Result<EndSimplex> {
        let face = FaceType::from_letters(&self.face, rs.rank())?;
        Ok(rs.end_simplex(&self.alcove.to_element(rs)?, face))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowEntry {
    pub simplex: SimplexJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowDoc {
    #[serde(rename = "type")]
    pub cartan_type: String,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub y: ElementJson,
    pub x: ElementJson,
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
    pub shadow: Vec<ShadowEntry>,
}

impl ShadowDoc {
    /// Entries sorted canonically; multiplicities only when given.
    pub fn new<'a, I>(
        rs: &RootSystem,
        chimney: &Chimney,
        x: &AffineWeylElement,
        sigma: FaceType,
        tau: FaceType,
        entries: I,
    ) -> ShadowDoc
    where
        I: IntoIterator<Item = (&'a EndSimplex, Option<usize>)>,
    {
        let mut shadow: Vec<ShadowEntry> = entries
            .into_iter()
            .map(|(s, m)| ShadowEntry { simplex: SimplexJson::new(rs, s), multiplicity: m })
            .collect();
        shadow.sort_by(|a, b| a.simplex.cmp(&b.simplex));
        ShadowDoc {
            cartan_type: rs.cartan_type().to_string(),
            j: chimney.j().letters(),
            y: ElementJson::new(rs, chimney.y()),
            x: ElementJson::new(rs, x),
            sigma: sigma.letters(),
            tau: tau.letters(),
            shadow,
        }
    }

    /// The simplices with their multiplicities, as core values.
    pub fn simplices(&self, rs: &RootSystem) -> Result<BTreeMap<EndSimplex, Option<usize>>> {
        self.shadow.iter().map(|e| Ok((e.simplex.to_simplex(rs)?, e.multiplicity))).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChimneyJson {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub y: ElementJson,
}

impl ChimneyJson {
    pub fn new(rs: &RootSystem, c: &Chimney) -> Self {
        ChimneyJson { j: c.j().letters(), y: ElementJson::new(rs, c.y()) }
    }

    pub fn to_chimney(&self, rs: &RootSystem) -> Result<Chimney> {
        Ok(Chimney::new(rs, FaceType::from_letters(&self.j, rs.rank())?, self.y.to_element(rs)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveJson {
    Cross,
    Fold,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub letter: usize,
    #[serde(rename = "move")]
    pub mv: MoveJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GalleryJson {
    pub start_face: Vec<usize>,
    pub first_alcove: ElementJson,
    pub steps: Vec<StepJson>,
    pub end_face: Vec<usize>,
}

impl GalleryJson {
    pub fn new(rs: &RootSystem, g: &Gallery) -> Self {
        let t = g.gallery_type();
        GalleryJson {
            start_face: t.start.letters(),
            first_alcove: ElementJson::new(rs, g.first_alcove()),
            steps: t
                .word
                .iter()
                .zip(g.moves())
                .map(|(&letter, m)| StepJson {
                    letter,
                    mv: match m {
                        Move::Cross => MoveJson::Cross,
                        Move::Fold => MoveJson::Fold,
                    },
                })
                .collect(),
            end_face: t.end.letters(),
        }
    }

    pub fn to_gallery(&self, rs: &RootSystem) -> Result<Gallery> {
        let n = rs.rank();
        let gtype = GalleryType {
            start: FaceType::from_letters(&self.start_face, n)?,
            word: self.steps.iter().map(|s| s.letter).collect(),
            end: FaceType::from_letters(&self.end_face, n)?,
        };
        let moves = self
            .steps
            .iter()
            .map(|s| match s.mv {
                MoveJson::Cross => Move::Cross,
                MoveJson::Fold => Move::Fold,
            })
            .collect();
        Gallery::new(rs, gtype, self.first_alcove.to_element(rs)?, moves)
    }
}

/// {"count": [c0, c1, ...], "human": "q^2*(q-1)"}
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountDoc {
    pub count: Vec<i64>,
    pub human: String,
}

impl CountDoc {
    pub fn new(p: &QPolynomial) -> Self {
        CountDoc { count: p.coeffs().to_vec(), human: p.human() }
    }

    pub fn polynomial(&self) -> QPolynomial {
        QPolynomial::new(self.count.clone())
    }
}
