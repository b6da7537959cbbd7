//! Shadows of Iwahori and parahoric double cosets in affine buildings,
//! computed combinatorially in the Coxeter complex of an affine Weyl group.

pub mod chimney;
pub mod coset_count;
pub mod error;
pub mod gallery;
pub mod root_system;
pub mod shadow;
pub mod weyl;

pub use chimney::{Chimney, DeepAlcove};
pub use coset_count::{QPolynomial, WalkStats};
pub use gallery::{minimal_gallery, Gallery, GalleryType, Interval, Move};
pub use shadow::{Shadow, TraceStep};

pub use error::{Error, Result};
pub use root_system::{CartanType, Family, IVec, RationalPoint, RootSystem};
pub use weyl::{AffineWeylElement, EndSimplex, FaceType, FiniteWeylElement, HalfApartment, Hyperplane, Sign};
