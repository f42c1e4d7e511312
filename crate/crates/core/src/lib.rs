//! Decide membership and equality of wide subcategories of finitely
//! presented modules by computing their classifying supports, move between
//! module-side and derived-side subcategories, and check the classification
//! against a brute-force closure over finite abelian groups.

pub mod base;
pub mod derived;
pub mod error;
pub mod exactarith;
pub mod freemod;
pub mod literal;
pub mod pidoracle;
pub mod polyring;
pub mod spectrum;
pub mod text;
pub mod widelat;

pub use base::BaseRing;
pub use derived::{FreeComplex, ThickSubcat};
pub use error::{Error, Result};
pub use exactarith::{Field, IntMatrix, IntRing, Matrix, Scalar};
pub use freemod::{FPModule, FreeResolution, ModuleMap};
pub use pidoracle::{ClosureReport, FinAbGroup};
pub use polyring::{IdealGB, MonomialOrder, Poly, PolyRing};
pub use spectrum::{ClosedLocus, OrderIdealView, SpecZSet};
pub use widelat::{CoproductWideSubcatZ, Flavor, WideSubcat, ZModuleDescriptor};
