//! Cyclic cubic trinomials `X^3 - aX + b` and the integral points behind them.
//!
//! Points on `x^2 + 27y^2 = 4Dz^3` and `x^2 + 3y^2 = 4Dz^3` are generated from
//! a two-family parametrization of the level-1 curve, moved between levels by
//! the maps in [`level_maps`], and turned into trinomials in [`trinomials`].
//! [`oracle`] re-finds the same points by exhaustive search.

pub mod admissibility;
pub mod arith;
pub mod curve;
pub mod error;
pub mod level_maps;
pub mod oracle;
pub mod parametrization;
pub mod representations;
pub mod trinomials;

pub use admissibility::{classify_d, is_admissible, require_admissible, AdmissibleD, Inadmissible};
pub use curve::{member, Curve, CurvePoint, SetKind};
pub use error::{Error, Result};
pub use level_maps::RaiseSign;
pub use oracle::OracleReport;
pub use parametrization::ParamPair;
pub use representations::{represent_u3v, Representation, RepresentationSet};
pub use trinomials::{Classification, Emission, Emitted, Family, FamilyTag, Provenance, Trinomial};
