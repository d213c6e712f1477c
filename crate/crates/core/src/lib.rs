//! Exact geometry of the cevian map `M = T_P . K^-1 . T_P'` of a triangle,
//! the cubic locus of points where it is a half-turn, and the synthetic
//! circle construction that sweeps that locus.

pub mod construct;
pub mod error;
pub mod field;
pub mod linalg;
pub mod locus;
pub mod poly;
pub mod projective;
pub mod triangle;

pub use construct::{LocusSample, Orientation, Scene};
pub use error::{Error, Result};
pub use field::Scalar;
pub use linalg::{Mat3, Vec3};
pub use locus::{CurvePoint, Order, WeierstrassLikePoint};
pub use projective::{AffMap, Conic, DilatationClass, PLine, PPoint};
pub use triangle::{Check, HalfTurnReport, TriangleConfig};
