//! Exact max-plus (tropical) convex geometry for finitely generated cones and
//! convex sets.
//!
//! Cones are given by generators, convex sets by `points` and `rays` so that
//! `A = co(points) ⊕ cone(rays)`. The crate computes bases of cones, extreme
//! points and recession cones of sets, and decomposition certificates: every
//! member of a cone in `R_max^n` is a sum of at most `n` extreme generators,
//! and every member of a set is a convex combination of extreme points plus
//! extreme rays with at most `n + 1` terms in total.
//!
//! All types are generic over the finite scalar type ([`Scalar`]); aliases for
//! `f64`, `f32` and exact rationals are provided below.
//!
//! ```
//! use maxplus_convex::{ConvexSetF64, VectorF64};
//!
//! let pts = [[5., 2.], [4., 0.], [3., 2.], [1., 3.], [2., 5.], [4., 1.]];
//! let a = ConvexSetF64::new(
//!     2,
//!     pts.iter().map(|p| VectorF64::from_values(p.iter().copied())).collect(),
//!     vec![VectorF64::from_values([0., 1.]), VectorF64::from_values([2., 0.])],
//! )
//! .unwrap();
//! // (4, 1) is a redundant member
//! assert_eq!(a.extreme_points().len(), 5);
//! let d = a.decompose(&VectorF64::from_values([5., 5.])).unwrap();
//! assert!(d.len() <= 3);
//! assert_eq!(d.recombine(), VectorF64::from_values([5., 5.]));
//! ```

pub mod cones;
pub mod convex_sets;
pub mod error;
pub mod halfspaces;
pub mod linalg;
pub mod semiring;

pub use cones::{same_generator_set, Cone, ConeDecomposition, Term};
pub use convex_sets::{ConvexSet, SetDecomposition};
pub use error::{Error, Result};
pub use halfspaces::{eval_form, AffineForm, HalfSpace, Side};
pub use linalg::{TropMatrix, TropVector};
pub use semiring::{MaxPlus, Residual, Scalar};

pub use num_rational::Rational64;

pub type MaxPlusF64 = MaxPlus<f64>;
pub type VectorF64 = TropVector<f64>;
pub type MatrixF64 = TropMatrix<f64>;
pub type ConeF64 = Cone<f64>;
pub type ConvexSetF64 = ConvexSet<f64>;
pub type HalfSpaceF64 = HalfSpace<f64>;

pub type MaxPlusF32 = MaxPlus<f32>;
pub type VectorF32 = TropVector<f32>;
pub type ConeF32 = Cone<f32>;
pub type ConvexSetF32 = ConvexSet<f32>;

/// Exact rational scalars.
pub type MaxPlusQ = MaxPlus<Rational64>;
pub type VectorQ = TropVector<Rational64>;
pub type MatrixQ = TropMatrix<Rational64>;
pub type ConeQ = Cone<Rational64>;
pub type ConvexSetQ = ConvexSet<Rational64>;
pub type HalfSpaceQ = HalfSpace<Rational64>;
