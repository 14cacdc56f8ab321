//! Finitely generated max-plus convex sets `A = co(points) ⊕ cone(rays)`.
//!
//! Everything reduces to the homogenized cone in dimension `n + 1`, generated
//! by the lifted points `(p, 𝟙)` and lifted rays `(r, 𝟘)`:
//!
//! - `x ∈ A` iff `(x, 𝟙)` is in that cone;
//! - extreme points of `A` are the basis generators with a finite last
//!   coordinate, rescaled so that coordinate is 𝟙;
//! - basis generators with last coordinate 𝟘 are the extreme rays of `rec(A)`;
//! - decomposing `(x, 𝟙)` in the cone gives at most `n + 1` terms, which split
//!   into a convex combination of extreme points plus extreme rays.

use log::warn;
use serde::Serialize;

use crate::cones::{Cone, Term};
use crate::error::{Error, Result};
use crate::linalg::{TropMatrix, TropVector};
use crate::semiring::{MaxPlus, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct ConvexSet<T> {
    points: TropMatrix<T>,
    rays: TropMatrix<T>,
    tolerance: T,
}

/// Certificate for `target = (⊕ coeff ⊙ point) ⊕ (⊕ coeff ⊙ ray)` with the
/// point coefficients summing (max-plus) to 𝟙.
///
/// Indices refer to `points` (the sorted extreme points of the set) and
/// `rays` (the recession basis).
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "T: Scalar")]
pub struct SetDecomposition<T> {
    pub points: Vec<TropVector<T>>,
    pub rays: Vec<TropVector<T>>,
    pub point_terms: Vec<Term<T>>,
    pub ray_terms: Vec<Term<T>>,
    pub target: TropVector<T>,
}

impl<T: Scalar> SetDecomposition<T> {
    pub fn recombine(&self) -> TropVector<T> {
        let zero = TropVector::zero(self.target.dim());
        let from_points = self.point_terms.iter().map(|t| self.points[t.index].scale(t.coeff));
        let from_rays = self.ray_terms.iter().map(|t| self.rays[t.index].scale(t.coeff));
        from_points.chain(from_rays).fold(zero, |acc, v| acc.oplus(&v).expect("dimension"))
    }

    /// Max-plus sum of the point coefficients; 𝟙 for a valid certificate.
    pub fn point_weight(&self) -> MaxPlus<T> {
        self.point_terms.iter().fold(MaxPlus::NegInf, |acc, t| acc + t.coeff)
    }

    pub fn len(&self) -> usize {
        self.point_terms.len() + self.ray_terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl<T: Scalar> ConvexSet<T> {
    /// Builds `co(points) ⊕ cone(rays)`. Needs at least one point; 𝟘 rays are
    /// dropped.
    pub fn new(dim: usize, points: Vec<TropVector<T>>, rays: Vec<TropVector<T>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointList);
        }
        let total = rays.len();
        let rays: Vec<_> = rays.into_iter().filter(|r| !r.is_zero()).collect();
        if rays.len() < total {
            warn!("dropped {} zero ray(s) from convex set", total - rays.len());
        }
        Ok(ConvexSet {
            points: TropMatrix::new(dim, points)?,
            rays: TropMatrix::new(dim, rays)?,
            tolerance: T::zero(),
        })
    }

    /// A polytope: no rays.
    pub fn hull(dim: usize, points: Vec<TropVector<T>>) -> Result<Self> {
        Self::new(dim, points, Vec::new())
    }

    pub fn with_tolerance(mut self, tol: T) -> Self {
        self.tolerance = tol;
        self
    }

    pub fn tolerance(&self) -> T {
        self.tolerance
    }

    pub fn dim(&self) -> usize {
        self.points.dim()
    }

    pub fn points(&self) -> &TropMatrix<T> {
        &self.points
    }

    pub fn rays(&self) -> &TropMatrix<T> {
        &self.rays
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    fn check_dim(&self, x: &TropVector<T>) -> Result<()> {
        if x.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), found: x.dim() })
        }
    }

    /// Cone in dimension `n + 1` generated by `(p, 𝟙)` and `(r, 𝟘)`; the
    /// closure of the homogenization of the set.
    pub fn homogenize(&self) -> Cone<T> {
        let lifted_points = self.points.columns().iter().map(|p| p.lift(MaxPlus::one()));
        let lifted_rays = self.rays.columns().iter().map(|r| r.lift(MaxPlus::NegInf));
        Cone::new(self.dim() + 1, lifted_points.chain(lifted_rays).collect())
            .expect("lifted generators share dimension")
            .with_tolerance(self.tolerance)
    }

    /// Projection of `(x, 𝟙)` onto the homogenized cone.
    pub fn lifted_projection(&self, x: &TropVector<T>) -> Result<TropVector<T>> {
        self.check_dim(x)?;
        self.homogenize().project(&x.lift(MaxPlus::one()))
    }

    pub fn member(&self, x: &TropVector<T>) -> Result<bool> {
        self.check_dim(x)?;
        self.homogenize().member(&x.lift(MaxPlus::one()))
    }

    /// Extreme points, sorted lexicographically.
    pub fn extreme_points(&self) -> Vec<TropVector<T>> {
        let basis = self.homogenize().extract_basis();
        let mut out: Vec<TropVector<T>> = basis
            .generators()
            .columns()
            .iter()
            .filter_map(|g| {
                let (head, last) = g.split_last()?;
                Some(head.scale(last.inverse()?))
            })
            .collect();
        out.sort_by(|a, b| a.lex_cmp(b));
        out
    }

    /// `rec(A)`, as its normalized basis.
    pub fn recession(&self) -> Cone<T> {
        Cone::new(self.dim(), self.rays.columns().to_vec())
            .expect("rays share dimension")
            .with_tolerance(self.tolerance)
            .extract_basis()
    }

    /// Convex combination of at most `n + 1` extreme points and extreme rays
    /// of `rec(A)` (with at most `n + 1` terms in total) equal to `x`.
    pub fn decompose(&self, x: &TropVector<T>) -> Result<SetDecomposition<T>> {
        self.check_dim(x)?;
        let lifted = self.homogenize().decompose(&x.lift(MaxPlus::one()))?;
        let points = self.extreme_points();
        let rays = self.recession().generators().columns().to_vec();
        let tol = self.tolerance;

        let mut point_terms = Vec::new();
        let mut ray_terms = Vec::new();
        for term in &lifted.terms {
            let (head, last) = lifted.basis[term.index]
                .split_last()
                .ok_or_else(|| Error::Internal("empty lifted generator".into()))?;
            match last.inverse() {
                Some(inv) => {
                    let point = head.scale(inv);
                    let index = position(&points, &point, tol)
                        .ok_or_else(|| Error::Internal("lifted generator is not an extreme point".into()))?;
                    point_terms.push(Term { index, coeff: term.coeff * last });
                }
                None => {
                    let index = position(&rays, &head, tol)
                        .ok_or_else(|| Error::Internal("lifted ray is not in the recession basis".into()))?;
                    ray_terms.push(Term { index, coeff: term.coeff });
                }
            }
        }
        point_terms.sort_by_key(|t| t.index);
        ray_terms.sort_by_key(|t| t.index);
        Ok(SetDecomposition { points, rays, point_terms, ray_terms, target: x.clone() })
    }

    /// `{a ⊕ b : a ∈ self, b ∈ other}`, generated by pairwise maxima of the
    /// points and the union of the rays.
    pub fn minkowski_sum(&self, other: &ConvexSet<T>) -> Result<ConvexSet<T>> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        let mut points = Vec::with_capacity(self.points.len() * other.points.len());
        for p in self.points.columns() {
            for q in other.points.columns() {
                points.push(p.oplus(q)?);
            }
        }
        let rays = self.rays.columns().iter().chain(other.rays.columns()).cloned().collect();
        Ok(ConvexSet::new(self.dim(), points, rays)?.with_tolerance(self.tolerance))
    }

    /// Whether `x` is an extreme point. `x` must be a member.
    pub fn is_extreme(&self, x: &TropVector<T>) -> Result<bool> {
        if !self.member(x)? {
            return Err(Error::NotMember);
        }
        let mut extended = self.clone();
        extended.points.push(x.clone())?;
        Ok(position(&extended.extreme_points(), x, self.tolerance).is_some())
    }

    /// Whether `other ⊆ self`: every point of `other` is in `self` and every
    /// ray of `other` is in `rec(self)`.
    pub fn contains_set(&self, other: &ConvexSet<T>) -> Result<bool> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        for p in other.points.columns() {
            if !self.member(p)? {
                return Ok(false);
            }
        }
        let rec = Cone::new(self.dim(), self.rays.columns().to_vec())?.with_tolerance(self.tolerance);
        for r in other.rays.columns() {
            if !rec.member(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_set(&self, other: &ConvexSet<T>) -> Result<bool> {
        Ok(self.contains_set(other)? && other.contains_set(self)?)
    }

    /// `co(ext(A)) ⊕ rec(A)`, built as the Minkowski sum of the hull of the
    /// extreme points with `co{𝟘} ⊕ rec(A)`.
    pub fn minkowski_representation(&self) -> ConvexSet<T> {
        let hull = ConvexSet::hull(self.dim(), self.extreme_points()).expect("a nonempty set has an extreme point");
        let rec = ConvexSet::new(
            self.dim(),
            vec![TropVector::zero(self.dim())],
            self.recession().generators().columns().to_vec(),
        )
        .expect("dimension preserved");
        hull.minkowski_sum(&rec).expect("dimension preserved").with_tolerance(self.tolerance)
    }
}

fn position<T: Scalar>(list: &[TropVector<T>], x: &TropVector<T>, tol: T) -> Option<usize> {
    list.iter().position(|v| v.approx_eq(x, tol))
}
