//! Finitely generated max-plus cones.
//!
//! A cone is stored by its generators. Membership goes through the canonical
//! projection: `x ∈ cone(G)` iff the greatest element of the cone below `x`
//! is `x` itself.
//!
//! Every extreme ray of a finitely generated cone passes through one of its
//! generators, so the extreme rays are found by normalizing the generators,
//! dropping duplicates, and discarding those that lie in the cone spanned by
//! the rest. What remains is the unique basis of the cone.

use log::warn;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{TropMatrix, TropVector};
use crate::semiring::{MaxPlus, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Cone<T> {
    generators: TropMatrix<T>,
    normalized: bool,
    tolerance: T,
}

/// One term `coeff ⊙ generators[index]` of a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(bound = "T: Scalar")]
pub struct Term<T> {
    pub index: usize,
    pub coeff: MaxPlus<T>,
}

/// Certificate that `target` is a sum of at most `n` extreme generators.
///
/// Indices refer to `basis`, the normalized basis of the decomposed cone.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeDecomposition<T> {
    pub basis: Vec<TropVector<T>>,
    pub terms: Vec<Term<T>>,
    pub target: TropVector<T>,
}

impl<T: Scalar> ConeDecomposition<T> {
    pub fn recombine(&self) -> TropVector<T> {
        self.terms.iter().fold(TropVector::zero(self.target.dim()), |acc, t| {
            acc.oplus(&self.basis[t.index].scale(t.coeff)).expect("basis dimension")
        })
    }
}

impl<T: Scalar> Cone<T> {
    /// Builds `cone(columns)`. 𝟘 generators are dropped.
    pub fn new(dim: usize, columns: Vec<TropVector<T>>) -> Result<Self> {
        let total = columns.len();
        let kept: Vec<_> = columns.into_iter().filter(|c| !c.is_zero()).collect();
        if kept.len() < total {
            warn!("dropped {} zero generator(s) from cone", total - kept.len());
        }
        Ok(Cone { generators: TropMatrix::new(dim, kept)?, normalized: false, tolerance: T::zero() })
    }

    pub fn from_matrix(m: TropMatrix<T>) -> Result<Self> {
        let dim = m.dim();
        Self::new(dim, m.into_columns())
    }

    /// The trivial cone `{𝟘}`.
    pub fn trivial(dim: usize) -> Self {
        Cone { generators: TropMatrix::empty(dim), normalized: true, tolerance: T::zero() }
    }

    /// Absolute tolerance used in final equality checks (default 0: exact).
    pub fn with_tolerance(mut self, tol: T) -> Self {
        self.tolerance = tol;
        self
    }

    pub fn tolerance(&self) -> T {
        self.tolerance
    }

    pub fn dim(&self) -> usize {
        self.generators.dim()
    }

    pub fn generators(&self) -> &TropMatrix<T> {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether the generators are known to be the normalized basis.
    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn project(&self, x: &TropVector<T>) -> Result<TropVector<T>> {
        self.generators.project(x)
    }

    pub fn member(&self, x: &TropVector<T>) -> Result<bool> {
        Ok(self.project(x)?.approx_eq(x, self.tolerance))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_cone(&self, other: &Cone<T>) -> Result<bool> {
        for g in other.generators.columns() {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mutual generator containment.
    pub fn same_cone(&self, other: &Cone<T>) -> Result<bool> {
        Ok(self.contains_cone(other)? && other.contains_cone(self)?)
    }

    fn same_ray(&self, a: &TropVector<T>, b: &TropVector<T>) -> bool {
        match (a.normalized(), b.normalized()) {
            (Some(a), Some(b)) => a.approx_eq(&b, self.tolerance),
            _ => false,
        }
    }

    /// Whether generator `k` spans an extreme ray: it is not in the cone of
    /// the generators off its own ray.
    pub fn is_extreme_generator(&self, k: usize) -> Result<bool> {
        let len = self.len();
        if k >= len {
            return Err(Error::IndexOutOfRange { index: k, len });
        }
        let g = self.generators.column(k);
        let others: Vec<TropVector<T>> = self
            .generators
            .columns()
            .iter()
            .enumerate()
            .filter(|&(j, h)| j != k && !self.same_ray(g, h))
            .map(|(_, h)| h.clone())
            .collect();
        let rest = TropMatrix::new(self.dim(), others)?;
        Ok(!rest.project(g)?.approx_eq(g, self.tolerance))
    }

    /// The normalized basis: one generator per extreme ray, each shifted so
    /// its largest coordinate is 𝟙, sorted lexicographically.
    pub fn extract_basis(&self) -> Cone<T> {
        if self.normalized {
            return self.clone();
        }
        let tol = self.tolerance;
        let mut rays: Vec<TropVector<T>> = self.generators.columns().iter().filter_map(TropVector::normalized).collect();
        rays.sort_by(|a, b| a.lex_cmp(b));
        rays.dedup_by(|a, b| a.approx_eq(b, tol));

        let candidates = TropMatrix::new(self.dim(), rays).expect("dimension preserved");
        let basis: Vec<TropVector<T>> = (0..candidates.len())
            .filter(|&k| {
                let g = candidates.column(k);
                !candidates.without(k).project(g).expect("dimension preserved").approx_eq(g, tol)
            })
            .map(|k| candidates.column(k).clone())
            .collect();
        Cone {
            generators: TropMatrix::new(self.dim(), basis).expect("dimension preserved"),
            normalized: true,
            tolerance: tol,
        }
    }

    /// Writes `x` as a sum of at most `n` scaled basis generators.
    ///
    /// For each finite coordinate `i` of `x`, picks among the maximally scaled
    /// basis generators reaching `x_i` one that is minimal in the pointwise
    /// order, breaking ties by basis index. Terms made redundant by the others
    /// are then dropped.
    pub fn decompose(&self, x: &TropVector<T>) -> Result<ConeDecomposition<T>> {
        let basis = self.extract_basis();
        let tol = self.tolerance;
        let gens = basis.generators();
        let lambda: Vec<MaxPlus<T>> = gens.left_residual(x)?.into_iter().map(|r| r.clamp()).collect();
        let scaled: Vec<TropVector<T>> = gens.columns().iter().zip(&lambda).map(|(g, &l)| g.scale(l)).collect();

        let projection = gens.combine(&lambda)?;
        if !projection.approx_eq(x, tol) {
            return Err(Error::NotMember);
        }

        let mut chosen: Vec<usize> = Vec::new();
        for i in x.support() {
            let reach: Vec<usize> = (0..scaled.len())
                .filter(|&k| !lambda[k].is_zero() && scaled[k][i].approx_eq(x[i], tol))
                .collect();
            let pick = reach
                .iter()
                .copied()
                .find(|&k| !reach.iter().any(|&j| j != k && strictly_below(&scaled[j], &scaled[k], tol)))
                .ok_or_else(|| Error::Internal(format!("coordinate {i} not covered")))?;
            if !chosen.contains(&pick) {
                chosen.push(pick);
            }
        }
        chosen.sort_unstable();

        // Drop terms the others already cover, in index order.
        let mut k = 0;
        while k < chosen.len() {
            let covered = x.support().into_iter().all(|i| {
                chosen.iter().enumerate().any(|(pos, &j)| pos != k && scaled[j][i].approx_eq(x[i], tol))
            });
            if covered {
                chosen.remove(k);
            } else {
                k += 1;
            }
        }

        let decomposition = ConeDecomposition {
            terms: chosen.into_iter().map(|k| Term { index: k, coeff: lambda[k] }).collect(),
            basis: gens.columns().to_vec(),
            target: x.clone(),
        };
        debug_assert!(decomposition.terms.len() <= x.dim());
        Ok(decomposition)
    }
}

fn strictly_below<T: Scalar>(a: &TropVector<T>, b: &TropVector<T>, tol: T) -> bool {
    a.leq_tol(b, tol) && !a.approx_eq(b, tol)
}

/// Set equality of two basis lists, independent of order.
pub fn same_generator_set<T: Scalar>(a: &[TropVector<T>], b: &[TropVector<T>], tol: T) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| x.lex_cmp(y));
    b.sort_by(|x, y| x.lex_cmp(y));
    a.dedup_by(|x, y| x.approx_eq(y, tol));
    b.dedup_by(|x, y| x.approx_eq(y, tol));
    a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| x.approx_eq(y, tol))
}
