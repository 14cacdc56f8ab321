//! Vectors and generator matrices over the max-plus semiring.

use std::cmp::Ordering;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semiring::{MaxPlus, Residual, Scalar};

/// A vector in `(R ∪ {-inf})^n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
#[serde(bound = "T: Scalar")]
pub struct TropVector<T> {
    coords: Vec<MaxPlus<T>>,
}

impl<T: Scalar> TropVector<T> {
    pub fn new(coords: Vec<MaxPlus<T>>) -> Self {
        TropVector { coords }
    }

    /// All-finite vector.
    pub fn from_values<I: IntoIterator<Item = T>>(values: I) -> Self {
        TropVector { coords: values.into_iter().map(MaxPlus::Finite).collect() }
    }

    /// The 𝟘 vector of dimension `n`.
    pub fn zero(n: usize) -> Self {
        TropVector { coords: vec![MaxPlus::NegInf; n] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[MaxPlus<T>] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<MaxPlus<T>> {
        self.coords
    }

    pub fn iter(&self) -> std::slice::Iter<'_, MaxPlus<T>> {
        self.coords.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(MaxPlus::is_zero)
    }

    /// Indices of the non-𝟘 coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.coords[i].is_zero()).collect()
    }

    pub fn max_coord(&self) -> MaxPlus<T> {
        self.coords.iter().fold(MaxPlus::NegInf, |acc, &c| acc + c)
    }

    /// `λ ⊙ self`.
    pub fn scale(&self, lambda: MaxPlus<T>) -> Self {
        TropVector { coords: self.coords.iter().map(|&c| lambda * c).collect() }
    }

    /// Pointwise maximum.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(TropVector {
            coords: self.coords.iter().zip(&other.coords).map(|(&a, &b)| a + b).collect(),
        })
    }

    /// Pointwise order.
    pub fn leq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    /// Pointwise order with slack `tol` on finite coordinates.
    pub fn leq_tol(&self, other: &Self, tol: T) -> bool {
        self.dim() == other.dim()
            && self.coords.iter().zip(&other.coords).all(|(&a, &b)| match (a, b) {
                (MaxPlus::NegInf, _) => true,
                (MaxPlus::Finite(_), MaxPlus::NegInf) => false,
                (MaxPlus::Finite(a), MaxPlus::Finite(b)) => a <= b + tol,
            })
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.dim() == other.dim()
            && self.coords.iter().zip(&other.coords).all(|(&a, &b)| a.approx_eq(b, tol))
    }

    /// Shifts the vector so its largest coordinate is 𝟙. `None` for 𝟘.
    pub fn normalized(&self) -> Option<Self> {
        let m = self.max_coord().inverse()?;
        Some(self.scale(m))
    }

    /// Appends one coordinate.
    pub fn lift(&self, last: MaxPlus<T>) -> Self {
        let mut coords = self.coords.clone();
        coords.push(last);
        TropVector { coords }
    }

    /// Splits off the last coordinate.
    pub fn split_last(&self) -> Option<(Self, MaxPlus<T>)> {
        let (last, head) = self.coords.split_last()?;
        Some((TropVector { coords: head.to_vec() }, *last))
    }

    /// Lexicographic order, 𝟘 below every finite value.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.total_cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.dim().cmp(&other.dim())
    }

    pub fn to_f64(&self) -> TropVector<f64> {
        TropVector { coords: self.coords.iter().map(|c| MaxPlus::from_f64(c.to_f64()).unwrap_or(MaxPlus::NegInf)).collect() }
    }
}

impl<T> Index<usize> for TropVector<T> {
    type Output = MaxPlus<T>;

    fn index(&self, i: usize) -> &MaxPlus<T> {
        &self.coords[i]
    }
}

impl<T: Scalar> From<Vec<MaxPlus<T>>> for TropVector<T> {
    fn from(coords: Vec<MaxPlus<T>>) -> Self {
        TropVector { coords }
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// A list of generators of common dimension, read as the columns of a matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct TropMatrix<T> {
    dim: usize,
    columns: Vec<TropVector<T>>,
}

impl<T: Scalar> TropMatrix<T> {
    pub fn new(dim: usize, columns: Vec<TropVector<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        for c in &columns {
            check_dim(dim, c.dim())?;
        }
        Ok(TropMatrix { dim, columns })
    }

    /// Infers the dimension from the first column.
    pub fn from_columns(columns: Vec<TropVector<T>>) -> Result<Self> {
        let dim = columns.first().map(TropVector::dim).ok_or(Error::EmptyDimension)?;
        Self::new(dim, columns)
    }

    pub fn empty(dim: usize) -> Self {
        TropMatrix { dim, columns: Vec::new() }
    }

    /// Number of rows (ambient dimension).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of columns (generators).
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn columns(&self) -> &[TropVector<T>] {
        &self.columns
    }

    pub fn column(&self, k: usize) -> &TropVector<T> {
        &self.columns[k]
    }

    pub fn into_columns(self) -> Vec<TropVector<T>> {
        self.columns
    }

    /// `⊕_k λ_k ⊙ M[:,k]`.
    pub fn combine(&self, lambda: &[MaxPlus<T>]) -> Result<TropVector<T>> {
        check_dim(self.len(), lambda.len())?;
        let mut out = vec![MaxPlus::NegInf; self.dim];
        for (col, &l) in self.columns.iter().zip(lambda) {
            if l.is_zero() {
                continue;
            }
            for (o, &c) in out.iter_mut().zip(col.iter()) {
                *o = *o + l * c;
            }
        }
        Ok(TropVector::new(out))
    }

    /// For each column, the greatest `λ` with `λ ⊙ M[:,k] ≤ x`.
    /// `+inf` exactly for 𝟘 columns.
    pub fn left_residual(&self, x: &TropVector<T>) -> Result<Vec<Residual<T>>> {
        check_dim(self.dim, x.dim())?;
        Ok(self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .zip(x.iter())
                    .fold(Residual::PosInf, |acc, (&m, &xi)| acc.min(MaxPlus::residual(xi, m)))
            })
            .collect())
    }

    /// Greatest element of `cone(M)` below `x`.
    pub fn project(&self, x: &TropVector<T>) -> Result<TropVector<T>> {
        let lambda: Vec<MaxPlus<T>> = self.left_residual(x)?.into_iter().map(Residual::clamp).collect();
        self.combine(&lambda)
    }

    /// Same matrix with column `k` removed.
    pub fn without(&self, k: usize) -> Self {
        let columns = self
            .columns
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, c)| c.clone())
            .collect();
        TropMatrix { dim: self.dim, columns }
    }

    pub fn push(&mut self, column: TropVector<T>) -> Result<()> {
        check_dim(self.dim, column.dim())?;
        self.columns.push(column);
        Ok(())
    }
}
