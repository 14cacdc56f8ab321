//! Max-plus affine half-spaces
//! `H⁺ = { x : ψ⁺(x) ⊕ a⁺ ≥ ψ⁻(x) ⊕ a⁻ }` and their opposites `H⁻`.

use serde::{Deserialize, Serialize};

use crate::convex_sets::ConvexSet;
use crate::error::{Error, Result};
use crate::linalg::TropVector;
use crate::semiring::{MaxPlus, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

/// A max-plus affine form `ψ(x) ⊕ a`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct AffineForm<T> {
    pub coeffs: TropVector<T>,
    #[serde(rename = "const")]
    pub constant: MaxPlus<T>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct HalfSpace<T> {
    pub plus: AffineForm<T>,
    pub minus: AffineForm<T>,
}

/// `⊕_i coeffs_i ⊙ x_i`.
pub fn eval_form<T: Scalar>(coeffs: &TropVector<T>, x: &TropVector<T>) -> Result<MaxPlus<T>> {
    if coeffs.dim() != x.dim() {
        return Err(Error::DimensionMismatch { expected: coeffs.dim(), found: x.dim() });
    }
    Ok(coeffs.iter().zip(x.iter()).fold(MaxPlus::NegInf, |acc, (&a, &b)| acc + a * b))
}

impl<T: Scalar> AffineForm<T> {
    pub fn new(coeffs: TropVector<T>, constant: MaxPlus<T>) -> Self {
        AffineForm { coeffs, constant }
    }

    pub fn eval(&self, x: &TropVector<T>) -> Result<MaxPlus<T>> {
        Ok(eval_form(&self.coeffs, x)? + self.constant)
    }
}

impl<T: Scalar> HalfSpace<T> {
    pub fn new(plus: AffineForm<T>, minus: AffineForm<T>) -> Result<Self> {
        if plus.coeffs.dim() != minus.coeffs.dim() {
            return Err(Error::DimensionMismatch { expected: plus.coeffs.dim(), found: minus.coeffs.dim() });
        }
        Ok(HalfSpace { plus, minus })
    }

    pub fn dim(&self) -> usize {
        self.plus.coeffs.dim()
    }

    fn holds(side: Side, lhs: MaxPlus<T>, rhs: MaxPlus<T>) -> bool {
        match side {
            Side::Plus => lhs >= rhs,
            Side::Minus => lhs <= rhs,
        }
    }

    pub fn contains(&self, x: &TropVector<T>, side: Side) -> Result<bool> {
        let lhs = self.plus.eval(x)?;
        let rhs = self.minus.eval(x)?;
        Ok(Self::holds(side, lhs, rhs))
    }

    /// Whether the whole set lies on `side`: each point satisfies the affine
    /// inequality and each ray the homogeneous one. This finite check is exact
    /// since the point coefficients of a member are at most 𝟙 and its ray
    /// coefficients are unbounded.
    pub fn contains_set(&self, set: &ConvexSet<T>, side: Side) -> Result<bool> {
        if set.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: set.dim() });
        }
        for p in set.points().columns() {
            if !self.contains(p, side)? {
                return Ok(false);
            }
        }
        for r in set.rays().columns() {
            let lhs = eval_form(&self.plus.coeffs, r)?;
            let rhs = eval_form(&self.minus.coeffs, r)?;
            if !Self::holds(side, lhs, rhs) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: MaxPlus<i64> = MaxPlus::NegInf;

    fn v(xs: &[i64]) -> TropVector<i64> {
        TropVector::from_values(xs.iter().copied())
    }

    /// `x1 ⊕ 1 ⊙ x2 ≥ 0`.
    fn corner() -> HalfSpace<i64> {
        HalfSpace::new(
            AffineForm::new(v(&[0, 1]), Z),
            AffineForm::new(TropVector::zero(2), MaxPlus::Finite(0)),
        )
        .unwrap()
    }

    #[test]
    fn eval_form_examples() {
        assert_eq!(eval_form(&v(&[0, 1]), &v(&[0, -1])).unwrap(), MaxPlus::Finite(0));
        assert_eq!(eval_form(&TropVector::zero(3), &v(&[1, 2, 3])).unwrap(), Z);
        assert_eq!(eval_form(&v(&[0, 0, 0]), &v(&[-4, 7, 2])).unwrap(), MaxPlus::Finite(7));
        assert!(eval_form(&v(&[0]), &v(&[0, 0])).is_err());
    }

    #[test]
    fn contains_examples() {
        let h = corner();
        assert!(h.contains(&v(&[0, -1]), Side::Plus).unwrap());
        assert!(h.contains(&v(&[0, -1]), Side::Minus).unwrap());
        assert!(!h.contains(&v(&[-5, -5]), Side::Plus).unwrap());
        assert!(h.contains(&v(&[-5, -5]), Side::Minus).unwrap());
    }

    #[test]
    fn contains_set_examples() {
        let trivial = HalfSpace::new(AffineForm::new(v(&[0, 0]), Z), AffineForm::new(TropVector::zero(2), Z)).unwrap();
        let staircase = ConvexSet::new(
            2,
            vec![v(&[5, 2]), v(&[4, 0]), v(&[3, 2]), v(&[1, 3]), v(&[2, 5])],
            vec![v(&[0, 1]), v(&[2, 0])],
        )
        .unwrap();
        assert!(trivial.contains_set(&staircase, Side::Plus).unwrap());

        // every point has x2 <= 0 but the ray (0,1) escapes upward
        let below = HalfSpace::new(
            AffineForm::new(TropVector::zero(2), MaxPlus::Finite(0)),
            AffineForm::new(TropVector::new(vec![Z, MaxPlus::Finite(0)]), Z),
        )
        .unwrap();
        let a = ConvexSet::new(2, vec![v(&[0, 0]), v(&[3, -2])], vec![v(&[0, 1])]).unwrap();
        assert!(a.points().columns().iter().all(|p| below.contains(p, Side::Plus).unwrap()));
        assert!(!below.contains_set(&a, Side::Plus).unwrap());

        // x1 ⊕ x2 >= 0 supports staircase from below: min over ext of max coordinate is 3 (c, d), so use a⁻ = 3
        let support = HalfSpace::new(
            AffineForm::new(v(&[0, 0]), Z),
            AffineForm::new(TropVector::zero(2), MaxPlus::Finite(3)),
        )
        .unwrap();
        assert!(support.contains_set(&staircase, Side::Plus).unwrap());
        assert!(!support.contains_set(&staircase, Side::Minus).unwrap());
    }
}
