//! JSON documents read and written by the CLI.
//!
//! Scalars are numbers, with 𝟘 written as the string `"-inf"`. Every output
//! document deserializes back into an equal value.

use maxplus_convex::{AffineForm, ConeF64, ConvexSetF64, HalfSpaceF64, MaxPlusF64, Term, VectorF64};
use serde::{Deserialize, Serialize};

pub type Coords = Vec<MaxPlusF64>;

/// `{"generators": [[...], ...]}`. `dim` is only needed (and only written)
/// when the generator list is empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeDoc {
    pub generators: Vec<Coords>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
}

/// `{"points": [[...], ...], "rays": [[...], ...]}`; `rays` may be omitted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetDoc {
    pub points: Vec<Coords>,
    #[serde(default)]
    pub rays: Vec<Coords>,
}

/// `{"coeffs": [...], "const": c}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormDoc {
    pub coeffs: Coords,
    #[serde(rename = "const")]
    pub constant: MaxPlusF64,
}

/// `{"plus": {...}, "minus": {...}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfSpaceDoc {
    pub plus: FormDoc,
    pub minus: FormDoc,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub index: usize,
    pub coeff: MaxPlusF64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MemberDoc {
    pub member: bool,
    pub projection: Coords,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConeDecompositionDoc {
    pub terms: Vec<TermDoc>,
    pub basis: Vec<Coords>,
    pub target: Coords,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SetDecompositionDoc {
    pub point_terms: Vec<TermDoc>,
    pub ray_terms: Vec<TermDoc>,
    pub extreme_points: Vec<Coords>,
    pub recession_rays: Vec<Coords>,
    pub target: Coords,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremePointsDoc {
    pub extreme_points: Vec<Coords>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinkowskiVerifyDoc {
    pub holds: bool,
    pub set_in_representation: bool,
    pub representation_in_set: bool,
    pub extreme_points: Vec<Coords>,
    pub recession_rays: Vec<Coords>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfSpaceCheckDoc {
    pub side: maxplus_convex::Side,
    pub subject: String,
    pub contains: bool,
}

/// Printed with exit code 2 when a decomposition is requested for a
/// non-member.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NotMemberDoc {
    pub error: String,
    pub projection: Coords,
}

pub fn coords(v: &VectorF64) -> Coords {
    v.coords().to_vec()
}

pub fn coords_list(vs: &[VectorF64]) -> Vec<Coords> {
    vs.iter().map(coords).collect()
}

pub fn terms(ts: &[Term<f64>]) -> Vec<TermDoc> {
    ts.iter().map(|t| TermDoc { index: t.index, coeff: t.coeff }).collect()
}

fn check_dims(what: &str, field: &str, list: &[Coords], dim: usize) -> Result<(), String> {
    for (i, v) in list.iter().enumerate() {
        if v.len() != dim {
            return Err(format!("{what}: {field}[{i}] has dimension {}, expected {dim}", v.len()));
        }
    }
    Ok(())
}

impl ConeDoc {
    pub fn from_cone(c: &ConeF64) -> Self {
        let generators = coords_list(c.generators().columns());
        let dim = generators.is_empty().then(|| c.dim());
        ConeDoc { generators, dim }
    }

    pub fn to_cone(&self, what: &str) -> Result<ConeF64, String> {
        let dim = match (self.generators.first(), self.dim) {
            (Some(g), _) => g.len(),
            (None, Some(d)) => d,
            (None, None) => return Err(format!("{what}: generators is empty and no dim is given")),
        };
        if dim == 0 {
            return Err(format!("{what}: generators must have at least one coordinate"));
        }
        if let Some(d) = self.dim {
            if d != dim {
                return Err(format!("{what}: dim is {d} but generators[0] has dimension {dim}"));
            }
        }
        check_dims(what, "generators", &self.generators, dim)?;
        ConeF64::new(dim, self.generators.iter().cloned().map(VectorF64::new).collect()).map_err(|e| format!("{what}: {e}"))
    }
}

impl SetDoc {
    pub fn from_set(s: &ConvexSetF64) -> Self {
        SetDoc { points: coords_list(s.points().columns()), rays: coords_list(s.rays().columns()) }
    }

    pub fn to_set(&self, what: &str) -> Result<ConvexSetF64, String> {
        let dim = self.points.first().map(Vec::len).ok_or_else(|| format!("{what}: points must not be empty"))?;
        if dim == 0 {
            return Err(format!("{what}: points must have at least one coordinate"));
        }
        check_dims(what, "points", &self.points, dim)?;
        check_dims(what, "rays", &self.rays, dim)?;
        ConvexSetF64::new(
            dim,
            self.points.iter().cloned().map(VectorF64::new).collect(),
            self.rays.iter().cloned().map(VectorF64::new).collect(),
        )
        .map_err(|e| format!("{what}: {e}"))
    }
}

impl HalfSpaceDoc {
    pub fn to_halfspace(&self, what: &str) -> Result<HalfSpaceF64, String> {
        let (p, m) = (self.plus.coeffs.len(), self.minus.coeffs.len());
        if p == 0 {
            return Err(format!("{what}: plus.coeffs must not be empty"));
        }
        if p != m {
            return Err(format!("{what}: minus.coeffs has dimension {m}, expected {p}"));
        }
        HalfSpaceF64::new(
            AffineForm::new(VectorF64::new(self.plus.coeffs.clone()), self.plus.constant),
            AffineForm::new(VectorF64::new(self.minus.coeffs.clone()), self.minus.constant),
        )
        .map_err(|e| format!("{what}: {e}"))
    }
}
