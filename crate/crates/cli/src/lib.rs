//! `maxplus`: command-line front end for `maxplus-convex`.
//!
//! Exit codes: 0 success, 1 parse or validation failure, 2 mathematical
//! precondition failure (a certificate is printed), 3 failed self-check.

pub mod docs;
pub mod render;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxplus_convex::{ConeF64, ConvexSetF64, Error as CoreError, MaxPlus, Side, VectorF64};
use serde::Serialize;

use docs::*;

#[derive(Debug, Parser)]
#[command(name = "maxplus", version, about = "Max-plus convex sets and cones: bases, extreme points, decompositions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Absolute tolerance for final equality checks (0 = exact).
    #[arg(long, global = true, default_value_t = 0.0)]
    pub tolerance: f64,

    /// Write the output document to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Target {
    /// Convex set file: {"points": [...], "rays": [...]}.
    #[arg(long, value_name = "FILE")]
    pub set: Option<PathBuf>,

    /// Cone file: {"generators": [...]}.
    #[arg(long, value_name = "FILE")]
    pub cone: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Plus,
    Minus,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Plus => Side::Plus,
            SideArg::Minus => Side::Minus,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Membership test with the canonical projection as witness.
    Member {
        #[command(flatten)]
        target: Target,
        /// Query vector as a JSON array, e.g. "[3, \"-inf\"]".
        #[arg(long)]
        x: String,
    },
    /// Normalized basis (one generator per extreme ray) of a cone.
    Basis {
        #[arg(long, value_name = "FILE")]
        cone: PathBuf,
    },
    /// Decomposition certificate for a member of a cone or a set.
    Decompose {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        x: String,
    },
    /// Sorted extreme points of a set.
    ExtremePoints {
        #[arg(long, value_name = "FILE")]
        set: PathBuf,
    },
    /// Basis of the recession cone of a set.
    Recession {
        #[arg(long, value_name = "FILE")]
        set: PathBuf,
    },
    /// Lifted cone generated by (p, 0) and (r, -inf).
    Homogenize {
        #[arg(long, value_name = "FILE")]
        set: PathBuf,
    },
    /// Checks A = co(ext(A)) ⊕ rec(A) by mutual generator membership.
    MinkowskiVerify {
        #[arg(long, value_name = "FILE")]
        set: PathBuf,
    },
    /// Half-space containment of a point (--x) or a whole set (--set).
    HalfspaceCheck {
        #[arg(long, value_name = "FILE")]
        halfspace: PathBuf,
        #[arg(long, value_enum, default_value = "plus")]
        side: SideArg,
        #[arg(long, conflicts_with = "set", required_unless_present = "set")]
        x: Option<String>,
        #[arg(long, value_name = "FILE")]
        set: Option<PathBuf>,
    },
    /// SVG drawing of a 2-dimensional set.
    Render {
        #[arg(long, value_name = "FILE")]
        set: PathBuf,
        /// Grid resolution for region shading.
        #[arg(long, default_value_t = 200)]
        grid: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Precondition { message: String, certificate: String },
    SelfCheck(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Input(s)
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read_file(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

pub fn load_set(path: &Path, tol: f64) -> Result<ConvexSetF64, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let doc: SetDoc = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(doc.to_set(&path.display().to_string())?.with_tolerance(tol))
}

pub fn load_cone(path: &Path, tol: f64) -> Result<ConeF64, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let doc: ConeDoc = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(doc.to_cone(&path.display().to_string())?.with_tolerance(tol))
}

fn parse_x(text: &str, dim: usize) -> Result<VectorF64, Failure> {
    let coords: Coords = serde_json::from_str(text).map_err(|e| Failure::Input(format!("--x: {e}")))?;
    if coords.len() != dim {
        return Err(Failure::Input(format!("--x: has dimension {}, expected {dim}", coords.len())));
    }
    Ok(VectorF64::new(coords))
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn core_err(e: CoreError) -> Failure {
    Failure::Input(e.to_string())
}

/// Runs one command and returns exit code and output text.
pub fn run(cli: &Cli) -> Outcome {
    let result = execute(cli);
    let (code, body, stderr) = match result {
        Ok(body) => (0, body, String::new()),
        Err(Failure::Input(m)) => (1, String::new(), format!("error: {m}\n")),
        Err(Failure::Precondition { message, certificate }) => (2, certificate, format!("error: {message}\n")),
        Err(Failure::SelfCheck(m)) => (3, String::new(), format!("internal error: {m}\n")),
    };
    match (&cli.out, code) {
        (Some(path), 0) => match fs::write(path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr },
            Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) },
        },
        _ => Outcome { code, stdout: body, stderr },
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let tol = cli.tolerance;
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(Failure::Input("--tolerance: must be a finite non-negative number".into()));
    }
    match &cli.command {
        Command::Member { target, x } => {
            if let Some(path) = &target.cone {
                let cone = load_cone(path, tol)?;
                let x = parse_x(x, cone.dim())?;
                let projection = cone.project(&x).map_err(core_err)?;
                let member = projection.approx_eq(&x, tol);
                Ok(to_json(&MemberDoc { member, projection: coords(&projection) }))
            } else {
                let set = load_set(target.set.as_deref().expect("clap group"), tol)?;
                let x = parse_x(x, set.dim())?;
                let projection = set.lifted_projection(&x).map_err(core_err)?;
                let member = projection.approx_eq(&x.lift(MaxPlus::one()), tol);
                Ok(to_json(&MemberDoc { member, projection: coords(&projection) }))
            }
        }
        Command::Basis { cone } => {
            let cone = load_cone(cone, tol)?;
            Ok(to_json(&ConeDoc::from_cone(&cone.extract_basis())))
        }
        Command::Decompose { target, x } => {
            if let Some(path) = &target.cone {
                decompose_cone(&load_cone(path, tol)?, x, tol)
            } else {
                decompose_set(&load_set(target.set.as_deref().expect("clap group"), tol)?, x, tol)
            }
        }
        Command::ExtremePoints { set } => {
            let set = load_set(set, tol)?;
            Ok(to_json(&ExtremePointsDoc { extreme_points: coords_list(&set.extreme_points()) }))
        }
        Command::Recession { set } => {
            let set = load_set(set, tol)?;
            Ok(to_json(&ConeDoc::from_cone(&set.recession())))
        }
        Command::Homogenize { set } => {
            let set = load_set(set, tol)?;
            Ok(to_json(&ConeDoc::from_cone(&set.homogenize())))
        }
        Command::MinkowskiVerify { set } => {
            let set = load_set(set, tol)?;
            Ok(to_json(&minkowski_verify(&set).map_err(core_err)?))
        }
        Command::HalfspaceCheck { halfspace, side, x, set } => {
            let doc: HalfSpaceDoc = parse_json(halfspace)?;
            let h = doc.to_halfspace(&halfspace.display().to_string())?;
            let side = Side::from(*side);
            let (subject, contains) = match (x, set) {
                (Some(x), _) => ("point", h.contains(&parse_x(x, h.dim())?, side).map_err(core_err)?),
                (None, Some(path)) => {
                    let s = load_set(path, tol)?;
                    if s.dim() != h.dim() {
                        return Err(Failure::Input(format!(
                            "{}: set has dimension {}, half-space has {}",
                            path.display(),
                            s.dim(),
                            h.dim()
                        )));
                    }
                    ("set", h.contains_set(&s, side).map_err(core_err)?)
                }
                (None, None) => return Err(Failure::Input("halfspace-check: one of --x or --set is required".into())),
            };
            Ok(to_json(&HalfSpaceCheckDoc { side, subject: subject.into(), contains }))
        }
        Command::Render { set, grid } => {
            let set = load_set(set, tol)?;
            Ok(render::render_svg(&set, *grid)?)
        }
    }
}

pub fn minkowski_verify(set: &ConvexSetF64) -> maxplus_convex::Result<MinkowskiVerifyDoc> {
    let rep = set.minkowski_representation();
    let set_in_representation = rep.contains_set(set)?;
    let representation_in_set = set.contains_set(&rep)?;
    Ok(MinkowskiVerifyDoc {
        holds: set_in_representation && representation_in_set,
        set_in_representation,
        representation_in_set,
        extreme_points: coords_list(&set.extreme_points()),
        recession_rays: coords_list(set.recession().generators().columns()),
    })
}

fn decompose_cone(cone: &ConeF64, x: &str, tol: f64) -> Result<String, Failure> {
    let x = parse_x(x, cone.dim())?;
    let d = match cone.decompose(&x) {
        Ok(d) => d,
        Err(CoreError::NotMember) => {
            let projection = cone.project(&x).map_err(core_err)?;
            return Err(Failure::Precondition {
                message: "x is not a member of the cone".into(),
                certificate: to_json(&NotMemberDoc { error: "not a member".into(), projection: coords(&projection) }),
            });
        }
        Err(e) => return Err(core_err(e)),
    };
    if !d.recombine().approx_eq(&x, tol) {
        return Err(Failure::SelfCheck("cone decomposition does not recombine to x".into()));
    }
    if d.terms.len() > cone.dim() {
        return Err(Failure::SelfCheck(format!("{} terms exceed dimension {}", d.terms.len(), cone.dim())));
    }
    Ok(to_json(&ConeDecompositionDoc { terms: terms(&d.terms), basis: coords_list(&d.basis), target: coords(&x) }))
}

fn decompose_set(set: &ConvexSetF64, x: &str, tol: f64) -> Result<String, Failure> {
    let x = parse_x(x, set.dim())?;
    let d = match set.decompose(&x) {
        Ok(d) => d,
        Err(CoreError::NotMember) => {
            let projection = set.lifted_projection(&x).map_err(core_err)?;
            return Err(Failure::Precondition {
                message: "x is not a member of the set (projection of (x, 0) onto the homogenized cone follows)".into(),
                certificate: to_json(&NotMemberDoc { error: "not a member".into(), projection: coords(&projection) }),
            });
        }
        Err(e) => return Err(core_err(e)),
    };
    if !d.recombine().approx_eq(&x, tol) {
        return Err(Failure::SelfCheck("set decomposition does not recombine to x".into()));
    }
    if d.len() > set.dim() + 1 {
        return Err(Failure::SelfCheck(format!("{} terms exceed n + 1 = {}", d.len(), set.dim() + 1)));
    }
    if !d.point_weight().approx_eq(MaxPlus::one(), tol) {
        return Err(Failure::SelfCheck("point coefficients do not sum to 0".into()));
    }
    Ok(to_json(&SetDecompositionDoc {
        point_terms: terms(&d.point_terms),
        ray_terms: terms(&d.ray_terms),
        extreme_points: coords_list(&d.points),
        recession_rays: coords_list(&d.rays),
        target: coords(&x),
    }))
}
