//! Action configuration files.
//!
//! ```json
//! {
//!   "name": "sl2-z5",
//!   "lie": "sl2",
//!   "group": { "generators": [
//!     { "lie_matrix": { "conjugation": [["zeta5", "0"], ["0", "zeta5^4"]] },
//!       "mobius": [["zeta5^4", "0"], ["0", "1"]] }
//!   ] },
//!   "poles": ["inf"],
//!   "point": "0"
//! }
//! ```
//!
//! The optional `regular_element` (basis coordinates, or a matrix for
//! preset algebras) fixes the regular element used for root data at `point`.
//!
//! `lie` is a preset name (`sl2`, `sl3`) or a structure-constant object as
//! written by [`crate::liealg::StructLieAlgebra::to_json`]. A `lie_matrix` is
//! one of `{"conjugation": g}` (`X ↦ g X g⁻¹`), `{"outer": M}`
//! (`X ↦ -M Xᵀ M⁻¹`), both for preset algebras only, or `{"matrix": A}`, the
//! automorphism in basis coordinates with `A[i][j]` the `i`-th coordinate of
//! the image of `b_j`. The Möbius matrix `[[a, b], [c, d]]` is
//! `z ↦ (az + b)/(cz + d)`. Scalars are strings such as `"1/2 - zeta6"`.

use serde::Deserialize;

use crate::equivariant::GroupAction;
use crate::funring::{Mobius, SpherePoint};
use crate::liealg::{preset, MatrixLieAlgebra};
use crate::{Error, LieAlgebra, Matrix, Result, Scalar};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionConfig {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub description: Option<String>,
    pub lie: LieSpec,
    pub group: GroupSpec,
    pub poles: Vec<String>,
    /// Default base point for local computations.
    #[serde(default)]
    pub point: Option<String>,
    /// A regular element of `𝔤^{γ₀}` at `point`, used by the Kac
    /// computations instead of a search.
    #[serde(default)]
    pub regular_element: Option<ElementSpec>,
}

/// An element of `𝔤` as basis coordinates or, for preset algebras, a matrix.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Coordinates(Vec<String>),
    Matrix(Vec<Vec<String>>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum LieSpec {
    Preset(String),
    Explicit(serde_json::Value),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub lie_matrix: LieMatrixSpec,
    pub mobius: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LieMatrixSpec {
    Conjugation(Vec<Vec<String>>),
    Outer(Vec<Vec<String>>),
    Matrix(Vec<Vec<String>>),
}

/// A loaded configuration: the action and, for preset algebras, the matrix
/// realisation used to interpret it.
#[derive(Clone, Debug)]
pub struct LoadedAction {
    pub name: String,
    pub action: GroupAction,
    pub matrices: Option<MatrixLieAlgebra<Scalar>>,
    pub point: Option<SpherePoint>,
    pub regular_element: Option<Vec<Scalar>>,
}

pub fn parse_scalar(s: &str, at: &str) -> Result<Scalar> {
    s.parse()
        .map_err(|e| Error::Parse(format!("{at}: bad scalar {s:?}: {e}")))
}

pub fn parse_point(s: &str, at: &str) -> Result<SpherePoint> {
    SpherePoint::parse(s).map_err(|e| Error::Parse(format!("{at}: bad point {s:?}: {e}")))
}

pub fn parse_matrix(rows: &[Vec<String>], at: &str) -> Result<Matrix> {
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .enumerate()
                .map(|(j, s)| parse_scalar(s, &format!("{at}[{i}][{j}]")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows).map_err(|e| Error::Config(format!("{at}: {e}")))
}

impl ActionConfig {
    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
    }

    pub fn load(&self) -> Result<LoadedAction> {
        let (lie, matrices): (LieAlgebra, Option<MatrixLieAlgebra<Scalar>>) = match &self.lie {
            LieSpec::Preset(name) => {
                let m = preset::<Scalar>(name)?;
                (m.algebra.clone(), Some(m))
            }
            LieSpec::Explicit(v) => (
                LieAlgebra::from_json(v).map_err(|e| Error::Config(format!("lie: {e}")))?,
                None,
            ),
        };
        let mut gens = Vec::new();
        for (k, g) in self.group.generators.iter().enumerate() {
            let at = format!("group.generators[{k}]");
            let lie_matrix = match (&g.lie_matrix, &matrices) {
                (LieMatrixSpec::Matrix(rows), _) => parse_matrix(rows, &format!("{at}.lie_matrix.matrix"))?,
                (LieMatrixSpec::Conjugation(rows), Some(m)) => {
                    m.conjugation(&parse_matrix(rows, &format!("{at}.lie_matrix.conjugation"))?)?
                }
                (LieMatrixSpec::Outer(rows), Some(m)) => {
                    m.minus_transpose_conjugation(&parse_matrix(rows, &format!("{at}.lie_matrix.outer"))?)?
                }
                _ => {
                    return Err(Error::Config(format!(
                        "{at}.lie_matrix: matrix maps need a preset Lie algebra; give the automorphism as \"matrix\""
                    )))
                }
            };
            let mob = parse_matrix(&g.mobius, &format!("{at}.mobius"))?;
            if mob.rows() != 2 || mob.cols() != 2 {
                return Err(Error::Config(format!("{at}.mobius must be 2x2")));
            }
            gens.push((lie_matrix, Mobius::from_matrix(&mob)?));
        }
        let poles = self
            .poles
            .iter()
            .enumerate()
            .map(|(i, p)| parse_point(p, &format!("poles[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let point = self.point.as_deref().map(|p| parse_point(p, "point")).transpose()?;
        let regular_element = match &self.regular_element {
            None => None,
            Some(ElementSpec::Coordinates(c)) => Some(
                c.iter()
                    .enumerate()
                    .map(|(i, x)| parse_scalar(x, &format!("regular_element[{i}]")))
                    .collect::<Result<Vec<_>>>()?,
            ),
            Some(ElementSpec::Matrix(rows)) => match &matrices {
                Some(m) => Some(
                    m.coordinates(&parse_matrix(rows, "regular_element")?)
                        .map_err(|e| Error::Config(format!("regular_element: {e}")))?,
                ),
                None => {
                    return Err(Error::Config(
                        "regular_element: matrices need a preset Lie algebra".into(),
                    ))
                }
            },
        };
        if regular_element.as_ref().is_some_and(|v| v.len() != lie.dim()) {
            return Err(Error::Config(format!(
                "regular_element needs {} coordinates",
                lie.dim()
            )));
        }
        let action = GroupAction::new(lie, gens, poles)?;
        Ok(LoadedAction {
            name: self.name.clone().unwrap_or_else(|| "custom".into()),
            action,
            matrices,
            point,
            regular_element,
        })
    }
}

/// Parses and loads a configuration in one step.
pub fn load_action(text: &str) -> Result<LoadedAction> {
    ActionConfig::from_json_str(text)?.load()
}
