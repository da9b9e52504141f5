//! Root data, Kac coordinates and the root groupoid cochains of a torsion.
//!
//! Pipeline: a regular element of `𝔤^{γ₀}` fixes a Cartan subalgebra and
//! positive roots ([`regular_fixed_element`], [`csa_roots`]); `γ₀` then
//! permutes the simple root spaces, giving `γ₀ = μg` ([`factor_torsion`]);
//! the affine generators yield raw exponents that an affine Weyl search
//! turns into Kac coordinates ([`kac_coordinates`]); finally the weight
//! spaces of `μ` and the coroots are labelled by `Φ̄` ([`root_groupoid`]).
//!
//! Exact arithmetic is used throughout. Eigenvalues of non-rational
//! matrices are proposed numerically and confirmed exactly.

mod groupoid;
mod local;
pub(crate) mod recognize;
mod roots;
mod torsion;

use serde::Serialize;

pub use groupoid::{
    is_cocycle, label_of, omega1, omega1_table, omega2, omega2_dot, omega2_edges, root_groupoid, AffineRootGroupoid,
    GroupoidElement, Omega1Entry,
};
pub use local::{local_structure, same_structure_constants, LocalBasisElement, LocalStructure};
pub use roots::{
    csa_roots, finite_type_label, lie_rank, regular_fixed_element, Root, RootDatum, RootSummary, REGULAR_SEARCH_BUDGET,
};
pub use torsion::{
    apply_word, automorphism_from_generators, diagram_symmetries, factor_torsion, kac_coordinates, marks_of,
    normalize_kac, reflect, AffineGenerator, KacCoordinates, TorsionFactorization,
};

use crate::config::LoadedAction;
use crate::funring::SpherePoint;
use crate::{LieAlgebra, Matrix, Result, Scalar};

/// Everything derived from one torsion.
#[derive(Clone, Debug)]
pub struct KacAnalysis {
    pub factorization: TorsionFactorization,
    pub coordinates: KacCoordinates,
    pub groupoid: AffineRootGroupoid,
    /// `ω¹` from the eigenvalues on the raw generators.
    pub omega1_raw: Vec<u32>,
    /// `ω¹` from the Kac coordinates.
    pub omega1: Vec<u32>,
    /// `ω²` of [`KacAnalysis::omega1`] on composable pairs.
    pub omega2: Vec<(usize, usize, usize, u32)>,
}

pub fn analyze(lie: &LieAlgebra, gamma0: &Matrix, zeta: &Scalar, hint: Option<&[Scalar]>) -> Result<KacAnalysis> {
    let x = regular_fixed_element(lie, gamma0, hint)?;
    let datum = csa_roots(lie, &x)?;
    let factorization = factor_torsion(lie, &datum, gamma0, zeta)?;
    let coordinates = kac_coordinates(&factorization)?;
    let groupoid = root_groupoid(&factorization)?;
    let omega1_raw = omega1(&groupoid, &coordinates.raw);
    let w1 = omega1(&groupoid, &coordinates.s);
    let omega2 = omega2(&groupoid, &w1)?;
    Ok(KacAnalysis {
        factorization,
        coordinates,
        groupoid,
        omega1_raw,
        omega1: w1,
        omega2,
    })
}

/// The stabiliser generator at `x0` and its chart multiplier. The
/// configured regular element is used when `x0` is the configured point.
pub fn torsion_at(loaded: &LoadedAction, x0: &SpherePoint) -> Result<(Matrix, Scalar, Option<Vec<Scalar>>)> {
    let (st, chart) = loaded.action.local_chart(x0)?;
    let gamma0 = loaded.action.elements()[st.generator].lie.clone();
    let hint = if loaded.point.as_ref() == Some(x0) {
        loaded.regular_element.clone()
    } else {
        None
    };
    Ok((gamma0, chart.zeta, hint))
}

pub fn analyze_at(loaded: &LoadedAction, x0: &SpherePoint) -> Result<KacAnalysis> {
    let (gamma0, zeta, hint) = torsion_at(loaded, x0)?;
    analyze(loaded.action.lie(), &gamma0, &zeta, hint.as_deref())
}

/// The local model `(𝔤 ⊗ C[z]/(z^m))^{γ₀}` in the basis `a^i_(α,u)`.
pub fn local_structure_algebra(
    lie: &LieAlgebra,
    gamma0: &Matrix,
    zeta: &Scalar,
    m: usize,
    hint: Option<&[Scalar]>,
) -> Result<LocalStructure> {
    let a = analyze(lie, gamma0, zeta, hint)?;
    local_structure(&a.factorization, &a.groupoid, m)
}

#[derive(Clone, Debug, Serialize)]
pub struct KacReport {
    #[serde(rename = "type")]
    pub type_label: String,
    pub validated_type: bool,
    pub r: u32,
    pub nu0: u32,
    pub s: Vec<u32>,
    pub raw_s: Vec<u32>,
    pub canonical_s: Vec<u32>,
    pub symmetric_relabelling: bool,
    pub marks: Vec<i64>,
    pub weyl_word: Vec<usize>,
    pub weyl_word_text: String,
    pub affine_cartan: Vec<Vec<i64>>,
    pub omega1_table: Vec<Omega1Entry>,
    pub omega2_pairs: Vec<[String; 2]>,
}

impl KacAnalysis {
    pub fn report(&self) -> KacReport {
        let f = &self.factorization;
        let c = &self.coordinates;
        KacReport {
            type_label: f.affine_type(),
            validated_type: f.datum.is_validated_type(),
            r: c.r,
            nu0: c.nu0,
            s: c.s.clone(),
            raw_s: c.raw.clone(),
            canonical_s: c.canonical.clone(),
            symmetric_relabelling: c.symmetric_relabelling,
            marks: c.marks.clone(),
            weyl_word: c.weyl_word.clone(),
            weyl_word_text: c.word_string(),
            affine_cartan: f.affine_cartan.clone(),
            omega1_table: omega1_table(&self.groupoid, &self.omega1, &self.omega1_raw),
            omega2_pairs: omega2_edges(&self.omega2)
                .into_iter()
                .map(|(a, b)| [self.groupoid.label(a), self.groupoid.label(b)])
                .collect(),
        }
    }

    pub fn dot(&self) -> String {
        omega2_dot(&self.groupoid, &self.omega1, &self.omega2)
    }

    /// `ω¹` values on the elements with the given coefficient vectors.
    pub fn omega1_on(&self, coeffs: &[&[i64]], raw: bool) -> Option<Vec<u32>> {
        let w = if raw { &self.omega1_raw } else { &self.omega1 };
        coeffs.iter().map(|c| self.groupoid.index_of(c).map(|i| w[i])).collect()
    }
}
