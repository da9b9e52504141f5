//! Quotients `(𝔤 ⊗ O_X)^Γ / 𝕀_{x0,m}` via the image of the jet map.

use num_traits::Zero;

use super::action::GroupAction;
use super::space::basis_of_degree;
use crate::exactmath::{eigenspace_bases, sparse_axpy, sparse_to_dense, SparseEchelon, SparseVec, Subspace};
use crate::funring::{Chart, SpherePoint};
use crate::liealg::format_vector;
use crate::{Error, LieAlgebra, Result, Scalar};

/// Pole orders tried beyond the first before giving up, in units of `ν₀`.
const MAX_EXTRA_PERIODS: usize = 64;

/// The image of `(𝔤 ⊗ O_X)^Γ` in `𝔤 ⊗ C[t]/t^m`, with its Lie algebra
/// structure `[A t^a, B t^b] = [A, B] t^{a+b}`.
#[derive(Clone, Debug)]
pub struct JetQuotient {
    pub x0: SpherePoint,
    pub m: usize,
    pub chart: Chart,
    /// Pole order at which the image stabilised.
    pub degree: usize,
    /// Image dimension after each pole order `0..=degree`.
    pub dims: Vec<usize>,
    /// Reduced echelon basis of the image; vectors are indexed `k * dim 𝔤 + i`.
    pub image: Subspace<Scalar>,
    /// t-degree of each basis vector.
    pub t_degrees: Vec<usize>,
    pub algebra: LieAlgebra,
}

impl JetQuotient {
    pub fn dim(&self) -> usize {
        self.image.dim()
    }

    /// The `t^k` coefficient of the `b`-th basis vector.
    pub fn coefficient(&self, b: usize, k: usize) -> &[Scalar] {
        let n = self.image.ambient_dim() / self.m;
        &self.image.basis()[b][k * n..(k + 1) * n]
    }
}

/// Upper bound `Σ_{k<m} dim 𝔤_{k mod ν₀}` for the image dimension.
pub fn jet_image_bound(action: &GroupAction, x0: &SpherePoint, m: usize) -> Result<usize> {
    let (st, chart) = action.local_chart(x0)?;
    let g0 = &action.elements()[st.generator].lie;
    let eig = eigenspace_bases(g0, chart.order, &chart.zeta)?;
    Ok((0..m).map(|k| eig[k % chart.order as usize].len()).sum())
}

/// Computes the quotient by `𝕀_{x0,m}` as the jet image, raising the pole
/// order until the image reaches its upper bound or stops growing over a
/// full period of the stabiliser. `start` is the first pole order tried.
pub fn quotient_by_jet_ideal(action: &GroupAction, x0: &SpherePoint, m: usize, start: usize) -> Result<JetQuotient> {
    if m == 0 {
        return Err(Error::Precondition("the jet order must be positive".into()));
    }
    let (_, chart) = action.local_chart(x0)?;
    let bound = jet_image_bound(action, x0, m)?;
    let nu = chart.order as usize;
    let n = action.lie().dim();
    let cap = start + MAX_EXTRA_PERIODS * nu.max(1);
    let inverses: Vec<_> = action.elements().iter().map(|g| g.mobius.inverse()).collect();

    let mut ech = SparseEchelon::new();
    let mut dims = Vec::new();
    let mut done = None;
    for d in 0..=cap {
        for phi in basis_of_degree(action.poles(), d) {
            let jets = inverses
                .iter()
                .map(|inv| chart.jet(&phi.compose_mobius(inv), m))
                .collect::<Result<Vec<_>>>()?;
            for i in 0..n {
                let mut v = SparseVec::new();
                for (g, jet) in action.elements().iter().zip(&jets) {
                    let col: SparseVec<Scalar> = (0..n)
                        .filter(|&r| !g.lie.get(r, i).is_zero())
                        .map(|r| (r, g.lie.get(r, i).clone()))
                        .collect();
                    for (k, c) in jet.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let shifted: SparseVec<Scalar> = col.iter().map(|(&r, x)| (k * n + r, x.clone())).collect();
                        sparse_axpy(&mut v, c, &shifted);
                    }
                }
                ech.insert(v);
            }
        }
        dims.push(ech.rank());
        let flat = d >= start + nu && dims[d] == dims[d - nu];
        if ech.rank() == bound || flat {
            done = Some(d);
            break;
        }
    }
    let Some(degree) = done else {
        return Err(Error::Unstabilized(format!(
            "jet image at {x0} still growing at pole order {cap}"
        )));
    };
    let rows: Vec<Vec<Scalar>> = ech.rows().map(|r| sparse_to_dense(r, n * m)).collect();
    let image = Subspace::span(n * m, &rows);
    let mut t_degrees = Vec::new();
    for v in image.basis() {
        let blocks: Vec<usize> = (0..m)
            .filter(|&k| v[k * n..(k + 1) * n].iter().any(|c| !c.is_zero()))
            .collect();
        if blocks.len() != 1 {
            return Err(Error::Unstabilized(format!(
                "jet image at {x0} is not graded at pole order {degree}"
            )));
        }
        t_degrees.push(blocks[0]);
    }
    let algebra = truncated_current_structure(action.lie(), &image, &t_degrees, m)?;
    Ok(JetQuotient {
        x0: x0.clone(),
        m,
        chart,
        degree,
        dims,
        image,
        t_degrees,
        algebra,
    })
}

fn truncated_current_structure(
    lie: &LieAlgebra,
    image: &Subspace<Scalar>,
    t_degrees: &[usize],
    m: usize,
) -> Result<LieAlgebra> {
    let n = lie.dim();
    let labels: Vec<String> = image
        .basis()
        .iter()
        .zip(t_degrees)
        .map(|(v, &k)| format!("{}@z^{k}", format_vector(&v[k * n..(k + 1) * n], lie.labels())))
        .collect();
    let grading = Some(t_degrees.iter().map(|&k| k as i64).collect());
    let mut err = None;
    let alg = LieAlgebra::from_bracket_fn(labels, grading, |a, b| {
        let (ka, kb) = (t_degrees[a], t_degrees[b]);
        let mut out = vec![Scalar::zero(); n * m];
        if ka + kb < m {
            let x = &image.basis()[a][ka * n..(ka + 1) * n];
            let y = &image.basis()[b][kb * n..(kb + 1) * n];
            let br = lie.bracket(x, y).expect("dimensions match");
            out[(ka + kb) * n..(ka + kb + 1) * n].clone_from_slice(&br);
        }
        image.coordinates(&out).unwrap_or_else(|| {
            err = Some(Error::Internal("jet image is not closed under the bracket".into()));
            vec![Scalar::zero(); image.dim()]
        })
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(alg),
    }
}

/// `dim 𝔎_n`: the order `n` jet image modulo the order 1 image.
pub fn kernel_dimension(q_n: &JetQuotient, q_1: &JetQuotient) -> usize {
    q_n.dim() - q_1.dim()
}

/// Dimension of the fibre algebra `𝔤^{γ₀}`.
pub fn fibre_dimension(action: &GroupAction, x0: &SpherePoint) -> Result<usize> {
    jet_image_bound(action, x0, 1)
}
