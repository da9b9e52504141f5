//! Wildness of finite-dimensional quotients.
//!
//! A finite-dimensional Lie algebra over `C` is tame when it is semisimple,
//! one-dimensional, or semisimple plus a one-dimensional centre, and wild
//! otherwise (Makedonskii). [`makedonskii_classify`] decides this from the
//! radical, centre and Killing form and keeps the subspaces it used, so a
//! verdict can be replayed with [`MakedonskiiCertificate::verify`].
//!
//! [`solvable_growth`] tabulates `𝔎_n`, the image of `𝕀_{x0,1}` in
//! `𝔄/𝕀_{x0,n}`, together with the classification of every quotient.
//! [`endomorphism_algebra`] solves for the commutant of a representation.

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::equivariant::{quotient_by_jet_ideal, GroupAction};
use crate::exactmath::{is_zero_vec, unit_vec, ExactMatrix};
use crate::funring::SpherePoint;
use crate::kacroots::recognize::exact_eigenvalues;
use crate::{Error, LieAlgebra, Matrix, Result, Scalar, Subspace};

/// Largest representation dimension for which irreducibility is decided.
pub const IRREDUCIBILITY_MAX_DIM: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Semisimple,
    OneDimensional,
    SsPlusLine,
    Wild,
}

impl Classification {
    pub fn is_tame(self) -> bool {
        self != Classification::Wild
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Semisimple => "semisimple",
            Classification::OneDimensional => "one-dimensional",
            Classification::SsPlusLine => "ss-plus-line",
            Classification::Wild => "wild",
        }
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

fn ser_vectors<S: Serializer>(v: &[Vec<Scalar>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<Vec<String>> = v.iter().map(|x| x.iter().map(|c| c.to_string()).collect()).collect();
    strs.serialize(s)
}

fn ser_chain<S: Serializer>(v: &[Vec<Vec<Scalar>>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<Vec<Vec<String>>> = v
        .iter()
        .map(|b| b.iter().map(|x| x.iter().map(|c| c.to_string()).collect()).collect())
        .collect();
    strs.serialize(s)
}

fn ser_opt_vectors<S: Serializer>(v: &Option<Vec<Vec<Scalar>>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_vectors(v, s),
        None => s.serialize_none(),
    }
}

/// `[b_index, radical_vector] ≠ 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NoncentralWitness {
    pub index: usize,
    #[serde(serialize_with = "ser_vector")]
    pub radical_vector: Vec<Scalar>,
}

fn ser_vector<S: Serializer>(v: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    strs.serialize(s)
}

/// The evidence behind a classification. Vectors are coordinates in the
/// algebra's basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MakedonskiiCertificate {
    pub dim: usize,
    pub killing_rank: usize,
    #[serde(serialize_with = "ser_vectors")]
    pub killing_kernel: Vec<Vec<Scalar>>,
    pub derived_dim: usize,
    #[serde(serialize_with = "ser_vectors")]
    pub radical: Vec<Vec<Scalar>>,
    /// Derived series of the radical; ends at zero.
    #[serde(serialize_with = "ser_chain")]
    pub radical_derived_series: Vec<Vec<Vec<Scalar>>>,
    #[serde(serialize_with = "ser_vectors")]
    pub center: Vec<Vec<Scalar>>,
    pub noncentral: Option<NoncentralWitness>,
    /// `[g, g]` when it complements a one-dimensional central radical.
    #[serde(serialize_with = "ser_opt_vectors")]
    pub complement: Option<Vec<Vec<Scalar>>>,
    /// Killing rank of `g / rad g`, when the radical is one-dimensional and central.
    pub quotient_killing_rank: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Makedonskii {
    pub classification: Classification,
    pub dim: usize,
    pub radical_dim: usize,
    pub certificate: MakedonskiiCertificate,
}

impl MakedonskiiCertificate {
    fn decide(&self) -> Classification {
        if self.radical.is_empty() {
            Classification::Semisimple
        } else if self.dim == 1 {
            Classification::OneDimensional
        } else if self.radical.len() == 1
            && self.noncentral.is_none()
            && self.complement.is_some()
            && self.quotient_killing_rank == Some(self.dim - 1)
        {
            Classification::SsPlusLine
        } else {
            Classification::Wild
        }
    }

    /// Replays the certificate against `g` and returns the classification it
    /// supports. Fails if any piece of evidence does not check out.
    pub fn verify(&self, g: &LieAlgebra) -> Result<Classification> {
        let n = g.dim();
        let bad = |what: &str| Err(Error::Internal(format!("certificate: {what}")));
        if n != self.dim {
            return bad("dimension");
        }
        let k = g.killing_form();
        if k.rank() != self.killing_rank
            || self.killing_kernel.len() != n - self.killing_rank
            || self.killing_kernel.iter().any(|v| !is_zero_vec(&k.mul_vec(v)))
        {
            return bad("Killing kernel");
        }
        let derived = g.derived_algebra();
        if derived.dim() != self.derived_dim {
            return bad("derived algebra");
        }
        // The radical is the Killing-orthogonal complement of [g, g].
        let radical = Subspace::span(n, &self.radical);
        if radical.dim() != self.radical.len() || radical != g.radical() || !g.is_ideal(&radical) {
            return bad("radical");
        }
        let chain: Vec<Subspace> = self
            .radical_derived_series
            .iter()
            .map(|b| Subspace::span(n, b))
            .collect();
        if chain != g.derived_series(&radical)? || chain.last().is_some_and(|s| s.dim() != 0) {
            return bad("radical derived series");
        }
        if Subspace::span(n, &self.center) != g.center() {
            return bad("centre");
        }
        if let Some(w) = &self.noncentral {
            if !radical.contains(&w.radical_vector)
                || w.index >= n
                || is_zero_vec(&g.bracket(&unit_vec(n, w.index), &w.radical_vector)?)
            {
                return bad("noncentral witness");
            }
        } else if !self.radical.is_empty() && !g.center().contains_subspace(&radical) {
            return bad("missing noncentral witness");
        }
        if let Some(c) = &self.complement {
            let c = Subspace::span(n, c);
            if c != derived || c.dim() + radical.dim() != n || c.intersect(&radical).dim() != 0 {
                return bad("complement");
            }
        }
        if let Some(r) = self.quotient_killing_rank {
            if r != g.quotient(&radical)?.algebra.killing_form().rank() {
                return bad("quotient Killing rank");
            }
        }
        Ok(self.decide())
    }
}

/// Decides tame versus wild for a finite-dimensional Lie algebra.
pub fn makedonskii_classify(g: &LieAlgebra) -> Makedonskii {
    let n = g.dim();
    let k = g.killing_form();
    let killing_kernel = k.kernel_basis();
    let derived = g.derived_algebra();
    let radical = g.radical();
    let series = g.derived_series(&radical).expect("the radical is an ideal");
    let center = g.center();
    let noncentral = radical.basis().iter().find_map(|r| {
        (0..n)
            .find(|&i| !is_zero_vec(&g.bracket(&unit_vec(n, i), r).expect("dims agree")))
            .map(|index| NoncentralWitness {
                index,
                radical_vector: r.clone(),
            })
    });
    let (mut complement, mut quotient_killing_rank) = (None, None);
    if radical.dim() == 1 && noncentral.is_none() && n > 1 {
        let q = g.quotient(&radical).expect("the radical is an ideal");
        quotient_killing_rank = Some(q.algebra.killing_form().rank());
        if derived.dim() + 1 == n && derived.intersect(&radical).dim() == 0 {
            complement = Some(derived.basis().to_vec());
        }
    }
    let certificate = MakedonskiiCertificate {
        dim: n,
        killing_rank: n - killing_kernel.len(),
        killing_kernel,
        derived_dim: derived.dim(),
        radical: radical.basis().to_vec(),
        radical_derived_series: series.iter().map(|s| s.basis().to_vec()).collect(),
        center: center.basis().to_vec(),
        noncentral,
        complement,
        quotient_killing_rank,
    };
    Makedonskii {
        classification: certificate.decide(),
        dim: n,
        radical_dim: radical.dim(),
        certificate,
    }
}

/// One row of the growth table: the quotient `𝔄/𝕀_{x0,n}` and its ideal
/// `𝔎_n = 𝕀_{x0,1}/𝕀_{x0,n}`.
#[derive(Clone, Debug, Serialize)]
pub struct GrowthRow {
    pub n: usize,
    pub quotient_dim: usize,
    pub kernel_dim: usize,
    /// Dimensions along the derived series of `𝔎_n`.
    pub kernel_derived_dims: Vec<usize>,
    pub kernel_solvable: bool,
    pub radical_dim: usize,
    pub classification: Classification,
    pub certificate: MakedonskiiCertificate,
    /// Derived series of `𝔎_n` in the quotient basis.
    #[serde(serialize_with = "ser_chain")]
    pub kernel_derived_series: Vec<Vec<Vec<Scalar>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WildnessReport {
    pub x0: String,
    pub nmax: usize,
    pub fibre_dim: usize,
    /// Pole order at which the order `nmax` jet image stabilised.
    pub pole_order: usize,
    pub first_wild: Option<usize>,
    pub rows: Vec<GrowthRow>,
}

impl WildnessReport {
    pub fn table(&self) -> String {
        let mut out = format!(
            "x0 = {}, fibre dim {}, pole order {}\n",
            self.x0, self.fibre_dim, self.pole_order
        );
        out.push_str(&format!(
            "{:>4} {:>8} {:>8} {:>10} {:>8}  {:<16} {}\n",
            "n", "dim A/I", "dim K", "solvable", "dim rad", "class", "derived(K)"
        ));
        for r in &self.rows {
            let d: Vec<String> = r.kernel_derived_dims.iter().map(|d| d.to_string()).collect();
            out.push_str(&format!(
                "{:>4} {:>8} {:>8} {:>10} {:>8}  {:<16} {}\n",
                r.n,
                r.quotient_dim,
                r.kernel_dim,
                r.kernel_solvable,
                r.radical_dim,
                r.classification.as_str(),
                d.join(" > ")
            ));
        }
        out
    }
}

/// Growth table for `n = 1..=nmax`.
///
/// The order `nmax` jet image is computed once; since its basis is graded by
/// `t`-degree, `𝔄/𝕀_{x0,n}` is its quotient by the basis vectors of degree
/// at least `n`, and `𝔎_n` is spanned by the remaining ones of degree at
/// least 1.
pub fn solvable_growth(action: &GroupAction, x0: &SpherePoint, nmax: usize) -> Result<WildnessReport> {
    if nmax == 0 {
        return Err(Error::Precondition("nmax must be positive".into()));
    }
    let top = quotient_by_jet_ideal(action, x0, nmax, 0)?;
    let fibre_dim = top.t_degrees.iter().filter(|&&k| k == 0).count();
    let mut rows = Vec::with_capacity(nmax);
    for n in 1..=nmax {
        let high: Vec<Vec<Scalar>> = (0..top.dim())
            .filter(|&b| top.t_degrees[b] >= n)
            .map(|b| unit_vec(top.dim(), b))
            .collect();
        let q = top.algebra.quotient(&Subspace::span(top.dim(), &high))?;
        let g = q.algebra;
        let kernel: Vec<Vec<Scalar>> = q
            .representatives
            .iter()
            .enumerate()
            .filter(|(_, &b)| top.t_degrees[b] >= 1)
            .map(|(i, _)| unit_vec(g.dim(), i))
            .collect();
        let kernel = Subspace::span(g.dim(), &kernel);
        let series = g.derived_series(&kernel)?;
        let kernel_solvable = series.last().is_some_and(|s| s.dim() == 0);
        let m = makedonskii_classify(&g);
        rows.push(GrowthRow {
            n,
            quotient_dim: g.dim(),
            kernel_dim: kernel.dim(),
            kernel_derived_dims: series.iter().map(|s| s.dim()).collect(),
            kernel_solvable,
            radical_dim: m.radical_dim,
            classification: m.classification,
            certificate: m.certificate,
            kernel_derived_series: series.iter().map(|s| s.basis().to_vec()).collect(),
        });
    }
    let first_wild = rows.iter().find(|r| !r.classification.is_tame()).map(|r| r.n);
    Ok(WildnessReport {
        x0: x0.to_string(),
        nmax,
        fibre_dim,
        pole_order: top.degree,
        first_wild,
        rows,
    })
}

/// Commutant of a representation, with an irreducibility verdict.
#[derive(Clone, Debug, Serialize)]
pub struct EndomorphismReport {
    pub rep_dim: usize,
    pub dim: usize,
    #[serde(serialize_with = "ser_chain")]
    pub basis: Vec<Vec<Vec<Scalar>>>,
    pub is_brick: bool,
    /// `None` when the representation is too large to check.
    pub irreducible: Option<bool>,
    /// Dimension of the associative algebra generated by the image and `1`.
    pub enveloping_dim: Option<usize>,
    /// A proper nonzero invariant subspace, when one was found.
    #[serde(serialize_with = "ser_opt_vectors")]
    pub invariant_subspace: Option<Vec<Vec<Scalar>>>,
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.to_rows().concat()
}

fn unflatten(v: &[Scalar], d: usize) -> Matrix {
    Matrix::from_fn(d, d, |r, c| v[r * d + c].clone())
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).sub(&b.mul(a))
}

/// Checks that `rep[i]` is the image of the `i`-th basis vector of a
/// representation of `lie`.
pub fn check_representation(lie: &LieAlgebra, rep: &[Matrix]) -> Result<usize> {
    if rep.len() != lie.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} matrices for a {}-dimensional algebra",
            rep.len(),
            lie.dim()
        )));
    }
    let d = rep.first().map_or(0, |m| m.rows());
    if rep.iter().any(|m| m.rows() != d || m.cols() != d) {
        return Err(Error::DimensionMismatch(
            "representation matrices must be square of one size".into(),
        ));
    }
    for i in 0..rep.len() {
        for j in i + 1..rep.len() {
            let mut image = Matrix::zeros(d, d);
            for (k, c) in lie.bracket_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    image = image.add(&rep[k].scale(c));
                }
            }
            if commutator(&rep[i], &rep[j]) != image {
                return Err(Error::Precondition(format!(
                    "not a representation: [rho({}), rho({})] differs from rho of the bracket",
                    lie.labels()[i],
                    lie.labels()[j]
                )));
            }
        }
    }
    Ok(d)
}

/// Basis of the unital associative algebra generated by `gens`, flattened.
fn enveloping_algebra(gens: &[Matrix], d: usize) -> Vec<Matrix> {
    let mut span = Subspace::span(d * d, &[flatten(&Matrix::identity(d))]);
    let mut elems = vec![Matrix::identity(d)];
    let mut frontier = elems.clone();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for a in &frontier {
            for g in gens {
                let p = g.mul(a);
                let v = flatten(&p);
                if !span.contains(&v) {
                    span = span.sum(&Subspace::span(d * d, &[v]));
                    elems.push(p.clone());
                    fresh.push(p);
                }
            }
        }
        frontier = fresh;
    }
    elems
}

fn cyclic_subspace(alg: &[Matrix], v: &[Scalar]) -> Subspace {
    let vecs: Vec<Vec<Scalar>> = alg.iter().map(|a| a.mul_vec(v)).collect();
    Subspace::span(v.len(), &vecs)
}

/// Looks for `v` with `A v` proper, among unit vectors and eigenvectors of
/// the generators, for `A` and for its transpose (whose proper cyclic
/// subspaces have invariant annihilators).
fn find_invariant_subspace(gens: &[Matrix], alg: &[Matrix], d: usize) -> Option<Subspace> {
    let candidates = |ms: &[Matrix]| -> Vec<Vec<Scalar>> {
        let mut out: Vec<Vec<Scalar>> = (0..d).map(|i| unit_vec(d, i)).collect();
        for m in ms {
            if let Ok(values) = exact_eigenvalues(m) {
                for l in values {
                    out.extend(m.sub(&Matrix::identity(d).scale(&l)).kernel_basis());
                }
            }
        }
        out
    };
    for v in candidates(gens) {
        let s = cyclic_subspace(alg, &v);
        if s.dim() < d {
            return Some(s);
        }
    }
    let gens_t: Vec<Matrix> = gens.iter().map(|m| m.transpose()).collect();
    let alg_t: Vec<Matrix> = alg.iter().map(|m| m.transpose()).collect();
    for v in candidates(&gens_t) {
        let s = cyclic_subspace(&alg_t, &v);
        if s.dim() < d {
            let rows: Vec<Vec<Scalar>> = s.basis().to_vec();
            let ann = Matrix::from_rows(rows).expect("uniform rows").kernel_basis();
            return Some(Subspace::span(d, &ann));
        }
    }
    None
}

/// Solves `T ρ(a) = ρ(a) T` for all basis vectors `a`.
pub fn endomorphism_algebra(lie: &LieAlgebra, rep: &[Matrix]) -> Result<EndomorphismReport> {
    let d = check_representation(lie, rep)?;
    // Row (r, c) of the equation for generator X: Σ_k T_rk X_kc - X_rk T_kc.
    let mut rows = Vec::new();
    for x in rep.iter().filter(|x| !x.is_zero()) {
        for r in 0..d {
            for c in 0..d {
                let mut row = vec![Scalar::zero(); d * d];
                for k in 0..d {
                    row[r * d + k] = row[r * d + k].clone() + x.get(k, c).clone();
                    row[k * d + c] = row[k * d + c].clone() - x.get(r, k).clone();
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let basis: Vec<Vec<Scalar>> = if rows.is_empty() {
        (0..d * d).map(|i| unit_vec(d * d, i)).collect()
    } else {
        ExactMatrix::from_rows(rows)?.kernel_basis()
    };
    let basis: Vec<Matrix> = basis.iter().map(|v| unflatten(v, d)).collect();
    debug_assert!(basis.iter().all(|t| rep.iter().all(|x| commutator(t, x).is_zero())));

    let (mut irreducible, mut enveloping_dim, mut invariant_subspace) = (None, None, None);
    if d <= IRREDUCIBILITY_MAX_DIM && d > 0 {
        // Burnside: irreducible over C iff the image generates all of M_d.
        let alg = enveloping_algebra(rep, d);
        enveloping_dim = Some(alg.len());
        irreducible = Some(alg.len() == d * d);
        if alg.len() < d * d {
            invariant_subspace = find_invariant_subspace(rep, &alg, d).map(|s| s.basis().to_vec());
        }
    }
    let dim = basis.len();
    Ok(EndomorphismReport {
        rep_dim: d,
        dim,
        basis: basis.iter().map(|m| m.to_rows()).collect(),
        is_brick: dim == 1,
        irreducible,
        enveloping_dim,
        invariant_subspace,
    })
}

/// `ad` of every basis vector, i.e. the adjoint representation.
pub fn adjoint_representation(lie: &LieAlgebra) -> Vec<Matrix> {
    (0..lie.dim()).map(|i| lie.ad_basis(i)).collect()
}

/// Checks that `s` is invariant under every matrix of `rep`.
pub fn is_invariant_subspace(rep: &[Matrix], s: &[Vec<Scalar>]) -> bool {
    let Some(d) = s.first().map(|v| v.len()) else {
        return true;
    };
    let span = Subspace::span(d, s);
    rep.iter().all(|m| s.iter().all(|v| span.contains(&m.mul_vec(v))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{sl2, sl3};

    fn abelian(n: usize) -> LieAlgebra {
        LieAlgebra::new((0..n).map(|i| format!("x{i}")).collect(), vec![], None).unwrap()
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn simple_algebras_are_semisimple() {
        for g in [sl2::<Scalar>().algebra, sl3::<Scalar>().algebra] {
            let c = makedonskii_classify(&g);
            assert_eq!(c.classification, Classification::Semisimple);
            assert_eq!(c.certificate.verify(&g).unwrap(), Classification::Semisimple);
            assert!(c.certificate.killing_kernel.is_empty());
        }
    }

    #[test]
    fn small_abelian() {
        assert_eq!(
            makedonskii_classify(&abelian(1)).classification,
            Classification::OneDimensional
        );
        let two = makedonskii_classify(&abelian(2));
        assert_eq!(two.classification, Classification::Wild);
        assert_eq!(two.radical_dim, 2);
        assert_eq!(
            makedonskii_classify(&abelian(0)).classification,
            Classification::Semisimple
        );
    }

    #[test]
    fn gl2_is_ss_plus_line() {
        // sl2 ⊕ C c
        let s = sl2::<Scalar>().algebra;
        let mut entries: Vec<(usize, usize, usize, Scalar)> =
            s.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        entries.sort_by_key(|e| (e.0, e.1, e.2));
        let mut labels = s.labels().to_vec();
        labels.push("c".into());
        let g = LieAlgebra::new(labels, entries, None).unwrap();
        let c = makedonskii_classify(&g);
        assert_eq!(c.classification, Classification::SsPlusLine);
        assert_eq!(c.certificate.verify(&g).unwrap(), Classification::SsPlusLine);
        assert_eq!(c.certificate.complement.as_ref().unwrap().len(), 3);
    }

    #[test]
    fn nonabelian_plane_is_wild() {
        // [x, y] = y
        let g = LieAlgebra::new(vec!["x".into(), "y".into()], vec![(0, 1, 1, Scalar::int(1))], None).unwrap();
        let c = makedonskii_classify(&g);
        assert_eq!(c.classification, Classification::Wild);
        assert!(c.certificate.noncentral.is_some());
        assert_eq!(c.certificate.verify(&g).unwrap(), Classification::Wild);
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let g = abelian(2);
        let mut c = makedonskii_classify(&g).certificate;
        c.radical.pop();
        assert!(c.verify(&g).is_err());
    }

    #[test]
    fn adjoint_sl2_is_irreducible() {
        let g = sl2::<Scalar>().algebra;
        let r = endomorphism_algebra(&g, &adjoint_representation(&g)).unwrap();
        assert_eq!(r.dim, 1);
        assert_eq!(r.irreducible, Some(true));
        assert!(r.invariant_subspace.is_none());
    }

    #[test]
    fn two_distinct_characters() {
        let g = abelian(1);
        let r = endomorphism_algebra(&g, &[m(&[&[1, 0], &[0, 2]])]).unwrap();
        assert_eq!(r.dim, 2);
        assert!(!r.is_brick);
        assert_eq!(r.irreducible, Some(false));
        assert!(is_invariant_subspace(
            &[m(&[&[1, 0], &[0, 2]])],
            r.invariant_subspace.as_ref().unwrap()
        ));
    }

    #[test]
    fn invariant_line_off_the_axes() {
        // Nilpotent with kernel spanned by (1, 1), the only invariant line.
        let g = abelian(1);
        let x = m(&[&[1, -1], &[1, -1]]);
        let r = endomorphism_algebra(&g, &[x.clone()]).unwrap();
        assert_eq!(r.dim, 2);
        let w = r.invariant_subspace.unwrap();
        assert_eq!(w, vec![vec![Scalar::int(1), Scalar::int(1)]]);
        assert!(is_invariant_subspace(&[x], &w));
    }

    #[test]
    fn non_representations_are_rejected() {
        let g = sl2::<Scalar>().algebra;
        let mut rep = adjoint_representation(&g);
        rep[0] = rep[0].scale(&Scalar::int(2));
        assert!(matches!(endomorphism_algebra(&g, &rep), Err(Error::Precondition(_))));
        assert!(endomorphism_algebra(&g, &rep[..2]).is_err());
    }
}
