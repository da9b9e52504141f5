//! The factorisation `γ₀ = μg`, affine generators and Kac coordinates.

use std::collections::{HashSet, VecDeque};

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::roots::{integer_weight, weight, RootDatum};
use crate::exactmath::{vec_add, vec_scale, Field};
use crate::liealg::verify_isomorphism;
use crate::{Error, LieAlgebra, Matrix, Result, Scalar, Subspace};

/// One generator `E_i` of the twisted affine presentation, with its partner
/// `F_i` and coroot `H_i = [E_i, F_i]`.
#[derive(Clone, Debug)]
pub struct AffineGenerator {
    pub e: Vec<Scalar>,
    pub f: Vec<Scalar>,
    pub h: Vec<Scalar>,
    /// `μE_i = ε^class E_i` with `ε = ζ^{ν₀/r}`.
    pub class: u32,
    /// `γ₀E_i = ζ^exponent E_i`.
    pub exponent: u32,
}

#[derive(Clone, Debug)]
pub struct TorsionFactorization {
    pub lie: LieAlgebra,
    pub datum: RootDatum,
    pub gamma0: Matrix,
    pub zeta: Scalar,
    pub nu0: u32,
    pub mu: Matrix,
    pub mu_perm: Vec<usize>,
    pub r: u32,
    pub inner: Matrix,
    /// Simple root vectors rescaled along `μ̄`-orbits, with partners.
    pub e: Vec<Vec<Scalar>>,
    pub f: Vec<Vec<Scalar>>,
    /// `γ₀E′_i = ζ^{s_i} E′_{μ̄(i)}`.
    pub simple_exponents: Vec<u32>,
    pub generators: Vec<AffineGenerator>,
    /// `a_ij = α_j(H_i)`.
    pub affine_cartan: Vec<Vec<i64>>,
    pub marks: Vec<i64>,
}

impl TorsionFactorization {
    pub fn raw_exponents(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.exponent).collect()
    }

    pub fn classes(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.class).collect()
    }

    /// `X_N^{(r)}`.
    pub fn affine_type(&self) -> String {
        format!("{}^({})", self.datum.type_label, self.r)
    }

    /// The root of unity `ε = ζ^{ν₀/r}` grading by `μ`.
    pub fn epsilon(&self) -> Scalar {
        self.zeta.pow((self.nu0 / self.r) as i64).expect("root of unity")
    }
}

/// `k` with `v = ζ^k w` for some listed `w`, returning `(index, k)`.
fn match_multiple(v: &[Scalar], ws: &[Vec<Scalar>]) -> Option<(usize, Scalar)> {
    ws.iter().enumerate().find_map(|(j, w)| {
        let p = w.iter().position(|x| !x.is_zero())?;
        let l = v[p].div_ref(&w[p])?;
        (vec_scale(w, &l) == v).then_some((j, l))
    })
}

fn permutation_order(p: &[usize]) -> u32 {
    orbits(p).iter().fold(1u32, |acc, o| acc.lcm(&(o.len() as u32)))
}

/// Orbits of a permutation, each starting at its smallest element.
fn orbits(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut o = vec![i];
        seen[i] = true;
        let mut j = p[i];
        while j != i {
            seen[j] = true;
            o.push(j);
            j = p[j];
        }
        out.push(o);
    }
    out
}

/// The automorphism determined on generators by `gens[k] ↦ images[k]`.
pub fn automorphism_from_generators(lie: &LieAlgebra, gens: &[Vec<Scalar>], images: &[Vec<Scalar>]) -> Result<Matrix> {
    let n = lie.dim();
    let mut span = Subspace::zero(n);
    let mut basis: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    for (g, im) in gens.iter().zip(images) {
        let next = span.sum(&Subspace::span(n, std::slice::from_ref(g)));
        if next.dim() > span.dim() {
            span = next;
            basis.push((g.clone(), im.clone()));
        }
    }
    let mut idx = 0;
    while span.dim() < n && idx < basis.len() {
        for (g, im) in gens.iter().zip(images) {
            let v = lie.bracket(g, &basis[idx].0)?;
            let next = span.sum(&Subspace::span(n, std::slice::from_ref(&v)));
            if next.dim() > span.dim() {
                span = next;
                let w = lie.bracket(im, &basis[idx].1)?;
                basis.push((v, w));
            }
        }
        idx += 1;
    }
    if span.dim() < n {
        return Err(Error::Internal("the generators do not generate the algebra".into()));
    }
    let src = Matrix::from_columns(&basis.iter().map(|b| b.0.clone()).collect::<Vec<_>>(), n);
    let dst = Matrix::from_columns(&basis.iter().map(|b| b.1.clone()).collect::<Vec<_>>(), n);
    let map = dst.mul(&src.inverse().expect("basis"));
    if !verify_isomorphism(&map, lie, lie)? {
        return Err(Error::Internal(
            "generator assignment does not extend to an automorphism".into(),
        ));
    }
    Ok(map)
}

fn discrete_log(l: &Scalar, zeta: &Scalar, nu: u32, what: &str) -> Result<u32> {
    l.discrete_log(zeta, nu)
        .ok_or_else(|| Error::Internal(format!("{what}: {l} is not a power of the root")))
}

/// Factors `γ₀` as a diagram automorphism times an inner torsion.
pub fn factor_torsion(
    lie: &LieAlgebra,
    datum: &RootDatum,
    gamma0: &Matrix,
    zeta: &Scalar,
) -> Result<TorsionFactorization> {
    let n = lie.dim();
    let nu0 = zeta
        .root_order()
        .ok_or_else(|| Error::NotFiniteOrder(format!("{zeta} is not a root of unity")))?;
    if !gamma0.pow(nu0).is_identity() {
        return Err(Error::NotFiniteOrder(format!(
            "the automorphism does not have order dividing {nu0}"
        )));
    }
    if !verify_isomorphism(gamma0, lie, lie)? {
        return Err(Error::Precondition("not a Lie algebra automorphism".into()));
    }
    if gamma0.mul_vec(&datum.regular) != datum.regular {
        return Err(Error::Precondition("the regular element is not fixed".into()));
    }
    let rank = datum.rank();
    let mut perm = Vec::with_capacity(rank);
    let mut mult = Vec::with_capacity(rank);
    for e in &datum.e {
        let (j, l) = match_multiple(&gamma0.mul_vec(e), &datum.e)
            .ok_or_else(|| Error::Internal("the automorphism does not permute simple root spaces".into()))?;
        perm.push(j);
        mult.push(l);
    }
    let c = &datum.cartan;
    if (0..rank).any(|i| (0..rank).any(|j| c[perm[i]][perm[j]] != c[i][j])) {
        return Err(Error::Internal(
            "induced permutation is not a diagram automorphism".into(),
        ));
    }
    let r = permutation_order(&perm);
    if nu0 % r != 0 {
        return Err(Error::Internal(format!("diagram order {r} does not divide {nu0}")));
    }

    // Per orbit, γ₀^L E′_i = Λ E′_i with Λ = ζ^S; pick s with L s ≡ S so that
    // the inner part has the smallest order.
    let orbs = orbits(&perm);
    let mut choices: Vec<Vec<u32>> = Vec::new();
    for o in &orbs {
        let lambda = o.iter().fold(Scalar::one(), |acc, &i| acc.mul_ref(&mult[i]));
        let s_total = discrete_log(&lambda, zeta, nu0, "orbit multiplier")?;
        let opts: Vec<u32> = (0..nu0).filter(|&s| (o.len() as u32 * s) % nu0 == s_total).collect();
        if opts.is_empty() {
            return Err(Error::Internal("no consistent exponent on an orbit".into()));
        }
        choices.push(opts);
    }
    let order_of = |s: u32| nu0 / s.gcd(&nu0);
    let mut best: Option<(u32, Vec<u32>)> = None;
    let mut pick = vec![0usize; orbs.len()];
    loop {
        let s: Vec<u32> = pick.iter().zip(&choices).map(|(&k, c)| c[k]).collect();
        let ord = s.iter().fold(1u32, |a, &x| a.lcm(&order_of(x)));
        if best.as_ref().map_or(true, |(b, bs)| ord < *b || (ord == *b && s < *bs)) {
            best = Some((ord, s));
        }
        let Some(pos) = (0..pick.len()).find(|&k| pick[k] + 1 < choices[k].len()) else {
            break;
        };
        pick[pos] += 1;
        for p in pick.iter_mut().take(pos) {
            *p = 0;
        }
    }
    let orbit_s = best.map(|b| b.1).unwrap_or_default();

    let mut e = datum.e.clone();
    let mut simple_exponents = vec![0u32; rank];
    for (o, &s) in orbs.iter().zip(&orbit_s) {
        let zs_inv = zeta.pow(-(s as i64)).expect("root of unity");
        for w in o.windows(2) {
            e[w[1]] = vec_scale(&gamma0.mul_vec(&e[w[0]]), &zs_inv);
        }
        for &i in o {
            simple_exponents[i] = s;
        }
    }
    let mut f = Vec::with_capacity(rank);
    for i in 0..rank {
        let p = e[i].iter().position(|x| !x.is_zero()).expect("nonzero");
        let scale = datum.e[i][p].div_ref(&e[i][p]).expect("nonzero");
        f.push(vec_scale(&datum.f[i], &scale));
    }

    let mut gens = e.clone();
    gens.extend(f.iter().cloned());
    let mut imgs: Vec<Vec<Scalar>> = perm.iter().map(|&j| e[j].clone()).collect();
    imgs.extend(perm.iter().map(|&j| f[j].clone()));
    let mu = automorphism_from_generators(lie, &gens, &imgs)?;
    if !mu.pow(r).is_identity() {
        return Err(Error::Internal("diagram automorphism has the wrong order".into()));
    }
    let inner = mu
        .inverse()
        .ok_or_else(|| Error::Internal("singular automorphism".into()))?
        .mul(gamma0);
    if inner.mul(&mu) != mu.mul(&inner) {
        return Err(Error::Internal(
            "inner factor does not commute with the diagram automorphism".into(),
        ));
    }
    for i in 0..rank {
        let z = zeta.pow(simple_exponents[i] as i64).expect("root of unity");
        if inner.mul_vec(&e[i]) != vec_scale(&e[i], &z) {
            return Err(Error::Internal(
                "inner factor is not diagonal on simple root vectors".into(),
            ));
        }
    }

    let eps = zeta.pow((nu0 / r) as i64).expect("root of unity");
    let x = &datum.regular;
    let mut pairs: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    if r == 1 {
        let low = datum.roots.iter().min_by_key(|r| r.height).expect("roots");
        let high = datum.roots.iter().max_by_key(|r| r.height).expect("roots");
        pairs.push((low.vector.clone(), high.vector.clone()));
        pairs.extend(e.iter().cloned().zip(f.iter().cloned()));
    } else {
        for o in &orbs {
            let sum = |vs: &[Vec<Scalar>]| o.iter().skip(1).fold(vs[o[0]].clone(), |a, &i| vec_add(&a, &vs[i]));
            pairs.push((sum(&e), sum(&f)));
        }
        // The extra generator is the lowest ad x′-weight vector of 𝔤^{1̄}.
        let eps_inv = eps.inv().expect("nonzero");
        let v1 = mu.sub(&Matrix::identity(n).scale(&eps)).kernel_basis();
        let vm1 = mu.sub(&Matrix::identity(n).scale(&eps_inv)).kernel_basis();
        let (s1, sm1) = (Subspace::span(n, &v1), Subspace::span(n, &vm1));
        let ad = lie.ad(x);
        let mut heights: Vec<i64> = datum.roots.iter().map(|r| r.height).collect();
        heights.sort_unstable();
        heights.dedup();
        let mut extra = None;
        for &k in &heights {
            let wk = Subspace::span(n, &ad.sub(&Matrix::identity(n).scale(&Scalar::int(k))).kernel_basis());
            let low = s1.intersect(&wk);
            if low.dim() == 0 {
                continue;
            }
            let wmk = Subspace::span(n, &ad.add(&Matrix::identity(n).scale(&Scalar::int(k))).kernel_basis());
            let high = sm1.intersect(&wmk);
            if low.dim() != 1 || high.dim() != 1 {
                return Err(Error::Unsupported(
                    "extremal weight space of the twisted part is not a line".into(),
                ));
            }
            extra = Some((low.basis()[0].clone(), high.basis()[0].clone()));
            break;
        }
        pairs.push(extra.ok_or_else(|| Error::Internal("twisted part has no weight vectors".into()))?);
    }

    let mut generators = Vec::new();
    for (ei, fi) in pairs {
        let hi = lie.bracket(&ei, &fi)?;
        let c = weight(lie, &hi, &ei)
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::Internal("degenerate affine generator".into()))?;
        let s = Scalar::int(2).div_ref(&c).expect("nonzero");
        let (fi, hi) = (vec_scale(&fi, &s), vec_scale(&hi, &s));
        let ge = match_multiple(&gamma0.mul_vec(&ei), std::slice::from_ref(&ei))
            .ok_or_else(|| Error::Internal("affine generator is not a γ₀-eigenvector".into()))?
            .1;
        let me = match_multiple(&mu.mul_vec(&ei), std::slice::from_ref(&ei))
            .ok_or_else(|| Error::Internal("affine generator is not a μ-eigenvector".into()))?
            .1;
        generators.push(AffineGenerator {
            exponent: discrete_log(&ge, zeta, nu0, "generator eigenvalue")?,
            class: discrete_log(&me, &eps, r, "diagram eigenvalue")?,
            e: ei,
            f: fi,
            h: hi,
        });
    }
    let affine_cartan = generators
        .iter()
        .map(|gi| {
            generators
                .iter()
                .map(|gj| {
                    integer_weight(lie, &gi.h, &gj.e)
                        .ok_or_else(|| Error::Internal("non-integral affine Cartan entry".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let marks = marks_of(&affine_cartan)?;

    Ok(TorsionFactorization {
        lie: lie.clone(),
        datum: datum.clone(),
        gamma0: gamma0.clone(),
        zeta: zeta.clone(),
        nu0,
        mu,
        mu_perm: perm,
        r,
        inner,
        e,
        f,
        simple_exponents,
        generators,
        affine_cartan,
        marks,
    })
}

/// The primitive positive kernel vector of an affine Cartan matrix.
pub fn marks_of(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let m = Matrix::from_fn(cartan.len(), cartan.len(), |i, j| Scalar::int(cartan[i][j]));
    let ker = m.kernel_basis();
    if ker.len() != 1 {
        return Err(Error::Internal(format!(
            "affine Cartan matrix has corank {}",
            ker.len()
        )));
    }
    let q: Vec<crate::Rational> = ker[0]
        .iter()
        .map(|x| {
            x.to_rational()
                .ok_or_else(|| Error::Internal("irrational kernel".into()))
        })
        .collect::<Result<_>>()?;
    let den = q.iter().fold(num_bigint::BigInt::one(), |a, x| a.lcm(x.denom()));
    let ints: Vec<num_bigint::BigInt> = q
        .iter()
        .map(|x| (x * crate::Rational::from(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |a, x| a.gcd(x));
    let out: Vec<i64> = ints.iter().map(|x| i64::try_from(x / &g).expect("small")).collect();
    let sign = if out.iter().all(|&a| a > 0) {
        1
    } else if out.iter().all(|&a| a < 0) {
        -1
    } else {
        return Err(Error::Internal("affine Cartan kernel is not positive".into()));
    };
    Ok(out.into_iter().map(|a| a * sign).collect())
}

/// Kac coordinates with the affine Weyl word that produced them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KacCoordinates {
    /// Exponents of the generators before normalisation.
    pub raw: Vec<u32>,
    pub s: Vec<u32>,
    pub marks: Vec<i64>,
    pub r: u32,
    pub nu0: u32,
    /// Simple reflections in the order they are applied.
    pub weyl_word: Vec<usize>,
    /// Lexicographically smallest image of `s` under affine diagram symmetries.
    pub canonical: Vec<u32>,
    /// True when `canonical` differs from `s`.
    pub symmetric_relabelling: bool,
}

impl KacCoordinates {
    /// The word as a product, rightmost reflection first: `[0, 1]` is `σ1σ0`.
    pub fn word_string(&self) -> String {
        if self.weyl_word.is_empty() {
            return "1".into();
        }
        self.weyl_word.iter().rev().map(|j| format!("σ{j}")).collect()
    }

    /// Applies the Weyl word to the raw exponents, lifting the all-zero
    /// residue vector as the search does.
    pub fn replay(&self, cartan: &[Vec<i64>]) -> Option<Vec<u32>> {
        as_kac(
            &apply_word(&self.raw, &self.weyl_word, cartan, self.nu0),
            &self.marks,
            self.r,
            self.nu0,
        )
    }
}

/// The simple reflection `σ_j` acting on exponent residues.
pub fn reflect(s: &[u32], j: usize, cartan: &[Vec<i64>], nu0: u32) -> Vec<u32> {
    let m = nu0 as i64;
    (0..s.len())
        .map(|i| {
            let v = if i == j {
                -(s[j] as i64)
            } else {
                s[i] as i64 - cartan[j][i] * s[j] as i64
            };
            v.rem_euclid(m) as u32
        })
        .collect()
}

pub fn apply_word(raw: &[u32], word: &[usize], cartan: &[Vec<i64>], nu0: u32) -> Vec<u32> {
    word.iter().fold(raw.to_vec(), |s, &j| reflect(&s, j, cartan, nu0))
}

fn kac_sum(s: &[u32], marks: &[i64], r: u32) -> i64 {
    r as i64 * s.iter().zip(marks).map(|(&x, &a)| x as i64 * a).sum::<i64>()
}

/// Accepts residues that are Kac coordinates, lifting the all-zero vector.
fn as_kac(s: &[u32], marks: &[i64], r: u32, nu0: u32) -> Option<Vec<u32>> {
    if kac_sum(s, marks, r) == nu0 as i64 {
        return Some(s.to_vec());
    }
    if s.iter().all(|&x| x == 0) {
        let i = marks.iter().position(|&a| r as i64 * a == nu0 as i64)?;
        let mut out = s.to_vec();
        out[i] = 1;
        return Some(out);
    }
    None
}

/// Breadth-first search over affine Weyl images of the raw exponents,
/// trying reflections in index order, until `ν₀ = r Σ a_i s_i` holds.
pub fn normalize_kac(
    raw: &[u32],
    cartan: &[Vec<i64>],
    marks: &[i64],
    r: u32,
    nu0: u32,
) -> Result<(Vec<u32>, Vec<usize>)> {
    let bound = 10 * nu0 as usize * raw.len();
    let mut seen = HashSet::from([raw.to_vec()]);
    let mut queue = VecDeque::from([(raw.to_vec(), Vec::<usize>::new())]);
    while let Some((s, word)) = queue.pop_front() {
        if let Some(k) = as_kac(&s, marks, r, nu0) {
            return Ok((k, word));
        }
        if word.len() >= bound {
            continue;
        }
        for j in 0..s.len() {
            let t = reflect(&s, j, cartan, nu0);
            if seen.insert(t.clone()) {
                let mut w = word.clone();
                w.push(j);
                queue.push_back((t, w));
            }
        }
    }
    Err(Error::SearchExhausted(format!(
        "no Kac coordinates in the affine Weyl orbit of {raw:?} (ν₀ = {nu0})"
    )))
}

/// Permutations of the affine nodes preserving the Cartan matrix.
pub fn diagram_symmetries(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    fn extend(cartan: &[Vec<i64>], p: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = cartan.len();
        let k = p.len();
        if k == n {
            out.push(p.clone());
            return;
        }
        for c in 0..n {
            if used[c]
                || (0..=k).any(|i| {
                    let pi = if i == k { c } else { p[i] };
                    cartan[pi][c] != cartan[i][k] || cartan[c][pi] != cartan[k][i]
                })
            {
                continue;
            }
            used[c] = true;
            p.push(c);
            extend(cartan, p, used, out);
            p.pop();
            used[c] = false;
        }
    }
    let mut out = Vec::new();
    extend(cartan, &mut Vec::new(), &mut vec![false; cartan.len()], &mut out);
    out
}

pub fn kac_coordinates(fact: &TorsionFactorization) -> Result<KacCoordinates> {
    let raw = fact.raw_exponents();
    let lifts = fact.marks.iter().any(|&a| fact.r as i64 * a == fact.nu0 as i64);
    if raw.iter().all(|&x| x == 0) && !lifts {
        return Err(Error::Precondition(format!(
            "all exponents vanish: the automorphism has order below {}",
            fact.nu0
        )));
    }
    let (s, weyl_word) = normalize_kac(&raw, &fact.affine_cartan, &fact.marks, fact.r, fact.nu0)?;
    let g = s.iter().fold(0u32, |a, &x| a.gcd(&x));
    if g != 1 {
        return Err(Error::Precondition(format!(
            "Kac coordinates {s:?} are not coprime: the automorphism has order below {}",
            fact.nu0
        )));
    }
    let canonical = diagram_symmetries(&fact.affine_cartan)
        .iter()
        .map(|p| p.iter().map(|&i| s[i]).collect::<Vec<_>>())
        .min()
        .unwrap_or_else(|| s.clone());
    Ok(KacCoordinates {
        raw,
        symmetric_relabelling: canonical != s,
        canonical,
        s,
        marks: fact.marks.clone(),
        r: fact.r,
        nu0: fact.nu0,
        weyl_word,
    })
}
