//! Finite groups acting on a Lie algebra and on the sphere at once.

use crate::exactmath::ExactMatrix;
use crate::funring::{linearizing_coordinate, Chart, Mobius, SpherePoint};
use crate::liealg::verify_isomorphism;
use crate::{Error, LieAlgebra, Matrix, Result, Scalar};

/// Hard cap on the group order during closure.
pub const MAX_GROUP_ORDER: usize = 200;

/// One abstract group element, realised on 𝔤 and on the sphere.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    pub lie: Matrix,
    pub mobius: Mobius,
}

impl GroupElement {
    pub fn compose(&self, o: &GroupElement) -> GroupElement {
        GroupElement {
            lie: self.lie.mul(&o.lie),
            mobius: self.mobius.compose(&o.mobius),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroupAction {
    lie: LieAlgebra,
    elements: Vec<GroupElement>,
    generators: Vec<usize>,
    table: Vec<Vec<usize>>,
    poles: Vec<SpherePoint>,
    lie_faithful: bool,
}

/// The stabiliser `⟨γ₀⟩` of a point.
#[derive(Clone, Debug)]
pub struct Stabilizer {
    /// Index of `γ₀` in the element list.
    pub generator: usize,
    pub order: u32,
    pub members: Vec<usize>,
}

impl GroupAction {
    /// Closes the generators under composition and validates the action.
    pub fn new(lie: LieAlgebra, generators: Vec<(Matrix, Mobius)>, poles: Vec<SpherePoint>) -> Result<Self> {
        let n = lie.dim();
        if poles.is_empty() {
            return Err(Error::Config("the pole set must be nonempty".into()));
        }
        for (k, (m, mob)) in generators.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "generator {k}: Lie matrix must be {n}x{n}"
                )));
            }
            if !verify_isomorphism(m, &lie, &lie)? {
                return Err(Error::Precondition(format!(
                    "generator {k} is not a Lie algebra automorphism"
                )));
            }
            for p in &poles {
                if !poles.contains(&mob.apply(p)) {
                    return Err(Error::Precondition(format!(
                        "generator {k} moves pole {p} out of the pole set"
                    )));
                }
            }
        }
        let id = GroupElement {
            lie: ExactMatrix::identity(n),
            mobius: Mobius::identity(),
        };
        let mut elements = vec![id];
        let gens: Vec<GroupElement> = generators
            .into_iter()
            .map(|(lie, mobius)| GroupElement { lie, mobius })
            .collect();
        let mut frontier = 0;
        while frontier < elements.len() {
            let x = elements[frontier].clone();
            for g in &gens {
                let y = x.compose(g);
                if !elements.contains(&y) {
                    if elements.len() >= MAX_GROUP_ORDER {
                        return Err(Error::NotFiniteOrder(format!(
                            "group closure exceeds {MAX_GROUP_ORDER} elements"
                        )));
                    }
                    elements.push(y);
                }
            }
            frontier += 1;
        }
        let index = |e: &GroupElement, els: &[GroupElement]| els.iter().position(|x| x == e);
        let generators = gens.iter().map(|g| index(g, &elements).expect("closed")).collect();
        let table = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| index(&a.compose(b), &elements).expect("closed"))
                    .collect()
            })
            .collect();
        // Faithfulness on each factor.
        let mut seen_mob: Vec<&Mobius> = Vec::new();
        for e in &elements {
            if seen_mob.contains(&&e.mobius) {
                return Err(Error::Precondition("the action on the sphere is not faithful".into()));
            }
            seen_mob.push(&e.mobius);
        }
        let mut lie_faithful = true;
        for (i, a) in elements.iter().enumerate() {
            if elements[..i].iter().any(|b| b.lie == a.lie) {
                lie_faithful = false;
            }
        }
        Ok(GroupAction {
            lie,
            elements,
            generators,
            table,
            poles,
            lie_faithful,
        })
    }

    /// The trivial group.
    pub fn trivial(lie: LieAlgebra, poles: Vec<SpherePoint>) -> Result<Self> {
        Self::new(lie, Vec::new(), poles)
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `table[i][j]` is the index of `elements[i] ∘ elements[j]`.
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn poles(&self) -> &[SpherePoint] {
        &self.poles
    }

    pub fn is_lie_faithful(&self) -> bool {
        self.lie_faithful
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.table[i].iter().position(|&k| k == 0).expect("group has inverses")
    }

    /// Order of an element.
    pub fn element_order(&self, i: usize) -> u32 {
        let mut acc = i;
        let mut k = 1;
        while acc != 0 {
            acc = self.table[acc][i];
            k += 1;
        }
        k
    }

    /// The orbit of a point.
    pub fn orbit(&self, x: &SpherePoint) -> Vec<SpherePoint> {
        let mut out: Vec<SpherePoint> = Vec::new();
        for e in &self.elements {
            let y = e.mobius.apply(x);
            if !out.contains(&y) {
                out.push(y);
            }
        }
        out
    }

    /// Stabiliser of `x0`. Among the generators of the cyclic stabiliser the
    /// one acting on the linearising chart by the standard root
    /// `exp(2πi/ν₀)` is preferred.
    pub fn stabilizer(&self, x0: &SpherePoint) -> Result<Stabilizer> {
        if self.poles.contains(x0) {
            return Err(Error::Precondition(format!("{x0} lies in the pole set")));
        }
        let members: Vec<usize> = (0..self.elements.len())
            .filter(|&i| self.elements[i].mobius.apply(x0) == *x0)
            .collect();
        let nu = members.len() as u32;
        let gens: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&i| self.element_order(i) == nu)
            .collect();
        if gens.is_empty() {
            return Err(Error::Internal(format!("stabiliser of {x0} is not cyclic")));
        }
        let mut generator = gens[0];
        if x0.as_finite().is_some() && nu > 1 {
            let standard = Scalar::zeta(nu);
            for &g in &gens {
                if linearizing_coordinate(x0, &self.elements[g].mobius.to_matrix())?.zeta == standard {
                    generator = g;
                    break;
                }
            }
        }
        Ok(Stabilizer {
            generator,
            order: nu,
            members,
        })
    }

    /// Stabiliser together with its linearising chart at a finite point.
    pub fn local_chart(&self, x0: &SpherePoint) -> Result<(Stabilizer, Chart)> {
        let st = self.stabilizer(x0)?;
        let chart = linearizing_coordinate(x0, &self.elements[st.generator].mobius.to_matrix())?;
        Ok((st, chart))
    }
}
