use alia::equivariant::{quotient_by_jet_ideal, FilteredALiA};
use alia::funring::SpherePoint;
use alia::liealg::preset;
use alia::wildness::{
    adjoint_representation, endomorphism_algebra, is_invariant_subspace, makedonskii_classify, solvable_growth,
    Classification,
};
use alia::{presets, Matrix, Scalar};

fn pt(s: &str) -> SpherePoint {
    SpherePoint::parse(s).unwrap()
}

fn int_matrix(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Scalar::int(x)).collect())
            .collect(),
    )
    .unwrap()
}

#[test]
fn sl2_z5_growth() {
    let action = presets::load("sl2-z5").unwrap().action;
    let report = solvable_growth(&action, &pt("0"), 25).unwrap();
    let dims: Vec<usize> = report.rows.iter().map(|r| r.kernel_dim).collect();
    assert!(dims.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(dims[2], 1, "n = 3");
    assert!(dims[14] >= 7, "n = 15");
    assert!(dims[24] >= 10, "n = 25");
    assert!(report.rows.iter().all(|r| r.kernel_solvable));

    // Rank of the order n jets minus the constant jets on the invariant
    // basis of degree ≤ n, computed without the jet-image shortcut.
    let a = FilteredALiA::new(&action, 25).unwrap();
    let r1 = a.jet_matrix(&pt("0"), 1).unwrap().rank();
    for n in [2, 3, 7, 15, 25] {
        assert_eq!(dims[n - 1], a.jet_matrix(&pt("0"), n).unwrap().rank() - r1, "n = {n}");
    }

    // h alone for n ≤ 2, then the nonabelian ⟨h, f z²⟩ and beyond.
    for r in &report.rows {
        let want = if r.n <= 2 {
            Classification::OneDimensional
        } else {
            Classification::Wild
        };
        assert_eq!(r.classification, want, "n = {}", r.n);
    }
    assert_eq!(report.first_wild, Some(3));
    assert_eq!(report.rows[2].certificate.noncentral.as_ref().map(|w| w.index), Some(1));
}

#[test]
fn growth_certificates_replay() {
    let action = presets::load("sl2-z5").unwrap().action;
    let top = quotient_by_jet_ideal(&action, &pt("0"), 12, 0).unwrap();
    let report = solvable_growth(&action, &pt("0"), 12).unwrap();
    assert_eq!(report.rows[11].quotient_dim, top.dim());
    let c = makedonskii_classify(&top.algebra);
    assert_eq!(c.certificate, report.rows[11].certificate);
    assert_eq!(c.certificate.verify(&top.algebra).unwrap(), Classification::Wild);
    for n in 1..=12 {
        let q = quotient_by_jet_ideal(&action, &pt("0"), n, 0).unwrap();
        assert_eq!(report.rows[n - 1].quotient_dim, q.dim());
        assert_eq!(
            makedonskii_classify(&q.algebra).classification,
            report.rows[n - 1].classification
        );
    }
}

#[test]
fn trivial_group_rows() {
    let action = presets::load("trivial-sl2").unwrap().action;
    let report = solvable_growth(&action, &pt("0"), 3).unwrap();
    assert_eq!(report.rows[0].classification, Classification::Semisimple);
    let two = &report.rows[1];
    assert_eq!(two.classification, Classification::Wild);
    assert_eq!(two.radical_dim, 3);
    // z·sl2 squares to zero.
    assert_eq!(two.kernel_dim, 3);
    assert_eq!(two.kernel_derived_dims, vec![3, 0]);
}

#[test]
fn brick_of_the_third_quotient() {
    let action = presets::load("sl2-z5").unwrap().action;
    let q = quotient_by_jet_ideal(&action, &pt("0"), 3, 0).unwrap();
    assert_eq!(makedonskii_classify(&q.algebra).classification, Classification::Wild);

    // The displayed matrices for h and f z².
    let rho = vec![int_matrix(&[&[0, 0], &[0, -2]]), int_matrix(&[&[0, 0], &[2, 0]])];
    assert_eq!(adjoint_representation(&q.algebra), rho);
    let end = endomorphism_algebra(&q.algebra, &rho).unwrap();
    assert_eq!(end.dim, 1);
    assert!(end.is_brick);
    assert_eq!(end.irreducible, Some(false));
    let w = end.invariant_subspace.unwrap();
    assert_eq!(w.len(), 1);
    assert!(is_invariant_subspace(&rho, &w));
}

#[test]
fn adjoint_of_simple_presets() {
    for name in ["sl2", "sl3"] {
        let g = preset::<Scalar>(name).unwrap().algebra;
        let end = endomorphism_algebra(&g, &adjoint_representation(&g)).unwrap();
        assert_eq!(end.dim, 1, "{name}");
        assert!(end.is_brick);
    }
}

#[test]
fn sl2_z5_growth_to_sixty() {
    let action = presets::load("sl2-z5").unwrap().action;
    let report = solvable_growth(&action, &pt("0"), 60).unwrap();
    let dims: Vec<usize> = report.rows.iter().map(|r| r.kernel_dim).collect();
    assert!(dims.windows(2).all(|w| w[0] <= w[1]));
    assert!(dims[59] >= 34);
    assert!(report.rows.iter().all(|r| r.kernel_solvable));
}
