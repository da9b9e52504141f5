//! Kac coordinates and root groupoid cochains for the dihedral examples on
//! sl3 and the order five example on sl2.

use alia::kacroots::{self, analyze, analyze_at, apply_word, is_cocycle, local_structure, omega2, KacAnalysis};
use alia::liealg::{sl2, sl3};
use alia::{presets, truncur, Matrix, Scalar};
use proptest::prelude::*;

fn preset(name: &str) -> KacAnalysis {
    let l = presets::load(name).unwrap();
    analyze_at(&l, l.point.as_ref().unwrap()).unwrap()
}

/// Same torsion, regular element found by search instead of the preset hint.
fn searched(name: &str) -> KacAnalysis {
    let l = presets::load(name).unwrap();
    let (g0, zeta, _) = kacroots::torsion_at(&l, l.point.as_ref().unwrap()).unwrap();
    analyze(l.action.lie(), &g0, &zeta, None).unwrap()
}

// Display order of the twisted A2 groupoid elements.
const TWISTED_ORDER: [&[i64]; 8] = [&[0, 0], &[3, 2], &[1, 0], &[0, 1], &[1, 1], &[2, 1], &[3, 1], &[4, 1]];

#[test]
fn inner_generator() {
    let a = preset("sl3-d6-b");
    let k = &a.coordinates;
    assert_eq!(
        (k.s.clone(), k.r, k.nu0, k.marks.clone()),
        (vec![0, 1, 1], 1, 2, vec![1, 1, 1])
    );
    assert_eq!(a.factorization.affine_type(), "A2^(1)");
    assert!(a.factorization.mu.is_identity());
    assert_eq!(a.factorization.datum.roots.len(), 6);
    // ω¹(±α0) = 0, ω¹(±α1) = ω¹(±α2) = 1.
    let w = a.omega1_on(
        &[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 1],
            &[0, 1, 0],
            &[1, 0, 1],
            &[0, 0, 1],
            &[1, 1, 0],
        ],
        false,
    );
    assert_eq!(w.unwrap(), vec![0, 0, 0, 1, 1, 1, 1]);
}

#[test]
fn inner_generator_hexagon() {
    let a = preset("sl3-d6-b");
    let mut edges: Vec<[String; 2]> = a.report().omega2_pairs;
    for e in &mut edges {
        e.sort();
    }
    edges.sort();
    // α1 = (0,1,0), -α1 = α0+α2, α2 = (0,0,1), -α2 = α0+α1.
    let mut expected = vec![
        ["α1".to_string(), "α0+α2".to_string()],
        ["α2".to_string(), "α0+α1".to_string()],
        ["α1".to_string(), "α2".to_string()],
        ["α0+α1".to_string(), "α0+α2".to_string()],
    ];
    for e in &mut expected {
        e.sort();
    }
    expected.sort();
    assert_eq!(edges, expected);
    assert_eq!(a.dot().matches(" -- ").count(), 4);
}

#[test]
fn diagram_generator() {
    let a = preset("sl3-d6-c");
    let k = &a.coordinates;
    assert_eq!((k.s.clone(), k.r, k.nu0), (vec![0, 1], 2, 2));
    assert_eq!(a.factorization.affine_type(), "A2^(2)");
    // μ = c and g = 1.
    assert_eq!(a.factorization.mu, a.factorization.gamma0);
    assert!(a.factorization.inner.is_identity());
    let w = a.omega1_on(&TWISTED_ORDER, false).unwrap();
    let classes: Vec<u32> = TWISTED_ORDER.iter().map(|c| c[1] as u32 % 2).collect();
    assert_eq!(w, classes);
    for &(x, y, _, v) in &a.omega2 {
        let both_odd = a.groupoid.elements[x].class == 1 && a.groupoid.elements[y].class == 1;
        assert_eq!(v, u32::from(both_odd));
    }
}

#[test]
fn mixed_generator() {
    let a = preset("sl3-d6-a");
    let k = &a.coordinates;
    assert_eq!((k.raw.clone(), k.s.clone(), k.nu0, k.r), (vec![4, 1], vec![1, 1], 6, 2));
    assert_eq!(k.word_string(), "σ1σ0");
    assert_eq!(apply_word(&k.raw, &k.weyl_word, &a.factorization.affine_cartan, 6), k.s);
    assert_eq!(k.replay(&a.factorization.affine_cartan), Some(k.s.clone()));
    assert_eq!(a.omega1_on(&TWISTED_ORDER, true).unwrap(), vec![0, 2, 4, 1, 5, 3, 1, 5]);
    assert_eq!(
        a.omega1_on(&TWISTED_ORDER, false).unwrap(),
        vec![0, 5, 1, 1, 2, 3, 4, 5]
    );
    let f = &a.factorization;
    assert_eq!(f.r, 2);
    assert_eq!(f.mu.mul(&f.inner), f.gamma0);
    // The inner factor acts on the simple root vectors by ζ⁴.
    assert_eq!(f.simple_exponents, vec![4, 4]);
}

#[test]
fn fibre_of_the_mixed_generator_is_a_line() {
    let l = presets::load("sl3-d6-a").unwrap();
    let (g0, _, _) = kacroots::torsion_at(&l, l.point.as_ref().unwrap()).unwrap();
    assert_eq!(g0.sub(&Matrix::identity(8)).kernel_basis().len(), 1);
}

#[test]
fn search_agrees_with_hints() {
    for name in ["sl3-d6-a", "sl3-d6-b", "sl3-d6-c", "sl2-z5"] {
        let (h, s) = (preset(name), searched(name));
        // Kac coordinates are defined up to affine diagram symmetries.
        assert_eq!(h.coordinates.canonical, s.coordinates.canonical, "{name}");
    }
}

#[test]
fn omega2_is_a_zero_one_cocycle() {
    for name in ["sl3-d6-a", "sl3-d6-b", "sl3-d6-c", "sl2-z5"] {
        let a = preset(name);
        assert!(a.omega2.iter().all(|t| t.3 <= 1), "{name}");
        assert!(is_cocycle(&a.groupoid, &a.omega2), "{name}");
        let raw = omega2(&a.groupoid, &a.omega1_raw).unwrap();
        assert!(raw.iter().all(|t| t.3 <= 1) && is_cocycle(&a.groupoid, &raw), "{name}");
    }
}

#[test]
fn groupoid_multiplicities() {
    for (name, size) in [("sl3-d6-a", 8), ("sl3-d6-b", 7), ("sl3-d6-c", 8), ("sl2-z5", 3)] {
        let a = preset(name);
        assert_eq!(a.groupoid.len(), size, "{name}");
        let total: usize = a.groupoid.elements.iter().map(|e| e.multiplicity()).sum();
        assert_eq!(total, a.factorization.lie.dim());
    }
}

fn assert_matches_truncur(a: &KacAnalysis, m: usize) {
    let f = &a.factorization;
    let local = local_structure(f, &a.groupoid, m).unwrap();
    let t = truncur::build_with_eigenbasis(&f.lie, &f.gamma0, &f.zeta, m, local.eigenbases.clone()).unwrap();
    assert!(kacroots::same_structure_constants(&local.algebra, &t.realized));
    assert_eq!(
        local.algebra.dim(),
        truncur::build(&f.lie, &f.gamma0, &f.zeta, m).unwrap().dim()
    );
    local.algebra.check_jacobi().unwrap();
}

#[test]
fn local_structure_matches_truncated_currents() {
    assert_matches_truncur(&preset("sl2-z5"), 6);
    assert_matches_truncur(&preset("sl3-d6-c"), 4);
    assert_matches_truncur(&preset("sl3-d6-b"), 5);
    assert_matches_truncur(&preset("sl3-d6-a"), 9);
}

#[test]
fn trivial_torsion() {
    let g = sl2::<Scalar>();
    let a = analyze(&g.algebra, &Matrix::identity(3), &Scalar::int(1), None).unwrap();
    assert_eq!(a.coordinates.s, vec![1, 0]);
    assert!(a.omega2.iter().all(|t| t.3 == 0));
    assert_eq!(a.dot().matches(" -- ").count(), 0);
    let local = local_structure(&a.factorization, &a.groupoid, 2).unwrap();
    assert_eq!(local.algebra.dim(), 6);
    assert_matches_truncur(&a, 2);
}

#[test]
fn identity_with_a_larger_root_is_rejected() {
    let g = sl3::<Scalar>();
    let err = analyze(&g.algebra, &Matrix::identity(8), &Scalar::zeta(6), None).unwrap_err();
    assert_eq!(err.class(), alia::ErrorClass::Math, "{err}");
    assert!(err.to_string().contains("order below 6"), "{err}");
}

/// `conj(P diag(ζ^a, ζ^b, ζ^{-a-b}) P⁻¹)` on sl3 with a unimodular `P`.
fn inner_torsion(a: i64, b: i64, shears: &[(usize, usize, i64)]) -> (Matrix, Scalar) {
    let z = |k: i64| Scalar::zeta_pow(6, k);
    let d = Matrix::diag(&[z(a), z(b), z(-a - b)]);
    let mut p = Matrix::identity(3);
    for &(i, j, c) in shears {
        if i != j {
            let mut e = Matrix::identity(3);
            e.set(i, j, Scalar::int(c));
            p = p.mul(&e);
        }
    }
    let g = p.mul(&d).mul(&p.inverse().unwrap());
    let m = sl3::<Scalar>();
    let g0 = m.conjugation(&g).unwrap();
    let order = truncur::matrix_order(&g0, 6).unwrap();
    (g0, Scalar::zeta_pow(6, 6 / order as i64))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_inner_torsions(a in 0i64..6, b in 0i64..6, shears in prop::collection::vec((0usize..3, 0usize..3, -2i64..3), 0..3)) {
        let (g0, zeta) = inner_torsion(a, b, &shears);
        let lie = sl3::<Scalar>().algebra;
        let an = analyze(&lie, &g0, &zeta, None).unwrap();
        let k = &an.coordinates;
        prop_assert_eq!(an.factorization.datum.roots.len(), 6);
        prop_assert_eq!(an.factorization.datum.rank(), 2);
        prop_assert_eq!(an.factorization.r, 1);
        let sum: i64 = k.s.iter().zip(&k.marks).map(|(&s, &m)| s as i64 * m).sum();
        prop_assert_eq!(sum * k.r as i64, k.nu0 as i64);
        prop_assert_eq!(k.s.iter().fold(0u32, |g, &x| num_integer::gcd(g, x)), 1);
        prop_assert_eq!(k.replay(&an.factorization.affine_cartan), Some(k.s.clone()));
        prop_assert!(an.omega2.iter().all(|t| t.3 <= 1));
        prop_assert!(is_cocycle(&an.groupoid, &an.omega2));
        assert_matches_truncur(&an, 3);
    }
}
