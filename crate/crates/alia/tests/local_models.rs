use alia::equivariant::quotient_by_jet_ideal;
use alia::presets;
use alia::truncur::{build_at, leading_coefficient_iso};

fn certify(name: &str, ms: std::ops::RangeInclusive<usize>) {
    let l = presets::load(name).unwrap();
    let x0 = l.point.clone().unwrap();
    for m in ms {
        let q = quotient_by_jet_ideal(&l.action, &x0, m, 0).unwrap();
        let t = build_at(&l.action, &x0, m).unwrap();
        assert_eq!(q.dim(), t.dim(), "{name} m={m}");
        let f = leading_coefficient_iso(&q, &t).unwrap();
        assert_eq!(f.rank(), t.dim());
        q.algebra.check_jacobi().unwrap();
    }
}

#[test]
fn sl2_z5_local_models() {
    certify("sl2-z5", 1..=10);
}

#[test]
fn trivial_local_models() {
    certify("trivial-sl2", 1..=5);
}

#[test]
fn d6_b_local_models() {
    certify("sl3-d6-b", 1..=6);
}

#[test]
fn d6_c_local_models() {
    certify("sl3-d6-c", 1..=6);
}

#[test]
fn d6_a_local_models() {
    certify("sl3-d6-a", 1..=6);
}
