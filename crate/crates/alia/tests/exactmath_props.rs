use alia::exactmath::{eigenprojectors_with_root, ExactMatrix, Field};
use alia::{Matrix, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn cyc(order: u32) -> impl Strategy<Value = Scalar> {
    let phi = alia::exactmath::euler_phi(order);
    prop::collection::vec((-6i64..=6, 1i64..=4), phi).prop_map(move |v| {
        let coeffs = v
            .into_iter()
            .map(|(n, d)| BigRational::new(n.into(), d.into()))
            .collect();
        Scalar::from_coeffs(order, coeffs).unwrap()
    })
}

fn any_cyc() -> impl Strategy<Value = Scalar> {
    prop_oneof![cyc(1), cyc(3), cyc(4), cyc(5), cyc(6), cyc(12)]
}

proptest! {
    #[test]
    fn field_axioms(a in any_cyc(), b in any_cyc(), c in any_cyc()) {
        prop_assert_eq!(a.add_ref(&b).sub_ref(&b), a.clone());
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        if !b.is_zero() {
            prop_assert_eq!(a.mul_ref(&b).div_ref(&b).unwrap(), a.clone());
            prop_assert!(b.mul_ref(&b.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn display_round_trips(a in any_cyc()) {
        let s = a.to_string();
        let back: Scalar = s.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), s);
    }

    #[test]
    fn kernel_is_exact(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 1..5)) {
        let m = ExactMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect(),
        ).unwrap();
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.len(), 6);
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }
}

// Fraction-free (Bareiss) rank over the integers as an independent oracle.
fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                a[i][j] = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[test]
fn rank_four_kernel_matches_fraction_free_oracle() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        // A 5×7 matrix of rank 4: product of random 5×4 and 4×7 factors.
        let l: Vec<Vec<i64>> = (0..5)
            .map(|_| (0..4).map(|_| rng.gen_range(-4..=4)).collect())
            .collect();
        let r: Vec<Vec<i64>> = (0..4)
            .map(|_| (0..7).map(|_| rng.gen_range(-4..=4)).collect())
            .collect();
        let prod: Vec<Vec<i64>> = (0..5)
            .map(|i| (0..7).map(|j| (0..4).map(|k| l[i][k] * r[k][j]).sum()).collect())
            .collect();
        let oracle = bareiss_rank(
            prod.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        );
        let m = Matrix::from_rows(
            prod.iter()
                .map(|row| row.iter().map(|&x| Scalar::int(x)).collect())
                .collect(),
        )
        .unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.len(), 7 - oracle);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }
}

#[test]
fn sl2_rotation_eigenspaces() {
    // Conjugation by diag(ζ, ζ⁻¹) on the (h, e, f) basis.
    let z = Scalar::zeta(5);
    let g = Matrix::diag(&[z.clone(), z.pow(-1).unwrap()]);
    let sl2 = alia::liealg::sl2::<Scalar>();
    let a = sl2.conjugation(&g).unwrap();
    // Oracle: conjugate each basis matrix directly.
    let ginv = g.inverse().unwrap();
    for (i, b) in sl2.basis.iter().enumerate() {
        let c = g.mul(b).mul(&ginv);
        let scale = [0i64, 2, -2][i];
        assert_eq!(c, b.scale(&z.pow(scale).unwrap()));
    }
    let ps = eigenprojectors_with_root(&a, 5, &z).unwrap();
    let ranks: Vec<usize> = ps.iter().map(|p| p.rank()).collect();
    assert_eq!(ranks, vec![1, 0, 1, 1, 0]);
    assert!(!ps[0].get(0, 0).is_zero());
    assert!(!ps[2].get(1, 1).is_zero());
    assert!(!ps[3].get(2, 2).is_zero());
    let sum = ps.iter().fold(Matrix::zeros(3, 3), |acc, p| acc.add(p));
    assert!(sum.is_identity());
    for (i, p) in ps.iter().enumerate() {
        for (j, q) in ps.iter().enumerate() {
            let pq = p.mul(q);
            if i == j {
                assert_eq!(pq, *p);
            } else {
                assert!(pq.is_zero());
            }
        }
        assert_eq!(a.mul(p), p.scale(&z.pow(i as i64).unwrap()));
    }
}
