use num_bigint::BigInt;
use proptest::prelude::*;
use tamedef::deformation::{
    build_rprime, build_sprime, build_theta, build_theta_with, build_tube_ring, c_n, c_n_recursive, det,
    quotient_structure, smith_valuations, verify_iota, FixedGroupAlgebra, Involution, ModuleStructure, Span,
};
use tamedef::scalars::WittRing;
use tamedef::DefectType;

fn w(n: u32) -> WittRing {
    WittRing::new(n).unwrap()
}

fn m(n: u32) -> usize {
    1 << (n - 2)
}

#[test]
fn fiber_dimensions() {
    for n in 3..=7 {
        for ty in DefectType::ALL {
            if n < ty.n_min().max(3) {
                continue;
            }
            let r = build_rprime(n, ty, 24).unwrap();
            assert_eq!(r.fiber_dim(), m(n) - 1, "{ty} n={n}");
            let t = build_tube_ring(n, ty, 24).unwrap();
            assert_eq!(t.fiber_dim(), m(n), "{ty} n={n}");
            assert_eq!(t.structure, ModuleStructure { free_rank: m(n) - 1, torsion: vec![1] });
        }
    }
}

/// T(σ²)·σ^k is T(σ²) or σT(σ²), so the ideal they generate is W·T(σ²) ⊕ W·σT(σ²).
#[test]
fn sprime_ideal_is_spanned_by_its_generators() {
    for n in 4..=6 {
        for tau in [Involution::Inversion, Involution::Semidihedral] {
            let alg = FixedGroupAlgebra::new(n, tau, w(24)).unwrap();
            let gens = vec![alg.t_sigma2(), alg.sigma_t_sigma2()];
            let rows = alg.ideal_rows(&gens).unwrap();
            let basis: Vec<Vec<u64>> = gens.iter().map(|g| alg.coords(g).unwrap()).collect();
            let span = Span::new(alg.ring(), &basis);
            assert!(rows.iter().all(|r| span.contains(r)), "n={n} {tau:?}");
            let back = Span::new(alg.ring(), &rows);
            assert!(basis.iter().all(|b| back.contains(b)));
            assert_eq!(alg.rank(), m(n) + 1);
            let ty = if tau == Involution::Semidihedral { DefectType::SD } else { DefectType::D };
            assert_eq!(build_sprime(n, ty, 24).unwrap().rank(), Some(m(n) - 1));
        }
    }
}

#[test]
fn theta_ranks() {
    assert_eq!(build_theta(5, 24).unwrap().rank(), Some(8));
    assert_eq!(build_theta(4, 24).unwrap().rank(), Some(4));
    assert_eq!(build_theta_with(5, Involution::Inversion, 24).unwrap().rank(), Some(8));
}

#[test]
fn c_n_is_odd_and_follows_the_recursion() {
    let mut c = BigInt::from(3);
    for n in 4..=8 {
        assert_eq!(c_n_recursive(n).unwrap(), c);
        assert_eq!(&c % 2, BigInt::from(1));
        // Computed in the group ring at a precision where the value is still visible.
        let ring = w(48);
        let got = c_n(n, 48).unwrap();
        assert_eq!(ring.from_i64(got as i64), ring.from_bigint(&c), "n={n}");
        c = 2 * &c * &c - 1;
    }
    assert_eq!(c_n(7, 48).unwrap(), 665_857);
    assert_eq!(c_n(8, 48).unwrap(), 886_731_088_897);
}

#[test]
fn iota_is_multiplicative_and_injective_for_small_n() {
    for n in 3..=6u32 {
        for tau in [Involution::Inversion, Involution::Semidihedral] {
            if n == 3 && tau == Involution::Semidihedral {
                continue;
            }
            let cert = verify_iota(n, tau, 24).unwrap();
            assert!(cert.multiplicative, "n={n} {tau:?}");
            let e = (1u64 << (n - 1)) - 1;
            assert_eq!(cert.determinant, format!("-{}", BigInt::from(1) << e));
            assert_eq!(cert.determinant_valuation, Some(e));
            assert_eq!(cert.injective, n <= 5, "n={n}");
        }
    }
}

#[test]
fn precision_abort() {
    let ring = w(8);
    let err = smith_valuations(ring, &[vec![1 << 6]]).unwrap_err();
    assert!(err.is_abort());
    assert_eq!(smith_valuations(ring, &[vec![1 << 5]]).unwrap(), vec![5]);
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-12i64..12, c), r))
}

fn lift(ring: WittRing, m: &[Vec<i64>]) -> Vec<Vec<u64>> {
    m.iter().map(|r| r.iter().map(|&x| ring.from_i64(x)).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_invariants_survive_row_operations(m in small_matrix(), f in -9i64..9, i in 0usize..4, j in 0usize..4) {
        let ring = w(20);
        let a = lift(ring, &m);
        let mut b = a.clone();
        let (i, j) = (i % a.len(), j % a.len());
        if i != j {
            let row = b[j].clone();
            for (x, y) in b[i].iter_mut().zip(row) {
                *x = ring.add(*x, ring.mul(ring.from_i64(f), y));
            }
        }
        b.swap(0, i);
        let (va, vb) = (smith_valuations(ring, &a), smith_valuations(ring, &b));
        if let (Ok(mut va), Ok(mut vb)) = (va, vb) {
            va.sort();
            vb.sort();
            prop_assert_eq!(va, vb);
        }
    }

    #[test]
    fn smith_valuations_sum_to_det_valuation(m in small_matrix()) {
        let ring = w(20);
        let k = m.len().min(m[0].len());
        let sq: Vec<Vec<i64>> = m.iter().take(k).map(|r| r[..k].to_vec()).collect();
        let a = lift(ring, &sq);
        let d = det(ring, &a);
        let exact = tamedef::scalars::bareiss_det(
            sq.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        );
        prop_assert_eq!(d, ring.from_bigint(&exact));
        if let Ok(v) = smith_valuations(ring, &a) {
            if d != 0 {
                prop_assert_eq!(v.len(), k);
                prop_assert_eq!(v.iter().sum::<u32>(), ring.valuation(d));
            }
        }
    }

    #[test]
    fn span_contains_combinations(m in small_matrix(), coeffs in prop::collection::vec(-40i64..40, 4)) {
        let ring = w(16);
        let a = lift(ring, &m);
        let span = Span::new(ring, &a);
        let cols = a[0].len();
        let mut x = vec![0u64; cols];
        for (row, &c) in a.iter().zip(&coeffs) {
            for (xj, &rj) in x.iter_mut().zip(row) {
                *xj = ring.add(*xj, ring.mul(ring.from_i64(c), rj));
            }
        }
        prop_assert!(span.contains(&x));
        for row in &a {
            prop_assert!(span.contains(row));
        }
    }

    #[test]
    fn quotient_fiber_matches_rank_mod_two(m in small_matrix()) {
        let ring = w(20);
        let a = lift(ring, &m);
        let cols = a[0].len();
        if let Ok(s) = quotient_structure(ring, cols, &a) {
            // dim (W^c / span) ⊗ GF(2) = c − rank of the matrix over GF(2).
            let mut rows: Vec<Vec<u8>> = a.iter().map(|r| r.iter().map(|&x| (x & 1) as u8).collect()).collect();
            let mut rank = 0;
            for c in 0..cols {
                if let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] == 1) {
                    rows.swap(rank, p);
                    for i in 0..rows.len() {
                        if i != rank && rows[i][c] == 1 {
                            let pr = rows[rank].clone();
                            for (x, y) in rows[i].iter_mut().zip(pr) {
                                *x ^= y;
                            }
                        }
                    }
                    rank += 1;
                }
            }
            prop_assert_eq!(s.fiber_dim(), cols - rank);
        }
    }

    #[test]
    fn fixed_algebra_is_a_commutative_subring(
        n in 3u32..=6,
        sd in any::<bool>(),
        x in prop::collection::vec(0u64..1 << 20, 17),
        y in prop::collection::vec(0u64..1 << 20, 17),
    ) {
        let tau = if sd && n >= 4 { Involution::Semidihedral } else { Involution::Inversion };
        let alg = FixedGroupAlgebra::new(n, tau, w(20)).unwrap();
        let r = alg.rank();
        let (a, b) = (alg.from_coords(&x[..r]), alg.from_coords(&y[..r]));
        prop_assert!(alg.is_fixed(&a) && alg.is_fixed(&b));
        let ab = alg.mul(&a, &b);
        prop_assert!(alg.is_fixed(&ab));
        prop_assert_eq!(&ab, &alg.mul(&b, &a));
        prop_assert_eq!(alg.from_coords(&alg.coords(&ab).unwrap()), ab);
        prop_assert!(alg.is_fixed(&alg.h()));
    }
}
