use num_bigint::BigInt;
use proptest::prelude::*;
use tamedef::catalog::{family, integer_det, list_families, Family, FamilyParams};
use tamedef::quiver::PresentedAlgebra;
use tamedef::scalars::{bareiss_det, FField};
use tamedef::DefectType;

type Sparse = Vec<(usize, u8)>;

fn reps(n: u32) -> usize {
    (1 << (n - 2)) - 1
}

#[test]
fn registry_shape() {
    let fams = list_families();
    assert_eq!(fams.len(), 24);
    for f in &fams {
        let want = match f.defect_type() {
            DefectType::D => 2,
            DefectType::Q if matches!(f.alias(), "Q2A" | "Q2B_1" | "Q2B_2") => 4,
            DefectType::Q => 3,
            DefectType::SD => 4,
        };
        assert_eq!(f.n_min(), want, "{}", f.name());
        assert_eq!(f.realizable_as_block(), f.alias() != "Q2B_2", "{}", f.name());
        assert_eq!(family(f.alias()).unwrap(), *f);
        assert_eq!(family(f.name()).unwrap(), *f);
    }
    for absent in ["D(3C)", "Q(3C)", "SD(3F)", "D(3L)", "3L", "3Q", "3R"] {
        assert!(family(absent).is_err(), "{absent} should not resolve");
    }
}

#[test]
fn decomposition_matrix_rows() {
    for f in list_families() {
        for n in f.n_min().max(3)..=6 {
            let dm = f.decomposition_matrix(n).unwrap();
            let top = f.figure().top_height_rows();
            assert_eq!(dm.rows.len(), 4 + reps(n) + top, "{} n={n}", f.name());
            let ones = dm.height_one_family();
            assert_eq!(ones.len(), reps(n));
            assert!(ones.windows(2).all(|w| w[0] == w[1]), "{} n={n}: height-one rows differ", f.name());
        }
    }
}

#[test]
fn cartan_matrix_is_symmetric_positive_definite() {
    for f in list_families() {
        for n in f.n_min()..=6 {
            let c = f.cartan(n).unwrap();
            let k = c.len();
            for i in 0..k {
                for j in 0..k {
                    assert_eq!(c[i][j], c[j][i]);
                }
            }
            // Sylvester's criterion on leading principal minors.
            for size in 1..=k {
                let minor: Vec<Vec<BigInt>> =
                    (0..size).map(|i| (0..size).map(|j| BigInt::from(c[i][j])).collect()).collect();
                assert!(bareiss_det(minor) > BigInt::from(0), "{} n={n}", f.name());
            }
        }
    }
}

/// The determinant is 2^{n + r}, r the number of rows of height n − 2.
#[test]
fn cartan_determinant() {
    for f in list_families() {
        for n in f.n_min()..=6 {
            let det = integer_det(&f.cartan(n).unwrap()).unwrap();
            let r = f.figure().top_height_rows() as u32;
            assert_eq!(det, 1i128 << (n + r), "{} n={n}", f.name());
        }
    }
}

#[test]
fn completion_matches_cartan() {
    for f in list_families() {
        for n in f.n_min()..=5 {
            let alg = f.default_algebra(n).unwrap();
            let c = f.cartan(n).unwrap();
            assert_eq!(alg.cartan(), c, "{} n={n}", f.name());
            assert_eq!(alg.dim() as u64, c.iter().flatten().sum::<u64>());
        }
    }
}

#[test]
fn dimension_is_independent_of_the_scalar() {
    let f = family("SD(2B)₁").unwrap();
    let gf4 = FField::new(2).unwrap();
    for n in 4..=5 {
        let base = f.default_algebra(n).unwrap().dim();
        for c in [0, 1] {
            let alg = f.algebra(n, &FamilyParams::with_c(c), FField::gf2()).unwrap();
            assert_eq!(alg.dim(), base);
        }
        let alg = f.algebra(n, &FamilyParams::with_c(gf4.generator()), gf4).unwrap();
        assert_eq!(alg.dim(), base);
    }
}

#[test]
fn trivial_paths_are_orthogonal_idempotents() {
    for f in list_families() {
        let alg = f.default_algebra(4).unwrap();
        let nv = alg.vertex_count();
        for i in 0..nv {
            for j in 0..nv {
                let want: Sparse = if i == j { vec![(i, 1)] } else { vec![] };
                assert_eq!(alg.mul_basis(i, j), want);
            }
        }
        // 1 = Σ e_i acts as the identity on every basis element.
        for b in 0..alg.dim() {
            let mut left = vec![0u8; alg.dim()];
            for i in 0..nv {
                for (t, c) in alg.mul_basis(i, b) {
                    left[t] ^= c;
                }
            }
            let mut unit = vec![0u8; alg.dim()];
            unit[b] = 1;
            assert_eq!(left, unit);
        }
    }
}

fn mul(alg: &PresentedAlgebra, x: &Sparse, y: &Sparse) -> Vec<u8> {
    let f = alg.field();
    let mut out = vec![0u8; alg.dim()];
    for &(i, a) in x {
        for &(j, b) in y {
            for (t, c) in alg.mul_basis(i, j) {
                out[t] = f.add(out[t], f.mul(f.mul(a, b), c));
            }
        }
    }
    out
}

fn sparse(v: Vec<u8>) -> Sparse {
    v.into_iter().enumerate().filter(|(_, c)| *c != 0).collect()
}

fn instance() -> impl Strategy<Value = (Family, u32)> {
    let fams = list_families();
    (0..fams.len(), 0u32..2).prop_map(move |(i, dn)| {
        let f = fams[i];
        (f, f.n_min().max(3) + dn)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative((f, n) in instance(), picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let alg = f.default_algebra(n).unwrap();
        let d = alg.dim();
        let (a, b, c) = (picks[0].index(d), picks[1].index(d), picks[2].index(d));
        let ab = sparse(mul(&alg, &vec![(a, 1)], &vec![(b, 1)]));
        let bc = sparse(mul(&alg, &vec![(b, 1)], &vec![(c, 1)]));
        prop_assert_eq!(mul(&alg, &ab, &vec![(c, 1)]), mul(&alg, &vec![(a, 1)], &bc));
    }

    #[test]
    fn products_respect_endpoints((f, n) in instance(), picks in prop::collection::vec(any::<prop::sample::Index>(), 2)) {
        let alg = f.default_algebra(n).unwrap();
        let d = alg.dim();
        let (a, b) = (picks[0].index(d), picks[1].index(d));
        for (t, _) in alg.mul_basis(a, b) {
            prop_assert_eq!(alg.ends(t), (alg.ends(b).0, alg.ends(a).1));
        }
    }
}

#[test]
fn full_associativity_check() {
    for f in list_families() {
        let alg = f.default_algebra(f.n_min().max(3)).unwrap();
        assert!(alg.assoc_check(), "{}", f.name());
    }
}
