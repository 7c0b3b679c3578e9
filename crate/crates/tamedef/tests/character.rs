use std::collections::BTreeSet;
use std::f64::consts::PI;

use tamedef::character::{gen_decomp, height_one_count, is_maximally_ordinary_index, orbits};
use tamedef::scalars::{minpoly_nu_z, WittRing};
use tamedef::DefectType;

fn w() -> WittRing {
    WittRing::new(24).unwrap()
}

/// Evaluates a power-basis coordinate vector at ζ = e^{2πi/2^{level}}, reading coordinates as
/// balanced residues.
fn to_complex(ring: WittRing, coords: &[u64], level: u32) -> (f64, f64) {
    let order = (1u64 << level) as f64;
    coords.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
        let c = ring.to_signed(c) as f64;
        let th = 2.0 * PI * k as f64 / order;
        (re + c * th.cos(), im + c * th.sin())
    })
}

#[test]
fn orbits_at_n5() {
    let os = orbits(5, DefectType::D).unwrap();
    let got: Vec<(u32, Vec<u64>)> = os.into_iter().map(|o| (o.level, o.members)).collect();
    assert_eq!(got, vec![(2, vec![4]), (3, vec![2, 6]), (4, vec![1, 3, 5, 7])]);
}

#[test]
fn orbits_partition_the_indices() {
    for n in 3..=8 {
        for ty in DefectType::ALL {
            if n < ty.n_min().max(3) {
                continue;
            }
            let os = orbits(n, ty).unwrap();
            let mut all = BTreeSet::new();
            for o in &os {
                assert_eq!(o.members.len(), 1 << (o.level - 2));
                for &i in &o.members {
                    assert!(all.insert(i));
                }
            }
            assert_eq!(all, (1..=height_one_count(n)).collect());
        }
    }
}

/// The closed-form values: 2cos(2πi/2^{n−1}) in general, ±2i·sin(2πi/2^{n−1}) for odd i
/// in the semidihedral case, the sign flipping once i passes 2^{n−3}.
#[test]
fn values_match_complex_evaluation() {
    let ring = w();
    for n in 3..=7 {
        for ty in DefectType::ALL {
            if n < ty.n_min().max(3) {
                continue;
            }
            for i in 1..=height_one_count(n) {
                let g = gen_decomp(i, n, ty, ring).unwrap();
                let th = 2.0 * PI * i as f64 / (1u64 << (n - 1)) as f64;
                let want = if ty == DefectType::SD && i % 2 == 1 {
                    let s = if i < 1 << (n - 3) { 1.0 } else { -1.0 };
                    (0.0, 2.0 * s * th.sin())
                } else {
                    (2.0 * th.cos(), 0.0)
                };
                let got = to_complex(ring, &g.value.0, n - 1);
                assert!((got.0 - want.0).abs() < 1e-9 && (got.1 - want.1).abs() < 1e-9, "{ty} n={n} i={i}: {got:?}");
            }
        }
    }
}

#[test]
fn minimal_polynomials_annihilate_values() {
    let ring = w();
    for n in 4..=6 {
        for ty in DefectType::ALL {
            if n < ty.n_min() {
                continue;
            }
            for i in 1..=height_one_count(n) {
                let g = gen_decomp(i, n, ty, ring).unwrap();
                assert!(g.ring.is_zero(&g.minpoly_residual().unwrap()), "{ty} n={n} i={i}");
                // The level is the exact one: the next level down does not annihilate.
                if g.level() > 2 {
                    let lower = minpoly_nu_z(g.level() - 1, ty, n).unwrap().to_witt(ring);
                    assert!(!g.ring.is_zero(&g.ring.eval_poly(&lower, &g.value)), "{ty} n={n} i={i}");
                }
            }
        }
    }
}

#[test]
fn triviality_is_the_complement_of_maximal_ordinarity() {
    let ring = w();
    for n in 4..=6 {
        for ty in DefectType::ALL {
            if n < ty.n_min() {
                continue;
            }
            for i in 1..=height_one_count(n) {
                let g = gen_decomp(i, n, ty, ring).unwrap();
                assert_eq!(g.is_trivial(), !is_maximally_ordinary_index(i, n), "{ty} n={n} i={i}");
                assert_eq!(is_maximally_ordinary_index(i, n), i != 1 << (n - 3));
            }
        }
    }
    let q8 = gen_decomp(1, 3, DefectType::Q, ring).unwrap();
    assert!(q8.is_trivial());
    assert!(!is_maximally_ordinary_index(1, 3));
}

#[test]
fn out_of_range_indices_are_rejected() {
    let ring = w();
    assert!(gen_decomp(0, 5, DefectType::D, ring).is_err());
    assert!(gen_decomp(8, 5, DefectType::D, ring).is_err());
    assert!(gen_decomp(1, 3, DefectType::SD, ring).is_err());
    assert!(orbits(2, DefectType::D).is_err());
}
