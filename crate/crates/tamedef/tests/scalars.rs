use num_bigint::BigInt;
use proptest::prelude::*;
use tamedef::scalars::{
    minpoly_nu_z, nu_value, power_of_two_exponent, q_poly, q_poly_z, CyclotomicWitt, FField, WPoly, WittRing,
};
use tamedef::DefectType;

fn field_and_elems() -> impl Strategy<Value = (u32, u8, u8, u8)> {
    (1u32..=8).prop_flat_map(|e| {
        let top = ((1u16 << e) - 1) as u8;
        (Just(e), 0..=top, 0..=top, 0..=top)
    })
}

proptest! {
    #[test]
    fn field_has_characteristic_two((e, a, _, _) in field_and_elems()) {
        let f = FField::new(e).unwrap();
        prop_assert_eq!(f.add(a, a), 0);
        prop_assert_eq!(f.neg(a), a);
    }

    #[test]
    fn field_axioms((e, a, b, c) in field_and_elems()) {
        let f = FField::new(e).unwrap();
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        if a != 0 {
            let inv = f.inv(a).unwrap();
            prop_assert_eq!(f.mul(a, inv), 1);
        } else {
            prop_assert!(f.inv(a).is_none());
        }
    }

    #[test]
    fn frobenius_is_a_ring_automorphism((e, a, b, _) in field_and_elems()) {
        let f = FField::new(e).unwrap();
        prop_assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
        prop_assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
        // Frobenius has order e, hence is bijective.
        let mut x = a;
        for _ in 0..e {
            x = f.frobenius(x);
        }
        prop_assert_eq!(x, a);
    }

    #[test]
    fn witt_unit_iff_odd(n in 1u32..=40, a in any::<u64>()) {
        let w = WittRing::new(n).unwrap();
        let x = w.reduce(a);
        prop_assert_eq!(w.is_unit(x), x % 2 == 1);
        if let Some(inv) = w.inv(x) {
            prop_assert_eq!(w.mul(x, inv), 1);
        }
    }

    #[test]
    fn witt_valuation_factors_through_two(n in 2u32..=40, a in any::<u64>()) {
        let w = WittRing::new(n).unwrap();
        let x = w.reduce(a);
        if x != 0 {
            let v = w.valuation(x);
            let unit = x >> v;
            prop_assert!(w.is_unit(unit));
            prop_assert_eq!(w.mul(w.pow(2, v as u64), unit), x);
        }
    }

    #[test]
    fn residue_map_is_a_ring_surjection(n in 1u32..=40, a in any::<u64>(), b in any::<u64>()) {
        let w = WittRing::new(n).unwrap();
        let (x, y) = (w.reduce(a), w.reduce(b));
        prop_assert_eq!(w.residue(w.add(x, y)), w.residue(x) ^ w.residue(y));
        prop_assert_eq!(w.residue(w.mul(x, y)), w.residue(x) & w.residue(y));
        prop_assert_eq!(w.residue(1), 1);
    }

    #[test]
    fn mod2_reduction_commutes_with_multiplication(
        a in prop::collection::vec(-50i64..50, 1..8),
        b in prop::collection::vec(-50i64..50, 1..8),
    ) {
        let w = WittRing::new(16).unwrap();
        let (p, q) = (WPoly::from_i64(w, &a), WPoly::from_i64(w, &b));
        let lhs = p.mul(&q).mod2();
        let (pa, qa) = (p.mod2(), q.mod2());
        let mut rhs = vec![0u8; (pa.len() + qa.len()).saturating_sub(1)];
        for (i, &x) in pa.iter().enumerate() {
            for (j, &y) in qa.iter().enumerate() {
                rhs[i + j] ^= x & y;
            }
        }
        while rhs.last() == Some(&0) {
            rhs.pop();
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn monic_products_are_monic(
        a in prop::collection::vec(-50i64..50, 0..6),
        b in prop::collection::vec(-50i64..50, 0..6),
    ) {
        let w = WittRing::new(20).unwrap();
        let mut a = a;
        a.push(1);
        let mut b = b;
        b.push(1);
        let prod = WPoly::from_i64(w, &a).mul(&WPoly::from_i64(w, &b));
        prop_assert!(prod.is_monic());
        prop_assert_eq!(prod.degree(), Some(a.len() + b.len() - 2));
    }

    #[test]
    fn zeta_has_exact_order(level in 2u32..=9) {
        let cyc = CyclotomicWitt::new(WittRing::new(24).unwrap(), level).unwrap();
        let z = cyc.zeta();
        prop_assert_eq!(cyc.pow(&z, 1 << level), cyc.one());
        prop_assert_eq!(cyc.pow(&z, 1 << (level - 1)), cyc.neg(&cyc.one()));
    }
}

#[test]
fn nu_squares_down_a_level() {
    let w = WittRing::new(24).unwrap();
    for level in 3..=9 {
        let hi = CyclotomicWitt::new(w, level).unwrap();
        let lo = CyclotomicWitt::new(w, level - 1).unwrap();
        let nu = hi.trace_pair(1);
        let lower = hi.embed(&lo, &lo.trace_pair(1)).unwrap();
        assert_eq!(hi.mul(&nu, &nu), hi.add(&lower, &hi.from_int(2)), "level {level}");
    }
}

#[test]
fn nu_is_annihilated_by_its_minimal_polynomial() {
    for n in 3..=9 {
        for ty in DefectType::ALL {
            if n < ty.n_min().max(3) {
                continue;
            }
            for level in 2..n {
                for precision in [3, 11, 24, 40] {
                    let w = WittRing::new(precision).unwrap();
                    let (cyc, nu) = nu_value(level, ty, n, w).unwrap();
                    let p = minpoly_nu_z(level, ty, n).unwrap().to_witt(w);
                    assert!(cyc.is_zero(&cyc.eval_poly(&p, &nu)), "{ty} n={n} ℓ={level} N={precision}");
                }
            }
        }
    }
}

#[test]
fn q_polynomials_reduce_to_a_monomial() {
    let w = WittRing::new(24).unwrap();
    for n in 3..=8 {
        for ty in DefectType::ALL {
            if n < ty.n_min().max(3) {
                continue;
            }
            let d = (1 << (n - 2)) - 1;
            let q = q_poly(n, ty, w).unwrap();
            assert_eq!(q.degree(), Some(d));
            assert!(q.is_monomial_mod2(d), "{ty} n={n}");
        }
    }
}

#[test]
fn distinct_factors_have_power_of_two_resultants() {
    for n in 3..=6 {
        for ty in DefectType::ALL {
            if n < ty.n_min().max(3) {
                continue;
            }
            let factors: Vec<_> = (2..n).map(|l| minpoly_nu_z(l, ty, n).unwrap()).collect();
            for i in 0..factors.len() {
                for j in i + 1..factors.len() {
                    let r = factors[i].resultant(&factors[j]);
                    // The semidihedral top level against ℓ ≥ 3 picks up odd factors, which are
                    // units in W; coprimality over W[1/2] only needs r ≠ 0 there.
                    let top_sd = ty == DefectType::SD && j + 2 == (n - 1) as usize && i + 2 >= 3;
                    if top_sd {
                        assert!(r != BigInt::from(0), "{ty} n={n} levels {} {}", i + 2, j + 2);
                    } else {
                        assert!(power_of_two_exponent(&r).is_some(), "{ty} n={n} levels {} {}: {r}", i + 2, j + 2);
                    }
                }
            }
            let prod = factors.iter().fold(tamedef::scalars::ZPoly::one(), |acc, f| acc.mul(f));
            assert_eq!(prod, q_poly_z(n, ty).unwrap());
        }
    }
}

#[test]
fn semidihedral_top_level_resultant() {
    // Res(t² − 2, t⁴ + 4t² + 2) = (4 + 8 + 2)² = 196.
    let a = minpoly_nu_z(3, DefectType::SD, 5).unwrap();
    let b = minpoly_nu_z(4, DefectType::SD, 5).unwrap();
    assert_eq!(b, tamedef::scalars::ZPoly::from_i64(&[2, 0, 4, 0, 1]));
    assert_eq!(a.resultant(&b), BigInt::from(196));
}

#[test]
fn resultant_oracle() {
    // Res(t² − 2, t) = −2 up to sign, computed by hand.
    let a = tamedef::scalars::ZPoly::from_i64(&[-2, 0, 1]);
    let b = tamedef::scalars::ZPoly::t();
    assert_eq!(a.resultant(&b).magnitude(), BigInt::from(2).magnitude());
}
