use super::{CycElem, CyclotomicWitt, WPoly, WittRing, ZPoly};
use crate::{DefectType, Error, Result};

fn check_n(ty: DefectType, n: u32) -> Result<()> {
    let lo = ty.n_min().max(3);
    if n < lo || n > 30 {
        return Err(Error::Domain(format!("defect exponent n={n} out of range for type {ty} (need {lo} ≤ n ≤ 30)")));
    }
    Ok(())
}

/// Minimal polynomial over Q of ν_ℓ, with exact integer coefficients.
///
/// ν_2 = 0 has minimal polynomial t; each further level substitutes t² − 2, except that the
/// top level ℓ = n − 1 of a semidihedral defect group substitutes t² + 2.
pub fn minpoly_nu_z(level: u32, ty: DefectType, n: u32) -> Result<ZPoly> {
    check_n(ty, n)?;
    if level < 2 || level > n - 1 {
        return Err(Error::Domain(format!("level ℓ={level} outside 2..={}", n - 1)));
    }
    let mut p = ZPoly::t();
    for l in 3..=level {
        let shift = if l == n - 1 && ty == DefectType::SD { 2 } else { -2 };
        p = p.compose(&ZPoly::from_i64(&[shift, 0, 1]));
    }
    Ok(p)
}

pub fn minpoly_nu(level: u32, ty: DefectType, n: u32, ring: WittRing) -> Result<WPoly> {
    Ok(minpoly_nu_z(level, ty, n)?.to_witt(ring))
}

/// q_n(t) = ∏_{ℓ=2}^{n−1} minpoly(ν_ℓ), exactly.
pub fn q_poly_z(n: u32, ty: DefectType) -> Result<ZPoly> {
    check_n(ty, n)?;
    let mut q = ZPoly::one();
    for l in 2..n {
        q = q.mul(&minpoly_nu_z(l, ty, n)?);
    }
    Ok(q)
}

pub fn q_poly(n: u32, ty: DefectType, ring: WittRing) -> Result<WPoly> {
    Ok(q_poly_z(n, ty)?.to_witt(ring))
}

/// ν_ℓ as an element of W_N[ζ_ℓ].
pub fn nu_value(level: u32, ty: DefectType, n: u32, ring: WittRing) -> Result<(CyclotomicWitt, CycElem)> {
    check_n(ty, n)?;
    if level < 2 || level > n - 1 {
        return Err(Error::Domain(format!("level ℓ={level} outside 2..={}", n - 1)));
    }
    let cyc = CyclotomicWitt::new(ring, level)?;
    let v = if level == n - 1 && ty == DefectType::SD { cyc.diff_pair(1) } else { cyc.trace_pair(1) };
    Ok((cyc, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> WittRing {
        WittRing::new(24).unwrap()
    }

    #[test]
    fn small_minimal_polynomials() {
        assert_eq!(minpoly_nu(2, DefectType::D, 4, w()).unwrap(), WPoly::from_i64(w(), &[0, 1]));
        assert_eq!(minpoly_nu(3, DefectType::D, 4, w()).unwrap(), WPoly::from_i64(w(), &[-2, 0, 1]));
        assert_eq!(minpoly_nu(3, DefectType::SD, 4, w()).unwrap(), WPoly::from_i64(w(), &[2, 0, 1]));
    }

    #[test]
    fn q_small_cases() {
        assert_eq!(q_poly(3, DefectType::Q, w()).unwrap(), WPoly::from_i64(w(), &[0, 1]));
        assert_eq!(q_poly(4, DefectType::D, w()).unwrap(), WPoly::from_i64(w(), &[0, -2, 0, 1]));
        assert_eq!(q_poly(4, DefectType::SD, w()).unwrap(), WPoly::from_i64(w(), &[0, 2, 0, 1]));
        let expected = ZPoly::t().mul(&ZPoly::from_i64(&[-2, 0, 1])).mul(&ZPoly::from_i64(&[2, 0, 4, 0, 1]));
        assert_eq!(q_poly_z(5, DefectType::SD).unwrap(), expected);
    }

    #[test]
    fn out_of_range() {
        assert!(minpoly_nu(1, DefectType::D, 4, w()).is_err());
        assert!(minpoly_nu(4, DefectType::D, 4, w()).is_err());
        assert!(q_poly(2, DefectType::D, w()).is_err());
        assert!(q_poly(3, DefectType::SD, w()).is_err());
    }

    #[test]
    fn annihilates_nu() {
        for ty in DefectType::ALL {
            for n in ty.n_min().max(3)..=8 {
                for l in 2..n {
                    let p = minpoly_nu(l, ty, n, w()).unwrap();
                    let (cyc, v) = nu_value(l, ty, n, w()).unwrap();
                    assert!(cyc.is_zero(&cyc.eval_poly(&p, &v)), "{ty} n={n} l={l}");
                }
            }
        }
    }
}
