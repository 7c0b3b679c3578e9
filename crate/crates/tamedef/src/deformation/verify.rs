use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::group::{FixedGroupAlgebra, GroupElem, Involution};
use super::lattice::{det, Span};
use super::presentation::{build_rprime, build_sprime, build_theta_with};
use crate::scalars::{bareiss_det, power_of_two_exponent, q_poly, CycElem, CyclotomicWitt, WPoly, WittRing};
use crate::{DefectType, Error, Result};

/// Writes x as a·T(σ²) + b·σT(σ²) if possible.
///
/// T(σ²) is the indicator of even exponents and σT(σ²) that of odd ones, so a and b are read
/// off σ^0 and σ^1 and the remainder must vanish.
fn split_even_odd(x: &GroupElem) -> Option<(u64, u64)> {
    let (a, b) = (x[0], x[1]);
    let ok = x.iter().enumerate().all(|(k, &c)| c == if k % 2 == 0 { a } else { b });
    ok.then_some((a, b))
}

/// Matrix whose rows are the coordinates of h^0, …, h^{d−1} followed by `ideal_basis`.
fn power_matrix(alg: &FixedGroupAlgebra, d: usize, ideal_basis: &[GroupElem]) -> Result<Vec<Vec<u64>>> {
    let h = alg.h();
    let mut rows = Vec::new();
    let mut p = alg.sigma_pow(0);
    for _ in 0..d {
        rows.push(alg.coords(&p)?);
        p = alg.mul(&p, &h);
    }
    for g in ideal_basis {
        rows.push(alg.coords(g)?);
    }
    Ok(rows)
}

/// Checks that `basis` spans the ideal it generates, so that it can complete the images of t^k.
fn generators_span_ideal(alg: &FixedGroupAlgebra, basis: &[GroupElem]) -> Result<bool> {
    let rows: Vec<Vec<u64>> = basis.iter().map(|g| alg.coords(g)).collect::<Result<_>>()?;
    let span = Span::new(alg.ring(), &rows);
    Ok(alg.ideal_rows(basis)?.iter().all(|r| span.contains(r)))
}

/// Certificate that h: R′ → S′, t ↦ σ + τ(σ), is an isomorphism.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HIsoCertificate {
    pub n: u32,
    pub defect_type: DefectType,
    pub precision: u32,
    pub rank: usize,
    /// q_n(σ+τ(σ)) = c_n·σT(σ²), with c_n read at precision N and balanced.
    pub c_n: Option<i128>,
    pub kills_q: bool,
    pub ideal_generated_by_t_and_sigma_t: bool,
    /// Determinant of (h^0, …, h^{d−1}, T(σ²), σT(σ²)) on the orbit-sum basis.
    pub determinant: i128,
    pub unit: bool,
    pub valid: bool,
}

pub fn verify_h_iso(n: u32, ty: DefectType, precision: u32) -> Result<HIsoCertificate> {
    let rp = build_rprime(n, ty, precision)?;
    let sp = build_sprime(n, ty, precision)?;
    let alg = sp.algebra().expect("S′ is a group quotient").clone();
    let ring = alg.ring();
    let d = rp.rank().expect("R′ is free");
    let q = q_poly(n, ty, ring)?;
    let qh = alg.eval_poly(&q, &alg.h());
    let split = split_even_odd(&qh);
    let c_n = split.and_then(|(a, b)| (a == 0).then(|| ring.to_signed(b)));
    let kills_q = split.is_some();
    let gens = [alg.t_sigma2(), alg.sigma_t_sigma2()];
    let spans = generators_span_ideal(&alg, &gens)?;
    let m = power_matrix(&alg, d, &gens)?;
    let dt = det(ring, &m);
    let unit = ring.is_unit(dt);
    Ok(HIsoCertificate {
        n,
        defect_type: ty,
        precision,
        rank: d,
        c_n,
        kills_q,
        ideal_generated_by_t_and_sigma_t: spans,
        determinant: ring.to_signed(dt),
        unit,
        valid: kills_q && spans && unit && sp.rank() == Some(d),
    })
}

/// Certificate that θ: W[[t]]/((t−2)·q_n) → Θ, t ↦ σ + τ(σ), is an isomorphism.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThetaCertificate {
    pub n: u32,
    pub tau: Involution,
    pub precision: u32,
    pub rank: usize,
    pub theta_rank: Option<usize>,
    pub c_n: Option<i128>,
    /// (h − 2)·q_n(h) = 2c_n·(T(σ²) − σT(σ²)) holds in W_N Z.
    pub identity_holds: bool,
    pub kills_relation: bool,
    pub determinant: i128,
    pub unit: bool,
    pub valid: bool,
}

pub fn verify_theta_iso(n: u32, precision: u32) -> Result<ThetaCertificate> {
    verify_theta_iso_with(n, Involution::Semidihedral, precision)
}

pub fn verify_theta_iso_with(n: u32, tau: Involution, precision: u32) -> Result<ThetaCertificate> {
    let ty = match tau {
        Involution::Semidihedral => DefectType::SD,
        Involution::Inversion => DefectType::D,
    };
    let theta = build_theta_with(n, tau, precision)?;
    let alg = theta.algebra().expect("Θ is a group quotient").clone();
    let ring = alg.ring();
    let q = q_poly(n, ty, ring)?;
    let h = alg.h();
    let qh = alg.eval_poly(&q, &h);
    let c_n = split_even_odd(&qh).and_then(|(a, b)| (a == 0).then_some(b));
    let g = alg.sub(&alg.t_sigma2(), &alg.sigma_t_sigma2());
    let lhs = alg.mul(&alg.sub(&h, &alg.scale(&alg.sigma_pow(0), 2)), &qh);
    let identity_holds = c_n.is_some_and(|c| lhs == alg.scale(&g, ring.mul(2, c)));
    let gspan = Span::new(ring, &[alg.coords(&g)?]);
    let kills_relation = gspan.contains(&alg.coords(&lhs)?);
    let spans = generators_span_ideal(&alg, std::slice::from_ref(&g))?;
    let rank = 1usize << (n - 2);
    let m = power_matrix(&alg, rank, &[g])?;
    let dt = det(ring, &m);
    let unit = ring.is_unit(dt);
    Ok(ThetaCertificate {
        n,
        tau,
        precision,
        rank,
        theta_rank: theta.rank(),
        c_n: c_n.map(|c| ring.to_signed(c)),
        identity_holds,
        kills_relation,
        determinant: ring.to_signed(dt),
        unit,
        valid: kills_relation && identity_holds && spans && unit && theta.rank() == Some(rank),
    })
}

/// c_4 = 3 and c_n = 2c_{n−1}² − 1, exactly.
pub fn c_n_recursive(n: u32) -> Result<BigInt> {
    if n < 4 {
        return Err(Error::Domain(format!("c_n is defined for n ≥ 4, got {n}")));
    }
    let mut c = BigInt::from(3);
    for _ in 5..=n {
        c = BigInt::from(2) * &c * &c - BigInt::one();
    }
    Ok(c)
}

/// The semidihedral constant c_n, computed by expanding q_n(σ + Jσ^{−1}) in W_N Z.
pub fn c_n(n: u32, precision: u32) -> Result<i128> {
    let cert = verify_h_iso(n, DefectType::SD, precision)?;
    cert.c_n.ok_or_else(|| Error::Construction(format!("q_{n}(σ+Jσ⁻¹) is not a multiple of σT(σ²)")))
}

/// Certificate for ι: W Z → W × W × ∏_{ℓ=2}^{n−1} W[ζ_ℓ], σ ↦ (1, −1, (ζ_ℓ)_ℓ).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IotaCertificate {
    pub n: u32,
    pub tau: Involution,
    pub precision: u32,
    pub multiplicative: bool,
    /// Exact determinant of ι on the basis σ^0, …, σ^{2^{n−1}−1} and the power bases.
    pub determinant: String,
    pub determinant_valuation: Option<u64>,
    /// Whether the determinant is ±2^k, as it is for a Vandermonde-type matrix over roots of unity.
    pub power_of_two: bool,
    pub injective: bool,
}

fn iota_image(alg: &FixedGroupAlgebra, levels: &[CyclotomicWitt], x: &GroupElem) -> (u64, u64, Vec<CycElem>) {
    let ring = alg.ring();
    let mut plus = 0;
    let mut minus = 0;
    for (k, &c) in x.iter().enumerate() {
        plus = ring.add(plus, c);
        minus = if k % 2 == 0 { ring.add(minus, c) } else { ring.sub(minus, c) };
    }
    let cyc = levels
        .iter()
        .map(|r| {
            x.iter()
                .enumerate()
                .fold(r.zero(), |acc, (k, &c)| r.add(&acc, &r.scale(&r.zeta_pow(k as i64), c)))
        })
        .collect();
    (plus, minus, cyc)
}

pub fn verify_iota(n: u32, tau: Involution, precision: u32) -> Result<IotaCertificate> {
    let ring = WittRing::new(precision)?;
    let alg = FixedGroupAlgebra::new(n, tau, ring)?;
    let levels: Vec<CyclotomicWitt> = (2..n).map(|l| CyclotomicWitt::new(ring, l)).collect::<Result<_>>()?;
    let img = |x: &GroupElem| iota_image(&alg, &levels, x);
    let mut multiplicative = true;
    for i in 0..alg.rank() {
        for j in 0..alg.rank() {
            let (bi, bj) = (alg.basis_element(i), alg.basis_element(j));
            let (p1, m1, c1) = img(&bi);
            let (p2, m2, c2) = img(&bj);
            let (p, m, c) = img(&alg.mul(&bi, &bj));
            multiplicative &= p == ring.mul(p1, p2) && m == ring.mul(m1, m2);
            multiplicative &= levels.iter().zip(c1.iter().zip(&c2)).zip(&c).all(|((r, (x, y)), z)| r.mul(x, y) == *z);
        }
    }
    // Columns are the images of σ^k as exact integer vectors.
    let order = alg.order();
    let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(order);
    for k in 0..order {
        let mut col = vec![BigInt::one(), BigInt::from(if k % 2 == 0 { 1 } else { -1 })];
        for l in 2..n {
            let d = 1usize << (l - 1);
            let e = k % (2 * d);
            let mut v = vec![BigInt::zero(); d];
            if e < d {
                v[e] = BigInt::one();
            } else {
                v[e - d] = BigInt::from(-1);
            }
            col.extend(v);
        }
        cols.push(col);
    }
    let rows: Vec<Vec<BigInt>> = (0..order).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let dt = bareiss_det(rows);
    let valuation = (!dt.is_zero()).then(|| dt.trailing_zeros().unwrap_or(0));
    Ok(IotaCertificate {
        n,
        tau,
        precision,
        multiplicative,
        power_of_two: power_of_two_exponent(&dt).is_some(),
        determinant: dt.to_string(),
        determinant_valuation: valuation,
        injective: valuation.is_some_and(|v| v < u64::from(precision)),
    })
}

/// Substitution t ↦ σ + τ(σ) applied to a polynomial; exposed for oracles.
pub fn eval_at_h(alg: &FixedGroupAlgebra, p: &WPoly) -> GroupElem {
    alg.eval_poly(p, &alg.h())
}
