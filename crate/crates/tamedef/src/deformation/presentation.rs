use serde::Serialize;

use super::group::{FixedGroupAlgebra, GroupElem, Involution};
use super::lattice::{quotient_structure, ModuleStructure};
use crate::scalars::{q_poly, WPoly, WittRing};
use crate::{DefectType, Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PresentationKind {
    /// W[[t]] modulo polynomial relations, the first of which is monic.
    PolyQuotient { relations: Vec<WPoly> },
    /// (W Z)^⟨τ⟩ modulo the ideal generated by the relators.
    GroupFixedQuotient {
        n: u32,
        tau: Involution,
        #[serde(skip)]
        algebra: FixedGroupAlgebra,
        relators: Vec<GroupElem>,
    },
}

/// A finite W_N-algebra together with the W_N-module structure of its underlying module.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WPresentation {
    pub label: String,
    pub precision: u32,
    #[serde(flatten)]
    pub kind: PresentationKind,
    pub structure: ModuleStructure,
}

impl WPresentation {
    pub fn poly_quotient(ring: WittRing, label: impl Into<String>, relations: Vec<WPoly>) -> Result<Self> {
        let rows = poly_relator_rows(&relations)?;
        let d = relations[0].degree().unwrap_or(0);
        let structure = quotient_structure(ring, d, &rows)?;
        Ok(WPresentation {
            label: label.into(),
            precision: ring.precision(),
            kind: PresentationKind::PolyQuotient { relations },
            structure,
        })
    }

    pub fn group_fixed_quotient(
        algebra: FixedGroupAlgebra,
        label: impl Into<String>,
        relators: Vec<GroupElem>,
    ) -> Result<Self> {
        let rows = algebra.ideal_rows(&relators)?;
        let structure = quotient_structure(algebra.ring(), algebra.rank(), &rows)?;
        Ok(WPresentation {
            label: label.into(),
            precision: algebra.ring().precision(),
            kind: PresentationKind::GroupFixedQuotient { n: algebra.n, tau: algebra.tau, algebra, relators },
            structure,
        })
    }

    pub fn fiber_dim(&self) -> usize {
        self.structure.fiber_dim()
    }

    /// The W_N-rank, defined only when the underlying module is free.
    pub fn rank(&self) -> Option<usize> {
        self.structure.is_free().then_some(self.structure.free_rank)
    }

    pub fn relations(&self) -> Option<&[WPoly]> {
        match &self.kind {
            PresentationKind::PolyQuotient { relations } => Some(relations),
            PresentationKind::GroupFixedQuotient { .. } => None,
        }
    }

    pub fn algebra(&self) -> Option<&FixedGroupAlgebra> {
        match &self.kind {
            PresentationKind::GroupFixedQuotient { algebra, .. } => Some(algebra),
            PresentationKind::PolyQuotient { .. } => None,
        }
    }

    fn expect_free(self, rank: usize) -> Result<Self> {
        if self.rank() != Some(rank) {
            return Err(Error::Construction(format!(
                "{} has structure {}, expected W^{rank}",
                self.label,
                self.structure.describe()
            )));
        }
        Ok(self)
    }
}

/// Rows spanning the image of the ideal (r_1, …) in W_N[t]/(r_0) on the basis 1, t, …, t^{d−1}.
fn poly_relator_rows(relations: &[WPoly]) -> Result<Vec<Vec<u64>>> {
    let Some(monic) = relations.first().filter(|p| p.is_monic() && p.degree().is_some()) else {
        return Err(Error::Domain("the first relation must be a monic polynomial".into()));
    };
    let ring = monic.ring();
    let d = monic.degree().unwrap_or(0);
    let mut rows = Vec::new();
    for r in &relations[1..] {
        let mut shifted = r.clone();
        for _ in 0..d {
            let red = shifted.rem_monic(monic)?;
            rows.push((0..d).map(|i| red.coeff(i)).collect());
            shifted = red.mul(&WPoly::t(ring));
        }
    }
    Ok(rows)
}

fn witt(precision: u32) -> Result<WittRing> {
    WittRing::new(precision)
}

/// R′ = W[[t]]/(q_n(t)).
pub fn build_rprime(n: u32, ty: DefectType, precision: u32) -> Result<WPresentation> {
    let ring = witt(precision)?;
    let q = q_poly(n, ty, ring)?;
    WPresentation::poly_quotient(ring, "R′", vec![q])?.expect_free((1 << (n - 2)) - 1)
}

/// S′ = (W Z)^⟨τ⟩/(T(σ²), σT(σ²)).
pub fn build_sprime(n: u32, ty: DefectType, precision: u32) -> Result<WPresentation> {
    if n < ty.n_min().max(3) {
        return Err(Error::Domain(format!("no defect group of type {ty} with n={n}")));
    }
    let alg = FixedGroupAlgebra::new(n, Involution::for_type(ty), witt(precision)?)?;
    let gens = vec![alg.t_sigma2(), alg.sigma_t_sigma2()];
    WPresentation::group_fixed_quotient(alg, "S′", gens)?.expect_free((1 << (n - 2)) - 1)
}

/// Θ = (W Z)^⟨τ⟩/(T(σ²) − σT(σ²)) for the semidihedral involution.
pub fn build_theta(n: u32, precision: u32) -> Result<WPresentation> {
    build_theta_with(n, Involution::Semidihedral, precision)
}

/// Θ for either involution; with σ ↦ σ^{−1} it plays the same role for dihedral defect groups.
pub fn build_theta_with(n: u32, tau: Involution, precision: u32) -> Result<WPresentation> {
    let alg = FixedGroupAlgebra::new(n, tau, witt(precision)?)?;
    let g = alg.sub(&alg.t_sigma2(), &alg.sigma_t_sigma2());
    WPresentation::group_fixed_quotient(alg, "Θ", vec![g])?.expect_free(1 << (n - 2))
}

/// W[[t]]/(t·q_n(t), 2·q_n(t)).
pub fn build_tube_ring(n: u32, ty: DefectType, precision: u32) -> Result<WPresentation> {
    let ring = witt(precision)?;
    let q = q_poly(n, ty, ring)?;
    let tq = q.mul(&WPoly::t(ring));
    WPresentation::poly_quotient(ring, "W[[t]]/(t·q_n, 2·q_n)", vec![tq, q.scale(2)])
}
