use serde::Serialize;

use super::group::Involution;
use super::lattice::ModuleStructure;
use super::presentation::{build_rprime, build_sprime, build_theta_with, build_tube_ring, WPresentation};
use super::verify::{verify_h_iso, verify_theta_iso_with};
use crate::catalog::{Family, Recipe};
use crate::scalars::q_poly;
use crate::{DefectType, Error, Result};

/// Realization of a presentation as a quotient of (W Z)^⟨τ⟩, one of S′ or Θ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubquotientWitness {
    pub source: String,
    pub tau: Involution,
    /// Extra relators imposed on the source, in terms of the image h of t.
    pub extra_relators: Vec<String>,
    pub certificate_valid: bool,
    /// Module structure of the realized quotient, which must agree with the presentation.
    pub structure: ModuleStructure,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremPresentation {
    pub family: String,
    pub n: u32,
    pub recipe: String,
    pub tube: bool,
    pub complete_intersection: bool,
    pub presentation: WPresentation,
    pub fiber_dim: usize,
    pub witness: SubquotientWitness,
}

/// The presentation W[[t]]/(q_n) or W[[t]]/(t·q_n, 2·q_n) attached to a recipe of a family.
pub fn theorem_presentation(family: &Family, n: u32, recipe: &Recipe, precision: u32) -> Result<TheoremPresentation> {
    family.check_n(n)?;
    let ty = family.defect_type();
    let q8 = ty == DefectType::Q && n == 3;
    if n < 4 && !q8 {
        return Err(Error::Classification(format!(
            "{} at n={n} has no maximally ordinary module of height-one character",
            family.name()
        )));
    }
    if !family.mo_recipes(n)?.iter().any(|r| r == recipe) {
        return Err(Error::Classification(format!(
            "recipe {} is not one of the maximally ordinary recipes of {}",
            recipe.label,
            family.name()
        )));
    }
    let tube = !q8 && family.tube_rule(recipe);
    let tau = Involution::for_type(ty);
    let (presentation, witness) = if tube {
        let p = build_tube_ring(n, ty, precision)?;
        let theta = build_theta_with(n, tau, precision)?;
        let cert = verify_theta_iso_with(n, tau, precision)?;
        let alg = theta.algebra().expect("Θ is a group quotient").clone();
        let ring = alg.ring();
        let q = q_poly(n, ty, ring)?;
        let two_q = alg.scale(&alg.eval_poly(&q, &alg.h()), 2);
        let mut relators = vec![alg.sub(&alg.t_sigma2(), &alg.sigma_t_sigma2())];
        relators.push(two_q);
        let quotient = WPresentation::group_fixed_quotient(alg, "Θ/(2·q_n(h))", relators)?;
        let w = SubquotientWitness {
            source: "Θ".into(),
            tau,
            extra_relators: vec!["2·q_n(h)".into()],
            certificate_valid: cert.valid,
            matches: quotient.structure == p.structure,
            structure: quotient.structure,
        };
        (p, w)
    } else {
        let p = build_rprime(n, ty, precision)?;
        let s = build_sprime(n, ty, precision)?;
        let cert = verify_h_iso(n, ty, precision)?;
        let w = SubquotientWitness {
            source: "S′".into(),
            tau,
            extra_relators: Vec::new(),
            certificate_valid: cert.valid,
            matches: s.structure == p.structure,
            structure: s.structure,
        };
        (p, w)
    };
    Ok(TheoremPresentation {
        family: family.name().to_string(),
        n,
        recipe: recipe.label.clone(),
        tube,
        complete_intersection: !tube,
        fiber_dim: presentation.fiber_dim(),
        presentation,
        witness,
    })
}
