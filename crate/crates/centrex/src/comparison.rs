//! Comparison of the two algebra theories over one perfect Lie algebra:
//! Chevalley-Eilenberg homology relative to vector spaces inside Lie
//! algebras, against Loday homology relative to the composite reflector
//! inside Leibniz algebras.
//!
//! For a perfect Lie algebra `B` the two universal central extensions
//! fit into a short exact sequence of kernels, which gives three
//! checkable identities:
//!
//! * additivity: `dim HL₂(B) = dim H₂(B) + dim HL₂(U(B, vect))`,
//! * the squares ideal of the Loday total equals `HL₂(U(B, vect))` in
//!   dimension,
//! * the two extensions coincide exactly when `dim HL₂(B) = dim H₂(B)`,
//!   equivalently when the Loday total is already Lie.
//!
//! The module also checks that liesation carries the Loday universal
//! central extension to the Chevalley-Eilenberg one, certified through
//! homology rather than an isomorphism search, and that centrality of
//! an extension between subcategory objects does not depend on which
//! ambient variety it is tested in.

use std::sync::Arc;

use thiserror::Error;

use crate::engine::algebras::AlgVariety;
use crate::engine::pxm::PxmVariety;
use crate::engine::{classify, EngineError, Extension, Variety};
use crate::homology::{ce_h2, loday_hl2, uce_construct, ChainTheory, HomologyError, Reflector};
use crate::leibniz::{AlgebraError, AlgebraHom, LeibnizAlgebra};
use crate::xmod::XModHom;

#[derive(Debug, Error)]
pub enum ComparisonError {
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Certificate that the liesation of the Loday universal central
/// extension is the Chevalley-Eilenberg one: it is a central extension
/// of the base with vanishing H₁ and H₂ and a kernel of the right
/// dimension, which pins it down up to isomorphism.
#[derive(Clone, Debug)]
pub struct LiesationCertificate {
    pub total_dim: usize,
    pub kernel_dim: usize,
    pub central: bool,
    pub h1_dim: usize,
    pub h2_dim: usize,
}

impl LiesationCertificate {
    pub fn matches(&self, expected_kernel_dim: usize) -> bool {
        self.central
            && self.h1_dim == 0
            && self.h2_dim == 0
            && self.kernel_dim == expected_kernel_dim
    }
}

/// The three homology dimensions of one perfect Lie algebra and the
/// verdicts tying them together.
#[derive(Clone, Debug)]
pub struct ComparisonReport {
    /// `dim H₂(B)` in the Chevalley-Eilenberg theory.
    pub h2_dim: usize,
    /// `dim HL₂(B)` in the Loday theory.
    pub hl2_dim: usize,
    /// `dim HL₂(U(B, vect))`, the Loday homology of the
    /// Chevalley-Eilenberg total.
    pub hl2_of_ce_uce_dim: usize,
    pub additivity_holds: bool,
    /// Dimension of the squares ideal of the Loday total.
    pub loday_square_ideal_dim: usize,
    pub square_ideal_identity_holds: bool,
    /// `dim HL₂(B) = dim H₂(B)`, the criterion for the two universal
    /// central extensions to coincide.
    pub uces_coincide: bool,
    /// Independent route to the same fact: the Loday total satisfies
    /// antisymmetry exactly when the extensions coincide.
    pub loday_total_is_lie: bool,
    pub liesation: LiesationCertificate,
}

impl ComparisonReport {
    pub fn holds(&self) -> bool {
        self.additivity_holds
            && self.square_ideal_identity_holds
            && self.uces_coincide == self.loday_total_is_lie
            && self.liesation.matches(self.h2_dim)
    }
}

/// Builds the full comparison report for a perfect Lie algebra.
pub fn comparison_report(g: &Arc<LeibnizAlgebra>) -> Result<ComparisonReport, ComparisonError> {
    let h2 = ce_h2(g)?.dim;
    let hl2 = loday_hl2(g)?.dim;

    let ce_uce = uce_construct(g, ChainTheory::LieVsVect)?;
    let hl2_of_ce_uce = loday_hl2(&ce_uce.total)?.dim;
    let additivity_holds = hl2 == h2 + hl2_of_ce_uce;

    let loday_uce = uce_construct(g, ChainTheory::LeibVsVectLie)?;
    let loday_square_ideal_dim = loday_uce.total.square_ideal().dim();
    let square_ideal_identity_holds = loday_square_ideal_dim == hl2_of_ce_uce;

    let uces_coincide = hl2 == h2;
    let loday_total_is_lie = loday_uce.total.is_lie();

    // Liesation of the Loday extension, with the induced map to g.
    let variety = AlgVariety::lie_vect();
    let (liesed, eta) = loday_uce.total.reflect_lie();
    let induced = variety.factor(&eta, &loday_uce.projection)?;
    let extension = Extension::new(&variety, induced.clone())?;
    let verdicts = classify(&variety, &extension, 0)?;
    let liesation = LiesationCertificate {
        total_dim: liesed.dim(),
        kernel_dim: induced.kernel().dim(),
        central: verdicts.central,
        h1_dim: crate::homology::h1(&liesed, Reflector::Vect)?,
        h2_dim: ce_h2(&liesed)?.dim,
    };

    Ok(ComparisonReport {
        h2_dim: h2,
        hl2_dim: hl2,
        hl2_of_ce_uce_dim: hl2_of_ce_uce,
        additivity_holds,
        loday_square_ideal_dim,
        square_ideal_identity_holds,
        uces_coincide,
        loday_total_is_lie,
        liesation,
    })
}

/// Centrality of one surjection between Lie algebras, tested relative
/// to vector spaces both inside Lie algebras and inside Leibniz
/// algebras.  The two verdicts agree on every extension between
/// subcategory objects.
#[derive(Clone, Debug)]
pub struct CentralityAgreement {
    pub central_in_lie: bool,
    pub central_in_leib: bool,
}

impl CentralityAgreement {
    pub fn agree(&self) -> bool {
        self.central_in_lie == self.central_in_leib
    }
}

pub fn lie_centrality_both_ways(f: &AlgebraHom) -> Result<CentralityAgreement, ComparisonError> {
    let lie = AlgVariety::lie_vect();
    let leib = AlgVariety::leib_vect();
    let in_lie = classify(&lie, &Extension::new(&lie, f.clone())?, 0)?;
    let in_leib = classify(&leib, &Extension::new(&leib, f.clone())?, 0)?;
    Ok(CentralityAgreement {
        central_in_lie: in_lie.central,
        central_in_leib: in_leib.central,
    })
}

/// Same comparison one level up: a surjection between crossed modules,
/// tested relative to abelian crossed modules both inside crossed
/// modules and inside precrossed modules.
pub fn crossed_centrality_both_ways(
    f: &XModHom,
) -> Result<CentralityAgreement, ComparisonError> {
    let xmod = PxmVariety::crossed_over_ab();
    let pxm = PxmVariety::over_ab();
    let in_xmod = classify(&xmod, &Extension::new(&xmod, f.clone())?, 4096)?;
    let in_pxm = classify(&pxm, &Extension::new(&pxm, f.clone())?, 4096)?;
    Ok(CentralityAgreement {
        central_in_lie: in_xmod.central,
        central_in_leib: in_pxm.central,
    })
}

/// Perfectness of one subcategory object does not depend on the ambient
/// variety either; returns both verdicts.
pub fn crossed_perfect_both_ways(x: &Arc<crate::xmod::PrecrossedModule>) -> (bool, bool) {
    let xmod = PxmVariety::crossed_over_ab();
    let pxm = PxmVariety::over_ab();
    (xmod.is_perfect(x), pxm.is_perfect(x))
}
