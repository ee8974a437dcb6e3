//! The five term exact sequence in low degree homology induced by a
//! short exact sequence of algebras `0 → K → B → A → 0`:
//!
//! ```text
//! H₂(B) → H₂(A) → K/[K,B] → H₁(B) → H₁(A) → 0
//! ```
//!
//! All five terms are presented as subquotients of coordinate spaces
//! and the connecting maps as matrices between the ambient spaces, so
//! exactness at each junction is an exact rational rank computation.
//! The analogue for finite groups keeps only the last three terms,
//! which [`crate::engine::three_term_tail`] covers for any variety.

use thiserror::Error;

use crate::engine::{relative_commutator, EngineError, Extension};
use crate::homology::{ChainTheory, HomologyError};
use crate::leibniz::{AlgebraError, AlgebraHom};
use crate::linalg::{LinalgError, RatMatrix, Subspace};

#[derive(Debug, Error)]
pub enum FiveTermError {
    #[error("the map is not surjective, it does not present a short exact sequence")]
    NotSurjective,
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A term `constraint/denominator` inside a coordinate space.
struct Term {
    constraint: Subspace,
    denominator: Subspace,
}

impl Term {
    fn dim(&self) -> usize {
        self.constraint.dim() - self.denominator.dim()
    }
}

/// Exactness verdicts for the sequence, junction by junction.
#[derive(Clone, Debug)]
pub struct FiveTermReport {
    pub theory: ChainTheory,
    /// Dimensions of the five terms, left to right.
    pub dims: [usize; 5],
    /// Each connecting map sends the term into the next term:
    /// constraint into constraint, denominator into denominator.
    pub maps_well_defined: [bool; 4],
    /// Image of the previous map equals kernel of the next, at the
    /// three interior junctions.
    pub exact_at: [bool; 3],
    /// The last map hits all of the final term.
    pub tail_surjective: bool,
}

impl FiveTermReport {
    pub fn holds(&self) -> bool {
        self.maps_well_defined.iter().all(|&b| b)
            && self.exact_at.iter().all(|&b| b)
            && self.tail_surjective
    }
}

fn well_defined(map: &RatMatrix, src: &Term, dst: &Term) -> Result<bool, LinalgError> {
    Ok(dst.constraint.contains(&src.constraint.image_under(map)?)
        && dst.denominator.contains(&src.denominator.image_under(map)?))
}

/// `im(into) + denominator = constraint ∩ preimage(denominator of the
/// term after next under `out`)`, the linear form of im = ker.
fn exact_at(
    into: &RatMatrix,
    src: &Term,
    here: &Term,
    out: &RatMatrix,
    next_denominator: &Subspace,
) -> Result<bool, LinalgError> {
    let image = src
        .constraint
        .image_under(into)?
        .sum(&here.denominator)?;
    let kernel = here
        .constraint
        .intersect(&next_denominator.preimage_under(out)?)?;
    Ok(image == kernel)
}

/// Computes all five terms and connecting maps for a surjection of
/// algebras in the given theory, and verifies exactness.
///
/// The maps are, in order: the functorial action on degree two chains,
/// the transgression obtained by lifting a cycle through a linear
/// section and bracketing in the domain, the inclusion of the kernel,
/// and the map itself.
pub fn five_term_report(
    theory: ChainTheory,
    f: &AlgebraHom,
) -> Result<FiveTermReport, FiveTermError> {
    if !f.is_surjective() {
        return Err(FiveTermError::NotSurjective);
    }
    let b = f.source();
    let a = f.target();
    let h2_b = theory.h2(b)?;
    let h2_a = theory.h2(a)?;

    let variety = theory.engine_variety();
    let extension = Extension::new(&variety, f.clone())?;
    let rel_comm = relative_commutator(&variety, &extension)?;

    let terms = [
        Term {
            constraint: h2_b.chain.cycles()?,
            denominator: h2_b.chain.boundaries(),
        },
        Term {
            constraint: h2_a.chain.cycles()?,
            denominator: h2_a.chain.boundaries(),
        },
        Term { constraint: f.kernel(), denominator: rel_comm },
        Term {
            constraint: Subspace::full(b.dim()),
            denominator: b.derived(),
        },
        Term {
            constraint: Subspace::full(a.dim()),
            denominator: a.derived(),
        },
    ];

    let basis_b = theory.pair_basis(b.dim());
    let basis_a = theory.pair_basis(a.dim());

    // Functorial map on degree two chains: pair the images under f.
    let mut alpha = RatMatrix::zeros(h2_a.chain.degree2_dim, h2_b.chain.degree2_dim);
    for (slot, (i, j)) in degree2_slots(&basis_b, b.dim()).into_iter().enumerate() {
        let col = basis_a.pair(&f.matrix().col(i), &f.matrix().col(j));
        for (r, val) in col.into_iter().enumerate() {
            alpha.set(r, slot, val);
        }
    }

    // Transgression: lift both legs of a degree two generator through a
    // section s of f and bracket in b.  On cycles the result lands in
    // the kernel of f.
    let section = f.linear_section()?;
    let mut beta = RatMatrix::zeros(b.dim(), h2_a.chain.degree2_dim);
    for (slot, (i, j)) in degree2_slots(&basis_a, a.dim()).into_iter().enumerate() {
        let col = b.bracket_vec(&section.col(i), &section.col(j));
        for (r, val) in col.into_iter().enumerate() {
            beta.set(r, slot, val);
        }
    }

    let gamma = RatMatrix::identity(b.dim());
    let delta = f.matrix().clone();

    let maps_well_defined = [
        well_defined(&alpha, &terms[0], &terms[1])?,
        well_defined(&beta, &terms[1], &terms[2])?,
        well_defined(&gamma, &terms[2], &terms[3])?,
        well_defined(&delta, &terms[3], &terms[4])?,
    ];

    let exact = [
        exact_at(&alpha, &terms[0], &terms[1], &beta, &terms[2].denominator)?,
        exact_at(&beta, &terms[1], &terms[2], &gamma, &terms[3].denominator)?,
        exact_at(&gamma, &terms[2], &terms[3], &delta, &terms[4].denominator)?,
    ];
    let tail_surjective = terms[3]
        .constraint
        .image_under(&delta)?
        .sum(&terms[4].denominator)?
        == terms[4].constraint;

    Ok(FiveTermReport {
        theory,
        dims: [
            terms[0].dim(),
            terms[1].dim(),
            terms[2].dim(),
            terms[3].dim(),
            terms[4].dim(),
        ],
        maps_well_defined,
        exact_at: exact,
        tail_surjective,
    })
}

/// Pairs `(i, j)` indexing the degree two basis, in slot order.
fn degree2_slots(basis: &crate::homology::PairBasis, n: usize) -> Vec<(usize, usize)> {
    match basis {
        crate::homology::PairBasis::Wedge { .. } => (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect(),
        crate::homology::PairBasis::Tensor { .. } => (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::groups::GroupsOverAb;
    use crate::engine::three_term_tail;
    use crate::fingrp::GroupHom;
    use crate::leibniz::{direct_sum, LeibnizAlgebra};
    use crate::samples::{algebras, groups};

    #[test]
    fn heisenberg_over_its_centre() {
        // 0 -> Q -> h3 -> Q^2 -> 0, collapsing the centre.
        let h3 = algebras::heisenberg3();
        let plane = LeibnizAlgebra::abelian(2);
        let m = RatMatrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0]], 3);
        let f = AlgebraHom::new(h3, plane, m).unwrap();
        let report = five_term_report(ChainTheory::LieVsVect, &f).unwrap();
        assert_eq!(report.dims, [2, 1, 1, 2, 2]);
        assert!(report.holds());
    }

    #[test]
    fn split_projection_off_an_abelian_complement() {
        let sum = direct_sum(&algebras::sl2(), &LeibnizAlgebra::abelian(2));
        let report = five_term_report(ChainTheory::LieVsVect, &sum.proj0).unwrap();
        // H2 of the sum picks up the pairs inside the abelian part.
        assert_eq!(report.dims, [1, 0, 2, 2, 0]);
        assert!(report.holds());
    }

    #[test]
    fn leibniz_flavor_on_ell2_over_its_square() {
        let ell2 = algebras::ell2();
        let line = LeibnizAlgebra::abelian(1);
        let m = RatMatrix::from_int_rows(&[&[1, 0]], 2);
        let f = AlgebraHom::new(ell2, line, m).unwrap();
        let report = five_term_report(ChainTheory::LeibVsVectLie, &f).unwrap();
        assert_eq!(report.dims, [1, 1, 1, 1, 1]);
        assert!(report.holds());
    }

    #[test]
    fn loday_flavor_on_a_current_algebra_quotient() {
        // Evaluation at t = 0 on sl2 x Q[t]/(t^2).
        let cur = algebras::sl2_current2();
        let sl2 = algebras::sl2();
        let m = RatMatrix::from_int_rows(
            &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0]],
            6,
        );
        let f = AlgebraHom::new(cur, sl2, m).unwrap();
        let ce = five_term_report(ChainTheory::LieVsVect, &f).unwrap();
        assert!(ce.holds());
        let loday = five_term_report(ChainTheory::LeibVsVectLie, &f).unwrap();
        assert!(loday.holds());
    }

    #[test]
    fn rejects_non_surjective_maps() {
        let line = LeibnizAlgebra::abelian(1);
        let plane = LeibnizAlgebra::abelian(2);
        let m = RatMatrix::from_int_rows(&[&[1], &[0]], 1);
        let f = AlgebraHom::new(line, plane, m).unwrap();
        assert!(matches!(
            five_term_report(ChainTheory::LieVsVect, &f),
            Err(FiveTermError::NotSurjective)
        ));
    }

    #[test]
    fn non_lie_input_is_refused_in_the_ce_theory() {
        let ell2 = algebras::ell2();
        let line = LeibnizAlgebra::abelian(1);
        let m = RatMatrix::from_int_rows(&[&[1, 0]], 2);
        let f = AlgebraHom::new(ell2, line, m).unwrap();
        assert!(matches!(
            five_term_report(ChainTheory::LieVsVect, &f),
            Err(FiveTermError::Homology(HomologyError::InputNotLie(_)))
        ));
    }

    #[test]
    fn degree2_slot_order_matches_the_chain_conventions() {
        let cur = algebras::sl2_current2();
        // The identity map induces identity on both chain levels, so the
        // report on it is exact with zero middle term.
        let f = AlgebraHom::identity(&cur);
        let report = five_term_report(ChainTheory::LeibVsVectLie, &f).unwrap();
        assert_eq!(report.dims[2], 0);
        assert!(report.holds());
    }

    #[test]
    fn group_tail_of_the_sign_map() {
        // A3/[A3,S3] -> ab S3 -> ab C2 -> 0 with trivial first term.
        let v = GroupsOverAb;
        let s3 = groups::symmetric(3);
        let c2 = groups::cyclic(2);
        let images: Vec<usize> = (0..6)
            .map(|g| if s3.derived_subgroup().contains(g) { 0 } else { 1 })
            .collect();
        let f = GroupHom::new(s3.clone(), c2, images).unwrap();
        let ext = Extension::new(&v, f).unwrap();
        let tail = three_term_tail(&v, &ext).unwrap();
        assert!(tail.exact_at_middle);
        assert!(tail.end_surjective);
        assert_eq!(tail.quotient_obj.order(), 1);
    }

    #[test]
    fn transgression_kills_nothing_on_a_perfect_cover() {
        // For the Loday UCE of the current algebra the middle term is
        // H2 itself and the sequence stays exact.
        let g = algebras::sl2_current2();
        let uce = crate::homology::uce_construct(&g, ChainTheory::LeibVsVectLie).unwrap();
        let report = five_term_report(ChainTheory::LeibVsVectLie, &uce.projection).unwrap();
        assert_eq!(report.dims[2], 1);
        assert!(report.holds());
    }
}
