//! Second homology of Lie and Leibniz algebras at the chain level, and
//! explicit universal central extensions of perfect algebras.
//!
//! Two complexes in low degrees:
//!
//! * Chevalley-Eilenberg, for Lie algebras:
//!   `Λ³g → Λ²g → g` with `d2(x∧y) = [x,y]` and
//!   `d3(x∧y∧z) = [x,y]∧z − [x,z]∧y + [y,z]∧x`,
//! * Loday, for Leibniz algebras:
//!   `g⊗g⊗g → g⊗g → g` with `d2(x⊗y) = [x,y]` and
//!   `d3(x⊗y⊗z) = [x,y]⊗z − [x,z]⊗y − x⊗[y,z]`.
//!
//! In both flavors `H₂ = ker d2 / im d3`.  For a perfect algebra the
//! quotient of the degree two space by `im d3` carries an algebra
//! structure, and the map induced by `d2` is a universal central
//! extension with kernel of dimension `dim H₂`.

use std::sync::Arc;

use thiserror::Error;

use crate::engine::algebras::AlgVariety;
use crate::engine::{classify, EngineError, Extension};
use crate::leibniz::{AlgebraError, AlgebraHom, LeibnizAlgebra};
use crate::linalg::{LinalgError, RatMatrix, Rational, Subspace};

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("expected a Lie algebra: {0}")]
    InputNotLie(String),
    #[error("expected a Leibniz algebra, identity fails on basis triple {0:?}")]
    InputNotLeibniz((usize, usize, usize)),
    #[error("algebra is not perfect, its abelianisation has dimension {h1_dim}")]
    NotPerfect { h1_dim: usize },
    #[error(
        "induced bracket is not constant on cosets: boundary generator {generator} \
         paired {order} with class {class} leaves the boundary space"
    )]
    WellDefinednessFailure {
        generator: usize,
        class: usize,
        order: &'static str,
    },
    #[error("constructed total algebra fails the expected identities: {0}")]
    VarietyIdentityFailure(String),
    #[error("universal central extension postcondition failed: {0}")]
    PostconditionFailure(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Which low degree complex the chain data came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainFlavor {
    /// Exterior powers, Lie algebras only.
    CE,
    /// Tensor powers, any Leibniz algebra.
    Loday,
}

/// Boundary maps of the complex in degrees three, two, one.
///
/// Degree two basis: for [`ChainFlavor::CE`] the pairs `e_i ∧ e_j` with
/// `i < j` in lexicographic order; for [`ChainFlavor::Loday`] all pairs
/// `e_i ⊗ e_j` in row major order.  Degree three follows the same scheme
/// one level up.
#[derive(Clone, Debug)]
pub struct ChainData {
    pub flavor: ChainFlavor,
    pub degree2_dim: usize,
    pub degree3_dim: usize,
    /// One column per degree two basis element, valued in `g`.
    pub d2: RatMatrix,
    /// One column per degree three basis element, valued in degree two.
    pub d3: RatMatrix,
}

impl ChainData {
    /// `d2 · d3 = 0`; holds whenever the input satisfied the Leibniz
    /// identity.
    pub fn is_complex(&self) -> bool {
        self.d2
            .matmul(&self.d3)
            .map(|m| m.is_zero())
            .unwrap_or(false)
    }

    /// Image of `d3` inside the degree two space.
    pub fn boundaries(&self) -> Subspace {
        Subspace::from_span(self.d3.transpose())
    }

    /// Kernel of `d2` inside the degree two space.
    pub fn cycles(&self) -> Result<Subspace, LinalgError> {
        Subspace::from_rows(self.degree2_dim, &self.d2.kernel_basis())
    }
}

/// Second homology of one of the two complexes.
#[derive(Clone, Debug)]
pub struct H2 {
    pub dim: usize,
    /// Cycle representatives in degree two coordinates, one per class.
    /// Deterministic: taken from the reduced basis of the cycle space in
    /// order, skipping vectors already covered by boundaries.
    pub representatives: Vec<Vec<Rational>>,
    pub chain: ChainData,
}

/// Degree two basis bookkeeping shared by both flavors.
pub(crate) enum PairBasis {
    Wedge { n: usize, index: Vec<usize> },
    Tensor { n: usize },
}

impl PairBasis {
    pub(crate) fn wedge(n: usize) -> Self {
        let mut index = vec![usize::MAX; n * n];
        let mut next = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                index[i * n + j] = next;
                next += 1;
            }
        }
        PairBasis::Wedge { n, index }
    }

    pub(crate) fn tensor(n: usize) -> Self {
        PairBasis::Tensor { n }
    }

    pub(crate) fn dim(&self) -> usize {
        match self {
            PairBasis::Wedge { n, .. } => n * n.saturating_sub(1) / 2,
            PairBasis::Tensor { n } => n * n,
        }
    }

    /// Coordinates of `v ∧ w` respectively `v ⊗ w` in the degree two
    /// basis.
    pub(crate) fn pair(&self, v: &[Rational], w: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        match self {
            PairBasis::Wedge { n, index } => {
                for i in 0..*n {
                    if v[i].is_zero() {
                        continue;
                    }
                    for j in 0..*n {
                        if i == j || w[j].is_zero() {
                            continue;
                        }
                        let c = &v[i] * &w[j];
                        if i < j {
                            let slot = index[i * n + j];
                            out[slot] = &out[slot] + &c;
                        } else {
                            let slot = index[j * n + i];
                            out[slot] = &out[slot] - &c;
                        }
                    }
                }
            }
            PairBasis::Tensor { n } => {
                for i in 0..*n {
                    if v[i].is_zero() {
                        continue;
                    }
                    for j in 0..*n {
                        if w[j].is_zero() {
                            continue;
                        }
                        out[i * n + j] = &v[i] * &w[j];
                    }
                }
            }
        }
        out
    }
}

fn add_into(acc: &mut [Rational], v: &[Rational], sign: i64) {
    let s = Rational::from_int(sign);
    for (a, x) in acc.iter_mut().zip(v) {
        *a = &*a + &(&s * x);
    }
}

/// Chevalley-Eilenberg boundaries of a Lie algebra.
fn ce_chain(g: &LeibnizAlgebra) -> ChainData {
    let n = g.dim();
    let basis = PairBasis::wedge(n);
    let p = basis.dim();

    let mut d2 = RatMatrix::zeros(n, p);
    let mut c = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            for (r, val) in g.bracket_basis(i, j).iter().enumerate() {
                d2.set(r, c, val.clone());
            }
            c += 1;
        }
    }

    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| {
            ((i + 1)..n).flat_map(move |j| ((j + 1)..n).map(move |k| (i, j, k)))
        })
        .collect();
    let mut d3 = RatMatrix::zeros(p, triples.len());
    for (c, &(i, j, k)) in triples.iter().enumerate() {
        let mut col = vec![Rational::zero(); p];
        add_into(&mut col, &basis.pair(g.bracket_basis(i, j), &g.basis_vec(k)), 1);
        add_into(&mut col, &basis.pair(g.bracket_basis(i, k), &g.basis_vec(j)), -1);
        add_into(&mut col, &basis.pair(g.bracket_basis(j, k), &g.basis_vec(i)), 1);
        for (r, val) in col.into_iter().enumerate() {
            d3.set(r, c, val);
        }
    }

    ChainData {
        flavor: ChainFlavor::CE,
        degree2_dim: p,
        degree3_dim: triples.len(),
        d2,
        d3,
    }
}

/// Loday boundaries of a Leibniz algebra.
fn loday_chain(g: &LeibnizAlgebra) -> ChainData {
    let n = g.dim();
    let basis = PairBasis::tensor(n);
    let p = basis.dim();

    let mut d2 = RatMatrix::zeros(n, p);
    for i in 0..n {
        for j in 0..n {
            for (r, val) in g.bracket_basis(i, j).iter().enumerate() {
                d2.set(r, i * n + j, val.clone());
            }
        }
    }

    let mut d3 = RatMatrix::zeros(p, n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = (i * n + j) * n + k;
                let mut col = vec![Rational::zero(); p];
                add_into(&mut col, &basis.pair(g.bracket_basis(i, j), &g.basis_vec(k)), 1);
                add_into(&mut col, &basis.pair(g.bracket_basis(i, k), &g.basis_vec(j)), -1);
                add_into(&mut col, &basis.pair(&g.basis_vec(i), g.bracket_basis(j, k)), -1);
                for (r, val) in col.into_iter().enumerate() {
                    d3.set(r, c, val);
                }
            }
        }
    }

    ChainData {
        flavor: ChainFlavor::Loday,
        degree2_dim: p,
        degree3_dim: n * n * n,
        d2,
        d3,
    }
}

fn homology_of(chain: ChainData) -> Result<H2, HomologyError> {
    debug_assert!(chain.is_complex());
    let cycles = chain.cycles()?;
    let boundaries = chain.boundaries();
    let mut covered = boundaries.clone();
    let mut representatives = Vec::new();
    for row in cycles.basis_rows() {
        if covered.contains_vec(&row) {
            continue;
        }
        covered = covered.sum(&Subspace::from_rows(chain.degree2_dim, &[row.clone()])?)?;
        representatives.push(row);
    }
    let dim = cycles.dim() - boundaries.dim();
    debug_assert_eq!(representatives.len(), dim);
    Ok(H2 { dim, representatives, chain })
}

/// Second Chevalley-Eilenberg homology of a Lie algebra.
pub fn ce_h2(g: &LeibnizAlgebra) -> Result<H2, HomologyError> {
    let verdict = g.check();
    if !verdict.is_lie {
        let reason = match (verdict.leibniz_witness, verdict.lie_witness) {
            (Some(t), _) => format!("Leibniz identity fails on basis triple {t:?}"),
            (None, Some(p)) => format!("square of basis pair {p:?} does not vanish"),
            (None, None) => unreachable!("not Lie without a witness"),
        };
        return Err(HomologyError::InputNotLie(reason));
    }
    homology_of(ce_chain(g))
}

/// Second Loday homology of a Leibniz algebra.
pub fn loday_hl2(g: &LeibnizAlgebra) -> Result<H2, HomologyError> {
    let verdict = g.check();
    if let Some(t) = verdict.leibniz_witness {
        return Err(HomologyError::InputNotLeibniz(t));
    }
    homology_of(loday_chain(g))
}

/// Reflectors available for the first homology object, which is the
/// reflection of the algebra itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reflector {
    /// Abelianisation: quotient by the derived subalgebra.
    Vect,
    /// Liesation: quotient by the ideal generated by squares.
    Lie,
    /// Composite of liesation followed by abelianisation.  On a Leibniz
    /// algebra this quotient equals the abelianisation, since squares
    /// are brackets.
    VectLie,
}

/// Dimension of the reflected algebra; zero exactly for perfect input.
pub fn h1(g: &Arc<LeibnizAlgebra>, reflector: Reflector) -> Result<usize, HomologyError> {
    if let Some(t) = g.check().leibniz_witness {
        return Err(HomologyError::InputNotLeibniz(t));
    }
    Ok(match reflector {
        Reflector::Vect => g.reflect_abelian().0.dim(),
        Reflector::Lie => g.reflect_lie().0.dim(),
        Reflector::VectLie => g.reflect_lie().0.reflect_abelian().0.dim(),
    })
}

/// The two relative settings with a chain level homology recipe: they
/// drive both the universal central extension constructor and the five
/// term exact sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainTheory {
    /// Lie algebras relative to vector spaces; Chevalley-Eilenberg chains.
    LieVsVect,
    /// Leibniz algebras relative to the composite of liesation and
    /// abelianisation; Loday chains.
    LeibVsVectLie,
}

impl ChainTheory {
    /// Second homology in this theory, gated on the matching identities.
    pub fn h2(&self, g: &LeibnizAlgebra) -> Result<H2, HomologyError> {
        match self {
            ChainTheory::LieVsVect => ce_h2(g),
            ChainTheory::LeibVsVectLie => loday_hl2(g),
        }
    }

    /// The engine formulation of the same subcategory.
    pub fn engine_variety(&self) -> AlgVariety {
        match self {
            ChainTheory::LieVsVect => AlgVariety::lie_vect(),
            ChainTheory::LeibVsVectLie => AlgVariety::leib_vect(),
        }
    }

    /// Reflector whose reflection is the first homology object.
    pub fn h1_reflector(&self) -> Reflector {
        match self {
            ChainTheory::LieVsVect => Reflector::Vect,
            ChainTheory::LeibVsVectLie => Reflector::VectLie,
        }
    }

    pub(crate) fn pair_basis(&self, n: usize) -> PairBasis {
        match self {
            ChainTheory::LieVsVect => PairBasis::wedge(n),
            ChainTheory::LeibVsVectLie => PairBasis::tensor(n),
        }
    }
}

/// A verified universal central extension `0 → H₂ → total → g → 0`.
#[derive(Clone, Debug)]
pub struct UceResult {
    pub total: Arc<LeibnizAlgebra>,
    /// The extension map, induced by `d2`.
    pub projection: AlgebraHom,
    /// Kernel of the projection inside `total`.
    pub kernel: Subspace,
    pub h2_dim: usize,
}

/// Builds the universal central extension of a perfect algebra as the
/// degree two space modulo boundaries, with the bracket of two classes
/// given by pairing their images under `d2`.
///
/// Every promise is checked before returning: the total algebra
/// satisfies the variety identities, the projection is a surjective
/// homomorphism, the extension is central for the matching reflector
/// (which here coincides with the abelianisation, so centrality is also
/// absolute), the kernel has dimension `dim H₂`, and the total is
/// perfect with vanishing H₁ and H₂, which certifies universality.
pub fn uce_construct(
    g: &Arc<LeibnizAlgebra>,
    variety: ChainTheory,
) -> Result<UceResult, HomologyError> {
    let h2 = variety.h2(g)?;
    if !g.is_perfect() {
        let h1_dim = h1(g, variety.h1_reflector())?;
        return Err(HomologyError::NotPerfect { h1_dim });
    }

    let chain = &h2.chain;
    let pair_basis = variety.pair_basis(g.dim());
    let boundaries = chain.boundaries();
    let quotient = boundaries.quotient_map();
    let u_dim = chain.degree2_dim - boundaries.dim();

    // Lifts of the quotient basis classes and their images in g.
    let lifts: Vec<Vec<Rational>> = (0..u_dim).map(|b| quotient.section.col(b)).collect();
    let images: Vec<Vec<Rational>> = lifts
        .iter()
        .map(|c| chain.d2.mul_vec(c))
        .collect::<Result<_, _>>()?;

    // The bracket of classes pairs their d2 images, so changing a
    // representative by a boundary w changes the result by the pair of
    // d2(w) with something.  Verify that such pairs stay inside the
    // boundary space, in both slot orders.
    for (gi, w) in boundaries.basis_rows().iter().enumerate() {
        let dw = chain.d2.mul_vec(w)?;
        for (b, x) in images.iter().enumerate() {
            if !boundaries.contains_vec(&pair_basis.pair(&dw, x)) {
                return Err(HomologyError::WellDefinednessFailure {
                    generator: gi,
                    class: b,
                    order: "on the left",
                });
            }
            if !boundaries.contains_vec(&pair_basis.pair(x, &dw)) {
                return Err(HomologyError::WellDefinednessFailure {
                    generator: gi,
                    class: b,
                    order: "on the right",
                });
            }
        }
    }

    let mut table = vec![vec![Vec::new(); u_dim]; u_dim];
    for a in 0..u_dim {
        for b in 0..u_dim {
            let p = pair_basis.pair(&images[a], &images[b]);
            table[a][b] = quotient.proj.mul_vec(&p)?;
        }
    }
    let names = (0..u_dim).map(|i| format!("u{i}")).collect();
    let total = LeibnizAlgebra::new(u_dim, table, Some(names))?;

    let verdict = total.check();
    if let Some(t) = verdict.leibniz_witness {
        return Err(HomologyError::VarietyIdentityFailure(format!(
            "Leibniz identity fails on basis triple {t:?}"
        )));
    }
    if variety == ChainTheory::LieVsVect && !verdict.is_lie {
        return Err(HomologyError::VarietyIdentityFailure(format!(
            "square of basis pair {:?} does not vanish",
            verdict.lie_witness.expect("not Lie without a witness")
        )));
    }

    let projection_matrix = chain.d2.matmul(&quotient.section)?;
    let projection = AlgebraHom::new(Arc::clone(&total), Arc::clone(g), projection_matrix)?;

    let engine_variety = variety.engine_variety();
    let extension = Extension::new(&engine_variety, projection.clone())?;
    let verdicts = classify(&engine_variety, &extension, 0)?;
    if !verdicts.central {
        return Err(HomologyError::PostconditionFailure(format!(
            "extension is not central, relative commutator has dimension {}",
            verdicts.relative_commutator.dim()
        )));
    }

    let kernel = projection.kernel();
    if kernel.dim() != h2.dim {
        return Err(HomologyError::PostconditionFailure(format!(
            "kernel dimension {} differs from homology dimension {}",
            kernel.dim(),
            h2.dim
        )));
    }

    if !total.is_perfect() {
        return Err(HomologyError::PostconditionFailure(
            "total algebra is not perfect".into(),
        ));
    }
    let h1_total = h1(&total, variety.h1_reflector())?;
    let h2_total = variety.h2(&total)?.dim;
    if h1_total != 0 || h2_total != 0 {
        return Err(HomologyError::PostconditionFailure(format!(
            "universality certificate fails, H1 = {h1_total} and H2 = {h2_total}"
        )));
    }

    Ok(UceResult { total, projection, kernel, h2_dim: h2.dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::algebras;

    fn rat(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn ce_dimensions_of_the_sample_zoo() {
        assert_eq!(ce_h2(&algebras::sl2()).unwrap().dim, 0);
        assert_eq!(ce_h2(&algebras::heisenberg3()).unwrap().dim, 2);
        assert_eq!(ce_h2(&algebras::r2()).unwrap().dim, 0);
        assert_eq!(ce_h2(&algebras::sl2_current2()).unwrap().dim, 0);
    }

    #[test]
    fn ce_of_abelian_counts_unordered_pairs() {
        for n in 0..5 {
            let h2 = ce_h2(&LeibnizAlgebra::abelian(n)).unwrap();
            assert_eq!(h2.dim, n * n.saturating_sub(1) / 2);
            assert!(h2.chain.d2.is_zero());
            assert!(h2.chain.d3.is_zero());
        }
    }

    #[test]
    fn ce_rejects_non_lie_input() {
        let err = ce_h2(&algebras::ell2()).unwrap_err();
        assert!(matches!(err, HomologyError::InputNotLie(_)));
    }

    #[test]
    fn ce_chain_shapes_for_sl2() {
        let h2 = ce_h2(&algebras::sl2()).unwrap();
        assert_eq!(h2.chain.degree2_dim, 3);
        assert_eq!(h2.chain.degree3_dim, 1);
        assert_eq!(h2.chain.d2.rank(), 3);
        assert!(h2.chain.is_complex());
    }

    #[test]
    fn loday_dimensions_of_the_sample_zoo() {
        assert_eq!(loday_hl2(&algebras::sl2()).unwrap().dim, 0);
        assert_eq!(loday_hl2(&algebras::heisenberg3()).unwrap().dim, 5);
        assert_eq!(loday_hl2(&algebras::ell2()).unwrap().dim, 1);
        assert_eq!(loday_hl2(&algebras::r2()).unwrap().dim, 1);
        assert_eq!(loday_hl2(&algebras::sl2_current2()).unwrap().dim, 1);
        assert_eq!(loday_hl2(&algebras::demi_sl2_adjoint()).unwrap().dim, 0);
        assert_eq!(loday_hl2(&algebras::demi_r2_line()).unwrap().dim, 1);
    }

    #[test]
    fn loday_of_abelian_counts_all_pairs() {
        for n in 0..4 {
            assert_eq!(loday_hl2(&LeibnizAlgebra::abelian(n)).unwrap().dim, n * n);
        }
    }

    #[test]
    fn loday_d2_rank_of_ell2_is_one() {
        let h2 = loday_hl2(&algebras::ell2()).unwrap();
        assert_eq!(h2.chain.degree2_dim, 4);
        assert_eq!(h2.chain.degree3_dim, 8);
        assert_eq!(h2.chain.d2.rank(), 1);
    }

    #[test]
    fn loday_rejects_non_leibniz_input() {
        // [e0, e0] = e1, [e1, e0] = e0 breaks the identity.
        let bad = LeibnizAlgebra::from_entries(
            2,
            &[(0, 0, vec![(1, rat(1))]), (1, 0, vec![(0, rat(1))])],
            None,
        )
        .unwrap();
        let err = loday_hl2(&bad).unwrap_err();
        assert!(matches!(err, HomologyError::InputNotLeibniz(_)));
    }

    #[test]
    fn both_complexes_square_to_zero_on_the_zoo() {
        let lie_zoo = [algebras::sl2(), algebras::heisenberg3(), algebras::r2(), algebras::sl2_current2()];
        for g in &lie_zoo {
            assert!(ce_h2(g).unwrap().chain.is_complex());
        }
        let leib_zoo = [algebras::ell2(), algebras::demi_sl2_adjoint(), algebras::demi_r2_line()];
        for g in lie_zoo.iter().chain(&leib_zoo) {
            assert!(loday_hl2(g).unwrap().chain.is_complex());
        }
    }

    #[test]
    fn representatives_are_cycles_outside_the_boundaries() {
        let h2 = ce_h2(&algebras::heisenberg3()).unwrap();
        assert_eq!(h2.representatives.len(), 2);
        let cycles = h2.chain.cycles().unwrap();
        let boundaries = h2.chain.boundaries();
        for rep in &h2.representatives {
            assert!(cycles.contains_vec(rep));
            assert!(!boundaries.contains_vec(rep));
        }
    }

    #[test]
    fn rank_nullity_consistency() {
        for g in [algebras::sl2(), algebras::heisenberg3(), algebras::sl2_current2()] {
            let h2 = loday_hl2(&g).unwrap();
            let cycle_dim = h2.chain.degree2_dim - h2.chain.d2.rank();
            assert_eq!(h2.dim, cycle_dim - h2.chain.d3.rank());
        }
    }

    #[test]
    fn h1_dimensions() {
        assert_eq!(h1(&algebras::sl2(), Reflector::Vect).unwrap(), 0);
        assert_eq!(h1(&algebras::ell2(), Reflector::VectLie).unwrap(), 1);
        assert_eq!(h1(&algebras::ell2(), Reflector::Lie).unwrap(), 1);
        assert_eq!(h1(&LeibnizAlgebra::abelian(4), Reflector::Vect).unwrap(), 4);
        assert_eq!(h1(&algebras::heisenberg3(), Reflector::Vect).unwrap(), 2);
    }

    #[test]
    fn uce_of_sl2_is_sl2_itself() {
        let uce = uce_construct(&algebras::sl2(), ChainTheory::LieVsVect).unwrap();
        assert_eq!(uce.h2_dim, 0);
        assert_eq!(uce.kernel.dim(), 0);
        assert_eq!(uce.total.dim(), 3);
        assert!(uce.projection.is_iso());
    }

    #[test]
    fn uce_gates_on_perfectness() {
        let err = uce_construct(&algebras::heisenberg3(), ChainTheory::LieVsVect).unwrap_err();
        assert!(matches!(err, HomologyError::NotPerfect { h1_dim: 2 }));
        let err = uce_construct(&algebras::ell2(), ChainTheory::LeibVsVectLie).unwrap_err();
        assert!(matches!(err, HomologyError::NotPerfect { h1_dim: 1 }));
    }

    #[test]
    fn uce_of_truncated_current_algebra_has_kernel_of_h2_size() {
        let g = algebras::sl2_current2();
        let expected = ce_h2(&g).unwrap().dim;
        let uce = uce_construct(&g, ChainTheory::LieVsVect).unwrap();
        assert_eq!(uce.h2_dim, expected);
        assert_eq!(uce.kernel.dim(), expected);
        assert_eq!(uce.total.dim(), 6 + expected);
    }

    #[test]
    fn loday_uce_of_sl2_recovers_sl2() {
        let uce = uce_construct(&algebras::sl2(), ChainTheory::LeibVsVectLie).unwrap();
        assert_eq!(uce.h2_dim, 0);
        assert_eq!(uce.total.dim(), 3);
        assert!(uce.total.is_lie());
        assert!(uce.projection.is_iso());
    }

    #[test]
    fn loday_uce_of_truncated_current_algebra_has_one_dimensional_kernel() {
        let g = algebras::sl2_current2();
        let uce = uce_construct(&g, ChainTheory::LeibVsVectLie).unwrap();
        assert_eq!(uce.h2_dim, 1);
        assert_eq!(uce.kernel.dim(), 1);
        assert_eq!(uce.total.dim(), 7);
    }

    #[test]
    fn loday_uce_of_a_genuinely_leibniz_algebra() {
        let g = algebras::demi_sl2_adjoint();
        assert!(!g.is_lie());
        let uce = uce_construct(&g, ChainTheory::LeibVsVectLie).unwrap();
        assert_eq!(uce.h2_dim, 0);
        assert!(uce.projection.is_iso());
    }
}
