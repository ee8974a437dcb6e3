//! Finite dimensional Leibniz algebras over the rationals, given by
//! structure constants.  Lie algebras are the Leibniz algebras whose
//! squares vanish; [`LeibnizAlgebra::check`] reports both identities with
//! witnesses instead of failing, so callers can classify invalid input.
//!
//! The bracket convention is right Leibniz:
//! `[x,[y,z]] = [[x,y],z] - [[x,z],y]`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::{LinalgError, QuotientMap, RatMatrix, Rational, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("structure table has wrong shape: {0}")]
    Shape(String),
    #[error("not a Leibniz algebra, identity fails on basis triple ({0}, {1}, {2})")]
    NotLeibniz(usize, usize, usize),
    #[error("not a Lie algebra, square of basis pair ({0}, {1}) does not vanish")]
    NotLie(usize, usize),
    #[error("subspace is not an ideal: bracket of basis vector {side} {index} escapes")]
    NotIdeal { index: usize, side: &'static str },
    #[error("subspace is not a subalgebra: bracket of basis pair ({0}, {1}) escapes")]
    NotSubalgebra(usize, usize),
    #[error("matrix is not a homomorphism on basis pair ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("source and target do not match")]
    Mismatch,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Verdict of the identity scan, with first failing witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraCheck {
    pub is_leibniz: bool,
    pub leibniz_witness: Option<(usize, usize, usize)>,
    pub is_lie: bool,
    pub lie_witness: Option<(usize, usize)>,
}

/// Leibniz algebra on basis `e_0 .. e_{dim-1}` with bracket table
/// `[e_i, e_j]` stored as coordinate vectors.
#[derive(Clone)]
pub struct LeibnizAlgebra {
    dim: usize,
    bracket: Vec<Vec<Rational>>,
    names: Option<Vec<String>>,
}

impl PartialEq for LeibnizAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.bracket == other.bracket
    }
}

impl Eq for LeibnizAlgebra {}

impl fmt::Debug for LeibnizAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeibnizAlgebra(dim {})", self.dim)
    }
}

impl LeibnizAlgebra {
    /// Builds an algebra from a full `dim x dim` table of bracket values.
    /// Shape is checked here; the algebra identities are a separate
    /// verdict from [`check`](Self::check).
    pub fn new(
        dim: usize,
        table: Vec<Vec<Vec<Rational>>>,
        names: Option<Vec<String>>,
    ) -> Result<Arc<Self>, AlgebraError> {
        if table.len() != dim {
            return Err(AlgebraError::Shape(format!(
                "{} rows for dimension {dim}",
                table.len()
            )));
        }
        let mut bracket = Vec::with_capacity(dim * dim);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != dim {
                return Err(AlgebraError::Shape(format!(
                    "row {i} has {} entries for dimension {dim}",
                    row.len()
                )));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != dim {
                    return Err(AlgebraError::Shape(format!(
                        "bracket ({i},{j}) has length {} for dimension {dim}",
                        v.len()
                    )));
                }
                bracket.push(v);
            }
        }
        Ok(Arc::new(LeibnizAlgebra { dim, bracket, names }))
    }

    /// Sparse constructor: unspecified brackets are zero.
    pub fn from_entries(
        dim: usize,
        entries: &[(usize, usize, Vec<(usize, Rational)>)],
        names: Option<Vec<String>>,
    ) -> Result<Arc<Self>, AlgebraError> {
        let mut table = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
        for (i, j, coords) in entries {
            if *i >= dim || *j >= dim {
                return Err(AlgebraError::Shape(format!("entry ({i},{j}) out of range")));
            }
            for (k, c) in coords {
                if *k >= dim {
                    return Err(AlgebraError::Shape(format!("coordinate {k} out of range")));
                }
                table[*i][*j][*k] = c.clone();
            }
        }
        LeibnizAlgebra::new(dim, table, names)
    }

    pub fn abelian(dim: usize) -> Arc<Self> {
        LeibnizAlgebra::new(dim, vec![vec![vec![Rational::zero(); dim]; dim]; dim], None)
            .expect("abelian table is well shaped")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.bracket[i * self.dim + j]
    }

    pub fn bracket_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, b) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    *o += &c * b;
                }
            }
        }
        out
    }

    /// Scans the Leibniz identity and the vanishing of squares over basis
    /// triples and pairs, in lexicographic order, recording the first
    /// failure of each.
    pub fn check(&self) -> AlgebraCheck {
        let mut leibniz_witness = None;
        'outer: for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let lhs = self.bracket_vec(&self.basis_vec(i), self.bracket_basis(j, k));
                    let ab_c = self.bracket_vec(self.bracket_basis(i, j), &self.basis_vec(k));
                    let ac_b = self.bracket_vec(self.bracket_basis(i, k), &self.basis_vec(j));
                    let ok = lhs
                        .iter()
                        .zip(ab_c.iter().zip(&ac_b))
                        .all(|(l, (x, y))| l == &(x - y));
                    if !ok {
                        leibniz_witness = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        let mut lie_witness = None;
        'pairs: for i in 0..self.dim {
            for j in i..self.dim {
                let sum: Vec<Rational> = self
                    .bracket_basis(i, j)
                    .iter()
                    .zip(self.bracket_basis(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                if sum.iter().any(|c| !c.is_zero()) {
                    lie_witness = Some((i, j));
                    break 'pairs;
                }
            }
        }
        AlgebraCheck {
            is_leibniz: leibniz_witness.is_none(),
            leibniz_witness,
            is_lie: leibniz_witness.is_none() && lie_witness.is_none(),
            lie_witness,
        }
    }

    pub fn is_leibniz(&self) -> bool {
        self.check().is_leibniz
    }

    pub fn is_lie(&self) -> bool {
        self.check().is_lie
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    /// Matrix of `y -> [e_i, y]`.
    pub fn left_mult(&self, i: usize) -> RatMatrix {
        RatMatrix::from_fn(self.dim, self.dim, |r, j| self.bracket_basis(i, j)[r].clone())
    }

    /// Matrix of `x -> [x, e_i]`.
    pub fn right_mult(&self, i: usize) -> RatMatrix {
        RatMatrix::from_fn(self.dim, self.dim, |r, j| self.bracket_basis(j, i)[r].clone())
    }

    /// Smallest two sided ideal containing `seed`.
    pub fn ideal_closure(&self, seed: &Subspace) -> Subspace {
        let mut current = seed.clone();
        loop {
            let mut rows = current.basis_rows();
            for v in current.basis_rows() {
                for i in 0..self.dim {
                    rows.push(self.bracket_vec(&self.basis_vec(i), &v));
                    rows.push(self.bracket_vec(&v, &self.basis_vec(i)));
                }
            }
            let next = Subspace::from_rows(self.dim, &rows).expect("rows have ambient length");
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Span of all brackets; always an ideal.
    pub fn derived(&self) -> Subspace {
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                rows.push(self.bracket_basis(i, j).to_vec());
            }
        }
        Subspace::from_rows(self.dim, &rows).expect("bracket rows have ambient length")
    }

    /// Ideal generated by squares.  Over the rationals the polarised
    /// generators `[e_i, e_i]` and `[e_i, e_j] + [e_j, e_i]` span the same
    /// space as all `[x, x]`.
    pub fn square_ideal(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            rows.push(self.bracket_basis(i, i).to_vec());
            for j in (i + 1)..self.dim {
                let sym: Vec<Rational> = self
                    .bracket_basis(i, j)
                    .iter()
                    .zip(self.bracket_basis(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                rows.push(sym);
            }
        }
        let span = Subspace::from_rows(self.dim, &rows).expect("rows have ambient length");
        self.ideal_closure(&span)
    }

    /// Ideal generated by `{ z : [x, z] = -[z, x] for all x }`.
    pub fn lie_centre(&self) -> Subspace {
        let mut stacked = RatMatrix::zeros(0, self.dim);
        for i in 0..self.dim {
            let anti = self.left_mult(i).add(&self.right_mult(i)).expect("square matrices");
            stacked = stacked.vstack(&anti).expect("same column count");
        }
        let sol = Subspace::from_rows(self.dim, &stacked.kernel_basis())
            .expect("kernel vectors have ambient length");
        self.ideal_closure(&sol)
    }

    /// Two sided centre `{ z : [z, x] = 0 = [x, z] for all x }`.
    pub fn centre(&self) -> Subspace {
        let mut stacked = RatMatrix::zeros(0, self.dim);
        for i in 0..self.dim {
            stacked = stacked.vstack(&self.left_mult(i)).expect("same column count");
            stacked = stacked.vstack(&self.right_mult(i)).expect("same column count");
        }
        Subspace::from_rows(self.dim, &stacked.kernel_basis())
            .expect("kernel vectors have ambient length")
    }

    /// Ideal closure of `span{ [k, b], [b, k] }` for `k` in `k_sub` and `b`
    /// ranging over the whole algebra.
    pub fn mixed_commutator(&self, k_sub: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for k in k_sub.basis_rows() {
            for i in 0..self.dim {
                rows.push(self.bracket_vec(&k, &self.basis_vec(i)));
                rows.push(self.bracket_vec(&self.basis_vec(i), &k));
            }
        }
        let span = Subspace::from_rows(self.dim, &rows).expect("rows have ambient length");
        self.ideal_closure(&span)
    }

    pub fn check_ideal(&self, s: &Subspace) -> Result<(), AlgebraError> {
        for (index, v) in s.basis_rows().into_iter().enumerate() {
            for i in 0..self.dim {
                if !s.contains_vec(&self.bracket_vec(&v, &self.basis_vec(i))) {
                    return Err(AlgebraError::NotIdeal { index, side: "right" });
                }
                if !s.contains_vec(&self.bracket_vec(&self.basis_vec(i), &v)) {
                    return Err(AlgebraError::NotIdeal { index, side: "left" });
                }
            }
        }
        Ok(())
    }

    /// Quotient by a two sided ideal, with the projection.
    pub fn quotient(
        self: &Arc<Self>,
        ideal: &Subspace,
    ) -> Result<(Arc<LeibnizAlgebra>, AlgebraHom), AlgebraError> {
        if ideal.ambient_dim() != self.dim {
            return Err(AlgebraError::Mismatch);
        }
        self.check_ideal(ideal)?;
        let QuotientMap { proj, section } = ideal.quotient_map();
        let q_dim = proj.nrows();
        let mut table = vec![vec![vec![Rational::zero(); q_dim]; q_dim]; q_dim];
        for a in 0..q_dim {
            let ea = section.col(a);
            for b in 0..q_dim {
                let eb = section.col(b);
                let v = self.bracket_vec(&ea, &eb);
                table[a][b] = proj.mul_vec(&v)?;
            }
        }
        let q = LeibnizAlgebra::new(q_dim, table, None)?;
        debug_assert!(q.is_leibniz() || !self.is_leibniz());
        let hom = AlgebraHom {
            source: Arc::clone(self),
            target: Arc::clone(&q),
            matrix: proj,
        };
        Ok((q, hom))
    }

    /// Reflection onto Lie algebras: quotient by the square ideal.
    pub fn reflect_lie(self: &Arc<Self>) -> (Arc<LeibnizAlgebra>, AlgebraHom) {
        let (q, hom) = self.quotient(&self.square_ideal()).expect("square ideal is an ideal");
        debug_assert!(!self.is_leibniz() || q.is_lie());
        (q, hom)
    }

    /// Reflection onto abelian algebras: quotient by the derived ideal.
    pub fn reflect_abelian(self: &Arc<Self>) -> (Arc<LeibnizAlgebra>, AlgebraHom) {
        self.quotient(&self.derived()).expect("derived subspace is an ideal")
    }

    pub fn is_perfect(&self) -> bool {
        self.derived().is_full()
    }

    /// Subspace closed under the bracket as an algebra, with inclusion.
    pub fn subalgebra_on(
        self: &Arc<Self>,
        space: &Subspace,
    ) -> Result<(Arc<LeibnizAlgebra>, AlgebraHom), AlgebraError> {
        let k = space.dim();
        let basis = space.basis_rows();
        let mut table = vec![vec![vec![Rational::zero(); k]; k]; k];
        for a in 0..k {
            for b in 0..k {
                let v = self.bracket_vec(&basis[a], &basis[b]);
                table[a][b] = space.coords_of(&v).map_err(|_| AlgebraError::NotSubalgebra(a, b))?;
            }
        }
        let sub = LeibnizAlgebra::new(k, table, None)?;
        let incl = AlgebraHom {
            source: Arc::clone(&sub),
            target: Arc::clone(self),
            matrix: space.basis().transpose(),
        };
        Ok((sub, incl))
    }

    pub fn zero_algebra() -> Arc<LeibnizAlgebra> {
        LeibnizAlgebra::abelian(0)
    }
}

/// Direct sum with projections and injections.
pub struct DirectSum {
    pub algebra: Arc<LeibnizAlgebra>,
    pub proj0: AlgebraHom,
    pub proj1: AlgebraHom,
    pub inj0: AlgebraHom,
    pub inj1: AlgebraHom,
}

pub fn direct_sum(a: &Arc<LeibnizAlgebra>, b: &Arc<LeibnizAlgebra>) -> DirectSum {
    let da = a.dim();
    let db = b.dim();
    let dim = da + db;
    let mut table = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if i < da && j < da {
                let v = a.bracket_basis(i, j);
                for k in 0..da {
                    table[i][j][k] = v[k].clone();
                }
            } else if i >= da && j >= da {
                let v = b.bracket_basis(i - da, j - da);
                for k in 0..db {
                    table[i][j][da + k] = v[k].clone();
                }
            }
        }
    }
    let sum = LeibnizAlgebra::new(dim, table, None).expect("sum table is well shaped");
    let proj0 = AlgebraHom {
        source: Arc::clone(&sum),
        target: Arc::clone(a),
        matrix: RatMatrix::from_fn(da, dim, |i, j| {
            if i == j { Rational::one() } else { Rational::zero() }
        }),
    };
    let proj1 = AlgebraHom {
        source: Arc::clone(&sum),
        target: Arc::clone(b),
        matrix: RatMatrix::from_fn(db, dim, |i, j| {
            if j == da + i { Rational::one() } else { Rational::zero() }
        }),
    };
    let inj0 = AlgebraHom {
        source: Arc::clone(a),
        target: Arc::clone(&sum),
        matrix: RatMatrix::from_fn(dim, da, |i, j| {
            if i == j { Rational::one() } else { Rational::zero() }
        }),
    };
    let inj1 = AlgebraHom {
        source: Arc::clone(b),
        target: Arc::clone(&sum),
        matrix: RatMatrix::from_fn(dim, db, |i, j| {
            if i == da + j { Rational::one() } else { Rational::zero() }
        }),
    };
    DirectSum { algebra: sum, proj0, proj1, inj0, inj1 }
}

/// Algebra homomorphism as a matrix acting on coordinate columns.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraHom {
    source: Arc<LeibnizAlgebra>,
    target: Arc<LeibnizAlgebra>,
    matrix: RatMatrix,
}

impl fmt::Debug for AlgebraHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraHom({} -> {}) {:?}", self.source.dim(), self.target.dim(), self.matrix)
    }
}

impl AlgebraHom {
    pub fn new(
        source: Arc<LeibnizAlgebra>,
        target: Arc<LeibnizAlgebra>,
        matrix: RatMatrix,
    ) -> Result<Self, AlgebraError> {
        if matrix.nrows() != target.dim() || matrix.ncols() != source.dim() {
            return Err(AlgebraError::Mismatch);
        }
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let lhs = matrix.mul_vec(source.bracket_basis(i, j))?;
                let rhs = target.bracket_vec(&matrix.col(i), &matrix.col(j));
                if lhs != rhs {
                    return Err(AlgebraError::NotHomomorphism(i, j));
                }
            }
        }
        Ok(AlgebraHom { source, target, matrix })
    }

    pub fn identity(g: &Arc<LeibnizAlgebra>) -> Self {
        AlgebraHom {
            source: Arc::clone(g),
            target: Arc::clone(g),
            matrix: RatMatrix::identity(g.dim()),
        }
    }

    pub fn to_zero(g: &Arc<LeibnizAlgebra>, z: &Arc<LeibnizAlgebra>) -> Self {
        AlgebraHom {
            source: Arc::clone(g),
            target: Arc::clone(z),
            matrix: RatMatrix::zeros(z.dim(), g.dim()),
        }
    }

    pub fn source(&self) -> &Arc<LeibnizAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<LeibnizAlgebra> {
        &self.target
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v).expect("vector matches source dimension")
    }

    pub fn compose_after(&self, first: &AlgebraHom) -> Result<AlgebraHom, AlgebraError> {
        if first.target != self.source {
            return Err(AlgebraError::Mismatch);
        }
        Ok(AlgebraHom {
            source: Arc::clone(&first.source),
            target: Arc::clone(&self.target),
            matrix: self.matrix.matmul(&first.matrix)?,
        })
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::from_rows(self.source.dim(), &self.matrix.kernel_basis())
            .expect("kernel vectors match source dimension")
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_span(self.matrix.transpose())
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_surjective()
    }

    pub fn image_of(&self, s: &Subspace) -> Subspace {
        s.image_under(&self.matrix).expect("subspace matches source dimension")
    }

    pub fn preimage_of(&self, s: &Subspace) -> Subspace {
        s.preimage_under(&self.matrix).expect("subspace matches target dimension")
    }

    /// A linear right inverse of a surjective hom; not a homomorphism in
    /// general, only a section of underlying vector spaces.
    pub fn linear_section(&self) -> Result<RatMatrix, AlgebraError> {
        Ok(self.matrix.right_inverse()?)
    }
}

/// Pullback of two homs with common target, as a subalgebra of the direct
/// sum of the sources.
pub struct AlgebraFiber {
    pub algebra: Arc<LeibnizAlgebra>,
    pub p0: AlgebraHom,
    pub p1: AlgebraHom,
}

pub fn fiber_product(f: &AlgebraHom, g: &AlgebraHom) -> Result<AlgebraFiber, AlgebraError> {
    if f.target != g.target {
        return Err(AlgebraError::Mismatch);
    }
    let sum = direct_sum(&f.source, &g.source);
    // Kernel of (f o proj0) - (g o proj1) inside the direct sum.
    let m0 = f.matrix.matmul(&sum.proj0.matrix)?;
    let m1 = g.matrix.matmul(&sum.proj1.matrix)?;
    let diff = m0.add(&m1.scale(&Rational::from_int(-1)))?;
    let space = Subspace::from_rows(sum.algebra.dim(), &diff.kernel_basis())?;
    let (p, incl) = sum.algebra.subalgebra_on(&space)?;
    let p0 = sum.proj0.compose_after(&incl)?;
    let p1 = sum.proj1.compose_after(&incl)?;
    Ok(AlgebraFiber { algebra: p, p0, p1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::algebras;

    #[test]
    fn sl2_is_lie_and_perfect() {
        let g = algebras::sl2();
        let c = g.check();
        assert!(c.is_leibniz && c.is_lie);
        assert!(g.is_perfect());
        assert!(g.centre().is_zero());
        assert!(g.square_ideal().is_zero());
    }

    #[test]
    fn ell2_is_leibniz_but_not_lie() {
        let g = algebras::ell2();
        let c = g.check();
        assert!(c.is_leibniz);
        assert!(!c.is_lie);
        assert_eq!(c.lie_witness, Some((0, 0)));
    }

    #[test]
    fn genuinely_non_leibniz_table_is_caught() {
        // [e0,e1] = e0 and [e1,e0] = e1 breaks the identity; the first
        // failing triple in lexicographic order is (0, 1, 0).
        let one = Rational::one();
        let g = LeibnizAlgebra::from_entries(
            2,
            &[(0, 1, vec![(0, one.clone())]), (1, 0, vec![(1, one)])],
            None,
        )
        .unwrap();
        let c = g.check();
        assert!(!c.is_leibniz);
        assert_eq!(c.leibniz_witness, Some((0, 1, 0)));
    }

    #[test]
    fn ell2_square_ideal_is_e1_line() {
        let g = algebras::ell2();
        let sq = g.square_ideal();
        assert_eq!(sq.dim(), 1);
        assert!(sq.contains_vec(&g.basis_vec(1)));
        // The Lie reflection is the one dimensional abelian algebra.
        let (lie, unit) = g.reflect_lie();
        assert_eq!(lie.dim(), 1);
        assert!(lie.is_lie());
        assert!(unit.is_surjective());
        assert_eq!(unit.kernel(), sq);
    }

    #[test]
    fn ell2_lie_centre_is_e1_line() {
        let g = algebras::ell2();
        let z = g.lie_centre();
        assert_eq!(z.dim(), 1);
        assert!(z.contains_vec(&g.basis_vec(1)));
    }

    #[test]
    fn heisenberg_centre_and_derived_agree() {
        let g = algebras::heisenberg3();
        assert_eq!(g.centre().dim(), 1);
        assert_eq!(g.derived(), g.centre());
        assert!(g.check().is_lie);
    }

    #[test]
    fn quotient_of_heisenberg_by_centre_is_abelian_plane() {
        let g = algebras::heisenberg3();
        let (q, pi) = g.quotient(&g.centre()).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.derived().is_zero());
        assert!(pi.is_surjective());
        assert_eq!(pi.kernel(), g.centre());
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let g = algebras::sl2();
        // The line through e (index 1) is not an ideal of sl2.
        let line = Subspace::from_rows(3, &[g.basis_vec(1)]).unwrap();
        assert!(matches!(g.quotient(&line), Err(AlgebraError::NotIdeal { .. })));
    }

    #[test]
    fn sl2_current_algebra_is_perfect_lie() {
        let g = algebras::sl2_current2();
        assert!(g.check().is_lie);
        assert!(g.is_perfect());
        assert_eq!(g.dim(), 6);
    }

    #[test]
    fn demisemidirect_product_is_perfect_non_lie_leibniz() {
        let g = algebras::demi_sl2_adjoint();
        let c = g.check();
        assert!(c.is_leibniz);
        assert!(!c.is_lie);
        assert!(g.is_perfect());
        assert_eq!(g.square_ideal().dim(), 3);
    }

    #[test]
    fn hom_validation_catches_non_homomorphism() {
        let g = algebras::sl2();
        let bad = RatMatrix::identity(3).scale(&Rational::from_int(2));
        assert!(matches!(
            AlgebraHom::new(Arc::clone(&g), Arc::clone(&g), bad),
            Err(AlgebraError::NotHomomorphism(..))
        ));
        let good = RatMatrix::identity(3);
        assert!(AlgebraHom::new(Arc::clone(&g), g, good).is_ok());
    }

    #[test]
    fn fiber_product_of_quotient_with_itself() {
        let g = algebras::heisenberg3();
        let (_, pi) = g.quotient(&g.centre()).unwrap();
        let fiber = fiber_product(&pi, &pi).unwrap();
        assert_eq!(fiber.algebra.dim(), 4);
        assert!(fiber.p0.is_surjective() && fiber.p1.is_surjective());
        // Both projections agree after composing with pi.
        let a = pi.compose_after(&fiber.p0).unwrap();
        let b = pi.compose_after(&fiber.p1).unwrap();
        assert_eq!(a.matrix(), b.matrix());
    }

    #[test]
    fn mixed_commutator_of_centre_vanishes() {
        let g = algebras::heisenberg3();
        assert!(g.mixed_commutator(&g.centre()).is_zero());
        let full = Subspace::full(3);
        assert_eq!(g.mixed_commutator(&full), g.derived());
    }
}
