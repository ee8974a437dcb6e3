use std::fmt;

use super::{LinalgError, RatMatrix, Rational};

/// Linear subspace of `Q^n` held as a canonical basis: the reduced row
/// echelon form of any spanning set, zero rows dropped.  Two subspaces are
/// equal as sets exactly when their canonical bases are equal, so the
/// derived `PartialEq` is semantic equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: RatMatrix,
}

/// Projection onto a complement of a subspace, with a chosen section.
///
/// `proj` is `q x n`, `section` is `n x q`, `proj * section = I` and the
/// kernel of `proj` is exactly the subspace the map was built from.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub proj: RatMatrix,
    pub section: RatMatrix,
}

impl QuotientMap {
    pub fn dim(&self) -> usize {
        self.proj.nrows()
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: RatMatrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: RatMatrix::identity(ambient) }
    }

    pub fn from_rows(ambient: usize, rows: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let m = RatMatrix::from_rows(rows.to_vec(), ambient)?;
        Ok(Subspace::from_span(m))
    }

    /// Canonicalises an arbitrary spanning set given as matrix rows.
    pub fn from_span(span: RatMatrix) -> Self {
        let ambient = span.ncols();
        let r = span.rref();
        let rank = r.rank();
        let rows = (0..rank).map(|i| r.matrix.row(i).to_vec()).collect();
        let basis = RatMatrix::from_rows(rows, ambient).expect("rref rows are rectangular");
        Subspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rational>> {
        self.basis.rows_vec()
    }

    fn pivots(&self) -> Vec<usize> {
        // Basis rows are in reduced echelon form, so the pivot of row i is
        // its first nonzero entry and that entry is 1.
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("canonical basis has no zero rows")
            })
            .collect()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coords_of(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::Shape("vector length differs from ambient".into()));
        }
        let pivots = self.pivots();
        let coords: Vec<Rational> = pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rem = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, b) in rem.iter_mut().zip(self.basis.row(i)) {
                *r -= c * b;
            }
        }
        if rem.iter().all(Rational::is_zero) {
            Ok(coords)
        } else {
            Err(LinalgError::NotInSubspace)
        }
    }

    pub fn contains_vec(&self, v: &[Rational]) -> bool {
        self.coords_of(v).is_ok()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient
            && (0..other.dim()).all(|i| self.contains_vec(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::Shape("sum of subspaces of different spaces".into()));
        }
        Ok(Subspace::from_span(self.basis.vstack(&other.basis)?))
    }

    /// Intersection via the kernel of `[A^T | -B^T]`: a kernel vector
    /// `(x, y)` encodes one element `A^T x = B^T y` of both spans.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::Shape("intersection across different spaces".into()));
        }
        let at = self.basis.transpose();
        let bt = other.basis.transpose().scale(&Rational::from_int(-1));
        let stacked = at.hstack(&bt)?;
        let a_dim = self.dim();
        let rows: Vec<Vec<Rational>> = stacked
            .kernel_basis()
            .into_iter()
            .map(|k| {
                at.mul_vec(&k[..a_dim]).expect("kernel vector splits by construction")
            })
            .collect();
        Subspace::from_rows(self.ambient, &rows)
    }

    /// Image of the subspace under a linear map given by `m` (columns
    /// indexed by the ambient space of `self`).
    pub fn image_under(&self, m: &RatMatrix) -> Result<Subspace, LinalgError> {
        let mapped = self.basis.matmul(&m.transpose())?;
        Ok(Subspace::from_span(mapped))
    }

    /// Preimage `{ v : m v in self }` where `m` maps into this ambient space.
    pub fn preimage_under(&self, m: &RatMatrix) -> Result<Subspace, LinalgError> {
        if m.nrows() != self.ambient {
            return Err(LinalgError::Shape("preimage under map with wrong target".into()));
        }
        let q = self.quotient_map();
        let composed = q.proj.matmul(m)?;
        Subspace::from_rows(
            m.ncols(),
            &composed.kernel_basis(),
        )
    }

    /// Projection `Q^n -> Q^n/self` in coordinates, with a section.
    ///
    /// Completes the canonical basis by standard basis vectors at the non
    /// pivot columns; the inverse of that square matrix has the quotient
    /// projection as its last rows.
    pub fn quotient_map(&self) -> QuotientMap {
        let n = self.ambient;
        let k = self.dim();
        let pivots = self.pivots();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        let mut c = RatMatrix::zeros(n, n);
        for (j, &_p) in pivots.iter().enumerate() {
            for i in 0..n {
                c.set(i, j, self.basis.get(j, i).clone());
            }
        }
        for (j, &f) in free.iter().enumerate() {
            c.set(f, k + j, Rational::one());
        }
        let inv = c.inverse().expect("completed basis is invertible");
        let proj = RatMatrix::from_fn(n - k, n, |i, j| inv.get(k + i, j).clone());
        let section = RatMatrix::from_fn(n, n - k, |i, j| {
            if i == free[j] {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        QuotientMap { proj, section }
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of Q^{}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(ambient: usize, rows: &[&[i64]]) -> Subspace {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&n| Rational::from_int(n)).collect())
            .collect();
        Subspace::from_rows(ambient, &rows).unwrap()
    }

    #[test]
    fn canonical_basis_is_order_independent() {
        let a = sp(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let b = sp(3, &[&[0, 0, 2], &[3, 3, 3]]);
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_of_plane_and_line() {
        let a = sp(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let b = sp(3, &[&[1, 1, 1]]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, b);
    }

    #[test]
    fn intersection_of_transverse_planes_in_q3() {
        let a = sp(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = sp(3, &[&[0, 1, 0], &[0, 0, 1]]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, sp(3, &[&[0, 1, 0]]));
    }

    #[test]
    fn sum_and_dimension_formula() {
        let a = sp(3, &[&[1, 0, 0]]);
        let b = sp(3, &[&[1, 1, 0]]);
        let s = a.sum(&b).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(a.intersect(&b).unwrap().dim() + s.dim(), a.dim() + b.dim());
    }

    #[test]
    fn quotient_map_of_vertical_line_in_q2() {
        let s = sp(2, &[&[0, 1]]);
        let q = s.quotient_map();
        assert_eq!(q.proj, RatMatrix::from_int_rows(&[&[1, 0]], 2));
        assert_eq!(
            q.proj.matmul(&q.section).unwrap(),
            RatMatrix::identity(1)
        );
    }

    #[test]
    fn quotient_map_kills_exactly_the_subspace() {
        let s = sp(4, &[&[1, 2, 0, 1], &[0, 0, 1, 3]]);
        let q = s.quotient_map();
        let killed = Subspace::from_rows(4, &q.proj.kernel_basis()).unwrap();
        assert_eq!(killed, s);
        assert_eq!(q.proj.matmul(&q.section).unwrap(), RatMatrix::identity(2));
    }

    #[test]
    fn coords_and_membership() {
        let s = sp(3, &[&[1, 0, 2], &[0, 1, 1]]);
        let v: Vec<Rational> = [3, -1, 5].iter().map(|&n| Rational::from_int(n)).collect();
        let c = s.coords_of(&v).unwrap();
        assert_eq!(c, vec![Rational::from_int(3), Rational::from_int(-1)]);
        let w: Vec<Rational> = [0, 0, 1].iter().map(|&n| Rational::from_int(n)).collect();
        assert!(!s.contains_vec(&w));
    }

    #[test]
    fn preimage_under_projection() {
        // m : Q^3 -> Q^2 dropping the last coordinate; preimage of the
        // x axis must be the xz plane.
        let m = RatMatrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0]], 3);
        let target = sp(2, &[&[1, 0]]);
        let pre = target.preimage_under(&m).unwrap();
        assert_eq!(pre, sp(3, &[&[1, 0, 0], &[0, 0, 1]]));
    }

    #[test]
    fn zero_and_full_edge_cases() {
        let z = Subspace::zero(3);
        let f = Subspace::full(3);
        assert!(f.contains(&z));
        assert_eq!(z.sum(&f).unwrap(), f);
        assert_eq!(z.intersect(&f).unwrap(), z);
        let qz = z.quotient_map();
        assert_eq!(qz.dim(), 3);
        let qf = f.quotient_map();
        assert_eq!(qf.dim(), 0);
    }
}
