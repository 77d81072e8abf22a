//! Dense exact linear algebra: row reduction, rank, nullspace, solving.
//!
//! Pivoting is deterministic: columns are scanned left to right and the
//! first row at or below the current one with a nonzero entry is chosen.
//! Subspaces are kept as reduced row echelon bases, so two subspaces are
//! equal exactly when their [`Subspace`] values compare equal.

use crate::error::{Error, Result};
use crate::scalars::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: &[Vec<Scalar>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Shape("ragged rows".into()));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field, s.field()));
                }
                entries.push(*s);
            }
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            field,
            entries,
        })
    }

    /// Integer entries, convenient for tests and builders.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, &rows)
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, s) in col.iter().enumerate() {
                m.set(i, j, *s)?;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) -> Result<()> {
        if v.field() != self.field {
            return Err(Error::FieldMismatch(self.field, v.field()));
        }
        self.entries[i * self.cols + j] = v;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| *self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Appends the rows of `other` below `self`.
    pub fn stack(&mut self, other: &Matrix) -> Result<()> {
        if other.cols != self.cols {
            return Err(Error::Shape("column count mismatch in stack".into()));
        }
        if other.field != self.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        self.entries.extend_from_slice(&other.entries);
        self.rows += other.rows;
        Ok(())
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector length {} vs {} columns",
                v.len(),
                self.cols
            )));
        }
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).try_fold(self.field.zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        Ok(acc)
                    } else {
                        acc.add(&a.mul(b)?)
                    }
                })
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape("inner dimensions differ".into()));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = out.entries[idx].add(&a.mul(b)?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape("matrix shapes differ".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(Matrix { entries, ..*self })
    }

    pub fn scale(&self, s: &Scalar) -> Result<Matrix> {
        let entries = self.entries.iter().map(|a| a.mul(s)).collect::<Result<_>>()?;
        Ok(Matrix { entries, ..*self })
    }

    /// Reduced row echelon form and the pivot columns, in order.
    pub fn rref(&self) -> Result<(Matrix, Vec<usize>)> {
        let mut m = self.clone();
        let pivots = m.reduce_in_place(self.cols)?;
        Ok((m, pivots))
    }

    /// Row-reduces in place using only the first `pivot_cols` columns as
    /// pivot candidates (an augmented column is never a pivot).
    fn reduce_in_place(&mut self, pivot_cols: usize) -> Result<Vec<usize>> {
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.entries.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.get(r, c).inv()?;
            for j in c..cols {
                let idx = r * cols + j;
                self.entries[idx] = self.entries[idx].mul(&inv)?;
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = *self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let pv = self.entries[r * cols + j];
                    if pv.is_zero() {
                        continue;
                    }
                    let idx = i * cols + j;
                    self.entries[idx] = self.entries[idx].sub(&factor.mul(&pv)?)?;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok(pivots)
    }

    pub fn rank(&self) -> Result<usize> {
        let mut m = self.clone();
        Ok(m.reduce_in_place(self.cols)?.len())
    }

    /// Canonical basis of `{v : self · v = 0}`.
    pub fn nullspace(&self) -> Result<Subspace> {
        let (r, pivots) = self.rref()?;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = r.get(row, free).neg();
            }
            vectors.push(v);
        }
        Subspace::from_spanning(self.field, self.cols, vectors)
    }

    /// One solution of `self · v = b` with free variables set to zero, or
    /// `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!(
                "right-hand side length {} vs {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.entries[i * (self.cols + 1) + j] = *self.get(i, j);
            }
            if bi.field() != self.field {
                return Err(Error::FieldMismatch(self.field, bi.field()));
            }
            aug.entries[i * (self.cols + 1) + self.cols] = *bi;
        }
        let pivots = aug.reduce_in_place(self.cols)?;
        if (pivots.len()..self.rows).any(|i| !aug.get(i, self.cols).is_zero()) {
            return Ok(None);
        }
        let mut v = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = *aug.get(row, self.cols);
        }
        Ok(Some(v))
    }
}

/// A subspace of `field^ambient` held as its reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let id = Matrix::identity(field, ambient);
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| id.row(i).to_vec()).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_spanning(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Subspace::zero(field, ambient));
        }
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::Shape("spanning vector of wrong length".into()));
        }
        let (r, pivots) = Matrix::from_rows(field, &vectors)?.rref()?;
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace {
            field,
            ambient,
            basis,
            pivots,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after clearing every pivot coordinate.
    fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.ambient {
            return Err(Error::Shape("vector of wrong length".into()));
        }
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let f = w[p];
            if f.is_zero() {
                continue;
            }
            for (wi, ri) in w.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *wi = wi.sub(&f.mul(ri)?)?;
                }
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p]).collect()))
    }

    /// `Σ c_i b_i` for echelon basis vectors `b_i`.
    pub fn combination(&self, coeffs: &[Scalar]) -> Result<Vec<Scalar>> {
        if coeffs.len() != self.basis.len() {
            return Err(Error::Shape("coefficient count differs from subspace dimension".into()));
        }
        let mut out = vec![self.field.zero(); self.ambient];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                *o = o.add(&c.mul(r)?)?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn rank_examples() {
        let gf3 = FieldSpec::gf(3).unwrap();
        assert_eq!(Matrix::identity(gf3, 2).rank().unwrap(), 2);
        assert_eq!(Matrix::zeros(q(), 3, 3).rank().unwrap(), 0);
        assert_eq!(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).unwrap().rank().unwrap(), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Matrix::identity(q(), 3).nullspace().unwrap().dim(), 0);
        let z = Matrix::zeros(q(), 2, 2).nullspace().unwrap();
        assert_eq!(z, Subspace::full(q(), 2));
        let gf2 = FieldSpec::gf(2).unwrap();
        let ns = Matrix::from_i64(gf2, &[&[1, 1]]).unwrap().nullspace().unwrap();
        assert_eq!(ns.basis(), &[vec![gf2.one(), gf2.one()]]);
    }

    #[test]
    fn nullspace_is_reduced_echelon() {
        // x + 2y - z = 0 has kernel spanned by (1,0,1), (0,1,2) in reduced form.
        let m = Matrix::from_i64(q(), &[&[1, 2, -1]]).unwrap();
        let ns = m.nullspace().unwrap();
        let expect = Matrix::from_i64(q(), &[&[1, 0, 1], &[0, 1, 2]]).unwrap();
        assert_eq!(ns.basis(), &[expect.row(0).to_vec(), expect.row(1).to_vec()]);
        assert_eq!(ns.pivots(), &[0, 1]);
    }

    #[test]
    fn solve_examples() {
        let b: Vec<Scalar> = [3, -1, 7].iter().map(|&v| q().from_i64(v)).collect();
        assert_eq!(Matrix::identity(q(), 3).solve(&b).unwrap(), Some(b.clone()));

        let m = Matrix::from_i64(q(), &[&[1, 1], &[0, 0]]).unwrap();
        assert_eq!(m.solve(&[q().one(), q().one()]).unwrap(), None);

        let m = Matrix::from_i64(q(), &[&[1, 2, 3], &[0, 1, 1]]).unwrap();
        let rhs = [q().from_i64(4), q().from_i64(5)];
        let v = m.solve(&rhs).unwrap().unwrap();
        assert!(v[2].is_zero());
        assert_eq!(m.mul_vec(&v).unwrap(), rhs.to_vec());
    }

    #[test]
    fn subspace_membership_and_order() {
        let s = Subspace::from_spanning(
            q(),
            3,
            vec![
                [2, 2, 0].iter().map(|&v| q().from_i64(v)).collect(),
                [0, 0, 3].iter().map(|&v| q().from_i64(v)).collect(),
            ],
        )
        .unwrap();
        assert!(s
            .contains(&[q().from_i64(5), q().from_i64(5), q().from_i64(-1)])
            .unwrap());
        assert!(!s.contains(&[q().one(), q().zero(), q().zero()]).unwrap());
        assert!(Subspace::zero(q(), 3).is_subspace_of(&s).unwrap());
        assert!(s.is_subspace_of(&Subspace::full(q(), 3)).unwrap());
        assert!(!Subspace::full(q(), 3).is_subspace_of(&s).unwrap());
    }

    fn arb_matrix(p: u64) -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..6).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..p, r * c).prop_map(move |vals| {
                let f = FieldSpec::gf(p).unwrap();
                let rows: Vec<Vec<Scalar>> = vals
                    .chunks(c)
                    .map(|ch| ch.iter().map(|&v| f.from_u64(v)).collect())
                    .collect();
                Matrix::from_rows(f, &rows).unwrap()
            })
        })
    }

    fn arb_rational_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |vals| {
                let rows: Vec<Vec<Scalar>> = vals
                    .chunks(c)
                    .map(|ch| ch.iter().map(|&v| FieldSpec::Rationals.from_i64(v)).collect())
                    .collect();
                Matrix::from_rows(FieldSpec::Rationals, &rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity_gf5(m in arb_matrix(5)) {
            let ns = m.nullspace().unwrap();
            prop_assert_eq!(m.rank().unwrap() + ns.dim(), m.cols());
            for v in ns.basis() {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn rank_nullity_rationals(m in arb_rational_matrix()) {
            let ns = m.nullspace().unwrap();
            prop_assert_eq!(m.rank().unwrap() + ns.dim(), m.cols());
            for v in ns.basis() {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn solve_satisfies_system(m in arb_rational_matrix(), seed in proptest::collection::vec(-3i64..4, 5)) {
            let x: Vec<Scalar> = (0..m.cols()).map(|i| FieldSpec::Rationals.from_i64(seed[i])).collect();
            let b = m.mul_vec(&x).unwrap();
            let v = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&v).unwrap(), b);
        }
    }
}
