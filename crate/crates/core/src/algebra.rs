//! Finite-dimensional algebras given by structure constants, and the
//! associator and commutator.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{FieldSpec, Scalar};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Identity tag tying elements to the algebra that produced them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraId(u64);

impl AlgebraId {
    fn fresh() -> Self {
        AlgebraId(NEXT_ID.fetch_add(1, Ordering::Relaxed))
    }
}

/// An algebra with basis `e_0..e_{n-1}` and product
/// `e_i · e_j = Σ_k c[i][j][k] e_k`.
///
/// The table is dense; the nonzero entries are also kept grouped by `(i, j)`
/// so products only touch the terms that contribute. A unit is optional and,
/// when present, is verified to be a two-sided identity at construction.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    id: AlgebraId,
    name: String,
    field: FieldSpec,
    dim: usize,
    table: Vec<Scalar>,
    terms: Vec<Vec<(usize, Scalar)>>,
    basis_names: Vec<String>,
    unit: Option<Vec<Scalar>>,
}

impl PartialEq for StructureConstants {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.field == other.field
            && self.dim == other.dim
            && self.table == other.table
            && self.basis_names == other.basis_names
            && self.unit == other.unit
    }
}

impl StructureConstants {
    /// Builds an algebra from a dense table indexed `(i * n + j) * n + k`.
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        table: Vec<Scalar>,
        basis_names: Vec<String>,
        unit: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(Error::Shape("algebra dimension must be at least 1".into()));
        }
        if table.len() != dim * dim * dim {
            return Err(Error::Shape(format!(
                "table has {} entries, expected {}",
                table.len(),
                dim * dim * dim
            )));
        }
        if let Some(s) = table.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field, s.field()));
        }
        let terms = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = table[ij * dim + k];
                        (!c.is_zero()).then_some((k, c))
                    })
                    .collect()
            })
            .collect();
        let mut alg = StructureConstants {
            id: AlgebraId::fresh(),
            name: name.into(),
            field,
            dim,
            table,
            terms,
            basis_names,
            unit: None,
        };
        if let Some(u) = unit {
            alg.set_unit(u)?;
        }
        Ok(alg)
    }

    /// Builds an algebra from sparse `(i, j, k, c)` entries; omitted entries are zero.
    pub fn from_entries(
        name: impl Into<String>,
        field: FieldSpec,
        basis_names: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        let n = basis_names.len();
        let mut table = vec![field.zero(); n * n * n];
        for (i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::Shape(format!(
                    "table index ({i},{j},{k}) out of range for dim {n}"
                )));
            }
            table[(i * n + j) * n + k] = c;
        }
        StructureConstants::new(name, field, table, basis_names, unit)
    }

    fn set_unit(&mut self, coords: Vec<Scalar>) -> Result<()> {
        let u = self.element(coords)?;
        for i in 0..self.dim {
            let e = self.basis(i);
            if self.mul(&u, &e)? != e || self.mul(&e, &u)? != e {
                return Err(Error::InvalidUnit(format!(
                    "not a two-sided identity on basis element {}",
                    self.basis_names[i]
                )));
            }
        }
        self.unit = Some(u.coords);
        Ok(())
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero table entries in `(i, j, k)` order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, Scalar)> + '_ {
        self.terms
            .iter()
            .enumerate()
            .flat_map(move |(ij, ks)| ks.iter().map(move |&(k, c)| (ij / self.dim, ij % self.dim, k, c)))
    }

    pub fn unit(&self) -> Option<AlgebraElement> {
        self.unit.as_ref().map(|c| AlgebraElement {
            algebra: self.id,
            coords: c.clone(),
        })
    }

    /// Index of the unit when it is a single basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let u = self.unit.as_ref()?;
        let mut nonzero = u.iter().enumerate().filter(|(_, s)| !s.is_zero());
        match (nonzero.next(), nonzero.next()) {
            (Some((i, s)), None) if s.is_one() => Some(i),
            _ => None,
        }
    }

    /// `|F|^dim` for finite fields, if it fits.
    pub fn cardinality(&self) -> Option<u128> {
        let q = self.field.order()? as u128;
        let mut acc: u128 = 1;
        for _ in 0..self.dim {
            acc = acc.checked_mul(q)?;
        }
        Some(acc)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.id,
            coords: vec![self.field.zero(); self.dim],
        }
    }

    pub fn basis(&self, i: usize) -> AlgebraElement {
        let mut x = self.zero();
        x.coords[i] = self.field.one();
        x
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<AlgebraElement> {
        if coords.len() != self.dim {
            return Err(Error::Shape(format!(
                "{} coordinates for a {}-dimensional algebra",
                coords.len(),
                self.dim
            )));
        }
        if let Some(s) = coords.iter().find(|s| s.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, s.field()));
        }
        Ok(AlgebraElement {
            algebra: self.id,
            coords,
        })
    }

    pub fn element_from_i64(&self, coords: &[i64]) -> Result<AlgebraElement> {
        self.element(coords.iter().map(|&v| self.field.from_i64(v)).collect())
    }

    /// The element whose coordinates are the base-`p` digits of `index`,
    /// coordinate 0 least significant. Finite fields only.
    pub fn element_from_index(&self, mut index: u128) -> Result<AlgebraElement> {
        let q = self.field.order().ok_or(Error::NotEnumerable)? as u128;
        let mut x = self.zero();
        for c in x.coords.iter_mut() {
            *c = self.field.from_u64((index % q) as u64);
            index /= q;
        }
        Ok(x)
    }

    /// Inverse of [`element_from_index`](Self::element_from_index).
    pub fn element_index(&self, x: &AlgebraElement) -> Result<u128> {
        let q = self.field.order().ok_or(Error::NotEnumerable)? as u128;
        self.check(x)?;
        Ok(x.coords
            .iter()
            .rev()
            .fold(0u128, |acc, c| acc * q + c.residue().unwrap_or(0) as u128))
    }

    fn check(&self, x: &AlgebraElement) -> Result<()> {
        if x.algebra == self.id {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Moves an element of a value-equal algebra (e.g. one reloaded from disk) into this one.
    pub fn adopt(&self, other: &StructureConstants, x: &AlgebraElement) -> Result<AlgebraElement> {
        other.check(x)?;
        if other != self {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgebraElement {
            algebra: self.id,
            coords: x.coords.clone(),
        })
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        let n = self.dim;
        let mut out = vec![self.field.zero(); n];
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b)?;
                for &(k, c) in &self.terms[i * n + j] {
                    out[k] = out[k].add(&ab.mul(&c)?)?;
                }
            }
        }
        Ok(AlgebraElement {
            algebra: self.id,
            coords: out,
        })
    }

    /// `(x, y, z) = (xy)z − x(yz)`.
    pub fn associator(&self, x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement) -> Result<AlgebraElement> {
        let left = self.mul(&self.mul(x, y)?, z)?;
        let right = self.mul(x, &self.mul(y, z)?)?;
        left.sub(&right)
    }

    /// `(x, y) = xy − yx`.
    pub fn commutator(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.mul(x, y)?.sub(&self.mul(y, x)?)
    }

    /// Matrix of `y ↦ x·y`; column `j` holds the coordinates of `x·e_j`.
    pub fn left_mult_matrix(&self, x: &AlgebraElement) -> Result<Matrix> {
        self.check(x)?;
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for &(k, c) in &self.terms[i * n + j] {
                    let v = m.get(k, j).add(&a.mul(&c)?)?;
                    m.set(k, j, v)?;
                }
            }
        }
        Ok(m)
    }

    /// Matrix of `y ↦ y·x`; column `j` holds the coordinates of `e_j·x`.
    pub fn right_mult_matrix(&self, x: &AlgebraElement) -> Result<Matrix> {
        self.check(x)?;
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for &(k, c) in &self.terms[j * n + i] {
                    let v = m.get(k, j).add(&a.mul(&c)?)?;
                    m.set(k, j, v)?;
                }
            }
        }
        Ok(m)
    }

    /// Matrix of the linear map `z ↦ (x, y, z)`, which is `L_{xy} − L_x L_y`.
    pub fn associator_map(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<Matrix> {
        let xy = self.mul(x, y)?;
        self.left_mult_matrix(&xy)?
            .sub(&self.left_mult_matrix(x)?.mul(&self.left_mult_matrix(y)?)?)
    }

    pub fn format_element(&self, x: &AlgebraElement) -> String {
        let mut parts = Vec::new();
        for (c, name) in x.coords.iter().zip(&self.basis_names) {
            if c.is_zero() {
                continue;
            }
            parts.push(if c.is_one() {
                name.clone()
            } else {
                format!("({c})·{name}")
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Block-diagonal direct sum `a ⊕ b`; the basis of `a` comes first.
pub fn direct_sum(a: &StructureConstants, b: &StructureConstants) -> Result<StructureConstants> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field, b.field));
    }
    let (n, m) = (a.dim, b.dim);
    let entries = a
        .nonzero_entries()
        .chain(b.nonzero_entries().map(|(i, j, k, c)| (i + n, j + n, k + n, c)))
        .collect::<Vec<_>>();
    let names = a
        .basis_names
        .iter()
        .map(|s| format!("{s}_1"))
        .chain(b.basis_names.iter().map(|s| format!("{s}_2")))
        .collect();
    let unit = match (&a.unit, &b.unit) {
        (Some(u), Some(v)) => Some(u.iter().chain(v).copied().collect()),
        _ => None,
    };
    let sum = StructureConstants::from_entries(format!("{}+{}", a.name, b.name), a.field, names, entries, unit)?;
    debug_assert_eq!(sum.dim, n + m);
    Ok(sum)
}

/// An element of a [`StructureConstants`] algebra: its coordinate vector
/// plus the identity of the algebra it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    algebra: AlgebraId,
    coords: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    fn zip_with(&self, other: &AlgebraElement, f: impl Fn(&Scalar, &Scalar) -> Result<Scalar>) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(AlgebraElement {
            algebra: self.algebra,
            coords,
        })
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<Self> {
        self.zip_with(other, Scalar::add)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<Self> {
        self.zip_with(other, Scalar::sub)
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            algebra: self.algebra,
            coords: self.coords.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Result<Self> {
        let coords = self.coords.iter().map(|c| c.mul(s)).collect::<Result<_>>()?;
        Ok(AlgebraElement {
            algebra: self.algebra,
            coords,
        })
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Serialized as its list of coordinate strings.
impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Quaternions over ℚ written out by hand: 1, i, j, k.
    fn quaternions() -> StructureConstants {
        let f = FieldSpec::Rationals;
        let s = |v: i64| f.from_i64(v);
        let mut e = Vec::new();
        for i in 0..4 {
            e.push((0, i, i, s(1)));
            if i > 0 {
                e.push((i, 0, i, s(1)));
                e.push((i, i, 0, s(-1)));
            }
        }
        e.extend([
            (1, 2, 3, s(1)),
            (2, 1, 3, s(-1)),
            (2, 3, 1, s(1)),
            (3, 2, 1, s(-1)),
            (3, 1, 2, s(1)),
            (1, 3, 2, s(-1)),
        ]);
        let names = ["1", "i", "j", "k"].map(String::from).to_vec();
        StructureConstants::from_entries("H", f, names, e, Some(vec![s(1), s(0), s(0), s(0)])).unwrap()
    }

    #[test]
    fn quaternion_products() {
        let h = quaternions();
        let (i, j, k) = (h.basis(1), h.basis(2), h.basis(3));
        assert_eq!(h.mul(&i, &j).unwrap(), k);
        let lhs = h.mul(&i.add(&j).unwrap(), &i).unwrap();
        assert_eq!(lhs, h.element_from_i64(&[-1, 0, 0, -1]).unwrap());
        assert_eq!(h.mul(&i, &h.zero()).unwrap(), h.zero());
        assert!(h.associator(&i, &j, &k).unwrap().is_zero());
        assert_eq!(
            h.commutator(&i, &j).unwrap(),
            k.scale(&FieldSpec::Rationals.from_i64(2)).unwrap()
        );
        assert_eq!(h.unit_index(), Some(0));
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let h = quaternions();
        let h2 = quaternions();
        assert_eq!(h.mul(&h.basis(1), &h2.basis(1)), Err(Error::AlgebraMismatch));
        assert_eq!(h.basis(1).add(&h2.basis(1)), Err(Error::AlgebraMismatch));
        assert_eq!(h2.mul(&h.basis(1), &h.basis(1)), Err(Error::AlgebraMismatch));
        let adopted = h2.adopt(&h, &h.basis(2)).unwrap();
        assert_eq!(
            h2.mul(&adopted, &adopted).unwrap(),
            h2.element_from_i64(&[-1, 0, 0, 0]).unwrap()
        );
    }

    #[test]
    fn bad_unit_is_rejected() {
        let f = FieldSpec::Rationals;
        let names = vec!["a".to_string(), "b".to_string()];
        let r = StructureConstants::from_entries("x", f, names, [(0, 0, 0, f.one())], Some(vec![f.one(), f.zero()]));
        assert!(matches!(r, Err(Error::InvalidUnit(_))));
    }

    #[test]
    fn index_roundtrip() {
        let f = FieldSpec::gf(3).unwrap();
        let names = (0..3).map(|i| format!("e{i}")).collect();
        let a = StructureConstants::from_entries("z", f, names, [], None).unwrap();
        for idx in 0..27u128 {
            assert_eq!(a.element_index(&a.element_from_index(idx).unwrap()).unwrap(), idx);
        }
        assert_eq!(
            a.element_from_index(5).unwrap(),
            a.element_from_i64(&[2, 1, 0]).unwrap()
        );
        assert_eq!(a.cardinality(), Some(27));
    }

    #[test]
    fn multiplication_matrices_match_products() {
        let h = quaternions();
        let x = h.element_from_i64(&[1, -2, 3, 5]).unwrap();
        let l = h.left_mult_matrix(&x).unwrap();
        let r = h.right_mult_matrix(&x).unwrap();
        let am = h.associator_map(&h.basis(1), &x).unwrap();
        assert!(am.is_zero());
        for j in 0..4 {
            let e = h.basis(j);
            assert_eq!(l.column(j), h.mul(&x, &e).unwrap().coords);
            assert_eq!(r.column(j), h.mul(&e, &x).unwrap().coords);
        }
    }
}
