//! Builders for the standard test algebras.
//!
//! Cayley–Dickson doubling uses the convention
//!
//! ```text
//! (a, b)(c, d) = (ac + γ·d̄b, da + bc̄),    (a, b)‾ = (ā, −b)
//! ```
//!
//! with the basis of the double ordered as `(e_i, 0)` followed by `(0, e_i)`.
//! Other conventions in circulation flip individual table signs; none of the
//! certified properties depend on the choice. With `γ = −1` at every step
//! the chain over ℚ runs through ℂ, the quaternions, the octonions and the
//! sedenions, and `associator(e1, e2, e4) = 2·e7` in the octonions.

use crate::algebra::{AlgebraElement, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{FieldSpec, Scalar};

/// An algebra with a linear involution `x ↦ x̄` such that `x + x̄` and
/// `x·x̄` are multiples of the unit.
#[derive(Debug, Clone)]
pub struct InvolutiveAlgebra {
    algebra: StructureConstants,
    conjugation: Matrix,
}

impl InvolutiveAlgebra {
    /// Checks the involution axioms on the basis: `conj² = id`,
    /// `conj(e_i e_j) = conj(e_j) conj(e_i)`, and `e_i + ē_i`, `e_i ē_i` in span{1}.
    pub fn new(algebra: StructureConstants, conjugation: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if algebra.unit().is_none() {
            return Err(Error::NoUnit);
        }
        if conjugation.rows() != n || conjugation.cols() != n {
            return Err(Error::Shape("conjugation matrix has the wrong size".into()));
        }
        if conjugation.field() != algebra.field() {
            return Err(Error::FieldMismatch(algebra.field(), conjugation.field()));
        }
        if conjugation.mul(&conjugation)? != Matrix::identity(algebra.field(), n) {
            return Err(Error::InvalidInvolution(
                "conjugation does not square to the identity".into(),
            ));
        }
        let inv = InvolutiveAlgebra { algebra, conjugation };
        let a = &inv.algebra;
        let conj_basis = (0..n).map(|i| inv.conjugate(&a.basis(i))).collect::<Result<Vec<_>>>()?;
        for i in 0..n {
            let e = a.basis(i);
            if scalar_part(a, &e.add(&conj_basis[i])?)?.is_none()
                || scalar_part(a, &a.mul(&e, &conj_basis[i])?)?.is_none()
            {
                return Err(Error::InvalidInvolution(format!(
                    "trace or norm of {} is not a multiple of the unit",
                    a.basis_names()[i]
                )));
            }
            for j in 0..n {
                let lhs = inv.conjugate(&a.mul(&e, &a.basis(j))?)?;
                let rhs = a.mul(&conj_basis[j], &conj_basis[i])?;
                if lhs != rhs {
                    return Err(Error::InvalidInvolution(format!(
                        "not an anti-automorphism on ({}, {})",
                        a.basis_names()[i],
                        a.basis_names()[j]
                    )));
                }
            }
        }
        Ok(inv)
    }

    pub fn algebra(&self) -> &StructureConstants {
        &self.algebra
    }

    pub fn into_algebra(self) -> StructureConstants {
        self.algebra
    }

    pub fn conjugation(&self) -> &Matrix {
        &self.conjugation
    }

    pub fn conjugate(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.algebra.element(self.conjugation.mul_vec(x.coords())?)
    }

    /// The scalar `N(x)` with `x·x̄ = N(x)·1`.
    pub fn norm_of(&self, x: &AlgebraElement) -> Result<Scalar> {
        let a = &self.algebra;
        scalar_part(a, &a.mul(x, &self.conjugate(x)?)?)?.ok_or(Error::NotScalar)
    }

    pub fn norm_form(&self) -> Result<NormForm> {
        let a = &self.algebra;
        let n = a.dim();
        let f = a.field();
        let diagonal = (0..n).map(|i| self.norm_of(&a.basis(i))).collect::<Result<Vec<_>>>()?;
        let mut polar = Matrix::zeros(f, n, n);
        for i in 0..n {
            polar.set(i, i, diagonal[i].add(&diagonal[i])?)?;
            for j in i + 1..n {
                let s = self.norm_of(&a.basis(i).add(&a.basis(j))?)?;
                let b = s.sub(&diagonal[i])?.sub(&diagonal[j])?;
                polar.set(i, j, b)?;
                polar.set(j, i, b)?;
            }
        }
        Ok(NormForm { diagonal, polar })
    }
}

/// The quadratic form `N(x) = Σ d_i x_i² + Σ_{i<j} B_ij x_i x_j`, where `B`
/// is the symmetric polar form `B(x, y) = N(x+y) − N(x) − N(y)`.
///
/// Storing the diagonal separately keeps the form exact in characteristic 2,
/// where `B` alone does not determine `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormForm {
    diagonal: Vec<Scalar>,
    polar: Matrix,
}

impl NormForm {
    pub fn diagonal(&self) -> &[Scalar] {
        &self.diagonal
    }

    pub fn polar(&self) -> &Matrix {
        &self.polar
    }

    pub fn evaluate(&self, coords: &[Scalar]) -> Result<Scalar> {
        let n = self.diagonal.len();
        if coords.len() != n {
            return Err(Error::Shape("coordinate vector has the wrong length".into()));
        }
        let mut acc = self.polar.field().zero();
        for i in 0..n {
            if coords[i].is_zero() {
                continue;
            }
            acc = acc.add(&self.diagonal[i].mul(&coords[i])?.mul(&coords[i])?)?;
            for j in i + 1..n {
                acc = acc.add(&self.polar.get(i, j).mul(&coords[i])?.mul(&coords[j])?)?;
            }
        }
        Ok(acc)
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.diagonal.len();
        (0..n).all(|i| (0..n).all(|j| i == j || self.polar.get(i, j).is_zero()))
    }

    /// Diagonal with all coefficients positive rationals; such a form vanishes only at 0.
    pub fn is_positive_definite_diagonal(&self) -> bool {
        self.polar.field() == FieldSpec::Rationals
            && self.is_diagonal()
            && self
                .diagonal
                .iter()
                .all(|d| d.signum() == Some(std::cmp::Ordering::Greater))
    }
}

/// `Some(s)` when `x = s·1`.
pub fn scalar_part(a: &StructureConstants, x: &AlgebraElement) -> Result<Option<Scalar>> {
    let unit = a.unit().ok_or(Error::NoUnit)?;
    let (p, up) = unit
        .coords()
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_zero())
        .ok_or(Error::NoUnit)?;
    let s = x.coords()[p].div(up)?;
    Ok((unit.scale(&s)? == *x).then_some(s))
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// The field itself as a 1-dimensional algebra with trivial conjugation.
pub fn base_field_algebra(f: FieldSpec) -> InvolutiveAlgebra {
    let a = StructureConstants::from_entries("F", f, numbered("e", 1), [(0, 0, 0, f.one())], Some(vec![f.one()]))
        .expect("1-dimensional field algebra is well formed");
    InvolutiveAlgebra::new(a, Matrix::identity(f, 1)).expect("identity is an involution of the base field")
}

/// One Cayley–Dickson doubling step with parameter `gamma`.
pub fn cayley_dickson(base: &InvolutiveAlgebra, gamma: &Scalar) -> Result<InvolutiveAlgebra> {
    let a = base.algebra();
    let f = a.field();
    if gamma.field() != f {
        return Err(Error::FieldMismatch(f, gamma.field()));
    }
    if gamma.is_zero() {
        return Err(Error::ZeroGamma);
    }
    let unit = a.unit().ok_or(Error::NoUnit)?;
    let n = a.dim();
    // (a, b)(c, d) on basis vectors: exactly one half of each factor is a basis vector.
    let halves = |p: usize| {
        if p < n {
            (Some(a.basis(p)), None)
        } else {
            (None, Some(a.basis(p - n)))
        }
    };
    let mut entries = Vec::new();
    for p in 0..2 * n {
        let (xa, xb) = halves(p);
        for q in 0..2 * n {
            let (yc, yd) = halves(q);
            let mut first = a.zero();
            let mut second = a.zero();
            if let (Some(x), Some(y)) = (&xa, &yc) {
                first = a.mul(x, y)?;
            }
            if let (Some(b), Some(d)) = (&xb, &yd) {
                first = a.mul(&base.conjugate(d)?, b)?.scale(gamma)?;
            }
            if let (Some(x), Some(d)) = (&xa, &yd) {
                second = a.mul(d, x)?;
            }
            if let (Some(b), Some(c)) = (&xb, &yc) {
                second = a.mul(b, &base.conjugate(c)?)?;
            }
            for (k, c) in first.coords().iter().chain(second.coords()).enumerate() {
                if !c.is_zero() {
                    entries.push((p, q, k, *c));
                }
            }
        }
    }
    let unit_coords = unit
        .coords()
        .iter()
        .copied()
        .chain(std::iter::repeat_n(f.zero(), n))
        .collect();
    let doubled = StructureConstants::from_entries(
        format!("CD({})", a.name()),
        f,
        numbered("e", 2 * n),
        entries,
        Some(unit_coords),
    )?;
    let mut conj = Matrix::zeros(f, 2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            conj.set(i, j, *base.conjugation().get(i, j))?;
        }
        conj.set(n + i, n + i, f.one().neg())?;
    }
    InvolutiveAlgebra::new(doubled, conj)
}

/// Repeated doubling of the base field, one step per entry of `gammas`.
pub fn cayley_dickson_chain(f: FieldSpec, gammas: &[Scalar]) -> Result<InvolutiveAlgebra> {
    let mut acc = base_field_algebra(f);
    for g in gammas {
        acc = cayley_dickson(&acc, g)?;
    }
    Ok(acc)
}

fn classical(f: FieldSpec, steps: usize, name: &str) -> InvolutiveAlgebra {
    let gammas = vec![f.one().neg(); steps];
    let inv = cayley_dickson_chain(f, &gammas).expect("γ = −1 is a valid doubling parameter");
    let conj = inv.conjugation().clone();
    InvolutiveAlgebra {
        algebra: inv.into_algebra().with_name(name),
        conjugation: conj,
    }
}

pub fn quaternions(f: FieldSpec) -> InvolutiveAlgebra {
    classical(f, 2, "quaternion")
}

pub fn octonions(f: FieldSpec) -> InvolutiveAlgebra {
    classical(f, 3, "octonion")
}

pub fn sedenions(f: FieldSpec) -> InvolutiveAlgebra {
    classical(f, 4, "sedenion")
}

/// The involution fixing the unit basis vector and negating every other
/// basis vector, when that satisfies the involution axioms. This recovers
/// the Cayley–Dickson conjugation from a bare multiplication table.
pub fn standard_involution(a: &StructureConstants) -> Option<InvolutiveAlgebra> {
    let u = a.unit_index()?;
    let f = a.field();
    let mut conj = Matrix::identity(f, a.dim());
    for i in (0..a.dim()).filter(|&i| i != u) {
        conj.set(i, i, f.one().neg()).ok()?;
    }
    InvolutiveAlgebra::new(a.clone(), conj).ok()
}

const ZORN_NAMES: [&str; 8] = ["E11", "E22", "v1", "v2", "v3", "w1", "w2", "w3"];

/// Zorn vector matrices `[[α, v], [w, β]]` with product
///
/// ```text
/// [[α, v], [w, β]]·[[α', v'], [w', β']] =
///     [[αα' + v·w', αv' + β'v − w×w'], [α'w + βw' + v×v', ββ' + w·v']]
/// ```
///
/// Basis order: `E11, E22, v1, v2, v3, w1, w2, w3`. The unit is `E11 + E22`.
pub fn zorn_split_octonions(f: FieldSpec) -> StructureConstants {
    let product = |x: &[i64; 8], y: &[i64; 8]| -> [i64; 8] {
        let (a, b, v, w) = (x[0], x[1], [x[2], x[3], x[4]], [x[5], x[6], x[7]]);
        let (a2, b2, v2, w2) = (y[0], y[1], [y[2], y[3], y[4]], [y[5], y[6], y[7]]);
        let dot = |p: [i64; 3], q: [i64; 3]| p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
        let cross = |p: [i64; 3], q: [i64; 3]| {
            [
                p[1] * q[2] - p[2] * q[1],
                p[2] * q[0] - p[0] * q[2],
                p[0] * q[1] - p[1] * q[0],
            ]
        };
        let ww = cross(w, w2);
        let vv = cross(v, v2);
        let mut out = [0i64; 8];
        out[0] = a * a2 + dot(v, w2);
        out[1] = b * b2 + dot(w, v2);
        for i in 0..3 {
            out[2 + i] = a * v2[i] + b2 * v[i] - ww[i];
            out[5 + i] = a2 * w[i] + b * w2[i] + vv[i];
        }
        out
    };
    let unit_vec = |i: usize| {
        let mut e = [0i64; 8];
        e[i] = 1;
        e
    };
    let mut entries = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            for (k, &c) in product(&unit_vec(i), &unit_vec(j)).iter().enumerate() {
                if c != 0 {
                    entries.push((i, j, k, f.from_i64(c)));
                }
            }
        }
    }
    let mut unit = vec![f.zero(); 8];
    unit[0] = f.one();
    unit[1] = f.one();
    StructureConstants::from_entries("zorn", f, ZORN_NAMES.map(String::from).to_vec(), entries, Some(unit))
        .expect("Zorn vector-matrix table is well formed")
}

/// 2×2 matrices with basis `E11, E12, E21, E22`.
pub fn matrix_algebra_2x2(f: FieldSpec) -> StructureConstants {
    let idx = |r: usize, c: usize| 2 * r + c;
    let mut entries = Vec::new();
    for (a, b, c, d) in (0..16).map(|m| (m >> 3 & 1, m >> 2 & 1, m >> 1 & 1, m & 1)) {
        if b == c {
            entries.push((idx(a, b), idx(c, d), idx(a, d), f.one()));
        }
    }
    let names = ["E11", "E12", "E21", "E22"].map(String::from).to_vec();
    let unit = vec![f.one(), f.zero(), f.zero(), f.one()];
    StructureConstants::from_entries("m2", f, names, entries, Some(unit)).expect("matrix units table is well formed")
}
