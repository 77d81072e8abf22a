//! Certification of ring-theoretic properties: associativity,
//! alternativity, skew symmetry of the associator, the nucleus and center,
//! and the identities every alternative ring satisfies.
//!
//! A failing [`CheckReport`] always carries a witness that can be replayed
//! with [`CheckReport::reproduces`].

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::{AlgebraElement, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::sampling::{
    checked_pow, random_element, random_in_subspace, scan_all, subspace_element, PlanMode, SamplingPlan, ScanOutcome,
    Step, EXHAUSTIVE_LIMIT,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Associative,
    /// `(x,y,y) = 0 = (y,y,x)`.
    Alternative,
    /// `(x_σ1, x_σ2, x_σ3) = sign(σ)·(x1, x2, x3)`.
    AssociatorSkewSymmetry,
    /// `n·n'` stays in the nucleus.
    NucleusClosure,
    /// `(x,y,z)x = (x,xy,z) = (x,y,xz)`.
    LeftTransfer,
    /// `x(x,y,z) = (x,yx,z) = (x,y,zx)`.
    RightTransfer,
    /// `(xn,y,z) = (nx,y,z) = (x,y,z)n = n(x,y,z)` for nuclear `n`.
    NuclearTransfer,
    /// `(n, x)` is nuclear for nuclear `n`.
    NuclearCommutatorsNuclear,
    /// `n(x,y,z) = (x,y,z)n` for nuclear `n`.
    NucleusCommutesWithAssociators,
    /// `(w,n)((w,n)(x,y,z)) = 0` for nuclear `n`.
    CommutatorSquareKillsAssociators,
    /// Nucleus and center have the same canonical basis.
    NucleusEqualsCenter,
    /// Nonzero nuclear elements have trivial left and right kernels.
    NuclearNotZeroDivisors,
    /// Elements outside the nucleus have trivial left and right kernels.
    NonNuclearNotZeroDivisors,
}

impl Property {
    pub fn name(&self) -> &'static str {
        match self {
            Property::Associative => "associative",
            Property::Alternative => "alternative",
            Property::AssociatorSkewSymmetry => "associator_skew_symmetry",
            Property::NucleusClosure => "nucleus_closure",
            Property::LeftTransfer => "left_transfer",
            Property::RightTransfer => "right_transfer",
            Property::NuclearTransfer => "nuclear_transfer",
            Property::NuclearCommutatorsNuclear => "nuclear_commutators_nuclear",
            Property::NucleusCommutesWithAssociators => "nucleus_commutes_with_associators",
            Property::CommutatorSquareKillsAssociators => "commutator_square_kills_associators",
            Property::NucleusEqualsCenter => "nucleus_equals_center",
            Property::NuclearNotZeroDivisors => "nuclear_not_zero_divisors",
            Property::NonNuclearNotZeroDivisors => "non_nuclear_not_zero_divisors",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
}

/// Named elements exhibiting a failure, plus the nonzero defect they produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub elements: Vec<(&'static str, AlgebraElement)>,
    pub defect: Vec<AlgebraElement>,
}

impl Witness {
    fn new(elements: Vec<(&'static str, AlgebraElement)>, defect: Vec<AlgebraElement>) -> Self {
        Witness { elements, defect }
    }

    pub fn get(&self, name: &str) -> Option<&AlgebraElement> {
        self.elements.iter().find(|(n, _)| *n == name).map(|(_, e)| e)
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("elements", &NamedElements(&self.elements))?;
        map.serialize_entry("defect", &self.defect)?;
        map.end()
    }
}

struct NamedElements<'a>(&'a [(&'static str, AlgebraElement)]);

impl Serialize for NamedElements<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, e) in self.0 {
            map.serialize_entry(name, e)?;
        }
        map.end()
    }
}

/// Result of one property check.
///
/// `exhaustive` means the verdict covers every element of the algebra,
/// either by enumerating all values of the variables the identity is
/// nonlinear in, or by multilinearity (checking basis vectors suffices for
/// variables the expression is linear in).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub property: Property,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub samples_used: u64,
    pub exhaustive: bool,
    pub seed: Option<u64>,
    /// Evaluations where the quantity under test was nonzero (e.g. a
    /// nonzero associator or commutator), showing the check was not vacuous.
    pub nontrivial: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub(crate) fn from_scan(
        property: Property,
        out: ScanOutcome<Witness>,
        exhaustive: bool,
        seed: Option<u64>,
    ) -> Self {
        let (verdict, witness) = match out.first_failure {
            Some((_, w)) => (Verdict::Fail, Some(w)),
            None => (Verdict::Pass, None),
        };
        CheckReport {
            property,
            verdict,
            witness,
            samples_used: out.evaluated,
            exhaustive,
            seed,
            nontrivial: out.nontrivial,
        }
    }

    fn pass(property: Property, samples_used: u64, nontrivial: u64) -> Self {
        CheckReport {
            property,
            verdict: Verdict::Pass,
            witness: None,
            samples_used,
            exhaustive: true,
            seed: None,
            nontrivial,
        }
    }

    fn fail(property: Property, witness: Witness, samples_used: u64) -> Self {
        CheckReport {
            property,
            verdict: Verdict::Fail,
            witness: Some(witness),
            samples_used,
            exhaustive: true,
            seed: None,
            nontrivial: 0,
        }
    }

    /// Re-evaluates the defining expression on the witness and reports
    /// whether the failure is reproduced. Reports without a witness return `false`.
    pub fn reproduces(&self, a: &StructureConstants) -> Result<bool> {
        let Some(w) = &self.witness else { return Ok(false) };
        let get = |n: &str| w.get(n).ok_or_else(|| Error::Shape(format!("witness lacks {n}")));
        let nonzero = |v: Vec<AlgebraElement>| v.iter().any(|d| !d.is_zero());
        Ok(match self.property {
            Property::Associative => !a.associator(get("x")?, get("y")?, get("z")?)?.is_zero(),
            Property::Alternative => nonzero(alternative_defect(a, get("x")?, get("y")?)?),
            Property::AssociatorSkewSymmetry => nonzero(skew_defect(a, get("x")?, get("y")?, get("z")?)?),
            Property::NucleusClosure => {
                let prod = a.mul(get("n")?, get("m")?)?;
                !nucleus(a)?.subspace.contains(prod.coords())?
            }
            Property::LeftTransfer => nonzero(left_transfer_defect(a, get("x")?, get("y")?, get("z")?)?),
            Property::RightTransfer => nonzero(right_transfer_defect(a, get("x")?, get("y")?, get("z")?)?),
            Property::NuclearTransfer => {
                nonzero(nuclear_transfer_defect(a, get("n")?, get("x")?, get("y")?, get("z")?)?)
            }
            Property::NuclearCommutatorsNuclear => {
                let c = a.commutator(get("n")?, get("x")?)?;
                !nucleus(a)?.subspace.contains(c.coords())?
            }
            Property::NucleusCommutesWithAssociators => {
                let d = a.associator(get("x")?, get("y")?, get("z")?)?;
                !a.commutator(get("n")?, &d)?.is_zero()
            }
            Property::CommutatorSquareKillsAssociators => {
                !commutator_square_defect(a, get("w")?, get("n")?, get("x")?, get("y")?, get("z")?)?.is_zero()
            }
            Property::NucleusEqualsCenter => {
                let v = get("v")?;
                nucleus(a)?.subspace.contains(v.coords())? != center(a)?.subspace.contains(v.coords())?
            }
            Property::NuclearNotZeroDivisors | Property::NonNuclearNotZeroDivisors => {
                let (x, t) = (get("x")?, get("t")?);
                !x.is_zero() && !t.is_zero() && (a.mul(x, t)?.is_zero() || a.mul(t, x)?.is_zero())
            }
        })
    }
}

fn alternative_defect(a: &StructureConstants, x: &AlgebraElement, y: &AlgebraElement) -> Result<Vec<AlgebraElement>> {
    Ok(vec![a.associator(x, y, y)?, a.associator(y, y, x)?])
}

const PERMUTATIONS: [([usize; 3], bool); 6] = [
    ([0, 1, 2], true),
    ([1, 2, 0], true),
    ([2, 0, 1], true),
    ([1, 0, 2], false),
    ([0, 2, 1], false),
    ([2, 1, 0], false),
];

fn skew_defect(
    a: &StructureConstants,
    x: &AlgebraElement,
    y: &AlgebraElement,
    z: &AlgebraElement,
) -> Result<Vec<AlgebraElement>> {
    let args = [x, y, z];
    let base = a.associator(x, y, z)?;
    PERMUTATIONS[1..]
        .iter()
        .map(|(p, even)| {
            let d = a.associator(args[p[0]], args[p[1]], args[p[2]])?;
            if *even {
                d.sub(&base)
            } else {
                d.add(&base)
            }
        })
        .collect()
}

fn left_transfer_defect(
    a: &StructureConstants,
    x: &AlgebraElement,
    y: &AlgebraElement,
    z: &AlgebraElement,
) -> Result<Vec<AlgebraElement>> {
    let first = a.mul(&a.associator(x, y, z)?, x)?;
    let second = a.associator(x, &a.mul(x, y)?, z)?;
    let third = a.associator(x, y, &a.mul(x, z)?)?;
    Ok(vec![first.sub(&second)?, second.sub(&third)?])
}

fn right_transfer_defect(
    a: &StructureConstants,
    x: &AlgebraElement,
    y: &AlgebraElement,
    z: &AlgebraElement,
) -> Result<Vec<AlgebraElement>> {
    let first = a.mul(x, &a.associator(x, y, z)?)?;
    let second = a.associator(x, &a.mul(y, x)?, z)?;
    let third = a.associator(x, y, &a.mul(z, x)?)?;
    Ok(vec![first.sub(&second)?, second.sub(&third)?])
}

fn nuclear_transfer_defect(
    a: &StructureConstants,
    n: &AlgebraElement,
    x: &AlgebraElement,
    y: &AlgebraElement,
    z: &AlgebraElement,
) -> Result<Vec<AlgebraElement>> {
    let d = a.associator(x, y, z)?;
    let v = [
        a.associator(&a.mul(x, n)?, y, z)?,
        a.associator(&a.mul(n, x)?, y, z)?,
        a.mul(&d, n)?,
        a.mul(n, &d)?,
    ];
    Ok(vec![v[0].sub(&v[1])?, v[1].sub(&v[2])?, v[2].sub(&v[3])?])
}

fn commutator_square_defect(
    a: &StructureConstants,
    w: &AlgebraElement,
    n: &AlgebraElement,
    x: &AlgebraElement,
    y: &AlgebraElement,
    z: &AlgebraElement,
) -> Result<AlgebraElement> {
    let c = a.commutator(w, n)?;
    a.mul(&c, &a.mul(&c, &a.associator(x, y, z)?)?)
}

/// All basis associators `(e_i, e_j, e_k)`, indexed `(i * n + j) * n + k`.
pub struct BasisAssociators {
    dim: usize,
    values: Vec<AlgebraElement>,
}

impl BasisAssociators {
    pub fn compute(a: &StructureConstants) -> Result<Self> {
        let n = a.dim();
        let basis: Vec<_> = (0..n).map(|i| a.basis(i)).collect();
        let products: Vec<_> = (0..n * n)
            .map(|ij| a.mul(&basis[ij / n], &basis[ij % n]))
            .collect::<Result<_>>()?;
        let mut values = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = a.mul(&products[i * n + j], &basis[k])?;
                    let right = a.mul(&basis[i], &products[j * n + k])?;
                    values.push(left.sub(&right)?);
                }
            }
        }
        Ok(BasisAssociators { dim: n, values })
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &AlgebraElement {
        &self.values[(i * self.dim + j) * self.dim + k]
    }
}

/// Exact associativity test over basis triples (sufficient by trilinearity).
pub fn is_associative(a: &StructureConstants) -> Result<CheckReport> {
    let n = a.dim();
    let table = BasisAssociators::compute(a)?;
    let total = (n * n * n) as u64;
    for (idx, d) in table.values.iter().enumerate() {
        if !d.is_zero() {
            let (i, j, k) = (idx / (n * n), idx / n % n, idx % n);
            let w = Witness::new(
                vec![("x", a.basis(i)), ("y", a.basis(j)), ("z", a.basis(k))],
                vec![d.clone()],
            );
            return Ok(CheckReport::fail(Property::Associative, w, idx as u64 + 1));
        }
    }
    Ok(CheckReport::pass(Property::Associative, total, 0))
}

/// Exact alternativity test in every characteristic.
///
/// `(x,y,y)` is quadratic in `y`, so it vanishes identically iff it
/// vanishes on basis vectors and its polarization `(x,y,z) + (x,z,y)`
/// vanishes on basis triples; likewise on the other side. A failing
/// condition on `(e_i, e_j, e_k)` yields the witness pair `(e_i, e_j + e_k)`.
pub fn is_alternative(a: &StructureConstants) -> Result<CheckReport> {
    let n = a.dim();
    let t = BasisAssociators::compute(a)?;
    let mut checked = 0u64;
    let fail = |x: AlgebraElement, y: AlgebraElement, checked: u64| -> Result<CheckReport> {
        let defect = alternative_defect(a, &x, &y)?;
        Ok(CheckReport::fail(
            Property::Alternative,
            Witness::new(vec![("x", x), ("y", y)], defect),
            checked,
        ))
    };
    // left: (x,y,y)
    for i in 0..n {
        for j in 0..n {
            checked += 1;
            if !t.get(i, j, j).is_zero() {
                return fail(a.basis(i), a.basis(j), checked);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in j + 1..n {
                checked += 1;
                if !t.get(i, j, k).add(t.get(i, k, j))?.is_zero() {
                    return fail(a.basis(i), a.basis(j).add(&a.basis(k))?, checked);
                }
            }
        }
    }
    // right: (y,y,x)
    for i in 0..n {
        for j in 0..n {
            checked += 1;
            if !t.get(j, j, i).is_zero() {
                return fail(a.basis(i), a.basis(j), checked);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in j + 1..n {
                checked += 1;
                if !t.get(j, k, i).add(t.get(k, j, i))?.is_zero() {
                    return fail(a.basis(i), a.basis(j).add(&a.basis(k))?, checked);
                }
            }
        }
    }
    Ok(CheckReport::pass(Property::Alternative, checked, 0))
}

/// Skew symmetry of the associator: exhaustive over basis triples, then on
/// `plan.samples` random triples (none when the plan is exhaustive).
pub fn associator_skew_symmetry(a: &StructureConstants, plan: &SamplingPlan) -> Result<CheckReport> {
    let n = a.dim();
    let t = BasisAssociators::compute(a)?;
    let mut checked = 0u64;
    let mut nontrivial = 0u64;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                checked += 1;
                let base = t.get(i, j, k);
                nontrivial += !base.is_zero() as u64;
                let idx = [i, j, k];
                for (p, even) in &PERMUTATIONS[1..] {
                    let d = t.get(idx[p[0]], idx[p[1]], idx[p[2]]);
                    let defect = if *even { d.sub(base)? } else { d.add(base)? };
                    if !defect.is_zero() {
                        let (x, y, z) = (a.basis(i), a.basis(j), a.basis(k));
                        let w = Witness::new(
                            vec![("x", x.clone()), ("y", y.clone()), ("z", z.clone())],
                            skew_defect(a, &x, &y, &z)?,
                        );
                        return Ok(CheckReport::fail(Property::AssociatorSkewSymmetry, w, checked));
                    }
                }
            }
        }
    }
    if plan.mode == crate::sampling::PlanMode::Exhaustive || plan.samples == 0 {
        return Ok(CheckReport::pass(Property::AssociatorSkewSymmetry, checked, nontrivial));
    }
    let mut rng = plan.rng();
    let triples: Vec<[AlgebraElement; 3]> = (0..plan.samples)
        .map(|_| {
            [
                random_element(a, &mut rng),
                random_element(a, &mut rng),
                random_element(a, &mut rng),
            ]
        })
        .collect();
    let out = scan_all(triples.len(), |s| {
        let [x, y, z] = &triples[s];
        let defect = skew_defect(a, x, y, z)?;
        let failed = defect.iter().any(|d| !d.is_zero());
        Ok(Step {
            nontrivial: !a.associator(x, y, z)?.is_zero(),
            failure: failed.then(|| Witness::new(vec![("x", x.clone()), ("y", y.clone()), ("z", z.clone())], defect)),
        })
    })?;
    let mut report = CheckReport::from_scan(Property::AssociatorSkewSymmetry, out, true, Some(plan.seed));
    report.samples_used += checked;
    report.nontrivial += nontrivial;
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SubspaceLabel {
    Nucleus,
    Center,
    Other,
}

/// A labelled subspace of an algebra, held in canonical (reduced echelon) form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub label: SubspaceLabel,
    pub subspace: Subspace,
}

impl SubspaceBasis {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn vectors(&self, a: &StructureConstants) -> Result<Vec<AlgebraElement>> {
        self.subspace.basis().iter().map(|v| a.element(v.clone())).collect()
    }

    pub fn contains(&self, x: &AlgebraElement) -> Result<bool> {
        self.subspace.contains(x.coords())
    }
}

impl Serialize for SubspaceBasis {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("label", &self.label)?;
        map.serialize_entry("dim", &self.dim())?;
        let basis: Vec<Vec<String>> = self
            .subspace
            .basis()
            .iter()
            .map(|v| v.iter().map(ToString::to_string).collect())
            .collect();
        map.serialize_entry("basis", &basis)?;
        map.end()
    }
}

/// Rows expressing `m ↦ (m placed in `slot`, e_i, e_j)` for all `i, j`.
fn slot_system(a: &StructureConstants, t: &BasisAssociators, slot: usize) -> Result<Matrix> {
    let n = a.dim();
    let mut m = Matrix::zeros(a.field(), n * n * n, n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let d = match slot {
                    0 => t.get(l, i, j),
                    1 => t.get(i, l, j),
                    _ => t.get(i, j, l),
                };
                for (k, c) in d.coords().iter().enumerate() {
                    if !c.is_zero() {
                        m.set((i * n + j) * n + k, l, *c)?;
                    }
                }
            }
        }
    }
    Ok(m)
}

/// The three one-slot nuclei `{m : (m,R,R)=0}`, `{m : (R,m,R)=0}`, `{m : (R,R,m)=0}`.
pub fn one_slot_nuclei(a: &StructureConstants) -> Result<[Subspace; 3]> {
    let t = BasisAssociators::compute(a)?;
    Ok([
        slot_system(a, &t, 0)?.nullspace()?,
        slot_system(a, &t, 1)?.nullspace()?,
        slot_system(a, &t, 2)?.nullspace()?,
    ])
}

fn nucleus_system(a: &StructureConstants) -> Result<Matrix> {
    let t = BasisAssociators::compute(a)?;
    let mut m = slot_system(a, &t, 0)?;
    m.stack(&slot_system(a, &t, 1)?)?;
    m.stack(&slot_system(a, &t, 2)?)?;
    Ok(m)
}

/// Elements associating with everything in every slot.
pub fn nucleus(a: &StructureConstants) -> Result<SubspaceBasis> {
    Ok(SubspaceBasis {
        label: SubspaceLabel::Nucleus,
        subspace: nucleus_system(a)?.nullspace()?,
    })
}

/// Nuclear elements commuting with everything.
pub fn center(a: &StructureConstants) -> Result<SubspaceBasis> {
    let n = a.dim();
    let mut m = nucleus_system(a)?;
    let mut comm = Matrix::zeros(a.field(), n * n, n);
    for i in 0..n {
        for l in 0..n {
            let c = a.commutator(&a.basis(l), &a.basis(i))?;
            for (k, s) in c.coords().iter().enumerate() {
                comm.set(i * n + k, l, *s)?;
            }
        }
    }
    m.stack(&comm)?;
    Ok(SubspaceBasis {
        label: SubspaceLabel::Center,
        subspace: m.nullspace()?,
    })
}

/// Products of nucleus basis vectors stay in the nucleus (exact by bilinearity).
pub fn nucleus_closure(a: &StructureConstants) -> Result<CheckReport> {
    let nuc = nucleus(a)?;
    let vs = nuc.vectors(a)?;
    let mut checked = 0;
    for n1 in &vs {
        for n2 in &vs {
            checked += 1;
            let p = a.mul(n1, n2)?;
            if !nuc.contains(&p)? {
                let w = Witness::new(vec![("n", n1.clone()), ("m", n2.clone())], vec![p]);
                return Ok(CheckReport::fail(Property::NucleusClosure, w, checked));
            }
        }
    }
    Ok(CheckReport::pass(Property::NucleusClosure, checked, 0))
}

/// Evaluates the six identities valid in every alternative ring. Returns
/// [`Error::NotAlternative`] if `a` is not alternative.
///
/// Under an exhaustive decision, variables an identity is linear in range
/// over the basis and the others over every element (and, for nuclear
/// variables, over every element of the nucleus). Under sampling, every
/// variable is drawn at random from the seeded plan.
pub fn verify_alternative_identities(a: &StructureConstants, plan: &SamplingPlan) -> Result<Vec<CheckReport>> {
    if !is_alternative(a)?.passed() {
        return Err(Error::NotAlternative);
    }
    let nuc = nucleus(a)?;
    let n = a.dim();
    let q = a.field().order().map(u128::from);
    let elements = q.and_then(|q| checked_pow(q, n));
    let nuclear = q.and_then(|q| checked_pow(q, nuc.dim()));
    let basis: Vec<_> = (0..n).map(|i| a.basis(i)).collect();
    let nuc_basis = nuc.vectors(a)?;

    let mut rng = plan.rng();
    let samples: Vec<[AlgebraElement; 5]> = (0..plan.samples)
        .map(|_| {
            let x = random_element(a, &mut rng);
            let y = random_element(a, &mut rng);
            let z = random_element(a, &mut rng);
            let w = random_element(a, &mut rng);
            let m = random_in_subspace(a, &nuc.subspace, &mut rng)?;
            Ok([x, y, z, w, m])
        })
        .collect::<Result<_>>()?;
    let seed = Some(plan.seed);

    let triple = |x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement| {
        vec![("x", x.clone()), ("y", y.clone()), ("z", z.clone())]
    };
    let any_nonzero = |d: &[AlgebraElement]| d.iter().any(|e| !e.is_zero());

    let mut reports = Vec::with_capacity(6);

    // Left and right transfer: quadratic in x, linear in y and z.
    for (property, defect_fn) in [
        (
            Property::LeftTransfer,
            left_transfer_defect as fn(&_, &_, &_, &_) -> Result<Vec<AlgebraElement>>,
        ),
        (Property::RightTransfer, right_transfer_defect),
    ] {
        let tuples = elements.and_then(|e| e.checked_mul((n * n) as u128));
        let enumerate = plan.enumerate(tuples, EXHAUSTIVE_LIMIT)?;
        let eval = |x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement| -> Result<Step<Witness>> {
            let d = defect_fn(a, x, y, z)?;
            let failed = any_nonzero(&d);
            Ok(Step {
                nontrivial: !a.associator(x, y, z)?.is_zero(),
                failure: failed.then(|| Witness::new(triple(x, y, z), d)),
            })
        };
        let report = if enumerate {
            let out = scan_all(elements.unwrap() as usize * n * n, |i| {
                let x = a.element_from_index((i / (n * n)) as u128)?;
                eval(&x, &basis[i / n % n], &basis[i % n])
            })?;
            CheckReport::from_scan(property, out, true, None)
        } else {
            let out = scan_all(samples.len(), |s| eval(&samples[s][0], &samples[s][1], &samples[s][2]))?;
            CheckReport::from_scan(property, out, false, seed)
        };
        reports.push(report);
    }

    // Nuclear transfer and commuting with associators: multilinear.
    let nuclear_eval = |property: Property,
                        m: &AlgebraElement,
                        x: &AlgebraElement,
                        y: &AlgebraElement,
                        z: &AlgebraElement|
     -> Result<Step<Witness>> {
        let d = match property {
            Property::NuclearTransfer => nuclear_transfer_defect(a, m, x, y, z)?,
            _ => vec![a.commutator(m, &a.associator(x, y, z)?)?],
        };
        let failed = any_nonzero(&d);
        Ok(Step {
            nontrivial: !m.is_zero() && !a.associator(x, y, z)?.is_zero(),
            failure: failed.then(|| {
                let mut els = vec![("n", m.clone())];
                els.extend(triple(x, y, z));
                Witness::new(els, d)
            }),
        })
    };
    for property in [Property::NuclearTransfer, Property::NucleusCommutesWithAssociators] {
        // at most n^4 basis quadruples, so only an explicit sampling plan samples
        let report = if plan.mode != PlanMode::Sampled {
            let out = scan_all(nuc_basis.len() * n * n * n, |i| {
                let m = &nuc_basis[i / (n * n * n)];
                nuclear_eval(property, m, &basis[i / (n * n) % n], &basis[i / n % n], &basis[i % n])
            })?;
            CheckReport::from_scan(property, out, true, None)
        } else {
            let out = scan_all(samples.len(), |s| {
                let [x, y, z, _, m] = &samples[s];
                nuclear_eval(property, m, x, y, z)
            })?;
            CheckReport::from_scan(property, out, false, seed)
        };
        reports.push(report);
    }

    // Commutators with nuclear elements are nuclear: bilinear, basis check.
    let out = scan_all(nuc_basis.len() * n, |i| {
        let m = &nuc_basis[i / n];
        let c = a.commutator(m, &basis[i % n])?;
        let failed = !nuc.contains(&c)?;
        Ok(Step {
            nontrivial: !c.is_zero(),
            failure: failed.then(|| Witness::new(vec![("n", m.clone()), ("x", basis[i % n].clone())], vec![c])),
        })
    })?;
    reports.push(CheckReport::from_scan(
        Property::NuclearCommutatorsNuclear,
        out,
        true,
        None,
    ));

    // (w,n)((w,n)(x,y,z)) = 0: quadratic in w and n, linear in x, y, z.
    let size = elements.zip(nuclear).and_then(|(e, m)| e.checked_mul(m));
    let report = if plan.enumerate(size, EXHAUSTIVE_LIMIT)? {
        let t = BasisAssociators::compute(a)?;
        let mut targets: Vec<(usize, AlgebraElement)> = Vec::new();
        for (idx, d) in t.values.iter().enumerate() {
            if !d.is_zero() && !targets.iter().any(|(_, e)| e == d) {
                targets.push((idx, d.clone()));
            }
        }
        let per_w = nuclear.unwrap() as usize;
        let out = scan_all(elements.unwrap() as usize * per_w, |i| {
            let w = a.element_from_index((i / per_w) as u128)?;
            let m = subspace_element(a, &nuc.subspace, (i % per_w) as u128)?;
            let c = a.commutator(&w, &m)?;
            if c.is_zero() {
                return Ok(Step::pass(false));
            }
            for (idx, d) in &targets {
                let defect = a.mul(&c, &a.mul(&c, d)?)?;
                if !defect.is_zero() {
                    let (x, y, z) = (&basis[idx / (n * n)], &basis[idx / n % n], &basis[idx % n]);
                    let mut els = vec![("w", w.clone()), ("n", m.clone())];
                    els.extend(triple(x, y, z));
                    return Ok(Step {
                        nontrivial: true,
                        failure: Some(Witness::new(els, vec![defect])),
                    });
                }
            }
            Ok(Step::pass(true))
        })?;
        CheckReport::from_scan(Property::CommutatorSquareKillsAssociators, out, true, None)
    } else {
        let out = scan_all(samples.len(), |s| {
            let [x, y, z, w, m] = &samples[s];
            let defect = commutator_square_defect(a, w, m, x, y, z)?;
            let failed = !defect.is_zero();
            Ok(Step {
                nontrivial: !a.commutator(w, m)?.is_zero(),
                failure: failed.then(|| {
                    let mut els = vec![("w", w.clone()), ("n", m.clone())];
                    els.extend(triple(x, y, z));
                    Witness::new(els, vec![defect])
                }),
            })
        })?;
        CheckReport::from_scan(Property::CommutatorSquareKillsAssociators, out, false, seed)
    };
    reports.push(report);
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_algebra_2x2, octonions, quaternions, sedenions, zorn_split_octonions};
    use crate::scalars::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn associativity_examples() {
        assert!(is_associative(quaternions(q()).algebra()).unwrap().passed());
        let o = octonions(q());
        let a = o.algebra();
        let r = is_associative(a).unwrap();
        assert!(!r.passed());
        assert!(r.reproduces(a).unwrap());
        let z = zorn_split_octonions(q());
        let r = is_associative(&z).unwrap();
        assert!(!r.passed() && r.reproduces(&z).unwrap());
    }

    #[test]
    fn octonion_witness_is_first_basis_triple() {
        let a = octonions(q()).into_algebra();
        let d = a.associator(&a.basis(1), &a.basis(2), &a.basis(4)).unwrap();
        assert_eq!(d, a.basis(7).scale(&q().from_i64(2)).unwrap());
        let r = is_associative(&a).unwrap();
        let w = r.witness.unwrap();
        // (e1, e2, e4) is the first nonzero basis associator in scan order.
        assert_eq!(w.get("x"), Some(&a.basis(1)));
        assert_eq!(w.get("y"), Some(&a.basis(2)));
        assert_eq!(w.get("z"), Some(&a.basis(4)));
    }

    #[test]
    fn alternativity_examples() {
        assert!(is_alternative(octonions(q()).algebra()).unwrap().passed());
        assert!(is_alternative(&matrix_algebra_2x2(q())).unwrap().passed());
        assert!(is_alternative(&zorn_split_octonions(FieldSpec::gf(2).unwrap()))
            .unwrap()
            .passed());
        let s = sedenions(q());
        let r = is_alternative(s.algebra()).unwrap();
        assert!(!r.passed());
        assert!(r.reproduces(s.algebra()).unwrap());
        let w = r.witness.unwrap();
        assert!(!w.defect[0].is_zero(), "left alternativity fails first: (x,y,y) != 0");
    }

    #[test]
    fn nucleus_and_center_examples() {
        let m2 = matrix_algebra_2x2(q());
        assert_eq!(nucleus(&m2).unwrap().dim(), 4);
        assert_eq!(center(&m2).unwrap().dim(), 1);
        assert!(center(&m2).unwrap().contains(&m2.unit().unwrap()).unwrap());

        let o = octonions(q()).into_algebra();
        let n = nucleus(&o).unwrap();
        assert_eq!(n.dim(), 1);
        assert_eq!(n.vectors(&o).unwrap(), vec![o.basis(0)]);
        assert_eq!(center(&o).unwrap().subspace, n.subspace);

        let sum = crate::algebra::direct_sum(&o, &m2).unwrap();
        assert_eq!(nucleus(&sum).unwrap().dim(), 5);
        assert_eq!(center(&sum).unwrap().dim(), 2);
    }

    #[test]
    fn one_slot_nuclei_agree_for_alternative_algebras() {
        for a in [
            octonions(q()).into_algebra(),
            zorn_split_octonions(q()),
            matrix_algebra_2x2(q()),
        ] {
            let [l, m, r] = one_slot_nuclei(&a).unwrap();
            assert_eq!(l, m);
            assert_eq!(m, r);
            assert_eq!(l, nucleus(&a).unwrap().subspace);
        }
    }

    #[test]
    fn skew_symmetry_on_octonions() {
        let a = octonions(q()).into_algebra();
        let r = associator_skew_symmetry(&a, &SamplingPlan::sampled(200, 3)).unwrap();
        assert!(r.passed());
        assert!(r.nontrivial > 0);
        let s = sedenions(q()).into_algebra();
        let r = associator_skew_symmetry(&s, &SamplingPlan::sampled(0, 0)).unwrap();
        assert!(!r.passed());
        assert!(r.reproduces(&s).unwrap());
    }

    #[test]
    fn identities_require_alternativity() {
        let s = sedenions(q()).into_algebra();
        assert_eq!(
            verify_alternative_identities(&s, &SamplingPlan::sampled(10, 0)),
            Err(Error::NotAlternative)
        );
    }

    #[test]
    fn nuclear_transfer_with_unit_reduces_to_unit_axioms() {
        let a = octonions(q()).into_algebra();
        let one = a.unit().unwrap();
        let (x, y, z) = (a.basis(1), a.basis(2), a.basis(4));
        let d = nuclear_transfer_defect(&a, &one, &x, &y, &z).unwrap();
        assert!(d.iter().all(AlgebraElement::is_zero));
        let assoc = a.associator(&x, &y, &z).unwrap();
        assert_eq!(a.mul(&assoc, &one).unwrap(), a.mul(&one, &assoc).unwrap());
    }

    #[test]
    fn identities_on_rational_octonions_sampled() {
        let a = octonions(q()).into_algebra();
        let reports = verify_alternative_identities(&a, &SamplingPlan::sampled(300, 11)).unwrap();
        assert_eq!(reports.len(), 6);
        for r in &reports {
            assert!(r.passed(), "{:?}", r.property);
        }
        assert!(reports[0].nontrivial > 0);
    }

    #[test]
    fn identities_fail_is_detected_on_non_identity() {
        // A non-alternative algebra with alternativity check bypassed: the
        // left transfer defect on sedenions is nonzero for some basis triple.
        let s = sedenions(q()).into_algebra();
        let mut found = false;
        'outer: for i in 0..16 {
            for j in 0..16 {
                for k in 0..16 {
                    let d = left_transfer_defect(&s, &s.basis(i), &s.basis(j), &s.basis(k)).unwrap();
                    if d.iter().any(|e| !e.is_zero()) {
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(found);
    }
}
