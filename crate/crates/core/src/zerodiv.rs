//! Zero divisors, the associator zero-divisor hypothesis, and the
//! consistency check of "no zero divisors" against it.
//!
//! A nonzero `x` is a left zero divisor if `xy = 0` for some nonzero `y`,
//! a right zero divisor if `tx = 0` for some nonzero `t`. Both sides are
//! always computed and reported separately; zero itself is rejected rather
//! than classified.

use serde::Serialize;

use crate::algebra::{AlgebraElement, StructureConstants};
use crate::analysis::{self, CheckReport, Property, Verdict, Witness};
use crate::constructions::standard_involution;
use crate::error::{Error, Precondition, Result};
use crate::linalg::{Matrix, Subspace};
use crate::sampling::{
    checked_pow, find_first, random_element, random_in_subspace, random_nonzero_element, scan_all, subspace_element,
    SamplingPlan, Step, EXHAUSTIVE_LIMIT,
};
use crate::scalars::Scalar;

/// Budget for exhaustive `(x, y)` pair enumeration in the hypothesis search.
pub const PAIR_LIMIT: u128 = 1 << 24;

/// Zero divisors kept for the associator-image search when sampling.
const SAMPLED_ZERO_DIVISOR_CAP: usize = 4096;

/// Pairs of random elements examined in the norm composition corroboration.
const COMPOSITION_SAMPLES: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// `L_x : y ↦ x·y` or `R_x : y ↦ y·x` as a matrix in basis coordinates.
#[derive(Debug, Clone)]
pub struct MultOperator {
    pub side: Side,
    pub element: AlgebraElement,
    pub matrix: Matrix,
}

pub fn mult_operator(a: &StructureConstants, x: &AlgebraElement, side: Side) -> Result<MultOperator> {
    let matrix = match side {
        Side::Left => a.left_mult_matrix(x)?,
        Side::Right => a.right_mult_matrix(x)?,
    };
    Ok(MultOperator {
        side,
        element: x.clone(),
        matrix,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroDivisorVerdict {
    pub element: AlgebraElement,
    pub is_left: bool,
    /// Nonzero `y` with `x·y = 0`.
    pub left_witness: Option<AlgebraElement>,
    pub is_right: bool,
    /// Nonzero `t` with `t·x = 0`.
    pub right_witness: Option<AlgebraElement>,
}

impl ZeroDivisorVerdict {
    pub fn is_zero_divisor(&self) -> bool {
        self.is_left || self.is_right
    }
}

fn first_kernel_vector(a: &StructureConstants, m: &Matrix) -> Result<Option<AlgebraElement>> {
    let ns = m.nullspace()?;
    ns.basis().first().map(|v| a.element(v.clone())).transpose()
}

/// Decides both sides exactly via the kernels of `L_x` and `R_x`; witnesses
/// are the first vectors of the canonical kernel bases.
pub fn zero_divisor_check(a: &StructureConstants, x: &AlgebraElement) -> Result<ZeroDivisorVerdict> {
    if x.is_zero() {
        a.mul(x, x)?; // algebra membership is still checked
        return Err(Error::ZeroElement);
    }
    let left = first_kernel_vector(a, &a.left_mult_matrix(x)?)?;
    let right = first_kernel_vector(a, &a.right_mult_matrix(x)?)?;
    Ok(ZeroDivisorVerdict {
        element: x.clone(),
        is_left: left.is_some(),
        left_witness: left,
        is_right: right.is_some(),
        right_witness: right,
    })
}

/// Cheaper test used in scans: either multiplication operator is singular.
fn is_zero_divisor(a: &StructureConstants, x: &AlgebraElement) -> Result<bool> {
    let n = a.dim();
    Ok(a.left_mult_matrix(x)?.rank()? < n || a.right_mult_matrix(x)?.rank()? < n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CensusStatus {
    NoneExist,
    Exist,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    ExhaustiveSearch,
    DivisionCertificate,
    SampledOnly,
}

/// Evidence that an algebra over ℚ has no zero divisors: it is
/// alternative, `x̄ = t(x)·1 − x` with `x·x̄ = x̄·x = N(x)·1`, and `N` is a
/// diagonal form with positive coefficients.
///
/// Then `x̄(xy) = N(x)y` and `(yx)x̄ = N(x)y`, because `(x̄, x, y)` and
/// `(y, x, x̄)` vanish in an alternative algebra, so `xy = 0` or `yx = 0`
/// with `x ≠ 0` forces `y = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisionCertificate {
    pub norm_diagonal: Vec<Scalar>,
    /// Random pairs on which `N(xy) = N(x)N(y)` was confirmed.
    pub composition_samples: u64,
}

pub fn division_certificate(a: &StructureConstants, seed: u64) -> Result<Option<DivisionCertificate>> {
    if a.field().order().is_some() || !analysis::is_alternative(a)?.passed() {
        return Ok(None);
    }
    let Some(inv) = standard_involution(a) else {
        return Ok(None);
    };
    let form = inv.norm_form()?;
    if !form.is_positive_definite_diagonal() {
        return Ok(None);
    }
    let mut rng = SamplingPlan::sampled(0, seed).rng();
    for _ in 0..COMPOSITION_SAMPLES {
        let x = random_element(a, &mut rng);
        let y = random_element(a, &mut rng);
        let lhs = form.evaluate(a.mul(&x, &y)?.coords())?;
        let rhs = form.evaluate(x.coords())?.mul(&form.evaluate(y.coords())?)?;
        if lhs != rhs {
            return Ok(None);
        }
    }
    Ok(Some(DivisionCertificate {
        norm_diagonal: form.diagonal().to_vec(),
        composition_samples: COMPOSITION_SAMPLES as u64,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroDivisorCensus {
    pub status: CensusStatus,
    pub method: Method,
    pub witness: Option<ZeroDivisorVerdict>,
    pub elements_examined: u64,
    pub seed: Option<u64>,
    pub certificate: Option<DivisionCertificate>,
}

/// Candidates tried when the algebra cannot be enumerated: basis vectors,
/// `e_i + e_j`, `e_i − e_j`, then seeded random nonzero elements.
fn sampled_candidates(a: &StructureConstants, plan: &SamplingPlan) -> Result<Vec<AlgebraElement>> {
    let n = a.dim();
    let mut out: Vec<AlgebraElement> = (0..n).map(|i| a.basis(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(a.basis(i).add(&a.basis(j))?);
            if a.field().characteristic() != 2 {
                out.push(a.basis(i).sub(&a.basis(j))?);
            }
        }
    }
    let mut rng = plan.rng();
    out.extend((0..plan.samples).map(|_| random_nonzero_element(a, &mut rng)));
    Ok(out)
}

fn enumerable(a: &StructureConstants, plan: &SamplingPlan) -> bool {
    a.cardinality().is_some() && plan.enumerate(a.cardinality(), EXHAUSTIVE_LIMIT).unwrap_or(false)
}

/// Decides whether `a` has a nonzero zero divisor.
///
/// Exhaustive over a small finite algebra (lowest-index witness); over ℚ a
/// [`DivisionCertificate`] settles the negative case; otherwise only a
/// found witness is conclusive and the status is `Unknown` when none is found.
pub fn zero_divisor_census(a: &StructureConstants, plan: &SamplingPlan) -> Result<ZeroDivisorCensus> {
    if enumerable(a, plan) {
        let total = a.cardinality().unwrap() as usize;
        let hit = find_first(total - 1, |i| {
            let x = a.element_from_index(i as u128 + 1)?;
            Ok(is_zero_divisor(a, &x)?.then_some(x))
        })?;
        return Ok(match hit {
            Some((i, x)) => ZeroDivisorCensus {
                status: CensusStatus::Exist,
                method: Method::ExhaustiveSearch,
                witness: Some(zero_divisor_check(a, &x)?),
                elements_examined: i as u64 + 1,
                seed: None,
                certificate: None,
            },
            None => ZeroDivisorCensus {
                status: CensusStatus::NoneExist,
                method: Method::ExhaustiveSearch,
                witness: None,
                elements_examined: total as u64 - 1,
                seed: None,
                certificate: None,
            },
        });
    }
    if let Some(cert) = division_certificate(a, plan.seed)? {
        return Ok(ZeroDivisorCensus {
            status: CensusStatus::NoneExist,
            method: Method::DivisionCertificate,
            witness: None,
            elements_examined: 0,
            seed: Some(plan.seed),
            certificate: Some(cert),
        });
    }
    let candidates = sampled_candidates(a, plan)?;
    let hit = find_first(candidates.len(), |i| {
        Ok(is_zero_divisor(a, &candidates[i])?.then_some(()))
    })?;
    Ok(match hit {
        Some((i, ())) => ZeroDivisorCensus {
            status: CensusStatus::Exist,
            method: Method::SampledOnly,
            witness: Some(zero_divisor_check(a, &candidates[i])?),
            elements_examined: i as u64 + 1,
            seed: Some(plan.seed),
            certificate: None,
        },
        None => ZeroDivisorCensus {
            status: CensusStatus::Unknown,
            method: Method::SampledOnly,
            witness: None,
            elements_examined: candidates.len() as u64,
            seed: Some(plan.seed),
            certificate: None,
        },
    })
}

/// Zero divisors in scan order, and whether the list is complete.
fn collect_zero_divisors(
    a: &StructureConstants,
    plan: &SamplingPlan,
    cap: usize,
) -> Result<(Vec<AlgebraElement>, bool)> {
    use rayon::prelude::*;
    let mut found = Vec::new();
    if enumerable(a, plan) {
        let total = a.cardinality().unwrap() as usize;
        const CHUNK: usize = 1 << 12;
        let mut start = 1;
        while start < total && found.len() < cap {
            let end = (start + CHUNK).min(total);
            let chunk = (start..end)
                .into_par_iter()
                .map(|i| {
                    let x = a.element_from_index(i as u128)?;
                    Ok(is_zero_divisor(a, &x)?.then_some(x))
                })
                .collect::<Result<Vec<_>>>()?;
            found.extend(chunk.into_iter().flatten());
            start = end;
        }
        let complete = start >= total && found.len() <= cap;
        found.truncate(cap);
        return Ok((found, complete));
    }
    let candidates = sampled_candidates(a, plan)?;
    let flags = candidates
        .par_iter()
        .map(|x| is_zero_divisor(a, x))
        .collect::<Result<Vec<_>>>()?;
    found.extend(
        candidates
            .into_iter()
            .zip(flags)
            .filter(|(_, f)| *f)
            .map(|(x, _)| x)
            .take(cap),
    );
    Ok((found, false))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HypothesisStatus {
    Holds,
    Fails,
    /// The algebra is associative: every associator is zero.
    HoldsVacuously,
    Unknown,
}

/// A nonzero associator `d = (x, y, z)` that is a zero divisor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssociatorZeroDivisor {
    pub x: AlgebraElement,
    pub y: AlgebraElement,
    pub z: AlgebraElement,
    pub associator: AlgebraElement,
    pub partner: ZeroDivisorVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisVerdict {
    pub status: HypothesisStatus,
    pub method: Option<Method>,
    pub witness: Option<AssociatorZeroDivisor>,
    pub pairs_examined: u64,
    pub seed: Option<u64>,
}

/// Tests whether every nonzero associator fails to be a zero divisor.
///
/// Associative algebras hold vacuously; algebras proven free of zero
/// divisors hold outright. Otherwise the known zero divisors `d` are
/// matched against associator images: for fixed `(x, y)` the map
/// `z ↦ (x, y, z)` is linear, so `d` is an associator `(x, y, ·)` iff it
/// lies in that map's column space, and `z` is recovered by a linear solve.
pub fn hypothesis_check(a: &StructureConstants, plan: &SamplingPlan) -> Result<HypothesisVerdict> {
    if !analysis::is_alternative(a)?.passed() {
        return Err(Error::NotAlternative);
    }
    let census = zero_divisor_census(a, plan)?;
    hypothesis_with_census(a, plan, &census)
}

fn hypothesis_with_census(
    a: &StructureConstants,
    plan: &SamplingPlan,
    census: &ZeroDivisorCensus,
) -> Result<HypothesisVerdict> {
    if analysis::is_associative(a)?.passed() {
        return Ok(HypothesisVerdict {
            status: HypothesisStatus::HoldsVacuously,
            method: None,
            witness: None,
            pairs_examined: 0,
            seed: None,
        });
    }
    if census.status == CensusStatus::NoneExist {
        return Ok(HypothesisVerdict {
            status: HypothesisStatus::Holds,
            method: Some(census.method),
            witness: None,
            pairs_examined: 0,
            seed: census.seed,
        });
    }
    let n = a.dim();
    let pair_space = a.cardinality().and_then(|c| c.checked_mul(c));
    let exhaustive_pairs = plan.enumerate(pair_space, PAIR_LIMIT).unwrap_or(false);
    let (zero_divisors, complete) = collect_zero_divisors(
        a,
        plan,
        if exhaustive_pairs {
            usize::MAX
        } else {
            SAMPLED_ZERO_DIVISOR_CAP
        },
    )?;

    let search = |x: &AlgebraElement, y: &AlgebraElement| -> Result<Option<AssociatorZeroDivisor>> {
        let map = a.associator_map(x, y)?;
        if map.is_zero() {
            return Ok(None);
        }
        let image = Subspace::from_spanning(a.field(), n, (0..n).map(|j| map.column(j)).collect())?;
        for d in &zero_divisors {
            if !image.contains(d.coords())? {
                continue;
            }
            let z = map.solve(d.coords())?.expect("target lies in the column space");
            let z = a.element(z)?;
            let associator = a.associator(x, y, &z)?;
            debug_assert_eq!(&associator, d);
            return Ok(Some(AssociatorZeroDivisor {
                x: x.clone(),
                y: y.clone(),
                z,
                partner: zero_divisor_check(a, &associator)?,
                associator,
            }));
        }
        Ok(None)
    };

    let (hit, examined, method, seed) = if exhaustive_pairs {
        let card = a.cardinality().unwrap() as usize;
        let total = card * card;
        let hit = find_first(total, |i| {
            let x = a.element_from_index((i / card) as u128)?;
            let y = a.element_from_index((i % card) as u128)?;
            search(&x, &y)
        })?;
        (hit, total, Method::ExhaustiveSearch, None)
    } else {
        let mut pairs: Vec<(AlgebraElement, AlgebraElement)> =
            (0..n * n).map(|i| (a.basis(i / n), a.basis(i % n))).collect();
        let mut rng = plan.rng();
        pairs.extend((0..plan.samples).map(|_| (random_element(a, &mut rng), random_element(a, &mut rng))));
        let hit = find_first(pairs.len(), |i| search(&pairs[i].0, &pairs[i].1))?;
        (hit, pairs.len(), Method::SampledOnly, Some(plan.seed))
    };
    Ok(match hit {
        Some((i, w)) => HypothesisVerdict {
            status: HypothesisStatus::Fails,
            method: Some(method),
            witness: Some(w),
            pairs_examined: i as u64 + 1,
            seed,
        },
        None => HypothesisVerdict {
            status: if exhaustive_pairs && complete {
                HypothesisStatus::Holds
            } else {
                HypothesisStatus::Unknown
            },
            method: Some(method),
            witness: None,
            pairs_examined: examined as u64,
            seed,
        },
    })
}

/// Consequences of the hypothesis for an alternative, non-associative
/// algebra in which it holds: the nucleus equals the center, and neither
/// nonzero nuclear elements nor non-nuclear elements are zero divisors.
///
/// Fails with [`Error::PreconditionFailed`] naming the first unmet precondition.
pub fn check_hypothesis_consequences(a: &StructureConstants, plan: &SamplingPlan) -> Result<Vec<CheckReport>> {
    if !analysis::is_alternative(a)?.passed() {
        return Err(Error::PreconditionFailed(Precondition::NotAlternative));
    }
    if analysis::is_associative(a)?.passed() {
        return Err(Error::PreconditionFailed(Precondition::Associative));
    }
    if hypothesis_check(a, plan)?.status != HypothesisStatus::Holds {
        return Err(Error::PreconditionFailed(Precondition::HypothesisNotHolding));
    }
    let nuc = analysis::nucleus(a)?;
    let cen = analysis::center(a)?;
    let mut reports = Vec::with_capacity(3);

    let equal = nuc.subspace == cen.subspace;
    let witness = if equal {
        None
    } else {
        nuc.vectors(a)?
            .into_iter()
            .find(|v| !cen.contains(v).unwrap_or(true))
            .map(|v| Witness {
                elements: vec![("v", v.clone())],
                defect: vec![v],
            })
    };
    reports.push(CheckReport {
        property: Property::NucleusEqualsCenter,
        verdict: if equal { Verdict::Pass } else { Verdict::Fail },
        witness,
        samples_used: 1,
        exhaustive: true,
        seed: None,
        nontrivial: nuc.dim() as u64,
    });

    let kernel_step = |x: &AlgebraElement| -> Result<Step<Witness>> {
        let v = zero_divisor_check(a, x)?;
        let t = v.left_witness.clone().or_else(|| v.right_witness.clone());
        Ok(Step {
            nontrivial: true,
            failure: t.map(|t| {
                let defect = vec![
                    a.mul(x, &t).unwrap_or_else(|_| a.zero()),
                    a.mul(&t, x).unwrap_or_else(|_| a.zero()),
                ];
                Witness {
                    elements: vec![("x", x.clone()), ("t", t)],
                    defect,
                }
            }),
        })
    };

    // nonzero nuclear elements
    let q = a.field().order().map(u128::from);
    let nuclear_count = q.and_then(|q| checked_pow(q, nuc.dim()));
    let report = if plan.enumerate(nuclear_count, EXHAUSTIVE_LIMIT)? {
        let total = nuclear_count.unwrap() as usize;
        let out = scan_all(total - 1, |i| {
            kernel_step(&subspace_element(a, &nuc.subspace, i as u128 + 1)?)
        })?;
        CheckReport::from_scan(Property::NuclearNotZeroDivisors, out, true, None)
    } else {
        let mut rng = plan.rng();
        let mut samples = Vec::with_capacity(plan.samples);
        while samples.len() < plan.samples && nuc.dim() > 0 {
            let x = random_in_subspace(a, &nuc.subspace, &mut rng)?;
            if !x.is_zero() {
                samples.push(x);
            }
        }
        let out = scan_all(samples.len(), |i| kernel_step(&samples[i]))?;
        CheckReport::from_scan(Property::NuclearNotZeroDivisors, out, false, Some(plan.seed))
    };
    reports.push(report);

    // elements outside the nucleus
    let outside_step = |x: &AlgebraElement| -> Result<Step<Witness>> {
        if nuc.contains(x)? {
            return Ok(Step::pass(false));
        }
        kernel_step(x)
    };
    let report = if enumerable(a, plan) {
        let total = a.cardinality().unwrap() as usize;
        let out = scan_all(total, |i| outside_step(&a.element_from_index(i as u128)?))?;
        CheckReport::from_scan(Property::NonNuclearNotZeroDivisors, out, true, None)
    } else {
        let mut rng = plan.rng();
        let samples: Vec<_> = (0..plan.samples).map(|_| random_element(a, &mut rng)).collect();
        let out = scan_all(samples.len(), |i| outside_step(&samples[i]))?;
        CheckReport::from_scan(Property::NonNuclearNotZeroDivisors, out, false, Some(plan.seed))
    };
    reports.push(report);
    Ok(reports)
}

/// Whether "alternative, not associative, nonzero associators are not zero
/// divisors ⇒ no zero divisors" is borne out on `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub alternative: bool,
    pub associative: bool,
    /// Alternative and not associative.
    pub applicable: bool,
    /// `None` when the algebra is not alternative.
    pub hypothesis: Option<HypothesisVerdict>,
    pub conclusion: ZeroDivisorCensus,
    /// False only if the theorem applies, the hypothesis holds, and zero divisors exist.
    pub consistent: bool,
}

pub fn check_theorem(a: &StructureConstants, plan: &SamplingPlan) -> Result<TheoremVerdict> {
    let alternative = analysis::is_alternative(a)?.passed();
    let associative = analysis::is_associative(a)?.passed();
    let applicable = alternative && !associative;
    let conclusion = zero_divisor_census(a, plan)?;
    let hypothesis = if alternative {
        Some(hypothesis_with_census(a, plan, &conclusion)?)
    } else {
        None
    };
    let holds = hypothesis.as_ref().is_some_and(|h| h.status == HypothesisStatus::Holds);
    let consistent = !(applicable && holds && conclusion.status == CensusStatus::Exist);
    Ok(TheoremVerdict {
        alternative,
        associative,
        applicable,
        hypothesis,
        conclusion,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_algebra_2x2, octonions, quaternions, zorn_split_octonions};
    use crate::scalars::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn unit_operators_are_identity() {
        let o = octonions(q()).into_algebra();
        let one = o.unit().unwrap();
        for side in [Side::Left, Side::Right] {
            assert_eq!(mult_operator(&o, &one, side).unwrap().matrix, Matrix::identity(q(), 8));
        }
    }

    #[test]
    fn operator_scales_linearly() {
        let o = octonions(q()).into_algebra();
        let x = o.element_from_i64(&[1, 2, 0, -1, 0, 3, 0, 1]).unwrap();
        let alpha = q().from_i64(-3);
        let lx = mult_operator(&o, &x, Side::Left).unwrap().matrix;
        let lax = mult_operator(&o, &x.scale(&alpha).unwrap(), Side::Left).unwrap().matrix;
        assert_eq!(lax, lx.scale(&alpha).unwrap());
    }

    #[test]
    fn zorn_idempotent_is_two_sided_zero_divisor() {
        let z = zorn_split_octonions(q());
        let u = z.basis(0);
        assert!(mult_operator(&z, &u, Side::Left).unwrap().matrix.rank().unwrap() < 8);
        let v = zero_divisor_check(&z, &u).unwrap();
        let complement = z.unit().unwrap().sub(&u).unwrap();
        assert!(v.is_left && v.is_right);
        assert_eq!(v.left_witness.as_ref(), Some(&complement));
        assert!(z.mul(&u, v.left_witness.as_ref().unwrap()).unwrap().is_zero());
        assert!(z.mul(v.right_witness.as_ref().unwrap(), &u).unwrap().is_zero());
    }

    #[test]
    fn matrix_unit_zero_divisor() {
        let m = matrix_algebra_2x2(q());
        let v = zero_divisor_check(&m, &m.basis(0)).unwrap();
        assert!(v.is_left);
        let y = v.left_witness.unwrap();
        assert!(m.mul(&m.basis(0), &y).unwrap().is_zero());
        assert!(m.mul(&m.basis(0), &m.basis(3)).unwrap().is_zero());
    }

    #[test]
    fn octonion_one_plus_e1_is_regular() {
        let o = octonions(q()).into_algebra();
        let x = o.unit().unwrap().add(&o.basis(1)).unwrap();
        assert_eq!(o.left_mult_matrix(&x).unwrap().rank().unwrap(), 8);
        let v = zero_divisor_check(&o, &x).unwrap();
        assert!(!v.is_zero_divisor());
    }

    #[test]
    fn zero_is_rejected() {
        let o = octonions(q()).into_algebra();
        assert_eq!(zero_divisor_check(&o, &o.zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn census_modes() {
        let plan = SamplingPlan::default();
        let z2 = zorn_split_octonions(FieldSpec::gf(2).unwrap());
        let c = zero_divisor_census(&z2, &plan).unwrap();
        assert_eq!((c.status, c.method), (CensusStatus::Exist, Method::ExhaustiveSearch));

        let o = octonions(q()).into_algebra();
        let c = zero_divisor_census(&o, &plan).unwrap();
        assert_eq!(
            (c.status, c.method),
            (CensusStatus::NoneExist, Method::DivisionCertificate)
        );

        let zq = zorn_split_octonions(q());
        let c = zero_divisor_census(&zq, &plan).unwrap();
        assert_eq!((c.status, c.method), (CensusStatus::Exist, Method::SampledOnly));
    }

    #[test]
    fn hypothesis_examples() {
        let plan = SamplingPlan::default();
        let h = quaternions(q()).into_algebra();
        assert_eq!(
            hypothesis_check(&h, &plan).unwrap().status,
            HypothesisStatus::HoldsVacuously
        );
        let o = octonions(q()).into_algebra();
        let v = hypothesis_check(&o, &plan).unwrap();
        assert_eq!(
            (v.status, v.method),
            (HypothesisStatus::Holds, Some(Method::DivisionCertificate))
        );
        let zq = zorn_split_octonions(q());
        let v = hypothesis_check(&zq, &plan).unwrap();
        assert_eq!(v.status, HypothesisStatus::Fails);
        let w = v.witness.unwrap();
        assert_eq!(zq.associator(&w.x, &w.y, &w.z).unwrap(), w.associator);
        assert!(w.partner.is_zero_divisor());
    }

    #[test]
    fn consequences_preconditions() {
        let plan = SamplingPlan::sampled(50, 1);
        let m2 = matrix_algebra_2x2(q());
        assert_eq!(
            check_hypothesis_consequences(&m2, &plan),
            Err(Error::PreconditionFailed(Precondition::Associative))
        );
        let zq = zorn_split_octonions(q());
        assert_eq!(
            check_hypothesis_consequences(&zq, &plan),
            Err(Error::PreconditionFailed(Precondition::HypothesisNotHolding))
        );
    }
}
