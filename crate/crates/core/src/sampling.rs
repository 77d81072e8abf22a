//! Sampling plans and deterministic parallel scans.
//!
//! Every scan evaluates items by index and merges results so that the
//! lowest-index failure (or error) wins. Output therefore does not depend
//! on the number of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraElement, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::scalars::{FieldSpec, Scalar};

/// Enumeration budget: a quantified check is run exhaustively when it
/// needs at most this many element tuples.
pub const EXHAUSTIVE_LIMIT: u128 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanMode {
    /// Exhaustive when within [`EXHAUSTIVE_LIMIT`], sampled otherwise.
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SamplingPlan {
    pub mode: PlanMode,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SamplingPlan {
    fn default() -> Self {
        SamplingPlan {
            mode: PlanMode::Auto,
            samples: 10_000,
            seed: 0,
        }
    }
}

impl SamplingPlan {
    pub fn auto(samples: usize, seed: u64) -> Self {
        SamplingPlan {
            mode: PlanMode::Auto,
            samples,
            seed,
        }
    }

    pub fn sampled(samples: usize, seed: u64) -> Self {
        SamplingPlan {
            mode: PlanMode::Sampled,
            samples,
            seed,
        }
    }

    pub fn exhaustive() -> Self {
        SamplingPlan {
            mode: PlanMode::Exhaustive,
            ..Default::default()
        }
    }

    /// Decides whether a space of `size` tuples (`None` if infinite) is enumerated.
    pub fn enumerate(&self, size: Option<u128>, limit: u128) -> Result<bool> {
        match (self.mode, size) {
            (PlanMode::Sampled, _) => Ok(false),
            (PlanMode::Exhaustive, Some(_)) => Ok(true),
            (PlanMode::Exhaustive, None) => Err(Error::NotEnumerable),
            (PlanMode::Auto, Some(s)) => Ok(s <= limit),
            (PlanMode::Auto, None) => Ok(false),
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

pub fn random_scalar(f: FieldSpec, rng: &mut impl Rng) -> Scalar {
    match f.order() {
        Some(p) => f.from_u64(rng.gen_range(0..p)),
        None => {
            let num = rng.gen_range(-4i64..=4);
            let den = [1, 1, 1, 2, 3][rng.gen_range(0..5)];
            f.fraction(num as i128, den).expect("nonzero denominator")
        }
    }
}

pub fn random_element(a: &StructureConstants, rng: &mut impl Rng) -> AlgebraElement {
    let coords = (0..a.dim()).map(|_| random_scalar(a.field(), rng)).collect();
    a.element(coords).expect("coordinates drawn from the algebra's field")
}

pub fn random_nonzero_element(a: &StructureConstants, rng: &mut impl Rng) -> AlgebraElement {
    loop {
        let x = random_element(a, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random linear combination of the basis of `space`, as an element of `a`.
pub fn random_in_subspace(a: &StructureConstants, space: &Subspace, rng: &mut impl Rng) -> Result<AlgebraElement> {
    let coeffs: Vec<Scalar> = (0..space.dim()).map(|_| random_scalar(a.field(), rng)).collect();
    a.element(space.combination(&coeffs)?)
}

/// The `index`-th element of a subspace over a finite field (base-p digits
/// of `index` as coefficients of the echelon basis).
pub fn subspace_element(a: &StructureConstants, space: &Subspace, mut index: u128) -> Result<AlgebraElement> {
    let q = a.field().order().ok_or(Error::NotEnumerable)? as u128;
    let coeffs: Vec<Scalar> = (0..space.dim())
        .map(|_| {
            let c = a.field().from_u64((index % q) as u64);
            index /= q;
            c
        })
        .collect();
    a.element(space.combination(&coeffs)?)
}

/// `base^exp`, saturating to `None` on overflow.
pub fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    (0..exp).try_fold(1u128, |acc, _| acc.checked_mul(base))
}

/// Outcome of evaluating one item of a scan.
pub struct Step<W> {
    pub nontrivial: bool,
    pub failure: Option<W>,
}

impl<W> Step<W> {
    pub fn pass(nontrivial: bool) -> Self {
        Step {
            nontrivial,
            failure: None,
        }
    }
}

pub struct ScanOutcome<W> {
    pub evaluated: u64,
    pub nontrivial: u64,
    pub first_failure: Option<(usize, W)>,
}

struct Acc<W> {
    evaluated: u64,
    nontrivial: u64,
    failure: Option<(usize, W)>,
    error: Option<(usize, Error)>,
}

impl<W> Acc<W> {
    fn empty() -> Self {
        Acc {
            evaluated: 0,
            nontrivial: 0,
            failure: None,
            error: None,
        }
    }

    fn merge(self, right: Self) -> Self {
        Acc {
            evaluated: self.evaluated + right.evaluated,
            nontrivial: self.nontrivial + right.nontrivial,
            failure: self.failure.or(right.failure),
            error: self.error.or(right.error),
        }
    }
}

/// Evaluates every index in `0..count`; the lowest-index error or failure wins.
pub fn scan_all<W, F>(count: usize, eval: F) -> Result<ScanOutcome<W>>
where
    W: Send,
    F: Fn(usize) -> Result<Step<W>> + Sync,
{
    let acc = (0..count)
        .into_par_iter()
        .fold(Acc::empty, |mut acc, i| {
            if acc.error.is_some() {
                return acc;
            }
            acc.evaluated += 1;
            match eval(i) {
                Ok(step) => {
                    acc.nontrivial += step.nontrivial as u64;
                    if acc.failure.is_none() {
                        acc.failure = step.failure.map(|w| (i, w));
                    }
                }
                Err(e) => acc.error = Some((i, e)),
            }
            acc
        })
        .reduce(Acc::empty, Acc::merge);
    if let Some((_, e)) = acc.error {
        return Err(e);
    }
    Ok(ScanOutcome {
        evaluated: count as u64,
        nontrivial: acc.nontrivial,
        first_failure: acc.failure,
    })
}

/// Lowest index in `0..count` for which `eval` yields `Some`, with its value.
pub fn find_first<T, F>(count: usize, eval: F) -> Result<Option<(usize, T)>>
where
    T: Send,
    F: Fn(usize) -> Result<Option<T>> + Sync,
{
    (0..count)
        .into_par_iter()
        .find_map_first(|i| match eval(i) {
            Ok(Some(v)) => Some(Ok((i, v))),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        })
        .transpose()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_reports_lowest_failure_regardless_of_threads() {
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| {
                    scan_all(10_000, |i| {
                        Ok(Step {
                            nontrivial: i % 3 == 0,
                            failure: (i % 997 == 996).then_some(i),
                        })
                    })
                    .unwrap()
                })
        };
        for threads in [1, 4] {
            let out = run(threads);
            assert_eq!(out.first_failure.map(|(i, _)| i), Some(996));
            assert_eq!(out.nontrivial, 3334);
            assert_eq!(out.evaluated, 10_000);
        }
    }

    #[test]
    fn find_first_is_lowest_index() {
        let hit = find_first(100_000, |i| Ok((i > 500 && i % 7 == 0).then_some(i * 2))).unwrap();
        assert_eq!(hit, Some((504, 1008)));
        let err = find_first::<(), _>(1000, |i| if i == 10 { Err(Error::Overflow) } else { Ok(None) });
        assert_eq!(err, Err(Error::Overflow));
    }

    #[test]
    fn plan_decisions() {
        let auto = SamplingPlan::default();
        assert!(auto.enumerate(Some(256), EXHAUSTIVE_LIMIT).unwrap());
        assert!(!auto.enumerate(Some(1 << 21), EXHAUSTIVE_LIMIT).unwrap());
        assert!(!auto.enumerate(None, EXHAUSTIVE_LIMIT).unwrap());
        assert_eq!(
            SamplingPlan::exhaustive().enumerate(None, EXHAUSTIVE_LIMIT),
            Err(Error::NotEnumerable)
        );
        assert!(!SamplingPlan::sampled(10, 1)
            .enumerate(Some(2), EXHAUSTIVE_LIMIT)
            .unwrap());
    }
}
