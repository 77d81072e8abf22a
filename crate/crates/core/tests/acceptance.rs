//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use altring::algebra::StructureConstants;
use altring::analysis::{
    associator_skew_symmetry, center, is_alternative, is_associative, nucleus, verify_alternative_identities, Property,
};
use altring::cli::file;
use altring::constructions::cayley_dickson_chain;
use altring::error::{Error, Precondition};
use altring::sampling::{random_nonzero_element, SamplingPlan};
use altring::scalars::FieldSpec;
use altring::zerodiv::{
    check_hypothesis_consequences, check_theorem, hypothesis_check, zero_divisor_census, zero_divisor_check,
    CensusStatus, HypothesisStatus, Method,
};

const SEED: u64 = 20240917;

/// Number, description, time limit in seconds, check.
type Criterion = (u32, &'static str, Option<u64>, fn());

fn cd_ladder() {
    let q = FieldSpec::Rationals;
    let expected = [(true, true), (true, true), (false, true), (false, false)];
    for (levels, (associative, alternative)) in (1..=4).zip(expected) {
        let a = cayley_dickson_chain(q, &vec![q.from_i64(-1); levels])
            .unwrap()
            .into_algebra();
        let assoc = is_associative(&a).unwrap();
        let alt = is_alternative(&a).unwrap();
        assert!(assoc.exhaustive && alt.exhaustive);
        assert_eq!(
            (assoc.passed(), alt.passed()),
            (associative, alternative),
            "{levels} doublings"
        );
        if !alternative {
            let w = alt.witness.unwrap();
            assert!(w.defect.iter().any(|d| !d.is_zero()));
        }
    }
}

fn alternative_identity_suite() {
    let o2 = common::load("octonion_gf2");
    for r in verify_alternative_identities(&o2, &SamplingPlan::default()).unwrap() {
        assert!(r.passed() && r.exhaustive, "octonions/GF(2) {:?}", r.property);
    }
    let sum = common::load("octonion_m2_gf3");
    let plan = SamplingPlan::sampled(10_000, SEED);
    for r in verify_alternative_identities(&sum, &plan).unwrap() {
        assert!(r.passed(), "O+M2/GF(3) {:?}: {:?}", r.property, r.witness);
        assert!(r.exhaustive || r.samples_used >= 10_000, "{:?}", r.property);
        if r.property == Property::CommutatorSquareKillsAssociators {
            assert!(r.nontrivial > 0, "no nonzero (w,n) commutators drawn");
        }
    }
}

fn skew_symmetry_everywhere() {
    for (name, a) in common::corpus() {
        if !is_alternative(&a).unwrap().passed() {
            continue;
        }
        let r = associator_skew_symmetry(&a, &SamplingPlan::exhaustive()).unwrap();
        assert!(r.passed() && r.exhaustive, "{name}");
    }
}

fn nucleus_center_dimensions() {
    let expected = [
        ("octonion_q", 1, 1),
        ("m2_q", 4, 1),
        ("octonion_m2_q", 5, 2),
        ("octonion_m2_gf3", 5, 2),
        ("zorn_gf2", 1, 1),
        ("zorn_gf3", 1, 1),
    ];
    for (name, n, c) in expected {
        let a = common::load(name);
        assert_eq!(
            (nucleus(&a).unwrap().dim(), center(&a).unwrap().dim()),
            (n, c),
            "{name}"
        );
    }
    for (name, a) in common::corpus() {
        assert!(
            center(&a)
                .unwrap()
                .subspace
                .is_subspace_of(&nucleus(&a).unwrap().subspace)
                .unwrap(),
            "{name}"
        );
    }
}

fn zero_divisor_machinery() {
    for name in ["zorn_q", "zorn_gf2", "zorn_gf3"] {
        let z = common::load(name);
        let u = z.basis(0);
        let complement = z.unit().unwrap().sub(&u).unwrap();
        assert!(z.mul(&u, &complement).unwrap().is_zero() && z.mul(&complement, &u).unwrap().is_zero());
        let v = zero_divisor_check(&z, &u).unwrap();
        assert!(v.is_left && v.is_right, "{name}");
        assert_eq!(v.left_witness.as_ref(), Some(&complement), "{name}");
        assert!(z.mul(&u, v.left_witness.as_ref().unwrap()).unwrap().is_zero());
        assert!(z.mul(v.right_witness.as_ref().unwrap(), &u).unwrap().is_zero());
    }

    let o = common::load("octonion_q");
    let census = zero_divisor_census(&o, &SamplingPlan::default()).unwrap();
    assert_eq!(
        (census.status, census.method),
        (CensusStatus::NoneExist, Method::DivisionCertificate)
    );
    assert!(census.certificate.unwrap().norm_diagonal.iter().all(|d| d.is_one()));
    let mut rng = SamplingPlan::sampled(0, SEED).rng();
    for _ in 0..10_000 {
        let x = random_nonzero_element(&o, &mut rng);
        assert!(!zero_divisor_check(&o, &x).unwrap().is_zero_divisor(), "{x}");
    }

    let o3 = common::load("octonion_gf3");
    let census = zero_divisor_census(&o3, &SamplingPlan::default()).unwrap();
    assert_eq!(
        (census.status, census.method),
        (CensusStatus::Exist, Method::ExhaustiveSearch)
    );
    let w = census.witness.unwrap();
    assert!(w.is_zero_divisor());
}

fn hypothesis_engine() {
    let z = common::load("zorn_gf2");
    let h = hypothesis_check(&z, &SamplingPlan::exhaustive()).unwrap();
    assert_eq!(
        (h.status, h.method),
        (HypothesisStatus::Fails, Some(Method::ExhaustiveSearch))
    );
    let w = h.witness.unwrap();
    assert_eq!(z.associator(&w.x, &w.y, &w.z).unwrap(), w.associator);
    assert!(!w.associator.is_zero());
    let d = &w.associator;
    let left = w
        .partner
        .left_witness
        .as_ref()
        .is_some_and(|y| !y.is_zero() && z.mul(d, y).unwrap().is_zero());
    let right = w
        .partner
        .right_witness
        .as_ref()
        .is_some_and(|t| !t.is_zero() && z.mul(t, d).unwrap().is_zero());
    assert!(left || right);

    let o = common::load("octonion_q");
    let h = hypothesis_check(&o, &SamplingPlan::default()).unwrap();
    assert_eq!(
        (h.status, h.method),
        (HypothesisStatus::Holds, Some(Method::DivisionCertificate))
    );

    let quat = common::load("quaternion_q");
    assert_eq!(
        hypothesis_check(&quat, &SamplingPlan::default()).unwrap().status,
        HypothesisStatus::HoldsVacuously
    );
}

fn theorem_consistency() {
    let corpus = common::corpus();
    assert!(corpus.len() >= 11);
    for (name, a) in corpus {
        let t = check_theorem(&a, &SamplingPlan::auto(2_000, SEED)).unwrap();
        assert!(t.consistent, "{name}: {t:?}");
    }
}

fn hypothesis_consequences() {
    let o = common::load("octonion_q");
    let reports = check_hypothesis_consequences(&o, &SamplingPlan::auto(10_000, SEED)).unwrap();
    assert_eq!(nucleus(&o).unwrap().subspace, center(&o).unwrap().subspace);
    let props: Vec<_> = reports.iter().map(|r| r.property).collect();
    assert_eq!(
        props,
        [
            Property::NucleusEqualsCenter,
            Property::NuclearNotZeroDivisors,
            Property::NonNuclearNotZeroDivisors
        ]
    );
    for r in &reports {
        assert!(r.passed(), "{:?}", r.property);
    }
    assert_eq!(reports[1].samples_used, 10_000);
    assert_eq!(reports[2].samples_used, 10_000);
    assert!(reports[2].nontrivial > 9_000);

    let z: StructureConstants = common::load("zorn_gf2");
    assert_eq!(
        check_hypothesis_consequences(&z, &SamplingPlan::default()),
        Err(Error::PreconditionFailed(Precondition::HypothesisNotHolding))
    );
    let out = Command::new(env!("CARGO_BIN_EXE_altring"))
        .args([
            "check",
            common::corpus_dir().join("zorn_gf2.json").to_str().unwrap(),
            "lemma31",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hypothesis does not hold"));
}

fn determinism() {
    let run = |threads: &str, file: &str, which: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_altring"))
            .args(["--threads", threads, "check"])
            .arg(common::corpus_dir().join(file))
            .args([which, "--seed", "99", "--samples", "2000", "--json"])
            .output()
            .unwrap();
        assert!(!out.stdout.is_empty());
        out.stdout
    };
    for (file, which) in [
        ("octonion_gf3.json", "theorem"),
        ("octonion_q.json", "consequences"),
        ("zorn_q.json", "hypothesis"),
        ("octonion_m2_gf3.json", "identities"),
    ] {
        let single = run("1", file, which);
        assert_eq!(single, run("1", file, which), "{file} {which}: repeated run");
        assert_eq!(single, run("3", file, which), "{file} {which}: thread count");
    }
}

fn round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (name, a) in common::corpus() {
        let path = dir.path().join(format!("{name}.json"));
        file::save(&a, &path).unwrap();
        let back = file::load(&path).unwrap();
        assert_eq!(back, a, "{name}");
        let again = dir.path().join(format!("{name}.again.json"));
        file::save(&back, &again).unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(&again).unwrap(), "{name}");
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            1,
            "Cayley-Dickson ladder: assoc, assoc, alternative, not alternative",
            Some(10),
            cd_ladder,
        ),
        (
            2,
            "alternative-ring identities on O/GF(2) and O+M2/GF(3)",
            Some(60),
            alternative_identity_suite,
        ),
        (
            3,
            "associator skew symmetry on every alternative corpus algebra",
            None,
            skew_symmetry_everywhere,
        ),
        (
            4,
            "nucleus and center dimensions, center inside nucleus",
            None,
            nucleus_center_dimensions,
        ),
        (
            5,
            "zero-divisor witnesses, division certificate, GF(3) octonion census",
            Some(60),
            zero_divisor_machinery,
        ),
        (
            6,
            "associator zero-divisor hypothesis engine",
            Some(120),
            hypothesis_engine,
        ),
        (
            7,
            "no-zero-divisor theorem consistent on the corpus",
            None,
            theorem_consistency,
        ),
        (
            8,
            "hypothesis consequences and precondition contract",
            None,
            hypothesis_consequences,
        ),
        (9, "byte-identical JSON across thread counts", None, determinism),
        (10, "save/load round trip of every corpus algebra", None, round_trip),
    ];
    let mut failed = 0;
    for (n, what, limit, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let over = limit.is_some_and(|s| elapsed > Duration::from_secs(s));
        let status = if outcome.is_ok() && !over { "PASS" } else { "FAIL" };
        let budget = limit.map_or(String::new(), |s| format!(", limit {s}s"));
        println!(
            "{status} criterion {n:>2}: {what} ({:.2}s{budget})",
            elapsed.as_secs_f64()
        );
        if status == "FAIL" {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
