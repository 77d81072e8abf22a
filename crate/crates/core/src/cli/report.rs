//! Human-readable rendering of check results.

use std::fmt::Write;

use crate::algebra::{AlgebraElement, StructureConstants};
use crate::analysis::CheckReport;
use crate::zerodiv::{
    CensusStatus, HypothesisStatus, HypothesisVerdict, Method, TheoremVerdict, ZeroDivisorCensus, ZeroDivisorVerdict,
};

fn method_name(m: Method) -> &'static str {
    match m {
        Method::ExhaustiveSearch => "ExhaustiveSearch",
        Method::DivisionCertificate => "DivisionCertificate",
        Method::SampledOnly => "SampledOnly",
    }
}

fn el(a: &StructureConstants, x: &AlgebraElement) -> String {
    a.format_element(x)
}

pub fn check_report(a: &StructureConstants, r: &CheckReport) -> String {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let coverage = match (r.exhaustive, r.seed) {
        (true, _) => "exhaustive".to_string(),
        (false, Some(seed)) => format!("{} samples, seed {seed}", r.samples_used),
        (false, None) => format!("{} samples", r.samples_used),
    };
    let mut s = format!(
        "{status} {} ({coverage}; {} nontrivial)",
        r.property.name(),
        r.nontrivial
    );
    if let Some(w) = &r.witness {
        for (name, x) in &w.elements {
            let _ = write!(s, "\n    {name} = {}", el(a, x));
        }
        for d in &w.defect {
            let _ = write!(s, "\n    defect = {}", el(a, d));
        }
    }
    s
}

pub fn zero_divisor(a: &StructureConstants, v: &ZeroDivisorVerdict, label: &str, indent: &str) -> String {
    let mut s = format!("{indent}{label} = {}", el(a, &v.element));
    match &v.left_witness {
        Some(y) => {
            let _ = write!(s, "\n{indent}left: {label}·y = 0 with y = {}", el(a, y));
        }
        None => {
            let _ = write!(s, "\n{indent}left: kernel trivial");
        }
    }
    match &v.right_witness {
        Some(t) => {
            let _ = write!(s, "\n{indent}right: t·{label} = 0 with t = {}", el(a, t));
        }
        None => {
            let _ = write!(s, "\n{indent}right: kernel trivial");
        }
    }
    s
}

pub fn census_summary(c: &ZeroDivisorCensus) -> String {
    let what = match c.status {
        CensusStatus::NoneExist => "none",
        CensusStatus::Exist => "exist",
        CensusStatus::Unknown => "unknown (none found)",
    };
    format!(
        "zero divisors: {what} ({}, {} elements examined)",
        method_name(c.method),
        c.elements_examined
    )
}

pub fn census(a: &StructureConstants, c: &ZeroDivisorCensus) -> String {
    let mut s = census_summary(c);
    if let Some(cert) = &c.certificate {
        let diag: Vec<String> = cert.norm_diagonal.iter().map(ToString::to_string).collect();
        let _ = write!(
            s,
            "\n  norm diagonal [{}], composition confirmed on {} pairs",
            diag.join(", "),
            cert.composition_samples
        );
    }
    if let Some(w) = &c.witness {
        s.push('\n');
        s.push_str(&zero_divisor(a, w, "x", "  "));
    }
    s
}

pub fn hypothesis_summary(h: &HypothesisVerdict) -> String {
    match (h.status, h.method) {
        (HypothesisStatus::HoldsVacuously, _) => "hypothesis HoldsVacuously (associative)".into(),
        (status, Some(m)) => format!("hypothesis {status:?} ({})", method_name(m)),
        (status, None) => format!("hypothesis {status:?}"),
    }
}

pub fn hypothesis(a: &StructureConstants, h: &HypothesisVerdict) -> String {
    let mut s = hypothesis_summary(h);
    if h.pairs_examined > 0 {
        let _ = write!(s, ", {} pairs examined", h.pairs_examined);
    }
    if let Some(w) = &h.witness {
        let _ = write!(
            s,
            "\n  x = {}\n  y = {}\n  z = {}\n  d = (x,y,z) = {}",
            el(a, &w.x),
            el(a, &w.y),
            el(a, &w.z),
            el(a, &w.associator)
        );
        s.push_str("\n  d is a zero divisor:\n");
        s.push_str(&zero_divisor(a, &w.partner, "d", "    "));
    }
    s
}

pub fn theorem(a: &StructureConstants, t: &TheoremVerdict) -> String {
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut s = format!(
        "{}; alternative={} associative={} applicable={}",
        if t.consistent { "consistent" } else { "INCONSISTENT" },
        yes(t.alternative),
        yes(t.associative),
        yes(t.applicable)
    );
    match &t.hypothesis {
        Some(h) => {
            s.push('\n');
            s.push_str(&hypothesis(a, h));
        }
        None => s.push_str("\nhypothesis not evaluated (not alternative)"),
    }
    s.push('\n');
    s.push_str(&census(a, &t.conclusion));
    s
}
