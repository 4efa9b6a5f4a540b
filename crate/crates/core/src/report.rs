//! Serializable report of an analysis. All big integers are rendered as
//! decimal strings and every collection has a fixed order, so identical
//! inputs produce byte-identical JSON.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::divisor::{Analysis, ClassGroup, PrimeKind};
use crate::invariants::ScheduleRow;
use crate::monoid::MonadicElement;
use crate::pipeline::FullAnalysis;
use crate::submonoid::SubAnalysis;

pub const SCHEMA: &str = "monadica/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub input: String,
    pub context: ContextReport,
    pub atoms: AtomsReport,
    pub primes: Vec<PrimeReport>,
    pub atom_divisors: Vec<Vec<u32>>,
    pub class_group: ClassGroupReport,
    /// Whether the analyzed monoid itself (submonoid when fractional) is
    /// factorial.
    pub factorial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub submonoid: Option<SubmonoidReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<BoundsReport>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextReport {
    pub factors: Vec<String>,
    pub factor_coeffs: Vec<Vec<String>>,
    pub multiplicities: Vec<u32>,
    pub constant: BTreeMap<String, u32>,
    pub denominator: String,
    pub primes: Vec<u64>,
    pub profiles: Vec<ProfileReport>,
    pub d_multiplicative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub p: u64,
    pub profiles: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomsReport {
    pub certified: bool,
    pub degree_bound: u32,
    pub list: Vec<AtomReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomReport {
    pub id: usize,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<BTreeMap<String, i64>>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeReport {
    pub id: usize,
    pub kind: PrimeKindReport,
    pub trace: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeKindReport {
    Poly { factor: usize },
    Constant { p: u64, profile: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroupReport {
    #[serde(rename = "rank")]
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub prime_classes: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmonoidReport {
    pub generator: ElementReport,
    pub avoided: Vec<usize>,
    pub kept: Vec<usize>,
    pub atoms: Vec<usize>,
    pub restricted_primes: Vec<RestrictedPrimeReport>,
    pub matrix: Vec<Vec<u32>>,
    pub class_group: ClassGroupReport,
    pub factorial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedPrimeReport {
    pub trace: Vec<usize>,
    pub lifts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementReport {
    pub x: Vec<u32>,
    pub m: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub index: u32,
    pub primes: Vec<u64>,
    pub davenport: u32,
    pub davenport_exact: bool,
    pub elasticity_lb: String,
    pub tame_lb: u32,
}

fn element_report(e: &MonadicElement) -> ElementReport {
    ElementReport {
        x: e.x.clone(),
        m: e.m.iter().map(|(p, v)| (p.to_string(), *v)).collect(),
    }
}

fn class_group_report(cg: &ClassGroup) -> ClassGroupReport {
    ClassGroupReport {
        free_rank: cg.free_rank,
        torsion: cg.torsion.iter().map(BigInt::to_string).collect(),
        prime_classes: cg
            .prime_classes
            .iter()
            .map(|c| c.iter().map(BigInt::to_string).collect())
            .collect(),
    }
}

fn atom_text(analysis: &Analysis, id: usize) -> String {
    let e = analysis.atom_element(id);
    e.to_rat_poly(&analysis.ctx).to_string()
}

pub fn build_report(input: &str, analysis: &FullAnalysis, denominator: &BigInt) -> Report {
    let ambient = &analysis.ambient;
    let ctx = &ambient.ctx;
    let context = ContextReport {
        factors: ctx.factors.iter().map(|f| f.to_string()).collect(),
        factor_coeffs: ctx
            .factors
            .iter()
            .map(|f| f.coeffs().iter().map(BigInt::to_string).collect())
            .collect(),
        multiplicities: ambient.generator.x.clone(),
        constant: ctx.constant.iter().map(|(p, e)| (p.to_string(), *e)).collect(),
        denominator: denominator.to_string(),
        primes: ctx.primes.clone(),
        profiles: ctx
            .profile_sets
            .values()
            .map(|ps| ProfileReport { p: ps.prime, profiles: ps.profiles.clone() })
            .collect(),
        d_multiplicative: ctx.d_is_multiplicative(),
    };
    let n_const = ambient.atoms.constant_atoms.len();
    let list = (0..ambient.atoms.len())
        .map(|id| {
            if id < n_const {
                let p = ambient.atoms.constant_atoms[id];
                AtomReport {
                    id,
                    kind: "constant".into(),
                    p: Some(p),
                    x: None,
                    m: None,
                    text: p.to_string(),
                }
            } else {
                let e = &ambient.atoms.poly_atoms[id - n_const];
                AtomReport {
                    id,
                    kind: "poly".into(),
                    p: None,
                    x: Some(e.x.clone()),
                    m: Some(e.m.iter().map(|(p, v)| (p.to_string(), *v)).collect()),
                    text: atom_text(ambient, id),
                }
            }
        })
        .collect();
    let primes = ambient
        .primes
        .iter()
        .enumerate()
        .map(|(id, p)| PrimeReport {
            id,
            kind: match &p.kind {
                PrimeKind::Poly { factor } => PrimeKindReport::Poly { factor: *factor },
                PrimeKind::Constant { prime, profile } => {
                    PrimeKindReport::Constant { p: *prime, profile: profile.clone() }
                }
            },
            trace: p.trace.iter().copied().collect(),
        })
        .collect();
    let submonoid = analysis.sub.as_ref().map(sub_report);
    Report {
        schema: SCHEMA.into(),
        input: input.to_string(),
        context,
        atoms: AtomsReport {
            certified: ambient.atoms.certified,
            degree_bound: ambient.atoms.degree_bound,
            list,
        },
        primes,
        atom_divisors: ambient.matrix.clone(),
        class_group: class_group_report(&ambient.class_group),
        factorial: analysis.is_factorial(),
        submonoid,
        bounds: None,
    }
}

fn sub_report(sa: &SubAnalysis) -> SubmonoidReport {
    SubmonoidReport {
        generator: sa
            .sub
            .generator
            .as_ref()
            .map(element_report)
            .unwrap_or(ElementReport { x: vec![], m: BTreeMap::new() }),
        avoided: sa.sub.avoided.iter().copied().collect(),
        kept: sa.sub.kept.clone(),
        atoms: sa.sub.atom_ids.clone(),
        restricted_primes: sa
            .restricted
            .iter()
            .map(|rp| RestrictedPrimeReport {
                trace: rp.trace.iter().copied().collect(),
                lifts: rp.lifts.clone(),
            })
            .collect(),
        matrix: sa.matrix.clone(),
        class_group: class_group_report(&sa.class_group),
        factorial: sa.is_factorial(),
    }
}

pub fn bounds_report(rows: &[ScheduleRow]) -> Vec<BoundsReport> {
    rows.iter()
        .map(|r| BoundsReport {
            index: r.index,
            primes: r.primes.clone(),
            davenport: r.bounds.davenport.value,
            davenport_exact: r.bounds.davenport.exact,
            elasticity_lb: format!("{}/{}", r.bounds.elasticity_lb.0, r.bounds.elasticity_lb.1),
            tame_lb: r.bounds.tame_lb,
        })
        .collect()
}

/// Human-readable text rendering of a report.
pub fn pretty(report: &Report) -> String {
    let mut out = String::new();
    let push = |out: &mut String, s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    push(&mut out, format!("input: {}", report.input));
    push(
        &mut out,
        format!(
            "context: n = {}, constant atoms P = {:?}, denominator = {}",
            report.context.factors.len(),
            report.context.primes,
            report.context.denominator
        ),
    );
    for (i, f) in report.context.factors.iter().enumerate() {
        push(
            &mut out,
            format!("  f_{} = {} (multiplicity {})", i + 1, f, report.context.multiplicities[i]),
        );
    }
    for ps in &report.context.profiles {
        push(&mut out, format!("  W_{} = {:?}", ps.p, ps.profiles));
    }
    push(
        &mut out,
        format!(
            "atoms ({}, completeness {}):",
            report.atoms.list.len(),
            if report.atoms.certified { "certified" } else { "NOT certified" }
        ),
    );
    for a in &report.atoms.list {
        push(&mut out, format!("  u_{}: {}", a.id + 1, a.text));
    }
    push(&mut out, format!("height-one primes ({}):", report.primes.len()));
    for p in &report.primes {
        let kind = match &p.kind {
            PrimeKindReport::Poly { factor } => format!("poly f_{}", factor + 1),
            PrimeKindReport::Constant { p, profile } => format!("const ({}, {:?})", p, profile),
        };
        let trace: Vec<String> = p.trace.iter().map(|id| format!("u_{}", id + 1)).collect();
        push(&mut out, format!("  P_{}: {} trace {{{}}}", p.id + 1, kind, trace.join(",")));
    }
    push(&mut out, format!("class group: {}", describe_group(&report.class_group)));
    push(&mut out, format!("factorial: {}", report.factorial));
    if let Some(sub) = &report.submonoid {
        push(&mut out, "submonoid:".to_string());
        push(
            &mut out,
            format!(
                "  avoided ambient primes: {:?}, atoms: {:?}",
                sub.avoided.iter().map(|i| i + 1).collect::<Vec<_>>(),
                sub.atoms.iter().map(|i| format!("u_{}", i + 1)).collect::<Vec<_>>()
            ),
        );
        for (i, rp) in sub.restricted_primes.iter().enumerate() {
            push(
                &mut out,
                format!(
                    "  Q_{}: trace {:?} lifts {:?}",
                    i + 1,
                    rp.trace.iter().map(|id| format!("u_{}", id + 1)).collect::<Vec<_>>(),
                    rp.lifts.iter().map(|q| format!("P_{}", q + 1)).collect::<Vec<_>>()
                ),
            );
        }
        push(&mut out, format!("  class group: {}", describe_group(&sub.class_group)));
        push(&mut out, format!("  factorial: {}", sub.factorial));
    }
    if let Some(bounds) = &report.bounds {
        push(&mut out, "bounds:".to_string());
        push(&mut out, "  i | primes | D (exact?) | elasticity >= | tame >=".to_string());
        for b in bounds {
            push(
                &mut out,
                format!(
                    "  {} | {:?} | {}{} | {} | {}",
                    b.index,
                    b.primes,
                    b.davenport,
                    if b.davenport_exact { "" } else { " (lower bound)" },
                    b.elasticity_lb,
                    b.tame_lb
                ),
            );
        }
    }
    out
}

pub fn describe_group(cg: &ClassGroupReport) -> String {
    let mut parts = Vec::new();
    for d in &cg.torsion {
        parts.push(format!("Z/{}Z", d));
    }
    match cg.free_rank {
        0 => {}
        1 => parts.push("Z".into()),
        r => parts.push(format!("Z^{}", r)),
    }
    if parts.is_empty() {
        "trivial".into()
    } else {
        parts.join(" x ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{analyze_str, PipelineOptions};
    use num_traits::One;

    #[test]
    fn report_roundtrip_and_determinism() {
        let a = analyze_str("(X(X-1)^2(X-2))/12", &PipelineOptions::default()).unwrap();
        let report = build_report("(X(X-1)^2(X-2))/12", &a, &BigInt::from(12));
        let json = serde_json::to_string(&report).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        assert!(json.contains("\"schema\":\"monadica/1\""));
        assert_eq!(describe_group(&report.submonoid.unwrap().class_group), "Z/2Z");
    }

    #[test]
    fn pretty_mentions_the_group() {
        let a = analyze_str("X(X-1)(X-2)", &PipelineOptions::default()).unwrap();
        let report = build_report("X(X-1)(X-2)", &a, &BigInt::one());
        let text = pretty(&report);
        assert!(text.contains("class group: Z^4"));
        assert!(text.contains("completeness certified"));
    }
}
