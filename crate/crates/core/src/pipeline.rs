//! End-to-end analysis: parse or accept a factorization, build the
//! ambient context, enumerate atoms and primes, compute the class group,
//! and route fractional generators through their monadic submonoid inside
//! the ambient integer monoid.

use num_bigint::BigInt;
use num_traits::One;

use crate::divisor::{Analysis, ClassGroup};
use crate::error::Result;
use crate::monoid::{build_context, AtomMode};
use crate::profiles::DEFAULT_DEPTH_CAP;
use crate::submonoid::{analyze_submonoid, monadic_submonoid, SubAnalysis};
use crate::zpoly::parse::{parse_poly, ParsedPoly};
use crate::zpoly::{factor_parsed, Factorization};

#[derive(Clone, Copy, Debug)]
pub struct PipelineOptions {
    pub depth_cap: u32,
    pub atom_degree_bound: Option<u32>,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { depth_cap: DEFAULT_DEPTH_CAP, atom_degree_bound: None }
    }
}

impl PipelineOptions {
    fn atom_mode(&self) -> AtomMode {
        match self.atom_degree_bound {
            Some(b) => AtomMode::ManualBound(b),
            None => AtomMode::Certified,
        }
    }
}

/// Ambient analysis plus, for fractional generators, the restricted view
/// of the monoid they actually generate.
#[derive(Clone, Debug)]
pub struct FullAnalysis {
    pub ambient: Analysis,
    pub sub: Option<SubAnalysis>,
}

impl FullAnalysis {
    /// The divisor-class group of the generated monoid itself.
    pub fn class_group(&self) -> &ClassGroup {
        match &self.sub {
            Some(s) => &s.class_group,
            None => &self.ambient.class_group,
        }
    }

    pub fn is_factorial(&self) -> bool {
        self.class_group().is_trivial()
    }
}

pub fn analyze_str(input: &str, opts: &PipelineOptions) -> Result<FullAnalysis> {
    analyze_parsed(&parse_poly(input)?, opts)
}

pub fn analyze_parsed(parsed: &ParsedPoly, opts: &PipelineOptions) -> Result<FullAnalysis> {
    let (fact, den) = factor_parsed(parsed)?;
    analyze_factorization(&fact, &den, opts)
}

pub fn analyze_factorization(
    fact: &Factorization,
    denominator: &BigInt,
    opts: &PipelineOptions,
) -> Result<FullAnalysis> {
    let (ctx, generator) = build_context(fact, denominator, opts.depth_cap)?;
    let ambient = Analysis::build(ctx, generator.clone(), opts.atom_mode())?;
    let sub = if denominator.is_one() {
        None
    } else {
        let sub = monadic_submonoid(&ambient, &generator);
        Some(analyze_submonoid(&ambient, sub)?)
    };
    Ok(FullAnalysis { ambient, sub })
}
