//! Rank-formula suite: on every integer-coefficient generator in the
//! corpus the class group must be torsion-free with free rank equal to
//! the number of primes meeting the constants minus the number of
//! constant atoms. The pipeline enforces this as a hard error, so a
//! mismatch anywhere fails the run.

mod common;

use monadica::pipeline::{analyze_str, FullAnalysis, PipelineOptions};
use std::sync::OnceLock;

fn analyses() -> &'static Vec<(&'static str, FullAnalysis)> {
    static CACHE: OnceLock<Vec<(&'static str, FullAnalysis)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        common::CORPUS
            .iter()
            .map(|&input| {
                let a = analyze_str(input, &PipelineOptions::default())
                    .unwrap_or_else(|e| panic!("{input}: {e}"));
                (input, a)
            })
            .collect()
    })
}

#[test]
fn rank_formula_on_the_corpus() {
    assert!(common::CORPUS.len() >= 20);
    for (input, a) in analyses() {
        let cg = &a.ambient.class_group;
        assert!(cg.torsion.is_empty(), "{input}: torsion {:?}", cg.torsion);
        let const_primes = a
            .ambient
            .primes
            .iter()
            .filter(|p| p.meets_constants())
            .count();
        assert_eq!(
            cg.free_rank,
            const_primes - a.ambient.ctx.primes.len(),
            "{input}: rank formula"
        );
        assert!(a.ambient.atoms.certified, "{input}: atoms not certified");
    }
}

#[test]
fn factoriality_matches_d_multiplicativity_on_integer_generators() {
    for (input, a) in analyses() {
        assert_eq!(
            a.ambient.ctx.d_is_multiplicative(),
            a.ambient.class_group.is_trivial(),
            "{input}"
        );
    }
}

#[test]
fn unit_vectors_are_always_atoms() {
    for (input, a) in analyses() {
        let n = a.ambient.ctx.num_factors();
        for i in 0..n {
            let unit: Vec<u32> = (0..n).map(|j| u32::from(i == j)).collect();
            assert!(
                a.ambient.atoms.poly_atoms.iter().any(|at| at.x == unit),
                "{input}: missing unit atom {i}"
            );
        }
    }
}

#[test]
fn divisor_map_injective_on_atoms_across_corpus() {
    use std::collections::BTreeSet;
    for (input, a) in analyses() {
        let mut seen = BTreeSet::new();
        for row in &a.ambient.matrix {
            assert!(seen.insert(row.clone()), "{input}: colliding divisor vectors");
        }
    }
}
