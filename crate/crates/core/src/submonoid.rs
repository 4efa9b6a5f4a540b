//! Divisor-closed (= monadic) submonoids of the ambient monoid as
//! prime-support complements, restriction of height-one primes, restricted
//! v-exponents, and class groups of submonoids with fractional generators.
//!
//! A submonoid is the complement of a union of ambient height-one primes;
//! its own height-one primes are the minimal nonempty traces of the kept
//! ambient primes on the submonoid atoms, and restricted exponents follow
//! the ceiling formula max over lifts of v_Q(g) / v_Q(trace ideal).

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

use crate::divisor::{class_group_from_matrix, v_exponent, Analysis, ClassGroup};
use crate::error::{Error, Result};
use crate::monoid::MonadicElement;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Submonoid {
    /// Ambient prime indices whose union is removed.
    pub avoided: BTreeSet<usize>,
    /// Remaining ambient prime indices, in ambient order.
    pub kept: Vec<usize>,
    /// Ambient atom ids that lie in the submonoid.
    pub atom_ids: Vec<usize>,
    /// The generator, when the submonoid came from one.
    pub generator: Option<MonadicElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedPrime {
    /// Ambient atom ids of the submonoid atoms the prime contains.
    pub trace: BTreeSet<usize>,
    /// Ambient primes whose trace equals this minimal trace.
    pub lifts: Vec<usize>,
}

/// The monadic submonoid generated by an element: it avoids exactly the
/// primes where the generator has exponent zero.
pub fn monadic_submonoid(analysis: &Analysis, g: &MonadicElement) -> Submonoid {
    let avoided = analysis.avoided_by(g);
    let mut sub = submonoid_from_avoided(analysis, avoided);
    sub.generator = Some(g.clone());
    sub
}

/// The divisor-closed submonoid obtained by removing the given primes.
pub fn submonoid_from_avoided(analysis: &Analysis, avoided: BTreeSet<usize>) -> Submonoid {
    let kept: Vec<usize> =
        (0..analysis.primes.len()).filter(|i| !avoided.contains(i)).collect();
    let atom_ids: Vec<usize> = (0..analysis.atoms.len())
        .filter(|&id| avoided.iter().all(|&q| analysis.matrix[id][q] == 0))
        .collect();
    Submonoid { avoided, kept, atom_ids, generator: None }
}

/// Height-one primes of the submonoid: minimal nonempty traces of kept
/// ambient primes, grouped with all their lifts.
pub fn restricted_primes(analysis: &Analysis, sub: &Submonoid) -> Vec<RestrictedPrime> {
    let mut by_trace: BTreeMap<BTreeSet<usize>, Vec<usize>> = BTreeMap::new();
    for &q in &sub.kept {
        let trace: BTreeSet<usize> = sub
            .atom_ids
            .iter()
            .copied()
            .filter(|&id| analysis.matrix[id][q] > 0)
            .collect();
        if !trace.is_empty() {
            by_trace.entry(trace).or_default().push(q);
        }
    }
    let minimal: Vec<(BTreeSet<usize>, Vec<usize>)> = by_trace
        .iter()
        .filter(|(t, _)| !by_trace.keys().any(|s| *s != **t && s.is_subset(t)))
        .map(|(t, l)| (t.clone(), l.clone()))
        .collect();
    minimal
        .into_iter()
        .map(|(trace, lifts)| RestrictedPrime { trace, lifts })
        .collect()
}

/// v_Q of the divisorial ideal generated by the trace, inside the ambient
/// monoid: the minimum exponent of the trace atoms at Q.
fn trace_ideal_exponent(analysis: &Analysis, rp: &RestrictedPrime, q: usize) -> u32 {
    rp.trace
        .iter()
        .map(|&id| analysis.matrix[id][q])
        .min()
        .expect("trace is nonempty")
}

/// Restricted exponent: max over lifts Q of ceil(v_Q(g) / v_Q(trace)).
/// Not assumed additive across products; always computed per element.
pub fn restricted_v_exponent(
    analysis: &Analysis,
    g: &MonadicElement,
    rp: &RestrictedPrime,
) -> u32 {
    rp.lifts
        .iter()
        .map(|&q| {
            let vg = v_exponent(g, &analysis.primes[q]);
            let vp = trace_ideal_exponent(analysis, rp, q);
            vg.div_ceil(vp)
        })
        .max()
        .expect("at least one lift")
}

/// Full restricted analysis of a submonoid.
#[derive(Clone, Debug)]
pub struct SubAnalysis {
    pub sub: Submonoid,
    pub restricted: Vec<RestrictedPrime>,
    /// Rows follow sub.atom_ids, columns follow `restricted`.
    pub matrix: Vec<Vec<u32>>,
    pub class_group: ClassGroup,
}

pub fn analyze_submonoid(analysis: &Analysis, sub: Submonoid) -> Result<SubAnalysis> {
    let restricted = restricted_primes(analysis, &sub);
    let matrix: Vec<Vec<u32>> = sub
        .atom_ids
        .iter()
        .map(|&id| {
            let e = analysis.atom_element(id);
            restricted
                .iter()
                .map(|rp| restricted_v_exponent(analysis, &e, rp))
                .collect()
        })
        .collect();
    for (row, &id) in matrix.iter().zip(&sub.atom_ids) {
        if !row.is_empty() && row.iter().all(|&v| v == 0) {
            return Err(Error::CrossCheckMismatch(format!(
                "submonoid atom {} lies in no restricted prime",
                id
            )));
        }
    }
    let class_group = class_group_from_matrix(&matrix, restricted.len());
    Ok(SubAnalysis { sub, restricted, matrix, class_group })
}

impl SubAnalysis {
    pub fn is_factorial(&self) -> bool {
        self.class_group.is_trivial()
    }
}

/// Decides whether the contraction of an ambient prime to the submonoid is
/// a divisorial ideal of the submonoid.
///
/// The contraction is the union of the principal ideals of its trace
/// atoms; it is divisorial iff no realizable exponent vector dominates the
/// componentwise minimum of the trace rows while escaping every single
/// trace atom's shadow.
pub fn contraction_is_divisorial(
    analysis: &Analysis,
    suba: &SubAnalysis,
    ambient_prime: usize,
) -> bool {
    let trace: Vec<usize> = suba
        .sub
        .atom_ids
        .iter()
        .copied()
        .filter(|&id| analysis.matrix[id][ambient_prime] > 0)
        .collect();
    if trace.is_empty() {
        return true;
    }
    let row_of = |id: usize| {
        let pos = suba.sub.atom_ids.iter().position(|&a| a == id).unwrap();
        &suba.matrix[pos]
    };
    let width = suba.restricted.len();
    let trace_rows: Vec<&Vec<u32>> = trace.iter().map(|&id| row_of(id)).collect();
    let mut mstar = vec![u32::MAX; width];
    for row in &trace_rows {
        for (m, &v) in mstar.iter_mut().zip(row.iter()) {
            *m = (*m).min(v);
        }
    }
    !exists_gap_vector(&suba.matrix, &trace_rows, &mstar)
}

/// Searches for z in the value monoid (N-span of the atom rows) with
/// z >= mstar componentwise and z not >= any trace row. For each trace
/// row a violated coordinate is chosen; the chosen coordinates are capped,
/// multiplicities of atoms touching capped coordinates are enumerated,
/// and the remaining demand must be coverable by atoms supported away
/// from the caps.
fn exists_gap_vector(atom_rows: &[Vec<u32>], trace_rows: &[&Vec<u32>], mstar: &[u32]) -> bool {
    let width = mstar.len();
    let mut pattern = vec![0usize; trace_rows.len()];
    exists_gap_rec(atom_rows, trace_rows, mstar, &mut pattern, 0, width)
}

fn exists_gap_rec(
    atom_rows: &[Vec<u32>],
    trace_rows: &[&Vec<u32>],
    mstar: &[u32],
    pattern: &mut Vec<usize>,
    depth: usize,
    width: usize,
) -> bool {
    if depth == trace_rows.len() {
        return gap_pattern_feasible(atom_rows, trace_rows, mstar, pattern, width);
    }
    for c in 0..width {
        if trace_rows[depth][c] >= 1 {
            pattern[depth] = c;
            if exists_gap_rec(atom_rows, trace_rows, mstar, pattern, depth + 1, width) {
                return true;
            }
        }
    }
    false
}

fn gap_pattern_feasible(
    atom_rows: &[Vec<u32>],
    trace_rows: &[&Vec<u32>],
    mstar: &[u32],
    pattern: &[usize],
    width: usize,
) -> bool {
    let mut cap = vec![u32::MAX; width];
    for (v, &c) in trace_rows.iter().zip(pattern) {
        cap[c] = cap[c].min(v[c] - 1);
    }
    let capped: Vec<usize> = (0..width).filter(|&c| cap[c] != u32::MAX).collect();
    if capped.iter().any(|&c| mstar[c] > cap[c]) {
        return false;
    }
    let (bounded, free): (Vec<&Vec<u32>>, Vec<&Vec<u32>>) = atom_rows
        .iter()
        .partition(|row| capped.iter().any(|&c| row[c] > 0));
    let mut partial = vec![0u32; width];
    enumerate_bounded(&bounded, &free, &capped, &cap, mstar, &mut partial, 0)
}

/// Tries all multiplicity assignments of the cap-touching atoms that stay
/// under the caps; each leaf asks whether the cap-free atoms can cover the
/// remaining demand on uncapped coordinates.
fn enumerate_bounded(
    bounded: &[&Vec<u32>],
    free: &[&Vec<u32>],
    capped: &[usize],
    cap: &[u32],
    mstar: &[u32],
    partial: &mut [u32],
    idx: usize,
) -> bool {
    if idx == bounded.len() {
        if capped.iter().any(|&c| partial[c] < mstar[c]) {
            return false;
        }
        for c in 0..mstar.len() {
            if !capped.contains(&c)
                && partial[c] < mstar[c]
                && !free.iter().any(|row| row[c] > 0)
            {
                return false;
            }
        }
        return true;
    }
    let mut added = 0u32;
    loop {
        if enumerate_bounded(bounded, free, capped, cap, mstar, partial, idx + 1) {
            for (p, &a) in partial.iter_mut().zip(bounded[idx]) {
                *p -= a * added;
            }
            return true;
        }
        for (p, &a) in partial.iter_mut().zip(bounded[idx]) {
            *p += a;
        }
        added += 1;
        // each bounded atom hits a capped coordinate, so this terminates
        if capped.iter().any(|&c| partial[c] > cap[c]) {
            for (p, &a) in partial.iter_mut().zip(bounded[idx]) {
                *p -= a * added;
            }
            return false;
        }
    }
}
