//! Height-one primes of the ambient monoid, v-exponents of elements, and
//! the divisor-class group via Smith normal form.
//!
//! Primes split into two kinds. Each distinct irreducible factor f_i
//! contributes the contraction f_i K[X] meet [[f]]; its exponent on an
//! element is the plain factor multiplicity. Each constant-atom prime p
//! contributes one height-one prime per minimal valuation profile
//! w in W_p, with exponent <w, x> + m_p. The profile picture is validated
//! against the maximal p-compatible-set characterization on every run.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::cones;
use crate::error::{Error, Result};
use crate::linalg;
use crate::monoid::{atoms, AtomMode, AtomSet, FContext, MonadicElement};
use crate::profiles;
use crate::zerosum::{self, DavenportBound};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrimeKind {
    /// Contraction of f_i K[X]; carries the factor index.
    Poly { factor: usize },
    /// Prime over the constant atom p selected by a valuation profile.
    Constant { prime: u64, profile: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeIdeal {
    pub kind: PrimeKind,
    /// Unified atom ids (constants first) of the atoms the prime contains.
    pub trace: BTreeSet<usize>,
}

impl PrimeIdeal {
    pub fn meets_constants(&self) -> bool {
        matches!(self.kind, PrimeKind::Constant { .. })
    }
}

/// All height-one primes in canonical order: constant primes by
/// (p, profile) ascending, then polynomial primes in factor order.
pub fn primes(ctx: &FContext, atom_set: &AtomSet) -> Result<Vec<PrimeIdeal>> {
    let n_const = atom_set.constant_atoms.len();
    let mut out = Vec::new();
    for (pi, &p) in ctx.primes.iter().enumerate() {
        let ps = &ctx.profile_sets[&p];
        for w in &ps.profiles {
            let mut trace = BTreeSet::from([pi]);
            for (ai, atom) in atom_set.poly_atoms.iter().enumerate() {
                if profiles::dot(w, &atom.x) > ps.e_exponent(&atom.x) {
                    trace.insert(n_const + ai);
                }
            }
            out.push(PrimeIdeal { kind: PrimeKind::Constant { prime: p, profile: w.clone() }, trace });
        }
    }
    for i in 0..ctx.num_factors() {
        let trace: BTreeSet<usize> = atom_set
            .poly_atoms
            .iter()
            .enumerate()
            .filter(|(_, a)| a.x[i] > 0)
            .map(|(ai, _)| n_const + ai)
            .collect();
        out.push(PrimeIdeal { kind: PrimeKind::Poly { factor: i }, trace });
    }
    cross_check_constant_primes(ctx, atom_set, &out)?;
    Ok(out)
}

/// Validates the profile-based constant primes against the independent
/// characterization: the primes containing p are (Q union {p}) for the
/// maximal p-compatible subsets Q of the non-constant atoms, where Q is
/// p-compatible iff some witness y has
/// e_p(x_u + y) >= e_p(x_u) + e_p(y) + 1 for every u in Q.
fn cross_check_constant_primes(
    ctx: &FContext,
    atom_set: &AtomSet,
    primes: &[PrimeIdeal],
) -> Result<()> {
    let n = ctx.num_factors();
    let n_const = atom_set.constant_atoms.len();
    for &p in &ctx.primes {
        let ps = &ctx.profile_sets[&p];
        let derived: BTreeSet<BTreeSet<usize>> = primes
            .iter()
            .filter(|pr| matches!(&pr.kind, PrimeKind::Constant { prime, .. } if *prime == p))
            .map(|pr| pr.trace.iter().copied().filter(|&id| id >= n_const).collect())
            .collect();

        let mut compatible: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for y in witness_grid(ctx, p, n) {
            let ey = ps.e_exponent(&y);
            let set: BTreeSet<usize> = atom_set
                .poly_atoms
                .iter()
                .enumerate()
                .filter(|(_, u)| {
                    let sum: Vec<u32> = u.x.iter().zip(&y).map(|(a, b)| a + b).collect();
                    ps.e_exponent(&sum) >= ps.e_exponent(&u.x) + ey + 1
                })
                .map(|(ai, _)| n_const + ai)
                .collect();
            compatible.insert(set);
        }
        // keep only maximal compatible sets
        let maximal: BTreeSet<BTreeSet<usize>> = compatible
            .iter()
            .filter(|s| !compatible.iter().any(|t| *s != t && s.is_subset(t)))
            .cloned()
            .collect();
        if maximal != derived {
            return Err(Error::CrossCheckMismatch(format!(
                "prime {}: profile traces {:?} vs maximal compatible sets {:?}",
                p, derived, maximal
            )));
        }
    }
    Ok(())
}

/// Deep-cone witness candidates for the compatible-set search: scaled
/// combinations of extreme rays of the refined cones on the component of
/// the prime's profile support, plus the zero witness. Coordinates outside
/// the component never influence e_p, so witnesses are taken there.
fn witness_grid(ctx: &FContext, p: u64, n: usize) -> Vec<Vec<u32>> {
    let ps = &ctx.profile_sets[&p];
    let mut grid: BTreeSet<Vec<u32>> = BTreeSet::from([vec![0u32; n]]);
    if ps.is_linear() && ps.profiles[0].iter().all(|&c| c == 0) {
        return grid.into_iter().collect();
    }
    // Grow the coordinate support of W_p to its glued component: every
    // nonlinear profile set overlapping the region joins it.
    let mut support: BTreeSet<usize> = (0..n)
        .filter(|&i| ps.profiles.iter().any(|w| w[i] > 0))
        .collect();
    loop {
        let before = support.len();
        for q in ctx.profile_sets.values() {
            if q.is_linear() {
                continue;
            }
            let sup_q: BTreeSet<usize> =
                (0..n).filter(|&i| q.profiles.iter().any(|w| w[i] > 0)).collect();
            if !sup_q.is_disjoint(&support) {
                support.extend(sup_q);
            }
        }
        if support.len() == before {
            break;
        }
    }
    let support: Vec<usize> = support.into_iter().collect();
    let splitting: Vec<Vec<Vec<u32>>> = ctx
        .profile_sets
        .values()
        .filter(|q| !q.is_linear())
        .filter(|q| q.profiles.iter().any(|w| support.iter().any(|&i| w[i] > 0)))
        .map(|q| q.profiles.iter().map(|w| support.iter().map(|&i| w[i]).collect()).collect())
        .collect();
    let dim = support.len();
    let mut choice = vec![0usize; splitting.len()];
    loop {
        let mut ineqs = cones::orthant_rows(dim);
        for (sets, &pick) in splitting.iter().zip(&choice) {
            let w = &sets[pick];
            for (j, other) in sets.iter().enumerate() {
                if j != pick {
                    ineqs.push(
                        other
                            .iter()
                            .zip(w)
                            .map(|(&o, &s)| BigInt::from(o as i64 - s as i64))
                            .collect(),
                    );
                }
            }
        }
        let rays = cones::extreme_rays(&ineqs, &[], dim);
        let rays: Vec<Vec<u32>> = rays
            .iter()
            .map(|r| r.iter().map(|c| c.to_u32().expect("small ray")).collect())
            .collect();
        if !rays.is_empty() {
            let embed = |grid: &mut BTreeSet<Vec<u32>>, local: &[u32], scale: u32| {
                let mut y = vec![0u32; n];
                for (si, &coord) in support.iter().enumerate() {
                    y[coord] = scale * local[si];
                }
                grid.insert(y);
            };
            // single rays at depths 1..3, pairwise sums, and deep
            // multiples of the all-ray sum (the interior witnesses that
            // realize the profile's compatible set)
            for r in &rays {
                for scale in 1..=3u32 {
                    embed(&mut grid, r, scale);
                }
            }
            for (i, r) in rays.iter().enumerate() {
                for s in &rays[i + 1..] {
                    let sum: Vec<u32> = r.iter().zip(s).map(|(a, b)| a + b).collect();
                    embed(&mut grid, &sum, 1);
                    embed(&mut grid, &sum, 2);
                }
            }
            let total: Vec<u32> = (0..dim)
                .map(|si| rays.iter().map(|r| r[si]).sum())
                .collect();
            for scale in [1u32, 2, 4, 8, 16, 32] {
                embed(&mut grid, &total, scale);
            }
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return grid.into_iter().collect();
            }
            choice[i] += 1;
            if choice[i] < splitting[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// v_P(g) for an element of the monoid.
pub fn v_exponent(g: &MonadicElement, prime: &PrimeIdeal) -> u32 {
    match &prime.kind {
        PrimeKind::Poly { factor } => g.x[*factor],
        PrimeKind::Constant { prime: p, profile } => {
            let v = profiles::dot(profile, &g.x) as i64 + g.m_at(*p);
            debug_assert!(v >= 0, "negative exponent on a monoid element");
            v as u32
        }
    }
}

/// Divisor matrix: one row per atom (unified id order), one column per
/// prime, entries v_P(atom).
pub fn divisor_matrix(
    ctx: &FContext,
    atom_set: &AtomSet,
    primes: &[PrimeIdeal],
) -> Vec<Vec<u32>> {
    (0..atom_set.len())
        .map(|id| {
            let e = atom_set.atom_element(ctx, id);
            primes.iter().map(|p| v_exponent(&e, p)).collect()
        })
        .collect()
}

/// Abelian group invariants of Z^primes / (atom divisor lattice), with
/// the class of each prime in SNF coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroup {
    pub free_rank: usize,
    /// Nontrivial invariant factors d_1 | d_2 | ...
    pub torsion: Vec<BigInt>,
    /// Per prime: torsion coordinates (mod the invariant factors) followed
    /// by free coordinates.
    pub prime_classes: Vec<Vec<BigInt>>,
}

impl ClassGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Multiset of primary invariants for isomorphism comparison.
    pub fn primary_invariants(&self) -> (usize, Vec<(u64, u32)>) {
        let mut primary = Vec::new();
        for d in &self.torsion {
            let map = crate::numtheory::factor_integer(d).expect("small invariant factor");
            for (p, e) in map {
                primary.push((p, e));
            }
        }
        primary.sort_unstable();
        (self.free_rank, primary)
    }
}

pub fn class_group_from_matrix(matrix: &[Vec<u32>], num_primes: usize) -> ClassGroup {
    let rows: linalg::Matrix = matrix
        .iter()
        .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let snf = linalg::smith_normal_form(&rows, num_primes);
    let torsion: Vec<BigInt> = snf.diag.iter().filter(|d| !d.abs().is_one()).cloned().collect();
    let free_rank = num_primes - snf.rank;
    let torsion_start = snf.rank - torsion.len();
    let prime_classes = (0..num_primes)
        .map(|j| {
            let mut class = Vec::new();
            for (t, d) in torsion.iter().enumerate() {
                let coord = &snf.right[j][torsion_start + t];
                class.push(coord.mod_floor(d));
            }
            for i in snf.rank..num_primes {
                class.push(snf.right[j][i].clone());
            }
            class
        })
        .collect();
    ClassGroup { free_rank, torsion, prime_classes }
}

/// Class group of the ambient monoid, with the torsion-freeness and rank
/// formula for integer-coefficient generators enforced as a hard check.
pub fn class_group(
    ctx: &FContext,
    atom_set: &AtomSet,
    prime_list: &[PrimeIdeal],
) -> Result<ClassGroup> {
    let matrix = divisor_matrix(ctx, atom_set, prime_list);
    let cg = class_group_from_matrix(&matrix, prime_list.len());
    let const_primes = prime_list.iter().filter(|p| p.meets_constants()).count();
    let expected_rank = const_primes - ctx.primes.len();
    if !cg.torsion.is_empty() {
        return Err(Error::RankMismatch(format!(
            "torsion {:?} in the class group of an integer-coefficient generator",
            cg.torsion
        )));
    }
    if cg.free_rank != expected_rank {
        return Err(Error::RankMismatch(format!(
            "free rank {} but {} constant primes minus {} constant atoms gives {}",
            cg.free_rank,
            const_primes,
            ctx.primes.len(),
            expected_rank
        )));
    }
    Ok(cg)
}

/// d(gh) = d(g)d(h) for all h iff the contraction g K[X] meet [[f]] is
/// principal: the max and min of the profile forms agree on x_g at every
/// constant-atom prime.
pub fn is_principal_trace(ctx: &FContext, g: &MonadicElement) -> bool {
    ctx.primes
        .iter()
        .all(|&p| ctx.max_form(p, &g.x) == ctx.e_exponent(p, &g.x))
}

/// Exhaustive Davenport search over the set of prime classes.
pub fn davenport_lower_bound(cg: &ClassGroup, cap: u32) -> DavenportBound {
    zerosum::davenport_lower_bound(cg, cap)
}

/// Full ambient analysis bundle.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub ctx: FContext,
    pub generator: MonadicElement,
    pub atoms: AtomSet,
    pub primes: Vec<PrimeIdeal>,
    pub matrix: Vec<Vec<u32>>,
    pub class_group: ClassGroup,
}

impl Analysis {
    pub fn build(
        ctx: FContext,
        generator: MonadicElement,
        mode: AtomMode,
    ) -> Result<Analysis> {
        let atom_set = atoms(&ctx, mode)?;
        let prime_list = primes(&ctx, &atom_set)?;
        let matrix = divisor_matrix(&ctx, &atom_set, &prime_list);
        let cg = class_group(&ctx, &atom_set, &prime_list)?;
        Ok(Analysis {
            ctx,
            generator,
            atoms: atom_set,
            primes: prime_list,
            matrix,
            class_group: cg,
        })
    }

    pub fn atom_element(&self, id: usize) -> MonadicElement {
        self.atoms.atom_element(&self.ctx, id)
    }

    /// v-exponent vector of an element over all primes.
    pub fn exponent_vector(&self, g: &MonadicElement) -> Vec<u32> {
        self.primes.iter().map(|p| v_exponent(g, p)).collect()
    }

    /// Primes where the generator has exponent zero: the ones a monadic
    /// submonoid generated by it avoids.
    pub fn avoided_by(&self, g: &MonadicElement) -> BTreeSet<usize> {
        self.primes
            .iter()
            .enumerate()
            .filter(|(_, p)| v_exponent(g, p) == 0)
            .map(|(i, _)| i)
            .collect()
    }
}
