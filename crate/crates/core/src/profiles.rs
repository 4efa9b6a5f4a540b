//! Per-prime minimal valuation profiles of a factor system.
//!
//! For pairwise non-associated irreducibles f_1..f_n and a prime p, the
//! profile set W_p consists of the minimal elements (componentwise) of
//! { (v_p(f_i(c)))_i : c in Z, all f_i(c) != 0 }. It is finite and turns
//! the fixed-divisor exponent into a minimum of linear forms:
//!     e_p(x) = v_p(d(prod f_i^{x_i})) = min_{w in W_p} <w, x>.
//!
//! The search walks residue classes c mod p^k breadth-first. A node knows
//! the exact valuation of every factor that is determined on its class and
//! a lower bound (the depth) for the rest; it is pruned as soon as some
//! finished profile is dominated by everything the node can still reach.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::numtheory;
use crate::zpoly::IntPoly;

pub const DEFAULT_DEPTH_CAP: u32 = 64;
const NODE_BUDGET: usize = 10_000_000;

/// Minimal valuation profiles of a factor system at one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileSet {
    pub prime: u64,
    /// Antichain under componentwise <=, sorted lexicographically.
    pub profiles: Vec<Vec<u32>>,
}

impl ProfileSet {
    /// e_p(x) = min over profiles of <w, x>.
    pub fn e_exponent(&self, x: &[u32]) -> u64 {
        self.profiles
            .iter()
            .map(|w| dot(w, x))
            .min()
            .expect("profile set is nonempty")
    }

    /// max over profiles of <w, x>; the profile part of the e_f exponent.
    pub fn max_form(&self, x: &[u32]) -> u64 {
        self.profiles
            .iter()
            .map(|w| dot(w, x))
            .max()
            .expect("profile set is nonempty")
    }

    pub fn is_linear(&self) -> bool {
        self.profiles.len() == 1
    }
}

pub fn dot(w: &[u32], x: &[u32]) -> u64 {
    w.iter().zip(x).map(|(&a, &b)| a as u64 * b as u64).sum()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Lower {
    Exact(u32),
    /// Valuation at least the node depth; not yet determined.
    AtLeast,
}

struct Node {
    rep: BigInt,
    depth: u32,
    lower: Vec<Lower>,
}

/// Computes W_p by breadth-first refinement of residue classes.
///
/// Integer roots of the factors are excluded pointwise: a class whose
/// representative evaluates to zero simply stays undetermined and is
/// eventually pruned by a sibling profile. Termination is guaranteed for
/// pairwise non-associated irreducibles; the depth cap only guards
/// against misuse and resource blowups.
pub fn minimal_profiles(factors: &[IntPoly], p: u64, depth_cap: u32) -> Result<ProfileSet> {
    let n = factors.len();
    if n == 0 {
        return Ok(ProfileSet { prime: p, profiles: vec![vec![]] });
    }
    // When p exceeds the total degree some residue class mod p avoids
    // every root of every factor, so the zero profile is realized and
    // dominates everything else.
    let total_degree: usize = factors.iter().map(IntPoly::degree).sum();
    if p > total_degree as u64 {
        return Ok(ProfileSet { prime: p, profiles: vec![vec![0; n]] });
    }
    let pb = BigInt::from(p);
    let mut finished: Vec<Vec<u32>> = Vec::new();
    let mut queue = VecDeque::new();
    queue.push_back(Node { rep: BigInt::zero(), depth: 0, lower: vec![Lower::AtLeast; n] });
    let mut budget = NODE_BUDGET;

    while let Some(node) = queue.pop_front() {
        if budget == 0 {
            return Err(Error::DepthLimitExceeded { prime: p, cap: depth_cap });
        }
        budget -= 1;

        if prunable(&finished, &node) {
            continue;
        }
        if node.lower.iter().all(|l| matches!(l, Lower::Exact(_))) {
            let profile: Vec<u32> = node
                .lower
                .iter()
                .map(|l| match l {
                    Lower::Exact(v) => *v,
                    Lower::AtLeast => unreachable!(),
                })
                .collect();
            insert_minimal(&mut finished, profile);
            continue;
        }
        if node.depth >= depth_cap {
            return Err(Error::DepthLimitExceeded { prime: p, cap: depth_cap });
        }

        let child_depth = node.depth + 1;
        let child_mod = pb.pow(child_depth);
        let step = pb.pow(node.depth);
        // Fully determined children first so their profiles prune siblings.
        let mut pending = Vec::new();
        for j in 0..p {
            let rep = &node.rep + BigInt::from(j) * &step;
            let mut lower = Vec::with_capacity(n);
            let mut complete = true;
            for (i, f) in factors.iter().enumerate() {
                match node.lower[i] {
                    Lower::Exact(v) => lower.push(Lower::Exact(v)),
                    Lower::AtLeast => {
                        let value = f.eval(&rep);
                        if value.is_zero() || (&value % &child_mod).is_zero() {
                            lower.push(Lower::AtLeast);
                            complete = false;
                        } else {
                            lower.push(Lower::Exact(numtheory::valuation(&value, p)));
                        }
                    }
                }
            }
            let child = Node { rep, depth: child_depth, lower };
            if complete {
                if !prunable(&finished, &child) {
                    let profile = child
                        .lower
                        .iter()
                        .map(|l| match l {
                            Lower::Exact(v) => *v,
                            Lower::AtLeast => unreachable!(),
                        })
                        .collect();
                    insert_minimal(&mut finished, profile);
                }
            } else {
                pending.push(child);
            }
        }
        queue.extend(pending);
    }

    finished.sort();
    Ok(ProfileSet { prime: p, profiles: finished })
}

/// True when some finished profile is componentwise <= everything the node
/// can still realize (exact values on determined coordinates, >= depth on
/// the rest).
fn prunable(finished: &[Vec<u32>], node: &Node) -> bool {
    finished.iter().any(|w| {
        w.iter().zip(&node.lower).all(|(&wi, l)| match l {
            Lower::Exact(v) => wi <= *v,
            Lower::AtLeast => wi <= node.depth,
        })
    })
}

fn insert_minimal(set: &mut Vec<Vec<u32>>, candidate: Vec<u32>) {
    if set.iter().any(|w| dominates(w, &candidate)) {
        return;
    }
    set.retain(|w| !dominates(&candidate, w));
    set.push(candidate);
}

fn dominates(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// The set of primes dividing |constant| * d(prod factors): exactly the
/// constant atoms of the monoid generated by constant * prod factors.
pub fn candidate_primes(
    factors: &[IntPoly],
    constant: &BTreeMap<u64, u32>,
) -> Result<Vec<u64>> {
    let mut primes: Vec<u64> = constant.keys().copied().collect();
    if !factors.is_empty() {
        let mut prod = IntPoly::one();
        for f in factors {
            prod = prod.mul(f);
        }
        let d = prod.fixed_divisor();
        for p in numtheory::factor_integer(&d)?.keys() {
            if !primes.contains(p) {
                primes.push(*p);
            }
        }
    }
    primes.sort_unstable();
    Ok(primes)
}
