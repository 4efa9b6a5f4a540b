//! Extreme rays of pointed rational cones given by inequalities and
//! equations, found by enumerating maximal tight subsets. Dimensions here
//! are tiny (at most the number of distinct irreducible factors), so the
//! subset sweep is preferred over incremental double description.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg;

/// Extreme rays of { x in R^dim : ineq * x >= 0 for all ineqs,
/// eq * x = 0 for all eqs }, as primitive integer vectors.
///
/// The cone must be pointed (ours always lies in the nonnegative orthant).
pub fn extreme_rays(ineqs: &[Vec<BigInt>], eqs: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    if dim == 0 {
        return vec![];
    }
    let eq_rank = linalg::rank(eqs);
    if eq_rank + 1 > dim {
        return vec![];
    }
    let take = dim - 1 - eq_rank;
    // Fast path: everything fits in i64 (always true for profile cones).
    let small: Option<Vec<Vec<i64>>> = eqs
        .iter()
        .chain(ineqs)
        .map(|row| row.iter().map(|c| i64::try_from(c).ok()).collect())
        .collect();
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    for subset in combinations(ineqs.len(), take) {
        let kernel = match &small {
            Some(all) => {
                let mut rows: Vec<Vec<i64>> = all[..eqs.len()].to_vec();
                for &i in &subset {
                    rows.push(all[eqs.len() + i].clone());
                }
                linalg::kernel_basis_i64(&rows, dim).unwrap_or_else(|| {
                    let big: Vec<Vec<BigInt>> = rows
                        .iter()
                        .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                        .collect();
                    linalg::kernel_basis(&big, dim)
                })
            }
            None => {
                let mut rows: Vec<Vec<BigInt>> = eqs.to_vec();
                for &i in &subset {
                    rows.push(ineqs[i].clone());
                }
                linalg::kernel_basis(&rows, dim)
            }
        };
        if kernel.len() != 1 {
            continue;
        }
        let mut ray = kernel.into_iter().next().unwrap();
        match orient(&ray, ineqs) {
            Orientation::Forward => {}
            Orientation::Backward => {
                for c in ray.iter_mut() {
                    *c = -c.clone();
                }
            }
            Orientation::Infeasible => continue,
        }
        if !rays.contains(&ray) {
            rays.push(ray);
        }
    }
    rays.sort();
    rays
}

enum Orientation {
    Forward,
    Backward,
    Infeasible,
}

fn orient(ray: &[BigInt], ineqs: &[Vec<BigInt>]) -> Orientation {
    let mut sign = 0i8;
    for ineq in ineqs {
        let s: BigInt = ineq.iter().zip(ray).map(|(a, b)| a * b).sum();
        if s.is_zero() {
            continue;
        }
        let this = if s.is_positive() { 1 } else { -1 };
        if sign == 0 {
            sign = this;
        } else if sign != this {
            return Orientation::Infeasible;
        }
    }
    match sign {
        -1 => Orientation::Backward,
        _ => Orientation::Forward,
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(vec![]);
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k - 1;
        while idx[i] == i + n - k {
            if i == 0 {
                return out;
            }
            i -= 1;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Unit inequality rows x_i >= 0 for the nonnegative orthant.
pub fn orthant_rows(dim: usize) -> Vec<Vec<BigInt>> {
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect()
}
