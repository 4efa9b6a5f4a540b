//! Exact integer linear algebra: rank and kernels over Q, and the Smith
//! normal form with its right transform (the change of basis that reads
//! off abelian-group invariants and element classes).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Rank over Q.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let m = rows[0].len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|c| BigRational::from(c.clone())).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m {
        let Some(piv) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = a[rank][col].clone();
        for j in col..m {
            let v = &a[rank][j] / &inv;
            a[rank][j] = v;
        }
        for r in 0..a.len() {
            if r != rank && !a[r][col].is_zero() {
                let c = a[r][col].clone();
                for j in col..m {
                    let v = &a[r][j] - &c * &a[rank][j];
                    a[r][j] = v;
                }
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Fraction-free kernel computation for small integer matrices; returns
/// None when intermediate values would overflow i128.
pub fn kernel_basis_i64(rows: &[Vec<i64>], dim: usize) -> Option<Vec<Vec<BigInt>>> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&c| c as i128).collect())
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let piv = (row..a.len()).find(|&r| a[r][col] != 0);
        let Some(piv) = piv else { continue };
        a.swap(row, piv);
        let p = a[row][col];
        for r in 0..a.len() {
            if r != row && a[r][col] != 0 {
                let c = a[r][col];
                for j in 0..dim {
                    let t = p
                        .checked_mul(a[r][j])?
                        .checked_sub(c.checked_mul(a[row][j])?)?;
                    a[r][j] = t;
                }
                // keep entries small
                let mut g: i128 = 0;
                for j in 0..dim {
                    g = gcd_i128(g, a[r][j]);
                }
                if g > 1 {
                    for j in 0..dim {
                        a[r][j] /= g;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..dim {
        if pivots.contains(&free) {
            continue;
        }
        // Solve with the free variable set to the product of pivots to
        // stay integral, then reduce to a primitive vector.
        let mut v = vec![0i128; dim];
        let mut scale: i128 = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            scale = scale.checked_mul(a[r][pc].abs())?;
        }
        v[free] = scale.max(1);
        for (r, &pc) in pivots.iter().enumerate().rev() {
            // a[r][pc] * v[pc] + sum_{j > pc} a[r][j] * v[j] = 0
            let mut acc: i128 = 0;
            for j in 0..dim {
                if j != pc {
                    acc = acc.checked_add(a[r][j].checked_mul(v[j])?)?;
                }
            }
            if acc % a[r][pc] != 0 {
                return None;
            }
            v[pc] = -acc / a[r][pc];
        }
        let mut g: i128 = 0;
        for c in &v {
            g = gcd_i128(g, *c);
        }
        if g > 1 {
            for c in v.iter_mut() {
                *c /= g;
            }
        }
        basis.push(v.into_iter().map(BigInt::from).collect());
    }
    Some(basis)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Basis of the rational kernel {x : rows * x = 0}, scaled to primitive
/// integer vectors.
pub fn kernel_basis(rows: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|c| BigRational::from(c.clone())).collect())
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let Some(piv) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, piv);
        let inv = a[row][col].clone();
        for j in 0..dim {
            let v = &a[row][j] / &inv;
            a[row][j] = v;
        }
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let c = a[r][col].clone();
                for j in 0..dim {
                    let v = &a[r][j] - &c * &a[row][j];
                    a[r][j] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..dim {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); dim];
        v[free] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            let c = -a[r][free].clone();
            v[pc] = c;
        }
        basis.push(to_primitive_integer(&v));
    }
    basis
}

fn to_primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in v {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.iter().map(|c| c / &g).collect()
}

/// Smith normal form of an integer matrix.
///
/// Returns the invariant factors d_1 | d_2 | ... (positive, including 1s)
/// and the right transform V with U*A*V = diag(d_i): the map x -> x*V
/// identifies Z^n / rowspan(A) with the direct sum of Z/d_i and a free
/// part on the trailing coordinates.
pub struct Snf {
    pub diag: Vec<BigInt>,
    pub right: Matrix,
    pub rank: usize,
}

pub fn smith_normal_form(input: &Matrix, cols: usize) -> Snf {
    let rows = input.len();
    let mut a = input.clone();
    for r in &a {
        debug_assert_eq!(r.len(), cols);
    }
    let mut v = identity(cols);
    let min_dim = rows.min(cols);
    let mut k = 0;

    while k < min_dim {
        let Some((pi, pj)) = pivot_min_abs(&a, k) else { break };
        a.swap(k, pi);
        if pj != k {
            swap_cols(&mut a, k, pj);
            swap_cols(&mut v, k, pj);
        }
        loop {
            // Clear column k with row operations. A nonzero remainder
            // becomes the new, strictly smaller pivot.
            let mut restart = false;
            for i in k + 1..rows {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[i][k], &a[k][k]);
                if !q.is_zero() {
                    for j in k..cols {
                        let t = &q * &a[k][j];
                        a[i][j] -= t;
                    }
                }
                if !a[i][k].is_zero() {
                    a.swap(i, k);
                    restart = true;
                    break;
                }
            }
            if restart {
                continue;
            }
            // Clear row k with column operations, tracked in V.
            for j in k + 1..cols {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[k][j], &a[k][k]);
                if !q.is_zero() {
                    for row in a.iter_mut() {
                        let t = &q * &row[k];
                        row[j] -= t;
                    }
                    for row in v.iter_mut() {
                        let t = &q * &row[k];
                        row[j] -= t;
                    }
                }
                if !a[k][j].is_zero() {
                    swap_cols(&mut a, k, j);
                    swap_cols(&mut v, k, j);
                    restart = true;
                    break;
                }
            }
            if restart {
                continue;
            }
            break;
        }
        // Make the pivot divide the whole remaining submatrix.
        let mut fixed = true;
        'outer: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(&a[i][j] % &a[k][k]).is_zero() {
                    // Add row i to row k and redo the elimination.
                    for jj in k..cols {
                        let t = a[i][jj].clone();
                        a[k][jj] += t;
                    }
                    fixed = false;
                    break 'outer;
                }
            }
        }
        if fixed {
            if a[k][k].is_negative() {
                for j in k..cols {
                    a[k][j] = -a[k][j].clone();
                }
            }
            k += 1;
        }
    }

    let rank = k;
    let diag: Vec<BigInt> = (0..rank).map(|i| a[i][i].clone()).collect();
    debug_assert!(diag.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    Snf { diag, right: v, rank }
}

fn pivot_min_abs(a: &Matrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.len() {
        for j in k..a[i].len() {
            if !a[i][j].is_zero() {
                match best {
                    Some((bi, bj)) if a[bi][bj].abs() <= a[i][j].abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
    }
    best
}

fn swap_cols(a: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Rounded division minimizing |a - q*b|.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r.abs() * BigInt::from(2) > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + BigInt::one()
        } else {
            q - BigInt::one()
        }
    } else {
        q
    }
}
