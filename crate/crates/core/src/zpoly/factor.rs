//! Desk-scale factorization over Z[X]: square-free decomposition (Yun),
//! Berlekamp over a small prime, linear multifactor Hensel lifting, and
//! bounded subset recombination. Everything is deterministic and every
//! emitted factor is certified irreducible by construction (the subset
//! search exhausts all modular factor combinations).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{eisenstein_at_point, eisenstein_classic, Factorization, IntPoly};
use crate::error::{Error, Result};
use crate::numtheory;

/// Caps for the factorizer. Inputs beyond these are rejected with
/// `FactorizationFailed` rather than silently timing out; callers can
/// always supply pre-factored input instead.
#[derive(Clone, Copy, Debug)]
pub struct FactorConfig {
    pub max_degree: usize,
    pub max_coeff_bits: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig { max_degree: 12, max_coeff_bits: 16384 }
    }
}

/// Factors a nonzero integer polynomial completely.
pub fn factor(p: &IntPoly) -> Result<Factorization> {
    factor_with_config(p, FactorConfig::default())
}

pub fn factor_with_config(p: &IntPoly, config: FactorConfig) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
    }
    let (c, pp) = p.primitive_parts();
    let sign = if c.is_negative() { -1 } else { 1 };
    let constant = if c.abs().is_one() {
        Default::default()
    } else {
        numtheory::factor_integer(&c)?
    };
    let mut out = Factorization { sign, constant, factors: vec![] };
    if pp.is_constant() {
        return Ok(out);
    }
    for (part, mult) in squarefree_decomposition(&pp) {
        if part.is_constant() {
            continue;
        }
        for irr in factor_squarefree(&part, config)? {
            out.factors.push((irr, mult));
        }
    }
    out.sort();
    debug_assert_eq!(&out.expand(), p);
    Ok(out)
}

/// Yun's square-free decomposition of a primitive polynomial over Z.
/// Returns pairwise coprime square-free parts with their multiplicities.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    if f.is_constant() {
        return vec![];
    }
    let df = f.derivative();
    let g = f.gcd(&df).primitive_parts().1;
    let mut c = f.try_div(&g).expect("gcd divides").primitive_parts().1;
    let mut d = df.try_div(&g).expect("gcd divides derivative").sub(&c.derivative());
    let mut out = Vec::new();
    let mut i = 1u32;
    while !c.is_constant() {
        let a = c.gcd(&d).primitive_parts().1;
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        c = c.try_div(&a).expect("squarefree step").primitive_parts().1;
        d = d.try_div(&a).expect("squarefree step").sub(&c.derivative());
        i += 1;
    }
    out
}

/// Factors a primitive square-free polynomial of degree >= 1 into
/// pairwise distinct primitive irreducibles.
fn factor_squarefree(f: &IntPoly, config: FactorConfig) -> Result<Vec<IntPoly>> {
    debug_assert!(f.is_primitive() && !f.is_constant());
    if f.degree() == 1 {
        return Ok(vec![f.clone()]);
    }
    if f.degree() > config.max_degree {
        return Err(Error::FactorizationFailed(format!(
            "degree {} exceeds the configured cap {}; supply pre-factored input",
            f.degree(),
            config.max_degree
        )));
    }
    let bits = f.coeffs().iter().map(|c| c.bits()).max().unwrap_or(0);
    if bits > config.max_coeff_bits {
        return Err(Error::FactorizationFailed(format!(
            "coefficient size {} bits exceeds the configured cap {}",
            bits, config.max_coeff_bits
        )));
    }
    if eisenstein_certificate(f) {
        return Ok(vec![f.clone()]);
    }
    zassenhaus(f)
}

/// Cheap irreducibility pre-check: Eisenstein in both orientations over
/// the small prime divisors of the relevant coefficient gcds.
fn eisenstein_certificate(f: &IntPoly) -> bool {
    let n = f.degree();
    let mut g_low = BigInt::zero();
    for i in 0..n {
        g_low = g_low.gcd(&f.coeff(i));
    }
    let mut g_high = BigInt::zero();
    for i in 1..=n {
        g_high = g_high.gcd(&f.coeff(i));
    }
    for g in [g_high, g_low] {
        if g.is_one() || g.is_zero() {
            continue;
        }
        if let Ok(primes) = numtheory::factor_integer(&g) {
            for &q in primes.keys() {
                if eisenstein_at_point(f, q) || eisenstein_classic(f, q) {
                    return true;
                }
            }
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Arithmetic over F_p with small p.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
struct ModPoly {
    p: u64,
    coeffs: Vec<u64>, // low-to-high, normalized
}

impl ModPoly {
    fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    fn from_int(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        ModPoly::new(
            p,
            f.coeffs()
                .iter()
                .map(|c| {
                    let r = c.mod_floor(&pb);
                    u64::try_from(r).expect("residue fits")
                })
                .collect(),
        )
    }

    fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: vec![] }
    }

    fn one(p: u64) -> Self {
        ModPoly { p, coeffs: vec![1] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(
            self.p,
            (0..n).map(|i| self.coeff(i) + self.p - other.coeff(i) % self.p).collect(),
        )
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % self.p as u128;
            }
        }
        ModPoly::new(self.p, out.into_iter().map(|c| c as u64).collect())
    }

    fn scale(&self, c: u64) -> Self {
        ModPoly::new(
            self.p,
            self.coeffs.iter().map(|&a| ((a as u128 * c as u128) % self.p as u128) as u64).collect(),
        )
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(*self.coeffs.last().unwrap(), self.p);
        self.scale(inv)
    }

    fn rem(&self, m: &Self) -> Self {
        assert!(!m.is_zero());
        let mut r = self.coeffs.clone();
        let dm = m.degree();
        let lead_inv = inv_mod(*m.coeffs.last().unwrap(), self.p);
        while r.len() > dm {
            let k = r.len() - 1;
            let c = ((r[k] as u128 * lead_inv as u128) % self.p as u128) as u64;
            if c != 0 {
                for i in 0..=dm {
                    let t = (c as u128 * m.coeffs[i] as u128) % self.p as u128;
                    let idx = k - dm + i;
                    r[idx] = ((r[idx] as u128 + self.p as u128 * self.p as u128 - t)
                        % self.p as u128) as u64;
                }
            }
            r.pop();
        }
        ModPoly::new(self.p, r)
    }

    fn divmod(&self, m: &Self) -> (Self, Self) {
        assert!(!m.is_zero());
        let mut r = self.coeffs.clone();
        let dm = m.degree();
        if r.len() <= dm {
            return (ModPoly::zero(self.p), self.clone());
        }
        let lead_inv = inv_mod(*m.coeffs.last().unwrap(), self.p);
        let mut q = vec![0u64; r.len() - dm];
        while r.len() > dm {
            let k = r.len() - 1;
            let c = ((r[k] as u128 * lead_inv as u128) % self.p as u128) as u64;
            q[k - dm] = c;
            if c != 0 {
                for i in 0..=dm {
                    let t = (c as u128 * m.coeffs[i] as u128) % self.p as u128;
                    let idx = k - dm + i;
                    r[idx] = ((r[idx] as u128 + self.p as u128 * self.p as u128 - t)
                        % self.p as u128) as u64;
                }
            }
            r.pop();
        }
        (ModPoly::new(self.p, q), ModPoly::new(self.p, r))
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(self.p);
        }
        ModPoly::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| ((c as u128 * (i as u128 % self.p as u128)) % self.p as u128) as u64)
                .collect(),
        )
    }

    /// x^e mod m by repeated squaring.
    fn x_pow_mod(e: u64, m: &Self) -> Self {
        let p = m.p;
        let mut base = ModPoly::new(p, vec![0, 1]).rem(m);
        let mut acc = ModPoly::one(p);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Inverse mod m via extended Euclid; self must be coprime to m.
    fn inv_mod_poly(&self, m: &Self) -> Self {
        let p = self.p;
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        assert_eq!(r0.degree(), 0, "not coprime");
        let inv = inv_mod(r0.coeff(0), p);
        t0.scale(inv).rem(m)
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: p prime.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------------
// Berlekamp factorization of a monic square-free polynomial over F_p.
// ---------------------------------------------------------------------------

fn berlekamp(f: &ModPoly) -> Vec<ModPoly> {
    let p = f.p;
    let n = f.degree();
    if n == 1 {
        return vec![f.clone()];
    }
    // Matrix of x^(jp) mod f, column j, in basis 1..x^(n-1).
    let mut m = vec![vec![0u64; n]; n];
    for j in 0..n {
        let xjp = ModPoly::x_pow_mod(j as u64 * p, f);
        for i in 0..n {
            m[i][j] = xjp.coeff(i);
        }
    }
    for i in 0..n {
        m[i][i] = (m[i][i] + p - 1) % p;
    }
    let kernel = nullspace_mod(&m, p);
    let r = kernel.len();
    if r == 1 {
        return vec![f.clone()];
    }
    let mut factors = vec![f.clone()];
    for v in kernel.iter() {
        if factors.len() == r {
            break;
        }
        let vp = ModPoly::new(p, v.clone());
        if vp.degree() == 0 {
            continue;
        }
        let mut next = Vec::new();
        for g in factors.into_iter() {
            if g.degree() <= 1 || next.len() + 1 == r {
                next.push(g);
                continue;
            }
            let mut pieces = vec![];
            let mut rest = g.clone();
            for c in 0..p {
                if rest.degree() == 0 {
                    break;
                }
                let shifted = vp.sub(&ModPoly::new(p, vec![c]));
                let h = rest.gcd(&shifted);
                if h.degree() > 0 && h.degree() < rest.degree() {
                    rest = rest.divmod(&h).0.monic();
                    pieces.push(h);
                }
            }
            pieces.push(rest);
            next.extend(pieces);
        }
        factors = next;
    }
    factors.sort_by(|a, b| (a.degree(), &a.coeffs).cmp(&(b.degree(), &b.coeffs)));
    factors
}

/// Kernel basis of a square matrix over F_p.
fn nullspace_mod(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let mut pivot_col_of_row = vec![usize::MAX; n];
    let mut row = 0;
    for col in 0..n {
        let mut piv = None;
        for r in row..n {
            if a[r][col] != 0 {
                piv = Some(r);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        a.swap(row, piv);
        let inv = inv_mod(a[row][col], p);
        for j in 0..n {
            a[row][j] = ((a[row][j] as u128 * inv as u128) % p as u128) as u64;
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let c = a[r][col];
                for j in 0..n {
                    let t = (c as u128 * a[row][j] as u128) % p as u128;
                    a[r][j] = ((a[r][j] as u128 + p as u128 * p as u128 - t) % p as u128) as u64;
                }
            }
        }
        pivot_col_of_row[row] = col;
        row += 1;
        if row == n {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row[..row].to_vec();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            let c = a[r][free];
            if c != 0 {
                v[pc] = p - c;
            }
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Hensel lifting and recombination.
// ---------------------------------------------------------------------------

/// Zassenhaus factorization of a primitive square-free f, degree >= 2.
fn zassenhaus(f: &IntPoly) -> Result<Vec<IntPoly>> {
    let p = choose_prime(f)?;
    let fp = ModPoly::from_int(f, p).monic();
    let modular = berlekamp(&fp);
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }

    // Coefficient bound for any irreducible factor scaled by lc(f):
    // 2^n * (n+1) * maxcoeff * |lc| is a safe Landau-Mignotte style bound.
    let n = f.degree();
    let maxc = f.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let lc = f.leading();
    let bound = (BigInt::one() << n) * BigInt::from(n as u64 + 1) * maxc * lc.abs();
    let target = &bound * BigInt::from(2);
    let mut modulus = BigInt::from(p);
    let mut k = 1u32;
    while modulus <= target {
        modulus *= BigInt::from(p);
        k += 1;
    }

    let lifted = hensel_lift(f, &modular, p, k);
    Ok(recombine(f, lifted, &modulus))
}

fn choose_prime(f: &IntPoly) -> Result<u64> {
    for p in numtheory::primes_up_to(2000) {
        if (f.leading() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = ModPoly::from_int(f, p).monic();
        let d = fp.derivative();
        if d.is_zero() {
            continue;
        }
        if fp.gcd(&d).degree() == 0 {
            return Ok(p);
        }
    }
    Err(Error::FactorizationFailed(
        "no suitable prime below 2000 gives a square-free reduction".into(),
    ))
}

/// Linear multifactor Hensel lift: returns monic g_i over Z with
/// coefficients in [0, p^k) such that prod g_i = f / lc(f) mod p^k.
fn hensel_lift(f: &IntPoly, modular: &[ModPoly], p: u64, k: u32) -> Vec<IntPoly> {
    let pb = BigInt::from(p);
    let modulus = pb.pow(k);
    let lc_inv = mod_inverse(&f.leading(), &modulus);
    // F = monic version of f mod p^k.
    let fmonic = IntPoly::new(
        f.coeffs().iter().map(|c| (c * &lc_inv).mod_floor(&modulus)).collect(),
    );

    // Bezout basis: sigma_i * prod_{j != i} g_j = 1 mod p.
    let sigmas: Vec<ModPoly> = (0..modular.len())
        .map(|i| {
            let mut eta = ModPoly::one(p);
            for (j, g) in modular.iter().enumerate() {
                if j != i {
                    eta = eta.mul(g).rem(&modular[i]);
                }
            }
            eta.inv_mod_poly(&modular[i])
        })
        .collect();

    let mut lifted: Vec<IntPoly> = modular
        .iter()
        .map(|g| IntPoly::new(g.coeffs.iter().map(|&c| BigInt::from(c)).collect()))
        .collect();

    let mut pm = pb.clone();
    for _ in 1..k {
        // error = (F - prod lifted) / p^m mod p
        let mut prod = IntPoly::one();
        for g in &lifted {
            prod = prod.mul(g);
            prod = IntPoly::new(
                prod.coeffs().iter().map(|c| c.mod_floor(&modulus)).collect(),
            );
        }
        let next_pm = &pm * &pb;
        let diff = fmonic.sub(&prod);
        let err_coeffs: Vec<u64> = (0..=diff.degree())
            .map(|i| {
                let c = diff.coeff(i).mod_floor(&next_pm);
                let q = &c / &pm;
                u64::try_from(q.mod_floor(&pb)).expect("residue fits")
            })
            .collect();
        let err = ModPoly::new(p, err_coeffs);
        if !err.is_zero() {
            for (i, g) in lifted.iter_mut().enumerate() {
                let delta = sigmas[i].mul(&err).rem(&modular[i]);
                let add = IntPoly::new(
                    delta.coeffs.iter().map(|&c| BigInt::from(c) * &pm).collect(),
                );
                *g = g.add(&add);
            }
        }
        pm = next_pm;
    }
    lifted
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// Centered representative in (-m/2, m/2].
fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * BigInt::from(2) > *m {
        r - m
    } else {
        r
    }
}

fn recombine(f: &IntPoly, lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut remaining = f.clone();
    let mut pool = lifted;
    let mut out = Vec::new();
    let mut size = 1usize;
    while 2 * size <= pool.len() {
        let mut found = true;
        while found {
            found = false;
            let combos = combinations(pool.len(), size);
            for combo in combos {
                let lc = remaining.leading();
                let mut cand = IntPoly::constant(lc.clone());
                for &i in &combo {
                    cand = cand.mul(&pool[i]);
                    cand = IntPoly::new(
                        cand.coeffs().iter().map(|c| c.mod_floor(modulus)).collect(),
                    );
                }
                let cand = IntPoly::new(
                    cand.coeffs().iter().map(|c| symmetric(c, modulus)).collect(),
                )
                .primitive_parts()
                .1;
                if cand.is_constant() {
                    continue;
                }
                if let Some(q) = remaining.try_div(&cand) {
                    out.push(cand);
                    remaining = q.primitive_parts().1;
                    for &i in combo.iter().rev() {
                        pool.remove(i);
                    }
                    found = true;
                    break;
                }
            }
            if 2 * size > pool.len() {
                break;
            }
        }
        size += 1;
    }
    if !remaining.is_constant() {
        out.push(remaining);
    }
    out.sort_by(|a, b| (a.degree(), a.coeffs()).cmp(&(b.degree(), b.coeffs())));
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn factors_difference_of_squares() {
        let f = poly(&[-1, 0, 1]); // X^2 - 1
        let fac = factor(&f).unwrap();
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn splits_content() {
        let f = poly(&[0, 12]); // 12X
        let fac = factor(&f).unwrap();
        assert_eq!(fac.constant[&2], 2);
        assert_eq!(fac.constant[&3], 1);
        assert_eq!(fac.factors, vec![(IntPoly::x(), 1)]);
    }

    #[test]
    fn factors_the_big_linear_product() {
        // (95095X+2)(95095X+3) expanded
        let a = poly(&[2, 95095]);
        let b = poly(&[3, 95095]);
        let f = a.mul(&b);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.constant.is_empty());
        assert!(fac.factors.iter().any(|(g, _)| *g == a));
        assert!(fac.factors.iter().any(|(g, _)| *g == b));
    }

    #[test]
    fn irreducible_quadratic_stays_whole() {
        let f = poly(&[1, 1, 1]); // X^2+X+1
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(f, 1)]);
    }

    #[test]
    fn multiplicities_via_squarefree() {
        // X(X-1)^2(X-2)
        let f = poly(&[0, 1]).mul(&poly(&[-1, 1]).pow(2)).mul(&poly(&[-2, 1]));
        let fac = factor(&f).unwrap();
        assert_eq!(fac.expand(), f);
        let mults: Vec<u32> = fac.factors.iter().map(|(_, m)| *m).collect();
        assert_eq!(fac.factors.len(), 3);
        assert_eq!(mults.iter().sum::<u32>(), 4);
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // (X^2-2)(X^2-3): irreducible quadratics that split modulo many primes.
        let f = poly(&[-2, 0, 1]).mul(&poly(&[-3, 0, 1]));
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn degree_cap_enforced() {
        let mut f = IntPoly::one();
        for k in 0..13 {
            f = f.mul(&poly(&[-(k as i64), 1]));
        }
        assert!(matches!(
            factor(&f),
            Err(Error::FactorizationFailed(_))
        ));
    }

    #[test]
    fn eisenstein_shortcut_on_big_quartic() {
        // 6Xf + 7 for f = (aX+1)(aX+2)(aX+3), a = 7*13*19*31*37*43*67.
        let a: i64 = 7 * 13 * 19 * 31 * 37 * 43 * 67;
        let lin = |c: i64| IntPoly::new(vec![BigInt::from(c), BigInt::from(a)]);
        let f3 = lin(1).mul(&lin(2)).mul(&lin(3));
        let h = IntPoly::x().mul(&f3).scale(&BigInt::from(6)).add(&poly(&[7]));
        assert!(eisenstein_certificate(&h));
        let fac = factor(&h).unwrap();
        assert_eq!(fac.factors, vec![(h, 1)]);
    }
}
