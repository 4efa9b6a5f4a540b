//! Exact arithmetic on integer and rational-coefficient polynomials:
//! fixed divisors, content/primitive parts, gcd over Z[X], and desk-scale
//! factorization into irreducibles.

mod factor;
pub mod parse;

pub use factor::{factor, factor_with_config, FactorConfig};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory;

/// Dense integer polynomial, coefficients low-to-high degree.
/// The zero polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial X.
    pub fn x() -> Self {
        IntPoly::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for constants including the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// gcd of coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient, plus the signed
    /// content so that `self = content * primitive`.
    pub fn primitive_parts(&self) -> (BigInt, IntPoly) {
        if self.is_zero() {
            return (BigInt::zero(), IntPoly::zero());
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        let pp = IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect());
        (c, pp)
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one() && self.leading().is_positive()
    }

    /// Division when the result is known to be integral: long division over Q
    /// verified exact. Returns (quotient, remainder) with remainder the true
    /// remainder over Q scaled back only when zero; used with zero remainder.
    fn pseudo_div_exact(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero());
        let mut rem = self.coeffs.clone();
        let d = other.degree();
        if self.is_zero() || self.degree() < d {
            return (IntPoly::zero(), self.clone());
        }
        let lead = other.leading();
        let mut q = vec![BigInt::zero(); self.degree() - d + 1];
        for k in (0..q.len()).rev() {
            let top = rem[k + d].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lead);
            if !r.is_zero() {
                // Not exactly divisible at this step: bail with nonzero remainder.
                return (IntPoly::zero(), IntPoly::one());
            }
            q[k] = c.clone();
            for i in 0..=d {
                let t = &c * &other.coeffs[i];
                rem[k + i] -= t;
            }
        }
        (IntPoly::new(q), IntPoly::new(rem))
    }

    /// Tests exact divisibility in Z[X] and returns the quotient.
    pub fn try_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let (q, r) = self.pseudo_div_exact(other);
        if r.is_zero() && &q.mul(other) == self {
            Some(q)
        } else {
            None
        }
    }

    /// Polynomial gcd over Z[X] via the primitive PRS, result primitive
    /// with positive leading coefficient (times the content gcd).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            let (_, pp) = other.primitive_parts();
            return if other.is_zero() { IntPoly::zero() } else { pp.scale(&other.content()) };
        }
        if other.is_zero() {
            return self.gcd_norm();
        }
        let cg = self.content().gcd(&other.content());
        let (_, mut a) = self.primitive_parts();
        let (_, mut b) = other.primitive_parts();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = match r {
                Some(r) if !r.is_zero() => r.primitive_parts().1,
                _ => IntPoly::zero(),
            };
        }
        a.primitive_parts().1.scale(&cg)
    }

    fn gcd_norm(&self) -> Self {
        let (c, pp) = self.primitive_parts();
        pp.scale(&c.abs())
    }

    /// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b.
    fn pseudo_rem(&self, other: &Self) -> Option<Self> {
        if self.degree() < other.degree() {
            return Some(self.clone());
        }
        let k = (self.degree() - other.degree() + 1) as u32;
        let scaled = self.scale(&other.leading().pow(k));
        let (_, r) = scaled.pseudo_div_exact_force(other);
        Some(r)
    }

    /// Long division that is guaranteed exact because the dividend was
    /// pre-scaled by a power of the divisor's leading coefficient.
    fn pseudo_div_exact_force(&self, other: &Self) -> (Self, Self) {
        let mut rem = self.coeffs.clone();
        let d = other.degree();
        if self.is_zero() || self.degree() < d {
            return (IntPoly::zero(), self.clone());
        }
        let lead = other.leading();
        let mut q = vec![BigInt::zero(); self.degree() - d + 1];
        for k in (0..q.len()).rev() {
            let top = rem[k + d].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lead);
            debug_assert!(r.is_zero());
            q[k] = c.clone();
            for i in 0..=d {
                let t = &c * &other.coeffs[i];
                rem[k + i] -= t;
            }
        }
        (IntPoly::new(q), IntPoly::new(rem))
    }

    /// gcd of p(0), ..., p(deg p): equals gcd{p(c) : c in Z} by the
    /// finite-difference (binomial basis) argument. Result positive.
    pub fn fixed_divisor(&self) -> BigInt {
        assert!(!self.is_zero(), "fixed divisor of the zero polynomial");
        let mut g = BigInt::zero();
        for i in 0..=self.degree() {
            g = g.gcd(&self.eval(&BigInt::from(i)));
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Substitute X -> X + shift.
    pub fn shift(&self, shift: &BigInt) -> Self {
        let mut acc = IntPoly::zero();
        let sub = IntPoly::new(vec![shift.clone(), BigInt::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&sub).add(&IntPoly::constant(c.clone()));
        }
        acc
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "X")?;
                } else {
                    write!(f, "X^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

/// Rational-coefficient polynomial as numerator / positive denominator,
/// normalized so gcd(content(numerator), denominator) = 1.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatPoly {
    num: IntPoly,
    den: BigInt,
}

impl RatPoly {
    pub fn new(num: IntPoly, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        let mut num = num;
        let mut den = den;
        if den.is_negative() {
            num = num.neg();
            den = -den;
        }
        if num.is_zero() {
            return Ok(RatPoly { num, den: BigInt::one() });
        }
        let g = num.content().gcd(&den);
        if !g.is_one() {
            num = IntPoly::new(num.coeffs.iter().map(|c| c / &g).collect());
            den /= &g;
        }
        Ok(RatPoly { num, den })
    }

    pub fn from_int(p: IntPoly) -> Self {
        RatPoly { num: p, den: BigInt::one() }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn degree(&self) -> usize {
        self.num.degree()
    }

    pub fn eval(&self, x: &BigInt) -> BigRational {
        BigRational::new(self.num.eval(x), self.den.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatPoly::new(self.num.mul(&other.num), &self.den * &other.den)
            .expect("nonzero denominators")
    }

    /// True iff p(x) is an integer for every integer x, decided by checking
    /// p(0), ..., p(deg p): in the binomial basis the coefficients are
    /// integer combinations of those values, and binomial coefficients are
    /// integer-valued.
    pub fn is_integer_valued(&self) -> bool {
        if self.num.is_zero() {
            return true;
        }
        (0..=self.degree())
            .all(|i| (self.num.eval(&BigInt::from(i)) % &self.den).is_zero())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

/// Complete factorization over Z[X]: sign, prime-exponent map of the
/// constant, and pairwise non-associated primitive irreducibles with
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub constant: BTreeMap<u64, u32>,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    pub fn unit() -> Self {
        Factorization { sign: 1, constant: BTreeMap::new(), factors: vec![] }
    }

    /// Re-multiplies all parts.
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(BigInt::from(self.sign) * numtheory::unfactor(&self.constant));
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }

    /// Merges another factorization into this one (product of the two).
    pub fn merge(&mut self, other: &Factorization) {
        self.sign *= other.sign;
        for (&p, &e) in &other.constant {
            *self.constant.entry(p).or_insert(0) += e;
        }
        for (f, m) in &other.factors {
            match self.factors.iter_mut().find(|(g, _)| g == f) {
                Some((_, mm)) => *mm += m,
                None => self.factors.push((f.clone(), *m)),
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Factorization::unit();
        if e == 0 {
            return out;
        }
        out.sign = if self.sign < 0 && e % 2 == 1 { -1 } else { 1 };
        for (&p, &k) in &self.constant {
            out.constant.insert(p, k * e);
        }
        out.factors = self.factors.iter().map(|(f, m)| (f.clone(), m * e)).collect();
        out
    }

    /// Canonical order: factors sorted by (degree, coefficients).
    pub fn sort(&mut self) {
        self.factors.sort_by(|(a, _), (b, _)| {
            a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs()))
        });
    }
}

/// Factors a parsed input without expanding across its product structure:
/// each structural part is factored on its own and the results are merged
/// in appearance order. Returns the factorization of the normalized
/// numerator together with the normalized positive denominator.
pub fn factor_parsed(parsed: &parse::ParsedPoly) -> Result<(Factorization, BigInt)> {
    if parsed.poly.is_zero() {
        return Err(Error::InvalidInput("cannot analyze the zero polynomial".into()));
    }
    let mut acc = Factorization::unit();
    if parsed.constant_num.is_negative() {
        acc.sign = -1;
    }
    let c_abs = parsed.constant_num.abs();
    if !c_abs.is_one() {
        acc.constant = numtheory::factor_integer(&c_abs)?;
    }
    for (part, e) in &parsed.parts {
        let f = factor(part)?;
        acc.merge(&f.pow(*e));
    }
    // Reconcile with the normalized form: the raw product equals
    // numerator * (raw denominator / normalized denominator).
    let g = &parsed.constant_den / parsed.poly.denominator();
    if !g.is_one() {
        for (&p, &e) in &numtheory::factor_integer(&g)? {
            let slot = acc.constant.get_mut(&p).ok_or_else(|| {
                Error::InvalidInput("denominator reduction mismatch".into())
            })?;
            *slot = slot.checked_sub(e).ok_or_else(|| {
                Error::InvalidInput("denominator reduction mismatch".into())
            })?;
        }
        acc.constant.retain(|_, e| *e > 0);
    }
    debug_assert_eq!(&acc.expand(), parsed.poly.numerator());
    Ok((acc, parsed.poly.denominator().clone()))
}

/// Irreducibility criterion of Eisenstein type with the roles of the
/// constant and leading coefficients swapped: returns true when
/// q does not divide p(0), q divides every nonconstant coefficient, and
/// q^2 does not divide the leading coefficient. True implies p is
/// irreducible in Z[X]; false only means the criterion does not apply.
pub fn eisenstein_at_point(p: &IntPoly, q: u64) -> bool {
    if p.degree() < 1 || !p.is_primitive() {
        return false;
    }
    let qb = BigInt::from(q);
    if (p.coeff(0) % &qb).is_zero() {
        return false;
    }
    for i in 1..=p.degree() {
        if !(p.coeff(i) % &qb).is_zero() {
            return false;
        }
    }
    let q2 = &qb * &qb;
    !(p.leading() % q2).is_zero()
}

/// Classic Eisenstein at q: q | all coefficients below the leading one,
/// q does not divide the leading coefficient, q^2 does not divide p(0).
pub fn eisenstein_classic(p: &IntPoly, q: u64) -> bool {
    if p.degree() < 1 || !p.is_primitive() {
        return false;
    }
    let qb = BigInt::from(q);
    if (p.leading() % &qb).is_zero() {
        return false;
    }
    for i in 0..p.degree() {
        if !(p.coeff(i) % &qb).is_zero() {
            return false;
        }
    }
    let q2 = &qb * &qb;
    !(p.coeff(0) % q2).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xm(k: i64) -> IntPoly {
        // X - k
        IntPoly::from_i64(&[-k, 1])
    }

    #[test]
    fn eval_examples() {
        let p = xm(0).mul(&xm(1)).mul(&xm(2));
        assert_eq!(p.eval(&BigInt::from(4)), BigInt::from(24));
        let q = RatPoly::new(xm(0).mul(&xm(1)), BigInt::from(2)).unwrap();
        assert_eq!(q.eval(&BigInt::from(3)), BigRational::from(BigInt::from(3)));
        let z = RatPoly::from_int(IntPoly::zero());
        assert_eq!(z.eval(&BigInt::from(17)), BigRational::from(BigInt::zero()));
    }

    #[test]
    fn integer_valued() {
        let half = BigInt::from(2);
        assert!(RatPoly::new(xm(0).mul(&xm(1)), half.clone()).unwrap().is_integer_valued());
        assert!(!RatPoly::new(IntPoly::x(), half).unwrap().is_integer_valued());
        let six = BigInt::from(6);
        assert!(RatPoly::new(xm(0).mul(&xm(1)).mul(&xm(2)), six).unwrap().is_integer_valued());
    }

    #[test]
    fn fixed_divisor_examples() {
        let p = xm(0).mul(&xm(1)).mul(&xm(2));
        assert_eq!(p.fixed_divisor(), BigInt::from(6));
        assert_eq!(IntPoly::from_i64(&[-5]).fixed_divisor(), BigInt::from(5));
        let q = xm(0).mul(&xm(1).pow(2)).mul(&xm(2));
        assert_eq!(q.fixed_divisor(), BigInt::from(12));
    }

    #[test]
    fn fixed_divisor_matches_brute_force() {
        let polys = vec![
            xm(0).mul(&xm(1)).mul(&xm(2)),
            xm(0).mul(&xm(1).pow(3)).mul(&xm(2)),
            IntPoly::from_i64(&[1, 0, 1]),
            IntPoly::from_i64(&[6, 11, 6, 1]),
            IntPoly::from_i64(&[2, 2, 2]),
        ];
        for p in polys {
            let mut g = BigInt::zero();
            for c in -50..=50 {
                g = g.gcd(&p.eval(&BigInt::from(c)));
            }
            assert_eq!(p.fixed_divisor(), g, "poly {}", p);
        }
    }

    #[test]
    fn fixed_divisor_identities() {
        // d(p^k) = d(p)^k and d(a*p) = |a|*d(p)
        let p = xm(0).mul(&xm(1)).mul(&xm(2));
        let d = p.fixed_divisor();
        for k in 1..=4u32 {
            assert_eq!(p.pow(k).fixed_divisor(), d.clone().pow(k));
        }
        let a = BigInt::from(-15);
        assert_eq!(p.scale(&a).fixed_divisor(), a.abs() * &d);
    }

    #[test]
    fn gcd_over_zx() {
        let a = xm(1).mul(&xm(2)).scale(&BigInt::from(6));
        let b = xm(1).mul(&xm(3)).scale(&BigInt::from(4));
        let g = a.gcd(&b);
        assert_eq!(g, xm(1).scale(&BigInt::from(2)));
    }

    #[test]
    fn eisenstein_variants() {
        // 2X^2+2X+1: reversed criterion applies at q=2
        assert!(eisenstein_at_point(&IntPoly::from_i64(&[1, 2, 2]), 2));
        // X+1 at q=2: leading (nonconstant) coefficient 1 not divisible
        assert!(!eisenstein_at_point(&IntPoly::from_i64(&[1, 1]), 2));
        // classic: X^2+2X+2 at q=2
        assert!(eisenstein_classic(&IntPoly::from_i64(&[2, 2, 1]), 2));
    }

    #[test]
    fn shift_and_display() {
        let p = xm(1).pow(2);
        assert_eq!(p.shift(&BigInt::from(1)), IntPoly::from_i64(&[0, 0, 1]));
        assert_eq!(format!("{}", xm(2).mul(&xm(-1))), "X^2 - X - 2");
    }
}
