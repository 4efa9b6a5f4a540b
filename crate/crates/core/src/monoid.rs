//! The reduced-monoid model of [[f]]: analyzed generator context, canonical
//! element representation, membership, and complete atom enumeration.
//!
//! Elements are written (x, m): x the exponent vector over the distinct
//! irreducible factors, m the exponent map of the rational constant over
//! the constant-atom primes, subject to m_p >= -e_p(x).

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::cones;
use crate::error::{Error, Result};
use crate::numtheory;
use crate::profiles::{self, ProfileSet};
use crate::zpoly::{factor, Factorization, IntPoly, RatPoly};

/// Analyzed generator: distinct irreducible factors, constant part,
/// constant-atom primes and their minimal valuation profiles.
#[derive(Clone, Debug)]
pub struct FContext {
    pub factors: Vec<IntPoly>,
    pub constant: BTreeMap<u64, u32>,
    pub primes: Vec<u64>,
    pub profile_sets: BTreeMap<u64, ProfileSet>,
}

impl FContext {
    /// Builds the context of the monoid generated by
    /// constant * prod factors (multiplicities do not change the monoid).
    pub fn new(
        factors: Vec<IntPoly>,
        constant: BTreeMap<u64, u32>,
        depth_cap: u32,
    ) -> Result<FContext> {
        for f in &factors {
            if !f.is_primitive() || f.is_constant() {
                return Err(Error::InvalidInput(format!(
                    "context factors must be nonconstant primitive irreducibles, got {}",
                    f
                )));
            }
        }
        let primes = profiles::candidate_primes(&factors, &constant)?;
        let mut profile_sets = BTreeMap::new();
        for &p in &primes {
            profile_sets.insert(p, profiles::minimal_profiles(&factors, p, depth_cap)?);
        }
        Ok(FContext { factors, constant, primes, profile_sets })
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// e_p(x) = v_p(d(prod f_i^{x_i})).
    pub fn e_exponent(&self, p: u64, x: &[u32]) -> u64 {
        self.profile_sets[&p].e_exponent(x)
    }

    /// max_w <w, x>: together with v_p of the constant this is v_p(e_f).
    pub fn max_form(&self, p: u64, x: &[u32]) -> u64 {
        self.profile_sets[&p].max_form(x)
    }

    /// v_p(d(c * prod f_i^{x_i})) for every prime, as a prime-exponent map.
    pub fn fixed_divisor_of_product(&self, x: &[u32], c: &BigInt) -> Result<BTreeMap<u64, u32>> {
        let mut out = numtheory::factor_integer(c)?;
        for &p in &self.primes {
            let e = self.e_exponent(p, x);
            if e > 0 {
                *out.entry(p).or_insert(0) += u32::try_from(e).expect("desk scale");
            }
        }
        out.retain(|_, e| *e > 0);
        Ok(out)
    }

    /// v_p(e_f(g)) for every p: the LCM exponent sup_h v_p(d(gh)/d(h)),
    /// computed through the profile representation as
    /// v_p(constant of g) + max_w <w, x_g>.
    pub fn e_f_exponent(&self, g: &MonadicElement) -> BTreeMap<u64, u32> {
        let mut out = BTreeMap::new();
        for &p in &self.primes {
            let v = g.m_at(p) + self.max_form(p, &g.x) as i64;
            debug_assert!(v >= 0);
            if v > 0 {
                out.insert(p, v as u32);
            }
        }
        out
    }

    /// True iff d(gh) = d(g)d(h) on the whole monoid: every profile set is
    /// a single linear form. For integer generators this is equivalent to
    /// the monoid being factorial.
    pub fn d_is_multiplicative(&self) -> bool {
        self.profile_sets.values().all(ProfileSet::is_linear)
    }

    /// The expanded generator polynomial of the ambient monoid.
    pub fn generator_poly(&self, multiplicities: &[u32]) -> IntPoly {
        let mut acc = IntPoly::constant(numtheory::unfactor(&self.constant));
        for (f, &m) in self.factors.iter().zip(multiplicities) {
            acc = acc.mul(&f.pow(m));
        }
        acc
    }
}

/// Canonical element of the reduced monoid: factor exponents plus the
/// constant exponent map (normalized, no zero entries).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonadicElement {
    pub x: Vec<u32>,
    pub m: BTreeMap<u64, i64>,
}

impl MonadicElement {
    pub fn new(x: Vec<u32>, mut m: BTreeMap<u64, i64>) -> Self {
        m.retain(|_, v| *v != 0);
        MonadicElement { x, m }
    }

    pub fn m_at(&self, p: u64) -> i64 {
        self.m.get(&p).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let x = self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect();
        let mut m = self.m.clone();
        for (&p, &v) in &other.m {
            *m.entry(p).or_insert(0) += v;
        }
        MonadicElement::new(x, m)
    }

    /// The element as a rational polynomial over the context factors.
    pub fn to_rat_poly(&self, ctx: &FContext) -> RatPoly {
        let mut num = IntPoly::one();
        let mut den = BigInt::one();
        for (f, &e) in ctx.factors.iter().zip(&self.x) {
            num = num.mul(&f.pow(e));
        }
        for (&p, &v) in &self.m {
            if v >= 0 {
                num = num.scale(&BigInt::from(p).pow(v as u32));
            } else {
                den *= BigInt::from(p).pow((-v) as u32);
            }
        }
        RatPoly::new(num, den).expect("positive denominator")
    }
}

/// Ambient analysis input: a factorization and the (positive) denominator
/// of the generator. Produces the context plus the generator's canonical
/// element; fails with NotIntegerValued when the generator is not in
/// Int(Z).
pub fn build_context(
    fact: &Factorization,
    denominator: &BigInt,
    depth_cap: u32,
) -> Result<(FContext, MonadicElement)> {
    let factors: Vec<IntPoly> = fact.factors.iter().map(|(f, _)| f.clone()).collect();
    let mults: Vec<u32> = fact.factors.iter().map(|(_, m)| *m).collect();
    let ctx = FContext::new(factors, fact.constant.clone(), depth_cap)?;

    let den_primes = numtheory::factor_integer(denominator)?;
    let mut m: BTreeMap<u64, i64> = fact.constant.iter().map(|(&p, &e)| (p, e as i64)).collect();
    for (&p, &e) in &den_primes {
        *m.entry(p).or_insert(0) -= e as i64;
    }
    for (&p, &v) in &m {
        if v < 0 {
            if !ctx.primes.contains(&p) {
                return Err(Error::NotIntegerValued(format!(
                    "denominator prime {} does not divide the fixed divisor",
                    p
                )));
            }
            let e = ctx.e_exponent(p, &mults) as i64;
            if v < -e {
                return Err(Error::NotIntegerValued(format!(
                    "v_{}(constant) = {} but e_{}(x) = {}",
                    p, v, p, e
                )));
            }
        }
    }
    Ok((ctx, MonadicElement::new(mults, m)))
}

/// Convenience: build a context straight from a rational polynomial.
pub fn build_context_from_poly(
    poly: &RatPoly,
    depth_cap: u32,
) -> Result<(FContext, MonadicElement)> {
    if poly.is_zero() {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    let fact = factor(poly.numerator())?;
    build_context(&fact, poly.denominator(), depth_cap)
}

/// Decides membership of g in the ambient monoid and returns the
/// canonical element. The primitive part of g must factor over the
/// context factors and the constant support must lie in the constant
/// atoms.
pub fn membership(ctx: &FContext, g: &RatPoly) -> Result<Option<MonadicElement>> {
    if g.is_zero() {
        return Ok(None);
    }
    let fact = factor(g.numerator())?;
    let mut x = vec![0u32; ctx.num_factors()];
    for (irr, mult) in &fact.factors {
        match ctx.factors.iter().position(|f| f == irr) {
            Some(i) => x[i] = *mult,
            None => return Ok(None),
        }
    }
    let mut m: BTreeMap<u64, i64> = fact.constant.iter().map(|(&p, &e)| (p, e as i64)).collect();
    for (&p, &e) in &numtheory::factor_integer(g.denominator())? {
        *m.entry(p).or_insert(0) -= e as i64;
    }
    for (&p, &v) in &m {
        if v == 0 {
            continue;
        }
        if !ctx.primes.contains(&p) {
            return Ok(None);
        }
        if v < -(ctx.e_exponent(p, &x) as i64) {
            return Ok(None);
        }
    }
    Ok(Some(MonadicElement::new(x, m)))
}

/// True iff x admits no decomposition x = y + z with both parts nonzero
/// and e_p additive across the split for every constant-atom prime.
pub fn is_f_irreducible(ctx: &FContext, x: &[u32]) -> bool {
    assert!(x.iter().any(|&c| c > 0), "the zero vector is not classified");
    let splitting: Vec<&ProfileSet> = ctx
        .profile_sets
        .values()
        .filter(|ps| !ps.is_linear())
        .collect();
    let mut y = vec![0u32; x.len()];
    loop {
        // advance mixed-radix counter
        let mut i = 0;
        loop {
            if i == x.len() {
                return true;
            }
            if y[i] < x[i] {
                y[i] += 1;
                break;
            }
            y[i] = 0;
            i += 1;
        }
        if y == x {
            continue;
        }
        let z: Vec<u32> = x.iter().zip(&y).map(|(a, b)| a - b).collect();
        if splitting
            .iter()
            .all(|ps| ps.e_exponent(&y) + ps.e_exponent(&z) == ps.e_exponent(x))
        {
            return false;
        }
    }
}

/// Complete atom data with its completeness certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomSet {
    /// Constant atoms: exactly the primes dividing d(f).
    pub constant_atoms: Vec<u64>,
    /// Non-constant atoms, each with m_p = -e_p(x).
    pub poly_atoms: Vec<MonadicElement>,
    /// True when the cone-refinement degree bound certifies completeness.
    pub certified: bool,
    /// The degree bound that was enumerated.
    pub degree_bound: u32,
}

impl AtomSet {
    pub fn len(&self) -> usize {
        self.constant_atoms.len() + self.poly_atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Atom by unified id: constants first (ascending), then poly atoms.
    pub fn atom_element(&self, ctx: &FContext, id: usize) -> MonadicElement {
        if id < self.constant_atoms.len() {
            let p = self.constant_atoms[id];
            MonadicElement::new(vec![0; ctx.num_factors()], BTreeMap::from([(p, 1)]))
        } else {
            self.poly_atoms[id - self.constant_atoms.len()].clone()
        }
    }
}

pub enum AtomMode {
    /// Cone-refinement bound; result carries a completeness certificate.
    Certified,
    /// Enumerate up to a caller-chosen degree; never certified.
    ManualBound(u32),
}

/// Enumerates all atoms of the monoid.
///
/// Completeness in certified mode: for every choice of one profile per
/// nonlinear profile set, the region where those profiles attain the
/// minima is a rational cone on which every e_p is linear, so each atom
/// is an irreducible lattice point of one such cone and its degree is
/// bounded by the sum of the coordinate sums of the cone's extreme rays.
pub fn atoms(ctx: &FContext, mode: AtomMode) -> Result<AtomSet> {
    let n = ctx.num_factors();
    let constant_atoms = ctx.primes.clone();
    if n == 0 {
        return Ok(AtomSet { constant_atoms, poly_atoms: vec![], certified: true, degree_bound: 0 });
    }

    match mode {
        AtomMode::Certified => {
            let comps = components(ctx, n);
            let mut all: Vec<(Vec<u32>, u32)> = Vec::new();
            let mut bound_used = 1u32;
            for comp in comps {
                let (atoms_local, bound) = component_atoms(ctx, &comp)?;
                bound_used = bound_used.max(bound);
                for a in atoms_local {
                    let mut full = vec![0u32; n];
                    for (ci, &coord) in comp.iter().enumerate() {
                        full[coord] = a[ci];
                    }
                    let deg = full.iter().sum();
                    all.push((full, deg));
                }
            }
            Ok(finish_atoms(ctx, all, true, bound_used))
        }
        AtomMode::ManualBound(bound) => {
            let mut found: Vec<Vec<u32>> = Vec::new();
            for deg in 1..=bound {
                for x in vectors_of_degree(n, deg) {
                    if knockout_irreducible(ctx, &found, &x) {
                        found.push(x);
                    }
                }
            }
            if found.iter().any(|x| x.iter().sum::<u32>() == bound) {
                return Err(Error::AtomBoundExceeded { bound });
            }
            let all = found
                .into_iter()
                .map(|x| {
                    let deg = x.iter().sum();
                    (x, deg)
                })
                .collect();
            Ok(finish_atoms(ctx, all, false, bound))
        }
    }
}

fn finish_atoms(
    ctx: &FContext,
    mut found: Vec<(Vec<u32>, u32)>,
    certified: bool,
    degree_bound: u32,
) -> AtomSet {
    // Order atoms by total degree, then lexicographically descending
    // (so (1,0,0) precedes (0,1,0)).
    found.sort_by(|(xa, da), (xb, db)| da.cmp(db).then_with(|| xb.cmp(xa)));
    let poly_atoms = found
        .into_iter()
        .map(|(x, _)| {
            let mut m = BTreeMap::new();
            for &p in &ctx.primes {
                let e = ctx.e_exponent(p, &x);
                if e > 0 {
                    m.insert(p, -(e as i64));
                }
            }
            MonadicElement::new(x, m)
        })
        .collect();
    AtomSet {
        constant_atoms: ctx.primes.clone(),
        poly_atoms,
        certified,
        degree_bound,
    }
}

/// Coordinate components glued by nonlinear profile supports; e_p is
/// additive across distinct components for every p, so atoms never mix
/// components.
fn components(ctx: &FContext, n: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for ps in ctx.profile_sets.values() {
        if ps.is_linear() {
            continue;
        }
        let support: Vec<usize> = (0..n)
            .filter(|&i| ps.profiles.iter().any(|w| w[i] > 0))
            .collect();
        for pair in support.windows(2) {
            let (a, b) = (find(&mut parent, pair[0]), find(&mut parent, pair[1]));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

/// Atoms supported on one component, in component-local coordinates,
/// together with the certified degree bound that was enumerated.
fn component_atoms(ctx: &FContext, comp: &[usize]) -> Result<(Vec<Vec<u32>>, u32)> {
    let m = comp.len();
    // Profile sets that split on this component, restricted to it.
    let local_sets: Vec<Vec<Vec<u32>>> = ctx
        .profile_sets
        .values()
        .filter(|ps| !ps.is_linear())
        .filter(|ps| ps.profiles.iter().any(|w| comp.iter().any(|&i| w[i] > 0)))
        .map(|ps| {
            ps.profiles
                .iter()
                .map(|w| comp.iter().map(|&i| w[i]).collect())
                .collect()
        })
        .collect();
    if local_sets.is_empty() {
        // Never glued: singleton coordinate, whose only atom is the unit.
        debug_assert_eq!(m, 1);
        return Ok((vec![vec![1]], 1));
    }

    let bound = cone_degree_bound(&local_sets, m)?;
    let mut found: Vec<Vec<u32>> = Vec::new();
    for deg in 1..=bound {
        for x in vectors_of_degree(m, deg) {
            if knockout_local(&local_sets, &found, &x) {
                found.push(x);
            }
        }
    }
    Ok((found, bound))
}

/// Atom degree bound: any atom of a cone is a combination of at most m
/// linearly independent extreme rays with all coefficients below one, so
/// its degree is below the sum of the m largest ray degrees. The bound is
/// the maximum of that quantity over the refined cones.
fn cone_degree_bound(local_sets: &[Vec<Vec<u32>>], m: usize) -> Result<u32> {
    let mut best = 1u64;
    let mut choice = vec![0usize; local_sets.len()];
    loop {
        let mut ineqs = cones::orthant_rows(m);
        for (sets, &pick) in local_sets.iter().zip(&choice) {
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
        let rays = cones::extreme_rays(&ineqs, &[], m);
        let mut norms: Vec<u64> = rays
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| u64::try_from(c.abs()).expect("small ray coordinate"))
                    .sum::<u64>()
            })
            .collect();
        norms.sort_unstable_by(|a, b| b.cmp(a));
        let total: u64 = norms.iter().take(m).sum();
        best = best.max(total);
        // advance the cone choice
        let mut i = 0;
        loop {
            if i == choice.len() {
                let bound = u32::try_from(best)
                    .map_err(|_| Error::InvalidInput("cone degree bound overflow".into()))?;
                return Ok(bound);
            }
            choice[i] += 1;
            if choice[i] < local_sets[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn e_local(sets: &[Vec<Vec<u32>>], idx: usize, x: &[u32]) -> u64 {
    sets[idx]
        .iter()
        .map(|w| profiles::dot(w, x))
        .min()
        .expect("nonempty")
}

/// Reducibility knockout: x is reducible iff some already-found atom y
/// splits it additively; every reducible vector has such a split with an
/// atom part of smaller degree.
fn knockout_local(sets: &[Vec<Vec<u32>>], found: &[Vec<u32>], x: &[u32]) -> bool {
    'cand: for y in found {
        if !y.iter().zip(x).all(|(a, b)| a <= b) || y.as_slice() == x {
            continue;
        }
        let z: Vec<u32> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        for idx in 0..sets.len() {
            if e_local(sets, idx, y) + e_local(sets, idx, &z) != e_local(sets, idx, x) {
                continue 'cand;
            }
        }
        return false;
    }
    true
}

fn knockout_irreducible(ctx: &FContext, found: &[Vec<u32>], x: &[u32]) -> bool {
    'cand: for y in found {
        if !y.iter().zip(x).all(|(a, b)| a <= b) || y.as_slice() == x {
            continue;
        }
        let z: Vec<u32> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        for ps in ctx.profile_sets.values() {
            if ps.is_linear() {
                continue;
            }
            if ps.e_exponent(y) + ps.e_exponent(&z) != ps.e_exponent(x) {
                continue 'cand;
            }
        }
        return false;
    }
    true
}

/// All vectors in N^n with coordinate sum exactly `deg`.
fn vectors_of_degree(n: usize, deg: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(i: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == current.len() {
            current[i] = remaining;
            out.push(current.clone());
            return;
        }
        for v in 0..=remaining {
            current[i] = v;
            rec(i + 1, remaining - v, current, out);
        }
    }
    rec(0, deg, &mut current, &mut out);
    out
}

/// The exponent vectors of all f-irreducible x in a box |x| <= bound,
/// found by direct reducibility scanning; a brute-force oracle for tests.
pub fn atoms_box_bruteforce(ctx: &FContext, bound: u32) -> Vec<Vec<u32>> {
    let n = ctx.num_factors();
    let mut out = Vec::new();
    for deg in 1..=bound {
        for x in vectors_of_degree(n, deg) {
            if is_f_irreducible(ctx, &x) {
                out.push(x);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::DEFAULT_DEPTH_CAP;
    use crate::zpoly::parse::parse_poly;

    fn ex61() -> (FContext, MonadicElement) {
        ctx_of("X(X-1)(X-2)")
    }

    fn ctx_of(input: &str) -> (FContext, MonadicElement) {
        let parsed = parse_poly(input).unwrap();
        let (fact, den) = crate::zpoly::factor_parsed(&parsed).unwrap();
        build_context(&fact, &den, DEFAULT_DEPTH_CAP).unwrap()
    }

    #[test]
    fn context_of_the_running_example() {
        let (ctx, gen) = ex61();
        assert_eq!(ctx.num_factors(), 3);
        assert_eq!(ctx.primes, vec![2, 3]);
        assert_eq!(gen.x, vec![1, 1, 1]);
        assert!(gen.m.is_empty());
    }

    #[test]
    fn context_of_a_constant() {
        let (ctx, gen) = ctx_of("6");
        assert_eq!(ctx.num_factors(), 0);
        assert_eq!(ctx.primes, vec![2, 3]);
        assert_eq!(gen.m, BTreeMap::from([(2, 1), (3, 1)]));
    }

    #[test]
    fn fractional_generator_routes_with_element() {
        let (ctx, gen) = ctx_of("(X(X-1)^2(X-2))/12");
        assert_eq!(ctx.num_factors(), 3);
        assert_eq!(gen.x, vec![1, 2, 1]);
        assert_eq!(gen.m, BTreeMap::from([(2, -2), (3, -1)]));
    }

    #[test]
    fn non_integer_valued_is_rejected() {
        let parsed = parse_poly("X/2").unwrap();
        let (fact, den) = crate::zpoly::factor_parsed(&parsed).unwrap();
        assert!(matches!(
            build_context(&fact, &den, DEFAULT_DEPTH_CAP),
            Err(Error::NotIntegerValued(_))
        ));
    }

    #[test]
    fn membership_examples() {
        let (ctx, _) = ex61();
        let u8 = parse_poly("(X(X-1)(X-2))/6").unwrap().poly;
        let e = membership(&ctx, &u8).unwrap().unwrap();
        assert_eq!(e.x, vec![1, 1, 1]);
        assert_eq!(e.m, BTreeMap::from([(2, -1), (3, -1)]));

        let bad = parse_poly("X/2").unwrap().poly;
        assert!(membership(&ctx, &bad).unwrap().is_none());
        let five = parse_poly("5").unwrap().poly;
        assert!(membership(&ctx, &five).unwrap().is_none());
    }

    #[test]
    fn irreducibility_examples() {
        let (ctx, _) = ex61();
        assert!(is_f_irreducible(&ctx, &[1, 2, 1]));
        assert!(!is_f_irreducible(&ctx, &[2, 2, 2]));
        assert!(is_f_irreducible(&ctx, &[1, 0, 0]));
    }

    #[test]
    fn atoms_of_the_running_example() {
        let (ctx, _) = ex61();
        let atom_set = atoms(&ctx, AtomMode::Certified).unwrap();
        assert!(atom_set.certified);
        assert_eq!(atom_set.constant_atoms, vec![2, 3]);
        let vectors: Vec<Vec<u32>> = atom_set.poly_atoms.iter().map(|a| a.x.clone()).collect();
        assert_eq!(
            vectors,
            vec![
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![1, 1, 0],
                vec![0, 1, 1],
                vec![1, 1, 1],
                vec![1, 2, 1],
                vec![1, 3, 1],
            ]
        );
        // m-parts carry -e_p
        let u10 = &atom_set.poly_atoms[7];
        assert_eq!(u10.m, BTreeMap::from([(2, -3), (3, -1)]));
    }

    #[test]
    fn certified_matches_box_bruteforce() {
        let (ctx, _) = ex61();
        let atom_set = atoms(&ctx, AtomMode::Certified).unwrap();
        let brute = atoms_box_bruteforce(&ctx, 6);
        let mut vectors: Vec<Vec<u32>> = atom_set.poly_atoms.iter().map(|a| a.x.clone()).collect();
        vectors.sort();
        let mut brute = brute;
        brute.sort();
        assert_eq!(vectors, brute);
    }

    #[test]
    fn manual_bound_flags_incompleteness() {
        let (ctx, _) = ex61();
        // atoms reach degree 5 = (1,3,1); a bound of 5 cannot certify.
        assert!(matches!(
            atoms(&ctx, AtomMode::ManualBound(5)),
            Err(Error::AtomBoundExceeded { bound: 5 })
        ));
        let ok = atoms(&ctx, AtomMode::ManualBound(8)).unwrap();
        assert!(!ok.certified);
        assert_eq!(ok.poly_atoms.len(), 8);
    }

    #[test]
    fn single_factor_monoid() {
        let (ctx, _) = ctx_of("X");
        let atom_set = atoms(&ctx, AtomMode::Certified).unwrap();
        assert!(atom_set.constant_atoms.is_empty());
        assert_eq!(atom_set.poly_atoms.len(), 1);
        assert_eq!(atom_set.poly_atoms[0].x, vec![1]);
        assert!(ctx.d_is_multiplicative());
    }

    #[test]
    fn product_closure_of_membership() {
        let (ctx, _) = ex61();
        let atom_set = atoms(&ctx, AtomMode::Certified).unwrap();
        let a = atom_set.poly_atoms[5].clone(); // (1,1,1)
        let b = atom_set.poly_atoms[6].clone(); // (1,2,1)
        let prod = a.mul(&b);
        let as_poly = prod.to_rat_poly(&ctx);
        let again = membership(&ctx, &as_poly).unwrap().unwrap();
        assert_eq!(again, prod);
    }

    #[test]
    fn e_f_exponent_examples() {
        let (ctx, _) = ex61();
        // e_f(u_4) = 6 for u_4 = X-1
        let u4 = MonadicElement::new(vec![0, 1, 0], BTreeMap::new());
        assert_eq!(ctx.e_f_exponent(&u4), BTreeMap::from([(2, 1), (3, 1)]));
        // e_f(u_3) = 12 for u_3 = X
        let u3 = MonadicElement::new(vec![1, 0, 0], BTreeMap::new());
        assert_eq!(ctx.e_f_exponent(&u3), BTreeMap::from([(2, 2), (3, 1)]));
        // constant prime: e_f(p) = p
        let two = MonadicElement::new(vec![0, 0, 0], BTreeMap::from([(2, 1)]));
        assert_eq!(ctx.e_f_exponent(&two), BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn fixed_divisor_of_product_agrees_with_zpoly() {
        let (ctx, _) = ex61();
        assert_eq!(
            ctx.fixed_divisor_of_product(&[1, 2, 1], &BigInt::one()).unwrap(),
            BTreeMap::from([(2, 2), (3, 1)])
        );
        let expanded = ctx.generator_poly(&[1, 2, 1]);
        assert_eq!(expanded.fixed_divisor(), BigInt::from(12));
    }
}
