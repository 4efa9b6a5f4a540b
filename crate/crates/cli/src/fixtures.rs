//! Built-in verification fixtures: the reference worked example over
//! X(X-1)(X-2) with its six submonoids, the linear-factor families, the
//! two large product examples, and the irreducibility criterion samples.
//! Every expectation is frozen here as literal data; `run_all` replays
//! them and prints one PASS/FAIL line per fixture.

use monadica::divisor::{v_exponent, Analysis};
use monadica::invariants::{
    all_proper_submonoids_factorial, check_product_hypotheses, exconcl_family,
    theorem68_schedule, verify_product_isomorphism,
};
use monadica::monoid::{membership, MonadicElement};
use monadica::pipeline::{analyze_parsed, analyze_str, FullAnalysis, PipelineOptions};
use monadica::submonoid::{analyze_submonoid, contraction_is_divisorial, monadic_submonoid, SubAnalysis};
use monadica::zpoly::parse::parse_poly;
use monadica::zpoly::{eisenstein_at_point, factor_parsed};
use num_bigint::BigInt;
use std::collections::BTreeSet;

type CheckResult = Result<(), String>;

/// Positions of the reference primes P_1..P_9 of the X(X-1)(X-2) system
/// in the engine's canonical order (constant primes sorted by (p, profile)
/// ascending, then the factors X, X-1, X-2).
const P_ORDER: [usize; 9] = [2, 1, 0, 5, 4, 3, 6, 7, 8];

fn opts() -> PipelineOptions {
    PipelineOptions::default()
}

fn ex61() -> Result<FullAnalysis, String> {
    analyze_str("X(X-1)(X-2)", &opts()).map_err(|e| e.to_string())
}

fn check<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> CheckResult {
    if got == want {
        Ok(())
    } else {
        Err(format!("{}: got {:?}, want {:?}", what, got, want))
    }
}

fn ex61_profiles() -> CheckResult {
    let a = ex61()?;
    let ctx = &a.ambient.ctx;
    check("constant atoms", ctx.primes.clone(), vec![2, 3])?;
    check(
        "W_2",
        ctx.profile_sets[&2].profiles.clone(),
        vec![vec![0, 1, 0], vec![1, 0, 2], vec![2, 0, 1]],
    )?;
    check(
        "W_3",
        ctx.profile_sets[&3].profiles.clone(),
        vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]],
    )?;
    // d(X(X-1)(X-2)) = 6 and d(X(X-1)^2(X-2)) = 12
    let d = ctx
        .fixed_divisor_of_product(&[1, 1, 1], &BigInt::from(1))
        .map_err(|e| e.to_string())?;
    check("d(f) primes", d, [(2u64, 1u32), (3, 1)].into_iter().collect())?;
    let d = ctx
        .fixed_divisor_of_product(&[1, 2, 1], &BigInt::from(1))
        .map_err(|e| e.to_string())?;
    check("d(u3 u4^2 u5) primes", d, [(2u64, 2u32), (3, 1)].into_iter().collect())
}

fn ex61_atoms() -> CheckResult {
    let a = ex61()?;
    let atoms = &a.ambient.atoms;
    check("constant atoms", atoms.constant_atoms.clone(), vec![2, 3])?;
    check("certified", atoms.certified, true)?;
    let got: Vec<Vec<u32>> = atoms.poly_atoms.iter().map(|e| e.x.clone()).collect();
    let want = vec![
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![1, 1, 0],
        vec![0, 1, 1],
        vec![1, 1, 1],
        vec![1, 2, 1],
        vec![1, 3, 1],
    ];
    check("atom exponent vectors (u3..u10)", got, want)?;
    // spot-check the constants: u8 = X(X-1)(X-2)/6, u10 = X(X-1)^3(X-2)/24
    check(
        "m of u8",
        atoms.poly_atoms[5].m.clone(),
        [(2u64, -1i64), (3, -1)].into_iter().collect(),
    )?;
    check(
        "m of u10",
        atoms.poly_atoms[7].m.clone(),
        [(2u64, -3i64), (3, -1)].into_iter().collect(),
    )
}

fn ex61_primes() -> CheckResult {
    let a = ex61()?;
    let primes = &a.ambient.primes;
    check("number of primes", primes.len(), 9)?;
    // atom ids: 0,1 are the constants 2,3; ids 2..=9 are u3..u10.
    let expected: [&[usize]; 9] = [
        &[0, 2, 4, 5, 7, 8],
        &[0, 2, 4, 6, 7, 8],
        &[0, 3],
        &[1, 2, 5],
        &[1, 3, 5, 6, 8, 9],
        &[1, 4, 6],
        &[2, 5, 7, 8, 9],
        &[3, 5, 6, 7, 8, 9],
        &[4, 6, 7, 8, 9],
    ];
    for (k, want) in expected.iter().enumerate() {
        let got: Vec<usize> = primes[P_ORDER[k]].trace.iter().copied().collect();
        check(&format!("trace of P{}", k + 1), got, want.to_vec())?;
    }
    Ok(())
}

fn ex61_decompositions() -> CheckResult {
    let a = ex61()?;
    // v-exponent rows over P1..P9. The u5 row (1,2,0,0,0,1,0,0,1) is the
    // one forced by the exact identity u1 u7 = u4 u5 together with the
    // other rows (see the u1 u7 = u4 u5 identity).
    let expected: [[u32; 9]; 10] = [
        [1, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 1, 0, 0, 0],
        [2, 1, 0, 1, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 1, 0, 0, 1, 0],
        [1, 2, 0, 0, 0, 1, 0, 0, 1],
        [1, 0, 0, 1, 1, 0, 1, 1, 0],
        [0, 1, 0, 0, 1, 1, 0, 1, 1],
        [2, 2, 0, 0, 0, 0, 1, 1, 1],
        [1, 1, 0, 0, 1, 0, 1, 2, 1],
        [0, 0, 0, 0, 2, 0, 1, 3, 1],
    ];
    for (atom_id, want) in expected.iter().enumerate() {
        let got: Vec<u32> = P_ORDER
            .iter()
            .map(|&j| a.ambient.matrix[atom_id][j])
            .collect();
        check(&format!("decomposition of u{}", atom_id + 1), got, want.to_vec())?;
    }
    Ok(())
}

fn ex61_class_group(corrupt: bool) -> CheckResult {
    let a = ex61()?;
    let expected_rank = if corrupt { 5 } else { 4 };
    check("free rank", a.class_group().free_rank, expected_rank)?;
    check("torsion", a.class_group().torsion.clone(), vec![])
}

fn ex61_e_factor() -> CheckResult {
    let a = ex61()?;
    let ctx = &a.ambient.ctx;
    let six: std::collections::BTreeMap<u64, u32> = [(2, 1), (3, 1)].into_iter().collect();
    for (name, x, m2) in [
        ("u4", vec![0u32, 1, 0], 0i64),
        ("u6", vec![1, 1, 0], -1),
        ("u7", vec![0, 1, 1], -1),
        ("u9", vec![1, 2, 1], -2),
    ] {
        let m = if m2 == 0 {
            Default::default()
        } else {
            let e3 = ctx.e_exponent(3, &x) as i64;
            let mut m = std::collections::BTreeMap::from([(2u64, m2)]);
            if e3 > 0 {
                m.insert(3, -e3);
            }
            m
        };
        let e = MonadicElement::new(x, m);
        check(&format!("e_f({})", name), ctx.e_f_exponent(&e), six.clone())?;
    }
    Ok(())
}

struct SubFixture {
    name: &'static str,
    generator: &'static str,
    avoided: &'static [usize],
    atom_ids: &'static [usize],
    primes: usize,
    rank: usize,
    torsion: &'static [u64],
}

// Ambient prime indices: 0=P3, 1=P2, 2=P1, 3=P6, 4=P5, 5=P4, 6=P7, 7=P8,
// 8=P9 in the reference numbering; atom ids 0,1 = constants 2,3 and
// 2..=9 = u3..u10.
const SUB_FIXTURES: [SubFixture; 6] = [
    SubFixture {
        name: "S",
        generator: "(X^2(X-1)^3(X-2)^2)/8",
        avoided: &[0],
        atom_ids: &[1, 2, 4, 5, 6, 7, 8, 9],
        primes: 8,
        rank: 4,
        torsion: &[],
    },
    SubFixture {
        name: "T",
        generator: "(X(X-1)^3(X-2)^3)/24",
        avoided: &[0, 5],
        atom_ids: &[4, 6, 7, 8, 9],
        primes: 4,
        rank: 1,
        torsion: &[],
    },
    SubFixture {
        name: "V",
        generator: "(X(X-1)^3(X-2))/6",
        avoided: &[3, 5],
        atom_ids: &[0, 3, 7, 8, 9],
        primes: 4,
        rank: 1,
        torsion: &[],
    },
    SubFixture {
        name: "W",
        generator: "(X(X-1)^2(X-2))/12",
        avoided: &[0, 3, 5],
        atom_ids: &[7, 8, 9],
        primes: 2,
        rank: 0,
        torsion: &[2],
    },
    SubFixture {
        name: "Y",
        generator: "X(X-1)",
        avoided: &[3, 8],
        atom_ids: &[0, 2, 3, 5],
        primes: 4,
        rank: 1,
        torsion: &[],
    },
    SubFixture {
        name: "Z",
        generator: "(X^2(X-1))/2",
        avoided: &[0, 3, 8],
        atom_ids: &[2, 5],
        primes: 2,
        rank: 0,
        torsion: &[],
    },
];

fn sub_analysis(ambient: &Analysis, generator: &str) -> Result<SubAnalysis, String> {
    let parsed = parse_poly(generator).map_err(|e| e.to_string())?;
    let g = membership(&ambient.ctx, &parsed.poly)
        .map_err(|e| e.to_string())?
        .ok_or_else(|| format!("{} is not a member", generator))?;
    let sub = monadic_submonoid(ambient, &g);
    analyze_submonoid(ambient, sub).map_err(|e| e.to_string())
}

fn ex61_submonoids() -> CheckResult {
    let a = ex61()?;
    for fix in &SUB_FIXTURES {
        let sa = sub_analysis(&a.ambient, fix.generator)?;
        check(
            &format!("{}: avoided", fix.name),
            sa.sub.avoided.clone(),
            fix.avoided.iter().copied().collect::<BTreeSet<_>>(),
        )?;
        check(&format!("{}: atoms", fix.name), sa.sub.atom_ids.clone(), fix.atom_ids.to_vec())?;
        check(&format!("{}: primes", fix.name), sa.restricted.len(), fix.primes)?;
        check(&format!("{}: rank", fix.name), sa.class_group.free_rank, fix.rank)?;
        let torsion: Vec<u64> = fix.torsion.to_vec();
        let got: Vec<u64> = sa
            .class_group
            .torsion
            .iter()
            .map(|d| u64::try_from(d).expect("small torsion"))
            .collect();
        check(&format!("{}: torsion", fix.name), got, torsion)?;
    }
    Ok(())
}

fn ex61_w_exponents() -> CheckResult {
    let a = ex61()?;
    let w = sub_analysis(&a.ambient, "(X(X-1)^2(X-2))/12")?;
    check("W atom ids", w.sub.atom_ids.clone(), vec![7, 8, 9])?;
    check("Q1 trace", w.restricted[0].trace.clone(), BTreeSet::from([7, 8]))?;
    check("Q2 trace", w.restricted[1].trace.clone(), BTreeSet::from([8, 9]))?;
    // v_{Q1}(u8) = 2, v_{Q1}(u9) = v_{Q2}(u9) = 1, v_{Q2}(u10) = 2
    check(
        "restricted exponent table",
        w.matrix.clone(),
        vec![vec![2, 0], vec![1, 1], vec![0, 2]],
    )
}

fn ex61_contraction() -> CheckResult {
    let a = ex61()?;
    let z = sub_analysis(&a.ambient, "(X^2(X-1))/2")?;
    check("Z factorial", z.is_factorial(), true)?;
    // ambient prime 6 is the contraction X K[X] meet H = P7
    check(
        "trace of P7 on Z not divisorial",
        contraction_is_divisorial(&a.ambient, &z, 6),
        false,
    )?;
    let w = sub_analysis(&a.ambient, "(X(X-1)^2(X-2))/12")?;
    check(
        "trace of P1 on W divisorial",
        contraction_is_divisorial(&a.ambient, &w, 2),
        true,
    )
}

fn lemma62_family(n: usize) -> CheckResult {
    let (a, p): (Vec<BigInt>, Vec<u64>) = match n {
        2 => (vec![BigInt::from(3), BigInt::from(1)], vec![2, 3]),
        3 => (vec![BigInt::from(1); 3], vec![3, 5, 7]),
        _ => return Err("unsupported n".into()),
    };
    let inst = exconcl_family(&a, &p, 12, &opts()).map_err(|e| e.to_string())?;
    let cg = inst.analysis.class_group();
    check("rank", cg.free_rank, n - 1)?;
    check("torsion", cg.torsion.len(), 0)?;
    check("primes", inst.analysis.ambient.primes.len(), 2 * n)?;
    // atoms: p_1, each factor, and the full product over p_1
    check("constant atoms", inst.analysis.ambient.atoms.constant_atoms.clone(), vec![p[0]])?;
    let xs: Vec<Vec<u32>> = inst
        .analysis
        .ambient
        .atoms
        .poly_atoms
        .iter()
        .map(|e| e.x.clone())
        .collect();
    let mut want: Vec<Vec<u32>> = (0..n)
        .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
        .collect();
    want.push(vec![1; n]);
    check("poly atoms", xs, want)?;
    check("davenport", (inst.bounds.davenport.value, inst.bounds.davenport.exact), (n as u32, true))?;
    check(
        "all proper submonoids factorial",
        all_proper_submonoids_factorial(&inst.analysis).map_err(|e| e.to_string())?,
        true,
    )
}

fn ex67() -> CheckResult {
    let a = analyze_str(
        "(95095X+2)(95095X+3)(6X+5)(6X+7)(6X+11)(6X+13)(6X+19)",
        &opts(),
    )
    .map_err(|e| e.to_string())?;
    check("rank", a.class_group().free_rank, 5)?;
    check("torsion", a.class_group().torsion.len(), 0)
}

const BIG_A: &str = "5713492603"; // 7*13*19*31*37*43*67

fn second_example_strings() -> (String, String, String) {
    let f3 = format!("({a}X+1)({a}X+2)({a}X+3)", a = BIG_A);
    let w = format!("({a}X+1)({a}X+2)^2({a}X+3)/12", a = BIG_A);
    let g: String = [7u64, 13, 19, 31, 37, 43, 67]
        .iter()
        .map(|&p| format!("(6X{}+{})", f3, p))
        .collect::<Vec<_>>()
        .join("");
    (f3, w, g)
}

fn second_example_certificate() -> CheckResult {
    let (f3, w, g) = second_example_strings();
    let (f0, _) = factor_parsed(&parse_poly(&f3).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let (gf, gden) = factor_parsed(&parse_poly(&g).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let cert =
        check_product_hypotheses(&f0, &gf, &BigInt::from(0)).map_err(|e| e.to_string())?;
    if !cert.all_pass() {
        return Err(format!("hypotheses failed: {:?}", cert.checks));
    }
    let (wf, wden) = factor_parsed(&parse_poly(&w).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let (ok, ax, ay, axy) =
        verify_product_isomorphism(&cert, (&wf, &wden), (&gf, &gden), &opts())
            .map_err(|e| e.to_string())?;
    check("isomorphism verified", ok, true)?;
    check("C_v(w) rank", ax.class_group().free_rank, 0)?;
    check("C_v(w) torsion", ax.class_group().torsion.clone(), vec![BigInt::from(2)])?;
    check("C_v(g) rank", ay.class_group().free_rank, 6)?;
    check("product rank", axy.class_group().free_rank, 6)?;
    check("product torsion", axy.class_group().torsion.clone(), vec![BigInt::from(2)])
}

fn second_example_direct() -> CheckResult {
    let (_, _, g) = second_example_strings();
    let monster = format!("({a}X+1)({a}X+2)^2({a}X+3){g}/12", a = BIG_A, g = g);
    let a = analyze_str(&monster, &opts()).map_err(|e| e.to_string())?;
    check("rank", a.class_group().free_rank, 6)?;
    check("torsion", a.class_group().torsion.clone(), vec![BigInt::from(2)])?;
    let sub = a.sub.as_ref().ok_or("expected a fractional routing")?;
    check("restricted primes", sub.restricted.len(), 16)?;
    check("submonoid atoms", sub.sub.atom_ids.len(), 12)
}

fn ex67_block_product() -> CheckResult {
    // generator-level product: Z^5 splits as Z^1 x Z^4 over the two
    // residue blocks
    let b1 = "(95095X+2)(95095X+3)";
    let b2 = "(6X+5)(6X+7)(6X+11)(6X+13)(6X+19)";
    let (f1, d1) = factor_parsed(&parse_poly(b1).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let (f2, d2) = factor_parsed(&parse_poly(b2).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let cert = check_product_hypotheses(&f1, &f2, &BigInt::from(0)).map_err(|e| e.to_string())?;
    if !cert.all_pass() {
        return Err(format!("hypotheses failed: {:?}", cert.checks));
    }
    let (ok, ax, ay, axy) = verify_product_isomorphism(&cert, (&f1, &d1), (&f2, &d2), &opts())
        .map_err(|e| e.to_string())?;
    check("isomorphism", ok, true)?;
    check("block 1 rank", ax.class_group().free_rank, 1)?;
    check("block 2 rank", ay.class_group().free_rank, 4)?;
    check("product rank", axy.class_group().free_rank, 5)
}

fn eisenstein_samples() -> CheckResult {
    let (f3, _, _) = second_example_strings();
    for p in [7u64, 13, 19, 31, 37, 43, 67] {
        let h = parse_poly(&format!("6X{}+{}", f3, p)).map_err(|e| e.to_string())?;
        check(
            &format!("6Xf+{} irreducible via q=2", p),
            eisenstein_at_point(h.poly.numerator(), 2),
            true,
        )?;
        // the criterion does not apply at q = p itself: p divides the
        // constant term
        check(
            &format!("6Xf+{} at q={}", p, p),
            eisenstein_at_point(h.poly.numerator(), p),
            false,
        )?;
    }
    let xp1 = parse_poly("X+1").map_err(|e| e.to_string())?;
    check("X+1 at 2", eisenstein_at_point(xp1.poly.numerator(), 2), false)?;
    let q = parse_poly("2X^2+2X+1").map_err(|e| e.to_string())?;
    check("2X^2+2X+1 at 2", eisenstein_at_point(q.poly.numerator(), 2), true)
}

fn d_formula() -> CheckResult {
    // d(X^k (X-1)^l (X-2)^m) = 2^min{2k+m, l, k+2m} 3^min{k, l, m}
    let a = ex61()?;
    let ctx = &a.ambient.ctx;
    for k in 0..4u32 {
        for l in 0..4u32 {
            for m in 0..4u32 {
                if k + l + m == 0 {
                    continue;
                }
                let e2 = ctx.e_exponent(2, &[k, l, m]);
                let e3 = ctx.e_exponent(3, &[k, l, m]);
                let want2 = (2 * k + m).min(l).min(k + 2 * m) as u64;
                let want3 = k.min(l).min(m) as u64;
                check(&format!("e_2({},{},{})", k, l, m), e2, want2)?;
                check(&format!("e_3({},{},{})", k, l, m), e3, want3)?;
                // cross-check against the expanded fixed divisor
                let poly = ctx.generator_poly(&[k, l, m]);
                let d = poly.fixed_divisor();
                let want =
                    BigInt::from(2u32).pow(want2 as u32) * BigInt::from(3u32).pow(want3 as u32);
                check(&format!("d(exp {},{},{})", k, l, m), d, want)?;
            }
        }
    }
    Ok(())
}

fn membership_samples() -> CheckResult {
    let a = ex61()?;
    let u8 = parse_poly("(X(X-1)(X-2))/6").map_err(|e| e.to_string())?;
    let e = membership(&a.ambient.ctx, &u8.poly)
        .map_err(|e| e.to_string())?
        .ok_or("u8 must be a member")?;
    check("u8 vector", e.x.clone(), vec![1, 1, 1])?;
    let half_x = parse_poly("X/2").map_err(|e| e.to_string())?;
    check(
        "X/2 not a member",
        membership(&a.ambient.ctx, &half_x.poly).map_err(|e| e.to_string())?,
        None,
    )?;
    let five = parse_poly("5").map_err(|e| e.to_string())?;
    check(
        "5 not a member",
        membership(&a.ambient.ctx, &five.poly).map_err(|e| e.to_string())?,
        None,
    )?;
    // v-exponents of u6 in reference order match u6H = (P1 P4 P5 P7 P8)_v
    let u6 = parse_poly("X(X-1)/2").map_err(|e| e.to_string())?;
    let e6 = membership(&a.ambient.ctx, &u6.poly)
        .map_err(|e| e.to_string())?
        .ok_or("u6 must be a member")?;
    let got: Vec<u32> = P_ORDER
        .iter()
        .map(|&j| v_exponent(&e6, &a.ambient.primes[j]))
        .collect();
    check("u6 decomposition", got, vec![1, 0, 0, 1, 1, 0, 1, 1, 0])
}

fn theorem68_fixture() -> CheckResult {
    let rows = theorem68_schedule(3, 12, &opts()).map_err(|e| e.to_string())?;
    check("rows", rows.len(), 3)?;
    check("primes i=1", rows[0].primes.clone(), vec![2, 3])?;
    check("primes i=2", rows[1].primes.clone(), vec![3, 5, 7])?;
    check("primes i=3", rows[2].primes.clone(), vec![5, 7, 11, 13, 19])?;
    let ds: Vec<u32> = rows.iter().map(|r| r.bounds.davenport.value).collect();
    check("davenport values", ds.clone(), vec![2, 3, 5])?;
    for (row, d) in rows.iter().zip(&ds) {
        if *d <= row.index {
            return Err(format!("D = {} not above i = {}", d, row.index));
        }
        check("elasticity", row.bounds.elasticity_lb, (*d, 2))?;
        check("tame", row.bounds.tame_lb, *d)?;
    }
    if !(ds[0] < ds[1] && ds[1] < ds[2]) {
        return Err(format!("bounds not strictly increasing: {:?}", ds));
    }
    Ok(())
}

fn fractional_analyze() -> CheckResult {
    let parsed = parse_poly("(X(X-1)^2(X-2))/12").map_err(|e| e.to_string())?;
    let a = analyze_parsed(&parsed, &opts()).map_err(|e| e.to_string())?;
    let sub = a.sub.as_ref().ok_or("expected submonoid routing")?;
    check("W torsion", sub.class_group.torsion.clone(), vec![BigInt::from(2)])?;
    check("W rank", sub.class_group.free_rank, 0)?;
    let trivial = analyze_str("7", &opts()).map_err(|e| e.to_string())?;
    check("constant generator factorial", trivial.is_factorial(), true)
}

pub fn run_all(only: Option<&str>, corrupt: bool) -> usize {
    let fixtures: Vec<(&str, Box<dyn Fn() -> CheckResult>)> = vec![
        ("ex61-profiles", Box::new(ex61_profiles)),
        ("ex61-atoms", Box::new(ex61_atoms)),
        ("ex61-primes", Box::new(ex61_primes)),
        ("ex61-decompositions", Box::new(ex61_decompositions)),
        ("ex61-class-group", Box::new(move || ex61_class_group(corrupt))),
        ("ex61-e-factor", Box::new(ex61_e_factor)),
        ("ex61-submonoids", Box::new(ex61_submonoids)),
        ("ex61-w-exponents", Box::new(ex61_w_exponents)),
        ("ex61-contraction", Box::new(ex61_contraction)),
        ("ex61-membership", Box::new(membership_samples)),
        ("ex61-d-formula", Box::new(d_formula)),
        ("lemma62-n2", Box::new(|| lemma62_family(2))),
        ("lemma62-n3", Box::new(|| lemma62_family(3))),
        ("ex67", Box::new(ex67)),
        ("ex67-block-product", Box::new(ex67_block_product)),
        ("second-example-certificate", Box::new(second_example_certificate)),
        ("second-example-direct", Box::new(second_example_direct)),
        ("eisenstein", Box::new(eisenstein_samples)),
        ("theorem68", Box::new(theorem68_fixture)),
        ("fractional-analyze", Box::new(fractional_analyze)),
    ];
    let mut failures = 0;
    let mut ran = 0;
    for (name, fixture) in fixtures {
        if let Some(filter) = only {
            if !name.contains(filter) {
                continue;
            }
        }
        ran += 1;
        match fixture() {
            Ok(()) => println!("PASS {}", name),
            Err(diff) => {
                failures += 1;
                println!("FAIL {}: {}", name, diff);
            }
        }
    }
    if ran == 0 {
        eprintln!("no fixture matches the filter");
        return 1;
    }
    println!("{} fixtures, {} failed", ran, failures);
    failures
}
