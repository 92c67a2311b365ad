//! Acceptance criteria. Prints one `[PASS]`/`[FAIL]` line per criterion and
//! exits nonzero if any fail. All comparisons are exact.

#![allow(clippy::needless_range_loop)]

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use isogroth::basisexp::expand_in_gp;
use isogroth::coeffring::{Monomial, Series, TruncationContext};
use isogroth::genfun::checks::{has_cancellation_property, is_x_symmetric};
use isogroth::genfun::{gp_symmetrizer, gt_coeff, gt_generating_function, gt_prime_from_gt};
use isogroth::localization::{gkm_check, loc_product_formula, phi_v, psi_n};
use isogroth::pfaffengine::{gx_lambda, kernel_coeffs, pfaffian, SkewMatrix};
use isogroth::weylcomb::{
    enumerate_sp_k, partition_to_w, w_to_partition, KStrictPartition, LieType, SignedPermutation,
};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use common::{arb_series, det, neg_beta_pow, rat};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn strict_partitions(max_size: u32, max_len: usize) -> Vec<KStrictPartition> {
    let mut out: Vec<KStrictPartition> = enumerate_sp_k(max_size, 0)
        .into_iter()
        .filter(|l| l.size() <= max_size && l.len() <= max_len)
        .collect();
    out.dedup();
    out
}

fn ac1_formal_group_law() -> Outcome {
    let mut cases = 0;
    for d in 0..=5u32 {
        let ctx = TruncationContext::new(d, 3, 3, 3);
        let mut run = runner(24);
        let strat = (arb_series(ctx, 6, 0), arb_series(ctx, 6, 1), arb_series(ctx, 6, 1), arb_series(ctx, 6, 0));
        run.run(&strat, |(f, u, v, w)| {
            let g = &u + &w;
            proptest::prop_assert_eq!(&f + &g, &g + &f);
            proptest::prop_assert_eq!(&f * &g, &g * &f);
            proptest::prop_assert_eq!((&f * &g) * &v, &f * (&g * &v));
            proptest::prop_assert_eq!(&f * (&g + &v), &f * &g + &f * &v);
            proptest::prop_assert_eq!(u.oplus(&v).unwrap(), v.oplus(&u).unwrap());
            proptest::prop_assert_eq!(
                u.oplus(&v).unwrap().oplus(&w).unwrap(),
                u.oplus(&v.oplus(&w).unwrap()).unwrap()
            );
            proptest::prop_assert!(u.oplus(&u.bar().unwrap()).unwrap().is_zero());
            proptest::prop_assert_eq!(u.ominus(&v).unwrap().oplus(&v).unwrap(), u.clone());
            proptest::prop_assert_eq!(u.bar().unwrap().bar().unwrap(), u.clone());
            let bu = Series::beta(ctx) * &u;
            let inv = bu.invert_one_plus().unwrap();
            proptest::prop_assert!(((Series::one(ctx) + &bu) * inv).is_one());
            Ok(())
        })
        .map_err(|e| format!("D={d}: {e}"))?;
        cases += 24;
    }
    Ok(format!("{cases} random cases, D in 0..=5"))
}

fn ac2_ggamma_membership() -> Outcome {
    let ctx = TruncationContext::new(4, 3, 2, 2);
    let mut checked = 0;
    for ty in [LieType::C, LieType::B] {
        for k in 0..=2 {
            for ell in -2..=2i64 {
                let gf = gt_generating_function(k, ell, ty, ctx).map_err(|e| e.to_string())?;
                for m in -1..=4 {
                    let f = gf.coefficient(m);
                    ensure(is_x_symmetric(&f), || format!("GX_{m}^({ell}) k={k} {ty} not symmetric"))?;
                    ensure(has_cancellation_property(&f).unwrap(), || {
                        format!("GX_{m}^({ell}) k={k} {ty} fails cancellation")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    for n in 1..=4u32 {
        let c = TruncationContext::new(4, n, 0, 0);
        for l in strict_partitions(4, n as usize) {
            let f = gp_symmetrizer(&l, n, c).map_err(|e| e.to_string())?;
            ensure(is_x_symmetric(&f), || format!("GP_{l} n={n} not symmetric"))?;
            ensure(has_cancellation_property(&f).unwrap(), || format!("GP_{l} n={n} fails cancellation"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} series"))
}

fn ac3_negative_degrees() -> Outcome {
    let ctx = TruncationContext::new(4, 3, 2, 2);
    let mut checked = 0;
    for k in 0..=2 {
        for ell in -2..=2i64 {
            for m in [0i64, -1, -2, -3] {
                let got = gt_coeff(m, ell, k, LieType::C, ctx).map_err(|e| e.to_string())?;
                ensure(got == neg_beta_pow(ctx, (-m) as u32), || {
                    format!("GT_{m}^({ell}) k={k} = {got}")
                })?;
                checked += 1;
            }
            if ell >= 0 {
                for m in -2..=4 {
                    let a = gt_prime_from_gt(m, ell, k, ctx).map_err(|e| e.to_string())?;
                    let b = gt_coeff(m, ell, k, LieType::B, ctx).map_err(|e| e.to_string())?;
                    ensure(a == b, || format!("GT'_{m}^({ell}) k={k}: {a} vs {b}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} identities"))
}

fn ac4_single_row() -> Outcome {
    let ctx = TruncationContext::new(4, 3, 2, 3);
    let mut checked = 0;
    for ty in [LieType::C, LieType::B] {
        for k in 0..=2u32 {
            for l1 in 1..=4u32 {
                let lam = KStrictPartition::new(k, vec![l1]).unwrap();
                let gx = gx_lambda(&lam, ty, ctx).map_err(|e| e.to_string())?;
                let ell = l1 as i64 - k as i64 - 1;
                let gt = gt_coeff(l1 as i64, ell, k, ty, ctx).map_err(|e| e.to_string())?;
                ensure(gx == gt, || format!("{ty} k={k} lambda=({l1})"))?;
                ensure(!gx.is_zero(), || format!("{ty} k={k} lambda=({l1}) vanished"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} partitions"))
}

fn ac5_gp_cross_check() -> Outcome {
    let ctx = TruncationContext::new(5, 4, 0, 0);
    let mut checked = 0;
    for l in strict_partitions(4, 4) {
        let gx = gx_lambda(&l, LieType::B, ctx).map_err(|e| e.to_string())?;
        let gp = gp_symmetrizer(&l, 4, ctx).map_err(|e| e.to_string())?;
        ensure(gx == gp, || format!("lambda={l}: difference {}", &gx - &gp))?;
        checked += 1;
    }
    Ok(format!("{checked} strict partitions, D=5, numX=4"))
}

const GRID: [(u32, u32); 4] = [(2, 0), (3, 0), (2, 1), (3, 1)];

fn ac6_gkm() -> Outcome {
    let mut tables = 0;
    let mut edges = 0;
    for (n, k) in GRID {
        let ctx = TruncationContext::new(4, n, k, n);
        for ty in [LieType::C, LieType::B] {
            for l in enumerate_sp_k(n, k) {
                let gx = gx_lambda(&l, ty, ctx).map_err(|e| e.to_string())?;
                let table = psi_n(&gx, n, k).map_err(|e| e.to_string())?;
                let report = gkm_check(&table, ty).map_err(|e| e.to_string())?;
                ensure(report.is_clean(), || {
                    format!("n={n} k={k} {ty} lambda={l}: {} violations", report.violations.len())
                })?;
                tables += 1;
                edges += report.edges_checked;
            }
        }
    }
    Ok(format!("{tables} tables, {edges} edges"))
}

fn ac7_vanishing() -> Outcome {
    let mut checked = 0;
    let mut nontrivial = 0;
    for (n, k) in GRID {
        let ctx = TruncationContext::new(4, n + 1, k, n + 1);
        for ty in [LieType::C, LieType::B] {
            for l in enumerate_sp_k(n + 1, k).into_iter().filter(|l| !l.in_rectangle(n)) {
                let gx = gx_lambda(&l, ty, ctx).map_err(|e| e.to_string())?;
                if !gx.is_zero() {
                    nontrivial += 1;
                }
                let table = psi_n(&gx, n, k).map_err(|e| e.to_string())?;
                ensure(table.is_zero(), || format!("n={n} k={k} {ty} lambda={l} localizes to nonzero"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} partitions ({nontrivial} with nonzero GX at D=4)"))
}

fn ac8_localization_product() -> Outcome {
    let mut checked = 0;
    for (n, k) in GRID {
        let ctx = TruncationContext::new(4, n, k, n);
        for ell in -(n as i64)..=n as i64 {
            let gf = gt_generating_function(k, ell, LieType::C, ctx).map_err(|e| e.to_string())?;
            let coeffs: Vec<Series> = (-2..=4).map(|m| gf.coefficient(m)).collect();
            for mu in enumerate_sp_k(n, k) {
                let w = partition_to_w(&mu, n).map_err(|e| e.to_string())?;
                let loc = loc_product_formula(&mu, ell, n, LieType::C, ctx).map_err(|e| e.to_string())?;
                for (idx, m) in (-2..=4).enumerate() {
                    let lhs = phi_v(&coeffs[idx], &w).map_err(|e| e.to_string())?;
                    ensure(lhs == loc.coefficient(m), || format!("n={n} k={k} mu={mu} ell={ell} m={m}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} coefficients"))
}

fn ac9_combinatorics() -> Outcome {
    let mut total = 0;
    for n in 1..=6u32 {
        let group = SignedPermutation::all_of_rank(n as usize);
        let lengths: Vec<usize> = group.iter().map(|w| w.length()).collect();
        for k in 0..n {
            let grass: Vec<&SignedPermutation> = group
                .iter()
                .zip(&lengths)
                .filter(|(w, &len)| (0..n).filter(|&i| i != k).all(|i| w.right_mul_simple(i).length() > len))
                .map(|(w, _)| w)
                .collect();
            let listed = enumerate_sp_k(n, k);
            let binom: u64 = (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1));
            let formula = (1u64 << (n - k)) * binom;
            ensure(grass.len() as u64 == formula && listed.len() as u64 == formula, || {
                format!("n={n} k={k}: brute {} listed {} formula {formula}", grass.len(), listed.len())
            })?;
            for w in &grass {
                let l = w_to_partition(w, k).map_err(|e| format!("{w}: {e}"))?;
                ensure(l.in_rectangle(n), || format!("{w} -> {l} outside SP^{k}({n})"))?;
                ensure(&&partition_to_w(&l, n).unwrap() == w, || format!("round trip failed at {w}"))?;
            }
            for l in &listed {
                let w = partition_to_w(l, n).map_err(|e| e.to_string())?;
                ensure(&w_to_partition(&w, k).unwrap() == l, || format!("round trip failed at {l}"))?;
            }
            total += listed.len();
        }
    }
    Ok(format!("{total} k-Grassmannian elements, n <= 6"))
}

fn ac10_pfaffian() -> Outcome {
    let ctx = TruncationContext::new(3, 2, 0, 1);
    let mut run = runner(20);
    let strat = proptest::collection::vec(arb_series(ctx, 4, 0), 6);
    run.run(&strat, |entries| {
        let mut a = SkewMatrix::zero(4, ctx);
        let mut dense = vec![vec![Series::zero(ctx); 4]; 4];
        let mut it = entries.into_iter();
        for i in 0..4 {
            for j in i + 1..4 {
                let v = it.next().unwrap();
                dense[i][j] = v.clone();
                dense[j][i] = -&v;
                a.set(i, j, v);
            }
        }
        let pf = pfaffian(&a).unwrap();
        proptest::prop_assert_eq!(&pf * &pf, det(&dense, ctx));
        Ok(())
    })
    .map_err(|e| e.to_string())?;
    for (i, j, m, ci, cj) in [(1, 2, 2, 0, 0), (1, 2, 4, 0, 1), (2, 4, 4, 1, 0), (1, 3, 4, 0, 1)] {
        let t = kernel_coeffs(i, j, m, ci, cj, 8, 8);
        ensure(t.coeff(0, 0) == rat(1, 1), || "f_00 != 1".into())?;
        for p in 1..=8 {
            let expected = if p % 2 == 0 { 2 } else { -2 };
            ensure(t.coeff(p, -p) == rat(expected, 1), || format!("f_({p},-{p}) at beta=0"))?;
        }
        for (p, q, _) in t.entries() {
            let beta0 = t.term(p, q, TruncationContext::new(0, 0, 0, 0)).at_beta_zero();
            ensure(p + q == 0 || beta0.is_zero(), || format!("f_({p},{q}) survives beta=0"))?;
        }
    }
    Ok("20 random 4x4 matrices; beta=0 kernel values".into())
}

fn ac11_basis_expansion() -> Outcome {
    let ctx = TruncationContext::new(4, 4, 0, 0);
    let basis: Vec<(KStrictPartition, Series)> = strict_partitions(4, 4)
        .into_iter()
        .map(|l| {
            let g = gp_symmetrizer(&l, 4, ctx).unwrap();
            (l, g)
        })
        .collect();
    for (l, g) in &basis {
        let r = expand_in_gp(g).map_err(|e| e.to_string())?;
        ensure(r.remainder.is_zero(), || format!("GP_{l}: nonzero remainder"))?;
        ensure(r.coeffs == vec![(l.clone(), Series::one(ctx))], || format!("GP_{l}: {:?}", r.coeffs))?;
    }
    let mut run = runner(16);
    let n = basis.len();
    let strat = proptest::collection::vec((-3i64..=3, 1i64..=2, 0u32..=2), n);
    run.run(&strat, |weights| {
        let mut f = Series::zero(ctx);
        let mut expected = Vec::new();
        for ((l, g), (num, den, e)) in basis.iter().zip(weights) {
            let c = Series::monomial(ctx, rat(num, den), Monomial::beta_pow(e));
            if !c.is_zero() {
                f = f + &c * g;
                expected.push((l.clone(), c));
            }
        }
        let r = expand_in_gp(&f).unwrap();
        proptest::prop_assert!(r.remainder.is_zero());
        let rebuilt = r
            .reconstruct(|l| Ok(basis.iter().find(|(m, _)| m == l).unwrap().1.clone()))
            .unwrap();
        proptest::prop_assert_eq!(rebuilt, f);
        // truncation can only drop coefficients whose products all vanish
        for (l, c) in &expected {
            if l.size() + c.terms().next().unwrap().0.xab_degree() <= ctx.max_deg {
                proptest::prop_assert_eq!(r.coeff(l), Some(c));
            }
        }
        Ok(())
    })
    .map_err(|e| e.to_string())?;
    Ok(format!("{} basis elements, 16 random combinations", basis.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC1", "formal group law suite", ac1_formal_group_law),
        ("AC2", "GGamma membership of one-row classes and GP", ac2_ggamma_membership),
        ("AC3", "nonpositive degrees and the type B fold", ac3_negative_degrees),
        ("AC4", "single-row Pfaffian consistency", ac4_single_row),
        ("AC5", "k=0 type B Pfaffian equals GP symmetrizer", ac5_gp_cross_check),
        ("AC6", "GKM conditions on localized GX", ac6_gkm),
        ("AC7", "vanishing outside SP^k(n)", ac7_vanishing),
        ("AC8", "localization product formula", ac8_localization_product),
        ("AC9", "k-Grassmannian counts and bijection", ac9_combinatorics),
        ("AC10", "Pfaffian engine and kernel at beta=0", ac10_pfaffian),
        ("AC11", "GP basis expansion", ac11_basis_expansion),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let dt: Duration = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {id} {name}: {detail} ({:.2}s)", dt.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {why} ({:.2}s)", dt.as_secs_f64());
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
