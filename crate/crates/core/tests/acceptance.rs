//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cw_moduli::chartab::{character_table, CharacterTable};
use cw_moduli::cw::{cw_character, periodicity_delta, regular_multiple};
use cw_moduli::decomposition::{canonical_decomposition, decompose_at_k};
use cw_moduli::group::{
    build_cyclic, build_metacyclic, conjugacy_classes, library, FiniteGroup, GroupSpec, MetacyclicParams,
};
use cw_moduli::hurwitz::{
    enumerate_branching_data, enumerate_genus, enumerate_hurwitz_vectors, BranchingData, EnumOptions, HurwitzVector,
};
use cw_moduli::metacyclic::{rr_component_lower_bound, schur_multiplier_order};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{braid_move, example_v, example_v_prime, sample_vector};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {:.2?}, limit {:.2?}", elapsed, limit))
    }
}

fn mults(v: &HurwitzVector, t: &CharacterTable, k: u64) -> Vec<u64> {
    cw_character(v, t, k).unwrap().mults
}

fn golden_example() -> Outcome {
    let start = Instant::now();
    let g = build_cyclic(3).unwrap();
    let t = character_table(&g, 3, 6).unwrap();
    let expected =
        [(example_v(), [[2, 2, 2], [5, 5, 5], [9, 8, 8]]), (example_v_prime(), [[0, 3, 3], [5, 5, 5], [11, 7, 7]])];
    let mut matches = 0;
    for (v, rows) in &expected {
        for (k, row) in (1..=3).zip(rows) {
            let got = mults(v, &t, k);
            ensure!(got == row.to_vec(), "{v} at k={k}: got {got:?}, expected {row:?}");
            matches += row.len();
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{matches} exact matches in {:.2?}", start.elapsed()))
}

fn decomposition_separation() -> Outcome {
    let start = Instant::now();
    let g = build_cyclic(3).unwrap();
    let t = character_table(&g, 3, 6).unwrap();
    let items = vec![example_v(), example_v_prime()];
    let counts: Vec<usize> = (1..=3).map(|k| decompose_at_k(&items, &t, k).unwrap().block_count()).collect();
    ensure!(counts == [2, 1, 2], "level block counts {counts:?}, expected [2, 1, 2]");
    let canon = canonical_decomposition(&items, &t).unwrap();
    ensure!(canon.decomposition.block_count() == 2, "canonical blocks {}", canon.decomposition.block_count());
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("blocks per level {counts:?}, canonical 2, in {:.2?}", start.elapsed()))
}

fn periodicity_suite() -> Outcome {
    let start = Instant::now();
    let mut cases: Vec<(FiniteGroup, u64)> = vec![(build_cyclic(3).unwrap(), 6)];
    cases.extend((2..=4).map(|g| (build_cyclic(2).unwrap(), g)));
    let s3 = build_metacyclic(MetacyclicParams::new(3, 2, 2).unwrap()).unwrap();
    cases.extend((2..=5).map(|g| (s3.clone(), g)));
    let mut vectors = 0;
    let mut checks = 0;
    for (g, genus) in &cases {
        let order = g.order() as u64;
        let t = character_table(g, 3 * order, *genus).unwrap();
        let items: Vec<HurwitzVector> =
            enumerate_genus(g, *genus, &EnumOptions::default()).unwrap().into_iter().flat_map(|(_, vs)| vs).collect();
        ensure!(!items.is_empty(), "no vectors for {} in genus {genus}", g.label());
        vectors += items.len();
        for k in 1..=2 * order {
            let low = decompose_at_k(&items, &t, k).unwrap();
            let high = decompose_at_k(&items, &t, k + order).unwrap();
            ensure!(low.same_partition(&high), "{} genus {genus}: partitions differ at k={k}", g.label());
        }
        for v in &items {
            for k in 1..=2 * order {
                let lo = mults(v, &t, k);
                let hi = mults(v, &t, k + order);
                let delta = periodicity_delta(v, &t, k).map_err(|e| format!("{v} k={k}: {e}"))?;
                for (rho, chi) in t.irreducibles().iter().enumerate() {
                    let sigma = i64::from(k == 1 && rho == 0);
                    let expected = 2 * chi.degree() as i64 * (*genus as i64 - 1) - sigma;
                    let observed = hi[rho] as i64 - lo[rho] as i64;
                    ensure!(
                        observed == expected && delta[rho] == expected,
                        "{v} k={k} rho={rho}: observed {observed}, reported {}, expected {expected}",
                        delta[rho]
                    );
                    checks += 1;
                }
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{vectors} vectors, {checks} exact deltas, in {:.2?}", start.elapsed()))
}

fn dimension_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let groups: Vec<FiniteGroup> = library(12).iter().map(|s| s.build().unwrap()).filter(|g| g.order() >= 2).collect();
    let mut sampled = 0;
    let mut checks = 0;
    let mut round = 0;
    while sampled < 500 {
        round += 1;
        ensure!(round < 200, "only {sampled} vectors sampled");
        for g in &groups {
            let genus = rng.gen_range(2..=7);
            let Some(v) = sample_vector(g, genus, &mut rng, 200) else { continue };
            let order = g.order() as u64;
            let t = character_table(g, 2 * order, genus).unwrap();
            let degrees = t.degrees();
            for k in 1..=2 * order {
                let m = mults(&v, &t, k);
                let total: u64 = m.iter().zip(&degrees).map(|(a, d)| a * d).sum();
                let expected = if k == 1 { genus } else { (2 * k - 1) * (genus - 1) };
                ensure!(total == expected, "{} {v} k={k}: sum {total}, expected {expected}", g.label());
                checks += 1;
            }
            sampled += 1;
        }
    }
    Ok(format!("{sampled} vectors over {} groups, {checks} levels, zero failures", groups.len()))
}

fn free_action_regular_law() -> Outcome {
    let mut vectors = 0;
    let mut groups = 0;
    for spec in library(12) {
        let g = spec.build().unwrap();
        let order = g.order() as u64;
        let genus = 1 + order;
        let d = BranchingData::new(&g, 2, vec![]).unwrap();
        let vs = enumerate_hurwitz_vectors(&g, &d, &EnumOptions::default()).unwrap();
        if vs.is_empty() {
            continue;
        }
        groups += 1;
        let t = character_table(&g, 2 * order, genus).unwrap();
        for v in &vs {
            for k in 2..=2 * order {
                let mv = cw_character(v, &t, k).unwrap();
                let n = regular_multiple(&mv, &t);
                let expected = (2 * k - 1) * (genus - 1) / order;
                ensure!(n == Some(expected), "{spec} {v} k={k}: {n:?}, expected {expected}");
            }
            vectors += 1;
        }
    }
    Ok(format!("{vectors} free-action vectors over {groups} groups"))
}

fn character_table_suite() -> Outcome {
    let mut checked = 0;
    for spec in library(24) {
        let g = spec.build().unwrap();
        let t = character_table(&g, 1, 2).unwrap();
        let f = t.prime();
        let cls = conjugacy_classes(&g);
        let n = cls.class_count();
        ensure!(t.len() == n, "{spec}: {} characters for {n} classes", t.len());
        let chi = |i: usize, c: usize| t.irreducibles()[i].value(c);
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for c in 0..n {
                    let term =
                        f.mul(f.reduce(cls.class_size(c) as i64), f.mul(chi(i, c), chi(j, cls.inverse_class(c))));
                    s = f.add(s, term);
                }
                let expected = if i == j { f.reduce(g.order() as i64) } else { 0 };
                ensure!(s == expected, "{spec}: row orthogonality fails at ({i}, {j})");
            }
        }
        for c in 0..n {
            for d in 0..n {
                let mut s = 0;
                for i in 0..n {
                    s = f.add(s, f.mul(chi(i, c), chi(i, cls.inverse_class(d))));
                }
                let expected = if c == d { f.reduce((g.order() / cls.class_size(c)) as i64) } else { 0 };
                ensure!(s == expected, "{spec}: column orthogonality fails at ({c}, {d})");
            }
        }
        let sum_sq: u64 = t.degrees().iter().map(|d| d * d).sum();
        ensure!(sum_sq == g.order() as u64, "{spec}: sum of squared degrees {sum_sq}");
        if let Some(factors) = abelian_factors(&spec) {
            let mut oracle = dual_group(&g, &factors, &t);
            let mut rows: Vec<Vec<u64>> = t.irreducibles().iter().map(|c| c.values().to_vec()).collect();
            oracle.sort();
            rows.sort();
            ensure!(rows == oracle, "{spec}: table differs from the dual group");
        }
        checked += 1;
    }
    for ((m, n, r), expected) in [((3, 2, 2), vec![1, 1, 2]), ((4, 2, 3), vec![1, 1, 1, 1, 2])] {
        let g = build_metacyclic(MetacyclicParams::new(m, n, r).unwrap()).unwrap();
        let mut degrees = character_table(&g, 1, 2).unwrap().degrees();
        degrees.sort();
        ensure!(degrees == expected, "metacyclic:{m},{n},{r} degrees {degrees:?}");
    }
    Ok(format!("{checked} groups of order <= 24"))
}

fn abelian_factors(spec: &GroupSpec) -> Option<Vec<usize>> {
    match spec {
        GroupSpec::Cyclic(n) => Some(vec![*n]),
        GroupSpec::Abelian(f) => Some(f.clone()),
        _ => None,
    }
}

/// Characters of `Z/n1 x .. x Z/nt` written out directly from the
/// mixed-radix element encoding: `chi_a(x) = prod zeta_{n_i}^{a_i x_i}`.
/// Columns are indexed by the table's classes (singletons here).
fn dual_group(g: &FiniteGroup, factors: &[usize], t: &CharacterTable) -> Vec<Vec<u64>> {
    let f = t.prime();
    let coords = |mut x: usize| {
        let mut c = vec![0; factors.len()];
        for (i, &n) in factors.iter().enumerate().rev() {
            c[i] = x % n;
            x /= n;
        }
        c
    };
    let reps = t.classes().representatives();
    g.elements()
        .map(|a| {
            let ca = coords(a);
            reps.iter()
                .map(|&x| {
                    let cx = coords(x);
                    (0..factors.len())
                        .fold(1, |acc, i| f.mul(acc, f.unity_root(factors[i] as u64, (ca[i] * cx[i]) as i64)))
                })
                .collect()
        })
        .collect()
}

fn enumeration_counts() -> Outcome {
    let c3 = build_cyclic(3).unwrap();
    let c2 = build_cyclic(2).unwrap();
    let opts = EnumOptions::default();
    let count = |g: &FiniteGroup, orders: Vec<usize>| {
        enumerate_hurwitz_vectors(g, &BranchingData::new(g, 0, orders).unwrap(), &opts).unwrap().len()
    };
    // literal loops: nonzero residues summing to zero; every nonzero
    // element generates a group of prime order
    let brute = |p: usize, r: usize| {
        let mut n = 0;
        for code in 0..(p - 1).pow(r as u32) {
            let mut s = 0;
            let mut x = code;
            for _ in 0..r {
                s += 1 + x % (p - 1);
                x /= p - 1;
            }
            n += usize::from(s % p == 0);
        }
        n
    };
    let found = [count(&c3, vec![3; 3]), count(&c3, vec![3; 8]), count(&c2, vec![2; 6])];
    let oracle = [brute(3, 3), brute(3, 8), brute(2, 6)];
    ensure!(found == [2, 86, 1], "counts {found:?}, expected [2, 86, 1]");
    ensure!(oracle == found, "brute force {oracle:?} disagrees with enumeration {found:?}");
    let data = enumerate_branching_data(&c3, 6);
    let expected = vec![
        BranchingData { g_quot: 0, branch_orders: vec![3; 8] },
        BranchingData { g_quot: 1, branch_orders: vec![3; 5] },
        BranchingData { g_quot: 2, branch_orders: vec![3; 2] },
    ];
    ensure!(data == expected, "branching data {data:?}");
    Ok("counts 2, 86, 1 and three branching data".to_string())
}

fn schur_formula() -> Outcome {
    let d = |m, n, r| schur_multiplier_order(MetacyclicParams::new(m, n, r).unwrap()).unwrap().d;
    // H_2 of D_m is 0 for m odd and Z/2 for m even
    for m in 3..=12u64 {
        let known = if m % 2 == 0 { 2 } else { 1 };
        ensure!(d(m, 2, m - 1) == m.gcd(&2) && known == m.gcd(&2), "dihedral m={m}: {}", d(m, 2, m - 1));
    }
    // H_2(Z/m x Z/n) = Z/gcd(m, n)
    for m in 1..=12u64 {
        for n in 1..=12u64 {
            ensure!(d(m, n, 1) == m.gcd(&n), "abelian ({m}, {n}): {}", d(m, n, 1));
        }
    }
    let d4 = rr_component_lower_bound(MetacyclicParams::new(4, 2, 3).unwrap(), 9);
    let s3 = rr_component_lower_bound(MetacyclicParams::new(3, 2, 2).unwrap(), 7);
    ensure!(d4 == Ok(2) && s3 == Ok(1), "component bounds D4: {d4:?}, S3: {s3:?}");
    Ok("closed forms for m, n <= 12; D4 g=9 -> 2, S3 g=7 -> 1".to_string())
}

fn invariance_fuzz() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let groups: Vec<FiniteGroup> = library(12).iter().map(|s| s.build().unwrap()).filter(|g| g.order() >= 2).collect();
    let mut pairs = 0;
    while pairs < 1000 {
        let g = &groups[rng.gen_range(0..groups.len())];
        let genus = rng.gen_range(2..=6);
        let Some(v) = sample_vector(g, genus, &mut rng, 100) else { continue };
        let h = rng.gen_range(0..g.order());
        let order = g.order() as u64;
        let t = character_table(g, 2 * order, genus).unwrap();
        let conj = v.conjugate(g, h);
        let mut moved = v.clone();
        for _ in 0..rng.gen_range(1..=6) {
            if moved.branches.len() >= 2 {
                let i = rng.gen_range(0..moved.branches.len() - 1);
                moved = braid_move(g, &moved, i);
            }
        }
        for k in 1..=2 * order {
            let base = mults(&v, &t, k);
            ensure!(mults(&conj, &t, k) == base, "{} {v} conjugated by {h}: k={k} differs", g.label());
            ensure!(mults(&moved, &t, k) == base, "{} {v} -> {moved}: k={k} differs", g.label());
        }
        pairs += 1;
    }
    Ok(format!("{pairs} conjugation pairs with branch permutations"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("golden example multiplicities", golden_example),
        ("decomposition separation", decomposition_separation),
        ("periodicity suite", periodicity_suite),
        ("dimension identity", dimension_identity),
        ("free-action regular law", free_action_regular_law),
        ("character-table suite", character_table_suite),
        ("enumeration counts", enumeration_counts),
        ("Schur multiplier formula", schur_formula),
        ("invariance fuzz", invariance_fuzz),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
