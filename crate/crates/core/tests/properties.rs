mod common;

use std::collections::BTreeMap;

use cw_moduli::chartab::character_table;
use cw_moduli::cw::{cw_character, MultiplicityVector};
use cw_moduli::decomposition::{canonical_decomposition, decompose_at_k, refine, Decomposition};
use cw_moduli::group::{
    build_abelian, build_cyclic, build_metacyclic, conjugacy_classes, library, FiniteGroup, MetacyclicParams,
};
use cw_moduli::hurwitz::{enumerate_branching_data, enumerate_genus, genus, EnumOptions, HurwitzVector};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::sample_vector;

fn small_groups() -> Vec<FiniteGroup> {
    library(24).iter().map(|s| s.build().unwrap()).collect()
}

#[test]
fn axioms_hold_up_to_order_256() {
    let mut groups = small_groups();
    for n in [64, 128, 255, 256] {
        groups.push(build_cyclic(n).unwrap());
    }
    groups.push(build_abelian(&[2, 4, 4, 8]).unwrap());
    for (m, n, r) in [(64, 4, 63), (32, 8, 3), (63, 4, 8), (127, 2, 126)] {
        groups.push(build_metacyclic(MetacyclicParams::new(m, n, r).unwrap()).unwrap());
    }
    for g in &groups {
        assert!(g.order() <= 256);
        g.verify_axioms().unwrap_or_else(|e| panic!("{}: {e}", g.label()));
    }
}

#[test]
fn metacyclic_abelian_iff_r_is_one() {
    for m in 1..=16u64 {
        for n in 1..=8u64 {
            for r in 1..=m {
                let Ok(p) = MetacyclicParams::new(m, n, r) else { continue };
                let g = build_metacyclic(p).unwrap();
                let scan = (0..g.order()).all(|a| (0..g.order()).all(|b| g.mul(a, b) == g.mul(b, a)));
                assert_eq!(scan, r % m == 1 % m, "({m},{n},{r})");
            }
        }
    }
}

#[test]
fn classes_are_conjugation_invariant_and_match_table() {
    for g in small_groups() {
        let cls = conjugacy_classes(&g);
        for x in g.elements() {
            for h in g.elements() {
                assert_eq!(cls.class_of(x), cls.class_of(g.conj(x, h)));
            }
        }
        assert_eq!(cls.class_count(), character_table(&g, 1, 2).unwrap().len(), "{}", g.label());
        let all: Vec<usize> = g.elements().collect();
        assert!(g.generates(&all));
        assert_eq!(g.generates(&[]), g.order() == 1);
    }
}

#[test]
fn branching_data_have_the_requested_genus() {
    for g in small_groups().iter().filter(|g| g.order() <= 12) {
        for target in 2..=6 {
            for d in enumerate_branching_data(g, target) {
                assert_eq!(genus(g, d.g_quot, &d.branch_orders), Ok(target as i64), "{} {d}", g.label());
            }
        }
    }
}

#[test]
fn enumerated_vectors_validate() {
    let s3 = build_metacyclic(MetacyclicParams::new(3, 2, 2).unwrap()).unwrap();
    let d4 = build_metacyclic(MetacyclicParams::new(4, 2, 3).unwrap()).unwrap();
    let z2z2 = build_abelian(&[2, 2]).unwrap();
    for (g, target) in [(&s3, 3), (&s3, 4), (&d4, 3), (&z2z2, 3)] {
        for (d, vs) in enumerate_genus(g, target, &EnumOptions::default()).unwrap() {
            for v in vs {
                v.validate(g).unwrap();
                assert_eq!(v.branching_data(g), d);
                assert_eq!(v.genus(g), Ok(target as i64));
            }
        }
    }
}

#[test]
fn abelian_handles_resample_freely() {
    let g = build_abelian(&[2, 6]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut resampled = 0;
    while resampled < 300 {
        let Some(v) = sample_vector(&g, 5, &mut rng, 100) else { continue };
        let mut w = v.clone();
        for h in &mut w.handles {
            *h = rng.gen_range(0..g.order());
        }
        let mut gens = w.handles.clone();
        gens.extend(&w.branches);
        assert_eq!(w.validate(&g).is_ok(), g.generates(&gens), "{w}");
        resampled += 1;
    }
}

/// All set partitions of `0..n` as canonical label vectors.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for l in 0..=next {
            prefix.push(l);
            rec(prefix, n, out);
            prefix.pop();
        }
    }
    rec(&mut Vec::new(), n, &mut out);
    out
}

fn finer(a: &[usize], b: &[usize]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| a[i] != a[j] || b[i] == b[j]))
}

fn partition_from_labels(labels: &[u64]) -> Decomposition {
    let items: Vec<HurwitzVector> = (0..labels.len()).map(|i| HurwitzVector::new(0, vec![], vec![i])).collect();
    let keys = labels.iter().map(|&l| vec![MultiplicityVector { k: 1, mults: vec![l] }]).collect();
    Decomposition::from_keys(items, keys)
}

fn same_blocks(a: &[usize], b: &[usize]) -> bool {
    finer(a, b) && finer(b, a)
}

proptest! {
    #[test]
    fn refine_is_the_lattice_meet(a in prop::collection::vec(0u64..3, 1..=6), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b: Vec<u64> = a.iter().map(|_| rng.gen_range(0..3)).collect();
        let pa = partition_from_labels(&a);
        let pb = partition_from_labels(&b);
        let meet = refine(&pa, &pb).unwrap().labels();
        let (la, lb) = (pa.labels(), pb.labels());
        let lower: Vec<Vec<usize>> =
            set_partitions(a.len()).into_iter().filter(|p| finer(p, &la) && finer(p, &lb)).collect();
        let coarsest = lower.iter().filter(|p| lower.iter().all(|q| finer(q, p))).collect::<Vec<_>>();
        prop_assert_eq!(coarsest.len(), 1);
        prop_assert!(same_blocks(&meet, coarsest[0]));
    }

    #[test]
    fn eigenvalue_multiplicities_are_class_functions(gi in 0usize..66, x in any::<prop::sample::Index>(), h in any::<prop::sample::Index>()) {
        let lib = library(24);
        let g = lib[gi % lib.len()].build().unwrap();
        let t = character_table(&g, 1, 2).unwrap();
        let (x, h) = (x.index(g.order()), h.index(g.order()));
        for rho in 0..t.len() {
            let a = t.eigenvalue_multiplicities(rho, x).unwrap();
            let b = t.eigenvalue_multiplicities(rho, g.conj(x, h)).unwrap();
            prop_assert_eq!(a.counts, b.counts);
        }
    }

    #[test]
    fn genus_invariant_under_conjugation_and_branch_shuffles(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lib = library(12);
        let g = lib[rng.gen_range(0..lib.len())].build().unwrap();
        if let Some(v) = sample_vector(&g, rng.gen_range(2..=6), &mut rng, 200) {
            let h = rng.gen_range(0..g.order());
            prop_assert_eq!(v.conjugate(&g, h).genus(&g), v.genus(&g));
            let mut orders = v.branch_orders(&g);
            orders.shuffle(&mut rng);
            prop_assert_eq!(genus(&g, v.g_quot, &orders), v.genus(&g));
        }
    }
}

#[test]
fn equal_order_branch_permutations_keep_multiplicities_for_abelian_groups() {
    // for abelian groups any reordering of branch entries keeps the relation
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for factors in [vec![6], vec![2, 2], vec![2, 4], vec![3, 3], vec![12]] {
        let g = build_abelian(&factors).unwrap();
        let t = character_table(&g, 2 * g.order() as u64, 6).unwrap();
        let mut done = 0;
        while done < 40 {
            let target = rng.gen_range(2..=6);
            let Some(v) = sample_vector(&g, target, &mut rng, 200) else { continue };
            let mut w = v.clone();
            w.branches.shuffle(&mut rng);
            w.validate(&g).unwrap();
            for k in 1..=2 * g.order() as u64 {
                assert_eq!(cw_character(&v, &t, k).unwrap(), cw_character(&w, &t, k).unwrap());
            }
            done += 1;
        }
    }
}

#[test]
fn canonical_decomposition_ignores_input_order() {
    let g = build_metacyclic(MetacyclicParams::new(3, 2, 2).unwrap()).unwrap();
    let t = character_table(&g, 6, 4).unwrap();
    let items: Vec<HurwitzVector> =
        enumerate_genus(&g, 4, &EnumOptions::default()).unwrap().into_iter().flat_map(|(_, vs)| vs).collect();
    let base = canonical_decomposition(&items, &t).unwrap();
    let key_of = |d: &Decomposition| -> BTreeMap<HurwitzVector, Vec<MultiplicityVector>> {
        let labels = d.labels();
        d.items().iter().cloned().zip(labels.iter().map(|&l| d.keys()[l].clone())).collect()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let mut shuffled = items.clone();
        shuffled.shuffle(&mut rng);
        let other = canonical_decomposition(&shuffled, &t).unwrap();
        assert_eq!(other.decomposition.block_count(), base.decomposition.block_count());
        assert_eq!(other.stabilization_depth, base.stabilization_depth);
        assert_eq!(key_of(&other.decomposition), key_of(&base.decomposition));
    }
}

#[test]
fn conjugate_items_share_blocks() {
    let g = build_metacyclic(MetacyclicParams::new(4, 2, 3).unwrap()).unwrap();
    let t = character_table(&g, 16, 3).unwrap();
    let items: Vec<HurwitzVector> =
        enumerate_genus(&g, 3, &EnumOptions::default()).unwrap().into_iter().flat_map(|(_, vs)| vs).collect();
    let index: BTreeMap<&HurwitzVector, usize> = items.iter().enumerate().map(|(i, v)| (v, i)).collect();
    for k in 1..=16 {
        let labels = decompose_at_k(&items, &t, k).unwrap().labels();
        for (i, v) in items.iter().enumerate() {
            for h in g.elements() {
                let j = index[&v.conjugate(&g, h)];
                assert_eq!(labels[i], labels[j], "k={k} {v} h={h}");
            }
        }
    }
}
