#![allow(dead_code)]

use cw_moduli::group::{Elem, FiniteGroup};
use cw_moduli::hurwitz::{enumerate_branching_data, HurwitzVector};
use rand::seq::SliceRandom;
use rand::Rng;

/// The two vectors of the worked cyclic example in genus 6.
pub fn example_v() -> HurwitzVector {
    HurwitzVector::new(2, vec![1, 0, 0, 2], vec![2, 1])
}

pub fn example_v_prime() -> HurwitzVector {
    HurwitzVector::new(0, vec![], vec![1, 1, 2, 2, 1, 1, 2, 2])
}

/// Rejection sampler: random handles, random branch entries of the
/// prescribed orders, last branch entry solved from the relation.
pub fn sample_vector<R: Rng>(g: &FiniteGroup, genus: u64, rng: &mut R, tries: usize) -> Option<HurwitzVector> {
    let data = enumerate_branching_data(g, genus);
    if data.is_empty() {
        return None;
    }
    let by_order: Vec<Vec<Elem>> = (0..=g.order()).map(|m| g.elements_of_order(m)).collect();
    for _ in 0..tries {
        let d = data.choose(rng).unwrap();
        let mut orders = d.branch_orders.clone();
        orders.shuffle(rng);
        let handles: Vec<Elem> = (0..2 * d.g_quot).map(|_| rng.gen_range(0..g.order())).collect();
        let mut prod = 0;
        for pair in handles.chunks(2) {
            prod = g.mul(prod, g.commutator(pair[0], pair[1]));
        }
        let mut branches = Vec::with_capacity(orders.len());
        for (i, &m) in orders.iter().enumerate() {
            let c = if i + 1 == orders.len() { g.inv(prod) } else { *by_order[m].choose(rng).unwrap() };
            prod = g.mul(prod, c);
            branches.push(c);
        }
        let v = HurwitzVector::new(d.g_quot, handles, branches);
        if v.validate(g).is_ok() && v.branch_orders(g) == orders {
            return Some(v);
        }
    }
    None
}

/// Hurwitz move at position `i`: `(c_i, c_{i+1}) -> (c_i c_{i+1} c_i^-1, c_i)`.
/// Preserves the relation and the generated subgroup while swapping the
/// conjugacy classes of the two branch entries.
pub fn braid_move(g: &FiniteGroup, v: &HurwitzVector, i: usize) -> HurwitzVector {
    let mut w = v.clone();
    let (a, b) = (v.branches[i], v.branches[i + 1]);
    w.branches[i] = g.conj(b, a);
    w.branches[i + 1] = a;
    w
}
