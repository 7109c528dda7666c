//! Hurwitz vectors, branching data and Riemann-Hurwitz.
//!
//! A vector `(a_1, b_1, .., a_h, b_h; c_1, .., c_r)` is valid when every
//! `c_j` is nontrivial, `prod [a_i, b_i] * prod c_j = 1` with
//! `[a, b] = a b a^-1 b^-1`, and the entries generate the group.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::HurwitzError;
use crate::group::{Elem, FiniteGroup};

pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// Environment variable bounding the number of enumeration workers.
pub const THREADS_ENV: &str = "CW_MODULI_THREADS";

const GENERATION_MEMO_LIMIT: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HurwitzVector {
    pub g_quot: usize,
    pub handles: Vec<Elem>,
    pub branches: Vec<Elem>,
}

impl HurwitzVector {
    pub fn new(g_quot: usize, handles: Vec<Elem>, branches: Vec<Elem>) -> Self {
        HurwitzVector { g_quot, handles, branches }
    }

    pub fn from_json(text: &str) -> Result<Self, HurwitzError> {
        serde_json::from_str(text).map_err(|e| HurwitzError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain integer struct serialises")
    }

    /// Handles followed by branch entries.
    pub fn entries(&self) -> impl Iterator<Item = Elem> + '_ {
        self.handles.iter().chain(&self.branches).copied()
    }

    /// `prod [a_i, b_i] * prod c_j`.
    pub fn relation_product(&self, g: &FiniteGroup) -> Elem {
        let handles = self.handles.chunks(2).fold(0, |acc, ab| g.mul(acc, g.commutator(ab[0], ab[1])));
        self.branches.iter().fold(handles, |acc, &c| g.mul(acc, c))
    }

    /// Orders of the branch entries, in entry order.
    pub fn branch_orders(&self, g: &FiniteGroup) -> Vec<usize> {
        self.branches.iter().map(|&c| g.elem_order(c)).collect()
    }

    pub fn branching_data(&self, g: &FiniteGroup) -> BranchingData {
        let mut orders = self.branch_orders(g);
        orders.sort_unstable();
        BranchingData { g_quot: self.g_quot, branch_orders: orders }
    }

    /// Simultaneous conjugation `x -> h x h^-1` of every entry.
    pub fn conjugate(&self, g: &FiniteGroup, h: Elem) -> Self {
        HurwitzVector {
            g_quot: self.g_quot,
            handles: self.handles.iter().map(|&x| g.conj(x, h)).collect(),
            branches: self.branches.iter().map(|&x| g.conj(x, h)).collect(),
        }
    }

    pub fn genus(&self, g: &FiniteGroup) -> Result<i64, HurwitzError> {
        genus(g, self.g_quot, &self.branch_orders(g))
    }

    pub fn validate(&self, g: &FiniteGroup) -> Result<(), HurwitzError> {
        validate(self, g)
    }
}

impl std::fmt::Display for HurwitzVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[Elem]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "g'={} ({}; {})", self.g_quot, join(&self.handles), join(&self.branches))
    }
}

/// Quotient genus and the sorted multiset of branching indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BranchingData {
    pub g_quot: usize,
    pub branch_orders: Vec<usize>,
}

impl BranchingData {
    /// Checks that every index is at least 2 and is the order of an element.
    pub fn new(g: &FiniteGroup, g_quot: usize, mut branch_orders: Vec<usize>) -> Result<Self, HurwitzError> {
        let orders = g.element_orders();
        if let Some(&bad) = branch_orders.iter().find(|&&m| m < 2 || !orders.contains(&m)) {
            return Err(HurwitzError::BadBranchOrder(bad as u64));
        }
        branch_orders.sort_unstable();
        Ok(BranchingData { g_quot, branch_orders })
    }

    pub fn r(&self) -> usize {
        self.branch_orders.len()
    }

    pub fn genus(&self, g: &FiniteGroup) -> Result<i64, HurwitzError> {
        genus(g, self.g_quot, &self.branch_orders)
    }
}

impl std::fmt::Display for BranchingData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let orders = self.branch_orders.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "g'={} [{}]", self.g_quot, orders)
    }
}

/// Riemann-Hurwitz for a Galois cover:
/// `2g - 2 = |G| (2g' - 2) + sum_i (|G| / m_i)(m_i - 1)`.
pub fn genus(g: &FiniteGroup, g_quot: usize, branch_orders: &[usize]) -> Result<i64, HurwitzError> {
    let n = g.order() as i64;
    let mut rhs = n * (2 * g_quot as i64 - 2);
    for &m in branch_orders {
        if m == 0 || n % m as i64 != 0 {
            return Err(HurwitzError::NonIntegralGenus);
        }
        rhs += (n / m as i64) * (m as i64 - 1);
    }
    if rhs.rem_euclid(2) != 0 {
        return Err(HurwitzError::NonIntegralGenus);
    }
    let genus = rhs / 2 + 1;
    if genus < 0 {
        return Err(HurwitzError::NegativeGenus(genus));
    }
    Ok(genus)
}

/// Checks the three Hurwitz conditions in order: orders, relation, generation.
pub fn validate(v: &HurwitzVector, g: &FiniteGroup) -> Result<(), HurwitzError> {
    if v.handles.len() != 2 * v.g_quot {
        return Err(HurwitzError::HandleCount { expected: 2 * v.g_quot, found: v.handles.len() });
    }
    if let Some(x) = v.entries().find(|&x| x >= g.order()) {
        return Err(HurwitzError::UnknownElement(x));
    }
    if let Some((index, &elem)) = v.branches.iter().enumerate().find(|&(_, &c)| g.elem_order(c) <= 1) {
        return Err(HurwitzError::OrderViolation { index, elem });
    }
    let product = v.relation_product(g);
    if product != 0 {
        return Err(HurwitzError::RelationViolation { product });
    }
    let entries: Vec<Elem> = v.entries().collect();
    let sub = g.closure(&entries).len();
    if sub != g.order() {
        return Err(HurwitzError::NotGenerating { subgroup_order: sub });
    }
    Ok(())
}

/// All branching data `(g', [m_i])` realising genus `g` numerically, sorted
/// by quotient genus and then by the branch-order sequence.
pub fn enumerate_branching_data(g: &FiniteGroup, genus_target: u64) -> Vec<BranchingData> {
    let n = g.order() as i64;
    let target = 2 * genus_target as i64 - 2;
    let orders: Vec<usize> = g.element_orders().into_iter().filter(|&m| m > 1).collect();
    let weight = |m: usize| n / m as i64 * (m as i64 - 1);
    let mut out = Vec::new();
    let max_quot = (target / (2 * n)) + 1;
    for g_quot in 0..=max_quot {
        let rem = target - n * (2 * g_quot - 2);
        if rem < 0 {
            continue;
        }
        let mut stack = Vec::new();
        collect_multisets(&orders, &weight, 0, rem, &mut stack, &mut |ms| {
            out.push(BranchingData { g_quot: g_quot as usize, branch_orders: ms.to_vec() });
        });
    }
    out.sort();
    out
}

fn collect_multisets(
    orders: &[usize],
    weight: &dyn Fn(usize) -> i64,
    from: usize,
    rem: i64,
    stack: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if rem == 0 {
        emit(stack);
        return;
    }
    for (i, &m) in orders.iter().enumerate().skip(from) {
        let w = weight(m);
        if w <= rem {
            stack.push(m);
            collect_multisets(orders, weight, i, rem - w, stack, emit);
            stack.pop();
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    /// Emit only the lexicographically least vector of each orbit under
    /// simultaneous conjugation.
    pub up_to_conjugacy: bool,
    /// Fail with `CapExceeded` once more vectors than this are found.
    pub cap: usize,
    /// Worker count for `enumerate_hurwitz_vectors`.
    pub threads: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { up_to_conjugacy: false, cap: DEFAULT_ENUMERATION_CAP, threads: 1 }
    }
}

impl EnumOptions {
    /// Defaults with `threads` read from `CW_MODULI_THREADS`.
    pub fn from_env() -> Self {
        let threads = std::env::var(THREADS_ENV).ok().and_then(|s| s.parse().ok()).filter(|&t| t >= 1).unwrap_or(1);
        EnumOptions { threads, ..Default::default() }
    }
}

#[derive(Clone, Copy)]
enum Slot {
    HandleA,
    HandleB,
    Branch,
    ForcedBranch,
}

struct Search<'a> {
    g: &'a FiniteGroup,
    slots: Vec<Slot>,
    candidates: Vec<Vec<Elem>>,
    forced_order: usize,
    g_quot: usize,
    up_to_conjugacy: bool,
    memo: HashMap<Vec<Elem>, bool>,
}

impl<'a> Search<'a> {
    fn new(g: &'a FiniteGroup, d: &BranchingData, up_to_conjugacy: bool) -> Self {
        let all: Vec<Elem> = g.elements().collect();
        let mut slots = Vec::new();
        let mut candidates = Vec::new();
        for _ in 0..d.g_quot {
            slots.extend([Slot::HandleA, Slot::HandleB]);
            candidates.extend([all.clone(), all.clone()]);
        }
        let r = d.branch_orders.len();
        for (j, &m) in d.branch_orders.iter().enumerate() {
            if j + 1 == r {
                slots.push(Slot::ForcedBranch);
                candidates.push(Vec::new());
            } else {
                slots.push(Slot::Branch);
                candidates.push(g.elements_of_order(m));
            }
        }
        Search {
            g,
            slots,
            candidates,
            forced_order: d.branch_orders.last().copied().unwrap_or(0),
            g_quot: d.g_quot,
            up_to_conjugacy,
            memo: HashMap::new(),
        }
    }

    /// Choices for the first slot, used to split work between workers.
    fn prefixes(&self) -> Option<Vec<Elem>> {
        match self.slots.first() {
            Some(Slot::HandleA) | Some(Slot::Branch) => Some(self.candidates[0].clone()),
            _ => None,
        }
    }

    fn generates(&mut self, entries: &[Elem]) -> bool {
        let mut key: Vec<Elem> = entries.to_vec();
        key.sort_unstable();
        key.dedup();
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let ok = self.g.generates(&key);
        if self.memo.len() >= GENERATION_MEMO_LIMIT {
            self.memo.clear();
        }
        self.memo.insert(key, ok);
        ok
    }

    fn is_orbit_minimum(&self, entries: &[Elem]) -> bool {
        let g = self.g;
        g.elements().skip(1).all(|h| {
            for &x in entries {
                let y = g.conj(x, h);
                if y != x {
                    return y > x;
                }
            }
            true
        })
    }

    fn run(&mut self, first: Option<Elem>, emit: &mut dyn FnMut(HurwitzVector) -> ControlFlow<()>) -> ControlFlow<()> {
        let mut entries = Vec::with_capacity(self.slots.len());
        self.dfs(0, 0, first, &mut entries, emit)
    }

    fn dfs(
        &mut self,
        pos: usize,
        prod: Elem,
        first: Option<Elem>,
        entries: &mut Vec<Elem>,
        emit: &mut dyn FnMut(HurwitzVector) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let g = self.g;
        if pos == self.slots.len() {
            if prod != 0 {
                return ControlFlow::Continue(());
            }
            return self.finish(entries, emit);
        }
        match self.slots[pos] {
            Slot::ForcedBranch => {
                let c = g.inv(prod);
                if g.elem_order(c) != self.forced_order {
                    return ControlFlow::Continue(());
                }
                entries.push(c);
                let flow = self.finish(entries, emit);
                entries.pop();
                flow
            }
            slot => {
                let choices = match (pos, first) {
                    (0, Some(x)) => vec![x],
                    _ => self.candidates[pos].clone(),
                };
                for x in choices {
                    let next = match slot {
                        Slot::HandleA => prod,
                        Slot::HandleB => g.mul(prod, g.commutator(entries[pos - 1], x)),
                        _ => g.mul(prod, x),
                    };
                    entries.push(x);
                    let flow = self.dfs(pos + 1, next, None, entries, emit);
                    entries.pop();
                    flow?;
                }
                ControlFlow::Continue(())
            }
        }
    }

    fn finish(&mut self, entries: &[Elem], emit: &mut dyn FnMut(HurwitzVector) -> ControlFlow<()>) -> ControlFlow<()> {
        if self.up_to_conjugacy && !self.is_orbit_minimum(entries) {
            return ControlFlow::Continue(());
        }
        if !self.generates(entries) {
            return ControlFlow::Continue(());
        }
        let split = 2 * self.g_quot;
        emit(HurwitzVector::new(self.g_quot, entries[..split].to_vec(), entries[split..].to_vec()))
    }
}

/// Streams every Hurwitz vector with branching data `d` to `visit`, in
/// lexicographic order of entries, until `visit` breaks. Returns the number
/// of vectors visited. `opts.threads` is ignored; `opts.cap` is enforced.
pub fn visit_hurwitz_vectors(
    g: &FiniteGroup,
    d: &BranchingData,
    opts: &EnumOptions,
    mut visit: impl FnMut(&HurwitzVector) -> ControlFlow<()>,
) -> Result<usize, HurwitzError> {
    let mut search = Search::new(g, d, opts.up_to_conjugacy);
    let mut count = 0usize;
    let mut capped = false;
    let _ = search.run(None, &mut |v| {
        count += 1;
        if count > opts.cap {
            capped = true;
            return ControlFlow::Break(());
        }
        visit(&v)
    });
    if capped {
        return Err(HurwitzError::CapExceeded { cap: opts.cap });
    }
    Ok(count)
}

/// Every Hurwitz vector with branching data `d`, in lexicographic order of
/// entries. With `opts.threads > 1` the search tree is split on the first
/// entry and the per-prefix results are concatenated in prefix order, so the
/// output does not depend on the thread count.
pub fn enumerate_hurwitz_vectors(
    g: &FiniteGroup,
    d: &BranchingData,
    opts: &EnumOptions,
) -> Result<Vec<HurwitzVector>, HurwitzError> {
    let probe = Search::new(g, d, opts.up_to_conjugacy);
    let prefixes = match (opts.threads > 1, probe.prefixes()) {
        (true, Some(p)) if p.len() > 1 => p,
        _ => {
            let mut out = Vec::new();
            visit_hurwitz_vectors(g, d, opts, |v| {
                out.push(v.clone());
                ControlFlow::Continue(())
            })?;
            return Ok(out);
        }
    };
    let total = AtomicUsize::new(0);
    let overflow = AtomicBool::new(false);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Vec<HurwitzVector>>>> = Mutex::new(vec![None; prefixes.len()]);
    std::thread::scope(|scope| {
        for _ in 0..opts.threads.min(prefixes.len()) {
            scope.spawn(|| {
                let mut search = Search::new(g, d, opts.up_to_conjugacy);
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= prefixes.len() || overflow.load(Ordering::Relaxed) {
                        break;
                    }
                    let mut local = Vec::new();
                    let _ = search.run(Some(prefixes[i]), &mut |v| {
                        if total.fetch_add(1, Ordering::Relaxed) >= opts.cap {
                            overflow.store(true, Ordering::Relaxed);
                            return ControlFlow::Break(());
                        }
                        local.push(v);
                        ControlFlow::Continue(())
                    });
                    results.lock().unwrap()[i] = Some(local);
                }
            });
        }
    });
    if overflow.load(Ordering::Relaxed) {
        return Err(HurwitzError::CapExceeded { cap: opts.cap });
    }
    Ok(results.into_inner().unwrap().into_iter().flatten().flatten().collect())
}

/// Hurwitz vectors for every branching datum of genus `g`, in branching-data
/// order.
pub fn enumerate_genus(
    g: &FiniteGroup,
    genus_target: u64,
    opts: &EnumOptions,
) -> Result<Vec<(BranchingData, Vec<HurwitzVector>)>, HurwitzError> {
    let mut total = 0usize;
    let mut out = Vec::new();
    for d in enumerate_branching_data(g, genus_target) {
        let remaining = EnumOptions { cap: opts.cap - total, ..*opts };
        let vs = enumerate_hurwitz_vectors(g, &d, &remaining).map_err(|e| match e {
            HurwitzError::CapExceeded { .. } => HurwitzError::CapExceeded { cap: opts.cap },
            other => other,
        })?;
        total += vs.len();
        out.push((d, vs));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_cyclic, build_metacyclic, MetacyclicParams};

    fn example_v() -> HurwitzVector {
        HurwitzVector::new(2, vec![1, 0, 0, 2], vec![2, 1])
    }

    #[test]
    fn validation_diagnostics() {
        let c3 = build_cyclic(3).unwrap();
        assert_eq!(validate(&example_v(), &c3), Ok(()));
        let bad = HurwitzVector::new(0, vec![], vec![1, 0, 2]);
        assert!(matches!(validate(&bad, &c3), Err(HurwitzError::OrderViolation { index: 1, elem: 0 })));
        let bad = HurwitzVector::new(0, vec![], vec![1, 1]);
        assert!(matches!(validate(&bad, &c3), Err(HurwitzError::RelationViolation { product: 2 })));
        let c4 = build_cyclic(4).unwrap();
        let bad = HurwitzVector::new(0, vec![], vec![2, 2, 2, 2]);
        assert!(matches!(validate(&bad, &c4), Err(HurwitzError::NotGenerating { subgroup_order: 2 })));
        let bad = HurwitzVector::new(1, vec![1], vec![]);
        assert!(matches!(validate(&bad, &c4), Err(HurwitzError::HandleCount { .. })));
        let bad = HurwitzVector::new(0, vec![], vec![5]);
        assert!(matches!(validate(&bad, &c4), Err(HurwitzError::UnknownElement(5))));
    }

    #[test]
    fn genus_examples() {
        let c3 = build_cyclic(3).unwrap();
        assert_eq!(example_v().genus(&c3), Ok(6));
        let v2 = HurwitzVector::new(0, vec![], vec![1, 1, 2, 2, 1, 1, 2, 2]);
        assert_eq!(v2.genus(&c3), Ok(6));
        let c2 = build_cyclic(2).unwrap();
        assert_eq!(genus(&c2, 2, &[]), Ok(3));
        assert_eq!(genus(&c3, 0, &[3]), Err(HurwitzError::NegativeGenus(-1)));
        assert_eq!(genus(&c3, 0, &[2]), Err(HurwitzError::NonIntegralGenus));
        assert_eq!(genus(&c3, 0, &[]), Err(HurwitzError::NegativeGenus(-2)));
        assert_eq!(genus(&c2, 0, &[4]), Err(HurwitzError::NonIntegralGenus));
    }

    #[test]
    fn branching_data_examples() {
        let c3 = build_cyclic(3).unwrap();
        let bd = enumerate_branching_data(&c3, 6);
        let expect = vec![
            BranchingData { g_quot: 0, branch_orders: vec![3; 8] },
            BranchingData { g_quot: 1, branch_orders: vec![3; 5] },
            BranchingData { g_quot: 2, branch_orders: vec![3; 2] },
        ];
        assert_eq!(bd, expect);
        let c2 = build_cyclic(2).unwrap();
        assert_eq!(
            enumerate_branching_data(&c2, 2),
            vec![
                BranchingData { g_quot: 0, branch_orders: vec![2; 6] },
                BranchingData { g_quot: 1, branch_orders: vec![2; 2] },
            ]
        );
        let triv = build_cyclic(1).unwrap();
        assert_eq!(enumerate_branching_data(&triv, 2), vec![BranchingData { g_quot: 2, branch_orders: vec![] }]);
        let s3 = build_metacyclic(MetacyclicParams::new(3, 2, 2).unwrap()).unwrap();
        for genus_target in 2..8u64 {
            for d in enumerate_branching_data(&s3, genus_target) {
                assert_eq!(d.genus(&s3), Ok(genus_target as i64));
            }
        }
        assert!(BranchingData::new(&c3, 0, vec![2]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let c3 = build_cyclic(3).unwrap();
        let opts = EnumOptions::default();
        let d = BranchingData::new(&c3, 0, vec![3, 3, 3]).unwrap();
        let vs = enumerate_hurwitz_vectors(&c3, &d, &opts).unwrap();
        assert_eq!(
            vs,
            vec![HurwitzVector::new(0, vec![], vec![1, 1, 1]), HurwitzVector::new(0, vec![], vec![2, 2, 2])]
        );
        let d = BranchingData::new(&c3, 0, vec![3; 8]).unwrap();
        assert_eq!(enumerate_hurwitz_vectors(&c3, &d, &opts).unwrap().len(), 86);
        let c2 = build_cyclic(2).unwrap();
        let d = BranchingData::new(&c2, 0, vec![2; 6]).unwrap();
        assert_eq!(enumerate_hurwitz_vectors(&c2, &d, &opts).unwrap(), vec![HurwitzVector::new(0, vec![], vec![1; 6])]);
    }

    #[test]
    fn cap_is_enforced() {
        let c3 = build_cyclic(3).unwrap();
        let d = BranchingData::new(&c3, 0, vec![3; 8]).unwrap();
        for threads in [1, 4] {
            let opts = EnumOptions { cap: 10, threads, ..Default::default() };
            assert_eq!(enumerate_hurwitz_vectors(&c3, &d, &opts), Err(HurwitzError::CapExceeded { cap: 10 }));
        }
    }

    #[test]
    fn threads_do_not_change_output() {
        let s3 = build_metacyclic(MetacyclicParams::new(3, 2, 2).unwrap()).unwrap();
        let d = BranchingData::new(&s3, 1, vec![2, 2]).unwrap();
        let one = enumerate_hurwitz_vectors(&s3, &d, &EnumOptions::default()).unwrap();
        let four = enumerate_hurwitz_vectors(&s3, &d, &EnumOptions { threads: 4, ..Default::default() }).unwrap();
        assert!(!one.is_empty());
        assert_eq!(one, four);
        let mut sorted = one.clone();
        sorted.sort_by(|a, b| a.entries().cmp(b.entries()));
        assert_eq!(one, sorted);
    }

    #[test]
    fn orbit_representatives() {
        let s3 = build_metacyclic(MetacyclicParams::new(3, 2, 2).unwrap()).unwrap();
        let d = BranchingData::new(&s3, 0, vec![2, 2, 3]).unwrap();
        let raw = enumerate_hurwitz_vectors(&s3, &d, &EnumOptions::default()).unwrap();
        let reps =
            enumerate_hurwitz_vectors(&s3, &d, &EnumOptions { up_to_conjugacy: true, ..Default::default() }).unwrap();
        // brute-force orbit partition of the raw list
        let mut orbits: Vec<Vec<HurwitzVector>> = Vec::new();
        for v in &raw {
            if !orbits.iter().any(|o| o.contains(v)) {
                let mut o: Vec<HurwitzVector> = s3.elements().map(|h| v.conjugate(&s3, h)).collect();
                o.sort();
                o.dedup();
                orbits.push(o);
            }
        }
        assert_eq!(reps.len(), orbits.len());
        for o in &orbits {
            assert_eq!(reps.iter().filter(|r| o.contains(r)).count(), 1);
        }
    }

    #[test]
    fn json_round_trip() {
        let v = HurwitzVector::from_json(r#"{"g_quot":2,"handles":[1,0,0,2],"branches":[2,1]}"#).unwrap();
        assert_eq!(v, example_v());
        assert_eq!(HurwitzVector::from_json(&v.to_json()).unwrap(), v);
        assert!(HurwitzVector::from_json("{").is_err());
    }
}
