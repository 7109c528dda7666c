//! Finite groups stored as full multiplication tables.
//!
//! Element ids are dense integers `0..order` with `0` the identity. Each
//! builder documents its encoding so that element ids in test vectors and
//! JSON inputs are stable:
//!
//! * `cyclic:n` -- id `k` is the residue `k mod n`.
//! * `abelian:n1,..,nt` -- mixed radix, first factor most significant, so
//!   `(e1,..,et)` has id `((e1*n2 + e2)*n3 + e3)...`.
//! * `metacyclic:m,n,r` -- id `i*n + j` is `x^i y^j` with `0 <= i < m`,
//!   `0 <= j < n`.
//! * `perm:...` -- the generated permutations sorted lexicographically by
//!   their image lists; the identity sorts first.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_integer::Integer;
use serde::Deserialize;

use crate::error::GroupError;

/// Dense element id; `0` is always the identity.
pub type Elem = usize;

/// Largest group order accepted unless a caller raises the cap.
pub const DEFAULT_ORDER_CAP: usize = 512;

/// Largest order for which `verify_axioms` is run on user-supplied tables.
const EXHAUSTIVE_CHECK_LIMIT: usize = 512;

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
    exponent: usize,
    label: String,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("label", &self.label).field("order", &self.order).finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major table without checking the axioms.
    /// Inverses and element orders are derived from the table.
    fn from_raw(order: usize, mul: Vec<u32>, label: String) -> Result<Self, GroupError> {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
            if inv[a] == u32::MAX {
                return Err(GroupError::InvalidTable(format!("element {a} has no inverse")));
            }
        }
        let mut elem_order = vec![0u32; order];
        for a in 0..order {
            let mut x = a;
            let mut k = 1u32;
            while x != 0 {
                x = mul[x * order + a] as usize;
                k += 1;
                if k as usize > order {
                    return Err(GroupError::InvalidTable(format!("powers of element {a} never reach the identity")));
                }
            }
            elem_order[a] = k;
        }
        let exponent = elem_order.iter().fold(1usize, |acc, &o| acc.lcm(&(o as usize)));
        Ok(FiniteGroup { order, mul, inv, elem_order, exponent, label })
    }

    /// Builds a group from an explicit multiplication table, checking every
    /// group axiom exhaustively.
    pub fn from_table(rows: &[Vec<usize>], label: impl Into<String>, cap: usize) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if order > cap {
            return Err(GroupError::TooLarge { order, cap });
        }
        let mut mul = Vec::with_capacity(order * order);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::InvalidTable(format!("row {a} has {} entries, expected {order}", row.len())));
            }
            for &x in row {
                if x >= order {
                    return Err(GroupError::InvalidTable(format!("entry {x} out of range in row {a}")));
                }
                mul.push(x as u32);
            }
        }
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(GroupError::InvalidTable("element 0 is not the identity".into()));
            }
        }
        let g = Self::from_raw(order, mul, label.into())?;
        if order <= EXHAUSTIVE_CHECK_LIMIT {
            g.verify_axioms()?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a] as usize
    }

    #[inline]
    pub fn elem_order(&self, a: Elem) -> usize {
        self.elem_order[a] as usize
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let k = k % self.elem_order(a);
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `h g h^-1`.
    #[inline]
    pub fn conj(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(h, g), self.inv(h))
    }

    /// `[a, b] = a b a^-1 b^-1`.
    #[inline]
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Distinct element orders, ascending.
    pub fn element_orders(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elem_order.iter().map(|&o| o as usize).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn elements_of_order(&self, m: usize) -> Vec<Elem> {
        self.elements().filter(|&x| self.elem_order(x) == m).collect()
    }

    /// Exhaustive check of identity, inverse and associativity laws.
    pub fn verify_axioms(&self) -> Result<(), GroupError> {
        let n = self.order;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(GroupError::InvalidTable("identity law fails".into()));
            }
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return Err(GroupError::InvalidTable(format!("inverse law fails at {x}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::InvalidTable(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// The subgroup generated by `gens`, as a sorted list of element ids.
    pub fn closure(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut out = vec![0usize];
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True iff `gens` generates the whole group.
    pub fn generates(&self, gens: &[Elem]) -> bool {
        self.closure(gens).len() == self.order
    }
}

/// Parameters of `<x, y | x^m = y^n = 1, y x y^-1 = x^r>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MetacyclicParams {
    m: u64,
    n: u64,
    r: u64,
}

impl MetacyclicParams {
    pub fn new(m: u64, n: u64, r: u64) -> Result<Self, GroupError> {
        let bad = || GroupError::InvalidMetacyclic { m, n, r };
        if m == 0 || n == 0 || r == 0 || r > m {
            return Err(bad());
        }
        let mut acc = 1 % m;
        for _ in 0..n {
            acc = acc * (r % m) % m;
        }
        if acc != 1 % m {
            return Err(bad());
        }
        Ok(MetacyclicParams { m, n, r })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    /// The presentation defines an abelian group iff `r = 1 (mod m)`.
    pub fn is_abelian(&self) -> bool {
        self.r % self.m == 1 % self.m
    }
}

/// Builders with a configurable order cap.
#[derive(Debug, Clone, Copy)]
pub struct GroupBuilder {
    pub max_order: usize,
}

impl Default for GroupBuilder {
    fn default() -> Self {
        GroupBuilder { max_order: DEFAULT_ORDER_CAP }
    }
}

impl GroupBuilder {
    pub fn new(max_order: usize) -> Self {
        GroupBuilder { max_order }
    }

    fn check(&self, order: usize) -> Result<(), GroupError> {
        if order > self.max_order {
            Err(GroupError::TooLarge { order, cap: self.max_order })
        } else {
            Ok(())
        }
    }

    pub fn cyclic(&self, n: usize) -> Result<FiniteGroup, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroFactor);
        }
        self.check(n)?;
        let mul = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        FiniteGroup::from_raw(n, mul, format!("cyclic:{n}"))
    }

    pub fn abelian(&self, factors: &[usize]) -> Result<FiniteGroup, GroupError> {
        if factors.is_empty() {
            return Err(GroupError::EmptyFactors);
        }
        if factors.contains(&0) {
            return Err(GroupError::ZeroFactor);
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, &f| acc.checked_mul(f).filter(|&o| o <= self.max_order))
            .ok_or(GroupError::TooLarge { order: usize::MAX, cap: self.max_order })?;
        let decode = |mut x: usize| {
            let mut digits = vec![0usize; factors.len()];
            for (d, &f) in digits.iter_mut().zip(factors).rev() {
                *d = x % f;
                x /= f;
            }
            digits
        };
        let digits: Vec<Vec<usize>> = (0..order).map(decode).collect();
        let mut mul = Vec::with_capacity(order * order);
        for a in &digits {
            for b in &digits {
                let id = a.iter().zip(b).zip(factors).fold(0usize, |acc, ((&x, &y), &f)| acc * f + (x + y) % f);
                mul.push(id as u32);
            }
        }
        let label = format!("abelian:{}", factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(","));
        FiniteGroup::from_raw(order, mul, label)
    }

    pub fn metacyclic(&self, p: MetacyclicParams) -> Result<FiniteGroup, GroupError> {
        let (m, n, r) = (p.m as usize, p.n as usize, p.r as usize);
        let order = m.checked_mul(n).ok_or(GroupError::TooLarge { order: usize::MAX, cap: self.max_order })?;
        self.check(order)?;
        // r^j mod m for j in 0..n
        let mut rpow = vec![1 % m; n];
        for j in 1..n {
            rpow[j] = rpow[j - 1] * r % m;
        }
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            let (i1, j1) = (a / n, a % n);
            for b in 0..order {
                let (i2, j2) = (b / n, b % n);
                // x^i1 y^j1 x^i2 y^j2 = x^(i1 + i2 r^j1) y^(j1 + j2)
                let i = (i1 + i2 * rpow[j1]) % m;
                let j = (j1 + j2) % n;
                mul.push((i * n + j) as u32);
            }
        }
        FiniteGroup::from_raw(order, mul, format!("metacyclic:{},{},{}", p.m, p.n, p.r))
    }

    /// Closure of permutation generators given as image lists on `0..degree`.
    /// Composition is right-to-left: `(p q)(i) = p(q(i))`.
    pub fn permutations(&self, degree: usize, gens: &[Vec<usize>], label: String) -> Result<FiniteGroup, GroupError> {
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&i| i >= degree || std::mem::replace(&mut seen[i], true)) {
                return Err(GroupError::Parse(format!("generator {g:?} is not a permutation of {degree} points")));
            }
        }
        let compose = |p: &[usize], q: &[usize]| q.iter().map(|&i| p[i]).collect::<Vec<usize>>();
        let id: Vec<usize> = (0..degree).collect();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id.clone(), 0)]);
        let mut elems = vec![id];
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            head += 1;
            for s in gens {
                let y = compose(&x, s);
                if !index.contains_key(&y) {
                    if elems.len() >= self.max_order {
                        return Err(GroupError::TooLarge { order: elems.len() + 1, cap: self.max_order });
                    }
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
        }
        elems.sort();
        let index: HashMap<&[usize], usize> = elems.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let order = elems.len();
        let mut mul = Vec::with_capacity(order * order);
        for a in &elems {
            for b in &elems {
                mul.push(index[compose(a, b).as_slice()] as u32);
            }
        }
        FiniteGroup::from_raw(order, mul, label)
    }
}

pub fn build_cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    GroupBuilder::default().cyclic(n)
}

pub fn build_abelian(factors: &[usize]) -> Result<FiniteGroup, GroupError> {
    GroupBuilder::default().abelian(factors)
}

pub fn build_metacyclic(p: MetacyclicParams) -> Result<FiniteGroup, GroupError> {
    GroupBuilder::default().metacyclic(p)
}

/// Conjugacy classes with power maps.
#[derive(Debug, Clone)]
pub struct ConjugacyData {
    class_of: Vec<u32>,
    representatives: Vec<Elem>,
    class_sizes: Vec<usize>,
    /// `power_class[c][j]` is the class of `rep(c)^j`, `j < exponent`.
    power_class: Vec<Vec<u32>>,
    inverse_class: Vec<usize>,
    members: Vec<Vec<Elem>>,
}

impl ConjugacyData {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    #[inline]
    pub fn class_of(&self, g: Elem) -> usize {
        self.class_of[g] as usize
    }

    pub fn representatives(&self) -> &[Elem] {
        &self.representatives
    }

    pub fn representative(&self, class: usize) -> Elem {
        self.representatives[class]
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.class_sizes[class]
    }

    pub fn members(&self, class: usize) -> &[Elem] {
        &self.members[class]
    }

    /// Class of `rep(class)^exp`; the exponent is reduced mod the group exponent.
    #[inline]
    pub fn power_class(&self, class: usize, exp: usize) -> usize {
        let row = &self.power_class[class];
        row[exp % row.len()] as usize
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }
}

/// Conjugacy classes by exhaustive conjugation. Class 0 is `{identity}`;
/// the remaining classes are numbered by their smallest element.
pub fn conjugacy_classes(g: &FiniteGroup) -> ConjugacyData {
    let n = g.order();
    let mut class_of = vec![u32::MAX; n];
    let mut representatives = Vec::new();
    let mut members = Vec::new();
    for x in g.elements() {
        if class_of[x] != u32::MAX {
            continue;
        }
        let c = representatives.len() as u32;
        let mut orbit = Vec::new();
        for h in g.elements() {
            let y = g.conj(x, h);
            if class_of[y] == u32::MAX {
                class_of[y] = c;
                orbit.push(y);
            }
        }
        orbit.sort_unstable();
        representatives.push(x);
        members.push(orbit);
    }
    let class_sizes = members.iter().map(Vec::len).collect();
    let e = g.exponent();
    let power_class = representatives
        .iter()
        .map(|&rep| {
            let mut row = Vec::with_capacity(e);
            let mut acc = 0;
            for _ in 0..e {
                row.push(class_of[acc]);
                acc = g.mul(acc, rep);
            }
            row
        })
        .collect();
    let inverse_class = representatives.iter().map(|&rep| class_of[g.inv(rep)] as usize).collect();
    ConjugacyData { class_of, representatives, class_sizes, power_class, inverse_class, members }
}

#[derive(Debug, Deserialize)]
struct TableFile {
    order: usize,
    mul: Vec<Vec<usize>>,
}

/// Parsed group specification, e.g. `metacyclic:4,2,3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Metacyclic {
        m: u64,
        n: u64,
        r: u64,
    },
    /// Generators in cycle notation on points `1..=degree`.
    Perm {
        degree: usize,
        generators: Vec<Vec<usize>>,
        text: String,
    },
    Table(String),
}

fn parse_list(s: &str) -> Result<Vec<usize>, GroupError> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| GroupError::Parse(format!("bad integer {t:?}"))))
        .collect()
}

/// Parses cycle notation such as `(1 2 3)(4 5)` into cycles of 1-based points.
fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>, GroupError> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| GroupError::Parse(format!("bad cycle notation {s:?}")))?;
        let cycle = body
            .0
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(p) if p >= 1 => Ok(p),
                _ => Err(GroupError::Parse(format!("bad point {t:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        cycles.push(cycle);
        rest = body.1.trim_start();
    }
    Ok(cycles)
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, arg) =
            s.split_once(':').ok_or_else(|| GroupError::Parse(format!("group spec {s:?} lacks a ':'")))?;
        match kind.trim() {
            "cyclic" => {
                let v = parse_list(arg)?;
                match v.as_slice() {
                    [n] => Ok(GroupSpec::Cyclic(*n)),
                    _ => Err(GroupError::Parse("cyclic takes one integer".into())),
                }
            }
            "abelian" => Ok(GroupSpec::Abelian(parse_list(arg)?)),
            "metacyclic" => {
                let v = parse_list(arg)?;
                match v.as_slice() {
                    [m, n, r] => Ok(GroupSpec::Metacyclic { m: *m as u64, n: *n as u64, r: *r as u64 }),
                    _ => Err(GroupError::Parse("metacyclic takes m,n,r".into())),
                }
            }
            "perm" => {
                let cycles: Vec<Vec<Vec<usize>>> =
                    arg.split(';').filter(|t| !t.trim().is_empty()).map(parse_cycles).collect::<Result<_, _>>()?;
                let degree = cycles.iter().flatten().flatten().copied().max().unwrap_or(1);
                let generators = cycles
                    .iter()
                    .map(|gen| {
                        let mut img: Vec<usize> = (0..degree).collect();
                        let mut touched = vec![false; degree];
                        for cycle in gen {
                            for (i, &p) in cycle.iter().enumerate() {
                                let q = cycle[(i + 1) % cycle.len()];
                                if std::mem::replace(&mut touched[p - 1], true) {
                                    return Err(GroupError::Parse(format!("point {p} repeated in {gen:?}")));
                                }
                                img[p - 1] = q - 1;
                            }
                        }
                        Ok(img)
                    })
                    .collect::<Result<_, _>>()?;
                Ok(GroupSpec::Perm { degree, generators, text: arg.trim().to_string() })
            }
            "table" => Ok(GroupSpec::Table(arg.to_string())),
            other => Err(GroupError::Parse(format!("unknown group kind {other:?}"))),
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        self.build_with(GroupBuilder::default())
    }

    pub fn build_with(&self, b: GroupBuilder) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Cyclic(n) => b.cyclic(*n),
            GroupSpec::Abelian(f) => b.abelian(f),
            GroupSpec::Metacyclic { m, n, r } => b.metacyclic(MetacyclicParams::new(*m, *n, *r)?),
            GroupSpec::Perm { degree, generators, text } => b.permutations(*degree, generators, format!("perm:{text}")),
            GroupSpec::Table(path) => load_table(Path::new(path), b.max_order),
        }
    }
}

/// Reads `{"order": N, "mul": [[...]]}` from disk.
pub fn load_table(path: &Path, cap: usize) -> Result<FiniteGroup, GroupError> {
    let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io(format!("{}: {e}", path.display())))?;
    let file: TableFile = serde_json::from_str(&text).map_err(|e| GroupError::Parse(e.to_string()))?;
    if file.order != file.mul.len() {
        return Err(GroupError::InvalidTable(format!(
            "order {} disagrees with {} table rows",
            file.order,
            file.mul.len()
        )));
    }
    FiniteGroup::from_table(&file.mul, format!("table:{}", path.display()), cap)
}

const NAMED_PERMUTATION_GROUPS: [(usize, &str); 4] = [
    (8, "perm:(1 2 4 7)(3 6 8 5);(1 3 4 8)(2 5 7 6)"),
    (12, "perm:(1 2 3);(1 2)(3 4)"),
    (24, "perm:(1 2 3 4);(1 2)"),
    (24, "perm:(1 4 7)(2 8 5);(1 6 2 3)(4 7 8 5)"),
];

/// Specs of the sample groups of order at most `max_order`: every cyclic
/// group, every non-cyclic abelian group in invariant-factor form, every
/// nonabelian split metacyclic parameter triple, and Q8, A4, S4, SL(2,3).
/// Isomorphic groups may repeat across families.
pub fn library(max_order: usize) -> Vec<GroupSpec> {
    fn invariant_factors(prefix: &mut Vec<usize>, prod: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        // each factor is a multiple of the previous one
        let (mut d, step) = match prefix.last() {
            Some(&last) => (last, last),
            None => (2, 1),
        };
        while prod * d <= max {
            prefix.push(d);
            invariant_factors(prefix, prod * d, max, out);
            prefix.pop();
            d += step;
        }
    }
    let mut specs: Vec<GroupSpec> = (1..=max_order).map(GroupSpec::Cyclic).collect();
    let mut abelian = Vec::new();
    invariant_factors(&mut Vec::new(), 1, max_order, &mut abelian);
    abelian.sort();
    specs.extend(abelian.into_iter().map(GroupSpec::Abelian));
    for m in 3..=max_order as u64 {
        for n in 2..=max_order as u64 / m {
            for r in 2..m {
                if MetacyclicParams::new(m, n, r).is_ok() {
                    specs.push(GroupSpec::Metacyclic { m, n, r });
                }
            }
        }
    }
    for (order, text) in NAMED_PERMUTATION_GROUPS {
        if order <= max_order {
            specs.push(text.parse().expect("library permutation specs parse"));
        }
    }
    specs
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Abelian(v) => write!(f, "abelian:{}", join(v)),
            GroupSpec::Metacyclic { m, n, r } => write!(f, "metacyclic:{m},{n},{r}"),
            GroupSpec::Perm { text, .. } => write!(f, "perm:{text}"),
            GroupSpec::Table(path) => write!(f, "table:{path}"),
        }
    }
}
