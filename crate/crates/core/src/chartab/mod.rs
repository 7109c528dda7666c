//! Irreducible characters over `GF(p)` by the Dixon-Schneider method.
//!
//! The class sums `K_0, .., K_{c-1}` span the centre of the group algebra.
//! For a fixed `j` the structure constants
//! `a_jkl = #{(x, y) in K_j x K_k : x y = rep(l)}` form a matrix `M_j` whose
//! common right eigenvectors are the central characters
//! `w_l = |K_l| chi(rep l) / chi(1)`. The common eigenspaces are split one
//! matrix at a time until they are all one-dimensional; each eigenvector is
//! then scaled by the degree recovered from the first orthogonality relation.

mod linalg;

use std::sync::OnceLock;

use crate::error::CharTableError;
use crate::group::{conjugacy_classes, ConjugacyData, Elem, FiniteGroup};
use crate::modular::{choose_prime_seeded, recovery_bound, WorkingPrime, DEFAULT_SEED};

use linalg::{charpoly, distinct_roots, nullspace, rref, Matrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    index: usize,
    degree: u64,
    /// Value on each class, as a residue mod p.
    values: Vec<u64>,
}

impl Character {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, class: usize) -> u64 {
        self.values[class]
    }
}

/// Multiplicities `N_alpha` of the eigenvalue `zeta_m^alpha` of `rho(c)`,
/// `zeta_m` the primitive `m`-th root of unity fixed by the working prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueMultiplicities {
    pub m: usize,
    pub counts: Vec<u64>,
}

pub struct CharacterTable {
    group: FiniteGroup,
    classes: ConjugacyData,
    prime: WorkingPrime,
    irreducibles: Vec<Character>,
    k_max: u64,
    g_max: u64,
    /// `N_alpha` per (character, class), filled on first use.
    eigen_cache: Vec<OnceLock<Vec<u64>>>,
}

impl std::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CharacterTable")
            .field("group", &self.group)
            .field("p", &self.prime.p())
            .field("degrees", &self.degrees())
            .finish()
    }
}

/// Computes the character table with a working prime large enough for
/// pluricanonical levels up to `k_max` on curves of genus up to `g_max`.
pub fn character_table(g: &FiniteGroup, k_max: u64, g_max: u64) -> Result<CharacterTable, CharTableError> {
    CharacterTable::with_seed(g, k_max, g_max, DEFAULT_SEED)
}

impl CharacterTable {
    pub fn with_seed(g: &FiniteGroup, k_max: u64, g_max: u64, seed: u64) -> Result<Self, CharTableError> {
        let k_max = k_max.max(1);
        let g_max = g_max.max(2);
        let bound = recovery_bound(g.order() as u64, k_max, g_max);
        let prime = choose_prime_seeded(g.exponent() as u64, bound, seed)?;
        let classes = conjugacy_classes(g);
        let central = central_characters(g, &classes, &prime)?;
        let mut irreducibles =
            central.into_iter().map(|w| scale_to_character(g, &classes, &prime, w)).collect::<Result<Vec<_>, _>>()?;
        sort_characters(&prime, &mut irreducibles);
        for (i, chi) in irreducibles.iter_mut().enumerate() {
            chi.index = i;
        }
        let degree_sq: u64 = irreducibles.iter().map(|c| c.degree * c.degree).sum();
        if degree_sq != g.order() as u64 {
            return Err(CharTableError::Inconsistent(format!(
                "sum of squared degrees is {degree_sq}, group order {}",
                g.order()
            )));
        }
        let cells = irreducibles.len() * classes.class_count();
        Ok(CharacterTable {
            group: g.clone(),
            classes,
            prime,
            irreducibles,
            k_max,
            g_max,
            eigen_cache: (0..cells).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyData {
        &self.classes
    }

    pub fn prime(&self) -> &WorkingPrime {
        &self.prime
    }

    pub fn irreducibles(&self) -> &[Character] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn character(&self, rho: usize) -> Result<&Character, CharTableError> {
        self.irreducibles.get(rho).ok_or(CharTableError::NoSuchCharacter { index: rho, count: self.irreducibles.len() })
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(Character::degree).collect()
    }

    /// Largest `(k, g)` the working prime was sized for.
    pub fn capacity(&self) -> (u64, u64) {
        (self.k_max, self.g_max)
    }

    pub fn covers(&self, k: u64, g: u64) -> bool {
        k <= self.k_max && g <= self.g_max
    }

    pub fn ensure_covers(&self, k: u64, g: u64) -> Result<(), CharTableError> {
        if self.covers(k, g) {
            Ok(())
        } else {
            Err(CharTableError::BoundExceeded { k, g, k_max: self.k_max, g_max: self.g_max })
        }
    }

    /// Multiplicities of the regular character: `chi_rho(1)` at each `rho`.
    pub fn regular_multiplicities(&self) -> Vec<u64> {
        self.degrees()
    }

    /// The regular character as a class function: `|G|` at the identity.
    pub fn regular_class_function(&self) -> Vec<u64> {
        let mut v = vec![0u64; self.classes.class_count()];
        v[0] = self.prime.reduce(self.group.order() as i64);
        v
    }

    /// `<a, chi_b>` for a class function `a` given by residues on classes.
    pub fn inner_product(&self, a: &[u64], b: usize) -> Result<i64, CharTableError> {
        let chi = self.character(b)?;
        let f = &self.prime;
        let sum = (0..self.classes.class_count()).fold(0u64, |acc, cl| {
            let size = self.classes.class_size(cl) as u64 % f.p();
            let term = f.mul(f.mul(size, a[cl]), chi.value(self.classes.inverse_class(cl)));
            f.add(acc, term)
        });
        let order_inv = f.inv(self.group.order() as u64 % f.p());
        Ok(f.recover_integer(f.mul(sum, order_inv)))
    }

    /// `N_alpha` for `rho(c)`, `alpha = 0..ord(c)`.
    pub fn eigenvalue_multiplicities(&self, rho: usize, c: Elem) -> Result<EigenvalueMultiplicities, CharTableError> {
        let class = self.classes.class_of(c);
        let counts = self.class_eigen_counts(rho, class)?.to_vec();
        Ok(EigenvalueMultiplicities { m: self.group.elem_order(c), counts })
    }

    /// Cached `N_alpha` for the representative of `class`.
    pub fn class_eigen_counts(&self, rho: usize, class: usize) -> Result<&[u64], CharTableError> {
        let chi = self.character(rho)?;
        let cell = &self.eigen_cache[rho * self.classes.class_count() + class];
        if let Some(v) = cell.get() {
            return Ok(v);
        }
        let computed = self.compute_eigen_counts(chi, class)?;
        Ok(cell.get_or_init(|| computed))
    }

    fn compute_eigen_counts(&self, chi: &Character, class: usize) -> Result<Vec<u64>, CharTableError> {
        let m = self.group.elem_order(self.classes.representative(class));
        let f = &self.prime;
        let values: Vec<u64> = (0..m).map(|j| chi.value(self.classes.power_class(class, j))).collect();
        let mut counts = Vec::with_capacity(m);
        for alpha in 0..m {
            let residue = f.root_power_sum(&values, alpha as i64, m as u64)?;
            let n = f.recover_integer(residue);
            if n < 0 || n as u64 > chi.degree {
                return Err(CharTableError::Inconsistent(format!(
                    "eigenvalue multiplicity {n} outside [0, {}] for character {} on class {class}",
                    chi.degree, chi.index
                )));
            }
            counts.push(n as u64);
        }
        if counts.iter().sum::<u64>() != chi.degree {
            return Err(CharTableError::Inconsistent(format!(
                "eigenvalue multiplicities of character {} on class {class} do not sum to its degree",
                chi.index
            )));
        }
        Ok(counts)
    }

    /// The value of `chi_rho` on `class` as an integer, when it is rational.
    ///
    /// A character value is rational iff it is fixed by every Galois
    /// automorphism `zeta -> zeta^t`, `gcd(t, exponent) = 1`, which acts on
    /// values as `chi(g) -> chi(g^t)`.
    pub fn rational_value(&self, rho: usize, class: usize) -> Option<i64> {
        let chi = self.irreducibles.get(rho)?;
        let e = self.group.exponent();
        let v = chi.value(class);
        let fixed =
            (1..e).filter(|t| num_integer::gcd(*t, e) == 1).all(|t| chi.value(self.classes.power_class(class, t)) == v);
        fixed.then(|| self.prime.recover_integer(v))
    }
}

/// Rebuilds the table on demand when a query outgrows the working prime.
#[derive(Debug)]
pub struct TableSession {
    group: FiniteGroup,
    seed: u64,
    table: CharacterTable,
}

impl TableSession {
    pub fn new(g: &FiniteGroup, k_max: u64, g_max: u64, seed: u64) -> Result<Self, CharTableError> {
        Ok(TableSession { group: g.clone(), seed, table: CharacterTable::with_seed(g, k_max, g_max, seed)? })
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    /// A table whose prime covers `(k, g)`, recomputing it if needed.
    pub fn table_for(&mut self, k: u64, g: u64) -> Result<&CharacterTable, CharTableError> {
        if !self.table.covers(k, g) {
            let (k0, g0) = self.table.capacity();
            self.table = CharacterTable::with_seed(&self.group, k.max(k0), g.max(g0), self.seed)?;
        }
        Ok(&self.table)
    }
}

/// Structure-constant matrix `M_j`, row `k`, column `l`.
#[allow(clippy::needless_range_loop)]
fn structure_matrix(g: &FiniteGroup, cls: &ConjugacyData, f: &WorkingPrime, j: usize) -> Matrix {
    let c = cls.class_count();
    let mut m = vec![vec![0u64; c]; c];
    for l in 0..c {
        let z = cls.representative(l);
        for &x in cls.members(j) {
            let y = g.mul(g.inv(x), z);
            let k = cls.class_of(y);
            m[k][l] += 1;
        }
    }
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x %= f.p();
        }
    }
    m
}

/// Splits `GF(p)^c` into common eigenlines of all `M_j`; each result is
/// normalised so that its identity-class entry is 1.
fn central_characters(g: &FiniteGroup, cls: &ConjugacyData, f: &WorkingPrime) -> Result<Vec<Vec<u64>>, CharTableError> {
    let c = cls.class_count();
    let identity: Matrix = (0..c).map(|i| (0..c).map(|j| u64::from(i == j)).collect()).collect();
    let mut pending: Vec<Matrix> = vec![identity];
    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut j = 1;
    while !pending.is_empty() {
        pending.retain(|basis| {
            if basis.len() == 1 {
                done.push(basis[0].clone());
                false
            } else {
                true
            }
        });
        if pending.is_empty() {
            break;
        }
        if j >= c {
            return Err(CharTableError::NotSplit {
                p: f.p(),
                detail: "class sum matrices leave a common eigenspace of dimension > 1".into(),
            });
        }
        let m = structure_matrix(g, cls, f, j);
        let mut next = Vec::new();
        for basis in pending {
            next.extend(split_subspace(f, &m, basis)?);
        }
        pending = next;
        j += 1;
    }
    done.into_iter()
        .map(|w| {
            if w[0] == 0 {
                return Err(CharTableError::Inconsistent("central character vanishes on the identity".into()));
            }
            let s = f.inv(w[0]);
            Ok(w.into_iter().map(|x| f.mul(x, s)).collect())
        })
        .collect()
}

/// Eigenspaces of `m` restricted to the invariant subspace spanned by the
/// rows of `basis` (in reduced row echelon form).
fn split_subspace(f: &WorkingPrime, m: &Matrix, mut basis: Matrix) -> Result<Vec<Matrix>, CharTableError> {
    let pivots = rref(f, &mut basis);
    let dim = basis.len();
    let c = m.len();
    // images[i] = M b_i; coordinates are read off at the pivot columns
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| (0..c).map(|k| (0..c).fold(0, |acc, l| f.add(acc, f.mul(m[k][l], b[l])))).collect())
        .collect();
    // restricted[r][i] = coordinate r of M b_i
    let restricted: Matrix = (0..dim).map(|r| (0..dim).map(|i| images[i][pivots[r]]).collect()).collect();
    let roots = distinct_roots(f, &charpoly(f, restricted.clone())).ok_or_else(|| CharTableError::NotSplit {
        p: f.p(),
        detail: "characteristic polynomial of a class sum does not split".into(),
    })?;
    if roots.len() == 1 {
        return Ok(vec![basis]);
    }
    let mut out = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let shifted: Matrix = (0..dim)
            .map(|r| {
                (0..dim).map(|i| if r == i { f.sub(restricted[r][i], lambda) } else { restricted[r][i] }).collect()
            })
            .collect();
        let coords = nullspace(f, shifted);
        total += coords.len();
        let mut space: Matrix = coords
            .iter()
            .map(|u| (0..c).map(|l| (0..dim).fold(0, |acc, i| f.add(acc, f.mul(u[i], basis[i][l])))).collect())
            .collect();
        rref(f, &mut space);
        out.push(space);
    }
    if total != dim {
        return Err(CharTableError::NotSplit { p: f.p(), detail: "class sum is not diagonalisable".into() });
    }
    Ok(out)
}

/// Turns a normalised central character into a character:
/// `chi(rep l) = d w_l / |K_l|` with `d^2 = |G| / sum_l w_l w_l* / |K_l|`.
fn scale_to_character(
    g: &FiniteGroup,
    cls: &ConjugacyData,
    f: &WorkingPrime,
    w: Vec<u64>,
) -> Result<Character, CharTableError> {
    let c = cls.class_count();
    let size_inv: Vec<u64> = (0..c).map(|l| f.inv(cls.class_size(l) as u64 % f.p())).collect();
    let norm = (0..c).fold(0u64, |acc, l| f.add(acc, f.mul(f.mul(w[l], w[cls.inverse_class(l)]), size_inv[l])));
    if norm == 0 {
        return Err(CharTableError::Inconsistent("central character has zero norm".into()));
    }
    let d_sq = f.recover_integer(f.mul(g.order() as u64 % f.p(), f.inv(norm)));
    let degree = (1..=g.order() as i64).take_while(|d| d * d <= d_sq).last().unwrap_or(0);
    if d_sq <= 0 || degree * degree != d_sq {
        return Err(CharTableError::Inconsistent(format!("squared degree {d_sq} is not a perfect square")));
    }
    let d = degree as u64;
    let values = (0..c).map(|l| f.mul(f.mul(d, w[l]), size_inv[l])).collect();
    Ok(Character { index: 0, degree: d, values })
}

/// Degree-major order with the trivial character first; ties broken class by
/// class, roots of unity `root^j` (ordered by `j`) before other values
/// (ordered by least absolute residue).
fn sort_characters(f: &WorkingPrime, chars: &mut [Character]) {
    let key = |chi: &Character| {
        let nontrivial = chi.values.iter().any(|&v| v != 1);
        let values: Vec<(u8, i64)> = chi
            .values
            .iter()
            .map(|&v| match f.unity_log(v) {
                Some(j) => (0, j as i64),
                None => (1, f.recover_integer(v)),
            })
            .collect();
        (chi.degree, nontrivial, values)
    };
    chars.sort_by_cached_key(key);
}
