//! Chevalley-Weil multiplicities of irreducible characters in the
//! representation of `G` on `H^0(C, omega^k)`.
//!
//! For a Hurwitz vector with quotient genus `g'` and branch entries `c_i` of
//! order `m_i`, and `N_{i,alpha}` the multiplicity of `zeta_{m_i}^alpha` as
//! an eigenvalue of `rho(c_i)`:
//!
//! * `k = 1`: `chi_rho(1)(g' - 1) + sum_i sum_{alpha=1}^{m_i-1} alpha N_{i,alpha} / m_i + sigma`,
//!   with `sigma = 1` exactly for the trivial character;
//! * `k >= 2`: `(2k/|G|) chi_rho(1)(g - 1) - chi_rho(1)(g' - 1)
//!   - sum_i sum_{alpha=0}^{m_i-1} N_{i,alpha} [-alpha - k]_{m_i} / m_i`.
//!
//! Sums are evaluated in `GF(p)` and each result is recovered once.

use serde::{Deserialize, Serialize};

use crate::chartab::CharacterTable;
use crate::error::CwError;
use crate::hurwitz::HurwitzVector;

/// Multiplicities `<chi_{phi_k}, chi_rho>` indexed by irreducible character.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiplicityVector {
    pub k: u64,
    pub mults: Vec<u64>,
}

/// `dim H^0(omega^k)`: `g` for `k = 1`, `(2k - 1)(g - 1)` for `k >= 2`.
pub fn pluricanonical_dimension(k: u64, genus: u64) -> u64 {
    if k == 1 {
        genus
    } else {
        (2 * k - 1) * (genus - 1)
    }
}

/// `[n]_m`, the representative of `n mod m` in `0..m`.
#[inline]
pub fn congruence_class(n: i64, m: u64) -> u64 {
    n.rem_euclid(m as i64) as u64
}

struct Prepared {
    genus: u64,
    g_quot: i64,
    branch_classes: Vec<usize>,
}

fn prepare(v: &HurwitzVector, t: &CharacterTable, k: u64) -> Result<Prepared, CwError> {
    let g = t.group();
    v.validate(g)?;
    let genus = v.genus(g)?;
    if genus < 2 {
        return Err(CwError::GenusTooSmall(genus));
    }
    t.ensure_covers(k, genus as u64)?;
    Ok(Prepared {
        genus: genus as u64,
        g_quot: v.g_quot as i64,
        branch_classes: v.branches.iter().map(|&c| t.classes().class_of(c)).collect(),
    })
}

fn level_one(t: &CharacterTable, pv: &Prepared, rho: usize) -> Result<u64, CwError> {
    let f = t.prime();
    let degree = t.character(rho)?.degree();
    let mut acc = f.reduce(degree as i64 * (pv.g_quot - 1));
    for &cl in &pv.branch_classes {
        let counts = t.class_eigen_counts(rho, cl)?;
        let m_inv = f.inv(counts.len() as u64);
        for (alpha, &n) in counts.iter().enumerate().skip(1) {
            acc = f.add(acc, f.mul(f.mul(alpha as u64, n), m_inv));
        }
    }
    if rho == 0 {
        acc = f.add(acc, 1);
    }
    recover_checked(t, acc, 1, pv.genus, rho)
}

fn level_k(t: &CharacterTable, pv: &Prepared, rho: usize, k: u64) -> Result<u64, CwError> {
    let f = t.prime();
    let degree = t.character(rho)?.degree();
    let order_inv = f.inv(t.group().order() as u64);
    let mut acc = f.mul(f.reduce((2 * k * degree * (pv.genus - 1)) as i64), order_inv);
    acc = f.sub(acc, f.reduce(degree as i64 * (pv.g_quot - 1)));
    for &cl in &pv.branch_classes {
        let counts = t.class_eigen_counts(rho, cl)?;
        let m = counts.len() as u64;
        let m_inv = f.inv(m);
        for (alpha, &n) in counts.iter().enumerate() {
            let bracket = congruence_class(-(alpha as i64) - k as i64, m);
            acc = f.sub(acc, f.mul(f.mul(n, bracket), m_inv));
        }
    }
    recover_checked(t, acc, k, pv.genus, rho)
}

fn recover_checked(t: &CharacterTable, residue: u64, k: u64, genus: u64, rho: usize) -> Result<u64, CwError> {
    let value = t.prime().recover_integer(residue);
    let dim = pluricanonical_dimension(k, genus);
    if value < 0 || value as u64 > dim {
        return Err(CwError::Inconsistent(format!(
            "multiplicity of character {rho} at k={k} recovered as {value}, outside [0, {dim}]"
        )));
    }
    Ok(value as u64)
}

/// `<chi_{phi_1}, chi_rho>`.
pub fn cw_multiplicity_k1(v: &HurwitzVector, t: &CharacterTable, rho: usize) -> Result<u64, CwError> {
    let pv = prepare(v, t, 1)?;
    level_one(t, &pv, rho)
}

/// `<chi_{phi_k}, chi_rho>` for `k >= 2`.
pub fn cw_multiplicity_k(v: &HurwitzVector, t: &CharacterTable, rho: usize, k: u64) -> Result<u64, CwError> {
    if k < 2 {
        return Err(CwError::BadLevel { k, min: 2 });
    }
    let pv = prepare(v, t, k)?;
    level_k(t, &pv, rho, k)
}

/// All multiplicities at level `k`, checked against `dim H^0(omega^k)`.
pub fn cw_character(v: &HurwitzVector, t: &CharacterTable, k: u64) -> Result<MultiplicityVector, CwError> {
    if k < 1 {
        return Err(CwError::BadLevel { k, min: 1 });
    }
    let pv = prepare(v, t, k)?;
    character_prepared(t, &pv, k)
}

fn character_prepared(t: &CharacterTable, pv: &Prepared, k: u64) -> Result<MultiplicityVector, CwError> {
    let mults = (0..t.len())
        .map(|rho| if k == 1 { level_one(t, pv, rho) } else { level_k(t, pv, rho, k) })
        .collect::<Result<Vec<_>, _>>()?;
    let dim: u64 = mults.iter().zip(t.irreducibles()).map(|(m, chi)| m * chi.degree()).sum();
    let expected = pluricanonical_dimension(k, pv.genus);
    if dim != expected {
        return Err(CwError::Inconsistent(format!(
            "level {k}: sum of multiplicity * degree is {dim}, expected dim H^0 = {expected}"
        )));
    }
    Ok(MultiplicityVector { k, mults })
}

/// Multiplicity vectors for every level in `ks`, validating `v` once.
pub fn cw_characters(
    v: &HurwitzVector,
    t: &CharacterTable,
    ks: std::ops::RangeInclusive<u64>,
) -> Result<Vec<MultiplicityVector>, CwError> {
    if *ks.start() < 1 {
        return Err(CwError::BadLevel { k: *ks.start(), min: 1 });
    }
    let pv = prepare(v, t, *ks.end())?;
    ks.map(|k| character_prepared(t, &pv, k)).collect()
}

/// `n` with `mults = n * (regular character)`, if one exists.
pub fn regular_multiple(mv: &MultiplicityVector, t: &CharacterTable) -> Option<u64> {
    let degrees = t.degrees();
    if mv.mults.len() != degrees.len() {
        return None;
    }
    let n = *mv.mults.first()?;
    mv.mults.iter().zip(&degrees).all(|(&m, &d)| m == n * d).then_some(n)
}

/// Per-character difference between levels `k + |G|` and `k`. Fails unless it
/// equals `2 chi_rho(1)(g - 1)`, less 1 on the trivial character at `k = 1`.
pub fn periodicity_delta(v: &HurwitzVector, t: &CharacterTable, k: u64) -> Result<Vec<i64>, CwError> {
    if k < 1 {
        return Err(CwError::BadLevel { k, min: 1 });
    }
    let shift = t.group().order() as u64;
    let pv = prepare(v, t, k + shift)?;
    let low = character_prepared(t, &pv, k)?;
    let high = character_prepared(t, &pv, k + shift)?;
    let delta: Vec<i64> = high.mults.iter().zip(&low.mults).map(|(&h, &l)| h as i64 - l as i64).collect();
    for (rho, (&d, chi)) in delta.iter().zip(t.irreducibles()).enumerate() {
        let sigma = i64::from(k == 1 && rho == 0);
        let expected = 2 * chi.degree() as i64 * (pv.genus as i64 - 1) - sigma;
        if d != expected {
            return Err(CwError::Inconsistent(format!(
                "periodicity: character {rho}, level {k}: difference {d}, expected {expected}"
            )));
        }
    }
    Ok(delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::error::HurwitzError;
    use crate::group::{build_cyclic, build_metacyclic, MetacyclicParams};

    fn v() -> HurwitzVector {
        HurwitzVector::new(2, vec![1, 0, 0, 2], vec![2, 1])
    }

    fn v_prime() -> HurwitzVector {
        HurwitzVector::new(0, vec![], vec![1, 1, 2, 2, 1, 1, 2, 2])
    }

    #[test]
    fn congruence_classes() {
        assert_eq!(congruence_class(-5, 3), 1);
        assert_eq!(congruence_class(-3, 3), 0);
        assert_eq!(congruence_class(4, 3), 1);
    }

    #[test]
    fn level_one_examples() {
        let t = character_table(&build_cyclic(3).unwrap(), 6, 6).unwrap();
        assert_eq!(cw_multiplicity_k1(&v(), &t, 0).unwrap(), 2);
        assert_eq!(cw_multiplicity_k1(&v_prime(), &t, 0).unwrap(), 0);
        assert_eq!(cw_multiplicity_k1(&v_prime(), &t, 1).unwrap(), 3);
    }

    #[test]
    fn higher_level_examples() {
        let t = character_table(&build_cyclic(3).unwrap(), 6, 6).unwrap();
        assert_eq!(cw_multiplicity_k(&v(), &t, 0, 2).unwrap(), 5);
        assert_eq!(cw_multiplicity_k(&v(), &t, 1, 3).unwrap(), 8);
        assert_eq!(cw_multiplicity_k(&v_prime(), &t, 0, 3).unwrap(), 11);
        assert!(matches!(cw_multiplicity_k(&v(), &t, 0, 1), Err(CwError::BadLevel { .. })));
    }

    #[test]
    fn character_examples() {
        let t = character_table(&build_cyclic(3).unwrap(), 6, 6).unwrap();
        assert_eq!(cw_character(&v(), &t, 1).unwrap().mults, vec![2, 2, 2]);
        assert_eq!(cw_character(&v_prime(), &t, 3).unwrap().mults, vec![11, 7, 7]);
        let c2 = build_cyclic(2).unwrap();
        let t2 = character_table(&c2, 4, 3).unwrap();
        let free = HurwitzVector::new(2, vec![1, 0, 0, 0], vec![]);
        let mv = cw_character(&free, &t2, 2).unwrap();
        assert_eq!(mv.mults, vec![3, 3]);
        assert_eq!(regular_multiple(&mv, &t2), Some(3));
    }

    #[test]
    fn regular_multiples() {
        let t = character_table(&build_cyclic(3).unwrap(), 6, 6).unwrap();
        assert_eq!(regular_multiple(&MultiplicityVector { k: 2, mults: vec![5, 5, 5] }, &t), Some(5));
        assert_eq!(regular_multiple(&MultiplicityVector { k: 1, mults: vec![2, 2, 2] }, &t), Some(2));
        assert_eq!(regular_multiple(&MultiplicityVector { k: 3, mults: vec![9, 8, 8] }, &t), None);
        let s3 = build_metacyclic(MetacyclicParams::new(3, 2, 2).unwrap()).unwrap();
        let ts = character_table(&s3, 2, 2).unwrap();
        assert_eq!(regular_multiple(&MultiplicityVector { k: 2, mults: vec![3, 3, 6] }, &ts), Some(3));
        assert_eq!(regular_multiple(&MultiplicityVector { k: 2, mults: vec![3, 3, 3] }, &ts), None);
    }

    #[test]
    fn periodicity_examples() {
        let t = character_table(&build_cyclic(3).unwrap(), 12, 6).unwrap();
        assert_eq!(periodicity_delta(&v(), &t, 2).unwrap(), vec![10, 10, 10]);
        assert_eq!(periodicity_delta(&v(), &t, 1).unwrap(), vec![9, 10, 10]);
        let t2 = character_table(&build_cyclic(2).unwrap(), 8, 3).unwrap();
        let free = HurwitzVector::new(2, vec![1, 0, 0, 0], vec![]);
        assert_eq!(periodicity_delta(&free, &t2, 2).unwrap(), vec![4, 4]);
    }

    #[test]
    fn rejects_bad_inputs() {
        let t = character_table(&build_cyclic(3).unwrap(), 3, 6).unwrap();
        let bad = HurwitzVector::new(0, vec![], vec![1, 1]);
        assert!(matches!(cw_character(&bad, &t, 1), Err(CwError::Hurwitz(HurwitzError::RelationViolation { .. }))));
        // genus 0 cover: three branch points of order 3 over P^1 -> g = 1
        let elliptic = HurwitzVector::new(0, vec![], vec![1, 1, 1]);
        assert!(matches!(cw_character(&elliptic, &t, 1), Err(CwError::GenusTooSmall(1))));
        assert!(matches!(cw_character(&v(), &t, 4), Err(CwError::Table(_))));
    }
}
