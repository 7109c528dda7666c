//! Partitions of Hurwitz items by representation type.
//!
//! The level-`k` decomposition groups items whose multiplicity vectors at
//! `k` agree; refinement intersects blocks. Because the multiplicities at
//! `k + |G|` differ from those at `k` by an amount independent of the item,
//! refining over `k = 1..|G|` already yields the full decomposition.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chartab::CharacterTable;
use crate::cw::{cw_characters, MultiplicityVector};
use crate::error::DecompositionError;
use crate::hurwitz::HurwitzVector;

/// Sequence of multiplicity vectors over consecutive levels.
pub type RepresentationType = Vec<MultiplicityVector>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    items: Vec<HurwitzVector>,
    /// Item indices per block, ascending within each block.
    blocks: Vec<Vec<usize>>,
    keys: Vec<RepresentationType>,
}

impl Decomposition {
    /// Groups items by exact key equality; blocks are ordered by key.
    pub fn from_keys(items: Vec<HurwitzVector>, keys: Vec<RepresentationType>) -> Self {
        debug_assert_eq!(items.len(), keys.len());
        let mut grouped: BTreeMap<RepresentationType, Vec<usize>> = BTreeMap::new();
        for (i, key) in keys.into_iter().enumerate() {
            grouped.entry(key).or_default().push(i);
        }
        let (keys, blocks) = grouped.into_iter().unzip();
        Decomposition { items, blocks, keys }
    }

    pub fn items(&self) -> &[HurwitzVector] {
        &self.items
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn keys(&self) -> &[RepresentationType] {
        &self.keys
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of every item.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.items.len()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                labels[i] = b;
            }
        }
        labels
    }

    /// Equality of the underlying partitions, ignoring keys and block order.
    pub fn same_partition(&self, other: &Decomposition) -> bool {
        self.items.len() == other.items.len() && canonical_blocks(&self.blocks) == canonical_blocks(&other.blocks)
    }
}

fn canonical_blocks(blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut b = blocks.to_vec();
    b.sort();
    b
}

fn common_genus(items: &[HurwitzVector], t: &CharacterTable) -> Result<Option<i64>, DecompositionError> {
    let mut first = None;
    for v in items {
        let genus = v.genus(t.group()).map_err(crate::error::CwError::from)?;
        match first {
            None => first = Some(genus),
            Some(g0) if g0 != genus => return Err(DecompositionError::MixedGenus { first: g0, other: genus }),
            _ => {}
        }
    }
    Ok(first)
}

/// Representation types of every item over levels `k_lo..=k_hi`.
pub fn representation_types(
    items: &[HurwitzVector],
    t: &CharacterTable,
    k_lo: u64,
    k_hi: u64,
) -> Result<Vec<RepresentationType>, DecompositionError> {
    if k_lo < 1 || k_hi < k_lo {
        return Err(DecompositionError::BadRange);
    }
    common_genus(items, t)?;
    items.iter().map(|v| Ok(cw_characters(v, t, k_lo..=k_hi)?)).collect()
}

/// The level-`k` decomposition.
pub fn decompose_at_k(
    items: &[HurwitzVector],
    t: &CharacterTable,
    k: u64,
) -> Result<Decomposition, DecompositionError> {
    let keys = representation_types(items, t, k, k)?;
    Ok(Decomposition::from_keys(items.to_vec(), keys))
}

/// Coarsest common refinement; keys are concatenated.
pub fn refine(a: &Decomposition, b: &Decomposition) -> Result<Decomposition, DecompositionError> {
    if a.items != b.items {
        return Err(DecompositionError::ItemMismatch);
    }
    let (la, lb) = (a.labels(), b.labels());
    let keys = la.iter().zip(&lb).map(|(&x, &y)| a.keys[x].iter().chain(&b.keys[y]).cloned().collect()).collect();
    Ok(Decomposition::from_keys(a.items.clone(), keys))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub decomposition: Decomposition,
    /// Least `K` such that refining levels `1..=K` already gives the result.
    pub stabilization_depth: u64,
}

/// Refinement of the level decompositions for `k = 1..=|G|`.
pub fn canonical_decomposition(
    items: &[HurwitzVector],
    t: &CharacterTable,
) -> Result<CanonicalDecomposition, DecompositionError> {
    let levels = t.group().order() as u64;
    if items.is_empty() {
        return Ok(CanonicalDecomposition {
            decomposition: Decomposition::from_keys(Vec::new(), Vec::new()),
            stabilization_depth: 0,
        });
    }
    let types = representation_types(items, t, 1, levels)?;
    let full = Decomposition::from_keys(items.to_vec(), types.clone());
    let mut depth = levels;
    for k in 1..=levels {
        let prefix: Vec<RepresentationType> = types.iter().map(|ty| ty[..k as usize].to_vec()).collect();
        if Decomposition::from_keys(items.to_vec(), prefix).block_count() == full.block_count() {
            depth = k;
            break;
        }
    }
    Ok(CanonicalDecomposition { decomposition: full, stabilization_depth: depth })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub k: u64,
    /// Blocks of the level-`k` decomposition alone.
    pub level_blocks: usize,
    /// Blocks of the refinement of levels `1..=k`.
    pub running_blocks: usize,
    /// True when level `k` splits some block of the refinement of `1..k`.
    pub new_split: bool,
    /// For `k > |G|`: whether level `k` partitions like level `k - |G|`.
    pub matches_period: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub levels: Vec<LevelReport>,
    pub split_levels: Vec<u64>,
    pub stabilization_depth: u64,
}

/// Level-by-level refinement up to `k_max`, failing loudly if any level above
/// `|G|` splits a block or disagrees with the level `|G|` below it.
pub fn stabilization_report(
    items: &[HurwitzVector],
    t: &CharacterTable,
    k_max: u64,
) -> Result<StabilizationReport, DecompositionError> {
    if k_max < 1 {
        return Err(DecompositionError::BadRange);
    }
    let period = t.group().order() as u64;
    let types = if items.is_empty() { Vec::new() } else { representation_types(items, t, 1, k_max)? };
    let level = |k: u64| {
        let keys = types.iter().map(|ty| vec![ty[k as usize - 1].clone()]).collect();
        Decomposition::from_keys(items.to_vec(), keys)
    };
    let mut levels = Vec::new();
    let mut split_levels = Vec::new();
    let mut running = Decomposition::from_keys(items.to_vec(), vec![Vec::new(); items.len()]);
    for k in 1..=k_max {
        let here = level(k);
        let next = refine(&running, &here)?;
        let new_split = next.block_count() > running.block_count();
        let matches_period = (k > period).then(|| here.same_partition(&level(k - period)));
        if (k > period && new_split) || matches_period == Some(false) {
            return Err(DecompositionError::PeriodicityViolated { k, k_shift: k - period });
        }
        if new_split {
            split_levels.push(k);
        }
        levels.push(LevelReport {
            k,
            level_blocks: here.block_count(),
            running_blocks: next.block_count(),
            new_split,
            matches_period,
        });
        running = next;
    }
    let stabilization_depth = split_levels.last().copied().unwrap_or(if items.is_empty() { 0 } else { 1 });
    Ok(StabilizationReport { levels, split_levels, stabilization_depth })
}
