//! Schur multipliers of split metacyclic groups and the resulting lower
//! bound on components of the regular-representation locus.
//!
//! For `G = <x, y | x^m = y^n = 1, y x y^-1 = x^r>`,
//! `|H_2(G, Z)| = gcd(m, r - 1) * gcd(m, 1 + r + .. + r^(n-1)) / m`.
//! For nonabelian `G`, marked topological types of free actions on a genus
//! `g` curve are in bijection with `H_2(G, Z)`, and each type lies in its own
//! component of the locus where every `H^0(omega^k)`, `k >= 2`, is a multiple
//! of the regular representation.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::error::MetacyclicError;
use crate::group::MetacyclicParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SchurResult {
    pub m: u64,
    pub n: u64,
    pub r: u64,
    pub d: u64,
}

pub fn schur_multiplier_order(p: MetacyclicParams) -> Result<SchurResult, MetacyclicError> {
    let (m, n, r) = (p.m(), p.n(), p.r());
    let big_m = BigUint::from(m);
    // geometric sum as an exact integer
    let mut sum = BigUint::from(0u32);
    let mut power = BigUint::from(1u32);
    for _ in 0..n {
        sum += &power;
        power *= r;
    }
    let g1 = BigUint::from(m.gcd(&(r - 1)));
    let g2 = big_m.gcd(&sum);
    let (d, rem) = (g1 * g2).div_rem(&big_m);
    if rem != BigUint::from(0u32) {
        return Err(MetacyclicError::NonIntegral(p));
    }
    let d: u64 = d.try_into().map_err(|_| MetacyclicError::NonIntegral(p))?;
    if d == 0 {
        return Err(MetacyclicError::NonIntegral(p));
    }
    Ok(SchurResult { m, n, r, d })
}

/// Quotient genus `1 + (g - 1)/|G|` of an unramified `G`-cover of a genus-`g`
/// curve, when it is an integer of at least 2.
pub fn free_action_quotient_genus(p: MetacyclicParams, g: u64) -> Result<u64, MetacyclicError> {
    let order = p.order();
    if g < 2 {
        return Err(MetacyclicError::NoFreeAction { g, reason: "genus must be at least 2".into() });
    }
    if !(g - 1).is_multiple_of(order) {
        return Err(MetacyclicError::NoFreeAction {
            g,
            reason: format!("|G| = {order} does not divide g - 1 = {}", g - 1),
        });
    }
    // (g - 1)/|G| >= 1 forces quotient genus >= 2
    Ok(1 + (g - 1) / order)
}

/// Lower bound `|H_2(G, Z)|` on the number of connected components of the
/// regular-representation locus in genus `g`.
pub fn rr_component_lower_bound(p: MetacyclicParams, g: u64) -> Result<u64, MetacyclicError> {
    if p.is_abelian() {
        return Err(MetacyclicError::AbelianGroup);
    }
    free_action_quotient_genus(p, g)?;
    Ok(schur_multiplier_order(p)?.d)
}
