//! Dense linear algebra and polynomial root finding over `GF(p)`.

#![allow(clippy::needless_range_loop)]

use crate::modular::WorkingPrime;

pub(crate) type Matrix = Vec<Vec<u64>>;

/// Row-reduces `rows` in place; returns the pivot columns. Pivots are taken
/// as the first nonzero entry scanning columns left to right.
pub(crate) fn rref(f: &WorkingPrime, rows: &mut Matrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let scale = f.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, scale);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let factor = rows[i][col];
                for j in col..ncols {
                    let t = f.mul(factor, rows[r][j]);
                    rows[i][j] = f.sub(rows[i][j], t);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{u : a u = 0}` (column vectors), one vector per free column.
pub(crate) fn nullspace(f: &WorkingPrime, mut a: Matrix) -> Matrix {
    let n = a.first().map_or(0, Vec::len);
    let pivots = rref(f, &mut a);
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (row, &pc) in a.iter().zip(&pivots) {
                v[pc] = f.neg(row[free]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(x I - a)`, coefficients low degree first,
/// via reduction to upper Hessenberg form.
pub(crate) fn charpoly(f: &WorkingPrime, mut h: Matrix) -> Vec<u64> {
    let n = h.len();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let pivot_inv = f.inv(h[m][m - 1]);
        for j in m + 1..n {
            let u = f.mul(h[j][m - 1], pivot_inv);
            if u == 0 {
                continue;
            }
            for k in 0..n {
                let t = f.mul(u, h[m][k]);
                h[j][k] = f.sub(h[j][k], t);
            }
            for row in h.iter_mut() {
                let t = f.mul(u, row[j]);
                row[m] = f.add(row[m], t);
            }
        }
    }
    // p_0 = 1; p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1}^{m} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.sub(next[d], f.mul(h[m][m], c));
        }
        let mut t = 1u64;
        for i in (0..m).rev() {
            t = f.mul(t, h[i + 1][i]);
            let coeff = f.mul(h[i][m], t);
            if coeff == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = f.sub(next[d], f.mul(coeff, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

fn degree(a: &[u64]) -> usize {
    a.len() - 1
}

fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// `(quotient, remainder)` of `a / b`, `b` nonzero.
fn divmod(f: &WorkingPrime, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if degree(&r) < degree(&b) || is_zero(&r) {
        return (vec![0], r);
    }
    let lead_inv = f.inv(*b.last().unwrap());
    let mut q = vec![0u64; degree(&r) - degree(&b) + 1];
    while !is_zero(&r) && degree(&r) >= degree(&b) {
        let shift = degree(&r) - degree(&b);
        let c = f.mul(*r.last().unwrap(), lead_inv);
        q[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            r[i + shift] = f.sub(r[i + shift], f.mul(c, bc));
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(f: &WorkingPrime, a: Vec<u64>) -> Vec<u64> {
    let a = trim(a);
    let lead = *a.last().unwrap();
    if lead == 0 {
        return a;
    }
    let inv = f.inv(lead);
    a.into_iter().map(|c| f.mul(c, inv)).collect()
}

fn gcd(f: &WorkingPrime, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !is_zero(&b) {
        let (_, r) = divmod(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, a)
}

fn mulmod(f: &WorkingPrime, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = f.add(prod[i + j], f.mul(x, y));
        }
    }
    divmod(f, &prod, m).1
}

fn powmod(f: &WorkingPrime, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = divmod(f, base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        b = mulmod(f, &b, &b, m);
        e >>= 1;
    }
    acc
}

fn derivative(f: &WorkingPrime, a: &[u64]) -> Vec<u64> {
    if a.len() <= 1 {
        return vec![0];
    }
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, i as u64 % f.p())).collect())
}

/// Distinct roots of `poly` in `GF(p)`, ascending. Returns `None` when the
/// polynomial does not split into linear factors.
pub(crate) fn distinct_roots(f: &WorkingPrime, poly: &[u64]) -> Option<Vec<u64>> {
    let poly = monic(f, poly.to_vec());
    if degree(&poly) == 0 {
        return Some(Vec::new());
    }
    let g = gcd(f, &poly, &derivative(f, &poly));
    let squarefree = monic(f, divmod(f, &poly, &g).0);
    // the split part is gcd(squarefree, x^p - x)
    let xp = powmod(f, &[0, 1], f.p(), &squarefree);
    let mut xp_minus_x = xp;
    xp_minus_x.resize(xp_minus_x.len().max(2), 0);
    xp_minus_x[1] = f.sub(xp_minus_x[1], 1);
    let split = gcd(f, &squarefree, &xp_minus_x);
    if degree(&split) != degree(&squarefree) {
        return None;
    }
    let mut roots = Vec::new();
    split_linear(f, split, &mut roots);
    roots.sort_unstable();
    Some(roots)
}

/// Equal-degree splitting of a squarefree product of linear factors, with
/// deterministic shifts `x + a` for `a = 0, 1, 2, ...`.
fn split_linear(f: &WorkingPrime, poly: Vec<u64>, out: &mut Vec<u64>) {
    match degree(&poly) {
        0 => return,
        1 => {
            out.push(f.neg(poly[0]));
            return;
        }
        _ => {}
    }
    let half = (f.p() - 1) / 2;
    for a in 0.. {
        let mut h = powmod(f, &[a % f.p(), 1], half, &poly);
        h[0] = f.sub(h[0], 1);
        let d = gcd(f, &poly, &h);
        if degree(&d) > 0 && degree(&d) < degree(&poly) {
            let rest = monic(f, divmod(f, &poly, &d).0);
            split_linear(f, d, out);
            split_linear(f, rest, out);
            return;
        }
    }
}
