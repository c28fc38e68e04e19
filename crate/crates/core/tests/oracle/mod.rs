//! Independent reference computations. Nothing here calls into the library's
//! basis enumeration or linear algebra.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Generator for the oracles: degree and nilpotency height (`None` = polynomial).
#[derive(Clone, Copy, Debug)]
pub struct Gen {
    pub degree: u32,
    pub height: Option<u32>,
}

pub const fn gen(degree: u32, height: Option<u32>) -> Gen {
    Gen { degree, height }
}

/// `H*(Spin(9)) = F2[x3]/(x3^4) ⊗ Λ(x5, x7, x15)`.
pub const SPIN9: [Gen; 4] = [gen(3, Some(4)), gen(5, Some(2)), gen(7, Some(2)), gen(15, Some(2))];

/// Poincaré series through degree `cap` as a product of truncated geometric
/// series `1 + t^d + ... + t^(d(h-1))`.
pub fn poincare_series(gens: &[Gen], cap: u32) -> Vec<usize> {
    let cap = cap as usize;
    let mut series = vec![0usize; cap + 1];
    series[0] = 1;
    for g in gens {
        let d = g.degree as usize;
        let mut next = vec![0usize; cap + 1];
        for (n, &c) in series.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut e = 0usize;
            while n + e * d <= cap && g.height.is_none_or(|h| e < h as usize) {
                next[n + e * d] += c;
                e += 1;
            }
        }
        series = next;
    }
    series
}

/// Every exponent vector within heights and the degree cap, by brute force.
pub fn monomials(gens: &[Gen], cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for g in gens {
        let mut next = Vec::new();
        for m in &out {
            let used: u32 = m.iter().zip(gens).map(|(e, g)| e * g.degree).sum();
            let mut e = 0;
            while used + e * g.degree <= cap && g.height.is_none_or(|h| e < h) {
                let mut m2 = m.clone();
                m2.push(e);
                next.push(m2);
                e += 1;
            }
        }
        out = next;
    }
    out
}

fn product(gens: &[Gen], cap: u32, a: &[u32], b: &[u32]) -> Option<Vec<u32>> {
    let p: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
    let deg: u32 = p.iter().zip(gens).map(|(e, g)| e * g.degree).sum();
    let fits = p.iter().zip(gens).all(|(&e, g)| g.height.is_none_or(|h| e < h));
    (fits && deg <= cap).then_some(p)
}

/// Longest nonzero product of positive-degree basis classes, found by
/// multiplying out level by level. Products of sums expand into sums of
/// monomial products, so monomials suffice.
pub fn cup_length_exhaustive(gens: &[Gen], cap: u32) -> u32 {
    let positive: Vec<Vec<u32>> = monomials(gens, cap).into_iter().filter(|m| m.iter().any(|&e| e > 0)).collect();
    let mut level: BTreeSet<Vec<u32>> = positive.iter().cloned().collect();
    let mut length = 0;
    while !level.is_empty() {
        length += 1;
        let mut next = BTreeSet::new();
        for a in &level {
            for b in &positive {
                if let Some(p) = product(gens, cap, a, b) {
                    next.insert(p);
                }
            }
        }
        level = next;
    }
    length
}

/// E2 of the loop homology `Λ(u2) ⊗ F2[u4, u6, u10, u14]` by series:
/// `1/(1 - t^3) · (1 + t^5)(1 + t^7)(1 + t^11)(1 + t^15)`.
pub fn spin9_e2_series(cap: u32) -> Vec<usize> {
    let cap = cap as usize;
    let mut s = vec![0usize; cap + 1];
    for n in (0..=cap).step_by(3) {
        s[n] = 1;
    }
    for d in [5usize, 7, 11, 15] {
        for n in (d..=cap).rev() {
            s[n] += s[n - d];
        }
    }
    s
}

/// E-infinity of Spin(9) as `F2[x1_2]/(x1_2^4) ⊗ Λ(x1_4, x1_6, x1_14)`,
/// tallied by column: `(column, total degree) -> dim`.
pub fn spin9_e_infinity_by_column() -> BTreeSet<(u32, u32, Vec<u32>)> {
    let mut out = BTreeSet::new();
    for a in 0..4u32 {
        for b in 0..2u32 {
            for c in 0..2u32 {
                for d in 0..2u32 {
                    let s = a + b + c + d;
                    let total = 3 * a + 5 * b + 7 * c + 15 * d;
                    out.insert((s, total, vec![a, b, c, d]));
                }
            }
        }
    }
    out
}
