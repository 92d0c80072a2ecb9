#![allow(dead_code)]

use std::sync::Arc;

use floerq_core::flow::{FlowCategorySpec, FlowCount, FlowGenerator};
use floerq_core::ring::{Monomial, RingElement, RingPresentation};
use rand::seq::SliceRandom;
use rand::Rng;

/// `e_1, …, e_m` in `F_2[t_1, …, t_m]`, as the graded parts of `Π (1 + t_j)`.
pub fn elementary(t: &Arc<RingPresentation>) -> Vec<RingElement> {
    let one = RingElement::one(t);
    let mut total = one.clone();
    for g in t.generators() {
        let tj = RingElement::generator(t, &g.name).unwrap();
        total = total.multiply(&(&one + &tj)).unwrap();
    }
    (1..=t.len() as u32).map(|j| total.part(j)).collect()
}

/// Rewrites a symmetric `f ∈ F_2[t_1..t_m]` in `w_1..w_m`, peeling off the
/// lex-leading monomial `t^α` with `Π e_j^{α_j - α_{j+1}}` each round.
pub fn symmetric_to_elementary(f: &RingElement) -> RingElement {
    let t = f.presentation().clone();
    let m = t.len();
    let w = RingPresentation::stiefel_whitney(m);
    let e = elementary(&t);
    let mut rest = f.clone();
    let mut out = RingElement::zero(&w);
    while let Some(lead) = rest.terms().iter().next_back().cloned() {
        let alpha = lead.exponents();
        assert!(alpha.windows(2).all(|p| p[0] >= p[1]), "not symmetric: leading term {alpha:?}");
        let mut exps = vec![0u32; m];
        let mut peel = RingElement::one(&t);
        for j in 0..m {
            exps[j] = alpha[j] - alpha.get(j + 1).copied().unwrap_or(0);
            peel = peel.multiply(&e[j].pow(exps[j])).unwrap();
        }
        rest = &rest + &peel;
        out = &out + &RingElement::monomial(&w, Monomial(exps));
    }
    out
}

/// `Σ t_j^k` in `F_2[t_1, …, t_m]`.
pub fn power_sum(t: &Arc<RingPresentation>, k: u32) -> RingElement {
    let mut out = RingElement::zero(t);
    for g in t.generators() {
        out = &out + &RingElement::generator(t, &g.name).unwrap().pow(k);
    }
    out
}

/// Basis of `{ v : v M = 0 }` over `F_2` for an `r × c` 0/1 matrix.
fn left_kernel(m: &[Vec<u8>], r: usize, c: usize) -> Vec<Vec<u8>> {
    // Row-reduce M^T (c × r) and read off its kernel.
    let mut a: Vec<Vec<u8>> = (0..c).map(|j| (0..r).map(|i| m[i][j]).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..r {
        let Some(p) = (row..c).find(|&i| a[i][col] == 1) else { continue };
        a.swap(row, p);
        for i in 0..c {
            if i != row && a[i][col] == 1 {
                let pr = a[row].clone();
                for (x, y) in a[i].iter_mut().zip(pr) {
                    *x ^= y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..r).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u8; r];
            v[f] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = a[i][f];
            }
            v
        })
        .collect()
}

/// A flow category that validates over `F_2`: random differentials with
/// `d∘d ≡ 0`, ranks from a random linear extension of the flow order, and
/// integer counts that are random lifts of the parities.
pub fn random_valid_spec(rng: &mut impl Rng) -> FlowCategorySpec {
    let lo: i64 = rng.gen_range(-3..=2);
    let len: i64 = rng.gen_range(2..=5);
    let degrees: Vec<i64> = (lo..lo + len).collect();
    let dims: Vec<usize> = degrees.iter().map(|_| rng.gen_range(0..=4)).collect();
    let mut ids: Vec<Vec<String>> = Vec::new();
    for (i, &k) in degrees.iter().enumerate() {
        ids.push((0..dims[i]).map(|j| format!("g{k}_{j}")).collect());
    }
    // d[i] : C_{degrees[i]} → C_{degrees[i] - 1}, as a dims[i-1] × dims[i] matrix.
    let mut d: Vec<Vec<Vec<u8>>> = vec![Vec::new(); degrees.len()];
    for i in (1..degrees.len()).rev() {
        let (rows, cols) = (dims[i - 1], dims[i]);
        if i + 1 < degrees.len() && dims[i + 1] > 0 {
            let ker = left_kernel(&d[i + 1], dims[i], dims[i + 1]);
            // Each row of d[i] kills the image of d[i+1].
            d[i] = (0..rows)
                .map(|_| {
                    let mut v = vec![0u8; cols];
                    for b in &ker {
                        if rng.gen_bool(0.5) {
                            for (x, y) in v.iter_mut().zip(b) {
                                *x ^= y;
                            }
                        }
                    }
                    v
                })
                .collect();
        } else {
            d[i] = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..=1)).collect()).collect();
        }
    }
    // Random linear extension: sources before targets.
    let mut all: Vec<(usize, usize)> = (0..degrees.len()).flat_map(|i| (0..dims[i]).map(move |j| (i, j))).collect();
    let mut indegree = std::collections::BTreeMap::new();
    for &(i, j) in &all {
        let n = if i + 1 < degrees.len() { (0..dims[i + 1]).filter(|&c| d[i + 1][j][c] == 1).count() } else { 0 };
        indegree.insert((i, j), n);
    }
    all.shuffle(rng);
    let mut order = Vec::new();
    while !all.is_empty() {
        let pos = all.iter().position(|v| indegree[v] == 0).expect("acyclic");
        let (i, j) = all.remove(pos);
        if i >= 1 {
            for r in 0..dims[i - 1] {
                if d[i][r][j] == 1 {
                    *indegree.get_mut(&(i - 1, r)).unwrap() -= 1;
                }
            }
        }
        order.push((i, j));
    }
    let mut rank = std::collections::BTreeMap::new();
    let mut next = rng.gen_range(-20..0);
    for v in &order {
        rank.insert(*v, next);
        next += rng.gen_range(1..=3);
    }
    let generators =
        order.iter().map(|&(i, j)| FlowGenerator::new(ids[i][j].clone(), degrees[i], rank[&(i, j)])).collect();
    let mut counts = Vec::new();
    for i in 1..degrees.len() {
        for r in 0..dims[i - 1] {
            for c in 0..dims[i] {
                let (src, dst) = ((i, c), (i - 1, r));
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                let value = if d[i][r][c] == 1 {
                    sign * [1, 1, 3][rng.gen_range(0..3)]
                } else if rank[&src] < rank[&dst] && rng.gen_bool(0.3) {
                    sign * 2
                } else {
                    0
                };
                if value != 0 {
                    counts.push(FlowCount::new(ids[i][c].clone(), ids[i - 1][r].clone(), value));
                }
            }
        }
    }
    let n = rng.gen_range(3..=8);
    FlowCategorySpec::new(n, generators, counts).expect("well-formed spec")
}
