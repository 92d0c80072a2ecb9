//! Dense integer matrices with ranks over `F_p` and Smith normal form over `Z`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// `self · other`; panics on a dimension mismatch.
    pub fn matmul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Entries reduced into `0..p`.
    pub fn reduce_mod(&self, p: u64) -> IntMatrix {
        let p = p as i64;
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v.rem_euclid(p)).collect() }
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = (0..self.rows).map(|r| &self.data[r * self.cols..(r + 1) * self.cols]).collect();
        f.debug_struct("IntMatrix").field("rows", &self.rows).field("cols", &self.cols).field("data", &rows).finish()
    }
}

/// Rank over `F_2`, by elimination on bit-packed rows.
pub fn rank_f2(m: &IntMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| {
            let mut bits = vec![0u64; words];
            for c in 0..m.cols {
                if m.get(r, c) & 1 != 0 {
                    bits[c / 64] |= 1 << (c % 64);
                }
            }
            bits
        })
        .collect();
    let mut rank = 0;
    for c in 0..m.cols {
        let (w, b) = (c / 64, 1u64 << (c % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else { continue };
        rows.swap(rank, pivot);
        let prow = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & b != 0 {
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over `F_p` for a prime `p`. Falls through to [`rank_f2`] for `p = 2`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    if p == 2 {
        return rank_f2(m);
    }
    let p = p as i64;
    let mut a = m.reduce_mod(p as u64);
    let mut rank = 0;
    for c in 0..a.cols {
        let Some(pivot) = (rank..a.rows).find(|&r| a.get(r, c) != 0) else { continue };
        swap_rows(&mut a, rank, pivot);
        let inv = mod_inverse(a.get(rank, c), p);
        for j in 0..a.cols {
            let v = a.get(rank, j) * inv % p;
            a.set(rank, j, v);
        }
        for r in 0..a.rows {
            let f = a.get(r, c);
            if r != rank && f != 0 {
                for j in 0..a.cols {
                    let v = (a.get(r, j) - f * a.get(rank, j)).rem_euclid(p);
                    a.set(r, j, v);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    // p is prime, so a^(p-2) works; the loop is only over small p.
    let (mut base, mut exp, mut acc) = (a.rem_euclid(p), p - 2, 1i64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn swap_rows(a: &mut IntMatrix, i: usize, j: usize) {
    if i != j {
        for c in 0..a.cols {
            a.data.swap(i * a.cols + c, j * a.cols + c);
        }
    }
}

/// Nonzero invariant factors of `m`, positive and each dividing the next.
/// Their count is the rank over `Q`.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<i64> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<i128>> = (0..rows).map(|r| (0..cols).map(|c| m.get(r, c) as i128).collect()).collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry of the trailing block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in a.iter().enumerate().skip(t) {
            for (c, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && best.is_none_or(|(br, bc)| v.abs() < a[br][bc].abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            let pivot = a[t][t];
            for r in t + 1..rows {
                let q = a[r][t].div_euclid(pivot);
                if q != 0 {
                    for c in t..cols {
                        a[r][c] -= q * a[t][c];
                    }
                }
                if a[r][t] != 0 {
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                let q = a[t][c].div_euclid(pivot);
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[c] -= q * row[t];
                    }
                }
                if a[t][c] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // Divisibility of the trailing block by the pivot.
                let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| a[r][c] % pivot != 0));
                match bad {
                    Some(r) => {
                        for c in t..cols {
                            a[t][c] += a[r][c];
                        }
                    }
                    None => break,
                }
            }
            // Move the smallest remaining entry of row/column t to the pivot.
            let mut best = (t, t);
            for r in t..rows {
                if a[r][t] != 0 && a[r][t].abs() < a[best.0][best.1].abs() {
                    best = (r, t);
                }
            }
            for c in t..cols {
                if a[t][c] != 0 && a[t][c].abs() < a[best.0][best.1].abs() {
                    best = (t, c);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs() as i64);
        t += 1;
    }
    diag
}
