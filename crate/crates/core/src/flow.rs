//! Truncated flow categories, recorded through their zero-dimensional moduli
//! counts, together with the Floer complex they induce and the homotopy of
//! the ring spectra they can be oriented in.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::linalg::{rank_mod_p, smith_normal_form, IntMatrix};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowGenerator {
    pub id: String,
    pub mu: i64,
    /// Position in the action order. Ranks are unique, so ties in action
    /// must already be broken.
    pub rank: i64,
}

impl FlowGenerator {
    pub fn new(id: impl Into<String>, mu: i64, rank: i64) -> Self {
        FlowGenerator { id: id.into(), mu, rank }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowCount {
    pub from: String,
    pub to: String,
    pub count: i64,
}

impl FlowCount {
    pub fn new(from: impl Into<String>, to: impl Into<String>, count: i64) -> Self {
        FlowCount { from: from.into(), to: to.into(), count }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowCategorySpec {
    truncation: i64,
    generators: Vec<FlowGenerator>,
    counts: BTreeMap<(usize, usize), i64>,
}

impl FlowCategorySpec {
    /// Zero counts are dropped. Grading and ordering are not checked here;
    /// see [`validate`].
    pub fn new(truncation: i64, generators: Vec<FlowGenerator>, counts: Vec<FlowCount>) -> Result<Self> {
        if truncation < 3 {
            return Err(Error::InvalidFlowCategory(format!("truncation must be at least 3, got {truncation}")));
        }
        let mut ids = BTreeMap::new();
        let mut ranks = BTreeMap::new();
        for (ix, g) in generators.iter().enumerate() {
            if ids.insert(g.id.as_str(), ix).is_some() {
                return Err(Error::InvalidFlowCategory(format!("duplicate generator `{}`", g.id)));
            }
            if let Some(other) = ranks.insert(g.rank, ix) {
                return Err(Error::InvalidFlowCategory(format!(
                    "generators `{}` and `{}` share rank {}",
                    generators[other].id, g.id, g.rank
                )));
            }
        }
        let mut table = BTreeMap::new();
        for c in &counts {
            let lookup = |id: &str| {
                ids.get(id).copied().ok_or_else(|| Error::InvalidFlowCategory(format!("unknown generator `{id}`")))
            };
            let key = (lookup(&c.from)?, lookup(&c.to)?);
            if table.insert(key, c.count).is_some() {
                return Err(Error::InvalidFlowCategory(format!("count ({}, {}) given twice", c.from, c.to)));
            }
        }
        table.retain(|_, v| *v != 0);
        Ok(FlowCategorySpec { truncation, generators, counts: table })
    }

    pub fn truncation(&self) -> i64 {
        self.truncation
    }

    pub fn generators(&self) -> &[FlowGenerator] {
        &self.generators
    }

    pub fn counts(&self) -> impl Iterator<Item = FlowCount> + '_ {
        self.counts.iter().map(|(&(a, b), &c)| FlowCount::new(&*self.generators[a].id, &*self.generators[b].id, c))
    }

    pub fn count(&self, from: &str, to: &str) -> i64 {
        let ix = |id: &str| self.generators.iter().position(|g| g.id == id);
        match (ix(from), ix(to)) {
            (Some(a), Some(b)) => self.counts.get(&(a, b)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn gradings(&self) -> BTreeSet<i64> {
        self.generators.iter().map(|g| g.mu).collect()
    }

    /// Every count replaced by its parity.
    pub fn parities(&self) -> Self {
        let mut out = self.clone();
        for v in out.counts.values_mut() {
            *v = v.rem_euclid(2);
        }
        out.counts.retain(|_, v| *v != 0);
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    /// A prime field.
    Fp(u64),
    Integers,
}

impl Coefficients {
    fn is_zero(self, v: i64) -> bool {
        match self {
            Coefficients::Fp(p) => v.rem_euclid(p as i64) == 0,
            Coefficients::Integers => v == 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A count on a pair whose grading gap is not one.
    Grading { from: String, to: String, gap: i64 },
    /// A count against the action order.
    Ordering { from: String, to: String },
    /// A nonzero entry of `d∘d`.
    DSquared { from: String, to: String, value: i64 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate(spec: &FlowCategorySpec, coeff: Coefficients) -> ValidationReport {
    let g = &spec.generators;
    let mut violations = Vec::new();
    for &(a, b) in spec.counts.keys() {
        let gap = g[a].mu - g[b].mu;
        if gap != 1 {
            violations.push(Violation::Grading { from: g[a].id.clone(), to: g[b].id.clone(), gap });
        }
        if g[a].rank >= g[b].rank {
            violations.push(Violation::Ordering { from: g[a].id.clone(), to: g[b].id.clone() });
        }
    }
    let mut out_edges: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
    for (&(a, b), &c) in &spec.counts {
        if g[a].mu - g[b].mu == 1 {
            out_edges.entry(a).or_default().push((b, c));
        }
    }
    let mut squares: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (&a, edges) in &out_edges {
        for &(b, c1) in edges {
            for &(c, c2) in out_edges.get(&b).map_or(&[][..], Vec::as_slice) {
                *squares.entry((a, c)).or_insert(0) += c1 * c2;
            }
        }
    }
    for ((a, c), v) in squares {
        if !coeff.is_zero(v) {
            violations.push(Violation::DSquared { from: g[a].id.clone(), to: g[c].id.clone(), value: v });
        }
    }
    ValidationReport { violations }
}

/// The chain complex `d(p) = Σ #M(p,q) · q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloerComplex {
    coeff: Coefficients,
    bases: BTreeMap<i64, Vec<String>>,
    /// `d_k : C_k → C_{k-1}`, with rows indexed by `C_{k-1}`.
    differentials: BTreeMap<i64, IntMatrix>,
}

impl FloerComplex {
    pub fn coefficients(&self) -> Coefficients {
        self.coeff
    }

    pub fn basis(&self, k: i64) -> &[String] {
        self.bases.get(&k).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, k: i64) -> usize {
        self.basis(k).len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.bases.keys().copied()
    }

    pub fn differential(&self, k: i64) -> IntMatrix {
        self.differentials.get(&k).cloned().unwrap_or_else(|| IntMatrix::zeros(self.rank(k - 1), self.rank(k)))
    }
}

pub fn floer_complex(spec: &FlowCategorySpec, coeff: Coefficients) -> Result<FloerComplex> {
    let report = validate(spec, coeff);
    if !report.is_clean() {
        return Err(Error::ValidationFailed(report.violations.len()));
    }
    let mut order: Vec<usize> = (0..spec.generators.len()).collect();
    order.sort_by_key(|&i| (spec.generators[i].mu, spec.generators[i].rank));
    let mut bases: BTreeMap<i64, Vec<String>> = BTreeMap::new();
    let mut position = BTreeMap::new();
    for i in order {
        let g = &spec.generators[i];
        let basis = bases.entry(g.mu).or_default();
        position.insert(i, basis.len());
        basis.push(g.id.clone());
    }
    let mut differentials: BTreeMap<i64, IntMatrix> = BTreeMap::new();
    for (&(a, b), &c) in &spec.counts {
        let k = spec.generators[a].mu;
        let m = differentials.entry(k).or_insert_with(|| {
            IntMatrix::zeros(bases.get(&(k - 1)).map_or(0, Vec::len), bases[&k].len())
        });
        let entry = match coeff {
            Coefficients::Fp(p) => c.rem_euclid(p as i64),
            Coefficients::Integers => c,
        };
        m.set(position[&b], position[&a], entry);
    }
    Ok(FloerComplex { coeff, bases, differentials })
}

/// One homology group: a free part of the given rank, plus cyclic torsion
/// `Z/t` for each listed `t` (always empty over a field).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

fn differential_rank(m: &IntMatrix, coeff: Coefficients) -> (usize, Vec<i64>) {
    match coeff {
        Coefficients::Fp(p) => (rank_mod_p(m, p), Vec::new()),
        Coefficients::Integers => {
            let snf = smith_normal_form(m);
            let torsion = snf.iter().copied().filter(|&d| d > 1).collect();
            (snf.len(), torsion)
        }
    }
}

/// Homology in each degree of `lo..=hi`.
pub fn homology(c: &FloerComplex, lo: i64, hi: i64) -> BTreeMap<i64, HomologyGroup> {
    let mut out = BTreeMap::new();
    let mut ranks: BTreeMap<i64, (usize, Vec<i64>)> = BTreeMap::new();
    let mut rank_of = |k: i64| ranks.entry(k).or_insert_with(|| differential_rank(&c.differential(k), c.coeff)).clone();
    for k in lo..=hi {
        let (out_rank, _) = rank_of(k);
        let (in_rank, torsion) = rank_of(k + 1);
        out.insert(k, HomologyGroup { rank: c.rank(k) - out_rank - in_rank, torsion });
    }
    out
}

/// Keeps the generators with rank in `lo..=hi` and the counts among them.
pub fn finite_range_restrict(spec: &FlowCategorySpec, lo: i64, hi: i64) -> Result<FlowCategorySpec> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty rank window [{lo}, {hi}]")));
    }
    let keep: Vec<usize> = (0..spec.generators.len()).filter(|&i| (lo..=hi).contains(&spec.generators[i].rank)).collect();
    let new_index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(n, &o)| (o, n)).collect();
    let generators = keep.iter().map(|&i| spec.generators[i].clone()).collect();
    let counts = spec
        .counts
        .iter()
        .filter_map(|(&(a, b), &c)| Some(((*new_index.get(&a)?, *new_index.get(&b)?), c)))
        .collect();
    Ok(FlowCategorySpec { truncation: spec.truncation, generators, counts })
}

/// A connective ring spectrum, through its homotopy groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingSpectrum {
    MU,
    /// The Postnikov truncation `τ_{≤r} MU`.
    TauMU(i64),
    HZ,
    HFp(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomotopyGroup {
    Zero,
    Free(u64),
    /// `Z/p`.
    Cyclic(u64),
}

/// Number of partitions of `n`.
pub fn partitions(n: u64) -> u64 {
    let n = n as usize;
    let mut ways = alloc::vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

impl RingSpectrum {
    pub fn homotopy(self, d: i64) -> HomotopyGroup {
        let mu = |d: i64| {
            if d >= 0 && d % 2 == 0 {
                HomotopyGroup::Free(partitions((d / 2) as u64))
            } else {
                HomotopyGroup::Zero
            }
        };
        match self {
            RingSpectrum::MU => mu(d),
            RingSpectrum::TauMU(r) if d <= r => mu(d),
            RingSpectrum::TauMU(_) => HomotopyGroup::Zero,
            RingSpectrum::HZ if d == 0 => HomotopyGroup::Free(1),
            RingSpectrum::HFp(p) if d == 0 => HomotopyGroup::Cyclic(p),
            RingSpectrum::HZ | RingSpectrum::HFp(_) => HomotopyGroup::Zero,
        }
    }

    /// `π_0`.
    pub fn pi0(self) -> HomotopyGroup {
        self.homotopy(0)
    }

    /// The smallest `r'` with `τ_{≤r'}` of this spectrum equal to its
    /// `τ_{≤r}`: odd truncations of `MU` drop by one.
    pub fn effective_truncation(self, r: i64) -> i64 {
        match self {
            RingSpectrum::MU | RingSpectrum::TauMU(_) if r > 0 && r % 2 == 1 => r - 1,
            _ => r,
        }
    }
}

/// `π_{gap-2} R`, where the obstruction to the next Pontryagin-Thom map lives.
pub fn obstruction_group(r: RingSpectrum, gap: i64) -> Result<HomotopyGroup> {
    if gap < 2 {
        return Err(Error::InvalidArgument(format!("obstruction gap must be at least 2, got {gap}")));
    }
    Ok(r.homotopy(gap - 2))
}

/// `N - 3`: every spectrum can be used after truncating that far.
pub fn max_safe_truncation(n: i64) -> Result<i64> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("truncation must be at least 3, got {n}")));
    }
    Ok(n - 3)
}
