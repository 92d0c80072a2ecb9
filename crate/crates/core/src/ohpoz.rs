//! Dimension bookkeeping for the clean-intersection spectral sequence.
//!
//! A component `C` with twist rank `t` contributes, for each cap `δ`, a column
//! carrying `H^{k - t - δN}(C)`. Differentials `d_r` have bidegree `(r, 1)`
//! and only ever lower dimensions, so a scenario can be refuted by counting.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleanComponentData {
    pub name: String,
    /// `b_0, …, b_m` over `F_2`.
    pub betti: Vec<u64>,
    /// Rank of the twisting local system; any representative mod `N`.
    pub twist: i64,
    pub connected: bool,
    pub closed_manifold: bool,
}

impl CleanComponentData {
    /// A connected closed component.
    pub fn manifold(name: impl Into<String>, betti: Vec<u64>, twist: i64) -> Self {
        CleanComponentData { name: name.into(), betti, twist, connected: true, closed_manifold: true }
    }

    pub fn point(name: impl Into<String>, twist: i64) -> Self {
        Self::manifold(name, vec![1], twist)
    }

    pub fn dimension(&self) -> usize {
        self.betti.len().saturating_sub(1)
    }

    fn check(&self) -> Result<()> {
        if self.betti.is_empty() {
            return Err(Error::InvalidScenario(format!("component `{}` has no cohomology", self.name)));
        }
        if self.connected && self.betti[0] != 1 {
            return Err(Error::InvalidScenario(format!("connected component `{}` needs b_0 = 1", self.name)));
        }
        if self.closed_manifold {
            let m = self.betti.len() - 1;
            if (0..=m).any(|j| self.betti[j] != self.betti[m - j]) {
                return Err(Error::InvalidScenario(format!("`{}` violates Poincaré duality", self.name)));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleanScenario {
    n: u32,
    period: u32,
    target: Vec<u64>,
    /// In ascending action order.
    components: Vec<CleanComponentData>,
    window: u32,
}

impl CleanScenario {
    /// `target[ρ]` is the expected dimension of `HF` in degrees `≡ ρ mod N`.
    pub fn new(
        n: u32,
        period: u32,
        target: Vec<u64>,
        components: Vec<CleanComponentData>,
        window: u32,
    ) -> Result<Self> {
        if period < 3 {
            return Err(Error::InvalidScenario(format!("period must be at least 3, got {period}")));
        }
        if window < 3 {
            return Err(Error::InvalidScenario(format!("window must span at least 3 periods, got {window}")));
        }
        if target.len() != period as usize {
            return Err(Error::InvalidScenario(format!("target has {} entries, expected {period}", target.len())));
        }
        for c in &components {
            c.check()?;
        }
        let mut names = BTreeSet::new();
        for c in &components {
            if !names.insert(c.name.as_str()) {
                return Err(Error::InvalidScenario(format!("duplicate component `{}`", c.name)));
            }
        }
        Ok(CleanScenario { n, period, target, components, window })
    }

    /// The answer for `RP^n ⊂ CP^n`: period `n + 1`, one class per degree.
    pub fn rpn(n: u32, components: Vec<CleanComponentData>) -> Result<Self> {
        Self::new(n, n + 1, vec![1; n as usize + 1], components, 3)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn period(&self) -> u32 {
        self.period
    }

    pub fn target(&self) -> &[u64] {
        &self.target
    }

    pub fn components(&self) -> &[CleanComponentData] {
        &self.components
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn with_window(mut self, window: u32) -> Result<Self> {
        if window < 3 {
            return Err(Error::InvalidScenario(format!("window must span at least 3 periods, got {window}")));
        }
        self.window = window;
        Ok(self)
    }

    /// E_1 dimensions summed over one period, per residue of the total degree.
    pub fn supply(&self) -> Vec<u64> {
        let n = self.period as i64;
        let mut out = vec![0; self.period as usize];
        for c in &self.components {
            for (j, &b) in c.betti.iter().enumerate() {
                out[(c.twist + j as i64).rem_euclid(n) as usize] += b;
            }
        }
        out
    }

    fn filtration(&self, component: usize, cap: i64) -> i64 {
        cap * self.components.len() as i64 + component as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Indexing {
    /// `E_r^{p,k}`, with `d_r` of bidegree `(r, 1)`.
    Cohomological,
    /// `E^r_{p,k}`, with `d_r` of bidegree `(-r, -1)`.
    Homological,
}

/// Bigraded dimensions, `p` the filtration and `k` the total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPage {
    pub page: u32,
    pub indexing: Indexing,
    pub entries: BTreeMap<(i64, i64), u64>,
}

impl SpectralPage {
    pub fn dimension(&self, p: i64, k: i64) -> u64 {
        self.entries.get(&(p, k)).copied().unwrap_or(0)
    }

    pub fn differential_bidegree(&self) -> (i64, i64) {
        let r = self.page as i64;
        match self.indexing {
            Indexing::Cohomological => (r, 1),
            Indexing::Homological => (-r, -1),
        }
    }

    /// Dimensions summed over the filtration, per total degree.
    pub fn total_degrees(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for (&(_, k), &v) in &self.entries {
            *out.entry(k).or_insert(0) += v;
        }
        out
    }

    /// Each column as `(k mod period, dimension)` pairs: the shape of the page
    /// up to relabeling filtrations and caps.
    pub fn column_shapes(&self, period: u32) -> BTreeMap<Vec<(i64, u64)>, usize> {
        let mut cols: BTreeMap<i64, Vec<(i64, u64)>> = BTreeMap::new();
        for (&(p, k), &v) in &self.entries {
            cols.entry(p).or_default().push((k.rem_euclid(period as i64), v));
        }
        let mut out = BTreeMap::new();
        for (_, mut c) in cols {
            c.sort();
            *out.entry(c).or_insert(0) += 1;
        }
        out
    }

    /// Adds `shift` to every total degree.
    pub fn shift_degrees(&self, shift: i64) -> Self {
        let entries = self.entries.iter().map(|(&(p, k), &v)| ((p, k + shift), v)).collect();
        SpectralPage { entries, ..self.clone() }
    }
}

/// Columns `p = δ·m + j` for component `j` in cap `δ < window`, with
/// `E_1^{p,k} = b_{k - t_j - δN}`.
pub fn assemble_e1(s: &CleanScenario) -> SpectralPage {
    let n = s.period as i64;
    let mut entries = BTreeMap::new();
    for cap in 0..s.window as i64 {
        for (j, c) in s.components.iter().enumerate() {
            let shift = c.twist.rem_euclid(n) + cap * n;
            for (deg, &b) in c.betti.iter().enumerate() {
                if b > 0 {
                    entries.insert((s.filtration(j, cap), shift + deg as i64), b);
                }
            }
        }
    }
    SpectralPage { page: 1, indexing: Indexing::Cohomological, entries }
}

/// Homological indexing of the same filtration, rewritten as cohomology of
/// the dual twist: `(p, k) ↦ (p, -k)`. Only dimensions are compared; whether
/// the two spectral sequences agree beyond that is not addressed.
pub fn dual_page(page: &SpectralPage) -> SpectralPage {
    let indexing = match page.indexing {
        Indexing::Cohomological => Indexing::Homological,
        Indexing::Homological => Indexing::Cohomological,
    };
    let entries = page.entries.iter().map(|(&(p, k), &v)| ((p, -k), v)).collect();
    SpectralPage { page: page.page, indexing, entries }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurplusReport {
    /// `supply - target` per residue.
    pub surplus: Vec<u64>,
    /// Cancelling pairs per period from residue `ρ` to `ρ + 1`, if the
    /// counts alone admit a solution.
    pub pairs: Option<Vec<u64>>,
    /// Whether the surplus can be paired off by differentials of bidegree
    /// `(r, 1)`, `r ≥ 1`, inside the central period of the window.
    pub realizable: bool,
    /// The same, forbidding differentials between two caps of one component.
    pub realizable_without_self_caps: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContradictionReason {
    Deficit { supply: u64, target: u64 },
    UncancellableSurplus(SurplusReport),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Contradiction { residue: u32, reason: ContradictionReason },
    /// Supply equals target everywhere. Each of the `candidate_pairings`
    /// bidegree-`(r,1)` pairings in the central period would leave a deficit.
    CollapseForced { candidate_pairings: usize },
    SurplusRequiresDifferentials(SurplusReport),
}

impl Verdict {
    pub fn is_contradiction(&self) -> bool {
        matches!(self, Verdict::Contradiction { .. })
    }
}

/// Nonnegative integer solutions of `x_{ρ-1} + x_ρ = e_ρ` on `Z/N`; returns
/// the one with smallest `x_0`.
fn cyclic_pairs(e: &[u64]) -> Option<Vec<u64>> {
    let n = e.len();
    // x_ρ = a_ρ + (-1)^ρ x_0.
    let mut a = vec![0i64; n];
    for r in 1..n {
        a[r] = e[r] as i64 - a[r - 1];
    }
    let sign = |r: usize| if r % 2 == 0 { 1 } else { -1 };
    // Closing equation x_{n-1} + x_0 = e_0.
    let closing_coeff = sign(n - 1) + 1;
    let closing_rhs = e[0] as i64 - a[n - 1];
    let candidates: Vec<i64> = if closing_coeff == 0 {
        if closing_rhs != 0 {
            return None;
        }
        // Smallest x_0 keeping every entry nonnegative.
        let lo = (0..n).filter(|&r| sign(r) > 0).map(|r| -a[r]).max().unwrap_or(0).max(0);
        vec![lo]
    } else if closing_rhs % closing_coeff == 0 {
        vec![closing_rhs / closing_coeff]
    } else {
        return None;
    };
    candidates.into_iter().find_map(|x0| {
        let x: Vec<i64> = (0..n).map(|r| a[r] + sign(r) * x0).collect();
        x.iter().all(|&v| v >= 0).then(|| x.into_iter().map(|v| v as u64).collect())
    })
}

struct Class {
    component: usize,
    filtration: i64,
    degree: i64,
}

/// Classes with total degree in `lo-1 ..= lo+N`, where `[lo, lo+N)` is the
/// lowest period whose neighbours are fully present in the window.
fn band(s: &CleanScenario) -> Result<(i64, Vec<Class>)> {
    let n = s.period as i64;
    let w = s.window as i64;
    let span = |c: &CleanComponentData| (c.twist.rem_euclid(n), c.dimension() as i64);
    let fits = |lo: i64| {
        s.components.iter().all(|c| {
            let (t, m) = span(c);
            let first = (lo - 1 - t - m).div_euclid(n) + i64::from((lo - 1 - t - m).rem_euclid(n) != 0);
            let last = (lo + n - t).div_euclid(n);
            first >= 0 && last < w
        })
    };
    let lo = (0..w * n).find(|&lo| fits(lo)).ok_or_else(|| {
        Error::InvalidScenario(format!("window of {} periods is too small for these components", s.window))
    })?;
    let mut classes = Vec::new();
    for cap in 0..w {
        for (j, c) in s.components.iter().enumerate() {
            let (t, _) = span(c);
            for (deg, &b) in c.betti.iter().enumerate() {
                let k = t + cap * n + deg as i64;
                if (lo - 1..=lo + n).contains(&k) {
                    for _ in 0..b {
                        classes.push(Class { component: j, filtration: s.filtration(j, cap), degree: k });
                    }
                }
            }
        }
    }
    Ok((lo, classes))
}

fn pairing_allowed(a: &Class, b: &Class, self_caps: bool) -> bool {
    b.degree == a.degree + 1 && b.filtration > a.filtration && (self_caps || a.component != b.component)
}

/// Whether every degree `k` of the band can lose exactly `e[k mod N]`
/// classes to a matching along allowed pairings.
fn realizable(s: &CleanScenario, lo: i64, classes: &[Class], e: &[u64], self_caps: bool) -> bool {
    let n = s.period as i64;
    let in_band = |k: i64| (lo..lo + n).contains(&k);
    let degrees: BTreeSet<i64> = classes.iter().map(|c| c.degree).collect();
    // Nodes: 0 source, 1 sink, then one per degree, then one per class.
    let deg_node: BTreeMap<i64, usize> = degrees.iter().enumerate().map(|(i, &k)| (k, 2 + i)).collect();
    let class_base = 2 + deg_node.len();
    let mut g = LowerBoundFlow::new(class_base + classes.len());
    for (&k, &node) in &deg_node {
        let available = classes.iter().filter(|c| c.degree == k).count() as i64;
        let (lower, upper) = if in_band(k) {
            let want = e[k.rem_euclid(n) as usize] as i64;
            (want, want)
        } else {
            (0, available)
        };
        if k.rem_euclid(2) == 0 {
            g.edge(0, node, lower, upper);
        } else {
            g.edge(node, 1, lower, upper);
        }
    }
    for (i, c) in classes.iter().enumerate() {
        let node = class_base + i;
        if c.degree.rem_euclid(2) == 0 {
            g.edge(deg_node[&c.degree], node, 0, 1);
        } else {
            g.edge(node, deg_node[&c.degree], 0, 1);
        }
    }
    for (i, a) in classes.iter().enumerate() {
        for (j, b) in classes.iter().enumerate() {
            if pairing_allowed(a, b, self_caps) {
                let (even, odd) = if a.degree.rem_euclid(2) == 0 { (i, j) } else { (j, i) };
                g.edge(class_base + even, class_base + odd, 0, 1);
            }
        }
    }
    g.feasible(0, 1)
}

pub fn check_scenario(s: &CleanScenario) -> Result<Verdict> {
    let supply = s.supply();
    for (r, (&have, &want)) in supply.iter().zip(&s.target).enumerate() {
        if have < want {
            return Ok(Verdict::Contradiction {
                residue: r as u32,
                reason: ContradictionReason::Deficit { supply: have, target: want },
            });
        }
    }
    let surplus: Vec<u64> = supply.iter().zip(&s.target).map(|(a, b)| a - b).collect();
    let (lo, classes) = band(s)?;
    if surplus.iter().all(|&v| v == 0) {
        let n = s.period as i64;
        let candidate_pairings = classes
            .iter()
            .filter(|a| (lo..lo + n).contains(&a.degree))
            .map(|a| classes.iter().filter(|b| pairing_allowed(a, b, true)).count())
            .sum();
        return Ok(Verdict::CollapseForced { candidate_pairings });
    }
    let pairs = cyclic_pairs(&surplus);
    let (any, strict) = match pairs {
        Some(_) => (realizable(s, lo, &classes, &surplus, true), realizable(s, lo, &classes, &surplus, false)),
        None => (false, false),
    };
    let report = SurplusReport { surplus: surplus.clone(), pairs, realizable: any, realizable_without_self_caps: strict };
    if any {
        Ok(Verdict::SurplusRequiresDifferentials(report))
    } else {
        let residue = surplus.iter().position(|&v| v > 0).unwrap_or(0) as u32;
        Ok(Verdict::Contradiction { residue, reason: ContradictionReason::UncancellableSurplus(report) })
    }
}

/// `[n - N + 2 + d_max, N - 2 + d_min]`, or `None` when inverted.
pub fn pss_range(n: i64, period: i64, d_min: i64, d_max: i64) -> Option<(i64, i64)> {
    let (lo, hi) = (n - period + 2 + d_max, period - 2 + d_min);
    (lo <= hi).then_some((lo, hi))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// A single connected component.
    Connected,
    /// A point together with one connected component.
    PointPlusConnected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConstraints {
    pub shape: Shape,
    /// Upper bound on every Betti number.
    pub betti_cap: u64,
    /// Tighter bounds in individual degrees.
    pub degree_caps: BTreeMap<usize, u64>,
    /// Impose Poincaré duality.
    pub closed_manifold: bool,
}

impl SearchConstraints {
    pub fn new(shape: Shape, betti_cap: u64) -> Self {
        SearchConstraints { shape, betti_cap, degree_caps: BTreeMap::new(), closed_manifold: true }
    }

    fn cap(&self, degree: usize) -> u64 {
        self.degree_caps.get(&degree).copied().unwrap_or(self.betti_cap).min(self.betti_cap)
    }
}

/// Twist data under which a profile survives, with the component twist
/// fixed to 0 (the target for `RP^n` is rotation invariant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Placement {
    pub point_twist: Option<i64>,
    pub point_first: bool,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleProfile {
    pub betti: Vec<u64>,
    pub placements: Vec<Placement>,
}

fn profiles(max_dim: usize, c: &SearchConstraints) -> Vec<Vec<u64>> {
    fn fill(b: &mut Vec<u64>, j: usize, c: &SearchConstraints, out: &mut Vec<Vec<u64>>) {
        let m = b.len() - 1;
        let last = if c.closed_manifold { m / 2 } else { m };
        if j > last {
            if b[m] > 0 {
                out.push(b.clone());
            }
            return;
        }
        let mirror = c.closed_manifold.then(|| m - j);
        let cap = mirror.map_or(c.cap(j), |k| c.cap(j).min(c.cap(k)));
        // Connected and closed forces b_0 = b_m = 1.
        let range = if j == 0 { 1..=1.min(cap) } else { 0..=cap };
        for v in range {
            b[j] = v;
            if let Some(k) = mirror {
                b[k] = v;
            }
            fill(b, j + 1, c, out);
        }
    }
    let mut out = Vec::new();
    for m in 0..=max_dim {
        fill(&mut vec![0; m + 1], 0, c, &mut out);
    }
    out
}

/// Betti profiles (connected, dimension at most `n` or `n - 1` for the
/// pointed shape) that some placement leaves uncontradicted for `RP^n`.
pub fn search_components(n: u32, constraints: &SearchConstraints) -> Result<Vec<AdmissibleProfile>> {
    let period = n as i64 + 1;
    let max_dim = match constraints.shape {
        Shape::Connected => n as usize,
        Shape::PointPlusConnected => n as usize - 1,
    };
    let mut out = Vec::new();
    for betti in profiles(max_dim, constraints) {
        let component = CleanComponentData {
            name: "C".into(),
            betti: betti.clone(),
            twist: 0,
            connected: true,
            closed_manifold: constraints.closed_manifold,
        };
        let mut placements = Vec::new();
        match constraints.shape {
            Shape::Connected => {
                let verdict = check_scenario(&CleanScenario::rpn(n, vec![component])?)?;
                if !verdict.is_contradiction() {
                    placements.push(Placement { point_twist: None, point_first: false, verdict });
                }
            }
            Shape::PointPlusConnected => {
                for t in 0..period {
                    for point_first in [true, false] {
                        let pt = CleanComponentData::point("pt", t);
                        let comps = if point_first { vec![pt, component.clone()] } else { vec![component.clone(), pt] };
                        let verdict = check_scenario(&CleanScenario::rpn(n, comps)?)?;
                        if !verdict.is_contradiction() {
                            placements.push(Placement { point_twist: Some(t), point_first, verdict });
                        }
                    }
                }
            }
        }
        if !placements.is_empty() {
            out.push(AdmissibleProfile { betti, placements });
        }
    }
    Ok(out)
}

/// Max flow with lower bounds, by the usual reduction to a circulation.
struct LowerBoundFlow {
    n: usize,
    edges: Vec<(usize, usize, i64, i64)>,
}

impl LowerBoundFlow {
    fn new(n: usize) -> Self {
        LowerBoundFlow { n, edges: Vec::new() }
    }

    fn edge(&mut self, u: usize, v: usize, lower: i64, upper: i64) {
        self.edges.push((u, v, lower, upper));
    }

    fn feasible(&self, s: usize, t: usize) -> bool {
        if self.edges.iter().any(|&(_, _, l, u)| l > u) {
            return false;
        }
        let (ss, tt) = (self.n, self.n + 1);
        let mut net = MaxFlow::new(self.n + 2);
        let mut excess = vec![0i64; self.n];
        for &(u, v, l, c) in &self.edges {
            net.add(u, v, c - l);
            excess[v] += l;
            excess[u] -= l;
        }
        net.add(t, s, i64::MAX / 4);
        let mut need = 0;
        for (v, &x) in excess.iter().enumerate() {
            if x > 0 {
                net.add(ss, v, x);
                need += x;
            } else if x < 0 {
                net.add(v, tt, -x);
            }
        }
        net.run(ss, tt) == need
    }
}

struct MaxFlow {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl MaxFlow {
    fn new(n: usize) -> Self {
        MaxFlow { adj: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new() }
    }

    fn add(&mut self, u: usize, v: usize, c: i64) {
        self.adj[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.adj[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    /// Edmonds-Karp.
    fn run(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let mut via = vec![usize::MAX; self.adj.len()];
            let mut queue = VecDeque::from([s]);
            let mut seen = vec![false; self.adj.len()];
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                for &e in &self.adj[u] {
                    let v = self.to[e];
                    if !seen[v] && self.cap[e] > 0 {
                        seen[v] = true;
                        via[v] = e;
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                let e = via[v];
                push = push.min(self.cap[e]);
                v = self.to[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = via[v];
                self.cap[e] -= push;
                self.cap[e ^ 1] += push;
                v = self.to[e ^ 1];
            }
            total += push;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones(k: usize) -> Vec<u64> {
        vec![1; k]
    }

    #[test]
    fn zero_hamiltonian_page() {
        let s = CleanScenario::rpn(5, vec![CleanComponentData::manifold("L", ones(6), 0)]).unwrap();
        let page = assemble_e1(&s);
        for p in 0..3 {
            for k in -2..20 {
                let want = u64::from((0..=5).contains(&(k - 6 * p)));
                assert_eq!(page.dimension(p, k), want);
            }
        }
        assert_eq!(check_scenario(&s).unwrap(), Verdict::CollapseForced { candidate_pairings: 1 });
    }

    #[test]
    fn point_page() {
        let s = CleanScenario::new(3, 4, vec![0; 4], vec![CleanComponentData::point("p", 2)], 3).unwrap();
        let page = assemble_e1(&s);
        assert_eq!(page.entries.len(), 3);
        assert_eq!(page.total_degrees().keys().copied().collect::<Vec<_>>(), vec![2, 6, 10]);
    }

    #[test]
    fn point_plus_projective_tiles() {
        for r in 0..=7i64 {
            let s = CleanScenario::rpn(
                7,
                vec![CleanComponentData::point("p", r - 1), CleanComponentData::manifold("C", ones(7), r)],
            )
            .unwrap();
            assert_eq!(s.supply(), ones(8));
            assert!(matches!(check_scenario(&s).unwrap(), Verdict::CollapseForced { .. }));
        }
    }

    #[test]
    fn small_connected_components_fail() {
        let s = CleanScenario::rpn(5, vec![CleanComponentData::manifold("C", ones(4), 0)]).unwrap();
        assert_eq!(
            check_scenario(&s).unwrap(),
            Verdict::Contradiction { residue: 4, reason: ContradictionReason::Deficit { supply: 0, target: 1 } }
        );
    }

    #[test]
    fn pointed_profile_with_a_hole() {
        let s = CleanScenario::rpn(
            7,
            vec![CleanComponentData::point("p", -1), CleanComponentData::manifold("C", vec![1, 1, 1, 0, 1, 1, 1], 0)],
        )
        .unwrap();
        assert!(check_scenario(&s).unwrap().is_contradiction());
    }

    #[test]
    fn surplus_cases() {
        // Two points in adjacent degrees on top of RP^3 cancel.
        let s = CleanScenario::rpn(
            3,
            vec![
                CleanComponentData::point("a", 1),
                CleanComponentData::manifold("L", ones(4), 0),
                CleanComponentData::point("b", 2),
            ],
        )
        .unwrap();
        match check_scenario(&s).unwrap() {
            Verdict::SurplusRequiresDifferentials(rep) => {
                assert_eq!(rep.surplus, vec![0, 1, 1, 0]);
                assert_eq!(rep.pairs, Some(vec![0, 1, 0, 0]));
                assert!(rep.realizable_without_self_caps);
            }
            v => panic!("{v:?}"),
        }
        // The same points in the wrong filtration order cannot cancel.
        let s = CleanScenario::rpn(
            3,
            vec![
                CleanComponentData::point("b", 2),
                CleanComponentData::manifold("L", ones(4), 0),
                CleanComponentData::point("a", 1),
            ],
        )
        .unwrap();
        match check_scenario(&s).unwrap() {
            Verdict::Contradiction { reason: ContradictionReason::UncancellableSurplus(rep), .. } => {
                assert!(rep.pairs.is_some());
                assert!(!rep.realizable);
            }
            v => panic!("{v:?}"),
        }
        // Middle surplus of a single manifold has nothing to cancel against.
        let s = CleanScenario::rpn(5, vec![CleanComponentData::manifold("C", vec![1, 2, 2, 2, 2, 1], 0)]).unwrap();
        match check_scenario(&s).unwrap() {
            Verdict::Contradiction { residue: 1, reason: ContradictionReason::UncancellableSurplus(rep) } => {
                assert_eq!(rep.pairs, Some(vec![0, 1, 0, 1, 0, 0]));
                assert!(!rep.realizable);
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn cyclic_solutions() {
        assert_eq!(cyclic_pairs(&[0, 0, 0]), Some(vec![0, 0, 0]));
        assert_eq!(cyclic_pairs(&[2, 2, 2]), Some(vec![1, 1, 1]));
        assert_eq!(cyclic_pairs(&[1, 1, 1]), None);
        assert_eq!(cyclic_pairs(&[1, 1, 1, 1]), Some(vec![0, 1, 0, 1]));
        assert_eq!(cyclic_pairs(&[1, 0, 1, 0]), None);
        assert_eq!(cyclic_pairs(&[0, 1, 0, 0]), None);
    }

    #[test]
    fn ranges() {
        assert_eq!(pss_range(7, 8, 0, 0), Some((1, 6)));
        assert_eq!(pss_range(3, 4, 0, 0), Some((1, 2)));
        assert_eq!(pss_range(7, 8, -2, 0), Some((1, 4)));
        assert_eq!(pss_range(7, 4, 0, 0), None);
    }

    #[test]
    fn duality() {
        let n = 7u32;
        for r in 0..=n as i64 {
            let s = CleanScenario::rpn(
                n,
                vec![CleanComponentData::point("p", r - 1), CleanComponentData::manifold("C", ones(n as usize), r)],
            )
            .unwrap();
            let page = assemble_e1(&s);
            let dual = dual_page(&page);
            assert_eq!(dual.differential_bidegree(), (-1, -1));
            assert_eq!(dual_page(&dual), page);
            // Reversing the flow: degrees k ↦ n - k.
            let reversed = dual.shift_degrees(n as i64);
            let r2 = (n as i64 - r + 2).rem_euclid(n as i64 + 1);
            let direct = CleanScenario::rpn(
                n,
                vec![CleanComponentData::point("p", r2 - 1), CleanComponentData::manifold("C", ones(n as usize), r2)],
            )
            .unwrap();
            assert_eq!(reversed.column_shapes(n + 1), assemble_e1(&direct).column_shapes(n + 1));
        }
        let pt = CleanScenario::new(3, 4, vec![0; 4], vec![CleanComponentData::point("p", 1)], 3).unwrap();
        let dual = dual_page(&assemble_e1(&pt));
        assert!(dual.entries.keys().all(|&(_, k)| k.rem_euclid(4) == 3));
    }

    #[test]
    fn validation() {
        assert!(CleanScenario::new(3, 2, vec![1; 2], vec![], 3).is_err());
        assert!(CleanScenario::new(3, 4, vec![1; 4], vec![], 2).is_err());
        assert!(CleanScenario::new(3, 4, vec![1; 3], vec![], 3).is_err());
        assert!(CleanScenario::rpn(3, vec![CleanComponentData::manifold("C", vec![1, 2], 0)]).is_err());
        assert!(CleanScenario::rpn(3, vec![CleanComponentData::manifold("C", vec![2, 2], 0)]).is_err());
        let p = CleanComponentData::point("p", 0);
        assert!(CleanScenario::rpn(3, vec![p.clone(), p]).is_err());
    }

    #[test]
    fn searches() {
        let conn = search_components(5, &SearchConstraints::new(Shape::Connected, 3)).unwrap();
        assert_eq!(conn.iter().map(|p| p.betti.clone()).collect::<Vec<_>>(), vec![ones(6)]);
        let mut c = SearchConstraints::new(Shape::PointPlusConnected, 3);
        let found = search_components(5, &c).unwrap();
        assert_eq!(found.iter().map(|p| p.betti.clone()).collect::<Vec<_>>(), vec![ones(5)]);
        c.degree_caps.insert(2, 0);
        assert!(search_components(5, &c).unwrap().is_empty());
    }
}
