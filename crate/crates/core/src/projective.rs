//! `RP^n ⊂ CP^n`: Floer cohomology with its `Q_i` action, and the constraints
//! on a clean intersection `{p} ⊔ C` with `C` connected.
//!
//! `H^*(C)` is modelled with one generator `y_d` per degree `1 ≤ d ≤ n-1`
//! and nothing above degree `n-1`; products such as `y_3 y_1` stay formal.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::charclass::ThomTwist;
use crate::ring::{Generator, RingElement, RingPresentation};
use crate::steenrod::{available_qs_for_lagrangian, milnor_degree, milnor_q, SteenrodEvaluator};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraneFeasibility {
    pub n: i64,
    pub feasible: bool,
    pub reason: String,
}

/// `T RP^n = (n+1) O(1)` extends over `CP^n` exactly when `n + 1` is even.
pub fn brane_feasible(n: i64) -> Result<BraneFeasibility> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    let feasible = n % 2 == 1;
    let reason = if feasible {
        format!("n = {n} is odd: [T RP^n] = {} [O(1)] is restricted from CP^n", n + 1)
    } else {
        format!("n = {n} is even: the Maslov number n + 1 = {} is odd", n + 1)
    };
    Ok(BraneFeasibility { n, feasible, reason })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrongQ {
    /// `Q_i x_d = x_j`.
    Class(u32),
    Zero,
    /// The operation leaves the copy of `H^*(RP^n)` it starts in.
    TransgressionUnknown,
}

/// `Q_i x_d = d · x_{d + 2^{i+1} - 1}` for `0 ≤ d ≤ n - 2^{i+1} + 1`.
pub fn strong_qi(n: i64, i: u32, d: i64) -> Result<StrongQ> {
    if !available_qs_for_lagrangian(n)?.contains(&i) {
        return Err(Error::UnavailableOperation { i, n });
    }
    if !(0..=n).contains(&d) {
        return Err(Error::InvalidArgument(format!("degree {d} outside 0..={n}")));
    }
    let k = milnor_degree(i) as i64;
    Ok(if d > n - k {
        StrongQ::TransgressionUnknown
    } else if d % 2 == 1 {
        StrongQ::Class(((d + k) % (n + 1)) as u32)
    } else {
        StrongQ::Zero
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QEntry {
    pub i: u32,
    pub d: u32,
    pub value: StrongQ,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HFReport {
    pub n: u32,
    pub period: u32,
    /// `x_0, …, x_n`, one per residue.
    pub generators: Vec<String>,
    pub q_table: Vec<QEntry>,
}

pub fn hf_report(n: u32) -> Result<HFReport> {
    let qs = available_qs_for_lagrangian(n as i64)?;
    let generators = (0..=n).map(|d| format!("x{d}")).collect();
    let mut q_table = Vec::new();
    for &i in &qs {
        for d in 0..=n {
            q_table.push(QEntry { i, d, value: strong_qi(n as i64, i, d as i64)? });
        }
    }
    Ok(HFReport { n, period: n + 1, generators, q_table })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphEntry {
    pub i: u32,
    pub k: u32,
    /// By evaluating the admissible form of `Q_i` with the Cartan formula.
    pub computed: RingElement,
    /// `k · x^{k + 2^{i+1} - 1}`.
    pub closed_form: RingElement,
}

impl AlphEntry {
    pub fn agrees(&self) -> bool {
        self.computed == self.closed_form
    }
}

/// `Q_i(x^k)` on `H^*(RP^n)` for every `k ≤ n` and every `i` with
/// `2^{i+1} - 1 ≤ n`.
pub fn alphrpn_table(n: u32) -> Result<Vec<AlphEntry>> {
    let p = RingPresentation::rp(n);
    let x = RingElement::generator(&p, "x")?;
    let mut ev = SteenrodEvaluator::new(&p);
    let mut out = Vec::new();
    for i in (0..).take_while(|&i| milnor_degree(i) <= n.max(1)) {
        let q = milnor_q(i);
        for k in 0..=n {
            let computed = ev.apply(&q, &x.pow(k))?;
            let closed_form = if k % 2 == 1 { x.pow(k + milnor_degree(i)) } else { RingElement::zero(&p) };
            out.push(AlphEntry { i, k, computed, closed_form });
        }
    }
    Ok(out)
}

/// `{ y_1, …, y_{n-1} }` with `deg y_d = d`, zero above degree `n - 1`.
pub fn ptconn_ring(n: u32) -> Arc<RingPresentation> {
    let gens = (1..n).map(|d| Generator::new(format!("y{d}"), d)).collect();
    Arc::new(RingPresentation::new(gens, Some(n.saturating_sub(1))).expect("valid presentation"))
}

/// `y_d`, with `y_0 = 1` and `y_d = 0` outside `0..n`.
pub fn y(ring: &Arc<RingPresentation>, d: i64) -> RingElement {
    if d == 0 {
        return RingElement::one(ring);
    }
    RingElement::generator(ring, &format!("y{d}")).unwrap_or_else(|_| RingElement::zero(ring))
}

fn times(c: i64, e: &RingElement) -> RingElement {
    if c.rem_euclid(2) == 1 { e.clone() } else { RingElement::zero(e.presentation()) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PtConnParams {
    pub n: i64,
    /// `μ(p) ≡ r - 1 mod n + 1`.
    pub r: i64,
    pub i: u32,
    pub d: i64,
}

impl PtConnParams {
    fn k(&self) -> i64 {
        milnor_degree(self.i) as i64
    }

    /// Largest `d` for which the first identity holds.
    pub fn idq_max(&self) -> i64 {
        self.n - self.r.max(1) - (self.k() + 1) + 1
    }

    /// Largest `d` for which the dual identity holds.
    pub fn dual_max(&self) -> i64 {
        (self.n - 1).min((self.r - 2).rem_euclid(self.n + 1)) - (self.k() + 1) + 1
    }

    /// The residue after reversing the flow.
    pub fn dual_residue(&self) -> i64 {
        (self.n - self.r + 2).rem_euclid(self.n + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapRelation {
    /// `y_{d+k} + y_d y_k`, which both identities together force to vanish.
    pub relation: RingElement,
    /// `Q_i y_d` after substituting the relation: `d · y_{d+k}`.
    pub q_value: RingElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub params: PtConnParams,
    pub idq_max: i64,
    pub dual_max: i64,
    /// `Q_i y_d = (r + d) y_{d+k} + r y_k y_d`, when in range.
    pub idq: Option<RingElement>,
    /// `Q_i y_d = (r + d + 1) y_{d+k} + (r + 1) y_k y_d`, when in range.
    pub dual: Option<RingElement>,
    pub overlap: Option<OverlapRelation>,
}

pub fn ptconn_identities(p: PtConnParams) -> Result<IdentityReport> {
    if p.n < 3 || p.n % 2 == 0 {
        return Err(Error::BraneInfeasible { n: p.n });
    }
    if !(0..=p.n).contains(&p.r) {
        return Err(Error::InvalidArgument(format!("residue r = {} outside 0..={}", p.r, p.n)));
    }
    if !available_qs_for_lagrangian(p.n)?.contains(&p.i) {
        return Err(Error::UnavailableOperation { i: p.i, n: p.n });
    }
    let ring = ptconn_ring(p.n as u32);
    let (k, d, r) = (p.k(), p.d, p.r);
    let (idq_max, dual_max) = (p.idq_max(), p.dual_max());
    let top = y(&ring, d + k);
    let product = y(&ring, k).multiply(&y(&ring, d))?;
    let combo = |a: i64, b: i64| -> Result<RingElement> { times(a, &top).try_add(&times(b, &product)) };
    let idq = (0..=idq_max).contains(&d).then(|| combo(r + d, r)).transpose()?;
    let dual = (0..=dual_max).contains(&d).then(|| combo(r + d + 1, r + 1)).transpose()?;
    let overlap = match (&idq, &dual) {
        (Some(a), Some(b)) => {
            let relation = a.try_add(b)?;
            let q_value = a.try_add(&times(r, &relation))?;
            Some(OverlapRelation { relation, q_value })
        }
        _ => None,
    };
    Ok(IdentityReport { params: p, idq_max, dual_max, idq, dual, overlap })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QtcReport {
    pub n: i64,
    pub r: i64,
    pub i: u32,
    /// `min{n - 1, n - r, (r - 2) mod (n + 1)} + 1`.
    pub bound: i64,
    pub dual_residue: i64,
    /// `q_i(TC) = y_{2^{i+1}-1}` when `2^{i+1}` is within the bound.
    pub class: Option<RingElement>,
}

pub fn ptconn_qtc(n: i64, r: i64, i: u32) -> Result<QtcReport> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BraneInfeasible { n });
    }
    if !(0..=n).contains(&r) {
        return Err(Error::InvalidArgument(format!("residue r = {r} outside 0..={n}")));
    }
    let p = PtConnParams { n, r, i, d: 0 };
    let bound = (n - 1).min(n - r).min((r - 2).rem_euclid(n + 1)) + 1;
    let k = milnor_degree(i) as i64;
    let class = (k < bound).then(|| {
        // q_i(ξ) + q_i(-ξ - TC) = (r + r') y_k, and r' ≡ r + 1.
        let ring = ptconn_ring(n as u32);
        times(r + p.dual_residue(), &y(&ring, k))
    });
    Ok(QtcReport { n, r, i, bound, dual_residue: p.dual_residue(), class })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerRule {
    /// `2^{i+2} ≥ n`.
    NotApplicable,
    /// `y_1^{2^{i+1}}` together with the expressions the applicable
    /// identities give for it.
    Relations { power: RingElement, from_idq: Option<RingElement>, from_dual: Option<RingElement> },
}

/// The identities at `d = 1`, read through the power rule `Q_i y_1 = y_1^{2^{i+1}}`.
pub fn power_rule_check(n: i64, r: i64, i: u32) -> Result<PowerRule> {
    if (4i64 << i) >= n {
        return Ok(PowerRule::NotApplicable);
    }
    let report = ptconn_identities(PtConnParams { n, r, i, d: 1 })?;
    let ring = ptconn_ring(n as u32);
    Ok(PowerRule::Relations { power: y(&ring, 1).pow(2 << i), from_idq: report.idq, from_dual: report.dual })
}

/// `H^*(C)` with `Q_i` acting through the first identity on every
/// generator, and the twist `χ_i = r y_k`.
pub fn ptconn_thom_model(n: u32, r: i64, i: u32) -> Result<(Arc<RingPresentation>, ThomTwist)> {
    let base = ptconn_ring(n);
    let k = milnor_degree(i) as i64;
    let mut pres = (*base).clone();
    for d in 1..n as i64 {
        let image = times(r + d, &y(&base, d + k)).try_add(&times(r, &y(&base, k).multiply(&y(&base, d))?))?;
        pres = pres.with_primitive(&format!("y{d}"), i, &image)?;
    }
    let pres = Arc::new(pres);
    let chi = times(r, &y(&pres, k));
    let twist = ThomTwist::new(&pres, r, BTreeMap::from([(i, chi)]))?;
    Ok((pres, twist))
}
