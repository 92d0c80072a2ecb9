//! Command outputs. Every report serializes as `{"schema": 1, "kind": …, …}`
//! and deserializes back to an equal value.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::formats::SCHEMA;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema: u32,
    #[serde(flatten)]
    pub report: Report,
}

impl Envelope {
    pub fn new(report: Report) -> Self {
        Envelope { schema: SCHEMA, report }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Report {
    SteenrodApply { op: String, ring: String, element: String, result: String },
    SteenrodNormalize { input: String, normalized: String },
    SteenrodMilnor { i: u32, degree: u32, element: String },
    SteenrodAvailable { n: i64, available: Vec<u32> },
    SteenrodGate { gate: String, i: u32, available: bool },
    QclassUniversal { i: u32, max_rank: usize, class: String },
    QclassBundle { i: u32, ring: String, class: String },
    QclassRpn { n: u32, i: u32, class: String },
    FlowcatCheck { coefficients: String, clean: bool, violations: Vec<ViolationOut> },
    FlowcatHomology { coefficients: String, groups: Vec<HomologyOut> },
    FlowcatObstructions(ObstructionOut),
    OhpozAnalyze(AnalyzeOut),
    OhpozSearch(SearchOut),
    RpcpReport(Box<RpcpOut>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum ViolationOut {
    Grading { from: String, to: String, gap: i64 },
    Ordering { from: String, to: String },
    DSquared { from: String, to: String, value: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyOut {
    pub degree: i64,
    pub rank: usize,
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionOut {
    pub spectrum: String,
    pub entries: Vec<ObstructionEntry>,
    /// `N - 3`, present when a flow category was given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_safe_truncation: Option<i64>,
    /// Whether every listed group vanishes, when a flow category was given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unobstructed: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub to: Option<String>,
    pub gap: i64,
    pub degree: i64,
    pub group: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurplusOut {
    pub surplus: Vec<u64>,
    pub pairs: Option<Vec<u64>>,
    pub realizable: bool,
    pub realizable_without_self_caps: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReasonOut {
    Deficit { supply: u64, target: u64 },
    UncancellableSurplus { surplus: SurplusOut },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum VerdictOut {
    Contradiction { residue: u32, reason: ReasonOut },
    CollapseForced { candidate_pairings: usize },
    SurplusRequiresDifferentials { surplus: SurplusOut },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageEntry {
    pub p: i64,
    pub k: i64,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeOut {
    pub n: u32,
    pub period: u32,
    pub window: u32,
    pub supply: Vec<u64>,
    pub target: Vec<u64>,
    pub verdict: VerdictOut,
    /// The E_1 page over the window, when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub page: Option<Vec<PageEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementOut {
    pub point_twist: Option<i64>,
    pub point_first: bool,
    pub verdict: VerdictOut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileOut {
    pub betti: Vec<u64>,
    pub placements: Vec<PlacementOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOut {
    pub n: u32,
    pub shape: String,
    pub betti_cap: u64,
    pub profiles: Vec<ProfileOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraneOut {
    pub feasible: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QOut {
    pub i: u32,
    pub d: u32,
    /// `x_j`, `0`, or `transgression-unknown`.
    pub value: String,
    pub determined: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphOut {
    pub entries: usize,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityOut {
    pub r: i64,
    pub i: u32,
    pub idq_max: i64,
    pub dual_max: i64,
    pub rows: Vec<IdentityRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRow {
    pub d: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idq: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<String>,
    /// `y_{d+k} = y_d y_k` and `Q_i y_d`, when both identities apply.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QtcOut {
    pub r: i64,
    pub i: u32,
    pub bound: i64,
    pub dual_residue: i64,
    /// `None` when not guaranteed.
    pub class: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerRuleOut {
    pub r: i64,
    pub i: u32,
    pub applicable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from_idq: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from_dual: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RpcpOut {
    pub n: u32,
    pub brane: BraneOut,
    pub period: u32,
    pub generators: Vec<String>,
    pub q_table: Vec<QOut>,
    pub alphrpn: AlphOut,
    pub pss_range: Option<(i64, i64)>,
    pub identities: Vec<IdentityOut>,
    pub qtc: Vec<QtcOut>,
    pub power_rule: Vec<PowerRuleOut>,
    pub consistent: bool,
}

fn join<T: fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for VerdictOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictOut::Contradiction { residue, reason: ReasonOut::Deficit { supply, target } } => {
                write!(f, "contradiction at residue {residue}: E1 supplies {supply}, HF needs {target}")
            }
            VerdictOut::Contradiction { residue, reason: ReasonOut::UncancellableSurplus { surplus } } => {
                write!(f, "contradiction at residue {residue}: surplus {} cannot cancel", join(&surplus.surplus, ","))
            }
            VerdictOut::CollapseForced { candidate_pairings } => {
                write!(f, "consistent: collapse forced ({candidate_pairings} candidate pairings excluded)")
            }
            VerdictOut::SurplusRequiresDifferentials { surplus } => {
                write!(
                    f,
                    "consistent: surplus {} must cancel (without self-cap differentials: {})",
                    join(&surplus.surplus, ","),
                    if surplus.realizable_without_self_caps { "possible" } else { "impossible" }
                )
            }
        }
    }
}

impl Report {
    /// Human-readable rendering.
    pub fn text(&self) -> String {
        let mut out = String::new();
        let o = &mut out;
        match self {
            Report::SteenrodApply { result, .. } => writeln!(o, "{result}"),
            Report::SteenrodNormalize { normalized, .. } => writeln!(o, "{normalized}"),
            Report::SteenrodMilnor { element, .. } => writeln!(o, "{element}"),
            Report::SteenrodAvailable { available, .. } => writeln!(o, "{}", join(available, " ")),
            Report::SteenrodGate { available, .. } => writeln!(o, "{available}"),
            Report::QclassUniversal { class, .. } | Report::QclassBundle { class, .. } | Report::QclassRpn { class, .. } => {
                writeln!(o, "{class}")
            }
            Report::FlowcatCheck { clean, violations, .. } => {
                if *clean {
                    writeln!(o, "valid")
                } else {
                    let _ = writeln!(o, "invalid: {} violation(s)", violations.len());
                    for v in violations {
                        let _ = match v {
                            ViolationOut::Grading { from, to, gap } => {
                                writeln!(o, "  grading ({from}, {to}): gap {gap}, expected 1")
                            }
                            ViolationOut::Ordering { from, to } => writeln!(o, "  ordering ({from}, {to})"),
                            ViolationOut::DSquared { from, to, value } => {
                                writeln!(o, "  d^2 ({from}, {to}) = {value}")
                            }
                        };
                    }
                    Ok(())
                }
            }
            Report::FlowcatHomology { coefficients, groups } => {
                let field = match coefficients.as_str() {
                    "z" => "Z".to_string(),
                    c => c.replace("fp:", "F").replace("f2", "F2"),
                };
                for g in groups {
                    let mut parts = Vec::new();
                    if g.rank > 0 {
                        parts.push(if g.rank == 1 { field.clone() } else { format!("{field}^{}", g.rank) });
                    }
                    parts.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
                    let group = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
                    let _ = writeln!(o, "HF_{} = {group}", g.degree);
                }
                Ok(())
            }
            Report::FlowcatObstructions(ob) => {
                for e in &ob.entries {
                    let _ = match (&e.from, &e.to) {
                        (Some(a), Some(b)) => {
                            writeln!(o, "({a}, {b}) gap {}: pi_{} {} = {}", e.gap, e.degree, ob.spectrum, e.group)
                        }
                        _ => writeln!(o, "gap {}: pi_{} {} = {}", e.gap, e.degree, ob.spectrum, e.group),
                    };
                }
                if let Some(r) = ob.max_safe_truncation {
                    let _ = writeln!(o, "safe truncation: tauMU:{r}");
                }
                match ob.unobstructed {
                    Some(u) => writeln!(o, "{}", if u { "unobstructed" } else { "obstructed" }),
                    None => Ok(()),
                }
            }
            Report::OhpozAnalyze(a) => {
                let _ = writeln!(o, "supply {}", join(&a.supply, ","));
                let _ = writeln!(o, "target {}", join(&a.target, ","));
                writeln!(o, "{}", a.verdict)
            }
            Report::OhpozSearch(s) => {
                for p in &s.profiles {
                    let _ = writeln!(o, "{}", join(&p.betti, ","));
                    for pl in &p.placements {
                        let place = match pl.point_twist {
                            Some(t) if pl.point_first => format!("pt(twist {t}) then C"),
                            Some(t) => format!("C then pt(twist {t})"),
                            None => "C".to_string(),
                        };
                        let _ = writeln!(o, "  {place}: {}", pl.verdict);
                    }
                }
                if s.profiles.is_empty() {
                    let _ = writeln!(o, "no admissible profile");
                }
                Ok(())
            }
            Report::RpcpReport(r) => render_rpcp(o, r),
        }
        .expect("writing to a string");
        out
    }
}

fn render_rpcp(o: &mut String, r: &RpcpOut) -> fmt::Result {
    writeln!(o, "RP^{n} in CP^{n}", n = r.n)?;
    writeln!(o, "brane: {}", r.brane.reason)?;
    writeln!(o, "HF period {}: {}", r.period, r.generators.join(" "))?;
    let mut i_seen = None;
    for q in &r.q_table {
        if i_seen != Some(q.i) {
            write!(o, "{}Q{}:", if i_seen.is_some() { "\n" } else { "" }, q.i)?;
            i_seen = Some(q.i);
        }
        let v = if q.determined { q.value.clone() } else { "?".into() };
        write!(o, " x{}->{v}", q.d)?;
    }
    if i_seen.is_some() {
        writeln!(o)?;
    }
    writeln!(o, "Q_i on H*(RP^n): {} entries, {} mismatches", r.alphrpn.entries, r.alphrpn.mismatches.len())?;
    match r.pss_range {
        Some((lo, hi)) => writeln!(o, "PSS range [{lo}, {hi}]")?,
        None => writeln!(o, "PSS range empty")?,
    }
    for id in &r.identities {
        writeln!(o, "r={} Q{}: idq d<={}, dual d<={}", id.r, id.i, id.idq_max, id.dual_max)?;
        for row in &id.rows {
            write!(o, "  d={}", row.d)?;
            if let Some(e) = &row.idq {
                write!(o, "  idq: {e}")?;
            }
            if let Some(e) = &row.dual {
                write!(o, "  dual: {e}")?;
            }
            if let Some(rel) = row.relation.as_deref().filter(|r| *r != "0") {
                write!(o, "  relation: {rel} = 0")?;
            }
            writeln!(o)?;
        }
    }
    for q in &r.qtc {
        let class = q.class.clone().unwrap_or_else(|| "not guaranteed".into());
        writeln!(o, "r={} q{}(TC) = {class}  (bound {}, r' = {})", q.r, q.i, q.bound, q.dual_residue)?;
    }
    for p in &r.power_rule {
        if !p.applicable {
            continue;
        }
        let power = p.power.as_deref().unwrap_or("?");
        for (label, e) in [("idq", &p.from_idq), ("dual", &p.from_dual)] {
            if let Some(e) = e {
                writeln!(o, "r={} power rule ({label}): {power} = {e}", p.r)?;
            }
        }
    }
    writeln!(o, "{}", if r.consistent { "consistent" } else { "INCONSISTENT" })
}
