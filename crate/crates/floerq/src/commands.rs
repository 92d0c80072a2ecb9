use floerq_core::charclass::{qi_of_bundle, qi_universal, BundleDescriptor};
use floerq_core::flow::{
    finite_range_restrict, floer_complex, homology, obstruction_group, validate, FlowCategorySpec, HomotopyGroup,
    Violation,
};
use floerq_core::ohpoz::{
    assemble_e1, check_scenario, pss_range, search_components, ContradictionReason, SearchConstraints, SurplusReport,
    Verdict,
};
use floerq_core::projective::{
    alphrpn_table, brane_feasible, hf_report, power_rule_check, ptconn_identities, ptconn_qtc, PowerRule,
    PtConnParams, StrongQ,
};
use floerq_core::ring::{RingElement, RingPresentation};
use floerq_core::steenrod::{
    available_qs_for_lagrangian, milnor_degree, milnor_q, q_available, SteenrodElement,
    SteenrodEvaluator,
};
use floerq_core::Error;

use crate::formats::{self, BundleJson, FlowCategoryJson, ScenarioJson};
use crate::report::*;
use crate::{CliError, Command, FlowcatCmd, OhpozCmd, QclassCmd, RpcpCmd, SteenrodCmd};

/// Runs one command, returning its report and exit code.
pub fn execute(cmd: &Command) -> Result<(Report, i32), CliError> {
    match cmd {
        Command::Steenrod(c) => steenrod(c).map(|r| (r, 0)),
        Command::Qclass(c) => qclass(c).map(|r| (r, 0)),
        Command::Flowcat(c) => flowcat(c),
        Command::Ohpoz(c) => ohpoz(c),
        Command::Rpcp(RpcpCmd::Report { n, r }) => {
            let out = rpcp_report(*n, *r)?;
            let code = if out.consistent { 0 } else { 2 };
            Ok((Report::RpcpReport(Box::new(out)), code))
        }
    }
}

fn steenrod(c: &SteenrodCmd) -> Result<Report, CliError> {
    Ok(match c {
        SteenrodCmd::Apply { op, ring, elem } => {
            let pres = formats::ring_from_arg(ring)?;
            let op_el = SteenrodElement::parse(op)?;
            let a = RingElement::parse(&pres, elem)?;
            let result = SteenrodEvaluator::new(&pres).apply(&op_el, &a)?;
            Report::SteenrodApply {
                op: op_el.to_string(),
                ring: ring.clone(),
                element: a.to_string(),
                result: result.to_string(),
            }
        }
        SteenrodCmd::Normalize { op } => {
            let normalized = SteenrodElement::parse(op)?;
            Report::SteenrodNormalize { input: op.clone(), normalized: normalized.to_string() }
        }
        SteenrodCmd::Milnor { i } => {
            if *i > 20 {
                return Err(CliError::Input(format!("Q_{i} is beyond the supported range 0..=20")));
            }
            Report::SteenrodMilnor { i: *i, degree: milnor_degree(*i), element: milnor_q(*i).to_string() }
        }
        SteenrodCmd::Available(args) => match (args.n, &args.gate, args.i) {
            (Some(n), _, _) => Report::SteenrodAvailable { n, available: available_qs_for_lagrangian(n)? },
            (None, Some(g), Some(i)) => {
                let gate = formats::gate_from_arg(g)?;
                Report::SteenrodGate { gate: g.clone(), i, available: q_available(gate, i) }
            }
            _ => return Err(CliError::Input("give --n, or --gate with --i".into())),
        },
    })
}

fn qclass(c: &QclassCmd) -> Result<Report, CliError> {
    Ok(match c {
        QclassCmd::Universal { i, rank } => {
            if *i > 4 {
                return Err(CliError::Input(format!("q_{i} has degree {}; supported up to q_4", milnor_degree(*i))));
            }
            let max_rank = rank.unwrap_or(milnor_degree(*i) as usize);
            if max_rank == 0 {
                return Err(CliError::Input("--rank must be positive".into()));
            }
            Report::QclassUniversal { i: *i, max_rank, class: qi_universal(*i, max_rank).to_string() }
        }
        QclassCmd::Bundle { file, i } => {
            let doc: BundleJson = formats::read_json(file)?;
            let (ring, bundle) = doc.resolve()?;
            let ring_label = match &doc.ring {
                formats::RingRef::Shorthand(s) => s.clone(),
                formats::RingRef::Inline(_) => "inline".into(),
            };
            Report::QclassBundle { i: *i, ring: ring_label, class: qi_of_bundle(*i, &bundle, &ring)?.to_string() }
        }
        QclassCmd::Rpn { n, i } => {
            let ring = RingPresentation::rp(*n);
            let class = qi_of_bundle(*i, &BundleDescriptor::tangent_rp(*n), &ring)?;
            Report::QclassRpn { n: *n, i: *i, class: class.to_string() }
        }
    })
}

fn load_flow(file: &std::path::Path) -> Result<FlowCategorySpec, CliError> {
    let doc: FlowCategoryJson = formats::read_json(file)?;
    doc.to_spec()
}

fn group_label(g: HomotopyGroup) -> String {
    match g {
        HomotopyGroup::Zero => "0".into(),
        HomotopyGroup::Free(1) => "Z".into(),
        HomotopyGroup::Free(m) => format!("Z^{m}"),
        HomotopyGroup::Cyclic(p) => format!("Z/{p}"),
    }
}

fn flowcat(c: &FlowcatCmd) -> Result<(Report, i32), CliError> {
    match c {
        FlowcatCmd::Check { file, coeff } => {
            let spec = load_flow(file)?;
            let coefficients = formats::coefficients_from_arg(coeff)?;
            let report = validate(&spec, coefficients);
            let violations: Vec<ViolationOut> = report
                .violations
                .into_iter()
                .map(|v| match v {
                    Violation::Grading { from, to, gap } => ViolationOut::Grading { from, to, gap },
                    Violation::Ordering { from, to } => ViolationOut::Ordering { from, to },
                    Violation::DSquared { from, to, value } => ViolationOut::DSquared { from, to, value },
                })
                .collect();
            let clean = violations.is_empty();
            let out = Report::FlowcatCheck { coefficients: formats::coefficients_label(coefficients), clean, violations };
            Ok((out, if clean { 0 } else { 1 }))
        }
        FlowcatCmd::Homology { file, coeff, rank_lo, rank_hi } => {
            let mut spec = load_flow(file)?;
            let coefficients = formats::coefficients_from_arg(coeff)?;
            if rank_lo.is_some() || rank_hi.is_some() {
                let ranks = spec.generators().iter().map(|g| g.rank);
                let lo = rank_lo.unwrap_or_else(|| ranks.clone().min().unwrap_or(0));
                let hi = rank_hi.unwrap_or_else(|| ranks.max().unwrap_or(0));
                spec = finite_range_restrict(&spec, lo, hi)?;
            }
            let complex = floer_complex(&spec, coefficients).map_err(|e| match e {
                Error::ValidationFailed(k) => CliError::Input(format!(
                    "flow category failed validation with {k} violation(s); run `flowcat check` for details"
                )),
                e => e.into(),
            })?;
            let gradings = spec.gradings();
            let groups = match (gradings.first(), gradings.last()) {
                (Some(&lo), Some(&hi)) => homology(&complex, lo, hi)
                    .into_iter()
                    .map(|(degree, h)| HomologyOut { degree, rank: h.rank, torsion: h.torsion })
                    .collect(),
                _ => Vec::new(),
            };
            Ok((Report::FlowcatHomology { coefficients: formats::coefficients_label(coefficients), groups }, 0))
        }
        FlowcatCmd::Obstructions { file, ring, max_gap } => {
            let spectrum = formats::spectrum_from_arg(ring)?;
            let entry = |from: Option<String>, to: Option<String>, gap: i64| -> Result<ObstructionEntry, CliError> {
                let g = obstruction_group(spectrum, gap)?;
                Ok(ObstructionEntry { from, to, gap, degree: gap - 2, group: group_label(g) })
            };
            let mut entries = Vec::new();
            let mut max_safe_truncation = None;
            match file {
                Some(f) => {
                    let spec = load_flow(f)?;
                    let n = spec.truncation();
                    max_safe_truncation = Some(floerq_core::flow::max_safe_truncation(n)?);
                    for a in spec.generators() {
                        for b in spec.generators() {
                            let gap = a.mu - b.mu;
                            if a.rank < b.rank && (2..n).contains(&gap) {
                                entries.push(entry(Some(a.id.clone()), Some(b.id.clone()), gap)?);
                            }
                        }
                    }
                }
                None => {
                    if *max_gap < 2 {
                        return Err(CliError::Input("--max-gap must be at least 2".into()));
                    }
                    for gap in 2..=*max_gap {
                        entries.push(entry(None, None, gap)?);
                    }
                }
            }
            let unobstructed = file.is_some().then(|| entries.iter().all(|e| e.group == "0"));
            let out = ObstructionOut { spectrum: formats::spectrum_label(spectrum), entries, max_safe_truncation, unobstructed };
            Ok((Report::FlowcatObstructions(out), 0))
        }
    }
}

fn surplus_out(s: SurplusReport) -> SurplusOut {
    SurplusOut {
        surplus: s.surplus,
        pairs: s.pairs,
        realizable: s.realizable,
        realizable_without_self_caps: s.realizable_without_self_caps,
    }
}

fn verdict_out(v: Verdict) -> VerdictOut {
    match v {
        Verdict::Contradiction { residue, reason } => VerdictOut::Contradiction {
            residue,
            reason: match reason {
                ContradictionReason::Deficit { supply, target } => ReasonOut::Deficit { supply, target },
                ContradictionReason::UncancellableSurplus(s) => {
                    ReasonOut::UncancellableSurplus { surplus: surplus_out(s) }
                }
            },
        },
        Verdict::CollapseForced { candidate_pairings } => VerdictOut::CollapseForced { candidate_pairings },
        Verdict::SurplusRequiresDifferentials(s) => VerdictOut::SurplusRequiresDifferentials { surplus: surplus_out(s) },
    }
}

fn ohpoz(c: &OhpozCmd) -> Result<(Report, i32), CliError> {
    match c {
        OhpozCmd::Analyze { file, page } => {
            let doc: ScenarioJson = formats::read_json(file)?;
            let s = doc.to_scenario()?;
            let verdict = check_scenario(&s)?;
            let code = if verdict.is_contradiction() { 3 } else { 0 };
            let page = page.then(|| {
                assemble_e1(&s).entries.into_iter().map(|((p, k), dim)| PageEntry { p, k, dim }).collect()
            });
            let out = AnalyzeOut {
                n: s.n(),
                period: s.period(),
                window: s.window(),
                supply: s.supply(),
                target: s.target().to_vec(),
                verdict: verdict_out(verdict),
                page,
            };
            Ok((Report::OhpozAnalyze(out), code))
        }
        OhpozCmd::Search { n, shape, cap, open } => {
            if *n < 3 || n % 2 == 0 {
                return Err(Error::BraneInfeasible { n: *n as i64 }.into());
            }
            let shape = formats::shape_from_arg(shape)?;
            let mut constraints = SearchConstraints::new(shape, *cap);
            constraints.closed_manifold = !open;
            let profiles = search_components(*n, &constraints)?
                .into_iter()
                .map(|p| ProfileOut {
                    betti: p.betti,
                    placements: p
                        .placements
                        .into_iter()
                        .map(|pl| PlacementOut {
                            point_twist: pl.point_twist,
                            point_first: pl.point_first,
                            verdict: verdict_out(pl.verdict),
                        })
                        .collect(),
                })
                .collect();
            let out = SearchOut { n: *n, shape: formats::shape_label(shape).into(), betti_cap: *cap, profiles };
            Ok((Report::OhpozSearch(out), 0))
        }
    }
}

fn strong_label(v: StrongQ) -> (String, bool) {
    match v {
        StrongQ::Class(j) => (format!("x{j}"), true),
        StrongQ::Zero => ("0".into(), true),
        StrongQ::TransgressionUnknown => ("transgression-unknown".into(), false),
    }
}

pub fn rpcp_report(n: u32, only_r: Option<i64>) -> Result<RpcpOut, CliError> {
    let brane = brane_feasible(n as i64)?;
    if !brane.feasible || n < 3 {
        return Err(CliError::Input(brane.reason));
    }
    let ni = n as i64;
    let hf = hf_report(n)?;
    let q_table: Vec<QOut> = hf
        .q_table
        .iter()
        .map(|e| {
            let (value, determined) = strong_label(e.value);
            QOut { i: e.i, d: e.d, value, determined }
        })
        .collect();

    let table = alphrpn_table(n)?;
    let mut problems: Vec<String> = table
        .iter()
        .filter(|e| !e.agrees())
        .map(|e| format!("Q{} x^{}: {} vs {}", e.i, e.k, e.computed, e.closed_form))
        .collect();

    // Inside the PSS range the Floer action must match the Cartan one.
    let range = pss_range(ni, ni + 1, 0, 0);
    if let Some((lo, hi)) = range {
        for q in &hf.q_table {
            let d = q.d as i64;
            if d < lo || d + milnor_degree(q.i) as i64 > hi {
                continue;
            }
            let Some(row) = table.iter().find(|e| e.i == q.i && e.k == q.d) else { continue };
            let x = RingElement::generator(row.computed.presentation(), "x")?;
            let agrees = match q.value {
                StrongQ::Class(j) => row.computed == x.pow(j),
                StrongQ::Zero => row.computed.is_zero(),
                StrongQ::TransgressionUnknown => false,
            };
            if !agrees {
                problems.push(format!("Q{} x{}: Floer and Cartan actions differ", q.i, q.d));
            }
        }
    }

    let residues: Vec<i64> = match only_r {
        Some(r) if !(0..=ni).contains(&r) => {
            return Err(CliError::Input(format!("residue r = {r} outside 0..={n}")));
        }
        Some(r) => vec![r],
        None => (0..=ni).collect(),
    };
    let qs = available_qs_for_lagrangian(ni)?;
    let mut identities = Vec::new();
    let mut qtc = Vec::new();
    let mut power_rule = Vec::new();
    for &r in &residues {
        for &i in &qs {
            let params = PtConnParams { n: ni, r, i, d: 0 };
            let mut rows = Vec::new();
            for d in 0..=ni {
                let rep = ptconn_identities(PtConnParams { d, ..params })?;
                if rep.idq.is_none() && rep.dual.is_none() {
                    continue;
                }
                if let (Some(a), Some(b), Some(c)) = (&rep.idq, &rep.dual, &rep.overlap) {
                    if a + b != c.relation {
                        problems.push(format!("r={r} Q{i} d={d}: identities do not sum to the relation"));
                    }
                }
                rows.push(IdentityRow {
                    d,
                    idq: rep.idq.as_ref().map(ToString::to_string),
                    dual: rep.dual.as_ref().map(ToString::to_string),
                    relation: rep.overlap.as_ref().map(|c| c.relation.to_string()),
                    q_value: rep.overlap.as_ref().map(|c| c.q_value.to_string()),
                });
            }
            identities.push(IdentityOut { r, i, idq_max: params.idq_max(), dual_max: params.dual_max(), rows });
            let t = ptconn_qtc(ni, r, i)?;
            qtc.push(QtcOut {
                r,
                i,
                bound: t.bound,
                dual_residue: t.dual_residue,
                class: t.class.map(|c| c.to_string()),
            });
            power_rule.push(match power_rule_check(ni, r, i)? {
                PowerRule::NotApplicable => {
                    PowerRuleOut { r, i, applicable: false, power: None, from_idq: None, from_dual: None }
                }
                PowerRule::Relations { power, from_idq, from_dual } => PowerRuleOut {
                    r,
                    i,
                    applicable: true,
                    power: Some(power.to_string()),
                    from_idq: from_idq.map(|e| e.to_string()),
                    from_dual: from_dual.map(|e| e.to_string()),
                },
            });
        }
    }
    let consistent = problems.is_empty();
    Ok(RpcpOut {
        n,
        brane: BraneOut { feasible: brane.feasible, reason: brane.reason },
        period: hf.period,
        generators: hf.generators,
        q_table,
        alphrpn: AlphOut { entries: table.len(), mismatches: problems },
        pss_range: range,
        identities,
        qtc,
        power_rule,
        consistent,
    })
}
