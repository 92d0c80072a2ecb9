//! Input file formats and command-line shorthands.
//!
//! Every JSON document carries `"schema": 1`; a missing field is read as 1.

use std::path::Path;
use std::sync::Arc;

use floerq_core::charclass::BundleDescriptor;
use floerq_core::flow::{Coefficients, FlowCategorySpec, FlowCount, FlowGenerator, RingSpectrum};
use floerq_core::ohpoz::{CleanComponentData, CleanScenario, Shape};
use floerq_core::ring::{Generator, RingElement, RingPresentation};
use floerq_core::steenrod::TruncationGate;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA: u32 = 1;

fn schema_default() -> u32 {
    SCHEMA
}

fn yes() -> bool {
    true
}

fn check_schema(found: u32, what: &str) -> Result<(), CliError> {
    if found == SCHEMA {
        Ok(())
    } else {
        Err(CliError::Input(format!("{what}: unsupported schema {found}, expected {SCHEMA}")))
    }
}

/// Reads and decodes a JSON file; errors name the file, line and column.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_json(&text, &path.display().to_string())
}

pub fn parse_json<T: DeserializeOwned>(text: &str, origin: &str) -> Result<T, CliError> {
    serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("{origin}: {e}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub name: String,
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingJson {
    #[serde(default = "schema_default")]
    pub schema: u32,
    pub generators: Vec<GeneratorJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_degree: Option<u32>,
}

impl RingJson {
    pub fn to_presentation(&self) -> Result<Arc<RingPresentation>, CliError> {
        check_schema(self.schema, "ring")?;
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let gen = Generator::new(g.name.clone(), g.degree);
                match g.truncation {
                    Some(e) => gen.truncated(e),
                    None => gen,
                }
            })
            .collect();
        Ok(Arc::new(RingPresentation::new(gens, self.top_degree)?))
    }
}

/// A ring given inline or by shorthand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingRef {
    Shorthand(String),
    Inline(RingJson),
}

impl RingRef {
    pub fn resolve(&self) -> Result<Arc<RingPresentation>, CliError> {
        match self {
            RingRef::Shorthand(s) => ring_from_arg(s),
            RingRef::Inline(r) => r.to_presentation(),
        }
    }
}

/// `rp:n`, `cp:n`, `poly:m`, `sw:m`, or a path to a ring JSON file.
pub fn ring_from_arg(arg: &str) -> Result<Arc<RingPresentation>, CliError> {
    if let Some((kind, size)) = arg.split_once(':') {
        let size: u32 =
            size.parse().map_err(|_| CliError::Input(format!("ring `{arg}`: `{size}` is not a size")))?;
        return match kind {
            "rp" => Ok(RingPresentation::rp(size)),
            "cp" => Ok(RingPresentation::cp(size)),
            "poly" => Ok(RingPresentation::poly(size as usize)),
            "sw" => Ok(RingPresentation::stiefel_whitney(size as usize)),
            _ => Err(CliError::Input(format!("ring `{arg}`: unknown shorthand `{kind}`"))),
        };
    }
    let ring: RingJson = read_json(Path::new(arg))?;
    ring.to_presentation()
}

/// `f2`, `fp:p` or `z`.
pub fn coefficients_from_arg(arg: &str) -> Result<Coefficients, CliError> {
    match arg {
        "f2" | "F2" => Ok(Coefficients::Fp(2)),
        "z" | "Z" => Ok(Coefficients::Integers),
        _ => {
            let p = arg
                .strip_prefix("fp:")
                .or_else(|| arg.strip_prefix("Fp:"))
                .and_then(|p| p.parse::<u64>().ok())
                .filter(|&p| is_prime(p))
                .ok_or_else(|| CliError::Input(format!("coefficients `{arg}`: expected f2, fp:<prime> or z")))?;
            Ok(Coefficients::Fp(p))
        }
    }
}

pub fn coefficients_label(c: Coefficients) -> String {
    match c {
        Coefficients::Fp(2) => "f2".into(),
        Coefficients::Fp(p) => format!("fp:{p}"),
        Coefficients::Integers => "z".into(),
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `MU`, `tauMU:r`, `HZ` or `HFp:p`.
pub fn spectrum_from_arg(arg: &str) -> Result<RingSpectrum, CliError> {
    let bad = || CliError::Input(format!("ring spectrum `{arg}`: expected MU, tauMU:<r>, HZ or HFp:<p>"));
    match arg {
        "MU" => Ok(RingSpectrum::MU),
        "HZ" => Ok(RingSpectrum::HZ),
        "HF2" => Ok(RingSpectrum::HFp(2)),
        _ => {
            if let Some(r) = arg.strip_prefix("tauMU:") {
                let r: i64 = r.parse().map_err(|_| bad())?;
                if r < 0 {
                    return Err(bad());
                }
                Ok(RingSpectrum::TauMU(r))
            } else if let Some(p) = arg.strip_prefix("HFp:") {
                let p: u64 = p.parse().map_err(|_| bad())?;
                if !is_prime(p) {
                    return Err(bad());
                }
                Ok(RingSpectrum::HFp(p))
            } else {
                Err(bad())
            }
        }
    }
}

pub fn spectrum_label(r: RingSpectrum) -> String {
    match r {
        RingSpectrum::MU => "MU".into(),
        RingSpectrum::TauMU(r) => format!("tauMU:{r}"),
        RingSpectrum::HZ => "HZ".into(),
        RingSpectrum::HFp(p) => format!("HFp:{p}"),
    }
}

pub fn gate_from_arg(arg: &str) -> Result<TruncationGate, CliError> {
    Ok(match spectrum_from_arg(arg)? {
        RingSpectrum::MU => TruncationGate::MU,
        RingSpectrum::TauMU(r) => TruncationGate::TauMU(r as u32),
        RingSpectrum::HZ => TruncationGate::HZ,
        RingSpectrum::HFp(p) => TruncationGate::HFp(p as u32),
    })
}

pub fn shape_from_arg(arg: &str) -> Result<Shape, CliError> {
    match arg {
        "conn" | "connected" => Ok(Shape::Connected),
        "pt+conn" => Ok(Shape::PointPlusConnected),
        _ => Err(CliError::Input(format!("shape `{arg}`: expected conn or pt+conn"))),
    }
}

pub fn shape_label(s: Shape) -> &'static str {
    match s {
        Shape::Connected => "conn",
        Shape::PointPlusConnected => "pt+conn",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlowGeneratorJson {
    pub id: String,
    pub mu: i64,
    pub rank: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlowCountJson {
    pub from: String,
    pub to: String,
    pub count: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlowCategoryJson {
    #[serde(default = "schema_default")]
    pub schema: u32,
    #[serde(rename = "N")]
    pub truncation: i64,
    pub generators: Vec<FlowGeneratorJson>,
    #[serde(default)]
    pub counts: Vec<FlowCountJson>,
}

impl FlowCategoryJson {
    pub fn to_spec(&self) -> Result<FlowCategorySpec, CliError> {
        check_schema(self.schema, "flow category")?;
        let gens = self.generators.iter().map(|g| FlowGenerator::new(g.id.clone(), g.mu, g.rank)).collect();
        let counts = self.counts.iter().map(|c| FlowCount::new(c.from.clone(), c.to.clone(), c.count)).collect();
        Ok(FlowCategorySpec::new(self.truncation, gens, counts)?)
    }

    pub fn from_spec(spec: &FlowCategorySpec) -> Self {
        FlowCategoryJson {
            schema: SCHEMA,
            truncation: spec.truncation(),
            generators: spec
                .generators()
                .iter()
                .map(|g| FlowGeneratorJson { id: g.id.clone(), mu: g.mu, rank: g.rank })
                .collect(),
            counts: spec.counts().map(|c| FlowCountJson { from: c.from, to: c.to, count: c.count }).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentJson {
    pub name: String,
    pub betti: Vec<u64>,
    pub twist: i64,
    #[serde(default = "yes")]
    pub connected: bool,
    #[serde(default = "yes")]
    pub closed_manifold: bool,
}

/// `"oh-rpn"` (one class per residue) or explicit dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TargetJson {
    Named(String),
    Dimensions(Vec<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioJson {
    #[serde(default = "schema_default")]
    pub schema: u32,
    pub n: u32,
    #[serde(rename = "N_mu")]
    pub period: u32,
    pub target: TargetJson,
    pub components: Vec<ComponentJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<u32>,
}

impl ScenarioJson {
    pub fn to_scenario(&self) -> Result<CleanScenario, CliError> {
        check_schema(self.schema, "scenario")?;
        let target = match &self.target {
            TargetJson::Named(name) if name == "oh-rpn" => vec![1; self.period as usize],
            TargetJson::Named(name) => {
                return Err(CliError::Input(format!("scenario: unknown target `{name}`, expected oh-rpn")))
            }
            TargetJson::Dimensions(d) => d.clone(),
        };
        let components = self
            .components
            .iter()
            .map(|c| CleanComponentData {
                name: c.name.clone(),
                betti: c.betti.clone(),
                twist: c.twist,
                connected: c.connected,
                closed_manifold: c.closed_manifold,
            })
            .collect();
        Ok(CleanScenario::new(self.n, self.period, target, components, self.window.unwrap_or(3))?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootJson {
    pub class: String,
    #[serde(default = "one")]
    pub multiplicity: u32,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum BundleSpecJson {
    Split {
        #[serde(default)]
        roots: Vec<RootJson>,
        #[serde(default)]
        trivial: u32,
    },
    Formal {
        total: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        known_through: Option<u32>,
    },
    Virtual {
        plus: Box<BundleSpecJson>,
        minus: Box<BundleSpecJson>,
    },
}

impl BundleSpecJson {
    pub fn to_descriptor(&self, ring: &Arc<RingPresentation>) -> Result<BundleDescriptor, CliError> {
        Ok(match self {
            BundleSpecJson::Split { roots, trivial } => BundleDescriptor::Split {
                roots: roots
                    .iter()
                    .map(|r| Ok((RingElement::parse(ring, &r.class)?, r.multiplicity)))
                    .collect::<Result<_, CliError>>()?,
                trivial: *trivial,
            },
            BundleSpecJson::Formal { total, known_through } => {
                BundleDescriptor::Formal { total: RingElement::parse(ring, total)?, known_through: *known_through }
            }
            BundleSpecJson::Virtual { plus, minus } => BundleDescriptor::Virtual {
                plus: Box::new(plus.to_descriptor(ring)?),
                minus: Box::new(minus.to_descriptor(ring)?),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleJson {
    #[serde(default = "schema_default")]
    pub schema: u32,
    pub ring: RingRef,
    pub bundle: BundleSpecJson,
}

impl BundleJson {
    pub fn resolve(&self) -> Result<(Arc<RingPresentation>, BundleDescriptor), CliError> {
        check_schema(self.schema, "bundle")?;
        let ring = self.ring.resolve()?;
        let descriptor = self.bundle.to_descriptor(&ring)?;
        descriptor.validate()?;
        Ok((ring, descriptor))
    }
}
