//! Scenario files: the two branches plus optional bundle, polarization,
//! surface and decoration blocks.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use dfchow_core::charges::{CentralFibre, ComponentPair, GluedBundleData};
use dfchow_core::json::JsonInt;
use dfchow_core::neck::DecorationRequest;
use dfchow_core::pushout::{blow_up, BlownUpChow, TwistorChow, TwistorChowJson};
use dfchow_core::ring::RingElement;
use dfchow_core::surfaces::SurfaceData;
use serde::Deserialize;

/// A branch is a built-in name or an inline base ring.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum BranchSpec {
    Builtin(String),
    Inline(Box<TwistorChowJson>),
}

/// A class as `label -> coefficient`.
pub type ElementSpec = BTreeMap<String, JsonInt>;

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    #[serde(default)]
    pub branch1: ElementSpec,
    #[serde(default)]
    pub branch2: ElementSpec,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
pub struct BundleSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub rank: u32,
    #[serde(default)]
    pub c1: PairSpec,
    #[serde(default)]
    pub c2: PairSpec,
    pub trivial_on_Q: bool,
    #[serde(default)]
    pub h2_end: [u64; 2],
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfacePairSpec {
    pub first: SurfaceData,
    pub second: SurfaceData,
}

/// Hypotheses that cannot be read off Chern data; recorded, not checked.
#[derive(Clone, Debug, Default, Deserialize, serde::Serialize)]
#[serde(deny_unknown_fields)]
pub struct HypothesisFlags {
    #[serde(default)]
    pub quaternionic: Option<bool>,
    #[serde(default)]
    pub trivial_determinant: Option<bool>,
    #[serde(default)]
    pub strong_proper_position: Option<bool>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
pub struct ScenarioFile {
    #[serde(default)]
    pub name: Option<String>,
    pub branch1: BranchSpec,
    pub branch2: BranchSpec,
    #[serde(default)]
    pub bundles: Vec<BundleSpec>,
    #[serde(default)]
    pub polarization: Option<PairSpec>,
    #[serde(default)]
    pub surfaces: Vec<SurfacePairSpec>,
    #[serde(default)]
    pub decoration: Option<DecorationRequest>,
    #[serde(default)]
    pub assumption_DEF: bool,
    #[serde(default)]
    pub hypotheses: HypothesisFlags,
}

/// A loaded scenario with both branches blown up.
pub struct Scenario {
    pub name: String,
    pub file: ScenarioFile,
    pub branch1: BlownUpChow,
    pub branch2: BlownUpChow,
}

impl Scenario {
    pub fn default_p3() -> Self {
        let file = ScenarioFile {
            name: Some("P3#P3".into()),
            branch1: BranchSpec::Builtin("P3".into()),
            branch2: BranchSpec::Builtin("P3".into()),
            bundles: Vec::new(),
            polarization: None,
            surfaces: Vec::new(),
            decoration: None,
            assumption_DEF: false,
            hypotheses: HypothesisFlags::default(),
        };
        Self::from_file(file).expect("built-in scenario")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("loading scenario {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: ScenarioFile = serde_json::from_str(text)
            .map_err(|e| anyhow!("malformed scenario JSON at line {}, column {}: {e}", e.line(), e.column()))?;
        Self::from_file(file)
    }

    pub fn from_file(file: ScenarioFile) -> Result<Self> {
        let z1 = resolve_branch(&file.branch1).context("branch1")?;
        let z2 = resolve_branch(&file.branch2).context("branch2")?;
        let name = file
            .name
            .clone()
            .unwrap_or_else(|| format!("{}#{}", z1.name(), z2.name()));
        Ok(Scenario {
            name,
            branch1: blow_up(&z1)?,
            branch2: blow_up(&z2)?,
            file,
        })
    }

    pub fn central_fibre(&self) -> Result<CentralFibre> {
        Ok(CentralFibre::new(self.branch1.clone(), self.branch2.clone())?)
    }

    pub fn pair(&self, spec: &PairSpec) -> Result<ComponentPair> {
        Ok(ComponentPair::new(
            element(&self.branch1, &spec.branch1).context("branch1 class")?,
            element(&self.branch2, &spec.branch2).context("branch2 class")?,
        )?)
    }

    pub fn bundle(&self, spec: &BundleSpec) -> Result<GluedBundleData> {
        let c = self.central_fibre()?;
        Ok(c.bundle(
            spec.rank,
            self.pair(&spec.c1).context("c1")?,
            self.pair(&spec.c2).context("c2")?,
            spec.trivial_on_Q,
            (spec.h2_end[0], spec.h2_end[1]),
        )?)
    }
}

fn resolve_branch(spec: &BranchSpec) -> Result<TwistorChow> {
    match spec {
        BranchSpec::Builtin(name) => {
            TwistorChow::builtin(name).ok_or_else(|| anyhow!("unknown built-in base {name:?} (expected P3 or flag)"))
        }
        BranchSpec::Inline(json) => Ok(TwistorChow::from_json(json)?),
    }
}

pub fn element(branch: &BlownUpChow, spec: &ElementSpec) -> Result<RingElement> {
    let terms: Vec<(&str, _)> = spec.iter().map(|(k, v)| (k.as_str(), v.0.clone())).collect();
    Ok(RingElement::from_labels(branch.ring(), &terms)?)
}

pub fn load_pair_spec(path: &Path) -> Result<PairSpec> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| {
        anyhow!(
            "malformed pair JSON in {} at line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        )
    })
}

pub fn load_decoration(path: &Path) -> Result<DecorationRequest> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| {
        anyhow!(
            "malformed decoration JSON in {} at line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        )
    })
}

/// Parses `in` / `out`.
pub fn parse_incidence(s: &str) -> Result<bool> {
    match s {
        "in" => Ok(true),
        "out" => Ok(false),
        other => bail!("expected `in` or `out`, found {other:?}"),
    }
}
