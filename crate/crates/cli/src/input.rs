//! Turning command-line input into complexes and model specs.

use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use loglin_core::{families, ModelSpec, SimplicialComplex};
use serde::{Deserialize, Serialize};

use crate::cli::{InputArgs, LevelArgs};

/// Shared model schema for files and `--spec`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelInput {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
    #[serde(default)]
    pub levels: Option<Vec<u64>>,
}

/// A complex plus any levels that came with it.
pub struct Loaded {
    pub complex: SimplicialComplex,
    pub levels: Option<Vec<u64>>,
}

fn parse_model(text: &str, origin: &str) -> Result<Loaded> {
    let raw: ModelInput =
        serde_json::from_str(text).with_context(|| format!("invalid model JSON in {origin}"))?;
    let complex = SimplicialComplex::from_facets(raw.m, &raw.facets)?;
    Ok(Loaded {
        complex,
        levels: raw.levels,
    })
}

pub fn load(args: &InputArgs) -> Result<Loaded> {
    let given = [
        args.family.is_some(),
        args.facets.is_some(),
        args.spec_json.is_some(),
        args.input.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if given != 1 {
        bail!("give exactly one of --family, --facets, --spec, --input (got {given})");
    }
    let need_m = || args.m.ok_or_else(|| anyhow!("--m is required with --family and --facets"));
    if let Some(name) = &args.family {
        let m = need_m()?;
        let complex = families::by_name(name, m).ok_or_else(|| {
            anyhow!("unknown family {name:?}; expected one of {}", families::NAMES.join(", "))
        })??;
        return Ok(Loaded { complex, levels: None });
    }
    if let Some(text) = &args.facets {
        let m = need_m()?;
        let facets: Vec<Vec<usize>> =
            serde_json::from_str(text).context("--facets must be a JSON list of label lists")?;
        let complex = SimplicialComplex::from_facets(m, &facets)?;
        return Ok(Loaded { complex, levels: None });
    }
    if args.m.is_some() {
        bail!("--m only applies to --family and --facets; the model JSON carries its own m");
    }
    if let Some(text) = &args.spec_json {
        return parse_model(text, "--spec");
    }
    let path = args.input.as_ref().expect("one source is present");
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_model(&text, &path.display().to_string())
}

/// Levels from flags, falling back to the model JSON.
pub fn model_spec(loaded: Loaded, levels: &LevelArgs) -> Result<ModelSpec> {
    let Loaded { complex, levels: from_file } = loaded;
    let spec = match (levels.r, &levels.levels, from_file) {
        (Some(r), _, _) => ModelSpec::constant(complex, r)?,
        (None, Some(list), _) => ModelSpec::new(complex, list.clone())?,
        (None, None, Some(list)) => ModelSpec::new(complex, list)?,
        (None, None, None) => bail!("no levels given; use --r, --levels or a \"levels\" field"),
    };
    Ok(spec)
}
