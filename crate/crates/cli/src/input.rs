//! Input parsing: map-class specs from inline arguments, files, or stdin.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use coincide_core::{BundleSpace, FiberMapClass, MapPair};

use crate::InputArgs;

/// One map class as written by the user.
#[derive(Debug, Deserialize)]
pub struct MapSpec {
    pub domain: String,
    pub codomain: String,
    pub q: i64,
    pub r: i64,
}

impl MapSpec {
    /// Parse the whitespace-separated line form `DOMAIN CODOMAIN q r`.
    fn from_line(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [domain, codomain, q, r] = fields.as_slice() else {
            bail!(
                "expected four fields `DOMAIN CODOMAIN q r` (e.g. `T T 3 5`), got {:?}",
                line
            );
        };
        Ok(MapSpec {
            domain: domain.to_string(),
            codomain: codomain.to_string(),
            q: q.parse().with_context(|| format!("fibre degree {q:?}"))?,
            r: r.parse().with_context(|| format!("section number {r:?}"))?,
        })
    }

    fn into_class(self) -> Result<FiberMapClass> {
        let domain: BundleSpace = self
            .domain
            .parse()
            .map_err(|message: String| anyhow::anyhow!(message))?;
        let codomain: BundleSpace = self
            .codomain
            .parse()
            .map_err(|message: String| anyhow::anyhow!(message))?;
        if codomain == BundleSpace::Klein && !(0..=1).contains(&self.r) {
            eprintln!(
                "note: section number {} over a non-orientable codomain is the same \
                 class as {}",
                self.r,
                self.r.rem_euclid(2)
            );
        }
        FiberMapClass::new(domain, codomain, self.q, self.r)
            .map_err(|err| anyhow::anyhow!("{err}"))
    }
}

/// Parse one source: a literal "-" reads stdin, an existing path reads that
/// file, anything else must parse as an inline spec line.
fn parse_source(token: &str, out: &mut Vec<MapSpec>) -> Result<()> {
    if token == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        return parse_text(&text, out).context("parsing stdin");
    }
    if Path::new(token).exists() {
        let text = fs::read_to_string(token).with_context(|| format!("reading {token}"))?;
        return parse_text(&text, out).with_context(|| format!("parsing {token}"));
    }
    out.push(
        MapSpec::from_line(token)
            .with_context(|| format!("{token:?} is neither a file nor an inline spec"))?,
    );
    Ok(())
}

/// Parse file/stdin contents: a JSON array or object when the text starts
/// with a bracket, otherwise one spec per line with `#` comments.
fn parse_text(text: &str, out: &mut Vec<MapSpec>) -> Result<()> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let specs: Vec<MapSpec> = serde_json::from_str(text).context("JSON array of specs")?;
        out.extend(specs);
        return Ok(());
    }
    if trimmed.starts_with('{') {
        out.push(serde_json::from_str(text).context("JSON spec object")?);
        return Ok(());
    }
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(MapSpec::from_line(line)?);
    }
    Ok(())
}

/// Resolve the shared input arguments to a list of map pairs.
pub fn collect_pairs(args: &InputArgs) -> Result<Vec<MapPair>> {
    let mut specs = Vec::new();
    if args.specs.is_empty() {
        parse_source("-", &mut specs)?;
    } else {
        for token in &args.specs {
            parse_source(token, &mut specs)?;
        }
    }
    if specs.is_empty() {
        bail!("no map specs given");
    }
    let classes: Vec<FiberMapClass> = specs
        .into_iter()
        .map(MapSpec::into_class)
        .collect::<Result<_>>()?;

    if args.root {
        return Ok(classes.into_iter().map(MapPair::root_pair).collect());
    }
    if classes.len() % 2 != 0 {
        bail!(
            "got {} map spec(s); without --root they are consumed in pairs",
            classes.len()
        );
    }
    classes
        .chunks(2)
        .map(|pair| MapPair::new(pair[0], pair[1]).map_err(|err| anyhow::anyhow!("{err}")))
        .collect()
}
