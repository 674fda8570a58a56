//! Descriptor and plane-list files.
//!
//! Both are TOML documents with a `format_version` key. A plane list has a
//! `planes` array of 4-entry rows whose entries are integers or strings
//! holding an integer or a fraction `p/q`. Anything else is read as a
//! descriptor.

use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use octic_core::corpus::{descriptor_fixture, descriptor_fixture_names};
use octic_core::{ArrangementDescriptor, Construction, RationalPlane};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Descriptor(ArrangementDescriptor),
    Planes {
        name: Option<String>,
        planes: Vec<RationalPlane>,
    },
}

#[derive(Deserialize, Serialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PlaneFile {
    #[serde(default)]
    name: Option<String>,
    planes: Vec<Vec<Entry>>,
}

fn parse_fraction(text: &str) -> Result<(BigInt, BigInt)> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).with_context(|| format!("bad numerator in {text:?}"))?;
    let den = BigInt::from_str(den).with_context(|| format!("bad denominator in {text:?}"))?;
    if den == BigInt::from(0) {
        bail!("zero denominator in {text:?}");
    }
    Ok((num, den))
}

fn parse_plane(index: usize, row: &[Entry]) -> Result<RationalPlane> {
    let [a, b, c, d] = row else {
        bail!("plane {index} has {} coefficients, expected 4", row.len());
    };
    let mut coeffs = Vec::with_capacity(4);
    for entry in [a, b, c, d] {
        coeffs.push(match entry {
            Entry::Int(v) => (BigInt::from(*v), BigInt::from(1)),
            Entry::Text(s) => parse_fraction(s).with_context(|| format!("plane {index}"))?,
        });
    }
    let coeffs: [(BigInt, BigInt); 4] = coeffs.try_into().expect("four entries");
    RationalPlane::from_fractions(coeffs).map_err(|e| anyhow!("plane {index}: {e}"))
}

pub fn parse_document(text: &str) -> Result<Source> {
    let mut table: toml::Table = toml::from_str(text).context("not a TOML document")?;
    let version = table
        .get("format_version")
        .ok_or_else(|| anyhow!("missing format_version"))?
        .as_integer()
        .ok_or_else(|| anyhow!("format_version must be an integer"))?;
    if version != i64::from(FORMAT_VERSION) {
        bail!("unsupported format_version {version}, expected {FORMAT_VERSION}");
    }
    table.remove("format_version");
    if table.contains_key("planes") {
        let file: PlaneFile = table.try_into().context("malformed plane list")?;
        let planes = file
            .planes
            .iter()
            .enumerate()
            .map(|(i, row)| parse_plane(i, row))
            .collect::<Result<Vec<_>>>()?;
        Ok(Source::Planes { name: file.name, planes })
    } else {
        let desc: ArrangementDescriptor = table.try_into().context("malformed descriptor")?;
        Ok(Source::Descriptor(desc))
    }
}

pub fn read_file(path: &std::path::Path) -> Result<Source> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_document(&text).with_context(|| format!("in {}", path.display()))
}

/// Plane constructions first, then descriptor fixtures.
pub fn fixture(name: &str) -> Result<Source> {
    if let Ok(c) = Construction::from_str(name) {
        return Ok(Source::Planes {
            name: Some(c.name()),
            planes: c.planes()?,
        });
    }
    if let Some(d) = descriptor_fixture(name) {
        return Ok(Source::Descriptor(d));
    }
    bail!("unknown fixture {name:?}; available: {}", fixture_names().join(", "))
}

pub fn fixture_names() -> Vec<String> {
    let mut names: Vec<String> = Construction::registry().iter().map(Construction::name).collect();
    names.extend(descriptor_fixture_names());
    names
}

/// Plane list document for `planes`.
pub fn write_planes(name: Option<&str>, planes: &[RationalPlane]) -> String {
    let mut out = format!("format_version = {FORMAT_VERSION}\n");
    if let Some(name) = name {
        out.push_str(&format!("name = {name:?}\n"));
    }
    out.push_str("planes = [\n");
    for plane in planes {
        let fits: Option<Vec<i64>> = plane.coefficients().iter().map(|c| i64::try_from(c).ok()).collect();
        let row = match fits {
            Some(ints) => ints.iter().map(i64::to_string).collect::<Vec<_>>(),
            None => plane.coefficients().iter().map(|c| format!("\"{c}\"")).collect(),
        };
        out.push_str(&format!("  [{}],\n", row.join(", ")));
    }
    out.push_str("]\n");
    out
}

pub fn write_descriptor(desc: &ArrangementDescriptor) -> String {
    #[derive(Serialize)]
    struct Out<'a> {
        format_version: u32,
        #[serde(flatten)]
        descriptor: &'a ArrangementDescriptor,
    }
    toml::to_string(&Out { format_version: FORMAT_VERSION, descriptor: desc }).expect("descriptor serializes")
}
