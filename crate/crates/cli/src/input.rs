//! Resolves `--catalog`/`--file`, `--axes` and `--law` into core objects.

use std::collections::BTreeMap;
use std::path::PathBuf;

use axial_core::algfile::{self, AlgebraFile};
use axial_core::catalog::{self, AxisSet};
use axial_core::extension::Cocycle;
use axial_core::{Algebra, BilinearForm, Element, Error, FieldTag, FusionLaw, Result, Scalar};
use clap::Args;

#[derive(Args, Clone, Debug)]
pub struct Source {
    /// Catalog entry name (see `axial catalog`)
    #[arg(long, conflicts_with = "file")]
    pub catalog: Option<String>,
    /// Catalog parameter, repeatable
    #[arg(long = "param", value_name = "KEY=VALUE", requires = "catalog")]
    pub params: Vec<String>,
    /// Algebra file
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// Everything a command may need about its input algebra.
pub struct Loaded {
    pub algebra: Algebra,
    pub elements: Vec<(String, Element)>,
    pub axis_sets: Vec<AxisSet>,
    pub laws: Vec<(String, FusionLaw)>,
    pub cocycles: Vec<(String, Cocycle)>,
    pub frobenius: Option<BilinearForm>,
    pub facts: Vec<(String, String)>,
}

pub fn parse_params(raw: &[String]) -> Result<BTreeMap<String, Scalar>> {
    raw.iter()
        .map(|kv| {
            let (k, v) =
                kv.split_once('=').ok_or_else(|| Error::InvalidParameter(format!("expected KEY=VALUE, got `{kv}`")))?;
            Ok((k.trim().to_string(), Scalar::parse(v.trim(), FieldTag::Rationals)?))
        })
        .collect()
}

impl Source {
    pub fn load(&self) -> Result<Loaded> {
        match (&self.catalog, &self.file) {
            (Some(name), None) => {
                let e = catalog::build(name, &parse_params(&self.params)?)?;
                let file = AlgebraFile::from(&e);
                Ok(Loaded {
                    algebra: file.algebra,
                    elements: file.elements,
                    axis_sets: file.axis_sets,
                    laws: file.laws,
                    cocycles: file.cocycles,
                    frobenius: e.frobenius,
                    facts: e.facts,
                })
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
                let f = algfile::parse(&text, &path.display().to_string())?;
                Ok(Loaded {
                    algebra: f.algebra,
                    elements: f.elements,
                    axis_sets: f.axis_sets,
                    laws: f.laws,
                    cocycles: f.cocycles,
                    frobenius: None,
                    facts: Vec::new(),
                })
            }
            _ => Err(Error::Precondition("give exactly one of --catalog or --file".into())),
        }
    }
}

impl Loaded {
    /// An element name, or a basis label.
    pub fn element(&self, name: &str) -> Result<Element> {
        if let Some((_, e)) = self.elements.iter().find(|(n, _)| n == name) {
            return Ok(e.clone());
        }
        self.algebra
            .index_of(name)
            .map(|i| self.algebra.basis_element(i))
            .ok_or_else(|| Error::UnknownEntry(format!("no element or basis label `{name}`")))
    }

    /// `--axes` is an axis set name or a comma-separated element list; returns the set's law name too.
    pub fn axes(&self, spec: Option<&str>) -> Result<(Vec<Element>, Option<String>)> {
        let spec = match spec {
            Some(s) => s,
            None => match self.axis_sets.as_slice() {
                [only] => return Ok((only.axes.clone(), Some(only.law.clone()))),
                _ => return Err(Error::Precondition("--axes is required (several axis sets available)".into())),
            },
        };
        if let Some(set) = self.axis_sets.iter().find(|s| s.name == spec) {
            return Ok((set.axes.clone(), Some(set.law.clone())));
        }
        let axes = spec.split(',').map(|n| self.element(n.trim())).collect::<Result<Vec<_>>>()?;
        Ok((axes, None))
    }

    /// `--law` by name, else the axis set's own law.
    pub fn law(&self, name: Option<&str>, from_set: Option<&str>) -> Result<(String, FusionLaw)> {
        let name = name.or(from_set).ok_or_else(|| Error::Precondition("--law is required".into()))?;
        self.laws
            .iter()
            .find(|(n, _)| n == name)
            .cloned()
            .ok_or_else(|| Error::UnknownEntry(format!("no fusion law `{name}`")))
    }

    pub fn cocycle(&self, name: Option<&str>) -> Result<(String, Cocycle)> {
        let found = match name {
            Some(n) => self.cocycles.iter().find(|(m, _)| m == n),
            None if self.cocycles.len() == 1 => self.cocycles.first(),
            None => return Err(Error::Precondition("--cocycle is required".into())),
        };
        found.cloned().ok_or_else(|| Error::UnknownEntry(format!("no cocycle `{}`", name.unwrap_or("?"))))
    }

    pub fn fact(&self, key: &str) -> Option<&str> {
        self.facts.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}
