use std::path::Path;

use anyhow::{bail, Context, Result};
use minimal4::{make_form, CohomologyAlgebra, IntersectionForm};
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FormFile {
    name: Option<String>,
    matrix: Vec<Vec<i64>>,
}

/// Where the rank and signature come from.
#[derive(Clone, Debug)]
pub struct Source {
    pub b2: usize,
    /// `(b₂⁺, b₂⁻)`, when given or derived from a form.
    pub split: Option<(usize, usize)>,
    /// Display name; empty when only numbers were given.
    pub label: String,
}

impl Source {
    pub fn from_b2(b2: usize, split: Option<(usize, usize)>) -> Result<Self> {
        if let Some((p, q)) = split {
            if p + q != b2 {
                bail!("split {p},{q} does not add up to b2 = {b2}");
            }
        }
        Ok(Source { b2, split, label: String::new() })
    }

    pub fn from_form(form: &IntersectionForm) -> Self {
        Source {
            b2: form.rank(),
            split: Some((form.b2plus(), form.b2minus())),
            label: form.name().map_or_else(|| format!("form of rank {}", form.rank()), str::to_string),
        }
    }

    /// Split used to build models; defaults to a definite form.
    pub fn model_split(&self) -> (usize, usize) {
        self.split.unwrap_or((self.b2, 0))
    }

    pub fn algebra(&self) -> CohomologyAlgebra {
        let (p, q) = self.model_split();
        CohomologyAlgebra::four_manifold(p, q)
    }
}

/// `--b2`/`--split` or `--form`, exactly one of them.
pub fn resolve(b2: Option<usize>, split: Option<&str>, form: Option<&str>) -> Result<Source> {
    match (b2, split, form) {
        (_, _, Some(_)) if b2.is_some() || split.is_some() => bail!("--form cannot be combined with --b2 or --split"),
        (_, _, Some(spec)) => Ok(Source::from_form(&load_form(spec)?)),
        (Some(b2), split, None) => Source::from_b2(b2, split.map(parse_pair).transpose()?),
        (None, Some(split), None) => {
            let (p, q) = parse_pair(split)?;
            Source::from_b2(p + q, Some((p, q)))
        }
        (None, None, None) => bail!("give the manifold with --b2 N [--split P,Q] or --form PATH"),
    }
}

pub fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let list = parse_list(s)?;
    match list.as_slice() {
        [p, q] => Ok((*p as usize, *q as usize)),
        _ => bail!("expected two comma-separated integers, got `{s}`"),
    }
}

pub fn parse_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().with_context(|| format!("`{t}` is not a nonnegative integer")))
        .collect()
}

/// A form given as a builtin name or a JSON file path.
///
/// Builtins: `e8`, `hyperbolic`, `diag:a,b,...` (diagonal entries) and
/// `sum:P,Q` (P copies of +1, Q copies of −1).
pub fn load_form(spec: &str) -> Result<IntersectionForm> {
    if spec.eq_ignore_ascii_case("e8") {
        return Ok(IntersectionForm::e8());
    }
    if spec.eq_ignore_ascii_case("hyperbolic") || spec == "H" {
        return Ok(IntersectionForm::hyperbolic());
    }
    if let Some(entries) = spec.strip_prefix("diag:") {
        let values = entries
            .split(',')
            .map(|t| t.trim().parse::<i64>().with_context(|| format!("`{t}` is not an integer")))
            .collect::<Result<Vec<_>>>()?;
        let n = values.len();
        let matrix = (0..n).map(|i| (0..n).map(|j| if i == j { values[i] } else { 0 }).collect()).collect();
        return Ok(make_form(matrix)?.with_name(format!("diag({entries})")));
    }
    if let Some(pair) = spec.strip_prefix("sum:") {
        let (p, q) = parse_pair(pair)?;
        return Ok(IntersectionForm::diagonal(p, q).with_name(format!("#{p} CP2 #{q} CP2bar")));
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path).with_context(|| format!("reading form file {}", path.display()))?;
    let file: FormFile =
        serde_json::from_str(&text).with_context(|| format!("parsing form file {}", path.display()))?;
    let name =
        file.name.unwrap_or_else(|| path.file_stem().map_or_else(|| spec.to_string(), |s| s.to_string_lossy().into()));
    Ok(make_form(file.matrix).with_context(|| format!("invalid form in {}", path.display()))?.with_name(name))
}
