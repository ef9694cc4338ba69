//! The constraint mini-language and per-vertex constraint profiles.
//!
//! Grammar, one directive per line (`;` also separates directives):
//!
//! ```text
//! directive := target ":" form
//! target    := "all" | "vertex" <id>
//! form      := "mod" <N> "=" <r>      residue class r mod N, 0 <= r < N
//!            | "half"                 the single value d_v / 2
//!            | "set" "{" [<int> ("," <int>)*] "}"
//!            | "any"                  every integer
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Later directives
//! override earlier ones for the vertices they target; vertices no
//! directive reaches default to `any`. `half` resolves to the empty set at
//! odd-degree vertices.

use crate::admissible::AdmissibleSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A constraint form before it is bound to a vertex degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetForm {
    Residue { r: u64, modulus: u64 },
    Half,
    Set(Vec<i64>),
    Any,
}

impl SetForm {
    fn resolve(&self, degree: usize) -> AdmissibleSet {
        match self {
            SetForm::Residue { r, modulus } => {
                AdmissibleSet::residue(*r, *modulus).expect("validated at parse time")
            }
            SetForm::Half if degree % 2 == 0 => AdmissibleSet::singleton(degree as i64 / 2),
            SetForm::Half => AdmissibleSet::empty(),
            SetForm::Set(items) => AdmissibleSet::finite(items.iter().copied()),
            SetForm::Any => AdmissibleSet::all(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    All,
    Vertex(usize),
}

/// Parsed, graph-independent constraint directives.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConstraintSpec {
    directives: Vec<(Target, SetForm)>,
}

impl ConstraintSpec {
    pub fn uniform(form: SetForm) -> Self {
        ConstraintSpec {
            directives: vec![(Target::All, form)],
        }
    }

    pub fn directives(&self) -> &[(Target, SetForm)] {
        &self.directives
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut directives = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            for piece in raw_line.split(';') {
                let piece = piece.trim();
                if piece.is_empty() || piece.starts_with('#') {
                    continue;
                }
                directives.push(parse_directive(line_no, piece)?);
            }
        }
        Ok(ConstraintSpec { directives })
    }

    /// Binds the directives to `g`'s vertices and degrees.
    pub fn resolve(&self, g: &Graph) -> Result<ConstraintProfile> {
        let n = g.vertex_count();
        let mut forms: Vec<&SetForm> = vec![&SetForm::Any; n];
        for (target, form) in &self.directives {
            match *target {
                Target::All => forms.iter_mut().for_each(|f| *f = form),
                Target::Vertex(v) if v < n => forms[v] = form,
                Target::Vertex(v) => {
                    return Err(Error::argument(format!(
                        "constraint names vertex {v} but the graph has {n} vertices"
                    )))
                }
            }
        }
        let sets = forms
            .iter()
            .enumerate()
            .map(|(v, form)| form.resolve(g.degree(v)))
            .collect();
        Ok(ConstraintProfile { sets })
    }
}

fn parse_directive(line: usize, text: &str) -> Result<(Target, SetForm)> {
    let (target, form) = text
        .split_once(':')
        .ok_or_else(|| Error::parse(line, format!("expected `target: form`, got `{text}`")))?;
    let target = target.trim();
    let target = if target == "all" {
        Target::All
    } else if let Some(id) = target.strip_prefix("vertex") {
        let id = id.trim();
        Target::Vertex(
            id.parse()
                .map_err(|_| Error::parse(line, format!("`{id}` is not a vertex id")))?,
        )
    } else {
        return Err(Error::parse(
            line,
            format!("unknown target `{target}`, expected `all` or `vertex <id>`"),
        ));
    };
    Ok((target, parse_form(line, form.trim())?))
}

fn parse_form(line: usize, text: &str) -> Result<SetForm> {
    if text == "half" {
        return Ok(SetForm::Half);
    }
    if text == "any" {
        return Ok(SetForm::Any);
    }
    if let Some(rest) = text.strip_prefix("mod") {
        let (m, r) = rest
            .split_once('=')
            .ok_or_else(|| Error::parse(line, format!("expected `mod N = r`, got `{text}`")))?;
        let num = |s: &str| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::parse(line, format!("`{}` is not a non-negative integer", s.trim())))
        };
        let (modulus, r) = (num(m)?, num(r)?);
        if modulus == 0 || r >= modulus {
            return Err(Error::parse(
                line,
                format!("residue needs N >= 1 and 0 <= r < N, got `{text}`"),
            ));
        }
        return Ok(SetForm::Residue { r, modulus });
    }
    if let Some(rest) = text.strip_prefix("set") {
        let inner = rest
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::parse(line, format!("expected `set {{a,b,...}}`, got `{text}`")))?;
        let items = inner
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<i64>()
                    .map_err(|_| Error::parse(line, format!("`{s}` is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(SetForm::Set(items));
    }
    Err(Error::parse(line, format!("unknown constraint form `{text}`")))
}

/// One admissible set per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintProfile {
    sets: Vec<AdmissibleSet>,
}

impl ConstraintProfile {
    pub fn new(sets: Vec<AdmissibleSet>) -> Self {
        ConstraintProfile { sets }
    }

    pub fn uniform(n: usize, set: AdmissibleSet) -> Self {
        ConstraintProfile {
            sets: vec![set; n],
        }
    }

    /// `{d_v / 2}` everywhere; empty at odd-degree vertices.
    pub fn eulerian(g: &Graph) -> Self {
        ConstraintSpec::uniform(SetForm::Half)
            .resolve(g)
            .expect("uniform forms always resolve")
    }

    /// Multiples of `modulus` everywhere.
    pub fn divisible(n: usize, modulus: u64) -> Result<Self> {
        Ok(Self::uniform(n, AdmissibleSet::multiples_of(modulus)?))
    }

    /// `{d_v / 2}` on the first part, even out-degree on the second.
    pub fn mixed(g: &Graph, part: &crate::graph::VertexPartition) -> Self {
        let even = AdmissibleSet::multiples_of(2).expect("2 is a valid modulus");
        let sets = (0..g.vertex_count())
            .map(|v| {
                if part.contains_part1(v) {
                    SetForm::Half.resolve(g.degree(v))
                } else {
                    even.clone()
                }
            })
            .collect();
        ConstraintProfile { sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn get(&self, v: usize) -> &AdmissibleSet {
        &self.sets[v]
    }

    pub fn sets(&self) -> &[AdmissibleSet] {
        &self.sets
    }

    pub(crate) fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.sets.len() != g.vertex_count() {
            return Err(Error::argument(format!(
                "profile has {} entries but the graph has {} vertices",
                self.sets.len(),
                g.vertex_count()
            )));
        }
        Ok(())
    }

    /// Membership masks over `0..=d_v` for every vertex.
    pub fn masks(&self, g: &Graph) -> Vec<Vec<bool>> {
        self.sets
            .iter()
            .enumerate()
            .map(|(v, s)| s.mask(g.degree(v)))
            .collect()
    }

    /// The profile `{d_v - P_v}`.
    pub fn reversed(&self, g: &Graph) -> Self {
        ConstraintProfile {
            sets: self
                .sets
                .iter()
                .enumerate()
                .map(|(v, s)| s.reflect(g.degree(v)))
                .collect(),
        }
    }
}
