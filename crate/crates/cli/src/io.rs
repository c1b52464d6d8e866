//! Structure files: JSON with string coefficients and sparse 1-based entry lists.

use std::collections::BTreeSet;
use std::path::Path;

use anyhow::{bail, Context};
use bialg::tensor::{basis, basis_index};
use bialg::{Bundle, BundleKind, ComultTensor, Field, MultTensor, Scalar};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Fp {
        #[serde(rename = "Fp")]
        p: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UnitSpec {
    Index(usize),
    Vector(Vec<String>),
}

/// (i, j, k, coefficient), 1-based.
pub type Entry = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub name: String,
    pub dim: usize,
    pub field: FieldSpec,
    pub unit: UnitSpec,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult2: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult2: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit2: Option<Vec<String>>,
}

impl FieldSpec {
    pub fn field(&self) -> bialg::Result<Field> {
        match self {
            FieldSpec::Named(s) => crate::parse_field(s).map_err(bialg::Error::Parse),
            FieldSpec::Fp { p } => Field::fp(*p),
        }
    }

    pub fn of(f: Field) -> Self {
        match f {
            Field::Q => FieldSpec::Named("Q".into()),
            Field::Fp(p) => FieldSpec::Fp { p },
        }
    }
}

fn entries_to_dense(
    n: usize,
    field: Field,
    es: &[Entry],
    what: &str,
) -> anyhow::Result<Vec<Scalar>> {
    let mut data = vec![field.zero(); n * n * n];
    let mut seen = BTreeSet::new();
    for (i, j, k, c) in es {
        for x in [i, j, k] {
            if *x == 0 || *x > n {
                bail!("{what}: index {x} outside 1..={n}");
            }
        }
        if !seen.insert((*i, *j, *k)) {
            bail!("{what}: duplicate entry [{i},{j},{k}]");
        }
        data[((i - 1) * n + (j - 1)) * n + (k - 1)] = field
            .parse(c)
            .with_context(|| format!("{what} [{i},{j},{k}]"))?;
    }
    Ok(data)
}

fn dense_to_entries(n: usize, data: &[Scalar]) -> Vec<Entry> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = &data[(i * n + j) * n + k];
                if !v.is_zero() {
                    out.push((i + 1, j + 1, k + 1, v.to_string()));
                }
            }
        }
    }
    out
}

fn vector(n: usize, field: Field, xs: &[String], what: &str) -> anyhow::Result<Vec<Scalar>> {
    if xs.len() != n {
        return Err(bialg::Error::Dim {
            expected: n,
            got: xs.len(),
        })
        .with_context(|| what.to_string());
    }
    xs.iter()
        .map(|s| field.parse(s).with_context(|| what.to_string()))
        .collect()
}

impl StructureFile {
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        serde_json::from_str(text).map_err(|e| bialg::Error::Parse(e.to_string()).into())
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    /// Builds the bundle; `field` overrides the declared field (entries are reduced).
    pub fn to_bundle(&self, field: Option<Field>) -> anyhow::Result<Bundle> {
        let declared = self.field.field()?;
        let n = self.dim;
        if n == 0 || n > bialg::tensor::MAX_DIM {
            return Err(bialg::Error::DimLimit(n, bialg::tensor::MAX_DIM).into());
        }
        let theta = self
            .theta
            .as_deref()
            .map(|t| declared.parse(t))
            .transpose()
            .context("theta")?;
        let kind = BundleKind::from_tag(&self.kind, theta, declared)?;
        if self.theta.is_some() && kind.theta().is_none() {
            bail!(bialg::Error::Malformed(format!(
                "theta given for kind {}",
                self.kind
            )));
        }
        let unit = match &self.unit {
            UnitSpec::Index(i) if *i >= 1 && *i <= n => basis(declared, n, i - 1),
            UnitSpec::Index(i) => bail!(bialg::Error::Malformed(format!(
                "unit index {i} outside 1..={n}"
            ))),
            UnitSpec::Vector(v) => vector(n, declared, v, "unit")?,
        };
        let mut mults = Vec::new();
        for (name, es) in [("mult", &self.mult), ("mult2", &self.mult2)] {
            if let Some(es) = es {
                if name == "mult2" && self.mult.is_none() {
                    bail!(bialg::Error::Malformed("mult2 without mult".into()));
                }
                mults.push(MultTensor::new(
                    n,
                    declared,
                    entries_to_dense(n, declared, es, name)?,
                )?);
            }
        }
        let mut comults = Vec::new();
        for (name, es, xi) in [
            ("comult", &self.comult, &self.counit),
            ("comult2", &self.comult2, &self.counit2),
        ] {
            match (es, xi) {
                (Some(es), Some(xi)) => {
                    if name == "comult2" && self.comult.is_none() {
                        bail!(bialg::Error::Malformed("comult2 without comult".into()));
                    }
                    let d = entries_to_dense(n, declared, es, name)?;
                    let counit_name = if name == "comult" {
                        "counit"
                    } else {
                        "counit2"
                    };
                    comults.push(ComultTensor::new(
                        n,
                        declared,
                        d,
                        vector(n, declared, xi, counit_name)?,
                    )?);
                }
                (None, None) => {}
                _ => bail!(bialg::Error::Malformed(format!(
                    "{name} and its counit must appear together"
                ))),
            }
        }
        let b = Bundle::new(kind, unit, mults, comults)?;
        Ok(match field {
            Some(f) if f != declared => b.to_field(f)?,
            _ => b,
        })
    }

    pub fn from_bundle(name: &str, b: &Bundle) -> Self {
        let n = b.dim();
        let unit = match basis_index(b.unit()) {
            Some(i) => UnitSpec::Index(i + 1),
            None => UnitSpec::Vector(b.unit().iter().map(|x| x.to_string()).collect()),
        };
        let ms = b.mults();
        let cs = b.comults();
        let counit = |c: &ComultTensor| c.counit().iter().map(|x| x.to_string()).collect();
        StructureFile {
            name: name.to_string(),
            dim: n,
            field: FieldSpec::of(b.field()),
            unit,
            kind: b.kind().tag().to_string(),
            theta: b.kind().theta().map(|t| t.to_string()),
            mult: ms.first().map(|m| dense_to_entries(n, m.data())),
            mult2: ms.get(1).map(|m| dense_to_entries(n, m.data())),
            comult: cs.first().map(|c| dense_to_entries(n, c.data())),
            counit: cs.first().map(counit),
            comult2: cs.get(1).map(|c| dense_to_entries(n, c.data())),
            counit2: cs.get(1).map(counit),
        }
    }

    /// Canonical text: fixed key order, one entry per line.
    pub fn to_text(&self) -> String {
        let mut lines: Vec<String> = vec![
            format!("  \"name\": {}", json!(self.name)),
            format!("  \"dim\": {}", self.dim),
            format!(
                "  \"field\": {}",
                serde_json::to_string(&self.field).unwrap()
            ),
            format!("  \"unit\": {}", serde_json::to_string(&self.unit).unwrap()),
            format!("  \"kind\": {}", json!(self.kind)),
        ];
        if let Some(t) = &self.theta {
            lines.push(format!("  \"theta\": {}", json!(t)));
        }
        let block = |key: &str, es: &[Entry]| -> String {
            if es.is_empty() {
                return format!("  \"{key}\": []");
            }
            let rows: Vec<String> = es
                .iter()
                .map(|e| format!("    {}", serde_json::to_string(e).unwrap()))
                .collect();
            format!("  \"{key}\": [\n{}\n  ]", rows.join(",\n"))
        };
        let vec_line =
            |key: &str, xs: &[String]| format!("  \"{key}\": {}", Value::from(xs.to_vec()));
        if let Some(m) = &self.mult {
            lines.push(block("mult", m));
        }
        if let Some(m) = &self.mult2 {
            lines.push(block("mult2", m));
        }
        if let (Some(c), Some(x)) = (&self.comult, &self.counit) {
            lines.push(block("comult", c));
            lines.push(vec_line("counit", x));
        }
        if let (Some(c), Some(x)) = (&self.comult2, &self.counit2) {
            lines.push(block("comult2", c));
            lines.push(vec_line("counit2", x));
        }
        format!("{{\n{}\n}}\n", lines.join(",\n"))
    }

    pub fn save(&self, path: &Path) -> anyhow::Result<()> {
        std::fs::write(path, self.to_text()).with_context(|| format!("writing {}", path.display()))
    }
}
