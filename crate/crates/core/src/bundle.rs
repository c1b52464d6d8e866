//! Tagged collections of structure tensors sharing one space, field and unit.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::{basis, check_vec, ComultTensor, LinearEndo, MultTensor, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BundleKind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Infinitesimal(Scalar),
    TwoAs,
    TwoB,
    TwoTwoB,
}

impl BundleKind {
    /// (mults, comults) required by the kind.
    pub fn arity(&self) -> (usize, usize) {
        match self {
            BundleKind::Algebra => (1, 0),
            BundleKind::Coalgebra => (0, 1),
            BundleKind::Bialgebra | BundleKind::Infinitesimal(_) => (1, 1),
            BundleKind::TwoAs => (2, 1),
            BundleKind::TwoB | BundleKind::TwoTwoB => (2, 2),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            BundleKind::Algebra => "algebra",
            BundleKind::Coalgebra => "coalgebra",
            BundleKind::Bialgebra => "bialgebra",
            BundleKind::Infinitesimal(_) => "infinitesimal",
            BundleKind::TwoAs => "2as",
            BundleKind::TwoB => "2b",
            BundleKind::TwoTwoB => "22b",
        }
    }

    pub fn from_tag(tag: &str, theta: Option<Scalar>, field: Field) -> Result<BundleKind> {
        Ok(match tag {
            "algebra" => BundleKind::Algebra,
            "coalgebra" => BundleKind::Coalgebra,
            "bialgebra" => BundleKind::Bialgebra,
            "infinitesimal" => BundleKind::Infinitesimal(theta.unwrap_or_else(|| field.one())),
            "2as" => BundleKind::TwoAs,
            "2b" => BundleKind::TwoB,
            "22b" => BundleKind::TwoTwoB,
            other => return Err(Error::Parse(format!("unknown kind {other:?}"))),
        })
    }

    pub fn theta(&self) -> Option<&Scalar> {
        match self {
            BundleKind::Infinitesimal(t) => Some(t),
            _ => None,
        }
    }
}

impl fmt::Display for BundleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleKind::Infinitesimal(t) => write!(f, "infinitesimal(theta={t})"),
            k => write!(f, "{}", k.tag()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bundle {
    kind: BundleKind,
    dim: usize,
    field: Field,
    unit: Vector,
    mults: Vec<MultTensor>,
    comults: Vec<ComultTensor>,
}

impl Bundle {
    pub fn new(
        kind: BundleKind,
        unit: Vector,
        mults: Vec<MultTensor>,
        comults: Vec<ComultTensor>,
    ) -> Result<Self> {
        let (nm, nc) = kind.arity();
        if mults.len() != nm || comults.len() != nc {
            return Err(Error::Malformed(format!(
                "{} needs {nm} multiplication(s) and {nc} comultiplication(s), got {} and {}",
                kind.tag(),
                mults.len(),
                comults.len()
            )));
        }
        let (dim, field) = match (mults.first(), comults.first()) {
            (Some(m), _) => (m.dim(), m.field()),
            (None, Some(c)) => (c.dim(), c.field()),
            (None, None) => unreachable!("every kind has a member"),
        };
        for m in &mults {
            if m.dim() != dim || m.field() != field {
                return Err(Error::Malformed("members disagree on dim or field".into()));
            }
        }
        for c in &comults {
            if c.dim() != dim || c.field() != field {
                return Err(Error::Malformed("members disagree on dim or field".into()));
            }
        }
        if let Some(t) = kind.theta() {
            if t.field() != field {
                return Err(Error::FieldMismatch(field, t.field()));
            }
        }
        check_vec(field, dim, &unit)?;
        Ok(Bundle {
            kind,
            dim,
            field,
            unit,
            mults,
            comults,
        })
    }

    /// Single multiplication and comultiplication with unit e1.
    pub fn pair(kind: BundleKind, m: MultTensor, c: ComultTensor) -> Result<Self> {
        let u = basis(m.field(), m.dim(), 0);
        Self::new(kind, u, vec![m], vec![c])
    }

    pub fn kind(&self) -> &BundleKind {
        &self.kind
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn field(&self) -> Field {
        self.field
    }
    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }
    pub fn mults(&self) -> &[MultTensor] {
        &self.mults
    }
    pub fn comults(&self) -> &[ComultTensor] {
        &self.comults
    }

    pub fn with_kind(&self, kind: BundleKind) -> Result<Self> {
        Self::new(
            kind,
            self.unit.clone(),
            self.mults.clone(),
            self.comults.clone(),
        )
    }

    /// μ′ = f∘μ∘(f⁻¹⊗f⁻¹), Δ′ = (f⊗f)∘Δ∘f⁻¹, ε′ = ε∘f⁻¹, unit′ = f(unit).
    pub fn transport(&self, f: &LinearEndo) -> Result<Bundle> {
        if f.dim() != self.dim {
            return Err(Error::Dim {
                expected: self.dim,
                got: f.dim(),
            });
        }
        if f.field() != self.field {
            return Err(Error::FieldMismatch(self.field, f.field()));
        }
        let g = f.inverse()?;
        let mults = self
            .mults
            .iter()
            .map(|m| transport_mult(m, f, &g))
            .collect();
        let comults = self
            .comults
            .iter()
            .map(|c| transport_comult(c, f, &g))
            .collect();
        Bundle::new(self.kind.clone(), f.apply(&self.unit)?, mults, comults)
    }

    pub fn op_cop(&self) -> Bundle {
        Bundle {
            kind: self.kind.clone(),
            dim: self.dim,
            field: self.field,
            unit: self.unit.clone(),
            mults: self.mults.iter().map(MultTensor::op).collect(),
            comults: self.comults.iter().map(ComultTensor::cop).collect(),
        }
    }

    /// Entrywise image in another field (Q → Fp reduction, or identity).
    pub fn to_field(&self, field: Field) -> Result<Bundle> {
        let kind = match &self.kind {
            BundleKind::Infinitesimal(t) => BundleKind::Infinitesimal(t.to_field(field)?),
            k => k.clone(),
        };
        let unit = self
            .unit
            .iter()
            .map(|x| x.to_field(field))
            .collect::<Result<_>>()?;
        let mults = self
            .mults
            .iter()
            .map(|m| m.to_field(field))
            .collect::<Result<_>>()?;
        let comults = self
            .comults
            .iter()
            .map(|c| c.to_field(field))
            .collect::<Result<_>>()?;
        Bundle::new(kind, unit, mults, comults)
    }
}

fn transport_mult(m: &MultTensor, f: &LinearEndo, g: &LinearEndo) -> MultTensor {
    let n = m.dim();
    let field = m.field();
    // first pull back both inputs through g, then push the output through f
    let mut pulled = MultTensor::zero(n, field).expect("dim checked");
    for i in 0..n {
        for j in 0..n {
            let x = g.column(i);
            let y = g.column(j);
            let v = crate::tensor::evaluate_mult(m, &x, &y).expect("dims agree");
            let w = f.apply(&v).expect("dims agree");
            pulled.set_product(i, j, &w);
        }
    }
    pulled
}

fn transport_comult(c: &ComultTensor, f: &LinearEndo, g: &LinearEndo) -> ComultTensor {
    let n = c.dim();
    let field = c.field();
    let mut out = ComultTensor::zero(n, field).expect("dim checked");
    for i in 0..n {
        let t = crate::tensor::evaluate_comult(c, &g.column(i)).expect("dims agree");
        // (f⊗f) t
        for a in 0..n {
            for b in 0..n {
                let tab = t.get(a, b);
                if tab.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let fja = f.get(j, a);
                    if fja.is_zero() {
                        continue;
                    }
                    let w = tab * fja;
                    for k in 0..n {
                        let fkb = f.get(k, b);
                        if !fkb.is_zero() {
                            let v = c_get(&out, i, j, k) + &(&w * fkb);
                            out.set(i, j, k, v);
                        }
                    }
                }
            }
        }
    }
    let counit = (0..n)
        .map(|i| {
            (0..n).fold(field.zero(), |acc, a| {
                &acc + &(&c.counit()[a] * g.get(a, i))
            })
        })
        .collect();
    out.with_counit(counit).expect("dims agree")
}

fn c_get(c: &ComultTensor, i: usize, j: usize, k: usize) -> Scalar {
    c.get(i, j, k).clone()
}
