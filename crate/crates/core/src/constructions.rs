//! Kaplansky's unit-adjoining constructions and the bundle builders built on them.
//!
//! Layout of the (n+1)-dimensional output: the new unit is e1, the old unit becomes e2,
//! and the remaining old basis vectors follow in their original order.

use crate::axioms::{
    check_algebra, check_bialgebra, check_bundle, check_infinitesimal, CheckReport,
};
use crate::bundle::{Bundle, BundleKind};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::{basis, ComultTensor, MultTensor};

/// A unital associative algebra whose unit is a basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitalAlgebraInput {
    t: MultTensor,
    unit: usize,
    labels: Vec<String>,
}

impl UnitalAlgebraInput {
    /// `unit` is 0-based.
    pub fn new(t: MultTensor, unit: usize) -> Result<Self> {
        if unit >= t.dim() {
            return Err(Error::Invalid(format!(
                "unit index {} out of range",
                unit + 1
            )));
        }
        let r = check_algebra(&t, &basis(t.field(), t.dim(), unit))?;
        if !r.passed {
            return Err(Error::Invalid(format!(
                "not a unital associative algebra (violates {})",
                r.axioms_violated().join(", ")
            )));
        }
        let labels = (1..=t.dim()).map(|i| format!("e{i}")).collect();
        Ok(UnitalAlgebraInput { t, unit, labels })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.t.dim() {
            return Err(Error::Dim {
                expected: self.t.dim(),
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// The one-dimensional algebra K·e.
    pub fn ground(field: Field) -> Self {
        Self::new(MultTensor::with_unit(1, field, 0).expect("dim 1"), 0).expect("unital")
    }

    pub fn tensor(&self) -> &MultTensor {
        &self.t
    }
    pub fn unit(&self) -> usize {
        self.unit
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn dim(&self) -> usize {
        self.t.dim()
    }

    /// New index of each old basis vector.
    fn embed(&self) -> Vec<usize> {
        let mut map = vec![0; self.dim()];
        map[self.unit] = 1;
        let mut next = 2;
        for (i, slot) in map.iter_mut().enumerate() {
            if i != self.unit {
                *slot = next;
                next += 1;
            }
        }
        map
    }
}

/// Output of a construction with its self-check.
#[derive(Clone, Debug)]
pub struct Built {
    pub bundle: Bundle,
    pub report: CheckReport,
}

/// The old multiplication with a new two-sided unit e1 adjoined.
fn extended_mult(a: &UnitalAlgebraInput) -> MultTensor {
    let n = a.dim();
    let f = a.t.field();
    let map = a.embed();
    let mut t = MultTensor::with_unit(n + 1, f, 0).expect("dim within cap");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t.set(map[i], map[j], map[k], a.t.get(i, j, k).clone());
            }
        }
    }
    t
}

fn counit_e1(n: usize, f: Field) -> Vec<Scalar> {
    basis(f, n, 0)
}

fn add(t: &mut ComultTensor, i: usize, j: usize, k: usize, v: i64) {
    let f = t.field();
    let x = t.get(i, j, k) + &f.int(v);
    t.set(i, j, k, x);
}

/// Δ(e1) = e1⊗e1 and Δ(x) = x⊗e1 + e1⊗x − e2⊗x on the old basis.
fn k1_comult(n1: usize, f: Field) -> ComultTensor {
    let mut d = ComultTensor::zero(n1, f).expect("dim within cap");
    add(&mut d, 0, 0, 0, 1);
    for x in 1..n1 {
        add(&mut d, x, x, 0, 1);
        add(&mut d, x, 0, x, 1);
        add(&mut d, x, 1, x, -1);
    }
    d.with_counit(counit_e1(n1, f)).expect("dims agree")
}

/// Δ(e2) = e2⊗e1 + e1⊗e2 − e2⊗e2 on the old unit, and
/// Δ(x) = (e1−e2)⊗x + x⊗(e1−e2) on every other old basis vector.
///
/// Basis-dependent: a different basis of the old complement can give a
/// different coalgebra.
fn k2_comult(n1: usize, f: Field) -> ComultTensor {
    let mut d = ComultTensor::zero(n1, f).expect("dim within cap");
    add(&mut d, 0, 0, 0, 1);
    add(&mut d, 1, 1, 0, 1);
    add(&mut d, 1, 0, 1, 1);
    add(&mut d, 1, 1, 1, -1);
    for x in 2..n1 {
        add(&mut d, x, 0, x, 1);
        add(&mut d, x, 1, x, -1);
        add(&mut d, x, x, 0, 1);
        add(&mut d, x, x, 1, -1);
    }
    d.with_counit(counit_e1(n1, f)).expect("dims agree")
}

fn verified(b: Bundle, report: CheckReport) -> Result<Built> {
    if !report.passed {
        return Err(Error::Postcondition(Box::new(report)));
    }
    Ok(Built { bundle: b, report })
}

/// K1: bialgebra that is also unital infinitesimal.
pub fn kaplansky_k1(a: &UnitalAlgebraInput) -> Result<Built> {
    let n1 = a.dim() + 1;
    let f = a.t.field();
    let m = extended_mult(a);
    let d = k1_comult(n1, f);
    let u = basis(f, n1, 0);
    let bi = check_bialgebra(&m, &d, &u)?;
    let inf = check_infinitesimal(&m, &d, &u, &f.one())?;
    let report = CheckReport::combine(vec![
        ("bialgebra(mu1,delta1)".into(), bi),
        ("infinitesimal(mu1,delta1)".into(), inf),
    ]);
    verified(Bundle::pair(BundleKind::Bialgebra, m, d)?, report)
}

/// K2: bialgebra (generally not infinitesimal).
pub fn kaplansky_k2(a: &UnitalAlgebraInput) -> Result<Built> {
    let n1 = a.dim() + 1;
    let f = a.t.field();
    let m = extended_mult(a);
    let d = k2_comult(n1, f);
    let bi = check_bialgebra(&m, &d, &basis(f, n1, 0))?;
    let report = CheckReport::combine(vec![("bialgebra(mu1,delta1)".into(), bi)]);
    verified(Bundle::pair(BundleKind::Bialgebra, m, d)?, report)
}

fn same_shape(a: &UnitalAlgebraInput, b: &UnitalAlgebraInput) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::Dim {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    if a.t.field() != b.t.field() {
        return Err(Error::FieldMismatch(a.t.field(), b.t.field()));
    }
    if a.unit != b.unit {
        return Err(Error::Invalid("inputs must share the unit index".into()));
    }
    Ok(())
}

fn bundle_of(
    kind: BundleKind,
    a: &UnitalAlgebraInput,
    b: &UnitalAlgebraInput,
    ds: Vec<ComultTensor>,
) -> Result<Built> {
    let n1 = a.dim() + 1;
    let bundle = Bundle::new(
        kind,
        basis(a.t.field(), n1, 0),
        vec![extended_mult(a), extended_mult(b)],
        ds,
    )?;
    let report = check_bundle(&bundle)?;
    verified(bundle, report)
}

/// (μ̃1, μ̃2, Δ1) with Δ1 the K1 comultiplication.
pub fn build_2as(a: &UnitalAlgebraInput, a2: &UnitalAlgebraInput) -> Result<Built> {
    same_shape(a, a2)?;
    let d = k1_comult(a.dim() + 1, a.t.field());
    bundle_of(BundleKind::TwoAs, a, a2, vec![d])
}

/// B1 = (μ̃1, μ̃2, Δ1, Δ2) with Δ1 from K1 and Δ2 from K2; B2 replaces Δ1 by Δ1^cop.
pub fn build_2b(a1: &UnitalAlgebraInput, a2: &UnitalAlgebraInput) -> Result<(Built, Built)> {
    same_shape(a1, a2)?;
    let n1 = a1.dim() + 1;
    let f = a1.t.field();
    let d1 = k1_comult(n1, f);
    let d2 = k2_comult(n1, f);
    let b1 = bundle_of(BundleKind::TwoB, a1, a2, vec![d1.clone(), d2.clone()])?;
    let b2 = bundle_of(BundleKind::TwoB, a1, a2, vec![d1.cop(), d2])?;
    Ok((b1, b2))
}

/// (μ̃1, μ̃2, Δ1, Δ1) with Δ1 from K1.
pub fn build_22b(a1: &UnitalAlgebraInput, a2: &UnitalAlgebraInput) -> Result<Built> {
    same_shape(a1, a2)?;
    let d = k1_comult(a1.dim() + 1, a1.t.field());
    bundle_of(BundleKind::TwoTwoB, a1, a2, vec![d.clone(), d])
}
