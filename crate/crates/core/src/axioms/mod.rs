//! Residual-based verification of the structure axioms.
//!
//! Every checker returns *all* violated component equations with exact values.

pub mod kernel;
pub mod system;

use serde_json::{json, Value};

use crate::bundle::{Bundle, BundleKind};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::{check_vec, ComultTensor, MultTensor};
use kernel::{Component, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Assoc,
    UnitLeft,
    UnitRight,
    Coassoc,
    CounitLeft,
    CounitRight,
    CompatMult,
    CompatCounit,
    CompatUnitImage,
    CounitOfUnit,
    Infinitesimal,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Assoc => "assoc",
            Family::UnitLeft => "unit_left",
            Family::UnitRight => "unit_right",
            Family::Coassoc => "coassoc",
            Family::CounitLeft => "counit_left",
            Family::CounitRight => "counit_right",
            Family::CompatMult => "compat_mult",
            Family::CompatCounit => "compat_counit",
            Family::CompatUnitImage => "compat_unit_image",
            Family::CounitOfUnit => "counit_of_unit",
            Family::Infinitesimal => "infinitesimal",
        }
    }
}

/// One violated component equation. `index` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub scope: String,
    pub axiom: String,
    pub index: Vec<usize>,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub scope: String,
    pub passed: bool,
    pub precheck_failed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub passed: bool,
    /// Set when a prerequisite (algebra/coalgebra) failed and compatibility was not evaluated.
    pub precheck_failed: bool,
    pub residuals: Vec<Residual>,
    pub sections: Vec<Section>,
}

impl CheckReport {
    fn from_components(
        scope: &str,
        axiom_suffix: Option<&str>,
        comps: Vec<Component<Scalar>>,
    ) -> Self {
        let residuals: Vec<Residual> = comps
            .into_iter()
            .filter(|c| !c.value.is_zero())
            .map(|c| Residual {
                scope: scope.to_string(),
                axiom: match (c.family, axiom_suffix) {
                    (Family::Infinitesimal, Some(sfx)) => format!("infinitesimal({sfx})"),
                    (f, _) => f.label().to_string(),
                },
                index: c.index.iter().map(|i| i + 1).collect(),
                value: c.value,
            })
            .collect();
        CheckReport {
            passed: residuals.is_empty(),
            precheck_failed: false,
            residuals,
            sections: vec![],
        }
    }

    fn precheck(mut self) -> Self {
        self.precheck_failed = !self.passed;
        self
    }

    /// Concatenate sub-reports, each recorded as a labeled section.
    pub fn combine(parts: Vec<(String, CheckReport)>) -> CheckReport {
        let mut out = CheckReport {
            passed: true,
            ..Default::default()
        };
        for (scope, r) in parts {
            out.passed &= r.passed;
            out.precheck_failed |= r.precheck_failed;
            out.sections.push(Section {
                scope: scope.clone(),
                passed: r.passed,
                precheck_failed: r.precheck_failed,
            });
            out.residuals.extend(r.residuals.into_iter().map(|mut x| {
                x.scope = if x.scope.is_empty() {
                    scope.clone()
                } else {
                    format!("{scope}/{}", x.scope)
                };
                x
            }));
        }
        out
    }

    pub fn axioms_violated(&self) -> Vec<String> {
        let mut v: Vec<String> = self.residuals.iter().map(|r| r.axiom.clone()).collect();
        v.dedup();
        v.sort();
        v.dedup();
        v
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed,
            "precheck_failed": self.precheck_failed,
            "sections": self.sections.iter().map(|s| json!({
                "scope": s.scope,
                "passed": s.passed,
                "precheck_failed": s.precheck_failed,
            })).collect::<Vec<_>>(),
            "residuals": self.residuals.iter().map(|r| json!({
                "scope": r.scope,
                "axiom": r.axiom,
                "index": r.index,
                "value": r.value.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

fn ring(n: usize, field: Field) -> Ring<Scalar> {
    Ring {
        n,
        zero: field.zero(),
        one: field.one(),
    }
}

fn same_shape(m: &MultTensor, c: &ComultTensor) -> Result<()> {
    if m.dim() != c.dim() {
        return Err(Error::Dim {
            expected: m.dim(),
            got: c.dim(),
        });
    }
    if m.field() != c.field() {
        return Err(Error::FieldMismatch(m.field(), c.field()));
    }
    Ok(())
}

pub fn check_algebra(t: &MultTensor, unit: &[Scalar]) -> Result<CheckReport> {
    check_vec(t.field(), t.dim(), unit)?;
    let r = ring(t.dim(), t.field());
    let mut comps = kernel::assoc(&r, t.data());
    comps.extend(kernel::unit(&r, t.data(), unit));
    Ok(CheckReport::from_components("", None, comps))
}

/// Coassociativity alone (used by the counit-free θ=0 variant).
pub fn check_coassociative(c: &ComultTensor) -> CheckReport {
    let r = ring(c.dim(), c.field());
    CheckReport::from_components("", None, kernel::coassoc(&r, c.data()))
}

pub fn check_coalgebra(c: &ComultTensor) -> Result<CheckReport> {
    let r = ring(c.dim(), c.field());
    let mut comps = kernel::coassoc(&r, c.data());
    comps.extend(kernel::counit(&r, c.data(), c.counit()));
    Ok(CheckReport::from_components("", None, comps))
}

fn merge_prechecks(a: CheckReport, b: CheckReport) -> CheckReport {
    let mut out = a;
    out.passed &= b.passed;
    out.residuals.extend(b.residuals);
    out.precheck()
}

/// Δ and ε are algebra morphisms, Δ(1)=1⊗1, ε(1)=1.
///
/// Failing prechecks yield a report flagged `precheck_failed` whose residuals all come
/// from the failing family; compatibility is then not evaluated.
pub fn check_bialgebra(m: &MultTensor, c: &ComultTensor, unit: &[Scalar]) -> Result<CheckReport> {
    same_shape(m, c)?;
    let pre = merge_prechecks(check_algebra(m, unit)?, check_coalgebra(c)?);
    if !pre.passed {
        return Ok(pre);
    }
    let r = ring(m.dim(), m.field());
    let mut comps = kernel::compat_mult(&r, m.data(), c.data());
    comps.extend(kernel::compat_counit(&r, m.data(), c.counit()));
    comps.extend(kernel::unit_image(&r, c.data(), unit));
    comps.extend(kernel::counit_of_unit(&r, c.counit(), unit));
    Ok(CheckReport::from_components("", None, comps))
}

/// Δ(xy) = (x⊗1)•Δ(y) + Δ(x)•(1⊗y) − θ x⊗y.
///
/// θ = 0 drops the counit requirement (only coassociativity is prechecked);
/// θ = 1 additionally requires Δ(1) = 1⊗1.
pub fn check_infinitesimal(
    m: &MultTensor,
    c: &ComultTensor,
    unit: &[Scalar],
    theta: &Scalar,
) -> Result<CheckReport> {
    same_shape(m, c)?;
    if theta.field() != m.field() {
        return Err(Error::FieldMismatch(m.field(), theta.field()));
    }
    let co = if theta.is_zero() {
        check_coassociative(c)
    } else {
        check_coalgebra(c)?
    };
    let pre = merge_prechecks(check_algebra(m, unit)?, co);
    if !pre.passed {
        return Ok(pre);
    }
    let r = ring(m.dim(), m.field());
    let mut comps = kernel::infinitesimal(&r, m.data(), c.data(), theta);
    if theta.is_one() {
        comps.extend(kernel::unit_image(&r, c.data(), unit));
    }
    let sfx = format!("theta={theta}");
    Ok(CheckReport::from_components("", Some(&sfx), comps))
}

/// Member names used in report scopes.
pub fn mult_name(i: usize) -> String {
    format!("mu{}", i + 1)
}
pub fn comult_name(i: usize) -> String {
    format!("delta{}", i + 1)
}

fn bial_part(b: &Bundle, a: usize, c: usize) -> Result<(String, CheckReport)> {
    Ok((
        format!("bialgebra({},{})", mult_name(a), comult_name(c)),
        check_bialgebra(&b.mults()[a], &b.comults()[c], b.unit())?,
    ))
}

fn inf_part(b: &Bundle, a: usize, c: usize, theta: &Scalar) -> Result<(String, CheckReport)> {
    Ok((
        format!("infinitesimal({},{})", mult_name(a), comult_name(c)),
        check_infinitesimal(&b.mults()[a], &b.comults()[c], b.unit(), theta)?,
    ))
}

/// Runs the checks that define the bundle's kind.
pub fn check_bundle(b: &Bundle) -> Result<CheckReport> {
    let one = b.field().one();
    let parts = match b.kind() {
        BundleKind::Algebra => vec![(
            "algebra(mu1)".to_string(),
            check_algebra(&b.mults()[0], b.unit())?,
        )],
        BundleKind::Coalgebra => vec![(
            "coalgebra(delta1)".to_string(),
            check_coalgebra(&b.comults()[0])?,
        )],
        BundleKind::Bialgebra => vec![bial_part(b, 0, 0)?],
        BundleKind::Infinitesimal(t) => vec![inf_part(b, 0, 0, t)?],
        BundleKind::TwoAs => vec![bial_part(b, 0, 0)?, inf_part(b, 1, 0, &one)?],
        BundleKind::TwoB => vec![
            bial_part(b, 0, 0)?,
            bial_part(b, 0, 1)?,
            bial_part(b, 1, 0)?,
            bial_part(b, 1, 1)?,
        ],
        BundleKind::TwoTwoB => vec![
            bial_part(b, 0, 0)?,
            bial_part(b, 1, 1)?,
            inf_part(b, 0, 1, &one)?,
            inf_part(b, 1, 0, &one)?,
        ],
    };
    Ok(CheckReport::combine(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::basis;

    fn q(v: i64) -> Scalar {
        Field::Q.int(v)
    }

    #[test]
    fn two_dim_unital_is_always_associative() {
        // e2e2 = e1 + e2: a one-generator unital algebra, so every associator vanishes
        let mut m = MultTensor::with_unit(2, Field::Q, 0).unwrap();
        m.set_product(1, 1, &[q(1), q(1)]);
        assert!(check_algebra(&m, &basis(Field::Q, 2, 0)).unwrap().passed);
    }

    #[test]
    fn associator_residual_located() {
        // e2e2 = e3, e3e2 = e2: (e2e2)e2 = e2 but e2(e2e2) = e2e3 = 0
        let mut m = MultTensor::with_unit(3, Field::Q, 0).unwrap();
        m.set_product(1, 1, &[q(0), q(0), q(1)]);
        m.set_product(2, 1, &[q(0), q(1), q(0)]);
        let r = check_algebra(&m, &basis(Field::Q, 3, 0)).unwrap();
        assert!(r
            .residuals
            .iter()
            .any(|x| x.axiom == "assoc" && x.index == vec![2, 2, 2, 2] && x.value == q(1)));
    }

    #[test]
    fn wrong_unit_vector() {
        let mut m = MultTensor::with_unit(2, Field::Q, 0).unwrap();
        m.set_product(1, 1, &[q(0), q(1)]);
        let r = check_algebra(&m, &basis(Field::Q, 2, 1)).unwrap();
        assert!(r.residuals.iter().any(|x| x.axiom == "unit_left"));
        assert!(r.residuals.iter().any(|x| x.axiom == "unit_right"));
    }

    #[test]
    fn counit_right_fails_when_image_misses_unit() {
        let mut c = ComultTensor::zero(2, Field::Q).unwrap();
        c.set(0, 0, 0, q(1));
        c.set(1, 0, 1, q(1));
        let c = c.with_counit(vec![q(1), q(0)]).unwrap();
        let r = check_coalgebra(&c).unwrap();
        assert!(r
            .residuals
            .iter()
            .any(|x| x.axiom == "counit_right" && x.index == vec![2, 2]));
    }

    #[test]
    fn diagonal_coalgebra_passes() {
        let n = 3;
        let mut c = ComultTensor::zero(n, Field::Q).unwrap();
        for i in 0..n {
            c.set(i, i, i, q(1));
        }
        let c = c.with_counit(vec![q(1); n]).unwrap();
        assert!(check_coalgebra(&c).unwrap().passed);
    }

    #[test]
    fn theta_zero_derivation_passes_without_counit() {
        let m = MultTensor::with_unit(2, Field::Q, 0).unwrap();
        let mut c = ComultTensor::zero(2, Field::Q).unwrap();
        c.set(1, 1, 1, q(1));
        let r = check_infinitesimal(&m, &c, &basis(Field::Q, 2, 0), &q(0)).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn precheck_failure_reports_only_failing_family() {
        let m = MultTensor::with_unit(2, Field::Q, 0).unwrap();
        let c = ComultTensor::zero(2, Field::Q).unwrap();
        let r = check_bialgebra(&m, &c, &basis(Field::Q, 2, 0)).unwrap();
        assert!(r.precheck_failed && !r.passed);
        assert!(r
            .residuals
            .iter()
            .all(|x| x.axiom.starts_with("counit") || x.axiom == "coassoc"));
    }
}
