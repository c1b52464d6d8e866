//! Name-keyed lookup of checks and constructions, used by batch front ends.

use crate::axioms::{check_bundle, CheckReport};
use crate::bundle::{Bundle, BundleKind};
use crate::constructions::{
    build_22b, build_2as, build_2b, kaplansky_k1, kaplansky_k2, Built, UnitalAlgebraInput,
};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub trait StructureCheck: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    /// Runs on the leading tensors of `b`; `theta` only matters for infinitesimal checks.
    fn run(&self, b: &Bundle, theta: &Scalar) -> Result<CheckReport>;
}

pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;
    fn inputs(&self) -> usize;
    fn build(&self, inputs: &[UnitalAlgebraInput]) -> Result<Vec<Built>>;
}

struct KindCheck {
    tag: &'static str,
    summary: &'static str,
}

impl StructureCheck for KindCheck {
    fn name(&self) -> &'static str {
        self.tag
    }
    fn summary(&self) -> &'static str {
        self.summary
    }
    fn run(&self, b: &Bundle, theta: &Scalar) -> Result<CheckReport> {
        let kind = BundleKind::from_tag(self.tag, Some(theta.clone()), b.field())?;
        let (nm, nc) = kind.arity();
        if b.mults().len() < nm || b.comults().len() < nc {
            return Err(Error::Malformed(format!(
                "{} needs {nm} multiplication(s) and {nc} comultiplication(s)",
                self.tag
            )));
        }
        let narrowed = Bundle::new(
            kind,
            b.unit().to_vec(),
            b.mults()[..nm].to_vec(),
            b.comults()[..nc].to_vec(),
        )?;
        check_bundle(&narrowed)
    }
}

struct FnConstruction {
    name: &'static str,
    inputs: usize,
    run: fn(&[UnitalAlgebraInput]) -> Result<Vec<Built>>,
}

impl Construction for FnConstruction {
    fn name(&self) -> &'static str {
        self.name
    }
    fn inputs(&self) -> usize {
        self.inputs
    }
    fn build(&self, inputs: &[UnitalAlgebraInput]) -> Result<Vec<Built>> {
        if inputs.len() != self.inputs {
            return Err(Error::Invalid(format!(
                "{} takes {} input algebra(s), got {}",
                self.name,
                self.inputs,
                inputs.len()
            )));
        }
        (self.run)(inputs)
    }
}

pub struct Registry {
    checks: Vec<Box<dyn StructureCheck>>,
    constructions: Vec<Box<dyn Construction>>,
}

impl Default for Registry {
    fn default() -> Self {
        let check =
            |tag, summary| -> Box<dyn StructureCheck> { Box::new(KindCheck { tag, summary }) };
        let construction = |name, inputs, run| -> Box<dyn Construction> {
            Box::new(FnConstruction { name, inputs, run })
        };
        Registry {
            checks: vec![
                check("algebra", "associativity and two-sided unit"),
                check("coalgebra", "coassociativity and counit"),
                check("bialgebra", "Δ and ε are algebra morphisms"),
                check(
                    "infinitesimal",
                    "unital infinitesimal compatibility with parameter θ",
                ),
                check("2as", "(μ1,Δ) bialgebra and (μ2,Δ) infinitesimal"),
                check("2b", "all four (μa,Δb) bialgebras"),
                check("22b", "diagonal bialgebras, cross pairs infinitesimal"),
            ],
            constructions: vec![
                construction("k1", 1, |a| Ok(vec![kaplansky_k1(&a[0])?])),
                construction("k2", 1, |a| Ok(vec![kaplansky_k2(&a[0])?])),
                construction("2as", 2, |a| Ok(vec![build_2as(&a[0], &a[1])?])),
                construction("2b", 2, |a| {
                    let (x, y) = build_2b(&a[0], &a[1])?;
                    Ok(vec![x, y])
                }),
                construction("22b", 2, |a| Ok(vec![build_22b(&a[0], &a[1])?])),
            ],
        }
    }
}

impl Registry {
    pub fn check(&self, name: &str) -> Result<&dyn StructureCheck> {
        self.checks
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
            .ok_or_else(|| Error::UnknownStrategy(name.to_string()))
    }

    pub fn construction(&self, name: &str) -> Result<&dyn Construction> {
        self.constructions
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
            .ok_or_else(|| Error::UnknownStrategy(name.to_string()))
    }

    pub fn checks(&self) -> impl Iterator<Item = &dyn StructureCheck> {
        self.checks.iter().map(|c| c.as_ref())
    }

    pub fn constructions(&self) -> impl Iterator<Item = &dyn Construction> {
        self.constructions.iter().map(|c| c.as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn lookup_and_unknown() {
        let r = Registry::default();
        assert_eq!(r.checks().count(), 7);
        assert!(matches!(r.check("hopf"), Err(Error::UnknownStrategy(_))));
        assert_eq!(r.construction("2b").unwrap().inputs(), 2);
    }

    #[test]
    fn narrowed_check_uses_leading_tensors() {
        let ex = catalog::examples()
            .into_iter()
            .find(|e| e.id == "example_22b_3")
            .unwrap();
        let r = Registry::default();
        let one = ex.bundle.field().one();
        assert!(
            r.check("bialgebra")
                .unwrap()
                .run(&ex.bundle, &one)
                .unwrap()
                .passed
        );
        assert!(
            r.check("22b")
                .unwrap()
                .run(&ex.bundle, &one)
                .unwrap()
                .passed
        );
        assert!(r.check("2as").unwrap().run(&ex.bundle, &one).is_ok());
    }
}
