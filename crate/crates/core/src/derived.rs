//! Convolution on Hom(V,V), Rota–Baxter residuals and the induced preLie product.

use crate::axioms::{check_bialgebra, check_infinitesimal, CheckReport, Residual};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::{check_vec, evaluate_mult, ComultTensor, LinearEndo, MultTensor, Vector};

/// Which compatibility the context was validated against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContextKind {
    Bialgebra,
    Infinitesimal(Scalar),
}

#[derive(Clone, Debug)]
pub struct EndoAlgebraContext {
    m: MultTensor,
    c: ComultTensor,
    unit: Vector,
    kind: ContextKind,
}

impl EndoAlgebraContext {
    /// Fails unless (m, c) passes the check named by `kind`.
    pub fn new(m: MultTensor, c: ComultTensor, unit: Vector, kind: ContextKind) -> Result<Self> {
        check_vec(m.field(), m.dim(), &unit)?;
        let r = match &kind {
            ContextKind::Bialgebra => check_bialgebra(&m, &c, &unit)?,
            ContextKind::Infinitesimal(t) => check_infinitesimal(&m, &c, &unit, t)?,
        };
        if !r.passed {
            return Err(Error::Invalid(format!(
                "pair does not satisfy the {kind:?} axioms ({} residuals)",
                r.residuals.len()
            )));
        }
        Ok(EndoAlgebraContext { m, c, unit, kind })
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }
    pub fn field(&self) -> Field {
        self.m.field()
    }
    pub fn kind(&self) -> &ContextKind {
        &self.kind
    }
    pub fn mult(&self) -> &MultTensor {
        &self.m
    }
    pub fn comult(&self) -> &ComultTensor {
        &self.c
    }

    fn check(&self, f: &LinearEndo) -> Result<()> {
        if f.dim() != self.dim() {
            return Err(Error::Dim {
                expected: self.dim(),
                got: f.dim(),
            });
        }
        if f.field() != self.field() {
            return Err(Error::FieldMismatch(self.field(), f.field()));
        }
        Ok(())
    }
}

/// (f⋆g)(e_i) = Σ_ab D_i^ab μ(f(e_a)⊗g(e_b)).
pub fn convolution(ctx: &EndoAlgebraContext, f: &LinearEndo, g: &LinearEndo) -> Result<LinearEndo> {
    ctx.check(f)?;
    ctx.check(g)?;
    let n = ctx.dim();
    let fc: Vec<Vector> = (0..n).map(|a| f.column(a)).collect();
    let gc: Vec<Vector> = (0..n).map(|b| g.column(b)).collect();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let mut col = vec![ctx.field().zero(); n];
        for a in 0..n {
            for b in 0..n {
                let d = ctx.c.get(i, a, b);
                if d.is_zero() {
                    continue;
                }
                let p = evaluate_mult(&ctx.m, &fc[a], &gc[b])?;
                for (o, x) in col.iter_mut().zip(&p) {
                    *o = &*o + &(d * x);
                }
            }
        }
        cols.push(col);
    }
    LinearEndo::from_columns(ctx.field(), &cols)
}

/// η∘ε : x ↦ ε(x)·1, the unit for ⋆.
pub fn convolution_unit(ctx: &EndoAlgebraContext) -> LinearEndo {
    let n = ctx.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|i| ctx.unit.iter().map(|u| u * &ctx.c.counit()[i]).collect())
        .collect();
    LinearEndo::from_columns(ctx.field(), &cols).expect("dims agree")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// φ(f) = id⋆f
    Left,
    /// φ(f) = f⋆id
    Right,
}

pub fn rota_baxter_phi(ctx: &EndoAlgebraContext, side: Side, f: &LinearEndo) -> Result<LinearEndo> {
    let id = LinearEndo::identity(ctx.dim(), ctx.field());
    match side {
        Side::Left => convolution(ctx, &id, f),
        Side::Right => convolution(ctx, f, &id),
    }
}

/// φ(f)∘φ(g) − φ(f∘g) − φ(φ(f)∘g + f∘φ(g)).
pub fn rota_baxter_residual(
    ctx: &EndoAlgebraContext,
    side: Side,
    f: &LinearEndo,
    g: &LinearEndo,
) -> Result<LinearEndo> {
    let pf = rota_baxter_phi(ctx, side, f)?;
    let pg = rota_baxter_phi(ctx, side, g)?;
    let lhs = pf.compose(&pg)?;
    let t1 = rota_baxter_phi(ctx, side, &f.compose(g)?)?;
    let inner = pf.compose(g)?.add(&f.compose(&pg)?)?;
    let t2 = rota_baxter_phi(ctx, side, &inner)?;
    lhs.sub(&t1)?.sub(&t2)
}

/// M_ij^k = Σ_abt D_j^ab C_ai^t C_tb^k, i.e. m(x,y) = Σ μ(μ(y₁⊗x)⊗y₂).
pub fn prelie_mult(m: &MultTensor, c: &ComultTensor) -> Result<MultTensor> {
    if m.dim() != c.dim() {
        return Err(Error::Dim {
            expected: m.dim(),
            got: c.dim(),
        });
    }
    if m.field() != c.field() {
        return Err(Error::FieldMismatch(m.field(), c.field()));
    }
    let n = m.dim();
    let f = m.field();
    let mut out = MultTensor::zero(n, f)?;
    for i in 0..n {
        for j in 0..n {
            let mut acc = vec![f.zero(); n];
            for a in 0..n {
                for b in 0..n {
                    let d = c.get(j, a, b);
                    if d.is_zero() {
                        continue;
                    }
                    for t in 0..n {
                        let cai = m.get(a, i, t);
                        if cai.is_zero() {
                            continue;
                        }
                        let w = d * cai;
                        for (k, o) in acc.iter_mut().enumerate() {
                            let ctb = m.get(t, b, k);
                            if !ctb.is_zero() {
                                *o = &*o + &(&w * ctb);
                            }
                        }
                    }
                }
            }
            out.set_product(i, j, &acc);
        }
    }
    Ok(out)
}

fn product(m: &MultTensor, x: &[Scalar], y: &[Scalar]) -> Vector {
    evaluate_mult(m, x, y).expect("dims agree")
}

fn sub(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn push(out: &mut Vec<Residual>, axiom: &str, idx: &[usize], v: &[Scalar]) {
    for (s, x) in v.iter().enumerate() {
        if !x.is_zero() {
            let mut index: Vec<usize> = idx.iter().map(|i| i + 1).collect();
            index.push(s + 1);
            out.push(Residual {
                scope: String::new(),
                axiom: axiom.to_string(),
                index,
                value: x.clone(),
            });
        }
    }
}

/// Left-symmetric associator identity, plus antisymmetry and Jacobi of the commutator.
pub fn check_prelie(m: &MultTensor) -> CheckReport {
    let n = m.dim();
    let f = m.field();
    let e: Vec<Vector> = (0..n).map(|i| crate::tensor::basis(f, n, i)).collect();
    let mu = |x: &[Scalar], y: &[Scalar]| product(m, x, y);
    let br = |x: &[Scalar], y: &[Scalar]| sub(&mu(x, y), &mu(y, x));
    let mut res = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (&e[i], &e[j], &e[k]);
                let ax = sub(&mu(x, &mu(y, z)), &mu(&mu(x, y), z));
                let ay = sub(&mu(y, &mu(x, z)), &mu(&mu(y, x), z));
                push(&mut res, "prelie", &[i, j, k], &sub(&ax, &ay));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let s: Vector = br(&e[i], &e[j])
                .iter()
                .zip(&br(&e[j], &e[i]))
                .map(|(a, b)| a + b)
                .collect();
            push(&mut res, "antisymmetry", &[i, j], &s);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (&e[i], &e[j], &e[k]);
                let a = br(x, &br(y, z));
                let b = br(y, &br(z, x));
                let c = br(z, &br(x, y));
                let s: Vector = a
                    .iter()
                    .zip(&b)
                    .zip(&c)
                    .map(|((p, q), r)| &(p + q) + r)
                    .collect();
                push(&mut res, "jacobi", &[i, j, k], &s);
            }
        }
    }
    CheckReport {
        passed: res.is_empty(),
        precheck_failed: false,
        residuals: res,
        sections: vec![],
    }
}
