//! Component residuals of every axiom, generic over the coefficient ring.
//!
//! The same code runs on exact scalars (checkers) and on symbolic polynomials
//! (system export), so the two can never drift apart.

use super::Family;
use crate::scalar::Scalar;

pub trait Coeff: Clone {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Coeff for Scalar {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

/// One component equation; `index` is 0-based.
#[derive(Clone, Debug)]
pub struct Component<R> {
    pub family: Family,
    pub index: Vec<usize>,
    pub value: R,
}

/// Ring constants and the dimension the kernels need.
#[derive(Clone, Debug)]
pub struct Ring<R> {
    pub n: usize,
    pub zero: R,
    pub one: R,
}

impl<R: Coeff> Ring<R> {
    fn delta(&self, i: usize, j: usize) -> R {
        if i == j {
            self.one.clone()
        } else {
            self.zero.clone()
        }
    }

    #[inline]
    fn at<'a>(&self, t: &'a [R], i: usize, j: usize, k: usize) -> &'a R {
        &t[(i * self.n + j) * self.n + k]
    }
}

#[inline]
fn fma<R: Coeff>(acc: &mut R, a: &R, b: &R) {
    if !a.is_zero() && !b.is_zero() {
        *acc = acc.add(&a.mul(b));
    }
}

/// (e_i e_j) e_k − e_i (e_j e_k), coefficient of e_s.
pub fn assoc<R: Coeff>(r: &Ring<R>, c: &[R]) -> Vec<Component<R>> {
    let n = r.n;
    let mut out = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for s in 0..n {
                    let mut lhs = r.zero.clone();
                    let mut rhs = r.zero.clone();
                    for l in 0..n {
                        fma(&mut lhs, r.at(c, i, j, l), r.at(c, l, k, s));
                        fma(&mut rhs, r.at(c, j, k, l), r.at(c, i, l, s));
                    }
                    out.push(Component {
                        family: Family::Assoc,
                        index: vec![i, j, k, s],
                        value: lhs.sub(&rhs),
                    });
                }
            }
        }
    }
    out
}

/// u·e_i − e_i and e_i·u − e_i, coefficient of e_j.
pub fn unit<R: Coeff>(r: &Ring<R>, c: &[R], u: &[R]) -> Vec<Component<R>> {
    let n = r.n;
    let mut out = Vec::with_capacity(2 * n * n);
    for (family, left) in [(Family::UnitLeft, true), (Family::UnitRight, false)] {
        for i in 0..n {
            for j in 0..n {
                let mut acc = r.zero.clone();
                for (a, ua) in u.iter().enumerate() {
                    let t = if left {
                        r.at(c, a, i, j)
                    } else {
                        r.at(c, i, a, j)
                    };
                    fma(&mut acc, ua, t);
                }
                out.push(Component {
                    family,
                    index: vec![i, j],
                    value: acc.sub(&r.delta(i, j)),
                });
            }
        }
    }
    out
}

/// (Δ⊗id)Δ(e_s) − (id⊗Δ)Δ(e_s), coefficient of e_i⊗e_j⊗e_k.
pub fn coassoc<R: Coeff>(r: &Ring<R>, d: &[R]) -> Vec<Component<R>> {
    let n = r.n;
    let mut out = Vec::with_capacity(n.pow(4));
    for s in 0..n {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut lhs = r.zero.clone();
                    let mut rhs = r.zero.clone();
                    for l in 0..n {
                        fma(&mut lhs, r.at(d, s, l, k), r.at(d, l, i, j));
                        fma(&mut rhs, r.at(d, s, i, l), r.at(d, l, j, k));
                    }
                    out.push(Component {
                        family: Family::Coassoc,
                        index: vec![s, i, j, k],
                        value: lhs.sub(&rhs),
                    });
                }
            }
        }
    }
    out
}

/// (ε⊗id)Δ(e_i) − e_i and (id⊗ε)Δ(e_i) − e_i, coefficient of e_j.
pub fn counit<R: Coeff>(r: &Ring<R>, d: &[R], xi: &[R]) -> Vec<Component<R>> {
    let n = r.n;
    let mut out = Vec::with_capacity(2 * n * n);
    for (family, left) in [(Family::CounitLeft, true), (Family::CounitRight, false)] {
        for i in 0..n {
            for j in 0..n {
                let mut acc = r.zero.clone();
                for (l, xl) in xi.iter().enumerate() {
                    let t = if left {
                        r.at(d, i, l, j)
                    } else {
                        r.at(d, i, j, l)
                    };
                    fma(&mut acc, xl, t);
                }
                out.push(Component {
                    family,
                    index: vec![i, j],
                    value: acc.sub(&r.delta(i, j)),
                });
            }
        }
    }
    out
}

/// Δ(e_i e_j) − Δ(e_i)•Δ(e_j), coefficient of e_k⊗e_s.
pub fn compat_mult<R: Coeff>(r: &Ring<R>, c: &[R], d: &[R]) -> Vec<Component<R>> {
    let n = r.n;
    let nn = n * n;
    let mut out = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            let mut acc = vec![r.zero.clone(); nn];
            for l in 0..n {
                let cl = r.at(c, i, j, l);
                if cl.is_zero() {
                    continue;
                }
                for ks in 0..nn {
                    fma(&mut acc[ks], cl, &d[l * nn + ks]);
                }
            }
            // subtract Σ D_i^rt D_j^pq μ(e_r e_p) ⊗ μ(e_t e_q)
            for rr in 0..n {
                for t in 0..n {
                    let dit = r.at(d, i, rr, t);
                    if dit.is_zero() {
                        continue;
                    }
                    for p in 0..n {
                        for q in 0..n {
                            let djq = r.at(d, j, p, q);
                            if djq.is_zero() {
                                continue;
                            }
                            let w = dit.mul(djq);
                            for k in 0..n {
                                let crp = r.at(c, rr, p, k);
                                if crp.is_zero() {
                                    continue;
                                }
                                let wk = w.mul(crp);
                                for s in 0..n {
                                    let ctq = r.at(c, t, q, s);
                                    if !ctq.is_zero() {
                                        let slot = &mut acc[k * n + s];
                                        *slot = slot.sub(&wk.mul(ctq));
                                    }
                                }
                            }
                        }
                    }
                }
            }
            for (ks, value) in acc.into_iter().enumerate() {
                out.push(Component {
                    family: Family::CompatMult,
                    index: vec![i, j, ks / n, ks % n],
                    value,
                });
            }
        }
    }
    out
}

/// ε(e_i e_j) − ε(e_i)ε(e_j).
pub fn compat_counit<R: Coeff>(r: &Ring<R>, c: &[R], xi: &[R]) -> Vec<Component<R>> {
    let n = r.n;
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = r.zero.clone();
            for (l, xl) in xi.iter().enumerate() {
                fma(&mut acc, r.at(c, i, j, l), xl);
            }
            let mut prod = r.zero.clone();
            fma(&mut prod, &xi[i], &xi[j]);
            out.push(Component {
                family: Family::CompatCounit,
                index: vec![i, j],
                value: acc.sub(&prod),
            });
        }
    }
    out
}

/// Δ(u) − u⊗u, coefficient of e_k⊗e_s.
pub fn unit_image<R: Coeff>(r: &Ring<R>, d: &[R], u: &[R]) -> Vec<Component<R>> {
    let n = r.n;
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        for s in 0..n {
            let mut acc = r.zero.clone();
            for (a, ua) in u.iter().enumerate() {
                fma(&mut acc, ua, r.at(d, a, k, s));
            }
            let mut uu = r.zero.clone();
            fma(&mut uu, &u[k], &u[s]);
            out.push(Component {
                family: Family::CompatUnitImage,
                index: vec![k, s],
                value: acc.sub(&uu),
            });
        }
    }
    out
}

/// ε(u) − 1.
pub fn counit_of_unit<R: Coeff>(r: &Ring<R>, xi: &[R], u: &[R]) -> Vec<Component<R>> {
    let mut acc = r.zero.clone();
    for (a, ua) in u.iter().enumerate() {
        fma(&mut acc, ua, &xi[a]);
    }
    vec![Component {
        family: Family::CounitOfUnit,
        index: vec![],
        value: acc.sub(&r.one),
    }]
}

/// Δ(e_i e_j) − (e_i⊗1)•Δ(e_j) − Δ(e_i)•(1⊗e_j) + θ e_i⊗e_j, coefficient of e_k⊗e_s.
///
/// The two middle terms are written as (μ⊗id)(e_i⊗Δ(e_j)) and (id⊗μ)(Δ(e_i)⊗e_j),
/// which does not need the unit.
pub fn infinitesimal<R: Coeff>(r: &Ring<R>, c: &[R], d: &[R], theta: &R) -> Vec<Component<R>> {
    let n = r.n;
    let mut out = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for s in 0..n {
                    let mut acc = r.zero.clone();
                    for l in 0..n {
                        fma(&mut acc, r.at(c, i, j, l), r.at(d, l, k, s));
                    }
                    let mut sub = r.zero.clone();
                    for a in 0..n {
                        fma(&mut sub, r.at(d, j, a, s), r.at(c, i, a, k));
                        fma(&mut sub, r.at(d, i, k, a), r.at(c, a, j, s));
                    }
                    let mut value = acc.sub(&sub);
                    if i == k && j == s && !theta.is_zero() {
                        value = value.add(theta);
                    }
                    out.push(Component {
                        family: Family::Infinitesimal,
                        index: vec![i, j, k, s],
                        value,
                    });
                }
            }
        }
    }
    out
}
