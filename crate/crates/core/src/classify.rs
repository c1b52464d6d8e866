//! Isomorphism invariants, exhaustive isomorphism search over F_p and brute-force
//! discovery of compatible comultiplications.

use rayon::prelude::*;

use crate::axioms::{check_algebra, check_bialgebra, check_infinitesimal};
use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::{basis, basis_index, ComultTensor, LinearEndo, Matrix, MultTensor};

/// Default candidate cap for the enumerations (covers dim 3 over F_2).
pub const DEFAULT_BUDGET: u128 = 1 << 21;

/// Transport-invariant data, one entry per bundle member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub commutative: Vec<bool>,
    pub cocommutative: Vec<bool>,
    pub dim_commutator: Vec<usize>,
    pub dim_annihilator: Vec<usize>,
    pub dim_primitives: Vec<usize>,
}

fn commutator_rank(m: &MultTensor) -> usize {
    let n = m.dim();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    if pairs.is_empty() {
        return 0;
    }
    let mut mat = Matrix::zero(n, pairs.len(), m.field());
    for (col, &(i, j)) in pairs.iter().enumerate() {
        for k in 0..n {
            mat.set(k, col, m.get(i, j, k) - m.get(j, i, k));
        }
    }
    mat.rank()
}

fn annihilator_dim(m: &MultTensor) -> usize {
    let n = m.dim();
    let mut mat = Matrix::zero(2 * n * n, n, m.field());
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                mat.set(j * n + k, i, m.get(i, j, k).clone());
                mat.set(n * n + j * n + k, i, m.get(j, i, k).clone());
            }
        }
    }
    mat.kernel().len()
}

fn primitives_dim(c: &ComultTensor, u: &[Scalar]) -> usize {
    let n = c.dim();
    let mut mat = Matrix::zero(n * n, n, c.field());
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut v = c.get(i, j, k).clone();
                if i == j {
                    v = &v - &u[k];
                }
                if i == k {
                    v = &v - &u[j];
                }
                mat.set(j * n + k, i, v);
            }
        }
    }
    mat.kernel().len()
}

pub fn fingerprint(b: &Bundle) -> Fingerprint {
    Fingerprint {
        commutative: b.mults().iter().map(MultTensor::is_commutative).collect(),
        cocommutative: b
            .comults()
            .iter()
            .map(ComultTensor::is_cocommutative)
            .collect(),
        dim_commutator: b.mults().iter().map(commutator_rank).collect(),
        dim_annihilator: b.mults().iter().map(annihilator_dim).collect(),
        dim_primitives: b
            .comults()
            .iter()
            .map(|c| primitives_dim(c, b.unit()))
            .collect(),
    }
}

/// Residues of a tensor over F_p.
fn residues(xs: &[Scalar]) -> Vec<u32> {
    xs.iter().map(|x| x.residue().expect("Fp scalar")).collect()
}

struct FlatBundle {
    n: usize,
    unit: Vec<u32>,
    mults: Vec<Vec<u32>>,
    comults: Vec<(Vec<u32>, Vec<u32>)>,
}

impl FlatBundle {
    fn of(b: &Bundle) -> Self {
        FlatBundle {
            n: b.dim(),
            unit: residues(b.unit()),
            mults: b.mults().iter().map(|m| residues(m.data())).collect(),
            comults: b
                .comults()
                .iter()
                .map(|c| (residues(c.data()), residues(c.counit())))
                .collect(),
        }
    }
}

fn det_mod(f: &[u32], n: usize, p: u64) -> u64 {
    let mut a: Vec<u64> = f.iter().map(|&x| x as u64).collect();
    let mut det = 1u64;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&r| a[r * n + c] != 0) else {
            return 0;
        };
        if pr != c {
            for k in 0..n {
                a.swap(pr * n + k, c * n + k);
            }
            det = (p - det) % p;
        }
        let piv = a[c * n + c];
        det = det * piv % p;
        let inv = pow_mod(piv, p - 2, p);
        for r in c + 1..n {
            let fac = a[r * n + c] * inv % p;
            if fac == 0 {
                continue;
            }
            for k in c..n {
                a[r * n + k] = (a[r * n + k] + p - fac * a[c * n + k] % p) % p;
            }
        }
    }
    det
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// f is a morphism b1 → b2: f∘μ1 = μ2∘(f⊗f), (f⊗f)∘Δ1 = Δ2∘f, ε2∘f = ε1, f(u1) = u2.
fn is_morphism(f: &[u32], b1: &FlatBundle, b2: &FlatBundle, p: u64) -> bool {
    let n = b1.n;
    let fm = |r: usize, c: usize| f[r * n + c] as u64;
    for r in 0..n {
        let v: u64 = (0..n).map(|c| fm(r, c) * b1.unit[c] as u64).sum::<u64>() % p;
        if v != b2.unit[r] as u64 {
            return false;
        }
    }
    for (m1, m2) in b1.mults.iter().zip(&b2.mults) {
        for i in 0..n {
            for j in 0..n {
                for r in 0..n {
                    let mut lhs = 0u64;
                    for k in 0..n {
                        lhs += m1[(i * n + j) * n + k] as u64 * fm(r, k);
                    }
                    let mut rhs = 0u64;
                    for a in 0..n {
                        let fa = fm(a, i);
                        if fa == 0 {
                            continue;
                        }
                        for b in 0..n {
                            rhs += fa * fm(b, j) % p * m2[(a * n + b) * n + r] as u64;
                        }
                    }
                    if lhs % p != rhs % p {
                        return false;
                    }
                }
            }
        }
    }
    for ((d1, x1), (d2, x2)) in b1.comults.iter().zip(&b2.comults) {
        for i in 0..n {
            let mut s = 0u64;
            for l in 0..n {
                s += x2[l] as u64 * fm(l, i);
            }
            if s % p != x1[i] as u64 {
                return false;
            }
            for j in 0..n {
                for k in 0..n {
                    let mut lhs = 0u64;
                    for a in 0..n {
                        let fja = fm(j, a);
                        if fja == 0 {
                            continue;
                        }
                        for b in 0..n {
                            lhs += d1[(i * n + a) * n + b] as u64 * fja % p * fm(k, b);
                        }
                    }
                    let mut rhs = 0u64;
                    for l in 0..n {
                        rhs += fm(l, i) * d2[(l * n + j) * n + k] as u64;
                    }
                    if lhs % p != rhs % p {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn budget_check(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

fn comparable(b1: &Bundle, b2: &Bundle) -> Result<()> {
    if b1.field() != b2.field() {
        return Err(Error::FieldMismatch(b1.field(), b2.field()));
    }
    if b1.dim() != b2.dim() {
        return Err(Error::Dim {
            expected: b1.dim(),
            got: b2.dim(),
        });
    }
    if b1.kind().tag() != b2.kind().tag() {
        return Err(Error::Malformed("bundles of different kinds".into()));
    }
    Ok(())
}

/// Entry positions that vary; when both units are the same basis vector e_k,
/// column k is pinned to e_k.
fn free_positions(b1: &Bundle, b2: &Bundle) -> Vec<usize> {
    let n = b1.dim();
    let pinned = match (basis_index(b1.unit()), basis_index(b2.unit())) {
        (Some(a), Some(b)) if a == b => Some(a),
        _ => None,
    };
    (0..n * n).filter(|pos| Some(pos % n) != pinned).collect()
}

/// Exhaustive search for an invertible f with transport(b1, f) = b2 over F_p.
///
/// Candidates are I + offset, offsets in lexicographic order over the free entries
/// (row-major), so the identity is tried first and the result is deterministic.
pub fn isom_search_fp(b1: &Bundle, b2: &Bundle, budget: u128) -> Result<Option<LinearEndo>> {
    comparable(b1, b2)?;
    let Field::Fp(p) = b1.field() else {
        return Err(Error::Invalid(
            "isomorphism search runs over F_p; reduce first".into(),
        ));
    };
    let n = b1.dim();
    let free = free_positions(b1, b2);
    let needed = (p as u128)
        .checked_pow(free.len() as u32)
        .unwrap_or(u128::MAX);
    budget_check(needed, budget)?;
    let (f1, f2) = (FlatBundle::of(b1), FlatBundle::of(b2));
    let pp = p as u64;
    let decode = |idx: u64| -> Vec<u32> {
        let mut f = vec![0u32; n * n];
        for i in 0..n {
            f[i * n + i] = 1;
        }
        let mut rest = idx;
        for &pos in free.iter().rev() {
            let d = (rest % pp) as u32;
            rest /= pp;
            f[pos] = (f[pos] + d) % p;
        }
        f
    };
    let hit = (0..needed as u64)
        .into_par_iter()
        .find_first(|&idx| {
            let f = decode(idx);
            det_mod(&f, n, pp) != 0 && is_morphism(&f, &f1, &f2, pp)
        })
        .map(decode);
    let Some(f) = hit else { return Ok(None) };
    let field = b1.field();
    let f = LinearEndo::new(n, field, f.iter().map(|&v| field.int(v as i64)).collect())?;
    // soundness re-check through the generic transport
    assert_eq!(
        &b1.transport(&f)?,
        b2,
        "isomorphism witness failed exact re-check"
    );
    Ok(Some(f))
}

/// Search over unit-pinned integer matrices with entries in [−k, k] (k ≥ 1) over Q.
///
/// Only ever proves isomorphism; `None` says nothing about non-isomorphism.
pub fn isom_search_q_bounded(
    b1: &Bundle,
    b2: &Bundle,
    k: i64,
    budget: u128,
) -> Result<Option<LinearEndo>> {
    comparable(b1, b2)?;
    if b1.field() != Field::Q {
        return Err(Error::Invalid("bounded search is over Q".into()));
    }
    if k < 1 {
        return Err(Error::Invalid("entry bound must be at least 1".into()));
    }
    let n = b1.dim();
    let free = free_positions(b1, b2);
    let width = (2 * k + 1) as u128;
    let needed = width.checked_pow(free.len() as u32).unwrap_or(u128::MAX);
    budget_check(needed, budget)?;
    // per-entry values in [−k, k], nearest to the identity entry first
    let ordered = |id: i64| -> Vec<i64> {
        let mut v: Vec<i64> = (-k..=k).collect();
        v.sort_by_key(|&x| ((x - id).abs(), -x));
        v
    };
    let (on_diag, off_diag) = (ordered(1), ordered(0));
    let decode = |idx: u64| -> LinearEndo {
        let mut f = LinearEndo::identity(n, Field::Q);
        let mut rest = idx;
        for &pos in free.iter().rev() {
            let d = (rest % width as u64) as usize;
            rest /= width as u64;
            let (r, c) = (pos / n, pos % n);
            let v = if r == c { on_diag[d] } else { off_diag[d] };
            f.set(r, c, Field::Q.int(v));
        }
        f
    };
    Ok((0..needed as u64)
        .into_par_iter()
        .map(decode)
        .find_first(|f| !f.det().is_zero() && b1.transport(f).ok().as_ref() == Some(b2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiscoverMode {
    Bialgebra,
    Infinitesimal(Scalar),
}

/// All comultiplications compatible with `m` over F_p in the requested mode.
///
/// Bialgebra and θ=1 modes fix Δ(e1)=e1⊗e1 and ε(e1)=1 and enumerate the remaining
/// rows and counit values; θ=0 fixes Δ(e1)=0 and has no counit. Survivors of the
/// fast modular kernel are re-checked with the generic checkers.
pub fn discover_fp(
    m: &MultTensor,
    p: u32,
    mode: &DiscoverMode,
    budget: u128,
) -> Result<Vec<ComultTensor>> {
    let field = Field::fp(p)?;
    let m = match m.field() {
        Field::Q => m.to_field(field)?,
        f if f == field => m.clone(),
        f => return Err(Error::FieldMismatch(field, f)),
    };
    let n = m.dim();
    if n > 3 {
        return Err(Error::DimLimit(n, 3));
    }
    let theta = match mode {
        DiscoverMode::Bialgebra => None,
        DiscoverMode::Infinitesimal(t) => {
            let t = t.to_field(field)?;
            match t.residue() {
                Some(0) | Some(1) => Some(t),
                _ => return Err(Error::UnsupportedTheta(t.to_string())),
            }
        }
    };
    let unit = basis(field, n, 0);
    if !check_algebra(&m, &unit)?.passed {
        return Err(Error::Invalid(
            "multiplication is not unital associative with unit e1".into(),
        ));
    }
    let counit_free = matches!(&theta, Some(t) if t.is_zero());
    let d_free = (n - 1) * n * n;
    let x_free = if counit_free { 0 } else { n - 1 };
    let total = d_free + x_free;
    let needed = (p as u128).checked_pow(total as u32).unwrap_or(u128::MAX);
    budget_check(needed, budget)?;

    let kernel = Kernel {
        n,
        p: p as u64,
        c: residues(m.data()),
        mode: match &theta {
            None => KMode::Bialgebra,
            Some(t) if t.is_zero() => KMode::Theta0,
            Some(_) => KMode::Theta1,
        },
    };
    let decode = |idx: u64| -> (Vec<u32>, Vec<u32>) {
        let mut digits = vec![0u32; total];
        let mut rest = idx;
        for d in digits.iter_mut().rev() {
            *d = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        let mut d = vec![0u32; n * n * n];
        let mut xi = vec![0u32; n];
        if !counit_free {
            d[0] = 1;
            xi[0] = 1;
        }
        d[n * n..].copy_from_slice(&digits[..d_free]);
        if !counit_free {
            xi[1..].copy_from_slice(&digits[d_free..]);
        }
        (d, xi)
    };
    const CHUNK: u64 = 1 << 12;
    let chunks = (needed as u64).div_ceil(CHUNK);
    let hits: Vec<(Vec<u32>, Vec<u32>)> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|ch| {
            let lo = ch * CHUNK;
            let hi = (lo + CHUNK).min(needed as u64);
            (lo..hi).filter_map(|idx| {
                let (d, xi) = decode(idx);
                kernel.accepts(&d, &xi).then_some((d, xi))
            })
        })
        .collect();
    let mut out = Vec::with_capacity(hits.len());
    for (d, xi) in hits {
        let to = |v: &[u32]| v.iter().map(|&x| field.int(x as i64)).collect::<Vec<_>>();
        let c = ComultTensor::new(n, field, to(&d), to(&xi))?;
        let ok = match &theta {
            None => check_bialgebra(&m, &c, &unit)?.passed,
            Some(t) => check_infinitesimal(&m, &c, &unit, t)?.passed,
        };
        assert!(
            ok,
            "modular kernel accepted a tensor the generic checker rejects"
        );
        out.push(c);
    }
    Ok(out)
}

#[derive(Clone, Copy)]
enum KMode {
    Bialgebra,
    Theta0,
    Theta1,
}

struct Kernel {
    n: usize,
    p: u64,
    c: Vec<u32>,
    mode: KMode,
}

impl Kernel {
    #[inline]
    fn c(&self, i: usize, j: usize, k: usize) -> u64 {
        self.c[(i * self.n + j) * self.n + k] as u64
    }

    fn accepts(&self, d: &[u32], xi: &[u32]) -> bool {
        let n = self.n;
        let p = self.p;
        let dd = |i: usize, j: usize, k: usize| d[(i * n + j) * n + k] as u64;
        if !matches!(self.mode, KMode::Theta0) {
            for i in 0..n {
                for j in 0..n {
                    let want = (i == j) as u64;
                    let l: u64 = (0..n).map(|l| xi[l] as u64 * dd(i, l, j)).sum();
                    let r: u64 = (0..n).map(|l| xi[l] as u64 * dd(i, j, l)).sum();
                    if l % p != want || r % p != want {
                        return false;
                    }
                }
            }
        }
        for s in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let mut a = 0u64;
                        let mut b = 0u64;
                        for l in 0..n {
                            a += dd(s, l, k) * dd(l, i, j);
                            b += dd(s, i, l) * dd(l, j, k);
                        }
                        if a % p != b % p {
                            return false;
                        }
                    }
                }
            }
        }
        match self.mode {
            KMode::Bialgebra => self.bialgebra(d, xi),
            KMode::Theta0 => self.infinitesimal(d, 0),
            KMode::Theta1 => self.infinitesimal(d, 1),
        }
    }

    fn bialgebra(&self, d: &[u32], xi: &[u32]) -> bool {
        let n = self.n;
        let p = self.p;
        let dd = |i: usize, j: usize, k: usize| d[(i * n + j) * n + k] as u64;
        for i in 0..n {
            for j in 0..n {
                let e: u64 = (0..n).map(|l| self.c(i, j, l) * xi[l] as u64).sum();
                if e % p != xi[i] as u64 * xi[j] as u64 % p {
                    return false;
                }
            }
        }
        let mut acc = vec![0u64; n * n];
        for i in 0..n {
            for j in 0..n {
                acc.iter_mut().for_each(|x| *x = 0);
                for l in 0..n {
                    let cl = self.c(i, j, l);
                    if cl == 0 {
                        continue;
                    }
                    for ks in 0..n * n {
                        acc[ks] += cl * d[l * n * n + ks] as u64;
                    }
                }
                for r in 0..n {
                    for t in 0..n {
                        let a = dd(i, r, t);
                        if a == 0 {
                            continue;
                        }
                        for q in 0..n {
                            for w in 0..n {
                                let b = dd(j, q, w);
                                if b == 0 {
                                    continue;
                                }
                                let ab = a * b % p;
                                for k in 0..n {
                                    let crq = self.c(r, q, k);
                                    if crq == 0 {
                                        continue;
                                    }
                                    let abk = ab * crq % p;
                                    for s in 0..n {
                                        let ctw = self.c(t, w, s);
                                        if ctw != 0 {
                                            let slot = &mut acc[k * n + s];
                                            *slot += p * p - abk * ctw % p;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                if acc.iter().any(|x| x % p != 0) {
                    return false;
                }
            }
        }
        true
    }

    fn infinitesimal(&self, d: &[u32], theta: u64) -> bool {
        let n = self.n;
        let p = self.p;
        let dd = |i: usize, j: usize, k: usize| d[(i * n + j) * n + k] as u64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for s in 0..n {
                        let mut plus = 0u64;
                        for l in 0..n {
                            plus += self.c(i, j, l) * dd(l, k, s);
                        }
                        if i == k && j == s {
                            plus += theta;
                        }
                        let mut minus = 0u64;
                        for a in 0..n {
                            minus += dd(j, a, s) * self.c(i, a, k);
                            minus += dd(i, k, a) * self.c(a, j, s);
                        }
                        if plus % p != minus % p {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Outcome of comparing two bundles; only `Isomorphic` and `FingerprintsDiffer`
/// are proofs, `NotIsomorphicOver` is a heuristic for Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic { p: u32, witness: LinearEndo },
    FingerprintsDiffer,
    NotIsomorphicOver(Vec<u32>),
    Undecided,
}

/// Compare two Q bundles via fingerprints then F_p searches at the given primes.
pub fn compare_over_primes(
    b1: &Bundle,
    b2: &Bundle,
    primes: &[u32],
    budget: u128,
) -> Result<IsoVerdict> {
    comparable(b1, b2)?;
    if fingerprint(b1) != fingerprint(b2) {
        return Ok(IsoVerdict::FingerprintsDiffer);
    }
    let mut none = Vec::new();
    for &p in primes {
        let f = Field::fp(p)?;
        let (r1, r2) = match (b1.to_field(f), b2.to_field(f)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        match isom_search_fp(&r1, &r2, budget)? {
            Some(w) if b1.field() != Field::Q => {
                return Ok(IsoVerdict::Isomorphic { p, witness: w })
            }
            Some(_) => {}
            None => none.push(p),
        }
    }
    Ok(if none.len() >= 2 {
        IsoVerdict::NotIsomorphicOver(none)
    } else {
        IsoVerdict::Undecided
    })
}
