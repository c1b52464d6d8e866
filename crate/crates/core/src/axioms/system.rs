//! Symbolic component systems for the 2as / 2b bundle kinds.
//!
//! Polynomials are produced by running the generic residual kernels on symbolic
//! coefficients, so an assignment zeroes the system iff the checkers pass.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::kernel::{self, Coeff, Component, Ring};
use super::Family;
use crate::bundle::{Bundle, BundleKind};
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Scalar};
use crate::tensor::basis_index;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarFamily {
    C,
    Ct,
    D,
    Dt,
    Xi,
    Xit,
}

impl VarFamily {
    pub fn name(self) -> &'static str {
        match self {
            VarFamily::C => "C",
            VarFamily::Ct => "Ct",
            VarFamily::D => "D",
            VarFamily::Dt => "Dt",
            VarFamily::Xi => "xi",
            VarFamily::Xit => "xit",
        }
    }

    fn from_name(s: &str) -> Option<VarFamily> {
        Some(match s {
            "C" => VarFamily::C,
            "Ct" => VarFamily::Ct,
            "D" => VarFamily::D,
            "Dt" => VarFamily::Dt,
            "xi" => VarFamily::Xi,
            "xit" => VarFamily::Xit,
            _ => return None,
        })
    }

    fn arity(self) -> usize {
        match self {
            VarFamily::Xi | VarFamily::Xit => 1,
            _ => 3,
        }
    }
}

/// A variable; `idx` is 0-based (printed 1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub family: VarFamily,
    pub idx: Vec<usize>,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.idx.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{}[{}]", self.family.name(), idx.join(","))
    }
}

/// Sparse polynomial with rational coefficients; monomials are sorted variable lists.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Vec<Var>, BigRational>,
}

impl Poly {
    pub fn constant(q: BigRational) -> Poly {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(vec![], q);
        }
        Poly { terms }
    }

    pub fn int(v: i64) -> Poly {
        Self::constant(BigRational::from_integer(v.into()))
    }

    pub fn var(v: Var) -> Poly {
        let mut terms = BTreeMap::new();
        terms.insert(vec![v], BigRational::one());
        Poly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Var>, &BigRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, mono: Vec<Var>, c: BigRational) {
        let e = self.terms.entry(mono).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Evaluate in the field of the assignment; unassigned variables are an error.
    pub fn eval(&self, a: &Assignment) -> Result<Scalar> {
        let field = a.field;
        let mut acc = field.zero();
        for (mono, c) in &self.terms {
            let mut t = field.rational(c)?;
            for v in mono {
                let x = a
                    .values
                    .get(v)
                    .ok_or_else(|| Error::Invalid(format!("no value for {v}")))?;
                t = &t * x;
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

impl Coeff for Poly {
    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = Poly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let mut m: Vec<Var> = m1.iter().chain(m2).cloned().collect();
                m.sort();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn fmt_coef(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (mono, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{}", fmt_coef(&mag))?;
            for v in mono {
                write!(f, "*{v}")?;
            }
        }
        Ok(())
    }
}

/// One emitted equation: `poly = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub family: String,
    pub scope: String,
    /// 1-based component index.
    pub index: Vec<usize>,
    pub poly: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    pub dim: usize,
    pub kind: String,
    pub equations: Vec<Equation>,
}

fn vars3(fam: VarFamily, n: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.push(Poly::var(Var {
                    family: fam,
                    idx: vec![i, j, k],
                }));
            }
        }
    }
    out
}

fn vars1(fam: VarFamily, n: usize) -> Vec<Poly> {
    (0..n)
        .map(|i| {
            Poly::var(Var {
                family: fam,
                idx: vec![i],
            })
        })
        .collect()
}

struct Emitter {
    eqs: Vec<Equation>,
}

impl Emitter {
    fn push(&mut self, scope: &str, label: Option<&str>, comps: Vec<Component<Poly>>) {
        for c in comps {
            self.eqs.push(Equation {
                family: match (c.family, label) {
                    (Family::Infinitesimal, Some(l)) => l.to_string(),
                    (f, _) => f.label().to_string(),
                },
                scope: scope.to_string(),
                index: c.index.iter().map(|i| i + 1).collect(),
                poly: c.value,
            });
        }
    }
}

/// Component system of a 2as or 2b bundle of dimension `n` with unit e1.
///
/// Ordering is by equation family block, then by index tuple.
pub fn export_system(n: usize, kind: &BundleKind) -> Result<PolySystem> {
    if n == 0 || n > crate::tensor::MAX_DIM {
        return Err(Error::DimLimit(n, crate::tensor::MAX_DIM));
    }
    let r = Ring {
        n,
        zero: Poly::default(),
        one: Poly::int(1),
    };
    let mut u = vec![Poly::default(); n];
    u[0] = Poly::int(1);
    let c = vars3(VarFamily::C, n);
    let ct = vars3(VarFamily::Ct, n);
    let d = vars3(VarFamily::D, n);
    let xi = vars1(VarFamily::Xi, n);
    let mut e = Emitter { eqs: vec![] };
    let mults = [("mu1", &c), ("mu2", &ct)];
    for (name, m) in mults {
        e.push(name, None, kernel::assoc(&r, m));
        e.push(name, None, kernel::unit(&r, m, &u));
    }
    match kind {
        BundleKind::TwoAs => {
            e.push("delta1", None, kernel::coassoc(&r, &d));
            e.push("delta1", None, kernel::counit(&r, &d, &xi));
            e.push("(mu1,delta1)", None, kernel::compat_mult(&r, &c, &d));
            e.push("(mu1,delta1)", None, kernel::compat_counit(&r, &c, &xi));
            e.push("delta1", None, kernel::unit_image(&r, &d, &u));
            e.push("delta1", None, kernel::counit_of_unit(&r, &xi, &u));
            e.push(
                "(mu2,delta1)",
                Some("infinitesimal(theta=1)"),
                kernel::infinitesimal(&r, &ct, &d, &Poly::int(1)),
            );
        }
        BundleKind::TwoB => {
            let dt = vars3(VarFamily::Dt, n);
            let xit = vars1(VarFamily::Xit, n);
            let comults = [("delta1", &d, &xi), ("delta2", &dt, &xit)];
            for (name, dd, x) in comults {
                e.push(name, None, kernel::coassoc(&r, dd));
                e.push(name, None, kernel::counit(&r, dd, x));
            }
            for (mn, m) in mults {
                for (cn, dd, x) in comults {
                    let scope = format!("({mn},{cn})");
                    e.push(&scope, None, kernel::compat_mult(&r, m, dd));
                    e.push(&scope, None, kernel::compat_counit(&r, m, x));
                }
            }
            for (cn, dd, x) in comults {
                e.push(cn, None, kernel::unit_image(&r, dd, &u));
                e.push(cn, None, kernel::counit_of_unit(&r, x, &u));
            }
        }
        other => {
            return Err(Error::Invalid(format!(
                "no component system for kind {}",
                other.tag()
            )))
        }
    }
    Ok(PolySystem {
        dim: n,
        kind: kind.tag().to_string(),
        equations: e.eqs,
    })
}

impl PolySystem {
    /// Plain-text form: `#` comment lines, one polynomial per line with a trailing
    /// `# family scope [index]` comment.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# component system kind={} dim={}", self.kind, self.dim);
        let _ = writeln!(s, "# each line is a polynomial that must vanish");
        let mut last: Option<(&str, &str)> = None;
        for eq in &self.equations {
            let key = (eq.family.as_str(), eq.scope.as_str());
            if last != Some(key) {
                let _ = writeln!(s, "# {} {}", eq.family, eq.scope);
                last = Some(key);
            }
            let idx: Vec<String> = eq.index.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(
                s,
                "{}  # {} {} [{}]",
                eq.poly,
                eq.family,
                eq.scope,
                idx.join(",")
            );
        }
        s
    }
}

/// Parse polynomial lines back; comments and blank lines are skipped.
pub fn parse_text(text: &str) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        out.push(parse_poly(body).map_err(|e| Error::Parse(format!("line {}: {e}", ln + 1)))?);
    }
    Ok(out)
}

pub fn parse_poly(s: &str) -> std::result::Result<Poly, String> {
    let mut poly = Poly::default();
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err("empty polynomial".into());
    }
    // split into signed terms at top-level +/-; brackets never contain signs
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, &ch) in chars.iter().enumerate() {
        if (ch == '+' || ch == '-') && (i == 0 || chars[i - 1] != '/') {
            if !cur.is_empty() {
                terms.push((neg, std::mem::take(&mut cur)));
            } else if i != 0 {
                return Err(format!("dangling sign at {i}"));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err("trailing sign".into());
    }
    terms.push((neg, cur));
    for (neg, t) in terms {
        let mut coef = BigRational::one();
        let mut mono = Vec::new();
        for f in t.split('*') {
            if f.is_empty() {
                return Err(format!("empty factor in {t:?}"));
            }
            if f.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                coef *= parse_rational(f).map_err(|e| e.to_string())?;
            } else {
                mono.push(parse_var(f)?);
            }
        }
        mono.sort();
        if neg {
            coef = -coef;
        }
        poly.add_term(mono, coef);
    }
    Ok(poly)
}

fn parse_var(f: &str) -> std::result::Result<Var, String> {
    let (name, rest) = f
        .split_once('[')
        .ok_or_else(|| format!("bad variable {f:?}"))?;
    let inner = rest
        .strip_suffix(']')
        .ok_or_else(|| format!("bad variable {f:?}"))?;
    let family = VarFamily::from_name(name).ok_or_else(|| format!("unknown variable {name:?}"))?;
    let idx: Vec<usize> = inner
        .split(',')
        .map(|x| x.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1))
        .collect::<Option<_>>()
        .ok_or_else(|| format!("bad index in {f:?}"))?;
    if idx.len() != family.arity() {
        return Err(format!("wrong index count in {f:?}"));
    }
    Ok(Var { family, idx })
}

/// Values for the system variables, taken from a bundle's structure constants.
#[derive(Clone, Debug)]
pub struct Assignment {
    pub field: crate::scalar::Field,
    pub values: BTreeMap<Var, Scalar>,
}

impl Assignment {
    /// C/Ct from the first/second multiplication (Ct = C if only one), D/Dt and
    /// xi/xit likewise from the comultiplications.
    pub fn from_bundle(b: &Bundle) -> Result<Assignment> {
        if basis_index(b.unit()) != Some(0) {
            return Err(Error::Invalid(
                "component systems assume the unit is e1".into(),
            ));
        }
        if b.mults().is_empty() || b.comults().is_empty() {
            return Err(Error::Invalid(
                "bundle needs a multiplication and a comultiplication".into(),
            ));
        }
        let n = b.dim();
        let mut values = BTreeMap::new();
        let m1 = &b.mults()[0];
        let m2 = b.mults().get(1).unwrap_or(m1);
        let c1 = &b.comults()[0];
        let c2 = b.comults().get(1).unwrap_or(c1);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let idx = vec![i, j, k];
                    for (fam, v) in [
                        (VarFamily::C, m1.get(i, j, k)),
                        (VarFamily::Ct, m2.get(i, j, k)),
                        (VarFamily::D, c1.get(i, j, k)),
                        (VarFamily::Dt, c2.get(i, j, k)),
                    ] {
                        values.insert(
                            Var {
                                family: fam,
                                idx: idx.clone(),
                            },
                            v.clone(),
                        );
                    }
                }
            }
            values.insert(
                Var {
                    family: VarFamily::Xi,
                    idx: vec![i],
                },
                c1.counit()[i].clone(),
            );
            values.insert(
                Var {
                    family: VarFamily::Xit,
                    idx: vec![i],
                },
                c2.counit()[i].clone(),
            );
        }
        Ok(Assignment {
            field: b.field(),
            values,
        })
    }
}

/// 0-based positions of equations that do not vanish under the assignment.
pub fn violated(polys: &[Poly], a: &Assignment) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, p) in polys.iter().enumerate() {
        if !p.eval(a)?.is_zero() {
            out.push(i);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_text_roundtrip() {
        let sys = export_system(2, &BundleKind::TwoAs).unwrap();
        let text = sys.to_text();
        let parsed = parse_text(&text).unwrap();
        assert_eq!(parsed.len(), sys.equations.len());
        for (p, e) in parsed.iter().zip(&sys.equations) {
            assert_eq!(p, &e.poly);
        }
    }

    #[test]
    fn parses_fractions_and_signs() {
        let p = parse_poly("-1/2*C[1,1,1] + 3 - xi[2]*xi[1]").unwrap();
        assert_eq!(p.terms().count(), 3);
        assert!(parse_poly("C[0,1,1]").is_err());
        assert!(parse_poly("1 +").is_err());
        assert_eq!(parse_poly("0").unwrap(), Poly::default());
    }
}
