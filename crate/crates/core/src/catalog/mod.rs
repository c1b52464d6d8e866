//! Embedded transcriptions of the dimension-2 and dimension-3 classification lists.
//!
//! Ids: `muA_n` for multiplications, `delta_A_J_n` for the J-th comultiplication listed
//! under multiplication A in dimension n. A few printed comultiplications are not
//! coalgebras (or not compatible with their multiplication); for those the entry
//! carries the verbatim tensor in `printed` and a corrected tensor in `data`. The
//! correction is the unique nearest tensor (fewest changed entries) that restores the
//! listed properties without duplicating another entry of the same list.

pub mod census;
pub mod published;

use std::sync::OnceLock;

use crate::axioms::{check_algebra, check_coalgebra};
use crate::bundle::{Bundle, BundleKind};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::{basis, ComultTensor, MultTensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryData {
    Mult(MultTensor),
    Comult(ComultTensor),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub dim: usize,
    pub data: EntryData,
    /// Verbatim data when `data` is a correction.
    pub printed: Option<EntryData>,
    /// Multiplication id whose list the comultiplication belongs to.
    pub listed_under: Option<String>,
    pub parameters: Vec<(String, Scalar)>,
    pub provenance: String,
    pub note: Option<String>,
}

impl CatalogEntry {
    pub fn mult(&self) -> Option<&MultTensor> {
        match &self.data {
            EntryData::Mult(m) => Some(m),
            _ => None,
        }
    }
    pub fn comult(&self) -> Option<&ComultTensor> {
        match &self.data {
            EntryData::Comult(c) => Some(c),
            _ => None,
        }
    }
    pub fn printed_comult(&self) -> Option<&ComultTensor> {
        match &self.printed {
            Some(EntryData::Comult(c)) => Some(c),
            _ => None,
        }
    }
    pub fn is_mult(&self) -> bool {
        matches!(self.data, EntryData::Mult(_))
    }
    pub fn is_corrected(&self) -> bool {
        self.printed.is_some()
    }
}

type Term = (i64, usize, usize);

fn q(v: i64) -> Scalar {
    Field::Q.int(v)
}

/// Unital multiplication with e1 as unit plus the listed products (1-based).
fn mult(n: usize, prods: &[((usize, usize), &[(usize, i64)])]) -> MultTensor {
    let mut t = MultTensor::with_unit(n, Field::Q, 0).expect("valid dim");
    for &((i, j), vec) in prods {
        let mut v = vec![q(0); n];
        for &(k, c) in vec {
            v[k - 1] = q(c);
        }
        t.set_product(i - 1, j - 1, &v);
    }
    t
}

/// Comultiplication from rows Δ(e_i) = Σ c e_j⊗e_k, written as (c, j, k), 1-based.
fn comult(n: usize, rows: &[&[Term]], xi: &[i64]) -> ComultTensor {
    let mut t = ComultTensor::zero(n, Field::Q).expect("valid dim");
    for (i, row) in rows.iter().enumerate() {
        for &(c, j, k) in row.iter() {
            let v = t.get(i, j - 1, k - 1) + &q(c);
            t.set(i, j - 1, k - 1, v);
        }
    }
    t.with_counit(xi.iter().map(|&v| q(v)).collect())
        .expect("valid counit")
}

const E11: &[Term] = &[(1, 1, 1)];
const BASE2: &[Term] = &[(1, 1, 2), (1, 2, 1), (-1, 2, 2)];
const E22: &[Term] = &[(1, 2, 2)];

fn delta_2_3(lambda: &Scalar) -> ComultTensor {
    let mut t = comult(
        3,
        &[E11, BASE2, &[(1, 1, 3), (-1, 2, 3), (1, 3, 1), (-1, 3, 2)]],
        &[1, 0, 0],
    );
    t.set(2, 2, 2, lambda.clone());
    t
}

struct Raw {
    id: &'static str,
    under: &'static str,
    data: ComultTensor,
    printed: Option<ComultTensor>,
    prov: &'static str,
    note: Option<&'static str>,
}

fn c3(
    id: &'static str,
    under: &'static str,
    rows: [&[Term]; 2],
    xi: [i64; 3],
    prov: &'static str,
) -> Raw {
    Raw {
        id,
        under,
        data: comult(3, &[E11, rows[0], rows[1]], &xi),
        printed: None,
        prov,
        note: None,
    }
}

fn corrected(mut r: Raw, fixed_rows: [&[Term]; 2], note: &'static str) -> Raw {
    let fixed = comult(3, &[E11, fixed_rows[0], fixed_rows[1]], &[0, 0, 0])
        .with_counit(r.data.counit().to_vec())
        .expect("same dim");
    r.printed = Some(std::mem::replace(&mut r.data, fixed));
    r.note = Some(note);
    r
}

fn build() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let mut push_mult = |id: &str, t: MultTensor, prov: &str| {
        out.push(CatalogEntry {
            id: id.to_string(),
            dim: t.dim(),
            data: EntryData::Mult(t),
            printed: None,
            listed_under: None,
            parameters: vec![],
            provenance: prov.to_string(),
            note: None,
        })
    };
    push_mult(
        "mu1_2",
        mult(2, &[((2, 2), &[(2, 1)])]),
        "dim-2 algebras: e2e2=e2",
    );
    push_mult("mu2_2", mult(2, &[]), "dim-2 algebras: e2e2=0");
    push_mult(
        "mu1_3",
        mult(
            3,
            &[
                ((2, 2), &[(2, 1)]),
                ((2, 3), &[(3, 1)]),
                ((3, 2), &[(3, 1)]),
                ((3, 3), &[(3, 1)]),
            ],
        ),
        "dim-3 algebras: e2e2=e2, e2e3=e3e2=e3, e3e3=e3",
    );
    push_mult(
        "mu2_3",
        mult(
            3,
            &[
                ((2, 2), &[(2, 1)]),
                ((2, 3), &[(3, 1)]),
                ((3, 2), &[(3, 1)]),
            ],
        ),
        "dim-3 algebras: e2e2=e2, e2e3=e3e2=e3, e3e3=0",
    );
    push_mult(
        "mu3_3",
        mult(3, &[((2, 2), &[(2, 1)])]),
        "dim-3 algebras: e2e2=e2 only",
    );
    push_mult("mu4_3", mult(3, &[]), "dim-3 algebras: only unit products");
    push_mult(
        "mu5_3",
        mult(3, &[((2, 2), &[(2, 1)]), ((2, 3), &[(3, 1)])]),
        "dim-3 algebras: e2 e_j = e_j for j=2,3, no e3e2",
    );

    let d2 = [
        (
            "delta_1_1_2",
            comult(2, &[E11, &[(1, 1, 2), (1, 2, 1), (-2, 2, 2)]], &[1, 0]),
            "dim-2 list for mu1, item 1",
        ),
        (
            "delta_1_2_2",
            comult(2, &[E11, E22], &[1, 1]),
            "dim-2 list for mu1, item 2",
        ),
        (
            "delta_1_3_2",
            comult(2, &[E11, BASE2], &[1, 0]),
            "dim-2 list for mu1, item 3",
        ),
    ];
    for (id, t, prov) in d2 {
        out.push(CatalogEntry {
            id: id.into(),
            dim: 2,
            data: EntryData::Comult(t),
            printed: None,
            listed_under: Some("mu1_2".into()),
            parameters: vec![],
            provenance: prov.into(),
            note: None,
        });
    }

    let raws = vec![
        c3("delta_1_1_3", "mu1_3", [BASE2, &[(1, 1, 3), (1, 3, 1), (-2, 3, 3)]], [1, 0, 0], "dim-3 list for mu1, item 1"),
        c3("delta_1_2_3", "mu1_3", [BASE2, &[(1, 1, 3), (1, 3, 1), (-1, 3, 3)]], [1, 0, 0], "dim-3 list for mu1, item 2"),
        corrected(
            c3("delta_1_3_3", "mu1_3", [BASE2, &[(1, 1, 3), (-1, 2, 3), (1, 3, 1), (-1, 3, 2), (-1, 3, 3)]], [1, 0, 0], "dim-3 list for mu1, item 3"),
            [BASE2, &[(1, 1, 3), (-1, 2, 3), (1, 3, 1), (-1, 3, 2), (1, 3, 3)]],
            "printed tensor is a coalgebra but not compatible with mu1_3; coefficient of e3⊗e3 in Δ(e3) changed -1 → +1 (0 would duplicate item 4)",
        ),
        c3("delta_1_4_3", "mu1_3", [BASE2, &[(1, 1, 3), (-1, 2, 3), (1, 3, 1), (-1, 3, 2)]], [1, 0, 0], "dim-3 list for mu1, item 4"),
        c3("delta_1_5_3", "mu1_3", [BASE2, &[(1, 1, 3), (1, 3, 1), (-1, 2, 3)]], [1, 0, 0], "dim-3 list for mu1, item 5"),
        c3("delta_1_6_3", "mu1_3", [BASE2, &[(1, 1, 3), (1, 3, 1), (-1, 3, 2)]], [1, 0, 0], "dim-3 list for mu1, item 6"),
        c3("delta_1_7_3", "mu1_3", [E22, &[(1, 2, 3), (1, 3, 2), (-2, 3, 3)]], [1, 1, 0], "dim-3 list for mu1, item 7"),
        c3("delta_1_8_3", "mu1_3", [E22, &[(1, 2, 3), (1, 3, 2), (-1, 3, 3)]], [1, 1, 0], "dim-3 list for mu1, item 8"),
        c3(
            "delta_1_9_3",
            "mu1_3",
            [&[(1, 1, 3), (1, 2, 2), (-1, 2, 3), (1, 3, 1), (-1, 3, 2)], &[(1, 1, 3), (1, 3, 1), (-1, 3, 3)]],
            [1, 1, 0],
            "dim-3 list for mu1, item 9",
        ),
        corrected(
            c3(
                "delta_1_10_3",
                "mu1_3",
                [&[(1, 1, 3), (1, 2, 2), (-1, 2, 3), (1, 3, 1), (-1, 3, 2), (1, 3, 3)], &[(1, 1, 3), (1, 3, 1), (-2, 3, 3)]],
                [1, 1, 0],
                "dim-3 list for mu1, item 10",
            ),
            [&[(1, 1, 3), (1, 2, 2), (-1, 2, 3), (1, 3, 1), (-1, 3, 2), (-1, 3, 3)], &[(1, 1, 3), (1, 3, 1), (-2, 3, 3)]],
            "printed tensor is not coassociative; coefficient of e3⊗e3 in Δ(e2) changed +1 → -1",
        ),
        c3(
            "delta_1_11_3",
            "mu1_3",
            [&[(1, 2, 2), (1, 3, 1), (-1, 3, 2)], &[(1, 2, 3), (1, 3, 1), (-1, 3, 3)]],
            [1, 1, 0],
            "dim-3 list for mu1, item 11",
        ),
        c3(
            "delta_1_12_3",
            "mu1_3",
            [&[(1, 1, 3), (1, 2, 2), (-1, 2, 3)], &[(1, 1, 3), (1, 3, 2), (-1, 3, 3)]],
            [1, 1, 0],
            "dim-3 list for mu1, item 12",
        ),
        corrected(
            c3(
                "delta_1_13_3",
                "mu1_3",
                [
                    &[(1, 1, 2), (-1, 1, 3), (1, 2, 1), (-2, 2, 2), (2, 2, 3), (-1, 3, 1), (2, 3, 2), (-1, 3, 3)],
                    &[(1, 2, 3), (1, 3, 2), (-2, 3, 3)],
                ],
                [1, 1, 1],
                "dim-3 list for mu1, item 13",
            ),
            [
                &[(1, 1, 2), (-1, 1, 3), (1, 2, 1), (-2, 2, 2), (2, 2, 3), (-1, 3, 1), (2, 3, 2), (-1, 3, 3)],
                &[(1, 3, 3)],
            ],
            "printed tensor fails the counit axiom; Δ(e3) replaced by e3⊗e3",
        ),
        corrected(
            c3(
                "delta_1_14_3",
                "mu1_3",
                [
                    &[(1, 1, 2), (-1, 1, 3), (1, 2, 1), (-1, 2, 2), (1, 2, 3), (-1, 3, 1), (1, 3, 2)],
                    &[(1, 2, 3), (1, 3, 2), (-1, 3, 3)],
                ],
                [1, 1, 1],
                "dim-3 list for mu1, item 14",
            ),
            [&[(1, 1, 2), (-1, 1, 3), (1, 2, 1), (-1, 2, 2), (1, 2, 3), (-1, 3, 1), (1, 3, 2)], &[(1, 3, 3)]],
            "printed tensor fails the counit axiom; Δ(e3) replaced by e3⊗e3",
        ),
        c3("delta_1_15_3", "mu1_3", [E22, &[(1, 3, 3)]], [1, 1, 1], "dim-3 list for mu1, item 15"),
        c3(
            "delta_1_16_3",
            "mu1_3",
            [E22, &[(1, 2, 2), (-1, 2, 3), (-1, 3, 2), (2, 3, 3)]],
            [1, 1, 1],
            "dim-3 list for mu1, item 16",
        ),
        c3("delta_1_17_3", "mu1_3", [&[(1, 2, 3), (1, 3, 2), (-1, 3, 3)], &[(1, 3, 3)]], [1, 1, 1], "dim-3 list for mu1, item 17"),
        c3("delta_1_18_3", "mu1_3", [&[(1, 2, 1), (-1, 3, 1), (1, 3, 2)], &[(1, 3, 3)]], [1, 1, 1], "dim-3 list for mu1, item 18"),
        c3("delta_2_1_3", "mu2_3", [BASE2, &[(1, 1, 3), (1, 3, 1), (-1, 3, 2)]], [1, 0, 0], "dim-3 list for mu2, item 1"),
        corrected(
            c3("delta_2_2_3", "mu2_3", [BASE2, &[(1, 1, 3), (1, 2, 3), (1, 3, 1)]], [1, 0, 0], "dim-3 list for mu2, item 2"),
            [BASE2, &[(1, 1, 3), (-1, 2, 3), (1, 3, 1)]],
            "printed tensor fails the counit axiom; coefficient of e2⊗e3 in Δ(e3) changed +1 → -1",
        ),
        Raw {
            id: "delta_2_3_3",
            under: "mu2_3",
            data: delta_2_3(&q(0)),
            printed: None,
            prov: "dim-3 list for mu2, item 3 (parameter lambda on e3⊗e3)",
            note: Some("one-parameter family; default lambda = 0"),
        },
        c3("delta_3_1_3", "mu3_3", [E22, &[(1, 2, 3), (1, 3, 2)]], [1, 1, 0], "dim-3 list for mu3, item 1"),
        c3("delta_3_2_3", "mu3_3", [E22, &[(1, 1, 3), (1, 3, 2)]], [1, 1, 0], "dim-3 list for mu3, item 2"),
        c3("delta_3_3_3", "mu3_3", [E22, &[(1, 2, 3), (1, 3, 1)]], [1, 1, 0], "dim-3 list for mu3, item 3"),
        c3("delta_5_1_3", "mu5_3", [E22, &[(1, 2, 3), (1, 3, 2)]], [1, 1, 0], "dim-3 list for mu5, item 1"),
    ];
    for r in raws {
        out.push(CatalogEntry {
            id: r.id.into(),
            dim: 3,
            parameters: if r.id == "delta_2_3_3" {
                vec![("lambda".into(), q(0))]
            } else {
                vec![]
            },
            data: EntryData::Comult(r.data),
            printed: r.printed.map(EntryData::Comult),
            listed_under: Some(r.under.into()),
            provenance: r.prov.into(),
            note: r.note.map(str::to_string),
        });
    }
    for e in &out {
        let ok = match &e.data {
            EntryData::Mult(m) => check_algebra(m, &basis(Field::Q, m.dim(), 0)).map(|r| r.passed),
            EntryData::Comult(c) => check_coalgebra(c).map(|r| r.passed),
        };
        assert!(
            matches!(ok, Ok(true)),
            "catalog entry {} fails its structural precheck",
            e.id
        );
    }
    out
}

/// All entries, validated once on first access.
pub fn entries() -> &'static [CatalogEntry] {
    static CAT: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CAT.get_or_init(build)
}

/// Entry by id; `lambda` instantiates the parameterized family (default 0).
pub fn get(id: &str, lambda: Option<&Scalar>) -> Result<CatalogEntry> {
    let e = entries()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))?;
    let mut e = e.clone();
    if let Some(l) = lambda {
        if e.parameters.is_empty() {
            return Err(Error::Invalid(format!("{id} has no parameters")));
        }
        let l = l.to_field(Field::Q)?;
        e.data = EntryData::Comult(delta_2_3(&l));
        e.parameters = vec![("lambda".into(), l)];
    }
    Ok(e)
}

pub fn get_mult(id: &str) -> Result<MultTensor> {
    get(id, None)?
        .mult()
        .cloned()
        .ok_or_else(|| Error::Invalid(format!("{id} is not a multiplication")))
}

pub fn get_comult(id: &str) -> Result<ComultTensor> {
    get(id, None)?
        .comult()
        .cloned()
        .ok_or_else(|| Error::Invalid(format!("{id} is not a comultiplication")))
}

/// The parameterized family at an arbitrary λ.
pub fn delta_2_3_at(lambda: &Scalar) -> Result<ComultTensor> {
    Ok(delta_2_3(&lambda.to_field(Field::Q)?))
}

pub fn mults(dim: usize) -> Vec<&'static CatalogEntry> {
    entries()
        .iter()
        .filter(|e| e.dim == dim && e.is_mult())
        .collect()
}

/// Comultiplications listed under a multiplication, in list order.
pub fn list_for(mult_id: &str) -> Vec<&'static CatalogEntry> {
    entries()
        .iter()
        .filter(|e| e.listed_under.as_deref() == Some(mult_id))
        .collect()
}

pub fn comults(dim: usize) -> Vec<&'static CatalogEntry> {
    entries()
        .iter()
        .filter(|e| e.dim == dim && !e.is_mult())
        .collect()
}

/// Named bundle examples with their expected verdicts per field.
#[derive(Clone, Debug)]
pub struct Example {
    pub id: &'static str,
    pub bundle: Bundle,
    pub provenance: &'static str,
    /// Verdict of `check_bundle` over Q, and over F2 after reduction.
    pub passes_q: bool,
    pub passes_f2: bool,
    pub note: &'static str,
}

pub fn examples() -> Vec<Example> {
    // basis {1, x, y} stored as e1 = 1, e2 = x, e3 = y
    let m1 = mult(3, &[((2, 2), &[(2, 1)]), ((3, 3), &[(3, 1)])]);
    let m2 = mult(3, &[((2, 2), &[(2, 1)])]);
    let d = comult(3, &[E11, E22, &[(1, 3, 1), (1, 1, 3)]], &[1, 1, 0]);
    let two_b = Bundle::new(
        BundleKind::TwoB,
        basis(Field::Q, 3, 0),
        vec![m1, m2],
        vec![d.clone(), d],
    )
    .expect("well formed");
    let two_two_b = Bundle::new(
        BundleKind::TwoTwoB,
        basis(Field::Q, 3, 0),
        vec![get_mult("mu1_3").unwrap(), get_mult("mu2_3").unwrap()],
        vec![
            get_comult("delta_1_5_3").unwrap(),
            get_comult("delta_2_1_3").unwrap(),
        ],
    )
    .expect("well formed");
    vec![
        Example {
            id: "example_2b_xy",
            bundle: two_b,
            provenance: "3-dim 2-bialgebra on {1,x,y}: xx=x, yy=y for mu1, xx=x for mu2, Δ(x)=x⊗x, Δ(y)=y⊗1+1⊗y",
            passes_q: false,
            passes_f2: true,
            note: "Δ(y)Δ(y) = y⊗1+2y⊗y+1⊗y ≠ Δ(yy) over Q; the 2 vanishes in characteristic 2",
        },
        Example {
            id: "example_22b_3",
            bundle: two_two_b,
            provenance: "3-dim 2-2-bialgebra (mu1_3, mu2_3, delta_1_5_3, delta_2_1_3)",
            passes_q: true,
            passes_f2: true,
            note: "",
        },
    ]
}

/// Every (μ, Δ) pair with Δ taken from μ's own list, as a bialgebra-kinded bundle.
pub fn listed_pairs() -> Vec<(String, String, Bundle)> {
    let mut out = Vec::new();
    for dim in [2, 3] {
        for m in mults(dim) {
            for c in list_for(&m.id) {
                let b = Bundle::pair(
                    BundleKind::Bialgebra,
                    m.mult().unwrap().clone(),
                    c.comult().unwrap().clone(),
                )
                .expect("shapes agree");
                out.push((m.id.clone(), c.id.clone(), b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique() {
        let mut ids: Vec<_> = entries().iter().map(|e| e.id.as_str()).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert_eq!(mults(2).len(), 2);
        assert_eq!(comults(2).len(), 3);
        assert_eq!(mults(3).len(), 5);
        assert_eq!(comults(3).len(), 25);
    }

    #[test]
    fn list_sizes() {
        let sizes: Vec<usize> = ["mu1_3", "mu2_3", "mu3_3", "mu4_3", "mu5_3"]
            .iter()
            .map(|m| list_for(m).len())
            .collect();
        assert_eq!(sizes, vec![18, 3, 3, 0, 1]);
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(get("nonexistent", None), Err(Error::UnknownId(_))));
    }

    #[test]
    fn lambda_binding() {
        let e = get("delta_2_3_3", Some(&q(5))).unwrap();
        assert_eq!(e.comult().unwrap().get(2, 2, 2), &q(5));
        assert!(get("delta_1_1_3", Some(&q(1))).is_err());
    }
}
