//! Recomputes classification counts by running the checkers over catalog combinations.
//!
//! Conventions: a multiplication's counts use its own list; for two different
//! multiplications μa, μb (a before b) the first comultiplication is drawn from μa's list
//! and the second from μb's list; "comultiplications equal" means entrywise equality.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{comults, delta_2_3_at, list_for, mults, CatalogEntry};
use crate::axioms::{check_bialgebra, check_infinitesimal};
use crate::scalar::{Field, Scalar};
use crate::tensor::{basis, ComultTensor, MultTensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultRow {
    pub mult: String,
    pub listed: usize,
    pub bialgebra: usize,
    pub infinitesimal: usize,
    /// Comultiplications of the whole dimension (any list) forming a bialgebra.
    pub bialgebra_any_list: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quad {
    pub mult1: String,
    pub mult2: String,
    pub comult1: String,
    pub comult2: String,
}

impl std::fmt::Display for Quad {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.mult1, self.mult2, self.comult1, self.comult2
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaPoint {
    pub lambda: Scalar,
    pub coalgebra: bool,
    pub bialgebra: bool,
    pub infinitesimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub dim: usize,
    pub printed: bool,
    pub rows: Vec<MultRow>,
    /// Listed (μ, Δ) pairs that are bialgebras and θ=1 infinitesimal.
    pub trivial_2as: Vec<(String, String)>,
    /// (μa, μb, Δ): (μa, Δ) bialgebra, (μb, Δ) infinitesimal, a ≠ b, Δ from either list.
    pub nontrivial_2as: Vec<(String, String, String)>,
    /// 2-bialgebra quadruples by type "(mults equal?, comults equal?)", 1 = equal.
    pub two_b: BTreeMap<(u8, u8), Vec<Quad>>,
    pub two_two_b: Vec<Quad>,
    /// Entrywise-equal comultiplications, including λ instances and verbatim data.
    pub cross_identities: Vec<(String, String)>,
    pub lambda_sweep: Vec<LambdaPoint>,
}

impl CensusTable {
    pub fn type_count(&self, t: (u8, u8)) -> usize {
        self.two_b.get(&t).map_or(0, Vec::len)
    }

    pub fn row(&self, mult: &str) -> Option<&MultRow> {
        self.rows.iter().find(|r| r.mult == mult)
    }

    pub fn bialgebra_counts(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.bialgebra).collect()
    }

    pub fn infinitesimal_counts(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.infinitesimal).collect()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct Verdict {
    bial: bool,
    inf: bool,
}

fn data_of(e: &CatalogEntry, printed: bool) -> ComultTensor {
    match (printed, e.printed_comult()) {
        (true, Some(p)) => p.clone(),
        _ => e.comult().expect("comult entry").clone(),
    }
}

fn verdict(m: &MultTensor, c: &ComultTensor) -> Verdict {
    let u = basis(Field::Q, m.dim(), 0);
    let one = Field::Q.one();
    Verdict {
        bial: check_bialgebra(m, c, &u).map(|r| r.passed).unwrap_or(false),
        inf: check_infinitesimal(m, c, &u, &one)
            .map(|r| r.passed)
            .unwrap_or(false),
    }
}

/// Full recomputation for dimension 2 or 3. `printed` uses verbatim catalog data.
pub fn census(dim: usize, printed: bool) -> CensusTable {
    let ms: Vec<&CatalogEntry> = mults(dim);
    let cs: Vec<&CatalogEntry> = comults(dim);
    let cdata: Vec<ComultTensor> = cs.iter().map(|e| data_of(e, printed)).collect();
    let cidx: BTreeMap<&str, usize> = cs
        .iter()
        .enumerate()
        .map(|(i, e)| (e.id.as_str(), i))
        .collect();

    // verdict matrix over every (μ, Δ) of the dimension
    let grid: Vec<(usize, usize)> = (0..ms.len())
        .flat_map(|a| (0..cs.len()).map(move |c| (a, c)))
        .collect();
    let flat: Vec<Verdict> = grid
        .par_iter()
        .map(|&(a, c)| verdict(ms[a].mult().unwrap(), &cdata[c]))
        .collect();
    let v = |a: usize, c: usize| flat[a * cs.len() + c];

    let lists: Vec<Vec<usize>> = ms
        .iter()
        .map(|m| {
            list_for(&m.id)
                .iter()
                .map(|e| cidx[e.id.as_str()])
                .collect()
        })
        .collect();

    let mut rows = Vec::new();
    let mut trivial_2as = Vec::new();
    for (a, m) in ms.iter().enumerate() {
        let l = &lists[a];
        rows.push(MultRow {
            mult: m.id.clone(),
            listed: l.len(),
            bialgebra: l.iter().filter(|&&c| v(a, c).bial).count(),
            infinitesimal: l.iter().filter(|&&c| v(a, c).inf).count(),
            bialgebra_any_list: (0..cs.len()).filter(|&c| v(a, c).bial).count(),
        });
        for &c in l {
            if v(a, c).bial && v(a, c).inf {
                trivial_2as.push((m.id.clone(), cs[c].id.clone()));
            }
        }
    }

    let mut nontrivial_2as = Vec::new();
    for a in 0..ms.len() {
        for b in 0..ms.len() {
            if a == b {
                continue;
            }
            let mut pool: Vec<usize> = lists[a].iter().chain(&lists[b]).copied().collect();
            pool.sort();
            pool.dedup();
            for c in pool {
                if v(a, c).bial && v(b, c).inf {
                    nontrivial_2as.push((ms[a].id.clone(), ms[b].id.clone(), cs[c].id.clone()));
                }
            }
        }
    }

    let quad = |a: usize, b: usize, c: usize, d: usize| Quad {
        mult1: ms[a].id.clone(),
        mult2: ms[b].id.clone(),
        comult1: cs[c].id.clone(),
        comult2: cs[d].id.clone(),
    };
    let mut two_b: BTreeMap<(u8, u8), Vec<Quad>> = BTreeMap::new();
    for t in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        two_b.insert(t, vec![]);
    }
    let mut two_two_b = Vec::new();
    for a in 0..ms.len() {
        for b in a..ms.len() {
            let pairs: Vec<(usize, usize)> = if a == b {
                let l = &lists[a];
                (0..l.len())
                    .flat_map(|x| (x..l.len()).map(move |y| (l[x], l[y])))
                    .collect()
            } else {
                lists[a]
                    .iter()
                    .flat_map(|&c| lists[b].iter().map(move |&d| (c, d)))
                    .collect()
            };
            let mults_equal = ms[a].mult() == ms[b].mult();
            for (c, d) in pairs {
                if v(a, c).bial && v(a, d).bial && v(b, c).bial && v(b, d).bial {
                    let t = (
                        if mults_equal { 1 } else { 2 },
                        if cdata[c] == cdata[d] { 1 } else { 2 },
                    );
                    two_b.get_mut(&t).unwrap().push(quad(a, b, c, d));
                }
                if v(a, c).bial && v(b, d).bial && v(a, d).inf && v(b, c).inf {
                    two_two_b.push(quad(a, b, c, d));
                }
            }
        }
    }

    let mut cross_identities = Vec::new();
    let mut named: Vec<(String, ComultTensor)> = cs
        .iter()
        .zip(&cdata)
        .map(|(e, d)| (e.id.clone(), d.clone()))
        .collect();
    for e in &cs {
        if let Some(p) = e.printed_comult() {
            if !printed {
                named.push((format!("{}[printed]", e.id), p.clone()));
            }
        }
    }
    let mut lambda_sweep = Vec::new();
    if let Some(fam) = cs.iter().find(|e| !e.parameters.is_empty()) {
        let host = ms
            .iter()
            .position(|m| Some(&m.id) == fam.listed_under.as_ref())
            .expect("family is listed");
        for l in [-1i64, 1] {
            let lam = Field::Q.int(l);
            let t = delta_2_3_at(&lam).expect("rational lambda");
            named.push((format!("{}[lambda={l}]", fam.id), t.clone()));
            let vv = verdict(ms[host].mult().unwrap(), &t);
            lambda_sweep.push(LambdaPoint {
                lambda: lam,
                coalgebra: crate::axioms::check_coalgebra(&t)
                    .map(|r| r.passed)
                    .unwrap_or(false),
                bialgebra: vv.bial,
                infinitesimal: vv.inf,
            });
        }
    }
    for x in 0..named.len() {
        for y in x + 1..named.len() {
            if named[x].1 == named[y].1 {
                cross_identities.push((named[x].0.clone(), named[y].0.clone()));
            }
        }
    }

    CensusTable {
        dim,
        printed,
        rows,
        trivial_2as,
        nontrivial_2as,
        two_b,
        two_two_b,
        cross_identities,
        lambda_sweep,
    }
}
