use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use bialg::axioms::system::{export_system, parse_text, violated, Assignment};
use bialg::catalog::{self, census::CensusTable, published, EntryData};
use bialg::classify::{
    compare_over_primes, discover_fp, fingerprint, isom_search_fp, isom_search_q_bounded,
    DiscoverMode, IsoVerdict, DEFAULT_BUDGET,
};
use bialg::constructions::{Built, UnitalAlgebraInput};
use bialg::registry::Registry;
use bialg::tensor::{basis, basis_index};
use bialg::{
    check_algebra, check_bialgebra, check_bundle, check_coalgebra, Bundle, BundleKind, CheckReport,
};
use bialg::{ComultTensor, Field, LinearEndo, Scalar};
use bialg_cli::io::StructureFile;
use bialg_cli::{exit, exit_code_for, parse_field};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bialg",
    version,
    about = "Exact checks and searches for (bi)algebra structure constants"
)]
struct Cli {
    /// Work over Q, F<p> or a bare prime; file entries are reduced.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    /// Parameter of the infinitesimal compatibility (default 1).
    #[arg(long, global = true)]
    theta: Option<String>,
    /// Maximum number of candidates an exhaustive search may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    machine_readable: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the axiom check named by the file's kind (or --kind).
    Check {
        file: PathBuf,
        #[arg(long)]
        kind: Option<String>,
    },
    /// Build k1 | k2 (one input) or 2as | 2b | 22b (two inputs).
    Construct {
        kind: String,
        #[arg(required = true, num_args = 1..=2)]
        inputs: Vec<PathBuf>,
    },
    /// Recompute the classification counts for dimension 2 or 3.
    Census {
        dim: usize,
        /// Use the verbatim transcription instead of the corrected entries.
        #[arg(long)]
        printed: bool,
    },
    /// Browse, re-check or export the built-in tables.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Decide isomorphism of two structure files.
    Isom {
        a: PathBuf,
        b: PathBuf,
        /// Search over F_p (same as --field F<p>).
        #[arg(long)]
        prime: Option<u32>,
        /// Entry bound for the search over Q.
        #[arg(long, default_value_t = 1)]
        bound: i64,
    },
    /// Enumerate every compatible comultiplication of the file's multiplication over F_p.
    Discover {
        file: PathBuf,
        #[arg(long)]
        prime: Option<u32>,
        /// bialgebra | infinitesimal
        #[arg(long, default_value = "bialgebra")]
        mode: String,
    },
    /// Print the component system of a 2as or 2b bundle, or evaluate one on a structure.
    ExportSystem {
        n: usize,
        kind: String,
        /// Structure file to evaluate the system on.
        #[arg(long)]
        eval: Option<PathBuf>,
        /// Read the system from this file ("-" for stdin) instead of generating it.
        #[arg(long)]
        system: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Show {
        id: String,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Re-check every entry and example.
    Verify,
    /// Write a structure file for every entry, listed pair and example.
    Export {
        dir: PathBuf,
    },
}

struct Ctx {
    field: Option<Field>,
    theta: Option<String>,
    budget: u128,
    output: Option<PathBuf>,
    machine: bool,
}

impl Ctx {
    fn emit(&self, text: &str) -> anyhow::Result<()> {
        match &self.output {
            Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn emit_json(&self, v: &Value) -> anyhow::Result<()> {
        self.emit(&format!("{}\n", serde_json::to_string_pretty(v)?))
    }

    fn theta_in(&self, field: Field, fallback: Option<&Scalar>) -> anyhow::Result<Scalar> {
        match (&self.theta, fallback) {
            (Some(t), _) => Ok(field.parse(t).context("--theta")?),
            (None, Some(t)) => Ok(t.clone()),
            (None, None) => Ok(field.one()),
        }
    }

    fn load(&self, path: &Path) -> anyhow::Result<(StructureFile, Bundle)> {
        let f = StructureFile::load(path)?;
        let b = f.to_bundle(self.field)?;
        Ok((f, b))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        field: cli.field,
        theta: cli.theta,
        budget: cli.budget,
        output: cli.output,
        machine: cli.machine_readable,
    };
    let r = match cli.cmd {
        Cmd::Check { file, kind } => cmd_check(&ctx, &file, kind.as_deref()),
        Cmd::Construct { kind, inputs } => cmd_construct(&ctx, &kind, &inputs),
        Cmd::Census { dim, printed } => cmd_census(&ctx, dim, printed),
        Cmd::Catalog { action } => cmd_catalog(&ctx, action),
        Cmd::Isom { a, b, prime, bound } => cmd_isom(&ctx, &a, &b, prime, bound),
        Cmd::Discover { file, prime, mode } => cmd_discover(&ctx, &file, prime, &mode),
        Cmd::ExportSystem {
            n,
            kind,
            eval,
            system,
        } => cmd_export(&ctx, n, &kind, eval.as_deref(), system.as_deref()),
    };
    match r {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if let Some(bialg::Error::Postcondition(rep)) = e
                .chain()
                .find_map(|c| c.downcast_ref::<bialg::Error>())
                .filter(|x| matches!(x, bialg::Error::Postcondition(_)))
            {
                eprint!("{}", render_report(rep));
            }
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn render_report(r: &CheckReport) -> String {
    let mut s = String::new();
    for sec in &r.sections {
        let note = if sec.precheck_failed {
            " (precheck failed)"
        } else {
            ""
        };
        s.push_str(&format!("  {}: {}{note}\n", sec.scope, verdict(sec.passed)));
    }
    for x in &r.residuals {
        let idx: Vec<String> = x.index.iter().map(usize::to_string).collect();
        s.push_str(&format!(
            "    {} {} [{}] = {}\n",
            x.scope,
            x.axiom,
            idx.join(","),
            x.value
        ));
    }
    s
}

fn cmd_check(ctx: &Ctx, path: &Path, kind: Option<&str>) -> anyhow::Result<u8> {
    let (file, b) = ctx.load(path)?;
    let reg = Registry::default();
    let name = kind.unwrap_or(b.kind().tag());
    let check = reg.check(name)?;
    let theta = ctx.theta_in(b.field(), b.kind().theta())?;
    let report = check.run(&b, &theta)?;
    if ctx.machine {
        ctx.emit_json(&json!({
            "command": "check",
            "name": file.name,
            "kind": name,
            "field": b.field().name(),
            "theta": (name == "infinitesimal").then(|| theta.to_string()),
            "passed": report.passed,
            "report": report.to_json(),
        }))?;
    } else {
        let th = if name == "infinitesimal" {
            format!(", theta={theta}")
        } else {
            String::new()
        };
        ctx.emit(&format!(
            "check {name} on {} over {}{th}\n{}result: {}\n",
            file.name,
            b.field(),
            render_report(&report),
            verdict(report.passed)
        ))?;
    }
    Ok(if report.passed {
        exit::PASS
    } else {
        exit::FAIL
    })
}

fn algebra_input(ctx: &Ctx, path: &Path) -> anyhow::Result<(String, UnitalAlgebraInput)> {
    let (file, b) = ctx.load(path)?;
    let m = b
        .mults()
        .first()
        .ok_or_else(|| anyhow!("{}: no multiplication", path.display()))?;
    let u = basis_index(b.unit())
        .ok_or_else(|| anyhow!("{}: unit must be a basis vector", path.display()))?;
    Ok((file.name, UnitalAlgebraInput::new(m.clone(), u)?))
}

fn output_paths(base: &Path, count: usize) -> Vec<PathBuf> {
    if count == 1 {
        return vec![base.to_path_buf()];
    }
    let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    let ext = base.extension().and_then(|s| s.to_str()).unwrap_or("json");
    (1..=count)
        .map(|i| base.with_file_name(format!("{stem}_B{i}.{ext}")))
        .collect()
}

fn cmd_construct(ctx: &Ctx, kind: &str, inputs: &[PathBuf]) -> anyhow::Result<u8> {
    let reg = Registry::default();
    let c = reg.construction(kind)?;
    let parsed = inputs
        .iter()
        .map(|p| algebra_input(ctx, p))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let names: Vec<&str> = parsed.iter().map(|(n, _)| n.as_str()).collect();
    let algs: Vec<UnitalAlgebraInput> = parsed.iter().map(|(_, a)| a.clone()).collect();
    let built: Vec<Built> = c.build(&algs)?;
    let label = |i: usize| {
        let base = format!("{kind}({})", names.join(","));
        if built.len() > 1 {
            format!("{base}#B{}", i + 1)
        } else {
            base
        }
    };
    let files: Vec<StructureFile> = built
        .iter()
        .enumerate()
        .map(|(i, b)| StructureFile::from_bundle(&label(i), &b.bundle))
        .collect();
    let mut written = Vec::new();
    match &ctx.output {
        Some(base) => {
            for (f, p) in files.iter().zip(output_paths(base, files.len())) {
                f.save(&p)?;
                written.push(p.display().to_string());
            }
        }
        None if !ctx.machine => {
            for f in &files {
                print!("{}", f.to_text());
            }
        }
        None => {}
    }
    if ctx.machine {
        let outs: Vec<Value> = files
            .iter()
            .zip(&built)
            .map(|(f, b)| {
                json!({
                    "name": f.name,
                    "structure": serde_json::to_value(f).unwrap(),
                    "report": b.report.to_json(),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(
                &json!({"command": "construct", "kind": kind, "written": written, "outputs": outs})
            )?
        );
    } else {
        for (i, b) in built.iter().enumerate() {
            eprint!(
                "{}: self-check {}\n{}",
                label(i),
                verdict(b.report.passed),
                render_report(&b.report)
            );
        }
        for p in &written {
            eprintln!("wrote {p}");
        }
    }
    Ok(exit::PASS)
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "agree"
    } else {
        "DIFFER"
    }
}

fn census_json(t: &CensusTable) -> Value {
    let quads = |v: &[bialg::catalog::census::Quad]| -> Vec<Value> {
        v.iter()
            .map(|q| json!([q.mult1, q.mult2, q.comult1, q.comult2]))
            .collect()
    };
    json!({
        "dim": t.dim,
        "printed": t.printed,
        "rows": t.rows.iter().map(|r| json!({
            "mult": r.mult, "listed": r.listed, "bialgebra": r.bialgebra,
            "infinitesimal": r.infinitesimal, "bialgebra_any_list": r.bialgebra_any_list,
        })).collect::<Vec<_>>(),
        "trivial_2as": t.trivial_2as.iter().map(|(m, c)| json!([m, c])).collect::<Vec<_>>(),
        "nontrivial_2as": t.nontrivial_2as.iter().map(|(a, b, c)| json!([a, b, c])).collect::<Vec<_>>(),
        "two_b": t.two_b.iter().map(|((i, j), v)| json!({
            "type": [i, j], "count": v.len(), "quads": quads(v),
        })).collect::<Vec<_>>(),
        "two_two_b": quads(&t.two_two_b),
        "cross_identities": t.cross_identities.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
        "lambda_sweep": t.lambda_sweep.iter().map(|l| json!({
            "lambda": l.lambda.to_string(), "coalgebra": l.coalgebra,
            "bialgebra": l.bialgebra, "infinitesimal": l.infinitesimal,
        })).collect::<Vec<_>>(),
    })
}

fn cmd_census(ctx: &Ctx, dim: usize, printed: bool) -> anyhow::Result<u8> {
    let Some(pubd) = published::for_dim(dim) else {
        bail!(bialg::Error::DimLimit(dim, 3));
    };
    if dim < 2 {
        bail!(bialg::Error::DimLimit(dim, 3));
    }
    let t = catalog::census::census(dim, printed);
    if ctx.machine {
        return ctx.emit_json(&census_json(&t)).map(|_| exit::PASS);
    }
    let mut s = format!(
        "census dim {dim} ({} catalog data)\n\n",
        if printed { "verbatim" } else { "corrected" }
    );
    s.push_str(&format!(
        "{:<8} {:>6} {:>10} {:>10} {:>14} {:>10}  {}\n",
        "algebra", "listed", "bialgebra", "published", "infinitesimal", "published", ""
    ));
    for (r, (id, pb, pi)) in t.rows.iter().zip(pubd.rows) {
        debug_assert_eq!(&r.mult, id);
        let ok = r.bialgebra == *pb && r.infinitesimal == *pi;
        s.push_str(&format!(
            "{:<8} {:>6} {:>10} {:>10} {:>14} {:>10}  {}\n",
            r.mult,
            r.listed,
            r.bialgebra,
            pb,
            r.infinitesimal,
            pi,
            mark(ok)
        ));
    }
    let got: Vec<(String, String)> = t.trivial_2as.clone();
    let want: Vec<(String, String)> = pubd
        .trivial_2as
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    s.push_str(&format!(
        "\ntrivial 2as (same multiplication): {} (published {})  {}\n",
        got.len(),
        want.len(),
        mark(got == want)
    ));
    for p in got.iter().filter(|p| !want.contains(p)) {
        s.push_str(&format!("  extra   ({}, {})\n", p.0, p.1));
    }
    for p in want.iter().filter(|p| !got.contains(p)) {
        s.push_str(&format!("  missing ({}, {})\n", p.0, p.1));
    }
    s.push_str(&format!(
        "\nnon-trivial 2as (different multiplications): {}\n",
        t.nontrivial_2as.len()
    ));
    for (a, b, c) in &t.nontrivial_2as {
        let listed = pubd
            .nontrivial_2as
            .iter()
            .any(|x| (x.0, x.1, x.2) == (a.as_str(), b.as_str(), c.as_str()));
        s.push_str(&format!(
            "  ({a}, {b}, {c}){}\n",
            if listed { "  [published]" } else { "" }
        ));
    }
    for x in pubd.nontrivial_2as {
        if !t
            .nontrivial_2as
            .iter()
            .any(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()) == *x)
        {
            s.push_str(&format!(
                "  missing published ({}, {}, {})\n",
                x.0, x.1, x.2
            ));
        }
    }
    s.push_str("\n2-bialgebra types (catalog combinations):\n");
    for (ty, want) in pubd.two_b {
        let n = t.type_count(ty);
        s.push_str(&format!(
            "  type ({},{}): {n} (published {want})  {}\n",
            ty.0,
            ty.1,
            mark(n == want)
        ));
        if ty.0 == 2 {
            for q in &t.two_b[&ty] {
                s.push_str(&format!("    {q}\n"));
            }
        }
    }
    for x in pubd.two_b_listed {
        let found = t.two_b.values().flatten().any(|q| {
            (
                q.mult1.as_str(),
                q.mult2.as_str(),
                q.comult1.as_str(),
                q.comult2.as_str(),
            ) == *x
        });
        s.push_str(&format!(
            "  published ({}, {}, {}, {}): {}\n",
            x.0,
            x.1,
            x.2,
            x.3,
            if found { "found" } else { "NOT FOUND" }
        ));
    }
    let mixed: Vec<_> = t.two_two_b.iter().filter(|q| q.mult1 != q.mult2).collect();
    s.push_str(&format!(
        "\n2-2-bialgebras: {} combinations ({} with distinct multiplications), published {}\n",
        t.two_two_b.len(),
        mixed.len(),
        pubd.two_two_b.len()
    ));
    for q in &t.two_two_b {
        let listed = pubd.two_two_b.iter().any(|x| {
            (
                q.mult1.as_str(),
                q.mult2.as_str(),
                q.comult1.as_str(),
                q.comult2.as_str(),
            ) == *x
        });
        if listed || q.mult1 != q.mult2 || dim == 2 {
            s.push_str(&format!(
                "  {q}{}\n",
                if listed { "  [published]" } else { "" }
            ));
        }
    }
    if !t.cross_identities.is_empty() {
        s.push_str("\nentrywise-equal comultiplications:\n");
        for (a, b) in &t.cross_identities {
            s.push_str(&format!("  {a} = {b}\n"));
        }
    }
    if !t.lambda_sweep.is_empty() {
        s.push_str("\nparameter family sweep:\n");
        for l in &t.lambda_sweep {
            s.push_str(&format!(
                "  lambda={}: coalgebra {}, bialgebra {}, infinitesimal {}\n",
                l.lambda,
                verdict(l.coalgebra),
                verdict(l.bialgebra),
                verdict(l.infinitesimal)
            ));
        }
    }
    ctx.emit(&s)?;
    Ok(exit::PASS)
}

fn entry_bundle(e: &catalog::CatalogEntry) -> anyhow::Result<Bundle> {
    Ok(match &e.data {
        EntryData::Mult(m) => Bundle::new(
            BundleKind::Algebra,
            basis(Field::Q, e.dim, 0),
            vec![m.clone()],
            vec![],
        )?,
        EntryData::Comult(c) => Bundle::new(
            BundleKind::Coalgebra,
            basis(Field::Q, e.dim, 0),
            vec![],
            vec![c.clone()],
        )?,
    })
}

/// `delta_1_2_2` → `delta_1_2` (the dimension is carried by the multiplication id).
fn short_comult(id: &str) -> &str {
    id.rsplit_once('_').map_or(id, |(head, _)| head)
}

fn cmd_catalog(ctx: &Ctx, action: CatalogCmd) -> anyhow::Result<u8> {
    match action {
        CatalogCmd::List => {
            let es = catalog::entries();
            if ctx.machine {
                let v: Vec<Value> = es
                    .iter()
                    .map(|e| {
                        json!({
                            "id": e.id, "dim": e.dim,
                            "type": if e.is_mult() { "mult" } else { "comult" },
                            "listed_under": e.listed_under,
                            "corrected": e.is_corrected(),
                            "parameters": e.parameters.iter().map(|(k, v)| json!([k, v.to_string()])).collect::<Vec<_>>(),
                            "provenance": e.provenance,
                        })
                    })
                    .collect();
                ctx.emit_json(&Value::from(v))?;
            } else {
                let mut s = String::new();
                for e in es {
                    let flag = if e.is_corrected() { " [corrected]" } else { "" };
                    s.push_str(&format!("{:<14} {}{flag}\n", e.id, e.provenance));
                }
                for ex in catalog::examples() {
                    s.push_str(&format!("{:<14} {}\n", ex.id, ex.provenance));
                }
                ctx.emit(&s)?;
            }
            Ok(exit::PASS)
        }
        CatalogCmd::Show { id, lambda } => {
            if let Some(ex) = catalog::examples().into_iter().find(|x| x.id == id) {
                let f = StructureFile::from_bundle(ex.id, &ex.bundle);
                return show(ctx, &f, ex.provenance, Some(ex.note), &[]).map(|_| exit::PASS);
            }
            let lam = lambda.as_deref().map(|l| Field::Q.parse(l)).transpose()?;
            let e = catalog::get(&id, lam.as_ref())?;
            let f = StructureFile::from_bundle(&e.id, &entry_bundle(&e)?);
            show(ctx, &f, &e.provenance, e.note.as_deref(), &e.parameters)?;
            Ok(exit::PASS)
        }
        CatalogCmd::Verify => catalog_verify(ctx),
        CatalogCmd::Export { dir } => {
            std::fs::create_dir_all(&dir)?;
            let mut n = 0;
            let mut save = |name: &str, b: &Bundle| -> anyhow::Result<()> {
                StructureFile::from_bundle(name, b).save(&dir.join(format!("{name}.json")))?;
                n += 1;
                Ok(())
            };
            for e in catalog::entries() {
                save(&e.id, &entry_bundle(e)?)?;
            }
            for (m, c, b) in catalog::listed_pairs() {
                save(&format!("{m}_{}", short_comult(&c)), &b)?;
            }
            for e in catalog::entries() {
                if let (Some(p), Some(m)) = (e.printed_comult(), &e.listed_under) {
                    let b = Bundle::pair(BundleKind::Bialgebra, catalog::get_mult(m)?, p.clone())?;
                    save(&format!("{m}_{}_printed", short_comult(&e.id)), &b)?;
                }
            }
            for ex in catalog::examples() {
                save(ex.id, &ex.bundle)?;
            }
            let triples = published::DIM2
                .trivial_2as
                .iter()
                .map(|(m, c)| (*m, *m, *c))
                .chain(published::DIM3.nontrivial_2as.iter().copied());
            for (m1, m2, c) in triples {
                let b = Bundle::new(
                    BundleKind::TwoAs,
                    basis(Field::Q, catalog::get(c, None)?.dim, 0),
                    vec![catalog::get_mult(m1)?, catalog::get_mult(m2)?],
                    vec![catalog::get_comult(c)?],
                )?;
                save(&format!("2as_{m1}_{m2}_{}", short_comult(c)), &b)?;
            }
            eprintln!("wrote {n} files to {}", dir.display());
            Ok(exit::PASS)
        }
    }
}

fn show(
    ctx: &Ctx,
    f: &StructureFile,
    prov: &str,
    note: Option<&str>,
    params: &[(String, Scalar)],
) -> anyhow::Result<()> {
    if ctx.machine {
        return ctx.emit_json(&json!({
            "id": f.name,
            "provenance": prov,
            "note": note,
            "parameters": params.iter().map(|(k, v)| json!([k, v.to_string()])).collect::<Vec<_>>(),
            "structure": serde_json::to_value(f)?,
        }));
    }
    let mut s = format!("# {}\n# {prov}\n", f.name);
    if let Some(n) = note.filter(|n| !n.is_empty()) {
        s.push_str(&format!("# note: {n}\n"));
    }
    for (k, v) in params {
        s.push_str(&format!("# {k} = {v}\n"));
    }
    s.push_str(&f.to_text());
    ctx.emit(&s)
}

fn catalog_verify(ctx: &Ctx) -> anyhow::Result<u8> {
    let mut lines = Vec::new();
    let mut all = true;
    let mut record = |what: String, ok: bool| {
        all &= ok;
        lines.push((what, ok));
    };
    for e in catalog::entries() {
        let u = basis(Field::Q, e.dim, 0);
        match &e.data {
            EntryData::Mult(m) => record(format!("{} algebra", e.id), check_algebra(m, &u)?.passed),
            EntryData::Comult(c) => {
                record(format!("{} coalgebra", e.id), check_coalgebra(c)?.passed);
                if let Some(m) = &e.listed_under {
                    let mt = catalog::get_mult(m)?;
                    record(
                        format!("{} bialgebra with {m}", e.id),
                        check_bialgebra(&mt, c, &u)?.passed,
                    );
                }
            }
        }
    }
    for ex in catalog::examples() {
        let q = check_bundle(&ex.bundle)?.passed;
        let f2 = check_bundle(&ex.bundle.to_field(Field::fp(2)?)?)?.passed;
        record(
            format!(
                "{} over Q {} (expected {}), over F2 {} (expected {})",
                ex.id,
                verdict(q),
                verdict(ex.passes_q),
                verdict(f2),
                verdict(ex.passes_f2)
            ),
            q == ex.passes_q && f2 == ex.passes_f2,
        );
    }
    if ctx.machine {
        ctx.emit_json(&json!({
            "command": "catalog verify",
            "passed": all,
            "checks": lines.iter().map(|(w, ok)| json!({"check": w, "passed": ok})).collect::<Vec<_>>(),
        }))?;
    } else {
        let mut s: String = lines
            .iter()
            .map(|(w, ok)| format!("{} {w}\n", verdict(*ok)))
            .collect();
        s.push_str(&format!("result: {}\n", verdict(all)));
        ctx.emit(&s)?;
    }
    Ok(if all { exit::PASS } else { exit::FAIL })
}

fn endo_text(f: &LinearEndo) -> String {
    let n = f.dim();
    (0..n)
        .map(|r| {
            let row: Vec<String> = (0..n).map(|c| f.get(r, c).to_string()).collect();
            format!("  [{}]\n", row.join(", "))
        })
        .collect()
}

fn endo_json(f: &LinearEndo) -> Value {
    let n = f.dim();
    Value::from(
        (0..n)
            .map(|r| Value::from((0..n).map(|c| f.get(r, c).to_string()).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
    )
}

fn cmd_isom(ctx: &Ctx, a: &Path, b: &Path, prime: Option<u32>, bound: i64) -> anyhow::Result<u8> {
    let field = match (prime, ctx.field) {
        (Some(p), _) => Some(Field::fp(p)?),
        (None, f) => f,
    };
    let (fa, ba) = (StructureFile::load(a)?, StructureFile::load(b)?);
    let (ba, bb) = (fa.to_bundle(field)?, ba.to_bundle(field)?);
    let (status, witness, detail): (&str, Option<LinearEndo>, String);
    if let Field::Fp(p) = ba.field() {
        match isom_search_fp(&ba, &bb, ctx.budget)? {
            Some(w) => {
                (status, witness, detail) =
                    ("isomorphic", Some(w), format!("witness found over F{p}"))
            }
            None => {
                (status, witness, detail) = (
                    "not isomorphic",
                    None,
                    format!("exhaustive search over F{p} found no isomorphism"),
                )
            }
        }
    } else if fingerprint(&ba) != fingerprint(&bb) {
        (status, witness, detail) = (
            "not isomorphic",
            None,
            "isomorphism invariants differ".into(),
        );
    } else if let Some(w) = isom_search_q_bounded(&ba, &bb, bound, ctx.budget)? {
        (status, witness, detail) = (
            "isomorphic",
            Some(w),
            format!("witness with entries in [-{bound},{bound}]"),
        );
    } else {
        let primes = [2, 3, 5, 7];
        match compare_over_primes(&ba, &bb, &primes, ctx.budget)? {
            IsoVerdict::NotIsomorphicOver(ps) => {
                (status, witness, detail) = (
                    "undecided",
                    None,
                    format!("no bounded witness over Q; not isomorphic over F_p for p in {ps:?} (heuristic only)"),
                )
            }
            _ => (status, witness, detail) = ("undecided", None, "no bounded witness over Q".into()),
        }
    }
    if ctx.machine {
        ctx.emit_json(&json!({
            "command": "isom",
            "a": fa.name,
            "b": ba_name(b),
            "field": ba.field().name(),
            "status": status,
            "detail": detail,
            "witness": witness.as_ref().map(endo_json),
        }))?;
    } else {
        let mut s = format!("{status}: {detail}\n");
        if let Some(w) = &witness {
            s.push_str(
                "f (columns are images of e1..en; f maps the first structure to the second):\n",
            );
            s.push_str(&endo_text(w));
        }
        ctx.emit(&s)?;
    }
    Ok(if status == "isomorphic" {
        exit::PASS
    } else {
        exit::FAIL
    })
}

fn ba_name(p: &Path) -> String {
    p.display().to_string()
}

fn comult_text(c: &ComultTensor) -> String {
    let n = c.dim();
    let mut s = String::new();
    for i in 0..n {
        let mut terms = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let v = c.get(i, j, k);
                if !v.is_zero() {
                    let coef = if v.is_one() {
                        String::new()
                    } else {
                        format!("{v}*")
                    };
                    terms.push(format!("{coef}e{}⊗e{}", j + 1, k + 1));
                }
            }
        }
        let rhs = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        s.push_str(&format!("Δ(e{}) = {rhs}; ", i + 1));
    }
    let xi: Vec<String> = c.counit().iter().map(|x| x.to_string()).collect();
    s.push_str(&format!("ε = ({})", xi.join(", ")));
    s
}

fn cmd_discover(ctx: &Ctx, path: &Path, prime: Option<u32>, mode: &str) -> anyhow::Result<u8> {
    let p = match (prime, ctx.field) {
        (Some(p), _) => p,
        (None, Some(Field::Fp(p))) => p,
        _ => bail!(bialg::Error::Invalid(
            "discover needs --prime or --field F<p>".into()
        )),
    };
    let field = Field::fp(p)?;
    let (file, b) = ctx.load(path)?;
    let b = b.to_field(field)?;
    let m = b
        .mults()
        .first()
        .ok_or_else(|| anyhow!("{}: no multiplication", path.display()))?;
    let dm = match mode {
        "bialgebra" => DiscoverMode::Bialgebra,
        "infinitesimal" => DiscoverMode::Infinitesimal(ctx.theta_in(field, None)?),
        other => bail!(bialg::Error::UnknownStrategy(other.to_string())),
    };
    let found = discover_fp(m, p, &dm, ctx.budget)?;
    let mode_label = match &dm {
        DiscoverMode::Bialgebra => "bialgebra".to_string(),
        DiscoverMode::Infinitesimal(t) => format!("infinitesimal(theta={t})"),
    };
    if ctx.machine {
        let kind = match &dm {
            DiscoverMode::Bialgebra => BundleKind::Bialgebra,
            DiscoverMode::Infinitesimal(t) => BundleKind::Infinitesimal(t.clone()),
        };
        let outs: Vec<Value> = found
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let bb = Bundle::pair(kind.clone(), m.clone(), c.clone()).expect("shapes agree");
                serde_json::to_value(StructureFile::from_bundle(
                    &format!("{}#{}", file.name, i + 1),
                    &bb,
                ))
                .unwrap()
            })
            .collect();
        ctx.emit_json(&json!({
            "command": "discover", "name": file.name, "field": field.name(),
            "mode": mode_label, "count": found.len(), "structures": outs,
        }))?;
    } else {
        let mut s = format!(
            "{} compatible comultiplication(s) for {} over {field} ({mode_label})\n",
            found.len(),
            file.name
        );
        for (i, c) in found.iter().enumerate() {
            s.push_str(&format!("{:>4}. {}\n", i + 1, comult_text(c)));
        }
        ctx.emit(&s)?;
    }
    Ok(exit::PASS)
}

fn cmd_export(
    ctx: &Ctx,
    n: usize,
    kind: &str,
    eval: Option<&Path>,
    system: Option<&Path>,
) -> anyhow::Result<u8> {
    let k = match kind {
        "2as" => BundleKind::TwoAs,
        "2b" => BundleKind::TwoB,
        other => bail!(bialg::Error::Invalid(format!(
            "component systems exist for 2as and 2b, not {other:?}"
        ))),
    };
    let sys = export_system(n, &k)?;
    let Some(eval) = eval else {
        ctx.emit(&sys.to_text())?;
        return Ok(exit::PASS);
    };
    let polys = match system {
        None => sys.equations.iter().map(|e| e.poly.clone()).collect(),
        Some(p) => {
            let mut text = String::new();
            if p == Path::new("-") {
                std::io::stdin().read_to_string(&mut text)?;
            } else {
                text = std::fs::read_to_string(p)
                    .with_context(|| format!("reading {}", p.display()))?;
            }
            parse_text(&text)?
        }
    };
    let (file, b) = ctx.load(eval)?;
    if b.dim() != n {
        bail!(bialg::Error::Dim {
            expected: n,
            got: b.dim()
        });
    }
    let bad = violated(&polys, &Assignment::from_bundle(&b)?)?;
    if ctx.machine {
        ctx.emit_json(&json!({
            "command": "export-system", "kind": kind, "dim": n, "name": file.name,
            "equations": polys.len(), "violated": bad.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "passed": bad.is_empty(),
        }))?;
    } else {
        let mut s = format!(
            "{} of {} equations nonzero on {}\n",
            bad.len(),
            polys.len(),
            file.name
        );
        for i in &bad {
            s.push_str(&format!("  #{}: {}\n", i + 1, polys[*i]));
        }
        s.push_str(&format!("result: {}\n", verdict(bad.is_empty())));
        ctx.emit(&s)?;
    }
    Ok(if bad.is_empty() {
        exit::PASS
    } else {
        exit::FAIL
    })
}
