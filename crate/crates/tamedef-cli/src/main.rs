//! `tamedef`: catalog dumps, verification runs and deformation-ring predictions.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 precision or capacity abort.

mod config;
mod tasks;

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use tamedef::catalog::{family, list_families, Family, FamilyParams};
use tamedef::deformation::theorem_presentation;
use tamedef::scalars::FField;
use tamedef::{DefectType, Error};

use config::{Format, NRange, RunConfig};
use tasks::{Plan, Scope, Status};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "tamedef", version, about = "Maximally ordinary modules of tame 2-blocks and their deformation rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Witt-vector precision N (arithmetic in Z/2^N).
    #[arg(long, global = true, env = "TAMEDEF_PRECISION", default_value_t = tamedef::DEFAULT_PRECISION)]
    precision: u32,
    /// Work over GF(2^e).
    #[arg(long = "field-degree", global = true, default_value_t = 1)]
    field_degree: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<String>,
    /// Seed for randomized isomorphism and lift searches.
    #[arg(long, global = true, default_value_t = 0x7a3e)]
    seed: u64,
    /// Worker threads for `verify`; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Registered families.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Decomposition matrix, Cartan matrix and presentation of a family.
    Decomp {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Run verification checks and report per (family, n, check).
    Verify {
        #[arg(value_enum)]
        scope: Scope,
        /// Restrict to these families (repeatable); names or ASCII aliases.
        #[arg(long)]
        family: Vec<String>,
        /// Restrict to one defect type.
        #[arg(long = "type")]
        defect_type: Option<DefectType>,
        /// Exponent or inclusive range, e.g. `4` or `4..5`.
        #[arg(long)]
        n: Option<NRange>,
        #[arg(long, default_value_t = 0)]
        c: u8,
        #[arg(long, default_value_t = 1)]
        a: u8,
    },
    /// Predicted deformation-ring presentation for a maximally ordinary module.
    Predict {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        /// Recipe label or `top-T<k>` / `soc-T<k>`; defaults to the first recipe.
        #[arg(long)]
        recipe: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum FamiliesAction {
    List,
}

/// Error to report together with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            e if e.is_abort() => 3,
            Error::UnknownFamily(_) | Error::Nonexistent(_) | Error::Domain(_) | Error::Parse(_) => 2,
            _ => 1,
        };
        let mut message = e.to_string();
        if let Error::Precision { precision, .. } = e {
            let _ = write!(message, " (rerun with --precision {})", (precision * 2).min(64));
        }
        Failure { code, message }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn config(cli: &Cli) -> RunConfig {
    let g = &cli.global;
    let mut cfg = RunConfig {
        command: String::new(),
        families: Vec::new(),
        defect_type: None,
        n: None,
        c: 0,
        a: 1,
        recipe: None,
        precision: g.precision,
        field_degree: g.field_degree,
        format: g.format,
        output: g.output.clone(),
        seed: g.seed,
        jobs: g.jobs,
    };
    match &cli.command {
        Command::Families { .. } => cfg.command = "families list".into(),
        Command::Decomp { family, n } => {
            cfg.command = "decomp".into();
            cfg.families = vec![family.clone()];
            cfg.n = n.map(|n| NRange { lo: n, hi: n });
        }
        Command::Verify { scope, family, defect_type, n, c, a } => {
            cfg.command = format!("verify {}", scope.name());
            cfg.families = family.clone();
            cfg.defect_type = defect_type.map(|t| t.to_string());
            cfg.n = *n;
            cfg.c = *c;
            cfg.a = *a;
        }
        Command::Predict { family, n, recipe } => {
            cfg.command = "predict".into();
            cfg.families = vec![family.clone()];
            cfg.n = Some(NRange { lo: *n, hi: *n });
            cfg.recipe = recipe.clone();
        }
    }
    cfg
}

fn emit(cfg: &RunConfig, text: &str, body: Value) -> Result<(), Failure> {
    let out = match cfg.format {
        Format::Text => text.to_string(),
        Format::Json => {
            let mut doc = json!({ "schema_version": SCHEMA_VERSION, "config": cfg });
            if let (Value::Object(d), Value::Object(b)) = (&mut doc, body) {
                d.extend(b);
            }
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
    };
    match &cfg.output {
        Some(path) => std::fs::write(path, out).map_err(|e| Failure { code: 2, message: format!("{path}: {e}") }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(out.as_bytes()).map_err(|e| Failure { code: 2, message: e.to_string() })
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let cfg = config(cli);
    if !(1..=64).contains(&cfg.precision) {
        return Err(Failure { code: 2, message: format!("precision {} outside 1..=64", cfg.precision) });
    }
    let field = FField::new(cfg.field_degree)?;
    match &cli.command {
        Command::Families { action: FamiliesAction::List } => families_list(&cfg),
        Command::Decomp { family: name, n } => decomp(&cfg, family(name)?, *n),
        Command::Verify { scope, family: names, defect_type, n, c, a } => {
            let mut fams: Vec<Family> = if names.is_empty() {
                list_families()
            } else {
                names.iter().map(|s| family(s)).collect::<Result<_, _>>()?
            };
            if let Some(t) = defect_type {
                fams.retain(|f| f.defect_type() == *t);
            }
            let mut types: Vec<DefectType> = match defect_type {
                Some(t) => vec![*t],
                None if names.is_empty() => DefectType::ALL.to_vec(),
                None => fams.iter().map(|f| f.defect_type()).collect(),
            };
            types.sort();
            types.dedup();
            let plan = Plan {
                scope: *scope,
                families: fams,
                types,
                n: *n,
                params: FamilyParams { c: *c, a: *a, ..FamilyParams::default() },
                field,
                precision: cfg.precision,
                seed: cfg.seed,
            };
            verify(&cfg, &plan)
        }
        Command::Predict { family: name, n, recipe } => predict(&cfg, family(name)?, *n, recipe.as_deref()),
    }
}

fn families_list(cfg: &RunConfig) -> Result<u8, Failure> {
    let mut text = format!("{:<12} {:<9} {:<5} {:<6} {:<6} {}\n", "family", "alias", "type", "quiver", "n_min", "params");
    let mut rows = Vec::new();
    for f in list_families() {
        let p = f.params();
        let slots: Vec<&str> = [(p.c, "c"), (p.a, "a"), (p.p, "p(t)")].iter().filter(|x| x.0).map(|x| x.1).collect();
        let _ = writeln!(
            text,
            "{:<12} {:<9} {:<5} {:<6} {:<6} {}{}",
            f.name(),
            f.alias(),
            f.defect_type().as_str(),
            f.quiver_id().label(),
            f.n_min(),
            slots.join(","),
            if f.realizable_as_block() { "" } else { "  (not a block)" }
        );
        rows.push(json!({
            "name": f.name(),
            "alias": f.alias(),
            "defect_type": f.defect_type(),
            "quiver": f.quiver_id().label(),
            "n_min": f.n_min(),
            "simple_count": f.simple_count(),
            "params": p,
            "realizable_as_block": f.realizable_as_block(),
        }));
    }
    emit(cfg, &text, json!({ "families": rows }))?;
    Ok(0)
}

fn decomp(cfg: &RunConfig, f: Family, n: Option<u32>) -> Result<u8, Failure> {
    let n = n.unwrap_or(f.n_min().max(4));
    let rec = f.record(n)?;
    let dm = f.decomposition_matrix(n)?;
    let mut text = format!("{} ({}), defect type {}, n = {n}\n", rec.name, rec.alias, rec.defect_type);
    let _ = writeln!(text, "quiver {}:", f.quiver_id().label());
    for a in &rec.quiver.arrows {
        let _ = writeln!(text, "  {}: {} -> {}", a.name, a.source, a.target);
    }
    let _ = writeln!(text, "relations:");
    for r in &rec.relations {
        let _ = writeln!(text, "  {r}");
    }
    let _ = writeln!(text, "decomposition matrix (label, height, row):");
    for ((l, h), r) in dm.labels.iter().zip(&dm.heights).zip(&dm.rows) {
        let _ = writeln!(text, "  {l:<8} {h:>2}  {r:?}");
    }
    let _ = writeln!(text, "Cartan matrix:");
    for r in dm.cartan() {
        let _ = writeln!(text, "  {r:?}");
    }
    emit(cfg, &text, json!({ "family": rec }))?;
    Ok(0)
}

fn verify(cfg: &RunConfig, plan: &Plan) -> Result<u8, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Failure { code: 2, message: e.to_string() })?;
    let results = pool.install(|| plan.run());
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    let (pass, fail, abort) = (count(Status::Pass), count(Status::Fail), count(Status::Abort));
    let mut text = String::new();
    for r in &results {
        let tag = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Abort => "ABORT",
        };
        let recipe = r.recipe.as_deref().map(|x| format!("  {x}")).unwrap_or_default();
        let err = r.error.as_deref().map(|x| format!("  ({x})")).unwrap_or_default();
        let _ = writeln!(text, "{tag:<5} {:<12} n={:<2} {}{recipe}{err}", r.subject, r.n, r.check);
    }
    let _ = writeln!(text, "{} checks: {pass} passed, {fail} failed, {abort} aborted", results.len());
    let status = if abort > 0 {
        "abort"
    } else if fail > 0 {
        "fail"
    } else {
        "pass"
    };
    emit(
        cfg,
        &text,
        json!({
            "results": results,
            "summary": { "total": results.len(), "passed": pass, "failed": fail, "aborted": abort },
            "status": status,
        }),
    )?;
    if let Some(first) = results.iter().find(|r| r.status != Status::Pass) {
        let what = first.error.clone().unwrap_or_else(|| first.detail.to_string());
        eprintln!("first failure: {} n={} {}: {what}", first.subject, first.n, first.check);
    }
    if abort > 0 {
        eprintln!("some checks ran out of precision or search budget; try --precision {}", (cfg.precision * 2).min(64));
        return Ok(3);
    }
    Ok(if fail > 0 { 1 } else { 0 })
}

fn predict(cfg: &RunConfig, f: Family, n: u32, sel: Option<&str>) -> Result<u8, Failure> {
    f.check_n(n)?;
    let q8 = f.defect_type() == DefectType::Q && n == 3;
    if n < 4 && !q8 {
        return Err(Failure {
            code: 1,
            message: format!(
                "{} at n={n}: modules with stable endomorphism ring k and height-one Brauer character \
                 are maximally ordinary only when n ≥ 4",
                f.name()
            ),
        });
    }
    let recipe = match sel {
        Some(s) => f.recipe(n, s)?,
        None => f.mo_recipes(n)?.into_iter().next().ok_or_else(|| Error::Domain(format!("{} has no recipes", f.name())))?,
    };
    let t = theorem_presentation(&f, n, &recipe, cfg.precision)?;
    let rels = t.presentation.relations().unwrap_or_default();
    let rel_text: Vec<String> = rels.iter().map(|r| r.to_string()).collect();
    let mut text = format!("{} n={n} recipe {} ({})\n", t.family, t.recipe, recipe.describe());
    let _ = writeln!(text, "presentation:  W[[t]]/({})", rel_text.join(", "));
    let _ = writeln!(text, "3-tube:        {}", t.tube);
    let _ = writeln!(text, "complete intersection: {}", t.complete_intersection);
    let _ = writeln!(text, "mod-2 fiber dimension: {}", t.fiber_dim);
    let _ = writeln!(text, "W-module structure:    {}", t.presentation.structure.describe());
    let _ = writeln!(
        text,
        "subquotient witness:   {}{} with τ = {:?}, certificate {}, structure {}",
        t.witness.source,
        t.witness.extra_relators.iter().map(|r| format!("/({r})")).collect::<String>(),
        t.witness.tau,
        if t.witness.certificate_valid { "valid" } else { "INVALID" },
        t.witness.structure.describe()
    );
    emit(cfg, &text, json!({ "prediction": t }))?;
    Ok(if t.witness.certificate_valid && t.witness.matches { 0 } else { 1 })
}
