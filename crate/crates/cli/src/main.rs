//! `uqsl2`: batch front end to the matrix and formula engines.
//!
//! Exit codes: 0 on success or agreement, 2 when the engines disagree,
//! 1 on usage or engine errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cyclo::{FieldCtx, Matrix};
use doublecover::{lift, LiftOutcome};
use homlib::{decompose_full, ext1, hom_dim, identify, is_iso_with, IsoCertificate, IsoOptions, DEFAULT_SEED};
use repcore::ops::{dual, tensor, DualSide};
use repcore::{build, FormalDecomp, ModuleLabel, ProjLinePoint, Sign};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "uqsl2", version, about = "Indecomposable modules of the restricted quantum group at q = e^{πi/p}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for the randomized stage of isomorphism searches.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose A ⊗ B into indecomposables.
    Decompose {
        #[arg(long)]
        p: u32,
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Reading of the printed `M ⊗ W` formula when applied to `W ⊗ M`.
        #[arg(long, value_enum, default_value_t = WmArg::Commuted)]
        wm_reading: WmArg,
    },
    /// The index sets I_{s,s'} and J_{s,s'} for s, s' = 1..p.
    Table {
        #[arg(long)]
        p: u32,
        /// Which grids to print: I, J or IJ.
        #[arg(long, default_value = "IJ")]
        sets: String,
    },
    /// A pair A, B with A ⊗ B not isomorphic to B ⊗ A, with a certificate.
    BraidingWitness {
        #[arg(long)]
        p: u32,
    },
    /// dim Hom(A, B) and dim Ext¹(A, B).
    Ext {
        #[arg(long)]
        p: u32,
        a: String,
        b: String,
    },
    /// The dual module.
    Dual {
        #[arg(long)]
        p: u32,
        a: String,
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Lift a module to the double cover, or report why it cannot be lifted.
    Lift {
        #[arg(long)]
        p: u32,
        a: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Matrix,
    Formula,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WmArg {
    Commuted,
    Literal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Right,
    Left,
}

/// What a command produced: text, JSON and an exit code.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output { text, json, code: 0 }
    }
}

type Res<T> = Result<T, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn field(p: u32) -> Res<&'static FieldCtx> {
    if p < 2 {
        return Err(format!("p must be at least 2, got {p}"));
    }
    FieldCtx::get(p).map_err(err)
}

fn label(ctx: &'static FieldCtx, text: &str) -> Res<ModuleLabel> {
    let l = ModuleLabel::parse(text, ctx).map_err(err)?;
    l.canonical(ctx.p()).map_err(err)
}

/// Summands whose multiplicity in `a` exceeds that in `b`.
fn excess(a: &FormalDecomp, b: &FormalDecomp) -> Vec<Value> {
    a.summands()
        .iter()
        .filter(|(l, m)| *m > b.mult(l))
        .map(|(l, m)| json!({"label": l.to_string(), "mult": m - b.mult(l)}))
        .collect()
}

fn decomp_text(d: &FormalDecomp, cert: &str) -> String {
    format!("{d}\ndim: {}\ncertificate: {cert}\n", d.dim())
}

fn cmd_decompose(p: u32, a: &str, b: &str, method: Method, wm: WmArg) -> Res<Output> {
    let ctx = field(p)?;
    let (la, lb) = (label(ctx, a)?, label(ctx, b)?);
    let matrix = || -> Res<FormalDecomp> {
        let z = tensor(&build(ctx, &la).map_err(err)?, &build(ctx, &lb).map_err(err)?).map_err(err)?;
        Ok(decompose_full(&z).map_err(err)?.decomp)
    };
    let opts = rules::RuleOptions {
        wm: match wm {
            WmArg::Commuted => rules::WmReading::Commuted,
            WmArg::Literal => rules::WmReading::Literal,
        },
    };
    let formula = || rules::tensor_rule_with(ctx, &la, &lb, opts).map_err(err);
    Ok(match method {
        Method::Matrix => {
            let d = matrix()?;
            Output::ok(decomp_text(&d, "isomorphism"), d.to_json("isomorphism"))
        }
        Method::Formula => {
            let d = formula()?;
            Output::ok(decomp_text(&d, "formula-only"), d.to_json("formula-only"))
        }
        Method::Both => {
            let (m, f) = (matrix()?, formula()?);
            if m == f {
                let mut j = m.to_json("isomorphism");
                j["agreement"] = json!(true);
                let text = format!("{}agreement: matrix and formula\n", decomp_text(&m, "isomorphism"));
                Output::ok(text, j)
            } else {
                let (only_m, only_f) = (excess(&m, &f), excess(&f, &m));
                let text = format!(
                    "DISAGREEMENT\nmatrix:  {m}\nformula: {f}\nonly in matrix:  {}\nonly in formula: {}\n",
                    only_m.iter().map(|v| format!("{}^{}", v["label"].as_str().unwrap_or(""), v["mult"])).collect::<Vec<_>>().join(", "),
                    only_f.iter().map(|v| format!("{}^{}", v["label"].as_str().unwrap_or(""), v["mult"])).collect::<Vec<_>>().join(", "),
                );
                let j = json!({
                    "p": p,
                    "agreement": false,
                    "matrix": m.to_json("isomorphism"),
                    "formula": f.to_json("formula-only"),
                    "only_matrix": only_m,
                    "only_formula": only_f,
                });
                Output { text, json: j, code: 2 }
            }
        }
    })
}

fn set_text(s: &std::collections::BTreeSet<u32>) -> String {
    if s.is_empty() {
        "∅".into()
    } else {
        format!("{{{}}}", s.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(","))
    }
}

fn cmd_table(p: u32, sets: &str) -> Res<Output> {
    field(p)?;
    let want: Vec<char> = sets.to_uppercase().chars().collect();
    if want.is_empty() || want.iter().any(|c| !matches!(c, 'I' | 'J')) {
        return Err(format!("--sets takes I, J or IJ, got {sets:?}"));
    }
    let mut text = String::new();
    let mut j = json!({"p": p});
    for name in ['I', 'J'] {
        if !want.contains(&name) {
            continue;
        }
        let mut grid = Vec::new();
        for s in 1..=p {
            let mut row = Vec::new();
            for s2 in 1..=p {
                let set = match name {
                    'I' => rules::index_i(p, s, s2).map_err(err)?,
                    _ => rules::index_j_pair(p, s, s2).map_err(err)?,
                };
                row.push(set);
            }
            grid.push(row);
        }
        let cells: Vec<Vec<String>> = grid.iter().map(|r| r.iter().map(set_text).collect()).collect();
        let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1).max(p.to_string().len());
        let pad = |c: &str| format!("{c}{}", " ".repeat(width - c.chars().count()));
        let rw = p.to_string().len();
        text.push_str(&format!("{name:<rw$} |"));
        for s2 in 1..=p {
            text.push_str(&format!(" {}", pad(&s2.to_string())));
        }
        text = text.trim_end().to_string() + "\n";
        text.push_str(&format!("{}-+{}\n", "-".repeat(rw), "-".repeat(p as usize * (width + 1))));
        for (s, row) in cells.iter().enumerate() {
            let mut line = format!("{:<rw$} |", s + 1);
            for c in row {
                line.push_str(&format!(" {}", pad(c)));
            }
            text.push_str(line.trim_end());
            text.push('\n');
        }
        text.push('\n');
        j[name.to_string()] = json!(grid.iter().map(|r| r.iter().map(|s| s.iter().collect::<Vec<_>>()).collect::<Vec<_>>()).collect::<Vec<_>>());
    }
    Ok(Output::ok(text.trim_end().to_string() + "\n", j))
}

/// Candidate pairs, `E`-type first: `E_s^±(1;λ)` against simples.
fn witness_candidates(ctx: &'static FieldCtx) -> Res<Vec<(ModuleLabel, ModuleLabel)>> {
    let p = ctx.p();
    let mut es = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for s in 1..p {
            for (a, b) in [(1, 1), (1, -1), (1, 2), (1, 0), (0, 1)] {
                es.push(ModuleLabel::e(sign, s, 1, ProjLinePoint::ratio(ctx, a, b).map_err(err)?));
            }
        }
    }
    let mut simples = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for s in 1..=p {
            simples.push(ModuleLabel::x(sign, s));
        }
    }
    let mut out = Vec::new();
    for a in &es {
        for b in &simples {
            out.push((a.clone(), b.clone()));
        }
    }
    for a in &es {
        for b in &es {
            out.push((a.clone(), b.clone()));
        }
    }
    Ok(out)
}

fn cmd_braiding_witness(p: u32, seed: u64) -> Res<Output> {
    let ctx = field(p)?;
    for (a, b) in witness_candidates(ctx)? {
        if rules::commutes(ctx, &a, &b).map_err(err)?.is_none() {
            continue;
        }
        let (ra, rb) = (build(ctx, &a).map_err(err)?, build(ctx, &b).map_err(err)?);
        let ab = tensor(&ra, &rb).map_err(err)?;
        let ba = tensor(&rb, &ra).map_err(err)?;
        let cert = is_iso_with(&ab, &ba, &IsoOptions { seed, extra_tests: Vec::new() }).map_err(err)?;
        let IsoCertificate::NotIso(fp) = &cert else {
            return Err(format!("formulas say {a} ⊗ {b} and {b} ⊗ {a} differ, but the matrix check gave {}", cert.verdict()));
        };
        if !cert.verify(&ab, &ba).map_err(err)? {
            return Err("fingerprint failed re-verification".into());
        }
        let dab = decompose_full(&ab).map_err(err)?.decomp;
        let dba = decompose_full(&ba).map_err(err)?.decomp;
        let text = format!(
            "witness: A = {a}, B = {b}\nA ⊗ B = {dab}\nB ⊗ A = {dba}\nfingerprint: {fp} (A = A⊗B, B = B⊗A)\n"
        );
        let j = json!({
            "p": p,
            "witness": {
                "a": a.to_string(),
                "b": b.to_string(),
                "a_tensor_b": dab.to_json("isomorphism"),
                "b_tensor_a": dba.to_json("isomorphism"),
                "fingerprint": {
                    "test": fp.test,
                    "direction": match fp.direction { homlib::iso::Direction::From => "hom-from", homlib::iso::Direction::Into => "hom-into" },
                    "a_tensor_b": fp.left,
                    "b_tensor_a": fp.right,
                },
            },
        });
        return Ok(Output::ok(text, j));
    }
    let msg = "no witness: category commutes";
    Ok(Output::ok(format!("{msg}\n"), json!({"p": p, "witness": null, "message": msg})))
}

fn cmd_ext(p: u32, a: &str, b: &str) -> Res<Output> {
    let ctx = field(p)?;
    let (la, lb) = (label(ctx, a)?, label(ctx, b)?);
    let (ra, rb) = (build(ctx, &la).map_err(err)?, build(ctx, &lb).map_err(err)?);
    let hom = hom_dim(&ra, &rb).map_err(err)?;
    let ext = ext1(&ra, &rb).map_err(err)?;
    Ok(Output::ok(
        format!("dim Hom({la}, {lb}) = {hom}\ndim Ext^1({la}, {lb}) = {ext}\n"),
        json!({"p": p, "a": la.to_string(), "b": lb.to_string(), "hom": hom, "ext1": ext}),
    ))
}

fn cmd_dual(p: u32, a: &str, side: Side, method: Method) -> Res<Output> {
    let ctx = field(p)?;
    let la = label(ctx, a)?;
    let side = match side {
        Side::Right => DualSide::Right,
        Side::Left => DualSide::Left,
    };
    let side_name = if side == DualSide::Right { "right" } else { "left" };
    let matrix = || -> Res<ModuleLabel> { identify(&dual(&build(ctx, &la).map_err(err)?, side).map_err(err)?).map_err(err) };
    let formula = || rules::dual_rule(ctx, &la, side).map_err(err);
    let (d, cert, code) = match method {
        Method::Matrix => (matrix()?, "isomorphism", 0),
        Method::Formula => (formula()?, "formula-only", 0),
        Method::Both => {
            let (m, f) = (matrix()?, formula()?);
            if m != f {
                return Ok(Output {
                    text: format!("DISAGREEMENT\nmatrix:  {m}\nformula: {f}\n"),
                    json: json!({"p": p, "label": la.to_string(), "side": side_name, "agreement": false, "matrix": m.to_string(), "formula": f.to_string()}),
                    code: 2,
                });
            }
            (m, "isomorphism", 0)
        }
    };
    Ok(Output {
        text: format!("dual ({side_name}) of {la} = {d}\ncertificate: {cert}\n"),
        json: json!({"p": p, "label": la.to_string(), "side": side_name, "dual": d.to_string(), "certificate": cert}),
        code,
    })
}

fn matrix_json(m: &Matrix) -> Value {
    json!((0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn matrix_text(m: &Matrix) -> String {
    (0..m.rows()).map(|i| format!("  [{}]", m.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))).collect::<Vec<_>>().join("\n")
}

fn cmd_lift(p: u32, a: &str) -> Res<Output> {
    let ctx = field(p)?;
    let la = label(ctx, a)?;
    let outcome = lift(&build(ctx, &la).map_err(err)?).map_err(err)?;
    Ok(match outcome {
        LiftOutcome::Lifted(r) => Output::ok(
            format!("{la} is liftable\nt =\n{}\n", matrix_text(r.k())),
            json!({"p": p, "label": la.to_string(), "liftable": true, "witness_t": matrix_json(r.k())}),
        ),
        LiftOutcome::NotLiftable(ob) => {
            let eqs = ob.equations();
            Output::ok(
                format!("{la} is not liftable\nobstruction:\n{}\n", eqs.iter().map(|e| format!("  {e}")).collect::<Vec<_>>().join("\n")),
                json!({"p": p, "label": la.to_string(), "liftable": false, "obstruction": eqs}),
            )
        }
        LiftOutcome::Undetermined(why) => Output::ok(
            format!("{la}: undetermined ({why})\n"),
            json!({"p": p, "label": la.to_string(), "liftable": null, "reason": why}),
        ),
    })
}

fn run(cli: &Cli) -> Res<Output> {
    match &cli.command {
        Command::Decompose { p, a, b, method, wm_reading } => cmd_decompose(*p, a, b, *method, *wm_reading),
        Command::Table { p, sets } => cmd_table(*p, sets),
        Command::BraidingWitness { p } => cmd_braiding_witness(*p, cli.seed),
        Command::Ext { p, a, b } => cmd_ext(*p, a, b),
        Command::Dual { p, a, side, method } => cmd_dual(*p, a, *side, *method),
        Command::Lift { p, a } => cmd_lift(*p, a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            ExitCode::from(out.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
