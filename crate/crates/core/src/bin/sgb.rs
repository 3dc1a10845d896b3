//! Command line front end: strong Groebner bases, Groebner normal forms,
//! linear system solving and the classical specializations.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use sgb::division::euclidean_divide;
use sgb::euclid::EuclideanScalar;
use sgb::groebner::{member, reduced_strong_groebner, spoly_of_set, EngineOpts};
use sgb::linsys::{
    gnf, hermite_normal_form, kernel, row_reduce, solve_with_orders, MatrixFile, OrderSpec,
    PolyMatrix, SolveResult,
};
use sgb::polyvec::{AdmissibleOrder, Context, MonoOrder, PolyVector};
use sgb::text::{format_vector, parse_vector};

#[derive(Parser)]
#[command(
    name = "sgb",
    about = "Strong Groebner bases over Euclidean domains",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, clap::Args)]
struct PolyArgs {
    /// Input file with one polynomial vector per line
    input: String,
    /// Coefficient ring
    #[arg(long, default_value = "Z")]
    ring: String,
    /// Comma separated variable names, e.g. x,y
    #[arg(long, default_value = "x,y")]
    vars: String,
    /// Monomial order: lex or matrix:<file>
    #[arg(long, default_value = "lex")]
    order: String,
    /// Output format
    #[arg(long, default_value = "text")]
    format: String,
    /// Disable the coprime-pair certification shortcut
    #[arg(long)]
    no_coprime_skip: bool,
}

#[derive(Clone, clap::Args)]
struct MatrixArgs {
    /// JSON matrix file
    input: String,
    /// Monomial order override: lex or matrix:<file>
    #[arg(long)]
    order: Option<String>,
    /// Output format
    #[arg(long, default_value = "text")]
    format: String,
    /// Disable the coprime-pair certification shortcut
    #[arg(long)]
    no_coprime_skip: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced strong Groebner basis of the vectors in the input file
    Gb(PolyArgs),
    /// Groebner normal form of a polynomial matrix
    Gnf(MatrixArgs),
    /// Solve A x = b for the matrix and rhs in the input file
    Solve(MatrixArgs),
    /// Groebner normal form of the kernel of a polynomial matrix
    Kernel(MatrixArgs),
    /// Membership of the first vector in the module of the remaining ones
    Member(PolyArgs),
    /// Euclidean division of the first vector by the remaining ones
    Divide(PolyArgs),
    /// S-polynomial vector of the two vectors in the input file
    Spoly(PolyArgs),
    /// Hermite normal form of an integer matrix
    Hnf(MatrixArgs),
    /// Reduced row echelon form of a rational matrix
    Rref(MatrixArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn engine_opts(no_skip: bool) -> EngineOpts {
    EngineOpts {
        coprime_skip: !no_skip,
        trace: std::env::var("GB_TRACE").map(|v| v == "1").unwrap_or(false),
    }
}

fn read_file(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        return Ok(buf);
    }
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
}

fn parse_vars(spec: &str) -> Vec<String> {
    spec.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

/// Number of components of a vector literal: comma count at parenthesis
/// depth one, or 1 for a bare polynomial.
fn infer_ncomps(line: &str) -> usize {
    let line = line.trim();
    if !line.starts_with('(') {
        return 1;
    }
    let mut depth = 0usize;
    let mut commas = 0usize;
    for ch in line.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 1 => commas += 1,
            _ => {}
        }
    }
    commas + 1
}

fn load_order_file(path: &str) -> Result<OrderSpec, String> {
    let text = read_file(path)?;
    serde_json::from_str(&text).map_err(|e| format!("invalid order file {path}: {e}"))
}

fn mono_order_from_flag(flag: &str) -> Result<(MonoOrder, Option<Vec<usize>>), String> {
    if flag == "lex" {
        return Ok((MonoOrder::Lex, None));
    }
    if let Some(path) = flag.strip_prefix("matrix:") {
        let spec = load_order_file(path)?;
        let u = spec
            .matrix
            .ok_or_else(|| "order file lacks a matrix".to_string())?;
        return Ok((MonoOrder::Matrix(u), spec.perm));
    }
    Err(format!("unknown order `{flag}` (expected lex or matrix:<file>)"))
}

fn admissible_order(
    flag: &str,
    nvars: usize,
    ncomps: usize,
) -> Result<AdmissibleOrder, String> {
    let (mono, perm) = mono_order_from_flag(flag)?;
    match mono {
        MonoOrder::Lex => Ok(AdmissibleOrder::pot_lex(ncomps)),
        MonoOrder::Matrix(u) => {
            let perm = perm.unwrap_or_else(|| (1..=ncomps).collect());
            AdmissibleOrder::with_matrix(u, perm, nvars, ncomps).map_err(|e| e.to_string())
        }
    }
}

struct VectorInput<R: EuclideanScalar> {
    ctx: Arc<Context>,
    ord: AdmissibleOrder,
    vectors: Vec<PolyVector<R>>,
}

fn load_vectors<R: EuclideanScalar>(args: &PolyArgs) -> Result<VectorInput<R>, String> {
    let text = read_file(&args.input)?;
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.is_empty() {
        return Err("input contains no polynomial vectors".into());
    }
    let vars = parse_vars(&args.vars);
    let ncomps = infer_ncomps(lines[0]);
    let ctx = Context::new(vars, ncomps);
    let ord = admissible_order(&args.order, ctx.nvars(), ncomps)?;
    let mut vectors = Vec::with_capacity(lines.len());
    for (i, line) in lines.iter().enumerate() {
        let v = parse_vector::<R>(&ctx, line)
            .map_err(|e| format!("line {}: {e}", i + 1))?;
        vectors.push(v);
    }
    Ok(VectorInput { ctx, ord, vectors })
}

fn emit_basis(
    basis: &[String],
    format: &str,
    key: &str,
) -> Result<(), String> {
    if format == "json" {
        println!("{}", json!({ "result": { key: basis } }));
    } else {
        for b in basis {
            println!("{b}");
        }
    }
    Ok(())
}

fn run_gb<R: EuclideanScalar>(args: &PolyArgs) -> Result<ExitCode, String> {
    let input = load_vectors::<R>(args)?;
    let basis = reduced_strong_groebner(
        &input.vectors,
        &input.ord,
        &engine_opts(args.no_coprime_skip),
    )
    .map_err(|e| e.to_string())?;
    let printed: Vec<String> = basis.iter().map(|f| format_vector(f, &input.ord)).collect();
    emit_basis(&printed, &args.format, "basis")?;
    Ok(ExitCode::SUCCESS)
}

fn run_member<R: EuclideanScalar>(args: &PolyArgs) -> Result<ExitCode, String> {
    let input = load_vectors::<R>(args)?;
    if input.vectors.len() < 2 {
        return Err("member needs a candidate and at least one generator".into());
    }
    let f = &input.vectors[0];
    let gens = &input.vectors[1..];
    let basis = reduced_strong_groebner(gens, &input.ord, &engine_opts(args.no_coprime_skip))
        .map_err(|e| e.to_string())?;
    let ok = member(f, &basis, &input.ord);
    if args.format == "json" {
        println!("{}", json!({ "result": { "member": ok } }));
    } else {
        println!("{}", if ok { "true" } else { "false" });
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run_divide<R: EuclideanScalar>(args: &PolyArgs) -> Result<ExitCode, String> {
    let input = load_vectors::<R>(args)?;
    if input.vectors.len() < 2 {
        return Err("divide needs a dividend and at least one divisor".into());
    }
    let f = &input.vectors[0];
    let divisors = &input.vectors[1..];
    let e = euclidean_divide(f, divisors, &input.ord).map_err(|e| e.to_string())?;
    let term_ctx = Context::new(input.ctx.vars().to_vec(), 1);
    let scalar_ord = AdmissibleOrder::pot_lex(1);
    let mut steps = Vec::new();
    for step in &e.steps {
        let term = PolyVector::term(
            term_ctx.clone(),
            step.coeff.clone(),
            sgb::polyvec::MonomialVector::new(step.mono.exps.clone(), 1),
        );
        steps.push(format!(
            "({}) * g{}",
            format_vector(&term, &scalar_ord),
            step.g_index + 1
        ));
    }
    let rem = format_vector(&e.remainder, &input.ord);
    if args.format == "json" {
        println!(
            "{}",
            json!({ "result": { "steps": steps, "remainder": rem } })
        );
    } else {
        for s in &steps {
            println!("step: {s}");
        }
        println!("remainder: {rem}");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_spoly<R: EuclideanScalar>(args: &PolyArgs) -> Result<ExitCode, String> {
    let input = load_vectors::<R>(args)?;
    if input.vectors.len() != 2 {
        return Err("spoly needs exactly two vectors".into());
    }
    let h = spoly_of_set(&input.vectors[0], &input.vectors[1], &input.ord)
        .map_err(|e| e.to_string())?;
    let printed = format_vector(&h, &input.ord);
    if args.format == "json" {
        println!("{}", json!({ "result": { "spoly": printed } }));
    } else {
        println!("{printed}");
    }
    Ok(ExitCode::SUCCESS)
}

struct MatrixInput<R: EuclideanScalar> {
    matrix: PolyMatrix<R>,
    rhs: Option<Vec<PolyVector<R>>>,
    order: MonoOrder,
}

fn load_matrix<R: EuclideanScalar>(args: &MatrixArgs) -> Result<MatrixInput<R>, String> {
    let text = read_file(&args.input)?;
    let file: MatrixFile =
        serde_json::from_str(&text).map_err(|e| format!("invalid matrix file: {e}"))?;
    if file.ring.coeff != R::NAME {
        return Err(format!(
            "matrix file declares ring {} but {} was requested",
            file.ring.coeff,
            R::NAME
        ));
    }
    let ctx = Context::new(file.ring.vars.clone(), 1);
    let ncols = file
        .matrix
        .first()
        .map(|r| r.len())
        .ok_or_else(|| "matrix has no rows".to_string())?;
    if ncols == 0 || file.matrix.iter().any(|r| r.len() != ncols) {
        return Err("matrix must be rectangular with at least one column".into());
    }
    let mut rows = Vec::with_capacity(file.matrix.len());
    for (i, row) in file.matrix.iter().enumerate() {
        let mut parsed = Vec::with_capacity(ncols);
        for (j, s) in row.iter().enumerate() {
            let p = parse_vector::<R>(&ctx, s)
                .map_err(|e| format!("matrix entry ({}, {}): {e}", i + 1, j + 1))?;
            parsed.push(p);
        }
        rows.push(parsed);
    }
    let matrix = PolyMatrix::new(ctx.clone(), ncols, rows);
    let rhs = match &file.rhs {
        None => None,
        Some(entries) => {
            let mut parsed = Vec::with_capacity(entries.len());
            for (i, s) in entries.iter().enumerate() {
                parsed.push(
                    parse_vector::<R>(&ctx, s)
                        .map_err(|e| format!("rhs entry {}: {e}", i + 1))?,
                );
            }
            Some(parsed)
        }
    };
    let order = match &args.order {
        Some(flag) => mono_order_from_flag(flag)?.0,
        None => match &file.order {
            None => MonoOrder::Lex,
            Some(spec) if spec.kind == "lex" => MonoOrder::Lex,
            Some(spec) if spec.kind == "matrix" => MonoOrder::Matrix(
                spec.matrix
                    .clone()
                    .ok_or_else(|| "order of type matrix lacks a matrix".to_string())?,
            ),
            Some(spec) => return Err(format!("unknown order type `{}`", spec.kind)),
        },
    };
    Ok(MatrixInput { matrix, rhs, order })
}

fn matrix_rows_text<R: EuclideanScalar>(m: &PolyMatrix<R>) -> Vec<String> {
    let ord = AdmissibleOrder::pot_lex(1);
    m.rows()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|p| format_vector(p, &ord)).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect()
}

fn vector_tuple_text<R: EuclideanScalar>(row: &[PolyVector<R>]) -> String {
    let ord = AdmissibleOrder::pot_lex(1);
    let cells: Vec<String> = row.iter().map(|p| format_vector(p, &ord)).collect();
    format!("({})", cells.join(", "))
}

fn run_gnf<R: EuclideanScalar>(args: &MatrixArgs) -> Result<ExitCode, String> {
    let input = load_matrix::<R>(args)?;
    let orders = vec![input.order.clone(); input.matrix.ncols()];
    let h = gnf(&input.matrix, &orders, &engine_opts(args.no_coprime_skip))
        .map_err(|e| e.to_string())?;
    let rows = matrix_rows_text(&h);
    if args.format == "json" {
        let cells: Vec<Vec<String>> = h
            .rows()
            .iter()
            .map(|row| {
                let ord = AdmissibleOrder::pot_lex(1);
                row.iter().map(|p| format_vector(p, &ord)).collect()
            })
            .collect();
        println!("{}", json!({ "result": { "gnf": cells } }));
    } else {
        for r in rows {
            println!("{r}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_solve<R: EuclideanScalar>(args: &MatrixArgs) -> Result<ExitCode, String> {
    let input = load_matrix::<R>(args)?;
    let rhs = input
        .rhs
        .clone()
        .ok_or_else(|| "solve needs an rhs entry in the matrix file".to_string())?;
    let orders = vec![input.order.clone(); input.matrix.ncols()];
    let res = solve_with_orders(
        &input.matrix,
        &rhs,
        &input.order,
        &input.order,
        &orders,
        &engine_opts(args.no_coprime_skip),
    )
    .map_err(|e| e.to_string())?;
    match res {
        SolveResult::Solution { particular, kernel } => {
            let part = vector_tuple_text(&particular);
            let kern: Vec<String> = kernel
                .rows()
                .iter()
                .map(|row| vector_tuple_text(row))
                .collect();
            if args.format == "json" {
                println!(
                    "{}",
                    json!({ "result": { "solution": part, "kernel": kern } })
                );
            } else {
                println!("solution: {part}");
                println!("kernel:");
                for k in kern {
                    println!("{k}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        SolveResult::NoSolution { colon_basis } => {
            let ord = AdmissibleOrder::pot_lex(1);
            let basis: Vec<String> = colon_basis
                .iter()
                .map(|p| format_vector(p, &ord))
                .collect();
            if args.format == "json" {
                println!(
                    "{}",
                    json!({ "result": { "solution": null, "colon_basis": basis } })
                );
            } else {
                println!("no solution");
                println!("colon ideal basis: {}", basis.join(", "));
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn run_kernel<R: EuclideanScalar>(args: &MatrixArgs) -> Result<ExitCode, String> {
    let input = load_matrix::<R>(args)?;
    let d = kernel(
        &input.matrix,
        &input.order,
        &engine_opts(args.no_coprime_skip),
    )
    .map_err(|e| e.to_string())?;
    let rows: Vec<String> = d.rows().iter().map(|row| vector_tuple_text(row)).collect();
    if args.format == "json" {
        println!("{}", json!({ "result": { "kernel": rows } }));
    } else {
        for r in rows {
            println!("{r}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Reads either a bare JSON array of arrays of integers or a full matrix
/// file whose entries are constant polynomials.
fn load_const_matrix(args: &MatrixArgs) -> Result<Vec<Vec<String>>, String> {
    let text = read_file(&args.input)?;
    if let Ok(raw) = serde_json::from_str::<Vec<Vec<serde_json::Value>>>(&text) {
        return Ok(raw
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect());
    }
    let file: MatrixFile =
        serde_json::from_str(&text).map_err(|e| format!("invalid matrix file: {e}"))?;
    Ok(file.matrix)
}

fn run_hnf(args: &MatrixArgs) -> Result<ExitCode, String> {
    let entries = load_const_matrix(args)?;
    let mut rows = Vec::with_capacity(entries.len());
    for row in &entries {
        let mut parsed = Vec::with_capacity(row.len());
        for s in row {
            parsed.push(
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|_| format!("invalid integer `{s}`"))?,
            );
        }
        rows.push(parsed);
    }
    let h = hermite_normal_form(&rows).map_err(|e| e.to_string())?;
    print_const_matrix(&h.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect::<Vec<Vec<String>>>(), &args.format, "hnf");
    Ok(ExitCode::SUCCESS)
}

fn run_rref(args: &MatrixArgs) -> Result<ExitCode, String> {
    let entries = load_const_matrix(args)?;
    let mut rows = Vec::with_capacity(entries.len());
    for row in &entries {
        let mut parsed = Vec::with_capacity(row.len());
        for s in row {
            parsed.push(
                BigRational::parse_literal(s.trim()).map_err(|e| e.to_string())?,
            );
        }
        rows.push(parsed);
    }
    let r = row_reduce(&rows).map_err(|e| e.to_string())?;
    print_const_matrix(&r.iter().map(|row| row.iter().map(|e| e.literal()).collect()).collect::<Vec<Vec<String>>>(), &args.format, "rref");
    Ok(ExitCode::SUCCESS)
}

fn print_const_matrix(rows: &[Vec<String>], format: &str, key: &str) {
    if format == "json" {
        println!("{}", json!({ "result": { key: rows } }));
    } else {
        let body: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(","))).collect();
        println!("[{}]", body.join(","));
    }
}

fn dispatch_ring<F, G>(ring: &str, int_case: F, rat_case: G) -> Result<ExitCode, String>
where
    F: FnOnce() -> Result<ExitCode, String>,
    G: FnOnce() -> Result<ExitCode, String>,
{
    match ring {
        "Z" => int_case(),
        "Q" => rat_case(),
        other => Err(format!("unknown ring `{other}` (expected Z or Q)")),
    }
}

fn matrix_ring(args: &MatrixArgs) -> Result<String, String> {
    let text = read_file(&args.input)?;
    let file: MatrixFile =
        serde_json::from_str(&text).map_err(|e| format!("invalid matrix file: {e}"))?;
    Ok(file.ring.coeff)
}

fn run(cmd: Command) -> Result<ExitCode, String> {
    match cmd {
        Command::Gb(a) => dispatch_ring(&a.ring, || run_gb::<BigInt>(&a), || run_gb::<BigRational>(&a)),
        Command::Member(a) => {
            dispatch_ring(&a.ring, || run_member::<BigInt>(&a), || run_member::<BigRational>(&a))
        }
        Command::Divide(a) => {
            dispatch_ring(&a.ring, || run_divide::<BigInt>(&a), || run_divide::<BigRational>(&a))
        }
        Command::Spoly(a) => {
            dispatch_ring(&a.ring, || run_spoly::<BigInt>(&a), || run_spoly::<BigRational>(&a))
        }
        Command::Gnf(a) => {
            let ring = matrix_ring(&a)?;
            dispatch_ring(&ring, || run_gnf::<BigInt>(&a), || run_gnf::<BigRational>(&a))
        }
        Command::Solve(a) => {
            let ring = matrix_ring(&a)?;
            dispatch_ring(&ring, || run_solve::<BigInt>(&a), || run_solve::<BigRational>(&a))
        }
        Command::Kernel(a) => {
            let ring = matrix_ring(&a)?;
            dispatch_ring(&ring, || run_kernel::<BigInt>(&a), || run_kernel::<BigRational>(&a))
        }
        Command::Hnf(a) => run_hnf(&a),
        Command::Rref(a) => run_rref(&a),
    }
}
