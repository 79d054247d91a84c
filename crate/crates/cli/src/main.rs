//! Command-line front end.
//!
//! Subcommands: `witt`, `free`, `multiplier`, `report`, `verify`. Output is
//! human-readable by default; `--format=machine` switches to a stable
//! line-oriented `key value` form opened by `format lieschur/1`, with every
//! number printed exactly. Exit codes: 0 success, 1 verification or
//! computation failure, 2 usage or input parse errors.

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use lieschur::bounds::{
    self, euler_identity_free_nilpotent, NontrivialityVerdict, EULER_HOMOLOGY_DIM_LIMIT,
};
use lieschur::catalog::{self, builtin_from_spec, standard_entries};
use lieschur::free_lie::HallBasis;
use lieschur::lie::LieAlgebra;
use lieschur::multiplier::{ce_boundary_2, ce_boundary_3, multiplier_dimension};
use lieschur::witt::{witt_dimension, witt_dimension_usize, WittTable};
use lieschur::Winner;

/// Refuse to assemble the degree-3 boundary above this many columns unless
/// the user passes `--force`.
const LAMBDA3_COLUMN_LIMIT: u128 = 100_000;

#[derive(Parser)]
#[command(
    name = "lieschur",
    version,
    about = "Exact Schur multipliers of nilpotent Lie algebras",
    propagate_version = true
)]
struct Cli {
    /// Output style: human-readable or stable machine form.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Run large homology computations without the size guardrail.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Print l_n(d) for d = 1..=dmax together with cumulative sums.
    Witt {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        dmax: u64,
    },
    /// Construct the free nilpotent algebra on n generators of class c.
    Free {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        c: u64,
        /// Also print the structure-constant file.
        #[arg(long)]
        constants: bool,
    },
    /// Compute dim M(L) for an algebra from a file or a builtin spec.
    #[command(group(ArgGroup::new("source").required(true).args(["input", "builtin"])))]
    Multiplier {
        /// Path to a structure-constant file.
        input: Option<PathBuf>,
        /// Builtin spec such as free:2,3 or abelian:4.
        #[arg(long)]
        builtin: Option<String>,
        /// Also print boundary ranks, dim L^2, class and generators.
        #[arg(long)]
        verbose: bool,
    },
    /// Full bound comparison report for a nilpotent algebra.
    #[command(group(ArgGroup::new("source").required(true).args(["input", "builtin"])))]
    Report {
        /// Path to a structure-constant file.
        input: Option<PathBuf>,
        /// Builtin spec such as free:2,3 or abelian:4.
        #[arg(long)]
        builtin: Option<String>,
    },
    /// Run the whole property suite within the given scope.
    Verify {
        /// Largest generator count for the free nilpotent sweeps.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Largest nilpotency class for the free nilpotent sweeps.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        max_class: u64,
    },
}

/// Failure that terminates the process with a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn computation(message: impl Display) -> Self {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }

    fn input(message: impl Display) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Witt { n, dmax } => cmd_witt(n, dmax, cli.format),
        Command::Free { n, c, constants } => cmd_free(n, c, constants, cli.format),
        Command::Multiplier {
            input,
            builtin,
            verbose,
        } => {
            let (l, source) = load_algebra(input.as_deref(), builtin.as_deref())?;
            cmd_multiplier(&l, &source, verbose, cli.format, cli.force)
        }
        Command::Report { input, builtin } => {
            let (l, source) = load_algebra(input.as_deref(), builtin.as_deref())?;
            cmd_report(&l, &source, cli.format, cli.force)
        }
        Command::Verify { max_n, max_class } => cmd_verify(max_n, max_class, cli.format),
    }
}

fn machine_header(command: &str) {
    println!("format lieschur/1");
    println!("command {command}");
}

fn load_algebra(
    input: Option<&std::path::Path>,
    builtin: Option<&str>,
) -> Result<(LieAlgebra, String), Failure> {
    match (input, builtin) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            let l = catalog::parse(&text)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            Ok((l, path.display().to_string()))
        }
        (None, Some(spec)) => {
            let l = builtin_from_spec(spec).map_err(Failure::input)?;
            Ok((l, spec.to_owned()))
        }
        _ => unreachable!("clap enforces exactly one source"),
    }
}

fn cmd_witt(n: u64, dmax: u64, format: Format) -> Result<(), Failure> {
    let table = WittTable::new(n, dmax);
    let cumulative = table.cumulative();
    match format {
        Format::Machine => {
            machine_header("witt");
            println!("n {n}");
            println!("dmax {dmax}");
            for ((d, l), cum) in table.values.iter().zip(&cumulative) {
                println!("witt {d} {l} {cum}");
            }
        }
        Format::Human => {
            println!("Witt dimensions l_{n}(d) and dim of the class-d free nilpotent algebra:");
            println!(
                "{:>4}  {:>12}  {:>12}",
                "d",
                format!("l_{n}(d)"),
                "cumulative"
            );
            for ((d, l), cum) in table.values.iter().zip(&cumulative) {
                println!("{d:>4}  {l:>12}  {cum:>12}");
            }
        }
    }
    Ok(())
}

fn cmd_free(n: u64, c: u64, constants: bool, format: Format) -> Result<(), Failure> {
    let l = lieschur::free_nilpotent(n, c);
    let basis = HallBasis::new(n as usize, c as usize);
    let graded: Vec<String> = basis.degree_counts().iter().map(usize::to_string).collect();
    let graded = graded.join("+");
    let class = l
        .nilpotency_class()
        .expect("free nilpotent algebras are nilpotent");
    let generators = l
        .min_generators()
        .expect("free nilpotent algebras are nilpotent");
    match format {
        Format::Machine => {
            machine_header("free");
            println!("n {n}");
            println!("c {c}");
            println!("dim {}", l.dim());
            println!("graded {graded}");
            println!("class {class}");
            println!("generators {generators}");
            if constants {
                let text = catalog::serialize(&l);
                println!("constants {}", text.lines().count());
                print!("{text}");
            }
        }
        Format::Human => {
            println!(
                "dim {}, graded {graded}, class {class}, generators {generators}",
                l.dim()
            );
            if constants {
                println!();
                print!("{}", catalog::serialize(&l));
            }
        }
    }
    Ok(())
}

fn lambda3_guard(l: &LieAlgebra, force: bool) -> Result<(), Failure> {
    let n = l.dim() as u128;
    let columns = if n >= 3 { n * (n - 1) * (n - 2) / 6 } else { 0 };
    if columns > LAMBDA3_COLUMN_LIMIT && !force {
        return Err(Failure::computation(format!(
            "Lambda^3 has {columns} columns (dimension {}), above the {LAMBDA3_COLUMN_LIMIT} \
             guardrail; pass --force to run anyway",
            l.dim()
        )));
    }
    Ok(())
}

fn cmd_multiplier(
    l: &LieAlgebra,
    source: &str,
    verbose: bool,
    format: Format,
    force: bool,
) -> Result<(), Failure> {
    lambda3_guard(l, force)?;
    let d2 = ce_boundary_2(l);
    let d3 = ce_boundary_3(l);
    let nullity = d2.nullity();
    let rank3 = d3.rank();
    let multiplier = nullity - rank3;
    let class = l.nilpotency_class().ok();
    match format {
        Format::Machine => {
            machine_header("multiplier");
            println!("input {source}");
            println!("multiplier {multiplier}");
            if verbose {
                println!("nullity_d2 {nullity}");
                println!("rank_d3 {rank3}");
                println!("derived_dim {}", l.derived_dim());
                match class {
                    Some(c) => {
                        println!("nilpotent true");
                        println!("class {c}");
                        println!(
                            "generators {}",
                            l.min_generators().expect("nilpotent above")
                        );
                    }
                    None => println!("nilpotent false"),
                }
            }
        }
        Format::Human => {
            println!("dim M(L) = {multiplier}");
            if verbose {
                println!("  nullity of d2: {nullity}");
                println!("  rank of d3:    {rank3}");
                println!("  dim L^2:       {}", l.derived_dim());
                match class {
                    Some(c) => println!(
                        "  nilpotent of class {c} on {} generators",
                        l.min_generators().expect("nilpotent above")
                    ),
                    None => println!("  not nilpotent"),
                }
            }
        }
    }
    Ok(())
}

fn cmd_report(l: &LieAlgebra, source: &str, format: Format, force: bool) -> Result<(), Failure> {
    lambda3_guard(l, force)?;
    let report = bounds::compare(l, source).map_err(Failure::computation)?;
    match format {
        Format::Machine => {
            machine_header("report");
            println!("input {source}");
            println!("name {}", report.name);
            println!("dim {}", report.dim);
            println!("class {}", report.class);
            println!("generators {}", report.generators);
            println!("derived_dim {}", report.derived_dim);
            println!("multiplier {}", report.multiplier_dim);
            println!("bound_class_generators {}", report.bound_class_generators);
            println!("bound_hardy {}", report.bound_hardy);
            println!("bound_moneyhun {}", report.bound_moneyhun);
            println!("winner {}", report.winner);
            println!("nontrivial_ok {}", report.nontrivial_ok);
        }
        Format::Human => {
            println!("Report for {}", report.name);
            println!("  dim L                   {}", report.dim);
            println!("  nilpotency class        {}", report.class);
            println!("  minimal generators      {}", report.generators);
            println!("  dim L^2                 {}", report.derived_dim);
            println!("  dim M(L)                {}", report.multiplier_dim);
            println!(
                "  class/generator bound   {}",
                report.bound_class_generators
            );
            println!("  Hardy bound             {}", report.bound_hardy);
            println!("  Moneyhun bound          {}", report.bound_moneyhun);
            let verdict = match report.winner {
                Winner::ClassGenerators => "the class/generator bound is sharper",
                Winner::Hardy => "the Hardy bound is sharper",
                Winner::Tie => "the bounds tie",
            };
            println!("  comparison              {verdict}");
            println!(
                "  nontriviality           {}",
                if report.nontrivial_ok {
                    "ok"
                } else {
                    "VIOLATED"
                }
            );
        }
    }
    Ok(())
}

struct Check {
    name: &'static str,
    outcome: Result<String, String>,
}

fn cmd_verify(max_n: u64, max_class: u64, format: Format) -> Result<(), Failure> {
    let checks = run_verification(max_n, max_class);
    let failed = checks.iter().filter(|c| c.outcome.is_err()).count();
    match format {
        Format::Machine => {
            machine_header("verify");
            println!("max_n {max_n}");
            println!("max_class {max_class}");
            for check in &checks {
                match &check.outcome {
                    Ok(_) => println!("check {} pass", check.name),
                    Err(detail) => println!("check {} fail {detail}", check.name),
                }
            }
            println!("checks {}", checks.len());
            println!("result {}", if failed == 0 { "pass" } else { "fail" });
        }
        Format::Human => {
            for check in &checks {
                match &check.outcome {
                    Ok(detail) => println!("check {:<28} pass  {detail}", check.name),
                    Err(detail) => println!("check {:<28} FAIL  {detail}", check.name),
                }
            }
            println!(
                "verify: {} checks, {}",
                checks.len(),
                if failed == 0 {
                    "all passed".to_owned()
                } else {
                    format!("{failed} FAILED")
                }
            );
        }
    }
    if failed > 0 {
        Err(Failure::computation(format!("{failed} check(s) failed")))
    } else {
        Ok(())
    }
}

/// Instances above this dimension are skipped by the sweeps that have to
/// materialize boundary matrices or quotients.
const VERIFY_DIM_LIMIT: usize = 100;

fn free_sweep(max_n: u64, max_class: u64, dim_limit: usize) -> Vec<(u64, u64, usize)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for c in 1..=max_class {
            let dim: usize = (1..=c).map(|d| witt_dimension_usize(n, d)).sum();
            if dim <= dim_limit {
                out.push((n, c, dim));
            }
        }
    }
    out
}

fn run_verification(max_n: u64, max_class: u64) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut push = |name: &'static str, outcome: Result<String, String>| {
        checks.push(Check { name, outcome });
    };

    // Witt values against the Mobius-inversion identity.
    push("witt-necklace-identity", {
        let bad: Vec<u64> = (1..=max_n)
            .filter(|&n| !WittTable::new(n, 12).necklace_identity_holds())
            .collect();
        if bad.is_empty() {
            Ok(format!("n <= {max_n}, d <= 12"))
        } else {
            Err(format!("violated for n in {bad:?}"))
        }
    });

    // Hall basis degree counts against Witt's formula.
    push("hall-witt-counts", {
        let mut scope = Vec::new();
        let mut failure = None;
        for n in 1..=max_n {
            // largest degree (up to 8) whose basis stays materializable
            let mut maxdeg = 1;
            for d in 2..=8u64 {
                let dim: usize = (1..=d).map(|e| witt_dimension_usize(n, e)).sum();
                if dim > 1500 {
                    break;
                }
                maxdeg = d;
            }
            let basis = HallBasis::new(n as usize, maxdeg as usize);
            let counts = basis.degree_counts();
            for d in 1..=maxdeg {
                if counts[(d - 1) as usize] != witt_dimension_usize(n, d) {
                    failure = Some(format!("count mismatch at n={n} d={d}"));
                }
            }
            scope.push(format!("n={n}:d<={maxdeg}"));
        }
        match failure {
            None => Ok(scope.join(" ")),
            Some(f) => Err(f),
        }
    });

    let sweep = free_sweep(max_n, max_class, VERIFY_DIM_LIMIT);

    // Exhaustive Jacobi validation of the free nilpotent construction.
    push("free-nilpotent-jacobi", {
        let mut failure = None;
        for &(n, c, _) in &sweep {
            if let Err(e) = lieschur::free_nilpotent(n, c).validate() {
                failure = Some(format!("free:{n},{c}: {e}"));
            }
        }
        // Test-harness hook: validating an algebra with one corrupted
        // structure constant keeps the failure path of `verify` honest.
        if std::env::var_os("LIESCHUR_VERIFY_INJECT_CORRUPTION").is_some() {
            use lieschur::linalg::rat;
            let corrupted = LieAlgebra::new(3, None, vec![(0, 1, 2, rat(1)), (0, 2, 0, rat(1))])
                .expect("entries are canonical");
            if let Err(e) = corrupted.validate() {
                failure = Some(format!("injected corruption detected: {e}"));
            }
        }
        match failure {
            None => Ok(format!("{} instances", sweep.len())),
            Some(f) => Err(f),
        }
    });

    // Homological multiplier against the closed form l_n(c+1).
    let small: Vec<&(u64, u64, usize)> = sweep
        .iter()
        .filter(|(_, _, dim)| *dim <= EULER_HOMOLOGY_DIM_LIMIT)
        .collect();
    push("multiplier-oracle-equivalence", {
        let mut failure = None;
        for &&(n, c, _) in &small {
            let got = BigUint::from(multiplier_dimension(&lieschur::free_nilpotent(n, c)));
            let expected = witt_dimension(n, c + 1);
            if got != expected {
                failure = Some(format!(
                    "free:{n},{c}: homology {got} != closed form {expected}"
                ));
            }
        }
        match failure {
            None => Ok(format!("{} instances", small.len())),
            Some(f) => Err(f),
        }
    });

    // Catalog plus sweep: nontriviality, bound soundness, Hardy <= Moneyhun.
    let mut suite: Vec<(String, LieAlgebra)> = standard_entries()
        .iter()
        .map(|e| (e.spec_string(), e.construct()))
        .collect();
    for &&(n, c, _) in &small {
        suite.push((format!("free:{n},{c}"), lieschur::free_nilpotent(n, c)));
    }

    push("nontriviality", {
        let mut failure = None;
        for (name, l) in &suite {
            match lieschur::verify_nontriviality(l) {
                Ok(NontrivialityVerdict::Fail { multiplier }) => {
                    failure = Some(format!("{name}: multiplier {multiplier} vanishes"));
                }
                Ok(NontrivialityVerdict::HypothesisNotMet { multiplier }) => {
                    if multiplier != 0 {
                        failure =
                            Some(format!("{name}: dim <= 1 but multiplier {multiplier} != 0"));
                    }
                }
                Ok(NontrivialityVerdict::Pass { .. }) => {}
                Err(e) => failure = Some(format!("{name}: {e}")),
            }
        }
        match failure {
            None => Ok(format!("{} algebras", suite.len())),
            Some(f) => Err(f),
        }
    });

    push("bound-soundness", {
        let mut failure = None;
        for (name, l) in &suite {
            match bounds::compare(l, name) {
                Ok(r) => {
                    let m = BigUint::from(r.multiplier_dim);
                    let hardy_ok = num_bigint::BigInt::from(m.clone()) <= r.bound_hardy;
                    if m > r.bound_class_generators || !hardy_ok || m > r.bound_moneyhun {
                        failure = Some(format!("{name}: multiplier exceeds a bound"));
                    }
                }
                Err(e) => failure = Some(format!("{name}: {e}")),
            }
        }
        match failure {
            None => Ok(format!("{} algebras", suite.len())),
            Some(f) => Err(f),
        }
    });

    push("hardy-below-moneyhun", {
        let mut failure = None;
        for (name, l) in &suite {
            if bounds::bound_hardy(l) > num_bigint::BigInt::from(bounds::bound_moneyhun(l)) {
                failure = Some(format!("{name}: Hardy bound above Moneyhun bound"));
            }
        }
        match failure {
            None => Ok(format!("{} algebras", suite.len())),
            Some(f) => Err(f),
        }
    });

    // Exact-sequence dimension identity on the free nilpotent family.
    push("euler-identity", {
        let mut failure = None;
        let mut count = 0;
        for n in 2..=max_n {
            for c in 2..=max_class {
                let report = euler_identity_free_nilpotent(n, c);
                count += 1;
                if !report.passed() {
                    failure = Some(format!("free:{n},{c}: identity failed"));
                }
            }
        }
        match failure {
            None => Ok(format!("{count} instances")),
            Some(f) => Err(f),
        }
    });

    // Inductive structure of the class/generator bound.
    push("bound-inductive-step", {
        let mut failure = None;
        let mut count = 0;
        for &(n, c, _) in &sweep {
            if c < 2 {
                continue;
            }
            let l = lieschur::free_nilpotent(n, c);
            let quotient = l.quotient_by_last_term().expect("class >= 2");
            let whole = bounds::class_generator_bound(&l).expect("nilpotent");
            let step = bounds::class_generator_bound(&quotient).expect("nilpotent")
                + witt_dimension(n, c + 1);
            count += 1;
            if whole != step {
                failure = Some(format!("free:{n},{c}: {whole} != {step}"));
            }
        }
        match failure {
            None => Ok(format!("{count} instances")),
            Some(f) => Err(f),
        }
    });

    // d2 * d3 = 0 on every catalog algebra of workable size.
    push("chain-complex", {
        let mut failure = None;
        let mut count = 0;
        for (name, l) in &suite {
            if l.dim() > 20 {
                continue;
            }
            count += 1;
            let product = ce_boundary_2(l)
                .multiply(&ce_boundary_3(l))
                .expect("boundary shapes compose");
            if !product.is_zero() {
                failure = Some(format!("{name}: d2 * d3 != 0"));
            }
        }
        match failure {
            None => Ok(format!("{count} algebras")),
            Some(f) => Err(f),
        }
    });

    // parse . serialize is the identity on the catalog.
    push("serialize-round-trip", {
        let mut failure = None;
        for (name, l) in &suite {
            let text = catalog::serialize(l);
            match catalog::parse(&text) {
                Ok(back) if &back == l => {}
                Ok(_) => failure = Some(format!("{name}: round trip changed the algebra")),
                Err(e) => failure = Some(format!("{name}: {e}")),
            }
        }
        match failure {
            None => Ok(format!("{} algebras", suite.len())),
            Some(f) => Err(f),
        }
    });

    checks
}
