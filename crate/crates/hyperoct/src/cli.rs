//! Command-line front end: argument parsing, dispatch, report
//! formatting, and the exit-code contract (0 all pass, 1 any fail
//! verdict, 2 usage error).
//!
//! Timing goes to standard error so that standard output is
//! byte-for-byte deterministic for fixed inputs.

use crate::classes::IndexSet;
use crate::genfun::{
    fg_genfun, identity_check, verify_all_jobs, verify_conjecture, FgVariant, IdentityVariant,
    SupportFamily, VerificationReport,
};
use crate::group::{parabolic_decompose, SignedPermutation};
use crate::involutions::{
    check_involution, circle_involution, star_involution, vee_involution, InvolutionKind,
};
use crate::poly::IntPolynomial;
use crate::stats::{l_value, length_stats, StatRecord};
use crate::symrank::{census_size, sym_rank_check, sym_rank_counts_jobs};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const EXIT_PASS: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "hyperoct",
    version,
    about = "Exact statistics and polynomial identities on signed permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Chessboard,
    Diagonal,
    M,
    E,
}

impl From<FamilyArg> for SupportFamily {
    fn from(f: FamilyArg) -> SupportFamily {
        match f {
            FamilyArg::Chessboard => SupportFamily::Chessboard,
            FamilyArg::Diagonal => SupportFamily::Diagonal,
            FamilyArg::M => SupportFamily::Monochrome,
            FamilyArg::E => SupportFamily::EvenFactors,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Star,
    Circle,
    Vee,
}

impl From<KindArg> for InvolutionKind {
    fn from(k: KindArg) -> InvolutionKind {
        match k {
            KindArg::Star => InvolutionKind::Star,
            KindArg::Circle => InvolutionKind::Circle,
            KindArg::Vee => InvolutionKind::Vee,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityArg {
    Stanley,
    Evenperm,
}

#[derive(Clone, Copy, ValueEnum)]
enum FgArg {
    /// sum (-1)^neg X^(2l - neg)
    F0,
    /// sum (-1)^neg X^(2l + neg)
    F1,
    /// sum (-1)^neg X^l
    G,
}

#[derive(Subcommand)]
enum Command {
    /// Print all statistics of one element
    Stats {
        /// Window, e.g. "[1,-4,-3,2]"
        window: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare descent-class sums with the product formula polynomials
    Verify {
        #[arg(long)]
        n: usize,
        /// "0,2", "" for the empty set, or "all" for every subset
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads (default 1; HYPEROCT_JOBS as fallback)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Supporting-set restriction identities
    Support {
        #[arg(long)]
        n: usize,
        /// Subset, or "all" for every admissible subset
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply a sign-reversing involution, or run its exhaustive suite
    Involution {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Run the exhaustive property suite over the domain in B_n
        #[arg(long)]
        check: bool,
        /// Apply to one element instead, e.g. --window "[3,-2,-1]"
        #[arg(long)]
        window: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Symmetric-group identities (Stanley / halved multinomial)
    Identity {
        #[arg(long)]
        n: usize,
        /// Subset, or "all" for every admissible subset
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        #[arg(long, value_enum)]
        variant: IdentityArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Symmetric-matrix rank census over a prime field
    Symrank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        /// Corank; omit to check every i and the rank partition
        #[arg(long)]
        i: Option<usize>,
        /// Enumeration cap in matrices
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Parabolic decomposition w = w^I w_I
    Decompose {
        window: String,
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Auxiliary signed generating functions over a descent class
    Genfun {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        #[arg(long, value_enum)]
        variant: FgArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Parses `argv` and runs; returns the process exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let start = std::time::Instant::now();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            // usage errors keep to a one-line diagnostic
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    code
}

pub fn main() -> i32 {
    main_with_args(std::env::args_os())
}

fn jobs_or_env(jobs: Option<usize>) -> usize {
    jobs.or_else(|| {
        std::env::var("HYPEROCT_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

fn parse_window(text: &str) -> Result<SignedPermutation, String> {
    text.parse::<SignedPermutation>().map_err(|e| e.to_string())
}

enum SubsetArg {
    All,
    One(IndexSet),
}

fn parse_subset(n: usize, text: &str) -> Result<SubsetArg, String> {
    if n == 0 || n > 16 {
        return Err(format!("degree {n} out of the supported range 1..=16"));
    }
    if text.trim() == "all" {
        return Ok(SubsetArg::All);
    }
    IndexSet::parse(n, text)
        .map(SubsetArg::One)
        .map_err(|e| e.to_string())
}

fn poly_coeffs(p: &IntPolynomial) -> Vec<i64> {
    p.coeffs()
        .iter()
        .map(|&c| i64::try_from(c).expect("coefficient exceeds JSON range"))
        .collect()
}

fn subset_members(s: &IndexSet) -> Vec<usize> {
    s.iter().collect()
}

fn report_json(r: &VerificationReport) -> Value {
    json!({
        "n": r.n,
        "I": subset_members(&r.subset),
        "lhs": poly_coeffs(&r.lhs),
        "rhs": poly_coeffs(&r.rhs),
        "verdict": r.verdict.to_string(),
    })
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn print_reports(reports: &[VerificationReport], format: Format) {
    match format {
        Format::Text => {
            for r in reports {
                println!(
                    "{} n={} I={{{}}} elements={} {}",
                    r.label, r.n, r.subset, r.element_count, r.verdict
                );
                if !r.passed() {
                    println!("  lhs = {}", r.lhs);
                    println!("  rhs = {}", r.rhs);
                }
            }
        }
        Format::Json => {
            let arr: Vec<Value> = reports.iter().map(report_json).collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&Value::Array(arr)).unwrap()
            );
        }
        Format::Csv => {
            println!("n,subset,lhs,rhs,verdict");
            for r in reports {
                println!(
                    "{},{},{},{},{}",
                    r.n,
                    csv_quote(&r.subset.to_string()),
                    csv_quote(&r.lhs.to_string()),
                    csv_quote(&r.rhs.to_string()),
                    r.verdict
                );
            }
        }
    }
    eprintln!(
        "{} checks, {} failed",
        reports.len(),
        reports.iter().filter(|r| !r.passed()).count(),
    );
}

fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(|r| r.passed()) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Stats { window, format } => {
            let w = parse_window(&window)?;
            let r = StatRecord::of(&w);
            match format {
                Format::Text => {
                    println!("window   {w}");
                    println!("inv      {}", r.inv);
                    println!("neg      {}", r.neg);
                    println!("nsp      {}", r.nsp);
                    println!("length   {}", r.length);
                    println!("L        {}", r.l_stat);
                    println!("a        {}", r.a);
                    println!("b        {}", r.b);
                    println!("c        {}", r.c);
                    println!("descents {}", r.descents);
                }
                Format::Json => {
                    let v = json!({
                        "window": w.to_string(),
                        "inv": r.inv,
                        "neg": r.neg,
                        "nsp": r.nsp,
                        "length": r.length,
                        "L": r.l_stat,
                        "a": r.a,
                        "b": r.b,
                        "c": r.c,
                        "descents": subset_members(&r.descents),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
                Format::Csv => {
                    println!("window,inv,neg,nsp,length,L,a,b,c,descents");
                    println!(
                        "{},{},{},{},{},{},{},{},{},{}",
                        csv_quote(&w.to_string()),
                        r.inv,
                        r.neg,
                        r.nsp,
                        r.length,
                        r.l_stat,
                        r.a,
                        r.b,
                        r.c,
                        csv_quote(&r.descents.to_string())
                    );
                }
            }
            Ok(EXIT_PASS)
        }

        Command::Verify {
            n,
            subset,
            format,
            jobs,
        } => {
            let jobs = jobs_or_env(jobs);
            let reports = match parse_subset(n, &subset)? {
                SubsetArg::All => verify_all_jobs(n, jobs),
                SubsetArg::One(s) => vec![verify_conjecture(n, &s)],
            };
            print_reports(&reports, format);
            Ok(exit_code(&reports))
        }

        Command::Support {
            n,
            subset,
            family,
            format,
        } => {
            let family = SupportFamily::from(family);
            let reports = match parse_subset(n, &subset)? {
                SubsetArg::All => IndexSet::all(n)
                    .filter(|s| family.admissible(n, s))
                    .map(|s| crate::genfun::support_check(n, &s, family))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?,
                SubsetArg::One(s) => {
                    vec![crate::genfun::support_check(n, &s, family).map_err(|e| e.to_string())?]
                }
            };
            print_reports(&reports, format);
            Ok(exit_code(&reports))
        }

        Command::Involution {
            kind,
            n,
            check,
            window,
            format,
        } => {
            let kind = InvolutionKind::from(kind);
            if let Some(text) = window {
                let w = parse_window(&text)?;
                if w.n() != n {
                    return Err(format!("window {w} has degree {}, not {n}", w.n()));
                }
                let report = match kind {
                    InvolutionKind::Star => star_involution(&w),
                    InvolutionKind::Circle => circle_involution(&w),
                    InvolutionKind::Vee => vee_involution(&w),
                }
                .map_err(|e| e.to_string())?;
                match format {
                    Format::Text => {
                        println!("input  {}", report.input);
                        println!("output {}", report.output);
                        let pivot: Vec<String> =
                            report.pivot.iter().map(|i| i.to_string()).collect();
                        println!("pivot  {}", pivot.join(","));
                    }
                    Format::Json => {
                        let v = json!({
                            "input": report.input.to_string(),
                            "output": report.output.to_string(),
                            "pivot": report.pivot,
                        });
                        println!("{}", serde_json::to_string_pretty(&v).unwrap());
                    }
                    Format::Csv => {
                        let pivot: Vec<String> =
                            report.pivot.iter().map(|i| i.to_string()).collect();
                        println!("input,output,pivot");
                        println!(
                            "{},{},{}",
                            csv_quote(&report.input.to_string()),
                            csv_quote(&report.output.to_string()),
                            csv_quote(&pivot.join(","))
                        );
                    }
                }
                return Ok(EXIT_PASS);
            }
            if !check {
                return Err("involution needs --check or --window".into());
            }
            match check_involution(kind, n) {
                Ok(summary) => {
                    println!(
                        "involution {:?} n={} domain={} ok",
                        summary.kind, summary.n, summary.domain_size
                    );
                    Ok(EXIT_PASS)
                }
                Err(counterexample) => {
                    println!("involution {kind:?} n={n} FAILED: {counterexample}");
                    Ok(EXIT_FAIL)
                }
            }
        }

        Command::Identity {
            n,
            subset,
            variant,
            format,
        } => {
            let variant = match variant {
                IdentityArg::Stanley => IdentityVariant::Stanley,
                IdentityArg::Evenperm => IdentityVariant::EvenPerm,
            };
            let admissible = |s: &IndexSet| match variant {
                IdentityVariant::Stanley => true,
                IdentityVariant::EvenPerm => n % 2 == 0 && s.is_even(),
            };
            let reports = match parse_subset(n, &subset)? {
                SubsetArg::All => IndexSet::all(n)
                    .filter(|s| admissible(s))
                    .map(|s| identity_check(n, &s, variant))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?,
                SubsetArg::One(s) => {
                    vec![identity_check(n, &s, variant).map_err(|e| e.to_string())?]
                }
            };
            print_reports(&reports, format);
            Ok(exit_code(&reports))
        }

        Command::Symrank {
            n,
            q,
            i,
            budget,
            jobs,
            format,
        } => {
            let jobs = jobs_or_env(jobs);
            if let Some(i) = i {
                if i > n {
                    return Err(format!("corank {i} exceeds n={n}"));
                }
                let r = sym_rank_check(n, q, i, budget).map_err(|e| e.to_string())?;
                match format {
                    Format::Text => println!(
                        "n={n} q={q} i={i} brute={} formula={} {}",
                        r.lhs.coeff(0),
                        r.rhs.coeff(0),
                        r.verdict
                    ),
                    Format::Json => {
                        let v = json!({
                            "n": n, "q": q, "i": i,
                            "brute": r.lhs.coeff(0) as i64,
                            "formula": r.rhs.coeff(0) as i64,
                            "verdict": r.verdict.to_string(),
                        });
                        println!("{}", serde_json::to_string_pretty(&v).unwrap());
                    }
                    Format::Csv => {
                        println!("n,q,i,brute,formula,verdict");
                        println!(
                            "{n},{q},{i},{},{},{}",
                            r.lhs.coeff(0),
                            r.rhs.coeff(0),
                            r.verdict
                        );
                    }
                }
                return Ok(exit_code(&[r]));
            }
            // all coranks in one census, plus the rank partition row sum
            let counts = sym_rank_counts_jobs(n, q, budget, jobs).map_err(|e| e.to_string())?;
            let mut all_pass = true;
            let mut rows = Vec::new();
            if format == Format::Csv {
                println!("n,q,i,brute,formula,verdict");
            }
            for i in 0..=n {
                let formula = crate::symrank::sym_rank_formula(n, q, i);
                let brute = counts[n - i] as i128;
                let pass = brute == formula;
                all_pass &= pass;
                rows.push(json!({
                    "n": n, "q": q, "i": i,
                    "brute": brute as i64,
                    "formula": formula as i64,
                    "verdict": if pass { "pass" } else { "fail" },
                }));
                match format {
                    Format::Text => println!(
                        "n={n} q={q} i={i} brute={brute} formula={formula} {}",
                        if pass { "pass" } else { "fail" }
                    ),
                    Format::Csv => println!(
                        "{n},{q},{i},{brute},{formula},{}",
                        if pass { "pass" } else { "fail" }
                    ),
                    Format::Json => {}
                }
            }
            let total: u64 = counts.iter().sum();
            let expected = census_size(n, q);
            let partition_ok = total as u128 == expected;
            all_pass &= partition_ok;
            match format {
                Format::Text => println!(
                    "rank partition total={total} expected={expected} {}",
                    if partition_ok { "pass" } else { "fail" }
                ),
                Format::Csv => println!(
                    "{n},{q},partition,{total},{expected},{}",
                    if partition_ok { "pass" } else { "fail" }
                ),
                Format::Json => {
                    rows.push(json!({
                        "n": n, "q": q, "check": "rank-partition",
                        "total": total,
                        "expected": expected as u64,
                        "verdict": if partition_ok { "pass" } else { "fail" },
                    }));
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&Value::Array(rows)).unwrap()
                    );
                }
            }
            Ok(if all_pass { EXIT_PASS } else { EXIT_FAIL })
        }

        Command::Decompose {
            window,
            subset,
            format,
        } => {
            let w = parse_window(&window)?;
            let s = match parse_subset(w.n(), &subset)? {
                SubsetArg::One(s) => s,
                SubsetArg::All => return Err("decompose needs one concrete subset".into()),
            };
            let f = parabolic_decompose(&w, &s);
            match format {
                Format::Text => {
                    println!(
                        "whole          {}  l={} L={}",
                        f.whole,
                        length_stats(&f.whole).3,
                        l_value(&f.whole)
                    );
                    println!("subset         {{{s}}}");
                    println!(
                        "quotient       {}  l={} L={}",
                        f.quotient,
                        length_stats(&f.quotient).3,
                        l_value(&f.quotient)
                    );
                    println!(
                        "subgroup_part  {}  l={} L={}",
                        f.subgroup_part,
                        length_stats(&f.subgroup_part).3,
                        l_value(&f.subgroup_part)
                    );
                }
                Format::Json => {
                    let v = json!({
                        "whole": f.whole.to_string(),
                        "I": subset_members(&s),
                        "quotient": f.quotient.to_string(),
                        "subgroup_part": f.subgroup_part.to_string(),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
                Format::Csv => {
                    println!("whole,subset,quotient,subgroup_part");
                    println!(
                        "{},{},{},{}",
                        csv_quote(&f.whole.to_string()),
                        csv_quote(&s.to_string()),
                        csv_quote(&f.quotient.to_string()),
                        csv_quote(&f.subgroup_part.to_string())
                    );
                }
            }
            Ok(EXIT_PASS)
        }

        Command::Genfun {
            n,
            subset,
            variant,
            format,
        } => {
            let s = match parse_subset(n, &subset)? {
                SubsetArg::One(s) => s,
                SubsetArg::All => return Err("genfun needs one concrete subset".into()),
            };
            let variant = match variant {
                FgArg::F0 => FgVariant::FEta0,
                FgArg::F1 => FgVariant::FEta1,
                FgArg::G => FgVariant::G,
            };
            let p = fg_genfun(n, &s, variant);
            match format {
                Format::Text => println!("{p}"),
                Format::Json => {
                    println!("{}", serde_json::to_string(&poly_coeffs(&p)).unwrap());
                }
                Format::Csv => {
                    let row: Vec<String> = poly_coeffs(&p).iter().map(|c| c.to_string()).collect();
                    println!("{}", row.join(","));
                }
            }
            Ok(EXIT_PASS)
        }
    }
}
