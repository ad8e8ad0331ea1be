//! `numsg`: command-line access to numerical semigroup computations.
//!
//! Semigroups are given as `5,7,9` (generators), `gaps:1,2,4` or
//! `kunz:5:16,7,18,9` (multiplicity and Kunz coordinates).

mod specifier;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use numsg::oracle::{self, OracleBudget};
use numsg::{
    canonical_maximal, classify, enumerate_maximal, is_irreducible, is_m_irreducible, min_genus,
    minimal_decomposition, oversemigroups_with, pseudo_frobenius, special_gaps,
    EnumerationOptions, Error, FrobeniusPair, NumericalSemigroup, DEFAULT_LIMIT,
};
use serde_json::{json, Value};

use specifier::SemigroupSpecifier;

#[derive(Parser, Debug)]
#[command(name = "numsg", version, about = "Numerical semigroups of fixed multiplicity")]
#[command(arg_required_else_help = true)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Recompute the answer by brute force and compare.
    #[arg(long, global = true)]
    verify: bool,
    /// Worker threads for frontier expansion (1 = sequential).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiplicity, Frobenius number, genus, gaps, coordinates and Apéry set.
    Info { semigroup: String },
    /// Pseudo-Frobenius numbers.
    Pf { semigroup: String },
    /// Special gaps.
    SpecialGaps { semigroup: String },
    /// Oversemigroups with the same multiplicity.
    Oversemigroups {
        semigroup: String,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Ordinary irreducibility.
    Irreducible { semigroup: String },
    /// Irreducibility among semigroups of the same multiplicity.
    MIrreducible { semigroup: String },
    /// m-symmetric, m-pseudosymmetric or not-m-irreducible.
    Classify { semigroup: String },
    /// Least genus for a multiplicity and Frobenius number.
    MinGenus { m: u64, frobenius: u64 },
    /// Maximal semigroups with a given multiplicity and Frobenius number.
    Maximal {
        m: u64,
        frobenius: u64,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Decomposition into the fewest m-irreducible semigroups.
    Decompose {
        semigroup: String,
        /// Also list every minimal m-irreducible oversemigroup.
        #[arg(long)]
        all_minimals: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Domain(e) => e.fmt(f),
            Failure::Mismatch(msg) => write!(f, "VerifyMismatch: {msg}"),
        }
    }
}

struct Report {
    text: String,
    json: Value,
}

fn words(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn tuples(v: &[NumericalSemigroup]) -> Value {
    Value::Array(v.iter().map(|s| json!(s.coords())).collect())
}

fn lines(v: &[NumericalSemigroup]) -> String {
    v.iter().map(|s| format!("{s}\n")).collect()
}

fn mismatch(what: &str, fast: impl std::fmt::Debug, brute: impl std::fmt::Debug) -> String {
    format!("{what}: computed {fast:?}, brute force {brute:?}")
}

fn info(s: &NumericalSemigroup) -> Report {
    let frob = s.frobenius().ok();
    let ap = s.apery_set().elements();
    let gaps = s.gaps();
    let text = format!(
        "semigroup: {s}\nmultiplicity: {}\nfrobenius: {}\ngenus: {}\ngaps: {}\ncoordinates: {}\napery: {}\n",
        s.multiplicity(),
        frob.map_or_else(|| "none".to_string(), |f| f.to_string()),
        s.genus(),
        words(&gaps),
        words(s.coords()),
        words(&ap),
    );
    let json = json!({
        "m": s.multiplicity(),
        "coords": s.coords(),
        "frobenius": frob,
        "genus": s.genus(),
        "gaps": gaps,
        "apery": ap,
    });
    Report { text, json }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let parse = |spec: &str| SemigroupSpecifier::parse(spec)?.build();
    let budget = OracleBudget::default();
    let parallel = cli.threads > 1;
    let verify = |check: Result<(), String>| -> Result<(), Failure> {
        if !cli.verify {
            return Ok(());
        }
        check.map_err(Failure::Mismatch)?;
        eprintln!("verify: ok");
        Ok(())
    };

    let report = match &cli.command {
        Command::Info { semigroup } => {
            let s = parse(semigroup)?;
            if cli.verify {
                let back = NumericalSemigroup::from_gaps(&s.gaps());
                verify(if back.as_ref() == Ok(&s) {
                    Ok(())
                } else {
                    Err(mismatch("semigroup from gaps", &s, back))
                })?;
            }
            info(&s)
        }
        Command::Pf { semigroup } => {
            let s = parse(semigroup)?;
            let pf = pseudo_frobenius(&s)?;
            if cli.verify {
                let f = s.frobenius()?;
                let m = s.multiplicity();
                let brute: Vec<u64> = s
                    .gaps()
                    .into_iter()
                    .filter(|&x| (1..=f + m).all(|t| !s.contains(t) || s.contains(x + t)))
                    .collect();
                verify(if brute == pf { Ok(()) } else { Err(mismatch("pf", &pf, brute)) })?;
            }
            Report {
                text: format!("{}\n", words(&pf)),
                json: json!(pf),
            }
        }
        Command::SpecialGaps { semigroup } => {
            let s = parse(semigroup)?;
            let sg = special_gaps(&s)?;
            if cli.verify {
                let brute = oracle::brute_special_gaps(&s)?;
                verify(if brute == sg { Ok(()) } else { Err(mismatch("special gaps", &sg, brute)) })?;
            }
            Report {
                text: format!("{}\n", words(&sg)),
                json: json!(sg),
            }
        }
        Command::Oversemigroups { semigroup, limit } => {
            let s = parse(semigroup)?;
            let opts = EnumerationOptions {
                limit: Some(*limit),
                parallel,
            };
            let over = oversemigroups_with(&s, &opts)?;
            if cli.verify {
                let brute = oracle::brute_oversemigroups(&s, &budget)?;
                verify(if brute == over {
                    Ok(())
                } else {
                    Err(mismatch("count", over.len(), brute.len()))
                })?;
            }
            Report {
                text: lines(&over),
                json: tuples(&over),
            }
        }
        Command::Irreducible { semigroup } => {
            let s = parse(semigroup)?;
            let irr = is_irreducible(&s)?;
            if cli.verify {
                let f = s.frobenius()?;
                let brute = !(1..f).any(|x| !s.contains(x) && !s.contains(f - x) && 2 * x != f);
                verify(if brute == irr { Ok(()) } else { Err(mismatch("irreducible", irr, brute)) })?;
            }
            Report {
                text: format!("{irr}\n"),
                json: json!(irr),
            }
        }
        Command::MIrreducible { semigroup } => {
            let s = parse(semigroup)?;
            let irr = is_m_irreducible(&s)?;
            if cli.verify {
                let brute = oracle::brute_is_m_irreducible(&s, &budget)?;
                verify(if brute == irr { Ok(()) } else { Err(mismatch("m-irreducible", irr, brute)) })?;
            }
            Report {
                text: format!("{irr}\n"),
                json: json!(irr),
            }
        }
        Command::Classify { semigroup } => {
            let s = parse(semigroup)?;
            let label = classify(&s)?;
            if cli.verify {
                let brute = oracle::brute_is_m_irreducible(&s, &budget)?;
                let fast = label != numsg::ClassificationLabel::NotMIrreducible;
                verify(if brute == fast { Ok(()) } else { Err(mismatch("m-irreducible", fast, brute)) })?;
            }
            Report {
                text: format!("{label}\n"),
                json: json!(label.as_str()),
            }
        }
        Command::MinGenus { m, frobenius } => {
            let pair = FrobeniusPair::new(*m, *frobenius)?;
            let g = min_genus(pair);
            if cli.verify {
                let brute = oracle::enumerate_s_m_f(*m, *frobenius, &budget)?
                    .iter()
                    .map(NumericalSemigroup::genus)
                    .min();
                verify(if brute == Some(g) { Ok(()) } else { Err(mismatch("min genus", g, brute)) })?;
            }
            Report {
                text: format!("{g}\n"),
                json: json!(g),
            }
        }
        Command::Maximal { m, frobenius, limit } => {
            let pair = FrobeniusPair::new(*m, *frobenius)?;
            let maximal = match canonical_maximal(pair) {
                Ok(s) => vec![s],
                Err(Error::NotUnique { .. }) => enumerate_maximal(
                    pair,
                    &EnumerationOptions {
                        limit: Some(*limit),
                        parallel,
                    },
                )?,
                Err(e) => return Err(e.into()),
            };
            if cli.verify {
                let brute = oracle::brute_maximal(*m, *frobenius, &budget)?;
                verify(if brute == maximal {
                    Ok(())
                } else {
                    Err(mismatch("count", maximal.len(), brute.len()))
                })?;
            }
            Report {
                text: lines(&maximal),
                json: tuples(&maximal),
            }
        }
        Command::Decompose {
            semigroup,
            all_minimals,
        } => {
            let s = parse(semigroup)?;
            let d = minimal_decomposition(&s, parallel)?;
            if cli.verify {
                let brute = oracle::brute_minimal_m_irreducible(&s, &budget)?;
                let p: Vec<Vec<u64>> = brute
                    .iter()
                    .map(|t| d.target.iter().copied().filter(|&h| !t.contains(h)).collect())
                    .collect();
                let k = oracle::brute_min_cover(&d.target, &p, &budget)?;
                verify(if brute != d.minimals {
                    Err(mismatch("minimals", d.minimals.len(), brute.len()))
                } else if k != d.cover_size() {
                    Err(mismatch("cover size", d.cover_size(), k))
                } else {
                    Ok(())
                })?;
            }
            let mut text = format!("target: {}\n", words(&d.target));
            if *all_minimals {
                text.push_str("minimals:\n");
                for t in &d.minimals {
                    let p = numsg::p_set(&s, t)?;
                    text.push_str(&format!("  {t}  P: {}\n", words(&p)));
                }
            }
            text.push_str(&format!("components: {}\n", d.components.len()));
            for (c, p) in d.components.iter().zip(&d.p_sets) {
                text.push_str(&format!("  {c}  P: {}\n", words(p)));
            }
            let json = json!({
                "target": d.target,
                "minimals": tuples(&d.minimals),
                "components": tuples(&d.components),
                "p_sets": d.p_sets,
            });
            Report { text, json }
        }
    };
    Ok(report)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            let names: Vec<String> = Cli::command()
                .get_subcommands()
                .map(|c| c.get_name().to_string())
                .collect();
            eprintln!("valid subcommands: {}", names.join(", "));
            return ExitCode::from(2);
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.max(1))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text),
                Format::Json => println!("{}", report.json),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
