use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::json;

use conjrep::{
    match_shape, relation_instances, search_kernel_report, verify_kernel, word_to_automorphism, Conclusion,
    GenWord, RepImage, SearchConfig, KERNEL_WORD_N3, KERNEL_WORD_N4,
};

/// Exact computations with the extension of the Lawrence-Krammer
/// representation to the conjugating automorphism group C_n.
#[derive(Parser)]
#[command(name = "conjrep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print ρ(word), symbolically or at a complex value of q.
    Eval {
        word: String,
        #[arg(long)]
        n: usize,
        /// Complex value for q, e.g. "2", "0.5-1i", "i".
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the action of a word on the free group and its certificate.
    Act {
        word: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check every defining relation in ρ and in the free group action.
    VerifyRelations {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a word lies in the kernel of ρ and is nontrivial.
    VerifyKernel(VerifyKernelArgs),
    /// Meet-in-the-middle search for nontrivial kernel words.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_len: usize,
        /// Forward half length, default ceil(max_len / 2).
        #[arg(long)]
        half_len: Option<usize>,
        /// PRNG seed; the CONJREP_SEED environment variable takes precedence.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
        /// Number of modular specialization points.
        #[arg(long, default_value_t = 2)]
        specializations: usize,
        #[arg(long)]
        json: bool,
    },
    /// Match a rank-3 word against the kernel word grammar.
    ShapeCheck {
        #[arg(long)]
        word: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Selection {
    /// Built-in word: 3 is the rank-3 word, 5 the rank-4 word.
    #[arg(long, value_parser = ["3", "5"])]
    theorem: Option<String>,
    #[arg(long, requires = "n")]
    word: Option<String>,
}

#[derive(Args)]
struct VerifyKernelArgs {
    #[command(flatten)]
    selection: Selection,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    json: bool,
}

/// A failure that maps to exit status 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<bool, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval { word, n, q, json } => eval(&word, n, q.as_deref(), json),
        Command::Act { word, n, json } => act(&word, n, json),
        Command::VerifyRelations { n, json } => verify_relations(n, json),
        Command::VerifyKernel(args) => verify(args),
        Command::Search {
            n,
            max_len,
            half_len,
            seed,
            threads,
            specializations,
            json,
        } => {
            let mut cfg = SearchConfig::new(n, max_len);
            if let Some(h) = half_len {
                cfg.half_len = h;
            }
            if let Some(t) = threads {
                cfg.threads = t;
            }
            cfg.specializations = specializations;
            cfg.seed = seed;
            match std::env::var("CONJREP_SEED") {
                Ok(s) => match s.trim().parse() {
                    Ok(v) => {
                        cfg.seed = v;
                        search(&cfg, json)
                    }
                    Err(_) => Err(UsageError(format!("CONJREP_SEED is not an integer: {s:?}"))),
                },
                Err(_) => search(&cfg, json),
            }
        }
        Command::ShapeCheck { word, json } => shape_check(&word, json),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_q(text: &str) -> Result<Complex64, UsageError> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t.replace('j', "i");
    t.parse::<Complex64>()
        .map_err(|_| UsageError(format!("cannot parse {text:?} as a complex number")))
}

fn eval(word: &str, n: usize, q: Option<&str>, json: bool) -> CmdResult {
    let w = GenWord::parse(word, n)?;
    let rep = RepImage::new(n)?;
    let m = rep.evaluate(&w)?;
    let mut out = io::stdout().lock();
    match q {
        None if json => writeln!(out, "{}", serde_json::to_string(&m)?)?,
        None => writeln!(out, "{m}")?,
        Some(q) => {
            let cm = m.specialize_complex(parse_q(q)?)?;
            if json {
                let d = cm.dim();
                let rows: Vec<Vec<[f64; 2]>> = (0..d)
                    .map(|r| (0..d).map(|c| cm.get(r, c)).map(|z| [z.re, z.im]).collect())
                    .collect();
                writeln!(out, "{}", json!({ "dim": d, "entries": rows }))?;
            } else {
                writeln!(out, "{cm}")?;
            }
        }
    }
    Ok(true)
}

fn act(word: &str, n: usize, json: bool) -> CmdResult {
    let w = GenWord::parse(word, n)?;
    let phi = word_to_automorphism(&w)?;
    let cert = phi.conjugacy_certificate()?;
    let mut out = io::stdout().lock();
    if json {
        let images: Vec<String> = phi.images().iter().map(|x| x.to_string()).collect();
        let rec = json!({
            "images": images,
            "certificate": { "pi": cert.pi.to_string(), "conjugators": cert.conjugators },
        });
        writeln!(out, "{rec}")?;
    } else {
        writeln!(out, "{phi}")?;
        writeln!(out, "pi = {}", cert.pi)?;
        for (i, f) in cert.conjugators.iter().enumerate() {
            writeln!(out, "f{} = {f}", i + 1)?;
        }
    }
    Ok(true)
}

fn verify_relations(n: usize, json: bool) -> CmdResult {
    let rep = RepImage::new(n)?;
    let mut out = io::stdout().lock();
    let mut failures = 0;
    let relations = relation_instances(n);
    for rel in &relations {
        let matrix = rep.evaluate(&rel.lhs)? == rep.evaluate(&rel.rhs)?;
        let action = word_to_automorphism(&rel.lhs)? == word_to_automorphism(&rel.rhs)?;
        let ok = matrix && action;
        if !ok {
            failures += 1;
        }
        if json {
            let rec = json!({
                "relation": rel.to_string(),
                "family": rel.family.name(),
                "matrix": matrix,
                "action": action,
            });
            writeln!(out, "{rec}")?;
        } else if !ok {
            let mut parts = Vec::new();
            if !matrix {
                parts.push("matrix");
            }
            if !action {
                parts.push("action");
            }
            writeln!(out, "FAIL [{}] {rel}", parts.join(", "))?;
        }
    }
    let summary = format!("{} of {} relations hold at n = {n}", relations.len() - failures, relations.len());
    if json {
        eprintln!("{summary}");
    } else {
        writeln!(out, "{summary}")?;
    }
    Ok(failures == 0)
}

fn verify(args: VerifyKernelArgs) -> CmdResult {
    let w = match (args.selection.theorem.as_deref(), args.selection.word) {
        (Some("3"), _) => GenWord::parse(KERNEL_WORD_N3, 3)?,
        (Some(_), _) => GenWord::parse(KERNEL_WORD_N4, 4)?,
        (None, Some(text)) => GenWord::parse(&text, args.n.expect("clap requires --n with --word"))?,
        (None, None) => unreachable!("clap requires a selection"),
    };
    let v = verify_kernel(&w);
    let mut out = io::stdout().lock();
    if args.json {
        writeln!(out, "{}", v.to_json())?;
    } else {
        writeln!(out, "word: {}", v.word)?;
        writeln!(out, "rho(w) = I: {}", v.matrix_is_identity)?;
        writeln!(out, "automorphism is identity: {}", v.automorphism_is_identity)?;
        writeln!(out, "verdict: {}", v.conclusion)?;
    }
    Ok(v.conclusion == Conclusion::InKernelNontrivial)
}

fn search(cfg: &SearchConfig, json: bool) -> CmdResult {
    let report = search_kernel_report(cfg)?;
    let mut out = io::stdout().lock();
    for v in &report.found {
        if json {
            writeln!(out, "{}", v.to_json())?;
        } else {
            writeln!(out, "{}\t{}", v.word.len(), v.word)?;
        }
    }
    let s = &report.stats;
    let summary = format!(
        "{} nontrivial kernel words (candidates {}, trivial {}, false matches {})",
        report.found.len(),
        s.candidates,
        s.trivial,
        s.false_matches
    );
    if json {
        eprintln!("{summary}");
    } else {
        writeln!(out, "{summary}")?;
    }
    Ok(!report.found.is_empty())
}

fn shape_check(word: &str, json: bool) -> CmdResult {
    let w = GenWord::parse(word, 3)?;
    let found = match_shape(&w);
    let mut out = io::stdout().lock();
    match (&found, json) {
        (Some(spec), true) => {
            let blocks: Vec<String> = spec.blocks.iter().map(|b| b.to_string()).collect();
            let variant = match spec.variant {
                conjrep::ShapeVariant::AFirst => "a-first",
                conjrep::ShapeVariant::TFirst => "t-first",
            };
            let rec = json!({
                "match": true,
                "r": spec.r(),
                "variant": variant,
                "blocks": blocks,
                "exponents": spec.exponents,
            });
            writeln!(out, "{rec}")?;
        }
        (Some(spec), false) => writeln!(out, "match {spec}")?,
        (None, true) => writeln!(out, "{}", json!({ "match": false }))?,
        (None, false) => writeln!(out, "no match")?,
    }
    Ok(found.is_some())
}
