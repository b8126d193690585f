use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use skewcode_core::codes::Correction;
use skewcode_core::fp_poly::{factor_xn_minus_1, monic_divisors};
use skewcode_core::gray::GrayImageCode;
use skewcode_core::reproduce;
use skewcode_core::search::{self, format_summary, Budgets, SearchParams};
use skewcode_core::text::{format_fp_polynomial, parse_fp_polynomial};
use skewcode_core::{
    evaluate_candidate, format_polynomial, lift_divisors, parse_polynomial, Automorphism, CodeRecord, Error,
    GeneratorForm, Message, PrimeField, RingElement, SkewCyclicCode, SkewPoly,
};

#[derive(Parser)]
#[command(name = "skewcode", version, about = "Skew cyclic codes over F_p + uF_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor x^n - 1 over F_p
    Factor {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
    },
    /// List the monic divisors of x^n - 1 over F_p
    Divisors {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
    },
    /// List every g1 + u*l that right-divides x^n - 1
    Lift {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g1: String,
    },
    /// Inspect, encode, decode or test words of a code given as a JSON record
    Code {
        action: CodeAction,
        #[arg(long)]
        spec: PathBuf,
        /// Message text; mixed codes take "IQ ; J"
        #[arg(long)]
        message: Option<String>,
        /// Received word as a polynomial of degree < n
        #[arg(long)]
        word: Option<String>,
    },
    /// Gray image parameters and generator matrix
    Gray {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        ell: usize,
    },
    /// Search free codes and rank their Gray images
    Search {
        #[arg(long)]
        p: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        s: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        ell: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        min_deg: usize,
        #[arg(long)]
        max_deg: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
        /// Add elapsed_ms to every record (output is then not reproducible)
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the reproduction checks and print a PASS/FAIL table
    VerifyPaper {
        /// Run only these criteria
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CodeAction {
    Info,
    Encode,
    Decode,
    Check,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() {
                3
            } else if e.is_budget() {
                2
            } else {
                1
            })
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Factor { p, n } => {
            let fac = factor_xn_minus_1(PrimeField::new(p)?, n);
            for (f, m) in &fac.factors {
                if *m == 1 {
                    println!("{}", format_fp_polynomial(f));
                } else {
                    println!("({})^{m}", format_fp_polynomial(f));
                }
            }
        }
        Command::Divisors { p, n } => {
            for d in monic_divisors(&factor_xn_minus_1(PrimeField::new(p)?, n))? {
                println!("{}", format_fp_polynomial(&d));
            }
        }
        Command::Lift { p, s, n, g1 } => {
            let aut = Automorphism::new(p, s)?;
            let base = parse_fp_polynomial(&g1, &aut)?;
            for g in lift_divisors(&base, n, &aut)?.generators(&aut) {
                println!("{}", format_polynomial(&g));
            }
        }
        Command::Code { action, spec, message, word } => {
            let code = load_code(&spec)?;
            return code_action(&code, action, message.as_deref(), word.as_deref());
        }
        Command::Gray { spec, ell } => {
            let code = load_code(&spec)?;
            let rec = evaluate_candidate(&code, ell, &Budgets::default())?;
            let d = rec.d.map_or_else(|| "?".to_string(), |d| d.to_string());
            println!("[{},{},{}] ({})", rec.length, rec.dimension, d, rec.method.as_str());
            for row in GrayImageCode::from_code(&code, ell)?.rows() {
                println!("{}", row.iter().map(u32::to_string).collect::<Vec<_>>().join(" "));
            }
        }
        Command::Search { p, n, s, ell, min_deg, max_deg, threads, timing, out } => {
            let mut params = SearchParams::new(p, n, s, ell);
            params.deg_min = min_deg;
            params.deg_max = max_deg;
            params.threads = threads;
            params.timed = timing;
            let outcome = search::search_best(&params)?;
            let json = serde_json::to_string_pretty(&outcome.records).expect("records serialize") + "\n";
            fs::write(&out, json).map_err(|e| Error::Record(format!("{}: {e}", out.display())))?;
            print!("{}", format_summary(&outcome.records));
            for (n, s, divisor, reason) in &outcome.skipped {
                eprintln!("skipped n={n} s={s} divisor {divisor}: {reason}");
            }
        }
        Command::VerifyPaper { only } => {
            let ids = if only.is_empty() { reproduce::CRITERIA.to_vec() } else { only };
            let mut all = true;
            for id in ids {
                if !reproduce::CRITERIA.contains(&id) {
                    return Err(Error::Record(format!("no criterion {id}")));
                }
                let outcome = reproduce::run(id);
                all &= outcome.passed;
                println!("{}", outcome.line());
            }
            return Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_code(path: &Path) -> Result<SkewCyclicCode, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Record(format!("{}: {e}", path.display())))?;
    CodeRecord::from_json(&text)?.to_code()
}

fn word_text(code: &SkewCyclicCode, word: &[RingElement]) -> String {
    format_polynomial(&SkewPoly::from_vector(code.aut(), word))
}

fn vector_text(word: &[RingElement]) -> String {
    format!("({})", word.iter().map(RingElement::to_string).collect::<Vec<_>>().join(", "))
}

fn message_text(m: &Message) -> String {
    match m {
        Message::NonMonic { i } => format_fp_polynomial(i),
        Message::Monic { iq } => format_polynomial(iq),
        Message::Mixed { iq, j } => format!("{} ; {}", format_polynomial(iq), format_fp_polynomial(j)),
    }
}

fn parse_message(code: &SkewCyclicCode, text: &str) -> Result<Message, Error> {
    let aut = code.aut();
    Ok(match code.form() {
        GeneratorForm::NonMonic { .. } => Message::NonMonic { i: parse_fp_polynomial(text, aut)? },
        GeneratorForm::Monic { .. } => Message::Monic { iq: parse_polynomial(text, aut)? },
        GeneratorForm::Mixed { .. } => {
            let (iq, j) = text.split_once(';').ok_or(Error::Syntax {
                pos: text.len(),
                msg: "mixed messages are written \"IQ ; J\"".into(),
            })?;
            Message::Mixed { iq: parse_polynomial(iq, aut)?, j: parse_fp_polynomial(j, aut)? }
        }
    })
}

fn parse_word(code: &SkewCyclicCode, text: &str) -> Result<Vec<RingElement>, Error> {
    let poly = parse_polynomial(text, code.aut())?;
    match poly.degree() {
        Some(d) if d >= code.n() => Err(Error::LengthMismatch { expected: code.n(), got: d + 1 }),
        _ => Ok(poly.to_vector(code.n())),
    }
}

fn require<'a>(value: Option<&'a str>, flag: &str) -> Result<&'a str, Error> {
    value.ok_or_else(|| Error::Syntax { pos: 0, msg: format!("missing --{flag}") })
}

fn code_action(
    code: &SkewCyclicCode,
    action: CodeAction,
    message: Option<&str>,
    word: Option<&str>,
) -> Result<ExitCode, Error> {
    match action {
        CodeAction::Info => {
            println!("code: {code}");
            println!("form: {}", code.form().name());
            println!("n: {}", code.n());
            println!("s: {}", code.aut().s());
            println!("r: {}", code.r());
            if let Some(t) = code.t() {
                println!("t: {t}");
            }
            match code.cardinality() {
                Some(c) => println!("size: {c} = {}^{}", code.field().p(), code.fp_dimension()),
                None => println!("size: {}^{}", code.field().p(), code.fp_dimension()),
            }
            println!("generator matrix:");
            for row in code.spanning_set() {
                println!("  {}", vector_text(&row));
            }
        }
        CodeAction::Encode => {
            let m = parse_message(code, require(message, "message")?)?;
            let c = code.encode(&m)?;
            println!("{}", word_text(code, &c));
            println!("{}", vector_text(&c));
        }
        CodeAction::Check => {
            let v = parse_word(code, require(word, "word")?)?;
            println!("{}", code.contains(&v)?);
        }
        CodeAction::Decode => {
            let v = parse_word(code, require(word, "word")?)?;
            if let GeneratorForm::NonMonic { .. } = code.form() {
                let m = code.recover_message(&v)?;
                println!("message: {}", message_text(&m));
                return Ok(ExitCode::SUCCESS);
            }
            let trace = code.decode_trace(&v)?;
            println!("l1: {}", format_fp_polynomial(&trace.l1));
            println!("l2: {}", format_fp_polynomial(&trace.l2));
            println!("r1: {}", format_fp_polynomial(&trace.r1));
            println!("r2: {}", format_fp_polynomial(&trace.r2));
            println!("t: {}", format_fp_polynomial(&trace.t));
            println!("s: {}", format_fp_polynomial(&trace.s_err));
            println!("s1: {}", format_fp_polynomial(&trace.syndromes.s1));
            println!("s2: {}", format_fp_polynomial(&trace.syndromes.s2));
            let Correction { word: fixed, error } = code.correct_single_u_error(&v)?;
            match error {
                None => println!("error: none"),
                Some((i, gamma)) => println!("error: {gamma}*u*x^{i}"),
            }
            println!("codeword: {}", word_text(code, &fixed));
            println!("message: {}", message_text(&code.recover_message(&fixed)?));
        }
    }
    Ok(ExitCode::SUCCESS)
}
