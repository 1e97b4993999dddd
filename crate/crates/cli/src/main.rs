//! `braid`: command-line front end for the braid word problem solvers.
//!
//! Words come from positional arguments or, when none are given, from stdin
//! one per line. Exit codes: 0 success (or "trivial"/"equal"), 1 a negative
//! answer or a fuzz disagreement, 2 a usage or resource error.

use std::io::{self, BufRead, Write};
use std::process::ExitCode;
use std::time::Instant;

use braid_core::dynnikov::coords;
use braid_core::gridnf::{equal, greedy_nf, symmetric_nf, Form};
use braid_core::handle::{handle_reduce_with, handle_trace, render_with_handle, shorten_with};
use braid_core::oracle::{cross_check, random_word, FuzzParams, Method};
use braid_core::redress::{redress_left_with, redress_right_with, Strategy};
use braid_core::{BraidError, BraidWord, Format};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

const BENCH_HEADER: &str = "# braid-bench v1";
const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Parser, Debug)]
#[command(name = "braid", version, about = "Solve the word problem of the braid groups")]
struct Cli {
    /// Strand count; by default the smallest that fits each word.
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Word format for input and output.
    #[arg(long, global = true, default_value = "alpha", value_parser = parse_format)]
    format: Format,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Rewrite budget for redressing and handle reduction.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the greedy or symmetric normal form.
    Normalize {
        #[arg(long, value_enum, default_value_t = FormArg::Greedy)]
        form: FormArg,
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Decide whether words represent the unit braid.
    Trivial {
        #[arg(long, default_value = "greedy")]
        method: Method,
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Decide whether two words represent the same braid.
    Equal {
        #[arg(long, value_enum, default_value_t = FormArg::Greedy)]
        form: FormArg,
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Print Dynnikov coordinates.
    Coords {
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Redress to u v^-1 (or v^-1 u with --left); prints u then v.
    Redress {
        #[arg(long)]
        left: bool,
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Handle reduction.
    Reduce {
        /// Print every word with its reduced handle in brackets.
        #[arg(long)]
        trace: bool,
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Shorten a word by repeated handle reduction.
    Shorten {
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Time the triviality methods on random words; CSV on stdout.
    Bench {
        #[arg(long, default_value_t = 64)]
        len: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Comma-separated methods; all by default.
        #[arg(long, value_delimiter = ',')]
        methods: Vec<Method>,
    },
    /// Cross-check all methods on random words; JSON report on stdout.
    Fuzz {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 64)]
        max_len: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormArg {
    Greedy,
    Symmetric,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

enum Failure {
    Braid(BraidError),
    Io(io::Error),
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        Failure::Braid(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<ExitCode, Failure>;

struct Ctx {
    n: Option<usize>,
    format: Format,
    json: bool,
    budget: u64,
}

impl Ctx {
    fn words(&self, args: &[String]) -> Result<Vec<BraidWord>, Failure> {
        let lines: Vec<String> = if args.is_empty() {
            io::stdin().lock().lines().collect::<io::Result<_>>()?
        } else {
            args.to_vec()
        };
        Ok(lines
            .iter()
            .map(|l| BraidWord::parse(l.trim(), self.format, self.n))
            .collect::<Result<_, _>>()?)
    }

    fn word(&self, text: &str) -> Result<BraidWord, Failure> {
        Ok(BraidWord::parse(text, self.format, self.n)?)
    }

    fn render(&self, w: &BraidWord) -> Result<String, Failure> {
        Ok(w.render(self.format)?)
    }
}

fn normalize(ctx: &Ctx, form: FormArg, words: &[String], out: &mut impl Write) -> Outcome {
    for w in ctx.words(words)? {
        match (form, ctx.json) {
            (FormArg::Greedy, false) => writeln!(out, "{}", greedy_nf(&w))?,
            (FormArg::Greedy, true) => writeln!(out, "{}", serde_json::to_string(&greedy_nf(&w))?)?,
            (FormArg::Symmetric, false) => writeln!(out, "{}", symmetric_nf(&w))?,
            (FormArg::Symmetric, true) => writeln!(out, "{}", serde_json::to_string(&symmetric_nf(&w))?)?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn trivial(ctx: &Ctx, method: Method, words: &[String], out: &mut impl Write) -> Outcome {
    let mut all = true;
    for w in ctx.words(words)? {
        let o = method.run(&w, Some(ctx.budget))?;
        all &= o.trivial;
        if ctx.json {
            writeln!(out, "{}", json!({ "method": method, "trivial": o.trivial, "steps": o.steps }))?;
        } else {
            writeln!(out, "{}", if o.trivial { "trivial" } else { "nontrivial" })?;
        }
    }
    Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn equal_cmd(ctx: &Ctx, form: FormArg, first: &str, second: &str, out: &mut impl Write) -> Outcome {
    let form = match form {
        FormArg::Greedy => Form::Greedy,
        FormArg::Symmetric => Form::Symmetric,
    };
    let same = equal(&ctx.word(first)?, &ctx.word(second)?, form);
    if ctx.json {
        writeln!(out, "{}", json!({ "equal": same }))?;
    } else {
        writeln!(out, "{}", if same { "equal" } else { "different" })?;
    }
    Ok(if same { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn coords_cmd(ctx: &Ctx, words: &[String], out: &mut impl Write) -> Outcome {
    for w in ctx.words(words)? {
        let c = coords(&w);
        if ctx.json {
            writeln!(out, "{}", serde_json::to_string(&c)?)?;
        } else {
            writeln!(out, "{c}")?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn redress(ctx: &Ctx, left: bool, words: &[String], out: &mut impl Write) -> Outcome {
    for w in ctx.words(words)? {
        let f = if left {
            redress_left_with(&w, Strategy::Leftmost, Some(ctx.budget))?
        } else {
            redress_right_with(&w, Strategy::Leftmost, Some(ctx.budget))?
        };
        if ctx.json {
            writeln!(out, "{}", json!({ "u": f.positive, "v": f.negative, "steps": f.steps }))?;
        } else {
            writeln!(out, "{}", ctx.render(&f.positive)?)?;
            writeln!(out, "{}", ctx.render(&f.negative)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn reduce(ctx: &Ctx, trace: bool, words: &[String], out: &mut impl Write) -> Outcome {
    for w in ctx.words(words)? {
        if trace {
            let steps = handle_trace(&w, Some(ctx.budget))?;
            if ctx.json {
                let rows: Vec<_> = steps.iter().map(|(word, h)| json!({ "word": word, "handle": h })).collect();
                writeln!(out, "{}", serde_json::to_string(&rows)?)?;
            } else {
                for (word, h) in &steps {
                    match h {
                        Some(h) => writeln!(out, "{}", render_with_handle(word, h)?)?,
                        None => writeln!(out, "{}", ctx.render(word)?)?,
                    }
                }
            }
        } else {
            let r = handle_reduce_with(&w, Some(ctx.budget))?;
            print_reduction(ctx, &r.word, r.steps, out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_reduction(ctx: &Ctx, word: &BraidWord, steps: u64, out: &mut impl Write) -> Result<(), Failure> {
    if ctx.json {
        writeln!(out, "{}", json!({ "word": word, "steps": steps }))?;
    } else {
        writeln!(out, "{}", ctx.render(word)?)?;
    }
    Ok(())
}

fn shorten(ctx: &Ctx, words: &[String], out: &mut impl Write) -> Outcome {
    for w in ctx.words(words)? {
        let r = shorten_with(&w, Some(ctx.budget))?;
        print_reduction(ctx, &r.word, r.steps, out)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn bench(ctx: &Ctx, len: usize, count: usize, seed: u64, methods: &[Method], out: &mut impl Write) -> Outcome {
    let n = ctx.n.unwrap_or(4);
    if n < 2 {
        return Err(BraidError::TooFewStrands(n).into());
    }
    let methods = if methods.is_empty() { Method::ALL.to_vec() } else { methods.to_vec() };
    let words: Vec<BraidWord> = (0..count as u64).map(|k| random_word(n, len, seed.wrapping_add(k))).collect();
    writeln!(out, "{BENCH_HEADER}")?;
    writeln!(out, "method,n,len,count,total_steps,elapsed_ns")?;
    for m in methods {
        if let Some(w) = words.first() {
            m.run(w, Some(ctx.budget))?;
        }
        let start = Instant::now();
        let mut steps = 0u64;
        for w in &words {
            steps += m.run(w, Some(ctx.budget))?.steps;
        }
        let elapsed = start.elapsed().as_nanos();
        writeln!(out, "{m},{n},{len},{count},{steps},{elapsed}")?;
    }
    Ok(ExitCode::SUCCESS)
}

fn fuzz(ctx: &Ctx, seed: u64, count: usize, max_len: usize, out: &mut impl Write) -> Outcome {
    let n_max = ctx.n.unwrap_or(6).max(2);
    let params = FuzzParams { n_min: 2, n_max, len_min: 0, len_max: max_len, count, seed, budget: Some(ctx.budget) };
    let report = cross_check(&params);
    writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx { n: cli.n, format: cli.format, json: cli.json, budget: cli.budget };
    let mut out = io::BufWriter::new(io::stdout().lock());
    let code = match &cli.command {
        Command::Normalize { form, words } => normalize(&ctx, *form, words, &mut out),
        Command::Trivial { method, words } => trivial(&ctx, *method, words, &mut out),
        Command::Equal { form, first, second } => equal_cmd(&ctx, *form, first, second, &mut out),
        Command::Coords { words } => coords_cmd(&ctx, words, &mut out),
        Command::Redress { left, words } => redress(&ctx, *left, words, &mut out),
        Command::Reduce { trace, words } => reduce(&ctx, *trace, words, &mut out),
        Command::Shorten { words } => shorten(&ctx, words, &mut out),
        Command::Bench { len, count, seed, methods } => bench(&ctx, *len, *count, *seed, methods, &mut out),
        Command::Fuzz { seed, count, max_len } => fuzz(&ctx, *seed, *count, *max_len, &mut out),
    }?;
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Braid(BraidError::BudgetExhausted(b))) => {
            eprintln!("error: step budget of {b} exhausted before an answer was reached (raise --budget)");
            ExitCode::from(2)
        }
        Err(Failure::Braid(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
