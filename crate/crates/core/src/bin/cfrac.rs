//! Command-line front end for the `cfrac` library.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 domain error,
//! 4 period search budget exceeded.

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use cfrac::report::{
    self, BoundRowView, ClassificationView, ConvergentView, FiniteView, PellView, PeriodicView,
    RationalView, SurdView, TraceView,
};
use cfrac::{
    classify_monic, golden_error_bound_check, iterate_monic, iterate_simple, parse_cf, sqrt_cf,
    ContinuedFraction, Error, FiniteCF, MonicVerdict, PellSolutions, PeriodicCF, QuadraticSurd,
    Rational, Seed, DEFAULT_MAX_TERMS,
};

#[derive(Parser, Debug)]
#[command(name = "cfrac", version, about = "Exact continued fractions, quadratic surds and Pell equations")]
struct Cli {
    /// Fractional digits in decimal renderings.
    #[arg(long, global = true, default_value_t = 3)]
    digits: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeedArg {
    Recurrence,
    Paper,
}

impl From<SeedArg> for Seed {
    fn from(s: SeedArg) -> Seed {
        match s {
            SeedArg::Recurrence => Seed::Recurrence,
            SeedArg::Paper => Seed::Paper,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Continued fraction of a rational p/q.
    Expand {
        #[arg(allow_hyphen_values = true)]
        rational: String,
    },
    /// Value of a continued fraction; `-` reads it from stdin.
    Eval {
        #[arg(allow_hyphen_values = true)]
        cf: String,
    },
    /// Convergents p_n/q_n of a continued fraction.
    Convergents {
        #[arg(allow_hyphen_values = true)]
        cf: String,
        /// Defaults to every term of a finite fraction, 10 for a periodic one.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Periodic expansion of sqrt(n).
    Sqrt {
        #[arg(allow_hyphen_values = true)]
        n: BigInt,
    },
    /// Periodic expansion of (P + sqrt D) / Q.
    Surd {
        #[arg(allow_hyphen_values = true)]
        p: BigInt,
        #[arg(allow_hyphen_values = true)]
        d: BigInt,
        #[arg(allow_hyphen_values = true)]
        q: BigInt,
        #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
        max_terms: usize,
    },
    /// Quadratic surd with the given periodic expansion; `-` reads stdin.
    FromPeriodic {
        #[arg(allow_hyphen_values = true)]
        cf: String,
    },
    /// Solutions of x^2 - n y^2 = ±1.
    Pell {
        #[arg(allow_hyphen_values = true)]
        n: BigInt,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Restrict to +1 or -1.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        sign: Option<i8>,
    },
    /// Terms of t_{n+1} = κ + 1/t_n.
    Iterate {
        #[arg(long)]
        kappa: BigInt,
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = SeedArg::Recurrence)]
        seed: SeedArg,
    },
    /// Terms of x_{k+1} = -b - c/x_k.
    Monic {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        x0: String,
        #[arg(long)]
        terms: usize,
    },
    /// Convergence verdict for x = -b - c/x.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// |R_n - φ| against (1/φ)^(n-1) |R_1 - φ| for n = 1..=n_max.
    GoldenBound {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
}

fn parse_sign(s: &str) -> Result<i8, String> {
    match s {
        "+1" | "1" | "+" => Ok(1),
        "-1" | "-" => Ok(-1),
        _ => Err(format!("expected +1 or -1, got {s:?}")),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidCoefficients(_) | Error::InvalidArgument(_) => 2,
        Error::PeriodNotFoundWithinBudget(_) => 4,
        _ => 3,
    }
}

fn read_arg(arg: &str) -> Result<String, Error> {
    if arg != "-" {
        return Ok(arg.to_owned());
    }
    let mut buf = String::new();
    io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Error::InvalidArgument(format!("reading stdin: {e}")))?;
    Ok(buf)
}

fn rational(s: &str) -> Result<Rational, Error> {
    s.parse()
}

fn json_text<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("views serialize") + "\n"
}

fn csv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = format!("{header}\n");
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out
}

fn coefficient_csv(pre: &[BigInt], period: &[BigInt]) -> String {
    let rows = pre
        .iter()
        .map(|a| (a, false))
        .chain(period.iter().map(|a| (a, true)))
        .enumerate()
        .map(|(i, (a, p))| format!("{i},{a},{p}"));
    csv("index,coefficient,periodic", rows)
}

fn rational_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        r.to_string()
    }
}

fn surd_csv(s: &QuadraticSurd, digits: usize) -> String {
    csv(
        "P,D,Q,decimal",
        [format!("{},{},{},{}", s.p(), s.d(), s.q(), s.decimal(digits))],
    )
}

fn surd_plain(s: &QuadraticSurd, digits: usize) -> String {
    format!("{} ≈ {}\n", s, s.decimal(digits))
}

fn periodic_output(cf: &PeriodicCF, fmt: Format) -> String {
    match fmt {
        Format::Plain => format!("{cf}\n"),
        Format::Csv => coefficient_csv(cf.pre_period(), cf.period()),
        Format::Json => json_text(&PeriodicView::from(cf)),
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    let digits = cli.digits;
    let fmt = cli.format;
    Ok(match cli.command {
        Command::Expand { rational: text } => {
            let cf = FiniteCF::expand(&rational(&text)?);
            match fmt {
                Format::Plain => format!("{cf}\n"),
                Format::Csv => coefficient_csv(cf.coefficients(), &[]),
                Format::Json => json_text(&FiniteView::from(&cf)),
            }
        }
        Command::Eval { cf } => match parse_cf(&read_arg(&cf)?)? {
            ContinuedFraction::Finite(cf) => {
                let v = cf.evaluate();
                match fmt {
                    Format::Plain => format!("{}\n", rational_text(&v)),
                    Format::Csv => csv(
                        "numerator,denominator,decimal",
                        [format!("{},{},{}", v.numer(), v.denom(), v.to_decimal(digits))],
                    ),
                    Format::Json => json_text(&RationalView::new(&v, digits)),
                }
            }
            ContinuedFraction::Periodic(cf) => surd_output(&cf.to_surd(), digits, fmt),
        },
        Command::Convergents { cf, count } => {
            let list = match parse_cf(&read_arg(&cf)?)? {
                ContinuedFraction::Finite(cf) => {
                    cfrac::convergents(cf.coefficients(), count.unwrap_or(cf.len()))?
                }
                ContinuedFraction::Periodic(cf) => cf.convergents().take(count.unwrap_or(10)).collect(),
            };
            match fmt {
                Format::Plain => list.iter().map(|c| format!("{}/{}\n", c.p, c.q)).collect(),
                Format::Csv => report::trace_csv(&report::convergent_rows(&list, digits)),
                Format::Json => json_text(&list.iter().map(ConvergentView::from).collect::<Vec<_>>()),
            }
        }
        Command::Sqrt { n } => periodic_output(&sqrt_cf(n)?, fmt),
        Command::Surd { p, d, q, max_terms } => {
            let s = QuadraticSurd::new(p, d, q)?;
            let cf = s.expand(max_terms)?;
            match fmt {
                Format::Json => json_text(&json!({
                    "surd": SurdView::new(&s, digits),
                    "expansion": PeriodicView::from(&cf),
                })),
                _ => periodic_output(&cf, fmt),
            }
        }
        Command::FromPeriodic { cf } => match parse_cf(&read_arg(&cf)?)? {
            ContinuedFraction::Periodic(cf) => surd_output(&cf.to_surd(), digits, fmt),
            ContinuedFraction::Finite(_) => {
                return Err(Error::InvalidArgument(
                    "expected a periodic continued fraction such as [1;(2)]".into(),
                ))
            }
        },
        Command::Pell { n, count, sign } => {
            let sols = PellSolutions::new(n)?;
            let list = match sign {
                Some(s) => sols.with_sign(s, count)?,
                None => sols.iter().take(count).collect(),
            };
            match fmt {
                Format::Plain => list
                    .iter()
                    .map(|s| format!("x = {}, y = {}, x^2 - {}*y^2 = {}\n", s.x, s.y, s.n, s.sign))
                    .collect(),
                Format::Csv => csv(
                    "n,x,y,sign",
                    list.iter().map(|s| format!("{},{},{},{}", s.n, s.x, s.y, s.sign)),
                ),
                Format::Json => json_text(&list.iter().map(PellView::from).collect::<Vec<_>>()),
            }
        }
        Command::Iterate { kappa, terms, seed } => {
            let trace = iterate_simple(kappa, terms, seed.into())?;
            let rows = report::rational_rows(&trace.terms, digits);
            match fmt {
                Format::Plain => plain_rows(&rows),
                Format::Csv => report::trace_csv(&rows),
                Format::Json => json_text(&TraceView::new(&trace, digits)),
            }
        }
        Command::Monic { b, c, x0, terms } => {
            let (b, c, x0) = (rational(&b)?, rational(&c)?, rational(&x0)?);
            if x0.is_zero() {
                return Err(Error::InvalidArgument("x0 must be nonzero".into()));
            }
            if terms == 0 {
                return Err(Error::InvalidArgument("at least one term is required".into()));
            }
            let rows = report::monic_rows(&iterate_monic(&b, &c, &x0, terms), digits);
            match fmt {
                Format::Plain => plain_rows(&rows),
                Format::Csv => report::trace_csv(&rows),
                Format::Json => json_text(&json!({
                    "b": b.to_string(),
                    "c": c.to_string(),
                    "x0": x0.to_string(),
                    "terms": rows,
                })),
            }
        }
        Command::Classify { b, c } => {
            let m = classify_monic(&rational(&b)?, &rational(&c)?);
            let view = ClassificationView::new(&m, digits);
            match fmt {
                Format::Json => json_text(&view),
                Format::Csv => {
                    let part = |v: &Option<report::QuadraticView>, pick: fn(&report::QuadraticView) -> &String| {
                        v.as_ref().map(|q| pick(q).clone()).unwrap_or_default()
                    };
                    csv(
                        "b,c,discriminant,verdict,root,root_decimal,ratio,ratio_decimal",
                        [format!(
                            "{},{},{},{},{},{},{},{}",
                            view.b,
                            view.c,
                            view.discriminant,
                            view.verdict,
                            part(&view.root, |q| &q.text),
                            part(&view.root, |q| &q.decimal),
                            part(&view.ratio, |q| &q.text),
                            part(&view.ratio, |q| &q.decimal),
                        )],
                    )
                }
                Format::Plain => {
                    let mut out = format!("{} (discriminant {})\n", m.verdict.label(), rational_text(&m.discriminant));
                    match &m.verdict {
                        MonicVerdict::ConvergesDoubleRoot { root } => {
                            out.push_str(&format!("root {} ≈ {}\n", rational_text(root), root.to_decimal(digits)));
                        }
                        MonicVerdict::ConvergesLargerRoot { root, ratio } => {
                            out.push_str(&format!(
                                "root {} ≈ {}\n",
                                report::quadratic_text(root),
                                root.to_decimal(digits)
                            ));
                            out.push_str(&format!(
                                "ratio {} ≈ {}\n",
                                report::quadratic_text(ratio),
                                ratio.to_decimal(digits)
                            ));
                        }
                        _ => {}
                    }
                    out
                }
            }
        }
        Command::GoldenBound { n_max } => {
            if n_max == 0 {
                return Err(Error::InvalidArgument("n-max must be at least 1".into()));
            }
            let rows = golden_error_bound_check(n_max);
            match fmt {
                Format::Plain => rows
                    .iter()
                    .map(|r| {
                        format!(
                            "{:>3}  {}  {}  {}\n",
                            r.n,
                            r.lhs.to_decimal(digits),
                            r.rhs.to_decimal(digits),
                            if r.holds { "holds" } else { "FAILS" }
                        )
                    })
                    .collect(),
                Format::Csv => csv(
                    "n,lhs,rhs,holds",
                    rows.iter().map(|r| {
                        format!("{},{},{},{}", r.n, r.lhs.to_decimal(digits), r.rhs.to_decimal(digits), r.holds)
                    }),
                ),
                Format::Json => json_text(&rows.iter().map(|r| BoundRowView::new(r, digits)).collect::<Vec<_>>()),
            }
        }
    })
}

fn surd_output(s: &QuadraticSurd, digits: usize, fmt: Format) -> String {
    match fmt {
        Format::Plain => surd_plain(s, digits),
        Format::Csv => surd_csv(s, digits),
        Format::Json => json_text(&SurdView::new(s, digits)),
    }
}

fn plain_rows(rows: &[report::TraceRow]) -> String {
    rows.iter()
        .map(|r| {
            let value = if r.denominator == "0" {
                "∞".to_owned()
            } else {
                format!("{}/{}", r.numerator, r.denominator)
            };
            format!("{:>3}  {}  {}\n", r.n, value, r.decimal)
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("cfrac: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
