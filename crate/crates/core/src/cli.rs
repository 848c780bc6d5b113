//! Problem files, benchmark families, driver selection and reporting for the
//! `realdim` binary.
//!
//! A problem file is line oriented:
//!
//! ```text
//! # name: circle
//! # any other comment
//! vars: x y
//! f1: x^2 + y^2 - 1
//! ```
//!
//! Expressions use `+ - * / ^` and parentheses; `/` only divides by nonzero
//! rational constants and `^` takes a nonnegative integer exponent.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::critvals::{Formulation, SigmaMode};
use crate::dimension::{
    dim_las_vegas, dim_proper, dimension, sum_of_squares, DimResult, DriverOptions, RngConfig,
};
use crate::error::{Error, Result};
use crate::oracle2d::dim2d_oracle;
use crate::polyring::{rat, MPoly, Rational, Ring};

/// A polynomial system with its declared variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub name: Option<String>,
    pub ring: Arc<Ring>,
    /// Label of each polynomial line, in file order.
    pub labels: Vec<String>,
    pub polynomials: Vec<MPoly>,
}

impl ProblemFile {
    pub fn new(name: Option<String>, ring: Arc<Ring>, polynomials: Vec<MPoly>) -> Result<Self> {
        if polynomials.is_empty() {
            return Err(Error::EmptySystem);
        }
        if polynomials.iter().any(|p| p.ring() != &ring) {
            return Err(Error::RingMismatch);
        }
        let labels = (1..=polynomials.len()).map(|i| format!("f{i}")).collect();
        Ok(ProblemFile {
            name,
            ring,
            labels,
            polynomials,
        })
    }

    pub fn variables(&self) -> &[String] {
        self.ring.vars()
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "# name: {name}")?;
        }
        writeln!(f, "vars: {}", self.ring.vars().join(" "))?;
        for (label, p) in self.labels.iter().zip(&self.polynomials) {
            writeln!(f, "{label}: {p}")?;
        }
        Ok(())
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(is_ident_start) && cs.all(is_ident_char)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

/// Recursive-descent parser over one expression; columns are 1-based within
/// the whole line.
struct ExprParser<'a> {
    ring: &'a Arc<Ring>,
    line: usize,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn new(ring: &'a Arc<Ring>, text: &str, line: usize, offset: usize) -> Result<Self> {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = offset + i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && (chars[i] == '.' || is_ident_start(chars[i])) {
                    return Err(Error::MalformedRational {
                        line,
                        message: format!(
                            "column {col}: unexpected `{}` after a number; write a/b for fractions and use `*` before variables",
                            chars[i]
                        ),
                    });
                }
                let digits: String = chars[start..i].iter().collect();
                toks.push((Tok::Num(digits.parse().expect("digits")), col));
            } else if is_ident_start(c) {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            } else if "+-*/^()".contains(c) {
                toks.push((Tok::Op(c), col));
                i += 1;
            } else {
                return Err(Error::Parse {
                    line,
                    column: col,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
        toks.push((Tok::End, offset + chars.len() + 1));
        Ok(ExprParser {
            ring,
            line,
            toks,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    fn parse(mut self) -> Result<MPoly> {
        let p = self.sum()?;
        if *self.peek() != Tok::End {
            return Err(self.error("unexpected token"));
        }
        Ok(p)
    }

    fn sum(&mut self) -> Result<MPoly> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.pos += 1;
                    acc = &acc + &self.product()?;
                }
                Tok::Op('-') => {
                    self.pos += 1;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Tok::Op('/') => {
                    self.pos += 1;
                    let col = self.column();
                    let d = self.unary()?;
                    if !d.is_constant() {
                        return Err(Error::MalformedRational {
                            line: self.line,
                            message: format!("column {col}: division by a non-constant"),
                        });
                    }
                    let c = d.constant_term();
                    if c.is_zero() {
                        return Err(Error::MalformedRational {
                            line: self.line,
                            message: format!("column {col}: zero denominator"),
                        });
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly> {
        match self.peek() {
            Tok::Op('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Tok::Op('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if *self.peek() != Tok::Op('^') {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek().clone() {
            Tok::Num(k) => {
                let k: u32 = k.try_into().map_err(|_| self.error("exponent too large"))?;
                self.pos += 1;
                Ok(base.pow(k))
            }
            _ => Err(self.error("expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(MPoly::constant(self.ring, Rational::from_integer(n)))
            }
            Tok::Ident(name) => match self.ring.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(MPoly::var(self.ring, i))
                }
                None => Err(Error::UndeclaredVariable {
                    line: self.line,
                    name,
                }),
            },
            Tok::Op('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if *self.peek() != Tok::Op(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::End => Err(self.error("unexpected end of expression")),
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }
}

/// Parses the problem-file grammar described in the module docs.
pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let mut name = None;
    let mut ring: Option<Arc<Ring>> = None;
    let mut labels = Vec::new();
    let mut polynomials = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("name:") {
                name = Some(n.trim().to_string());
            }
            continue;
        }
        let lead = raw.len() - raw.trim_start().len();
        let colon = match trimmed.find(':') {
            Some(c) => c,
            None => {
                return Err(Error::Parse {
                    line,
                    column: lead + 1,
                    message: "expected `vars:` or `NAME: EXPR`".into(),
                })
            }
        };
        let key = trimmed[..colon].trim();
        let rest = &trimmed[colon + 1..];
        let rest_offset = lead + colon + 1;
        if key == "vars" {
            if ring.is_some() {
                return Err(Error::Parse {
                    line,
                    column: lead + 1,
                    message: "duplicate `vars:` line".into(),
                });
            }
            let mut names: Vec<(usize, &str)> = Vec::new();
            let mut start = None;
            for (i, c) in rest.char_indices().chain([(rest.len(), ' ')]) {
                match (c.is_whitespace(), start) {
                    (true, Some(s)) => {
                        names.push((s, &rest[s..i]));
                        start = None;
                    }
                    (false, None) => start = Some(i),
                    _ => {}
                }
            }
            if names.is_empty() {
                return Err(Error::Parse {
                    line,
                    column: rest_offset + 1,
                    message: "no variables declared".into(),
                });
            }
            for (i, (at, n)) in names.iter().enumerate() {
                let column = rest_offset + at + 1;
                if !is_ident(n) {
                    return Err(Error::Parse {
                        line,
                        column,
                        message: format!("`{n}` is not an identifier"),
                    });
                }
                if names[..i].iter().any(|(_, m)| m == n) {
                    return Err(Error::Parse {
                        line,
                        column,
                        message: format!("variable `{n}` declared twice"),
                    });
                }
            }
            ring = Some(Ring::new(names.iter().map(|(_, n)| *n)));
            continue;
        }
        if !is_ident(key) {
            return Err(Error::Parse {
                line,
                column: lead + 1,
                message: format!("`{key}` is not a polynomial name"),
            });
        }
        let r = ring.as_ref().ok_or_else(|| Error::Parse {
            line,
            column: lead + 1,
            message: "polynomial before the `vars:` line".into(),
        })?;
        polynomials.push(ExprParser::new(r, rest, line, rest_offset)?.parse()?);
        labels.push(key.to_string());
    }
    let ring = match ring {
        Some(r) => r,
        None if polynomials.is_empty() => return Err(Error::EmptySystem),
        None => unreachable!("polynomials require a ring"),
    };
    if polynomials.is_empty() {
        return Err(Error::EmptySystem);
    }
    Ok(ProblemFile {
        name,
        ring,
        labels,
        polynomials,
    })
}

/// Benchmark families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `(Σ xᵢ²)² − 4 Σ x_{i+1}² xᵢ² − 4 x₁² x_n²`.
    P,
    /// `∏ (xᵢ² + n − 1) − n^(n−2) (Σ xᵢ)²`.
    B,
    /// Sum of squares of `c` dense random quadrics.
    S,
}

fn coordinate_ring(n: usize) -> Arc<Ring> {
    Ring::new((1..=n).map(|i| format!("x{i}")))
}

/// Builds a family member; `params` is `[n]` for `p` and `b`, and
/// `[c, n, seed]` for `s`.
pub fn generate_instance(family: Family, params: &[u64]) -> Result<ProblemFile> {
    let bad = |m: &str| Error::InvalidParams(m.to_string());
    match family {
        Family::P | Family::B => {
            let [n] = params else {
                return Err(bad("expected one parameter n"));
            };
            let n = *n as usize;
            if n < 2 {
                return Err(bad("n must be at least 2"));
            }
            let r = coordinate_ring(n);
            let x: Vec<MPoly> = (0..n).map(|i| MPoly::var(&r, i)).collect();
            let sq: Vec<MPoly> = x.iter().map(|xi| xi.pow(2)).collect();
            let f = if family == Family::P {
                let four = rat(4);
                let mut f = sq.iter().fold(MPoly::zero(&r), |a, s| &a + s).pow(2);
                for i in 0..n - 1 {
                    f = &f - &(&sq[i + 1] * &sq[i]).scale(&four);
                }
                &f - &(&sq[0] * &sq[n - 1]).scale(&four)
            } else {
                let shift = MPoly::constant(&r, rat(n as i64 - 1));
                let prod = sq.iter().fold(MPoly::one(&r), |a, s| &a * &(s + &shift));
                let lin = x.iter().fold(MPoly::zero(&r), |a, xi| &a + xi);
                let c = Rational::from_integer(BigInt::from(n).pow(n as u32 - 2));
                &prod - &lin.pow(2).scale(&c)
            };
            let tag = if family == Family::P { "p" } else { "b" };
            ProblemFile::new(Some(format!("{tag}{n}")), r, vec![f])
        }
        Family::S => {
            let (c, n, seed) = match params {
                [c, n] => (*c, *n, 0),
                [c, n, seed] => (*c, *n, *seed),
                _ => return Err(bad("expected parameters c,n[,seed]")),
            };
            if c < 1 || n < 2 {
                return Err(bad("need c >= 1 and n >= 2"));
            }
            let n = n as usize;
            let r = coordinate_ring(n);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut monomials = vec![MPoly::one(&r)];
            for i in 0..n {
                monomials.push(MPoly::var(&r, i));
            }
            for i in 0..n {
                for j in i..n {
                    monomials.push(&MPoly::var(&r, i) * &MPoly::var(&r, j));
                }
            }
            let mut f = MPoly::zero(&r);
            for _ in 0..c {
                let q = monomials.iter().fold(MPoly::zero(&r), |a, m| {
                    &a + &m.scale(&rat(rng.gen_range(-9..=9)))
                });
                f = &f + &q.pow(2);
            }
            ProblemFile::new(Some(format!("s{c}_{n}_seed{seed}")), r, vec![f])
        }
    }
}

/// Parses `p:4`, `b:3` or `s:2,3[,seed]`.
pub fn parse_family_spec(spec: &str) -> Result<(Family, Vec<u64>)> {
    let bad = || Error::InvalidParams(format!("`{spec}`: expected FAMILY:PARAMS"));
    let (fam, rest) = spec.split_once(':').ok_or_else(bad)?;
    let family = match fam.trim() {
        "p" => Family::P,
        "b" => Family::B,
        "s" => Family::S,
        _ => return Err(bad()),
    };
    let params = rest
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    Ok((family, params))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    General,
    Proper,
    LasVegas,
}

impl Mode {
    fn as_str(self) -> &'static str {
        match self {
            Mode::General => "general",
            Mode::Proper => "proper",
            Mode::LasVegas => "las-vegas",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormulationArg {
    Minors,
    Lambda,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SigmaArg {
    Ignore,
    Full,
}

/// Compute the real dimension of a polynomial system over the rationals.
///
/// `--mode proper` and `--mode las-vegas` assume the polynomial map is proper
/// (preimages of bounded sets are bounded); this is not checked. The default
/// `general` mode has no precondition.
#[derive(Debug, Parser)]
#[command(name = "realdim", version, args_conflicts_with_subcommands = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of one bivariate polynomial by cylindrical decomposition.
    Oracle2d {
        /// Problem file with two variables and one polynomial.
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Debug, Args)]
pub struct RunArgs {
    /// Problem file.
    #[arg(
        long,
        conflicts_with = "generate",
        required_unless_present = "generate"
    )]
    pub input: Option<PathBuf>,
    /// Benchmark family: p:N, b:N or s:C,N[,SEED].
    #[arg(long)]
    pub generate: Option<String>,
    #[arg(long, value_enum, default_value_t = Mode::General)]
    pub mode: Mode,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random integers are drawn from [-B, B].
    #[arg(long, default_value_t = 99, value_parser = clap::value_parser!(u32).range(1..))]
    pub coeff_bound: u32,
    /// Fresh draws allowed per node after a genericity failure.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub retries: u32,
    /// Replace the system by the sum of squares of its polynomials.
    #[arg(long)]
    pub sos: bool,
    #[arg(long, value_enum, default_value_t = FormulationArg::Minors)]
    pub formulation: FormulationArg,
    #[arg(long, value_enum, default_value_t = SigmaArg::Ignore)]
    pub sigma: SigmaArg,
    /// Print per-depth statistics before the dimension.
    #[arg(long)]
    pub trace: bool,
    /// Emit a single JSON report.
    #[arg(long)]
    pub json: bool,
    /// Recurse into fibers in parallel (trace is then not reproducible).
    #[arg(long)]
    pub parallel: bool,
    /// Record wall time in the report; off by default so reports are
    /// reproducible byte for byte.
    #[arg(long)]
    pub timing: bool,
}

impl RunArgs {
    pub fn driver_options(&self) -> DriverOptions {
        DriverOptions {
            rng: RngConfig {
                seed: self.seed,
                coeff_bound: self.coeff_bound,
                retry_budget: self.retries,
            },
            formulation: match self.formulation {
                FormulationArg::Minors => Formulation::Minors,
                FormulationArg::Lambda => Formulation::Lambda,
            },
            sigma: match self.sigma {
                SigmaArg::Ignore => SigmaMode::Ignore,
                SigmaArg::Full => SigmaMode::Full,
            },
            parallel: self.parallel,
        }
    }
}

/// The JSON report; field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub dim: i32,
    pub fibers_per_depth: Vec<usize>,
    pub max_eliminant_degree: Vec<usize>,
    pub retries: Vec<u32>,
    pub seed: u64,
    pub mode: String,
    /// Wall time of the dimension computation, only with `--timing`.
    pub millis: Option<u64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

fn load_problem(args: &RunArgs) -> Result<ProblemFile> {
    match (&args.input, &args.generate) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            parse_problem(&text)
        }
        (None, Some(spec)) => {
            let (family, params) = parse_family_spec(spec)?;
            generate_instance(family, &params)
        }
        (None, None) => Err(Error::InvalidParams("need --input or --generate".into())),
    }
}

/// Loads the problem and runs the selected driver.
pub fn run(args: &RunArgs) -> Result<(RunReport, DimResult)> {
    let problem = load_problem(args)?;
    let fs = if args.sos {
        vec![sum_of_squares(&problem.polynomials).expect("nonempty system")]
    } else {
        problem.polynomials.clone()
    };
    let opts = args.driver_options();
    let start = Instant::now();
    let result = match args.mode {
        Mode::General => dimension(&fs, &opts),
        Mode::Proper => dim_proper(&fs, &opts),
        Mode::LasVegas => dim_las_vegas(&fs, &opts),
    }?;
    let millis = args.timing.then(|| start.elapsed().as_millis() as u64);
    let report = RunReport {
        dim: result.dim,
        fibers_per_depth: result.trace.fibers_per_depth(),
        max_eliminant_degree: result.trace.max_eliminant_degree(),
        retries: result.trace.retries(),
        seed: args.seed,
        mode: args.mode.as_str().to_string(),
        millis,
    };
    Ok((report, result))
}

/// Process exit code for an error: 2 when random choices kept failing,
/// 1 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::GenericityExhausted(_) | Error::GenericityFailure(_) => 2,
        _ => 1,
    }
}

/// Runs a parsed command line, writing results to `out` and diagnostics to
/// `err`; returns the process exit code.
pub fn main_with(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match &cli.command {
        Some(Command::Oracle2d { input }) => run_oracle(input, out),
        None => run_dimension(&cli.run, out),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn run_oracle(input: &PathBuf, out: &mut dyn Write) -> Result<()> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| Error::Io(format!("{}: {e}", input.display())))?;
    let problem = parse_problem(&text)?;
    let [f] = problem.polynomials.as_slice() else {
        return Err(Error::InvalidParams(
            "oracle2d expects exactly one polynomial".into(),
        ));
    };
    let d = dim2d_oracle(f)?;
    writeln!(out, "{d}").map_err(io_err)
}

fn run_dimension(args: &RunArgs, out: &mut dyn Write) -> Result<()> {
    let (report, result) = run(args)?;
    if args.json {
        return writeln!(out, "{}", report.to_json()).map_err(io_err);
    }
    if args.trace {
        writeln!(out, "depth fibers max_degree retries skipped").map_err(io_err)?;
        for (k, d) in result.trace.depths.iter().enumerate() {
            writeln!(
                out,
                "{k} {} {} {} {}",
                d.fiber_count, d.max_eliminant_degree, d.retries, d.skipped_fibers
            )
            .map_err(io_err)?;
        }
        if let Some(ms) = report.millis {
            writeln!(out, "millis {ms}").map_err(io_err)?;
        }
    }
    writeln!(out, "{}", report.dim).map_err(io_err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ratio;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let p = parse_problem("vars: x y\nf1: x^2 + y^2 - 1").unwrap();
        let x = MPoly::var(&p.ring, 0);
        let y = MPoly::var(&p.ring, 1);
        assert_eq!(
            p.polynomials,
            vec![&(&x.pow(2) + &y.pow(2)) - &MPoly::one(&p.ring)]
        );
        assert_eq!(p.variables(), ["x", "y"]);

        let p = parse_problem("vars: x\nf1: 1/3*x - 2").unwrap();
        let x = MPoly::var(&p.ring, 0);
        assert_eq!(
            p.polynomials[0],
            &x.scale(&ratio(1, 3)) - &MPoly::constant(&p.ring, rat(2))
        );

        assert_eq!(
            parse_problem("vars: x\nf1: x + z"),
            Err(Error::UndeclaredVariable {
                line: 2,
                name: "z".into()
            })
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(parse_problem("# only a comment\n"), Err(Error::EmptySystem));
        assert_eq!(parse_problem("vars: x y\n"), Err(Error::EmptySystem));
        assert!(matches!(
            parse_problem("vars: x\nf1: x $ 1"),
            Err(Error::Parse {
                line: 2,
                column: 7,
                ..
            })
        ));
        assert!(matches!(
            parse_problem("vars: x\nf1: (x + 1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_problem("vars: x\nf1: x/0"),
            Err(Error::MalformedRational { line: 2, .. })
        ));
        assert!(matches!(
            parse_problem("vars: x\nf1: 1/x"),
            Err(Error::MalformedRational { line: 2, .. })
        ));
        assert!(matches!(
            parse_problem("vars: x\nf1: 2.5*x"),
            Err(Error::MalformedRational { line: 2, .. })
        ));
        assert!(matches!(
            parse_problem("f1: x\nvars: x"),
            Err(Error::Parse {
                line: 1,
                column: 1,
                ..
            })
        ));
        assert!(matches!(
            parse_problem("vars: x x\nf1: x"),
            Err(Error::Parse {
                line: 1,
                column: 9,
                ..
            })
        ));
    }

    #[test]
    fn parse_metadata_and_grouping() {
        let p = parse_problem("# name: demo\n# free text\nvars: a b\n\ng: -(a - b)^2 * 2 + +3\n")
            .unwrap();
        assert_eq!(p.name.as_deref(), Some("demo"));
        assert_eq!(p.labels, ["g"]);
        let a = MPoly::var(&p.ring, 0);
        let b = MPoly::var(&p.ring, 1);
        let expect = &(&a - &b).pow(2).scale(&rat(-2)) + &MPoly::constant(&p.ring, rat(3));
        assert_eq!(p.polynomials[0], expect);
    }

    #[test]
    fn family_shapes() {
        let p4 = generate_instance(Family::P, &[4]).unwrap();
        assert_eq!(p4.variables().len(), 4);
        assert_eq!(p4.polynomials[0].total_degree(), Some(4));
        let b4 = generate_instance(Family::B, &[4]).unwrap();
        assert_eq!(b4.variables().len(), 4);
        assert_eq!(b4.polynomials[0].total_degree(), Some(8));
        for n in 2..=5u64 {
            let b = generate_instance(Family::B, &[n]).unwrap();
            let origin = vec![Rational::zero(); n as usize];
            let expect = Rational::from_integer(BigInt::from(n - 1).pow(n as u32));
            assert_eq!(b.polynomials[0].evaluate(&origin).unwrap(), expect);
        }
        let s = generate_instance(Family::S, &[2, 3, 7]).unwrap();
        assert_eq!(s, generate_instance(Family::S, &[2, 3, 7]).unwrap());
        assert_ne!(s, generate_instance(Family::S, &[2, 3, 8]).unwrap());
        assert_eq!(s.polynomials[0].total_degree(), Some(4));
        assert!(generate_instance(Family::P, &[1]).is_err());
        assert!(generate_instance(Family::S, &[0, 3]).is_err());
        assert!(generate_instance(Family::B, &[2, 3]).is_err());
    }

    #[test]
    fn family_specs() {
        assert_eq!(parse_family_spec("p:4").unwrap(), (Family::P, vec![4]));
        assert_eq!(
            parse_family_spec("s:2,3,9").unwrap(),
            (Family::S, vec![2, 3, 9])
        );
        assert!(parse_family_spec("q:4").is_err());
        assert!(parse_family_spec("p").is_err());
        assert!(parse_family_spec("p:x").is_err());
    }

    #[test]
    fn p_is_nonnegative_with_real_zeros() {
        let p = generate_instance(Family::P, &[4]).unwrap();
        for pt in [
            [1, 1, 1, 1],
            [1, 0, 1, 0],
            [1, 2, 3, 4],
            [2, -1, 3, 5],
            [0, 0, 0, 0],
        ] {
            let v: Vec<Rational> = pt.iter().map(|&a| rat(a)).collect();
            assert!(p.polynomials[0].evaluate(&v).unwrap() >= Rational::zero());
        }
        let v: Vec<Rational> = [1, 1, 1, 1].iter().map(|&a| rat(a)).collect();
        assert!(p.polynomials[0].evaluate(&v).unwrap().is_zero());
    }

    proptest! {
        #[test]
        fn generated_instances_round_trip(n in 2u64..6, c in 1u64..3, seed in 0u64..1000) {
            for inst in [
                generate_instance(Family::P, &[n]).unwrap(),
                generate_instance(Family::B, &[n]).unwrap(),
                generate_instance(Family::S, &[c, n, seed]).unwrap(),
            ] {
                let text = inst.to_string();
                prop_assert_eq!(parse_problem(&text).unwrap(), inst);
            }
        }

        #[test]
        fn rational_coefficients_round_trip(
            coeffs in proptest::collection::vec((-50i64..50, 1i64..20), 1..6),
        ) {
            let r = Ring::new(["u", "v"]);
            let mut f = MPoly::zero(&r);
            for (k, (a, b)) in coeffs.iter().enumerate() {
                let m = &MPoly::var(&r, 0).pow(k as u32) * &MPoly::var(&r, 1).pow((k % 3) as u32);
                f = &f + &m.scale(&ratio(*a, *b));
            }
            prop_assume!(!f.is_zero());
            let p = ProblemFile::new(None, r, vec![f]).unwrap();
            prop_assert_eq!(parse_problem(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn report_json_is_stable() {
        let report = RunReport {
            dim: 1,
            fibers_per_depth: vec![3],
            max_eliminant_degree: vec![2],
            retries: vec![0],
            seed: 7,
            mode: "general".into(),
            millis: None,
        };
        assert_eq!(
            report.to_json(),
            r#"{"dim":1,"fibers_per_depth":[3],"max_eliminant_degree":[2],"retries":[0],"seed":7,"mode":"general","millis":null}"#
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::GenericityExhausted("e".into())), 2);
        assert_eq!(exit_code(&Error::EmptySystem), 1);
    }
}
