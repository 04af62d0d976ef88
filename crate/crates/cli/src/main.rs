//! `cyset`: command-line front end over `.cys` files.
//!
//! Exit status is 0 on success, 1 on a domain failure (an invalid table, an
//! invalid composition, or any library error, reported as `ERR <code>:
//! <detail>`), and 2 on a usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyset_core::bounds::{class_bounds, factorial};
use cyset_core::calculus::{germ_words_equal, pi, pi_expression, word_to_element, words_equal};
use cyset_core::census::{run_to_file, stats, Mode, DEFAULT_CENSUS_CAP};
use cyset_core::cycle_set::{diagonal_map, perm_group, validate, DEFAULT_ELEMENT_CAP};
use cyset_core::format::{parse_cys, write_cys};
use cyset_core::garside::{
    cp_to_element, delta, divisors_of_delta, gcd_left, gcd_right, is_balanced, lcm_left, lcm_right, left_divides,
    right_divides, DEFAULT_BALANCE_CAP, DEFAULT_DELTA_DIVISOR_CAP,
};
use cyset_core::germ::{conjecture_report, retraction, DEFAULT_GERM_CAP};
use cyset_core::zappa::{
    mixed_equation_check, sylow_decompose, sylow_group_checks, sylow_recompose, zappa_compose, MixedOutcome,
};
use cyset_core::{CycleSet, Error, Germ, MonomialElement, PermTable, PiTuple, Validation};

#[derive(Parser)]
#[command(name = "cyset", version, about = "Cycle sets, their structure groups and germs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the cycle-set law and report the first failing triple
    Validate { file: PathBuf },
    /// Diagonal map, permutation group, orbits and class
    Info { file: PathBuf },
    /// Canonical tuple and exponents of a word
    Pi {
        file: PathBuf,
        #[arg(long)]
        word: Word,
    },
    /// Compare two words in the monoid, or in the germ with --mod-d
    Equal {
        file: PathBuf,
        #[arg(long)]
        w1: Word,
        #[arg(long)]
        w2: Word,
        #[arg(long)]
        mod_d: bool,
    },
    Gcd(Pair),
    Lcm(Pair),
    /// Whether --a divides --b
    Divides(Pair),
    /// The element with all exponents equal to --k
    Delta {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Also list the divisors (n at most 20)
        #[arg(long)]
        divisors: bool,
    },
    /// Class and divisibility report
    Class { file: PathBuf },
    /// Finite quotient: order and permutation-freeness
    Germ {
        file: PathBuf,
        /// Reduce modulo this multiple of the class instead
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Print the retraction of index --k as a .cys block
    Retract {
        file: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// Compose two cycle sets of coprime class
    Zappa { first: PathBuf, second: PathBuf },
    /// Split into factors of prime-power class
    Sylow {
        file: PathBuf,
        #[arg(long)]
        recompose: bool,
        /// Also check the subgroups of the germ
        #[arg(long)]
        groups: bool,
    },
    /// Enumerate all cycle sets of size --n
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        iso: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CENSUS_CAP)]
        cap: usize,
    },
    /// Class bounds for size --n
    Bounds {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Side {
    #[default]
    Left,
    Right,
}

#[derive(Args)]
struct Pair {
    file: PathBuf,
    #[arg(long)]
    a: Operand,
    #[arg(long)]
    b: Operand,
    #[arg(long, value_enum, default_value_t)]
    side: Side,
}

/// Comma-separated 1-based generator indices; empty for the identity.
#[derive(Clone, Debug)]
struct Word(Vec<usize>);

impl FromStr for Word {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim().is_empty() {
            return Ok(Word(vec![]));
        }
        s.split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(0) | Err(_) => Err(format!("`{t}` is not a positive index")),
                Ok(x) => Ok(x - 1),
            })
            .collect::<Result<_, _>>()
            .map(Word)
    }
}

/// A word, `tuple:` followed by a canonical tuple, or `cp:` followed by an
/// exponent vector.
#[derive(Clone, Debug)]
enum Operand {
    Word(Word),
    Tuple(Word),
    Cp(Vec<i64>),
}

impl FromStr for Operand {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.strip_prefix("cp:") {
            Some(rest) => rest
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| format!("`{t}` is not an integer")))
                .collect::<Result<_, _>>()
                .map(Operand::Cp),
            None => match s.strip_prefix("tuple:") {
                Some(rest) => rest.parse().map(Operand::Tuple),
                None => s.parse().map(Operand::Word),
            },
        }
    }
}

impl Operand {
    fn element(&self, s: &PermTable) -> cyset_core::Result<MonomialElement> {
        match self {
            Operand::Word(w) => word_to_element(s, &w.0),
            Operand::Tuple(t) => pi(s, &PiTuple(t.0.clone())),
            Operand::Cp(c) => cp_to_element(s, c),
        }
    }
}

enum Outcome {
    Ok(String),
    /// Printed, then exit 1.
    Rejected(String),
}

fn read_table(path: &Path) -> cyset_core::Result<PermTable> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_cys(&text)
}

fn read_set(path: &Path) -> cyset_core::Result<CycleSet> {
    CycleSet::new(read_table(path)?)
}

fn describe(g: &MonomialElement) -> String {
    format!("{g} lambda={}", g.lambda())
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or("unknown".into(), |v| v.to_string())
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn class_lines(out: &mut String, s: &CycleSet) {
    let r = conjecture_report(s);
    let c = &r.class;
    writeln!(out, "d={}", c.d).unwrap();
    writeln!(out, "per-generator={}", list(&c.per_generator)).unwrap();
    writeln!(out, "o(T)={}", c.o_t).unwrap();
    writeln!(out, "#G={}", opt(c.g_order)).unwrap();
    writeln!(out, "o(T) | d: {}", c.checks.o_t_divides_d).unwrap();
    writeln!(out, "d | #G: {}", opt(c.checks.d_divides_g_order)).unwrap();
    writeln!(out, "#G | d^n: {}", opt(c.checks.g_order_divides_d_pow_n)).unwrap();
    writeln!(out, "same prime divisors: {}", opt(c.checks.same_prime_divisors)).unwrap();
    writeln!(out, "d | n!: {}", c.checks.d_divides_n_factorial).unwrap();
    writeln!(out, "indecomposable: {}", r.indecomposable).unwrap();
    writeln!(out, "d <= a_n: {}", r.a_n_bound).unwrap();
    if let Some(b) = r.indecomposable_bound {
        writeln!(out, "d <= n (indecomposable): {b}").unwrap();
    }
    if r.violations.is_empty() {
        writeln!(out, "violations: none").unwrap();
    } else {
        for v in &r.violations {
            writeln!(out, "violation: {v}").unwrap();
        }
    }
}

fn pair(p: &Pair, op: &str) -> cyset_core::Result<Outcome> {
    let s = read_set(&p.file)?;
    let (a, b) = (p.a.element(&s)?, p.b.element(&s)?);
    let out = match (op, p.side) {
        ("gcd", Side::Left) => describe(&gcd_left(&s, &a, &b)?),
        ("gcd", Side::Right) => describe(&gcd_right(&s, &a, &b)?),
        ("lcm", Side::Left) => describe(&lcm_left(&s, &a, &b)?),
        ("lcm", Side::Right) => describe(&lcm_right(&s, &a, &b)?),
        (_, Side::Left) => left_divides(&a, &b)?.to_string(),
        (_, Side::Right) => right_divides(&a, &b)?.to_string(),
    };
    Ok(Outcome::Ok(out + "\n"))
}

fn run(cmd: Command) -> cyset_core::Result<Outcome> {
    let mut out = String::new();
    match cmd {
        Command::Validate { file } => {
            return Ok(match validate(&read_table(&file)?) {
                Validation::Valid => Outcome::Ok("Valid\n".into()),
                Validation::Invalid(w) => Outcome::Rejected(format!("Invalid ({w})\n")),
            });
        }
        Command::Info { file } => {
            let s = read_set(&file)?;
            let t = diagonal_map(&s)?;
            let g = perm_group(&s, DEFAULT_ELEMENT_CAP)?;
            writeln!(out, "n={}", s.n()).unwrap();
            writeln!(out, "square-free={}", t.square_free).unwrap();
            writeln!(out, "T={} o(T)={}", t.t, t.order).unwrap();
            writeln!(out, "#G={} abelian={} transitive={}", g.order, g.abelian, g.transitive).unwrap();
            let orbits: Vec<String> = g
                .orbits
                .iter()
                .map(|o| format!("{{{}}}", list(&o.iter().map(|x| x + 1).collect::<Vec<_>>())))
                .collect();
            writeln!(out, "orbits={}", orbits.join(" ")).unwrap();
            class_lines(&mut out, &s);
        }
        Command::Pi { file, word } => {
            let s = read_set(&file)?;
            let t = pi_expression(&s, &word.0)?;
            let g = pi(&s, &t)?;
            writeln!(out, "tuple={t}").unwrap();
            writeln!(out, "cp=({})", list(g.cp())).unwrap();
            writeln!(out, "perm={}", g.perm()).unwrap();
            writeln!(out, "lambda={}", g.lambda()).unwrap();
        }
        Command::Equal { file, w1, w2, mod_d } => {
            let s = read_set(&file)?;
            let eq = if mod_d {
                let d = Germ::new(&s, None)?.modulus();
                germ_words_equal(&s, &w1.0, &w2.0, d)?
            } else {
                words_equal(&s, &w1.0, &w2.0)?
            };
            writeln!(out, "{eq}").unwrap();
        }
        Command::Gcd(p) => return pair(&p, "gcd"),
        Command::Lcm(p) => return pair(&p, "lcm"),
        Command::Divides(p) => return pair(&p, "divides"),
        Command::Delta { file, k, divisors } => {
            let s = read_set(&file)?;
            let g = delta(&s, k)?;
            writeln!(out, "{}", describe(&g)).unwrap();
            let b = is_balanced(&s, &g, DEFAULT_BALANCE_CAP)?;
            writeln!(out, "balanced={}", opt(b.exact)).unwrap();
            if divisors {
                let divs = divisors_of_delta(&s, DEFAULT_DELTA_DIVISOR_CAP)?;
                writeln!(out, "divisors={}", divs.len()).unwrap();
                for d in divs {
                    writeln!(out, "  {d}").unwrap();
                }
            }
        }
        Command::Class { file } => {
            let s = read_set(&file)?;
            writeln!(out, "n={}", s.n()).unwrap();
            class_lines(&mut out, &s);
        }
        Command::Germ { file, modulus } => {
            let s = read_set(&file)?;
            let germ = Germ::new(&s, modulus)?;
            writeln!(out, "modulus={}", germ.modulus()).unwrap();
            writeln!(out, "order={}", opt(germ.order())).unwrap();
            writeln!(out, "generated={}", germ.generated_order(DEFAULT_GERM_CAP)?).unwrap();
            writeln!(out, "permutation-free={}", germ.is_permutation_free(DEFAULT_GERM_CAP)?).unwrap();
        }
        Command::Retract { file, k } => {
            let s = read_set(&file)?;
            out = write_cys(retraction(&s, k)?.table());
        }
        Command::Zappa { first, second } => {
            let (s1, s2) = (read_set(&first)?, read_set(&second)?);
            let c = zappa_compose(&s1, &s2)?;
            writeln!(out, "# d1={} d2={} u={} v={}", c.d1, c.d2, c.u, c.v).unwrap();
            for (i, row) in c.table.rows().iter().enumerate() {
                writeln!(out, "# psi(s{})={row}", i + 1).unwrap();
            }
            let mixed = match mixed_equation_check(&s1, &s2)? {
                MixedOutcome::Passed => "holds".to_string(),
                MixedOutcome::Counterexample { s, t, u } => format!("fails at {} {} {}", s + 1, t + 1, u + 1),
            };
            writeln!(out, "# mixed equation {mixed}").unwrap();
            out.push_str(&write_cys(&c.table));
            return Ok(match c.validation {
                Validation::Valid => Outcome::Ok(out + "valid\n"),
                Validation::Invalid(w) => Outcome::Rejected(format!(
                    "{out}invalid (witness {} {} {}): s{} vs s{}\n",
                    w.s, w.t, w.u, w.left, w.right
                )),
            });
        }
        Command::Sylow { file, recompose, groups } => {
            let s = read_set(&file)?;
            let factors = sylow_decompose(&s)?;
            for (i, f) in factors.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                writeln!(out, "# p={} a={} beta={} class={}", f.prime, f.exponent, f.beta, f.class).unwrap();
                out.push_str(&write_cys(f.cycle_set.table()));
            }
            if recompose {
                let ok = sylow_recompose(&factors)? == s;
                writeln!(out, "# round trip: {}", if ok { "ok" } else { "failed" }).unwrap();
                if !ok {
                    return Ok(Outcome::Rejected(out));
                }
            }
            if groups {
                let r = sylow_group_checks(&s, DEFAULT_GERM_CAP, 10_000)?;
                for h in &r.subgroups {
                    writeln!(out, "# subgroup p={} order={} expected={}", h.prime, h.order, h.expected_order).unwrap();
                }
                writeln!(
                    out,
                    "# commutation failures={} factored={} factorization failures={}",
                    r.commutation_failures, r.factored, r.factorization_failures
                )
                .unwrap();
            }
        }
        Command::Census { n, iso, out: path, cap } => {
            let mode = if iso { Mode::UpToIso } else { Mode::Labeled };
            if let Some(p) = &path {
                run_to_file(p, n, mode, cap)?;
            }
            let r = stats(n, cap)?;
            let (hist, fraction, bounds) = if iso {
                (&r.iso_histogram, r.iso_prime_power_fraction, &r.iso_product_bounds)
            } else {
                (&r.class_histogram, r.prime_power_fraction, &r.product_bounds)
            };
            writeln!(out, "n={n}").unwrap();
            writeln!(out, "total={}", r.total_count).unwrap();
            writeln!(out, "iso={}", r.iso_count).unwrap();
            writeln!(out, "dmax={}", r.dmax).unwrap();
            for (d, k) in hist {
                writeln!(out, "hist {d}={k}").unwrap();
            }
            writeln!(out, "prime-power fraction={fraction:.4}").unwrap();
            for b in bounds {
                writeln!(out, "N({n},{}) = {} <= {}: {}", b.d, b.count, b.product, b.holds()).unwrap();
            }
            writeln!(out, "violations={}", r.violations.len()).unwrap();
            for v in &r.violations {
                writeln!(out, "violation: {v}").unwrap();
            }
        }
        Command::Bounds { n } => {
            let b = class_bounds(n);
            writeln!(out, "a_n={} g_n={}", b.a_n, b.landau_g).unwrap();
            writeln!(out, "n!={}", opt(factorial(n))).unwrap();
        }
    }
    Ok(Outcome::Ok(out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Rejected(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(e) => {
            println!("ERR {}: {e}", e.code());
            ExitCode::from(1)
        }
    }
}
