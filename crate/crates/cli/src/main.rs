use std::io::{self, BufWriter, Write};
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use power_monoid::atoms::{
    alpha_tables, count_good_sets, enumerate_atoms, verify_closed_forms, write_tables, AlphaCache,
    AlphaTable,
};
use power_monoid::monoid::{
    is_primal_bounded, is_primary_bounded, is_prime_bounded, non_primal_in_numerical_monoid,
    BoundedVerdict, Context, Element, NumericalMonoid, NumericalPrimality,
};
use power_monoid::stats::{
    binom_ratio_report, density_rows, entropy, moments_from_table, monte_carlo_atom_fraction,
    stirling_report, unimodality_from_table, write_csv,
};
use power_monoid::{
    divides, divides_unrestricted, is_atom, normalize, sumset, Error, FiniteSet, NormalizedSet,
};

type CliResult<T = ()> = Result<T, Box<dyn std::error::Error>>;

/// Sumsets, divisibility, atoms and atom statistics in power monoids of
/// numerical monoids.
#[derive(Parser)]
#[command(name = "pmon", version)]
struct Cli {
    /// Output format. `plain` prints one word for yes/no questions and CSV
    /// for tables.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    /// Alpha-table cache file, read before enumerating and updated after.
    #[arg(long, env = "PMON_ALPHA_CACHE", global = true)]
    cache: Option<PathBuf>,

    /// Worker threads for enumeration and sampling.
    #[arg(long, global = true)]
    threads: Option<NonZeroUsize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// A + B.
    Sumset { a: String, b: String },
    /// Whether T divides S.
    Divides {
        t: String,
        s: String,
        /// fin0, fin, fin0:GENS or fin:GENS.
        #[arg(long, default_value = "fin0")]
        context: String,
    },
    /// Whether a set containing 0 is an atom.
    Atom { s: String },
    /// Atoms with maximum at most n, optionally of size k.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// The row α_{n,k}, k = 1..n+1, in the cache schema.
    Alpha {
        #[arg(long)]
        n: usize,
    },
    /// Enumerated α_{n,k} for k <= 4 against the closed forms.
    VerifyClosedForms {
        #[arg(long)]
        n: usize,
    },
    /// α_n and α_n / 2^n for every n up to the given one.
    Density {
        #[arg(long)]
        n: usize,
    },
    /// Exact E(X_n^r) and E(Y_n^r) for the atom size X_n and Y_n ~ Bin(n, 1/2).
    Moments {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
    },
    /// Seeded estimate of the fraction of atoms among random sets.
    Montecarlo {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Violations of the unimodality inequality in the row α_{n,·}.
    Unimodality {
        #[arg(long)]
        n: usize,
    },
    /// Bounded search for a witness that p is not prime.
    Prime(CheckArgs),
    /// Bounded search for a witness that p is not primary.
    Primary {
        #[command(flatten)]
        check: CheckArgs,
        /// Largest multiple n·c tried.
        #[arg(long, default_value_t = 20)]
        n_max: usize,
    },
    /// Bounded search for a witness that p is not primal.
    Primal(CheckArgs),
    /// Frobenius number, gaps and a non-primal element of a numerical monoid.
    Nm {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
    },
    /// ln C(n, k) against n·H(k/n).
    Stirling {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Multiples of {0, ⌊n/2⌋} of size k with maximum at most n.
    GoodSets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Natural-log binary entropy H(x).
    Entropy {
        #[arg(long)]
        x: f64,
    },
    /// C(n, cn − t) / C(n, cn) with t = εn / ln n.
    BinomRatio {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        c: f64,
        #[arg(long)]
        epsilon: f64,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// An integer for nm contexts, a set literal otherwise.
    #[arg(long)]
    p: String,
    /// fin0, fin, nm:GENS, fin0:GENS or fin:GENS.
    #[arg(long)]
    context: String,
    #[arg(long)]
    bound: usize,
}

struct Out<W: Write> {
    format: Format,
    w: W,
}

impl<W: Write> Out<W> {
    fn table<T: Serialize>(&mut self, rows: &[T]) -> CliResult {
        match self.format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut self.w, rows)?;
                writeln!(self.w)?;
            }
            Format::Csv | Format::Plain => write_csv(rows, &mut self.w)?,
        }
        Ok(())
    }

    fn record<T: Serialize>(&mut self, row: &T) -> CliResult {
        match self.format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut self.w, row)?;
                writeln!(self.w)?;
                Ok(())
            }
            _ => self.table(std::slice::from_ref(row)),
        }
    }

    /// One word in plain mode, the record otherwise.
    fn answer<T: Serialize>(&mut self, word: &str, row: &T) -> CliResult {
        if self.format == Format::Plain {
            writeln!(self.w, "{word}")?;
            Ok(())
        } else {
            self.record(row)
        }
    }
}

fn parse_set(s: &str) -> CliResult<FiniteSet> {
    Ok(s.parse()?)
}

fn parse_normalized(s: &str) -> CliResult<NormalizedSet> {
    Ok(s.parse()?)
}

fn tables(n: usize, cache: Option<&AlphaCache>) -> CliResult<Vec<AlphaTable>> {
    if let Some(cache) = cache {
        let mut have = cache.load()?;
        if n >= 1 && (1..=n).all(|m| have.contains_key(&m)) {
            return Ok((1..=n).map(|m| have.remove(&m).expect("checked")).collect());
        }
    }
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()).into());
    }
    let rows = alpha_tables(n)?;
    if let Some(cache) = cache {
        cache.store(&rows)?;
    }
    Ok(rows)
}

#[derive(Serialize)]
struct SumsetRow {
    a: FiniteSet,
    b: FiniteSet,
    sum: FiniteSet,
}

#[derive(Serialize)]
struct DividesRow {
    t: FiniteSet,
    s: FiniteSet,
    context: String,
    divides: bool,
    quotient: Option<FiniteSet>,
}

#[derive(Serialize)]
struct AtomRow {
    set: NormalizedSet,
    atom: bool,
    b: Option<NormalizedSet>,
    c: Option<NormalizedSet>,
}

#[derive(Serialize)]
struct SetRow {
    set: NormalizedSet,
}

#[derive(Serialize)]
struct ClosedFormRow {
    n: usize,
    k: usize,
    enumerated: u64,
    closed_form: u128,
    matches: bool,
}

#[derive(Serialize)]
struct UnimodalityRow {
    n: usize,
    k: usize,
    expected: String,
    alpha_k: u64,
    alpha_next: u64,
}

#[derive(Serialize)]
struct CheckRow {
    property: String,
    context: String,
    p: String,
    outcome: &'static str,
    b: Option<String>,
    c: Option<String>,
    bound: usize,
}

#[derive(Serialize)]
struct MonoidRow {
    generators: String,
    frobenius: Option<u64>,
    conductor: u64,
    gaps: String,
    pre_schreier: bool,
    non_primal_p: Option<String>,
    non_primal_b: Option<String>,
    non_primal_c: Option<String>,
}

fn check<W: Write>(
    out: &mut Out<W>,
    name: &str,
    args: &CheckArgs,
    run: impl FnOnce(&Element, &Context) -> power_monoid::Result<BoundedVerdict>,
) -> CliResult {
    let context: Context = args.context.parse()?;
    let p = context.parse_element(&args.p)?;
    let verdict = run(&p, &context)?;
    let word = if verdict.is_violation() { "violation" } else { "no-violation" };
    if out.format == Format::Json {
        return out.record(&verdict);
    }
    let w = verdict.violation();
    let row = CheckRow {
        property: name.to_string(),
        context: context.to_string(),
        p: p.to_string(),
        outcome: word,
        b: w.map(|v| v.b.to_string()),
        c: w.map(|v| v.c.to_string()),
        bound: args.bound,
    };
    out.answer(word, &row)
}

fn run(cli: Cli) -> CliResult {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t.get())
            .build_global()?;
    }
    let cache = cli.cache.map(AlphaCache::new);
    let stdout = io::stdout();
    let mut out = Out {
        format: cli.format,
        w: BufWriter::new(stdout.lock()),
    };
    match cli.command {
        Command::Sumset { a, b } => {
            let (a, b) = (parse_set(&a)?, parse_set(&b)?);
            let sum = sumset(&a, &b)?;
            if out.format == Format::Plain {
                writeln!(out.w, "{sum}")?;
            } else {
                out.record(&SumsetRow { a, b, sum })?;
            }
        }
        Command::Divides { t, s, context } => {
            let ctx: Context = context.parse()?;
            let (t, s) = (parse_set(&t)?, parse_set(&s)?);
            let Context::Power { restricted, base } = &ctx else {
                return Err(Error::Domain("divides takes a power-monoid context".into()).into());
            };
            for x in [&t, &s] {
                if !ctx.contains(&Element::Set(x.clone())) {
                    return Err(Error::Domain(format!("{x} is not an element of {ctx}")).into());
                }
            }
            let yes = ctx.divides(&Element::Set(t.clone()), &Element::Set(s.clone()));
            let quotient = match (yes && base.is_naturals(), restricted) {
                (false, _) => None,
                (true, true) => divides(&normalize(&t).1, &normalize(&s).1)
                    .map(|w| w.quotient.into_set()),
                (true, false) => divides_unrestricted(&t, &s).map(|w| w.quotient()),
            };
            let row = DividesRow {
                t,
                s,
                context: ctx.to_string(),
                divides: yes,
                quotient,
            };
            out.answer(if yes { "yes" } else { "no" }, &row)?;
        }
        Command::Atom { s } => {
            let set = parse_normalized(&s)?;
            let v = is_atom(&set)?;
            let (b, c) = v.witness.clone().unzip();
            let row = AtomRow {
                set,
                atom: v.is_atom,
                b,
                c,
            };
            out.answer(if v.is_atom { "atom" } else { "non-atom" }, &row)?;
        }
        Command::Enumerate { n, k } => {
            let atoms = enumerate_atoms(n, k)?;
            match out.format {
                Format::Plain => {
                    for s in atoms {
                        writeln!(out.w, "{s}")?;
                    }
                }
                _ => {
                    let rows: Vec<SetRow> = atoms.map(|set| SetRow { set }).collect();
                    out.table(&rows)?;
                }
            }
        }
        Command::Alpha { n } => {
            let rows = tables(n, cache.as_ref())?;
            let row = rows.last().expect("n >= 1");
            if out.format == Format::Json {
                #[derive(Serialize)]
                struct AlphaRow<'a> {
                    n: usize,
                    alpha: &'a [u64],
                    total: u64,
                }
                out.record(&AlphaRow {
                    n: row.n,
                    alpha: &row.counts[1..],
                    total: row.total(),
                })?;
            } else {
                write_tables([row], &mut out.w)?;
            }
        }
        Command::VerifyClosedForms { n } => {
            let report = verify_closed_forms(n)?;
            let rows: Vec<ClosedFormRow> = report
                .checks
                .iter()
                .map(|c| ClosedFormRow {
                    n,
                    k: c.k,
                    enumerated: c.enumerated,
                    closed_form: c.closed_form,
                    matches: c.matches,
                })
                .collect();
            out.table(&rows)?;
        }
        Command::Density { n } => {
            out.table(&density_rows(&tables(n, cache.as_ref())?))?;
        }
        Command::Moments { n, r } => {
            let rows = tables(n, cache.as_ref())?;
            out.record(&moments_from_table(&rows[n - 1], r))?;
        }
        Command::Montecarlo { n, k, samples, seed } => {
            out.record(&monte_carlo_atom_fraction(n, k, samples, seed)?)?;
        }
        Command::Unimodality { n } => {
            let rows = tables(n, cache.as_ref())?;
            let report = unimodality_from_table(&rows[n - 1]);
            if out.format == Format::Json {
                out.record(&report)?;
            } else {
                let rows: Vec<UnimodalityRow> = report
                    .violations
                    .iter()
                    .map(|v| UnimodalityRow {
                        n,
                        k: v.k,
                        expected: format!("{:?}", v.expected).to_lowercase(),
                        alpha_k: v.alpha_k,
                        alpha_next: v.alpha_next,
                    })
                    .collect();
                if rows.is_empty() {
                    writeln!(out.w, "n,k,expected,alpha_k,alpha_next")?;
                }
                out.table(&rows)?;
            }
        }
        Command::Prime(args) => {
            check(&mut out, "prime", &args, |p, ctx| is_prime_bounded(p, ctx, args.bound))?
        }
        Command::Primary { check: args, n_max } => check(&mut out, "primary", &args, |p, ctx| {
            is_primary_bounded(p, ctx, args.bound, n_max)
        })?,
        Command::Primal(args) => {
            check(&mut out, "primal", &args, |p, ctx| is_primal_bounded(p, ctx, args.bound))?
        }
        Command::Nm { gens } => {
            let n = NumericalMonoid::new(&gens)?;
            let gaps: Vec<String> = n.gaps().iter().map(u64::to_string).collect();
            let mut row = MonoidRow {
                generators: n.to_string(),
                frobenius: n.frobenius(),
                conductor: n.conductor(),
                gaps: gaps.join(" "),
                pre_schreier: false,
                non_primal_p: None,
                non_primal_b: None,
                non_primal_c: None,
            };
            match non_primal_in_numerical_monoid(&n) {
                NumericalPrimality::PreSchreier => row.pre_schreier = true,
                NumericalPrimality::NotPrimal { violation, .. } => {
                    row.non_primal_p = Some(violation.p.to_string());
                    row.non_primal_b = Some(violation.b.to_string());
                    row.non_primal_c = Some(violation.c.to_string());
                }
            }
            out.record(&row)?;
        }
        Command::Stirling { n, k } => out.record(&stirling_report(n, k)?)?,
        Command::GoodSets { n, k } => out.record(&count_good_sets(n, k)?)?,
        Command::Entropy { x } => out.record(&entropy(x)?)?,
        Command::BinomRatio { n, c, epsilon } => out.record(&binom_ratio_report(n, c, epsilon)?)?,
    }
    out.w.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
