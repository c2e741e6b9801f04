use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use bifc::bipartition::{enumerate_with_cap, BipartitionJson, DEFAULT_ENUM_CAP, MAX_ENUM_CAP};
use bifc::cumulants::{cumulants_to_moments, moments_to_cumulants};
use bifc::verify::{self, Suite};
use bifc::{BipartitionClass, CumulantData, CumulantFamily, Enumeration, Error, LrWord, MomentData, TranslucentWord};
use clap::{Parser, Subcommand, ValueEnum};

/// Exact two-faced moment-cumulant combinatorics.
#[derive(Parser, Debug)]
#[command(name = "bifc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the bipartitions of a translucent word in a class.
    Enumerate {
        /// Translucent type such as `LRL,101`.
        #[arg(value_name = "TYPE", conflicts_with_all = ["ty", "word"])]
        positional: Option<String>,
        /// Translucent type such as `LRL,101`.
        #[arg(long = "type", conflicts_with = "word")]
        ty: Option<String>,
        /// A plain `{L,R}` word; every position is opaque.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value = "all")]
        class: String,
        #[arg(long, value_enum, default_value_t = Format::Count)]
        format: Format,
        /// Largest opaque count allowed (at most 16).
        #[arg(long, env = "BIFC_MAX_ENUM")]
        max_enum: Option<usize>,
    },
    /// Convert between moments and the bifree, biBoolean or bimonotone cumulants.
    Convert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        /// `moments`, `bifree`, `biboolean` or `bimonotone`.
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Longest word converted; defaults to the longest word in the input.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=14))]
        max_len: Option<u8>,
    },
    /// Run invariant suites; exits with status 1 on any failure.
    Verify {
        #[arg(value_name = "SUITE", conflicts_with = "suite")]
        positional: Option<String>,
        /// One suite; all suites run when omitted.
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(0..=14))]
        max_len: u8,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Count,
    Json,
    Svg,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate { positional, ty, word, class, format, max_enum } => {
            cmd_enumerate(positional.or(ty), word, &class, format, max_enum)
        }
        Command::Convert { input, output, from, to, max_len } => {
            cmd_convert(&input, output.as_ref(), &from, &to, max_len.map(usize::from))
        }
        Command::Verify { positional, suite, max_len, seed } => cmd_verify(positional.or(suite), max_len.into(), seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn cmd_enumerate(
    ty: Option<String>,
    word: Option<String>,
    class: &str,
    format: Format,
    max_enum: Option<usize>,
) -> Result<(), Failure> {
    let t: TranslucentWord = match (ty, word) {
        (Some(ty), _) => ty.parse()?,
        (None, Some(w)) => TranslucentWord::opaque(w.parse::<LrWord>()?),
        (None, None) => return Err(Failure::Usage("give a type (`LRL,101`) or --word".into())),
    };
    let class: BipartitionClass = class.parse()?;
    let cap = max_enum.unwrap_or(DEFAULT_ENUM_CAP).min(MAX_ENUM_CAP);
    let found = enumerate_with_cap(&t, class, cap)?;
    let out = match format {
        Format::Count => format!("{}\n", found.len()),
        Format::Json => {
            let items: Vec<BipartitionJson> = match &found {
                Enumeration::Plain(v) => v.iter().map(BipartitionJson::from).collect(),
                Enumeration::Labeled(v) => v.iter().map(BipartitionJson::from).collect(),
            };
            let mut s = serde_json::to_string_pretty(&items).expect("serializable");
            s.push('\n');
            s
        }
        Format::Svg => {
            let items: Vec<_> = match found {
                Enumeration::Plain(v) => v.into_iter().map(|p| (p, None)).collect(),
                Enumeration::Labeled(v) => v.into_iter().map(|l| (l.base().clone(), Some(l))).collect(),
            };
            bifc::svg::render(&items)
        }
    };
    print!("{out}");
    Ok(())
}

enum Table {
    Moments(MomentData),
    Cumulants(CumulantData),
}

fn parse_kind(s: &str) -> Result<Option<CumulantFamily>, Failure> {
    if s == "moments" {
        return Ok(None);
    }
    s.parse::<CumulantFamily>()
        .map(Some)
        .map_err(|_| Failure::Usage(format!("unknown table kind `{s}`; expected moments, bifree, biboolean or bimonotone")))
}

fn cmd_convert(
    input: &PathBuf,
    output: Option<&PathBuf>,
    from: &str,
    to: &str,
    max_len: Option<usize>,
) -> Result<(), Failure> {
    let from = parse_kind(from)?;
    let to = parse_kind(to)?;
    let text = fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
    let table = match from {
        None => Table::Moments(MomentData::from_json(&text)?),
        Some(family) => {
            let c = CumulantData::from_json(&text)?;
            if c.family != family {
                return Err(Failure::Usage(format!("input holds {} cumulants, not {family}", c.family)));
            }
            Table::Cumulants(c)
        }
    };
    let longest = match &table {
        Table::Moments(m) => m.moments.keys().map(|w| w.len()).max().unwrap_or(0),
        Table::Cumulants(c) => c.values.keys().map(|w| w.len()).max().unwrap_or(0),
    };
    let max_len = max_len.unwrap_or(longest);
    let moments = match table {
        Table::Moments(m) => m,
        Table::Cumulants(c) => cumulants_to_moments(&c, max_len)?,
    };
    let out = match to {
        None => {
            // Keep words up to max_len and insist that each of them is tabulated.
            let kept = moments.moments.into_iter().filter(|(w, _)| w.len() <= max_len).collect();
            let m = MomentData::new(moments.alphabet, kept)?;
            for w in m.alphabet.complete_words(max_len) {
                m.get(&w)?;
            }
            m.to_json()
        }
        Some(family) => moments_to_cumulants(&moments, family, max_len)?.to_json(),
    };
    match output {
        Some(path) => fs::write(path, out).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None => print!("{out}"),
    }
    Ok(())
}

fn cmd_verify(suite: Option<String>, max_len: usize, seed: u64) -> Result<(), Failure> {
    let suites: Vec<Suite> = match suite {
        Some(name) => vec![name.parse()?],
        None => Suite::ALL.to_vec(),
    };
    let mut ok = true;
    for suite in suites {
        let report = verify::run(suite, max_len, seed)?;
        println!("{report}");
        ok &= report.passed();
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
