use std::io::{self, Read};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use gr_core::enumeration::{
    count_by_cycle_type, count_derangements_gf, count_derangements_pie, count_involutions,
};
use gr_core::ornament::DEFAULT_ORNAMENT_LIMIT;
use gr_core::perm::{is_as_permutation, partitions};
use gr_core::{bijection, verify, BlockSpec, CycleType, Ornament, Permutation};

/// Block-monotone permutations and their ornaments.
#[derive(Debug, Parser)]
#[command(name = "gr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the ornament of a permutation (one-line notation).
    Map {
        #[command(flatten)]
        blocks: BlockArgs,
        /// Permutation text; read from stdin when omitted.
        input: Option<String>,
    },
    /// Print the unique (A,S)-permutation mapping to an ornament.
    Unmap {
        #[command(flatten)]
        blocks: BlockArgs,
        /// Ornament text such as `(1 2)(1 2)`; read from stdin when omitted.
        input: Option<String>,
    },
    /// Count (A,S)-permutations.
    Count {
        #[command(flatten)]
        blocks: BlockArgs,
        what: CountKind,
        /// Cycle type for `cycle-type`, comma separated.
        #[arg(long)]
        cycle_type: Option<String>,
    },
    /// Run every consistency suite over all block specs up to the given size.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
    },
}

#[derive(Debug, Args)]
struct BlockArgs {
    /// Block lengths, comma separated.
    #[arg(long)]
    blocks: String,
    /// 1-based indices of descending blocks, comma separated; empty for none.
    #[arg(long, default_value = "")]
    descending: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CountKind {
    Derangements,
    Involutions,
    CycleType,
    All,
}

const INTERNAL_FAILURE: u8 = 2;

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().with_context(|| format!("bad {what} entry `{t}`")))
        .collect()
}

impl BlockArgs {
    fn spec(&self) -> Result<BlockSpec> {
        let lengths = parse_list(&self.blocks, "--blocks")?;
        let descending = parse_list(&self.descending, "--descending")?;
        Ok(BlockSpec::new(lengths, &descending)?)
    }
}

fn read_input(arg: Option<String>) -> Result<String> {
    match arg {
        Some(text) => Ok(text),
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            Ok(buf)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Map { blocks, input } => {
            let b = blocks.spec()?;
            let p: Permutation = read_input(input)?.parse()?;
            let text = bijection::colored_cycle_notation(&p, &b)?;
            if !is_as_permutation(&p, &b)? {
                eprintln!("warning: {p} is not an (A,S)-permutation for {b}; the map is not injective here");
            }
            println!("{text}");
        }
        Command::Unmap { blocks, input } => {
            let b = blocks.spec()?;
            let o: Ornament = read_input(input)?.parse()?;
            println!("{}", bijection::inverse(&o, &b)?);
        }
        Command::Count {
            blocks,
            what,
            cycle_type,
        } => return count(&blocks.spec()?, what, cycle_type.as_deref()),
        Command::Verify { max_n, max_k } => {
            if max_n > DEFAULT_ORNAMENT_LIMIT {
                bail!("--max-n {max_n} exceeds the exhaustive limit {DEFAULT_ORNAMENT_LIMIT}");
            }
            if max_k == 0 {
                bail!("--max-k must be at least 1");
            }
            return Ok(verify_all(max_n, max_k));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn count(b: &BlockSpec, what: CountKind, cycle_type: Option<&str>) -> Result<ExitCode> {
    let mut rows: Vec<(String, &str, String)> = Vec::new();
    let mut consistent = true;
    if matches!(what, CountKind::Derangements | CountKind::All) {
        let pie = count_derangements_pie(b);
        let gf = count_derangements_gf(b);
        if pie != gf {
            eprintln!("internal error: inclusion-exclusion gives {pie} but the generating function gives {gf} for {b}");
            consistent = false;
        }
        rows.push(("derangements".into(), "pie", pie.to_string()));
        rows.push(("derangements".into(), "gf", gf.to_string()));
    }
    if matches!(what, CountKind::Involutions | CountKind::All) {
        rows.push(("involutions".into(), "ornaments", count_involutions(b)?.to_string()));
    }
    match what {
        CountKind::CycleType => {
            let text = cycle_type.ok_or_else(|| anyhow!("`count cycle-type` needs --cycle-type"))?;
            let t: CycleType = text.parse()?;
            rows.push((format!("cycle-type {t}"), "ornaments", count_by_cycle_type(b, &t)?.to_string()));
        }
        CountKind::All => {
            for t in partitions(b.n()) {
                rows.push((format!("cycle-type {t}"), "ornaments", count_by_cycle_type(b, &t)?.to_string()));
            }
        }
        _ => {}
    }
    println!("quantity\tmethod\tcount");
    for (quantity, method, value) in rows {
        println!("{quantity}\t{method}\t{value}");
    }
    Ok(if consistent {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(INTERNAL_FAILURE)
    })
}

fn verify_all(max_n: usize, max_k: usize) -> ExitCode {
    let reports = verify::run_all(max_n, max_k);
    println!("suite\tcases\tpassed\tfailed");
    for r in &reports {
        println!("{r}");
    }
    let mut ok = true;
    for r in &reports {
        for failure in &r.failures {
            eprintln!("FAIL {}: {failure}", r.name);
            ok = false;
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(INTERNAL_FAILURE)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
