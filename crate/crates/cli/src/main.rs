mod family;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tgcheck_core::verdict::{ambient_verdict_timed, candidate_stakings, thickened_verdict_timed};
use tgcheck_core::{
    generate, parse_diagram, serialize_diagram, stake, trace_regions, AmbientAssertions, Diagram, PunctureMark, Status,
    VerdictOptions, DEFAULT_BUDGET,
};

use report::{InputSummary, Report};

const ERROR_EXIT: u8 = 4;

/// Decide tg-hyperbolicity of alternating links in thickened surfaces with
/// boundary.
#[derive(Parser)]
#[command(
    name = "tgcheck",
    version,
    after_help = "Exit status: 0 TG_HYPERBOLIC, 1 NOT_TG_HYPERBOLIC, 2 NOT_APPLICABLE, 3 UNDECIDED, \
                  4 parse or usage error.\nsearch-staking exits 0 when a placement is found and 1 otherwise."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verdict on a diagram file.
    Check {
        path: PathBuf,
        #[command(flatten)]
        verdict: VerdictArgs,
    },
    /// Puncture regions of an unpunctured diagram, then run a verdict.
    Stake {
        path: PathBuf,
        /// Pole corners, e.g. "(0,1);(0,3)".
        #[arg(long)]
        poles: String,
        #[command(flatten)]
        verdict: VerdictArgs,
    },
    /// Search for pole placements that make the diagram hyperbolic.
    SearchStaking {
        path: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_poles: usize,
        /// Report every hyperbolic placement instead of the first.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Write a diagram from one of the built-in families.
    Generate {
        /// twist, grid, sum or curl.
        #[arg(long)]
        family: String,
        /// twist: k=N[,clasp=true]; grid: p=N,q=M; sum: twist:k=3;twist:k=3.
        #[arg(long, default_value = "")]
        params: String,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct VerdictArgs {
    #[arg(long, value_enum, default_value_t = TheoremArg::Thickened)]
    theorem: TheoremArg,
    /// Comma list of ambient hypotheses to assert, or "all".
    #[arg(long, default_value = "")]
    assert_ambient: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Search-state budget for condition (iv).
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Thickened,
    Ambient,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(ERROR_EXIT);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(ERROR_EXIT)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check { path, verdict } => {
            let d = load(&path)?;
            emit(&path, &d, &verdict)
        }
        Command::Stake { path, poles, verdict } => {
            let d = load(&path)?;
            let poles = parse_poles(&poles)?;
            let staked = stake(&d, &poles).with_context(|| format!("cannot stake {}", path.display()))?;
            emit(&path, &staked, &verdict)
        }
        Command::SearchStaking { path, max_poles, all, format, budget } => {
            let d = load(&path)?;
            search(&d, max_poles, all, format, budget)
        }
        Command::Generate { family, params, output } => {
            let f = family::parse_family(&family, &params)?;
            let d = generate(&f)?;
            let text = serialize_diagram(&d);
            match output {
                Some(p) => std::fs::write(&p, text).with_context(|| format!("cannot write {}", p.display()))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn load(path: &Path) -> Result<Diagram> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_diagram(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn parse_assertions(list: &str) -> Result<AmbientAssertions> {
    let list = list.trim();
    if list == "all" {
        return Ok(AmbientAssertions::all());
    }
    let mut a = AmbientAssertions::default();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if !a.set(name) {
            bail!("unknown ambient assertion {name:?} (expected one of {})", AmbientAssertions::NAMES.join(", "));
        }
    }
    Ok(a)
}

fn parse_poles(s: &str) -> Result<Vec<PunctureMark>> {
    s.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let inner = p
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| anyhow!("pole {p:?} is not of the form (c,j)"))?;
            let (c, j) = inner.split_once(',').ok_or_else(|| anyhow!("pole {p:?} is not of the form (c,j)"))?;
            let c: usize = c.trim().parse().with_context(|| format!("bad crossing in pole {p:?}"))?;
            let j: u8 = j.trim().parse().with_context(|| format!("bad corner in pole {p:?}"))?;
            if j > 3 {
                bail!("corner index in pole {p:?} must be 0..=3");
            }
            Ok(PunctureMark::new(c, j))
        })
        .collect()
}

fn emit(path: &Path, d: &Diagram, args: &VerdictArgs) -> Result<u8> {
    let assertions = parse_assertions(&args.assert_ambient)?;
    let opts = VerdictOptions { budget: args.budget };
    let (verdict, timings) = match args.theorem {
        TheoremArg::Thickened => thickened_verdict_timed(d, &opts),
        TheoremArg::Ambient => ambient_verdict_timed(d, &assertions),
    };
    let validation = d.validate_structure();
    let report = Report {
        input: InputSummary::new(&path.display().to_string(), d, &validation),
        validation,
        verdict,
        timings,
    };
    match args.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json())?),
    }
    Ok(report.exit_code())
}

fn search(d: &Diagram, max_poles: usize, all: bool, format: Format, budget: u64) -> Result<u8> {
    if !d.punctures().is_empty() {
        bail!("search-staking needs a diagram without punctures");
    }
    let rm = trace_regions(d);
    let opts = VerdictOptions { budget };
    let mut stdout = std::io::stdout().lock();
    let mut found = 0usize;
    let mut undecided = 0usize;
    for regions in candidate_stakings(d, max_poles) {
        let poles: Vec<_> = regions.iter().map(|&r| PunctureMark { corner: rm.region(r).corners[0] }).collect();
        let staked = stake(d, &poles)?;
        let (verdict, _) = thickened_verdict_timed(&staked, &opts);
        match verdict.status {
            Status::TgHyperbolic => {}
            Status::Undecided => {
                undecided += 1;
                continue;
            }
            _ => continue,
        }
        found += 1;
        let pole_text: Vec<String> = poles.iter().map(|p| p.corner.to_string()).collect();
        match format {
            Format::Text => {
                let ids: Vec<String> = regions.iter().map(|r| r.to_string()).collect();
                writeln!(stdout, "regions {} poles {}", ids.join(","), pole_text.join(";"))?;
            }
            Format::Json => {
                let line = json!({ "regions": regions, "poles": pole_text, "status": verdict.status });
                writeln!(stdout, "{line}")?;
            }
        }
        stdout.flush()?;
        if !all {
            break;
        }
    }
    if found == 0 {
        if format == Format::Text {
            let extra = if undecided > 0 { format!(" ({undecided} placements undecided)") } else { String::new() };
            writeln!(stdout, "no hyperbolic staking with at most {max_poles} poles{extra}")?;
        }
        return Ok(1);
    }
    Ok(0)
}
