use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use tdesign::code::{CodeDescriptor, EnumOptions, DEFAULT_BUDGET};
use tdesign::design::write_blocks;
use tdesign::field::Sign;
use tdesign::theory::Side;
use tdesign_cli::{
    cmd_analyze, cmd_design_verify, cmd_family, paper_suite, summary, Analysis, FamilyArgs,
    RunConfig, SuiteStatus, SUITE_IDS,
};

#[derive(Parser)]
#[command(name = "tdesign", about = "Constacyclic codes, weight enumerators and the designs they support")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one named family and analyze it
    Family {
        #[command(subcommand)]
        which: Which,
    },
    /// Analyze the code described by a JSON descriptor
    Analyze {
        descriptor: PathBuf,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Check whether a block file is a t-design
    DesignVerify {
        blocks: PathBuf,
        #[arg(long)]
        t: usize,
        /// number of points (default: one past the largest label)
        #[arg(long)]
        v: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Replay every published example and print a pass/fail matrix
    PaperSuite {
        /// row ids to skip; q11 skips the q = 11 item
        #[arg(long, value_delimiter = ',')]
        skip: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum Which {
    Cyclic {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u32,
        #[command(flatten)]
        run: RunFlags,
    },
    Nega {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        sign: Sign,
        /// allow q in the other residue class mod 4
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        run: RunFlags,
    },
    Ovoid {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        run: RunFlags,
    },
    #[command(name = "gf4-17")]
    Gf4 {
        #[command(flatten)]
        run: RunFlags,
    },
}

#[derive(Args, Clone)]
struct Common {
    /// write the JSON report here ("-" for stdout)
    #[arg(long)]
    json: Option<PathBuf>,
    /// cap on coordinate evaluations
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// worker threads (default: all cores)
    #[arg(long)]
    workers: Option<usize>,
}

impl Common {
    fn opts(&self) -> EnumOptions {
        EnumOptions {
            budget: self.budget,
            workers: self.workers,
        }
    }
}

#[derive(Args, Clone)]
struct RunFlags {
    /// design strength to test (default 3, or 4 for the GF(4) code)
    #[arg(long)]
    t: Option<usize>,
    /// directory for one block file per verified design
    #[arg(long)]
    dump_blocks: Option<PathBuf>,
    /// verify promised designs (the default)
    #[arg(long, conflicts_with = "no_verify_designs")]
    verify_designs: bool,
    /// only count, skip design verification
    #[arg(long)]
    no_verify_designs: bool,
    /// include wall-clock time in the report
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    common: Common,
}

impl RunFlags {
    fn config(&self, default_t: usize) -> RunConfig {
        RunConfig {
            opts: self.common.opts(),
            t: self.t.unwrap_or(default_t),
            verify_designs: !self.no_verify_designs,
            timing: self.timing,
            ..RunConfig::default()
        }
    }
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+1" | "1" | "+" | "plus" => Ok(Sign::Plus),
        "-1" | "-" | "minus" => Ok(Sign::Minus),
        _ => Err(format!("expected +1 or -1, got {s:?}")),
    }
}

fn emit_json<T: Serialize>(value: &T, path: Option<&Path>) -> Result<()> {
    let Some(path) = path else { return Ok(()) };
    let text = serde_json::to_string_pretty(value)? + "\n";
    if path == Path::new("-") {
        print!("{text}");
    } else {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn dump(a: &Analysis, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (side, w, blocks) in &a.structures {
        let name = match side {
            Side::Code => format!("code-{w}.blocks"),
            Side::Dual => format!("dual-{w}.blocks"),
        };
        let mut f = fs::File::create(dir.join(&name))?;
        write_blocks(blocks, &mut f)?;
    }
    Ok(())
}

fn finish_run(a: Analysis, run: &RunFlags) -> Result<bool> {
    if run.common.json.as_deref() != Some(Path::new("-")) {
        print!("{}", summary(&a.report));
    }
    emit_json(&a.report, run.common.json.as_deref())?;
    if let Some(dir) = &run.dump_blocks {
        dump(&a, dir)?;
    }
    Ok(a.report.pass)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Command::Family { which } => {
            let (args, run, default_t) = match which {
                Which::Cyclic { p, m, s, run } => (FamilyArgs::Cyclic { p, m, s }, run, 3),
                Which::Nega { q, sign, force, run } => (FamilyArgs::Nega { q, sign, force }, run, 3),
                Which::Ovoid { q, run } => (FamilyArgs::Ovoid { q }, run, 3),
                Which::Gf4 { run } => (FamilyArgs::Gf4, run, 4),
            };
            let a = cmd_family(&args, &run.config(default_t))?;
            finish_run(a, &run)
        }
        Command::Analyze { descriptor, run } => {
            let text = fs::read_to_string(&descriptor)
                .with_context(|| format!("reading {}", descriptor.display()))?;
            // a full report carries its descriptor under "code"
            let mut value: serde_json::Value = serde_json::from_str(&text)?;
            if let Some(inner) = value.get_mut("code").filter(|c| c.is_object()) {
                value = inner.take();
            }
            let desc: CodeDescriptor = serde_json::from_value(value)?;
            let default_t = if desc.family == "gf4_17" { 4 } else { 3 };
            let a = cmd_analyze(&desc, &run.config(default_t))?;
            finish_run(a, &run)
        }
        Command::DesignVerify { blocks, t, v, common } => {
            let text =
                fs::read_to_string(&blocks).with_context(|| format!("reading {}", blocks.display()))?;
            let r = cmd_design_verify(&text, t, v, &common.opts())?;
            let quiet = common.json.as_deref() == Some(Path::new("-"));
            match &r.lambda {
                _ if quiet => {}
                Some(l) => println!("{t}-({},{},{}) design, b = {}", r.v, r.k.unwrap_or(0), l, r.b),
                None => println!(
                    "not a {t}-design: multiplicities {}..{}",
                    r.min.as_deref().unwrap_or("?"),
                    r.max.as_deref().unwrap_or("?")
                ),
            }
            emit_json(&r, common.json.as_deref())?;
            Ok(r.is_design)
        }
        Command::PaperSuite { skip, common } => {
            if let Some(bad) = skip.iter().find(|s| !SUITE_IDS.contains(&s.as_str()) && *s != "q11") {
                bail!("unknown suite item {bad:?}");
            }
            let rows = paper_suite(&common.opts(), &skip);
            let quiet = common.json.as_deref() == Some(Path::new("-"));
            for r in rows.iter().filter(|_| !quiet) {
                let status = match r.status {
                    SuiteStatus::Pass => "pass",
                    SuiteStatus::Fail => "FAIL",
                    SuiteStatus::Skipped => "skip",
                };
                println!("{:<16} {status:<5} {}", r.id, r.citation);
                if !r.detail.is_empty() && r.status == SuiteStatus::Fail {
                    println!("{:16} {}", "", r.detail);
                }
            }
            emit_json(&rows, common.json.as_deref())?;
            Ok(rows.iter().all(|r| r.status != SuiteStatus::Fail))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
