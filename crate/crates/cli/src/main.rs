//! `modquot`: certificates and classifications for quotients of moduli spaces of pointed curves.

mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use modquot_core::catalog::{catalog_entry, slope_min, EntryName};
use modquot_core::certify::{
    build_certificate, classify, ingredients, reproduce_tables, CertificateInput, Grade, TableId,
};
use modquot_core::picard::{FullClassJson, FullDivisorClass, SpaceId};
use modquot_core::pullback::{pullback_aggregate, pullback_full, ForgetfulMap};
use modquot_core::selfcheck::{run_selfcheck, Level};
use modquot_core::symmetry::{parse_group, BlockPartition, ProfileClassJson, ProfileDivisorClass};
use modquot_core::{Error, Rational};

#[derive(Parser, Debug)]
#[command(name = "modquot", version, about = "Exact divisor-class certificates for quotients of moduli spaces of pointed curves")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Human-readable output (default).
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the quotient of M(g,n) by a subgroup of S_n.
    Classify {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        points: u32,
        /// Sn, An, S<k>, A<k>, trivial, prod:n1,n2,... or gen:(1 2)(3 4);(1 2 3)
        #[arg(long)]
        group: String,
    },
    /// Evaluate f_m for a partition and check f <= 13.
    Fm(BlocksArgs),
    /// Build and verify the coordinate-wise certificate.
    Certificate {
        #[command(flatten)]
        blocks: BlocksArgs,
        /// Write the certificate JSON to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show a catalog divisor or the slope bound.
    Catalog {
        /// T, F, Ftilde, W or slope.
        #[arg(long)]
        name: String,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        points: Option<u32>,
    },
    /// Pull a class back along the map keeping the given labels.
    Pullback {
        /// Class JSON, either full (subset basis) or profile form.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<u32>,
        /// Number of points of the source; defaults to the largest kept label.
        #[arg(long)]
        points: Option<u32>,
    },
    /// Print stored n_min tables or recompute the difference-variety table.
    Tables {
        /// mgn, msn or diff.
        #[arg(long)]
        which: String,
        #[arg(long)]
        gmin: Option<u32>,
        #[arg(long)]
        gmax: Option<u32>,
    },
    /// Run the built-in consistency suites.
    Selfcheck {
        /// quick or full.
        #[arg(long, default_value = "quick")]
        level: String,
    },
}

#[derive(Args, Debug)]
struct BlocksArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long, value_delimiter = ',', required = true)]
    blocks: Vec<u32>,
    /// Divisor on block k (1-based): k=T, k=F:m, k=Ftilde:m or k=W.
    #[arg(long = "entry")]
    entries: Vec<String>,
}

impl BlocksArgs {
    fn input(&self) -> Result<CertificateInput, Error> {
        let mut names = vec![EntryName::Weierstrass; self.blocks.len()];
        for spec in &self.entries {
            let (k, name) = spec
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("entry {spec:?} is not of the form k=NAME")))?;
            let k: usize = k.trim().parse().map_err(|_| Error::Parse(format!("bad block index in {spec:?}")))?;
            if k == 0 || k > names.len() {
                return Err(Error::Parse(format!("block index {k} out of range 1..={}", names.len())));
            }
            names[k - 1] = name.trim().parse()?;
        }
        CertificateInput::general(self.genus, &self.blocks, &names)
    }
}

/// What a command produced: the report and whether its checks passed.
struct Outcome {
    text: String,
    json: serde_json::Value,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("reports serialize") + "\n"
            } else {
                out.text
            };
            // a closed pipe is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::CriterionInapplicable(_) | Error::GroupTooLarge { .. } | Error::SizeCap { .. }) => 1,
        _ => 2,
    }
}

fn json<T: serde::Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn run(cmd: &Command) -> anyhow::Result<Outcome> {
    Ok(match cmd {
        Command::Classify { genus, points, group } => {
            let g = parse_group(group, *points)?;
            let v = classify(*genus, *points, &g)?;
            Outcome {
                text: report::verdict(&v),
                json: json(&v),
                passed: true,
            }
        }
        Command::Fm(args) => {
            let input = args.input()?;
            let ing = ingredients(&input)?;
            let passed = ing.f <= Rational::from_int(13);
            Outcome {
                text: report::fm(&ing, passed),
                json: report::fm_json(&ing, passed),
                passed,
            }
        }
        Command::Certificate { blocks, out } => {
            let cert = build_certificate(&blocks.input()?)?;
            let js = cert.to_json();
            if let Some(path) = out {
                let body = serde_json::to_string_pretty(&js)? + "\n";
                std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
            }
            Outcome {
                text: report::certificate(&cert),
                json: json(&js),
                passed: cert.grade != Grade::Fail,
            }
        }
        Command::Catalog { name, genus, m, points } => catalog(name, *genus, *m, *points)?,
        Command::Pullback { input, keep, points } => pullback(input, keep, *points)?,
        Command::Tables { which, gmin, gmax } => {
            let which: TableId = which.parse()?;
            let r = reproduce_tables(which, *gmin, *gmax)?;
            Outcome {
                text: report::tables(&r),
                json: json(&r),
                passed: r.passed(),
            }
        }
        Command::Selfcheck { level } => {
            let level: Level = level.parse()?;
            let r = run_selfcheck(level);
            Outcome {
                text: report::selfcheck(&r),
                json: json(&r),
                passed: r.passed(),
            }
        }
    })
}

fn catalog(name: &str, g: u32, m: Option<u32>, points: Option<u32>) -> anyhow::Result<Outcome> {
    if name == "slope" {
        let s = slope_min(g)?;
        return Ok(Outcome {
            text: format!("s({g}) = {} ({:?})\n", s.slope, s.provenance),
            json: json(&s),
            passed: true,
        });
    }
    let need_m = || m.ok_or_else(|| Error::Parse(format!("--m is required for {name}")));
    let entry = match name {
        "T" => EntryName::T,
        "W" => EntryName::Weierstrass,
        "F" => EntryName::F(need_m()?),
        "Ftilde" => EntryName::Ftilde(need_m()?),
        other => return Err(Error::Parse(format!("unknown catalog name {other:?}; expected T, F, Ftilde, W or slope")).into()),
    };
    let e = catalog_entry(entry, g, points)?;
    Ok(Outcome {
        text: report::catalog(&e),
        json: json(&e.to_json()),
        passed: true,
    })
}

fn pullback(path: &PathBuf, keep: &[u32], points: Option<u32>) -> anyhow::Result<Outcome> {
    let raw = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))?;
    let max_kept = keep.iter().copied().max().unwrap_or(0);
    let n = points.unwrap_or(max_kept);
    let g = value["g"].as_u64().ok_or_else(|| Error::Parse("class JSON lacks a genus".into()))? as u32;
    let map = ForgetfulMap::new(SpaceId::new(g, n)?, keep)?;
    if value.get("blocks").is_some() {
        let x = ProfileDivisorClass::from_json(&serde_json::from_value::<ProfileClassJson>(value)?)?;
        if x.space() != map.target() {
            return Err(Error::Domain(format!("class lives on M({},{}), not on the target", x.space().g, x.space().n)).into());
        }
        let kept = map.kept();
        let mut blocks: Vec<Vec<u32>> = x
            .partition()
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&l| kept[l as usize - 1]).collect())
            .collect();
        let rest = map.forgotten();
        if !rest.is_empty() {
            blocks.push(rest);
        }
        let ambient = BlockPartition::new(n, blocks)?;
        let y = pullback_aggregate(&x, &map, &ambient)?;
        let js = y.to_json();
        Ok(Outcome {
            text: report::profile_class(&y),
            json: json(&js),
            passed: true,
        })
    } else {
        let x = FullDivisorClass::from_json(&serde_json::from_value::<FullClassJson>(value)?)?;
        let y = pullback_full(&x, &map)?;
        let js = y.to_json();
        Ok(Outcome {
            text: report::full_class(&y),
            json: json(&js),
            passed: true,
        })
    }
}
