//! `branchlab`: list the catalog, run the verification suite, evaluate transfer maps.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use branchlab::catalog::{bundled_catalog, CatalogDocument};
use branchlab::rational::{self, to_string as rat};
use branchlab::reps::project_su;
use branchlab::verify::{transfer_map, verify_case, CaseReport, VerifyOptions};
use branchlab::weights::dominant_representative;
use branchlab::{CaseId, CaseRecord, CaseTag, Rational, WeightVector};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Version of the JSON documents written by this tool.
const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "branchlab",
    version,
    about = "Exact verification of branching laws and invariant-operator transfer maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print groups, ranks and generator degrees of each case.
    List(Common),
    /// Run the verification suite and exit nonzero on any failed check.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Parameter box for every enumerated check.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(i64).range(0..))]
        bound: i64,
        /// Total degree of the independence moment matrix.
        #[arg(long, default_value_t = 2)]
        degree: u32,
    },
    /// Evaluate `S_tau(lambda)` for one case.
    Transfer {
        #[command(flatten)]
        common: Common,
        /// Parameters of tau in Disc(K/H), comma separated.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        tau: Vec<i64>,
        /// Restricted parameter lambda + rho, comma separated rationals such as `11` or `1/2`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Comma-separated case ids (`vi`, `i:2`, `star`); a bare sized tag expands to every size up to `--max-n`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    cases: Vec<String>,
    /// Largest size parameter `n` for sized families.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    max_n: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Catalog document to use instead of the bundled one.
    #[arg(long, env = "BRANCHLAB_CATALOG")]
    catalog: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl Common {
    fn load(&self) -> anyhow::Result<CatalogDocument> {
        match &self.catalog {
            Some(path) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                Ok(CatalogDocument::from_json(&text)?)
            }
            None => Ok(bundled_catalog()?),
        }
    }

    /// Cases named by `--cases`, in catalog order.
    fn select(&self, doc: &CatalogDocument) -> anyhow::Result<Vec<CaseRecord>> {
        if self.max_n > doc.max_n as u64 && self.cases.iter().any(|c| c == "all" || is_sized_tag(c)) {
            bail!("catalog covers sizes up to {}, --max-n {} requested", doc.max_n, self.max_n);
        }
        let within = |c: &CaseRecord| c.id.size.map_or(true, |n| n as u64 <= self.max_n);
        let mut wanted: Vec<CaseId> = Vec::new();
        for name in &self.cases {
            if name == "all" {
                wanted.extend(doc.cases.iter().filter(|c| within(c)).map(|c| c.id));
            } else if let Ok(id) = name.parse::<CaseId>() {
                wanted.push(id);
            } else {
                let tag: CaseTag = name.parse().map_err(|_| anyhow!("unknown case id {name:?}"))?;
                wanted.extend(doc.cases.iter().filter(|c| c.id.tag == tag && within(c)).map(|c| c.id));
            }
        }
        let selected: Vec<CaseRecord> = doc.cases.iter().filter(|c| wanted.contains(&c.id)).cloned().collect();
        if let Some(missing) = wanted.iter().find(|id| !selected.iter().any(|c| c.id == **id)) {
            bail!("case {missing} is not in the catalog");
        }
        if selected.is_empty() {
            bail!("no cases selected");
        }
        Ok(selected)
    }

    fn emit(&self, text: &str) -> anyhow::Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                std::io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

fn is_sized_tag(name: &str) -> bool {
    name.parse::<CaseTag>().is_ok_and(|t| t.min_size().is_some())
}

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct CaseSummary {
    id: CaseId,
    space: String,
    g_tilde: String,
    h_tilde: String,
    g: String,
    h: String,
    k: String,
    ranks: (u32, u32, u32),
    realized_ranks: (u32, u32, u32),
    degrees_tilde: Vec<u32>,
    degrees_fiber: Vec<u32>,
    generators_tilde: Vec<String>,
    generators_fiber: Vec<String>,
    alias_of: Option<CaseId>,
}

impl CaseSummary {
    fn new(c: &CaseRecord) -> Self {
        let n = &c.names;
        CaseSummary {
            id: c.id,
            space: format!("{}/{} ≃ {}/{}", n.g_tilde, n.h_tilde, n.g, n.h),
            g_tilde: n.g_tilde.clone(),
            h_tilde: n.h_tilde.clone(),
            g: n.g.clone(),
            h: n.h.clone(),
            k: n.k.clone(),
            ranks: c.table_ranks,
            realized_ranks: c.realized_ranks,
            degrees_tilde: c.degrees.tilde.clone(),
            degrees_fiber: c.degrees.fiber.clone(),
            generators_tilde: c.generators.tilde.clone(),
            generators_fiber: c.generators.fiber.clone(),
            alias_of: c.alias_of,
        }
    }
}

#[derive(Serialize)]
struct ListDocument {
    schema: u32,
    cases: Vec<CaseSummary>,
}

fn cmd_list(common: &Common) -> anyhow::Result<ExitCode> {
    let cases = common.select(&common.load()?)?;
    let rows: Vec<CaseSummary> = cases.iter().map(CaseSummary::new).collect();
    let text = match common.format {
        Format::Json => json(&ListDocument { schema: SCHEMA, cases: rows }),
        Format::Text => {
            let mut s = format!("{:<10} {:<44} {:<22} {:<9} {}\n", "case", "G~/H~ = G/H", "K", "ranks", "degrees");
            for r in &rows {
                let (a, b, c) = r.ranks;
                s.push_str(&format!(
                    "{:<10} {:<44} {:<22} {:<9} {:?} | {:?}\n",
                    r.id.to_string(),
                    r.space,
                    r.k,
                    format!("{a}+{b}={c}"),
                    r.degrees_tilde,
                    r.degrees_fiber
                ));
            }
            s
        }
    };
    common.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyDocument {
    schema: u32,
    bound: i64,
    max_n: u64,
    degree: u32,
    passed: bool,
    reports: Vec<CaseReport>,
}

fn cmd_verify(common: &Common, bound: i64, degree: u32) -> anyhow::Result<ExitCode> {
    let cases = common.select(&common.load()?)?;
    let opts = VerifyOptions { bound, degree, ..VerifyOptions::default() };
    let reports: Vec<CaseReport> = cases.iter().map(|c| verify_case(c, &opts)).collect();
    let passed = reports.iter().all(CaseReport::passed);
    let text = match common.format {
        Format::Json => json(&VerifyDocument { schema: SCHEMA, bound, max_n: common.max_n, degree, passed, reports }),
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&format!("{} (bound {}): {}\n", r.case, r.bound, if r.passed() { "pass" } else { "FAIL" }));
                for c in &r.checks {
                    let status = if c.passed() { "pass" } else { "FAIL" };
                    s.push_str(&format!("  {:<28} {:<4} {:>8} run {:>6} failed\n", c.name, status, c.run, c.failed));
                    if let Some(f) = &c.first_failure {
                        s.push_str(&format!(
                            "    first failure at {:?} [{}]: expected {}, got {}\n",
                            f.theta, f.detail, f.expected, f.got
                        ));
                    }
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            s.push_str(&format!("{} cases, {failed} failing\n", reports.len()));
            s
        }
    };
    common.emit(&text)?;
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct TransferDocument {
    schema: u32,
    case: CaseId,
    tau: Vec<i64>,
    lambda: Vec<String>,
    matrix: Vec<Vec<String>>,
    offset: Vec<String>,
    image: Vec<String>,
    canonical: Vec<String>,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(rat).collect()
}

fn cmd_transfer(common: &Common, tau: &[i64], lambda: &[String]) -> anyhow::Result<ExitCode> {
    let cases = common.select(&common.load()?)?;
    let [case] = cases.as_slice() else {
        bail!("transfer needs exactly one case, got {}", cases.len());
    };
    let lambda: Vec<Rational> = lambda.iter().map(|s| rational::parse(s.trim())).collect::<Result<_, _>>()?;
    let map = transfer_map(case, tau)?;
    let image = WeightVector::new(map.apply(&lambda)?);
    let canonical = dominant_representative(&case.g.weyl, &project_su(&case.g, &image))?;
    let doc = TransferDocument {
        schema: SCHEMA,
        case: case.id,
        tau: tau.to_vec(),
        lambda: strings(&lambda),
        matrix: map.matrix.iter().map(|row| strings(row)).collect(),
        offset: strings(&map.offset),
        image: strings(image.coords()),
        canonical: strings(canonical.coords()),
    };
    let text = match common.format {
        Format::Json => json(&doc),
        Format::Text => {
            let mut s = format!("case {} tau {:?}\nmatrix:\n", doc.case, doc.tau);
            for row in &doc.matrix {
                s.push_str(&format!("  [{}]\n", row.join(", ")));
            }
            s.push_str(&format!("offset: ({})\n", doc.offset.join(", ")));
            s.push_str(&format!("lambda: ({})\n", doc.lambda.join(", ")));
            s.push_str(&format!("image: {image}\n"));
            s.push_str(&format!("canonical: {canonical}\n"));
            s
        }
    };
    common.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::List(common) => cmd_list(common),
        Command::Verify { common, bound, degree } => cmd_verify(common, *bound, *degree),
        Command::Transfer { common, tau, lambda } => cmd_transfer(common, tau, lambda),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
