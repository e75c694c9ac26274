//! The `wreath` command line: argument parsing, configuration and the five subcommands.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::abelian::{dual_group, AbelianSubgroup, GroupDescriptor, QuotientMap};
use crate::bialgebra::{default_n_max, Basis, GradedVector, TowerContext};
use crate::cache::{to_canonical_json, Cache, CharTableFile, CACHE_DIR_ENV, FORMAT_VERSION};
use crate::error::{usage, Error, Result};
use crate::tower::{full_verification, TowerMapReport, TowerPair, VerifyOptions};
use crate::wreath::{RestrictedWreathGroup, DEFAULT_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "wreath", version, about = "Character tables and representation rings of restricted wreath products G_n(G,H)")]
pub struct Cli {
    #[command(flatten)]
    pub options: GlobalOptions,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GlobalOptions {
    /// Invariant factors of G, e.g. `4` or `2,2`; empty for the trivial group.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub group: Option<String>,
    /// Generators of H separated by `;`, coordinates by `,` (e.g. `2` or `1,1`); `all` for H = G.
    #[arg(long, global = true)]
    pub subgroup: Option<String>,
    #[arg(long, global = true)]
    pub nmax: Option<usize>,
    /// Largest group order that may be enumerated.
    #[arg(long, global = true)]
    pub budget: Option<u128>,
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// JSON config file; flags win on conflict.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Print elapsed time and cache statistics to stderr.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summarise G, H, G/H and the groups G_n(G,H) for n ≤ n_max.
    Describe,
    /// Exact character table of G_n(G,H).
    CharTable {
        #[arg(long, short = 'n')]
        degree: usize,
    },
    /// Induction product of basis elements given as `degree:index`.
    Product {
        #[arg(required = true)]
        labels: Vec<String>,
    },
    /// Restriction coproduct of a basis element.
    Coproduct { label: String },
    /// Run the full verification suite.
    Verify {
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// Settings as read from a config file; every field optional.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub group: Option<Vec<u32>>,
    pub subgroup: Option<Vec<Vec<u32>>>,
    pub n_max: Option<usize>,
    pub budget: Option<u128>,
    pub cache_dir: Option<PathBuf>,
    pub format: Option<Format>,
    pub jobs: Option<usize>,
}

/// Fully resolved job settings.
#[derive(Debug, Clone)]
pub struct JobConfig {
    pub descriptor: GroupDescriptor,
    pub n_max: usize,
    pub budget: u128,
    pub cache_dir: Option<PathBuf>,
    pub format: Format,
    pub jobs: Option<usize>,
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| usage(format!("{x:?} is not a nonnegative integer")))).collect()
}

impl JobConfig {
    pub fn resolve(options: &GlobalOptions) -> Result<Self> {
        let file: ConfigFile = match &options.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
                serde_json::from_str(&text).map_err(|e| usage(format!("bad config {}: {e}", path.display())))?
            }
            None => ConfigFile::default(),
        };
        let factors = match &options.group {
            Some(s) => parse_list(s)?,
            None => file.group.clone().ok_or_else(|| usage("no coefficient group given (use --group)"))?,
        };
        let g = crate::abelian::FiniteAbelianGroup::new(factors.clone())?;
        let generators = match options.subgroup.as_deref() {
            Some("all") => AbelianSubgroup::whole(&g).generators().iter().map(|x| x.0.clone()).collect(),
            Some(s) => s.split(';').filter(|x| !x.trim().is_empty()).map(parse_list).collect::<Result<_>>()?,
            None => file.subgroup.clone().unwrap_or_default(),
        };
        let descriptor = GroupDescriptor::new(factors, generators);
        descriptor.build()?;
        let budget = options.budget.or(file.budget).unwrap_or(DEFAULT_BUDGET);
        if budget == 0 {
            return Err(usage("budget must be positive"));
        }
        Ok(JobConfig {
            n_max: options.nmax.or(file.n_max).unwrap_or_else(|| default_n_max(&g)),
            budget,
            cache_dir: options.cache_dir.clone().or(file.cache_dir),
            format: options.format.or(file.format).unwrap_or(Format::Text),
            jobs: options.jobs.or(file.jobs),
            descriptor,
        })
    }

    fn cache(&self) -> Result<Option<Arc<Cache>>> {
        self.cache_dir.as_ref().map(|d| Cache::new(d).map(Arc::new)).transpose()
    }

    fn pair(&self, cache: Option<Arc<Cache>>) -> Result<TowerPair> {
        TowerPair::build(self.descriptor.clone(), self.n_max, self.budget, cache)
    }

    fn context(&self, cache: Option<Arc<Cache>>) -> Result<TowerContext> {
        let ctx = TowerContext::new(self.descriptor.clone(), self.n_max)?.with_budget(self.budget);
        Ok(match cache {
            Some(c) => ctx.with_cache(c),
            None => ctx,
        })
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) | Error::Io(_) | Error::Serde(_) => EXIT_USAGE,
        Error::Resource { .. } => EXIT_BUDGET,
        Error::Internal(_) | Error::NotVirtualCharacter(_) => EXIT_CHECK_FAILED,
    }
}

/// Runs a parsed command line, writing results to `out` and diagnostics to `err`; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let start = Instant::now();
    let config = match JobConfig::resolve(&cli.options) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "wreath: {e}");
            return exit_code(&e);
        }
    };
    if let Some(jobs) = config.jobs {
        // Fails only if a global pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    let cache = match config.cache() {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "wreath: {e}");
            return exit_code(&e);
        }
    };
    let result = match &cli.command {
        Command::Describe => describe(&config, out),
        Command::CharTable { degree } => char_table(&config, cache.clone(), *degree, out),
        Command::Product { labels } => product(&config, cache.clone(), labels, out),
        Command::Coproduct { label } => coproduct(&config, cache.clone(), label, out),
        Command::Verify { report } => verify(&config, cache.clone(), report.as_ref(), out),
    };
    if cli.options.timing {
        let _ = writeln!(err, "elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    if let Some(c) = &cache {
        let _ = writeln!(err, "cache: {} hits, {} misses ({})", c.hits(), c.misses(), c.dir().display());
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "wreath: {e}");
            exit_code(&e)
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub n: usize,
    pub order: String,
    /// None when the group is larger than the budget.
    pub classes: Option<usize>,
    pub reflection_group: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Description {
    pub format_version: u32,
    pub kind: String,
    pub descriptor: GroupDescriptor,
    pub group: String,
    pub group_order: usize,
    pub subgroup: String,
    pub subgroup_order: usize,
    pub index: usize,
    pub quotient: String,
    pub dual_size: usize,
    pub full_wreath: bool,
    pub reflection_family: Option<String>,
    pub degrees: Vec<DegreeSummary>,
}

pub fn description(config: &JobConfig) -> Result<Description> {
    let (g, h) = config.descriptor.build()?;
    let q = QuotientMap::new(&h)?;
    let family = g.is_cyclic().then(|| (g.order(), h.index()));
    let mut degrees = Vec::new();
    for n in 1..=config.n_max {
        let order = RestrictedWreathGroup::order_formula(&h, n);
        let classes = match RestrictedWreathGroup::new(&h, n, config.budget) {
            Ok(group) => Some(group.class_count()),
            Err(Error::Resource { .. }) => None,
            Err(e) => return Err(e),
        };
        degrees.push(DegreeSummary {
            n,
            order: order.to_string(),
            classes,
            reflection_group: family.map(|(m, p)| format!("G({m},{p},{n})")),
        });
    }
    Ok(Description {
        format_version: FORMAT_VERSION,
        kind: "describe".into(),
        descriptor: config.descriptor.clone(),
        group: g.to_string(),
        group_order: g.order(),
        subgroup: h.structure().to_string(),
        subgroup_order: h.order(),
        index: h.index(),
        quotient: q.target().to_string(),
        dual_size: dual_group(h.structure()).len(),
        full_wreath: h.index() == 1,
        reflection_family: family.map(|(m, p)| format!("G({m},{p},n)")),
        degrees,
    })
}

fn describe(config: &JobConfig, out: &mut dyn Write) -> Result<i32> {
    let d = description(config)?;
    if config.format == Format::Json {
        emit(out, &to_canonical_json(&d)?)?;
        return Ok(EXIT_OK);
    }
    let mut s = String::new();
    s += &format!("G = {} (order {})\n", d.group, d.group_order);
    s += &format!("H = {} (order {}), [G:H] = {}\n", d.subgroup, d.subgroup_order, d.index);
    s += &format!("G/H = {}, |H*| = {}\n", d.quotient, d.dual_size);
    if d.full_wreath {
        s += if d.group_order == 2 { "full wreath tower (hyperoctahedral groups)\n" } else { "full wreath tower S_n[G]\n" };
    }
    if let Some(f) = &d.reflection_family {
        s += &format!("complex reflection groups {f}\n");
    }
    for deg in &d.degrees {
        let classes = deg.classes.map_or("over budget".to_string(), |c| c.to_string());
        let name = deg.reflection_group.as_deref().map_or(String::new(), |r| format!("  {r}"));
        s += &format!("n = {}: order {}, classes {}{}\n", deg.n, deg.order, classes, name);
    }
    emit(out, &s)?;
    Ok(EXIT_OK)
}

fn char_table(config: &JobConfig, cache: Option<Arc<Cache>>, n: usize, out: &mut dyn Write) -> Result<i32> {
    let config = JobConfig { n_max: config.n_max.max(n), ..config.clone() };
    let ctx = config.context(cache)?;
    let d = ctx.degree(n)?;
    let file = CharTableFile::new(&config.descriptor, n, d.representative_words(), &d.table);
    if config.format == Format::Json {
        emit(out, &to_canonical_json(&file)?)?;
        return Ok(EXIT_OK);
    }
    let mut s = format!("G_{n}: order {}, {} classes, values in Q(z{})\n", file.order, file.class_sizes.len(), file.conductor);
    for (c, (rep, size)) in file.representatives.iter().zip(&file.class_sizes).enumerate() {
        s += &format!("class {c}: size {size}, representative {rep}\n");
    }
    for (i, chi) in d.table.irreducibles().iter().enumerate() {
        let values: Vec<String> = chi.values().iter().map(|v| v.to_string()).collect();
        s += &format!("{n}:{i} (degree {}): {}\n", d.table.degrees()[i], values.join(" | "));
    }
    emit(out, &s)?;
    Ok(EXIT_OK)
}

fn parse_labels(ctx: &TowerContext, labels: &[String]) -> Result<Vec<Basis>> {
    labels
        .iter()
        .map(|l| {
            let b: Basis = l.parse()?;
            if b.degree > ctx.n_max() {
                return Err(usage(format!("unknown label {l}: degree exceeds n_max = {}", ctx.n_max())));
            }
            ctx.check_basis(b)?;
            Ok(b)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub basis: Vec<String>,
    pub coefficient: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub format_version: u32,
    pub kind: String,
    pub descriptor: GroupDescriptor,
    pub input: Vec<String>,
    pub terms: Vec<Term>,
}

fn print_decomposition(config: &JobConfig, d: &Decomposition, out: &mut dyn Write) -> Result<i32> {
    if config.format == Format::Json {
        emit(out, &to_canonical_json(d)?)?;
    } else {
        let mut s = String::new();
        for t in &d.terms {
            s += &format!("{}\t{}\n", t.basis.join(" ⊗ "), t.coefficient);
        }
        emit(out, &s)?;
    }
    Ok(EXIT_OK)
}

fn product(config: &JobConfig, cache: Option<Arc<Cache>>, labels: &[String], out: &mut dyn Write) -> Result<i32> {
    let ctx = config.context(cache)?;
    let factors: Vec<GradedVector> = parse_labels(&ctx, labels)?.into_iter().map(GradedVector::basis).collect();
    let result = ctx.product_all(&factors)?;
    let d = Decomposition {
        format_version: FORMAT_VERSION,
        kind: "product".into(),
        descriptor: config.descriptor.clone(),
        input: labels.to_vec(),
        terms: result.terms().map(|(b, c)| Term { basis: vec![b.to_string()], coefficient: c }).collect(),
    };
    print_decomposition(config, &d, out)
}

fn coproduct(config: &JobConfig, cache: Option<Arc<Cache>>, label: &str, out: &mut dyn Write) -> Result<i32> {
    let ctx = config.context(cache)?;
    let b = parse_labels(&ctx, &[label.to_string()])?[0];
    let result = ctx.coproduct(&GradedVector::basis(b))?;
    let d = Decomposition {
        format_version: FORMAT_VERSION,
        kind: "coproduct".into(),
        descriptor: config.descriptor.clone(),
        input: vec![label.to_string()],
        terms: result.terms().map(|(p, c)| Term { basis: p.iter().map(Basis::to_string).collect(), coefficient: c }).collect(),
    };
    print_decomposition(config, &d, out)
}

pub fn verification(config: &JobConfig, cache: Option<Arc<Cache>>) -> Result<TowerMapReport> {
    full_verification(&config.pair(cache)?, VerifyOptions::default())
}

fn verify(config: &JobConfig, cache: Option<Arc<Cache>>, report_path: Option<&PathBuf>, out: &mut dyn Write) -> Result<i32> {
    let report = verification(config, cache)?;
    let text = to_canonical_json(&report)?;
    if let Some(path) = report_path {
        fs::write(path, &text)?;
    }
    if config.format == Format::Json {
        emit(out, &text)?;
    } else {
        let mut s = String::new();
        s += &format!("tower {} n_max {} [G:H] = {}\n", config.descriptor.canonical_json(), report.n_max, report.index);
        for c in &report.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            s += &format!("{status} {} {} ({} cases)\n", c.id, json!(c.params), c.cases);
            if let Some(w) = &c.witness {
                s += &format!("     witness: {w}\n");
            }
        }
        let norms: Vec<String> = report.phi_norms.iter().map(i64::to_string).collect();
        s += &format!("norms of Φ(π_λ): {}\n", norms.join(", "));
        let failed = report.failures().count();
        s += &format!("{} of {} checks passed\n", report.checks.len() - failed, report.checks.len());
        emit(out, &s)?;
    }
    Ok(if report.passed { EXIT_OK } else { EXIT_CHECK_FAILED })
}
