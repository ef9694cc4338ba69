use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use orient_count::duality::{mc_estimate, mc_exhaustive, DualityOptions};
use orient_count::oracle::{brute_force_count, count_from_expansion, expand_orientation_polynomial};
use orient_count::special::{
    eulerian_regular_count, even_orientation_count, mixed_count, mixed_lower_bound, n_divisible_count,
};
use orient_count::{
    duality_count, generalized_duality_count, AdmissibleSet, ConstraintProfile, ConstraintSpec, Error,
    GaugePair, Graph, Limits, VertexPartition,
};

/// Exact counting of graph orientations with out-degree constraints.
#[derive(Parser, Debug)]
#[command(name = "orient-count", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count orientations of one graph.
    Count(CountArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Brute,
    Expansion,
    Duality,
    Gauge,
    Even,
    Ndiv,
    Mixed,
    EulerianRegular,
    Mc,
    Selfcheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(clap::Args, Debug)]
struct CountArgs {
    /// Edge-list file.
    #[arg(long)]
    graph: PathBuf,
    /// Inline constraint directives, e.g. "all: mod 2 = 0".
    #[arg(long, conflicts_with = "constraints_file")]
    constraints: Option<String>,
    /// File holding constraint directives.
    #[arg(long)]
    constraints_file: Option<PathBuf>,
    #[arg(long, value_enum)]
    algorithm: Algorithm,
    /// Modulus for `ndiv`.
    #[arg(long = "modulus", short = 'N')]
    modulus: Option<usize>,
    /// Vertex partition for `mixed`, e.g. "v1=0,3,5".
    #[arg(long)]
    partition: Option<String>,
    /// Gauge file: a line of alpha values and a line of beta values, as p/q.
    #[arg(long)]
    gauge: Option<PathBuf>,
    /// Sample count for `mc`.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Average over every sign vector instead of sampling (`mc`).
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    /// Largest edge count for 2^|E| enumerations.
    #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u32).range(1..))]
    enum_cap: u32,
    /// Largest number of colourings N^|E|.
    #[arg(long, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    coloring_cap: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Serialize, Debug, Clone, Copy)]
struct Caps {
    enumeration: u32,
    coloring: u64,
}

/// One output line. Field order is part of the output contract.
#[derive(Serialize, Debug)]
struct Record {
    algorithm: String,
    count: String,
    terms: Option<u64>,
    workers: u64,
    seconds: f64,
    caps: Caps,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    std_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower_bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hypothesis: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

struct Context {
    graph: Graph,
    profile: Option<ConstraintProfile>,
    unconstrained: ConstraintProfile,
    limits: Limits,
    args: CountArgs,
}

impl Context {
    fn record(&self, algorithm: &str, count: String, terms: Option<u64>, started: Instant) -> Record {
        Record {
            algorithm: algorithm.to_string(),
            count,
            terms,
            workers: self.args.workers,
            seconds: started.elapsed().as_secs_f64(),
            caps: Caps {
                enumeration: self.limits.enumeration_cap,
                coloring: self.limits.coloring_cap,
            },
            seed: None,
            std_error: None,
            lower_bound: None,
            hypothesis: None,
            agree: None,
        }
    }

    /// The given profile, or `any` at every vertex.
    fn profile(&self) -> Result<&ConstraintProfile, Error> {
        Ok(self.profile.as_ref().unwrap_or(&self.unconstrained))
    }

    /// Fails when constraints were given and differ from the implied profile.
    fn check_implied(&self, implied: &ConstraintProfile, name: &str) -> Result<(), Error> {
        if let Some(p) = &self.profile {
            if p.masks(&self.graph) != implied.masks(&self.graph) {
                return Err(Error::Argument(format!(
                    "the given constraints do not match the profile counted by `{name}`"
                )));
            }
        }
        Ok(())
    }

    fn duality_options(&self) -> DualityOptions {
        DualityOptions {
            workers: self.args.workers as usize,
            limits: self.limits,
            force_big: false,
        }
    }

    fn gauge(&self) -> Result<GaugePair, Error> {
        match &self.args.gauge {
            Some(path) => GaugePair::parse(&read(path)?),
            None => Ok(GaugePair::bernoulli()),
        }
    }

    fn partition(&self) -> Result<Option<VertexPartition>, Error> {
        self.args
            .partition
            .as_deref()
            .map(|p| VertexPartition::parse(self.graph.vertex_count(), p))
            .transpose()
    }

    fn run_brute(&self) -> Result<Record, Error> {
        let t = Instant::now();
        let c = brute_force_count(&self.graph, self.profile()?, &self.limits)?;
        Ok(self.record("brute", c.to_string(), Some(1 << self.graph.edge_count()), t))
    }

    fn run_expansion(&self) -> Result<Record, Error> {
        let t = Instant::now();
        let ex = expand_orientation_polynomial(&self.graph, &self.limits)?;
        let c = count_from_expansion(&ex, self.profile()?)?;
        Ok(self.record("expansion", c.to_string(), Some(ex.len() as u64), t))
    }

    fn run_duality(&self) -> Result<Record, Error> {
        let t = Instant::now();
        let r = duality_count(&self.graph, self.profile()?, &self.duality_options())?;
        Ok(self.record("duality", r.count.to_string(), Some(r.terms), t))
    }

    fn run_gauge(&self) -> Result<Record, Error> {
        let t = Instant::now();
        let gauge = self.gauge()?;
        let c = generalized_duality_count(&self.graph, self.profile()?, &gauge, &self.limits)?;
        let terms = (gauge.len() as u64).checked_pow(self.graph.edge_count() as u32);
        Ok(self.record("gauge", c.to_string(), terms, t))
    }

    fn run_even(&self) -> Result<Record, Error> {
        let t = Instant::now();
        self.check_implied(&ConstraintProfile::divisible(self.graph.vertex_count(), 2)?, "even")?;
        let c = even_orientation_count(&self.graph);
        Ok(self.record("even", c.to_string(), None, t))
    }

    fn run_ndiv(&self, modulus: usize) -> Result<Record, Error> {
        let t = Instant::now();
        self.check_implied(
            &ConstraintProfile::divisible(self.graph.vertex_count(), modulus as u64)?,
            "ndiv",
        )?;
        let c = n_divisible_count(&self.graph, modulus, &self.limits)?;
        let terms = (modulus as u64).checked_pow(self.graph.edge_count() as u32);
        Ok(self.record("ndiv", c.to_string(), terms, t))
    }

    fn run_mixed(&self, part: &VertexPartition) -> Result<Record, Error> {
        let t = Instant::now();
        self.check_implied(&ConstraintProfile::mixed(&self.graph, part), "mixed")?;
        let bound = mixed_lower_bound(&self.graph, part)?;
        let c = mixed_count(&self.graph, part, &self.limits)?;
        if bound.hypothesis && num_rational::BigRational::from_integer(c.clone()) < bound.bound {
            return Err(Error::Internal(format!(
                "mixed count {c} is below the lower bound {}",
                bound.bound
            )));
        }
        let mut rec = self.record("mixed", c.to_string(), None, t);
        rec.lower_bound = Some(bound.bound.to_string());
        rec.hypothesis = Some(bound.hypothesis);
        Ok(rec)
    }

    fn run_eulerian(&self) -> Result<Record, Error> {
        let t = Instant::now();
        self.check_implied(&ConstraintProfile::eulerian(&self.graph), "eulerian-regular")?;
        let c = eulerian_regular_count(&self.graph, &self.limits)?;
        Ok(self.record("eulerian-regular", c.to_string(), None, t))
    }

    fn run_mc(&self) -> Result<Record, Error> {
        let t = Instant::now();
        let profile = self.profile()?;
        let (est, seed) = if self.args.exhaustive {
            (mc_exhaustive(&self.graph, profile, &self.limits)?, None)
        } else {
            let samples = self
                .args
                .samples
                .ok_or_else(|| Error::Argument("--samples is required for --algorithm mc".into()))?;
            (mc_estimate(&self.graph, profile, samples, self.args.seed)?, Some(self.args.seed))
        };
        let mut rec = self.record("mc", est.mean.to_string(), Some(est.samples), t);
        rec.seed = seed;
        rec.std_error = est.std_error.is_finite().then_some(est.std_error);
        Ok(rec)
    }

    /// Runs every algorithm that applies to the instance. Returns the
    /// records and whether all exact counts agree.
    fn run_selfcheck(&self) -> Result<(Vec<Record>, bool), Error> {
        let t = Instant::now();
        let profile = self.profile()?;
        let g = &self.graph;
        let masks = profile.masks(g);
        let mut records = Vec::new();
        let mut skipped = Vec::new();

        let mut attempt = |name: &str, r: Result<Record, Error>| -> Result<(), Error> {
            match r {
                Ok(rec) => records.push(rec),
                Err(e @ Error::CapExceeded { .. }) => skipped.push(format!("{name}: {e}")),
                Err(e) => return Err(e),
            }
            Ok(())
        };
        attempt("brute", self.run_brute())?;
        attempt("expansion", self.run_expansion())?;
        attempt("duality", self.run_duality())?;
        attempt("gauge", self.run_gauge())?;
        if g.edge_count() <= 16 {
            let t = Instant::now();
            let est = mc_exhaustive(g, profile, &self.limits)?;
            attempt("mc", Ok(self.record("mc", est.mean.to_string(), Some(est.samples), t)))?;
        }

        let even = ConstraintProfile::divisible(g.vertex_count(), 2)?;
        if masks == even.masks(g) {
            attempt("even", self.run_even())?;
        }
        if let Some(modulus) = uniform_modulus(profile) {
            if modulus >= 2 {
                attempt("ndiv", self.run_ndiv(modulus))?;
            }
        }
        let eulerian_applies = matches!(g.regular_degree(), Some(d) if d % 2 == 0)
            && masks == ConstraintProfile::eulerian(g).masks(g);
        if eulerian_applies {
            attempt("eulerian-regular", self.run_eulerian())?;
        }
        let part = match self.partition()? {
            Some(p) => Some(p),
            None => detect_partition(g, &masks)?,
        };
        if let Some(part) = part {
            attempt("mixed", self.run_mixed(&part))?;
        }

        for s in &skipped {
            eprintln!("selfcheck skipped {s}");
        }
        let first = records
            .first()
            .map(|r| r.count.clone())
            .ok_or_else(|| Error::Argument("no algorithm applies within the caps".into()))?;
        let agree = records.iter().all(|r| r.count == first);
        let mut summary = self.record("selfcheck", first, None, t);
        summary.agree = Some(agree);
        records.push(summary);
        Ok((records, agree))
    }
}

/// The common `N` when every vertex asks for multiples of `N`.
fn uniform_modulus(profile: &ConstraintProfile) -> Option<usize> {
    let mut moduli = profile.sets().iter().map(AdmissibleSet::as_residue);
    let first = moduli.next()??;
    if first.0 != 0 {
        return None;
    }
    moduli
        .all(|m| m == Some(first))
        .then_some(first.1 as usize)
}

/// A partition under which the profile is exactly "half on the first part,
/// even on the second", if one exists.
fn detect_partition(g: &Graph, masks: &[Vec<bool>]) -> Result<Option<VertexPartition>, Error> {
    let mut first = Vec::new();
    for v in 0..g.vertex_count() {
        let d = g.degree(v);
        let even = AdmissibleSet::multiples_of(2)?.mask(d);
        if masks[v] == even {
            continue;
        }
        if d % 2 == 0 && masks[v] == AdmissibleSet::singleton(d as i64 / 2).mask(d) {
            first.push(v);
        } else {
            return Ok(None);
        }
    }
    VertexPartition::from_part1(g.vertex_count(), &first).map(Some)
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn emit(records: &[Record], format: Format) {
    for r in records {
        match format {
            Format::JsonLines => {
                println!("{}", serde_json::to_string(r).expect("records serialise"));
            }
            Format::Text => {
                println!("algorithm: {}", r.algorithm);
                println!("count: {}", r.count);
                if let Some(terms) = r.terms {
                    println!("terms: {terms}");
                }
                if let Some(seed) = r.seed {
                    println!("seed: {seed}");
                }
                if let Some(se) = r.std_error {
                    println!("std_error: {se}");
                }
                if let Some(b) = &r.lower_bound {
                    println!("lower_bound: {b}");
                }
                if let Some(h) = r.hypothesis {
                    println!("hypothesis: {h}");
                }
                if let Some(a) = r.agree {
                    println!("agree: {a}");
                }
                println!("workers: {}", r.workers);
                println!("seconds: {:.6}", r.seconds);
                println!();
            }
        }
    }
}

fn run(args: CountArgs) -> Result<(Vec<Record>, bool), Error> {
    let graph = Graph::parse(&read(&args.graph)?)?;
    let spec = match (&args.constraints, &args.constraints_file) {
        (Some(text), _) => Some(ConstraintSpec::parse(text)?),
        (None, Some(path)) => Some(ConstraintSpec::parse(&read(path)?)?),
        (None, None) => None,
    };
    let profile = spec.map(|s| s.resolve(&graph)).transpose()?;
    let limits = Limits {
        enumeration_cap: args.enum_cap,
        coloring_cap: args.coloring_cap,
    };
    let unconstrained = ConstraintProfile::uniform(graph.vertex_count(), AdmissibleSet::all());
    let cx = Context {
        graph,
        profile,
        unconstrained,
        limits,
        args,
    };
    let single = |r: Result<Record, Error>| r.map(|rec| (vec![rec], true));
    match cx.args.algorithm {
        Algorithm::Brute => single(cx.run_brute()),
        Algorithm::Expansion => single(cx.run_expansion()),
        Algorithm::Duality => single(cx.run_duality()),
        Algorithm::Gauge => single(cx.run_gauge()),
        Algorithm::Even => single(cx.run_even()),
        Algorithm::Ndiv => {
            let n = cx
                .args
                .modulus
                .ok_or_else(|| Error::Argument("--modulus is required for --algorithm ndiv".into()))?;
            single(cx.run_ndiv(n))
        }
        Algorithm::Mixed => {
            let part = cx
                .partition()?
                .ok_or_else(|| Error::Argument("--partition is required for --algorithm mixed".into()))?;
            single(cx.run_mixed(&part))
        }
        Algorithm::EulerianRegular => single(cx.run_eulerian()),
        Algorithm::Mc => single(cx.run_mc()),
        Algorithm::Selfcheck => cx.run_selfcheck(),
    }
}

const BUG_BANNER: &str = "\
*** internal invariant violated ***
This is a bug in orient-count. Please report it together with the graph,
the constraints and the command line that triggered it.";

fn main() -> ExitCode {
    let Command::Count(args) = Cli::parse().command;
    let format = args.format;
    match run(args) {
        Ok((records, agree)) => {
            emit(&records, format);
            if agree {
                ExitCode::SUCCESS
            } else {
                eprintln!("{BUG_BANNER}\nselfcheck: exact counts disagree");
                ExitCode::from(4)
            }
        }
        Err(e) => {
            if matches!(e, Error::Internal(_)) {
                eprintln!("{BUG_BANNER}");
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

