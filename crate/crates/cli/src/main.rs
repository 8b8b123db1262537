use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use minrank::bench;
use minrank::consistency::almost_consistent_graph;
use minrank::dot::to_dot;
use minrank::exchange::{
    build_modified_graph, build_true_graph, find_star_pair, intersect_modified, StarStep,
};
use minrank::gadgets::{
    build_gadget, colorings_from_consistent_graphs, Color, ColoredGraph, GadgetSpec,
};
use minrank::gen;
use minrank::instance::{Instance, InstanceFile};
use minrank::solvers::{
    approx_max_weight, lexicographic_max, max_cardinality, weighted_fpt_circuit,
    weighted_no_circuit_inclusion, TraceRecord, WeightedRun,
};
use minrank::verify::{verify_instance, BruteReport};
use minrank::{ElementSet, MinRankOracle, QueryCache, SolveError, WeightFn};

#[derive(Parser)]
#[command(
    name = "minrank",
    version,
    about = "Matroid intersection through a minimum-rank oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance using only r_min queries.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Required by `--mode weighted`.
        #[arg(long, value_enum, required_if_eq("mode", "weighted"))]
        promise: Option<Promise>,
        /// Circuit-size bound, required by `--mode fpt`.
        #[arg(long, required_if_eq("mode", "fpt"))]
        gamma: Option<usize>,
        /// Print one line per augmentation step.
        #[arg(long)]
        trace: bool,
    },
    /// Cross-check every solver against brute force.
    Verify {
        #[arg(required_unless_present = "seeds", conflicts_with = "seeds")]
        instance: Option<PathBuf>,
        /// Verify this many seeded random instances instead.
        #[arg(long)]
        seeds: Option<u64>,
        /// Largest ground set for seeded instances.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Print every check, not only mismatches.
        #[arg(long)]
        verbose: bool,
    },
    /// Emit an exchangeability graph.
    Graph {
        instance: PathBuf,
        /// Element list such as `{0,3}` or a bit mask such as `9` / `0x9`.
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value = "dot")]
        emit: Emit,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Build the reduction instance of a colored graph.
    Gadget {
        #[arg(long)]
        graph: PathBuf,
        /// JSON list of colors, e.g. `[[1,1],[1,2]]`.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Write the instance file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Oracle-call counts against their envelopes.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [8, 16, 32, 48, 64])]
        sizes: Vec<usize>,
        /// Sizes for the weighted and lexicographic rows.
        #[arg(long, value_delimiter = ',', default_values_t = [5, 6, 7, 8])]
        weighted_sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        instances: usize,
        #[arg(long, default_value_t = 2026)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Cardinality,
    Weighted,
    Fpt,
    Lexmax,
    Approx,
}

#[derive(Clone, Copy, ValueEnum)]
enum Promise {
    NoCircuitInclusion,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    True,
    Modified,
    Intersected,
    Consistent,
}

#[derive(Debug)]
enum Failure {
    /// Infeasible input or a failed check.
    Mismatch(anyhow::Error),
    Usage(anyhow::Error),
    Internal(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::PromiseViolated { .. } => Failure::Mismatch(e.into()),
            SolveError::Matroid(_) | SolveError::NotCommonIndependent(_) => {
                Failure::Usage(e.into())
            }
            SolveError::Consistency(_) | SolveError::NegativeCycle(_) | SolveError::PathExists => {
                Failure::Internal(e.into())
            }
        }
    }
}

type Outcome = Result<(), Failure>;

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn access(class: &str) {
    eprintln!("access: {class}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve {
            instance,
            mode,
            promise,
            gamma,
            trace,
        } => solve(&instance, mode, promise, gamma, trace),
        Command::Verify {
            instance,
            seeds,
            max_n,
            verbose,
        } => match (instance, seeds) {
            (Some(path), _) => verify_file(&path, verbose),
            (None, Some(count)) => verify_seeds(count, max_n, verbose),
            (None, None) => Err(usage(anyhow!("give an instance file or --seeds"))),
        },
        Command::Graph {
            instance,
            set,
            emit: Emit::Dot,
            which,
        } => graph(&instance, &set, which),
        Command::Gadget {
            graph,
            coloring,
            out,
        } => gadget(&graph, coloring.as_deref(), out.as_deref()),
        Command::Bench {
            sizes,
            weighted_sizes,
            instances,
            seed,
        } => run_bench(&sizes, &weighted_sizes, instances, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Mismatch(e) | Failure::Usage(e) | Failure::Internal(e)) = &f;
            eprintln!("error: {e:#}");
            ExitCode::from(f.code())
        }
    }
}

fn load(path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(usage)?;
    InstanceFile::parse(&text)
        .and_then(|f| f.load())
        .with_context(|| format!("loading {}", path.display()))
        .map_err(usage)
}

/// Moves both matroids behind the oracle and keeps only names and weights.
fn into_oracle(instance: Instance) -> Result<(MinRankOracle, Vec<String>, WeightFn), Failure> {
    let oracle = MinRankOracle::new(instance.first, instance.second).map_err(usage)?;
    Ok((oracle, instance.names, instance.weights))
}

fn show(set: ElementSet, names: &[String]) -> String {
    let listed: Vec<&str> = set.iter().map(|e| names[e].as_str()).collect();
    format!("{set} [{}]", listed.join(", "))
}

fn print_trace(trace: &[TraceRecord], enabled: bool) {
    if enabled {
        for t in trace {
            println!("trace {t}");
        }
    }
}

fn solve(
    path: &Path,
    mode: Mode,
    promise: Option<Promise>,
    gamma: Option<usize>,
    trace: bool,
) -> Outcome {
    let (oracle, names, w) = into_oracle(load(path)?)?;
    access("solver-only (r_min queries)");
    match mode {
        Mode::Cardinality => {
            let run = max_cardinality(&oracle)?;
            println!("size {}", run.set.len());
            println!("set {}", show(run.set, &names));
            println!("dual {}", show(run.certificate, &names));
            print_trace(&run.trace, trace);
            println!("queries {}", run.queries);
        }
        Mode::Weighted | Mode::Fpt => {
            let run = if mode == Mode::Weighted {
                let Some(Promise::NoCircuitInclusion) = promise else {
                    return Err(usage(anyhow!("--mode weighted needs --promise")));
                };
                weighted_no_circuit_inclusion(&oracle, &w)?
            } else {
                let gamma = gamma.ok_or_else(|| usage(anyhow!("--mode fpt needs --gamma")))?;
                weighted_fpt_circuit(&oracle, &w, gamma)?
            };
            print_levels(&run, &w, &names);
            print_trace(&run.trace, trace);
            println!("queries {}", run.queries);
        }
        Mode::Lexmax => {
            let run = lexicographic_max(&oracle, &w)?;
            println!("weight {}", w.total(run.set));
            println!("set {}", show(run.set, &names));
            println!("profile {:?}", run.profile);
            print_trace(&run.trace, trace);
            println!("queries {}", run.queries);
        }
        Mode::Approx => {
            let run = approx_max_weight(&oracle, &w)?;
            println!("weight {}", run.weight);
            println!("guarantee {}", run.guarantee);
            println!("set {}", show(run.run.set, &names));
            print_trace(&run.run.trace, trace);
            println!("queries {}", run.run.queries);
        }
    }
    Ok(())
}

fn print_levels(run: &WeightedRun, w: &WeightFn, names: &[String]) {
    for (k, &level) in run.levels.iter().enumerate() {
        println!(
            "level {k} weight {} set {}",
            w.total(level),
            show(level, names)
        );
    }
    let best = run.best(w);
    println!("weight {}", w.total(best));
    println!("set {}", show(best, names));
    println!("dual {}", show(run.certificate, names));
}

fn report_all(reports: &[BruteReport], verbose: bool) -> usize {
    let mut bad = 0;
    for r in reports {
        if !r.agree {
            bad += 1;
        }
        if verbose || !r.agree {
            println!("{r}");
        }
    }
    bad
}

fn verify_file(path: &Path, verbose: bool) -> Outcome {
    let name = path
        .file_stem()
        .map_or("instance".to_string(), |s| s.to_string_lossy().into_owned());
    let (oracle, _, w) = into_oracle(load(path)?)?;
    access("hidden (brute-force verification)");
    let reports = verify_instance(&oracle, &w, &name)?;
    let bad = report_all(&reports, verbose);
    println!(
        "verified 1 instance: {} checks, {bad} mismatches",
        reports.len()
    );
    if bad > 0 {
        return Err(Failure::Mismatch(anyhow!("{bad} mismatches")));
    }
    Ok(())
}

fn seeded(seed: u64, max_n: usize) -> Result<(MinRankOracle, WeightFn), SolveError> {
    let mut rng = gen::rng(seed);
    let n = 1 + (seed as usize) % max_n.max(1);
    let (m1, m2) = gen::mixed_pair(&mut rng, n);
    let w = gen::weights(&mut rng, n, -3, 9);
    Ok((MinRankOracle::new(m1, m2)?, w))
}

fn verify_seeds(count: u64, max_n: usize, verbose: bool) -> Outcome {
    if max_n == 0 || max_n > 10 {
        return Err(usage(anyhow!("--max-n must lie in 1..=10")));
    }
    access("hidden (brute-force verification)");
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get()) as u64;
    let results: Vec<Result<Vec<BruteReport>, SolveError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|worker| {
                scope.spawn(move || {
                    (worker..count)
                        .step_by(workers as usize)
                        .map(|seed| {
                            let (oracle, w) = seeded(seed, max_n)?;
                            verify_instance(&oracle, &w, &format!("seed{seed}"))
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let mut per_worker: Vec<_> = handles
            .into_iter()
            .map(|h| h.join().expect("verification worker panicked").into_iter())
            .collect();
        // back to seed order
        (0..count as usize)
            .map(|s| {
                per_worker[s % workers as usize]
                    .next()
                    .expect("one result per seed")
            })
            .collect()
    });
    let (mut checks, mut bad, mut failed) = (0, 0, 0);
    for result in results {
        let reports = result?;
        checks += reports.len();
        let b = report_all(&reports, verbose);
        bad += b;
        failed += usize::from(b > 0);
    }
    println!(
        "verified {count} instances: {checks} checks, {bad} mismatches, {failed} failing instances"
    );
    if bad > 0 {
        return Err(Failure::Mismatch(anyhow!("{failed} instances failed")));
    }
    println!("all pass");
    Ok(())
}

fn parse_set(text: &str, n: usize) -> Result<ElementSet, Failure> {
    let t = text.trim();
    let set = if t.starts_with('{') || t.contains(',') {
        let inner = t.trim_start_matches('{').trim_end_matches('}');
        let mut s = ElementSet::EMPTY;
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let e: usize = part
                .parse()
                .map_err(|_| usage(anyhow!("`{part}` is not an element")))?;
            if e >= n {
                return Err(usage(anyhow!("element {e} outside the ground set of {n}")));
            }
            s = s.with(e);
        }
        s
    } else {
        let bits = match t.strip_prefix("0x") {
            Some(hex) => u64::from_str_radix(hex, 16),
            None => t.parse(),
        }
        .map_err(|_| usage(anyhow!("`{t}` is neither a mask nor an element list")))?;
        let s = ElementSet::from_bits(bits);
        if !s.is_subset(ElementSet::full(n)) {
            return Err(usage(anyhow!("mask {t} exceeds the ground set of {n}")));
        }
        s
    };
    Ok(set)
}

fn graph(path: &Path, set: &str, which: Which) -> Outcome {
    let instance = load(path)?;
    let i = parse_set(set, instance.first.ground_size())?;
    let names = instance.names.clone();
    let g = if which == Which::True {
        access("hidden (true exchangeability graph)");
        build_true_graph(&instance.first, &instance.second, i).map_err(usage)?
    } else {
        let (oracle, _, _) = into_oracle(instance)?;
        access("solver-only (r_min queries)");
        if !oracle.is_common_independent(i).map_err(usage)? {
            return Err(SolveError::NotCommonIndependent(i).into());
        }
        let cache = QueryCache::new(&oracle, oracle.ground());
        let sp = match find_star_pair(&cache, i) {
            StarStep::Pair(sp) => sp,
            StarStep::Exhausted => {
                return Err(Failure::Mismatch(anyhow!(
                    "{i} is maximum; no star pair exists"
                )))
            }
            StarStep::DirectAugment(x) => {
                return Err(Failure::Mismatch(anyhow!(
                    "{i} + {x} is common independent; no star pair is needed"
                )))
            }
        };
        eprintln!("star pair s*={} t*={}", sp.s, sp.t);
        match which {
            Which::Modified => build_modified_graph(&cache, i, sp),
            Which::Intersected => intersect_modified(&cache, i, sp),
            _ => almost_consistent_graph(&cache, i, sp)?.graph,
        }
    };
    print!("{}", to_dot(&g, &names));
    Ok(())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(usage)?;
    serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(usage)
}

fn gadget(graph_path: &Path, coloring: Option<&Path>, out: Option<&Path>) -> Outcome {
    let g: ColoredGraph = read_json(graph_path)?;
    let g = g.validated().map_err(usage)?;
    let g = match coloring {
        Some(p) => {
            let c: Vec<Color> = read_json(p)?;
            g.with_coloring(c).map_err(usage)?
        }
        None => g,
    };
    let spec = GadgetSpec::new(&g).map_err(usage)?;
    if !spec.unsettled().is_empty() {
        return Err(Failure::Internal(anyhow!(
            "{} pair values could not be settled",
            spec.unsettled().len()
        )));
    }
    let proper = g.proper_colorings();
    let found = colorings_from_consistent_graphs(&spec).map_err(|e| Failure::Internal(e.into()))?;
    println!(
        "colorings: {} proper, {} from consistent graphs, {}",
        proper.len(),
        found.len(),
        if proper == found {
            "equal"
        } else {
            "DIFFERENT"
        }
    );
    let g = match g.coloring() {
        Some(_) => g,
        None => {
            let Some(first) = proper.iter().next() else {
                return Err(Failure::Mismatch(anyhow!(
                    "the graph has no proper 4-coloring"
                )));
            };
            g.with_coloring(first.clone()).map_err(usage)?
        }
    };
    let gi = build_gadget(&g).map_err(|e| Failure::Mismatch(e.into()))?;
    access("hidden (exact matrix ranks)");
    let reports = minrank::gadgets::verify_gadget(&gi).map_err(usage)?;
    let mut bad = report_all(&reports, true);
    if proper != found {
        bad += 1;
    }
    let text = InstanceFile::from_gadget(&gi).emit();
    match out {
        Some(p) => fs::write(p, text + "\n")
            .with_context(|| format!("writing {}", p.display()))
            .map_err(usage)?,
        None => println!("{text}"),
    }
    if bad > 0 {
        return Err(Failure::Mismatch(anyhow!("{bad} gadget checks failed")));
    }
    Ok(())
}

fn run_bench(sizes: &[usize], weighted_sizes: &[usize], instances: usize, seed: u64) -> Outcome {
    if let Some(&n) = sizes.iter().find(|&&n| n == 0 || n > 64) {
        return Err(usage(anyhow!("size {n} outside 1..=64")));
    }
    if let Some(&n) = weighted_sizes.iter().find(|&&n| n == 0 || n > 10) {
        return Err(usage(anyhow!("weighted size {n} outside 1..=10")));
    }
    access("solver-only (r_min queries)");
    let mut rows = bench::cardinality_rows(sizes, instances, seed)?;
    rows.extend(bench::weighted_rows(weighted_sizes, instances, seed)?);
    print!("{}", bench::format_table(&rows));
    let c = bench::fitted_constant(&rows, bench::Solver::Cardinality);
    if c > bench::CARDINALITY_CONSTANT {
        return Err(Failure::Mismatch(anyhow!(
            "cardinality constant {c:.4} exceeds {}",
            bench::CARDINALITY_CONSTANT
        )));
    }
    Ok(())
}
