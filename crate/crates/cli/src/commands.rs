use std::collections::BTreeSet;
use std::io::{self, Write};
use std::time::Instant;

use anyhow::{Context, Result};
use udgds_core::algorithms::{
    adversarial_search, enumerate_coronas, find_reduction_core, find_weak_reduction, mis5,
    reduce44_geometric, reduce44_graph, weak43,
};
use udgds_core::instances::{
    generate, paper_instance, read_solution_file, write_graph_file, write_points,
    write_points_file, write_solution, write_solution_file, Distribution, GeneratorConfig,
};
use udgds_core::oracle::exact_min_dominating_set;
use udgds_core::spatial::build_adjacency;
use udgds_core::{
    is_dominating, is_independent, Algorithm, Error, Graph, OrderPolicy, Solution, SolveOptions,
    VertexSet,
};

use crate::input::{load, oracle_budget, Instance, Source, RANDOM_THRESHOLD};
use crate::report::{CapExceeded, Record, RunReport, Usage, EXIT_BUDGET, EXIT_VERIFY};
use crate::{BenchArgs, Check, ExportArgs, Format, GenArgs, RatioArgs, SolveArgs, VerifyArgs};

/// Limits for the exact solver.
#[derive(Debug, Clone, Copy)]
struct Exact {
    cap: Option<usize>,
    budget: u64,
}

fn run(algo: Algorithm, inst: &Instance, order: &OrderPolicy, exact: Exact) -> Result<Solution> {
    let opts = SolveOptions::with_order(order.clone());
    let g = &inst.graph;
    Ok(match algo {
        Algorithm::Mis5 => mis5(g, &opts)?,
        Algorithm::Reduce44 => reduce44_graph(g, &opts)?,
        Algorithm::Weak43 => weak43(g, &opts)?,
        Algorithm::Geo44 => match &inst.points {
            Some(points) => reduce44_geometric(points, &opts)?,
            None => {
                return Err(Usage(format!(
                    "geo44 needs point coordinates, but {} is a graph",
                    inst.name
                ))
                .into())
            }
        },
        Algorithm::Exact => {
            let cap = exact.cap.unwrap_or(g.n());
            let set = exact_min_dominating_set(g, cap, exact.budget)?.ok_or_else(|| {
                CapExceeded(format!("no dominating set of size at most {cap} exists"))
            })?;
            Solution {
                history: vec![set.len()],
                set,
                algorithm: Algorithm::Exact,
                iterations: 0,
                order: order.clone(),
            }
        }
    })
}

/// Re-checks a solver output: dominating, and independent unless exact.
fn verify_output(g: &Graph, sol: &Solution) -> Result<()> {
    anyhow::ensure!(
        is_dominating(g, &sol.set)?,
        "{} produced a set that does not dominate",
        sol.algorithm
    );
    anyhow::ensure!(
        sol.algorithm == Algorithm::Exact || is_independent(g, &sol.set)?,
        "{} produced a set that is not independent",
        sol.algorithm
    );
    Ok(())
}

fn emit(record: &Record, to_stderr: bool) {
    if to_stderr {
        eprintln!("{record}");
    } else {
        println!("{record}");
    }
}

pub fn gen(args: GenArgs) -> Result<u8> {
    let distribution = match (args.clusters, args.flowers) {
        (Some(clusters), _) => Distribution::Clustered {
            clusters: clusters as usize,
            spread: args.spread.unwrap_or(args.threshold),
        },
        (None, Some(flowers)) => Distribution::Flowers {
            flowers: flowers as usize,
        },
        (None, None) => Distribution::Uniform,
    };
    let cfg = GeneratorConfig {
        n: args.n as usize,
        box_side: args.box_side,
        threshold: args.threshold,
        seed: args.seed,
        distribution,
    };
    let inst = generate(&cfg)?;
    match &args.output {
        Some(path) => write_points_file(path, &inst)?,
        None => {
            let mut out = io::stdout().lock();
            write_points(&mut out, &inst)?;
            out.flush()?;
        }
    }
    let mut record = Record::new("gen")
        .with("n", inst.len())
        .with("box", args.box_side)
        .with("threshold", args.threshold)
        .with("seed", args.seed)
        .with(
            "distribution",
            match distribution {
                Distribution::Uniform => "uniform".to_string(),
                Distribution::Clustered { clusters, spread } => {
                    format!("clustered:{clusters}:{spread}")
                }
                Distribution::Flowers { flowers } => format!("flowers:{flowers}"),
            },
        );
    if let Some(path) = &args.graph_output {
        let g = build_adjacency(&inst);
        write_graph_file(path, &g)?;
        record = record.with("edges", g.m());
    }
    emit(&record, args.output.is_none());
    Ok(0)
}

pub fn solve(args: SolveArgs) -> Result<u8> {
    if args.algo != Algorithm::Exact && (args.cap.is_some() || args.budget.is_some()) {
        return Err(Usage("--cap and --budget only apply to --algo exact".into()).into());
    }
    let inst = load(&args.input.input, args.input.format)?;
    if args.algo == Algorithm::Geo44 && inst.points.is_none() {
        return Err(Usage("geo44 needs point coordinates; pass a points file".into()).into());
    }
    let exact = Exact {
        cap: args.cap,
        budget: oracle_budget(args.budget)?,
    };
    let start = Instant::now();
    let sol = run(args.algo, &inst, &args.order, exact)?;
    let elapsed = start.elapsed();
    verify_output(&inst.graph, &sol)?;

    match &args.output {
        Some(path) => write_solution_file(path, &sol.set)?,
        None => {
            let mut out = io::stdout().lock();
            write_solution(&mut out, &sol.set)?;
            out.flush()?;
        }
    }
    let report = RunReport {
        algorithm: sol.algorithm,
        instance: inst.name.clone(),
        n: inst.n(),
        size: sol.len(),
        optimum: (sol.algorithm == Algorithm::Exact).then_some(sol.len()),
        iterations: sol.iterations,
        elapsed,
        order: args.order.to_string(),
    };
    emit(
        &report.record("solve").with("m", inst.graph.m()),
        args.output.is_none(),
    );
    Ok(0)
}

/// First vertex neither in `d` nor adjacent to it.
fn undominated(g: &Graph, d: &VertexSet) -> Option<usize> {
    (0..g.n()).find(|&v| !d.contains(v) && g.neighbors(v).iter().all(|&w| !d.contains(w)))
}

fn adjacent_pair(g: &Graph, d: &VertexSet) -> Option<(usize, usize)> {
    d.iter().find_map(|u| {
        g.neighbors(u)
            .iter()
            .find(|&&v| v > u && d.contains(v))
            .map(|&v| (u, v))
    })
}

fn join(ids: &[usize]) -> String {
    ids.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Runs one check; on failure returns `(detail token, message)`.
fn check(
    which: Check,
    g: &Graph,
    d: &VertexSet,
    order: &OrderPolicy,
) -> Result<Option<(String, String)>> {
    Ok(match which {
        Check::Dominating => undominated(g, d)
            .map(|v| (format!("vertex:{v}"), format!("vertex {v} is not dominated"))),
        Check::Independent => adjacent_pair(g, d).map(|(u, v)| {
            (
                format!("edge:{u}-{v}"),
                format!("solution vertices {u} and {v} are adjacent"),
            )
        }),
        Check::Irreducible => enumerate_coronas(g, d)?.into_iter().find_map(|c| {
            find_reduction_core(g, d, &c).map(|core| {
                (
                    format!("petals:{};core:{core}", join(&c.petals)),
                    format!(
                        "corona with petals {:?} is reducible: core {core} dominates everything they do",
                        c.petals
                    ),
                )
            })
        }),
        Check::Overwhelmed => {
            let ranking = order.ranking(g.n())?;
            enumerate_coronas(g, d)?.into_iter().find_map(|c| {
                find_weak_reduction(g, d, &c, &ranking).map(|plan| {
                    (
                        format!(
                            "petals:{};core:{};witnesses:{}",
                            join(&c.petals),
                            plan.core,
                            join(&plan.witnesses)
                        ),
                        format!(
                            "corona with petals {:?} is not overwhelmed: core {} has witnesses {:?}",
                            c.petals, plan.core, plan.witnesses
                        ),
                    )
                })
            })
        }
    })
}

pub fn verify(args: VerifyArgs) -> Result<u8> {
    let inst = load(&args.input.input, args.input.format)?;
    let d = read_solution_file(&args.solution, inst.n())
        .with_context(|| format!("reading {}", args.solution.display()))?;
    let checks: BTreeSet<Check> = args.check.iter().copied().collect();
    let mut failed = 0;
    for &which in &checks {
        let name = format!("{which:?}").to_lowercase();
        let record = Record::new("check").with("check", &name);
        match check(which, &inst.graph, &d, &args.order)? {
            None => println!("{}", record.with("result", "pass")),
            Some((detail, message)) => {
                failed += 1;
                println!("{}", record.with("result", "fail").with("detail", detail));
                eprintln!("udgds: {name} check failed: {message}");
            }
        }
    }
    println!(
        "{}",
        Record::new("verify")
            .with("instance", &inst.name)
            .with("solution", args.solution.display())
            .with("size", d.len())
            .with("checks", checks.len())
            .with("failed", failed)
    );
    Ok(if failed == 0 { 0 } else { EXIT_VERIFY })
}

pub fn ratio(args: RatioArgs) -> Result<u8> {
    let source = Source::parse(&args.instances)?;
    let budget = oracle_budget(args.budget)?;
    let instances = source.load()?;
    let exact = Exact { cap: None, budget };
    let (mut ratios, mut skipped, mut violations) = (Vec::new(), 0, 0);
    for inst in &instances {
        let n = inst.n();
        let cap = args.oracle_cap.unwrap_or(n);
        let optimum = match exact_min_dominating_set(&inst.graph, cap, budget) {
            Ok(Some(s)) => Ok(s.len()),
            Ok(None) => Err("cap"),
            Err(Error::Budget { .. }) => Err("budget"),
            Err(e) => return Err(e.into()),
        };
        let start = Instant::now();
        let (sol, order) = match args.search_adversarial {
            Some(evals) => {
                // stop early once the proven bound is reached
                let target = optimum.ok().map(|opt| {
                    let (num, den) = args.algo.ratio_bound();
                    (num as usize * opt) / den as usize
                });
                let out = adversarial_search(n, evals, args.seed, target, |order| {
                    run(args.algo, inst, order, exact).map_err(|e| match e.downcast::<Error>() {
                        Ok(core) => core,
                        Err(other) => Error::InvalidInput(format!("{other:#}")),
                    })
                })?;
                let order = format!("adversarial:seed{}:evals{}", args.seed, out.evaluations);
                (out.worst, order)
            }
            None => (
                run(args.algo, inst, &args.order, exact)?,
                args.order.to_string(),
            ),
        };
        let elapsed = start.elapsed();
        verify_output(&inst.graph, &sol)?;
        let report = RunReport {
            algorithm: args.algo,
            instance: inst.name.clone(),
            n,
            size: sol.len(),
            optimum: optimum.ok(),
            iterations: sol.iterations,
            elapsed,
            order,
        };
        let status = match optimum {
            Err(reason) => {
                skipped += 1;
                reason
            }
            Ok(_) if report.within_bound() == Some(false) => {
                violations += 1;
                "violation"
            }
            Ok(_) => "ok",
        };
        ratios.extend(report.ratio());
        println!("{}", report.record("ratio").with("status", status));
    }
    let max = ratios
        .iter()
        .copied()
        .fold(None, |m: Option<f64>, r| Some(m.map_or(r, |m| m.max(r))));
    let mean = (!ratios.is_empty()).then(|| ratios.iter().sum::<f64>() / ratios.len() as f64);
    println!(
        "{}",
        Record::new("ratio-summary")
            .with("algo", args.algo)
            .with("instances", instances.len())
            .with("with_optimum", ratios.len())
            .with("skipped", skipped)
            .with("violations", violations)
            .with_opt("max_ratio", max.map(|r| format!("{r:.4}")))
            .with_opt("mean_ratio", mean.map(|r| format!("{r:.4}")))
    );
    Ok(if violations > 0 {
        EXIT_VERIFY
    } else if ratios.is_empty() && skipped > 0 {
        EXIT_BUDGET
    } else {
        0
    })
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    }
}

pub fn bench(args: BenchArgs) -> Result<u8> {
    if !(args.density.is_finite() && args.density > 0.0) {
        return Err(Usage("--density must be positive".into()).into());
    }
    if args.sizes.contains(&0) {
        return Err(Usage("--sizes must be positive".into()).into());
    }
    let exact = Exact {
        cap: None,
        budget: oracle_budget(None)?,
    };
    let mut previous: Option<(usize, f64)> = None;
    let mut worst_doubling: Option<f64> = None;
    for &n in &args.sizes {
        let mut times = Vec::with_capacity(args.seeds as usize);
        let mut sizes = Vec::with_capacity(args.seeds as usize);
        for seed in 0..args.seeds {
            let cfg = GeneratorConfig::with_density(n, RANDOM_THRESHOLD, args.density, seed);
            let points = generate(&cfg)?;
            // graph algorithms get a prebuilt graph; geo44 starts from the points
            let inst = Instance::from_points(format!("random:n{n}:seed{seed}"), points);
            let mut best = f64::INFINITY;
            for _ in 0..args.rounds {
                let start = Instant::now();
                let sol = run(args.algo, &inst, &OrderPolicy::Id, exact)?;
                best = best.min(start.elapsed().as_secs_f64() * 1e3);
                sizes.push(sol.len());
            }
            times.push(best);
        }
        let med = median(&mut times);
        // time ratio normalised to an exact doubling of n
        let doubling = previous.map(|(pn, pt)| {
            let steps = (n as f64 / pn as f64).log2();
            if steps > 0.0 {
                (med / pt).powf(1.0 / steps)
            } else {
                f64::NAN
            }
        });
        if let Some(d) = doubling.filter(|d| d.is_finite()) {
            worst_doubling = Some(worst_doubling.map_or(d, |w: f64| w.max(d)));
        }
        println!(
            "{}",
            Record::new("bench")
                .with("algo", args.algo)
                .with("n", n)
                .with("seeds", args.seeds)
                .with("rounds", args.rounds)
                .with("density", args.density)
                .with("median_ms", format!("{med:.3}"))
                .with(
                    "mean_size",
                    format!(
                        "{:.1}",
                        sizes.iter().sum::<usize>() as f64 / sizes.len() as f64
                    )
                )
                .with_opt("doubling", doubling.map(|d| format!("{d:.3}")))
        );
        previous = Some((n, med));
    }
    println!(
        "{}",
        Record::new("bench-summary")
            .with("algo", args.algo)
            .with("sizes", args.sizes.len())
            .with_opt("max_doubling", worst_doubling.map(|d| format!("{d:.3}")))
    );
    Ok(0)
}

pub fn export(args: ExportArgs) -> Result<u8> {
    let inst = paper_instance(args.instance);
    let record = Record::new("export").with("instance", args.instance);
    let record = match args.format {
        Format::Points => {
            write_points_file(&args.output, &inst)?;
            record
                .with("n", inst.len())
                .with("threshold", inst.threshold())
        }
        Format::Graph => {
            let g = build_adjacency(&inst);
            write_graph_file(&args.output, &g)?;
            record.with("n", g.n()).with("m", g.m())
        }
    };
    println!("{}", record.with("output", args.output.display()));
    Ok(0)
}
