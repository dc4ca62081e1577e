use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use udgds_core::instances::{
    generate, paper_instance, read_graph, read_points, GeneratorConfig, PaperInstance,
};
use udgds_core::oracle::DEFAULT_BUDGET;
use udgds_core::spatial::build_adjacency;
use udgds_core::{Graph, PointInstance};

use crate::report::Usage;
use crate::Format;

pub const BUDGET_VAR: &str = "UDGDS_ORACLE_BUDGET";

/// A loaded instance: always a graph, plus coordinates when they are known.
pub struct Instance {
    pub name: String,
    pub points: Option<PointInstance>,
    pub graph: Graph,
}

impl Instance {
    pub fn from_points(name: String, points: PointInstance) -> Self {
        let graph = build_adjacency(&points);
        Self {
            name,
            points: Some(points),
            graph,
        }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

fn detect(text: &str) -> Option<Format> {
    match text.split([' ', '\n']).next()? {
        "udgp" => Some(Format::Points),
        "udgg" => Some(Format::Graph),
        _ => None,
    }
}

pub fn load(path: &Path, format: Option<Format>) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let name = path.display().to_string();
    let format = match format.or_else(|| detect(&text)) {
        Some(f) => f,
        None => {
            return Err(Usage(format!(
                "{}: unknown format (expected a `udgp` or `udgg` header)",
                path.display()
            ))
            .into())
        }
    };
    Ok(match format {
        Format::Points => {
            let points =
                read_points(&text).with_context(|| format!("parsing {}", path.display()))?;
            Instance::from_points(name, points)
        }
        Format::Graph => Instance {
            name,
            points: None,
            graph: read_graph(&text).with_context(|| format!("parsing {}", path.display()))?,
        },
    })
}

/// Oracle node budget: the flag if given, else the environment, else the
/// library default.
pub fn oracle_budget(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Usage(format!("{BUDGET_VAR}=`{v}` is not a node count")).into()),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_BUDGET),
        Err(e) => Err(Usage(format!("{BUDGET_VAR}: {e}")).into()),
    }
}

/// Where `ratio` takes its instances from.
#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Builtin(Vec<PaperInstance>),
    Dir(PathBuf),
    Random {
        n: usize,
        count: usize,
        density: f64,
        seed: u64,
    },
}

/// Threshold used for `random:` instances.
pub const RANDOM_THRESHOLD: i64 = 1_000_000;

impl Source {
    pub fn parse(source: &str) -> Result<Self> {
        if source == "builtin" {
            return Ok(Source::Builtin(PaperInstance::ALL.to_vec()));
        }
        if let Some(name) = source.strip_prefix("builtin:") {
            let which = name
                .parse()
                .map_err(|_| Usage(format!("unknown built-in instance `{name}`")))?;
            return Ok(Source::Builtin(vec![which]));
        }
        if let Some(rest) = source.strip_prefix("random:") {
            return parse_random(rest);
        }
        let dir = PathBuf::from(source);
        if !dir.is_dir() {
            return Err(Usage(format!(
                "`{source}` is not a directory or a known instance source"
            ))
            .into());
        }
        Ok(Source::Dir(dir))
    }

    /// Materialises every instance, in a deterministic order.
    pub fn load(&self) -> Result<Vec<Instance>> {
        match self {
            Source::Builtin(list) => Ok(list
                .iter()
                .map(|&p| Instance::from_points(format!("builtin:{p}"), paper_instance(p)))
                .collect()),
            Source::Dir(dir) => {
                let mut paths = Vec::new();
                for entry in
                    fs::read_dir(dir).with_context(|| format!("listing {}", dir.display()))?
                {
                    let path = entry?.path();
                    if path.is_file() {
                        paths.push(path);
                    }
                }
                paths.sort();
                paths.iter().map(|p| load(p, None)).collect()
            }
            &Source::Random {
                n,
                count,
                density,
                seed,
            } => (0..count as u64)
                .map(|i| {
                    let cfg = GeneratorConfig::with_density(n, RANDOM_THRESHOLD, density, seed + i);
                    let points = generate(&cfg)?;
                    Ok(Instance::from_points(
                        format!("random:n{n}:seed{}", seed + i),
                        points,
                    ))
                })
                .collect(),
        }
    }
}

fn parse_random(rest: &str) -> Result<Source> {
    let bad = || {
        Usage(format!(
            "malformed `random:{rest}`, expected `random:n<N>:count<C>[:density<D>][:seed<S>]`"
        ))
    };
    let (mut n, mut count, mut density, mut seed) = (None, None, 1.0, 0);
    for part in rest.split(':') {
        if let Some(v) = part.strip_prefix("n") {
            n = Some(v.parse::<usize>().map_err(|_| bad())?);
        } else if let Some(v) = part.strip_prefix("count") {
            count = Some(v.parse::<usize>().map_err(|_| bad())?);
        } else if let Some(v) = part.strip_prefix("density") {
            density = v.parse::<f64>().map_err(|_| bad())?;
        } else if let Some(v) = part.strip_prefix("seed") {
            seed = v.parse::<u64>().map_err(|_| bad())?;
        } else {
            return Err(bad().into());
        }
    }
    let (Some(n), Some(count)) = (n, count) else {
        return Err(bad().into());
    };
    if n == 0 || !(density.is_finite() && density > 0.0) {
        return Err(bad().into());
    }
    Ok(Source::Random {
        n,
        count,
        density,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sources() {
        assert_eq!(
            Source::parse("builtin:fig6").unwrap(),
            Source::Builtin(vec![PaperInstance::Fig6])
        );
        assert_eq!(
            Source::parse("random:n40:count200").unwrap(),
            Source::Random {
                n: 40,
                count: 200,
                density: 1.0,
                seed: 0
            }
        );
        assert_eq!(
            Source::parse("random:n10:count2:density0.5:seed9").unwrap(),
            Source::Random {
                n: 10,
                count: 2,
                density: 0.5,
                seed: 9
            }
        );
        for bad in [
            "builtin:fig5",
            "random:n40",
            "random:n0:count1",
            "random:n4:count1:x",
            "/no/such/dir",
        ] {
            assert!(Source::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn detects_headers() {
        assert_eq!(detect("udgp 1 5\n0 0\n"), Some(Format::Points));
        assert_eq!(detect("udgg 2 1\n0 1\n"), Some(Format::Graph));
        assert_eq!(detect("sol 0\n"), None);
    }
}
