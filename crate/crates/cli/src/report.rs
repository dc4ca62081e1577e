use std::fmt;
use std::time::Duration;

use udgds_core::{Algorithm, Error};

pub const SCHEMA: &str = "udgds-report v1";

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

/// Marks an error as a usage problem (exit code 2).
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// The exact solver's size cap was too small (exit code 3).
#[derive(Debug)]
pub struct CapExceeded(pub String);

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CapExceeded {}

/// Exit status for an error that aborted a command. Malformed or unreadable
/// inputs count as usage errors; exhausted search budgets have their own code; anything else
/// (broken invariants, graphs that cannot be unit disk graphs) is a
/// verification failure.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<Usage>() || cause.is::<std::io::Error>() {
            return EXIT_USAGE;
        }
        if cause.is::<CapExceeded>() {
            return EXIT_BUDGET;
        }
        if let Some(e) = cause.downcast_ref::<Error>() {
            return match e {
                Error::Budget { .. } => EXIT_BUDGET,
                Error::InvalidInput(_)
                | Error::Parse { .. }
                | Error::Io(_)
                | Error::Overflow(_)
                | Error::VertexOutOfRange { .. } => EXIT_USAGE,
                Error::NotUnitDisk { .. } | Error::IterationCap { .. } | Error::Invariant(_) => {
                    EXIT_VERIFY
                }
            };
        }
    }
    EXIT_VERIFY
}

/// One `key=value` record on a single line, prefixed with the schema tag.
/// Values never contain spaces: whitespace and `%` are percent-encoded.
#[derive(Debug, Clone)]
pub struct Record {
    fields: Vec<(&'static str, String)>,
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Self {
            fields: vec![("kind", kind.to_string())],
        }
    }

    pub fn with(mut self, key: &'static str, value: impl fmt::Display) -> Self {
        self.fields.push((key, value.to_string()));
        self
    }

    pub fn with_opt(self, key: &'static str, value: Option<impl fmt::Display>) -> Self {
        match value {
            Some(v) => self.with(key, v),
            None => self.with(key, "na"),
        }
    }
}

fn encode(value: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for c in value.chars() {
        if c == '%' || c.is_whitespace() {
            let mut buf = [0; 4];
            for b in c.encode_utf8(&mut buf).bytes() {
                write!(f, "%{b:02X}")?;
            }
        } else {
            write!(f, "{c}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(SCHEMA)?;
        for (key, value) in &self.fields {
            write!(f, " {key}=")?;
            encode(value, f)?;
        }
        Ok(())
    }
}

/// Outcome of one solver run, optionally against the exact optimum.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub algorithm: Algorithm,
    pub instance: String,
    pub n: usize,
    pub size: usize,
    pub optimum: Option<usize>,
    pub iterations: usize,
    pub elapsed: Duration,
    pub order: String,
}

impl RunReport {
    pub fn ratio(&self) -> Option<f64> {
        self.optimum
            .filter(|&opt| opt > 0)
            .map(|opt| self.size as f64 / opt as f64)
    }

    pub fn within_bound(&self) -> Option<bool> {
        self.optimum
            .map(|opt| self.algorithm.respects_bound(self.size, opt))
    }

    pub fn record(&self, kind: &str) -> Record {
        Record::new(kind)
            .with("algo", self.algorithm)
            .with("instance", &self.instance)
            .with("n", self.n)
            .with("size", self.size)
            .with_opt("optimum", self.optimum)
            .with_opt("ratio", self.ratio().map(|r| format!("{r:.4}")))
            .with_opt("within_bound", self.within_bound())
            .with("iterations", self.iterations)
            .with(
                "time_ms",
                format!("{:.3}", self.elapsed.as_secs_f64() * 1e3),
            )
            .with("order", &self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_is_one_line_of_pairs() {
        let r = Record::new("solve")
            .with("instance", "my dir/a%b.udgp")
            .with_opt("optimum", None::<usize>);
        assert_eq!(
            r.to_string(),
            "udgds-report v1 kind=solve instance=my%20dir/a%25b.udgp optimum=na"
        );
    }

    #[test]
    fn ratio_only_with_optimum() {
        let mut r = RunReport {
            algorithm: Algorithm::Reduce44,
            instance: "x".into(),
            n: 33,
            size: 24,
            optimum: None,
            iterations: 1,
            elapsed: Duration::ZERO,
            order: "id".into(),
        };
        assert!(r.ratio().is_none());
        r.optimum = Some(5);
        assert_eq!(r.ratio(), Some(4.8));
        assert_eq!(r.within_bound(), Some(true));
        r.size = 25;
        assert_eq!(r.within_bound(), Some(false));
    }

    #[test]
    fn budget_maps_to_its_own_code() {
        let err = anyhow::Error::new(Error::Budget { limit: 5 }).context("oracle");
        assert_eq!(exit_code(&err), EXIT_BUDGET);
        assert_eq!(
            exit_code(&anyhow::Error::new(Usage("x".into()))),
            EXIT_USAGE
        );
        assert_eq!(exit_code(&anyhow::anyhow!("other")), EXIT_VERIFY);
    }
}
