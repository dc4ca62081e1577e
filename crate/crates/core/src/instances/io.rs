//! Line-based text formats. Every line, including the last, ends in `\n`;
//! fields are single-space separated decimal integers. Readers are strict:
//! blank lines, extra fields and trailing content are errors, and error
//! line numbers are 1-based.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{Graph, Point, PointInstance, VertexSet};

struct Lines<'a> {
    rest: std::str::Split<'a, char>,
    line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Result<Self> {
        if !text.ends_with('\n') {
            let line = text.split('\n').count();
            return Err(Error::parse(line, "missing final newline"));
        }
        Ok(Self {
            rest: text[..text.len() - 1].split('\n'),
            line: 0,
        })
    }

    /// Next line split into exactly `N` fields.
    fn fields<const N: usize>(&mut self, what: &str) -> Result<[&'a str; N]> {
        self.line += 1;
        let line = self.rest.next().ok_or_else(|| {
            Error::parse(
                self.line,
                format!("unexpected end of file, expected {what}"),
            )
        })?;
        let mut out = [""; N];
        let mut parts = line.split(' ');
        for slot in out.iter_mut() {
            *slot = parts.next().filter(|s| !s.is_empty()).ok_or_else(|| {
                Error::parse(self.line, format!("expected {what}, found `{line}`"))
            })?;
        }
        if parts.next().is_some() {
            return Err(Error::parse(
                self.line,
                format!("expected {what}, found `{line}`"),
            ));
        }
        Ok(out)
    }

    fn number<T: FromStr>(&self, field: &str) -> Result<T> {
        // reject the forms `str::parse` tolerates but the format does not
        if field.starts_with('+')
            || (field.len() > 1 && field.starts_with('0'))
            || field.starts_with("-0")
        {
            return Err(Error::parse(
                self.line,
                format!("non-canonical integer `{field}`"),
            ));
        }
        field
            .parse()
            .map_err(|_| Error::parse(self.line, format!("invalid integer `{field}`")))
    }

    fn header(&mut self, tag: &str) -> Result<[&'a str; 2]> {
        let [t, a, b] = self.fields::<3>(&format!("`{tag} <count> <count>`"))?;
        if t != tag {
            return Err(Error::parse(
                self.line,
                format!("expected header tag `{tag}`, found `{t}`"),
            ));
        }
        Ok([a, b])
    }

    fn finish(mut self) -> Result<()> {
        match self.rest.next() {
            None => Ok(()),
            Some(_) => Err(Error::parse(
                self.line + 1,
                "trailing content after the last record",
            )),
        }
    }
}

pub fn read_points(text: &str) -> Result<PointInstance> {
    let mut lines = Lines::new(text)?;
    let [n, threshold] = lines.header("udgp")?;
    let n: usize = lines.number(n)?;
    let threshold: i64 = lines.number(threshold)?;
    let header_line = lines.line;
    let mut points = Vec::with_capacity(n.min(1 << 20));
    for _ in 0..n {
        let [x, y] = lines.fields::<2>("`<x> <y>`")?;
        let p = Point::new(lines.number(x)?, lines.number(y)?);
        // range errors carry the offending line
        PointInstance::new(vec![p], 1).map_err(|e| Error::parse(lines.line, e.to_string()))?;
        points.push(p);
    }
    lines.finish()?;
    PointInstance::new(points, threshold).map_err(|e| Error::parse(header_line, e.to_string()))
}

pub fn write_points(out: &mut impl Write, inst: &PointInstance) -> Result<()> {
    writeln!(out, "udgp {} {}", inst.len(), inst.threshold())?;
    for p in inst.points() {
        writeln!(out, "{} {}", p.x, p.y)?;
    }
    Ok(())
}

/// Edges must satisfy `u < v`; duplicates are rejected.
pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text)?;
    let [n, m] = lines.header("udgg")?;
    let n: usize = lines.number(n)?;
    let m: usize = lines.number(m)?;
    let mut lists: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::with_capacity(m.min(1 << 20));
    for _ in 0..m {
        let [u, v] = lines.fields::<2>("`<u> <v>`")?;
        let u: usize = lines.number(u)?;
        let v: usize = lines.number(v)?;
        if u >= v {
            return Err(Error::parse(
                lines.line,
                format!("edge {u} {v} must list the smaller endpoint first"),
            ));
        }
        if v >= n {
            return Err(Error::parse(
                lines.line,
                format!("vertex {v} out of range for {n} vertices"),
            ));
        }
        edges.push((u, v, lines.line));
    }
    lines.finish()?;
    edges.sort_unstable();
    for w in edges.windows(2) {
        if (w[0].0, w[0].1) == (w[1].0, w[1].1) {
            return Err(Error::parse(
                w[0].2.max(w[1].2),
                format!("duplicate edge {} {}", w[1].0, w[1].1),
            ));
        }
    }
    for (u, v, _) in edges {
        lists[u].push(v);
        lists[v].push(u);
    }
    Graph::from_adjacency(lists)
}

pub fn write_graph(out: &mut impl Write, g: &Graph) -> Result<()> {
    writeln!(out, "udgg {} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

/// Reads a solution over `universe` vertices. Ids must be strictly
/// ascending.
pub fn read_solution(text: &str, universe: usize) -> Result<VertexSet> {
    let mut lines = Lines::new(text)?;
    let [tag, k] = lines.fields::<2>("`sol <k>`")?;
    if tag != "sol" {
        return Err(Error::parse(
            1,
            format!("expected header tag `sol`, found `{tag}`"),
        ));
    }
    let k: usize = lines.number(k)?;
    let mut ids = Vec::with_capacity(k.min(1 << 20));
    for _ in 0..k {
        let [id] = lines.fields::<1>("a vertex id")?;
        let id: usize = lines.number(id)?;
        if ids.last().is_some_and(|&last| last >= id) {
            return Err(Error::parse(
                lines.line,
                "vertex ids must be strictly ascending",
            ));
        }
        if id >= universe {
            return Err(Error::parse(
                lines.line,
                format!("vertex {id} out of range for {universe} vertices"),
            ));
        }
        ids.push(id);
    }
    lines.finish()?;
    VertexSet::new(universe, ids)
}

pub fn write_solution(out: &mut impl Write, set: &VertexSet) -> Result<()> {
    writeln!(out, "sol {}", set.len())?;
    for v in set.iter() {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

fn read_file(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn write_file(path: &Path, write: impl FnOnce(&mut Vec<u8>) -> Result<()>) -> Result<()> {
    let mut buf = Vec::new();
    write(&mut buf)?;
    fs::write(path, buf)?;
    Ok(())
}

pub fn read_points_file(path: impl AsRef<Path>) -> Result<PointInstance> {
    read_points(&read_file(path.as_ref())?)
}

pub fn write_points_file(path: impl AsRef<Path>, inst: &PointInstance) -> Result<()> {
    write_file(path.as_ref(), |b| write_points(b, inst))
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph> {
    read_graph(&read_file(path.as_ref())?)
}

pub fn write_graph_file(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    write_file(path.as_ref(), |b| write_graph(b, g))
}

pub fn read_solution_file(path: impl AsRef<Path>, universe: usize) -> Result<VertexSet> {
    read_solution(&read_file(path.as_ref())?, universe)
}

pub fn write_solution_file(path: impl AsRef<Path>, set: &VertexSet) -> Result<()> {
    write_file(path.as_ref(), |b| write_solution(b, set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{paper_instance, PaperInstance};
    use crate::spatial::build_adjacency;

    fn to_string(write: impl FnOnce(&mut Vec<u8>) -> Result<()>) -> String {
        let mut buf = Vec::new();
        write(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    fn parse_line(err: Error) -> usize {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn points_round_trip() {
        let inst = paper_instance(PaperInstance::Fig4);
        let text = to_string(|b| write_points(b, &inst));
        assert!(text.starts_with("udgp 33 1000001\n0 0\n-2492384 879081\n"));
        assert_eq!(read_points(&text).unwrap(), inst);
    }

    #[test]
    fn graph_round_trip() {
        let g = build_adjacency(&paper_instance(PaperInstance::Fig6));
        let text = to_string(|b| write_graph(b, &g));
        assert_eq!(read_graph(&text).unwrap(), g);
    }

    #[test]
    fn solution_round_trip() {
        let s = VertexSet::new(10, [7, 2, 4]).unwrap();
        let text = to_string(|b| write_solution(b, &s));
        assert_eq!(text, "sol 3\n2\n4\n7\n");
        assert_eq!(read_solution(&text, 10).unwrap(), s);
        assert_eq!(parse_line(read_solution(&text, 7).unwrap_err()), 4);
    }

    #[test]
    fn rejects_malformed_points() {
        for (text, line) in [
            ("udgp 1 5\n0 0", 2),
            ("udgp 1 5\n0 0\n\n", 3),
            ("udgp 1 5\n0 0\n1 1\n", 3),
            ("udgp 2 5\n0 0\n", 3),
            ("udgp 1 5\n0 x\n", 2),
            ("udgp 1 5\n0  0\n", 2),
            ("udgp 1 5\n0 0 0\n", 2),
            ("udgg 1 5\n0 0\n", 1),
            ("udgp 1 5\n+1 0\n", 2),
            ("udgp 1 0\n0 0\n", 1),
            ("udgp 1 5\n9223372036854775807 0\n", 2),
            ("udgp 1 5\n99999999999999999999 0\n", 2),
        ] {
            assert_eq!(parse_line(read_points(text).unwrap_err()), line, "{text:?}");
        }
    }

    #[test]
    fn rejects_malformed_graphs() {
        for (text, line) in [
            ("udgg 3 1\n1 0\n", 2),
            ("udgg 3 1\n1 1\n", 2),
            ("udgg 3 1\n0 3\n", 2),
            ("udgg 3 2\n0 1\n0 1\n", 3),
            ("udgg 3 2\n0 1\n", 3),
            ("udgg 3 1\n0 1\n1 2\n", 3),
        ] {
            assert_eq!(parse_line(read_graph(text).unwrap_err()), line, "{text:?}");
        }
    }

    #[test]
    fn rejects_malformed_solutions() {
        for (text, line) in [
            ("sol 2\n3\n1\n", 3),
            ("sol 2\n1\n1\n", 3),
            ("sol 1\n1\n2\n", 3),
            ("sol 2\n1\n", 3),
            ("solution 1\n1\n", 1),
        ] {
            assert_eq!(
                parse_line(read_solution(text, 5).unwrap_err()),
                line,
                "{text:?}"
            );
        }
    }
}
