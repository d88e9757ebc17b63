//! Text formats: graph files, tree decompositions and Hitting Set JSON.
//!
//! Graph files are line based and 0-indexed:
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v> [w]
//! c <v> <decimal cost>   # optional label
//! s <v1> <v2> ...
//! ```
//!
//! Vertices without a `c` line cost 1. At most one `s` line is allowed and
//! lists sites in priority order. Tree decompositions use the PACE `.td`
//! layout, which is 1-indexed for both bags and vertices.

use std::fmt::Write as _;
use std::str::FromStr;

use bvx_core::hardness::{Element, HSInstance};
use bvx_core::treewidth::TreeDecomposition;
use bvx_core::{Cost, Vertex};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Contents of a graph file before validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex, Option<u64>)>,
    pub costs: Vec<Option<Cost>>,
    pub sites: Option<Vec<Vertex>>,
    pub labels: Vec<Option<String>>,
}

struct Lines<'a> {
    name: &'a str,
    line: usize,
}

impl Lines<'_> {
    fn err(&self, message: impl Into<String>) -> CliError {
        CliError::Parse {
            path: self.name.to_string(),
            line: self.line,
            message: message.into(),
        }
    }

    fn num<T: FromStr>(&self, tok: Option<&str>, what: &str) -> CliResult<T> {
        let tok = tok.ok_or_else(|| self.err(format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| self.err(format!("invalid {what} {tok:?}")))
    }

    fn vertex(&self, tok: Option<&str>, n: usize) -> CliResult<Vertex> {
        let v: Vertex = self.num(tok, "vertex")?;
        if v >= n {
            return Err(self.err(format!("vertex {v} out of range 0..{n}")));
        }
        Ok(v)
    }
}

fn split_comment(raw: &str) -> (&str, Option<&str>) {
    match raw.split_once('#') {
        Some((body, comment)) => (body.trim(), Some(comment.trim())),
        None => (raw.trim(), None),
    }
}

/// Parses a graph file. `name` is used in error messages.
pub fn parse_graph(text: &str, name: &str) -> CliResult<GraphFile> {
    let mut at = Lines { name, line: 0 };
    let mut file: Option<GraphFile> = None;
    let mut declared_m = 0;
    let mut header_line = 0;
    let mut sites_line = 0;
    for (i, raw) in text.lines().enumerate() {
        at.line = i + 1;
        let (body, comment) = split_comment(raw);
        if body.is_empty() {
            continue;
        }
        let mut toks = body.split_whitespace();
        let kind = toks.next().unwrap();
        if kind == "p" {
            if file.is_some() {
                return Err(at.err("second p line"));
            }
            let n: usize = at.num(toks.next(), "vertex count")?;
            declared_m = at.num(toks.next(), "edge count")?;
            file = Some(GraphFile {
                n,
                costs: vec![None; n],
                labels: vec![None; n],
                ..GraphFile::default()
            });
            header_line = at.line;
        } else {
            let f = file
                .as_mut()
                .ok_or_else(|| at.err(format!("{kind:?} line before the p line")))?;
            match kind {
                "e" => {
                    let u = at.vertex(toks.next(), f.n)?;
                    let v = at.vertex(toks.next(), f.n)?;
                    let w = match toks.next() {
                        Some(t) => {
                            let w: u64 = at.num(Some(t), "edge weight")?;
                            if w == 0 {
                                return Err(at.err("edge weight must be positive"));
                            }
                            Some(w)
                        }
                        None => None,
                    };
                    f.edges.push((u, v, w));
                }
                "c" => {
                    let v = at.vertex(toks.next(), f.n)?;
                    let tok = toks.next().ok_or_else(|| at.err("missing cost"))?;
                    let c = Cost::from_str(tok).map_err(|e| at.err(e.to_string()))?;
                    if f.costs[v].replace(c).is_some() {
                        return Err(at.err(format!("second cost for vertex {v}")));
                    }
                    if let Some(label) = comment.filter(|l| !l.is_empty()) {
                        f.labels[v] = Some(label.to_string());
                    }
                }
                "s" => {
                    if f.sites.is_some() {
                        return Err(at.err(format!("second s line (first on line {sites_line})")));
                    }
                    let mut sites = Vec::new();
                    let mut seen = vec![false; f.n];
                    for t in toks.by_ref() {
                        let v = at.vertex(Some(t), f.n)?;
                        if std::mem::replace(&mut seen[v], true) {
                            return Err(at.err(format!(
                                "site {v} listed twice; sites must be pairwise different vertices"
                            )));
                        }
                        sites.push(v);
                    }
                    f.sites = Some(sites);
                    sites_line = at.line;
                }
                other => return Err(at.err(format!("unknown line type {other:?}"))),
            }
            if kind != "s" && toks.next().is_some() {
                return Err(at.err("trailing tokens"));
            }
            continue;
        }
        if toks.next().is_some() {
            return Err(at.err("trailing tokens"));
        }
    }
    at.line = header_line;
    let f = file.ok_or_else(|| at.err("no p line"))?;
    if f.edges.len() != declared_m {
        return Err(at.err(format!(
            "header declares {declared_m} edges but {} e lines follow",
            f.edges.len()
        )));
    }
    Ok(f)
}

/// Parses a file holding only `c <v> <cost>` lines for a graph on `n`
/// vertices. Unlisted vertices get `None`.
pub fn parse_costs(text: &str, name: &str, n: usize) -> CliResult<Vec<Option<Cost>>> {
    let mut at = Lines { name, line: 0 };
    let mut costs = vec![None; n];
    for (i, raw) in text.lines().enumerate() {
        at.line = i + 1;
        let (body, _) = split_comment(raw);
        if body.is_empty() {
            continue;
        }
        let mut toks = body.split_whitespace();
        if toks.next() != Some("c") {
            return Err(at.err("expected a c line"));
        }
        let v = at.vertex(toks.next(), n)?;
        let tok = toks.next().ok_or_else(|| at.err("missing cost"))?;
        let c = Cost::from_str(tok).map_err(|e| at.err(e.to_string()))?;
        if costs[v].replace(c).is_some() {
            return Err(at.err(format!("second cost for vertex {v}")));
        }
        if toks.next().is_some() {
            return Err(at.err("trailing tokens"));
        }
    }
    Ok(costs)
}

/// Site list from a comma- or space-separated string.
pub fn parse_sites(text: &str) -> CliResult<Vec<Vertex>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Input(format!("invalid site {t:?}")))
        })
        .collect()
}

/// Serializes a graph. Costs are always written so labels have a line to
/// ride on.
pub fn write_graph(
    n: usize,
    edges: &[(Vertex, Vertex, u64)],
    weighted: bool,
    costs: &[Cost],
    sites: &[Vertex],
    labels: Option<&[String]>,
) -> String {
    let mut out = String::new();
    writeln!(out, "p {n} {}", edges.len()).unwrap();
    for &(u, v, w) in edges {
        if weighted {
            writeln!(out, "e {u} {v} {w}").unwrap();
        } else {
            writeln!(out, "e {u} {v}").unwrap();
        }
    }
    for (v, c) in costs.iter().enumerate() {
        match labels.map(|l| l[v].as_str()) {
            Some(label) => writeln!(out, "c {v} {c} # {label}").unwrap(),
            None => writeln!(out, "c {v} {c}").unwrap(),
        }
    }
    if !sites.is_empty() {
        let list: Vec<String> = sites.iter().map(|s| s.to_string()).collect();
        writeln!(out, "s {}", list.join(" ")).unwrap();
    }
    out
}

/// Parses a PACE `.td` file for a graph on `n` vertices.
pub fn parse_td(text: &str, name: &str, n: usize) -> CliResult<TreeDecomposition> {
    let mut at = Lines { name, line: 0 };
    let mut bags: Option<Vec<Option<Vec<Vertex>>>> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        at.line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('c') {
            continue;
        }
        let mut toks = body.split_whitespace();
        let first = toks.next().unwrap();
        match first {
            "s" => {
                if toks.next() != Some("td") {
                    return Err(at.err("expected \"s td <bags> <max bag size> <vertices>\""));
                }
                let count: usize = at.num(toks.next(), "bag count")?;
                let _: usize = at.num(toks.next(), "bag size")?;
                let vertices: usize = at.num(toks.next(), "vertex count")?;
                if vertices != n {
                    return Err(at.err(format!(
                        "decomposition is for {vertices} vertices, graph has {n}"
                    )));
                }
                bags = Some(vec![None; count]);
            }
            "b" => {
                let list = bags
                    .as_mut()
                    .ok_or_else(|| at.err("b line before the s line"))?;
                let id: usize = at.num(toks.next(), "bag id")?;
                if id == 0 || id > list.len() {
                    return Err(at.err(format!("bag id {id} out of range 1..={}", list.len())));
                }
                let mut bag = Vec::new();
                for t in toks {
                    let v: usize = at.num(Some(t), "vertex")?;
                    if v == 0 || v > n {
                        return Err(at.err(format!("vertex {v} out of range 1..={n}")));
                    }
                    bag.push(v - 1);
                }
                if list[id - 1].replace(bag).is_some() {
                    return Err(at.err(format!("bag {id} defined twice")));
                }
            }
            _ => {
                let count = bags
                    .as_ref()
                    .ok_or_else(|| at.err("edge before the s line"))?
                    .len();
                let a: usize = at.num(Some(first), "bag id")?;
                let b: usize = at.num(toks.next(), "bag id")?;
                if a == 0 || b == 0 || a > count || b > count {
                    return Err(at.err(format!("bag edge {a}-{b} out of range 1..={count}")));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let bags = bags.ok_or_else(|| at.err("no s td line"))?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            b.ok_or_else(|| CliError::Input(format!("{name}: bag {} is never defined", i + 1)))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(TreeDecomposition::new(bags, edges))
}

/// Writes a decomposition in the PACE `.td` layout.
pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    writeln!(out, "s td {} {} {n}", td.bags().len(), td.width() + 1).unwrap();
    for (i, bag) in td.bags().iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in bag {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in td.edges() {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct HsJson {
    universe: Vec<Element>,
    #[serde(rename = "A")]
    a: Vec<Vec<Element>>,
    #[serde(rename = "B")]
    b: Vec<Vec<Element>>,
}

pub fn parse_hs(text: &str) -> CliResult<HSInstance> {
    let raw: HsJson = serde_json::from_str(text)?;
    Ok(HSInstance::new(raw.universe, raw.a, raw.b)?)
}

pub fn write_hs(inst: &HSInstance) -> String {
    let raw = HsJson {
        universe: inst.universe.clone(),
        a: inst.a.clone(),
        b: inst.b.clone(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let f = parse_graph("p 2 1\ne 0 1\ns 0\n", "g").unwrap();
        assert_eq!(f.n, 2);
        assert_eq!(f.edges, vec![(0, 1, None)]);
        assert_eq!(f.sites, Some(vec![0]));
        assert_eq!(f.costs, vec![None, None]);
    }

    #[test]
    fn labels_ride_on_cost_lines() {
        let f = parse_graph("# header\np 2 1\ne 0 1 3 # heavy\nc 1 2.5 # u#7\n", "g").unwrap();
        assert_eq!(f.edges, vec![(0, 1, Some(3))]);
        assert_eq!(f.costs[1], Some(Cost::from_raw(2_500_000)));
        assert_eq!(f.labels[1].as_deref(), Some("u#7"));
    }

    fn line_of(text: &str) -> usize {
        match parse_graph(text, "g").unwrap_err() {
            CliError::Parse { line, .. } => line,
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of("p 2 1\ne 0 1\ns 0 0\n"), 3);
        assert_eq!(line_of("p 2 1\ne 0 1\nc 1 -1\n"), 3);
        assert_eq!(line_of("p 2 1\ne 0 x\n"), 2);
        assert_eq!(line_of("e 0 1\n"), 1);
        assert_eq!(line_of("p 3 2\ne 0 1\n"), 1);
        assert_eq!(line_of("p 2 1\ne 0 1\ns 0\ns 1\n"), 4);
        assert_eq!(line_of("p 2 1\ne 0 5\n"), 2);
        assert_eq!(line_of("p 2 1\nq\n"), 2);
        assert_eq!(line_of("p 2 1\ne 0 1 0\n"), 2);
        assert_eq!(line_of("p 2 1\ne 0 1\nc 0 1\nc 0 2\n"), 4);
    }

    #[test]
    fn graph_roundtrip() {
        let text = write_graph(
            3,
            &[(0, 1, 1), (1, 2, 1)],
            false,
            &[Cost::from_units(1), Cost::from_raw(1), Cost::ZERO],
            &[2, 0],
            Some(&["s".into(), "x".into(), "u#1".into()]),
        );
        let f = parse_graph(&text, "g").unwrap();
        assert_eq!(f.edges, vec![(0, 1, None), (1, 2, None)]);
        assert_eq!(f.costs[1], Some(Cost::from_raw(1)));
        assert_eq!(f.sites, Some(vec![2, 0]));
        assert_eq!(f.labels[2].as_deref(), Some("u#1"));
    }

    #[test]
    fn costs_and_sites() {
        let c = parse_costs("c 0 4\n\nc 2 0.5\n", "c", 3).unwrap();
        assert_eq!(
            c,
            vec![
                Some(Cost::from_units(4)),
                None,
                Some(Cost::from_raw(500_000))
            ]
        );
        assert!(parse_costs("e 0 1\n", "c", 3).is_err());
        assert_eq!(parse_sites("4,12, 7").unwrap(), vec![4, 12, 7]);
        assert!(parse_sites("4,a").is_err());
    }

    #[test]
    fn td_roundtrip() {
        let text = "c path\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n";
        let td = parse_td(text, "t", 3).unwrap();
        assert_eq!(td.bags(), &[vec![0, 1], vec![1, 2]]);
        assert_eq!(td.edges(), &[(0, 1)]);
        assert_eq!(parse_td(&write_td(&td, 3), "t", 3).unwrap(), td);
        assert!(parse_td("s td 1 1 3\nb 1 4\n", "t", 3).is_err());
        assert!(parse_td("s td 2 1 3\nb 1 1\n", "t", 3).is_err());
        assert!(parse_td("s td 1 1 2\n", "t", 3).is_err());
    }

    #[test]
    fn hs_json() {
        let inst = parse_hs(r#"{"universe":[1,2],"A":[[2,1]],"B":[[1],[2]]}"#).unwrap();
        assert_eq!(inst.a, vec![vec![1, 2]]);
        assert_eq!(parse_hs(&write_hs(&inst)).unwrap(), inst);
        assert!(parse_hs(r#"{"universe":[1],"A":[[2]],"B":[]}"#).is_err());
        assert!(parse_hs("{").is_err());
    }
}
