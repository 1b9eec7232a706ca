//! JSON wire formats for instances, list instances and solve reports.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hardness::{build_h0, ListInstance};
use crate::model::{Instance, PartialColoring, PatternGraph, RevenueTable};
use crate::solvers::{SolveReport, SolveStats};

/// `{"graph": Graph, "pattern": Graph, "revenue": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub graph: Graph,
    pub pattern: Graph,
    pub revenue: Vec<Vec<f64>>,
}

impl InstanceJson {
    pub fn into_instance(self) -> Result<Instance> {
        let rev = RevenueTable::from_rows(&self.revenue, self.pattern.n())?;
        Instance::new(self.graph, PatternGraph::new(self.pattern), rev)
    }
}

impl From<&Instance> for InstanceJson {
    fn from(inst: &Instance) -> Self {
        InstanceJson { graph: inst.host.clone(), pattern: inst.pattern.graph().clone(), revenue: inst.rev.rows() }
    }
}

/// A pattern given inline or by name (`"H0"`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PatternSpec {
    Named(String),
    Graph(Graph),
}

impl PatternSpec {
    pub fn resolve(&self) -> Result<PatternGraph> {
        match self {
            PatternSpec::Graph(g) => Ok(PatternGraph::new(g.clone())),
            PatternSpec::Named(name) if name.eq_ignore_ascii_case("h0") => Ok(build_h0()),
            PatternSpec::Named(name) => Err(Error::Parse(format!("unknown pattern name {name:?}"))),
        }
    }
}

/// `{"graph": Graph, "pattern": "H0" | Graph, "lists": [[colors], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ListInstanceJson {
    pub graph: Graph,
    pub pattern: PatternSpec,
    pub lists: Vec<Vec<usize>>,
}

impl ListInstanceJson {
    pub fn from_h0(li: &ListInstance) -> Self {
        ListInstanceJson { graph: li.graph.clone(), pattern: PatternSpec::Named("H0".into()), lists: li.lists.clone() }
    }

    pub fn into_parts(self) -> Result<(Graph, PatternGraph, Vec<Vec<usize>>)> {
        let h = self.pattern.resolve()?;
        if self.lists.len() != self.graph.n() {
            return Err(Error::InvalidInstance(format!("{} lists for {} vertices", self.lists.len(), self.graph.n())));
        }
        if let Some(&c) = self.lists.iter().flatten().find(|&&c| c >= h.k()) {
            return Err(Error::ColorOutOfRange { color: c, k: h.k() });
        }
        Ok((self.graph, h, self.lists))
    }
}

/// `{"opt": real, "assignment": [[u, v], ...], "stats": {...}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub opt: f64,
    pub assignment: Vec<[usize; 2]>,
    pub stats: SolveStats,
}

impl From<&SolveReport> for ReportJson {
    fn from(r: &SolveReport) -> Self {
        ReportJson { opt: r.opt, assignment: r.solution.pairs(), stats: r.stats.clone() }
    }
}

impl ReportJson {
    pub fn coloring(&self) -> PartialColoring {
        self.assignment.iter().map(|&[u, v]| (u, v)).collect()
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    parse(text)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    parse::<InstanceJson>(text)?.into_instance()
}

pub fn parse_list_instance(text: &str) -> Result<(Graph, PatternGraph, Vec<Vec<usize>>)> {
    parse::<ListInstanceJson>(text)?.into_parts()
}

pub fn parse_report(text: &str) -> Result<ReportJson> {
    parse(text)
}

fn render<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("wire types serialize")
}

pub fn graph_to_json(g: &Graph) -> String {
    render(g)
}

pub fn instance_to_json(inst: &Instance) -> String {
    render(&InstanceJson::from(inst))
}

pub fn list_instance_to_json(li: &ListInstance) -> String {
    render(&ListInstanceJson::from_h0(li))
}

pub fn report_to_json(r: &SolveReport) -> String {
    render(&ReportJson::from(r))
}
