//! Monitors and monitor bases.
//!
//! A set `M` monitors a connected graph when every component of `G - M` has a
//! vertex of `M` complete to it.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A small connected set `X` whose closed neighborhood is a monitor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonitorBase {
    /// Every entry after the first has an earlier neighbor in the list. Unless
    /// padded, `G[X]` is a path listed from one end.
    pub x: Vec<usize>,
    pub anchor: Option<usize>,
}

impl MonitorBase {
    pub fn closed_neighborhood(&self, g: &Graph) -> VertexSet {
        g.closed_neighborhood(&self.x)
    }
}

/// Components of `g - m`, each paired with the lowest vertex of `m` complete to it.
pub fn monitor_witnesses(g: &Graph, m: &VertexSet) -> Vec<(VertexSet, Option<usize>)> {
    let rest: VertexSet = g.vertices().filter(|v| !m.contains(v)).collect();
    g.components_within(&rest)
        .into_iter()
        .map(|c| {
            let w = m.iter().copied().find(|&w| g.is_complete_to(w, &c));
            (c, w)
        })
        .collect()
}

pub fn is_monitor(g: &Graph, m: &VertexSet) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(&v) = m.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(monitor_witnesses(g, m).iter().all(|(_, w)| w.is_some()))
}

/// Induced paths on up to three vertices, listed from an endpoint, smallest first.
fn candidate_paths(g: &Graph, anchor: Option<usize>) -> Vec<Vec<usize>> {
    let starts: Vec<usize> = match anchor {
        Some(a) => vec![a],
        None => g.vertices().collect(),
    };
    let mut out: Vec<Vec<usize>> = starts.iter().map(|&a| vec![a]).collect();
    for &a in &starts {
        for &b in g.neighbors(a) {
            out.push(vec![a, b]);
        }
    }
    for &a in &starts {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(b) {
                if c != a && !g.has_edge(a, c) {
                    out.push(vec![a, b, c]);
                }
            }
        }
    }
    out
}

/// Smallest induced path `X` (optionally starting at `anchor`) with `N[X]` a monitor.
pub fn find_monitor_base(g: &Graph, anchor: Option<usize>) -> Result<MonitorBase> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(a) = anchor {
        if a >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: a, n: g.n() });
        }
    }
    for x in candidate_paths(g, anchor) {
        if is_monitor(g, &g.closed_neighborhood(&x))? {
            return Ok(MonitorBase { x, anchor });
        }
    }
    Err(Error::NoMonitorBase { anchor })
}

/// Like [`find_monitor_base`], then grows `X` to exactly three vertices while
/// keeping it connected. Needs at least three vertices.
pub fn find_monitor_base_padded(g: &Graph, anchor: Option<usize>) -> Result<MonitorBase> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter(format!(
            "padding a monitor base needs at least 3 vertices, got {}",
            g.n()
        )));
    }
    let mut base = find_monitor_base(g, anchor)?;
    while base.x.len() < 3 {
        let last = *base.x.last().expect("nonempty base");
        let fresh = |v: &usize| !base.x.contains(v);
        let next = g
            .neighbors(last)
            .iter()
            .copied()
            .find(fresh)
            .or_else(|| g.vertices().find(|v| fresh(v) && base.x.iter().any(|&w| g.has_edge(w, *v))))
            .ok_or(Error::Disconnected)?;
        base.x.push(next);
    }
    debug_assert!(is_monitor(g, &base.closed_neighborhood(g)).unwrap_or(false));
    Ok(base)
}
