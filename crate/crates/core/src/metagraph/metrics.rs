use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::clique::{max_clique, CliqueBound};
use super::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetricsOptions {
    pub clique: bool,
    /// Branch-and-bound nodes allowed before the clique size is reported as a
    /// lower bound.
    pub clique_budget: u64,
}

impl Default for MetricsOptions {
    fn default() -> Self {
        MetricsOptions {
            clique: true,
            clique_budget: 50_000_000,
        }
    }
}

/// `None` stands for "irregular", "disconnected" and "acyclic" respectively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMetrics {
    pub n: usize,
    pub degree_sequence: Vec<usize>,
    pub valency: Option<usize>,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub clique: Option<CliqueBound>,
    pub edge_count: usize,
}

#[derive(Debug, Clone, Copy)]
struct SourceScan {
    eccentricity: usize,
    reaches_all: bool,
    shortest_cycle: Option<usize>,
}

fn scan_from(g: &SimpleGraph, source: usize) -> SourceScan {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    let mut seen = 1;
    let mut eccentricity = 0;
    let mut shortest_cycle: Option<usize> = None;
    while let Some(u) = queue.pop_front() {
        eccentricity = eccentricity.max(dist[u]);
        for v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                seen += 1;
                queue.push_back(v);
            } else if parent[u] != v {
                let len = dist[u] + dist[v] + 1;
                shortest_cycle = Some(shortest_cycle.map_or(len, |c| c.min(len)));
            }
        }
    }
    SourceScan {
        eccentricity,
        reaches_all: seen == n,
        shortest_cycle,
    }
}

/// Degree sequence, valency, diameter, girth and (optionally) clique number.
///
/// Diameter and girth come from one breadth-first search per vertex; the
/// minimum over sources of the shortest closed walk found is the girth.
pub fn metrics(g: &SimpleGraph, options: MetricsOptions) -> GraphMetrics {
    let degree_sequence = g.degrees();
    let valency = match degree_sequence.split_first() {
        Some((&d, rest)) if rest.iter().all(|&x| x == d) => Some(d),
        None => Some(0),
        _ => None,
    };
    let scans: Vec<SourceScan> = (0..g.n()).into_par_iter().map(|s| scan_from(g, s)).collect();
    let diameter = if scans.iter().all(|s| s.reaches_all) {
        Some(scans.iter().map(|s| s.eccentricity).max().unwrap_or(0))
    } else {
        None
    };
    let girth = scans.iter().filter_map(|s| s.shortest_cycle).min();
    let clique = options.clique.then(|| max_clique(g, options.clique_budget));
    GraphMetrics {
        n: g.n(),
        edge_count: degree_sequence.iter().sum::<usize>() / 2,
        degree_sequence,
        valency,
        diameter,
        girth,
        clique,
    }
}
